//! Seeded generation of synthetic timing records for estimator testing.
//!
//! Times come from the closed-form model, optionally perturbed by
//! multiplicative Gaussian noise and by overhead terms the model itself does
//! not know about (to stress estimators with misspecified data). Every
//! `(n, p)` cell draws from its own random stream keyed by
//! `(seed, n, p)`, so extending a grid never changes the cells that were
//! already there, and cells may be generated in any order or in parallel
//! with bit-identical results.

use alloc::collections::BTreeSet;
use alloc::{format, string::String, vec::Vec};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::estimate::TimingRecord;
use crate::laws::{CurvePoint, ScalingScenario, SpeedupCurve};

/// Multiplicative perturbation applied to generated times.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum NoiseKind {
    /// Emit the model time exactly.
    None,
    /// Scale each time by `1 + ε` with `ε ~ Normal(0, sigma)`.
    Multiplicative(f64),
}

/// Noise model plus the seed of the random stream.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub seed: u64,
}

impl NoiseSpec {
    /// Noise-free generation; the seed is irrelevant.
    pub fn none() -> Self {
        Self {
            kind: NoiseKind::None,
            seed: 0,
        }
    }

    /// Multiplicative Gaussian noise with relative standard deviation
    /// `sigma >= 0`, drawn from a stream keyed by `seed`.
    pub fn multiplicative(sigma: f64, seed: u64) -> Result<Self> {
        let spec = Self {
            kind: NoiseKind::Multiplicative(sigma),
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if let NoiseKind::Multiplicative(sigma) = self.kind {
            if !sigma.is_finite() || sigma < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "noise sigma must be >= 0, got {sigma}"
                )));
            }
        }
        Ok(())
    }
}

/// Overhead the two-part model deliberately ignores, injected so estimators
/// can be tested against data the model cannot fully explain. Never fitted.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Overhead {
    None,
    /// `c` seconds per processor: adds `c·p`.
    LinearInP(f64),
    /// Adds `c·ln(p)`; zero on a single processor.
    LogInP(f64),
}

impl Overhead {
    fn cost(&self, p: u32) -> f64 {
        match *self {
            Overhead::None => 0.0,
            Overhead::LinearInP(c) => c * f64::from(p),
            Overhead::LogInP(c) => c * libm::log(f64::from(p)),
        }
    }
}

/// Model-misspecification terms added to generated times.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MisspecSpec {
    pub overhead: Overhead,
}

impl MisspecSpec {
    pub fn none() -> Self {
        Self {
            overhead: Overhead::None,
        }
    }

    pub fn with_overhead(overhead: Overhead) -> Result<Self> {
        let spec = Self { overhead };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let coefficient = match self.overhead {
            Overhead::None => return Ok(()),
            Overhead::LinearInP(c) | Overhead::LogInP(c) => c,
        };
        if !coefficient.is_finite() || coefficient < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "overhead coefficient must be >= 0, got {coefficient}"
            )));
        }
        Ok(())
    }
}

/// Counters describing one generation run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GenerationStats {
    /// Draws discarded because the perturbed time came out non-positive.
    pub resamples: u64,
}

/// Each cell gets its own ChaCha stream; packing `(seed, n, p)` into the
/// 256-bit key keeps distinct cells collision-free by construction.
fn cell_rng(seed: u64, n: u64, p: u32) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&n.to_le_bytes());
    key[16..24].copy_from_slice(&u64::from(p).to_le_bytes());
    key[24..32].copy_from_slice(b"timecell");
    ChaCha8Rng::from_seed(key)
}

/// Generates one record per `(n, p)` grid cell, ordered by `(n, p)`.
///
/// Each time is `T_s(n) + W(n)/p + overhead(p)`, scaled by `1 + ε` when
/// noise is enabled. Non-positive perturbed times are resampled rather than
/// clamped so the noise distribution keeps its shape; see
/// [`generate_timings_with_stats`] for the resample counter.
pub fn generate_timings(
    scenario: &ScalingScenario,
    n_values: &[u64],
    p_values: &[u32],
    noise: &NoiseSpec,
    misspec: &MisspecSpec,
) -> Result<Vec<TimingRecord>> {
    generate_timings_with_stats(scenario, n_values, p_values, noise, misspec)
        .map(|(records, _)| records)
}

/// [`generate_timings`] plus generation diagnostics.
pub fn generate_timings_with_stats(
    scenario: &ScalingScenario,
    n_values: &[u64],
    p_values: &[u32],
    noise: &NoiseSpec,
    misspec: &MisspecSpec,
) -> Result<(Vec<TimingRecord>, GenerationStats)> {
    scenario.validate()?;
    noise.validate()?;
    misspec.validate()?;
    if n_values.is_empty() || p_values.is_empty() {
        return Err(Error::InvalidArgument(String::from(
            "n_values and p_values must be nonempty",
        )));
    }
    if n_values.contains(&0) {
        return Err(Error::InvalidArgument(String::from(
            "problem sizes must be >= 1",
        )));
    }
    if p_values.contains(&0) {
        return Err(Error::InvalidArgument(String::from(
            "processor counts must be >= 1",
        )));
    }
    let ns: BTreeSet<u64> = n_values.iter().copied().collect();
    let ps: BTreeSet<u32> = p_values.iter().copied().collect();

    let mut records = Vec::with_capacity(ns.len() * ps.len());
    let mut stats = GenerationStats::default();
    for &n in &ns {
        let model = scenario.model_at(n)?;
        for &p in &ps {
            let base = model.total_time(p)? + misspec.overhead.cost(p);
            let time = match noise.kind {
                NoiseKind::None => base,
                NoiseKind::Multiplicative(sigma) => {
                    let normal = Normal::new(0.0, sigma).map_err(|_| {
                        Error::InvalidArgument(format!("invalid noise sigma {sigma}"))
                    })?;
                    let mut rng = cell_rng(noise.seed, n, p);
                    loop {
                        let factor = 1.0 + normal.sample(&mut rng);
                        let perturbed = base * factor;
                        if perturbed > 0.0 {
                            break perturbed;
                        }
                        stats.resamples += 1;
                    }
                }
            };
            records.push(TimingRecord::new(n, p, time)?);
        }
    }
    Ok((records, stats))
}

/// Reproduces the scaled-speedup experiment: for each `p` the problem size
/// is grown in lockstep (`n = p`), noise-free times are generated at
/// `(n, 1)` and `(n, p)`, and the measured speedup `T(n,1)/T(n,p)` is
/// recorded.
///
/// The `n = p` coupling lives only here; the laws themselves keep problem
/// size and processor count independent. For a fixed-serial scenario the
/// resulting curve equals `β_s + p·(1−β_s)`, the scaled-speedup line, even
/// though every number comes from plain strong-scaling mechanics.
pub fn gustafson_experiment(scenario: &ScalingScenario, p_values: &[u32]) -> Result<SpeedupCurve> {
    if p_values.is_empty() {
        return Err(Error::InvalidArgument(String::from(
            "p_values must be nonempty",
        )));
    }
    if p_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(String::from(
            "p_values must be strictly increasing",
        )));
    }
    let noise = NoiseSpec::none();
    let misspec = MisspecSpec::none();
    let mut points = Vec::with_capacity(p_values.len());
    for &p in p_values {
        let n = u64::from(p);
        let ps: Vec<u32> = if p == 1 {
            Vec::from([1])
        } else {
            Vec::from([1, p])
        };
        let records = generate_timings(scenario, &[n], &ps, &noise, &misspec)?;
        let t1 = records
            .first()
            .map(TimingRecord::time)
            .ok_or(Error::InternalInvariant(
                "timing generation returned no records",
            ))?;
        let tp = records
            .last()
            .map(TimingRecord::time)
            .ok_or(Error::InternalInvariant(
                "timing generation returned no records",
            ))?;
        points.push(CurvePoint {
            p,
            speedup: t1 / tp,
        });
    }
    SpeedupCurve::new(points, String::from("scaled speedup with n = p"))
}
