//! Speedup laws for the two-part execution-time model.
//!
//! The model splits a run into a serial part `T_s(n)` that takes the same
//! time on every machine and a parallel part that divides perfectly over `p`
//! processors, so `T(n,p) = T_s(n) + W(n)/p` where `W(n)` is the parallel
//! work measured on one processor. The serial fraction of a run depends on
//! which machine it is measured on, which is why [`SerialFraction`] carries
//! its reference frame explicitly: the base frame is the single-processor
//! machine, the `OnP(p)` frame is the `p`-processor machine. The two speedup
//! laws take fractions in different frames, and converting between frames
//! maps one law onto the other exactly.

use alloc::{format, string::String, vec::Vec};

use crate::error::{Error, Result};

/// Reference frame a serial fraction is measured in.
///
/// `OnP(1)` and `Base` describe the same machine and are accepted
/// interchangeably everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Frame {
    /// Measured on the single-processor machine; the fraction is `β(n,1)`.
    Base,
    /// Measured on a machine with the given number of processors; `β(n,p)`.
    OnP(u32),
}

impl Frame {
    /// Processor count of the machine this frame refers to.
    pub fn processor_count(self) -> u32 {
        match self {
            Frame::Base => 1,
            Frame::OnP(p) => p,
        }
    }

    /// Whether two frames refer to the same machine (`Base` ≡ `OnP(1)`).
    pub fn coincides_with(self, other: Frame) -> bool {
        self.processor_count() == other.processor_count()
    }
}

impl core::fmt::Display for Frame {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Frame::Base => write!(f, "base (p = 1)"),
            Frame::OnP(p) => write!(f, "on-{p}-processors"),
        }
    }
}

/// A serial fraction in `[0, 1]`, tagged with the frame it was measured in
/// and optionally with the problem size it belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SerialFraction {
    value: f64,
    frame: Frame,
    n: Option<u64>,
}

fn check_fraction(value: f64, what: &str) -> Result<()> {
    if !value.is_finite() || !(0.0..=1.0).contains(&value) {
        return Err(Error::InvalidArgument(format!(
            "{what} must be a fraction in [0, 1], got {value}"
        )));
    }
    Ok(())
}

fn check_processors(p: u32) -> Result<()> {
    if p < 1 {
        return Err(Error::InvalidArgument(String::from(
            "processor count must be >= 1",
        )));
    }
    Ok(())
}

fn check_problem_size(n: u64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument(String::from(
            "problem size must be >= 1",
        )));
    }
    Ok(())
}

impl SerialFraction {
    /// A fraction measured on the single-processor machine, `β(n,1)`.
    pub fn base(value: f64) -> Result<Self> {
        check_fraction(value, "serial fraction")?;
        Ok(Self {
            value,
            frame: Frame::Base,
            n: None,
        })
    }

    /// A fraction measured on a `p`-processor machine, `β(n,p)`.
    pub fn on_p(value: f64, p: u32) -> Result<Self> {
        check_fraction(value, "serial fraction")?;
        check_processors(p)?;
        Ok(Self {
            value,
            frame: Frame::OnP(p),
            n: None,
        })
    }

    /// Annotates the fraction with the problem size it was measured at.
    pub fn with_problem_size(mut self, n: u64) -> Result<Self> {
        check_problem_size(n)?;
        self.n = Some(n);
        Ok(self)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn problem_size(&self) -> Option<u64> {
        self.n
    }

    /// Converts a base-frame fraction into the `p`-processor frame:
    /// `β(n,p) = β(n,1) · S(n,p)` with `S` from [`amdahl_speedup`].
    ///
    /// At `p = 1` the frames coincide and the value is unchanged.
    pub fn to_on_p(&self, p: u32) -> Result<Self> {
        let speedup = amdahl_speedup(self, p)?;
        // The product is <= 1 exactly; clamping strips at most a rounding ulp.
        let value = (self.value * speedup).clamp(0.0, 1.0);
        Ok(Self {
            value,
            frame: Frame::OnP(p),
            n: self.n,
        })
    }

    /// Converts a fraction measured on `p` processors back into the base
    /// frame: `β(n,1) = β(n,p) / (p − (p−1)·β(n,p))`.
    ///
    /// Exact inverse of [`SerialFraction::to_on_p`]. A fraction already in
    /// the base frame (or `OnP(1)`) is returned unchanged.
    pub fn to_base(&self) -> Result<Self> {
        let p = self.frame.processor_count();
        if p == 1 {
            return Ok(Self {
                frame: Frame::Base,
                ..*self
            });
        }
        let pf = f64::from(p);
        let denom = pf - (pf - 1.0) * self.value;
        if denom <= 0.0 {
            // Unreachable for value in [0, 1]: denom >= 1 there.
            return Err(Error::InternalInvariant(
                "frame-conversion denominator p - (p-1)*beta must be positive",
            ));
        }
        let value = (self.value / denom).clamp(0.0, 1.0);
        Ok(Self {
            value,
            frame: Frame::Base,
            n: self.n,
        })
    }
}

fn expect_base_frame(beta: &SerialFraction) -> Result<()> {
    if beta.frame().coincides_with(Frame::Base) {
        Ok(())
    } else {
        Err(Error::FrameMismatch {
            expected: Frame::Base,
            found: beta.frame(),
        })
    }
}

/// Strong-scaling speedup of a program with base-frame serial fraction
/// `β(n,1)` on `p` processors: `S(n,p) = 1 / (β + (1−β)/p)`.
///
/// Evaluated as `p / (1 + β·(p−1))`, a single division that keeps the result
/// inside `[1, p]` in floating point.
pub fn amdahl_speedup(beta: &SerialFraction, p: u32) -> Result<f64> {
    check_processors(p)?;
    expect_base_frame(beta)?;
    let pf = f64::from(p);
    Ok(pf / (1.0 + beta.value() * (pf - 1.0)))
}

/// Upper bound on [`amdahl_speedup`] over all processor counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpeedupBound {
    /// The speedup can never exceed this value: `1/β`.
    Finite(f64),
    /// Zero serial fraction; the speedup grows without bound.
    Unbounded,
}

impl SpeedupBound {
    pub fn is_unbounded(&self) -> bool {
        matches!(self, SpeedupBound::Unbounded)
    }

    /// The bound as a number, if finite.
    pub fn finite(&self) -> Option<f64> {
        match self {
            SpeedupBound::Finite(v) => Some(*v),
            SpeedupBound::Unbounded => None,
        }
    }
}

impl core::fmt::Display for SpeedupBound {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SpeedupBound::Finite(v) => write!(f, "{v}"),
            SpeedupBound::Unbounded => write!(f, "unbounded"),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for SpeedupBound {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        match self {
            SpeedupBound::Finite(v) => serializer.serialize_f64(*v),
            SpeedupBound::Unbounded => serializer.serialize_str("unbounded"),
        }
    }
}

/// Limit of [`amdahl_speedup`] as `p → ∞`: the reciprocal of the base-frame
/// serial fraction, or [`SpeedupBound::Unbounded`] when the fraction is zero.
pub fn amdahl_limit(beta: &SerialFraction) -> Result<SpeedupBound> {
    expect_base_frame(beta)?;
    if beta.value() == 0.0 {
        Ok(SpeedupBound::Unbounded)
    } else {
        Ok(SpeedupBound::Finite(1.0 / beta.value()))
    }
}

/// Scaled speedup of a program whose serial fraction `β(n,p)` was measured
/// on the `p`-processor machine itself: `S(n,p) = p − (p−1)·β(n,p)`.
///
/// The fraction's frame must refer to the same `p`.
pub fn gustafson_speedup(beta: &SerialFraction, p: u32) -> Result<f64> {
    check_processors(p)?;
    if beta.frame().processor_count() != p {
        return Err(Error::FrameMismatch {
            expected: Frame::OnP(p),
            found: beta.frame(),
        });
    }
    let pf = f64::from(p);
    Ok(pf - (pf - 1.0) * beta.value())
}

/// One sampled point of a speedup curve.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CurvePoint {
    pub p: u32,
    pub speedup: f64,
}

/// Speedup sampled over a set of processor counts.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpeedupCurve {
    /// Points ordered by strictly increasing processor count.
    pub points: Vec<CurvePoint>,
    pub label: String,
}

impl SpeedupCurve {
    /// Validates the curve invariants: processor counts strictly increasing,
    /// every speedup positive.
    pub fn new(points: Vec<CurvePoint>, label: String) -> Result<Self> {
        let mut last_p = 0u32;
        for point in &points {
            if point.p <= last_p {
                return Err(Error::InvalidArgument(String::from(
                    "curve processor counts must be strictly increasing and >= 1",
                )));
            }
            if point.speedup.is_nan() || point.speedup <= 0.0 {
                return Err(Error::InvalidArgument(String::from(
                    "curve speedups must be positive",
                )));
            }
            last_p = point.p;
        }
        Ok(Self { points, label })
    }
}

/// Samples [`amdahl_speedup`] for a base-frame fraction over the given
/// processor counts, which must be nonempty, strictly increasing and >= 1.
///
/// The curve is nondecreasing and bounded by [`amdahl_limit`].
pub fn speedup_curve(beta: &SerialFraction, p_values: &[u32]) -> Result<SpeedupCurve> {
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
    let mut points = Vec::with_capacity(p_values.len());
    for &p in p_values {
        points.push(CurvePoint {
            p,
            speedup: amdahl_speedup(beta, p)?,
        });
    }
    SpeedupCurve::new(points, format!("amdahl beta={}", beta.value()))
}

/// Checks that the two speedup laws agree on every grid point.
///
/// For each `(β, p)` this computes the strong-scaling speedup, converts the
/// fraction into the `OnP(p)` frame, feeds it to [`gustafson_speedup`], and
/// accumulates the relative deviation between the two routes. The returned
/// maximum is a pure rounding artifact; the laws are algebraically identical.
pub fn verify_equivalence(beta_grid: &[f64], p_grid: &[u32]) -> Result<f64> {
    if beta_grid.is_empty() || p_grid.is_empty() {
        return Err(Error::InvalidArgument(String::from(
            "verification grids must be nonempty",
        )));
    }
    let mut max_deviation = 0.0f64;
    for &value in beta_grid {
        let beta = SerialFraction::base(value)?;
        for &p in p_grid {
            let amdahl = amdahl_speedup(&beta, p)?;
            let scaled = beta.to_on_p(p)?;
            let gustafson = gustafson_speedup(&scaled, p)?;
            let deviation = (amdahl - gustafson).abs() / amdahl;
            if deviation > max_deviation {
                max_deviation = deviation;
            }
        }
    }
    Ok(max_deviation)
}

/// The two-part model for one problem size: serial time plus the parallel
/// work as it would run on a single processor, both in seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TwoPartModel {
    serial_time: f64,
    parallel_work: f64,
    n: Option<u64>,
}

impl TwoPartModel {
    /// Builds a model from the serial time `T_s(n)` and the single-processor
    /// parallel work `W(n)`. Both must be nonnegative and not both zero.
    pub fn new(serial_time: f64, parallel_work: f64) -> Result<Self> {
        if !serial_time.is_finite() || serial_time < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "serial_time must be finite and >= 0, got {serial_time}"
            )));
        }
        if !parallel_work.is_finite() || parallel_work < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "parallel_work must be finite and >= 0, got {parallel_work}"
            )));
        }
        if serial_time + parallel_work <= 0.0 {
            return Err(Error::InvalidArgument(String::from(
                "serial_time + parallel_work must be positive",
            )));
        }
        Ok(Self {
            serial_time,
            parallel_work,
            n: None,
        })
    }

    /// Annotates the model with its problem size.
    pub fn with_problem_size(mut self, n: u64) -> Result<Self> {
        check_problem_size(n)?;
        self.n = Some(n);
        Ok(self)
    }

    pub fn serial_time(&self) -> f64 {
        self.serial_time
    }

    pub fn parallel_work(&self) -> f64 {
        self.parallel_work
    }

    pub fn problem_size(&self) -> Option<u64> {
        self.n
    }

    /// Wall time on one processor, `T(n,1) = T_s + W`.
    pub fn single_processor_time(&self) -> f64 {
        self.serial_time + self.parallel_work
    }

    /// Wall time on `p` processors, `T(n,p) = T_s + W/p`.
    ///
    /// Strictly decreasing in `p` whenever there is parallel work.
    pub fn total_time(&self, p: u32) -> Result<f64> {
        check_processors(p)?;
        Ok(self.serial_time + self.parallel_work / f64::from(p))
    }

    /// The model's implied base-frame serial fraction
    /// `β(n,1) = T_s / (T_s + W)`.
    pub fn base_fraction(&self) -> SerialFraction {
        SerialFraction {
            value: self.serial_time / self.single_processor_time(),
            frame: Frame::Base,
            n: self.n,
        }
    }
}

/// How the serial time and the parallel work grow with the problem size.
///
/// Both variants anchor absolute times to the measured baseline `T(1,1)`;
/// nothing is normalized away. `β_s` is the serial fraction of that baseline
/// run and must be strictly between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ScalingScenario {
    /// Serial time is independent of the problem size while the parallel
    /// work grows linearly: `T_s(n) = β_s·T(1,1)`, `W(n) = n·(1−β_s)·T(1,1)`.
    FixedSerial { beta_s: f64, baseline_time: f64 },
    /// Both parts grow polynomially, the parallel part strictly faster:
    /// `T_s(n) = n^serial_degree·β_s·T(1,1)`,
    /// `W(n) = n^parallel_degree·(1−β_s)·T(1,1)`.
    PolynomialGrowth {
        serial_degree: u32,
        parallel_degree: u32,
        beta_s: f64,
        baseline_time: f64,
    },
}

/// Integer power by repeated multiplication; degrees are small.
fn pow_u32(base: f64, exp: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

impl ScalingScenario {
    /// Fixed serial time, linearly growing parallel work.
    pub fn fixed_serial(beta_s: f64, baseline_time: f64) -> Result<Self> {
        let scenario = Self::FixedSerial {
            beta_s,
            baseline_time,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// Polynomial growth of both parts.
    pub fn polynomial_growth(
        serial_degree: u32,
        parallel_degree: u32,
        beta_s: f64,
        baseline_time: f64,
    ) -> Result<Self> {
        let scenario = Self::PolynomialGrowth {
            serial_degree,
            parallel_degree,
            beta_s,
            baseline_time,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// Checks the scenario invariants.
    pub fn validate(&self) -> Result<()> {
        let (beta_s, baseline_time) = match *self {
            Self::FixedSerial {
                beta_s,
                baseline_time,
            } => (beta_s, baseline_time),
            Self::PolynomialGrowth {
                serial_degree,
                parallel_degree,
                beta_s,
                baseline_time,
            } => {
                if parallel_degree <= serial_degree {
                    return Err(Error::InvalidArgument(format!(
                        "parallel_degree ({parallel_degree}) must be greater than serial_degree ({serial_degree})"
                    )));
                }
                (beta_s, baseline_time)
            }
        };
        if !beta_s.is_finite() || beta_s <= 0.0 || beta_s >= 1.0 {
            return Err(Error::InvalidArgument(format!(
                "beta_s must be strictly between 0 and 1, got {beta_s}"
            )));
        }
        if !baseline_time.is_finite() || baseline_time <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "baseline_time must be positive, got {baseline_time}"
            )));
        }
        Ok(())
    }

    /// The two-part model this scenario predicts at problem size `n`.
    pub fn model_at(&self, n: u64) -> Result<TwoPartModel> {
        self.validate()?;
        check_problem_size(n)?;
        let nf = n as f64;
        let (serial_time, parallel_work) = match *self {
            Self::FixedSerial {
                beta_s,
                baseline_time,
            } => (beta_s * baseline_time, nf * (1.0 - beta_s) * baseline_time),
            Self::PolynomialGrowth {
                serial_degree,
                parallel_degree,
                beta_s,
                baseline_time,
            } => (
                pow_u32(nf, serial_degree) * beta_s * baseline_time,
                pow_u32(nf, parallel_degree) * (1.0 - beta_s) * baseline_time,
            ),
        };
        TwoPartModel::new(serial_time, parallel_work)?.with_problem_size(n)
    }

    /// The base-frame serial fraction at problem size `n`,
    /// `β(n,1) = T_s(n) / (T_s(n) + W(n))`.
    ///
    /// Strictly decreasing in `n` and tending to 0, which is what drives the
    /// speedup toward `p` for large problems.
    pub fn serial_fraction_at(&self, n: u64) -> Result<SerialFraction> {
        Ok(self.model_at(n)?.base_fraction())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn base(value: f64) -> SerialFraction {
        SerialFraction::base(value).unwrap()
    }

    #[test]
    fn amdahl_perfectly_parallel_program() {
        assert_eq!(amdahl_speedup(&base(0.0), 8).unwrap(), 8.0);
    }

    #[test]
    fn amdahl_fully_serial_program() {
        assert_eq!(amdahl_speedup(&base(1.0), 64).unwrap(), 1.0);
    }

    #[test]
    fn amdahl_hand_evaluated() {
        // 1 / (0.1 + 0.9/8), evaluated the long way as an independent check.
        let expected = 1.0 / (0.1 + 0.9 / 8.0);
        assert_relative_eq!(
            amdahl_speedup(&base(0.1), 8).unwrap(),
            expected,
            max_relative = 1e-12
        );
    }

    #[test]
    fn amdahl_rejects_zero_processors() {
        assert!(matches!(
            amdahl_speedup(&base(0.5), 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn amdahl_rejects_scaled_frame() {
        let scaled = SerialFraction::on_p(0.5, 4).unwrap();
        assert!(matches!(
            amdahl_speedup(&scaled, 4),
            Err(Error::FrameMismatch { .. })
        ));
    }

    #[test]
    fn amdahl_accepts_on_p1_as_base() {
        let on_one = SerialFraction::on_p(0.5, 1).unwrap();
        assert_eq!(
            amdahl_speedup(&on_one, 2).unwrap(),
            amdahl_speedup(&base(0.5), 2).unwrap()
        );
    }

    #[test]
    fn limit_half_doubles_at_most() {
        assert_eq!(amdahl_limit(&base(0.5)).unwrap(), SpeedupBound::Finite(2.0));
    }

    #[test]
    fn limit_tenth_is_ten() {
        assert_eq!(
            amdahl_limit(&base(0.1)).unwrap(),
            SpeedupBound::Finite(10.0)
        );
    }

    #[test]
    fn limit_zero_fraction_is_unbounded() {
        assert_eq!(amdahl_limit(&base(0.0)).unwrap(), SpeedupBound::Unbounded);
    }

    #[test]
    fn limit_rejects_scaled_frame() {
        let scaled = SerialFraction::on_p(0.5, 8).unwrap();
        assert!(matches!(
            amdahl_limit(&scaled),
            Err(Error::FrameMismatch { .. })
        ));
    }

    #[test]
    fn gustafson_no_serial_part() {
        let beta = SerialFraction::on_p(0.0, 16).unwrap();
        assert_eq!(gustafson_speedup(&beta, 16).unwrap(), 16.0);
    }

    #[test]
    fn gustafson_collapses_on_single_processor() {
        let beta = SerialFraction::on_p(0.37, 1).unwrap();
        assert_eq!(gustafson_speedup(&beta, 1).unwrap(), 1.0);
    }

    #[test]
    fn gustafson_hand_evaluated() {
        let beta = SerialFraction::on_p(0.5, 4).unwrap();
        assert_eq!(gustafson_speedup(&beta, 4).unwrap(), 2.5);
    }

    #[test]
    fn gustafson_rejects_mismatched_p() {
        let beta = SerialFraction::on_p(0.5, 4).unwrap();
        assert!(matches!(
            gustafson_speedup(&beta, 8),
            Err(Error::FrameMismatch { .. })
        ));
        assert!(matches!(
            gustafson_speedup(&base(0.5), 8),
            Err(Error::FrameMismatch { .. })
        ));
    }

    #[test]
    fn convert_base_to_p_hand_evaluated() {
        let converted = base(0.1).to_on_p(8).unwrap();
        assert_eq!(converted.frame(), Frame::OnP(8));
        // 0.1 * amdahl(0.1, 8) = 8/17
        assert_relative_eq!(converted.value(), 8.0 / 17.0, max_relative = 1e-12);
    }

    #[test]
    fn convert_zero_stays_zero() {
        assert_eq!(base(0.0).to_on_p(32).unwrap().value(), 0.0);
    }

    #[test]
    fn convert_at_p1_is_identity() {
        let converted = base(0.37).to_on_p(1).unwrap();
        assert_eq!(converted.value(), 0.37);
        assert!(converted.frame().coincides_with(Frame::Base));
    }

    #[test]
    fn convert_back_recovers_base_fraction() {
        let back = SerialFraction::on_p(8.0 / 17.0, 8)
            .unwrap()
            .to_base()
            .unwrap();
        assert_eq!(back.frame(), Frame::Base);
        assert_relative_eq!(back.value(), 0.1, max_relative = 1e-12);
    }

    #[test]
    fn convert_back_endpoints_are_exact() {
        let one = SerialFraction::on_p(1.0, 100).unwrap().to_base().unwrap();
        assert_eq!(one.value(), 1.0);
        let zero = SerialFraction::on_p(0.0, 100).unwrap().to_base().unwrap();
        assert_eq!(zero.value(), 0.0);
    }

    #[test]
    fn conversion_keeps_problem_size_annotation() {
        let beta = base(0.25).with_problem_size(100).unwrap();
        let converted = beta.to_on_p(4).unwrap();
        assert_eq!(converted.problem_size(), Some(100));
        assert_eq!(converted.to_base().unwrap().problem_size(), Some(100));
    }

    #[test]
    fn fraction_rejects_out_of_range_values() {
        assert!(SerialFraction::base(-0.1).is_err());
        assert!(SerialFraction::base(1.1).is_err());
        assert!(SerialFraction::base(f64::NAN).is_err());
        assert!(SerialFraction::on_p(0.5, 0).is_err());
    }

    #[test]
    fn total_time_examples() {
        let model = TwoPartModel::new(1.0, 9.0).unwrap();
        assert_eq!(model.total_time(1).unwrap(), 10.0);
        assert_eq!(model.total_time(9).unwrap(), 2.0);
        let serial_only = TwoPartModel::new(2.0, 0.0).unwrap();
        assert_eq!(serial_only.total_time(64).unwrap(), 2.0);
        assert!(model.total_time(0).is_err());
    }

    #[test]
    fn model_rejects_degenerate_parameters() {
        assert!(TwoPartModel::new(-1.0, 2.0).is_err());
        assert!(TwoPartModel::new(1.0, -2.0).is_err());
        assert!(TwoPartModel::new(0.0, 0.0).is_err());
        assert!(TwoPartModel::new(f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn model_base_fraction() {
        let model = TwoPartModel::new(2.0, 8.0).unwrap();
        let beta = model.base_fraction();
        assert_eq!(beta.value(), 0.2);
        assert_eq!(beta.frame(), Frame::Base);
    }

    #[test]
    fn fixed_serial_fraction_at_baseline() {
        let scenario = ScalingScenario::fixed_serial(0.1, 1.0).unwrap();
        assert_relative_eq!(
            scenario.serial_fraction_at(1).unwrap().value(),
            0.1,
            max_relative = 1e-12
        );
    }

    #[test]
    fn fixed_serial_fraction_shrinks_with_problem_size() {
        let scenario = ScalingScenario::fixed_serial(0.1, 1.0).unwrap();
        // beta(10) = 0.1/(0.1 + 10*0.9) = 1/91
        assert_relative_eq!(
            scenario.serial_fraction_at(10).unwrap().value(),
            1.0 / 91.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn polynomial_fraction_hand_evaluated() {
        let scenario = ScalingScenario::polynomial_growth(1, 2, 0.5, 1.0).unwrap();
        // (3*0.5) / (3*0.5 + 9*0.5) = 0.25
        assert_relative_eq!(
            scenario.serial_fraction_at(3).unwrap().value(),
            0.25,
            max_relative = 1e-12
        );
    }

    #[test]
    fn scenario_rejects_bad_parameters() {
        assert!(ScalingScenario::fixed_serial(0.0, 1.0).is_err());
        assert!(ScalingScenario::fixed_serial(1.0, 1.0).is_err());
        assert!(ScalingScenario::fixed_serial(0.5, 0.0).is_err());
        assert!(ScalingScenario::polynomial_growth(2, 2, 0.5, 1.0).is_err());
        assert!(ScalingScenario::polynomial_growth(2, 1, 0.5, 1.0).is_err());
        let scenario = ScalingScenario::fixed_serial(0.5, 1.0).unwrap();
        assert!(scenario.serial_fraction_at(0).is_err());
    }

    #[test]
    fn curve_fully_serial_never_speeds_up() {
        let curve = speedup_curve(&base(1.0), &[1, 2, 4]).unwrap();
        let expected = [(1, 1.0), (2, 1.0), (4, 1.0)];
        for (point, (p, s)) in curve.points.iter().zip(expected) {
            assert_eq!((point.p, point.speedup), (p, s));
        }
    }

    #[test]
    fn curve_ideal_scaling() {
        let curve = speedup_curve(&base(0.0), &[1, 2, 4]).unwrap();
        let expected = [(1, 1.0), (2, 2.0), (4, 4.0)];
        for (point, (p, s)) in curve.points.iter().zip(expected) {
            assert_eq!((point.p, point.speedup), (p, s));
        }
    }

    #[test]
    fn curve_single_point() {
        let curve = speedup_curve(&base(0.1), &[8]).unwrap();
        assert_eq!(curve.points.len(), 1);
        assert_relative_eq!(
            curve.points[0].speedup,
            1.0 / (0.1 + 0.9 / 8.0),
            max_relative = 1e-12
        );
    }

    #[test]
    fn curve_rejects_bad_p_values() {
        assert!(speedup_curve(&base(0.1), &[]).is_err());
        assert!(speedup_curve(&base(0.1), &[4, 2]).is_err());
        assert!(speedup_curve(&base(0.1), &[2, 2]).is_err());
        assert!(speedup_curve(&base(0.1), &[0, 1]).is_err());
    }

    #[test]
    fn equivalence_trivial_at_p1() {
        assert_eq!(verify_equivalence(&[0.3], &[1]).unwrap(), 0.0);
    }

    #[test]
    fn equivalence_single_cell() {
        assert!(verify_equivalence(&[0.1], &[8]).unwrap() <= 1e-12);
    }

    #[test]
    fn equivalence_rejects_invalid_grids() {
        assert!(verify_equivalence(&[], &[1]).is_err());
        assert!(verify_equivalence(&[0.5], &[]).is_err());
        assert!(verify_equivalence(&[1.5], &[1]).is_err());
        assert!(verify_equivalence(&[0.5], &[0]).is_err());
    }

    #[test]
    fn bound_display_and_accessors() {
        assert_eq!(SpeedupBound::Finite(2.0).finite(), Some(2.0));
        assert!(SpeedupBound::Unbounded.is_unbounded());
        assert_eq!(alloc::format!("{}", SpeedupBound::Finite(2.0)), "2");
        assert_eq!(alloc::format!("{}", SpeedupBound::Unbounded), "unbounded");
    }
}
