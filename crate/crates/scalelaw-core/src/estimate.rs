//! Recovering two-part model parameters from measured timings.
//!
//! Because `T(n,p) = T_s + W·(1/p)` is linear in `1/p`, ordinary least
//! squares in `1/p` space recovers both parameters in closed form; no
//! nonlinear fitting is needed. Residuals are reported relative to the
//! observed times since timings span orders of magnitude across problem
//! sizes.

use alloc::collections::BTreeMap;
use alloc::{format, string::String, vec::Vec};

use crate::error::{Error, Result};
use crate::laws::{SerialFraction, TwoPartModel};

/// A fitted parameter this close to zero (relative to the mean observed
/// time) is treated as zero rather than as a genuine sign violation, so
/// noise-free boundary data does not raise the clamped flag.
const CLAMP_MATERIALITY: f64 = 1e-9;

/// One benchmark observation: problem size, processor count, wall time.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TimingRecord {
    n: u64,
    p: u32,
    time: f64,
    replicate: Option<u32>,
}

impl TimingRecord {
    /// A record with positive wall time at problem size `n >= 1` on
    /// `p >= 1` processors.
    pub fn new(n: u64, p: u32, time: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!(
                "problem size must be >= 1, got {n}"
            )));
        }
        if p < 1 {
            return Err(Error::InvalidArgument(format!(
                "processor count must be >= 1, got {p}"
            )));
        }
        if !time.is_finite() || time <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "wall time must be positive, got {time}"
            )));
        }
        Ok(Self {
            n,
            p,
            time,
            replicate: None,
        })
    }

    /// Tags the record with a run index.
    pub fn with_replicate(mut self, replicate: u32) -> Self {
        self.replicate = Some(replicate);
        self
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn replicate(&self) -> Option<u32> {
        self.replicate
    }
}

/// Replicates at one processor count reduced to their arithmetic mean,
/// with the spread retained for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ReducedPoint {
    pub p: u32,
    pub mean_time: f64,
    pub min_time: f64,
    pub max_time: f64,
    pub replicates: usize,
}

/// Groups records by processor count and reduces replicates to their mean.
/// Points come back ordered by `p`.
pub fn reduce_replicates(records: &[TimingRecord]) -> Vec<ReducedPoint> {
    let mut groups: BTreeMap<u32, (f64, f64, f64, usize)> = BTreeMap::new();
    for record in records {
        let entry = groups
            .entry(record.p)
            .or_insert((0.0, f64::INFINITY, f64::NEG_INFINITY, 0));
        entry.0 += record.time;
        entry.1 = entry.1.min(record.time);
        entry.2 = entry.2.max(record.time);
        entry.3 += 1;
    }
    groups
        .into_iter()
        .map(|(p, (sum, min_time, max_time, count))| ReducedPoint {
            p,
            mean_time: sum / count as f64,
            min_time,
            max_time,
            replicates: count,
        })
        .collect()
}

/// A fitted two-part model with residual diagnostics.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FitResult {
    pub model: TwoPartModel,
    /// The model's implied serial fraction in the base frame.
    pub base_fraction: SerialFraction,
    /// Root mean square of the per-record relative residuals.
    pub rms_relative_residual: f64,
    /// Set when the unconstrained fit produced a materially negative
    /// parameter that had to be clamped to zero.
    pub clamped: bool,
    /// `(p, (observed − predicted) / observed)` for every input record,
    /// in input order.
    pub per_point_residuals: Vec<(u32, f64)>,
}

impl FitResult {
    /// The fitted model's serial fraction as measured on `p` processors,
    /// `β(n,p) = T_s / T(n,p)`.
    ///
    /// Agrees with converting [`FitResult::base_fraction`] into the
    /// `OnP(p)` frame.
    pub fn scaled_fraction(&self, p: u32) -> Result<SerialFraction> {
        let total = self.model.total_time(p)?;
        let fraction = SerialFraction::on_p(self.model.serial_time() / total, p)?;
        match self.model.problem_size() {
            Some(n) => fraction.with_problem_size(n),
            None => Ok(fraction),
        }
    }
}

/// Solves the model from exactly two observations of the same problem: one
/// on a single processor and one on `p >= 2` processors.
///
/// Rearranging `T(n,p) = T_s + (T(n,1) − T_s)/p` gives
/// `T_s = (p·T(n,p) − T(n,1)) / (p − 1)`. A pair has no redundancy, so
/// instead of clamping, measurements outside the model (superlinear speedup
/// or slowdown) are rejected as violations.
pub fn estimate_model_from_pair(
    base: &TimingRecord,
    scaled: &TimingRecord,
) -> Result<TwoPartModel> {
    if base.n() != scaled.n() {
        return Err(Error::InvalidArgument(format!(
            "records must share one problem size, got n={} and n={}",
            base.n(),
            scaled.n()
        )));
    }
    if base.p() != 1 {
        return Err(Error::InvalidArgument(format!(
            "base record must be measured on 1 processor, got p={}",
            base.p()
        )));
    }
    if scaled.p() < 2 {
        return Err(Error::InvalidArgument(format!(
            "scaled record must be measured on >= 2 processors, got p={}",
            scaled.p()
        )));
    }
    let t1 = base.time();
    let tp = scaled.time();
    if tp > t1 {
        return Err(Error::ModelViolation(format!(
            "slowdown with more processors: T(n,{}) = {tp} exceeds T(n,1) = {t1}, \
             implying a serial time larger than the whole run",
            scaled.p()
        )));
    }
    let pf = f64::from(scaled.p());
    // W first: p·(T1 − Tp)/(p − 1) is exact when the two times are equal,
    // where the T_s-first form can overshoot T1 by an ulp.
    let parallel_work = pf * (t1 - tp) / (pf - 1.0);
    if parallel_work > t1 {
        return Err(Error::ModelViolation(format!(
            "superlinear measurement: p·T(n,p) = {} is below T(n,1) = {t1}, \
             implying a negative serial time",
            pf * tp
        )));
    }
    let serial_time = t1 - parallel_work;
    TwoPartModel::new(serial_time, parallel_work)?.with_problem_size(base.n())
}

/// Inverts the strong-scaling law: the base-frame fraction that would
/// produce the measured speedup `s` on `p` processors,
/// `β = (p/s − 1) / (p − 1)`.
///
/// Valid only for `1 <= s <= p`; anything outside is impossible under the
/// two-part model and rejected.
pub fn estimate_beta_from_speedup(speedup: f64, p: u32) -> Result<SerialFraction> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "processor count must be >= 2 to infer a fraction, got {p}"
        )));
    }
    if !speedup.is_finite() || speedup <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "speedup must be positive, got {speedup}"
        )));
    }
    let pf = f64::from(p);
    if speedup > pf {
        return Err(Error::ModelViolation(format!(
            "superlinear speedup: {speedup} exceeds the processor count {p}"
        )));
    }
    if speedup < 1.0 {
        return Err(Error::ModelViolation(format!(
            "slowdown: speedup {speedup} is below 1"
        )));
    }
    SerialFraction::base((pf / speedup - 1.0) / (pf - 1.0))
}

/// Least-squares fit of the two-part model to timing records, all taken at
/// the same problem size.
///
/// Replicates at the same `p` are averaged first. The regression of time
/// against `1/p` yields `T_s` as the intercept and `W` as the slope; a
/// materially negative parameter is clamped to zero, the other parameter is
/// re-fit under that constraint, and [`FitResult::clamped`] is set.
pub fn fit_two_part_model(records: &[TimingRecord]) -> Result<FitResult> {
    let first = records
        .first()
        .ok_or_else(|| Error::InsufficientData(String::from("no timing records supplied")))?;
    let n = first.n();
    if records.iter().any(|r| r.n() != n) {
        return Err(Error::InvalidArgument(String::from(
            "all records must share one problem size; fit each n separately",
        )));
    }

    let points = reduce_replicates(records);
    if points.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "need at least 2 distinct processor counts, got {}",
            points.len()
        )));
    }

    let count = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|pt| 1.0 / f64::from(pt.p)).collect();
    let ys: Vec<f64> = points.iter().map(|pt| pt.mean_time).collect();
    let x_mean = xs.iter().sum::<f64>() / count;
    let y_mean = ys.iter().sum::<f64>() / count;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean) * (x - x_mean)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();

    let mut slope = sxy / sxx;
    let mut intercept = y_mean - slope * x_mean;
    let mut clamped = false;
    let materiality = CLAMP_MATERIALITY * y_mean;
    if intercept < 0.0 {
        clamped = intercept < -materiality;
        intercept = 0.0;
        // Re-fit the slope through the origin.
        let sxy0: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
        let sxx0: f64 = xs.iter().map(|x| x * x).sum();
        slope = sxy0 / sxx0;
    } else if slope < 0.0 {
        clamped = slope < -materiality;
        slope = 0.0;
        intercept = y_mean;
    }

    let model = TwoPartModel::new(intercept, slope)?.with_problem_size(n)?;
    let per_point_residuals: Vec<(u32, f64)> = records
        .iter()
        .map(|record| {
            let predicted = intercept + slope / f64::from(record.p());
            (record.p(), (record.time() - predicted) / record.time())
        })
        .collect();
    let mean_square = per_point_residuals.iter().map(|(_, r)| r * r).sum::<f64>()
        / per_point_residuals.len() as f64;

    Ok(FitResult {
        base_fraction: model.base_fraction(),
        model,
        rms_relative_residual: libm::sqrt(mean_square),
        clamped,
        per_point_residuals,
    })
}
