//! Two-part execution-time model of parallel programs.
//!
//! A program of size `n` is modeled as a serial part whose wall time is the
//! same on every machine plus a perfectly divisible parallel part, so running
//! on `p` processors takes `T(n,p) = T_s(n) + W(n)/p`. From that single model
//! this crate derives:
//!
//! - the classic strong-scaling speedup bound ([`amdahl_speedup`],
//!   [`amdahl_limit`]) and the scaled-speedup form ([`gustafson_speedup`]),
//! - conversion of a serial fraction between the single-processor frame and
//!   the `p`-processor frame ([`SerialFraction::to_on_p`],
//!   [`SerialFraction::to_base`]), which makes the two laws agree on every
//!   input ([`verify_equivalence`]),
//! - estimation of the model from measured timings ([`fit_two_part_model`],
//!   [`estimate_model_from_pair`]),
//! - deterministic, seeded generation of synthetic timing data for estimator
//!   testing ([`generate_timings`], [`gustafson_experiment`]).
//!
//! Serial fractions are frame-tagged in the type system: a fraction measured
//! on one processor and the same program's fraction measured on `p`
//! processors are different numbers, and mixing them up is the usual way
//! scaling analyses go wrong. Operations reject fractions in the wrong frame
//! instead of silently producing a plausible-looking speedup.
//!
//! ```
//! use scalelaw_core::{amdahl_speedup, gustafson_speedup, SerialFraction};
//!
//! let beta = SerialFraction::base(0.1).unwrap();
//! let strong = amdahl_speedup(&beta, 8).unwrap();
//!
//! // The same prediction through the p-processor frame.
//! let scaled = beta.to_on_p(8).unwrap();
//! let weak = gustafson_speedup(&scaled, 8).unwrap();
//!
//! assert!((strong - weak).abs() / strong < 1e-12);
//! ```
//!
//! The crate is `no_std` (with `alloc`) and every operation is a pure
//! function of its inputs, safe to call from any number of threads.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod estimate;
mod laws;
mod simulate;

pub use error::{Error, Result};
pub use estimate::{
    estimate_beta_from_speedup, estimate_model_from_pair, fit_two_part_model, reduce_replicates,
    FitResult, ReducedPoint, TimingRecord,
};
pub use laws::{
    amdahl_limit, amdahl_speedup, gustafson_speedup, speedup_curve, verify_equivalence, CurvePoint,
    Frame, ScalingScenario, SerialFraction, SpeedupBound, SpeedupCurve, TwoPartModel,
};
pub use simulate::{
    generate_timings, generate_timings_with_stats, gustafson_experiment, GenerationStats,
    MisspecSpec, NoiseKind, NoiseSpec, Overhead,
};
