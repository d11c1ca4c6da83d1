//! Batch evaluation: many scripts, parameter sweeps, randomized checks.
//!
//! With the `parallel` feature (on by default) the top-level functions fan
//! out over rayon's thread pool; without it they fall back to the
//! [`sequential`] versions. Both produce identical results in identical
//! order, since every evaluation is a pure function of its input.

use crate::axis::{Axis, Sign};
use crate::quantum::Radians;
use crate::script::{evaluate, Command, ExperimentScript, RunError, RunReport};

/// Apply `f` to every item, preserving order.
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

pub fn evaluate_all(scripts: &[ExperimentScript]) -> Vec<Result<RunReport, RunError>> {
    par_map(scripts, evaluate)
}

/// Final `split z` intensities of the field-in-one-arm interferometer for
/// each precession angle. See [`interferometer`].
pub fn interferometer_sweep(field: Axis, omegas: &[Radians]) -> Vec<Vec<f64>> {
    par_map(omegas, |&omega| run_interferometer(field, omega))
}

/// The z-filtered oven beam split along x, a uniform field along `field`
/// applied to the top (x−) branch, recombined along x, and analyzed with a
/// final z splitter. At `omega = 0` this is the plain splitter-recombiner
/// pair that reproduces the z+ beam.
pub fn interferometer(field: Axis, omega: Radians) -> ExperimentScript {
    ExperimentScript::new(vec![
        Command::Source,
        Command::Filter(Axis::Z, Sign::Plus),
        Command::Split(Axis::X),
        Command::BField(field, omega),
        Command::Recombine(Axis::X),
        Command::Split(Axis::Z),
    ])
}

fn run_interferometer(field: Axis, omega: Radians) -> Vec<f64> {
    evaluate(&interferometer(field, omega))
        .expect("interferometer script is well formed")
        .final_intensities
}

/// Single-threaded versions of the batch functions, always available.
pub mod sequential {
    use super::*;

    pub fn map<T, R, F: Fn(&T) -> R>(items: &[T], f: F) -> Vec<R> {
        items.iter().map(f).collect()
    }

    pub fn evaluate_all(scripts: &[ExperimentScript]) -> Vec<Result<RunReport, RunError>> {
        map(scripts, evaluate)
    }

    pub fn interferometer_sweep(field: Axis, omegas: &[Radians]) -> Vec<Vec<f64>> {
        map(omegas, |&omega| run_interferometer(field, omega))
    }
}
