//! How well a point set fills the projective plane, in the elliptic metric.
//!
//! The covering radius is measured against a fixed Fibonacci-lattice sample
//! of the upper hemisphere, so results are reproducible and identical across
//! execution modes.

use std::f64::consts::FRAC_PI_2;

use crate::closure::{run_closure_with, BasisSpec, Closure, ClosureCaps, LevelOptions, PointStore};
use crate::error::{Error, Result};
use crate::exec::{max_over_range, min_over_range, ExecMode};
use crate::metric::{abs_cos, angle_between, FloatDirection, Ray};

/// Default number of sample directions.
pub const DEFAULT_SAMPLE_SIZE: usize = 10_000;

/// Deterministic directions covering the upper hemisphere, one per
/// projective point.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereSample {
    directions: Vec<FloatDirection>,
}

impl SphereSample {
    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn directions(&self) -> &[FloatDirection] {
        &self.directions
    }
}

/// Fibonacci lattice on the hemisphere `z > 0`: heights `(i + 1/2) / n`,
/// longitudes stepping by the golden angle.
pub fn sample_directions(n: usize) -> SphereSample {
    let golden_angle = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let directions = (0..n)
        .map(|i| {
            let z = (i as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).sqrt();
            let phi = golden_angle * i as f64;
            FloatDirection::new([r * phi.cos(), r * phi.sin(), z]).expect("nonzero lattice point")
        })
        .collect();
    SphereSample { directions }
}

fn unit_vectors<'a, R: Ray + 'a>(points: impl IntoIterator<Item = &'a R>) -> Vec<[f64; 3]> {
    points
        .into_iter()
        .map(|p| p.unit_direction().coords())
        .collect()
}

fn covering_radius_of_units(units: &[[f64; 3]], sample: &SphereSample, mode: ExecMode) -> f64 {
    if units.is_empty() {
        return FRAC_PI_2;
    }
    let dirs = sample.directions();
    let radius = max_over_range(mode, 0..dirs.len(), |k| {
        let s = dirs[k].coords();
        let mut best = 0;
        let mut best_cos = f64::NEG_INFINITY;
        for (i, u) in units.iter().enumerate() {
            let c = abs_cos(&s, u);
            if c > best_cos {
                best_cos = c;
                best = i;
            }
        }
        angle_between(&s, &units[best])
    });
    radius.max(0.0)
}

/// Largest distance from a sample direction to its nearest point. An empty
/// point set has radius `pi/2`.
pub fn covering_radius_of<R: Ray>(points: &[R], sample: &SphereSample, mode: ExecMode) -> f64 {
    covering_radius_of_units(&unit_vectors(points), sample, mode)
}

pub fn covering_radius(store: &PointStore, sample: &SphereSample) -> f64 {
    covering_radius_of_units(&unit_vectors(store.points()), sample, ExecMode::default())
}

fn min_separation_of_units(units: &[[f64; 3]], mode: ExecMode) -> Result<f64> {
    if units.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: units.len(),
        });
    }
    Ok(min_over_range(mode, 1..units.len(), |i| {
        units[..i]
            .iter()
            .map(|u| angle_between(&units[i], u))
            .fold(f64::INFINITY, f64::min)
    }))
}

/// Smallest pairwise elliptic distance.
pub fn min_separation_of<R: Ray>(points: &[R], mode: ExecMode) -> Result<f64> {
    min_separation_of_units(&unit_vectors(points), mode)
}

pub fn min_separation(store: &PointStore) -> Result<f64> {
    min_separation_of_units(&unit_vectors(store.points()), ExecMode::default())
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityLevel {
    pub level: u32,
    pub points: usize,
    pub covering_radius: f64,
    /// `None` while fewer than two points exist.
    pub min_separation: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub sample_size: usize,
    pub levels: Vec<DensityLevel>,
}

/// Covering radius and separation after every recorded level of a closure.
pub fn density_of_closure(
    closure: &Closure,
    sample: &SphereSample,
    mode: ExecMode,
) -> DensityReport {
    let units = unit_vectors(closure.store.points());
    let levels = closure
        .trace
        .levels
        .iter()
        .map(|stats| {
            let prefix = &units[..closure.store.count_up_to(stats.level)];
            DensityLevel {
                level: stats.level,
                points: prefix.len(),
                covering_radius: covering_radius_of_units(prefix, sample, mode),
                min_separation: min_separation_of_units(prefix, mode).ok(),
            }
        })
        .collect();
    DensityReport {
        sample_size: sample.len(),
        levels,
    }
}

/// Runs the closure and evaluates density after each level.
pub fn density_curve(
    basis: &BasisSpec,
    caps: &ClosureCaps,
    sample_size: usize,
) -> Result<DensityReport> {
    let closure = run_closure_with(basis, caps, LevelOptions::default())?;
    let sample = sample_directions(sample_size);
    Ok(density_of_closure(&closure, &sample, ExecMode::default()))
}
