//! The elliptic metric: the angle between two rays, in `[0, pi/2]`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::projective::{max_abs, HPoint};

/// Tolerance on the Euclidean norm of a [`FloatDirection`].
pub const UNIT_NORM_TOLERANCE: f64 = 1e-12;

/// A unit vector in binary64, used for sampling the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatDirection([f64; 3]);

impl FloatDirection {
    /// Normalizes `v`. Returns `None` for the zero vector or non-finite input.
    pub fn new(v: [f64; 3]) -> Option<Self> {
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return None;
        }
        Some(FloatDirection(v.map(|c| c / norm)))
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0
    }

    pub fn neg(&self) -> Self {
        FloatDirection(self.0.map(|c| -c))
    }

    pub fn dot(&self, other: &FloatDirection) -> f64 {
        dot(&self.0, &other.0)
    }
}

/// Anything that names a ray and can be evaluated in binary64.
pub trait Ray {
    /// A finite, nonzero float vector spanning the ray (not necessarily unit).
    fn float_coords(&self) -> [f64; 3];

    fn unit_direction(&self) -> FloatDirection {
        FloatDirection::new(self.float_coords()).expect("rays are nonzero")
    }
}

impl Ray for FloatDirection {
    fn float_coords(&self) -> [f64; 3] {
        self.0
    }

    fn unit_direction(&self) -> FloatDirection {
        *self
    }
}

impl Ray for HPoint {
    /// Coordinates scaled by the largest absolute entry, so huge integers
    /// never overflow to infinity.
    fn float_coords(&self) -> [f64; 3] {
        let coords = self.coords();
        let bits = max_abs(coords).bits();
        // keep ~64 significant bits of the largest entry
        let shift = bits.saturating_sub(64);
        let shifted: Vec<f64> = coords.iter().map(|c| shr_to_f64(c, shift)).collect();
        let scale = shifted.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        [shifted[0] / scale, shifted[1] / scale, shifted[2] / scale]
    }
}

fn shr_to_f64(c: &BigInt, shift: u64) -> f64 {
    let v: BigInt = if shift == 0 { c.clone() } else { c >> shift };
    v.to_f64().unwrap_or(0.0)
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// The elliptic distance `arccos(|a.b| / (|a| |b|))` between two rays.
///
/// Evaluated as `atan2(|a x b|, |a.b|)`, which is the same angle but stays
/// accurate near 0, where `arccos` loses half the significant digits. Both
/// arguments of `atan2` are non-negative, so the result lies in `[0, pi/2]`
/// without clamping, and a vector and its negation are exactly at distance 0.
pub fn elliptic_distance<A: Ray + ?Sized, B: Ray + ?Sized>(a: &A, b: &B) -> f64 {
    angle_between(&a.float_coords(), &b.float_coords())
}

#[inline]
pub(crate) fn angle_between(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let c = [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ];
    dot(&c, &c).sqrt().atan2(dot(a, b).abs())
}

#[inline]
pub(crate) fn abs_cos(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    dot(a, b).abs()
}
