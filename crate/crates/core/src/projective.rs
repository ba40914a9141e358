//! Exact points and lines of the real projective plane.
//!
//! A point is a ray `Ra` of R^3, stored by its canonical integer
//! representative: coprime coordinates with the first nonzero one positive.
//! Lines are stored by the canonical normal of the plane they span, so the
//! polarity `Ra -> a^perp` is just a change of role.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// Homogeneous integer coordinates, not necessarily canonical.
pub type IntTriple = [BigInt; 3];

/// A point of the projective plane in canonical form.
///
/// Equality, ordering and hashing act on the canonical coordinates, so two
/// `HPoint`s compare equal exactly when they denote the same ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint {
    coords: IntTriple,
}

/// A line of the projective plane, stored by its canonical normal ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HLine {
    normal: HPoint,
}

impl HPoint {
    /// Canonicalizes an integer triple.
    pub fn from_integers(v: IntTriple) -> Result<Self> {
        canonicalize_integers(v)
    }

    /// Shorthand for small literal coordinates.
    pub fn new(x: i64, y: i64, z: i64) -> Result<Self> {
        canonicalize_integers([x.into(), y.into(), z.into()])
    }

    pub fn coords(&self) -> &IntTriple {
        &self.coords
    }

    pub fn into_coords(self) -> IntTriple {
        self.coords
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "({x}, {y}, {z})")
    }
}

impl HLine {
    pub fn from_normal(normal: HPoint) -> Self {
        HLine { normal }
    }

    pub fn normal(&self) -> &HPoint {
        &self.normal
    }
}

impl fmt::Display for HLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]^perp", self.normal)
    }
}

/// Canonical representative of the ray through a nonzero rational triple.
///
/// Denominators are cleared with their lcm, the result is divided by the gcd
/// of its entries and the sign is fixed so the first nonzero entry is positive.
pub fn canonicalize(v: &[ExactScalar; 3]) -> Result<HPoint> {
    let lcm = v.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    let ints = v.clone().map(|q| q.numer() * (&lcm / q.denom()));
    canonicalize_integers(ints)
}

/// Integer-only variant of [`canonicalize`].
pub fn canonicalize_integers(v: IntTriple) -> Result<HPoint> {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let leading_negative = v
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.sign() == Sign::Minus);
    let g = if leading_negative { -g } else { g };
    let coords = if g == BigInt::from(1) {
        v
    } else {
        v.map(|c| c / &g)
    };
    Ok(HPoint { coords })
}

/// Exact cross product of two integer triples.
pub fn cross_triples(a: &IntTriple, b: &IntTriple) -> IntTriple {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot_triples(a: &IntTriple, b: &IntTriple) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Determinant of the 3x3 matrix with rows `a`, `b`, `c`.
pub fn det_triples(a: &IntTriple, b: &IntTriple, c: &IntTriple) -> BigInt {
    dot_triples(a, &cross_triples(b, c))
}

/// Cross product of the canonical coordinates. Zero exactly when `a == b`.
pub fn cross(a: &HPoint, b: &HPoint) -> IntTriple {
    cross_triples(&a.coords, &b.coords)
}

pub fn dot(a: &HPoint, b: &HPoint) -> BigInt {
    dot_triples(&a.coords, &b.coords)
}

pub fn is_zero_triple(v: &IntTriple) -> bool {
    v.iter().all(Zero::is_zero)
}

/// The line through two distinct points, `Ra v Rb = (a x b)^perp`.
pub fn join(p: &HPoint, q: &HPoint) -> Result<HLine> {
    canonicalize_integers(cross(p, q))
        .map(HLine::from_normal)
        .map_err(|_| Error::EqualPoints)
}

/// The common point of two distinct lines, `a^perp ^ b^perp = R(a x b)`.
pub fn meet(l1: &HLine, l2: &HLine) -> Result<HPoint> {
    canonicalize_integers(cross(&l1.normal, &l2.normal)).map_err(|_| Error::EqualLines)
}

pub fn polar(p: &HPoint) -> HLine {
    HLine::from_normal(p.clone())
}

pub fn pole(l: &HLine) -> HPoint {
    l.normal.clone()
}

pub fn incident(p: &HPoint, l: &HLine) -> bool {
    dot(p, &l.normal).is_zero()
}

pub fn collinear(p: &HPoint, q: &HPoint, r: &HPoint) -> bool {
    det_triples(&p.coords, &q.coords, &r.coords).is_zero()
}

/// `(p1 x q1) x (p2 x q2)` together with its two determinant expansions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrupleProduct {
    /// Computed by two nested cross products.
    pub direct: IntTriple,
    /// `det(p1,q1,q2) p2 - det(p1,q1,p2) q2`
    pub along_second_pair: IntTriple,
    /// `det(p1,p2,q2) q1 - det(q1,p2,q2) p1`
    pub along_first_pair: IntTriple,
}

impl QuadrupleProduct {
    pub fn expansions_agree(&self) -> bool {
        self.direct == self.along_second_pair && self.direct == self.along_first_pair
    }
}

fn combine(s: &BigInt, x: &IntTriple, t: &BigInt, y: &IntTriple) -> IntTriple {
    [
        s * &x[0] - t * &y[0],
        s * &x[1] - t * &y[1],
        s * &x[2] - t * &y[2],
    ]
}

/// Quadruple cross product on raw integer triples (zero vectors allowed).
pub fn quadruple_product_triples(
    p1: &IntTriple,
    q1: &IntTriple,
    p2: &IntTriple,
    q2: &IntTriple,
) -> QuadrupleProduct {
    let direct = cross_triples(&cross_triples(p1, q1), &cross_triples(p2, q2));
    let along_second_pair = combine(&det_triples(p1, q1, q2), p2, &det_triples(p1, q1, p2), q2);
    let along_first_pair = combine(&det_triples(p1, p2, q2), q1, &det_triples(q1, p2, q2), p1);
    QuadrupleProduct {
        direct,
        along_second_pair,
        along_first_pair,
    }
}

pub fn quadruple_product(p1: &HPoint, q1: &HPoint, p2: &HPoint, q2: &HPoint) -> QuadrupleProduct {
    quadruple_product_triples(&p1.coords, &q1.coords, &p2.coords, &q2.coords)
}

/// Largest absolute coordinate; useful for scaling before float conversion.
pub(crate) fn max_abs(v: &IntTriple) -> BigInt {
    v.iter().map(|c| c.abs()).max().unwrap_or_default()
}
