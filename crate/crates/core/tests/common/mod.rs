//! Brute-force oracles, written independently of the library's code paths.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Triple = [BigInt; 3];

pub fn triple(x: i64, y: i64, z: i64) -> Triple {
    [x.into(), y.into(), z.into()]
}

/// Canonical ray representative by repeated Euclid and sign fix.
pub fn canon(v: &Triple) -> Option<Triple> {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return None;
    }
    let mut out: Triple = v.clone().map(|c| c / &g);
    if out.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
        out = out.map(|c| -c);
    }
    Some(out)
}

/// Cross product via cofactor expansion of the formal determinant.
pub fn cross(a: &Triple, b: &Triple) -> Triple {
    let minor = |i: usize, j: usize| &a[i] * &b[j] - &a[j] * &b[i];
    [minor(1, 2), -minor(0, 2), minor(0, 1)]
}

/// Naive closure: every level recomputes all pairs of the current set.
/// Returns the points of each level (cumulative) as canonical sets.
pub fn closure_levels(basis: [Triple; 3], levels: u32) -> Vec<BTreeSet<Triple>> {
    let mut current: BTreeSet<Triple> = basis.iter().map(|b| canon(b).unwrap()).collect();
    let mut out = vec![current.clone()];
    for _ in 1..levels {
        let pts: Vec<Triple> = current.iter().cloned().collect();
        let mut next = current.clone();
        for a in &pts {
            for b in &pts {
                if let Some(c) = canon(&cross(a, b)) {
                    next.insert(c);
                }
            }
        }
        if next == current {
            out.push(next);
            break;
        }
        current = next;
        out.push(current.clone());
    }
    out
}

/// One-dimensional null space of a rank-2 pair of rational rows, by Gaussian
/// elimination.
#[allow(clippy::needless_range_loop)]
pub fn null_vector(r1: &Triple, r2: &Triple) -> Option<Triple> {
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let mut m: Vec<Vec<BigRational>> = vec![r1.iter().map(q).collect(), r2.iter().map(q).collect()];
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..3 {
        if row == 2 {
            break;
        }
        let Some(sel) = (row..2).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let lead = m[row][col].clone();
        for c in 0..3 {
            m[row][c] = &m[row][c] / &lead;
        }
        for r in 0..2 {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..3 {
                    let sub = &f * &m[row][c];
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() != 2 {
        return None;
    }
    let free = (0..3).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![BigRational::zero(); 3];
    v[free] = BigRational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[r][free].clone();
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = [0, 1, 2].map(|i| v[i].numer() * (&lcm / v[i].denom()));
    canon(&ints)
}

/// Möbius net by linear algebra: lines as null vectors of point pairs,
/// intersections as null vectors of line pairs.
pub fn moebius_rounds(quad: [Triple; 4], rounds: u32) -> Vec<BTreeSet<Triple>> {
    let mut pts: BTreeSet<Triple> = quad.iter().map(|p| canon(p).unwrap()).collect();
    let mut out = vec![pts.clone()];
    for _ in 0..rounds {
        let list: Vec<Triple> = pts.iter().cloned().collect();
        let mut lines = BTreeSet::new();
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                lines.insert(null_vector(&list[i], &list[j]).unwrap());
            }
        }
        let lines: Vec<Triple> = lines.into_iter().collect();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                pts.insert(null_vector(&lines[i], &lines[j]).unwrap());
            }
        }
        out.push(pts.clone());
    }
    out
}

/// Level at which each point first appears in the naive closure.
pub fn first_levels(levels: &[BTreeSet<Triple>]) -> BTreeMap<Triple, u32> {
    let mut map = BTreeMap::new();
    for (i, set) in levels.iter().enumerate() {
        for p in set {
            map.entry(p.clone()).or_insert(i as u32 + 1);
        }
    }
    map
}
