//! Exact rational scalars and their textual forms.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator.
pub type ExactScalar = BigRational;

/// Tolerance used when float inputs are turned into rationals.
pub const FLOAT_APPROX_TOLERANCE: f64 = 1e-12;

/// A parsed scalar together with a flag telling whether it was approximated
/// from a floating point literal.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedScalar {
    pub value: ExactScalar,
    pub approximated: bool,
}

fn looks_like_float(s: &str) -> bool {
    let lower = s.to_ascii_lowercase();
    lower.contains('.') || lower.contains('e') || lower.contains("inf") || lower.contains("nan")
}

/// Parses `"p/q"`, an integer, or (when `allow_float` is set) a decimal float
/// which is replaced by a continued-fraction convergent within
/// [`FLOAT_APPROX_TOLERANCE`].
pub fn parse_scalar(input: &str, allow_float: bool) -> Result<ParsedScalar> {
    let s = input.trim();
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty entry"));
    }
    if looks_like_float(s) {
        if !allow_float {
            return Err(err("float entries need explicit approximation"));
        }
        let x: f64 = s.parse().map_err(|_| err("not a number"))?;
        let value = approximate_f64(x, FLOAT_APPROX_TOLERANCE).ok_or_else(|| err("not finite"))?;
        return Ok(ParsedScalar {
            value,
            approximated: true,
        });
    }
    let s = s.strip_prefix('+').unwrap_or(s);
    let value = BigRational::from_str(s).map_err(|e| err(&e.to_string()))?;
    Ok(ParsedScalar {
        value,
        approximated: false,
    })
}

/// Parses `"x1,x2,x3;y1,y2,y3;..."` into rational triples. The flag is set
/// when any entry was approximated from a float literal.
pub fn parse_triples(input: &str, allow_float: bool) -> Result<(Vec<[ExactScalar; 3]>, bool)> {
    let mut approximated = false;
    let mut triples = Vec::new();
    for chunk in input.split(';') {
        let entries: Vec<&str> = chunk.split(',').collect();
        if entries.len() != 3 {
            return Err(Error::Parse {
                input: chunk.to_string(),
                reason: format!("expected 3 comma-separated entries, got {}", entries.len()),
            });
        }
        let mut triple: [ExactScalar; 3] = Default::default();
        for (slot, entry) in triple.iter_mut().zip(entries) {
            let parsed = parse_scalar(entry, allow_float)?;
            approximated |= parsed.approximated;
            *slot = parsed.value;
        }
        triples.push(triple);
    }
    Ok((triples, approximated))
}

/// Best rational approximation of `x` by continued-fraction convergents,
/// stopping at the first convergent within `tolerance`. Returns `None` for
/// non-finite input.
pub fn approximate_f64(x: f64, tolerance: f64) -> Option<ExactScalar> {
    if !x.is_finite() {
        return None;
    }
    // (h_{k-1}, h_{k-2}) and (k_{k-1}, k_{k-2})
    let (mut h1, mut h2) = (BigInt::one(), BigInt::zero());
    let (mut k1, mut k2) = (BigInt::zero(), BigInt::one());
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        let a_big = BigInt::from_f64(a)?;
        let h = &a_big * &h1 + &h2;
        let k = &a_big * &k1 + &k2;
        h2 = std::mem::replace(&mut h1, h);
        k2 = std::mem::replace(&mut k1, k);
        let approx = BigRational::new(h1.clone(), k1.clone());
        let close = approx
            .to_f64()
            .map(|v| (v - x).abs() <= tolerance)
            .unwrap_or(false);
        let frac = rest - a;
        if close || frac == 0.0 {
            return Some(approx);
        }
        rest = 1.0 / frac;
    }
    BigRational::from_float(x)
}
