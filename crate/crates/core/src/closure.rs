//! Level-by-level generation of the cross-product closure of a basis.
//!
//! Level 1 holds the three basis rays. Level `i + 1` adds the ray of every
//! nonzero cross product of two points already present. Points are
//! deduplicated projectively, so the process stabilizes exactly when a level
//! contributes no new ray.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::exec::{flat_map_range, ExecMode};
use crate::projective::{canonicalize, canonicalize_integers, collinear, cross, HPoint};
use crate::scalar::{parse_triples, ExactScalar};

/// Rows of the pair triangle are handed out in blocks of at least this many
/// pairs; the point cap is checked between blocks.
const PAIRS_PER_BLOCK: usize = 1 << 14;

/// Three rational vectors, expected to form a basis of R^3.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisSpec {
    pub u: [ExactScalar; 3],
    pub v: [ExactScalar; 3],
    pub w: [ExactScalar; 3],
}

impl BasisSpec {
    pub fn new(u: [ExactScalar; 3], v: [ExactScalar; 3], w: [ExactScalar; 3]) -> Self {
        BasisSpec { u, v, w }
    }

    pub fn from_integers(vectors: [[i64; 3]; 3]) -> Self {
        let [u, v, w] = vectors.map(|t| t.map(|c| ExactScalar::from_integer(c.into())));
        BasisSpec { u, v, w }
    }

    /// Parses `"u1,u2,u3;v1,v2,v3;w1,w2,w3"`. The flag reports whether float
    /// entries were approximated.
    pub fn parse(input: &str, allow_float: bool) -> Result<(Self, bool)> {
        let (triples, approximated) = parse_triples(input, allow_float)?;
        let [u, v, w]: [[ExactScalar; 3]; 3] = triples.try_into().map_err(|t: Vec<_>| {
            Error::InvalidBasis(format!("expected 3 vectors, got {}", t.len()))
        })?;
        Ok((BasisSpec { u, v, w }, approximated))
    }

    pub fn vectors(&self) -> [&[ExactScalar; 3]; 3] {
        [&self.u, &self.v, &self.w]
    }

    /// The three canonical rays; fails unless they are non-collinear.
    pub fn canonical_points(&self) -> Result<[HPoint; 3]> {
        let mut points = Vec::with_capacity(3);
        for (name, v) in ["u", "v", "w"].iter().zip(self.vectors()) {
            let p = canonicalize(v)
                .map_err(|_| Error::InvalidBasis(format!("{name} is the zero vector")))?;
            points.push(p);
        }
        let [a, b, c]: [HPoint; 3] = points.try_into().expect("three vectors");
        if collinear(&a, &b, &c) {
            return Err(Error::InvalidBasis(
                "the vectors are linearly dependent".to_string(),
            ));
        }
        Ok([a, b, c])
    }
}

/// Limits that keep the countable union finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureCaps {
    pub max_level: u32,
    pub max_points: usize,
}

impl ClosureCaps {
    pub const DEFAULT_MAX_LEVEL: u32 = 6;
    pub const DEFAULT_MAX_POINTS: usize = 100_000;

    pub fn new(max_level: u32, max_points: usize) -> Result<Self> {
        if max_level == 0 || max_points == 0 {
            return Err(Error::InvalidCaps(format!(
                "max_level={max_level}, max_points={max_points}; both must be at least 1"
            )));
        }
        Ok(ClosureCaps {
            max_level,
            max_points,
        })
    }
}

impl Default for ClosureCaps {
    fn default() -> Self {
        ClosureCaps {
            max_level: Self::DEFAULT_MAX_LEVEL,
            max_points: Self::DEFAULT_MAX_POINTS,
        }
    }
}

/// Deduplicated points tagged with the level at which they first appeared.
///
/// Entries are kept in insertion order; within a level they are sorted by
/// canonical coordinates, so the order does not depend on scheduling.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PointStore {
    points: IndexMap<HPoint, u32>,
    completed_levels: u32,
    frontier_start: usize,
    closed: bool,
}

impl PointStore {
    /// A store holding `points` at level 1. Duplicates are dropped.
    pub fn from_level_one(points: impl IntoIterator<Item = HPoint>) -> Self {
        let mut store = PointStore::default();
        for p in points {
            store.points.entry(p).or_insert(1);
        }
        store.completed_levels = 1;
        store
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.points.contains_key(p)
    }

    pub fn level_of(&self, p: &HPoint) -> Option<u32> {
        self.points.get(p).copied()
    }

    pub fn get(&self, index: usize) -> Option<(&HPoint, u32)> {
        self.points.get_index(index).map(|(p, l)| (p, *l))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HPoint, u32)> + '_ {
        self.points.iter().map(|(p, l)| (p, *l))
    }

    pub fn points(&self) -> impl Iterator<Item = &HPoint> + '_ {
        self.points.keys()
    }

    /// Number of entries with level tag at most `level`. Because tags are
    /// non-decreasing, these are exactly the first entries of the store.
    pub fn count_up_to(&self, level: u32) -> usize {
        self.points.values().take_while(|&&l| l <= level).count()
    }

    /// Number of levels whose generation ran to completion.
    pub fn completed_levels(&self) -> u32 {
        self.completed_levels
    }

    /// True once a complete level produced nothing new: the point set is
    /// closed under the generating operation.
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Appends a complete level. `new_points` must be absent from the store.
    pub(crate) fn push_level(&mut self, mut new_points: Vec<HPoint>) {
        new_points.sort_unstable();
        let level = self.completed_levels + 1;
        self.frontier_start = self.points.len();
        for p in new_points {
            let previous = self.points.insert(p, level);
            debug_assert!(previous.is_none());
        }
        self.completed_levels = level;
        if self.frontier_start == self.points.len() {
            self.closed = true;
        }
    }
}

/// Which point pairs a level visits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairStrategy {
    /// Every unordered pair of stored points.
    AllPairs,
    /// Only pairs involving at least one point of the latest level; products
    /// of older pairs are already stored.
    #[default]
    Frontier,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LevelOptions {
    pub mode: ExecMode,
    pub strategy: PairStrategy,
}

/// Which limit, if any, ended a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CapHit {
    None,
    LevelCap,
    PointCap,
}

impl CapHit {
    pub fn as_str(self) -> &'static str {
        match self {
            CapHit::None => "none",
            CapHit::LevelCap => "level_cap",
            CapHit::PointCap => "point_cap",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub level: u32,
    /// Cumulative number of points after this level.
    pub points: usize,
    pub new_points: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub levels: Vec<LevelStats>,
    pub stabilized: bool,
    pub cap_hit: CapHit,
}

/// Result of [`run_closure`].
#[derive(Clone, Debug)]
pub struct Closure {
    pub store: PointStore,
    pub trace: ClosureTrace,
}

/// Generates the next level with default options.
pub fn next_level(store: &mut PointStore, caps: &ClosureCaps) -> Result<usize> {
    next_level_with(store, caps, LevelOptions::default())
}

/// Adds the canonical ray of every nonzero cross product of stored pairs and
/// returns the number of new points.
///
/// If the level would push the store past `caps.max_points` the store is
/// left untouched and [`Error::PointCapExceeded`] is returned. A level that
/// adds nothing marks the store closed.
pub fn next_level_with(
    store: &mut PointStore,
    caps: &ClosureCaps,
    options: LevelOptions,
) -> Result<usize> {
    let n = store.len();
    let first_row = match options.strategy {
        PairStrategy::AllPairs => 0,
        PairStrategy::Frontier => store.frontier_start,
    };
    let budget = caps.max_points.saturating_sub(n);
    let mut fresh: HashSet<HPoint> = HashSet::new();

    let mut row = first_row;
    while row < n {
        let mut end = row;
        let mut pairs = 0;
        while end < n && pairs < PAIRS_PER_BLOCK {
            pairs += end;
            end += 1;
        }
        let shared: &PointStore = store;
        let candidates = flat_map_range(options.mode, row..end, |i| {
            let (a, _) = shared.get(i).expect("row in range");
            let mut found = Vec::new();
            for j in 0..i {
                let (b, _) = shared.get(j).expect("column in range");
                if let Ok(c) = canonicalize_integers(cross(a, b)) {
                    if !shared.contains(&c) {
                        found.push(c);
                    }
                }
            }
            found
        });
        fresh.extend(candidates);
        if fresh.len() > budget {
            return Err(Error::PointCapExceeded {
                cap: caps.max_points,
                attempted: n + fresh.len(),
            });
        }
        row = end;
    }

    let added = fresh.len();
    store.push_level(fresh.into_iter().collect());
    Ok(added)
}

pub fn run_closure(basis: &BasisSpec, caps: &ClosureCaps) -> Result<Closure> {
    run_closure_with(basis, caps, LevelOptions::default())
}

/// Iterates [`next_level_with`] from the basis until the point set
/// stabilizes or a cap is reached.
pub fn run_closure_with(
    basis: &BasisSpec,
    caps: &ClosureCaps,
    options: LevelOptions,
) -> Result<Closure> {
    let start = Instant::now();
    let mut store = PointStore::from_level_one(basis.canonical_points()?);
    let mut levels = vec![LevelStats {
        level: 1,
        points: store.len(),
        new_points: store.len(),
        elapsed: start.elapsed(),
    }];
    let mut stabilized = false;
    let mut cap_hit = CapHit::None;

    if store.len() > caps.max_points {
        cap_hit = CapHit::PointCap;
    }
    while cap_hit == CapHit::None && !stabilized {
        if store.completed_levels() >= caps.max_level {
            cap_hit = CapHit::LevelCap;
            break;
        }
        let t0 = Instant::now();
        match next_level_with(&mut store, caps, options) {
            Ok(added) => {
                levels.push(LevelStats {
                    level: store.completed_levels(),
                    points: store.len(),
                    new_points: added,
                    elapsed: t0.elapsed(),
                });
                stabilized = added == 0;
            }
            Err(Error::PointCapExceeded { .. }) => cap_hit = CapHit::PointCap,
            Err(e) => return Err(e),
        }
    }

    Ok(Closure {
        store,
        trace: ClosureTrace {
            levels,
            stabilized,
            cap_hit,
        },
    })
}

/// True iff the last recorded level added nothing and no cap ended the run.
pub fn is_stabilized(trace: &ClosureTrace) -> bool {
    trace.cap_hit == CapHit::None
        && trace.levels.len() >= 2
        && trace.levels.last().is_some_and(|l| l.new_points == 0)
}
