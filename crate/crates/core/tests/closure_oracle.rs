mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use projclose::{
    cross, run_closure, run_closure_with, BasisSpec, CapHit, ClosureCaps, ExactScalar, ExecMode,
    HPoint, LevelOptions, PairStrategy,
};

use common::{closure_levels, first_levels, triple, Triple};

const DENSE: [[i64; 3]; 3] = [[1, 0, 0], [1, 1, 0], [1, 1, 1]];

/// Cumulative point counts of the dense basis per level, computed with the
/// naive all-pairs oracle (levels 1-5 here, level 6 offline with the same
/// procedure).
const DENSE_COUNTS: [usize; 6] = [3, 6, 11, 24, 104, 2191];

fn as_triple(p: &HPoint) -> Triple {
    p.coords().clone()
}

fn store_levels(
    basis: [[i64; 3]; 3],
    caps: ClosureCaps,
    options: LevelOptions,
) -> Vec<(Triple, u32)> {
    let c = run_closure_with(&BasisSpec::from_integers(basis), &caps, options).unwrap();
    c.store.iter().map(|(p, l)| (as_triple(p), l)).collect()
}

#[test]
fn dense_counts_match_oracle() {
    let oracle = closure_levels(DENSE.map(|[x, y, z]| triple(x, y, z)), 5);
    let oracle_counts: Vec<usize> = oracle.iter().map(|s| s.len()).collect();
    assert_eq!(oracle_counts, DENSE_COUNTS[..5]);

    let c = run_closure(&BasisSpec::from_integers(DENSE), &ClosureCaps::default()).unwrap();
    let counts: Vec<usize> = c.trace.levels.iter().map(|l| l.points).collect();
    assert_eq!(counts, DENSE_COUNTS);
    assert_eq!(c.trace.cap_hit, CapHit::LevelCap);
    assert!(!c.trace.stabilized);

    let got: BTreeSet<Triple> = c.store.points().map(as_triple).collect();
    let expected_levels = first_levels(&oracle);
    for (p, level) in c.store.iter() {
        if level <= 5 {
            assert_eq!(expected_levels.get(&as_triple(p)), Some(&level));
        }
    }
    assert!(oracle[4].is_subset(&got));
}

#[test]
fn strategies_and_modes_agree() {
    let caps = ClosureCaps::new(5, 100_000).unwrap();
    let reference = store_levels(
        DENSE,
        caps,
        LevelOptions {
            mode: ExecMode::Sequential,
            strategy: PairStrategy::AllPairs,
        },
    );
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        for strategy in [PairStrategy::AllPairs, PairStrategy::Frontier] {
            assert_eq!(
                store_levels(DENSE, caps, LevelOptions { mode, strategy }),
                reference
            );
        }
    }
}

#[test]
fn closure_soundness() {
    let c = run_closure(
        &BasisSpec::from_integers(DENSE),
        &ClosureCaps::new(5, 100_000).unwrap(),
    )
    .unwrap();
    let entries: Vec<(&HPoint, u32)> = c.store.iter().collect();
    // tags are non-decreasing and level 1 is the basis
    assert!(entries.windows(2).all(|w| w[0].1 <= w[1].1));
    let basis: Vec<HPoint> = BasisSpec::from_integers(DENSE)
        .canonical_points()
        .unwrap()
        .to_vec();
    let level_one: Vec<HPoint> = entries
        .iter()
        .filter(|e| e.1 == 1)
        .map(|e| e.0.clone())
        .collect();
    assert_eq!(level_one, basis);
    for (p, level) in &entries {
        if *level == 1 {
            continue;
        }
        let witnessed = entries.iter().filter(|e| e.1 < *level).any(|(r, _)| {
            entries
                .iter()
                .filter(|e| e.1 < *level)
                .any(|(s, _)| HPoint::from_integers(cross(r, s)).ok().as_ref() == Some(*p))
        });
        assert!(witnessed, "{p} at level {level} has no generating pair");
    }
}

#[test]
fn levels_are_monotone() {
    let levels = closure_levels(DENSE.map(|[x, y, z]| triple(x, y, z)), 5);
    assert!(levels.windows(2).all(|w| w[0].is_subset(&w[1])));
    let c = run_closure(
        &BasisSpec::from_integers(DENSE),
        &ClosureCaps::new(5, 100_000).unwrap(),
    )
    .unwrap();
    let counts: Vec<usize> = c.trace.levels.iter().map(|l| l.points).collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn degenerate_families_are_exact() {
    // u arbitrary; v, w in u-perp
    let cases: [([i64; 3], [i64; 3], [i64; 3]); 4] = [
        ([1, 0, 0], [0, 1, 0], [0, 0, 1]),
        ([1, 2, 3], [3, 0, -1], [-2, 1, 0]),
        ([2, -1, 1], [1, 2, 0], [0, 1, 1]),
        ([1, 1, 1], [1, -1, 0], [1, 1, -2]),
    ];
    let expected = [3, 5, 5, 3];
    for ((u, v, w), n) in cases.into_iter().zip(expected) {
        let c = run_closure(
            &BasisSpec::from_integers([u, v, w]),
            &ClosureCaps::default(),
        )
        .unwrap();
        assert!(c.trace.stabilized, "{u:?} {v:?} {w:?}");
        assert_eq!(c.store.len(), n, "{u:?} {v:?} {w:?}");
        let oracle = closure_levels([u, v, w].map(|[x, y, z]| triple(x, y, z)), 4);
        assert_eq!(oracle.last().unwrap().len(), n);
    }
}

#[test]
fn point_cap_stops_dense_run() {
    let c = run_closure(
        &BasisSpec::from_integers(DENSE),
        &ClosureCaps::new(10, 500).unwrap(),
    )
    .unwrap();
    assert_eq!(c.trace.cap_hit, CapHit::PointCap);
    assert_eq!(c.store.len(), 104);
    assert_eq!(c.store.completed_levels(), 5);
}

fn small_int() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn nonzero_rational() -> impl Strategy<Value = ExactScalar> {
    (prop_oneof![-7i64..=-1, 1i64..=7], 1i64..=5)
        .prop_map(|(n, d)| ExactScalar::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scale_invariance(
        raw in proptest::array::uniform3(proptest::array::uniform3(small_int())),
        scales in proptest::array::uniform3(nonzero_rational()),
    ) {
        let basis = BasisSpec::from_integers(raw);
        prop_assume!(basis.canonical_points().is_ok());
        let scaled = {
            let [u, v, w] = basis.vectors().map(|t| t.clone());
            let mul = |t: [ExactScalar; 3], s: &ExactScalar| t.map(|c| c * s);
            BasisSpec::new(mul(u, &scales[0]), mul(v, &scales[1]), mul(w, &scales[2]))
        };
        let caps = ClosureCaps::new(4, 10_000).unwrap();
        let a = run_closure(&basis, &caps).unwrap();
        let b = run_closure(&scaled, &caps).unwrap();
        let set = |c: &projclose::Closure| c.store.iter().map(|(p, l)| (p.clone(), l)).collect::<BTreeSet<_>>();
        prop_assert_eq!(set(&a), set(&b));
    }

    #[test]
    fn modes_are_deterministic(raw in proptest::array::uniform3(proptest::array::uniform3(small_int()))) {
        let basis = BasisSpec::from_integers(raw);
        prop_assume!(basis.canonical_points().is_ok());
        let caps = ClosureCaps::new(5, 100_000).unwrap();
        let seq = run_closure_with(&basis, &caps, LevelOptions { mode: ExecMode::Sequential, strategy: PairStrategy::Frontier }).unwrap();
        let par = run_closure_with(&basis, &caps, LevelOptions { mode: ExecMode::Parallel, strategy: PairStrategy::Frontier }).unwrap();
        prop_assert_eq!(seq.store, par.store);
    }
}
