mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use projclose::subplane::{find_quadrangle, is_quadrangle};
use projclose::{
    classify_basis, moebius_net, run_closure, verify_axioms, verify_ortho_closed, BasisSpec,
    ClassificationKind, ClosureCaps, HPoint,
};

use common::{moebius_rounds, triple, Triple};

fn p(x: i64, y: i64, z: i64) -> HPoint {
    HPoint::new(x, y, z).unwrap()
}

#[test]
fn moebius_matches_linear_algebra_oracle() {
    let quad = [p(1, 0, 0), p(0, 1, 0), p(0, 0, 1), p(1, 1, 1)];
    let oracle = moebius_rounds(
        [
            triple(1, 0, 0),
            triple(0, 1, 0),
            triple(0, 0, 1),
            triple(1, 1, 1),
        ],
        3,
    );
    let counts: Vec<usize> = oracle.iter().map(BTreeSet::len).collect();
    assert_eq!(counts, [4, 7, 13, 97]);
    for (rounds, expected) in oracle.iter().enumerate() {
        let net = moebius_net(&quad, rounds as u32, &ClosureCaps::default()).unwrap();
        let got: BTreeSet<Triple> = net.points().map(|q| q.coords().clone()).collect();
        assert_eq!(&got, expected, "round {rounds}");
    }
}

#[test]
fn moebius_from_other_quadrangle() {
    let quad = [p(1, 2, 0), p(0, 1, 3), p(2, 0, 1), p(1, 1, 1)];
    let oracle = moebius_rounds(
        [
            triple(1, 2, 0),
            triple(0, 1, 3),
            triple(2, 0, 1),
            triple(1, 1, 1),
        ],
        2,
    );
    let net = moebius_net(&quad, 2, &ClosureCaps::default()).unwrap();
    let got: BTreeSet<Triple> = net.points().map(|q| q.coords().clone()).collect();
    assert_eq!(&got, oracle.last().unwrap());
}

fn random_basis(rng: &mut ChaCha8Rng) -> BasisSpec {
    loop {
        let mut v = [[0i64; 3]; 3];
        for row in v.iter_mut() {
            for c in row.iter_mut() {
                *c = rng.random_range(-5..=5);
            }
        }
        let b = BasisSpec::from_integers(v);
        if b.canonical_points().is_ok() {
            return b;
        }
    }
}

#[test]
fn classifier_agrees_with_closure_on_random_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let b = random_basis(&mut rng);
        let class = classify_basis(&b).unwrap();
        let c = run_closure(&b, &ClosureCaps::new(5, 100_000).unwrap()).unwrap();
        assert_eq!(class.kind.is_degenerate(), c.trace.stabilized, "{b:?}");
        match class.kind {
            ClassificationKind::DegenerateTripod => assert_eq!(c.store.len(), 3),
            ClassificationKind::DegenerateFivePoint => assert_eq!(c.store.len(), 5),
            ClassificationKind::DenseInfinite => assert!(c.store.len() > 5),
        }
    }
}

#[test]
fn dense_store_axioms_and_ortho_closure() {
    let b = BasisSpec::from_integers([[1, 0, 0], [1, 1, 0], [1, 1, 1]]);
    let c = run_closure(&b, &ClosureCaps::default()).unwrap();
    let report = verify_axioms(&c.store, 2_000, 3);
    assert_eq!(report.p1_failures, 0);
    assert_eq!(report.p1_checked, 2_000);
    assert_eq!(report.p2_failures, 0);
    assert!(report.p3_found);
    let ortho = verify_ortho_closed(&c.store);
    assert_eq!(ortho.checked, 104);
    assert_eq!(ortho.failures, 0);
    // same seed, same report
    assert_eq!(report, verify_axioms(&c.store, 2_000, 3));
}

#[test]
fn ortho_closure_brute_force() {
    let b = BasisSpec::from_integers([[2, 1, 0], [0, 1, 3], [1, -1, 1]]);
    let c = run_closure(&b, &ClosureCaps::new(4, 100_000).unwrap()).unwrap();
    let pts: Vec<(HPoint, u32)> = c.store.iter().map(|(q, l)| (q.clone(), l)).collect();
    for (a, level) in &pts {
        if *level > 3 {
            continue;
        }
        let on_polar = pts
            .iter()
            .filter(|(q, _)| projclose::projective::dot(a, q) == 0.into())
            .count();
        assert!(on_polar >= 2, "{a}");
    }
    assert_eq!(verify_ortho_closed(&c.store).failures, 0);
}

#[test]
fn quadrangle_search_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let pts: Vec<HPoint> = (0..6)
            .filter_map(|_| {
                HPoint::new(
                    rng.random_range(-2..=2),
                    rng.random_range(-2..=2),
                    rng.random_range(-2..=2),
                )
                .ok()
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let brute = (0..pts.len()).any(|i| {
            (i + 1..pts.len()).any(|j| {
                (j + 1..pts.len()).any(|k| {
                    (k + 1..pts.len()).any(|l| {
                        is_quadrangle(&[
                            pts[i].clone(),
                            pts[j].clone(),
                            pts[k].clone(),
                            pts[l].clone(),
                        ])
                    })
                })
            })
        });
        let found = find_quadrangle(&pts);
        assert_eq!(found.is_some(), brute, "{pts:?}");
        if let Some(q) = found {
            assert!(is_quadrangle(&q));
        }
    }
}
