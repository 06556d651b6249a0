//! Decision procedures against their brute-force oracles, exhaustively over
//! every quiver with at most 4 vertices and 6 arrows.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use qnoeth_core::algebra::algebra_noetherian;
use qnoeth_core::family::small_quivers;
use qnoeth_core::groebner::{check_g1, check_g2, check_refinement, GroebnerOrder, PathOrder};
use qnoeth_core::noetherian::{
    explore_maximal_paths, finite_quiver_criterion, is_left_noetherian_at, maximal_paths, pumping_oracle,
};
use qnoeth_core::{Error, PrimeField};

/// Burnside count of arrow multisets on `n` vertices with `k ≤ max_arrows`
/// arrows, up to relabeling vertices.
fn burnside(n: usize, max_arrows: usize) -> usize {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let all = perms(n);
    let mut fixed = 0;
    for p in &all {
        // Cycle lengths of the induced permutation on vertex pairs.
        let mut seen = vec![false; n * n];
        let mut poly = vec![0usize; max_arrows + 1];
        poly[0] = 1;
        for start in 0..n * n {
            let mut len = 0;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                len += 1;
                c = p[c / n] * n + p[c % n];
            }
            if len == 0 {
                continue;
            }
            for i in len..=max_arrows {
                poly[i] += poly[i - len];
            }
        }
        fixed += poly.iter().sum::<usize>();
    }
    fixed / all.len()
}

#[test]
fn family_matches_burnside_count() {
    let q = small_quivers(4, 6);
    assert_eq!(q.len(), (1..=4).map(|n| burnside(n, 6)).sum::<usize>());
    assert_eq!(q.len(), 4388);
    assert_eq!(small_quivers(3, 4).len(), (1..=3).map(|n| burnside(n, 4)).sum::<usize>());
    let distinct: BTreeSet<String> = q.iter().map(|q| format!("{q:?}")).collect();
    assert_eq!(distinct.len(), q.len());
}

#[test]
fn criterion_agrees_with_pumping_oracle() {
    let start = Instant::now();
    for q in small_quivers(4, 6) {
        for x in q.vertices() {
            let fast = is_left_noetherian_at(&q, x).unwrap().verdict;
            let slow = pumping_oracle(&q, x).unwrap();
            assert_eq!(fast, !slow, "{q:?} at {x:?}");
        }
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn finite_maximal_paths_iff_noetherian() {
    for q in small_quivers(4, 6) {
        for x in q.vertices() {
            let report = is_left_noetherian_at(&q, x).unwrap();
            let explored = explore_maximal_paths(&q, x).unwrap();
            assert_eq!(report.verdict, explored.is_some(), "{q:?} at {x:?}");
            match maximal_paths(&q, x) {
                Ok(ms) => {
                    let mut a = ms.clone();
                    let mut b = explored.unwrap();
                    a.sort();
                    b.sort();
                    assert_eq!(a, b, "{q:?} at {x:?}");
                    assert!(report.bound.unwrap().admits(ms.len()), "{q:?} at {x:?}");
                }
                Err(Error::NotNoetherian(w)) => {
                    assert!(!report.verdict);
                    assert_eq!(w.base(), x);
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn finite_quiver_criterion_is_the_conjunction() {
    for q in small_quivers(4, 6) {
        let all = q.vertices().all(|x| is_left_noetherian_at(&q, x).unwrap().verdict);
        assert_eq!(finite_quiver_criterion(&q).unwrap(), all, "{q:?}");
    }
}

#[test]
fn algebra_verdict_matches_quiver_verdict() {
    for q in small_quivers(3, 4) {
        let all = q.vertices().all(|x| is_left_noetherian_at(&q, x).unwrap().verdict);
        assert_eq!(algebra_noetherian(&q, PrimeField::F2).unwrap().verdict, all, "{q:?}");
    }
}

#[test]
fn degree_lex_is_a_groebner_enrichment() {
    for q in small_quivers(4, 6) {
        let ord = GroebnerOrder::declaration(&q);
        for x in q.vertices() {
            assert!(check_g1(&ord, &q, x, 4).unwrap().is_pass(), "{q:?} at {x:?}");
            assert!(check_g2(&ord, &q, x, 4).unwrap().is_pass(), "{q:?} at {x:?}");
            assert!(check_refinement(&ord, &q, x, 4).unwrap().is_pass(), "{q:?} at {x:?}");
        }
    }
}

#[test]
fn degree_lex_is_a_strict_total_order() {
    use std::cmp::Ordering::*;
    for q in small_quivers(3, 4) {
        let ord = GroebnerOrder::declaration(&q);
        for x in q.vertices() {
            let paths = q.enumerate_paths(x, 3, None);
            for a in &paths {
                assert_eq!(ord.compare(a.arrows(), a.arrows()), Equal);
                for b in &paths {
                    let ab = ord.compare(a.arrows(), b.arrows());
                    assert_eq!(ab, ord.compare(b.arrows(), a.arrows()).reverse());
                    assert_eq!(ab == Equal, a == b);
                    for c in &paths {
                        if ab == Less && ord.compare(b.arrows(), c.arrows()) == Less {
                            assert_eq!(ord.compare(a.arrows(), c.arrows()), Less);
                        }
                    }
                }
            }
        }
    }
}
