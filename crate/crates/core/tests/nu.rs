//! Subsequence extraction on eventually periodic sequences.

mod common;

use common::*;
use proptest::prelude::*;
use qnoeth_core::family::small_quivers;
use qnoeth_core::noetherian::is_left_noetherian_at;
use qnoeth_core::poset::{PathPoset, PeriodicPathSequence};
use qnoeth_core::{Path, Quiver, Vertex};

fn power(q: &Quiver, n: usize) -> Path {
    let l = q.arrow("l").unwrap();
    q.path(Vertex::Core(0), &vec![l; n]).unwrap()
}

/// The recursion run over a long finite window: an index counts as
/// recurring when it qualifies more often than the preamble could explain.
fn window_oracle(seq: &PeriodicPathSequence, count: usize) -> Vec<usize> {
    let window = seq.preamble().len() + 40 * seq.period().len();
    let threshold = seq.preamble().len() + 1;
    let below = |x: &Path| (0..window).filter(|&j| x.is_prefix_of(seq.get(j))).count() >= threshold;
    let mut out: Vec<usize> = Vec::new();
    let mut i = 0;
    while out.len() < count {
        let ok = below(seq.get(i)) && out.last().map_or(true, |&p| seq.get(p).is_prefix_of(seq.get(i)));
        if ok {
            out.push(i);
        }
        i += 1;
    }
    out
}

#[test]
fn jordan_worked_example() {
    // x_j ≤ x_i iff the exponent of x_j is at least that of x_i.
    let q = jordan();
    let poset = PathPoset::new(&q, Vertex::Core(0)).unwrap();
    let pre: Vec<Path> = [3, 1, 4, 1].iter().map(|&e| power(&q, e)).collect();
    let seq = PeriodicPathSequence::new(pre.clone(), vec![power(&q, 1), power(&q, 5)]).unwrap();
    let out = poset.nu_extract(&seq, 3).unwrap();
    let idx: Vec<usize> = out.iter().map(|(i, _)| *i).collect();
    let exps: Vec<usize> = out.iter().map(|(_, p)| p.len()).collect();
    assert_eq!(idx, window_oracle(&seq, 3));
    // The sequence reads l³ l l⁴ l | l l⁵ l l⁵ …, so l⁵ first appears at 5.
    assert_eq!(idx, [0, 2, 5]);
    assert_eq!(exps, [3, 4, 5]);

    let swapped = PeriodicPathSequence::new(pre, vec![power(&q, 5), power(&q, 1)]).unwrap();
    let out = poset.nu_extract(&swapped, 3).unwrap();
    let idx: Vec<usize> = out.iter().map(|(i, _)| *i).collect();
    assert_eq!(idx, [0, 2, 4]);
    assert_eq!(idx, window_oracle(&swapped, 3));
}

fn noetherian_bases() -> Vec<(Quiver, Vertex)> {
    let mut out = Vec::new();
    for q in small_quivers(3, 4).into_iter().chain([jordan(), a2(), kronecker(), ray_simple()]) {
        for x in q.vertices() {
            if is_left_noetherian_at(&q, x).unwrap().verdict {
                out.push((q.clone(), x));
            }
        }
    }
    out
}

fn walk(q: &Quiver, x: Vertex, choices: &[usize]) -> Path {
    let mut p = Path::trivial(x);
    for &c in choices {
        let out = q.out_arrows(p.target());
        if out.is_empty() {
            break;
        }
        p = p.then(q, out[c % out.len()]).unwrap();
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn nu_is_increasing_and_descending(
        pick in any::<prop::sample::Index>(),
        preamble in prop::collection::vec(prop::collection::vec(0usize..4, 0..6), 0..5),
        period in prop::collection::vec(prop::collection::vec(0usize..4, 0..6), 1..4),
        count in 1usize..6,
    ) {
        let bases = noetherian_bases();
        let (q, x) = &bases[pick.index(bases.len())];
        let seq = PeriodicPathSequence::new(
            preamble.iter().map(|c| walk(q, *x, c)).collect(),
            period.iter().map(|c| walk(q, *x, c)).collect(),
        ).unwrap();
        let poset = PathPoset::new(q, *x).unwrap();
        let out = poset.nu_extract(&seq, count).unwrap();
        prop_assert_eq!(out.len(), count);
        for w in out.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
            prop_assert!(poset.leq(&w[1].1, &w[0].1).unwrap());
        }
        for (i, p) in &out {
            prop_assert_eq!(seq.get(*i), p);
        }
        let idx: Vec<usize> = out.iter().map(|(i, _)| *i).collect();
        prop_assert_eq!(idx, window_oracle(&seq, count));
    }
}
