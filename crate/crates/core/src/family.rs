//! Exhaustive families of small ray-free quivers.
//!
//! A quiver on `n` vertices with `k` arrows is a multiset of `k` ordered
//! vertex pairs. Arrows are interchangeable, so listing multisets covers
//! every labelled arrow structure once; vertex relabelings are factored out
//! by keeping only the lexicographically least multiset in each orbit.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::quiver::{Quiver, QuiverBuilder};

/// Every quiver with `1..=max_vertices` vertices and at most `max_arrows`
/// arrows, one per isomorphism class. Vertices are `v0, v1, …` and arrows
/// `a0, a1, …` in the order of their (source, target) pairs.
pub fn small_quivers(max_vertices: usize, max_arrows: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let perms = permutations(n);
        let pairs = n * n;
        let mut multiset = Vec::with_capacity(max_arrows);
        for k in 0..=max_arrows {
            multiset.clear();
            visit_multisets(pairs, k, 0, &mut multiset, &mut |ms| {
                if is_canonical(ms, n, &perms) {
                    out.push(build(n, ms));
                }
            });
        }
    }
    out
}

fn visit_multisets(pairs: usize, k: usize, from: usize, ms: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if ms.len() == k {
        f(ms);
        return;
    }
    for p in from..pairs {
        ms.push(p);
        visit_multisets(pairs, k, p, ms, f);
        ms.pop();
    }
}

fn is_canonical(ms: &[usize], n: usize, perms: &[Vec<usize>]) -> bool {
    let mut image = Vec::with_capacity(ms.len());
    for perm in perms {
        image.clear();
        image.extend(ms.iter().map(|&p| perm[p / n] * n + perm[p % n]));
        image.sort_unstable();
        if image.as_slice() < ms {
            return false;
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut alloc::vec![false; n], &mut out);
    out
}

fn build(n: usize, ms: &[usize]) -> Quiver {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut b = QuiverBuilder::new();
    for v in &names {
        b.vertex(v).expect("fresh vertex");
    }
    for (i, &p) in ms.iter().enumerate() {
        b.arrow(&format!("a{i}"), &names[p / n], &names[p % n])
            .expect("declared endpoints");
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_hand_enumeration() {
        // One vertex: k loops for k = 0..=3.
        assert_eq!(small_quivers(1, 3).len(), 4);
        // Two vertices, at most one arrow: empty, loop, edge (plus the
        // one-vertex quivers: empty and a loop).
        assert_eq!(small_quivers(2, 1).len(), 2 + 3);
    }

    #[test]
    fn two_vertices_two_arrows() {
        // Orbits of 2-multisets over {00,01,10,11} under swapping vertices:
        // 10 multisets, 2 of them fixed by the swap ({01,10} and
        // {00,11}), so (10 + 2) / 2 = 6 classes with exactly two arrows.
        let all = small_quivers(2, 2);
        let two = all
            .iter()
            .filter(|q| q.vertex_count() == 2 && q.arrow_count() == 2)
            .count();
        assert_eq!(two, 6);
    }
}
