//! Representation-theoretic laws, checked exhaustively on small inputs and
//! on seeded random samples.

mod common;

use common::*;
use qnoeth_core::family::small_quivers;
use qnoeth_core::free::FreeRepresentation;
use qnoeth_core::groebner::{ArrowRank, GroebnerOrder};
use qnoeth_core::poset::{IdealRelation, PathPoset};
use qnoeth_core::rep::{enumerate_subrepresentations, hom_representations, Representation, Subrepresentation};
use qnoeth_core::{PrimeField, Quiver, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Subrepresentation count by listing vector subsets: a subspace is a set of
/// vectors containing 0 and closed under addition and scaling.
fn brute_force_count(m: &Representation) -> usize {
    let f = m.field();
    let p = f.p() as usize;
    let vectors = |d: usize| -> Vec<Vec<u8>> {
        (0..p.pow(d as u32))
            .map(|mut k| {
                (0..d)
                    .map(|_| {
                        let e = (k % p) as u8;
                        k /= p;
                        e
                    })
                    .collect()
            })
            .collect()
    };
    let subspaces = |d: usize| -> Vec<Vec<Vec<u8>>> {
        let vs = vectors(d);
        assert!(vs.len() <= 16);
        (0u32..1 << vs.len())
            .map(|mask| (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect::<Vec<_>>())
            .filter(|set: &Vec<Vec<u8>>| {
                set.contains(&vec![0; d])
                    && set.iter().all(|a| {
                        set.iter().all(|b| set.contains(&a.iter().zip(b).map(|(x, y)| f.add(*x, *y)).collect()))
                            && f.elements().all(|c| set.contains(&a.iter().map(|x| f.mul(*x, c)).collect()))
                    })
            })
            .collect()
    };
    let per_vertex: Vec<Vec<Vec<Vec<u8>>>> = m.dims().iter().map(|&d| subspaces(d)).collect();
    let mut count = 0;
    let mut idx = vec![0usize; per_vertex.len()];
    loop {
        let closed = m.quiver().arrow_decls().iter().enumerate().all(|(i, a)| {
            per_vertex[a.source][idx[a.source]]
                .iter()
                .all(|v| per_vertex[a.target][idx[a.target]].contains(&m.maps()[i].apply(v)))
        });
        if closed {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return count;
            }
            idx[k] += 1;
            if idx[k] < per_vertex[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn free(q: &Quiver, x: &str, f: PrimeField, m: usize) -> FreeRepresentation {
    FreeRepresentation::new(q, q.vertex(x).unwrap(), f, m).unwrap()
}

#[test]
fn subrepresentation_counts_agree_with_brute_force() {
    let f = PrimeField::F2;
    let cases = [
        (free(&kronecker(), "x", f, 1).representation().clone(), 6),
        (free(&a2(), "x", f, 1).representation().clone(), 3),
        (Representation::zero(a2(), f).unwrap(), 1),
    ];
    for (m, expected) in cases {
        let start = Instant::now();
        assert_eq!(brute_force_count(&m), expected);
        assert_eq!(enumerate_subrepresentations(&m).unwrap().len(), expected);
        assert!(start.elapsed().as_secs_f64() < 1.0);
    }
}

#[test]
fn enumeration_agrees_with_brute_force_on_random_reps() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let q = [a2(), kronecker(), cycle_branch()][rng.gen_range(0..3)].clone();
        let f = [PrimeField::F2, PrimeField::F3][rng.gen_range(0..2)];
        let max = if f.p() == 2 { 4 } else { 2 };
        let dims: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..=max)).collect();
        let m = random_rep(&mut rng, &q, f, &dims);
        let subs = enumerate_subrepresentations(&m).unwrap();
        assert_eq!(subs.len(), brute_force_count(&m));
        assert!(subs.iter().all(|u| m.is_subrepresentation(u)));
        assert!(subs.windows(2).all(|w| w[0] != w[1]));
    }
}

#[test]
fn ideal_embedding_is_an_order_embedding() {
    let f = PrimeField::F2;
    let start = Instant::now();
    for q in small_quivers(3, 4) {
        for x in q.vertices() {
            if !q.is_left_finite_from(x) {
                continue;
            }
            let fr = FreeRepresentation::new(&q, x, f, 1).unwrap();
            let poset = PathPoset::new(&q, x).unwrap();
            let ideals = poset.finite_ideals().unwrap();
            let subs = enumerate_subrepresentations(fr.representation()).unwrap();
            let images: Vec<Subrepresentation> = ideals.iter().map(|i| fr.ideal_embedding(i).unwrap()).collect();
            for (i, a) in ideals.iter().enumerate() {
                assert!(subs.contains(&images[i]));
                for (j, b) in ideals.iter().enumerate() {
                    let rel = a.compare(b).unwrap();
                    assert_eq!(rel == IdealRelation::Equal, images[i] == images[j], "{q:?}");
                    let le = matches!(rel, IdealRelation::Equal | IdealRelation::Contained);
                    assert_eq!(le, images[i].is_subrep_of(&images[j]), "{q:?}");
                }
            }
        }
    }
    assert!(start.elapsed().as_secs() < 120);
}

fn corpus_free_reps() -> Vec<(Quiver, FreeRepresentation)> {
    let mut out = Vec::new();
    for q in [a2(), kronecker()] {
        for m in [1, 2] {
            for f in [PrimeField::F2, PrimeField::F3] {
                let fr = free(&q, "x", f, m);
                if fr.representation().total_dim() <= qnoeth_core::rep::enumeration_limit(f) {
                    out.push((q.clone(), fr));
                }
            }
        }
    }
    out
}

#[test]
fn leading_submodules_are_monotone() {
    for (q, fr) in corpus_free_reps() {
        let x = fr.base();
        for rank in rankings(&q) {
            let ord = GroebnerOrder::new(rank);
            let paths = q.enumerate_paths(x, q.vertex_count(), None);
            for u in enumerate_subrepresentations(fr.representation()).unwrap() {
                for phi in &paths {
                    for psi in &paths {
                        // φ ≤ ψ: ψ is a prefix of φ.
                        if psi.is_prefix_of(phi) {
                            let up = fr.leading_submodule(&ord, &u, psi).unwrap();
                            let uf = fr.leading_submodule(&ord, &u, phi).unwrap();
                            assert!(up.is_subspace_of(&uf), "{q:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn leading_submodules_separate() {
    for (q, fr) in corpus_free_reps() {
        let x = fr.base();
        let ord = GroebnerOrder::declaration(&q);
        let paths = q.enumerate_paths(x, q.vertex_count(), None);
        let subs = enumerate_subrepresentations(fr.representation()).unwrap();
        for u in &subs {
            for v in &subs {
                if u == v || !u.is_subrep_of(v) {
                    continue;
                }
                let separated = paths.iter().any(|phi| {
                    let a = fr.leading_submodule(&ord, u, phi).unwrap();
                    let b = fr.leading_submodule(&ord, v, phi).unwrap();
                    a.is_subspace_of(&b) && a != b
                });
                assert!(separated, "{q:?}: {u:?} ⊊ {v:?}");
            }
        }
    }
}

fn rankings(q: &Quiver) -> Vec<ArrowRank> {
    let names: Vec<&str> = q.arrow_decls().iter().map(|a| a.name.as_str()).collect();
    let mut out = vec![ArrowRank::from_names(q, &names).unwrap()];
    let rev: Vec<&str> = names.iter().rev().copied().collect();
    out.push(ArrowRank::from_names(q, &rev).unwrap());
    out
}

#[test]
fn adjunction_dimension_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let family: Vec<(Quiver, Vertex)> = small_quivers(3, 3)
        .into_iter()
        .flat_map(|q| q.vertices().map(|x| (q.clone(), x)).collect::<Vec<_>>())
        .filter(|(q, x)| q.is_left_finite_from(*x))
        .collect();
    let start = Instant::now();
    for _ in 0..100 {
        let (q, x) = family[rng.gen_range(0..family.len())].clone();
        let f = [PrimeField::F2, PrimeField::F3][rng.gen_range(0..2)];
        let dims = random_dims(&mut rng, q.vertex_count(), 6);
        let m = random_rep(&mut rng, &q, f, &dims);
        let n = rng.gen_range(1..=2);
        let fr = FreeRepresentation::new(&q, x, f, n).unwrap();
        let hom = hom_representations(fr.representation(), &m).unwrap();
        let Vertex::Core(xi) = x else { unreachable!() };
        assert_eq!(hom.len(), n * m.dim(xi), "{q:?} at {x:?}, dims {dims:?}");
        assert!(hom.iter().all(|h| h.is_morphism(fr.representation(), &m)));
    }
    assert!(start.elapsed().as_secs() < 30);
}

#[test]
fn hom_composition_is_bilinear_and_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = PrimeField::F3;
    for _ in 0..20 {
        let q = [a2(), kronecker()][rng.gen_range(0..2)].clone();
        let reps: Vec<Representation> = (0..3)
            .map(|_| {
                let dims = random_dims(&mut rng, 2, 3);
                random_rep(&mut rng, &q, f, &dims)
            })
            .collect();
        let h01 = hom_representations(&reps[0], &reps[1]).unwrap();
        let h12 = hom_representations(&reps[1], &reps[2]).unwrap();
        let h22 = hom_representations(&reps[2], &reps[2]).unwrap();
        for a in &h01 {
            for b in &h12 {
                let ba = b.compose(a).unwrap();
                assert!(ba.is_morphism(&reps[0], &reps[2]));
                for c in &h22 {
                    assert_eq!(c.compose(&ba).unwrap(), c.compose(b).unwrap().compose(a).unwrap());
                }
                for b2 in &h12 {
                    let lhs = b.add(b2).unwrap().compose(a).unwrap();
                    let rhs = b.compose(a).unwrap().add(&b2.compose(a).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
                assert_eq!(b.scale(2).compose(a).unwrap(), ba.scale(2));
            }
        }
    }
}
