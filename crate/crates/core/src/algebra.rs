//! The path algebra `A[Q]` over a prime field.
//!
//! Multiplication: for basis paths, `φ·ψ = φ∘ψ` ("apply ψ, then φ") when
//! `s(φ) = t(ψ)`, and `0` otherwise. The opposite convention gives the
//! opposite algebra. On a quiver with an oriented cycle only a length
//! window `≤ L` is materialised; products that leave the window are
//! reported as [`Error::Overflow`], never dropped.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;
use crate::free::FreeRepresentation;
use crate::matrix::Matrix;
use crate::noetherian::finite_quiver_criterion;
use crate::path::Path;
use crate::quiver::{Quiver, Vertex};
use crate::rep::{enumerate_subrepresentations, Representation};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAlgebra {
    quiver: Quiver,
    field: PrimeField,
    basis: Vec<Path>,
    position: BTreeMap<Path, usize>,
    truncation: Option<usize>,
}

/// Coordinates over the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    pub coeffs: Vec<u8>,
}

impl PathAlgebra {
    /// Exact basis on acyclic quivers (the truncation is ignored); all paths
    /// of length `≤ L` otherwise.
    pub fn build(q: &Quiver, field: PrimeField, truncation: Option<usize>) -> Result<Self> {
        if q.has_rays() {
            return Err(Error::RaysPresent("path algebras"));
        }
        let (bound, truncation) = if q.is_acyclic() {
            (q.vertex_count(), None)
        } else {
            match truncation {
                None => return Err(Error::CyclicWithoutTruncation),
                Some(0) => return Err(Error::ZeroTruncation),
                Some(l) => (l, Some(l)),
            }
        };
        let mut basis: Vec<Path> = q.vertices().flat_map(|x| q.enumerate_paths(x, bound, None)).collect();
        basis.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.shortlex_cmp(b)));
        let position = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(PathAlgebra {
            quiver: q.clone(),
            field,
            basis,
            position,
            truncation,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation.is_some()
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.position.get(p).copied()
    }

    pub fn zero(&self) -> Element {
        Element {
            coeffs: vec![0; self.dim()],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coeffs[i] = 1;
        e
    }

    pub fn idempotent(&self, x: Vertex) -> Element {
        self.basis_element(self.position[&Path::trivial(x)])
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.quiver.vertices().map(|x| self.idempotent(x)).collect()
    }

    /// `Σ_x e_x`.
    pub fn identity(&self) -> Element {
        let mut e = self.zero();
        for x in self.quiver.vertices() {
            e.coeffs[self.position[&Path::trivial(x)]] = 1;
        }
        e
    }

    pub fn add(&self, u: &Element, v: &Element) -> Element {
        Element {
            coeffs: u.coeffs.iter().zip(&v.coeffs).map(|(&a, &b)| self.field.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, u: &Element, c: u8) -> Element {
        Element {
            coeffs: u.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(),
        }
    }

    /// `b_i · b_j` for basis paths: `None` is zero.
    pub fn basis_product(&self, i: usize, j: usize) -> Result<Option<usize>> {
        let (phi, psi) = (&self.basis[i], &self.basis[j]);
        let Some(p) = psi.then_path(phi) else {
            return Ok(None);
        };
        match self.position.get(&p) {
            Some(&k) => Ok(Some(k)),
            None => Err(Error::Overflow {
                length: p.len(),
                truncation: self.truncation.unwrap_or(0),
            }),
        }
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        let f = self.field;
        let mut out = self.zero();
        for (i, &a) in u.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                if let Some(k) = self.basis_product(i, j)? {
                    out.coeffs[k] = f.add(out.coeffs[k], f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Basis path names in composition form (`e_x`, `b·a`).
    pub fn basis_names(&self) -> Vec<alloc::string::String> {
        self.basis.iter().map(|p| self.quiver.composition_string(p)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraNoetherianReport {
    pub verdict: bool,
    /// For acyclic quivers: the number of left ideals, counted as
    /// subrepresentations of the regular representation, when that fits the
    /// enumeration guard.
    pub left_ideals: Option<usize>,
}

/// Left noetherian iff there are finitely many arrows and every vertex on
/// an oriented cycle has exactly one outgoing arrow.
pub fn algebra_noetherian(q: &Quiver, field: PrimeField) -> Result<AlgebraNoetherianReport> {
    let verdict = finite_quiver_criterion(q)?;
    let left_ideals = if q.is_acyclic() {
        let reg = regular_representation(q, field)?;
        match enumerate_subrepresentations(&reg) {
            Ok(subs) => Some(subs.len()),
            Err(Error::DimensionGuard { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(AlgebraNoetherianReport { verdict, left_ideals })
}

/// `⨁_x F[Q(x,−)]`, the algebra as a left module over itself.
pub fn regular_representation(q: &Quiver, field: PrimeField) -> Result<Representation> {
    let mut acc = Representation::zero(q.clone(), field)?;
    for x in q.vertices() {
        let free = FreeRepresentation::new(q, x, field, 1)?;
        acc = acc.direct_sum(free.representation())?;
    }
    Ok(acc)
}

/// The action of basis path `i` on `⨁_x M(x)`: `M(φ)` from the `s(φ)` block
/// to the `t(φ)` block, zero elsewhere.
pub fn action_matrix(alg: &PathAlgebra, m: &Representation, i: usize) -> Matrix {
    let offsets: Vec<usize> = m
        .dims()
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let total = m.total_dim();
    let p = &alg.basis[i];
    let (Vertex::Core(s), Vertex::Core(t)) = (p.start(), p.target()) else {
        unreachable!("ray-free")
    };
    let block = m.path_map(s, p.arrows());
    let mut out = Matrix::zeros(m.field(), total, total);
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            out.set(offsets[t] + r, offsets[s] + c, block.get(r, c));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleReport {
    pub module_dim: usize,
    /// Basis pairs `(u, v)` with `(uv)·m ≠ u·(v·m)` for some basis vector `m`.
    pub associativity_failures: Vec<(usize, usize)>,
    pub identity_acts_trivially: bool,
}

impl ModuleReport {
    pub fn passes(&self) -> bool {
        self.associativity_failures.is_empty() && self.identity_acts_trivially
    }
}

/// Turns `M` into the module `⨁_x M(x)` and checks the module axioms on all
/// basis pairs; checking on matrices covers every basis vector at once.
pub fn rep_module_correspondence(q: &Quiver, field: PrimeField, m: &Representation) -> Result<ModuleReport> {
    if m.quiver() != q || m.field() != field {
        return Err(Error::ShapeMismatch("representation of another quiver or field"));
    }
    let alg = PathAlgebra::build(q, field, None)?;
    let actions: Vec<Matrix> = (0..alg.dim()).map(|i| action_matrix(&alg, m, i)).collect();
    let total = m.total_dim();
    let mut failures = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = match alg.basis_product(i, j)? {
                Some(k) => actions[k].clone(),
                None => Matrix::zeros(field, total, total),
            };
            if lhs != actions[i].mul(&actions[j])? {
                failures.push((i, j));
            }
        }
    }
    let mut one = Matrix::zeros(field, total, total);
    for x in q.vertices() {
        one = one.add(&actions[alg.position[&Path::trivial(x)]])?;
    }
    Ok(ModuleReport {
        module_dim: total,
        associativity_failures: failures,
        identity_acts_trivially: one == Matrix::identity(field, total),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_parts(&["x", "y"], &[("a", "x", "y")], &[]).unwrap()
    }

    fn jordan() -> Quiver {
        Quiver::from_parts(&["x"], &[("l", "x", "x")], &[]).unwrap()
    }

    #[test]
    fn dimensions() {
        let f = PrimeField::F2;
        let alg = PathAlgebra::build(&a2(), f, None).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.basis_names(), ["e_x", "e_y", "a"]);
        let k = Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap();
        assert_eq!(PathAlgebra::build(&k, f, None).unwrap().dim(), 4);
        let j = PathAlgebra::build(&jordan(), f, Some(5)).unwrap();
        assert_eq!(j.dim(), 6);
        assert!(j.is_truncated());
        assert_eq!(PathAlgebra::build(&jordan(), f, None), Err(Error::CyclicWithoutTruncation));
    }

    #[test]
    fn a2_products() {
        let q = a2();
        let alg = PathAlgebra::build(&q, PrimeField::F2, None).unwrap();
        let a = alg.basis_element(alg.index_of(&q.path_by_names("x", &["a"]).unwrap()).unwrap());
        let ex = alg.idempotent(q.vertex("x").unwrap());
        assert_eq!(alg.multiply(&a, &ex).unwrap(), a);
        assert_eq!(alg.multiply(&ex, &a).unwrap(), alg.zero());
        let one = alg.identity();
        assert_eq!(alg.multiply(&one, &a).unwrap(), a);
        assert_eq!(alg.multiply(&a, &one).unwrap(), a);
    }

    #[test]
    fn truncated_overflow() {
        let q = jordan();
        let alg = PathAlgebra::build(&q, PrimeField::F3, Some(2)).unwrap();
        let l = alg.basis_element(alg.index_of(&q.path_by_names("x", &["l"]).unwrap()).unwrap());
        let l2 = alg.multiply(&l, &l).unwrap();
        assert_eq!(l2, alg.basis_element(alg.index_of(&q.path_by_names("x", &["l", "l"]).unwrap()).unwrap()));
        assert_eq!(
            alg.multiply(&l2, &l),
            Err(Error::Overflow {
                length: 3,
                truncation: 2
            })
        );
    }

    #[test]
    fn noetherian_verdicts() {
        let f = PrimeField::F2;
        assert!(algebra_noetherian(&jordan(), f).unwrap().verdict);
        let t = Quiver::from_parts(&["x"], &[("a", "x", "x"), ("b", "x", "x")], &[]).unwrap();
        assert!(!algebra_noetherian(&t, f).unwrap().verdict);
        let r = algebra_noetherian(&a2(), f).unwrap();
        assert!(r.verdict);
        // Regular rep of A2 is (F2 → F2) ⊕ (0 → F2).
        assert!(r.left_ideals.is_some());
    }

    #[test]
    fn a2_module() {
        let f = PrimeField::F2;
        let q = a2();
        let m = Representation::new(q.clone(), f, vec![1, 1], vec![Matrix::identity(f, 1)]).unwrap();
        let r = rep_module_correspondence(&q, f, &m).unwrap();
        assert_eq!(r.module_dim, 2);
        assert!(r.passes());
        let z = Representation::zero(q.clone(), f).unwrap();
        let r = rep_module_correspondence(&q, f, &z).unwrap();
        assert_eq!(r.module_dim, 0);
        assert!(r.passes());
    }
}
