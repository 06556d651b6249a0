//! Subspaces of `F_p^n`, stored as reduced row-echelon bases so that equal
//! subspaces are equal values.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    basis: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self::coordinate(field, ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// The span of the listed coordinate vectors.
    pub fn coordinate(field: PrimeField, ambient: usize, coords: &[usize]) -> Self {
        let vs: Vec<Vec<u8>> = coords
            .iter()
            .map(|&c| {
                let mut v = vec![0; ambient];
                v[c] = 1;
                v
            })
            .collect();
        Self::span(field, ambient, &vs)
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u8>]) -> Self {
        let m = Matrix::from_row_vectors(field, ambient, vectors);
        let (r, pivots) = m.rref();
        Subspace {
            field,
            ambient,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Matrix::from_row_vectors(self.field, self.ambient, &vs).rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let vs: Vec<Vec<u8>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::span(self.field, self.ambient, &vs))
    }

    /// `U ∩ V` from the kernel of `[U; -V]ᵀ`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let f = self.field;
        let (k, l) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(f, self.ambient, k + l);
        for (j, v) in self.basis.iter().enumerate() {
            for (i, &e) in v.iter().enumerate() {
                m.set(i, j, e);
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for (i, &e) in v.iter().enumerate() {
                m.set(i, k + j, f.neg(e));
            }
        }
        let vs: Vec<Vec<u8>> = m
            .nullspace()
            .iter()
            .map(|c| {
                let mut v = vec![0u8; self.ambient];
                for (j, b) in self.basis.iter().enumerate() {
                    for (i, &e) in b.iter().enumerate() {
                        v[i] = f.add(v[i], f.mul(c[j], e));
                    }
                }
                v
            })
            .collect();
        Ok(Self::span(f, self.ambient, &vs))
    }

    /// Image under a linear map `F^ambient → F^rows`.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        if map.cols() != self.ambient {
            return Err(Error::ShapeMismatch("subspace image"));
        }
        let vs: Vec<Vec<u8>> = self.basis.iter().map(|v| map.apply(v)).collect();
        Ok(Self::span(self.field, map.rows(), &vs))
    }

    /// Image under the projection onto the listed coordinates, in order.
    pub fn project(&self, coords: &[usize]) -> Subspace {
        let vs: Vec<Vec<u8>> = self
            .basis
            .iter()
            .map(|v| coords.iter().map(|&c| v[c]).collect())
            .collect();
        Self::span(self.field, coords.len(), &vs)
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::ShapeMismatch("subspaces of different spaces"));
        }
        Ok(())
    }
}

/// Every subspace of `F_p^n`, by dimension, then pivot set, then free
/// entries. Each RREF basis is produced exactly once.
pub fn all_subspaces(field: PrimeField, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        let mut pivots = Vec::with_capacity(k);
        choose(n, k, 0, &mut pivots, &mut |pivots| {
            // Free entries: row i, column c > pivots[i] with c not a pivot.
            let slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
                .collect();
            let mut vals = vec![0u8; slots.len()];
            loop {
                let mut basis = vec![vec![0u8; n]; k];
                for (i, &p) in pivots.iter().enumerate() {
                    basis[i][p] = 1;
                }
                for (&(i, c), &v) in slots.iter().zip(&vals) {
                    basis[i][c] = v;
                }
                out.push(Subspace {
                    field,
                    ambient: n,
                    basis,
                });
                if !increment(&mut vals, field.p()) {
                    break;
                }
            }
        });
    }
    out
}

fn choose(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in from..n {
        cur.push(i);
        choose(n, k, i + 1, cur, f);
        cur.pop();
    }
}

/// Odometer step over `F_p^len`; false after the last vector.
pub(crate) fn increment(v: &mut [u8], p: u8) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts() {
        // Gaussian binomials: F2^2 has 1 + 3 + 1, F3^2 has 1 + 4 + 1,
        // F2^3 has 1 + 7 + 7 + 1.
        assert_eq!(all_subspaces(PrimeField::F2, 2).len(), 5);
        assert_eq!(all_subspaces(PrimeField::F3, 2).len(), 6);
        assert_eq!(all_subspaces(PrimeField::F2, 3).len(), 16);
        assert_eq!(all_subspaces(PrimeField::F2, 0).len(), 1);
    }

    #[test]
    fn canonical_and_distinct() {
        let all = all_subspaces(PrimeField::F3, 3);
        for s in &all {
            assert_eq!(&Subspace::span(s.field(), 3, s.basis()), s);
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn meet_and_join() {
        let f = PrimeField::F2;
        let a = Subspace::span(f, 3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let b = Subspace::span(f, 3, &[vec![1, 0, 0], vec![0, 1, 1]]);
        let m = a.intersect(&b).unwrap();
        assert_eq!(m, Subspace::span(f, 3, &[vec![1, 1, 1]]));
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(f, 3));
        assert!(m.is_subspace_of(&a) && m.is_subspace_of(&b));
        assert_eq!(a.project(&[2]), Subspace::full(f, 1));
    }
}
