//! Finite-dimensional representations of ray-free quivers over a prime
//! field. The map at an arrow `α` has shape `dim t(α) × dim s(α)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::quiver::{Arrow, Quiver};
use crate::subspace::{all_subspaces, Subspace};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    /// `dims` per declared vertex and `maps` per declared arrow, both in id
    /// order.
    pub fn new(quiver: Quiver, field: PrimeField, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if quiver.has_rays() {
            return Err(Error::RaysPresent("representations"));
        }
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrow_count() {
            return Err(Error::ShapeMismatch("one dimension per vertex and one map per arrow"));
        }
        for (a, m) in quiver.arrow_decls().iter().zip(&maps) {
            if m.field() != field || m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::ShapeMismatch("arrow map does not fit its endpoints"));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Quiver, field: PrimeField) -> Result<Self> {
        let dims = vec![0; quiver.vertex_count()];
        let maps = vec![Matrix::zeros(field, 0, 0); quiver.arrow_count()];
        Self::new(quiver, field, dims, maps)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, a: Arrow) -> &Matrix {
        match a {
            Arrow::Core(i) => &self.maps[i],
            Arrow::Ray { .. } => unreachable!("representations are ray-free"),
        }
    }

    /// `M(φ)` for a path given by its arrows in application order, from a
    /// vertex of dimension `start_dim`.
    pub fn path_map(&self, start: usize, arrows: &[Arrow]) -> Matrix {
        arrows.iter().fold(Matrix::identity(self.field, self.dims[start]), |acc, &a| {
            self.map(a).mul(&acc).expect("shapes checked at construction")
        })
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.compatible(other)?;
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| block_diagonal(a, b))
            .collect();
        Representation::new(self.quiver.clone(), self.field, dims, maps)
    }

    fn compatible(&self, other: &Representation) -> Result<()> {
        if self.quiver != other.quiver || self.field != other.field {
            return Err(Error::ShapeMismatch("representations of different quivers or fields"));
        }
        Ok(())
    }

    pub fn is_subrepresentation(&self, u: &Subrepresentation) -> bool {
        u.spaces.len() == self.dims.len()
            && u.spaces.iter().zip(&self.dims).all(|(s, &d)| s.ambient() == d)
            && self.quiver.arrow_decls().iter().zip(&self.maps).all(|(a, m)| {
                u.spaces[a.source]
                    .image(m)
                    .is_ok_and(|img| img.is_subspace_of(&u.spaces[a.target]))
            })
    }
}

pub(crate) fn block_diagonal(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j));
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j));
        }
    }
    m
}

/// A subspace at each vertex, closed under the arrow maps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subrepresentation {
    pub spaces: Vec<Subspace>,
}

impl Subrepresentation {
    pub fn zero(m: &Representation) -> Self {
        Subrepresentation {
            spaces: m.dims.iter().map(|&d| Subspace::zero(m.field, d)).collect(),
        }
    }

    pub fn full(m: &Representation) -> Self {
        Subrepresentation {
            spaces: m.dims.iter().map(|&d| Subspace::full(m.field, d)).collect(),
        }
    }

    pub fn is_subrep_of(&self, other: &Subrepresentation) -> bool {
        self.spaces.len() == other.spaces.len()
            && self.spaces.iter().zip(&other.spaces).all(|(a, b)| a.is_subspace_of(b))
    }

    pub fn meet(&self, other: &Subrepresentation) -> Result<Subrepresentation> {
        let spaces = self
            .spaces
            .iter()
            .zip(&other.spaces)
            .map(|(a, b)| a.intersect(b))
            .collect::<Result<_>>()?;
        Ok(Subrepresentation { spaces })
    }

    pub fn join(&self, other: &Subrepresentation) -> Result<Subrepresentation> {
        let spaces = self
            .spaces
            .iter()
            .zip(&other.spaces)
            .map(|(a, b)| a.sum(b))
            .collect::<Result<_>>()?;
        Ok(Subrepresentation { spaces })
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }
}

/// Largest total dimension [`enumerate_subrepresentations`] accepts.
pub fn enumeration_limit(field: PrimeField) -> usize {
    if field.p() == 2 {
        10
    } else {
        6
    }
}

/// Every subrepresentation, each once, in lexicographic order of the
/// subspace tuples (subspaces ordered as by [`all_subspaces`]).
pub fn enumerate_subrepresentations(m: &Representation) -> Result<Vec<Subrepresentation>> {
    let limit = enumeration_limit(m.field);
    let total = m.total_dim();
    if total > limit {
        return Err(Error::DimensionGuard { total, limit });
    }
    let candidates: Vec<Vec<Subspace>> = m.dims.iter().map(|&d| all_subspaces(m.field, d)).collect();
    let n = m.dims.len();
    // Arrows to check once both endpoints are fixed, keyed by the later one.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, a) in m.quiver.arrow_decls().iter().enumerate() {
        checks[a.source.max(a.target)].push(i);
    }
    let mut out = Vec::new();
    let mut cur: Vec<Subspace> = Vec::with_capacity(n);
    extend(m, &candidates, &checks, &mut cur, &mut out);
    Ok(out)
}

fn extend(
    m: &Representation,
    candidates: &[Vec<Subspace>],
    checks: &[Vec<usize>],
    cur: &mut Vec<Subspace>,
    out: &mut Vec<Subrepresentation>,
) {
    let v = cur.len();
    if v == candidates.len() {
        out.push(Subrepresentation { spaces: cur.clone() });
        return;
    }
    for s in &candidates[v] {
        cur.push(s.clone());
        let closed = checks[v].iter().all(|&i| {
            let a = &m.quiver.arrow_decls()[i];
            cur[a.source]
                .image(&m.maps[i])
                .is_ok_and(|img| img.is_subspace_of(&cur[a.target]))
        });
        if closed {
            extend(m, candidates, checks, cur, out);
        }
        cur.pop();
    }
}

/// A morphism of representations: one matrix `dim N(v) × dim M(v)` per
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Morphism {
    pub fn identity(m: &Representation) -> Self {
        Morphism {
            maps: m.dims.iter().map(|&d| Matrix::identity(m.field, d)).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        let maps = self
            .maps
            .iter()
            .zip(&first.maps)
            .map(|(g, f)| g.mul(f))
            .collect::<Result<_>>()?;
        Ok(Morphism { maps })
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(g, f)| g.add(f))
            .collect::<Result<_>>()?;
        Ok(Morphism { maps })
    }

    pub fn scale(&self, c: u8) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn is_morphism(&self, m: &Representation, n: &Representation) -> bool {
        self.maps.len() == m.dims.len()
            && self
                .maps
                .iter()
                .enumerate()
                .all(|(v, f)| f.rows() == n.dims[v] && f.cols() == m.dims[v])
            && m.quiver.arrow_decls().iter().enumerate().all(|(i, a)| {
                let lhs = self.maps[a.target].mul(&m.maps[i]);
                let rhs = n.maps[i].mul(&self.maps[a.source]);
                matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
            })
    }
}

/// A basis of `Hom(M, N)`: solutions of `f_t·M(α) = N(α)·f_s` for every
/// arrow `α: s → t`.
pub fn hom_representations(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.compatible(n)?;
    let f = m.field;
    let mut offset = Vec::with_capacity(m.dims.len());
    let mut vars = 0;
    for v in 0..m.dims.len() {
        offset.push(vars);
        vars += n.dims[v] * m.dims[v];
    }
    // Variable for entry (r, c) of f_v.
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (i, a) in m.quiver.arrow_decls().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (&m.maps[i], &n.maps[i]);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut eq = vec![0u8; vars];
                // (f_t · M(α))[r][c] = Σ_k f_t[r][k] M(α)[k][c]
                for k in 0..m.dims[t] {
                    let idx = var(t, r, k);
                    eq[idx] = f.add(eq[idx], ma.get(k, c));
                }
                // − (N(α) · f_s)[r][c] = − Σ_k N(α)[r][k] f_s[k][c]
                for k in 0..n.dims[s] {
                    let idx = var(s, k, c);
                    eq[idx] = f.sub(eq[idx], na.get(r, k));
                }
                rows.push(eq);
            }
        }
    }
    let system = Matrix::from_row_vectors(f, vars, &rows);
    let solutions = system.nullspace();
    Ok(solutions
        .into_iter()
        .map(|sol| Morphism {
            maps: (0..m.dims.len())
                .map(|v| {
                    let mut x = Matrix::zeros(f, n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            x.set(r, c, sol[var(v, r, c)]);
                        }
                    }
                    x
                })
                .collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_parts(&["x", "y"], &[("a", "x", "y")], &[]).unwrap()
    }

    fn rep(q: Quiver, f: PrimeField, dims: &[usize], maps: &[&[i64]]) -> Representation {
        let maps = q
            .arrow_decls()
            .iter()
            .zip(maps)
            .map(|(a, e)| Matrix::from_rows(f, dims[a.target], dims[a.source], e).unwrap())
            .collect();
        Representation::new(q, f, dims.to_vec(), maps).unwrap()
    }

    #[test]
    fn a2_hom_dimensions() {
        let f = PrimeField::F2;
        let m = rep(a2(), f, &[1, 1], &[&[1]]);
        let n = rep(a2(), f, &[0, 1], &[&[]]);
        assert_eq!(hom_representations(&m, &n).unwrap().len(), 0);
        let h = hom_representations(&n, &m).unwrap();
        assert_eq!(h.len(), 1);
        assert!(h[0].is_morphism(&n, &m));
        assert_eq!(hom_representations(&m, &m).unwrap().len(), 1);
    }

    #[test]
    fn subrep_counts() {
        let f = PrimeField::F2;
        let m = rep(a2(), f, &[1, 1], &[&[1]]);
        assert_eq!(enumerate_subrepresentations(&m).unwrap().len(), 3);
        let z = Representation::zero(a2(), f).unwrap();
        assert_eq!(enumerate_subrepresentations(&z).unwrap().len(), 1);
        let k = Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap();
        let m = rep(k, f, &[1, 2], &[&[1, 0], &[0, 1]]);
        assert_eq!(enumerate_subrepresentations(&m).unwrap().len(), 6);
    }

    #[test]
    fn guard_and_shapes() {
        let f = PrimeField::F3;
        let big = rep(a2(), f, &[4, 3], &[&[0; 12]]);
        assert_eq!(
            enumerate_subrepresentations(&big).unwrap_err(),
            Error::DimensionGuard { total: 7, limit: 6 }
        );
        let bad = Representation::new(a2(), f, vec![1, 1], vec![Matrix::zeros(f, 2, 1)]);
        assert!(bad.is_err());
    }

    #[test]
    fn lattice_closed() {
        let f = PrimeField::F2;
        let k = Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap();
        let m = rep(k, f, &[1, 2], &[&[1, 0], &[0, 1]]);
        let subs = enumerate_subrepresentations(&m).unwrap();
        for u in &subs {
            for v in &subs {
                assert!(subs.contains(&u.meet(v).unwrap()));
                assert!(subs.contains(&u.join(v).unwrap()));
            }
        }
    }
}
