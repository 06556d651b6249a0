//! The free representation `M[Q(x,−)]` on an `m`-dimensional space `M`,
//! its leading submodules `U_φ`, and the embedding of path ideals.
//!
//! The space at `y` has basis `e_{ψ,k}` for `ψ ∈ Q(x,y)` (shortlex order)
//! and `0 ≤ k < m`, at coordinate `index(ψ)·m + k`. An arrow `α` sends
//! `e_{ψ,k}` to `e_{αψ,k}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::PrimeField;
use crate::groebner::PathOrder;
use crate::matrix::Matrix;
use crate::path::Path;
use crate::poset::PathIdeal;
use crate::quiver::{Quiver, Vertex};
use crate::rep::{Representation, Subrepresentation};
use crate::subspace::Subspace;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeRepresentation {
    rep: Representation,
    base: Vertex,
    generator_dim: usize,
    /// Basis paths at each vertex.
    index: Vec<Vec<Path>>,
    position: BTreeMap<Path, usize>,
}

impl FreeRepresentation {
    pub fn new(q: &Quiver, x: Vertex, field: PrimeField, m: usize) -> Result<Self> {
        if q.has_rays() {
            return Err(Error::RaysPresent("free representations"));
        }
        let xi = q.core_index(x)?;
        if m == 0 {
            return Err(Error::ShapeMismatch("generator dimension must be at least 1"));
        }
        let paths = q
            .all_paths_from(x)
            .ok_or_else(|| Error::NotLeftFinite(q.vertex_name(x)))?;
        let mut index = alloc::vec![Vec::new(); q.vertex_count()];
        let mut position = BTreeMap::new();
        for p in paths {
            let Vertex::Core(t) = p.target() else { unreachable!("ray-free") };
            position.insert(p.clone(), index[t].len());
            index[t].push(p);
        }
        let dims: Vec<usize> = index.iter().map(|ps| ps.len() * m).collect();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for (i, a) in q.arrow_decls().iter().enumerate() {
            let mut mat = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for (j, psi) in index[a.source].iter().enumerate() {
                let ext = psi.then(q, crate::Arrow::Core(i))?;
                let r = position[&ext];
                for k in 0..m {
                    mat.set(r * m + k, j * m + k, 1);
                }
            }
            maps.push(mat);
        }
        debug_assert!(index[xi].first().is_some_and(Path::is_trivial));
        Ok(FreeRepresentation {
            rep: Representation::new(q.clone(), field, dims, maps)?,
            base: x,
            generator_dim: m,
            index,
            position,
        })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn base(&self) -> Vertex {
        self.base
    }

    pub fn generator_dim(&self) -> usize {
        self.generator_dim
    }

    /// `Q(x, y)` in coordinate order.
    pub fn basis_paths(&self, y: usize) -> &[Path] {
        &self.index[y]
    }

    pub fn path_index(&self, p: &Path) -> Option<usize> {
        self.position.get(p).copied()
    }

    fn coords(&self, i: usize) -> impl Iterator<Item = usize> {
        let m = self.generator_dim;
        i * m..(i + 1) * m
    }

    fn check_base(&self, p: &Path) -> Result<usize> {
        let q = self.rep.quiver();
        if p.start() != self.base {
            return Err(Error::BaseMismatch {
                expected: q.vertex_name(self.base),
                found: q.vertex_name(p.start()),
            });
        }
        let Vertex::Core(y) = p.target() else { unreachable!("ray-free") };
        Ok(y)
    }

    /// `U_φ ⊆ M`: intersect `U(y)` with the span of the basis paths `ψ`
    /// with `φ ⪯ ψ`, then read off the `φ`-coordinates.
    pub fn leading_submodule<O: PathOrder + ?Sized>(
        &self,
        ord: &O,
        u: &Subrepresentation,
        phi: &Path,
    ) -> Result<Subspace> {
        let y = self.check_base(phi)?;
        let field = self.rep.field();
        let space = u
            .spaces
            .get(y)
            .filter(|s| s.ambient() == self.rep.dim(y))
            .ok_or(Error::ShapeMismatch("subrepresentation of another representation"))?;
        let at_least: Vec<usize> = self.index[y]
            .iter()
            .enumerate()
            .filter(|(_, psi)| ord.compare(phi.arrows(), psi.arrows()) != Ordering::Greater)
            .flat_map(|(i, _)| self.coords(i))
            .collect();
        let window = Subspace::coordinate(field, self.rep.dim(y), &at_least);
        let i = self.position[phi];
        Ok(space.intersect(&window)?.project(&self.coords(i).collect::<Vec<_>>()))
    }

    /// `M[I(x,−)]`: at each `y` the coordinates of the paths in `I`.
    pub fn ideal_embedding(&self, ideal: &PathIdeal<'_>) -> Result<Subrepresentation> {
        let poset = ideal.poset();
        if poset.base() != self.base || poset.quiver() != self.rep.quiver() {
            return Err(Error::PosetMismatch);
        }
        let field = self.rep.field();
        let mut spaces = Vec::with_capacity(self.index.len());
        for (y, paths) in self.index.iter().enumerate() {
            let mut coords = Vec::new();
            for (i, p) in paths.iter().enumerate() {
                if ideal.contains(p)? {
                    coords.extend(self.coords(i));
                }
            }
            spaces.push(Subspace::coordinate(field, self.rep.dim(y), &coords));
        }
        Ok(Subrepresentation { spaces })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ArrowRank, GroebnerOrder};
    use crate::poset::PathPoset;
    use crate::rep::enumerate_subrepresentations;

    fn kronecker() -> Quiver {
        Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap()
    }

    #[test]
    fn shapes() {
        let f = PrimeField::F2;
        let a2 = Quiver::from_parts(&["x", "y"], &[("a", "x", "y")], &[]).unwrap();
        let fr = FreeRepresentation::new(&a2, Vertex::Core(0), f, 1).unwrap();
        assert_eq!(fr.representation().dims(), &[1, 1]);
        assert_eq!(fr.representation().maps()[0], Matrix::identity(f, 1));
        let k = kronecker();
        let fr = FreeRepresentation::new(&k, Vertex::Core(0), f, 1).unwrap();
        assert_eq!(fr.representation().dims(), &[1, 2]);
        assert_eq!(fr.representation().maps()[0].entries(), &[1, 0]);
        assert_eq!(fr.representation().maps()[1].entries(), &[0, 1]);
        let j = Quiver::from_parts(&["x"], &[("l", "x", "x")], &[]).unwrap();
        assert_eq!(
            FreeRepresentation::new(&j, Vertex::Core(0), f, 1).unwrap_err(),
            Error::NotLeftFinite("x".into())
        );
    }

    #[test]
    fn kronecker_leading_submodules() {
        let f = PrimeField::F2;
        let k = kronecker();
        let fr = FreeRepresentation::new(&k, Vertex::Core(0), f, 1).unwrap();
        let ord = GroebnerOrder::new(ArrowRank::from_names(&k, &["a", "b"]).unwrap());
        let u = Subrepresentation {
            spaces: alloc::vec![Subspace::zero(f, 1), Subspace::span(f, 2, &[alloc::vec![1, 1]])],
        };
        assert!(fr.representation().is_subrepresentation(&u));
        let a = k.path_by_names("x", &["a"]).unwrap();
        let b = k.path_by_names("x", &["b"]).unwrap();
        assert_eq!(fr.leading_submodule(&ord, &u, &a).unwrap(), Subspace::zero(f, 1));
        assert_eq!(fr.leading_submodule(&ord, &u, &b).unwrap(), Subspace::full(f, 1));
    }

    #[test]
    fn kronecker_ideals_embed() {
        let f = PrimeField::F2;
        let k = kronecker();
        let x = Vertex::Core(0);
        let fr = FreeRepresentation::new(&k, x, f, 1).unwrap();
        let poset = PathPoset::new(&k, x).unwrap();
        let ideals = poset.finite_ideals().unwrap();
        assert_eq!(ideals.len(), 4);
        let subs = enumerate_subrepresentations(fr.representation()).unwrap();
        let mut images: Vec<Subrepresentation> =
            ideals.iter().map(|i| fr.ideal_embedding(i).unwrap()).collect();
        assert!(images.iter().all(|s| subs.contains(s)));
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 4);
        let a = poset.ideal([k.path_by_names("x", &["a"]).unwrap()]).unwrap();
        let ea = fr.ideal_embedding(&a).unwrap();
        assert_eq!(ea.spaces[0], Subspace::zero(f, 1));
        assert_eq!(ea.spaces[1], Subspace::coordinate(f, 2, &[0]));
        assert_eq!(fr.ideal_embedding(&poset.full_ideal()).unwrap(), Subrepresentation::full(fr.representation()));
    }
}
