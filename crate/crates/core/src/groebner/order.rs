use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::path::Path;
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::{Error, Result};

/// A total order on paths that share their start vertex, given on arrow
/// sequences in application order.
///
/// Implementations must be total preorders (transitive, and every pair is
/// comparable); the axiom checkers rely on this to compare neighbours in
/// sorted order only.
pub trait PathOrder {
    fn compare(&self, a: &[Arrow], b: &[Arrow]) -> Ordering;

    /// Whether every non-empty set of parallel paths is known to have a
    /// maximum, also on infinite hom-sets.
    fn certifies_maxima(&self) -> bool {
        false
    }
}

/// A strict total order on arrows. Declared arrows take the rank they are
/// given; ray arrows rank after all of them, by ray and then by step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowRank {
    core: Vec<Option<usize>>,
}

impl ArrowRank {
    /// Ranks arrows in declaration order.
    pub fn declaration(q: &Quiver) -> Self {
        ArrowRank {
            core: q.arrow_decls().iter().map(|a| Some(a.declared)).collect(),
        }
    }

    /// Ranks the named arrows in the order given, lowest first.
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self> {
        let mut core = vec![None; q.arrow_count()];
        for (rank, name) in names.iter().enumerate() {
            match q.arrow(name)? {
                Arrow::Core(i) => {
                    if core[i].replace(rank).is_some() {
                        return Err(Error::DuplicateRank(name.to_string()));
                    }
                }
                Arrow::Ray { .. } => return Err(Error::UnknownArrow(name.to_string())),
            }
        }
        Ok(ArrowRank { core })
    }

    /// Every declared arrow on a path from `x` must carry a rank.
    pub fn check_covers(&self, q: &Quiver, x: Vertex) -> Result<()> {
        let xi = q.core_index(x)?;
        let seen = q.reachable_mask(xi);
        for (i, a) in q.arrow_decls().iter().enumerate() {
            if seen[a.source] && self.core.get(i).copied().flatten().is_none() {
                return Err(Error::UnrankedArrow(a.name.clone()));
            }
        }
        Ok(())
    }

    /// The ranked declared arrows, lowest rank first.
    pub fn ranked(&self) -> Vec<Arrow> {
        let mut out: Vec<(usize, usize)> = self
            .core
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.map(|r| (r, i)))
            .collect();
        out.sort();
        out.into_iter().map(|(_, i)| Arrow::Core(i)).collect()
    }

    fn key(&self, a: Arrow) -> (u8, usize, usize) {
        match a {
            Arrow::Core(i) => (0, self.core.get(i).copied().flatten().unwrap_or(usize::MAX), i),
            Arrow::Ray { ray, step } => (1, ray, step),
        }
    }

    pub fn cmp_arrows(&self, a: Arrow, b: Arrow) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Compares at the first differing position; `None` when one sequence
    /// is a prefix of the other.
    fn first_difference(&self, a: &[Arrow], b: &[Arrow]) -> Option<Ordering> {
        a.iter()
            .zip(b)
            .find(|(x, y)| x != y)
            .map(|(x, y)| self.cmp_arrows(*x, *y))
    }
}

/// The degree-lexicographic order: a longer path is smaller; paths of equal
/// length compare at their first differing arrow, and the one whose arrow
/// has the lower rank is greater.
///
/// Longer-is-smaller makes this a refinement of the path poset (`φ ≤ ψ`
/// implies `φ ⪯ ψ`), it is compatible with postcomposition, and any set of
/// parallel paths has a maximum among its finitely many shortest members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerOrder {
    rank: ArrowRank,
}

impl GroebnerOrder {
    pub fn new(rank: ArrowRank) -> Self {
        GroebnerOrder { rank }
    }

    pub fn declaration(q: &Quiver) -> Self {
        Self::new(ArrowRank::declaration(q))
    }

    pub fn rank(&self) -> &ArrowRank {
        &self.rank
    }

    /// Checked comparison of two paths from the same vertex.
    pub fn compare_paths(&self, q: &Quiver, phi: &Path, psi: &Path) -> Result<Ordering> {
        if phi.start() != psi.start() {
            return Err(Error::BaseMismatch {
                expected: q.vertex_name(phi.start()),
                found: q.vertex_name(psi.start()),
            });
        }
        let arrows: BTreeSet<Arrow> = phi.arrows().iter().chain(psi.arrows()).copied().collect();
        for a in arrows {
            if let Arrow::Core(i) = a {
                if self.rank.core.get(i).copied().flatten().is_none() {
                    return Err(Error::UnrankedArrow(q.arrow_name(a)));
                }
            }
        }
        Ok(self.compare(phi.arrows(), psi.arrows()))
    }
}

impl PathOrder for GroebnerOrder {
    fn compare(&self, a: &[Arrow], b: &[Arrow]) -> Ordering {
        b.len()
            .cmp(&a.len())
            .then_with(|| self.rank.first_difference(a, b).map_or(Ordering::Equal, Ordering::reverse))
    }

    fn certifies_maxima(&self) -> bool {
        true
    }
}

/// Plain lexicographic order: compare at the first differing arrow (lower
/// rank is smaller), and a proper prefix is smaller than its extensions.
///
/// Not compatible with postcomposition: on two loops `a < b`,
/// `a ≺ a·a` yet `b·a ≻ b·a·a` (application order `[a, b]` against
/// `[a, a, b]`). Kept as a known-bad order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainLexOrder {
    rank: ArrowRank,
}

impl PlainLexOrder {
    pub fn new(rank: ArrowRank) -> Self {
        PlainLexOrder { rank }
    }
}

impl PathOrder for PlainLexOrder {
    fn compare(&self, a: &[Arrow], b: &[Arrow]) -> Ordering {
        self.rank
            .first_difference(a, b)
            .unwrap_or_else(|| a.len().cmp(&b.len()))
    }
}

/// Shorter is smaller, ties as in [`GroebnerOrder`]. Compatible with
/// postcomposition but not a refinement of the path poset, and on an
/// oriented cycle the set of all parallel paths has no maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversedDegreeOrder {
    rank: ArrowRank,
}

impl ReversedDegreeOrder {
    pub fn new(rank: ArrowRank) -> Self {
        ReversedDegreeOrder { rank }
    }
}

impl PathOrder for ReversedDegreeOrder {
    fn compare(&self, a: &[Arrow], b: &[Arrow]) -> Ordering {
        a.len()
            .cmp(&b.len())
            .then_with(|| self.rank.first_difference(a, b).map_or(Ordering::Equal, Ordering::reverse))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lex_examples() {
        let j = Quiver::from_parts(&["x"], &[("l", "x", "x")], &[]).unwrap();
        let ord = GroebnerOrder::declaration(&j);
        let l1 = j.path_by_names("x", &["l"]).unwrap();
        let l2 = j.path_by_names("x", &["l", "l"]).unwrap();
        assert_eq!(ord.compare_paths(&j, &l2, &l1).unwrap(), Ordering::Less);
        assert_eq!(ord.compare_paths(&j, &l1, &l1).unwrap(), Ordering::Equal);

        let k = Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap();
        let ord = GroebnerOrder::new(ArrowRank::from_names(&k, &["a", "b"]).unwrap());
        let a = k.path_by_names("x", &["a"]).unwrap();
        let b = k.path_by_names("x", &["b"]).unwrap();
        assert_eq!(ord.compare_paths(&k, &a, &b).unwrap(), Ordering::Greater);
        let ord = GroebnerOrder::new(ArrowRank::from_names(&k, &["b", "a"]).unwrap());
        assert_eq!(ord.compare_paths(&k, &a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn compare_paths_errors() {
        let k = Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap();
        let ord = GroebnerOrder::new(ArrowRank::from_names(&k, &["a"]).unwrap());
        let a = k.path_by_names("x", &["a"]).unwrap();
        let b = k.path_by_names("x", &["b"]).unwrap();
        assert_eq!(ord.compare_paths(&k, &a, &b).unwrap_err(), Error::UnrankedArrow("b".into()));
        let e = Path::trivial(Vertex::Core(1));
        assert!(matches!(ord.compare_paths(&k, &a, &e), Err(Error::BaseMismatch { .. })));
        assert!(ord.rank().check_covers(&k, Vertex::Core(0)).is_err());
        assert!(ord.rank().check_covers(&k, Vertex::Core(1)).is_ok());
        assert_eq!(
            ArrowRank::from_names(&k, &["a", "a"]).unwrap_err(),
            Error::DuplicateRank("a".into())
        );
    }

    #[test]
    fn plain_lex_breaks_compatibility() {
        let t = Quiver::from_parts(&["x"], &[("a", "x", "x"), ("b", "x", "x")], &[]).unwrap();
        let ord = PlainLexOrder::new(ArrowRank::declaration(&t));
        let (a, b) = (t.arrow("a").unwrap(), t.arrow("b").unwrap());
        assert_eq!(ord.compare(&[a], &[a, a]), Ordering::Less);
        assert_eq!(ord.compare(&[a, b], &[a, a, b]), Ordering::Greater);
    }
}
