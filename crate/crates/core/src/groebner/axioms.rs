//! Truncated checks of (G1), (G2) and the refinement property on `Q(x)`.
//!
//! Every check sees the paths from `x` of length at most `L`. Hom-sets are
//! sorted once; for a total preorder it is then enough to look at
//! neighbours, and a full pairwise scan is only needed when distinct paths
//! tie.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::order::PathOrder;
use crate::path::Path;
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<C> {
    Pass,
    Counterexample(C),
}

impl<C> Outcome<C> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn counterexample(&self) -> Option<&C> {
        match self {
            Outcome::Pass => None,
            Outcome::Counterexample(c) => Some(c),
        }
    }
}

/// `φ ≺ ψ` while `ωφ ≺ ωψ` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G1Counterexample {
    pub phi: Path,
    pub psi: Path,
    pub omega: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum G2Violation {
    /// Distinct parallel paths compare equal.
    NotTotal { a: Path, b: Path },
    /// The order is not transitive on the sorted hom-set.
    Inconsistent { a: Path, b: Path },
    /// `Q(x, target)` is infinite and the order gives no reason for every
    /// subset to have a maximum.
    NoMaximumCertificate { target: Vertex },
}

/// `φ ≤ ψ` in the path poset while `φ ≻ ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementCounterexample {
    pub phi: Path,
    pub psi: Path,
}

/// Whether `φ ≺ ψ ⟹ ωφ ≺ ωψ` holds for this single triple, given on
/// arrow sequences.
pub fn g1_holds<O: PathOrder + ?Sized>(ord: &O, phi: &[Arrow], psi: &[Arrow], omega: &[Arrow]) -> bool {
    if ord.compare(phi, psi) != Ordering::Less {
        return true;
    }
    let mut a = Vec::with_capacity(phi.len() + omega.len());
    let mut b = Vec::with_capacity(psi.len() + omega.len());
    a.extend_from_slice(phi);
    a.extend_from_slice(omega);
    b.extend_from_slice(psi);
    b.extend_from_slice(omega);
    ord.compare(&a, &b) == Ordering::Less
}

fn hom_sets<O: PathOrder + ?Sized>(ord: &O, q: &Quiver, x: Vertex, l: usize) -> Result<BTreeMap<Vertex, Vec<Path>>> {
    if l == 0 {
        return Err(Error::ZeroTruncation);
    }
    q.core_index(x)?;
    let mut homs: BTreeMap<Vertex, Vec<Path>> = BTreeMap::new();
    for p in q.enumerate_paths(x, l, None) {
        homs.entry(p.target()).or_default().push(p);
    }
    for paths in homs.values_mut() {
        paths.sort_by(|a, b| ord.compare(a.arrows(), b.arrows()));
    }
    Ok(homs)
}

fn has_ties<O: PathOrder + ?Sized>(ord: &O, sorted: &[Path]) -> bool {
    sorted
        .windows(2)
        .any(|w| ord.compare(w[0].arrows(), w[1].arrows()) != Ordering::Less)
}

/// (G1) on `Q(x)` truncated at length `l`, with `ω` ranging over paths of
/// length at most `l` from each target. The first counterexample is the
/// least in (target, `ω` shortlex, sorted pair) order.
pub fn check_g1<O: PathOrder + ?Sized>(
    ord: &O,
    q: &Quiver,
    x: Vertex,
    l: usize,
) -> Result<Outcome<G1Counterexample>> {
    let homs = hom_sets(ord, q, x, l)?;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (&y, paths) in &homs {
        if paths.len() < 2 {
            continue;
        }
        let pairs: Vec<(usize, usize)> = if has_ties(ord, paths) {
            (0..paths.len())
                .flat_map(|i| (0..paths.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| ord.compare(paths[i].arrows(), paths[j].arrows()) == Ordering::Less)
                .collect()
        } else {
            (1..paths.len()).map(|i| (i - 1, i)).collect()
        };
        for omega in q.enumerate_paths(y, l, None) {
            for &(i, j) in &pairs {
                let (phi, psi) = (&paths[i], &paths[j]);
                a.clear();
                a.extend_from_slice(phi.arrows());
                a.extend_from_slice(omega.arrows());
                b.clear();
                b.extend_from_slice(psi.arrows());
                b.extend_from_slice(omega.arrows());
                if ord.compare(&a, &b) != Ordering::Less {
                    return Ok(Outcome::Counterexample(G1Counterexample {
                        phi: phi.clone(),
                        psi: psi.clone(),
                        omega,
                    }));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// (G2): each truncated hom-set is a chain, and infinite hom-sets need an
/// order that certifies maxima.
pub fn check_g2<O: PathOrder + ?Sized>(ord: &O, q: &Quiver, x: Vertex, l: usize) -> Result<Outcome<G2Violation>> {
    let homs = hom_sets(ord, q, x, l)?;
    for paths in homs.values() {
        for w in paths.windows(2) {
            match ord.compare(w[0].arrows(), w[1].arrows()) {
                Ordering::Less => {}
                Ordering::Equal => {
                    return Ok(Outcome::Counterexample(G2Violation::NotTotal {
                        a: w[0].clone(),
                        b: w[1].clone(),
                    }))
                }
                Ordering::Greater => {
                    return Ok(Outcome::Counterexample(G2Violation::Inconsistent {
                        a: w[0].clone(),
                        b: w[1].clone(),
                    }))
                }
            }
        }
    }
    if !ord.certifies_maxima() {
        if let Some(target) = homs.keys().copied().find(|&y| infinite_hom(q, x, y)) {
            return Ok(Outcome::Counterexample(G2Violation::NoMaximumCertificate { target }));
        }
    }
    Ok(Outcome::Pass)
}

/// `Q(x, y)` is infinite iff some cycle vertex lies between `x` and `y`.
fn infinite_hom(q: &Quiver, x: Vertex, y: Vertex) -> bool {
    let (Vertex::Core(x), y) = (x, y) else {
        return false;
    };
    let y = match y {
        Vertex::Core(i) => i,
        Vertex::Ray { ray, .. } => q.ray_decls()[ray].at,
    };
    let from_x = q.reachable_mask(x);
    let cyc = q.cycle_mask();
    (0..cyc.len()).any(|c| cyc[c] && from_x[c] && q.reachable_mask(c)[y])
}

/// `φ ≤ ψ ⟹ φ ⪯ ψ` for all paths of length at most `l`. Since `≤` is
/// generated by dropping the last arrow and `⪯` is transitive, only
/// immediate prefixes are compared.
pub fn check_refinement<O: PathOrder + ?Sized>(
    ord: &O,
    q: &Quiver,
    x: Vertex,
    l: usize,
) -> Result<Outcome<RefinementCounterexample>> {
    if l == 0 {
        return Err(Error::ZeroTruncation);
    }
    q.core_index(x)?;
    for phi in q.enumerate_paths(x, l, None) {
        if phi.is_trivial() {
            continue;
        }
        let psi = phi.prefix(q, phi.len() - 1);
        if ord.compare(phi.arrows(), psi.arrows()) == Ordering::Greater {
            return Ok(Outcome::Counterexample(RefinementCounterexample { phi, psi }));
        }
    }
    Ok(Outcome::Pass)
}
