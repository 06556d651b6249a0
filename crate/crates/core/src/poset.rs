//! The path poset `Q(x)`, its ideals, and subsequence extraction.
//!
//! `φ ≤ ψ` iff `φ = χψ` for some path `χ`; with arrows in application order
//! this says the arrows of `ψ` are a prefix of the arrows of `φ`. An ideal
//! (down-closed, non-empty) is the same thing as a left ideal of paths: it
//! is closed under postcomposition. Ideals are kept as antichains of
//! generators and never listed element by element.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::noetherian;
use crate::path::Path;
use crate::quiver::{Quiver, Vertex};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct PathPoset<'q> {
    quiver: &'q Quiver,
    base: Vertex,
}

impl PartialEq for PathPoset<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && (core::ptr::eq(self.quiver, other.quiver) || self.quiver == other.quiver)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealRelation {
    Equal,
    /// `I ⊊ J`
    Contained,
    /// `J ⊊ I`
    Contains,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PathIdeal<'q> {
    poset: PathPoset<'q>,
    generators: Vec<Path>,
}

/// The infinite sequence `preamble ++ period ++ period ++ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicPathSequence {
    preamble: Vec<Path>,
    period: Vec<Path>,
}

impl PeriodicPathSequence {
    pub fn new(preamble: Vec<Path>, period: Vec<Path>) -> Result<Self> {
        let Some(first) = period.first() else {
            return Err(Error::EmptyPeriod);
        };
        let start = first.start();
        if let Some(p) = preamble.iter().chain(&period).find(|p| p.start() != start) {
            return Err(Error::BaseMismatch {
                expected: alloc::format!("{start:?}"),
                found: alloc::format!("{:?}", p.start()),
            });
        }
        Ok(Self { preamble, period })
    }

    pub fn preamble(&self) -> &[Path] {
        &self.preamble
    }

    pub fn period(&self) -> &[Path] {
        &self.period
    }

    pub fn start(&self) -> Vertex {
        self.period[0].start()
    }

    /// The `i`-th term.
    pub fn get(&self, i: usize) -> &Path {
        if i < self.preamble.len() {
            &self.preamble[i]
        } else {
            &self.period[(i - self.preamble.len()) % self.period.len()]
        }
    }
}

impl<'q> PathPoset<'q> {
    pub fn new(quiver: &'q Quiver, base: Vertex) -> Result<Self> {
        quiver.core_index(base)?;
        Ok(Self { quiver, base })
    }

    pub fn quiver(&self) -> &'q Quiver {
        self.quiver
    }

    pub fn base(&self) -> Vertex {
        self.base
    }

    fn check_base(&self, p: &Path) -> Result<()> {
        if p.start() == self.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch {
                expected: self.quiver.vertex_name(self.base),
                found: self.quiver.vertex_name(p.start()),
            })
        }
    }

    /// `φ ≤ ψ`: `φ` extends `ψ`.
    pub fn leq(&self, phi: &Path, psi: &Path) -> Result<bool> {
        self.check_base(phi)?;
        self.check_base(psi)?;
        Ok(psi.is_prefix_of(phi))
    }

    /// The ideal generated by `gens`, reduced to an antichain.
    pub fn ideal(&self, gens: impl IntoIterator<Item = Path>) -> Result<PathIdeal<'q>> {
        let mut gens: Vec<Path> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            self.check_base(g)?;
        }
        // Shortest first: anything extending an already kept generator is
        // redundant, and nothing shorter can come later.
        gens.sort_by(Path::shortlex_cmp);
        gens.dedup();
        let mut kept: Vec<Path> = Vec::new();
        for g in gens {
            if !kept.iter().any(|k| k.is_prefix_of(&g)) {
                kept.push(g);
            }
        }
        Ok(PathIdeal {
            poset: *self,
            generators: kept,
        })
    }

    /// The whole poset, generated by the trivial path.
    pub fn full_ideal(&self) -> PathIdeal<'q> {
        PathIdeal {
            poset: *self,
            generators: alloc::vec![Path::trivial(self.base)],
        }
    }

    /// Every ideal of a finite `Q(x)`, one per antichain of generators.
    pub fn finite_ideals(&self) -> Result<Vec<PathIdeal<'q>>> {
        const LIMIT: usize = 24;
        let elements = self
            .quiver
            .all_paths_from(self.base)
            .ok_or_else(|| Error::NotLeftFinite(self.quiver.vertex_name(self.base)))?;
        if elements.len() > LIMIT {
            return Err(Error::TooLarge("path poset has more than 24 elements"));
        }
        let comparable = |a: &Path, b: &Path| a.is_prefix_of(b) || b.is_prefix_of(a);
        let mut out = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        // Depth-first over antichains, each listed once.
        fn grow<'q>(
            poset: &PathPoset<'q>,
            elements: &[Path],
            from: usize,
            chosen: &mut Vec<usize>,
            out: &mut Vec<PathIdeal<'q>>,
            comparable: &dyn Fn(&Path, &Path) -> bool,
        ) {
            for i in from..elements.len() {
                if chosen.iter().any(|&c| comparable(&elements[c], &elements[i])) {
                    continue;
                }
                chosen.push(i);
                out.push(PathIdeal {
                    poset: *poset,
                    generators: chosen.iter().map(|&c| elements[c].clone()).collect(),
                });
                grow(poset, elements, i + 1, chosen, out, comparable);
                chosen.pop();
            }
        }
        grow(self, &elements, 0, &mut chosen, &mut out, &comparable);
        Ok(out)
    }

    /// The first `count` values of the subsequence selector `ν` for an
    /// eventually periodic sequence, paired with the selected terms.
    ///
    /// `ν(0)` is the least `i` such that `x_j ≤ x_i` for infinitely many
    /// `j`, and `ν(n)` the least `i > ν(n-1)` with `x_j ≤ x_i ≤ x_{ν(n-1)}`
    /// for infinitely many `j`. For a periodic tail, "infinitely many `j`"
    /// holds exactly when some term of the period lies below `x_i`.
    pub fn nu_extract(&self, seq: &PeriodicPathSequence, count: usize) -> Result<Vec<(usize, Path)>> {
        for p in seq.preamble().iter().chain(seq.period()) {
            self.check_base(p)?;
        }
        let report = noetherian::is_left_noetherian_at(self.quiver, self.base)?;
        if let Some(w) = report.witness {
            return Err(Error::NotNoetherian(Box::new(w)));
        }

        let recurrent_below = |x: &Path| seq.period().iter().any(|p| x.is_prefix_of(p));
        // A qualifying index always appears within one more pass over the
        // period, because the period term below x_{ν(n-1)} recurs.
        let horizon = |from: usize| from + seq.preamble().len() + 2 * seq.period().len() + 1;

        let mut out: Vec<(usize, Path)> = Vec::with_capacity(count);
        let mut i = 0;
        while out.len() < count {
            let limit = horizon(i);
            let found = match out.last() {
                None => (i..limit).find(|&j| recurrent_below(seq.get(j))),
                Some((_, prev)) => {
                    (i..limit).find(|&j| prev.is_prefix_of(seq.get(j)) && recurrent_below(seq.get(j)))
                }
            };
            let j = found.expect("periodic sequence always yields the next index");
            out.push((j, seq.get(j).clone()));
            i = j + 1;
        }
        Ok(out)
    }
}

impl<'q> PathIdeal<'q> {
    pub fn poset(&self) -> PathPoset<'q> {
        self.poset
    }

    /// The antichain of generators, shortest first.
    pub fn generators(&self) -> &[Path] {
        &self.generators
    }

    /// `φ ∈ I` iff `φ` extends some generator.
    pub fn contains(&self, phi: &Path) -> Result<bool> {
        self.poset.check_base(phi)?;
        Ok(self.generators.iter().any(|g| g.is_prefix_of(phi)))
    }

    pub fn is_subset_of(&self, other: &PathIdeal<'q>) -> Result<bool> {
        if self.poset != other.poset {
            return Err(Error::PosetMismatch);
        }
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.is_prefix_of(g))))
    }

    pub fn compare(&self, other: &PathIdeal<'q>) -> Result<IdealRelation> {
        let le = self.is_subset_of(other)?;
        let ge = other.is_subset_of(self)?;
        Ok(match (le, ge) {
            (true, true) => IdealRelation::Equal,
            (true, false) => IdealRelation::Contained,
            (false, true) => IdealRelation::Contains,
            (false, false) => IdealRelation::Incomparable,
        })
    }

    pub fn is_antichain(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !(a.is_prefix_of(b) || b.is_prefix_of(a)))
        })
    }
}
