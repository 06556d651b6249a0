//! Finite categories given by composition tables, with a candidate order on
//! each hom-set.
//!
//! Composition is written `g∘f` (apply `f`, then `g`). Compositions with
//! identities are filled in automatically; every other composable pair must
//! appear in the table.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::axioms::Outcome;
use crate::quiver::valid_id;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryError {
    InvalidId(String),
    UnknownObject(String),
    UnknownMorphism(String),
    DuplicateObject(String),
    DuplicateMorphism(String),
    /// The identity is already declared with other endpoints.
    IdentityNotEndo(String),
    DuplicateIdentity(String),
    MissingIdentity(String),
    NotComposable { g: String, f: String },
    /// `g∘f` is declared with a morphism of the wrong type.
    CompositeType { g: String, f: String, h: String },
    ConflictingComposite { g: String, f: String },
    MissingComposite { g: String, f: String },
    IdentityLaw { g: String, f: String },
    NotAssociative { h: String, g: String, f: String },
    /// An order chain mixes hom-sets or is not the declared one.
    OrderOutsideHom(String),
}

impl fmt::Display for CategoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CategoryError::*;
        match self {
            InvalidId(id) => write!(f, "invalid identifier {id:?}"),
            UnknownObject(o) => write!(f, "unknown object {o}"),
            UnknownMorphism(m) => write!(f, "unknown morphism {m}"),
            DuplicateObject(o) => write!(f, "duplicate object {o}"),
            DuplicateMorphism(m) => write!(f, "duplicate morphism {m}"),
            IdentityNotEndo(m) => write!(f, "identity {m} is declared with different endpoints"),
            DuplicateIdentity(o) => write!(f, "object {o} has two identities"),
            MissingIdentity(o) => write!(f, "object {o} has no identity"),
            NotComposable { g, f: ff } => write!(f, "{g}∘{ff} is not composable"),
            CompositeType { g, f: ff, h } => write!(f, "{g}∘{ff} = {h} has the wrong type"),
            ConflictingComposite { g, f: ff } => write!(f, "{g}∘{ff} is declared twice"),
            MissingComposite { g, f: ff } => write!(f, "{g}∘{ff} is missing from the table"),
            IdentityLaw { g, f: ff } => write!(f, "{g}∘{ff} violates the identity law"),
            NotAssociative { h, g, f: ff } => write!(f, "({h}∘{g})∘{ff} ≠ {h}∘({g}∘{ff})"),
            OrderOutsideHom(m) => write!(f, "order chain leaves the hom-set at {m}"),
        }
    }
}

type CatResult<T> = core::result::Result<T, CategoryError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDecl {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Clone, Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    object_index: BTreeMap<String, usize>,
    morphisms: Vec<MorphismDecl>,
    morphism_index: BTreeMap<String, usize>,
    identities: BTreeMap<usize, usize>,
    table: BTreeMap<(usize, usize), usize>,
    chains: Vec<Vec<usize>>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn obj(&self, name: &str) -> CatResult<usize> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownObject(name.to_string()))
    }

    fn mor(&self, name: &str) -> CatResult<usize> {
        self.morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| CategoryError::UnknownMorphism(name.to_string()))
    }

    fn name(&self, m: usize) -> String {
        self.morphisms[m].name.clone()
    }

    pub fn object(&mut self, id: &str) -> CatResult<&mut Self> {
        if !valid_id(id) {
            return Err(CategoryError::InvalidId(id.to_string()));
        }
        if self.object_index.contains_key(id) {
            return Err(CategoryError::DuplicateObject(id.to_string()));
        }
        self.object_index.insert(id.to_string(), self.objects.len());
        self.objects.push(id.to_string());
        Ok(self)
    }

    pub fn morphism(&mut self, id: &str, dom: &str, cod: &str) -> CatResult<&mut Self> {
        if !valid_id(id) {
            return Err(CategoryError::InvalidId(id.to_string()));
        }
        if self.morphism_index.contains_key(id) {
            return Err(CategoryError::DuplicateMorphism(id.to_string()));
        }
        let (dom, cod) = (self.obj(dom)?, self.obj(cod)?);
        self.morphism_index.insert(id.to_string(), self.morphisms.len());
        self.morphisms.push(MorphismDecl {
            name: id.to_string(),
            dom,
            cod,
        });
        Ok(self)
    }

    /// Marks `id` as the identity at `at`, declaring it if needed.
    pub fn identity(&mut self, id: &str, at: &str) -> CatResult<&mut Self> {
        let x = self.obj(at)?;
        let m = match self.morphism_index.get(id) {
            Some(&m) => {
                if self.morphisms[m].dom != x || self.morphisms[m].cod != x {
                    return Err(CategoryError::IdentityNotEndo(id.to_string()));
                }
                m
            }
            None => {
                self.morphism(id, at, at)?;
                self.morphisms.len() - 1
            }
        };
        if self.identities.insert(x, m).is_some() {
            return Err(CategoryError::DuplicateIdentity(at.to_string()));
        }
        Ok(self)
    }

    /// Records `g∘f = h`.
    pub fn compose(&mut self, g: &str, f: &str, h: &str) -> CatResult<&mut Self> {
        let (gi, fi, hi) = (self.mor(g)?, self.mor(f)?, self.mor(h)?);
        let (gd, fd, hd) = (&self.morphisms[gi], &self.morphisms[fi], &self.morphisms[hi]);
        if gd.dom != fd.cod {
            return Err(CategoryError::NotComposable {
                g: g.to_string(),
                f: f.to_string(),
            });
        }
        if hd.dom != fd.dom || hd.cod != gd.cod {
            return Err(CategoryError::CompositeType {
                g: g.to_string(),
                f: f.to_string(),
                h: h.to_string(),
            });
        }
        if self.table.insert((gi, fi), hi).is_some_and(|old| old != hi) {
            return Err(CategoryError::ConflictingComposite {
                g: g.to_string(),
                f: f.to_string(),
            });
        }
        Ok(self)
    }

    /// Declares `chain[0] ≺ chain[1] ≺ ⋯` in `C(x, y)`.
    pub fn order(&mut self, x: &str, y: &str, chain: &[&str]) -> CatResult<&mut Self> {
        let (x, y) = (self.obj(x)?, self.obj(y)?);
        let mut ids = Vec::with_capacity(chain.len());
        for m in chain {
            let i = self.mor(m)?;
            if self.morphisms[i].dom != x || self.morphisms[i].cod != y {
                return Err(CategoryError::OrderOutsideHom(m.to_string()));
            }
            ids.push(i);
        }
        self.chains.push(ids);
        Ok(self)
    }

    pub fn build(&self) -> CatResult<FiniteCategory> {
        let n = self.morphisms.len();
        let mut identities = Vec::with_capacity(self.objects.len());
        for (x, name) in self.objects.iter().enumerate() {
            match self.identities.get(&x) {
                Some(&m) => identities.push(m),
                None => return Err(CategoryError::MissingIdentity(name.clone())),
            }
        }
        let is_identity = |m: usize| identities[self.morphisms[m].dom] == m;
        let mut table = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                if self.morphisms[g].dom != self.morphisms[f].cod {
                    continue;
                }
                let given = self.table.get(&(g, f)).copied();
                let forced = if is_identity(g) {
                    Some(f)
                } else if is_identity(f) {
                    Some(g)
                } else {
                    None
                };
                table[g * n + f] = match (given, forced) {
                    (Some(h), Some(e)) if h != e => {
                        return Err(CategoryError::IdentityLaw {
                            g: self.name(g),
                            f: self.name(f),
                        })
                    }
                    (Some(h), _) | (None, Some(h)) => Some(h),
                    (None, None) => {
                        return Err(CategoryError::MissingComposite {
                            g: self.name(g),
                            f: self.name(f),
                        })
                    }
                };
            }
        }
        let comp = |g: usize, f: usize| table[g * n + f];
        for h in 0..n {
            for g in 0..n {
                let Some(hg) = comp(h, g) else { continue };
                for f in 0..n {
                    let Some(gf) = comp(g, f) else { continue };
                    if comp(hg, f) != comp(h, gf) {
                        return Err(CategoryError::NotAssociative {
                            h: self.name(h),
                            g: self.name(g),
                            f: self.name(f),
                        });
                    }
                }
            }
        }
        let mut less = vec![vec![false; n]; n];
        for chain in &self.chains {
            for w in chain.windows(2) {
                less[w[0]][w[1]] = true;
            }
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        Ok(FiniteCategory {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identities,
            table,
            less,
        })
    }
}

/// A validated finite category with its hom-set orders (transitively
/// closed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismDecl>,
    identities: Vec<usize>,
    table: Vec<Option<usize>>,
    less: Vec<Vec<bool>>,
}

impl FiniteCategory {
    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorphismDecl] {
        &self.morphisms
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// `g∘f`, when composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.table[g * self.morphisms.len() + f]
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].dom == x && self.morphisms[m].cod == y)
            .collect()
    }

    /// `C(x)`: every morphism out of `x`.
    pub fn out_of(&self, x: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].dom == x)
            .collect()
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }
}

/// Morphism indices: `φ ≺ ψ` but `ωφ ≺ ωψ` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryG1Counterexample {
    pub phi: usize,
    pub psi: usize,
    pub omega: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryG2Violation {
    Incomparable { a: usize, b: usize },
    /// The declared chains force `a ≺ a`.
    Cyclic { a: usize },
}

/// Ascending chain evidence at one object: the number of non-empty left
/// ideals of `C(x)` and the length of the longest strict chain of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccEvidence {
    pub object: usize,
    pub ideals: usize,
    pub height: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryReport {
    pub g1: Outcome<CategoryG1Counterexample>,
    pub g2: Outcome<CategoryG2Violation>,
    pub acc: Vec<AccEvidence>,
    /// Every maximal chain of left ideals stabilises; finite lattices
    /// always pass, the heights above are the evidence.
    pub acc_holds: bool,
}

/// Exhaustive (G1), (G2) and ascending chain check. Left ideals need
/// `|C(x)| ≤ 64`.
pub fn check_finite_category(c: &FiniteCategory) -> crate::Result<CategoryReport> {
    let n = c.morphisms.len();
    let mut g1 = Outcome::Pass;
    'g1: for phi in 0..n {
        for psi in 0..n {
            if !c.less[phi][psi] {
                continue;
            }
            for omega in 0..n {
                if let (Some(a), Some(b)) = (c.compose(omega, phi), c.compose(omega, psi)) {
                    if !c.less[a][b] {
                        g1 = Outcome::Counterexample(CategoryG1Counterexample { phi, psi, omega });
                        break 'g1;
                    }
                }
            }
        }
    }

    let mut g2 = Outcome::Pass;
    'g2: for a in 0..n {
        if c.less[a][a] {
            g2 = Outcome::Counterexample(CategoryG2Violation::Cyclic { a });
            break;
        }
        let (x, y) = (c.morphisms[a].dom, c.morphisms[a].cod);
        for b in c.hom(x, y) {
            if a < b && !c.less[a][b] && !c.less[b][a] {
                g2 = Outcome::Counterexample(CategoryG2Violation::Incomparable { a, b });
                break 'g2;
            }
        }
    }

    let mut acc = Vec::with_capacity(c.objects.len());
    for x in 0..c.objects.len() {
        let (ideals, height) = ideal_lattice(c, x)?;
        acc.push(AccEvidence { object: x, ideals, height });
    }
    Ok(CategoryReport {
        g1,
        g2,
        acc,
        acc_holds: true,
    })
}

fn ideal_lattice(c: &FiniteCategory, x: usize) -> crate::Result<(usize, usize)> {
    let out = c.out_of(x);
    if out.len() > 64 {
        return Err(crate::Error::TooLarge("hom-sets with more than 64 morphisms"));
    }
    let bit = |m: usize| 1u64 << out.iter().position(|&o| o == m).expect("morphism out of x");
    let principal: Vec<u64> = out
        .iter()
        .map(|&f| {
            (0..c.morphisms.len())
                .filter_map(|w| c.compose(w, f))
                .fold(0, |acc, h| acc | bit(h))
        })
        .collect();
    let mut ideals = alloc::collections::BTreeSet::new();
    let mut stack = vec![0u64];
    while let Some(i) = stack.pop() {
        for p in &principal {
            let j = i | p;
            if j != i && ideals.insert(j) {
                stack.push(j);
            }
        }
    }
    let mut sorted: Vec<u64> = ideals.into_iter().collect();
    sorted.sort_by_key(|m| m.count_ones());
    let mut height = vec![1usize; sorted.len()];
    for i in 0..sorted.len() {
        for j in 0..i {
            if sorted[j] & !sorted[i] == 0 && sorted[j] != sorted[i] {
                height[i] = height[i].max(height[j] + 1);
            }
        }
    }
    Ok((sorted.len(), height.into_iter().max().unwrap_or(0)))
}
