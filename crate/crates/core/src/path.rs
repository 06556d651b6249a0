//! Paths and maximal paths.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::quiver::{Arrow, Quiver, Vertex};
use crate::{Error, Result};

/// A finite path, arrows stored in application order.
///
/// The empty arrow list is the trivial path `e_start`. Paths are built
/// through [`Quiver::path`] or by extending existing paths, so the arrows
/// always compose.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    start: Vertex,
    arrows: Vec<Arrow>,
    target: Vertex,
}

impl Path {
    pub fn trivial(v: Vertex) -> Path {
        Path {
            start: v,
            arrows: Vec::new(),
            target: v,
        }
    }

    pub(crate) fn from_parts(start: Vertex, arrows: Vec<Arrow>, target: Vertex) -> Path {
        Path {
            start,
            arrows,
            target,
        }
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Appends one arrow, i.e. returns `αφ`.
    pub fn then(&self, quiver: &Quiver, arrow: Arrow) -> Result<Path> {
        let src = quiver.source(arrow);
        if src != self.target {
            return Err(Error::NotComposable {
                expected: quiver.vertex_name(self.target),
                found: quiver.vertex_name(src),
            });
        }
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Ok(Path {
            start: self.start,
            arrows,
            target: quiver.target(arrow),
        })
    }

    /// The composite `after ∘ self`: first `self`, then `after`.
    pub fn then_path(&self, after: &Path) -> Option<Path> {
        if after.start != self.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&after.arrows);
        Some(Path {
            start: self.start,
            arrows,
            target: after.target,
        })
    }

    /// True when `self` is an initial segment of `other` (same start).
    /// In the path poset this is `other ≤ self`.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.start == other.start && other.arrows.starts_with(&self.arrows)
    }

    /// The first `n` arrows as a path.
    pub fn prefix(&self, quiver: &Quiver, n: usize) -> Path {
        let arrows: Vec<Arrow> = self.arrows[..n].to_vec();
        let target = match arrows.last() {
            Some(a) => quiver.target(*a),
            None => self.start,
        };
        Path {
            start: self.start,
            arrows,
            target,
        }
    }

    /// Shortest first, then lexicographic by arrow. This is the order in
    /// which [`Quiver::enumerate_paths`] lists paths.
    pub fn shortlex_cmp(&self, other: &Path) -> Ordering {
        self.start
            .cmp(&other.start)
            .then(self.arrows.len().cmp(&other.arrows.len()))
            .then_with(|| self.arrows.cmp(&other.arrows))
    }
}

/// How a maximal path ends.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tail {
    /// The prefix ends at a vertex without outgoing arrows.
    None,
    /// The given oriented cycle at the prefix target repeats forever.
    Cycle(Path),
    /// The ray with this index is entered (through its connecting arrow)
    /// and followed forever.
    Ray(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalPath {
    pub prefix: Path,
    pub tail: Tail,
}

impl MaximalPath {
    pub fn is_finite(&self) -> bool {
        matches!(self.tail, Tail::None)
    }
}
