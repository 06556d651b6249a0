//! The quiver data model and its graph primitives.
//!
//! A [`Quiver`] has a finite core (declared vertices and arrows) and a finite
//! set of rays. A ray `r` attached at `v` stands for the infinite linear
//! quiver `r.0 → r.1 → r.2 → ⋯` together with the connecting arrow
//! `v → r.0`. Synthesised names: vertex `r.k`, and arrow `r+k` for the arrow
//! that ends at `r.k` (so `r+0` is the connector). Declared identifiers may
//! not contain `.` or `+`, so synthesised names never collide.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::path::Path;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// Index into the declared vertices (sorted by id).
    Core(usize),
    /// Vertex `step` of ray `ray`.
    Ray { ray: usize, step: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arrow {
    /// Index into the declared arrows (sorted by id).
    Core(usize),
    /// The arrow of ray `ray` ending at its vertex `step`; step 0 is the
    /// connector from the attachment vertex.
    Ray { ray: usize, step: usize },
}

impl Vertex {
    pub fn is_core(self) -> bool {
        matches!(self, Vertex::Core(_))
    }
}

#[derive(Clone, Debug)]
pub struct ArrowDecl {
    pub name: String,
    pub source: usize,
    pub target: usize,
    /// Position in the original declaration sequence.
    pub declared: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayDecl {
    pub name: String,
    pub at: usize,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<ArrowDecl>,
    rays: Vec<RayDecl>,
    outgoing: Vec<Vec<Arrow>>,
}

/// Equality ignores declaration order.
impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.rays == other.rays
            && self.arrows.len() == other.arrows.len()
            && self
                .arrows
                .iter()
                .zip(&other.arrows)
                .all(|(a, b)| a.name == b.name && a.source == b.source && a.target == b.target)
    }
}

impl Eq for Quiver {}

pub(crate) fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Incremental construction; every reference must already be declared.
#[derive(Clone, Debug, Default)]
pub struct QuiverBuilder {
    vertices: Vec<String>,
    vertex_set: BTreeSet<String>,
    arrows: Vec<(String, String, String)>,
    arrow_set: BTreeSet<String>,
    rays: Vec<(String, String)>,
    ray_set: BTreeSet<String>,
}

impl QuiverBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, id: &str) -> Result<&mut Self> {
        if !valid_id(id) {
            return Err(Error::InvalidId(id.to_string()));
        }
        if !self.vertex_set.insert(id.to_string()) {
            return Err(Error::DuplicateVertex(id.to_string()));
        }
        self.vertices.push(id.to_string());
        Ok(self)
    }

    pub fn arrow(&mut self, id: &str, source: &str, target: &str) -> Result<&mut Self> {
        if !valid_id(id) {
            return Err(Error::InvalidId(id.to_string()));
        }
        for v in [source, target] {
            if !self.vertex_set.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        if !self.arrow_set.insert(id.to_string()) {
            return Err(Error::DuplicateArrow(id.to_string()));
        }
        self.arrows
            .push((id.to_string(), source.to_string(), target.to_string()));
        Ok(self)
    }

    pub fn ray(&mut self, id: &str, at: &str) -> Result<&mut Self> {
        if !valid_id(id) {
            return Err(Error::InvalidId(id.to_string()));
        }
        if !self.vertex_set.contains(at) {
            return Err(Error::UnknownVertex(at.to_string()));
        }
        if !self.ray_set.insert(id.to_string()) {
            return Err(Error::DuplicateRay(id.to_string()));
        }
        self.rays.push((id.to_string(), at.to_string()));
        Ok(self)
    }

    pub fn build(&self) -> Quiver {
        let mut vertices = self.vertices.clone();
        vertices.sort();
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut arrows: Vec<ArrowDecl> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(declared, (name, s, t))| ArrowDecl {
                name: name.clone(),
                source: index[s.as_str()],
                target: index[t.as_str()],
                declared,
            })
            .collect();
        arrows.sort_by(|a, b| a.name.cmp(&b.name));
        let mut rays: Vec<RayDecl> = self
            .rays
            .iter()
            .map(|(name, at)| RayDecl {
                name: name.clone(),
                at: index[at.as_str()],
            })
            .collect();
        rays.sort_by(|a, b| a.name.cmp(&b.name));

        let mut outgoing = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source].push(Arrow::Core(i));
        }
        for (r, ray) in rays.iter().enumerate() {
            outgoing[ray.at].push(Arrow::Ray { ray: r, step: 0 });
        }
        Quiver {
            vertices,
            arrows,
            rays,
            outgoing,
        }
    }
}

impl Quiver {
    /// Builds a quiver from name triples; a convenience over [`QuiverBuilder`].
    pub fn from_parts(vertices: &[&str], arrows: &[(&str, &str, &str)], rays: &[(&str, &str)]) -> Result<Quiver> {
        let mut b = QuiverBuilder::new();
        for v in vertices {
            b.vertex(v)?;
        }
        for (a, s, t) in arrows {
            b.arrow(a, s, t)?;
        }
        for (r, at) in rays {
            b.ray(r, at)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn has_rays(&self) -> bool {
        !self.rays.is_empty()
    }

    /// Declared vertices in id order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertices.len()).map(Vertex::Core)
    }

    /// Declared arrows in id order.
    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        (0..self.arrows.len()).map(Arrow::Core)
    }

    pub fn arrow_decls(&self) -> &[ArrowDecl] {
        &self.arrows
    }

    pub fn ray_decls(&self) -> &[RayDecl] {
        &self.rays
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    /// Resolves a vertex name, including synthesised ray vertices `r.k`.
    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        if let Ok(i) = self.vertices.binary_search_by(|v| v.as_str().cmp(name)) {
            return Ok(Vertex::Core(i));
        }
        if let Some((r, k)) = name.rsplit_once('.') {
            if let (Some(ray), Ok(step)) = (self.ray_index(r), k.parse::<usize>()) {
                return Ok(Vertex::Ray { ray, step });
            }
        }
        Err(Error::UnknownVertex(name.to_string()))
    }

    /// Resolves an arrow name, including synthesised ray arrows `r+k`.
    pub fn arrow(&self, name: &str) -> Result<Arrow> {
        if let Ok(i) = self.arrows.binary_search_by(|a| a.name.as_str().cmp(name)) {
            return Ok(Arrow::Core(i));
        }
        if let Some((r, k)) = name.rsplit_once('+') {
            if let (Some(ray), Ok(step)) = (self.ray_index(r), k.parse::<usize>()) {
                return Ok(Arrow::Ray { ray, step });
            }
        }
        Err(Error::UnknownArrow(name.to_string()))
    }

    pub fn ray_index(&self, name: &str) -> Option<usize> {
        self.rays.binary_search_by(|r| r.name.as_str().cmp(name)).ok()
    }

    pub fn vertex_name(&self, v: Vertex) -> String {
        match v {
            Vertex::Core(i) => self.vertices[i].clone(),
            Vertex::Ray { ray, step } => format!("{}.{}", self.rays[ray].name, step),
        }
    }

    pub fn arrow_name(&self, a: Arrow) -> String {
        match a {
            Arrow::Core(i) => self.arrows[i].name.clone(),
            Arrow::Ray { ray, step } => format!("{}+{}", self.rays[ray].name, step),
        }
    }

    pub fn ray_name(&self, ray: usize) -> &str {
        &self.rays[ray].name
    }

    pub fn source(&self, a: Arrow) -> Vertex {
        match a {
            Arrow::Core(i) => Vertex::Core(self.arrows[i].source),
            Arrow::Ray { ray, step: 0 } => Vertex::Core(self.rays[ray].at),
            Arrow::Ray { ray, step } => Vertex::Ray { ray, step: step - 1 },
        }
    }

    pub fn target(&self, a: Arrow) -> Vertex {
        match a {
            Arrow::Core(i) => Vertex::Core(self.arrows[i].target),
            Arrow::Ray { ray, step } => Vertex::Ray { ray, step },
        }
    }

    /// Outgoing arrows: core arrows by id, then ray connectors by ray id.
    pub fn out_arrows(&self, v: Vertex) -> Vec<Arrow> {
        match v {
            Vertex::Core(i) => self.outgoing[i].clone(),
            Vertex::Ray { ray, step } => vec![Arrow::Ray { ray, step: step + 1 }],
        }
    }

    /// Number of outgoing arrows, ray connectors included.
    pub fn out_degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::Core(i) => self.outgoing[i].len(),
            Vertex::Ray { .. } => 1,
        }
    }

    /// Builds a path from a start vertex and arrows in application order.
    pub fn path(&self, start: Vertex, arrows: &[Arrow]) -> Result<Path> {
        let mut target = start;
        for &a in arrows {
            let s = self.source(a);
            if s != target {
                return Err(Error::NotComposable {
                    expected: self.vertex_name(target),
                    found: self.vertex_name(s),
                });
            }
            target = self.target(a);
        }
        Ok(Path::from_parts(start, arrows.to_vec(), target))
    }

    /// [`Quiver::path`] by names.
    pub fn path_by_names(&self, start: &str, arrows: &[&str]) -> Result<Path> {
        let start = self.vertex(start)?;
        let arrows = arrows
            .iter()
            .map(|a| self.arrow(a))
            .collect::<Result<Vec<_>>>()?;
        self.path(start, &arrows)
    }

    /// Report form `x: a.b.c` (arrows applied left to right), `x: -` for
    /// the trivial path.
    pub fn path_string(&self, p: &Path) -> String {
        let mut s = self.vertex_name(p.start());
        s.push_str(": ");
        if p.is_trivial() {
            s.push('-');
        } else {
            let names: Vec<String> = p.arrows().iter().map(|a| self.arrow_name(*a)).collect();
            s.push_str(&names.join("."));
        }
        s
    }

    /// Composition form, written right to left: `c·b·a`, or `e_x`.
    pub fn composition_string(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e_{}", self.vertex_name(p.start()));
        }
        let names: Vec<String> = p.arrows().iter().rev().map(|a| self.arrow_name(*a)).collect();
        names.join("·")
    }

    /// Reverses every arrow. Rays have a fixed orientation, so quivers with
    /// rays are rejected.
    pub fn opposite(&self) -> Result<Quiver> {
        if self.has_rays() {
            return Err(Error::RaysPresent("opposite"));
        }
        let mut arrows = self.arrows.clone();
        for a in &mut arrows {
            core::mem::swap(&mut a.source, &mut a.target);
        }
        let mut outgoing = vec![Vec::new(); self.vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source].push(Arrow::Core(i));
        }
        Ok(Quiver {
            vertices: self.vertices.clone(),
            arrows,
            rays: Vec::new(),
            outgoing,
        })
    }

    /// Core vertices reachable from `x` (including `x`), as a mask.
    pub fn reachable_mask(&self, x: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::new();
        seen[x] = true;
        queue.push_back(x);
        while let Some(v) = queue.pop_front() {
            for a in &self.outgoing[v] {
                if let Arrow::Core(i) = *a {
                    let t = self.arrows[i].target;
                    if !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        seen
    }

    pub(crate) fn core_index(&self, x: Vertex) -> Result<usize> {
        match x {
            Vertex::Core(i) if i < self.vertices.len() => Ok(i),
            Vertex::Core(i) => Err(Error::UnknownVertex(format!("#{i}"))),
            v => Err(Error::RayVertex(self.vertex_name(v))),
        }
    }

    /// The full subquiver `Q_x` on everything reachable from `x`; rays come
    /// along when their attachment vertex is reachable.
    pub fn reachable_subquiver(&self, x: Vertex) -> Result<Quiver> {
        let x = self.core_index(x)?;
        let seen = self.reachable_mask(x);
        let mut b = QuiverBuilder::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if seen[i] {
                b.vertex(name)?;
            }
        }
        let mut kept: Vec<&ArrowDecl> = self
            .arrows
            .iter()
            .filter(|a| seen[a.source] && seen[a.target])
            .collect();
        kept.sort_by_key(|a| a.declared);
        for a in kept {
            b.arrow(&a.name, &self.vertices[a.source], &self.vertices[a.target])?;
        }
        for r in &self.rays {
            if seen[r.at] {
                b.ray(&r.name, &self.vertices[r.at])?;
            }
        }
        Ok(b.build())
    }

    /// Strongly connected components of the core (iterative Tarjan). Each
    /// component lists core vertex indices.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let succ: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                self.outgoing[v]
                    .iter()
                    .filter_map(|a| match *a {
                        Arrow::Core(i) => Some(self.arrows[i].target),
                        Arrow::Ray { .. } => None,
                    })
                    .collect()
            })
            .collect();

        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut next = 0;
        let mut components = Vec::new();

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            // (vertex, position in its successor list)
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos < succ[v].len() {
                    let w = succ[v][*pos];
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        components.push(comp);
                    }
                }
            }
        }
        components
    }

    /// Core vertices on at least one oriented cycle: members of a strongly
    /// connected component with more than one vertex, or carrying a loop.
    pub fn cycle_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.vertices.len()];
        for comp in self.strongly_connected_components() {
            if comp.len() > 1 {
                for v in comp {
                    mask[v] = true;
                }
            }
        }
        for a in &self.arrows {
            if a.source == a.target {
                mask[a.source] = true;
            }
        }
        mask
    }

    pub fn cycle_vertices(&self) -> BTreeSet<Vertex> {
        self.cycle_mask()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c)
            .map(|(i, _)| Vertex::Core(i))
            .collect()
    }

    /// All paths from `x` of length at most `max_len`, optionally only those
    /// ending at `y`, shortest first and lexicographic by arrow within a
    /// length. Ray paths are included up to the bound.
    pub fn enumerate_paths(&self, x: Vertex, max_len: usize, y: Option<Vertex>) -> Vec<Path> {
        let mut out = Vec::new();
        let mut level = vec![Path::trivial(x)];
        for len in 0..=max_len {
            for p in &level {
                if y.map_or(true, |y| p.target() == y) {
                    out.push(p.clone());
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &level {
                for a in self.out_arrows(p.target()) {
                    next.push(p.then(self, a).expect("out arrow composes"));
                }
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }
        out
    }

    /// Every path from `x`, or `None` when there are infinitely many
    /// (reachable cycle or ray).
    pub fn all_paths_from(&self, x: Vertex) -> Option<Vec<Path>> {
        if !self.is_left_finite_from(x) {
            return None;
        }
        Some(self.enumerate_paths(x, self.vertices.len(), None))
    }

    /// True when only finitely many paths start at `x`: the reachable part
    /// is ray-free and acyclic.
    pub fn is_left_finite_from(&self, x: Vertex) -> bool {
        let Vertex::Core(x) = x else {
            return false;
        };
        let seen = self.reachable_mask(x);
        if self.rays.iter().any(|r| seen[r.at]) {
            return false;
        }
        let cyc = self.cycle_mask();
        !seen.iter().zip(&cyc).any(|(s, c)| *s && *c)
    }

    pub fn is_acyclic(&self) -> bool {
        !self.cycle_mask().iter().any(|c| *c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan() -> Quiver {
        Quiver::from_parts(&["x"], &[("l", "x", "x")], &[]).unwrap()
    }

    fn a2() -> Quiver {
        Quiver::from_parts(&["x", "y"], &[("a", "x", "y")], &[]).unwrap()
    }

    fn kronecker() -> Quiver {
        Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap()
    }

    #[test]
    fn builder_rejects_unknown_and_duplicates() {
        let mut b = QuiverBuilder::new();
        assert_eq!(
            b.arrow("a", "x", "y").unwrap_err(),
            Error::UnknownVertex("x".into())
        );
        b.vertex("x").unwrap();
        assert_eq!(b.vertex("x").unwrap_err(), Error::DuplicateVertex("x".into()));
        b.arrow("a", "x", "x").unwrap();
        assert_eq!(
            b.arrow("a", "x", "x").unwrap_err(),
            Error::DuplicateArrow("a".into())
        );
        b.ray("r", "x").unwrap();
        assert_eq!(b.ray("r", "x").unwrap_err(), Error::DuplicateRay("r".into()));
        assert!(matches!(b.vertex("r.0"), Err(Error::InvalidId(_))));
        assert!(matches!(b.arrow("r+0", "x", "x"), Err(Error::InvalidId(_))));
    }

    #[test]
    fn ray_names_are_synthesised() {
        let q = Quiver::from_parts(&["x"], &[], &[("r", "x")]).unwrap();
        let v = q.vertex("r.3").unwrap();
        assert_eq!(v, Vertex::Ray { ray: 0, step: 3 });
        assert_eq!(q.vertex_name(v), "r.3");
        let a = q.arrow("r+0").unwrap();
        assert_eq!(q.source(a), Vertex::Core(0));
        assert_eq!(q.target(a), Vertex::Ray { ray: 0, step: 0 });
        let a = q.arrow("r+2").unwrap();
        assert_eq!(q.source(a), q.vertex("r.1").unwrap());
        assert_eq!(q.out_degree(q.vertex("x").unwrap()), 1);
    }

    #[test]
    fn opposite_examples() {
        let op = a2().opposite().unwrap();
        let a = op.arrow("a").unwrap();
        assert_eq!(op.vertex_name(op.source(a)), "y");
        assert_eq!(op.vertex_name(op.target(a)), "x");
        assert_eq!(jordan().opposite().unwrap(), jordan());
        let k = kronecker().opposite().unwrap();
        for name in ["a", "b"] {
            let a = k.arrow(name).unwrap();
            assert_eq!(k.vertex_name(k.source(a)), "y");
        }
        assert_eq!(kronecker().opposite().unwrap().opposite().unwrap(), kronecker());
        let rayed = Quiver::from_parts(&["x"], &[], &[("r", "x")]).unwrap();
        assert_eq!(rayed.opposite().unwrap_err(), Error::RaysPresent("opposite"));
    }

    #[test]
    fn reachable_subquiver_examples() {
        let q = Quiver::from_parts(&["x", "y", "z"], &[("a", "x", "y")], &[]).unwrap();
        let sub = q.reachable_subquiver(q.vertex("x").unwrap()).unwrap();
        assert_eq!(sub.vertex_names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(sub.arrow_count(), 1);

        let j = jordan();
        assert_eq!(j.reachable_subquiver(Vertex::Core(0)).unwrap(), j);

        let q = Quiver::from_parts(&["x", "y"], &[("a", "x", "y")], &[("r", "y")]).unwrap();
        let sub = q.reachable_subquiver(Vertex::Core(0)).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.ray_count(), 1);
        let sub = q.reachable_subquiver(Vertex::Core(1)).unwrap();
        assert_eq!(sub.vertex_names(), &["y".to_string()]);
        assert_eq!(sub.ray_count(), 1);
    }

    #[test]
    fn cycle_vertices_examples() {
        assert_eq!(jordan().cycle_vertices().len(), 1);
        assert!(a2().cycle_vertices().is_empty());
        let q = Quiver::from_parts(
            &["x", "y", "z"],
            &[("a", "x", "y"), ("b", "y", "x"), ("c", "y", "z")],
            &[],
        )
        .unwrap();
        let names: Vec<String> = q.cycle_vertices().into_iter().map(|v| q.vertex_name(v)).collect();
        assert_eq!(names, ["x", "y"]);
    }

    #[test]
    fn enumerate_paths_examples() {
        let q = a2();
        assert_eq!(q.enumerate_paths(Vertex::Core(0), 5, None).len(), 2);
        let j = jordan();
        let ps = j.enumerate_paths(Vertex::Core(0), 3, None);
        assert_eq!(ps.iter().map(Path::len).collect::<Vec<_>>(), [0, 1, 2, 3]);
        let k = kronecker();
        let ps = k.enumerate_paths(Vertex::Core(0), 1, Some(Vertex::Core(1)));
        let names: Vec<String> = ps.iter().map(|p| k.path_string(p)).collect();
        assert_eq!(names, ["x: a", "x: b"]);
    }

    #[test]
    fn enumerate_paths_follows_rays() {
        let q = Quiver::from_parts(&["x"], &[], &[("r", "x")]).unwrap();
        let ps = q.enumerate_paths(Vertex::Core(0), 3, None);
        let names: Vec<String> = ps.iter().map(|p| q.path_string(p)).collect();
        assert_eq!(names, ["x: -", "x: r+0", "x: r+0.r+1", "x: r+0.r+1.r+2"]);
        assert_eq!(q.vertex_name(ps[3].target()), "r.2");
    }

    #[test]
    fn path_rendering() {
        let q = Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "y", "x")], &[]).unwrap();
        let p = q.path_by_names("x", &["a", "b", "a"]).unwrap();
        assert_eq!(q.path_string(&p), "x: a.b.a");
        assert_eq!(q.composition_string(&p), "a·b·a");
        assert_eq!(q.composition_string(&Path::trivial(Vertex::Core(1))), "e_y");
        assert!(q.path_by_names("x", &["b"]).is_err());
    }

    #[test]
    fn left_finite_from() {
        assert!(a2().is_left_finite_from(Vertex::Core(0)));
        assert!(!jordan().is_left_finite_from(Vertex::Core(0)));
        let q = Quiver::from_parts(&["x"], &[], &[("r", "x")]).unwrap();
        assert!(!q.is_left_finite_from(Vertex::Core(0)));
    }
}
