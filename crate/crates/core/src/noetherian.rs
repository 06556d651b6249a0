//! Deciding when `Q(x)` is noetherian, and certifying the answer.
//!
//! The decision reads the local criterion graph-theoretically: `Q(x)` is
//! noetherian iff every vertex reachable from `x` that lies on an oriented
//! cycle has exactly one outgoing arrow (ray connectors count). A positive
//! verdict comes with the finite list of maximal paths and the `d^n` bound;
//! a negative one with an explicit strictly ascending chain of ideals.
//!
//! [`pumping_oracle`] and [`explore_maximal_paths`] answer the same
//! questions by brute force over walks, without strongly connected
//! components, and exist to cross-check the decision.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::path::{MaximalPath, Path, Tail};
use crate::poset::{IdealRelation, PathIdeal, PathPoset};
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::{Error, Result};

/// The `d^n` bound on the number of maximal paths: `n` paths from the base
/// end at a vertex with more than one outgoing arrow, and `d` is the largest
/// such out-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchBound {
    pub branch_paths: u128,
    pub max_branching: usize,
    /// `d^n`, or `None` if it does not fit in a `u128`.
    pub value: Option<u128>,
}

impl BranchBound {
    pub fn admits(&self, count: usize) -> bool {
        self.value.map_or(true, |v| count as u128 <= v)
    }
}

/// An oriented cycle at `u` together with a second arrow leaving `u`.
///
/// The ideals generated by `{δ∘cycleⁱ∘access : i ≤ n}` form a strictly
/// ascending chain, so `Q(x)` is not noetherian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonNoetherianWitness {
    base_name: String,
    pub access: Path,
    pub cycle: Path,
    pub branch: Arrow,
    branch_target: Vertex,
}

impl NonNoetherianWitness {
    pub fn base(&self) -> Vertex {
        self.access.start()
    }

    pub fn base_name(&self) -> &str {
        &self.base_name
    }

    /// The path `δ∘cycleⁱ∘access`.
    pub fn generator(&self, i: usize) -> Path {
        let mut arrows: Vec<Arrow> = self.access.arrows().to_vec();
        for _ in 0..i {
            arrows.extend_from_slice(self.cycle.arrows());
        }
        arrows.push(self.branch);
        Path::from_parts(self.access.start(), arrows, self.branch_target)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoetherianReport {
    pub vertex: Vertex,
    pub verdict: bool,
    /// Every maximal path from `vertex`, when the verdict is positive.
    pub maximal_paths: Vec<MaximalPath>,
    pub bound: Option<BranchBound>,
    pub witness: Option<NonNoetherianWitness>,
}

/// `Q_x` split as a finite core plus the reachable rays, joined by the rays'
/// connecting arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub core: Quiver,
    /// Ray indices in the original quiver.
    pub rays: Vec<usize>,
    /// The connecting arrows, one per ray, in the original quiver.
    pub connectors: Vec<Arrow>,
}

pub fn is_left_noetherian_at(q: &Quiver, x: Vertex) -> Result<NoetherianReport> {
    let xi = q.core_index(x)?;
    let reach = q.reachable_mask(xi);
    let cyc = q.cycle_mask();
    let violator = (0..q.vertex_count()).find(|&v| reach[v] && cyc[v] && q.out_degree(Vertex::Core(v)) != 1);
    match violator {
        None => {
            let maximal_paths = guided_maximal_paths(q, xi, &cyc);
            let bound = branch_bound(q, xi, &reach, &cyc);
            Ok(NoetherianReport {
                vertex: x,
                verdict: true,
                maximal_paths,
                bound: Some(bound),
                witness: None,
            })
        }
        Some(u) => Ok(NoetherianReport {
            vertex: x,
            verdict: false,
            maximal_paths: Vec::new(),
            bound: None,
            witness: Some(build_witness(q, xi, u)),
        }),
    }
}

/// One report per declared vertex, in id order.
pub fn is_left_noetherian(q: &Quiver) -> Result<Vec<NoetherianReport>> {
    q.vertices().map(|v| is_left_noetherian_at(q, v)).collect()
}

/// Right noetherianness is left noetherianness of the opposite quiver; the
/// reports (and their paths) refer to `q.opposite()`.
pub fn is_right_noetherian(q: &Quiver) -> Result<Vec<NoetherianReport>> {
    is_left_noetherian(&q.opposite()?)
}

pub fn maximal_paths(q: &Quiver, x: Vertex) -> Result<Vec<MaximalPath>> {
    let report = is_left_noetherian_at(q, x)?;
    match report.witness {
        Some(w) => Err(Error::NotNoetherian(alloc::boxed::Box::new(w))),
        None => Ok(report.maximal_paths),
    }
}

pub fn is_left_finite_at(q: &Quiver, x: Vertex) -> Result<bool> {
    q.core_index(x)?;
    Ok(q.is_left_finite_from(x))
}

/// For quivers with finitely many vertices: left noetherian iff every vertex
/// on an oriented cycle has exactly one outgoing arrow.
pub fn finite_quiver_criterion(q: &Quiver) -> Result<bool> {
    if q.has_rays() {
        return Err(Error::RaysPresent("the finite-quiver criterion"));
    }
    let cyc = q.cycle_mask();
    Ok((0..q.vertex_count()).all(|v| !cyc[v] || q.out_degree(Vertex::Core(v)) == 1))
}

pub fn decompose(q: &Quiver, x: Vertex) -> Result<Decomposition> {
    let report = is_left_noetherian_at(q, x)?;
    if let Some(w) = report.witness {
        return Err(Error::NotNoetherian(alloc::boxed::Box::new(w)));
    }
    let sub = q.reachable_subquiver(x)?;
    let mut b = crate::quiver::QuiverBuilder::new();
    for name in sub.vertex_names() {
        b.vertex(name)?;
    }
    let mut arrows: Vec<_> = sub.arrow_decls().iter().collect();
    arrows.sort_by_key(|a| a.declared);
    for a in arrows {
        b.arrow(&a.name, &sub.vertex_names()[a.source], &sub.vertex_names()[a.target])?;
    }
    let core = b.build();

    let mut rays = Vec::new();
    let mut connectors = Vec::new();
    for r in sub.ray_decls() {
        let ray = q.ray_index(&r.name).expect("ray of a subquiver");
        rays.push(ray);
        connectors.push(Arrow::Ray { ray, step: 0 });
    }

    // Every core cycle vertex has out-degree one inside Q_x, and no
    // connector leaves a cycle vertex.
    let cyc = core.cycle_mask();
    for v in 0..core.vertex_count() {
        if cyc[v] && sub.out_degree(Vertex::Core(v)) != 1 {
            return Err(Error::MalformedWitness("decomposition: branching cycle vertex"));
        }
    }
    for r in sub.ray_decls() {
        if cyc[r.at] {
            return Err(Error::MalformedWitness("decomposition: connector leaves a cycle"));
        }
    }
    Ok(Decomposition {
        core,
        rays,
        connectors,
    })
}

/// Independent non-noetherian verdict: is there a walk from `x` of length at
/// most `2|Q₀|` that revisits a vertex and ends where at least two arrows
/// start? Such a walk pumps to infinitely many branching paths; conversely a
/// reachable branching cycle vertex yields one of that length.
///
/// The search runs over walk states `(vertex, visited set, revisited)`, so
/// parallel arrows and permuted histories are explored once.
pub fn pumping_oracle(q: &Quiver, x: Vertex) -> Result<bool> {
    let xi = q.core_index(x)?;
    let n = q.vertex_count();
    let succ: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| {
            q.out_arrows(Vertex::Core(v))
                .into_iter()
                .filter_map(|a| match q.target(a) {
                    Vertex::Core(t) => Some(t),
                    Vertex::Ray { .. } => None,
                })
                .collect()
        })
        .collect();

    let mut start = vec![false; n];
    start[xi] = true;
    let mut frontier: BTreeSet<(usize, Vec<bool>, bool)> = BTreeSet::new();
    frontier.insert((xi, start, false));
    for len in 0..=2 * n {
        if frontier
            .iter()
            .any(|(v, _, revisited)| *revisited && q.out_degree(Vertex::Core(*v)) >= 2)
        {
            return Ok(true);
        }
        if len == 2 * n {
            break;
        }
        let mut next = BTreeSet::new();
        for (v, seen, revisited) in &frontier {
            for &w in &succ[*v] {
                if *revisited || seen[w] {
                    next.insert((w, Vec::new(), true));
                } else {
                    let mut seen = seen.clone();
                    seen[w] = true;
                    next.insert((w, seen, false));
                }
            }
        }
        frontier = next;
    }
    Ok(false)
}

/// Maximal paths by bounded exploration, without consulting the criterion.
///
/// A walk settles when it reaches a sink, enters a ray, or first returns to a
/// vertex along a loop of out-degree-one vertices (its future is then
/// forced). Returns `None` when some walk exceeds `2|Q₀|` arrows unsettled,
/// which happens exactly when there are infinitely many maximal paths.
pub fn explore_maximal_paths(q: &Quiver, x: Vertex) -> Result<Option<Vec<MaximalPath>>> {
    let xi = q.core_index(x)?;
    let cap = 2 * q.vertex_count();
    let mut out = Vec::new();
    // (path, vertices visited so far in order)
    let mut stack: Vec<(Path, Vec<usize>)> = vec![(Path::trivial(Vertex::Core(xi)), vec![xi])];
    while let Some((path, visits)) = stack.pop() {
        let Vertex::Core(v) = path.target() else {
            unreachable!("rays are settled on entry");
        };
        if let Some(first) = visits[..visits.len() - 1].iter().position(|&w| w == v) {
            let forced = visits[first..visits.len() - 1]
                .iter()
                .all(|&w| q.out_degree(Vertex::Core(w)) == 1);
            if forced {
                let prefix = path.prefix(q, first);
                let cycle = Path::from_parts(
                    Vertex::Core(v),
                    path.arrows()[first..].to_vec(),
                    Vertex::Core(v),
                );
                out.push(MaximalPath {
                    prefix,
                    tail: Tail::Cycle(cycle),
                });
                continue;
            }
        }
        if path.len() >= cap {
            return Ok(None);
        }
        let outs = q.out_arrows(Vertex::Core(v));
        if outs.is_empty() {
            out.push(MaximalPath {
                prefix: path,
                tail: Tail::None,
            });
            continue;
        }
        for a in outs.into_iter().rev() {
            match a {
                Arrow::Ray { ray, .. } => out.push(MaximalPath {
                    prefix: path.clone(),
                    tail: Tail::Ray(ray),
                }),
                Arrow::Core(_) => {
                    let next = path.then(q, a).expect("out arrow composes");
                    let Vertex::Core(t) = next.target() else { unreachable!() };
                    let mut visits = visits.clone();
                    visits.push(t);
                    stack.push((next, visits));
                }
            }
        }
    }
    out.sort();
    Ok(Some(out))
}

/// `chain(0) ⊊ chain(1) ⊊ ⋯ ⊊ chain(n)` with
/// `chain(i) = ⟨δ∘cycleʲ∘access : j ≤ i⟩`; strictness and the antichain
/// property are verified before returning.
pub fn witness_chain<'q>(q: &'q Quiver, w: &NonNoetherianWitness, n: usize) -> Result<Vec<PathIdeal<'q>>> {
    if w.cycle.is_trivial() {
        return Err(Error::MalformedWitness("the cycle is trivial"));
    }
    if w.cycle.start() != w.cycle.target() || w.access.target() != w.cycle.start() {
        return Err(Error::MalformedWitness("the cycle is not based at the end of the access path"));
    }
    if w.cycle.arrows()[0] == w.branch {
        return Err(Error::MalformedWitness("the branch arrow starts the cycle"));
    }
    if q.source(w.branch) != w.cycle.start() {
        return Err(Error::MalformedWitness("the branch arrow does not leave the cycle"));
    }
    let poset = PathPoset::new(q, w.base())?;
    let mut chain: Vec<PathIdeal<'q>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let ideal = poset.ideal((0..=i).map(|j| w.generator(j)))?;
        if ideal.generators().len() != i + 1 || !ideal.is_antichain() {
            return Err(Error::MalformedWitness("generators are not an antichain"));
        }
        if let Some(prev) = chain.last() {
            if prev.compare(&ideal)? != IdealRelation::Contained {
                return Err(Error::MalformedWitness("chain is not strictly ascending"));
            }
        }
        chain.push(ideal);
    }
    Ok(chain)
}

fn guided_maximal_paths(q: &Quiver, x: usize, cyc: &[bool]) -> Vec<MaximalPath> {
    let mut out = Vec::new();
    let mut stack = vec![Path::trivial(Vertex::Core(x))];
    while let Some(path) = stack.pop() {
        let Vertex::Core(v) = path.target() else { unreachable!() };
        if cyc[v] {
            // Out-degree one everywhere on the cycle: the rest is forced.
            let mut cycle = Path::trivial(Vertex::Core(v));
            loop {
                let a = q.out_arrows(cycle.target())[0];
                cycle = cycle.then(q, a).expect("out arrow composes");
                if cycle.target() == Vertex::Core(v) {
                    break;
                }
            }
            out.push(MaximalPath {
                prefix: path,
                tail: Tail::Cycle(cycle),
            });
            continue;
        }
        let outs = q.out_arrows(Vertex::Core(v));
        if outs.is_empty() {
            out.push(MaximalPath {
                prefix: path,
                tail: Tail::None,
            });
            continue;
        }
        for a in outs.into_iter().rev() {
            match a {
                Arrow::Ray { ray, .. } => out.push(MaximalPath {
                    prefix: path.clone(),
                    tail: Tail::Ray(ray),
                }),
                Arrow::Core(_) => stack.push(path.then(q, a).expect("out arrow composes")),
            }
        }
    }
    out.sort();
    out
}

/// Paths to branching vertices never pass a cycle vertex (past one, the
/// walk is forced), so they are counted on the acyclic non-cycle part.
fn branch_bound(q: &Quiver, x: usize, reach: &[bool], cyc: &[bool]) -> BranchBound {
    let n = q.vertex_count();
    let live: Vec<bool> = (0..n).map(|v| reach[v] && !cyc[v]).collect();
    let mut indeg = vec![0usize; n];
    for a in q.arrow_decls() {
        if live[a.source] && live[a.target] {
            indeg[a.target] += 1;
        }
    }
    let mut count = vec![0u128; n];
    if live[x] {
        count[x] = 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| live[v] && indeg[v] == 0).collect();
    while let Some(v) = queue.pop_front() {
        for a in q.out_arrows(Vertex::Core(v)) {
            if let Arrow::Core(i) = a {
                let t = q.arrow_decls()[i].target;
                if live[t] {
                    count[t] = count[t].saturating_add(count[v]);
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
    }
    let mut branch_paths = 0u128;
    let mut max_branching = 1;
    for v in 0..n {
        let d = q.out_degree(Vertex::Core(v));
        if live[v] && d > 1 && count[v] > 0 {
            branch_paths = branch_paths.saturating_add(count[v]);
            max_branching = max_branching.max(d);
        }
    }
    let value = u32::try_from(branch_paths)
        .ok()
        .and_then(|e| (max_branching as u128).checked_pow(e));
    BranchBound {
        branch_paths,
        max_branching,
        value,
    }
}

/// Witness at the cycle vertex `u`: the shortest (then least) access path,
/// the lexicographically least simple cycle, and the least other arrow.
fn build_witness(q: &Quiver, x: usize, u: usize) -> NonNoetherianWitness {
    // Breadth-first search with sorted adjacency.
    let n = q.vertex_count();
    let mut parent: Vec<Option<(usize, Arrow)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        if v == u {
            break;
        }
        for a in q.out_arrows(Vertex::Core(v)) {
            if let Vertex::Core(t) = q.target(a) {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((v, a));
                    queue.push_back(t);
                }
            }
        }
    }
    let mut arrows = Vec::new();
    let mut v = u;
    while let Some((p, a)) = parent[v] {
        arrows.push(a);
        v = p;
    }
    arrows.reverse();
    let access = q.path(Vertex::Core(x), &arrows).expect("bfs path composes");

    let cycle = least_simple_cycle(q, u).expect("u lies on a cycle");
    let first = cycle.arrows()[0];
    let branch = q
        .out_arrows(Vertex::Core(u))
        .into_iter()
        .find(|a| *a != first)
        .expect("u has out-degree at least two");
    NonNoetherianWitness {
        base_name: q.vertex_name(Vertex::Core(x)),
        access,
        cycle,
        branch,
        branch_target: q.target(branch),
    }
}

/// Depth-first in arrow order; no simple cycle at `u` is a prefix of
/// another, so the first one found is the least.
fn least_simple_cycle(q: &Quiver, u: usize) -> Option<Path> {
    fn dfs(q: &Quiver, u: usize, path: &mut Vec<Arrow>, on_path: &mut Vec<bool>, v: usize) -> bool {
        for a in q.out_arrows(Vertex::Core(v)) {
            let Vertex::Core(t) = q.target(a) else { continue };
            if t == u {
                path.push(a);
                return true;
            }
            if !on_path[t] {
                on_path[t] = true;
                path.push(a);
                if dfs(q, u, path, on_path, t) {
                    return true;
                }
                path.pop();
                on_path[t] = false;
            }
        }
        false
    }
    let mut path = Vec::new();
    let mut on_path = vec![false; q.vertex_count()];
    on_path[u] = true;
    if dfs(q, u, &mut path, &mut on_path, u) {
        Some(q.path(Vertex::Core(u), &path).expect("dfs cycle composes"))
    } else {
        None
    }
}
