//! Serialisable report types. Paths appear in their `x: a.b` form, so every
//! report can be read back without the quiver it was computed on.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use qnoeth_core::noetherian::{BranchBound, NoetherianReport, NonNoetherianWitness};
use qnoeth_core::{MaximalPath, Quiver, Tail};

/// What one invocation produced. `text` is the human-readable rendering and
/// is not part of the JSON document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandReport {
    pub command: String,
    /// SHA-256 over the bytes of every input file, in the order read.
    pub input_digest: Option<String>,
    pub exit_code: i32,
    pub result: Option<Value>,
    pub error: Option<String>,
    #[serde(skip)]
    pub text: String,
}

impl CommandReport {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TailDto {
    None,
    Cycle { cycle: String },
    Ray { ray: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalPathDto {
    pub prefix: String,
    pub tail: TailDto,
}

impl MaximalPathDto {
    pub fn new(q: &Quiver, m: &MaximalPath) -> Self {
        let tail = match &m.tail {
            Tail::None => TailDto::None,
            Tail::Cycle(c) => TailDto::Cycle {
                cycle: q.path_string(c),
            },
            Tail::Ray(r) => TailDto::Ray {
                ray: q.ray_name(*r).to_string(),
            },
        };
        MaximalPathDto {
            prefix: q.path_string(&m.prefix),
            tail,
        }
    }

    pub fn display(&self) -> String {
        match &self.tail {
            TailDto::None => self.prefix.clone(),
            TailDto::Cycle { cycle } => {
                let arrows = cycle.split_once(": ").map_or(cycle.as_str(), |(_, a)| a);
                format!("{}, then ({arrows}) forever", self.prefix)
            }
            TailDto::Ray { ray } => format!("{}, then along ray {ray}", self.prefix),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundDto {
    /// Paths from the base ending at a branching vertex (`n`).
    pub branch_paths: String,
    /// Largest out-degree among those vertices (`d`).
    pub max_branching: usize,
    /// `d^n`, absent when it overflows.
    pub value: Option<String>,
}

impl From<&BranchBound> for BoundDto {
    fn from(b: &BranchBound) -> Self {
        BoundDto {
            branch_paths: b.branch_paths.to_string(),
            max_branching: b.max_branching,
            value: b.value.map(|v| v.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDto {
    pub access: String,
    pub cycle: String,
    pub branch: String,
}

impl WitnessDto {
    pub fn new(q: &Quiver, w: &NonNoetherianWitness) -> Self {
        WitnessDto {
            access: q.path_string(&w.access),
            cycle: q.path_string(&w.cycle),
            branch: q.arrow_name(w.branch),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub vertex: String,
    pub verdict: bool,
    pub maximal_paths: Vec<MaximalPathDto>,
    pub bound: Option<BoundDto>,
    pub witness: Option<WitnessDto>,
    /// Present when finiteness was asked for.
    pub left_finite: Option<bool>,
}

impl VertexReport {
    pub fn new(q: &Quiver, r: &NoetherianReport) -> Self {
        VertexReport {
            vertex: q.vertex_name(r.vertex),
            verdict: r.verdict,
            maximal_paths: r.maximal_paths.iter().map(|m| MaximalPathDto::new(q, m)).collect(),
            bound: r.bound.as_ref().map(BoundDto::from),
            witness: r.witness.as_ref().map(|w| WitnessDto::new(q, w)),
            left_finite: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub side: String,
    pub vertices: Vec<VertexReport>,
    /// The finite-quiver criterion, for whole ray-free quivers.
    pub finite_quiver_criterion: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalPathsReport {
    pub vertices: Vec<VertexReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDto {
    pub id: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub vertex: String,
    pub verdict: bool,
    pub core_vertices: Vec<String>,
    pub core_arrows: Vec<ArrowDto>,
    pub rays: Vec<String>,
    pub connectors: Vec<ArrowDto>,
    pub witness: Option<WitnessDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub vertex: String,
    pub verdict: bool,
    pub witness: Option<WitnessDto>,
    /// Generator lists of the ascending chain.
    pub chain: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "lowercase")]
pub enum AxiomFailure {
    G1 { phi: String, psi: String, omega: String },
    G2 { kind: String, a: Option<String>, b: Option<String>, target: Option<String> },
    Refinement { phi: String, psi: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerVertex {
    pub vertex: String,
    pub pass: bool,
    pub failures: Vec<AxiomFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    pub truncate: usize,
    pub order: Vec<String>,
    pub vertices: Vec<GroebnerVertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AccDto {
    pub object: String,
    pub ideals: usize,
    pub height: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryCheckReport {
    pub objects: usize,
    pub morphisms: usize,
    pub g1: Option<AxiomFailure>,
    pub g2: Option<AxiomFailure>,
    pub acc: Vec<AccDto>,
    pub acc_holds: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeReport {
    pub vertex: String,
    pub field: u8,
    pub generator_dim: usize,
    pub dims: Vec<(String, usize)>,
    pub basis: Vec<(String, Vec<String>)>,
    /// The representation in the rep file format.
    pub representation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubrepsReport {
    pub source: String,
    pub field: u8,
    pub count: usize,
    /// Dimension vectors of all subrepresentations, sorted.
    pub dimension_vectors: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedEntry {
    pub generators: Vec<String>,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedReport {
    pub vertex: String,
    pub field: u8,
    pub ideals: usize,
    pub injective: bool,
    pub order_embedding: bool,
    pub entries: Vec<EmbedEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionSample {
    pub dims: Vec<usize>,
    pub hom_dim: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum HomReport {
    /// `dim Hom(M, N)` for two given representations.
    Pair { field: u8, dim: usize },
    /// `dim Hom(N[Q(x,−)], M) = dim N · dim M(x)` on given or sampled `M`.
    Adjunction {
        vertex: String,
        field: u8,
        generator_dim: usize,
        seed: Option<u64>,
        samples: Vec<AdjunctionSample>,
        holds: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub field: u8,
    pub dim: usize,
    pub truncation: Option<usize>,
    pub basis: Vec<String>,
    pub idempotents: Vec<String>,
    pub verdict: bool,
    pub criterion: String,
    pub left_ideals: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraNoetherianReport {
    pub verdict: bool,
    pub criterion: String,
    pub left_ideals: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuTerm {
    pub index: usize,
    pub path: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuReport {
    pub vertex: String,
    pub terms: Vec<NuTerm>,
}
