//! The `qnoeth` command line. [`run`] parses an argument vector, executes
//! one subcommand and returns its [`CommandReport`]; printing is left to the
//! caller.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use qnoeth_core::algebra::{algebra_noetherian, PathAlgebra};
use qnoeth_core::free::FreeRepresentation;
use qnoeth_core::groebner::category::{check_finite_category, CategoryG2Violation};
use qnoeth_core::groebner::{
    check_g1, check_g2, check_refinement, ArrowRank, G2Violation, GroebnerOrder, Outcome,
};
use qnoeth_core::matrix::Matrix;
use qnoeth_core::noetherian::{
    self, decompose, is_left_finite_at, is_left_noetherian_at, witness_chain,
};
use qnoeth_core::poset::{IdealRelation, PathPoset};
use qnoeth_core::rep::{enumerate_subrepresentations, hom_representations, Representation};
use qnoeth_core::{PrimeField, Quiver, Vertex};

use crate::error::InputError;
use crate::format;
use crate::report::*;

const CRITERION: &str =
    "left noetherian iff the quiver has finitely many arrows and every vertex on an oriented cycle \
     has exactly one outgoing arrow";

#[derive(Debug, Parser)]
#[command(name = "qnoeth", version, about = "Noetherian quivers, Groebner orders and representations")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Noetherian (and optionally finiteness) verdicts per vertex.
    Check {
        quiver: PathBuf,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
        #[arg(long)]
        finite: bool,
    },
    /// List the maximal paths from each vertex.
    MaximalPaths {
        quiver: PathBuf,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Split the part reachable from a vertex into a finite core and rays.
    Decompose {
        quiver: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// A strictly ascending chain of ideals at a non-noetherian vertex.
    Witness {
        quiver: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
    /// Check (G1), (G2) and refinement for the degree-lex order.
    GroebnerCheck {
        quiver: PathBuf,
        #[arg(long, default_value_t = 4)]
        truncate: usize,
        /// Arrow ids in rank order, lowest first.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Validate a composition table and check its order.
    CategoryCheck { table: PathBuf },
    /// Representations over a prime field.
    #[command(subcommand)]
    Rep(RepCommand),
    /// The path algebra.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// The subsequence selector on an eventually periodic path sequence.
    Nu {
        quiver: PathBuf,
        #[arg(long)]
        sequence: PathBuf,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Debug, Args)]
struct RepArgs {
    quiver: PathBuf,
    #[arg(long, default_value_t = 2)]
    field: u32,
    #[arg(long, default_value_t = 1)]
    dim: usize,
    #[arg(long)]
    vertex: Option<String>,
    /// Representation files.
    #[arg(long)]
    rep: Vec<PathBuf>,
    /// Sampled representations for `hom` without `--rep`.
    #[arg(long, default_value_t = 20)]
    samples: usize,
}

#[derive(Debug, Subcommand)]
enum RepCommand {
    /// The free representation on an m-dimensional space at a vertex.
    Free(RepArgs),
    /// Enumerate subrepresentations of a free or given representation.
    Subreps(RepArgs),
    /// Hom dimensions, or the adjunction identity for free representations.
    Hom(RepArgs),
    /// Embed the ideals of Q(x) into subrepresentations of the free one.
    Embed(RepArgs),
}

#[derive(Debug, Subcommand)]
enum AlgebraCommand {
    /// Dimension, basis, idempotents and verdict.
    Info {
        quiver: PathBuf,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// The noetherian verdict alone.
    Noetherian {
        quiver: PathBuf,
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
    /// Info for paths of length at most L.
    Truncate {
        length: usize,
        quiver: PathBuf,
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Check { .. } => "check".into(),
            Command::MaximalPaths { .. } => "maximal-paths".into(),
            Command::Decompose { .. } => "decompose".into(),
            Command::Witness { .. } => "witness".into(),
            Command::GroebnerCheck { .. } => "groebner-check".into(),
            Command::CategoryCheck { .. } => "category-check".into(),
            Command::Rep(r) => match r {
                RepCommand::Free(_) => "rep free",
                RepCommand::Subreps(_) => "rep subreps",
                RepCommand::Hom(_) => "rep hom",
                RepCommand::Embed(_) => "rep embed",
            }
            .into(),
            Command::Algebra(a) => match a {
                AlgebraCommand::Info { .. } => "algebra info",
                AlgebraCommand::Noetherian { .. } => "algebra noetherian",
                AlgebraCommand::Truncate { .. } => "algebra truncate",
            }
            .into(),
            Command::Nu { .. } => "nu".into(),
        }
    }
}

/// Result, text and verdict of a successful command.
struct Done {
    result: serde_json::Value,
    text: String,
    negative: bool,
}

impl Done {
    fn new(result: &impl Serialize, text: String, negative: bool) -> Self {
        Done {
            result: serde_json::to_value(result).expect("reports serialise"),
            text,
            negative,
        }
    }
}

/// Reads input files and hashes them as it goes.
struct Inputs {
    hasher: Sha256,
    read_any: bool,
}

impl Inputs {
    fn read(&mut self, path: &FsPath) -> Result<String, InputError> {
        let bytes = fs::read(path).map_err(|source| InputError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.hasher.update(&bytes);
        self.read_any = true;
        String::from_utf8(bytes).map_err(|_| InputError::Usage(format!("{} is not UTF-8", path.display())))
    }

    fn quiver(&mut self, path: &FsPath) -> Result<Quiver, InputError> {
        let text = self.read(path)?;
        format::parse_quiver(&text).map_err(|source| InputError::Format {
            path: path.to_path_buf(),
            source,
        })
    }

    fn digest(self) -> Option<String> {
        self.read_any.then(|| hex::encode(self.hasher.finalize()))
    }
}

pub fn run<I, T>(argv: I) -> CommandReport
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return CommandReport {
                command: String::new(),
                input_digest: None,
                exit_code: code,
                result: None,
                error: (code == 2).then(|| msg.clone()),
                text: if code == 0 { msg } else { String::new() },
            };
        }
    };
    let mut inputs = Inputs {
        hasher: Sha256::new(),
        read_any: false,
    };
    let command = cli.command.name();
    let outcome = dispatch(&cli, &mut inputs);
    let input_digest = inputs.digest();
    match outcome {
        Ok(done) => CommandReport {
            command,
            input_digest,
            exit_code: i32::from(done.negative),
            result: Some(done.result),
            error: None,
            text: done.text,
        },
        Err(e) => CommandReport {
            command,
            input_digest,
            exit_code: 2,
            result: None,
            error: Some(e.to_string()),
            text: String::new(),
        },
    }
}

fn dispatch(cli: &Cli, inputs: &mut Inputs) -> Result<Done, InputError> {
    match &cli.command {
        Command::Check {
            quiver,
            vertex,
            side,
            finite,
        } => {
            let q = inputs.quiver(quiver)?;
            check(&q, vertex.as_deref(), *side, *finite)
        }
        Command::MaximalPaths { quiver, vertex } => {
            let q = inputs.quiver(quiver)?;
            maximal_paths(&q, vertex.as_deref())
        }
        Command::Decompose { quiver, vertex } => {
            let q = inputs.quiver(quiver)?;
            decomposition(&q, vertex)
        }
        Command::Witness { quiver, vertex, steps } => {
            let q = inputs.quiver(quiver)?;
            witness(&q, vertex, *steps)
        }
        Command::GroebnerCheck {
            quiver,
            truncate,
            order,
            vertex,
        } => {
            let q = inputs.quiver(quiver)?;
            groebner(&q, *truncate, order.as_deref(), vertex.as_deref())
        }
        Command::CategoryCheck { table } => {
            let text = inputs.read(table)?;
            let c = format::parse_category(&text).map_err(|source| InputError::Format {
                path: table.clone(),
                source,
            })?;
            category(&c)
        }
        Command::Rep(r) => rep(r, inputs, cli.seed),
        Command::Algebra(a) => match a {
            AlgebraCommand::Info { quiver, field, truncate } => {
                let q = inputs.quiver(quiver)?;
                algebra_info(&q, PrimeField::new(*field)?, *truncate)
            }
            AlgebraCommand::Truncate { length, quiver, field } => {
                let q = inputs.quiver(quiver)?;
                algebra_info(&q, PrimeField::new(*field)?, Some(*length))
            }
            AlgebraCommand::Noetherian { quiver, field } => {
                let q = inputs.quiver(quiver)?;
                let r = algebra_noetherian(&q, PrimeField::new(*field)?)?;
                let mut text = format!("path algebra left noetherian: {}\n", yes_no(r.verdict));
                if let Some(n) = r.left_ideals {
                    let _ = writeln!(text, "left ideals: {n}");
                }
                let _ = writeln!(text, "criterion: {CRITERION}");
                let report = AlgebraNoetherianReport {
                    verdict: r.verdict,
                    criterion: CRITERION.into(),
                    left_ideals: r.left_ideals,
                };
                Ok(Done::new(&report, text, !r.verdict))
            }
        },
        Command::Nu { quiver, sequence, count } => {
            let q = inputs.quiver(quiver)?;
            let text = inputs.read(sequence)?;
            let seq = format::parse_sequence(&q, &text).map_err(|source| InputError::Format {
                path: sequence.clone(),
                source,
            })?;
            nu(&q, &seq, *count)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn selected_vertices(q: &Quiver, vertex: Option<&str>) -> Result<Vec<Vertex>, InputError> {
    match vertex {
        Some(v) => Ok(vec![q.vertex(v)?]),
        None => Ok(q.vertices().collect()),
    }
}

fn vertex_line(r: &VertexReport) -> String {
    let mut s = format!("noetherian: {}", yes_no(r.verdict));
    if r.verdict {
        let _ = write!(s, "; maximal paths: {}", r.maximal_paths.len());
    } else if let Some(w) = &r.witness {
        let _ = write!(s, "; witness: access {}, cycle {}, branch {}", w.access, w.cycle, w.branch);
    }
    if let Some(f) = r.left_finite {
        let _ = write!(s, "; finite: {}", yes_no(f));
    }
    s
}

fn check(q: &Quiver, vertex: Option<&str>, side: Side, finite: bool) -> Result<Done, InputError> {
    let (target, side_name) = match side {
        Side::Left => (q.clone(), "left"),
        Side::Right => (q.opposite()?, "right"),
    };
    let mut vertices = Vec::new();
    for v in selected_vertices(&target, vertex)? {
        let mut r = VertexReport::new(&target, &is_left_noetherian_at(&target, v)?);
        if finite {
            r.left_finite = Some(is_left_finite_at(&target, v)?);
        }
        vertices.push(r);
    }
    let finite_quiver_criterion = (vertex.is_none() && !q.has_rays())
        .then(|| noetherian::finite_quiver_criterion(&target))
        .transpose()?;
    let negative = vertices.iter().any(|r| !r.verdict || r.left_finite == Some(false));
    let mut text = String::new();
    for r in &vertices {
        let line = format!("{side_name} {}", vertex_line(r));
        if vertex.is_some() {
            let _ = writeln!(text, "{line}");
        } else {
            let _ = writeln!(text, "{}: {line}", r.vertex);
        }
    }
    if let Some(c) = finite_quiver_criterion {
        let _ = writeln!(text, "every cycle vertex has out-degree 1: {}", yes_no(c));
    }
    let report = CheckReport {
        side: side_name.into(),
        vertices,
        finite_quiver_criterion,
    };
    Ok(Done::new(&report, text, negative))
}

fn maximal_paths(q: &Quiver, vertex: Option<&str>) -> Result<Done, InputError> {
    let mut vertices = Vec::new();
    let mut text = String::new();
    for v in selected_vertices(q, vertex)? {
        let r = VertexReport::new(q, &is_left_noetherian_at(q, v)?);
        if r.verdict {
            let bound = r.bound.as_ref().and_then(|b| b.value.clone()).unwrap_or_else(|| "overflow".into());
            let _ = writeln!(text, "{}: maximal paths: {} (bound {bound})", r.vertex, r.maximal_paths.len());
            for m in &r.maximal_paths {
                let _ = writeln!(text, "  {}", m.display());
            }
        } else {
            let _ = writeln!(text, "{}: not left noetherian; infinitely many maximal paths", r.vertex);
        }
        vertices.push(r);
    }
    let negative = vertices.iter().any(|r| !r.verdict);
    Ok(Done::new(&MaximalPathsReport { vertices }, text, negative))
}

fn arrow_dto(q: &Quiver, a: qnoeth_core::Arrow) -> ArrowDto {
    ArrowDto {
        id: q.arrow_name(a),
        source: q.vertex_name(q.source(a)),
        target: q.vertex_name(q.target(a)),
    }
}

fn decomposition(q: &Quiver, vertex: &str) -> Result<Done, InputError> {
    let v = q.vertex(vertex)?;
    let r = is_left_noetherian_at(q, v)?;
    if let Some(w) = &r.witness {
        let w = WitnessDto::new(q, w);
        let text = format!(
            "{vertex} is not left noetherian (cycle {}, branch {}); no decomposition\n",
            w.cycle, w.branch
        );
        let report = DecomposeReport {
            vertex: vertex.into(),
            verdict: false,
            core_vertices: Vec::new(),
            core_arrows: Vec::new(),
            rays: Vec::new(),
            connectors: Vec::new(),
            witness: Some(w),
        };
        return Ok(Done::new(&report, text, true));
    }
    let d = decompose(q, v)?;
    let report = DecomposeReport {
        vertex: vertex.into(),
        verdict: true,
        core_vertices: d.core.vertex_names().to_vec(),
        core_arrows: d.core.arrows().map(|a| arrow_dto(&d.core, a)).collect(),
        rays: d.rays.iter().map(|&r| q.ray_name(r).to_string()).collect(),
        connectors: d.connectors.iter().map(|&a| arrow_dto(q, a)).collect(),
        witness: None,
    };
    let mut text = format!("core: {} vertices, {} arrows\n", report.core_vertices.len(), report.core_arrows.len());
    let _ = write!(text, "{}", format::serialize_quiver(&d.core));
    for (r, c) in report.rays.iter().zip(&report.connectors) {
        let _ = writeln!(text, "ray {r} entered by {} : {} -> {}", c.id, c.source, c.target);
    }
    Ok(Done::new(&report, text, false))
}

fn witness(q: &Quiver, vertex: &str, steps: usize) -> Result<Done, InputError> {
    let v = q.vertex(vertex)?;
    let r = is_left_noetherian_at(q, v)?;
    let Some(w) = &r.witness else {
        let report = WitnessReport {
            vertex: vertex.into(),
            verdict: true,
            witness: None,
            chain: Vec::new(),
        };
        return Ok(Done::new(&report, format!("{vertex} is left noetherian; no witness\n"), false));
    };
    let chain = witness_chain(q, w, steps)?;
    let gens: Vec<Vec<String>> = chain
        .iter()
        .map(|i| i.generators().iter().map(|p| q.path_string(p)).collect())
        .collect();
    let dto = WitnessDto::new(q, w);
    let mut text = format!(
        "{vertex} is not left noetherian: access {}, cycle {}, branch {}\n",
        dto.access, dto.cycle, dto.branch
    );
    for (i, g) in gens.iter().enumerate() {
        let sep = if i + 1 < gens.len() { " ⊊" } else { "" };
        let _ = writeln!(text, "I{i} = <{}>{sep}", g.join(", "));
    }
    let report = WitnessReport {
        vertex: vertex.into(),
        verdict: false,
        witness: Some(dto),
        chain: gens,
    };
    Ok(Done::new(&report, text, true))
}

fn groebner(q: &Quiver, l: usize, order: Option<&[String]>, vertex: Option<&str>) -> Result<Done, InputError> {
    let rank = match order {
        Some(names) => {
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            ArrowRank::from_names(q, &names)?
        }
        None => ArrowRank::declaration(q),
    };
    let vertices = selected_vertices(q, vertex)?;
    for &v in &vertices {
        rank.check_covers(q, v)?;
    }
    let ranked: Vec<String> = rank.ranked().into_iter().map(|a| q.arrow_name(a)).collect();
    let ord = GroebnerOrder::new(rank);
    let p = |path: &qnoeth_core::Path| q.path_string(path);
    let mut out = Vec::new();
    for v in vertices {
        let mut failures = Vec::new();
        if let Outcome::Counterexample(c) = check_g1(&ord, q, v, l)? {
            failures.push(AxiomFailure::G1 {
                phi: p(&c.phi),
                psi: p(&c.psi),
                omega: p(&c.omega),
            });
        }
        if let Outcome::Counterexample(c) = check_g2(&ord, q, v, l)? {
            failures.push(match c {
                G2Violation::NotTotal { a, b } => AxiomFailure::G2 {
                    kind: "not-total".into(),
                    a: Some(p(&a)),
                    b: Some(p(&b)),
                    target: None,
                },
                G2Violation::Inconsistent { a, b } => AxiomFailure::G2 {
                    kind: "inconsistent".into(),
                    a: Some(p(&a)),
                    b: Some(p(&b)),
                    target: None,
                },
                G2Violation::NoMaximumCertificate { target } => AxiomFailure::G2 {
                    kind: "no-maximum-certificate".into(),
                    a: None,
                    b: None,
                    target: Some(q.vertex_name(target)),
                },
            });
        }
        if let Outcome::Counterexample(c) = check_refinement(&ord, q, v, l)? {
            failures.push(AxiomFailure::Refinement {
                phi: p(&c.phi),
                psi: p(&c.psi),
            });
        }
        out.push(GroebnerVertex {
            vertex: q.vertex_name(v),
            pass: failures.is_empty(),
            failures,
        });
    }
    let report = GroebnerReport {
        truncate: l,
        order: ranked,
        vertices: out,
    };
    let mut text = format!("degree-lex order, arrow rank {}, truncation {l}\n", report.order.join(" < "));
    for v in &report.vertices {
        let status = if v.pass { "G1 ok, G2 ok, refinement ok".to_string() } else { describe(&v.failures) };
        let _ = writeln!(text, "{}: {status}", v.vertex);
    }
    let negative = report.vertices.iter().any(|v| !v.pass);
    Ok(Done::new(&report, text, negative))
}

fn describe(failures: &[AxiomFailure]) -> String {
    failures
        .iter()
        .map(|f| match f {
            AxiomFailure::G1 { phi, psi, omega } => format!("G1 fails for phi {phi}, psi {psi}, omega {omega}"),
            AxiomFailure::G2 { kind, a, b, target } => match (a, b, target) {
                (Some(a), Some(b), _) => format!("G2 fails ({kind}) at {a} and {b}"),
                (_, _, Some(t)) => format!("G2 fails ({kind}) at target {t}"),
                (Some(a), None, None) => format!("G2 fails ({kind}) at {a}"),
                _ => format!("G2 fails ({kind})"),
            },
            AxiomFailure::Refinement { phi, psi } => format!("refinement fails: {phi} <= {psi} but ordered above"),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn category(c: &qnoeth_core::groebner::category::FiniteCategory) -> Result<Done, InputError> {
    let r = check_finite_category(c)?;
    let name = |m: usize| c.morphisms()[m].name.clone();
    let g1 = r.g1.counterexample().map(|x| AxiomFailure::G1 {
        phi: name(x.phi),
        psi: name(x.psi),
        omega: name(x.omega),
    });
    let g2 = r.g2.counterexample().map(|x| match *x {
        CategoryG2Violation::Incomparable { a, b } => AxiomFailure::G2 {
            kind: "incomparable".into(),
            a: Some(name(a)),
            b: Some(name(b)),
            target: None,
        },
        CategoryG2Violation::Cyclic { a } => AxiomFailure::G2 {
            kind: "cyclic".into(),
            a: Some(name(a)),
            b: None,
            target: None,
        },
    });
    let acc: Vec<AccDto> = r
        .acc
        .iter()
        .map(|e| AccDto {
            object: c.objects()[e.object].clone(),
            ideals: e.ideals,
            height: e.height,
        })
        .collect();
    let pass = g1.is_none() && g2.is_none() && r.acc_holds;
    let mut text = format!("objects: {}; morphisms: {}\n", c.objects().len(), c.morphisms().len());
    let fails: Vec<AxiomFailure> = g1.iter().chain(&g2).cloned().collect();
    let _ = writeln!(text, "{}", if fails.is_empty() { "G1 ok, G2 ok".to_string() } else { describe(&fails) });
    for e in &acc {
        let _ = writeln!(text, "{}: left ideals: {}; longest chain: {}", e.object, e.ideals, e.height);
    }
    let report = CategoryCheckReport {
        objects: c.objects().len(),
        morphisms: c.morphisms().len(),
        g1,
        g2,
        acc,
        acc_holds: r.acc_holds,
        pass,
    };
    Ok(Done::new(&report, text, !pass))
}

fn free_at(q: &Quiver, args: &RepArgs, field: PrimeField) -> Result<FreeRepresentation, InputError> {
    let name = args
        .vertex
        .as_deref()
        .ok_or_else(|| InputError::Usage("--vertex is required for free representations".into()))?;
    Ok(FreeRepresentation::new(q, q.vertex(name)?, field, args.dim)?)
}

fn load_rep(inputs: &mut Inputs, q: &Quiver, path: &FsPath, field: PrimeField) -> Result<Representation, InputError> {
    let text = inputs.read(path)?;
    let m = format::parse_representation(q, &text).map_err(|source| InputError::Format {
        path: path.to_path_buf(),
        source,
    })?;
    if m.field() != field {
        return Err(InputError::Usage(format!(
            "{} is over F{}, but --field is {}",
            path.display(),
            m.field().p(),
            field.p()
        )));
    }
    Ok(m)
}

fn rep(cmd: &RepCommand, inputs: &mut Inputs, seed: Option<u64>) -> Result<Done, InputError> {
    let args = match cmd {
        RepCommand::Free(a) | RepCommand::Subreps(a) | RepCommand::Hom(a) | RepCommand::Embed(a) => a,
    };
    let q = inputs.quiver(&args.quiver)?;
    let field = PrimeField::new(args.field)?;
    match cmd {
        RepCommand::Free(_) => {
            let fr = free_at(&q, args, field)?;
            let m = fr.representation();
            let names = q.vertex_names();
            let report = FreeReport {
                vertex: q.vertex_name(fr.base()),
                field: field.p(),
                generator_dim: args.dim,
                dims: names.iter().cloned().zip(m.dims().iter().copied()).collect(),
                basis: names
                    .iter()
                    .enumerate()
                    .map(|(y, n)| (n.clone(), fr.basis_paths(y).iter().map(|p| q.path_string(p)).collect()))
                    .collect(),
                representation: format::serialize_representation(m),
            };
            let mut text = format!("free representation at {} over F{}, generator dim {}\n", report.vertex, field.p(), args.dim);
            for ((n, d), (_, paths)) in report.dims.iter().zip(&report.basis) {
                let _ = writeln!(text, "{n}: dim {d}; paths {}", paths.join(", "));
            }
            text.push_str(&report.representation);
            Ok(Done::new(&report, text, false))
        }
        RepCommand::Subreps(_) => {
            let (m, source) = match args.rep.as_slice() {
                [] => {
                    let fr = free_at(&q, args, field)?;
                    let src = format!("free at {} with generator dim {}", q.vertex_name(fr.base()), args.dim);
                    (fr.representation().clone(), src)
                }
                [path] => (load_rep(inputs, &q, path, field)?, path.display().to_string()),
                _ => return Err(InputError::Usage("subreps takes at most one --rep".into())),
            };
            let subs = enumerate_subrepresentations(&m)?;
            let mut dimension_vectors: Vec<Vec<usize>> =
                subs.iter().map(|s| s.spaces.iter().map(|x| x.dim()).collect()).collect();
            dimension_vectors.sort();
            let report = SubrepsReport {
                source,
                field: field.p(),
                count: subs.len(),
                dimension_vectors,
            };
            let mut text = format!("{} subrepresentations of {}\n", report.count, report.source);
            for d in &report.dimension_vectors {
                let _ = writeln!(text, "  {d:?}");
            }
            Ok(Done::new(&report, text, false))
        }
        RepCommand::Embed(_) => embed(&q, args, field),
        RepCommand::Hom(_) => hom(&q, args, field, inputs, seed),
    }
}

fn embed(q: &Quiver, args: &RepArgs, field: PrimeField) -> Result<Done, InputError> {
    let fr = free_at(q, args, field)?;
    let poset = PathPoset::new(q, fr.base())?;
    let ideals = poset.finite_ideals()?;
    let images = ideals
        .iter()
        .map(|i| fr.ideal_embedding(i))
        .collect::<Result<Vec<_>, _>>()?;
    let mut injective = true;
    let mut order_embedding = true;
    for i in 0..ideals.len() {
        for j in 0..ideals.len() {
            if i == j {
                continue;
            }
            injective &= images[i] != images[j];
            let contained = matches!(ideals[i].compare(&ideals[j])?, IdealRelation::Contained);
            let image_contained = images[i] != images[j] && images[i].is_subrep_of(&images[j]);
            order_embedding &= contained == image_contained;
        }
    }
    let entries: Vec<EmbedEntry> = ideals
        .iter()
        .zip(&images)
        .map(|(i, s)| EmbedEntry {
            generators: i.generators().iter().map(|p| q.path_string(p)).collect(),
            dims: s.spaces.iter().map(|x| x.dim()).collect(),
        })
        .collect();
    let report = EmbedReport {
        vertex: q.vertex_name(fr.base()),
        field: field.p(),
        ideals: ideals.len(),
        injective,
        order_embedding,
        entries,
    };
    let mut text = format!(
        "{} ideals at {}; injective: {}; order embedding: {}\n",
        report.ideals,
        report.vertex,
        yes_no(injective),
        yes_no(order_embedding)
    );
    for e in &report.entries {
        let _ = writeln!(text, "  <{}> -> dims {:?}", e.generators.join(", "), e.dims);
    }
    Ok(Done::new(&report, text, !(injective && order_embedding)))
}

/// A representation with total dimension at most `max_total` and uniformly
/// random matrices.
fn random_rep(rng: &mut ChaCha8Rng, q: &Quiver, field: PrimeField, max_total: usize) -> Result<Representation, InputError> {
    let n = q.vertex_count();
    let total = rng.gen_range(0..=max_total);
    let mut dims = vec![0usize; n];
    if n > 0 {
        for _ in 0..total {
            dims[rng.gen_range(0..n)] += 1;
        }
    }
    let maps = q
        .arrow_decls()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            let entries: Vec<i64> = (0..r * c).map(|_| i64::from(rng.gen_range(0..field.p()))).collect();
            Matrix::from_rows(field, r, c, &entries)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Representation::new(q.clone(), field, dims, maps)?)
}

fn hom(q: &Quiver, args: &RepArgs, field: PrimeField, inputs: &mut Inputs, seed: Option<u64>) -> Result<Done, InputError> {
    if let [a, b] = args.rep.as_slice() {
        let m = load_rep(inputs, q, a, field)?;
        let n = load_rep(inputs, q, b, field)?;
        let dim = hom_representations(&m, &n)?.len();
        let report = HomReport::Pair { field: field.p(), dim };
        return Ok(Done::new(&report, format!("dim Hom(M, N) = {dim}\n"), false));
    }
    if args.rep.len() > 2 {
        return Err(InputError::Usage("hom takes at most two --rep files".into()));
    }
    let fr = free_at(q, args, field)?;
    let x = match fr.base() {
        Vertex::Core(i) => i,
        _ => unreachable!("free representations live at declared vertices"),
    };
    let targets = match args.rep.first() {
        Some(path) => vec![load_rep(inputs, q, path, field)?],
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            (0..args.samples)
                .map(|_| random_rep(&mut rng, q, field, 6))
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    let mut samples = Vec::with_capacity(targets.len());
    for m in &targets {
        samples.push(AdjunctionSample {
            dims: m.dims().to_vec(),
            hom_dim: hom_representations(fr.representation(), m)?.len(),
            expected: args.dim * m.dim(x),
        });
    }
    let holds = samples.iter().all(|s| s.hom_dim == s.expected);
    let vertex = q.vertex_name(fr.base());
    let mut text = format!(
        "dim Hom(F^{}[Q({vertex},-)], M) = {} * dim M({vertex}) on {} representations: {}\n",
        args.dim,
        args.dim,
        samples.len(),
        if holds { "holds" } else { "fails" }
    );
    for s in &samples {
        let _ = writeln!(text, "  dims {:?}: {} (expected {})", s.dims, s.hom_dim, s.expected);
    }
    let report = HomReport::Adjunction {
        vertex,
        field: field.p(),
        generator_dim: args.dim,
        seed: args.rep.is_empty().then(|| seed.unwrap_or(0)),
        samples,
        holds,
    };
    Ok(Done::new(&report, text, !holds))
}

fn algebra_info(q: &Quiver, field: PrimeField, truncate: Option<usize>) -> Result<Done, InputError> {
    let alg = PathAlgebra::build(q, field, truncate)?;
    let verdict = noetherian::finite_quiver_criterion(q)?;
    let left_ideals = if q.is_acyclic() {
        algebra_noetherian(q, field)?.left_ideals
    } else {
        None
    };
    let idempotents: Vec<String> = q.vertex_names().iter().map(|v| format!("e_{v}")).collect();
    let report = AlgebraReport {
        field: field.p(),
        dim: alg.dim(),
        truncation: alg.truncation(),
        basis: alg.basis_names(),
        idempotents,
        verdict,
        criterion: CRITERION.into(),
        left_ideals,
    };
    let mut text = match report.truncation {
        Some(l) => format!("dimension (paths of length <= {l}): {}\n", report.dim),
        None => format!("dimension: {}\n", report.dim),
    };
    let _ = writeln!(text, "basis: {}", report.basis.join(", "));
    let _ = writeln!(text, "idempotents: {}", report.idempotents.join(", "));
    let _ = writeln!(text, "left noetherian: {} ({CRITERION})", yes_no(verdict));
    Ok(Done::new(&report, text, false))
}

fn nu(q: &Quiver, seq: &qnoeth_core::poset::PeriodicPathSequence, count: usize) -> Result<Done, InputError> {
    let poset = PathPoset::new(q, seq.start())?;
    let terms: Vec<NuTerm> = poset
        .nu_extract(seq, count)?
        .into_iter()
        .map(|(index, p)| NuTerm {
            index,
            path: q.path_string(&p),
        })
        .collect();
    let idx: Vec<String> = terms.iter().map(|t| t.index.to_string()).collect();
    let mut text = format!("nu = ({})\n", idx.join(", "));
    for t in &terms {
        let _ = writeln!(text, "  x_{} = {}", t.index, t.path);
    }
    let report = NuReport {
        vertex: q.vertex_name(seq.start()),
        terms,
    };
    Ok(Done::new(&report, text, false))
}
