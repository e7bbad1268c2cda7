use crate::json::{self, Document, IoError, MembershipDoc, VerdictDoc};
use crate::{emit_dot, parse, serialize};
use bar_homotopy::sample::{generator_simplices, random_free_simplex, two_generators};
use bar_homotopy::{
    build_contraction, check_compatibility, check_contraction, check_cut_simplicial, check_homotopy, check_oracle,
    check_simplicial_identities, cut_homotopy, eta_contraction, grouped_contraction, oracle_grouping, BarError, CutMap,
    GeneratorOracle, NodeCutOracle, RefinementOracle,
};
use clap::{Parser, Subcommand, ValueEnum};
use free_properad::sample::{random_label, random_labeled, random_nested};
use free_properad::{check_monad_laws, IoSequence, Nested, Report};
use properad_core::{Bar, PresentedProperad, Verdict};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use surface_properads::sample::random_member;
use surface_properads::{glue, membership, stabilize, Policy, ProperadName, SurfaceProperad, SurfaceType};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Document { path: PathBuf, source: IoError },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyFlag {
    Raw,
    Stabilize,
}

#[derive(Debug, Parser)]
#[command(name = "properad-lab", version, about = "Graphs, properads, surfaces and bar constructions")]
pub struct Cli {
    /// Seed for every randomized suite.
    #[arg(long, env = "PROPERAD_LAB_SEED", default_value_t = 0, global = true)]
    pub seed: u64,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ioda-graphs of one arity up to isomorphism.
    EnumerateGraphs {
        #[arg(long, default_value_t = 1)]
        inputs: usize,
        #[arg(long, default_value_t = 1)]
        outputs: usize,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, default_value_t = 3)]
        max_edges: usize,
    },
    /// Glue surface types along an ioda-graph.
    Compose {
        #[arg(long)]
        graph: PathBuf,
        /// A surface-list document, one type per vertex.
        #[arg(long)]
        labels: PathBuf,
        #[arg(long, value_enum, default_value = "stabilize")]
        policy: PolicyFlag,
    },
    /// Collapse unstable spheres of a nodal surface type.
    Stabilize {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Membership of a surface type in a named collection.
    Classify {
        #[arg(long)]
        name: String,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Unit and associativity laws of the graph monad on random nested graphs.
    MonadCheck {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
    },
    /// Simplicial identities of a truncated bar construction: over the
    /// free properad on two generators, or over `--name`.
    BarCheck {
        #[arg(long, default_value_t = 3)]
        truncation: usize,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long)]
        name: Option<String>,
    },
    /// Decide equality of two elements of a presented properad.
    PushoutReduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Extra degeneracies and the homotopies built from them.
    ContractionCheck {
        #[arg(long, default_value_t = 3)]
        truncation: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long)]
        name: Option<String>,
    },
    /// The node-cut refinement on the bar construction of `--name`.
    CutCheck {
        #[arg(long, default_value = "Mhat")]
        name: String,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Draw a document as Graphviz DOT.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub document: Document,
    /// The output in the requested format.
    pub output: String,
    pub summary: String,
    /// False when some check failed.
    pub ok: bool,
}

fn read(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    parse(&text).map_err(|source| CliError::Document { path: path.into(), source })
}

fn read_as<T>(path: &Path, into: fn(Document) -> Result<T, IoError>) -> Result<T, CliError> {
    into(read(path)?).map_err(|source| CliError::Document { path: path.into(), source })
}

fn name(s: &str) -> Result<ProperadName, CliError> {
    s.parse().map_err(|e: surface_properads::SurfaceError| CliError::Invalid(e.to_string()))
}

fn surface_label(rng: &mut ChaCha8Rng, name: ProperadName) -> SurfaceType {
    random_member(rng, name, None).expect("named collections are sampleable")
}

fn simplices<L, F>(rng: &mut ChaCha8Rng, count: usize, levels: usize, mut draw: F) -> Vec<(usize, Nested<L>)>
where
    F: FnMut(&mut ChaCha8Rng, usize) -> Nested<L>,
{
    (0..count).map(|k| (k % levels, draw(rng, k % levels))).collect()
}

fn reports(rs: Vec<Report>) -> (Document, String, bool) {
    let ok = rs.iter().all(Report::passed);
    let summary = rs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    (Document::Reports(rs), summary, ok)
}

fn contraction_reports<P: properad_core::Properad>(
    bar: &Bar<P>,
    name: &str,
    data: bar_homotopy::ContractionData<'_, Nested<P::Elem>>,
    base: &[Nested<P::Elem>],
    samples: &[(usize, Nested<P::Elem>)],
) -> Vec<Report> {
    let mut out = vec![check_contraction(bar, &data, base, samples)];
    match build_contraction(bar, data, base, samples) {
        Ok(psi) => out.push(check_homotopy(bar, &psi, samples)),
        Err(e) => {
            let mut r = Report::new(format!("psi from {name}"));
            r.record(false, || e.to_string());
            out.push(r);
        }
    }
    out
}

fn execute(cli: &Cli) -> Result<(Document, String, bool), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    Ok(match &cli.command {
        Command::EnumerateGraphs { inputs, outputs, max_vertices, max_edges } => {
            if (*inputs, *outputs) == (0, 0) {
                return Err(CliError::Invalid("arity (0,0) has no ioda-graphs".into()));
            }
            let gs = graph_core::enumerate(*inputs, *outputs, *max_vertices, *max_edges, None);
            let summary = format!("{} graphs of arity ({inputs},{outputs})", gs.len());
            (Document::IodaGraphList(gs), summary, true)
        }
        Command::Compose { graph, labels, policy } => {
            let g = read_as(graph, json::into_ioda_graph)?;
            let pieces = read_as(labels, json::into_surface_list)?;
            let policy = match policy {
                PolicyFlag::Raw => Policy::Plain,
                PolicyFlag::Stabilize => Policy::Stabilize,
            };
            let refs: Vec<&SurfaceType> = pieces.iter().collect();
            let s = glue(&g, &refs, policy).map_err(|e| CliError::Invalid(e.to_string()))?;
            let summary = format!("glued type of arity {:?} and genus {}", (s.inputs.len(), s.outputs.len()), s.arithmetic_genus());
            (Document::SurfaceType(s), summary, true)
        }
        Command::Stabilize { input } => {
            let s = stabilize(&read_as(input, json::into_surface_type)?);
            let summary = format!("{} component(s), {} node(s)", s.component_count(), s.nodes.len());
            (Document::SurfaceType(s), summary, true)
        }
        Command::Classify { name: n, input } => {
            let n = name(n)?;
            let s = read_as(input, json::into_surface_type)?;
            let m = membership(&s, n).map_err(|e| CliError::Invalid(e.to_string()))?;
            let summary = format!("{}: {}", n, m.reason);
            (Document::Membership(MembershipDoc { name: n.to_string(), member: m.member, reason: m.reason }), summary, true)
        }
        Command::MonadCheck { depth, count, max_vertices } => {
            let a = IoSequence::new([((0, 1), 2), ((1, 1), 2), ((2, 1), 1), ((1, 2), 2)]).expect("nonzero arities");
            let samples: Vec<_> =
                (0..*count).map(|_| random_nested(&mut rng, *depth, *max_vertices, |r| random_label(r, &a))).collect();
            reports(vec![check_monad_laws(&samples)])
        }
        Command::BarCheck { truncation, count, name: n } => {
            let levels = truncation + 1;
            let report = match n {
                None => {
                    let bar = Bar::new(two_generators(), *truncation);
                    let mut samples: Vec<_> = (0..levels)
                        .flat_map(|l| generator_simplices(&bar.properad, l, 2, 2, 3).into_iter().map(move |x| (l, x)))
                        .collect();
                    samples.extend(simplices(&mut rng, *count, levels, |r, l| random_free_simplex(r, &bar.properad, l, 4, 2)));
                    check_simplicial_identities(&bar, &samples)
                }
                Some(n) => {
                    let n = name(n)?;
                    let bar = Bar::new(SurfaceProperad::new(n), *truncation);
                    let samples = simplices(&mut rng, *count, levels, |r, l| random_nested(r, l + 1, 4, |r| surface_label(r, n)));
                    check_simplicial_identities(&bar, &samples)
                }
            };
            reports(vec![report])
        }
        Command::PushoutReduce { input, lhs, rhs, budget } => {
            let pres = read_as(input, json::into_presentation)?;
            let (a, b) = (read_as(lhs, json::into_labeled_graph)?, read_as(rhs, json::into_labeled_graph)?);
            let p = PresentedProperad::new(pres.generators, pres.relations).map_err(|e| CliError::Invalid(e.to_string()))?;
            let v = p.equal(&a.canonical(), &b.canonical(), *budget).map_err(|e| CliError::Invalid(e.to_string()))?;
            let verdict = match v {
                Verdict::Yes => "yes",
                Verdict::No => "no",
                Verdict::Unknown => "unknown",
            };
            let summary = format!("equal: {verdict} (budget {budget})");
            (Document::Verdict(VerdictDoc { verdict: verdict.into(), budget: *budget }), summary, v != Verdict::Unknown)
        }
        Command::ContractionCheck { truncation, count, name: n } => {
            let levels = *truncation;
            let out = match n {
                None => {
                    let bar = Bar::new(two_generators(), *truncation);
                    let mut samples: Vec<_> = (0..levels)
                        .flat_map(|l| generator_simplices(&bar.properad, l, 2, 2, 3).into_iter().map(move |x| (l, x)))
                        .collect();
                    samples.extend(simplices(&mut rng, *count, levels, |r, l| random_free_simplex(r, &bar.properad, l, 4, 2)));
                    let eta = eta_contraction(&bar);
                    let base = augmented(&samples, &eta)?;
                    let mut out = contraction_reports(&bar, "eta", eta, &base, &samples);
                    let cut = CutMap::new(&bar.properad, &GeneratorOracle);
                    let cut_samples = samples.iter().map(|(l, x)| Ok((*l, cut.apply(x)?))).collect::<Result<Vec<_>, BarError>>();
                    let cut_samples = cut_samples.map_err(|e| CliError::Invalid(e.to_string()))?;
                    let grouped = grouped_contraction(&bar, oracle_grouping(&bar.properad, &GeneratorOracle));
                    let base = augmented(&cut_samples, &grouped)?;
                    out.extend(contraction_reports(&bar, "grouped", grouped, &base, &cut_samples));
                    out
                }
                Some(n) => {
                    let n = name(n)?;
                    let bar = Bar::new(SurfaceProperad::new(n), *truncation);
                    let oracle = NodeCutOracle::new(n);
                    let cut = CutMap::new(&bar.properad, &oracle);
                    let samples = simplices(&mut rng, *count, levels, |r, l| random_nested(r, l + 1, 3, |r| surface_label(r, n)));
                    let eta = eta_contraction(&bar);
                    let base = augmented(&samples, &eta)?;
                    let mut out = contraction_reports(&bar, "eta", eta, &base, &samples);
                    let cut_samples = samples.iter().map(|(l, x)| Ok((*l, cut.apply(x)?))).collect::<Result<Vec<_>, BarError>>();
                    let cut_samples = cut_samples.map_err(|e| CliError::Invalid(e.to_string()))?;
                    let grouped = grouped_contraction(&bar, oracle_grouping(&bar.properad, &oracle));
                    let base = augmented(&cut_samples, &grouped)?;
                    out.extend(contraction_reports(&bar, "grouped", grouped, &base, &cut_samples));
                    out
                }
            };
            reports(out)
        }
        Command::CutCheck { name: n, count } => {
            let n = name(n)?;
            let bar = Bar::new(SurfaceProperad::new(n), 3);
            let oracle = NodeCutOracle::new(n);
            let cut = CutMap::new(&bar.properad, &oracle);
            let draw = |r: &mut ChaCha8Rng, l: usize| random_nested(r, l + 1, 3, |r| surface_label(r, n));
            let graphs: Vec<_> = (0..*count)
                .map(|_| random_labeled(&mut rng, 3, |r: &mut ChaCha8Rng| surface_label(r, n)))
                .collect();
            let mut out = vec![check_oracle(&bar.properad, &oracle, &graphs)];
            out.push(check_cut_simplicial(&bar, &cut, &simplices(&mut rng, *count, 4, draw)));
            out.push(check_homotopy(&bar, &cut_homotopy(&cut), &simplices(&mut rng, *count, 3, draw)));
            let grouped = grouped_contraction(&bar, oracle_grouping(&bar.properad, &oracle));
            out.push(check_compatibility(&bar, &cut, &grouped, &simplices(&mut rng, *count, 3, draw)));
            let bad = NodeCutOracle::from_nodes(n, 2);
            let verdict = check_oracle(&bar.properad, &bad, &graphs);
            let mut rejected = Report::new(format!("{} is rejected", RefinementOracle::<SurfaceProperad>::name(&bad)));
            rejected.record(!verdict.passed(), || "no witness found".into());
            out.push(rejected);
            reports(out)
        }
        Command::Render { input } => {
            let doc = read(input)?;
            let summary = format!("{} document", doc.kind());
            (doc, summary, true)
        }
    })
}

fn augmented<T: Clone>(samples: &[(usize, T)], data: &bar_homotopy::ContractionData<'_, T>) -> Result<Vec<T>, CliError> {
    samples
        .iter()
        .filter(|s| s.0 == 0)
        .map(|s| (data.augment)(&s.1).map_err(|e| CliError::Invalid(e.to_string())))
        .collect()
}

/// Run a parsed command. Checks that fail give `ok = false`; errors are
/// for bad input.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (document, summary, ok) = execute(cli)?;
    let default = if matches!(cli.command, Command::Render { .. }) { Format::Dot } else { Format::Json };
    let output = match cli.format.unwrap_or(default) {
        Format::Json => serialize(&document),
        Format::Text => format!("{summary}\n"),
        Format::Dot => emit_dot(&document)
            .ok_or_else(|| CliError::Invalid(format!("{} documents have no DOT rendering", document.kind())))?,
    };
    Ok(Outcome { document, output, summary, ok })
}
