use clap::Parser;
use cli_io::cli::{run, Cli, CliError};
use cli_io::*;
use free_properad::sample::{random_label, random_labeled, random_nested};
use free_properad::{IoSequence, LabeledGraph};
use graph_core::IodaGraph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use surface_properads::sample::random_member;
use surface_properads::{ProperadName, SurfaceType};

fn corpus() -> Vec<(PathBuf, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files.into_iter().map(|p| (p.clone(), std::fs::read_to_string(p).unwrap())).collect()
}

fn scratch(name: &str, doc: &Document) -> PathBuf {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, serialize(doc)).unwrap();
    path
}

fn cli(args: &[&str]) -> Cli {
    Cli::try_parse_from(std::iter::once("properad-lab").chain(args.iter().copied())).unwrap()
}

fn alphabet() -> IoSequence {
    IoSequence::new([((0, 1), 1), ((1, 1), 2), ((2, 1), 1), ((1, 2), 1)]).unwrap()
}

#[test]
fn corpus_round_trips_byte_for_byte() {
    let docs = corpus();
    assert_eq!(docs.len(), 50);
    for (path, text) in &docs {
        let doc = parse(text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(&serialize(&doc), text, "{}", path.display());
    }
}

#[test]
fn corpus_covers_every_kind() {
    let kinds: std::collections::BTreeSet<&str> = corpus().iter().map(|(_, t)| parse(t).unwrap().kind()).collect();
    assert_eq!(kinds.len(), 13);
}

#[test]
fn schema_errors_name_the_place() {
    let text = serialize(&Document::SurfaceType(SurfaceType::smooth(0, 1, 0).with_marks([(0, surface_properads::Weight::new(1, 3))])));
    let cases = [
        (text.replace("\"1/3\"", "\"1/0\""), "value.marks[0].weight"),
        (text.replace("\"1/3\"", "\"one third\""), "value.marks[0].weight"),
        (text.replace("\"surface-type\"", "\"surface\""), "kind"),
        (text.replace("\"genus\"", "\"genre\""), "value.components[0]"),
    ];
    for (broken, expected) in cases {
        match parse(&broken) {
            Err(IoError::Schema { path, .. }) => assert!(path.starts_with(expected), "{path} vs {expected}"),
            other => panic!("{other:?}"),
        }
    }
    assert!(matches!(parse("{\"kind\": \"report\"}"), Err(IoError::Schema { .. })));
    assert!(matches!(parse("not json"), Err(IoError::Schema { .. })));
}

#[test]
fn labels_must_fit_their_vertices() {
    let a = alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = random_labeled(&mut rng, 3, |r| random_label(r, &a)).canonical();
    let mut doc = g.to_doc();
    doc.labels[0].arity = (5, 5);
    match LabeledGraph::<free_properad::Label>::from_doc(doc, "value") {
        Err(IoError::Schema { path, .. }) => assert_eq!(path, "value.labels[0]"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn dot_is_a_function_of_the_seed() {
    for seed in 0..20 {
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = bar_homotopy::sample::random_surface_simplex(&mut rng, 2, 3);
            let s = random_member(&mut rng, ProperadName::DutchMbar, None).unwrap();
            (nested_dot(&x), surface_dot(&s))
        };
        assert_eq!(draw(), draw());
    }
}

#[test]
fn depth_two_values_draw_one_cluster_per_outer_vertex() {
    let a = alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let x = random_nested(&mut rng, 2, 4, |r| random_label(r, &a));
        let d = nested_dot(&x);
        assert_eq!(d.matches("subgraph cluster_").count(), x.as_graph().unwrap().shape.vertex_count);
        assert_eq!(d.matches("[label=\"x").count(), x.leaves().len());
        let three = random_nested(&mut rng, 3, 3, |r| random_label(r, &a));
        let chain = free_properad::decompose(&three).unwrap();
        let d = nested_dot(&three);
        assert_eq!(d.matches("subgraph cluster_").count(), chain.levels[0].len() + chain.levels[1].len());
        assert!(d.contains("color=firebrick") && d.contains("color=royalblue"));
    }
}

#[test]
fn classify_reports_membership_and_reason() {
    let s = SurfaceType { genera: vec![0, 1], nodes: vec![(0, 1)], inputs: vec![0], outputs: vec![0], marks: vec![], unit: false };
    let path = scratch("classify.json", &Document::SurfaceType(s));
    let out = run(&cli(&["classify", "--name", "Mhat", "--in", path.to_str().unwrap()])).unwrap();
    assert!(out.ok);
    assert!(out.output.contains("\"member\": false"));
    assert!(out.summary.contains("component 1 has no output"));
    let out = run(&cli(&["classify", "--name", "Mbar", "--in", path.to_str().unwrap(), "--format", "text"])).unwrap();
    assert_eq!(out.output, "Mbar: member\n");
}

#[test]
fn compose_glues_pants_into_a_torus_with_boundary() {
    let g = IodaGraph::partially_grafted((1, 2), (2, 1), &[(0, 0), (1, 1)]).unwrap();
    let gp = scratch("pants-graph.json", &Document::IodaGraph(g));
    let lp = scratch("pants.json", &Document::SurfaceList(vec![SurfaceType::smooth(0, 1, 2), SurfaceType::smooth(0, 2, 1)]));
    let args = ["compose", "--graph", gp.to_str().unwrap(), "--labels", lp.to_str().unwrap(), "--policy", "stabilize"];
    let out = run(&cli(&args)).unwrap();
    assert_eq!(out.document, Document::SurfaceType(SurfaceType::smooth(1, 1, 1)));
    let mut wrong = args.to_vec();
    wrong[2] = lp.to_str().unwrap();
    assert!(matches!(run(&cli(&wrong)), Err(CliError::Document { .. })));
}

#[test]
fn stabilize_fuses_a_chain_of_spheres() {
    let s = SurfaceType { genera: vec![1, 0, 0, 1], nodes: vec![(0, 1), (1, 2), (2, 3)], inputs: vec![], outputs: vec![0, 3], marks: vec![], unit: false };
    let path = scratch("chain.json", &Document::SurfaceType(s));
    let out = run(&cli(&["stabilize", "--in", path.to_str().unwrap()])).unwrap();
    match out.document {
        Document::SurfaceType(t) => assert_eq!((t.component_count(), t.nodes.len()), (2, 1)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn pushout_reduce_decides_associativity() {
    let (_, text) = corpus().into_iter().find(|(p, _)| p.ends_with("41-presentation.json")).unwrap();
    let pres = cli_io::json::into_presentation(parse(&text).unwrap()).unwrap();
    let (l, r) = pres.relations[0].clone();
    let pp = scratch("assoc.json", &Document::Presentation(pres));
    let lp = scratch("assoc-l.json", &Document::LabeledGraph(l.clone()));
    let rp = scratch("assoc-r.json", &Document::LabeledGraph(r));
    let args = |a: &Path, b: &Path, budget: &str| {
        cli(&["pushout-reduce", "--in", pp.to_str().unwrap(), "--lhs", a.to_str().unwrap(), "--rhs", b.to_str().unwrap(), "--budget", budget])
    };
    let out = run(&args(&lp, &rp, "100")).unwrap();
    assert!(out.ok && out.summary.starts_with("equal: yes"));
    let swapped = properad_core::act_sigma(&properad_core::FreeProperad::new(IoSequence::singleton(&[(2, 1)]).unwrap()), &l, &[1, 0, 2], &[0]).unwrap();
    let sp = scratch("assoc-s.json", &Document::LabeledGraph(swapped));
    assert!(run(&args(&lp, &sp, "1000")).unwrap().summary.starts_with("equal: no"));
    let undecided = run(&args(&lp, &sp, "0")).unwrap();
    assert!(!undecided.ok);
}

#[test]
fn suites_are_reproducible_and_pass() {
    let a = run(&cli(&["--seed", "5", "monad-check", "--depth", "3", "--count", "100"])).unwrap();
    let b = run(&cli(&["monad-check", "--count", "100", "--seed", "5"])).unwrap();
    assert!(a.ok);
    assert_eq!(a.output, b.output);
    let bar = run(&cli(&["bar-check", "--count", "40", "--name", "Mhat"])).unwrap();
    assert!(bar.ok, "{}", bar.summary);
    let c = run(&cli(&["contraction-check", "--count", "30"])).unwrap();
    assert!(c.ok, "{}", c.summary);
    assert_eq!(c.summary.lines().count(), 4);
}

#[test]
fn render_defaults_to_dot() {
    let path = scratch("annulus.json", &Document::SurfaceType(SurfaceType::nodal_annulus()));
    let out = run(&cli(&["render", "--in", path.to_str().unwrap()])).unwrap();
    assert!(out.output.starts_with("graph surface {"));
    let rp = scratch("report.json", &Document::Report(free_properad::Report::new("empty")));
    assert!(matches!(run(&cli(&["render", "--in", rp.to_str().unwrap()])), Err(CliError::Invalid(_))));
}

#[test]
fn unknown_verbs_and_flags_are_refused() {
    let parse = |args: &[&str]| Cli::try_parse_from(std::iter::once("properad-lab").chain(args.iter().copied()));
    assert!(parse(&["frobnicate"]).is_err());
    assert!(parse(&["monad-check", "--depht", "3"]).is_err());
    assert!(parse(&["compose", "--graph", "g.json", "--labels", "l.json", "--policy", "smooth"]).is_err());
    let bad_name = cli(&["classify", "--name", "Mtilde", "--in", "x.json"]);
    assert!(matches!(run(&bad_name), Err(CliError::Invalid(_))));
}

fn surface() -> impl Strategy<Value = SurfaceType> {
    (any::<u64>(), 0usize..ProperadName::ALL.len()).prop_map(|(seed, k)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_member(&mut rng, ProperadName::ALL[k], None).unwrap()
    })
}

proptest! {
    #[test]
    fn every_value_round_trips(seed in any::<u64>(), depth in 0usize..4, s in surface()) {
        let a = alphabet();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let docs = [
            Document::NestedGraph(random_nested(&mut rng, depth, 4, |r| random_label(r, &a))),
            Document::SurfaceSimplex(random_nested(&mut rng, depth, 3, |_| s.clone())),
            Document::SurfaceType(s.clone()),
        ];
        for d in docs {
            let text = serialize(&d);
            let back = parse(&text).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
