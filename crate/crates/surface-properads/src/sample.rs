//! Random members of the named collections and the closure check.

use crate::{membership, ProperadName, SurfaceType, Weight};
use free_properad::sample::random_labeled;
use free_properad::{HasArity, Report};
use graph_core::{Arity, IodaGraph, Item};
use rand::seq::SliceRandom;
use rand::Rng;

fn random_weight<R: Rng>(rng: &mut R) -> Weight {
    match rng.gen_range(0..4) {
        0 => Weight::from_integer(0),
        1 => Weight::from_integer(1),
        _ => {
            let q = rng.gen_range(2..=6);
            Weight::new(rng.gen_range(1..q), q)
        }
    }
}

fn random_arity<R: Rng>(rng: &mut R, name: ProperadName) -> Arity {
    if let Some(allowed) = name.arities() {
        return *allowed.choose(rng).expect("nonempty");
    }
    loop {
        let a = rng.gen_range(0..=3);
        let b = rng.gen_range(0..=3);
        if (a, b) != (0, 0) && !(name.needs_output() && b == 0) {
            return (a, b);
        }
    }
}

/// A random connected nodal type of arity `(a, b)` with up to three
/// components and, unless `tree`, possibly extra nodes.
pub fn random_nodal<R: Rng>(rng: &mut R, (a, b): Arity, max_genus: u32, tree: bool) -> SurfaceType {
    let k = rng.gen_range(1..=3);
    let genera = (0..k).map(|_| rng.gen_range(0..=max_genus)).collect();
    let mut nodes: Vec<(usize, usize)> = (1..k).map(|c| (rng.gen_range(0..c), c)).collect();
    if !tree {
        for _ in 0..rng.gen_range(0..=1) {
            nodes.push((rng.gen_range(0..k), rng.gen_range(0..k)));
        }
    }
    SurfaceType {
        genera,
        nodes,
        inputs: (0..a).map(|_| rng.gen_range(0..k)).collect(),
        outputs: (0..b).map(|_| rng.gen_range(0..k)).collect(),
        marks: vec![],
        unit: false,
    }
}

fn candidate<R: Rng>(rng: &mut R, name: ProperadName, arity: Arity) -> SurfaceType {
    let max_genus = if name.genus_zero() { 0 } else { 2 };
    let mut s = if name.nodal() && rng.gen_bool(0.5) {
        random_nodal(rng, arity, max_genus, name.genus_zero())
    } else {
        SurfaceType::smooth(rng.gen_range(0..=max_genus), arity.0, arity.1)
    };
    if name.spotted() {
        for _ in 0..rng.gen_range(0..=2) {
            let c = rng.gen_range(0..s.component_count());
            s.marks.push((c, random_weight(rng)));
        }
    }
    if s.is_smooth() && s.genera[0] == 0 && arity == (1, 1) && s.marks.is_empty() {
        s.unit = rng.gen_bool(0.5);
    }
    name.policy().apply(&s)
}

/// A random member of `name`, of the given arity if one is asked for.
/// `None` when a few thousand candidates all fail.
pub fn random_member<R: Rng>(rng: &mut R, name: ProperadName, arity: Option<Arity>) -> Option<SurfaceType> {
    if let Some(a) = arity {
        if name.arities().is_some_and(|allowed| !allowed.contains(&a)) || (name.needs_output() && a.1 == 0) {
            return None;
        }
    }
    for _ in 0..4000 {
        let a = arity.unwrap_or_else(|| random_arity(rng, name));
        let s = candidate(rng, name, a);
        if s.arity() == a && membership(&s, name).is_ok_and(|m| m.member) {
            return Some(s);
        }
    }
    None
}

/// Two vertices joined along every output of the first and every input of
/// the second, with no legs.
fn closing_graph(b: usize) -> IodaGraph {
    IodaGraph {
        vertex_count: 2,
        edges: vec![(0, 1); b],
        inputs: vec![],
        outputs: vec![],
        in_order: vec![vec![], (0..b).map(Item::Edge).collect()],
        out_order: vec![(0..b).map(Item::Edge).collect(), vec![]],
    }
}

/// Compose random members of `name` along random ioda-graphs with up to
/// four vertices and check that every result is a member. Compositions
/// that would close up to arity (0,0) are attempted too, and must be
/// rejected.
pub fn check_closure<R: Rng>(name: ProperadName, rng: &mut R, count: usize) -> Report {
    let mut report = Report::new(format!("closure of {name}"));
    let policy = name.policy();
    for _ in 0..count {
        let g = random_labeled(rng, 4, |r: &mut R| random_member(r, name, None).expect("collection is sampleable"));
        let pieces: Vec<&SurfaceType> = g.labels.iter().collect();
        match crate::glue(&g.shape, &pieces, policy) {
            Ok(s) => {
                let m = membership(&s, name);
                report.record(m.as_ref().is_ok_and(|m| m.member), || format!("{g:?} composes to {s:?}: {m:?}"));
            }
            Err(e) => report.record(false, || format!("{g:?} failed to compose: {e}")),
        }
        let b = rng.gen_range(1..=2);
        if let (Some(x), Some(y)) = (random_member(rng, name, Some((0, b))), random_member(rng, name, Some((b, 0)))) {
            let phi: Vec<(usize, usize)> = (0..b).map(|k| (k, k)).collect();
            let graft = IodaGraph::partially_grafted(x.arity(), y.arity(), &phi);
            let glued = crate::glue(&closing_graph(b), &[&x, &y], policy);
            report.record(graft.is_err() && glued == Err(crate::SurfaceError::IoViolation), || {
                format!("closing {x:?} with {y:?} was not rejected: {glued:?}")
            });
        }
    }
    report
}
