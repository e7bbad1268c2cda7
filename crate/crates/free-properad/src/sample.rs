//! Random and exhaustive sources of labeled and nested graphs.

use crate::{coarsen, substitute_labeled, HasArity, IoSequence, Label, LabeledGraph, Nested};
use graph_core::{check_partition, enumerate, IodaGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random labeled graph with between 1 and `max_vertices` vertices, built
/// by repeatedly grafting a fresh labeled corolla above or below the graph
/// so far, then permuting the legs. Labels come from `pick`.
pub fn random_labeled<L, R, F>(rng: &mut R, max_vertices: usize, mut pick: F) -> LabeledGraph<L>
where
    L: HasArity + Clone,
    R: Rng,
    F: FnMut(&mut R) -> L,
{
    loop {
        if let Some(g) = try_random_labeled(rng, max_vertices, &mut pick) {
            return g;
        }
    }
}

fn try_random_labeled<L, R, F>(rng: &mut R, max_vertices: usize, pick: &mut F) -> Option<LabeledGraph<L>>
where
    L: HasArity + Clone,
    R: Rng,
    F: FnMut(&mut R) -> L,
{
    let target = rng.gen_range(1..=max_vertices.max(1));
    let mut g = LabeledGraph::corolla(pick(rng)).ok()?;
    let mut attempts = 0;
    while g.shape.vertex_count < target && attempts < 20 * target {
        attempts += 1;
        let x = pick(rng);
        let (a, b) = x.arity();
        let (n_in, n_out) = g.arity();
        let below = n_out > 0 && a > 0;
        let above = n_in > 0 && b > 0;
        let go_below = match (below, above) {
            (false, false) => continue,
            (true, true) => rng.gen_bool(0.5),
            (b, _) => b,
        };
        let corolla = LabeledGraph::corolla(x).ok()?;
        let (first, second, k_max) = if go_below { (&g, &corolla, n_out.min(a)) } else { (&corolla, &g, b.min(n_in)) };
        let k = rng.gen_range(1..=k_max);
        let mut outs: Vec<usize> = (0..first.arity().1).collect();
        let mut ins: Vec<usize> = (0..second.arity().0).collect();
        outs.shuffle(rng);
        ins.shuffle(rng);
        let phi: Vec<(usize, usize)> = outs.into_iter().zip(ins).take(k).collect();
        let Ok(outer) = IodaGraph::partially_grafted(first.arity(), second.arity(), &phi) else { continue };
        let (next, _) = substitute_labeled(&outer, &[first, second]).ok()?;
        g = next;
    }
    Some(permute_legs(rng, &g))
}

/// Randomly reorder the input and output legs.
pub fn permute_legs<L: Clone, R: Rng>(rng: &mut R, g: &LabeledGraph<L>) -> LabeledGraph<L> {
    let mut si: Vec<usize> = (0..g.shape.inputs.len()).collect();
    let mut so: Vec<usize> = (0..g.shape.outputs.len()).collect();
    si.shuffle(rng);
    so.shuffle(rng);
    let outer = IodaGraph::permuted_corolla(&si, &so);
    substitute_labeled(&outer, &[g]).expect("arity matches").0
}

/// A random label from the alphabet, uniformly.
pub fn random_label<R: Rng>(rng: &mut R, alphabet: &IoSequence) -> Label {
    *alphabet.all_labels().choose(rng).expect("nonempty alphabet")
}

/// Random partition of the vertices into groups that can be collapsed
/// simultaneously, grown by merging across random edges.
pub fn random_partition<R: Rng>(rng: &mut R, g: &IodaGraph) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = (0..g.vertex_count).map(|v| vec![v]).collect();
    if g.edges.is_empty() {
        return groups;
    }
    let merges = rng.gen_range(0..=g.vertex_count);
    for _ in 0..merges {
        let (s, t) = g.edges[rng.gen_range(0..g.edges.len())];
        let gs = groups.iter().position(|h| h.contains(&s)).unwrap();
        let gt = groups.iter().position(|h| h.contains(&t)).unwrap();
        if gs == gt {
            continue;
        }
        let mut trial = groups.clone();
        let moved = trial[gt].clone();
        trial[gs].extend(moved);
        trial.remove(gt);
        if check_partition(g, &trial).is_ok() {
            groups = trial;
        }
    }
    for h in &mut groups {
        h.shuffle(rng);
    }
    groups
}

/// Random nested value of the given depth (at least 1) whose flattening
/// has at most `max_vertices` vertices.
pub fn random_nested<L, R, F>(rng: &mut R, depth: usize, max_vertices: usize, pick: F) -> Nested<L>
where
    L: HasArity + Clone,
    R: Rng,
    F: FnMut(&mut R) -> L,
{
    let base = random_labeled(rng, max_vertices, pick).map(|l| Nested::Leaf(l.clone()));
    let mut g = base;
    for _ in 1..depth.max(1) {
        let groups = random_partition(rng, &g.shape);
        g = coarsen(&g, &groups).expect("partition is collapsible").graph;
    }
    Nested::Graph(g).canonical()
}

/// All set partitions of `0..n`, blocks in order of least element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for v in 0..n {
        let mut next = Vec::new();
        for p in out {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(v);
                next.push(q);
            }
            let mut q = p;
            q.push(vec![v]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Every partition of the vertices into simultaneously collapsible groups.
pub fn collapsible_partitions(g: &IodaGraph) -> Vec<Vec<Vec<usize>>> {
    set_partitions(g.vertex_count).into_iter().filter(|p| check_partition(g, p).is_ok()).collect()
}

/// Every labeled graph over the alphabet within the bounds, one per
/// isomorphism class of labeled graphs.
pub fn enumerate_labeled(
    alphabet: &IoSequence,
    max_vertices: usize,
    max_edges: usize,
    max_legs: usize,
) -> Vec<LabeledGraph<Label>> {
    let allowed = |a| alphabet.has_arity(a);
    let mut out = Vec::new();
    for legs in 1..=max_legs {
        for n_in in 0..=legs {
            for shape in enumerate(n_in, legs - n_in, max_vertices, max_edges, Some(&allowed)) {
                let mut choices: Vec<Vec<Label>> = vec![vec![]];
                for v in 0..shape.vertex_count {
                    let opts: Vec<Label> = alphabet.labels(shape.vertex_arity(v)).collect();
                    choices = choices
                        .into_iter()
                        .flat_map(|c| opts.iter().map(move |&l| [c.clone(), vec![l]].concat()))
                        .collect();
                }
                out.extend(choices.into_iter().map(|labels| LabeledGraph { shape: shape.clone(), labels }));
            }
        }
    }
    out
}

/// Every nested value of the given depth (at least 1) whose flattening is
/// one of `base`: all ways of adding `depth - 1` levels of grouping.
pub fn enumerate_nested<L: HasArity + Clone>(base: &[LabeledGraph<L>], depth: usize) -> Vec<Nested<L>> {
    let mut level: Vec<LabeledGraph<Nested<L>>> =
        base.iter().map(|g| g.map(|l| Nested::Leaf(l.clone()))).collect();
    for _ in 1..depth.max(1) {
        let mut next = Vec::new();
        for g in &level {
            for p in collapsible_partitions(&g.shape) {
                next.push(coarsen(g, &p).expect("collapsible").graph);
            }
        }
        level = next;
    }
    level.into_iter().map(|g| Nested::Graph(g).canonical()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn random_values_are_valid() {
        let alphabet = IoSequence::singleton(&[(0, 1), (1, 1), (2, 1), (1, 2)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for depth in 1..=3 {
            for _ in 0..50 {
                let x = random_nested(&mut rng, depth, 5, |r| random_label(r, &alphabet));
                x.validate().unwrap();
                assert_eq!(x.depth(), depth);
            }
        }
    }
}
