use crate::{find, SurfaceError, SurfaceType, Weight};
use free_properad::HasArity;
use graph_core::{IodaGraph, Item};
use rand::Rng;

/// What happens to a glued type before it is returned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Policy {
    Plain,
    Stabilize,
    ForgetZeroMarks,
    ForgetZeroMarksStabilize,
}

impl Policy {
    pub fn apply(self, s: &SurfaceType) -> SurfaceType {
        match self {
            Policy::Plain => s.canonical(),
            Policy::Stabilize => stabilize(s),
            Policy::ForgetZeroMarks => normalize_spots(s, false),
            Policy::ForgetZeroMarksStabilize => normalize_spots(s, true),
        }
    }
}

/// A glued type before the policy is applied, with provenance.
#[derive(Clone, Debug)]
pub struct Glued {
    /// Not canonical: nodes and marks are listed piece by piece.
    pub raw: SurfaceType,
    /// Component of `raw` containing each component of each piece.
    pub component_map: Vec<Vec<usize>>,
    /// Index in `raw.nodes` of the first node of each piece.
    pub node_offsets: Vec<usize>,
}

/// Glue `pieces[v]` into vertex `v` of `g`. Edge `e` glues the output
/// circle of its source at the position of `e` in the source's out-order to
/// the input circle of its target at its position in the target's in-order.
pub fn glue_traced(g: &IodaGraph, pieces: &[&SurfaceType]) -> Result<Glued, SurfaceError> {
    if g.inputs.is_empty() && g.outputs.is_empty() {
        return Err(SurfaceError::IoViolation);
    }
    g.check()?;
    if pieces.len() != g.vertex_count {
        return Err(SurfaceError::PieceCount { vertices: g.vertex_count, pieces: pieces.len() });
    }
    for (v, p) in pieces.iter().enumerate() {
        if p.arity() != g.vertex_arity(v) {
            return Err(SurfaceError::ArityMismatch { vertex: v, expected: g.vertex_arity(v), found: p.arity() });
        }
    }
    let mut offsets = Vec::with_capacity(pieces.len());
    let mut total = 0;
    for p in pieces {
        offsets.push(total);
        total += p.component_count();
    }
    let mut root: Vec<usize> = (0..total).collect();
    let mut circles = Vec::with_capacity(g.edges.len());
    for e in 0..g.edges.len() {
        let (v, p) = g.out_slot(Item::Edge(e));
        let (w, q) = g.in_slot(Item::Edge(e));
        let a = offsets[v] + pieces[v].outputs[p];
        let b = offsets[w] + pieces[w].inputs[q];
        circles.push(a);
        let (ra, rb) = (find(&mut root, a), find(&mut root, b));
        root[ra] = rb;
    }
    let mut class = vec![usize::MAX; total];
    let mut of_root = vec![usize::MAX; total];
    let mut count = 0;
    for c in 0..total {
        let r = find(&mut root, c);
        if of_root[r] == usize::MAX {
            of_root[r] = count;
            count += 1;
        }
        class[c] = of_root[r];
    }
    let mut genus = vec![1i64; count];
    for (v, p) in pieces.iter().enumerate() {
        for (c, &gc) in p.genera.iter().enumerate() {
            genus[class[offsets[v] + c]] += gc as i64 - 1;
        }
    }
    for &a in &circles {
        genus[class[a]] += 1;
    }
    let mut nodes = Vec::new();
    let mut marks = Vec::new();
    let mut node_offsets = Vec::with_capacity(pieces.len());
    for (v, p) in pieces.iter().enumerate() {
        node_offsets.push(nodes.len());
        nodes.extend(p.nodes.iter().map(|&(a, b)| (class[offsets[v] + a], class[offsets[v] + b])));
        marks.extend(p.marks.iter().map(|&(c, w)| (class[offsets[v] + c], w)));
    }
    let inputs = (0..g.inputs.len())
        .map(|k| {
            let (v, q) = g.in_slot(Item::In(k));
            class[offsets[v] + pieces[v].inputs[q]]
        })
        .collect();
    let outputs = (0..g.outputs.len())
        .map(|k| {
            let (v, p) = g.out_slot(Item::Out(k));
            class[offsets[v] + pieces[v].outputs[p]]
        })
        .collect();
    let raw = SurfaceType {
        genera: genus.into_iter().map(|x| u32::try_from(x).expect("merged genus is nonnegative")).collect(),
        nodes,
        inputs,
        outputs,
        marks,
        unit: pieces.iter().all(|p| p.unit),
    };
    let component_map = pieces
        .iter()
        .enumerate()
        .map(|(v, p)| (0..p.component_count()).map(|c| class[offsets[v] + c]).collect())
        .collect();
    Ok(Glued { raw, component_map, node_offsets })
}

/// Glue along `g` and apply `policy`; the result is canonical.
pub fn glue(g: &IodaGraph, pieces: &[&SurfaceType], policy: Policy) -> Result<SurfaceType, SurfaceError> {
    Ok(policy.apply(&glue_traced(g, pieces)?.raw))
}

fn collapsible(t: &SurfaceType, c: usize) -> bool {
    let halves = t.node_halves(c);
    t.component_count() > 1
        && t.is_closed_component(c)
        && t.genera[c] == 0
        && halves >= 1
        && t.special_points(c) < 3
        && !t.nodes.contains(&(c, c))
}

fn collapse_component(t: &SurfaceType, c: usize) -> SurfaceType {
    let mut t = t.clone();
    let (touching, mut nodes): (Vec<(usize, usize)>, Vec<(usize, usize)>) =
        t.nodes.iter().partition(|&&(a, b)| a == c || b == c);
    let far: Vec<usize> = touching.iter().map(|&(a, b)| if a == c { b } else { a }).collect();
    match far[..] {
        [x] => {
            for m in t.marks.iter_mut().filter(|m| m.0 == c) {
                m.0 = x;
            }
        }
        [x, y] => nodes.push((x, y)),
        _ => unreachable!("collapsible components carry one or two node halves"),
    }
    t.nodes = nodes;
    t.genera.remove(c);
    let shift = |x: usize| if x > c { x - 1 } else { x };
    for n in &mut t.nodes {
        *n = (shift(n.0), shift(n.1));
    }
    for m in &mut t.marks {
        m.0 = shift(m.0);
    }
    for x in t.inputs.iter_mut().chain(t.outputs.iter_mut()) {
        *x = shift(*x);
    }
    t
}

/// Collapse unstable closed genus-0 components until none is left:
/// a sphere with one node is removed with its node, a sphere with two nodes
/// is removed and its nodes fused, and a sphere with a node and a mark is
/// removed with its mark moved across the node. `choose(n)` picks which of
/// the `n` current candidates collapses next.
pub fn stabilize_by(s: &SurfaceType, choose: &mut dyn FnMut(usize) -> usize) -> SurfaceType {
    let mut t = s.clone();
    loop {
        let candidates: Vec<usize> = (0..t.component_count()).filter(|&c| collapsible(&t, c)).collect();
        if candidates.is_empty() {
            return t.canonical();
        }
        t = collapse_component(&t, candidates[choose(candidates.len())]);
    }
}

pub fn stabilize(s: &SurfaceType) -> SurfaceType {
    stabilize_by(s, &mut |_| 0)
}

/// [`stabilize`] with collapses taken in random order.
pub fn stabilize_shuffled<R: Rng>(s: &SurfaceType, rng: &mut R) -> SurfaceType {
    stabilize_by(s, &mut |n| rng.gen_range(0..n))
}

/// Forget weight-0 marks, then stabilize if `nodal`.
pub fn normalize_spots(s: &SurfaceType, nodal: bool) -> SurfaceType {
    let mut t = s.clone();
    t.marks.retain(|m| m.1 != Weight::from_integer(0));
    if nodal {
        stabilize(&t)
    } else {
        t.canonical()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annulus_into_pants() {
        let g = IodaGraph::partially_grafted((0, 2), (2, 1), &[(0, 0), (1, 1)]).unwrap();
        let r = glue(&g, &[&SurfaceType::smooth(0, 0, 2), &SurfaceType::smooth(0, 2, 1)], Policy::Plain).unwrap();
        assert_eq!(r, SurfaceType::smooth(1, 0, 1));
    }

    #[test]
    fn closed_result_rejected() {
        let g = IodaGraph::partially_grafted((0, 1), (1, 0), &[(0, 0)]);
        assert!(g.is_err());
        let s = SurfaceType { genera: vec![2], nodes: vec![], inputs: vec![], outputs: vec![], marks: vec![], unit: false };
        assert_eq!(s.validate(), Err(SurfaceError::IoViolation));
    }

    #[test]
    fn one_node_sphere_collapses() {
        let disk_and_sphere =
            SurfaceType { genera: vec![0, 0], nodes: vec![(0, 1)], inputs: vec![], outputs: vec![0], marks: vec![], unit: false };
        assert_eq!(stabilize(&disk_and_sphere), SurfaceType::smooth(0, 0, 1));
    }
}
