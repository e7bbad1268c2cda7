use crate::{coarsen, substitute_labeled, HasArity, LabeledGraph, Nested, NestError};

/// A nested value of depth `d` as its full flattening together with, for
/// each level `k < d`, the partition of the flattened vertices into the
/// vertices of level `k`. Each partition refines the one before, and the
/// last is into singletons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<L> {
    pub flat: LabeledGraph<L>,
    pub levels: Vec<Vec<Vec<usize>>>,
}

impl<L> Chain<L> {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }
}

fn singletons(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|v| vec![v]).collect()
}

pub fn decompose<L: HasArity + Clone>(x: &Nested<L>) -> Result<Chain<L>, NestError> {
    let g = x.as_graph().ok_or(NestError::Level { depth: 0, level: 0 })?;
    if g.labels.iter().all(|l| l.as_leaf().is_some()) {
        let flat = g.map(|l| l.as_leaf().expect("checked").clone());
        return Ok(Chain { levels: vec![singletons(flat.shape.vertex_count)], flat });
    }
    let subs: Vec<Chain<L>> = g.labels.iter().map(decompose).collect::<Result<_, _>>()?;
    let depth = subs[0].depth();
    if subs.iter().any(|c| c.depth() != depth) {
        return Err(NestError::NonUniformDepth);
    }
    let parts: Vec<&LabeledGraph<L>> = subs.iter().map(|c| &c.flat).collect();
    let (flat, s) = substitute_labeled(&g.shape, &parts)?;
    let mut pos: Vec<Vec<usize>> = subs.iter().map(|c| vec![0; c.flat.shape.vertex_count]).collect();
    for (n, &(v, u)) in s.vertex_origin.iter().enumerate() {
        pos[v][u] = n;
    }
    let mut levels = vec![pos.clone()];
    for k in 0..depth {
        let level = subs
            .iter()
            .enumerate()
            .flat_map(|(v, c)| c.levels[k].iter().map(|h| h.iter().map(|&u| pos[v][u]).collect::<Vec<_>>()).collect::<Vec<_>>())
            .collect();
        levels.push(level);
    }
    Ok(Chain { flat, levels })
}

/// Rebuild the nested value, in canonical form.
pub fn assemble<L: HasArity + Clone>(c: &Chain<L>) -> Result<Nested<L>, NestError> {
    Ok(assemble_raw(c)?.canonical())
}

fn assemble_raw<L: HasArity + Clone>(c: &Chain<L>) -> Result<Nested<L>, NestError> {
    let n = c.flat.shape.vertex_count;
    match c.levels.last() {
        Some(last) if last.len() == n && last.iter().all(|h| h.len() == 1) => {}
        _ => return Err(NestError::BadChain("the last level is not into singletons".into())),
    }
    let mut cur = c.flat.map(|l| Nested::Leaf(l.clone()));
    let mut pos: Vec<usize> = (0..n).collect();
    for (k, groups) in c.levels.iter().enumerate().rev().skip(1) {
        let mut grouped = Vec::with_capacity(groups.len());
        for h in groups {
            let mut vs: Vec<usize> = Vec::new();
            for &t in h {
                if t >= n {
                    return Err(NestError::BadChain(format!("vertex {t} out of range at level {k}")));
                }
                if !vs.contains(&pos[t]) {
                    vs.push(pos[t]);
                }
            }
            grouped.push(vs);
        }
        let co = coarsen(&cur, &grouped).map_err(|e| NestError::BadChain(format!("level {k}: {e}")))?;
        for (gi, h) in groups.iter().enumerate() {
            for &t in h {
                pos[t] = co.group_vertex[gi];
            }
        }
        cur = co.graph;
    }
    Ok(Nested::Graph(cur))
}
