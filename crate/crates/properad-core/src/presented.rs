use crate::{bidirectional_search, FreeProperad, Properad, ProperadError, Verdict};
use free_properad::{substitute_labeled, IoSequence, Label, LabeledGraph};
use graph_core::{collapse, IodaGraph};
use std::collections::BTreeMap;

type Elem = LabeledGraph<Label>;

/// Generators and relations. Elements are represented by free elements;
/// two representatives are equal when a chain of relation rewrites joins
/// them, which [`PresentedProperad::equal`] searches for.
#[derive(Clone, Debug)]
pub struct PresentedProperad {
    pub free: FreeProperad,
    pub relations: Vec<(Elem, Elem)>,
    /// Every leg-permuted form of each relation side, mapped to the
    /// correspondingly permuted other side.
    rewrites: BTreeMap<Elem, Vec<Elem>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn permute_legs(x: &Elem, si: &[usize], so: &[usize]) -> Elem {
    let outer = IodaGraph::permuted_corolla(si, so);
    substitute_labeled(&outer, &[x]).expect("arity matches").0.canonical()
}

impl PresentedProperad {
    pub fn new(generators: IoSequence, relations: Vec<(Elem, Elem)>) -> Result<Self, ProperadError> {
        let free = FreeProperad::new(generators);
        let mut rewrites: BTreeMap<Elem, Vec<Elem>> = BTreeMap::new();
        for (l, r) in &relations {
            if l.shape.arity() != r.shape.arity() {
                return Err(ProperadError::RelationArity(l.shape.arity(), r.shape.arity()));
            }
            for side in [l, r] {
                side.shape.check()?;
                side.check_labels()?;
                if let Some(bad) = side.labels.iter().find(|x| !free.generators.contains(x)) {
                    return Err(ProperadError::NotInCarrier { properad: "presented".into(), element: format!("{bad:?}") });
                }
            }
            let (a, b) = l.shape.arity();
            for si in permutations(a) {
                for so in permutations(b) {
                    let (pl, pr) = (permute_legs(l, &si, &so), permute_legs(r, &si, &so));
                    rewrites.entry(pl.clone()).or_default().push(pr.clone());
                    rewrites.entry(pr).or_default().push(pl);
                }
            }
        }
        Ok(PresentedProperad { free, relations, rewrites })
    }

    /// Every representative one relation rewrite away from `t`.
    pub fn moves(&self, t: &Elem) -> Vec<Elem> {
        let n = t.shape.vertex_count;
        let mut out = Vec::new();
        if n > 16 {
            return out;
        }
        for mask in 1u32..(1 << n) {
            let h: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let Ok(c) = collapse(&t.shape, &h) else { continue };
            let inner = LabeledGraph { shape: c.inner.clone(), labels: c.inner_vertices.iter().map(|&v| t.labels[v]).collect() }
                .canonical();
            let Some(targets) = self.rewrites.get(&inner) else { continue };
            let mut corollas = vec![None; c.graph.vertex_count];
            for (v, &l) in t.labels.iter().enumerate() {
                if !h.contains(&v) {
                    corollas[c.vertex_map[v]] = Some(self.free.generator(l));
                }
            }
            for target in targets {
                let parts: Vec<&Elem> = (0..c.graph.vertex_count)
                    .map(|u| if u == c.new_vertex { target } else { corollas[u].as_ref().expect("outside vertex") })
                    .collect();
                if let Ok((g, _)) = substitute_labeled(&c.graph, &parts) {
                    out.push(g.canonical());
                }
            }
        }
        out
    }

    pub fn equal(&self, a: &Elem, b: &Elem, budget: usize) -> Result<Verdict, ProperadError> {
        if a.shape.arity() != b.shape.arity() {
            return Err(ProperadError::Evaluation(format!("arity mismatch {:?} vs {:?}", a.shape.arity(), b.shape.arity())));
        }
        Ok(bidirectional_search(a.canonical(), b.canonical(), budget, |t| self.moves(t)))
    }
}

impl Properad for PresentedProperad {
    type Elem = Elem;

    fn name(&self) -> String {
        "presented".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        self.free.contains(x)
    }

    fn evaluate(&self, g: &LabeledGraph<Elem>) -> Result<Elem, ProperadError> {
        self.free.evaluate(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }
}
