//! Topological types of nodal and spotted surfaces, their gluing along
//! ioda-graphs, and the named properads they form.
//!
//! A [`SurfaceType`] is a dual graph: components carry a genus, nodes join
//! two component sites, boundary circles are globally ordered inputs and
//! outputs, and marked points carry exact rational weights.

mod cut;
mod glue;
mod names;
mod properad;
mod rho;
pub mod sample;

pub use cut::node_cut;
pub use glue::{glue, glue_traced, normalize_spots, stabilize, stabilize_by, stabilize_shuffled, Glued, Policy};
pub use names::{membership, Membership, ProperadName};
pub use properad::SurfaceProperad;
pub use rho::rho_apply;
pub use sample::check_closure;

use free_properad::HasArity;
use graph_core::{Arity, GraphError};
use num_rational::Ratio;
use thiserror::Error;

/// Weight of a marked point, in `[0, 1]`.
pub type Weight = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("invalid surface type: {0}")]
    Invalid(String),
    #[error("io-violation: result would have arity (0,0)")]
    IoViolation,
    #[error("vertex {vertex} has arity {expected:?} but its surface has arity {found:?}")]
    ArityMismatch { vertex: usize, expected: Arity, found: Arity },
    #[error("graph has {vertices} vertices but {pieces} surfaces were given")]
    PieceCount { vertices: usize, pieces: usize },
    #[error("weight {0} lies outside [0,1]")]
    BadWeight(Weight),
    #[error("weight {0} equals a threshold")]
    OnThreshold(Weight),
    #[error("thresholds must be nondecreasing and lie strictly between 0 and 1")]
    BadThresholds,
    #[error("unknown properad name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Topological type of a connected, possibly nodal, possibly spotted surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    /// Genus of each component.
    pub genera: Vec<u32>,
    /// Components joined by each node; `(c, c)` is a self-node.
    pub nodes: Vec<(usize, usize)>,
    /// Component of each input circle, in order.
    pub inputs: Vec<usize>,
    /// Component of each output circle, in order.
    pub outputs: Vec<usize>,
    /// Component and weight of each marked point.
    pub marks: Vec<(usize, Weight)>,
    /// The modulus-0 annulus.
    pub unit: bool,
}

impl HasArity for SurfaceType {
    fn arity(&self) -> Arity {
        (self.inputs.len(), self.outputs.len())
    }
}

impl SurfaceType {
    /// Smooth genus-`g` surface with `a` inputs and `b` outputs.
    pub fn smooth(g: u32, a: usize, b: usize) -> Self {
        SurfaceType { genera: vec![g], nodes: vec![], inputs: vec![0; a], outputs: vec![0; b], marks: vec![], unit: false }
    }

    pub fn unit_annulus() -> Self {
        SurfaceType { unit: true, ..Self::smooth(0, 1, 1) }
    }

    /// Two disks joined at a node, each with one output circle.
    pub fn nodal_annulus() -> Self {
        SurfaceType { genera: vec![0, 0], nodes: vec![(0, 1)], inputs: vec![], outputs: vec![0, 1], marks: vec![], unit: false }
    }

    pub fn with_marks(mut self, marks: impl IntoIterator<Item = (usize, Weight)>) -> Self {
        self.marks.extend(marks);
        self
    }

    pub fn component_count(&self) -> usize {
        self.genera.len()
    }

    pub fn is_smooth(&self) -> bool {
        self.genera.len() == 1 && self.nodes.is_empty()
    }

    pub fn node_halves(&self, c: usize) -> usize {
        self.nodes.iter().map(|&(a, b)| (a == c) as usize + (b == c) as usize).sum()
    }

    pub fn boundary_count(&self, c: usize) -> usize {
        self.inputs.iter().chain(&self.outputs).filter(|&&x| x == c).count()
    }

    pub fn output_count(&self, c: usize) -> usize {
        self.outputs.iter().filter(|&&x| x == c).count()
    }

    pub fn mark_count(&self, c: usize) -> usize {
        self.marks.iter().filter(|m| m.0 == c).count()
    }

    /// Node halves plus marked points on `c`.
    pub fn special_points(&self, c: usize) -> usize {
        self.node_halves(c) + self.mark_count(c)
    }

    pub fn is_closed_component(&self, c: usize) -> bool {
        self.boundary_count(c) == 0
    }

    /// A closed component that stability forbids: genus 0 with fewer than
    /// three special points, or genus 1 with none.
    pub fn is_unstable_component(&self, c: usize) -> bool {
        self.is_closed_component(c)
            && match self.genera[c] {
                0 => self.special_points(c) < 3,
                1 => self.special_points(c) == 0,
                _ => false,
            }
    }

    pub fn is_stable(&self) -> bool {
        (0..self.component_count()).all(|c| !self.is_unstable_component(c))
    }

    pub fn has_weight_one_mark(&self) -> bool {
        self.marks.iter().any(|m| m.1 == Weight::from_integer(1))
    }

    /// Euler characteristic; marked points do not contribute.
    pub fn euler_char(&self) -> i64 {
        (0..self.component_count())
            .map(|c| 2 - 2 * self.genera[c] as i64 - self.boundary_count(c) as i64 - self.node_halves(c) as i64)
            .sum()
    }

    /// Sum of the genera plus the first Betti number of the dual graph.
    pub fn arithmetic_genus(&self) -> u32 {
        let betti = self.nodes.len() + 1 - self.component_count();
        self.genera.iter().sum::<u32>() + betti as u32
    }

    pub fn validate(&self) -> Result<(), SurfaceError> {
        let n = self.component_count();
        let bad = |m: String| Err(SurfaceError::Invalid(m));
        if n == 0 {
            return bad("no components".into());
        }
        if self.inputs.is_empty() && self.outputs.is_empty() {
            return Err(SurfaceError::IoViolation);
        }
        let refs = self.nodes.iter().flat_map(|&(a, b)| [a, b]);
        let refs = refs.chain(self.inputs.iter().copied()).chain(self.outputs.iter().copied());
        if let Some(c) = refs.chain(self.marks.iter().map(|m| m.0)).find(|&c| c >= n) {
            return bad(format!("reference to missing component {c}"));
        }
        if let Some(m) = self.marks.iter().find(|m| m.1 < Weight::from_integer(0) || m.1 > Weight::from_integer(1)) {
            return Err(SurfaceError::BadWeight(m.1));
        }
        let mut root: Vec<usize> = (0..n).collect();
        for &(a, b) in &self.nodes {
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            root[ra] = rb;
        }
        let r0 = find(&mut root, 0);
        if let Some(c) = (1..n).find(|&c| find(&mut root, c) != r0) {
            return bad(format!("component {c} is not joined to component 0"));
        }
        if self.unit && !(self.is_smooth() && self.genera[0] == 0 && self.arity() == (1, 1) && self.marks.is_empty()) {
            return bad("unit flag on a type other than the smooth genus-0 (1,1) annulus".into());
        }
        Ok(())
    }

    /// Representative of the isomorphism class: components carrying
    /// boundary circles are numbered by first appearance among inputs then
    /// outputs, closed components by the smallest resulting encoding.
    pub fn canonical(&self) -> SurfaceType {
        let n = self.component_count();
        let mut order: Vec<Option<usize>> = vec![None; n];
        let mut next = 0;
        for &c in self.inputs.iter().chain(&self.outputs) {
            if order[c].is_none() {
                order[c] = Some(next);
                next += 1;
            }
        }
        let mut closed: Vec<usize> = (0..n).filter(|&c| order[c].is_none()).collect();
        let key = |c: usize| {
            let mut w: Vec<Weight> = self.marks.iter().filter(|m| m.0 == c).map(|m| m.1).collect();
            w.sort();
            (self.genera[c], self.node_halves(c), w)
        };
        closed.sort_by_key(|&c| key(c));
        let base: Vec<usize> = order.iter().map(|o| o.unwrap_or(usize::MAX)).collect();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &c in &closed {
            match blocks.last_mut() {
                Some(b) if key(b[0]) == key(c) => b.push(c),
                _ => blocks.push(vec![c]),
            }
        }
        let arrangements: usize = blocks.iter().map(|b| (1..=b.len()).product::<usize>()).product();
        let mut best: Option<SurfaceType> = None;
        if arrangements <= 5040 {
            for_each_arrangement(&blocks, &mut |perm| {
                let mut map = base.clone();
                for (k, &c) in perm.iter().enumerate() {
                    map[c] = next + k;
                }
                let t = self.relabeled(&map);
                if best.as_ref().map_or(true, |b| t < *b) {
                    best = Some(t);
                }
            });
        } else {
            let mut map = base;
            for (k, &c) in closed.iter().enumerate() {
                map[c] = next + k;
            }
            best = Some(self.relabeled(&map));
        }
        best.expect("at least one arrangement")
    }

    /// Rename component `c` to `map[c]`, a permutation, and sort nodes and marks.
    pub fn relabeled(&self, map: &[usize]) -> SurfaceType {
        let mut genera = vec![0; self.genera.len()];
        for (c, &g) in self.genera.iter().enumerate() {
            genera[map[c]] = g;
        }
        let mut nodes: Vec<(usize, usize)> = self
            .nodes
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (map[a], map[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        nodes.sort();
        let mut marks: Vec<(usize, Weight)> = self.marks.iter().map(|&(c, w)| (map[c], w)).collect();
        marks.sort();
        SurfaceType {
            genera,
            nodes,
            inputs: self.inputs.iter().map(|&c| map[c]).collect(),
            outputs: self.outputs.iter().map(|&c| map[c]).collect(),
            marks,
            unit: self.unit,
        }
    }
}

pub(crate) fn find(root: &mut [usize], mut x: usize) -> usize {
    while root[x] != x {
        root[x] = root[root[x]];
        x = root[x];
    }
    x
}

fn for_each_arrangement(blocks: &[Vec<usize>], f: &mut dyn FnMut(&[usize])) {
    fn rec(blocks: &[Vec<usize>], prefix: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        match blocks.split_first() {
            None => f(prefix),
            Some((b, rest)) => {
                let mut b = b.clone();
                permute(&mut b, 0, &mut |p| {
                    let len = prefix.len();
                    prefix.extend_from_slice(p);
                    rec(rest, prefix, f);
                    prefix.truncate(len);
                });
            }
        }
    }
    fn permute(xs: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == xs.len() {
            f(xs);
            return;
        }
        for j in k..xs.len() {
            xs.swap(k, j);
            permute(xs, k + 1, f);
            xs.swap(k, j);
        }
    }
    rec(blocks, &mut Vec::new(), f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: i64, q: i64) -> Weight {
        Weight::new(p, q)
    }

    #[test]
    fn genus_examples() {
        assert_eq!(SurfaceType::smooth(2, 1, 0).arithmetic_genus(), 2);
        let two_nodes =
            SurfaceType { genera: vec![0, 0], nodes: vec![(0, 1), (0, 1)], inputs: vec![], outputs: vec![0], marks: vec![], unit: false };
        assert_eq!(two_nodes.arithmetic_genus(), 1);
        assert_eq!(SurfaceType::nodal_annulus().arithmetic_genus(), 0);
    }

    #[test]
    fn euler_matches_arithmetic_genus() {
        let s = SurfaceType { genera: vec![1, 0, 2], nodes: vec![(0, 1), (1, 2), (2, 2)], inputs: vec![1], outputs: vec![0, 2], marks: vec![], unit: false };
        s.validate().unwrap();
        assert_eq!(s.euler_char(), 2 - 2 * s.arithmetic_genus() as i64 - 3);
    }

    #[test]
    fn validation_errors() {
        let mut s = SurfaceType::smooth(0, 1, 1);
        s.marks.push((0, w(3, 2)));
        assert_eq!(s.validate(), Err(SurfaceError::BadWeight(w(3, 2))));
        let split = SurfaceType { genera: vec![0, 0], nodes: vec![], inputs: vec![0], outputs: vec![1], marks: vec![], unit: false };
        assert!(matches!(split.validate(), Err(SurfaceError::Invalid(_))));
        assert_eq!(SurfaceType::smooth(1, 0, 0).validate(), Err(SurfaceError::IoViolation));
        let bad_unit = SurfaceType { unit: true, ..SurfaceType::smooth(1, 1, 1) };
        assert!(bad_unit.validate().is_err());
    }

    #[test]
    fn canonical_ignores_closed_component_order() {
        let a = SurfaceType {
            genera: vec![0, 2, 1],
            nodes: vec![(0, 1), (0, 2)],
            inputs: vec![],
            outputs: vec![0],
            marks: vec![(2, w(1, 2))],
            unit: false,
        };
        let b = a.relabeled(&[0, 2, 1]);
        assert_ne!(a, b);
        assert_eq!(a.canonical(), b.canonical());
    }
}
