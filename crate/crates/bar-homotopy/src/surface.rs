use crate::{BarError, RefinementOracle};
use free_properad::LabeledGraph;
use surface_properads::{glue_traced, node_cut, ProperadName, SurfaceProperad, SurfaceType};

/// Cuts a surface type around its nodes into the components and one nodal
/// annulus per node, as [`node_cut`] does. Types with fewer than
/// `min_nodes` nodes are left whole. With `min_nodes = 1` this is
/// compatible with composition; larger values are not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeCutOracle {
    pub name: ProperadName,
    pub min_nodes: usize,
}

impl NodeCutOracle {
    pub fn new(name: ProperadName) -> Self {
        NodeCutOracle { name, min_nodes: 1 }
    }

    /// Only types with at least `min_nodes` nodes are cut.
    pub fn from_nodes(name: ProperadName, min_nodes: usize) -> Self {
        NodeCutOracle { name, min_nodes }
    }

    fn cuts(&self, s: &SurfaceType) -> bool {
        !s.nodes.is_empty() && s.nodes.len() >= self.min_nodes
    }
}

impl RefinementOracle<SurfaceProperad> for NodeCutOracle {
    fn name(&self) -> String {
        match self.min_nodes {
            0 | 1 => "node-cut".into(),
            k => format!("node-cut from {k} nodes"),
        }
    }

    fn refine(&self, p: &SurfaceType) -> Result<LabeledGraph<SurfaceType>, BarError> {
        if self.cuts(p) {
            Ok(node_cut(p))
        } else {
            Ok(LabeledGraph::corolla(p.clone())?)
        }
    }

    /// The nodal annulus refines into itself between two cylinders; as a
    /// piece it stands for the middle vertex.
    fn core(&self, p: &SurfaceType) -> Result<Option<usize>, BarError> {
        if !self.cuts(p) {
            Ok(Some(0))
        } else if p.canonical() == SurfaceType::nodal_annulus() {
            Ok(Some(p.component_count()))
        } else {
            Ok(None)
        }
    }

    fn factor(&self, g: &LabeledGraph<SurfaceType>) -> Result<Vec<Vec<usize>>, BarError> {
        let parts: Vec<&SurfaceType> = g.labels.iter().collect();
        let glued = glue_traced(&g.shape, &parts).map_err(properad_core::ProperadError::from)?;
        let raw = &glued.raw;
        if self.name.policy().apply(raw) != raw.canonical() {
            return Err(BarError::Factorization("composition changed the glued type".into()));
        }
        if !self.cuts(raw) {
            return Ok(parts.iter().map(|p| vec![0; self.refine(p).map_or(1, |r| r.shape.vertex_count)]).collect());
        }
        let k = raw.component_count();
        parts
            .iter()
            .enumerate()
            .map(|(v, p)| {
                let node = |j: usize| k + glued.node_offsets[v] + j;
                if self.cuts(p) {
                    Ok(glued.component_map[v].iter().copied().chain((0..p.nodes.len()).map(node)).collect())
                } else if p.nodes.is_empty() {
                    Ok(vec![glued.component_map[v][0]])
                } else {
                    Err(BarError::Factorization(format!(
                        "vertex {v} keeps {} node(s) uncut inside a composite that is cut",
                        p.nodes.len()
                    )))
                }
            })
            .collect()
    }
}
