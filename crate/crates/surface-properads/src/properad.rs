use crate::{glue, membership, ProperadName, SurfaceError, SurfaceType};
use free_properad::LabeledGraph;
use properad_core::{Mark, PortGraph, Properad, ProperadError};

/// The named collection as a properad: composition glues along the graph
/// and applies the collection's policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceProperad {
    pub name: ProperadName,
}

impl SurfaceProperad {
    pub fn new(name: ProperadName) -> Self {
        SurfaceProperad { name }
    }
}

impl From<SurfaceError> for ProperadError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::IoViolation => ProperadError::IoViolation,
            other => ProperadError::Evaluation(other.to_string()),
        }
    }
}

impl Properad for SurfaceProperad {
    type Elem = SurfaceType;

    fn name(&self) -> String {
        self.name.to_string()
    }

    fn contains(&self, x: &SurfaceType) -> bool {
        membership(x, self.name).is_ok_and(|m| m.member) && x.canonical() == *x
    }

    fn evaluate(&self, g: &LabeledGraph<SurfaceType>) -> Result<SurfaceType, ProperadError> {
        let pieces: Vec<&SurfaceType> = g.labels.iter().collect();
        Ok(glue(&g.shape, &pieces, self.name.policy())?)
    }

    fn port_graph(&self, x: &SurfaceType) -> PortGraph<SurfaceType> {
        let mut g = PortGraph { colors: Vec::new(), adj: Vec::new(), inputs: Vec::new(), outputs: Vec::new() };
        for (c, &genus) in x.genera.iter().enumerate() {
            let mut marks: Vec<(i64, i64)> =
                x.marks.iter().filter(|m| m.0 == c).map(|m| (*m.1.numer(), *m.1.denom())).collect();
            marks.sort_unstable();
            let mut tag = vec![0, i64::from(genus), i64::from(x.unit)];
            tag.extend(marks.into_iter().flat_map(|(a, b)| [a, b]));
            g.add(Mark::Tag(tag));
        }
        for &(a, b) in &x.nodes {
            if a == b {
                let n = g.add(Mark::Tag(vec![1]));
                g.link(n, a);
            } else {
                let n = g.add(Mark::Tag(vec![2]));
                g.link(n, a);
                g.link(n, b);
            }
        }
        for &c in &x.inputs {
            let q = g.add(Mark::Tag(vec![3]));
            g.link(q, c);
            g.inputs.push(q);
        }
        for &c in &x.outputs {
            let q = g.add(Mark::Tag(vec![4]));
            g.link(q, c);
            g.outputs.push(q);
        }
        g
    }
}
