use free_properad::{HasArity, IoSequence, Label, LabeledGraph, Nested, Report};
use graph_core::{Diagnostic, IodaGraph, Item};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use surface_properads::{SurfaceType, Weight};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("document is not a {expected}: found {found}")]
    Kind { expected: &'static str, found: &'static str },
}

fn schema(path: &str, message: impl Into<String>) -> IoError {
    IoError::Schema { path: if path.is_empty() { ".".into() } else { path.into() }, message: message.into() }
}

/// A value with a JSON schema. `Doc` is the serde mirror of the value;
/// conversion from it checks everything serde cannot.
pub trait Codec: Sized {
    type Doc: Serialize + DeserializeOwned;

    fn to_doc(&self) -> Self::Doc;

    fn from_doc(doc: Self::Doc, path: &str) -> Result<Self, IoError>;
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: usize,
    pub src: usize,
    pub dst: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegDoc {
    pub id: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderDoc {
    pub vertex: usize,
    #[serde(rename = "in")]
    pub ins: Vec<String>,
    #[serde(rename = "out")]
    pub outs: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeDoc>,
    pub inputs: Vec<LegDoc>,
    pub outputs: Vec<LegDoc>,
    pub orders: Vec<OrderDoc>,
}

fn item_id(item: Item) -> String {
    match item {
        Item::In(k) => format!("in{k}"),
        Item::Out(k) => format!("out{k}"),
        Item::Edge(e) => format!("e{e}"),
    }
}

fn parse_item(s: &str, path: &str) -> Result<Item, IoError> {
    let num = |rest: &str| rest.parse::<usize>().map_err(|_| schema(path, format!("bad item id {s:?}")));
    if let Some(rest) = s.strip_prefix("in") {
        Ok(Item::In(num(rest)?))
    } else if let Some(rest) = s.strip_prefix("out") {
        Ok(Item::Out(num(rest)?))
    } else if let Some(rest) = s.strip_prefix('e') {
        Ok(Item::Edge(num(rest)?))
    } else {
        Err(schema(path, format!("bad item id {s:?}")))
    }
}

fn check_ids(path: &str, ids: impl Iterator<Item = usize>) -> Result<(), IoError> {
    for (k, id) in ids.enumerate() {
        if id != k {
            return Err(schema(&format!("{path}[{k}]"), format!("id {id} out of sequence, expected {k}")));
        }
    }
    Ok(())
}

impl Codec for IodaGraph {
    type Doc = GraphDoc;

    fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: (0..self.vertex_count).collect(),
            edges: self.edges.iter().enumerate().map(|(id, &(src, dst))| EdgeDoc { id, src, dst }).collect(),
            inputs: self.inputs.iter().enumerate().map(|(id, &vertex)| LegDoc { id, vertex }).collect(),
            outputs: self.outputs.iter().enumerate().map(|(id, &vertex)| LegDoc { id, vertex }).collect(),
            orders: (0..self.vertex_count)
                .map(|v| OrderDoc {
                    vertex: v,
                    ins: self.in_order[v].iter().map(|&i| item_id(i)).collect(),
                    outs: self.out_order[v].iter().map(|&i| item_id(i)).collect(),
                })
                .collect(),
        }
    }

    fn from_doc(doc: GraphDoc, path: &str) -> Result<Self, IoError> {
        check_ids(&format!("{path}.vertices"), doc.vertices.iter().copied())?;
        check_ids(&format!("{path}.edges"), doc.edges.iter().map(|e| e.id))?;
        check_ids(&format!("{path}.inputs"), doc.inputs.iter().map(|l| l.id))?;
        check_ids(&format!("{path}.outputs"), doc.outputs.iter().map(|l| l.id))?;
        check_ids(&format!("{path}.orders"), doc.orders.iter().map(|o| o.vertex))?;
        let n = doc.vertices.len();
        if doc.orders.len() != n {
            return Err(schema(&format!("{path}.orders"), format!("{} orders for {n} vertices", doc.orders.len())));
        }
        let mut in_order = Vec::with_capacity(n);
        let mut out_order = Vec::with_capacity(n);
        for (v, o) in doc.orders.iter().enumerate() {
            let at = |side: &str, k: usize| format!("{path}.orders[{v}].{side}[{k}]");
            in_order.push(o.ins.iter().enumerate().map(|(k, s)| parse_item(s, &at("in", k))).collect::<Result<Vec<_>, _>>()?);
            out_order.push(o.outs.iter().enumerate().map(|(k, s)| parse_item(s, &at("out", k))).collect::<Result<Vec<_>, _>>()?);
        }
        let g = IodaGraph {
            vertex_count: n,
            edges: doc.edges.iter().map(|e| (e.src, e.dst)).collect(),
            inputs: doc.inputs.iter().map(|l| l.vertex).collect(),
            outputs: doc.outputs.iter().map(|l| l.vertex).collect(),
            in_order,
            out_order,
        };
        if let Some(d) = g.validate().into_iter().next() {
            let at = match &d {
                Diagnostic::BadOrder { vertex, .. } | Diagnostic::ZeroArity(vertex) => format!("{path}.orders[{vertex}]"),
                _ => path.to_string(),
            };
            return Err(schema(&at, d.to_string()));
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelDoc {
    pub arity: (usize, usize),
    pub id: u32,
}

impl Codec for Label {
    type Doc = LabelDoc;

    fn to_doc(&self) -> LabelDoc {
        LabelDoc { arity: self.arity, id: self.id }
    }

    fn from_doc(doc: LabelDoc, path: &str) -> Result<Self, IoError> {
        if doc.arity == (0, 0) {
            return Err(schema(&format!("{path}.arity"), "arity (0,0) is not allowed"));
        }
        Ok(Label { arity: doc.arity, id: doc.id })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound = "D: Serialize + DeserializeOwned")]
pub struct LabeledDoc<D> {
    pub shape: GraphDoc,
    pub labels: Vec<D>,
}

impl<L: Codec + HasArity + Clone> Codec for LabeledGraph<L> {
    type Doc = LabeledDoc<L::Doc>;

    fn to_doc(&self) -> Self::Doc {
        LabeledDoc { shape: self.shape.to_doc(), labels: self.labels.iter().map(Codec::to_doc).collect() }
    }

    fn from_doc(doc: Self::Doc, path: &str) -> Result<Self, IoError> {
        let shape = IodaGraph::from_doc(doc.shape, &format!("{path}.shape"))?;
        if doc.labels.len() != shape.vertex_count {
            return Err(schema(&format!("{path}.labels"), format!("{} labels for {} vertices", doc.labels.len(), shape.vertex_count)));
        }
        let labels = doc
            .labels
            .into_iter()
            .enumerate()
            .map(|(v, d)| L::from_doc(d, &format!("{path}.labels[{v}]")))
            .collect::<Result<Vec<_>, _>>()?;
        for (v, l) in labels.iter().enumerate() {
            if l.arity() != shape.vertex_arity(v) {
                return Err(schema(
                    &format!("{path}.labels[{v}]"),
                    format!("arity {:?} does not fit vertex arity {:?}", l.arity(), shape.vertex_arity(v)),
                ));
            }
        }
        Ok(LabeledGraph { shape, labels })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", bound = "D: Serialize + DeserializeOwned")]
pub enum NestedDoc<D> {
    Leaf(D),
    Graph(Box<LabeledDoc<NestedDoc<D>>>),
}

impl<L: Codec + HasArity + Clone> Codec for Nested<L> {
    type Doc = NestedDoc<L::Doc>;

    fn to_doc(&self) -> Self::Doc {
        match self {
            Nested::Leaf(l) => NestedDoc::Leaf(l.to_doc()),
            Nested::Graph(g) => NestedDoc::Graph(Box::new(g.to_doc())),
        }
    }

    fn from_doc(doc: Self::Doc, path: &str) -> Result<Self, IoError> {
        let x = match doc {
            NestedDoc::Leaf(d) => Nested::Leaf(L::from_doc(d, &format!("{path}.leaf"))?),
            NestedDoc::Graph(g) => Nested::Graph(LabeledGraph::from_doc(*g, &format!("{path}.graph"))?),
        };
        x.validate().map_err(|e| schema(path, e.to_string()))?;
        Ok(x)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub genus: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    In,
    Out,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryDoc {
    pub side: Side,
    pub component: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkDoc {
    pub component: usize,
    pub weight: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDoc {
    pub components: Vec<ComponentDoc>,
    pub nodes: Vec<(usize, usize)>,
    pub boundary: Vec<BoundaryDoc>,
    pub marks: Vec<MarkDoc>,
    pub unit: bool,
}

/// `p/q` in lowest terms, also for integers.
pub fn format_weight(w: &Weight) -> String {
    format!("{}/{}", w.numer(), w.denom())
}

pub fn parse_weight(s: &str, path: &str) -> Result<Weight, IoError> {
    let (p, q) = s.split_once('/').ok_or_else(|| schema(path, format!("weight {s:?} is not of the form p/q")))?;
    let p: i64 = p.trim().parse().map_err(|_| schema(path, format!("bad numerator in {s:?}")))?;
    let q: i64 = q.trim().parse().map_err(|_| schema(path, format!("bad denominator in {s:?}")))?;
    if q <= 0 {
        return Err(schema(path, format!("denominator of {s:?} must be positive")));
    }
    Ok(Weight::new(p, q))
}

impl Codec for SurfaceType {
    type Doc = SurfaceDoc;

    fn to_doc(&self) -> SurfaceDoc {
        let ins = self.inputs.iter().map(|&component| BoundaryDoc { side: Side::In, component });
        let outs = self.outputs.iter().map(|&component| BoundaryDoc { side: Side::Out, component });
        SurfaceDoc {
            components: self.genera.iter().map(|&genus| ComponentDoc { genus }).collect(),
            nodes: self.nodes.clone(),
            boundary: ins.chain(outs).collect(),
            marks: self.marks.iter().map(|(component, w)| MarkDoc { component: *component, weight: format_weight(w) }).collect(),
            unit: self.unit,
        }
    }

    fn from_doc(doc: SurfaceDoc, path: &str) -> Result<Self, IoError> {
        let mut s = SurfaceType {
            genera: doc.components.iter().map(|c| c.genus).collect(),
            nodes: doc.nodes,
            inputs: Vec::new(),
            outputs: Vec::new(),
            marks: Vec::new(),
            unit: doc.unit,
        };
        for b in doc.boundary {
            match b.side {
                Side::In => s.inputs.push(b.component),
                Side::Out => s.outputs.push(b.component),
            }
        }
        for (k, m) in doc.marks.into_iter().enumerate() {
            s.marks.push((m.component, parse_weight(&m.weight, &format!("{path}.marks[{k}].weight"))?));
        }
        s.validate().map_err(|e| schema(path, e.to_string()))?;
        Ok(s)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub suite: String,
    pub samples: usize,
    pub passed: bool,
    pub counterexamples: Vec<String>,
}

impl Codec for Report {
    type Doc = ReportDoc;

    fn to_doc(&self) -> ReportDoc {
        ReportDoc {
            suite: self.check.clone(),
            samples: self.cases,
            passed: self.passed(),
            counterexamples: self.counterexamples.clone(),
        }
    }

    fn from_doc(doc: ReportDoc, path: &str) -> Result<Self, IoError> {
        if doc.passed != doc.counterexamples.is_empty() {
            return Err(schema(&format!("{path}.passed"), "disagrees with the counterexamples"));
        }
        Ok(Report { check: doc.suite, cases: doc.samples, counterexamples: doc.counterexamples })
    }
}

/// Generators and relations of a presented properad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: IoSequence,
    pub relations: Vec<(LabeledGraph<Label>, LabeledGraph<Label>)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub arity: (usize, usize),
    pub count: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub lhs: LabeledDoc<LabelDoc>,
    pub rhs: LabeledDoc<LabelDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub generators: Vec<GeneratorDoc>,
    pub relations: Vec<RelationDoc>,
}

impl Codec for Presentation {
    type Doc = PresentationDoc;

    fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            generators: self
                .generators
                .arities()
                .map(|arity| GeneratorDoc { arity, count: self.generators.labels(arity).count() as u32 })
                .collect(),
            relations: self.relations.iter().map(|(l, r)| RelationDoc { lhs: l.to_doc(), rhs: r.to_doc() }).collect(),
        }
    }

    fn from_doc(doc: PresentationDoc, path: &str) -> Result<Self, IoError> {
        for (k, g) in doc.generators.iter().enumerate() {
            if g.count == 0 || g.arity == (0, 0) {
                return Err(schema(&format!("{path}.generators[{k}]"), "needs a positive count and arity other than (0,0)"));
            }
            if doc.generators[..k].iter().any(|h| h.arity >= g.arity) {
                return Err(schema(&format!("{path}.generators[{k}]"), "arities must be strictly increasing"));
            }
        }
        let generators = IoSequence::new(doc.generators.iter().map(|g| (g.arity, g.count))).map_err(|e| schema(path, e.to_string()))?;
        let mut relations = Vec::with_capacity(doc.relations.len());
        for (k, r) in doc.relations.into_iter().enumerate() {
            let at = format!("{path}.relations[{k}]");
            let lhs = LabeledGraph::from_doc(r.lhs, &format!("{at}.lhs"))?;
            let rhs = LabeledGraph::from_doc(r.rhs, &format!("{at}.rhs"))?;
            for (side, g) in [("lhs", &lhs), ("rhs", &rhs)] {
                if let Some(v) = g.labels.iter().position(|l| !generators.contains(l)) {
                    return Err(schema(&format!("{at}.{side}.labels[{v}]"), "not a generator"));
                }
            }
            relations.push((lhs, rhs));
        }
        Ok(Presentation { generators, relations })
    }
}

/// Every kind of value the command line reads or writes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    IodaGraph(IodaGraph),
    LabeledGraph(LabeledGraph<Label>),
    NestedGraph(Nested<Label>),
    FreeSimplex(Nested<LabeledGraph<Label>>),
    SurfaceType(SurfaceType),
    SurfaceList(Vec<SurfaceType>),
    SurfaceSimplex(Nested<SurfaceType>),
    Presentation(Presentation),
    Report(Report),
    Reports(Vec<Report>),
    IodaGraphList(Vec<IodaGraph>),
    Membership(MembershipDoc),
    Verdict(VerdictDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MembershipDoc {
    pub name: String,
    pub member: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictDoc {
    pub verdict: String,
    pub budget: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case", deny_unknown_fields)]
enum DocumentDoc {
    IodaGraph(GraphDoc),
    LabeledGraph(LabeledDoc<LabelDoc>),
    NestedGraph(NestedDoc<LabelDoc>),
    FreeSimplex(NestedDoc<LabeledDoc<LabelDoc>>),
    SurfaceType(SurfaceDoc),
    SurfaceList(Vec<SurfaceDoc>),
    SurfaceSimplex(NestedDoc<SurfaceDoc>),
    Presentation(PresentationDoc),
    Report(ReportDoc),
    Reports(Vec<ReportDoc>),
    IodaGraphList(Vec<GraphDoc>),
    Membership(MembershipDoc),
    Verdict(VerdictDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::IodaGraph(_) => "ioda-graph",
            Document::LabeledGraph(_) => "labeled-graph",
            Document::NestedGraph(_) => "nested-graph",
            Document::FreeSimplex(_) => "free-simplex",
            Document::SurfaceType(_) => "surface-type",
            Document::SurfaceList(_) => "surface-list",
            Document::SurfaceSimplex(_) => "surface-simplex",
            Document::Presentation(_) => "presentation",
            Document::Report(_) => "report",
            Document::Reports(_) => "reports",
            Document::IodaGraphList(_) => "ioda-graph-list",
            Document::Membership(_) => "membership",
            Document::Verdict(_) => "verdict",
        }
    }

    fn to_doc(&self) -> DocumentDoc {
        match self {
            Document::IodaGraph(g) => DocumentDoc::IodaGraph(g.to_doc()),
            Document::LabeledGraph(g) => DocumentDoc::LabeledGraph(g.to_doc()),
            Document::NestedGraph(x) => DocumentDoc::NestedGraph(x.to_doc()),
            Document::FreeSimplex(x) => DocumentDoc::FreeSimplex(x.to_doc()),
            Document::SurfaceType(s) => DocumentDoc::SurfaceType(s.to_doc()),
            Document::SurfaceList(l) => DocumentDoc::SurfaceList(l.iter().map(Codec::to_doc).collect()),
            Document::SurfaceSimplex(x) => DocumentDoc::SurfaceSimplex(x.to_doc()),
            Document::Presentation(p) => DocumentDoc::Presentation(p.to_doc()),
            Document::Report(r) => DocumentDoc::Report(r.to_doc()),
            Document::Reports(rs) => DocumentDoc::Reports(rs.iter().map(Codec::to_doc).collect()),
            Document::IodaGraphList(gs) => DocumentDoc::IodaGraphList(gs.iter().map(Codec::to_doc).collect()),
            Document::Membership(m) => DocumentDoc::Membership(m.clone()),
            Document::Verdict(v) => DocumentDoc::Verdict(v.clone()),
        }
    }

    fn from_doc(doc: DocumentDoc) -> Result<Self, IoError> {
        let p = "value";
        let list = |ds: Vec<SurfaceDoc>| {
            ds.into_iter().enumerate().map(|(k, d)| SurfaceType::from_doc(d, &format!("{p}[{k}]"))).collect::<Result<_, _>>()
        };
        Ok(match doc {
            DocumentDoc::IodaGraph(d) => Document::IodaGraph(Codec::from_doc(d, p)?),
            DocumentDoc::LabeledGraph(d) => Document::LabeledGraph(Codec::from_doc(d, p)?),
            DocumentDoc::NestedGraph(d) => Document::NestedGraph(Codec::from_doc(d, p)?),
            DocumentDoc::FreeSimplex(d) => Document::FreeSimplex(Codec::from_doc(d, p)?),
            DocumentDoc::SurfaceType(d) => Document::SurfaceType(Codec::from_doc(d, p)?),
            DocumentDoc::SurfaceList(ds) => Document::SurfaceList(list(ds)?),
            DocumentDoc::SurfaceSimplex(d) => Document::SurfaceSimplex(Codec::from_doc(d, p)?),
            DocumentDoc::Presentation(d) => Document::Presentation(Codec::from_doc(d, p)?),
            DocumentDoc::Report(d) => Document::Report(Codec::from_doc(d, p)?),
            DocumentDoc::Reports(ds) => Document::Reports(
                ds.into_iter().enumerate().map(|(k, d)| Report::from_doc(d, &format!("{p}[{k}]"))).collect::<Result<_, _>>()?,
            ),
            DocumentDoc::IodaGraphList(ds) => Document::IodaGraphList(
                ds.into_iter().enumerate().map(|(k, d)| IodaGraph::from_doc(d, &format!("{p}[{k}]"))).collect::<Result<_, _>>()?,
            ),
            DocumentDoc::Membership(m) => Document::Membership(m),
            DocumentDoc::Verdict(v) => {
                if !["yes", "no", "unknown"].contains(&v.verdict.as_str()) {
                    return Err(schema("value.verdict", format!("{:?} is not yes, no or unknown", v.verdict)));
                }
                Document::Verdict(v)
            }
        })
    }
}

/// Parse a document, with the JSON path of the first problem in the error.
pub fn parse(text: &str) -> Result<Document, IoError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: DocumentDoc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(if path == "." { "" } else { &path }, e.into_inner().to_string())
    })?;
    Document::from_doc(doc)
}

/// Pretty-printed with a trailing newline. Field order is fixed, so equal
/// values give identical bytes.
pub fn serialize(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&doc.to_doc()).expect("documents always serialize");
    s.push('\n');
    s
}

macro_rules! expect_kind {
    ($name:ident, $variant:ident, $ty:ty, $kind:literal) => {
        pub fn $name(doc: Document) -> Result<$ty, IoError> {
            match doc {
                Document::$variant(x) => Ok(x),
                other => Err(IoError::Kind { expected: $kind, found: other.kind() }),
            }
        }
    };
}

expect_kind!(into_ioda_graph, IodaGraph, IodaGraph, "ioda-graph");
expect_kind!(into_labeled_graph, LabeledGraph, LabeledGraph<Label>, "labeled-graph");
expect_kind!(into_surface_type, SurfaceType, SurfaceType, "surface-type");
expect_kind!(into_surface_list, SurfaceList, Vec<SurfaceType>, "surface-list");
expect_kind!(into_free_simplex, FreeSimplex, Nested<LabeledGraph<Label>>, "free-simplex");
expect_kind!(into_presentation, Presentation, Presentation, "presentation");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corolla_round_trips() {
        let doc = Document::IodaGraph(IodaGraph::corolla(2, 1));
        let text = serialize(&doc);
        assert_eq!(parse(&text).unwrap(), doc);
        assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn third_weight_is_exact() {
        let s = SurfaceType::smooth(0, 1, 0).with_marks([(0, Weight::new(1, 3))]);
        let text = serialize(&Document::SurfaceType(s.clone()));
        assert!(text.contains("\"1/3\""));
        assert_eq!(parse(&text).unwrap(), Document::SurfaceType(s));
    }

    #[test]
    fn bad_order_names_the_vertex() {
        let text = serialize(&Document::IodaGraph(IodaGraph::partially_grafted((1, 1), (1, 1), &[(0, 0)]).unwrap()));
        let broken = text.replacen("\"e0\"", "\"in0\"", 1);
        match parse(&broken) {
            Err(IoError::Schema { path, .. }) => assert!(path.starts_with("value.orders["), "{path}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn type_errors_carry_the_path() {
        let text = serialize(&Document::IodaGraph(IodaGraph::corolla(1, 1))).replacen("\"vertex\": 0", "\"vertex\": \"zero\"", 1);
        match parse(&text) {
            Err(IoError::Schema { path, .. }) => assert_eq!(path, "value.inputs[0].vertex"),
            other => panic!("{other:?}"),
        }
    }
}
