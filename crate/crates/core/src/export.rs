//! Wire formats: DOT, the JSON graph descriptor, and the invariant report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{
    connected_components, diameter, domination_number, eccentricity, girth, is_chordal,
    is_complemented, is_hypertriangulated, is_triangulated, radius, shortest_cycle,
    shortest_path, ChordalWitness, Distance, Domination, Graph,
};
use crate::line::LineGraph;
use crate::model::ZeroSetModel;

/// Graphviz rendering with numeric node ids and the vertex labels as
/// `label` attributes.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", dot_id(name));
    for (i, label) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label={}];", dot_id(label));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// JSON descriptor of a model graph (or its line graph when `line` is set).
/// Edges are index pairs `[i, j]` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub n: usize,
    pub m: usize,
    pub include_zero: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    pub line: bool,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDescriptor {
    fn from_graph(model: &ZeroSetModel, g: &Graph, line: bool) -> Self {
        let cfg = model.config();
        Self {
            n: cfg.n,
            m: cfg.m,
            include_zero: cfg.include_zero,
            line,
            vertices: g.labels().to_vec(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn of_model(model: &ZeroSetModel) -> Self {
        Self::from_graph(model, model.graph(), false)
    }

    pub fn of_line(model: &ZeroSetModel, line: &LineGraph) -> Self {
        Self::from_graph(model, line.graph(), true)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Rebuilds the graph; rejects unordered or out-of-range index pairs.
    pub fn to_graph(&self) -> Result<Graph> {
        for &[i, j] in &self.edges {
            if i >= j {
                return Err(Error::Parse { what: "edge (expected i < j)", input: format!("[{i},{j}]") });
            }
        }
        Graph::from_edges(self.vertices.clone(), self.edges.iter().map(|&[i, j]| (i, j)))
    }
}

/// Domination number as reported: a count, or `">k"` when the bounded
/// search found nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationValue {
    Exact(usize),
    Above(usize),
}

impl Serialize for DominationValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DominationValue::Exact(k) => s.serialize_u64(*k as u64),
            DominationValue::Above(k) => s.serialize_str(&format!(">{k}")),
        }
    }
}

impl std::fmt::Display for DominationValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DominationValue::Exact(k) => write!(f, "{k}"),
            DominationValue::Above(k) => write!(f, ">{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantWitnesses {
    /// Two vertices at maximum distance, and a shortest path between them
    /// when that distance is finite.
    pub diameter_pair: Option<[String; 2]>,
    pub diameter_path: Option<Vec<String>>,
    pub girth_cycle: Option<Vec<String>>,
    pub elimination_order: Option<Vec<String>>,
    pub chordless_cycle: Option<Vec<String>>,
    pub dominating_set: Option<Vec<String>>,
    pub uncomplemented_vertex: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub diameter: Distance,
    pub radius: Distance,
    pub girth: Distance,
    pub chordal: bool,
    pub domination_number: DominationValue,
    pub complemented: bool,
    pub triangulated: bool,
    pub hypertriangulated: bool,
    pub witnesses: InvariantWitnesses,
}

pub fn compute_invariants(g: &Graph, max_k: usize) -> Result<InvariantReport> {
    let diam = diameter(g)?;
    let rad = radius(g)?;
    let labels = |vs: &[usize]| g.labels_of(vs);

    // first vertex pair realizing the diameter
    let far = (0..g.vertex_count()).find_map(|u| {
        (eccentricity(g, u).ok()? == diam).then(|| {
            let d = crate::graph::bfs_distances(g, u);
            let v = d.iter().position(|&x| Distance::from(x) == diam).unwrap_or(u);
            (u, v)
        })
    });
    let diameter_path = match far {
        Some((u, v)) if diam.is_finite() => shortest_path(g, u, v)?.map(|p| labels(&p.0)),
        _ => None,
    };

    let chordality = is_chordal(g);
    let (elimination_order, chordless_cycle) = match &chordality.witness {
        ChordalWitness::PerfectElimination(o) => (Some(labels(o)), None),
        ChordalWitness::ChordlessCycle(c) => (None, Some(labels(&c.0))),
    };
    let dom = domination_number(g, max_k)?;
    let (domination, dominating_set) = match &dom {
        Domination::Found { size, set } => (DominationValue::Exact(*size), Some(labels(set))),
        Domination::Exceeds { max_k } => (DominationValue::Above(*max_k), None),
    };
    let (complemented, uncomplemented) = is_complemented(g);

    Ok(InvariantReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        components: connected_components(g).len(),
        diameter: diam,
        radius: rad,
        girth: girth(g),
        chordal: chordality.chordal,
        domination_number: domination,
        complemented,
        triangulated: is_triangulated(g).0,
        hypertriangulated: is_hypertriangulated(g).0,
        witnesses: InvariantWitnesses {
            diameter_pair: far.map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()]),
            diameter_path,
            girth_cycle: shortest_cycle(g).map(|c| labels(&c.0)),
            elimination_order,
            chordless_cycle,
            dominating_set,
            uncomplemented_vertex: uncomplemented.map(|v| g.label(v).to_string()),
        },
    })
}

pub fn invariants_markdown(title: &str, r: &InvariantReport) -> String {
    let mut out = format!("# Invariants: {title}\n\n| invariant | value |\n|---|---|\n");
    let rows: [(&str, String); 11] = [
        ("vertices", r.vertices.to_string()),
        ("edges", r.edges.to_string()),
        ("components", r.components.to_string()),
        ("diameter", r.diameter.to_string()),
        ("radius", r.radius.to_string()),
        ("girth", r.girth.to_string()),
        ("chordal", r.chordal.to_string()),
        ("domination number", r.domination_number.to_string()),
        ("complemented", r.complemented.to_string()),
        ("triangulated", r.triangulated.to_string()),
        ("hypertriangulated", r.hypertriangulated.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "| {k} | {v} |");
    }
    let w = &r.witnesses;
    out.push_str("\n## Witnesses\n\n");
    let mut item = |name: &str, v: &Option<Vec<String>>| {
        if let Some(v) = v {
            let _ = writeln!(out, "- {name}: {}", v.join(" - "));
        }
    };
    item("diameter path", &w.diameter_path);
    item("shortest cycle", &w.girth_cycle);
    item("chordless cycle", &w.chordless_cycle);
    item("dominating set", &w.dominating_set);
    if let Some(v) = &w.uncomplemented_vertex {
        let _ = writeln!(out, "- vertex without orthogonal partner: {v}");
    }
    out
}
