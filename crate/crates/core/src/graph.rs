//! Graph representation, input parsing, label reduction, and zero-connected
//! components.
//!
//! Vertices are ordered; the declaration order of the input file defines the
//! internal indices `0..n` (printed as `v_1..v_n` style names). Edge labels
//! are nonnegative integers standing for the principal ideals they generate.
//! Under a modulus `m` every stored label is the minimal coset representative
//! in `0..m`; the ideal generator `gcd(label, m)` is recomputed only for
//! display and for unit/zero tests, so no information is lost by storage.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

use crate::residue::gcd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph document: {0}")]
    Malformed(String),
    #[error("edge references undeclared vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} is declared twice")]
    DuplicateVertex(String),
    #[error("edge label {0} is negative")]
    NegativeLabel(i64),
    #[error("modulus {0} is out of range (need m >= 2)")]
    ModulusOutOfRange(u64),
    #[error("graph is disconnected; components: {0:?}")]
    Disconnected(Vec<Vec<String>>),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("label {label} out of range for modulus {modulus}")]
    LabelOutOfRange { label: u64, modulus: u64 },
    #[error("cannot reduce modulo {q}: not a divisor of the ambient modulus {m}")]
    NonDivisorReduction { q: u64, m: u64 },
    #[error("operation needs a modular context; reduce the graph first")]
    IntegerContext,
    #[error("graph has no vertices")]
    Empty,
}

impl GraphError {
    pub fn code(&self) -> &'static str {
        match self {
            GraphError::Malformed(_) => "malformed-document",
            GraphError::UnknownVertex(_) => "unknown-vertex",
            GraphError::DuplicateVertex(_) => "duplicate-vertex",
            GraphError::NegativeLabel(_) => "negative-label",
            GraphError::ModulusOutOfRange(_) => "modulus-out-of-range",
            GraphError::Disconnected(_) => "disconnected",
            GraphError::SelfLoop(_) => "self-loop",
            GraphError::LabelOutOfRange { .. } => "label-out-of-range",
            GraphError::NonDivisorReduction { .. } => "non-divisor-reduction",
            GraphError::IntegerContext => "integer-context",
            GraphError::Empty => "empty-graph",
        }
    }
}

/// The ambient ring of a graph and its splines: `Z` or `Z/mZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModulusContext {
    Integers,
    ModM(u64),
}

impl ModulusContext {
    pub fn modulus(&self) -> Option<u64> {
        match self {
            ModulusContext::Integers => None,
            ModulusContext::ModM(m) => Some(*m),
        }
    }
}

impl fmt::Display for ModulusContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModulusContext::Integers => write!(f, "Z"),
            ModulusContext::ModM(m) => write!(f, "Z/{m}Z"),
        }
    }
}

/// An undirected edge between vertex indices with a nonnegative label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: u64,
}

/// A finite connected graph with ordered vertices, labeled edges, and an
/// ambient modulus context. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeledGraph {
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    context: ModulusContext,
}

impl EdgeLabeledGraph {
    /// Builds and fully validates a graph. Labels are canonicalized to their
    /// minimal coset representative when the context is modular.
    pub fn new(
        vertex_names: Vec<String>,
        edges: Vec<Edge>,
        context: ModulusContext,
    ) -> Result<Self, GraphError> {
        if let ModulusContext::ModM(m) = context {
            if m < 2 {
                return Err(GraphError::ModulusOutOfRange(m));
            }
        }
        let edges = edges
            .into_iter()
            .map(|e| Edge {
                label: match context {
                    ModulusContext::ModM(m) => e.label % m,
                    ModulusContext::Integers => e.label,
                },
                ..e
            })
            .collect();
        let g = EdgeLabeledGraph {
            vertex_names,
            edges,
            context,
        };
        validate_graph(&g)?;
        Ok(g)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertex_names[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn context(&self) -> ModulusContext {
        self.context
    }

    pub fn modulus(&self) -> Option<u64> {
        self.context.modulus()
    }

    /// The canonical ideal generator of an edge label for display and for
    /// unit/zero tests: `gcd(label, m) mod m` under a modulus, the label
    /// itself over the integers.
    pub fn canonical_label(&self, label: u64) -> u64 {
        match self.context {
            ModulusContext::Integers => label,
            ModulusContext::ModM(m) => gcd(label, m) % m,
        }
    }

    /// True when the label generates the unit ideal.
    pub fn label_is_unit(&self, label: u64) -> bool {
        match self.context {
            ModulusContext::Integers => label == 1,
            ModulusContext::ModM(_) => self.canonical_label(label) == 1,
        }
    }

    /// True when the label generates the zero ideal.
    pub fn label_is_zero(&self, label: u64) -> bool {
        label == 0
    }
}

/// Checks every structural invariant: nonempty, no duplicate names, indices
/// in range, no self-loops, labels canonical, and connectivity (one
/// union-find pass over all edges).
pub fn validate_graph(g: &EdgeLabeledGraph) -> Result<(), GraphError> {
    let n = g.vertex_names.len();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut seen = BTreeMap::new();
    for name in &g.vertex_names {
        if seen.insert(name.clone(), ()).is_some() {
            return Err(GraphError::DuplicateVertex(name.clone()));
        }
    }
    for e in &g.edges {
        if e.u >= n || e.v >= n {
            return Err(GraphError::Malformed(format!(
                "edge ({}, {}) out of vertex range",
                e.u, e.v
            )));
        }
        if e.u == e.v {
            return Err(GraphError::SelfLoop(g.vertex_names[e.u].clone()));
        }
        if let ModulusContext::ModM(m) = g.context {
            if e.label >= m {
                return Err(GraphError::LabelOutOfRange {
                    label: e.label,
                    modulus: m,
                });
            }
        }
    }
    let mut uf = UnionFind::new(n);
    for e in &g.edges {
        uf.union(e.u, e.v);
    }
    let classes = uf.classes();
    if classes.len() > 1 {
        let named = classes
            .into_iter()
            .map(|c| c.into_iter().map(|i| g.vertex_names[i].clone()).collect())
            .collect();
        return Err(GraphError::Disconnected(named));
    }
    Ok(())
}

#[derive(Deserialize)]
struct GraphFile {
    mode: String,
    #[serde(default)]
    modulus: Option<u64>,
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
}

#[derive(Deserialize)]
struct EdgeFile {
    u: String,
    v: String,
    label: i64,
}

/// Parses and validates the graph JSON document.
///
/// Schema: `{"mode": "mod-m"|"integers", "modulus": <m, iff mod-m>,
/// "vertices": [..], "edges": [{"u", "v", "label"}, ..]}`. Vertex
/// declaration order defines the internal order.
pub fn parse_graph(text: &str) -> Result<EdgeLabeledGraph, GraphError> {
    let file: GraphFile =
        serde_json::from_str(text).map_err(|e| GraphError::Malformed(e.to_string()))?;
    let context = match file.mode.as_str() {
        "integers" => {
            if file.modulus.is_some() {
                return Err(GraphError::Malformed(
                    "mode \"integers\" does not take a modulus".into(),
                ));
            }
            ModulusContext::Integers
        }
        "mod-m" => {
            let m = file
                .modulus
                .ok_or_else(|| GraphError::Malformed("mode \"mod-m\" needs a modulus".into()))?;
            if m < 2 {
                return Err(GraphError::ModulusOutOfRange(m));
            }
            ModulusContext::ModM(m)
        }
        other => {
            return Err(GraphError::Malformed(format!(
                "unknown mode {other:?} (expected \"mod-m\" or \"integers\")"
            )))
        }
    };
    let index: BTreeMap<&str, usize> = file
        .vertices
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    if index.len() != file.vertices.len() {
        let dup = file
            .vertices
            .iter()
            .enumerate()
            .find(|(i, n)| index[n.as_str()] != *i)
            .map(|(_, n)| n.clone())
            .unwrap_or_default();
        return Err(GraphError::DuplicateVertex(dup));
    }
    let mut edges = Vec::with_capacity(file.edges.len());
    for e in &file.edges {
        let u = *index
            .get(e.u.as_str())
            .ok_or_else(|| GraphError::UnknownVertex(e.u.clone()))?;
        let v = *index
            .get(e.v.as_str())
            .ok_or_else(|| GraphError::UnknownVertex(e.v.clone()))?;
        if e.label < 0 {
            return Err(GraphError::NegativeLabel(e.label));
        }
        edges.push(Edge {
            u,
            v,
            label: e.label as u64,
        });
    }
    EdgeLabeledGraph::new(file.vertices, edges, context)
}

/// Replaces the context by `Z/qZ` and every label by its minimal
/// representative mod `q`. From a modular context, `q` must divide `m`.
pub fn reduce_labels(g: &EdgeLabeledGraph, q: u64) -> Result<EdgeLabeledGraph, GraphError> {
    if q < 2 {
        return Err(GraphError::ModulusOutOfRange(q));
    }
    if let ModulusContext::ModM(m) = g.context {
        if m % q != 0 {
            return Err(GraphError::NonDivisorReduction { q, m });
        }
    }
    let edges = g
        .edges
        .iter()
        .map(|e| Edge {
            label: e.label % q,
            ..*e
        })
        .collect();
    Ok(EdgeLabeledGraph {
        vertex_names: g.vertex_names.clone(),
        edges,
        context: ModulusContext::ModM(q),
    })
}

/// One zero-connected component: the vertices reachable through zero-labeled
/// edges, indexed by the smallest vertex it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroComponent {
    index: usize,
    vertices: Vec<usize>,
}

impl ZeroComponent {
    /// Smallest vertex index in the component.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Member vertices, sorted ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// The partition of the vertices into zero-connected components at one
/// reduction level, sorted by component index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroComponentPartition {
    level: u64,
    components: Vec<ZeroComponent>,
}

impl ZeroComponentPartition {
    /// The reduction modulus the partition was computed at.
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn components(&self) -> &[ZeroComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The component indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.index).collect()
    }

    /// Index of the component containing vertex `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.components
            .iter()
            .find(|c| c.contains(v))
            .map(|c| c.index)
            .expect("partition covers all vertices")
    }
}

/// Union-find over edges whose label generates the zero ideal; components
/// are indexed by their smallest vertex and listed ascending.
pub fn zero_components(g: &EdgeLabeledGraph) -> Result<ZeroComponentPartition, GraphError> {
    let level = g.modulus().ok_or(GraphError::IntegerContext)?;
    let mut uf = UnionFind::new(g.n_vertices());
    for e in g.edges() {
        if g.label_is_zero(e.label) {
            uf.union(e.u, e.v);
        }
    }
    let components = uf
        .classes()
        .into_iter()
        .map(|vertices| ZeroComponent {
            index: vertices[0],
            vertices,
        })
        .collect();
    Ok(ZeroComponentPartition { level, components })
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let mut a = self.find(x);
        let mut b = self.find(y);
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }

    /// Equivalence classes with members sorted, ordered by smallest member.
    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_by_key(|c| c[0]);
        classes
    }
}

/// Numbered vertex names `v1..vn`, the convention used throughout the tests.
pub fn numbered_vertices(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}
