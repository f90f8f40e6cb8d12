//! Finite simple graphs whose vertex sequence doubles as the variable
//! priority of the base ring (first vertex = largest variable).

mod covers;
mod dsl;
mod families;
mod json;

use std::collections::{BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use covers::{is_chordal, is_unmixed, maximal_independent_sets, minimal_vertex_covers, VertexCover};
pub use dsl::{parse_dsl, DslContext};
pub use families::{
    attach, cameron_walker, cm_bipartite_from_poset, cone, disjoint_union, edgeless, random_graph, standard_family,
    Family, Poset,
};
pub use json::{GraphJson, PartsJson, PosetJson};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownEndpoint(String),
    #[error("loop edge at `{0}`")]
    Loop(String),
    #[error("parameter `{name}` must be at least {min}, got {value}")]
    BadParameter {
        name: &'static str,
        min: usize,
        value: usize,
    },
    #[error("expected {expected} attached graphs, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid bipartition: {0}")]
    InvalidParts(String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("reading `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("construction `{expr}`: {reason}")]
    Dsl { expr: String, reason: String },
}

/// Where a vertex sits in a construction. Indices are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Base(usize),
    Attached { host: usize, index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub kind: VertexKind,
    pub label: String,
}

/// Declared sides of a bipartite graph, as vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<Vertex>,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<FixedBitSet>,
    parts: Option<Bipartition>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges && self.parts == other.parts
    }
}

impl Eq for Graph {}

impl Graph {
    /// Checked constructor from explicit vertices and index pairs.
    pub fn from_parts(
        vertices: Vec<Vertex>,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut labels = HashSet::new();
        let mut kinds = HashSet::new();
        for v in &vertices {
            if !labels.insert(v.label.as_str()) {
                return Err(GraphError::DuplicateLabel(v.label.clone()));
            }
            if !kinds.insert(v.kind) {
                return Err(GraphError::DuplicateLabel(format!("{} ({:?})", v.label, v.kind)));
            }
        }
        let n = vertices.len();
        let mut edges = BTreeSet::new();
        let mut adjacency = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in edge_list {
            if a >= n || b >= n {
                return Err(GraphError::UnknownEndpoint(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(GraphError::Loop(vertices[a].label.clone()));
            }
            edges.insert((a.min(b), a.max(b)));
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(Self {
            vertices,
            edges,
            adjacency,
            parts: None,
        })
    }

    pub(crate) fn with_parts(mut self, parts: Bipartition) -> Result<Self, GraphError> {
        let n = self.vertices.len();
        let mut seen = FixedBitSet::with_capacity(n);
        for &v in parts.x.iter().chain(parts.y.iter()) {
            if v >= n {
                return Err(GraphError::InvalidParts(format!("vertex #{v} out of range")));
            }
            if seen.contains(v) {
                return Err(GraphError::InvalidParts(format!(
                    "`{}` listed twice",
                    self.vertices[v].label
                )));
            }
            seen.insert(v);
        }
        if seen.count_ones(..) != n {
            return Err(GraphError::InvalidParts("parts do not cover every vertex".into()));
        }
        let side: Vec<bool> = (0..n).map(|v| parts.x.contains(&v)).collect();
        if self.edges.iter().any(|&(a, b)| side[a] == side[b]) {
            return Err(GraphError::InvalidParts(
                "an edge joins two vertices of the same part".into(),
            ));
        }
        self.parts = Some(parts);
        Ok(self)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices.iter().map(|v| v.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn parts(&self) -> Option<&Bipartition> {
        self.parts.as_ref()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adjacency[v].ones() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == n
    }

    /// A proper 2-colouring with vertex 0 on the X side, if one exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.vertices.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(true);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for w in self.adjacency[v].ones() {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let x = (0..n).filter(|&v| colour[v] == Some(true)).collect();
        let y = (0..n).filter(|&v| colour[v] == Some(false)).collect();
        Some(Bipartition { x, y })
    }

    /// Hosts whose attached block has no internal edge (including hosts with
    /// nothing attached). Empty for graphs not built by `attach`.
    pub fn edgeless_attached_hosts(&self) -> Vec<usize> {
        let hosts: BTreeSet<usize> = self
            .vertices
            .iter()
            .filter_map(|v| match v.kind {
                VertexKind::Base(i) => Some(i),
                VertexKind::Attached { .. } => None,
            })
            .collect();
        if !self
            .vertices
            .iter()
            .any(|v| matches!(v.kind, VertexKind::Attached { .. }))
        {
            return Vec::new();
        }
        let host_of = |v: usize| match self.vertices[v].kind {
            VertexKind::Attached { host, .. } => Some(host),
            VertexKind::Base(_) => None,
        };
        hosts
            .into_iter()
            .filter(|&h| {
                !self
                    .edges
                    .iter()
                    .any(|&(a, b)| host_of(a) == Some(h) && host_of(b) == Some(h))
            })
            .collect()
    }

    /// Same vertices relabelled with a fresh priority; `order[k]` is the old
    /// index placed at position `k`.
    pub fn reorder(&self, order: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertices.len();
        if order.len() != n || order.iter().collect::<HashSet<_>>().len() != n || order.iter().any(|&v| v >= n) {
            return Err(GraphError::InvalidParts(
                "reorder needs a permutation of the vertices".into(),
            ));
        }
        let mut new_pos = vec![0; n];
        for (k, &old) in order.iter().enumerate() {
            new_pos[old] = k;
        }
        let vertices = order.iter().map(|&old| self.vertices[old].clone()).collect();
        let edges = self.edges.iter().map(|&(a, b)| (new_pos[a], new_pos[b]));
        let g = Graph::from_parts(vertices, edges)?;
        match &self.parts {
            Some(p) => g.with_parts(Bipartition {
                x: p.x.iter().map(|&v| new_pos[v]).collect(),
                y: p.y.iter().map(|&v| new_pos[v]).collect(),
            }),
            None => Ok(g),
        }
    }
}

/// Graph on `labels` (in priority order) with the given label pairs as edges.
pub fn build_graph<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Graph, GraphError> {
    let vertices = labels
        .iter()
        .enumerate()
        .map(|(i, l)| Vertex {
            kind: VertexKind::Base(i),
            label: l.as_ref().to_string(),
        })
        .collect::<Vec<_>>();
    let mut idx = std::collections::HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if idx.insert(v.label.clone(), i).is_some() {
            return Err(GraphError::DuplicateLabel(v.label.clone()));
        }
    }
    let mut pairs = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        let (a, b) = (a.as_ref(), b.as_ref());
        let ia = *idx.get(a).ok_or_else(|| GraphError::UnknownEndpoint(a.to_string()))?;
        let ib = *idx.get(b).ok_or_else(|| GraphError::UnknownEndpoint(b.to_string()))?;
        if ia == ib {
            return Err(GraphError::Loop(a.to_string()));
        }
        pairs.push((ia, ib));
    }
    Graph::from_parts(vertices, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_small_graphs() {
        let k2 = build_graph(&["x1", "x2"], &[("x1", "x2")]).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
        let k1 = build_graph::<&str>(&["x1"], &[]).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        let p3 = build_graph(&["x1", "x2", "x3"], &[("x1", "x2"), ("x2", "x3")]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.labels(), vec!["x1", "x2", "x3"]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            build_graph::<&str>(&["a", "a"], &[]),
            Err(GraphError::DuplicateLabel(_))
        ));
        assert!(matches!(
            build_graph(&["a"], &[("a", "b")]),
            Err(GraphError::UnknownEndpoint(_))
        ));
        assert!(matches!(build_graph(&["a"], &[("a", "a")]), Err(GraphError::Loop(_))));
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = build_graph(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        let c3 = standard_family(Family::Cycle(3)).unwrap();
        assert!(c3.bipartition().is_none());
        let c4 = standard_family(Family::Cycle(4)).unwrap();
        let p = c4.bipartition().unwrap();
        assert_eq!(p.x, vec![0, 2]);
    }

    #[test]
    fn edgeless_attachments_are_reported() {
        let star = standard_family(Family::Star(3)).unwrap();
        assert_eq!(star.edgeless_attached_hosts(), vec![0]);
        let fan = standard_family(Family::Fan(3)).unwrap();
        assert!(fan.edgeless_attached_hosts().is_empty());
        assert!(standard_family(Family::Path(3))
            .unwrap()
            .edgeless_attached_hosts()
            .is_empty());
    }
}
