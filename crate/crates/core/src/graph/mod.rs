//! Finite simple graphs viewed as one-dimensional simplicial complexes.

mod iso;
pub mod trees;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use iso::{forest_canonical_form, graph_isomorphic, tree_canonical_form, ISOMORPHISM_MAX_SIMPLICES};

pub type VertexId = u64;

/// An edge with its endpoints stored in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexId,
    hi: VertexId,
}

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        Self::try_new(a, b).unwrap_or_else(|| panic!("self-loop at vertex {a}"))
    }

    pub fn try_new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Some(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(&self) -> VertexId {
        self.lo
    }

    pub fn hi(&self) -> VertexId {
        self.hi
    }

    pub fn endpoints(&self) -> [VertexId; 2] {
        [self.lo, self.hi]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(&self, v: VertexId) -> Option<VertexId> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// A vertex or an edge. Vertices sort before edges.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Simplex {
    Vertex(VertexId),
    Edge(Edge),
}

impl Simplex {
    pub fn edge(a: VertexId, b: VertexId) -> Self {
        Simplex::Edge(Edge::new(a, b))
    }

    pub fn dimension(&self) -> usize {
        match self {
            Simplex::Vertex(_) => 0,
            Simplex::Edge(_) => 1,
        }
    }

    /// `self` is a proper face of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        matches!((self, other), (Simplex::Vertex(v), Simplex::Edge(e)) if e.contains(*v))
    }

    pub fn is_incident(&self, other: &Simplex) -> bool {
        self.is_face_of(other) || other.is_face_of(self)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simplex::Vertex(v) => write!(f, "v{v}"),
            Simplex::Edge(e) => write!(f, "e{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} has an endpoint outside the vertex set")]
    UnknownEndpoint(VertexId, VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("graph has {simplices} simplices; the limit for this operation is {limit}")]
    TooLarge { simplices: usize, limit: usize },
}

/// A finite simple graph. Immutable after construction.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    index: HashMap<VertexId, usize>,
    /// Per vertex index: `(neighbor index, edge index)`, ascending by neighbor id.
    adjacency: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphRepr {
    vertices: Vec<VertexId>,
    edges: Vec<[VertexId; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        Graph::new(repr.vertices, repr.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { vertices: g.vertices, edges: g.edges.iter().map(|e| e.endpoints()).collect() }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("vertices", &self.vertices).field("edges", &self.edges).finish()
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate vertices and edges.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            let e = Edge::try_new(a, b).ok_or(GraphError::SelfLoop(a))?;
            if !vertices.contains(&a) || !vertices.contains(&b) {
                return Err(GraphError::UnknownEndpoint(e.lo, e.hi));
            }
            edge_set.insert(e);
        }
        Ok(Self::from_sorted(vertices.into_iter().collect(), edge_set.into_iter().collect()))
    }

    /// `vertices` and `edges` must be sorted, deduplicated and consistent.
    fn from_sorted(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        let index: HashMap<VertexId, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (ei, e) in edges.iter().enumerate() {
            let (a, b) = (index[&e.lo], index[&e.hi]);
            adjacency[a].push((b, ei));
            adjacency[b].push((a, ei));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Graph { vertices, edges, index, adjacency }
    }

    pub fn empty() -> Self {
        Self::from_sorted(Vec::new(), Vec::new())
    }

    /// Path `0 - 1 - ... - (len-1)`.
    pub fn path(len: usize) -> Self {
        let len = len as VertexId;
        Self::new(0..len, (1..len).map(|i| (i - 1, i))).expect("path is well formed")
    }

    /// Cycle on `len >= 3` vertices `0..len`.
    pub fn cycle(len: usize) -> Self {
        assert!(len >= 3, "a cycle needs at least three vertices");
        let len = len as VertexId;
        Self::new(0..len, (0..len).map(|i| (i, (i + 1) % len))).expect("cycle is well formed")
    }

    /// Star with center `0` and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let n = leaves as VertexId;
        Self::new(0..=n, (1..=n).map(|i| (0, i))).expect("star is well formed")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of simplices `|V| + |E|`.
    pub fn simplex_count(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.index.contains_key(&v)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        match s {
            Simplex::Vertex(v) => self.contains_vertex(*v),
            Simplex::Edge(e) => self.contains_edge(e),
        }
    }

    /// All simplices, vertices first, each group ascending.
    pub fn simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.vertices.iter().map(|&v| Simplex::Vertex(v)).chain(self.edges.iter().map(|&e| Simplex::Edge(e)))
    }

    pub(crate) fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub(crate) fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    pub(crate) fn adjacency(&self, vi: usize) -> &[(usize, usize)] {
        &self.adjacency[vi]
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        let vi = self.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.adjacency[vi].iter().map(|&(ni, _)| self.vertices[ni]).collect())
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        let vi = self.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.adjacency[vi].len())
    }

    /// Component label per vertex index, labels assigned in ascending order of
    /// each component's smallest vertex id.
    pub(crate) fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.vertices.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adjacency[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        (label, next)
    }

    /// Vertex sets of the connected components, each ascending, blocks ordered
    /// by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let (label, count) = self.component_labels();
        let mut blocks = vec![Vec::new(); count];
        for (vi, &l) in label.iter().enumerate() {
            blocks[l].push(self.vertices[vi]);
        }
        blocks
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `(b0, b1)`: components and independent cycles.
    pub fn betti_numbers(&self) -> (usize, usize) {
        let b0 = self.component_count();
        (b0, self.edges.len() + b0 - self.vertices.len())
    }

    /// Connected with `|V| = |E| + 1`.
    pub fn is_tree(&self) -> bool {
        let tree = self.is_connected() && self.vertices.len() == self.edges.len() + 1;
        debug_assert_eq!(tree, self.is_connected() && self.is_acyclic());
        tree
    }

    pub fn is_forest(&self) -> bool {
        self.is_acyclic()
    }

    /// No cycles, checked by a search that never uses the edge-count identity.
    pub fn is_acyclic(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            // (vertex, edge used to reach it)
            let mut stack = vec![(start, usize::MAX)];
            while let Some((u, via)) = stack.pop() {
                for &(w, ei) in &self.adjacency[u] {
                    if ei == via {
                        continue;
                    }
                    if seen[w] {
                        return false;
                    }
                    seen[w] = true;
                    stack.push((w, ei));
                }
            }
        }
        true
    }

    /// Connected, and deleting any single edge disconnects it.
    pub fn is_minimally_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        self.edges.iter().all(|e| !self.without_edges(std::slice::from_ref(e)).is_connected())
    }

    /// Number of edges on a shortest path, or `None` when disconnected.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<usize>, GraphError> {
        let ui = self.vertex_index(u).ok_or(GraphError::UnknownVertex(u))?;
        let vi = self.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.bfs_distances(ui)[vi])
    }

    pub(crate) fn bfs_distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &(w, _) in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices reachable from `v` in breadth-first discovery order, visiting
    /// neighbors in ascending id order.
    pub fn bfs_order(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        let start = self.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut order = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(self.vertices[u]);
            for &(w, _) in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(order)
    }

    /// The same vertex set with `removed` edges deleted. Unknown edges are ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let edges = self.edges.iter().copied().filter(|e| !removed.contains(e)).collect();
        Self::from_sorted(self.vertices.clone(), edges)
    }

    /// Subgraph on `keep` vertices containing every edge of `self` between them.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let vertices = self.vertices.iter().copied().filter(|v| keep.contains(v)).collect();
        let edges = self.edges.iter().copied().filter(|e| keep.contains(&e.lo) && keep.contains(&e.hi)).collect();
        Self::from_sorted(vertices, edges)
    }

    /// Subgraph made of the simplices accepted by `keep`. Edges whose
    /// endpoints are not both kept are dropped.
    pub fn filter_simplices(&self, mut keep: impl FnMut(&Simplex) -> bool) -> Graph {
        let vertices: Vec<VertexId> = self.vertices.iter().copied().filter(|&v| keep(&Simplex::Vertex(v))).collect();
        let kept: BTreeSet<VertexId> = vertices.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| kept.contains(&e.lo) && kept.contains(&e.hi) && keep(&Simplex::Edge(*e)))
            .collect();
        Self::from_sorted(vertices, edges)
    }

    /// Every simplex of `self` is a simplex of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices.iter().all(|&v| other.contains_vertex(v)) && self.edges.iter().all(|e| other.contains_edge(e))
    }

    /// Same shape with vertex `v` renamed to `relabel(v)`. `relabel` must be injective.
    pub fn relabeled(&self, relabel: impl Fn(VertexId) -> VertexId) -> Graph {
        Graph::new(
            self.vertices.iter().map(|&v| relabel(v)),
            self.edges.iter().map(|e| (relabel(e.lo), relabel(e.hi))),
        )
        .expect("relabeling must be injective")
    }
}
