//! Simple undirected graphs on a contiguous vertex range.
//!
//! Vertices are `0..n` inside the library. Every external surface (the text
//! format, the CLI, printed certificates) shows them shifted to `1..=n`.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

mod canon;
mod io;
mod local;
mod metrics;
pub mod named;

pub use canon::{canonical_code, canonical_form, enumerate_graphs, is_isomorphic, CanonicalCode, ENUMERATION_CAP};
pub use io::{parse_graphs, read_graph, write_graph};
pub use local::{local_complement, pivot};
pub use metrics::{
    components, distance, distances, graph_metrics, is_bipartite, max_independent_set,
    odd_cycle, path_number, two_coloring, GraphMetrics, MIS_CAP, PATH_NUMBER_CAP,
};

/// A simple undirected graph stored as one adjacency bit row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!("duplicate edge {{{u}, {v}}}")));
            }
            g.connect(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.connect(u, v);
        Ok(())
    }

    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].toggle(v);
        self.adj[v].toggle(u);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// The subgraph induced by `vertices`, relabelled in increasing order of
    /// the original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        Ok(self.induced_ordered(&sorted))
    }

    /// The subgraph induced by `order`, where new vertex `i` is `order[i]`.
    /// The caller guarantees distinct in-range entries.
    pub(crate) fn induced_ordered(&self, order: &[usize]) -> Graph {
        let mut h = Graph::new(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.connect(i, j);
                }
            }
        }
        h
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for a graph on {n} vertices",
                perm.len()
            )));
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for &p in perm {
            if p >= n || seen.put(p) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let mut h = Graph::new(n);
        for (u, v) in self.edges() {
            h.connect(perm[u], perm[v]);
        }
        Ok(h)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut h = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    h.connect(u, v);
                }
            }
        }
        h
    }
}

/// Disjoint union; the vertices of `gs[k]` are shifted by the total size of
/// the graphs before it.
pub fn disjoint_union(gs: &[Graph]) -> Graph {
    let total = gs.iter().map(Graph::vertex_count).sum();
    let mut out = Graph::new(total);
    let mut offset = 0;
    for g in gs {
        for (u, v) in g.edges() {
            out.connect(u + offset, v + offset);
        }
        offset += g.vertex_count();
    }
    out
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Graph {
    disjoint_union(&vec![g.clone(); k])
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}

/// An induced embedding of a source graph into a target graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// Validates `map` as an injective, adjacency- and non-adjacency-preserving
    /// map from `source` into `target`.
    pub fn new(source: &Graph, target: &Graph, map: Vec<usize>) -> Result<Self> {
        let e = Embedding { map };
        if e.is_valid(source, target) {
            Ok(e)
        } else {
            Err(Error::InvalidParameter("map is not an induced embedding".into()))
        }
    }

    pub(crate) fn unchecked(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn is_valid(&self, source: &Graph, target: &Graph) -> bool {
        if self.map.len() != source.vertex_count() {
            return false;
        }
        let mut used = FixedBitSet::with_capacity(target.vertex_count());
        for &t in &self.map {
            if t >= target.vertex_count() || used.put(t) {
                return false;
            }
        }
        let n = source.vertex_count();
        (0..n).all(|u| {
            (u + 1..n).all(|v| source.has_edge(u, v) == target.has_edge(self.map[u], self.map[v]))
        })
    }
}
