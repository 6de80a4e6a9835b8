//! Canonical codes by individualisation-refinement, and orderly enumeration
//! of graphs up to isomorphism.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::Graph;
use crate::error::{Error, Result};

/// Default cap for exhaustive enumeration; one more vertex is allowed when
/// the caller asks for it explicitly.
pub const ENUMERATION_CAP: usize = 7;

/// Canonical adjacency code: the upper triangle of the adjacency matrix,
/// row-major, under the lexicographically smallest labeling reached by the
/// search tree. Two graphs are isomorphic iff their codes are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalCode {
    fn from_order(g: &Graph, order: &[usize]) -> Self {
        let n = g.vertex_count();
        let total = n * n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(order[i], order[j]) {
                    bits[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        CanonicalCode { n, bits }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The canonically labelled graph this code describes.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[k / 64] & (1 << (63 - k % 64)) != 0 {
                    g.connect(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

/// Replaces colours by the rank of `key(v)` among all keys.
fn rerank<K: Ord + Clone>(keys: Vec<K>) -> (Vec<usize>, usize) {
    let mut sorted = keys.clone();
    sorted.sort();
    sorted.dedup();
    let colors = keys
        .iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect();
    (colors, sorted.len())
}

/// Colour refinement until stable. Colours stay ranks `0..k`, and splitting
/// a cell keeps the relative order of all existing cells.
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    let mut count = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..g.vertex_count())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let (next, next_count) = rerank(keys);
        *colors = next;
        if next_count == count {
            return;
        }
        count = next_count;
    }
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let keys: Vec<(usize, bool)> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| (c, u != v))
        .collect();
    rerank(keys).0
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbor_set(u).clone();
    let mut nv = g.neighbor_set(v).clone();
    nu.set(v, false);
    nv.set(u, false);
    nu == nv
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = g.vertex_count();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let mut order = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c] = v;
        }
        let code = CanonicalCode::from_order(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // Swapping twins is an automorphism fixing the current node, so the
        // branches of v and of an already tried twin give the same leaves.
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        search(g, individualize(&colors, v), best);
    }
}

/// Canonical code together with the canonical order (`order[i]` is the
/// vertex placed at position `i`).
pub fn canonical_form(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let mut best = None;
    search(g, vec![0; g.vertex_count()], &mut best);
    best.unwrap_or_else(|| (CanonicalCode::from_order(g, &[]), Vec::new()))
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).0
}

/// Exact isomorphism test: cheap invariants first, then canonical codes.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_code(g) == canonical_code(h)
}

/// All graphs on `n` vertices, one canonically labelled representative per
/// isomorphism class, ordered by canonical code.
///
/// Built by vertex extension: every `n`-vertex graph minus its last vertex
/// is an `(n-1)`-vertex graph, so extending each class representative by a
/// vertex with every possible neighbourhood reaches every class.
pub fn enumerate_graphs(n: usize, allow_large: bool) -> Result<Vec<Graph>> {
    let cap = if allow_large { ENUMERATION_CAP + 1 } else { ENUMERATION_CAP };
    if n > cap {
        return Err(Error::CapExceeded {
            what: "graph enumeration",
            n,
            cap,
        });
    }
    let mut level = vec![Graph::new(0)];
    for k in 1..=n {
        let codes: Vec<CanonicalCode> = level
            .par_iter()
            .flat_map_iter(|base| {
                (0u64..1 << (k - 1)).map(move |mask| {
                    let mut g = Graph::new(k);
                    for (u, v) in base.edges() {
                        g.connect(u, v);
                    }
                    for u in 0..k - 1 {
                        if mask >> u & 1 == 1 {
                            g.connect(u, k - 1);
                        }
                    }
                    canonical_code(&g)
                })
            })
            .collect();
        let unique: BTreeSet<CanonicalCode> = codes.into_iter().collect();
        level = unique.iter().map(CanonicalCode::to_graph).collect();
    }
    Ok(level)
}
