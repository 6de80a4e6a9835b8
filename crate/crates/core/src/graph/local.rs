//! Local complementation and pivoting.

use super::Graph;
use crate::error::{Error, Result};

/// Complements the subgraph induced by the neighbourhood of `v`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut h = g.clone();
    let nb: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            h.toggle(x, y);
        }
    }
    Ok(h)
}

/// Pivot on the edge `uv`.
///
/// Computed as local complementations at `u`, `v`, `u`, after which the
/// labels of `u` and `v` are exchanged. With the exchange the result is the
/// usual net effect: edges between `N(u) \ {v}` and `N(v) \ {u}` are
/// complemented (for triangle-free graphs nothing else changes).
pub fn pivot(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAdjacent(u, v));
    }
    let h = local_complement(&local_complement(&local_complement(g, u)?, v)?, u)?;
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.swap(u, v);
    h.relabel(&perm)
}
