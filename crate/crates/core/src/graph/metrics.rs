use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::Graph;

/// Largest graph for which [`graph_metrics`] computes the independence number.
pub const MIS_CAP: usize = 64;
/// Largest graph for which [`graph_metrics`] computes the path number.
pub const PATH_NUMBER_CAP: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    pub components: Vec<Vec<usize>>,
    /// `distances[u][v]`, `None` across components.
    pub distances: Vec<Vec<Option<usize>>>,
    /// `None` above [`MIS_CAP`] vertices.
    pub max_independent_set: Option<usize>,
    /// Edges on a longest (not necessarily induced) path; `None` above
    /// [`PATH_NUMBER_CAP`] vertices.
    pub path_number: Option<usize>,
}

pub fn graph_metrics(g: &Graph) -> GraphMetrics {
    let n = g.vertex_count();
    GraphMetrics {
        components: components(g),
        distances: distances(g),
        max_independent_set: (n <= MIS_CAP).then(|| max_independent_set(g).len()),
        path_number: (n <= PATH_NUMBER_CAP).then(|| path_number(g)),
    }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    for s in 0..n {
        if seen.put(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for w in g.neighbors(u) {
                if !seen.put(w) {
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn bfs(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.vertex_count()).map(|s| bfs(g, s)).collect()
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Option<usize> {
    bfs(g, u)[v]
}

/// A proper 2-colouring (`true` = second side), or `None` when the graph has
/// an odd cycle. The smallest vertex of each component is on the first side.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// A shortest odd cycle in cyclic order, if any. Shortest odd cycles are
/// chordless.
pub fn odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for r in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for (u, v) in g.edges() {
            if dist[u] == usize::MAX || dist[u] != dist[v] {
                continue;
            }
            let len = 2 * dist[u] + 1;
            if best.as_ref().is_some_and(|b| b.len() <= len) {
                continue;
            }
            let climb = |mut x: usize| {
                let mut p = vec![x];
                while x != r {
                    x = parent[x];
                    p.push(x);
                }
                p
            };
            let pu = climb(u);
            let mut pv = climb(v);
            pv.pop();
            // Both walks end at r; a shared interior vertex would give a
            // shorter odd cycle through another root, so skip it here.
            let mut mark = FixedBitSet::with_capacity(n);
            if pu.iter().chain(&pv).any(|&x| mark.put(x)) {
                continue;
            }
            let mut cyc = pu;
            cyc.extend(pv.into_iter().rev());
            best = Some(cyc);
        }
    }
    best
}

/// A maximum independent set, found by branch and bound with the usual
/// degree-0 and degree-1 reductions.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    let mut best = Vec::new();
    let mut current = Vec::new();
    mis_branch(g, cand, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn mis_branch(g: &Graph, mut cand: FixedBitSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let base = current.len();
    loop {
        if current.len() + cand.count_ones(..) <= best.len() {
            current.truncate(base);
            return;
        }
        // Vertices of candidate degree <= 1 can always be taken.
        let forced = cand
            .ones()
            .find(|&v| g.neighbor_set(v).intersection(&cand).take(2).count() <= 1);
        match forced {
            Some(v) => {
                current.push(v);
                cand.set(v, false);
                cand.difference_with(g.neighbor_set(v));
            }
            None => break,
        }
    }
    let Some(v) = cand
        .ones()
        .max_by_key(|&v| g.neighbor_set(v).intersection(&cand).count())
    else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(base);
        return;
    };
    let mut with = cand.clone();
    with.set(v, false);
    with.difference_with(g.neighbor_set(v));
    current.push(v);
    mis_branch(g, with, current, best);
    current.pop();
    cand.set(v, false);
    mis_branch(g, cand, current, best);
    current.truncate(base);
}

/// Number of edges on a longest simple path.
pub fn path_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    let mut visited = FixedBitSet::with_capacity(n);
    for s in 0..n {
        visited.insert(s);
        longest_from(g, s, 0, &mut visited, &mut best);
        visited.set(s, false);
        if best + 1 == n {
            break;
        }
    }
    best
}

fn longest_from(g: &Graph, u: usize, len: usize, visited: &mut FixedBitSet, best: &mut usize) {
    *best = (*best).max(len);
    if *best + 1 == g.vertex_count() {
        return;
    }
    for w in g.neighbors(u) {
        if !visited.contains(w) {
            visited.insert(w);
            longest_from(g, w, len + 1, visited, best);
            visited.set(w, false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn path_and_cycle_metrics() {
        let m = graph_metrics(&path(4).unwrap());
        assert_eq!(m.path_number, Some(3));
        assert_eq!(m.max_independent_set, Some(2));
        assert_eq!(m.distances[0][3], Some(3));
        assert_eq!(path_number(&cycle(5).unwrap()), 4);
    }

    #[test]
    fn two_edges() {
        let m = graph_metrics(&matching(2));
        assert_eq!(m.components, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(m.max_independent_set, Some(2));
        assert_eq!(m.distances[0][2], None);
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(odd_cycle(&cycle(6).unwrap()), None);
        let c7 = cycle(7).unwrap();
        let cyc = odd_cycle(&c7).unwrap();
        assert_eq!(cyc.len(), 7);
        assert!(!is_bipartite(&c7));
        assert!(is_bipartite(&phi()));
    }

    #[test]
    fn mis_of_known_graphs() {
        assert_eq!(max_independent_set(&cycle(7).unwrap()).len(), 3);
        assert_eq!(max_independent_set(&complete(5).unwrap()).len(), 1);
        assert_eq!(max_independent_set(&star(6)).len(), 6);
        assert_eq!(max_independent_set(&Graph::new(0)).len(), 0);
    }
}
