//! Universal graphs, rigid lower-bound witnesses and an empirical
//! universality checker.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::named::{linear_forest, matching, spider, star_forest};
use crate::graph::{canonical_code, disjoint_union, enumerate_graphs, CanonicalCode, Graph};
use crate::letters::{chain_word_graph, enumerate_bpg, path_word_graph};
use crate::recognition::{find_induced, is_member, ClassId};

/// The word `(a1 a2 ... an)^n` as 0-based letter indices.
pub fn universal_bpg_word(n: usize) -> Vec<usize> {
    (0..n * n).map(|i| i % n).collect()
}

/// `H_{n,n}`, the letter graph of `(a1 ... an)^n` under the path decoder.
/// Grid vertex `(r, c)` (row = letter, column = copy, both 1-based) is
/// vertex `(c - 1) n + (r - 1)`.
pub fn universal_bpg(n: usize) -> Graph {
    path_word_graph(&universal_bpg_word(n))
}

/// Index of grid vertex `(r, c)` of [`universal_bpg`].
pub fn grid_vertex(n: usize, r: usize, c: usize) -> usize {
    (c - 1) * n + (r - 1)
}

/// `Z_n`, the letter graph of `(ab)^n` with decoder `{(a, b)}`: `a_k` is
/// vertex `2k - 2`, `b_l` is vertex `2l - 1`, and `a_k ~ b_l` iff `k <= l`.
pub fn universal_chain(n: usize) -> Graph {
    chain_word_graph(&"ab".repeat(n)).expect("word over {a, b}")
}

/// Leaf counts of `F*(n)`: `floor(n / i)` for `i = 1..=n`.
pub fn fstar_leaves(n: usize) -> Vec<usize> {
    (1..=n).map(|i| n / i).collect()
}

/// `F*(n) = S_{n/1} + S_{n/2} + ... + S_{n/n}`.
pub fn universal_star_forest(n: usize) -> Graph {
    star_forest(&fstar_leaves(n))
}

/// Whether the star forest with the given leaf counts (`0` for an isolated
/// vertex) embeds into `F*(n)` by matching the `i`-th largest star to
/// `S_{floor(n/i)}`.
pub fn fstar_criterion(leaves: &[usize], n: usize) -> bool {
    let mut a = leaves.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    a.len() <= n && a.iter().enumerate().all(|(i, &ai)| ai <= n / (i + 1))
}

/// `(k-1) S_n + n S_{k-1}`, `k >= 2`, `n >= 1`.
pub fn universal_star_forest_bounded(k: usize, n: usize) -> Result<Graph> {
    if k < 2 || n == 0 {
        return Err(Error::InvalidParameter("bounded star-forest universal needs k >= 2 and n >= 1".into()));
    }
    let mut leaves = vec![n; k - 1];
    leaves.extend(std::iter::repeat_n(k - 1, n));
    Ok(star_forest(&leaves))
}

/// How the column of `Q_t` is inflated into twin sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inflation {
    /// `R_{n,t}`: both column ends become twin sets of size
    /// `floor((n - 4t - 8) / 2)`.
    Ends { n: usize },
    /// `R_{n,T}` on `Q_{max T}`: the first column vertex and the `(j+3)`-th
    /// for each `j` in `T` are inflated, splitting the budget evenly.
    Sets { n: usize, t_set: Vec<usize> },
}

/// `Q_t` or one of its inflations.
#[derive(Clone, Debug)]
pub struct RigidWitness {
    pub graph: Graph,
    pub t: usize,
    /// The zigzag path in path order, `3t + 7` vertices.
    pub zigzag: Vec<usize>,
    /// Column positions `c_1 .. c_{t+3}`; each is a single vertex or a set
    /// of twins.
    pub column: Vec<Vec<usize>>,
}

impl RigidWitness {
    /// The set replacing `x = c_{t+3}`.
    pub fn x_set(&self) -> &[usize] {
        self.column.last().expect("column is non-empty")
    }

    /// The set replacing `y = c_1`.
    pub fn y_set(&self) -> &[usize] {
        &self.column[0]
    }
}

/// Position on the zigzag path of the point `(i, i)`, `(i, i+1)` or
/// `(i+1, i)` in grid coordinates.
fn diag(i: usize) -> usize {
    3 * i
}
fn above(i: usize) -> usize {
    3 * i + 1
}
fn below(i: usize) -> usize {
    3 * i + 2
}

fn build_rigid(t: usize, sizes: &[usize]) -> RigidWitness {
    let zig = 3 * t + 7;
    let total = zig + sizes.iter().sum::<usize>();
    let mut g = Graph::new(total);
    for p in 1..zig {
        g.connect(p - 1, p);
    }
    let mut column = Vec::with_capacity(t + 3);
    let mut next = zig;
    for &s in sizes {
        column.push((next..next + s).collect::<Vec<_>>());
        next += s;
    }
    for i in 1..=t + 3 {
        let mut cross = vec![diag(i - 1)];
        if i >= 2 {
            cross.push(above(i - 2));
        }
        if i <= t + 2 {
            cross.push(below(i - 1));
        }
        for &v in &column[i - 1] {
            for &z in &cross {
                g.connect(v, z);
            }
            if i < t + 3 {
                for &w in &column[i] {
                    g.connect(v, w);
                }
            }
        }
    }
    RigidWitness {
        graph: g,
        t,
        zigzag: (0..zig).collect(),
        column,
    }
}

/// `Q_t` (`4t + 10` vertices), `R_{n,t}` or `R_{n,T}`.
///
/// The zigzag path runs `(0,0), (0,1), (1,0), (1,1), (1,2), (2,1), ...,
/// (t+2, t+2)`; column vertex `c_i` is adjacent to `(i-2, i-1)`,
/// `(i-1, i-1)` and `(i, i-1)` where these exist.
pub fn witness_rigid(t: usize, inflation: Option<&Inflation>) -> Result<RigidWitness> {
    match inflation {
        None => {
            if t == 0 {
                return Err(Error::InvalidParameter("Q_t needs t >= 1".into()));
            }
            Ok(build_rigid(t, &vec![1; t + 3]))
        }
        Some(Inflation::Ends { n }) => {
            if t == 0 {
                return Err(Error::InvalidParameter("R_{n,t} needs t >= 1".into()));
            }
            let s = n.checked_sub(4 * t + 8).map_or(0, |d| d / 2);
            if s == 0 {
                return Err(Error::InvalidParameter(format!(
                    "R_{{n,t}} needs floor((n - 4t - 8) / 2) >= 1, got n = {n}, t = {t}"
                )));
            }
            let mut sizes = vec![1; t + 3];
            sizes[0] = s;
            sizes[t + 2] = s;
            Ok(build_rigid(t, &sizes))
        }
        Some(Inflation::Sets { n, t_set }) => {
            let ts: BTreeSet<usize> = t_set.iter().copied().collect();
            let Some(&tmax) = ts.last() else {
                return Err(Error::InvalidParameter("R_{n,T} needs a non-empty T".into()));
            };
            if ts.contains(&0) {
                return Err(Error::InvalidParameter("R_{n,T} needs every j in T to be >= 1".into()));
            }
            let base = 4 * tmax + 10;
            let sets = ts.len() + 1;
            let budget = (n + sets).saturating_sub(base);
            let each = budget / sets;
            if each == 0 {
                return Err(Error::InvalidParameter(format!(
                    "R_{{n,T}} budget too small for {sets} inflated sets at n = {n}"
                )));
            }
            let mut sizes = vec![1; tmax + 3];
            sizes[0] = each + budget % sets;
            for &j in &ts {
                sizes[j + 2] = each;
            }
            Ok(build_rigid(tmax, &sizes))
        }
    }
}

/// Largest size for the partition-based class generators.
pub const PARTITION_CAP: usize = 30;
/// Largest size for the `{a, b}`-word chain graph generator.
pub const CHAIN_WORD_CAP: usize = 14;

/// Partitions of `n` into parts in non-increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn cap_check(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

fn star_forests(n: usize) -> Vec<Graph> {
    partitions(n)
        .into_iter()
        .map(|p| star_forest(&p.iter().map(|s| s - 1).collect::<Vec<_>>()))
        .collect()
}

fn dedup_canonical(graphs: impl IntoParallelIterator<Item = Graph>) -> Vec<Graph> {
    let codes: BTreeSet<CanonicalCode> = graphs
        .into_par_iter()
        .map(|g| canonical_code(&g))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    codes.iter().map(CanonicalCode::to_graph).collect()
}

/// Forks `S_{1,1,k}` and paths with `n` vertices in total, at most two forks.
fn boundary_l_graphs(n: usize) -> Vec<Graph> {
    let mut fork_sets: Vec<Vec<usize>> = vec![vec![]];
    for k1 in 1..=n.saturating_sub(3) {
        fork_sets.push(vec![k1]);
        fork_sets.extend((k1..).take_while(|k2| k1 + k2 + 6 <= n).map(|k2| vec![k1, k2]));
    }
    let mut out = Vec::new();
    for forks in fork_sets {
        let used: usize = forks.iter().map(|k| k + 3).sum();
        let parts: Vec<Graph> = forks.iter().map(|&k| spider(1, 1, k).expect("k >= 1")).collect();
        for p in partitions(n - used) {
            let mut all = parts.clone();
            all.push(linear_forest(&p).expect("parts >= 1"));
            out.push(disjoint_union(&all));
        }
    }
    out
}

/// All `n`-vertex members of a class up to isomorphism.
///
/// Forest classes come from integer partitions, chain graphs from
/// `{a, b}`-words, bipartite permutation classes from path-decoder words,
/// and everything else from filtering all graphs. `allow_large` raises the
/// general enumeration cap by one.
pub fn enumerate_class(c: ClassId, n: usize, allow_large: bool) -> Result<Vec<Graph>> {
    let bpg_filtered = |pred: &(dyn Fn(&Graph) -> bool + Sync)| -> Result<Vec<Graph>> {
        Ok(enumerate_bpg(n)?.into_par_iter().filter(|g| pred(g)).collect())
    };
    match c {
        ClassId::StarForest => {
            cap_check("star forest enumeration", n, PARTITION_CAP)?;
            Ok(star_forests(n))
        }
        ClassId::KSkFree(_) => {
            cap_check("star forest enumeration", n, PARTITION_CAP)?;
            Ok(star_forests(n).into_iter().filter(|g| is_member(c, g)).collect())
        }
        ClassId::LinearForest => {
            cap_check("linear forest enumeration", n, PARTITION_CAP)?;
            Ok(partitions(n)
                .into_iter()
                .map(|p| linear_forest(&p).expect("parts >= 1"))
                .collect())
        }
        ClassId::DegreeLe1 => {
            cap_check("matching enumeration", n, PARTITION_CAP)?;
            Ok((0..=n / 2)
                .rev()
                .map(|k| disjoint_union(&[matching(k), Graph::new(n - 2 * k)]))
                .collect())
        }
        ClassId::BoundaryL => {
            cap_check("boundary class enumeration", n, PARTITION_CAP)?;
            Ok(boundary_l_graphs(n))
        }
        ClassId::Chain => {
            cap_check("chain graph enumeration", n, CHAIN_WORD_CAP)?;
            let words: Vec<String> = (0u32..1 << n)
                .map(|m| (0..n).map(|i| if m >> i & 1 == 1 { 'b' } else { 'a' }).collect())
                .collect();
            Ok(dedup_canonical(
                words
                    .into_par_iter()
                    .map(|w| chain_word_graph(&w).expect("word over {a, b}")),
            ))
        }
        ClassId::Bpg => enumerate_bpg(n),
        ClassId::P5FreeBipartite | ClassId::CaterpillarForest | ClassId::ClassXi(_) => {
            bpg_filtered(&|g| is_member(c, g))
        }
        ClassId::Bipartite => Ok(enumerate_graphs(n, allow_large)?
            .into_par_iter()
            .filter(|g| is_member(c, g))
            .collect()),
    }
}

/// Outcome of an exhaustive universality check.
#[derive(Clone, Debug)]
pub struct UniversalityReport {
    pub class: ClassId,
    pub n: usize,
    pub checked: usize,
    /// The first member (in enumeration order) that does not embed.
    pub failure: Option<Graph>,
}

impl UniversalityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that every `n`-vertex member of `c` is an induced subgraph of `u`.
pub fn verify_universal(c: ClassId, n: usize, u: &Graph, allow_large: bool) -> Result<UniversalityReport> {
    let members = enumerate_class(c, n, allow_large)?;
    let failure = members
        .par_iter()
        .find_first(|g| find_induced(u, g).is_none())
        .cloned();
    Ok(UniversalityReport {
        class: c,
        n,
        checked: members.len(),
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::path;
    use crate::graph::{distance, is_isomorphic};

    #[test]
    fn hnn_sizes_and_rule() {
        let h = universal_bpg(4);
        assert_eq!(h.vertex_count(), 16);
        assert_eq!(h.edge_count(), 30);
        assert_eq!(universal_bpg(1), Graph::new(1));
        let n = 4;
        for r1 in 1..=n {
            for c1 in 1..=n {
                for r2 in 1..=n {
                    for c2 in 1..=n {
                        let expected = r2 == r1 + 1 && c1 <= c2 || r1 == r2 + 1 && c2 <= c1;
                        assert_eq!(h.has_edge(grid_vertex(n, r1, c1), grid_vertex(n, r2, c2)), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn chain_universal() {
        let z5 = universal_chain(5);
        assert_eq!((z5.vertex_count(), z5.edge_count()), (10, 15));
        assert_eq!(universal_chain(1).edge_count(), 1);
        assert!(is_isomorphic(&universal_chain(2), &path(4).unwrap()));
    }

    #[test]
    fn star_universal_sizes() {
        assert_eq!(universal_star_forest(4).vertex_count(), 12);
        assert_eq!(universal_star_forest(1).vertex_count(), 2);
        assert_eq!(universal_star_forest(6).vertex_count(), 20);
        assert_eq!(universal_star_forest_bounded(3, 5).unwrap().vertex_count(), 27);
        assert_eq!(universal_star_forest_bounded(2, 3).unwrap().vertex_count(), 10);
        assert!(universal_star_forest_bounded(1, 3).is_err());
    }

    #[test]
    fn q3_shape() {
        let q = witness_rigid(3, None).unwrap();
        assert_eq!(q.graph.vertex_count(), 22);
        assert_eq!(q.graph.edge_count(), 15 + 5 + (5 + 6 + 5));
        assert_eq!(distance(&q.graph, q.x_set()[0], q.y_set()[0]), Some(5));
    }

    #[test]
    fn rnt_sizes() {
        let r = witness_rigid(3, Some(&Inflation::Ends { n: 60 })).unwrap();
        assert_eq!(r.graph.vertex_count(), 60);
        assert_eq!(r.x_set().len(), 20);
        assert!(witness_rigid(3, Some(&Inflation::Ends { n: 21 })).is_err());
        let r = witness_rigid(
            0,
            Some(&Inflation::Sets {
                n: 80,
                t_set: vec![3, 8],
            }),
        )
        .unwrap();
        assert_eq!(r.graph.vertex_count(), 80);
        assert_eq!(r.column.iter().filter(|s| s.len() > 1).count(), 3);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn fstar_criterion_examples() {
        assert!(fstar_criterion(&[3], 4));
        assert!(fstar_criterion(&[1, 1], 4));
        assert!(fstar_criterion(&[2, 2], 4));
        assert!(!fstar_criterion(&[3, 3], 4));
        assert!(!fstar_criterion(&[1; 5], 4));
    }
}
