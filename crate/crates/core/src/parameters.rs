//! Neighbourhood diversity, distinguishing number, and the `U(F, K)` and
//! `U(w, K)` constructions (as finite truncations).

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph [`distinguishing_number`] scans.
pub const DISTINGUISHING_CAP: usize = 16;

/// `x` and `y` are similar when no third vertex sees exactly one of them.
pub fn similar(g: &Graph, x: usize, y: usize) -> bool {
    let mut diff = g.neighbor_set(x).clone();
    diff.symmetric_difference_with(g.neighbor_set(y));
    diff.set(x, false);
    diff.set(y, false);
    diff.is_clear()
}

/// Similarity classes, each sorted, ordered by smallest member.
///
/// Panics if similarity fails to be transitive, which would be a bug in the
/// graph representation rather than a property of the input.
pub fn similarity_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.vertex_count() {
        match classes.iter_mut().find(|c| similar(g, c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    for c in &classes {
        for (i, &x) in c.iter().enumerate() {
            for &y in &c[i + 1..] {
                assert!(similar(g, x, y), "similarity is not transitive");
            }
        }
    }
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            assert!(!similar(g, a[0], b[0]), "similarity is not transitive");
        }
    }
    classes
}

pub fn neighbourhood_diversity(g: &Graph) -> usize {
    similarity_classes(g).len()
}

/// Best `k` for one choice of `U` (given as a vertex bitmask).
fn distinguished_by(g: &Graph, u_mask: u32) -> usize {
    let n = g.vertex_count();
    let mut u = FixedBitSet::with_capacity(n);
    for v in (0..n).filter(|&v| u_mask >> v & 1 == 1) {
        u.insert(v);
    }
    let mut sizes: HashMap<Vec<usize>, usize> = HashMap::new();
    for v in (0..n).filter(|&v| u_mask >> v & 1 == 0) {
        let key: Vec<usize> = g.neighbor_set(v).intersection(&u).collect();
        *sizes.entry(key).or_default() += 1;
    }
    let mut sizes: Vec<usize> = sizes.into_values().collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    // The k-th largest class must have at least k vertices.
    sizes.iter().enumerate().filter(|&(i, &s)| s > i).count()
}

/// Largest `k` such that some `U` distinguishes `k` disjoint sets of at
/// least `k` vertices each. Exhaustive over `U`, so capped.
pub fn distinguishing_number(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > DISTINGUISHING_CAP {
        return Err(Error::CapExceeded {
            what: "distinguishing number",
            n,
            cap: DISTINGUISHING_CAP,
        });
    }
    Ok((0..1u32 << n).into_par_iter().map(|m| distinguished_by(g, m)).max().unwrap_or(0))
}

/// A graph on `0..k` with loops allowed. JSON uses 1-based vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGraph {
    k: usize,
    adj: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct KGraphJson {
    k: usize,
    edges: Vec<[usize; 2]>,
}

impl KGraph {
    pub fn empty(k: usize) -> Self {
        KGraph {
            k,
            adj: vec![vec![false; k]; k],
        }
    }

    /// Builds from 0-based pairs; `(i, i)` is a loop. Repeated pairs are fine.
    pub fn new(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut kg = KGraph::empty(k);
        for &(i, j) in edges {
            for x in [i, j] {
                if x >= k {
                    return Err(Error::VertexOutOfRange { vertex: x, n: k });
                }
            }
            kg.adj[i][j] = true;
            kg.adj[j][i] = true;
        }
        Ok(kg)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    /// Edges with `i <= j`, loops included.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.k)
            .flat_map(|i| (i..self.k).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adj[i][j])
            .collect()
    }

    pub fn to_json(&self) -> String {
        let j = KGraphJson {
            k: self.k,
            edges: self.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
        };
        serde_json::to_string(&j).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: KGraphJson = serde_json::from_str(s)?;
        let mut edges = Vec::with_capacity(j.edges.len());
        for [a, b] in j.edges {
            if a == 0 || b == 0 {
                return Err(Error::InvalidParameter("KGraph vertices are 1-based".into()));
            }
            edges.push((a - 1, b - 1));
        }
        KGraph::new(j.k, &edges)
    }
}

/// The eventually periodic word `prefix . period^inf` over `alphabet`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordSource {
    pub alphabet: Vec<char>,
    pub prefix: String,
    pub period: String,
}

impl WordSource {
    pub fn new(alphabet: Vec<char>, prefix: &str, period: &str) -> Result<Self> {
        let src = WordSource {
            alphabet,
            prefix: prefix.into(),
            period: period.into(),
        };
        src.validate()?;
        Ok(src)
    }

    fn validate(&self) -> Result<()> {
        if self.period.is_empty() {
            return Err(Error::InvalidParameter("empty period".into()));
        }
        let mut seen = self.alphabet.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.alphabet.len() {
            return Err(Error::InvalidParameter("repeated letter in alphabet".into()));
        }
        if let Some(c) = self.prefix.chars().chain(self.period.chars()).find(|c| !self.alphabet.contains(c)) {
            return Err(Error::InvalidParameter(format!("letter `{c}` not in alphabet")));
        }
        Ok(())
    }

    /// Indices into the alphabet of the first `n` letters.
    pub fn take(&self, n: usize) -> Vec<usize> {
        let index = |c: char| self.alphabet.iter().position(|&a| a == c).expect("validated");
        self.prefix
            .chars()
            .chain(self.period.chars().cycle())
            .take(n)
            .map(index)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let src: WordSource = serde_json::from_str(s)?;
        src.validate()?;
        Ok(src)
    }
}

/// `copies` copies of `f` with the XOR rule against `k`. Vertex `i` of copy
/// `c` becomes `c * k + i`.
#[allow(non_snake_case)]
pub fn build_UFK(f: &Graph, k: &KGraph, copies: usize) -> Result<Graph> {
    let kk = f.vertex_count();
    if kk != k.k() {
        return Err(Error::InvalidParameter(format!(
            "F has {kk} vertices but K has {}",
            k.k()
        )));
    }
    if copies == 0 {
        return Err(Error::InvalidParameter("copies must be at least 1".into()));
    }
    let n = kk * copies;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let (i, j) = (u % kk, v % kk);
            let in_f = u / kk == v / kk && f.has_edge(i, j);
            if in_f != k.has_edge(i, j) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// The subgraph of `U(w, K)` induced by the first `n` positions.
#[allow(non_snake_case)]
pub fn build_UwK(src: &WordSource, k: &KGraph, n: usize) -> Result<Graph> {
    src.validate()?;
    if src.alphabet.len() != k.k() {
        return Err(Error::InvalidParameter(format!(
            "alphabet has {} letters but K has {} vertices",
            src.alphabet.len(),
            k.k()
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let w = src.take(n);
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let in_k = k.has_edge(w[i], w[j]);
            if (j == i + 1) != in_k {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
