//! Named graph families with fixed, documented labelings.

use std::fmt;
use std::str::FromStr;

use super::{disjoint_union, Graph};
use crate::error::{Error, Result};

/// Chordless path `P_n`: vertices `0..n` in path order.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for i in 1..n {
        g.connect(i - 1, i);
    }
    Ok(g)
}

/// Chordless cycle `C_n`, `n >= 3`, vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let mut g = path(n)?;
    g.connect(n - 1, 0);
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.connect(u, v);
        }
    }
    Ok(g)
}

/// `K_{a,b}`: side one is `0..a`, side two is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("complete bipartite graph needs a, b >= 1".into()));
    }
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.connect(u, v);
        }
    }
    Ok(g)
}

/// The star `S_m = K_{1,m}` with centre 0 and leaves `1..=m`. `S_0` is `K_1`.
pub fn star(m: usize) -> Graph {
    let mut g = Graph::new(m + 1);
    for leaf in 1..=m {
        g.connect(0, leaf);
    }
    g
}

/// The spider `S_{i,j,k}`: centre 0, then the three legs in order, each leg
/// listed from the vertex next to the centre outwards.
pub fn spider(i: usize, j: usize, k: usize) -> Result<Graph> {
    if i == 0 || j == 0 || k == 0 {
        return Err(Error::InvalidParameter("spider needs i, j, k >= 1".into()));
    }
    let mut g = Graph::new(1 + i + j + k);
    let mut next = 1;
    for len in [i, j, k] {
        let mut prev = 0;
        for _ in 0..len {
            g.connect(prev, next);
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// `Sun_3`: the 4-cycle `u1 v1 u2 v2` (vertices 0..4) with pendants at
/// `u1`, `u2` and `v2` (vertices 4, 5, 6).
pub fn sun3() -> Graph {
    Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5), (3, 6)])
        .expect("fixed edge list")
}

/// `Phi`: the 2x3 grid `a1 a2 a3 / b1 b2 b3` (vertices 0..6) with a pendant
/// (vertex 6) at `b2`.
pub fn phi() -> Graph {
    Graph::from_edges(
        7,
        &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (4, 6)],
    )
    .expect("fixed edge list")
}

/// `H_k`: the path `v1..vk` (vertices `0..k`) with two pendants at `v1`
/// (vertices `k`, `k+1`) and two at `vk` (vertices `k+2`, `k+3`).
///
/// `H_1` has both pairs on the same vertex and is therefore `K_{1,4}`.
pub fn hgraph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("H-graph needs k >= 1".into()));
    }
    let mut g = Graph::new(k + 4);
    for i in 1..k {
        g.connect(i - 1, i);
    }
    g.connect(0, k);
    g.connect(0, k + 1);
    g.connect(k - 1, k + 2);
    g.connect(k - 1, k + 3);
    Ok(g)
}

/// `m K_2`, edges `{2i, 2i+1}`.
pub fn matching(m: usize) -> Graph {
    let mut g = Graph::new(2 * m);
    for i in 0..m {
        g.connect(2 * i, 2 * i + 1);
    }
    g
}

/// Disjoint union of stars `S_{a_1} + S_{a_2} + ...` in the given order.
pub fn star_forest(leaves: &[usize]) -> Graph {
    disjoint_union(&leaves.iter().map(|&m| star(m)).collect::<Vec<_>>())
}

/// Disjoint union of paths with the given vertex counts.
pub fn linear_forest(lengths: &[usize]) -> Result<Graph> {
    let parts = lengths.iter().map(|&l| path(l)).collect::<Result<Vec<_>>>()?;
    Ok(disjoint_union(&parts))
}

/// A named family together with its integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Spider(usize, usize, usize),
    Sun3,
    Phi,
    HGraph(usize),
    Matching(usize),
}

impl NamedFamily {
    pub fn build(self) -> Result<Graph> {
        match self {
            NamedFamily::Path(n) => path(n),
            NamedFamily::Cycle(n) => cycle(n),
            NamedFamily::Complete(n) => complete(n),
            NamedFamily::CompleteBipartite(a, b) => complete_bipartite(a, b),
            NamedFamily::Star(m) => {
                if m == 0 {
                    Err(Error::InvalidParameter("star needs m >= 1".into()))
                } else {
                    Ok(star(m))
                }
            }
            NamedFamily::Spider(i, j, k) => spider(i, j, k),
            NamedFamily::Sun3 => Ok(sun3()),
            NamedFamily::Phi => Ok(phi()),
            NamedFamily::HGraph(k) => hgraph(k),
            NamedFamily::Matching(m) => {
                if m == 0 {
                    Err(Error::InvalidParameter("matching needs m >= 1".into()))
                } else {
                    Ok(matching(m))
                }
            }
        }
    }

    /// Parses a family tag and its positional parameters, e.g.
    /// `("spider", ["2", "2", "2"])`.
    pub fn parse(tag: &str, params: &[&str]) -> Result<Self> {
        let nums = params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("not a non-negative integer: {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "family {tag} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let fam = match tag {
            "path" => {
                arity(1)?;
                NamedFamily::Path(nums[0])
            }
            "cycle" => {
                arity(1)?;
                NamedFamily::Cycle(nums[0])
            }
            "complete" => {
                arity(1)?;
                NamedFamily::Complete(nums[0])
            }
            "complete-bipartite" => {
                arity(2)?;
                NamedFamily::CompleteBipartite(nums[0], nums[1])
            }
            "star" => {
                arity(1)?;
                NamedFamily::Star(nums[0])
            }
            "spider" => {
                arity(3)?;
                NamedFamily::Spider(nums[0], nums[1], nums[2])
            }
            "sun3" => {
                arity(0)?;
                NamedFamily::Sun3
            }
            "phi" => {
                arity(0)?;
                NamedFamily::Phi
            }
            "hgraph" => {
                arity(1)?;
                NamedFamily::HGraph(nums[0])
            }
            "matching" => {
                arity(1)?;
                NamedFamily::Matching(nums[0])
            }
            _ => return Err(Error::InvalidParameter(format!("unknown family {tag}"))),
        };
        Ok(fam)
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedFamily::Path(n) => write!(f, "path {n}"),
            NamedFamily::Cycle(n) => write!(f, "cycle {n}"),
            NamedFamily::Complete(n) => write!(f, "complete {n}"),
            NamedFamily::CompleteBipartite(a, b) => write!(f, "complete-bipartite {a} {b}"),
            NamedFamily::Star(m) => write!(f, "star {m}"),
            NamedFamily::Spider(i, j, k) => write!(f, "spider {i} {j} {k}"),
            NamedFamily::Sun3 => write!(f, "sun3"),
            NamedFamily::Phi => write!(f, "phi"),
            NamedFamily::HGraph(k) => write!(f, "hgraph {k}"),
            NamedFamily::Matching(m) => write!(f, "matching {m}"),
        }
    }
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let tag = parts
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty family".into()))?;
        let params: Vec<&str> = parts.collect();
        NamedFamily::parse(tag, &params)
    }
}

/// Builds a named graph.
pub fn make_named(family: NamedFamily) -> Result<Graph> {
    family.build()
}
