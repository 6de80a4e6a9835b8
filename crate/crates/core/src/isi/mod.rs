//! Induced subgraph isomorphism: is `h` an induced subgraph of `g`?
//!
//! Three solvers: exhaustive backtracking, an integer system for linear
//! forests, and a component assignment for `P_5`-free bipartite graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph};
use crate::recognition::{find_induced, is_member, ClassId};

mod chain;
mod forest;
mod hungarian;

pub use chain::{component_weight, independence_from_word, isi_p5free, isi_p5free_with, MatchingRule, P5FreeIsi};
pub use forest::{
    columns_A, embedding_from_solution, isi_linear_forest, isi_linear_forest_with, profile_of, ForestIsi,
    ForestProfile, IlpSystem,
};
pub use hungarian::max_weight_assignment;

/// Largest pattern the automatic dispatcher hands to brute force.
pub const BRUTE_FORCE_PATTERN_CAP: usize = 16;
/// Largest host the automatic dispatcher hands to brute force.
pub const BRUTE_FORCE_HOST_CAP: usize = 128;

/// Exhaustive search; the embedding is verified.
pub fn isi_bruteforce(g: &Graph, h: &Graph) -> Option<Embedding> {
    find_induced(g, h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    Auto,
    BruteForce,
    LinearForestIlp,
    P5FreeMatching,
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solver::Auto => "auto",
            Solver::BruteForce => "bruteforce",
            Solver::LinearForestIlp => "linear-forest-ilp",
            Solver::P5FreeMatching => "p5free-matching",
        })
    }
}

impl FromStr for Solver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Solver::Auto, Solver::BruteForce, Solver::LinearForestIlp, Solver::P5FreeMatching]
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown solver `{s}`")))
    }
}

/// Answer of [`isi_with`], with whatever certificate the solver produces.
#[derive(Clone, Debug)]
pub struct IsiOutcome {
    /// The solver that actually ran.
    pub solver: Solver,
    pub embeds: bool,
    pub embedding: Option<Embedding>,
    /// Non-zero entries of a feasible integer solution (linear forests).
    pub solution: Vec<String>,
}

/// The solver [`Solver::Auto`] picks for a pair.
pub fn dispatch(g: &Graph, h: &Graph) -> Result<Solver> {
    let both = |c| is_member(c, g) && is_member(c, h);
    if both(ClassId::LinearForest) {
        Ok(Solver::LinearForestIlp)
    } else if both(ClassId::P5FreeBipartite) {
        Ok(Solver::P5FreeMatching)
    } else if h.vertex_count() <= BRUTE_FORCE_PATTERN_CAP && g.vertex_count() <= BRUTE_FORCE_HOST_CAP {
        Ok(Solver::BruteForce)
    } else {
        Err(Error::Unsupported(format!(
            "no structured solver applies and brute force is capped at {BRUTE_FORCE_PATTERN_CAP} pattern / {BRUTE_FORCE_HOST_CAP} host vertices"
        )))
    }
}

pub fn isi_with(solver: Solver, g: &Graph, h: &Graph) -> Result<IsiOutcome> {
    let solver = match solver {
        Solver::Auto => dispatch(g, h)?,
        s => s,
    };
    match solver {
        Solver::Auto => unreachable!("resolved above"),
        Solver::BruteForce => {
            let embedding = isi_bruteforce(g, h);
            Ok(IsiOutcome {
                solver,
                embeds: embedding.is_some(),
                embedding,
                solution: Vec::new(),
            })
        }
        Solver::LinearForestIlp => {
            let r = isi_linear_forest(g, h).map_err(|e| match e {
                Error::NotLinearForest => Error::Unsupported("linear-forest solver needs two linear forests".into()),
                e => e,
            })?;
            Ok(IsiOutcome {
                solver,
                embeds: r.embeds(),
                embedding: embedding_from_solution(g, h, &r)?,
                solution: r.describe_solution(),
            })
        }
        Solver::P5FreeMatching => {
            let r = isi_p5free(g, h)?;
            Ok(IsiOutcome {
                solver,
                embeds: r.embeds,
                embedding: r.embedding,
                solution: Vec::new(),
            })
        }
    }
}

pub fn isi_auto(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(isi_with(Solver::Auto, g, h)?.embeds)
}
