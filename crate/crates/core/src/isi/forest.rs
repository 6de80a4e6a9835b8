//! Linear forests: component profiles and the integer system whose
//! feasibility decides induced containment.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::named::linear_forest;
use crate::graph::{components, Embedding, Graph};

/// `alpha[i - 1]` is the number of components isomorphic to `P_i`. Trailing
/// zeros are trimmed, so equal forests have equal profiles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestProfile {
    alpha: Vec<usize>,
}

impl ForestProfile {
    pub fn new(mut alpha: Vec<usize>) -> Self {
        while alpha.last() == Some(&0) {
            alpha.pop();
        }
        ForestProfile { alpha }
    }

    pub fn counts(&self) -> &[usize] {
        &self.alpha
    }

    /// Number of `P_i` components, `i >= 1`.
    pub fn count(&self, i: usize) -> usize {
        self.alpha.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of the longest path component, 0 for the empty forest.
    pub fn longest(&self) -> usize {
        self.alpha.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.alpha.iter().enumerate().map(|(i, a)| a * (i + 1)).sum()
    }

    /// The forest itself, shortest components first.
    pub fn to_graph(&self) -> Graph {
        let lengths: Vec<usize> = self
            .alpha
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i + 1, a))
            .collect();
        linear_forest(&lengths).expect("lengths >= 1")
    }
}

impl fmt::Display for ForestProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.alpha.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Vertices of each component of a linear forest, in path order.
fn path_components(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.max_degree() > 2 {
        return Err(Error::NotLinearForest);
    }
    let mut out = Vec::new();
    for comp in components(g) {
        let Some(&start) = comp.iter().find(|&&v| g.degree(v) <= 1) else {
            return Err(Error::NotLinearForest);
        };
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = g.neighbors(cur).find(|&w| w != prev) {
            prev = cur;
            cur = next;
            walk.push(cur);
        }
        if walk.len() != comp.len() {
            return Err(Error::NotLinearForest);
        }
        out.push(walk);
    }
    Ok(out)
}

pub fn profile_of(g: &Graph) -> Result<ForestProfile> {
    let comps = path_components(g)?;
    let mut alpha = vec![0; comps.iter().map(Vec::len).max().unwrap_or(0)];
    for c in &comps {
        alpha[c.len() - 1] += 1;
    }
    Ok(ForestProfile::new(alpha))
}

/// Profiles of all induced subgraphs of `P_i`, the empty one included,
/// ordered by longest component and then colexicographically. A forest is
/// an induced subgraph of `P_i` iff `sum_j gamma_j (j + 1) <= i + 1`.
#[allow(non_snake_case)]
pub fn columns_A(i: usize) -> Vec<ForestProfile> {
    fn rec(j: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<ForestProfile>) {
        if j == 0 {
            out.push(ForestProfile::new(cur.clone()));
            return;
        }
        for c in 0..=budget / (j + 1) {
            cur[j - 1] = c;
            rec(j - 1, budget - c * (j + 1), cur, out);
        }
        cur[j - 1] = 0;
    }
    let mut out = Vec::new();
    rec(i, i + 1, &mut vec![0; i], &mut out);
    out.sort_by(|a, b| {
        (a.longest(), a.alpha.iter().rev().collect::<Vec<_>>())
            .cmp(&(b.longest(), b.alpha.iter().rev().collect::<Vec<_>>()))
    });
    out
}

/// The integer system: for each length `j`, the chosen columns must supply
/// at least `alpha_j` copies of `P_j`; block `i` may use at most `beta_i`
/// columns, one per `P_i` component of the host.
#[derive(Clone, Debug)]
pub struct IlpSystem {
    /// `blocks[i - 1]` lists the columns of `A_i`.
    pub blocks: Vec<Vec<ForestProfile>>,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl IlpSystem {
    /// System for "is `h` an induced subgraph of `g`" from the two profiles.
    /// `include_empty` keeps the empty profile as a column of every block.
    pub fn new(g: &ForestProfile, h: &ForestProfile, include_empty: bool) -> Self {
        let n = g.longest().max(h.longest());
        let pad = |p: &ForestProfile| (1..=n).map(|i| p.count(i)).collect::<Vec<_>>();
        let blocks = (1..=n)
            .map(|i| {
                columns_A(i)
                    .into_iter()
                    .filter(|c| include_empty || c.longest() > 0)
                    .collect()
            })
            .collect();
        IlpSystem {
            blocks,
            alpha: pad(h),
            beta: pad(g),
        }
    }

    pub fn variable_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Whether `x` (aligned with `blocks`) satisfies every constraint.
    pub fn is_solution(&self, x: &[Vec<usize>]) -> bool {
        if x.len() != self.blocks.len() || x.iter().zip(&self.blocks).any(|(xi, b)| xi.len() != b.len()) {
            return false;
        }
        let capacity = x.iter().zip(&self.beta).all(|(xi, &b)| xi.iter().sum::<usize>() <= b);
        let demand = (1..=self.alpha.len()).all(|j| {
            let supply: usize = x
                .iter()
                .zip(&self.blocks)
                .flat_map(|(xi, b)| xi.iter().zip(b).map(move |(&c, col)| c * col.count(j)))
                .sum();
            supply >= self.alpha[j - 1]
        });
        capacity && demand
    }

    /// A non-negative integer solution, if any, by branch and bound over the
    /// blocks from the longest paths down. Failed states are memoised. Only
    /// columns that reduce the residual demand are ever chosen, so the empty
    /// column always gets `x = 0`.
    pub fn solve(&self) -> Option<Vec<Vec<usize>>> {
        let mut x: Vec<Vec<usize>> = self.blocks.iter().map(|b| vec![0; b.len()]).collect();
        let mut failed = HashSet::new();
        if !self.block(self.blocks.len(), self.alpha.clone(), &mut x, &mut failed) {
            return None;
        }
        debug_assert!(self.is_solution(&x));
        Some(x)
    }

    /// Whether blocks `1..=i` can still cover the residual demand.
    fn bound(&self, i: usize, r: &[usize]) -> bool {
        let weight: usize = r.iter().enumerate().map(|(j, c)| c * (j + 2)).sum();
        let room: usize = (1..=i).map(|b| self.beta[b - 1] * (b + 1)).sum();
        if weight > room {
            return false;
        }
        let mut tail = 0;
        for j in (1..=r.len()).rev() {
            tail += r[j - 1];
            let cover: usize = (j..=i).map(|b| self.beta[b - 1] * ((b + 1) / (j + 1))).sum();
            if tail > cover {
                return false;
            }
        }
        true
    }

    fn block(
        &self,
        i: usize,
        r: Vec<usize>,
        x: &mut [Vec<usize>],
        failed: &mut HashSet<(usize, Vec<usize>)>,
    ) -> bool {
        if r.iter().all(|&c| c == 0) {
            return true;
        }
        if i == 0 || !self.bound(i, &r) || failed.contains(&(i, r.clone())) {
            return false;
        }
        if self.choose(i, 0, self.beta[i - 1], &r, x, failed) {
            return true;
        }
        failed.insert((i, r));
        false
    }

    fn choose(
        &self,
        i: usize,
        c: usize,
        cap: usize,
        r: &[usize],
        x: &mut [Vec<usize>],
        failed: &mut HashSet<(usize, Vec<usize>)>,
    ) -> bool {
        let cols = &self.blocks[i - 1];
        if c == cols.len() || cap == 0 {
            return self.block(i - 1, r.to_vec(), x, failed);
        }
        let col = &cols[c];
        let useful = (1..=col.longest()).any(|j| col.count(j) > 0 && r.get(j - 1).is_some_and(|&d| d > 0));
        if useful {
            let next: Vec<usize> = r
                .iter()
                .enumerate()
                .map(|(j, &d)| d.saturating_sub(col.count(j + 1)))
                .collect();
            x[i - 1][c] += 1;
            if self.choose(i, c, cap - 1, &next, x, failed) {
                return true;
            }
            x[i - 1][c] -= 1;
        }
        self.choose(i, c + 1, cap, r, x, failed)
    }
}

/// Result of the linear-forest route.
#[derive(Clone, Debug)]
pub struct ForestIsi {
    pub system: IlpSystem,
    /// A feasible `x`, aligned with `system.blocks`.
    pub solution: Option<Vec<Vec<usize>>>,
}

impl ForestIsi {
    pub fn embeds(&self) -> bool {
        self.solution.is_some()
    }

    /// Human-readable non-zero entries of the solution.
    pub fn describe_solution(&self) -> Vec<String> {
        let Some(x) = &self.solution else { return Vec::new() };
        let mut out = Vec::new();
        for (i, (xi, cols)) in x.iter().zip(&self.system.blocks).enumerate() {
            for (&count, col) in xi.iter().zip(cols) {
                if count > 0 {
                    out.push(format!("A_{} column {} x = {}", i + 1, col, count));
                }
            }
        }
        out
    }
}

/// Decides whether linear forest `h` is an induced subgraph of linear forest
/// `g` through the integer system.
pub fn isi_linear_forest(g: &Graph, h: &Graph) -> Result<ForestIsi> {
    isi_linear_forest_with(g, h, true)
}

/// As [`isi_linear_forest`], choosing whether the empty profile is a column.
pub fn isi_linear_forest_with(g: &Graph, h: &Graph, include_empty: bool) -> Result<ForestIsi> {
    let system = IlpSystem::new(&profile_of(g)?, &profile_of(h)?, include_empty);
    let solution = system.solve();
    Ok(ForestIsi { system, solution })
}

/// Turns a feasible solution into an explicit embedding: each chosen column
/// is laid out along its own host path, with one gap vertex between pieces,
/// and the components of `h` are assigned to pieces of their length.
pub fn embedding_from_solution(g: &Graph, h: &Graph, result: &ForestIsi) -> Result<Option<Embedding>> {
    let Some(x) = &result.solution else { return Ok(None) };
    let mut host_paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); result.system.blocks.len()];
    for p in path_components(g)? {
        host_paths[p.len() - 1].push(p);
    }
    let longest = result.system.alpha.len().max(1);
    let mut pieces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); longest];
    for (i, (xi, cols)) in x.iter().zip(&result.system.blocks).enumerate() {
        let mut hosts = host_paths[i].iter();
        for (&count, col) in xi.iter().zip(cols) {
            for _ in 0..count {
                let host = hosts.next().ok_or_else(|| Error::InvalidParameter("solution exceeds capacity".into()))?;
                let mut pos = 0;
                for j in (1..=col.longest()).rev() {
                    for _ in 0..col.count(j) {
                        if j <= longest {
                            pieces[j - 1].push(host[pos..pos + j].to_vec());
                        }
                        pos += j + 1;
                    }
                }
            }
        }
    }
    let mut map = vec![usize::MAX; h.vertex_count()];
    for comp in path_components(h)? {
        let piece = pieces[comp.len() - 1]
            .pop()
            .ok_or_else(|| Error::InvalidParameter("solution does not cover the pattern".into()))?;
        for (&hv, &gv) in comp.iter().zip(&piece) {
            map[hv] = gv;
        }
    }
    Embedding::new(h, g, map).map(Some)
}
