//! Induced pattern search and membership tests for the hereditary classes.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::named::{cycle, hgraph, matching, path, phi, spider, star, star_forest, sun3};
use crate::graph::{components, copies, odd_cycle, Embedding, Graph};

/// Order in which pattern vertices are placed: each next vertex has as many
/// already placed neighbours as possible, ties broken by degree.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.vertex_count();
    let mut placed = FixedBitSet::with_capacity(k);
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                let links = pattern.neighbor_set(v).intersection(&placed).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

/// Backtracking state for induced embeddings of `pattern` into `g`.
struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// `twins[p]`: pattern vertices with the same neighbourhood as `p`
    /// (apart from each other). Empty when symmetry breaking is off.
    twins: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: FixedBitSet,
    all: FixedBitSet,
}

/// Exhaustive backtracking over induced embeddings of `pattern` into `g`.
/// `visit` receives each complete map and returns `true` to stop. With
/// `break_twins`, twins of the pattern get increasing images, so only one
/// map per set of twin permutations is visited.
fn search_embeddings(
    g: &Graph,
    pattern: &Graph,
    break_twins: bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = g.vertex_count();
    let k = pattern.vertex_count();
    if k > n {
        return;
    }
    let twins = (0..k)
        .map(|p| {
            if !break_twins {
                return Vec::new();
            }
            (0..k)
                .filter(|&q| q != p && same_neighbourhood(pattern, p, q))
                .collect()
        })
        .collect();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut s = Search {
        g,
        pattern,
        order: placement_order(pattern),
        twins,
        map: vec![usize::MAX; k],
        used: FixedBitSet::with_capacity(n),
        all,
    };
    s.extend(0, visit);
}

fn same_neighbourhood(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbor_set(u).clone();
    let mut nv = g.neighbor_set(v).clone();
    nu.set(v, false);
    nv.set(u, false);
    nu == nv
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let p = self.order[depth];
        let mut cand = self.all.clone();
        cand.difference_with(&self.used);
        for &q in &self.order[..depth] {
            let image = self.g.neighbor_set(self.map[q]);
            if self.pattern.has_edge(p, q) {
                cand.intersect_with(image);
            } else {
                cand.difference_with(image);
            }
        }
        let need = self.pattern.degree(p);
        for v in cand.ones() {
            if self.g.degree(v) < need {
                continue;
            }
            let out_of_order = self.twins[p].iter().any(|&q| {
                let mq = self.map[q];
                mq != usize::MAX && ((q < p) != (mq < v))
            });
            if out_of_order {
                continue;
            }
            self.map[p] = v;
            self.used.insert(v);
            let stop = self.extend(depth + 1, visit);
            self.used.set(v, false);
            if stop {
                return true;
            }
        }
        self.map[p] = usize::MAX;
        false
    }
}

/// An induced copy of `pattern` in `g`, if one exists. The search is
/// exhaustive, so `None` means `g` is `pattern`-free.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Embedding> {
    let mut found = None;
    search_embeddings(g, pattern, true, &mut |map| {
        found = Some(Embedding::unchecked(map.to_vec()));
        true
    });
    debug_assert!(found.as_ref().is_none_or(|e| e.is_valid(pattern, g)));
    found
}

/// Every induced embedding of `pattern` into `g` (as vertex maps, not up to
/// automorphism). Exponential; meant for small graphs.
pub fn all_induced_embeddings(g: &Graph, pattern: &Graph) -> Vec<Embedding> {
    let mut out = Vec::new();
    search_embeddings(g, pattern, false, &mut |map| {
        out.push(Embedding::unchecked(map.to_vec()));
        false
    });
    out
}

/// Looks for an induced `k S_m` (`k` disjoint stars `K_{1,m}`). The returned
/// embedding is of `star_forest(&[m; k])`, whose star `i` has its centre at
/// `i * (m + 1)` followed by its leaves.
pub fn find_star_forest_pattern(g: &Graph, k: usize, m: usize) -> Option<Embedding> {
    let centers: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= m).collect();
    let mut chosen = Vec::with_capacity(k);
    let mut result = None;
    choose_centers(g, k, m, &centers, 0, &mut chosen, &mut result);
    if let Some(e) = &result {
        debug_assert!(e.is_valid(&star_forest(&vec![m; k]), g));
    }
    result
}

fn choose_centers(
    g: &Graph,
    k: usize,
    m: usize,
    centers: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    result: &mut Option<Embedding>,
) -> bool {
    if chosen.len() == k {
        return assign_leaves(g, m, chosen, result);
    }
    for idx in from..centers.len() {
        if centers.len() - idx < k - chosen.len() {
            break;
        }
        let c = centers[idx];
        if chosen.iter().any(|&d| g.has_edge(c, d)) {
            continue;
        }
        chosen.push(c);
        if choose_centers(g, k, m, centers, idx + 1, chosen, result) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn assign_leaves(g: &Graph, m: usize, centers: &[usize], result: &mut Option<Embedding>) -> bool {
    // Leaves of star i must see c_i and no other centre.
    let private: Vec<FixedBitSet> = centers
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let mut s = g.neighbor_set(c).clone();
            for (j, &d) in centers.iter().enumerate() {
                if j != i {
                    s.difference_with(g.neighbor_set(d));
                }
            }
            s
        })
        .collect();
    if private.iter().any(|s| s.count_ones(..) < m) {
        return false;
    }
    let mut leaves: Vec<Vec<usize>> = vec![Vec::new(); centers.len()];
    let mut blocked = FixedBitSet::with_capacity(g.vertex_count());
    if pick_leaves(g, m, &private, 0, &mut leaves, &mut blocked) {
        let mut map = Vec::with_capacity(centers.len() * (m + 1));
        for (c, ls) in centers.iter().zip(&leaves) {
            map.push(*c);
            map.extend(ls);
        }
        *result = Some(Embedding::unchecked(map));
        true
    } else {
        false
    }
}

/// `blocked` holds chosen leaves and their neighbours.
fn pick_leaves(
    g: &Graph,
    m: usize,
    private: &[FixedBitSet],
    star: usize,
    leaves: &mut [Vec<usize>],
    blocked: &mut FixedBitSet,
) -> bool {
    if star == private.len() {
        return true;
    }
    if leaves[star].len() == m {
        return pick_leaves(g, m, private, star + 1, leaves, blocked);
    }
    let last = leaves[star].last().copied();
    let avail: Vec<usize> = private[star]
        .ones()
        .filter(|&v| !blocked.contains(v) && last.is_none_or(|l| v > l))
        .collect();
    let missing = m - leaves[star].len();
    for (i, &v) in avail.iter().enumerate() {
        if avail.len() - i < missing {
            break;
        }
        let saved = blocked.clone();
        blocked.insert(v);
        blocked.union_with(g.neighbor_set(v));
        leaves[star].push(v);
        if pick_leaves(g, m, private, star, leaves, blocked) {
            return true;
        }
        leaves[star].pop();
        *blocked = saved;
    }
    false
}

/// An induced cycle with at least `min_len` vertices, in cyclic order.
///
/// Depth-first search over chordless paths rooted at their smallest vertex;
/// exponential in the worst case.
pub fn find_long_hole(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for s in 0..n {
        let mut path_vertices = vec![s];
        let mut on_path = FixedBitSet::with_capacity(n);
        on_path.insert(s);
        // Vertices adjacent to some path vertex other than s and the tip.
        let mut touched = vec![0u32; n];
        if hole_dfs(g, s, min_len, &mut path_vertices, &mut on_path, &mut touched) {
            return Some(path_vertices);
        }
    }
    None
}

fn hole_dfs(
    g: &Graph,
    s: usize,
    min_len: usize,
    path_vertices: &mut Vec<usize>,
    on_path: &mut FixedBitSet,
    touched: &mut [u32],
) -> bool {
    let tip = *path_vertices.last().unwrap();
    let len = path_vertices.len();
    let candidates: Vec<usize> = g
        .neighbors(tip)
        .filter(|&w| w > s && !on_path.contains(w) && touched[w] == 0)
        .collect();
    for w in candidates {
        let closes = len >= 2 && g.has_edge(w, s);
        if closes {
            if len + 1 >= min_len {
                path_vertices.push(w);
                return true;
            }
            // w sees s, so any longer path through w has the chord ws.
            continue;
        }
        if len >= 2 {
            // The old tip becomes interior: its neighbours can no longer join.
            for x in g.neighbors(tip) {
                touched[x] += 1;
            }
        }
        path_vertices.push(w);
        on_path.insert(w);
        let found = hole_dfs(g, s, min_len, path_vertices, on_path, touched);
        if found {
            return true;
        }
        on_path.set(w, false);
        path_vertices.pop();
        if len >= 2 {
            for x in g.neighbors(tip) {
                touched[x] -= 1;
            }
        }
    }
    false
}

/// Class tags. The string forms are stable and used by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassId {
    Bipartite,
    /// Bipartite permutation graphs.
    Bpg,
    /// `2K_2`-free bipartite graphs.
    Chain,
    DegreeLe1,
    LinearForest,
    StarForest,
    CaterpillarForest,
    /// Bipartite graphs whose components are chain graphs.
    P5FreeBipartite,
    /// Components are paths, except at most two of the form `S_{1,1,k}`.
    BoundaryL,
    /// `BPG ∩ Free(P_{4+i}, H_1, ..., H_{i-1})`, `i >= 1`.
    ClassXi(usize),
    /// Star forests without an induced `k S_k`, `k >= 1`.
    KSkFree(usize),
}

impl ClassId {
    pub const ALL_FIXED: [ClassId; 9] = [
        ClassId::Bipartite,
        ClassId::Bpg,
        ClassId::Chain,
        ClassId::DegreeLe1,
        ClassId::LinearForest,
        ClassId::StarForest,
        ClassId::CaterpillarForest,
        ClassId::P5FreeBipartite,
        ClassId::BoundaryL,
    ];
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassId::Bipartite => write!(f, "bipartite"),
            ClassId::Bpg => write!(f, "bpg"),
            ClassId::Chain => write!(f, "chain"),
            ClassId::DegreeLe1 => write!(f, "degree_le1"),
            ClassId::LinearForest => write!(f, "linear_forest"),
            ClassId::StarForest => write!(f, "star_forest"),
            ClassId::CaterpillarForest => write!(f, "caterpillar_forest"),
            ClassId::P5FreeBipartite => write!(f, "p5free_bipartite"),
            ClassId::BoundaryL => write!(f, "boundary_L"),
            ClassId::ClassXi(i) => write!(f, "class_Xi({i})"),
            ClassId::KSkFree(k) => write!(f, "kSk_free({k})"),
        }
    }
}

impl FromStr for ClassId {
    type Err = Error;

    /// Accepts the display form; parameterised tags also accept `tag:i`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let param = |rest: &str| -> Result<usize> {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| rest.strip_prefix(':'))
                .ok_or_else(|| Error::InvalidParameter(format!("malformed class tag `{s}`")))?;
            let v: usize = inner
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("malformed class parameter in `{s}`")))?;
            if v == 0 {
                return Err(Error::InvalidParameter(format!("class parameter must be >= 1 in `{s}`")));
            }
            Ok(v)
        };
        if let Some(rest) = s.strip_prefix("class_Xi") {
            return Ok(ClassId::ClassXi(param(rest)?));
        }
        if let Some(rest) = s.strip_prefix("kSk_free") {
            return Ok(ClassId::KSkFree(param(rest)?));
        }
        ClassId::ALL_FIXED
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown class `{s}`")))
    }
}

/// Why a graph is not in a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A chordless odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
    /// An induced copy of a forbidden graph.
    Forbidden {
        name: String,
        pattern: Graph,
        embedding: Embedding,
    },
}

impl Certificate {
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Certificate::OddCycle(c) => {
                c.len() % 2 == 1
                    && c.len() >= 3
                    && find_cycle_embedding_valid(g, c)
            }
            Certificate::Forbidden {
                pattern, embedding, ..
            } => embedding.is_valid(pattern, g),
        }
    }
}

fn find_cycle_embedding_valid(g: &Graph, c: &[usize]) -> bool {
    cycle(c.len())
        .map(|cyc| Embedding::new(&cyc, g, c.to_vec()).is_ok())
        .unwrap_or(false)
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based = |vs: &[usize]| {
            vs.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Certificate::OddCycle(c) => write!(f, "odd cycle: {}", one_based(c)),
            Certificate::Forbidden {
                name, embedding, ..
            } => write!(f, "induced {name}: {}", one_based(embedding.map())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// For non-members, a verified obstruction when one is available.
    pub certificate: Option<Certificate>,
}

fn forbidden(g: &Graph, name: &str, pattern: Graph) -> Option<Certificate> {
    find_induced(g, &pattern).map(|embedding| Certificate::Forbidden {
        name: name.to_string(),
        pattern,
        embedding,
    })
}

fn hole_certificate(g: &Graph) -> Option<Certificate> {
    find_long_hole(g, 5).map(|c| Certificate::Forbidden {
        name: format!("C_{}", c.len()),
        pattern: cycle(c.len()).expect("hole has >= 5 vertices"),
        embedding: Embedding::unchecked(c),
    })
}

/// Recognition of bipartite permutation graphs by forbidden induced
/// subgraphs: bipartite, and free of `S_{2,2,2}`, `Sun_3`, `Phi` and every
/// induced cycle on at least five vertices.
pub fn bpg_by_forbidden_subgraphs(g: &Graph) -> Membership {
    let cert = odd_cycle(g)
        .map(Certificate::OddCycle)
        .or_else(|| forbidden(g, "S_{2,2,2}", spider(2, 2, 2).unwrap()))
        .or_else(|| forbidden(g, "Sun_3", sun3()))
        .or_else(|| forbidden(g, "Phi", phi()))
        .or_else(|| hole_certificate(g));
    Membership {
        member: cert.is_none(),
        certificate: cert,
    }
}

/// Recognition of bipartite permutation graphs by construction: the graph
/// is one iff the path-decoder encoder succeeds.
pub fn bpg_by_construction(g: &Graph) -> bool {
    crate::letters::encode_bpg(g).is_ok()
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + components(g).len() == g.vertex_count()
}

fn is_linear_forest(g: &Graph) -> bool {
    g.max_degree() <= 2 && is_forest(g)
}

fn is_star_forest(g: &Graph) -> bool {
    is_forest(g) && g.edges().iter().all(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
}

/// Forests whose non-leaf vertices induce a linear forest.
fn is_caterpillar_forest(g: &Graph) -> bool {
    if !is_forest(g) {
        return false;
    }
    let spine: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= 2).collect();
    g.induced_ordered(&spine).max_degree() <= 2
}

fn is_chain(g: &Graph) -> bool {
    odd_cycle(g).is_none() && find_induced(g, &matching(2)).is_none()
}

fn is_p5free_bipartite(g: &Graph) -> bool {
    odd_cycle(g).is_none()
        && components(g)
            .iter()
            .all(|c| find_induced(&g.induced_ordered(c), &matching(2)).is_none())
}

/// `S_{1,1,k}` for some `k >= 1`: a tree with one vertex of degree 3, the
/// rest of degree at most 2, and at least two leaves next to the centre.
fn is_fork(c: &Graph) -> bool {
    if !is_forest(c) || components(c).len() != 1 {
        return false;
    }
    let centers: Vec<usize> = (0..c.vertex_count()).filter(|&v| c.degree(v) >= 3).collect();
    match centers.as_slice() {
        [z] => c.degree(*z) == 3 && c.neighbors(*z).filter(|&w| c.degree(w) == 1).count() >= 2,
        _ => false,
    }
}

fn is_boundary_l(g: &Graph) -> bool {
    let mut forks = 0;
    for comp in components(g) {
        let c = g.induced_ordered(&comp);
        if is_linear_forest(&c) {
            continue;
        }
        if is_fork(&c) {
            forks += 1;
        } else {
            return false;
        }
    }
    forks <= 2
}

fn decide(c: ClassId, g: &Graph) -> bool {
    match c {
        ClassId::Bipartite => odd_cycle(g).is_none(),
        ClassId::Bpg => bpg_by_forbidden_subgraphs(g).member,
        ClassId::Chain => is_chain(g),
        ClassId::DegreeLe1 => g.max_degree() <= 1,
        ClassId::LinearForest => is_linear_forest(g),
        ClassId::StarForest => is_star_forest(g),
        ClassId::CaterpillarForest => is_caterpillar_forest(g),
        ClassId::P5FreeBipartite => is_p5free_bipartite(g),
        ClassId::BoundaryL => is_boundary_l(g),
        ClassId::ClassXi(i) => {
            bpg_by_forbidden_subgraphs(g).member
                && find_induced(g, &path(4 + i).unwrap()).is_none()
                && (1..i).all(|j| find_induced(g, &hgraph(j).unwrap()).is_none())
        }
        ClassId::KSkFree(k) => is_star_forest(g) && find_star_forest_pattern(g, k, k).is_none(),
    }
}

/// Looks for an obstruction from the forbidden-subgraph description of the
/// class. Only called on non-members.
fn obstruction(c: ClassId, g: &Graph) -> Option<Certificate> {
    let bpg = || bpg_by_forbidden_subgraphs(g).certificate;
    let c4 = || forbidden(g, "C_4", cycle(4).unwrap());
    match c {
        ClassId::Bipartite => odd_cycle(g).map(Certificate::OddCycle),
        ClassId::Bpg => bpg(),
        ClassId::Chain => odd_cycle(g)
            .map(Certificate::OddCycle)
            .or_else(|| forbidden(g, "2K_2", matching(2))),
        ClassId::DegreeLe1 => forbidden(g, "P_3", path(3).unwrap())
            .or_else(|| forbidden(g, "K_3", cycle(3).unwrap())),
        ClassId::LinearForest => {
            bpg().or_else(|| forbidden(g, "K_{1,3}", star(3))).or_else(c4)
        }
        ClassId::StarForest => bpg()
            .or_else(|| forbidden(g, "P_4", path(4).unwrap()))
            .or_else(c4),
        ClassId::CaterpillarForest => bpg().or_else(c4),
        ClassId::P5FreeBipartite => odd_cycle(g)
            .map(Certificate::OddCycle)
            .or_else(|| forbidden(g, "P_5", path(5).unwrap())),
        ClassId::BoundaryL => bpg()
            .or_else(c4)
            .or_else(|| forbidden(g, "K_{1,4}", star(4)))
            .or_else(|| forbidden(g, "S_{1,2,2}", spider(1, 2, 2).unwrap()))
            .or_else(|| forbidden(g, "3K_{1,3}", copies(&star(3), 3)))
            .or_else(|| {
                (1..=g.vertex_count().saturating_sub(4))
                    .find_map(|j| forbidden(g, &format!("H_{j}"), hgraph(j).unwrap()))
            }),
        ClassId::ClassXi(i) => bpg()
            .or_else(|| forbidden(g, &format!("P_{}", 4 + i), path(4 + i).unwrap()))
            .or_else(|| (1..i).find_map(|j| forbidden(g, &format!("H_{j}"), hgraph(j).unwrap()))),
        ClassId::KSkFree(k) => obstruction(ClassId::StarForest, g).or_else(|| {
            find_star_forest_pattern(g, k, k).map(|embedding| Certificate::Forbidden {
                name: format!("{k}S_{k}"),
                pattern: star_forest(&vec![k; k]),
                embedding,
            })
        }),
    }
}

/// Membership with an obstruction for non-members. Certificates are checked
/// against the graph before they are returned.
pub fn classify(c: ClassId, g: &Graph) -> Membership {
    if decide(c, g) {
        return Membership {
            member: true,
            certificate: None,
        };
    }
    let certificate = obstruction(c, g).filter(|cert| cert.verify(g));
    Membership {
        member: false,
        certificate,
    }
}

pub fn is_member(c: ClassId, g: &Graph) -> bool {
    decide(c, g)
}
