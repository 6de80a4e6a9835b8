//! Letter graphs, Parikh graphs and their encoders.
//!
//! A letter graph is decoded from a word `w` and a decoder `D` of ordered
//! letter pairs: positions `i < j` are adjacent iff `(w_i, w_j)` is in `D`.
//! With the path decoder `{(a_i, a_{i+1})}` these are exactly the bipartite
//! permutation graphs.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_code, components, two_coloring, CanonicalCode, Graph};

/// Alphabet, decoder and word. Letters are stored as indices into the
/// alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterSystem {
    alphabet: Vec<String>,
    decoder: Vec<(usize, usize)>,
    word: Vec<usize>,
    /// `vertex_map[i]` is the vertex represented by position `i`.
    vertex_map: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct LetterSystemJson {
    alphabet: Vec<String>,
    decoder: Vec<(String, String)>,
    word: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex_map: Option<Vec<usize>>,
}

impl LetterSystem {
    pub fn new(alphabet: Vec<String>, decoder: Vec<(usize, usize)>, word: Vec<usize>) -> Result<Self> {
        let k = alphabet.len();
        let distinct: HashSet<&String> = alphabet.iter().collect();
        if distinct.len() != k {
            return Err(Error::MalformedSystem("repeated alphabet letter".into()));
        }
        if let Some(&l) = word.iter().find(|&&l| l >= k) {
            return Err(Error::MalformedSystem(format!("word letter index {l} outside the alphabet")));
        }
        if decoder.iter().any(|&(x, y)| x >= k || y >= k) {
            return Err(Error::MalformedSystem("decoder pair outside the alphabet".into()));
        }
        let mut decoder = decoder;
        decoder.sort_unstable();
        decoder.dedup();
        Ok(LetterSystem {
            alphabet,
            decoder,
            word,
            vertex_map: None,
        })
    }

    /// Path-decoder system over `a1..ar` for a word of 0-based letter indices.
    pub fn path(r: usize, word: Vec<usize>) -> Result<Self> {
        let alphabet = (1..=r).map(|i| format!("a{i}")).collect();
        let decoder = (1..r).map(|i| (i - 1, i)).collect();
        LetterSystem::new(alphabet, decoder, word)
    }

    /// Attaches a position-to-vertex map (a permutation of `0..len`).
    pub fn with_vertex_map(mut self, map: Vec<usize>) -> Result<Self> {
        let mut sorted = map.clone();
        sorted.sort_unstable();
        if sorted != (0..self.word.len()).collect::<Vec<_>>() {
            return Err(Error::MalformedSystem("vertex map is not a permutation of the positions".into()));
        }
        self.vertex_map = Some(map);
        Ok(self)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn decoder(&self) -> &[(usize, usize)] {
        &self.decoder
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn vertex_map(&self) -> Option<&[usize]> {
        self.vertex_map.as_deref()
    }

    pub fn is_path_decoder(&self) -> bool {
        let r = self.alphabet.len();
        self.decoder.len() == r.saturating_sub(1) && self.decoder.iter().enumerate().all(|(i, &p)| p == (i, i + 1))
    }

    /// The decoded graph on positions `0..len`.
    pub fn letter_graph(&self) -> Graph {
        let k = self.alphabet.len();
        let mut rule = vec![false; k * k];
        for &(x, y) in &self.decoder {
            rule[x * k + y] = true;
        }
        let n = self.word.len();
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if rule[self.word[i] * k + self.word[j]] {
                    g.connect(i, j);
                }
            }
        }
        g
    }

    /// The decoded graph with position `i` relabelled to `vertex_map[i]`.
    pub fn mapped_graph(&self) -> Graph {
        let g = self.letter_graph();
        match &self.vertex_map {
            Some(map) => g.relabel(map).expect("vertex map is a permutation"),
            None => g,
        }
    }

    pub fn to_json(&self) -> String {
        let letter = |i: usize| self.alphabet[i].clone();
        let raw = LetterSystemJson {
            alphabet: self.alphabet.clone(),
            decoder: self.decoder.iter().map(|&(x, y)| (letter(x), letter(y))).collect(),
            word: self.word.iter().map(|&l| letter(l)).collect(),
            vertex_map: self.vertex_map.as_ref().map(|m| m.iter().map(|v| v + 1).collect()),
        };
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: LetterSystemJson = serde_json::from_str(text)?;
        let index = |s: &String| {
            raw.alphabet
                .iter()
                .position(|a| a == s)
                .ok_or_else(|| Error::MalformedSystem(format!("letter `{s}` not in the alphabet")))
        };
        let decoder = raw
            .decoder
            .iter()
            .map(|(x, y)| Ok((index(x)?, index(y)?)))
            .collect::<Result<Vec<_>>>()?;
        let word = raw.word.iter().map(index).collect::<Result<Vec<_>>>()?;
        let sys = LetterSystem::new(raw.alphabet.clone(), decoder, word)?;
        match raw.vertex_map {
            None => Ok(sys),
            Some(m) => {
                if m.contains(&0) {
                    return Err(Error::MalformedSystem("vertex map entries are 1-based".into()));
                }
                sys.with_vertex_map(m.into_iter().map(|v| v - 1).collect())
            }
        }
    }
}

pub fn letter_graph(sys: &LetterSystem) -> Graph {
    sys.letter_graph()
}

/// Letter graph of a word of 0-based letter indices under the path decoder:
/// `i < j` adjacent iff `w_j = w_i + 1`.
pub fn path_word_graph(word: &[usize]) -> Graph {
    let n = word.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if word[j] == word[i] + 1 {
                g.connect(i, j);
            }
        }
    }
    g
}

/// Parikh graph over an ordered alphabet: the letter graph with the
/// successor-pair decoder.
pub fn parikh_graph(alphabet: &[char], word: &str) -> Result<Graph> {
    let indices = word
        .chars()
        .map(|c| {
            alphabet
                .iter()
                .position(|&a| a == c)
                .ok_or_else(|| Error::MalformedSystem(format!("letter `{c}` not in the alphabet")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(path_word_graph(&indices))
}

/// Letter graph of a word over `{a, b}` with decoder `{(a, b)}`.
pub fn chain_word_graph(word: &str) -> Result<Graph> {
    parikh_graph(&['a', 'b'], word)
}

/// Greedy subsequence test.
pub fn subword_embed<T: PartialEq>(needle: &[T], haystack: &[T]) -> bool {
    let mut it = haystack.iter();
    needle.iter().all(|x| it.any(|y| y == x))
}

/// The two `{a, b}` words of a connected chain graph; `w2` is the reverse
/// of `w1` with the letters swapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWordPair {
    pub w1: String,
    pub w2: String,
}

/// Reverses a word over `{a, b}` and swaps the letters.
pub fn reverse_complement(w: &str) -> String {
    w.chars().rev().map(|c| if c == 'a' { 'b' } else { 'a' }).collect()
}

/// `w1` of [`encode_chain`] together with its position-to-vertex map. The
/// side containing the smallest vertex is written with `a`.
pub fn encode_chain_mapped(g: &Graph) -> Result<(String, Vec<usize>)> {
    let n = g.vertex_count();
    if n < 2 || components(g).len() != 1 {
        return Err(Error::NotConnectedChain);
    }
    let side = two_coloring(g).ok_or(Error::NotConnectedChain)?;
    let mut a_side: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    a_side.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut b_by_degree = vec![Vec::new(); a_side.len() + 1];
    for v in (0..n).filter(|&v| side[v]) {
        b_by_degree[g.degree(v)].push(v);
    }
    let mut word = String::with_capacity(n);
    let mut map = Vec::with_capacity(n);
    for (d, &a) in a_side.iter().enumerate() {
        word.push('a');
        map.push(a);
        for &b in &b_by_degree[d + 1] {
            word.push('b');
            map.push(b);
        }
    }
    if !represents(&chain_word_graph(&word)?, &map, g) {
        return Err(Error::NotConnectedChain);
    }
    Ok((word, map))
}

pub fn encode_chain(g: &Graph) -> Result<ChainWordPair> {
    let (w1, _) = encode_chain_mapped(g)?;
    let w2 = reverse_complement(&w1);
    Ok(ChainWordPair { w1, w2 })
}

/// True when position `i` of the decoded graph `h` stands for `map[i]` in `g`
/// and all adjacencies agree.
fn represents(h: &Graph, map: &[usize], g: &Graph) -> bool {
    let n = map.len();
    h.vertex_count() == n
        && g.vertex_count() == n
        && (0..n).all(|i| (i + 1..n).all(|j| h.has_edge(i, j) == g.has_edge(map[i], map[j])))
}

/// Topological order of the precedence constraints implied by a levelling,
/// or `None` if the constraints are cyclic or some edge is not between
/// consecutive levels. Ties go to the smaller vertex.
fn order_from_levels(g: &Graph, level: &[i64]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for u in 0..n {
        for v in 0..n {
            if level[v] != level[u] + 1 {
                if g.has_edge(u, v) && (level[v] - level[u]).abs() != 1 {
                    return None;
                }
                continue;
            }
            let (from, to) = if g.has_edge(u, v) { (u, v) } else { (v, u) };
            succ[from].push(to);
            indeg[to] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &w in &succ[u] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn word_from_order(level: &[i64], order: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let min = level.iter().copied().min().unwrap_or(0);
    let word = order.iter().map(|&v| (level[v] - min) as usize).collect();
    (word, order.to_vec())
}

fn bfs_levels(g: &Graph, s: usize) -> Vec<i64> {
    let d = crate::graph::distances(g);
    d[s].iter().map(|x| x.map_or(0, |x| x as i64)).collect()
}

/// Backtracking over all height functions (every edge changes the level by
/// exactly one) with incremental cycle detection on the precedence digraph.
struct LevelSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<usize>,
    level: Vec<Option<i64>>,
    succ: Vec<Vec<usize>>,
}

impl LevelSearch<'_> {
    fn run(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        let base = self.level[self.parent[v]].expect("parent placed first");
        let options: &[i64] = if idx == 1 { &[1] } else { &[1, -1] };
        for &delta in options {
            let lv = base + delta;
            if let Some(added) = self.place(v, lv) {
                if self.run(idx + 1) {
                    return true;
                }
                self.unplace(v, added);
            }
        }
        false
    }

    /// Places `v` at level `lv` if consistent; returns the constraint edges added.
    fn place(&mut self, v: usize, lv: i64) -> Option<Vec<(usize, usize)>> {
        let g = self.g;
        let mut added = Vec::new();
        for u in 0..g.vertex_count() {
            let Some(lu) = self.level[u] else { continue };
            let adj = g.has_edge(u, v);
            if adj && (lu - lv).abs() != 1 {
                return None;
            }
            if (lu - lv).abs() == 1 {
                let (low, high) = if lu < lv { (u, v) } else { (v, u) };
                added.push(if adj { (low, high) } else { (high, low) });
            }
        }
        for &(a, b) in &added {
            self.succ[a].push(b);
        }
        self.level[v] = Some(lv);
        if self.reaches(v, v) {
            self.unplace(v, added);
            return None;
        }
        Some(added)
    }

    fn unplace(&mut self, v: usize, added: Vec<(usize, usize)>) {
        for &(a, _) in added.iter().rev() {
            self.succ[a].pop();
        }
        self.level[v] = None;
    }

    /// Whether a non-empty path leads from `from` to `target`.
    fn reaches(&self, from: usize, target: usize) -> bool {
        let mut seen = vec![false; self.succ.len()];
        let mut stack: Vec<usize> = self.succ[from].clone();
        while let Some(x) = stack.pop() {
            if x == target {
                return true;
            }
            if !std::mem::replace(&mut seen[x], true) {
                stack.extend(&self.succ[x]);
            }
        }
        false
    }
}

fn backtrack_levels(g: &Graph) -> Option<Vec<i64>> {
    let n = g.vertex_count();
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for w in g.neighbors(u) {
            if !std::mem::replace(&mut seen[w], true) {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut level = vec![None; n];
    level[0] = Some(0);
    let mut search = LevelSearch {
        g,
        order,
        parent,
        level,
        succ: vec![Vec::new(); n],
    };
    search
        .run(1)
        .then(|| search.level.iter().map(|l| l.expect("all placed")).collect())
}

/// Any path-decoder word for a connected graph, with its position map.
fn initial_expression(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    for s in 0..n {
        let level = bfs_levels(g, s);
        if let Some(order) = order_from_levels(g, &level) {
            return Some(word_from_order(&level, &order));
        }
    }
    let level = backtrack_levels(g)?;
    let order = order_from_levels(g, &level)?;
    Some(word_from_order(&level, &order))
}

/// Applies the index-decreasing rewrite moves until none applies: shift all
/// letters down while `a1` is missing, and replace an occurrence of `a_t`
/// (`t >= 3`) that has no `a_{t-1}` and no `a_{t+1}` to its right by an
/// `a_{t-2}` at the front. Every move is checked by decoding.
fn normalize(word: &mut Vec<usize>, map: &mut Vec<usize>, g: &Graph) {
    loop {
        if let Some(&min) = word.iter().min() {
            if min > 0 {
                word.iter_mut().for_each(|l| *l -= min);
            }
        }
        let n = word.len();
        let mut applied = false;
        // Scan right to left, tracking which letters occur to the right.
        let top = word.iter().copied().max().unwrap_or(0);
        let mut right = vec![false; top + 2];
        for j in (0..n).rev() {
            let t = word[j];
            if t >= 2 && !right[t - 1] && !right[t + 1] {
                let mut w2 = Vec::with_capacity(n);
                w2.push(t - 2);
                w2.extend(word[..j].iter().chain(&word[j + 1..]));
                let mut m2 = Vec::with_capacity(n);
                m2.push(map[j]);
                m2.extend(map[..j].iter().chain(&map[j + 1..]));
                if represents(&path_word_graph(&w2), &m2, g) {
                    *word = w2;
                    *map = m2;
                    applied = true;
                    break;
                }
            }
            right[t] = true;
        }
        if !applied {
            return;
        }
    }
}

/// Normalized path-decoder word of a connected bipartite permutation graph
/// (0-based letters, position map into `g`), or `None` if `g` is not one.
pub fn encode_bpg_component(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let (mut word, mut map) = initial_expression(g)?;
    if !represents(&path_word_graph(&word), &map, g) {
        return None;
    }
    normalize(&mut word, &mut map, g);
    Some((word, map))
}

/// Path-decoder expression over at most `floor(n/2) + 1` letters, or
/// [`Error::NotBpg`]. Components are encoded separately and concatenated in
/// reverse order, each starting on the last letter of the one after it.
pub fn encode_bpg(g: &Graph) -> Result<LetterSystem> {
    if two_coloring(g).is_none() {
        return Err(Error::NotBpg);
    }
    let comps = components(g);
    let mut parts = Vec::with_capacity(comps.len());
    let mut offset = 0;
    for comp in &comps {
        let sub = g.induced_ordered(comp);
        let (word, map) = encode_bpg_component(&sub).ok_or(Error::NotBpg)?;
        let top = word.iter().copied().max().unwrap_or(0);
        parts.push((word.into_iter().map(|l| l + offset).collect::<Vec<_>>(), map.into_iter().map(|i| comp[i]).collect::<Vec<_>>()));
        offset += top;
    }
    let mut word = Vec::with_capacity(g.vertex_count());
    let mut map = Vec::with_capacity(g.vertex_count());
    for (w, m) in parts.into_iter().rev() {
        word.extend(w);
        map.extend(m);
    }
    let sys = LetterSystem::path(offset + 1, word)?.with_vertex_map(map.clone())?;
    if !represents(&sys.letter_graph(), &map, g) {
        return Err(Error::NotBpg);
    }
    Ok(sys)
}

/// Largest graph handled by the exhaustive word searches.
pub const WORD_SEARCH_CAP: usize = 8;
/// Largest alphabet for [`lettericity_exact`].
pub const LETTERICITY_K_CAP: usize = 3;

/// Edge masks of graphs on at most 8 vertices use bit `8i + j` for `i < j`.
fn mask_graph(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if mask >> (8 * i + j) & 1 == 1 {
                g.connect(i, j);
            }
        }
    }
    g
}

fn mask_degrees(n: usize, mask: u64) -> Vec<usize> {
    let mut d = vec![0; n];
    for i in 0..n {
        for j in i + 1..n {
            if mask >> (8 * i + j) & 1 == 1 {
                d[i] += 1;
                d[j] += 1;
            }
        }
    }
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Matches candidate edge masks against a fixed graph, invariants first.
struct Target {
    n: usize,
    edges: u32,
    degrees: Vec<usize>,
    code: CanonicalCode,
}

impl Target {
    fn new(g: &Graph) -> Self {
        Target {
            n: g.vertex_count(),
            edges: g.edge_count() as u32,
            degrees: g.degree_sequence(),
            code: canonical_code(g),
        }
    }

    fn matches(&self, mask: u64) -> bool {
        mask.count_ones() == self.edges
            && mask_degrees(self.n, mask) == self.degrees
            && canonical_code(&mask_graph(self.n, mask)) == self.code
    }
}

/// Words of length `n` over exactly `k` letters whose letters first occur in
/// the order `0, 1, ..., k-1`.
fn restricted_growth_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, w: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if w.len() == n {
            if used == k {
                out.push(w.clone());
            }
            return;
        }
        if k - used > n - w.len() {
            return;
        }
        for l in 0..=used.min(k - 1) {
            w.push(l);
            rec(n, k, w, used.max(l + 1), out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

/// A letter-graph expression of `g` over exactly `k` letters with an
/// arbitrary decoder, if one exists. Exhaustive.
pub fn find_letter_representation(g: &Graph, k: usize) -> Result<Option<LetterSystem>> {
    let n = g.vertex_count();
    if n > WORD_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "letter representation search",
            n,
            cap: WORD_SEARCH_CAP,
        });
    }
    if k == 0 || k > LETTERICITY_K_CAP {
        return Err(Error::InvalidParameter(format!("alphabet size must be in 1..={LETTERICITY_K_CAP}")));
    }
    let target = Target::new(g);
    let found = restricted_growth_words(n, k).into_par_iter().find_map_first(|w| {
        let mut pair_masks = vec![0u64; k * k];
        for i in 0..n {
            for j in i + 1..n {
                pair_masks[w[i] * k + w[j]] |= 1 << (8 * i + j);
            }
        }
        let mut seen = HashSet::new();
        (0u32..1 << (k * k)).find_map(|d| {
            let mask = (0..k * k)
                .filter(|&p| d >> p & 1 == 1)
                .fold(0, |m, p| m | pair_masks[p]);
            (seen.insert(mask) && target.matches(mask)).then(|| (w.clone(), d))
        })
    });
    let Some((word, d)) = found else { return Ok(None) };
    let alphabet = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let decoder = (0..k * k).filter(|&p| d >> p & 1 == 1).map(|p| (p / k, p % k)).collect();
    Ok(Some(LetterSystem::new(alphabet, decoder, word)?))
}

/// Smallest `k <= kmax` such that `g` is a letter graph over `k` letters.
pub fn lettericity_exact(g: &Graph, kmax: usize) -> Result<Option<usize>> {
    let n = g.vertex_count();
    if n > WORD_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "exact lettericity",
            n,
            cap: WORD_SEARCH_CAP,
        });
    }
    if kmax > LETTERICITY_K_CAP {
        return Err(Error::CapExceeded {
            what: "exact lettericity alphabet",
            n: kmax,
            cap: LETTERICITY_K_CAP,
        });
    }
    if n == 0 {
        return Ok(Some(0));
    }
    for k in 1..=kmax.min(n) {
        if find_letter_representation(g, k)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Path-decoder edge masks of all words of length `n` over `r` letters.
fn path_word_masks(n: usize, r: usize) -> HashSet<u64> {
    let total = (r as u64).pow(n as u32);
    (0..total)
        .into_par_iter()
        .fold(HashSet::new, |mut set, mut idx| {
            let mut w = [0usize; WORD_SEARCH_CAP];
            for slot in w.iter_mut().take(n) {
                *slot = (idx % r as u64) as usize;
                idx /= r as u64;
            }
            let mut mask = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    if w[j] == w[i] + 1 {
                        mask |= 1 << (8 * i + j);
                    }
                }
            }
            set.insert(mask);
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Smallest `r <= rmax` such that `g` is a path-decoder letter graph over
/// `a1..ar`. Exhaustive over words.
pub fn min_path_alphabet(g: &Graph, rmax: usize) -> Result<Option<usize>> {
    let n = g.vertex_count();
    if n > WORD_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "path-decoder alphabet search",
            n,
            cap: WORD_SEARCH_CAP,
        });
    }
    if n == 0 {
        return Ok(Some(0));
    }
    let target = Target::new(g);
    for r in 1..=rmax.min(n) {
        if path_word_masks(n, r).into_iter().any(|m| target.matches(m)) {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Every bipartite permutation graph on `n` vertices up to isomorphism,
/// canonically labelled and sorted by canonical code. Exhaustive over
/// path-decoder words on `floor(n/2) + 1` letters.
pub fn enumerate_bpg(n: usize) -> Result<Vec<Graph>> {
    if n > WORD_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "word-based BPG enumeration",
            n,
            cap: WORD_SEARCH_CAP,
        });
    }
    let masks: Vec<u64> = path_word_masks(n, n / 2 + 1).into_iter().collect();
    let codes: BTreeSet<CanonicalCode> = masks
        .par_iter()
        .map(|&m| canonical_code(&mask_graph(n, m)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(codes.iter().map(CanonicalCode::to_graph).collect())
}
