//! Induced containment between `P_5`-free bipartite graphs, whose components
//! are chain graphs, by a maximum-weight assignment between components.

use crate::error::{Error, Result};
use crate::graph::{components, Embedding, Graph};
use crate::letters::{encode_chain_mapped, reverse_complement, subword_embed, ChainWordPair};
use crate::recognition::{is_member, ClassId};

use super::hungarian::max_weight_assignment;

/// Independence number of the chain graph of an `{a, b}` word: the best cut
/// point, counting `b`s before it and `a`s after it.
pub fn independence_from_word(w: &str) -> usize {
    best_cut(w.as_bytes()).0
}

fn best_cut(w: &[u8]) -> (usize, usize) {
    let total_a = w.iter().filter(|&&c| c == b'a').count();
    let mut best = (total_a, 0);
    let (mut b_before, mut a_before) = (0, 0);
    for (k, &c) in w.iter().enumerate() {
        if c == b'a' {
            a_before += 1;
        } else {
            b_before += 1;
        }
        let v = b_before + total_a - a_before;
        if v > best.0 {
            best = (v, k + 1);
        }
    }
    best
}

/// `(weight, first, last, which)`.
type Window = (usize, usize, usize, usize);

/// Best window of the host word for embedding either word of `h`:
/// `(weight, first, last, which)` where `which` is 0 for `w1`, 1 for `w2`.
fn best_window(wg: &[u8], h: [&[u8]; 2]) -> Option<Window> {
    if !h.iter().any(|w| subword_embed(w, wg)) {
        return None;
    }
    let t = wg.len();
    let mut b_prefix = vec![0; t + 1];
    let mut a_suffix = vec![0; t + 1];
    for k in 0..t {
        b_prefix[k + 1] = b_prefix[k] + usize::from(wg[k] == b'b');
    }
    for k in (0..t).rev() {
        a_suffix[k] = a_suffix[k + 1] + usize::from(wg[k] == b'a');
    }
    let mut best: Option<Window> = None;
    for i in (0..t).filter(|&i| wg[i] == b'a') {
        for j in (i + 1..t).filter(|&j| wg[j] == b'b') {
            let nu = b_prefix[i] + a_suffix[j + 1];
            if best.is_some_and(|b| b.0 >= nu) {
                continue;
            }
            if let Some(which) = (0..2).find(|&k| subword_embed(h[k], &wg[i..=j])) {
                best = Some((nu, i, j, which));
            }
        }
    }
    best
}

/// Largest number of isolated vertices a connected chain component (word
/// `wg`) can host next to an induced copy of the connected chain graph with
/// words `h`; `None` when there is no such copy.
pub fn component_weight(wg: &str, h: &ChainWordPair) -> Option<usize> {
    best_window(wg.as_bytes(), [h.w1.as_bytes(), h.w2.as_bytes()]).map(|b| b.0)
}

/// Which decision rule to apply to the assignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingRule {
    /// Pads the pattern side with dummy components that each take the host
    /// component's independence number, and counts the host's isolated
    /// vertices as capacity.
    Padded,
    /// Matches the pattern's non-trivial components only and compares the
    /// matching weight with the pattern's isolated vertices.
    Literal,
}

struct Component {
    word: String,
    /// `vertices[k]` is the vertex at word position `k`.
    vertices: Vec<usize>,
}

fn chain_components(g: &Graph) -> (Vec<Component>, Vec<usize>) {
    let mut nontrivial = Vec::new();
    let mut isolated = Vec::new();
    for comp in components(g) {
        if comp.len() == 1 {
            isolated.push(comp[0]);
            continue;
        }
        let (word, map) = encode_chain_mapped(&g.induced_ordered(&comp)).expect("component is a connected chain graph");
        nontrivial.push(Component {
            word,
            vertices: map.into_iter().map(|i| comp[i]).collect(),
        });
    }
    (nontrivial, isolated)
}

#[derive(Clone, Debug)]
pub struct P5FreeIsi {
    pub embeds: bool,
    /// `weights[r][c]` between host component `r` and pattern component `c`;
    /// `None` stands for minus infinity.
    pub weights: Vec<Vec<Option<usize>>>,
    /// A verified embedding when `embeds` holds under the padded rule.
    pub embedding: Option<Embedding>,
}

/// Decides whether `h` is an induced subgraph of `g`, both `P_5`-free
/// bipartite, with the padded rule.
pub fn isi_p5free(g: &Graph, h: &Graph) -> Result<P5FreeIsi> {
    isi_p5free_with(g, h, MatchingRule::Padded)
}

pub fn isi_p5free_with(g: &Graph, h: &Graph, rule: MatchingRule) -> Result<P5FreeIsi> {
    if !is_member(ClassId::P5FreeBipartite, g) || !is_member(ClassId::P5FreeBipartite, h) {
        return Err(Error::Unsupported("matching solver needs P5-free bipartite inputs".into()));
    }
    let (gc, g_iso) = chain_components(g);
    let (hc, h_iso) = chain_components(h);
    let h_words: Vec<[String; 2]> = hc.iter().map(|c| [c.word.clone(), reverse_complement(&c.word)]).collect();
    let windows: Vec<Vec<Option<Window>>> = gc
        .iter()
        .map(|r| {
            h_words
                .iter()
                .map(|[w1, w2]| best_window(r.word.as_bytes(), [w1.as_bytes(), w2.as_bytes()]))
                .collect()
        })
        .collect();
    let weights: Vec<Vec<Option<usize>>> = windows
        .iter()
        .map(|row| row.iter().map(|w| w.map(|b| b.0)).collect())
        .collect();
    let (rows, cols) = (gc.len(), hc.len());
    let no = |weights| {
        Ok(P5FreeIsi {
            embeds: false,
            weights,
            embedding: None,
        })
    };
    if cols > rows {
        return no(weights);
    }
    let sentinel = -((g.vertex_count() * rows * cols + 1) as i64);
    let value = |w: Option<usize>| w.map_or(sentinel, |x| x as i64);
    match rule {
        MatchingRule::Literal => {
            let matrix: Vec<Vec<i64>> = (0..cols).map(|c| (0..rows).map(|r| value(weights[r][c])).collect()).collect();
            let (assign, total) = max_weight_assignment(&matrix);
            let finite = assign.iter().enumerate().all(|(c, &r)| weights[r][c].is_some());
            Ok(P5FreeIsi {
                embeds: finite && total >= h_iso.len() as i64,
                weights,
                embedding: None,
            })
        }
        MatchingRule::Padded => {
            let matrix: Vec<Vec<i64>> = (0..rows)
                .map(|r| {
                    (0..rows)
                        .map(|c| {
                            if c < cols {
                                value(weights[r][c])
                            } else {
                                independence_from_word(&gc[r].word) as i64
                            }
                        })
                        .collect()
                })
                .collect();
            let (assign, total) = max_weight_assignment(&matrix);
            let finite = assign.iter().enumerate().all(|(r, &c)| c >= cols || weights[r][c].is_some());
            if !(finite && total + g_iso.len() as i64 >= h_iso.len() as i64) {
                return no(weights);
            }
            let mut map = vec![usize::MAX; h.vertex_count()];
            let mut free = g_iso.clone();
            for (r, &c) in assign.iter().enumerate() {
                let host = &gc[r];
                let wg = host.word.as_bytes();
                if c >= cols {
                    let (_, cut) = best_cut(wg);
                    free.extend((0..wg.len()).filter(|&k| (k < cut) == (wg[k] == b'b')).map(|k| host.vertices[k]));
                    continue;
                }
                let (_, i, j, which) = windows[r][c].expect("finite weight");
                let pattern = h_words[c][which].as_bytes();
                let mut positions = Vec::with_capacity(pattern.len());
                let mut k = i;
                for &letter in pattern {
                    while wg[k] != letter {
                        k += 1;
                    }
                    positions.push(k);
                    k += 1;
                }
                let hv = &hc[c].vertices;
                for (idx, &pos) in positions.iter().enumerate() {
                    // The second word lists the first one's vertices in reverse.
                    let hvert = if which == 0 { hv[idx] } else { hv[hv.len() - 1 - idx] };
                    map[hvert] = host.vertices[pos];
                }
                free.extend((0..i).filter(|&k| wg[k] == b'b').map(|k| host.vertices[k]));
                free.extend((j + 1..wg.len()).filter(|&k| wg[k] == b'a').map(|k| host.vertices[k]));
            }
            for (&v, &u) in h_iso.iter().zip(&free) {
                map[v] = u;
            }
            let embedding = Embedding::new(h, g, map)
                .map_err(|_| Error::Unsupported("assembled embedding failed verification".into()))?;
            Ok(P5FreeIsi {
                embeds: true,
                weights,
                embedding: Some(embedding),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;
    use crate::graph::named::{complete, matching, path, star};
    use crate::letters::encode_chain;
    use crate::universal::universal_chain;

    fn k2() -> ChainWordPair {
        encode_chain(&complete(2).unwrap()).unwrap()
    }

    #[test]
    fn window_weights() {
        assert_eq!(component_weight("abab", &k2()), Some(1));
        assert_eq!(component_weight("abbb", &k2()), Some(0));
        let p5 = ChainWordPair {
            w1: "ababa".into(),
            w2: "babab".into(),
        };
        assert_eq!(component_weight("abab", &p5), None);
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_from_word("abab"), 2);
        assert_eq!(independence_from_word("abbb"), 3);
        assert_eq!(independence_from_word("aabb"), 2);
    }

    #[test]
    fn padding_witness() {
        let g = matching(2);
        let h = disjoint_union(&[complete(2).unwrap(), Graph::new(1)]);
        let padded = isi_p5free(&g, &h).unwrap();
        assert!(padded.embeds);
        assert!(padded.embedding.unwrap().is_valid(&h, &g));
        assert!(!isi_p5free_with(&g, &h, MatchingRule::Literal).unwrap().embeds);
    }

    #[test]
    fn small_instances() {
        let g = disjoint_union(&[star(3), complete(2).unwrap()]);
        let h = disjoint_union(&[star(2), Graph::new(2)]);
        assert!(!isi_p5free(&g, &h).unwrap().embeds);
        let h = disjoint_union(&[path(4).unwrap(), Graph::new(1)]);
        assert!(isi_p5free(&universal_chain(3), &h).unwrap().embeds);
        assert!(isi_p5free(&path(5).unwrap(), &h).is_err());
    }
}
