use std::collections::BTreeSet;

use bpglab::graph::named::{complete, linear_forest, matching, path};
use bpglab::graph::{components, max_independent_set};
use bpglab::isi::{
    columns_A, component_weight, dispatch, embedding_from_solution, isi_auto, isi_bruteforce, isi_linear_forest,
    isi_linear_forest_with, isi_p5free, isi_p5free_with, isi_with, profile_of, MatchingRule, Solver,
};
use bpglab::letters::encode_chain_mapped;
use bpglab::recognition::{all_induced_embeddings, is_member, ClassId};
use bpglab::universal::{enumerate_class, partitions};
use bpglab::{disjoint_union, Graph};

fn linear_forests(n: usize) -> Vec<Graph> {
    partitions(n).into_iter().map(|p| linear_forest(&p).unwrap()).collect()
}

fn p5free(n: usize) -> Vec<Graph> {
    enumerate_class(ClassId::P5FreeBipartite, n, false).unwrap()
}

fn delete(g: &Graph, v: usize) -> Graph {
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v).collect();
    g.induced_subgraph(&rest).unwrap()
}

#[test]
fn ilp_matches_brute_force_both_column_variants() {
    for gn in 1..=7 {
        for g in linear_forests(gn) {
            for hn in 1..=gn {
                for h in linear_forests(hn) {
                    let oracle = isi_bruteforce(&g, &h).is_some();
                    let with = isi_linear_forest(&g, &h).unwrap();
                    assert_eq!(with.embeds(), oracle);
                    assert_eq!(isi_linear_forest_with(&g, &h, false).unwrap().embeds(), oracle);
                    let e = embedding_from_solution(&g, &h, &with).unwrap();
                    assert_eq!(e.is_some(), oracle);
                    if let Some(e) = e {
                        assert!(e.is_valid(&h, &g));
                    }
                }
            }
        }
    }
}

#[test]
fn ilp_rejects_other_graphs() {
    assert!(isi_linear_forest(&complete(3).unwrap(), &path(2).unwrap()).is_err());
    assert!(isi_linear_forest(&path(4).unwrap(), &bpglab::graph::named::star(3)).is_err());
}

#[test]
fn columns_are_the_induced_subforests_of_a_path() {
    for i in 0..=10 {
        let p = path(i.max(1)).unwrap();
        let mut by_subsets = BTreeSet::new();
        if i > 0 {
            for mask in 0u32..1 << i {
                let vs: Vec<usize> = (0..i).filter(|&v| mask >> v & 1 == 1).collect();
                by_subsets.insert(profile_of(&p.induced_subgraph(&vs).unwrap()).unwrap());
            }
        } else {
            by_subsets.insert(profile_of(&Graph::new(0)).unwrap());
        }
        let cols = columns_A(i);
        assert!(cols.len() <= 1 << i);
        let as_set: BTreeSet<_> = cols.iter().cloned().collect();
        assert_eq!(as_set.len(), cols.len(), "duplicate columns for i = {i}");
        assert_eq!(as_set, by_subsets, "i = {i}");
        for c in &cols {
            let weight: usize = c.counts().iter().enumerate().map(|(j, &g)| g * (j + 2)).sum();
            assert!(weight <= i + 1);
        }
    }
}

#[test]
fn matching_matches_brute_force() {
    let hosts: Vec<Graph> = (1..=6).flat_map(p5free).collect();
    let patterns: Vec<Graph> = (1..=5).flat_map(p5free).collect();
    for g in &hosts {
        for h in patterns.iter().filter(|h| h.vertex_count() <= g.vertex_count()) {
            let r = isi_p5free(g, h).unwrap();
            assert_eq!(r.embeds, isi_bruteforce(g, h).is_some(), "{g:?} {h:?}");
            if let Some(e) = &r.embedding {
                assert!(e.is_valid(h, g));
            }
            assert_eq!(r.embeds, r.embedding.is_some());
        }
    }
}

#[test]
fn literal_rule_misses_the_padding_witness() {
    let g = matching(2);
    let h = disjoint_union(&[complete(2).unwrap(), Graph::new(1)]);
    assert!(isi_bruteforce(&g, &h).is_some());
    assert!(isi_p5free(&g, &h).unwrap().embeds);
    assert!(!isi_p5free_with(&g, &h, MatchingRule::Literal).unwrap().embeds);
}

/// MIS of the host left after deleting the closed neighbourhood of the image.
fn oracle_weight(g: &Graph, h: &Graph) -> Option<usize> {
    all_induced_embeddings(g, h)
        .iter()
        .map(|e| {
            let mut blocked = vec![false; g.vertex_count()];
            for &v in e.map() {
                blocked[v] = true;
                for w in g.neighbors(v) {
                    blocked[w] = true;
                }
            }
            let rest: Vec<usize> = (0..g.vertex_count()).filter(|&v| !blocked[v]).collect();
            max_independent_set(&g.induced_subgraph(&rest).unwrap()).len()
        })
        .max()
}

#[test]
fn component_weight_matches_oracle() {
    let connected_chains: Vec<Graph> = (2..=8)
        .flat_map(|n| enumerate_class(ClassId::Chain, n, false).unwrap())
        .filter(|g| components(g).len() == 1)
        .collect();
    for g in &connected_chains {
        let (wg, _) = encode_chain_mapped(g).unwrap();
        for h in connected_chains.iter().filter(|h| h.vertex_count() <= g.vertex_count()) {
            let pair = bpglab::letters::encode_chain(h).unwrap();
            assert_eq!(component_weight(&wg, &pair), oracle_weight(g, h), "{wg} vs {pair:?}");
        }
    }
}

#[test]
fn deleting_a_pattern_vertex_keeps_containment() {
    let hosts: Vec<Graph> = (4..=7).flat_map(p5free).step_by(5).collect();
    let patterns: Vec<Graph> = (2..=5).flat_map(p5free).step_by(3).collect();
    for g in &hosts {
        for h in &patterns {
            if isi_auto(g, h).unwrap() {
                for v in 0..h.vertex_count() {
                    assert!(isi_auto(g, &delete(h, v)).unwrap());
                }
            }
        }
    }
    for g in linear_forests(8) {
        for h in linear_forests(5) {
            if isi_linear_forest(&g, &h).unwrap().embeds() {
                for v in 0..5 {
                    let smaller = delete(&h, v);
                    assert!(isi_linear_forest(&g, &smaller).unwrap().embeds());
                }
            }
        }
    }
}

#[test]
fn dispatcher_prefers_structured_solvers() {
    let g = linear_forest(&[3, 3]).unwrap();
    let h = linear_forest(&[2, 1, 1]).unwrap();
    assert_eq!(dispatch(&g, &h).unwrap(), Solver::LinearForestIlp);
    let r = isi_with(Solver::Auto, &g, &h).unwrap();
    assert!(r.embeds);
    assert!(!r.solution.is_empty());
    assert!(r.embedding.unwrap().is_valid(&h, &g));
    let big = Graph::new(200);
    let k = complete(3).unwrap();
    assert!(isi_with(Solver::Auto, &big, &k).is_err());
    assert!(!isi_with(Solver::BruteForce, &big, &k).unwrap().embeds);
    assert!(is_member(ClassId::P5FreeBipartite, &matching(3)));
    assert!("nope".parse::<Solver>().is_err());
}
