use bpglab::graph::named::{matching, path, star_forest};
use bpglab::{disjoint_union, Graph};
use bpglab::graph::{distance, enumerate_graphs, is_bipartite, is_isomorphic};
use bpglab::recognition::{find_induced, find_star_forest_pattern, is_member, ClassId};
use bpglab::universal::{
    enumerate_class, fstar_criterion, fstar_leaves, grid_vertex, partitions, universal_bpg, universal_bpg_word,
    universal_chain, universal_star_forest, universal_star_forest_bounded, verify_universal, witness_rigid, Inflation,
};

#[test]
fn universal_graphs_are_in_their_classes() {
    for n in 1..=6 {
        assert!(is_member(ClassId::Bpg, &universal_bpg(n)));
    }
    for n in 1..=8 {
        assert!(is_member(ClassId::Chain, &universal_chain(n)));
    }
}

#[test]
fn grid_rule_matches_word_form() {
    for n in 1..=5 {
        let h = universal_bpg(n);
        assert_eq!(universal_bpg_word(n).len(), n * n);
        for r in 1..=n {
            for c in 1..=n {
                for r2 in 1..=n {
                    for c2 in 1..=n {
                        let expected = r2 == r + 1 && c <= c2 || r == r2 + 1 && c2 <= c;
                        let (u, v) = (grid_vertex(n, r, c), grid_vertex(n, r2, c2));
                        assert_eq!(h.has_edge(u, v), expected, "n={n} ({r},{c}) ({r2},{c2})");
                    }
                }
            }
        }
    }
}

#[test]
fn rigid_witness_shape() {
    for t in 1..=6 {
        let q = witness_rigid(t, None).unwrap();
        assert_eq!(q.graph.vertex_count(), 4 * t + 10);
        assert!(is_member(ClassId::Bpg, &q.graph));
        let zig = q.graph.induced_subgraph(&q.zigzag).unwrap();
        assert_eq!(zig, path(3 * t + 7).unwrap());
        let col: Vec<usize> = q.column.iter().map(|c| c[0]).collect();
        assert_eq!(q.graph.induced_subgraph(&col).unwrap(), path(t + 3).unwrap());
        assert_eq!(distance(&q.graph, q.x_set()[0], q.y_set()[0]), Some(t + 2));
    }
}

#[test]
fn inflated_witnesses() {
    for (n, t) in [(40, 2), (60, 3), (80, 4), (30, 1)] {
        let r = witness_rigid(t, Some(&Inflation::Ends { n })).unwrap();
        assert!(r.graph.vertex_count() <= n);
        assert!(is_member(ClassId::Bpg, &r.graph));
        assert!(find_star_forest_pattern(&r.graph, 3, 6).is_none());
        for &x in r.x_set() {
            for &y in r.y_set() {
                assert_eq!(distance(&r.graph, x, y), Some(t + 2));
            }
        }
    }
    let r = witness_rigid(8, Some(&Inflation::Sets { n: 80, t_set: vec![3, 8] })).unwrap();
    assert_eq!(r.graph.vertex_count(), 80);
    assert!(is_member(ClassId::Bpg, &r.graph));
    assert!(witness_rigid(3, Some(&Inflation::Ends { n: 10 })).is_err());
}

#[test]
fn star_forest_universal_counts() {
    for n in 1..=50 {
        let expected: usize = (1..=n).map(|i| n / i + 1).sum();
        assert_eq!(universal_star_forest(n).vertex_count(), expected);
        assert_eq!(fstar_leaves(n).len(), n);
    }
}

#[test]
fn criterion_agrees_with_search() {
    for n in 1..=8 {
        let u = universal_star_forest(n);
        for p in partitions(n) {
            let leaves: Vec<usize> = p.iter().map(|s| s - 1).filter(|&l| l > 0).collect();
            let isolated = p.iter().filter(|&&s| s == 1).count();
            let g = disjoint_union(&[star_forest(&leaves), Graph::new(isolated)]);
            assert_eq!(g.vertex_count(), n);
            assert!(fstar_criterion(&leaves, n));
            assert!(find_induced(&u, &g).is_some());
        }
        // One star too many, or a second star too large, must fail both ways.
        let too_many = star_forest(&vec![1; n]);
        assert!(!fstar_criterion(&vec![1; n + 1], n));
        assert!(find_induced(&u, &disjoint_union(&[too_many, star_forest(&[1])])).is_none());
        if n >= 2 {
            let big = vec![n / 2 + 1, n / 2 + 1];
            assert!(!fstar_criterion(&big, n));
            assert!(find_induced(&u, &star_forest(&big)).is_none());
        }
    }
}

#[test]
fn universality_checks() {
    for n in 1..=4 {
        assert!(verify_universal(ClassId::Bpg, n, &universal_bpg(n), false).unwrap().passed());
        assert!(verify_universal(ClassId::Chain, n, &universal_chain(n), false).unwrap().passed());
    }
    let report = verify_universal(ClassId::Bpg, 4, &universal_bpg(2), false).unwrap();
    assert!(!report.passed());
    for k in 2..=3 {
        for n in 1..=5 {
            let u = universal_star_forest_bounded(k, n).unwrap();
            assert!(verify_universal(ClassId::KSkFree(k), n, &u, false).unwrap().passed());
        }
    }
}

#[test]
fn catalogue_sizes() {
    let two_k2 = matching(2);
    for n in 1..=7 {
        let filtered = enumerate_graphs(n, false)
            .unwrap()
            .into_iter()
            .filter(|g| is_bipartite(g) && find_induced(g, &two_k2).is_none())
            .count();
        assert_eq!(enumerate_class(ClassId::Chain, n, false).unwrap().len(), filtered, "n = {n}");
    }
    let matchings = enumerate_class(ClassId::DegreeLe1, 5, false).unwrap();
    assert_eq!(matchings.len(), 3);
    let boundary = enumerate_class(ClassId::BoundaryL, 8, false).unwrap();
    for g in &boundary {
        assert!(is_member(ClassId::BoundaryL, g));
    }
    for (i, a) in boundary.iter().enumerate() {
        for b in &boundary[i + 1..] {
            assert!(!is_isomorphic(a, b));
        }
    }
}
