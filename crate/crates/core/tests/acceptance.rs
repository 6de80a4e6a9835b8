//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion outside [`KNOWN_FAILURES`] fails, or if a known failure passes.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use bpglab::graph::named::{cycle, linear_forest, matching, path, phi, spider, star_forest, sun3};
use bpglab::graph::{canonical_code, distance, enumerate_graphs, is_bipartite, is_isomorphic, pivot};
use bpglab::isi::{isi_bruteforce, isi_linear_forest, isi_p5free, isi_p5free_with, MatchingRule};
use bpglab::letters::{encode_bpg, enumerate_bpg, letter_graph, lettericity_exact};
use bpglab::parameters::{build_UwK, distinguishing_number, neighbourhood_diversity, KGraph, WordSource};
use bpglab::recognition::{bpg_by_construction, bpg_by_forbidden_subgraphs, find_star_forest_pattern, is_member, ClassId};
use bpglab::universal::{
    enumerate_class, fstar_criterion, partitions, universal_bpg, universal_chain, universal_star_forest,
    universal_star_forest_bounded, verify_universal, witness_rigid, Inflation,
};
use bpglab::{disjoint_union, Graph};
use rayon::prelude::*;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

/// Criteria that cannot hold as stated, with the reason.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    11,
    "Z_1 is K_2, whose two vertices are similar, so nd(Z_1) = 1; nd(Z_n) = 2n only from n = 2",
)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn universality_of_hnn() -> Check {
    let mut total = 0;
    for n in 1..=5 {
        let by_words: BTreeSet<_> = enumerate_bpg(n).map_err(|e| e.to_string())?.iter().map(canonical_code).collect();
        let by_filter: BTreeSet<_> = enumerate_graphs(n, false)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|g| bpg_by_forbidden_subgraphs(g).member)
            .map(|g| canonical_code(&g))
            .collect();
        ensure(by_words == by_filter, || format!("n = {n}: word and filtered catalogues differ"))?;
        let report = verify_universal(ClassId::Bpg, n, &universal_bpg(n), false).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("n = {n}: a BPG does not embed into H_{{n,n}}"))?;
        total += report.checked;
    }
    Ok(format!("{total} graphs, n = 1..5, zero failures"))
}

fn lettericity_bound() -> Check {
    let mut total = 0;
    for n in 1..=8 {
        let graphs = enumerate_bpg(n).map_err(|e| e.to_string())?;
        let bad = graphs.par_iter().find_any(|g| match encode_bpg(g) {
            Ok(sys) => !is_isomorphic(&letter_graph(&sys), g) || sys.alphabet().len() > n / 2 + 1,
            Err(_) => true,
        });
        ensure(bad.is_none(), || format!("n = {n}: encoding failed for {bad:?}"))?;
        total += graphs.len();
    }
    Ok(format!("{total} BPGs with n <= 8 encoded within floor(n/2)+1 letters"))
}

fn ferguson_values() -> Check {
    let mut got = Vec::new();
    for s in 4..=7 {
        let l = lettericity_exact(&path(s).unwrap(), 3).map_err(|e| e.to_string())?;
        got.push(l);
        ensure(l == Some((s + 4) / 3), || format!("P_{s}: lettericity {l:?}, expected {}", (s + 4) / 3))?;
    }
    let two_k2 = lettericity_exact(&matching(2), 3).map_err(|e| e.to_string())?;
    ensure(two_k2 == Some(2), || format!("2K_2: lettericity {two_k2:?}, expected 2"))?;
    Ok(format!("P_4..P_7 -> {got:?}, 2K_2 -> {two_k2:?}"))
}

fn forests(n: usize) -> Vec<Graph> {
    partitions(n).into_iter().map(|p| linear_forest(&p).unwrap()).collect()
}

fn ilp_oracle() -> Check {
    let start = Instant::now();
    let mut pairs = Vec::new();
    for gn in 1..=9 {
        for g in forests(gn) {
            for hn in 1..=gn {
                for h in forests(hn) {
                    pairs.push((g.clone(), h));
                }
            }
        }
    }
    let disagreements = pairs
        .par_iter()
        .filter(|(g, h)| {
            let ilp = isi_linear_forest(g, h).map(|r| r.embeds());
            ilp.map_or(true, |e| e != isi_bruteforce(g, h).is_some())
        })
        .count();
    let secs = start.elapsed().as_secs_f64();
    ensure(disagreements == 0, || format!("{disagreements} disagreements out of {}", pairs.len()))?;
    ensure(secs < 600.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} pairs, zero disagreements, {secs:.1}s", pairs.len()))
}

fn matching_oracle() -> Check {
    let catalogue = |max: usize| -> Result<Vec<Graph>, String> {
        let mut out = Vec::new();
        for n in 1..=max {
            out.extend(enumerate_class(ClassId::P5FreeBipartite, n, false).map_err(|e| e.to_string())?);
        }
        Ok(out)
    };
    let hosts = catalogue(8)?;
    let patterns = catalogue(7)?;
    let pairs: Vec<(&Graph, &Graph)> = hosts
        .iter()
        .flat_map(|g| patterns.iter().filter(|h| h.vertex_count() <= g.vertex_count()).map(move |h| (g, h)))
        .collect();
    let disagreements = pairs
        .par_iter()
        .filter(|(g, h)| isi_p5free(g, h).map_or(true, |r| r.embeds != isi_bruteforce(g, h).is_some()))
        .count();
    ensure(disagreements == 0, || format!("{disagreements} disagreements out of {}", pairs.len()))?;
    let g = matching(2);
    let h = disjoint_union(&[path(2).unwrap(), Graph::new(1)]);
    let padded = isi_p5free(&g, &h).map_err(|e| e.to_string())?.embeds;
    let literal = isi_p5free_with(&g, &h, MatchingRule::Literal).map_err(|e| e.to_string())?.embeds;
    ensure(padded, || "padding witness rejected".into())?;
    ensure(!literal, || "literal rule unexpectedly accepts the padding witness".into())?;
    Ok(format!(
        "{} pairs ({} hosts, {} patterns), zero disagreements; witness: padded yes, literal no",
        pairs.len(),
        hosts.len(),
        patterns.len()
    ))
}

fn star_forest_universal() -> Check {
    let mut total = 0;
    for n in 1..=10 {
        let u = universal_star_forest(n);
        let expected: usize = (1..=n).map(|i| n / i + 1).sum();
        ensure(u.vertex_count() == expected, || format!("|F*({n})| = {}, expected {expected}", u.vertex_count()))?;
        for p in partitions(n) {
            let leaves: Vec<usize> = p.iter().map(|s| s - 1).filter(|&l| l > 0).collect();
            let isolated = p.len() - leaves.len();
            let g = disjoint_union(&[star_forest(&leaves), Graph::new(isolated)]);
            ensure(fstar_criterion(&leaves, n), || format!("criterion rejects {p:?} for n = {n}"))?;
            ensure(isi_bruteforce(&u, &g).is_some(), || format!("{p:?} does not embed into F*({n})"))?;
            total += 1;
        }
    }
    Ok(format!("{total} star forests, n = 1..10, criterion and search agree"))
}

fn bounded_star_universal() -> Check {
    let mut total = 0;
    for k in 2..=3 {
        for n in 1..=6 {
            let u = universal_star_forest_bounded(k, n).map_err(|e| e.to_string())?;
            let r = verify_universal(ClassId::KSkFree(k), n, &u, false).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("k = {k}, n = {n}: {:?}", r.failure))?;
            total += r.checked;
        }
    }
    Ok(format!("{total} kS_k-free star forests, k = 2,3, n <= 6"))
}

fn pivot_sequence() -> Check {
    for n in 3..=8 {
        let mut g = universal_chain(n);
        // a_i is vertex 2i - 2 and b_i is vertex 2i - 1.
        for i in 2..n {
            g = pivot(&g, 2 * i - 2, 2 * i - 1).map_err(|e| e.to_string())?;
            ensure(is_bipartite(&g), || format!("n = {n}: not bipartite after pivot {i}"))?;
        }
        ensure(is_isomorphic(&g, &path(2 * n).unwrap()), || format!("n = {n}: result is not P_{}", 2 * n))?;
    }
    Ok("Z_n -> P_2n for n = 3..8, all intermediates bipartite".into())
}

fn witness_properties() -> Check {
    for t in 1..=6 {
        let q = witness_rigid(t, None).map_err(|e| e.to_string())?;
        ensure(q.graph.vertex_count() == 4 * t + 10, || format!("|Q_{t}| = {}", q.graph.vertex_count()))?;
        ensure(is_member(ClassId::Bpg, &q.graph), || format!("Q_{t} is not a BPG"))?;
        let d = distance(&q.graph, q.x_set()[0], q.y_set()[0]);
        ensure(d == Some(t + 2), || format!("Q_{t}: d(x, y) = {d:?}"))?;
    }
    for (n, t) in [(40, 2), (60, 3), (80, 4)] {
        let r = witness_rigid(t, Some(&Inflation::Ends { n })).map_err(|e| e.to_string())?;
        ensure(r.graph.vertex_count() <= n, || format!("|R_{{{n},{t}}}| = {}", r.graph.vertex_count()))?;
        ensure(find_star_forest_pattern(&r.graph, 3, 6).is_none(), || format!("R_{{{n},{t}}} has an induced 3S_6"))?;
        for &x in r.x_set() {
            for &y in r.y_set() {
                let d = distance(&r.graph, x, y);
                ensure(d == Some(t + 2), || format!("R_{{{n},{t}}}: d = {d:?}"))?;
            }
        }
    }
    Ok("Q_1..Q_6 and R_{40,2}, R_{60,3}, R_{80,4}".into())
}

fn forbidden_minimality() -> Check {
    let named = [
        ("S_{2,2,2}", spider(2, 2, 2).unwrap()),
        ("Sun_3", sun3()),
        ("Phi", phi()),
        ("C_5", cycle(5).unwrap()),
        ("C_6", cycle(6).unwrap()),
        ("C_7", cycle(7).unwrap()),
    ];
    for (name, f) in named {
        ensure(!bpg_by_forbidden_subgraphs(&f).member && !bpg_by_construction(&f), || format!("{name} accepted"))?;
        for v in 0..f.vertex_count() {
            let rest: Vec<usize> = (0..f.vertex_count()).filter(|&u| u != v).collect();
            let h = f.induced_subgraph(&rest).unwrap();
            ensure(bpg_by_forbidden_subgraphs(&h).member && bpg_by_construction(&h), || {
                format!("{name} minus vertex {} rejected", v + 1)
            })?;
        }
    }
    Ok("6 graphs rejected by both recognizers, all one-vertex deletions accepted".into())
}

fn parameter_spot_values() -> Check {
    let mut problems = Vec::new();
    for m in 1..=5 {
        let nd = neighbourhood_diversity(&matching(m));
        let dn = distinguishing_number(&matching(m)).map_err(|e| e.to_string())?;
        if nd != m {
            problems.push(format!("nd({m}K_2) = {nd}"));
        }
        if dn != 1 {
            problems.push(format!("dn({m}K_2) = {dn}"));
        }
    }
    for n in 1..=6 {
        let nd = neighbourhood_diversity(&universal_chain(n));
        if nd != 2 * n {
            problems.push(format!("nd(Z_{n}) = {nd}, expected {}", 2 * n));
        }
    }
    let src = WordSource::new(vec!['a', 'b'], "b", "ab").map_err(|e| e.to_string())?;
    for big_n in 1..=8 {
        let g = build_UwK(&src, &KGraph::empty(2), big_n).map_err(|e| e.to_string())?;
        if !is_isomorphic(&g, &path(big_n).unwrap()) {
            problems.push(format!("U(w, K) prefix {big_n} is not a path"));
        }
    }
    if problems.is_empty() {
        Ok("nd(mK_2), dn(mK_2), nd(Z_n), U(w, empty) all as stated".into())
    } else {
        Err(problems.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("H_{n,n} universality", universality_of_hnn),
        ("lettericity bound", lettericity_bound),
        ("Ferguson values", ferguson_values),
        ("ILP vs oracle", ilp_oracle),
        ("matching vs oracle", matching_oracle),
        ("F*(n) star-forest universal", star_forest_universal),
        ("(k-1)S_n + nS_{k-1} universal", bounded_star_universal),
        ("Z_n pivot sequence", pivot_sequence),
        ("witness properties", witness_properties),
        ("forbidden-subgraph minimality", forbidden_minimality),
        ("parameter spot values", parameter_spot_values),
    ];
    let mut failed = 0;
    let mut unexpected = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id).map(|(_, why)| *why);
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => {
                println!("criterion {id:>2} PASS  {name}: {detail} [{secs:.1}s]");
                if known.is_some() {
                    unexpected += 1;
                    println!("             listed as a known failure but passed");
                }
            }
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail} [{secs:.1}s]");
                match known {
                    Some(why) => println!("             known failure: {why}"),
                    None => unexpected += 1,
                }
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed, {unexpected} unexpected", criteria.len() - failed);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
