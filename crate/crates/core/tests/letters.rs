use bpglab::graph::{components, enumerate_graphs, is_isomorphic};
use bpglab::letters::{
    chain_word_graph, encode_bpg, encode_bpg_component, enumerate_bpg, letter_graph, parikh_graph, path_word_graph,
    LetterSystem,
};
use bpglab::recognition::{bpg_by_forbidden_subgraphs, is_member, ClassId};
use proptest::prelude::*;

fn connected(g: &bpglab::Graph) -> bool {
    components(g).len() == 1
}

#[test]
fn encode_round_trip_and_bound() {
    for n in 1..=8 {
        for g in enumerate_bpg(n).unwrap() {
            let sys = encode_bpg(&g).unwrap();
            assert!(is_isomorphic(&letter_graph(&sys), &g));
            assert_eq!(sys.mapped_graph(), g);
            assert!(sys.alphabet().len() <= n / 2 + 1, "{n}: {}", sys.to_json());
            assert!(sys.is_path_decoder());
        }
    }
}

#[test]
fn normal_form_of_connected_words() {
    for n in 2..=8 {
        for g in enumerate_bpg(n).unwrap().into_iter().filter(connected) {
            let (word, map) = encode_bpg_component(&g).unwrap();
            let mut sorted = map.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..n).collect::<Vec<_>>());
            let r = word.iter().max().unwrap() + 1;
            let occurrences = |l: usize| word.iter().filter(|&&x| x == l).count();
            assert!(occurrences(0) >= 1);
            assert_eq!(*word.last().unwrap(), 1, "{word:?}");
            for l in 1..r - 1 {
                assert!(occurrences(l) >= 2, "{word:?}");
            }
            assert!(r <= n / 2 + 1);
        }
    }
}

#[test]
fn encoder_accepts_exactly_the_bpgs() {
    for n in 1..=7 {
        for g in enumerate_graphs(n, false).unwrap() {
            assert_eq!(encode_bpg(&g).is_ok(), bpg_by_forbidden_subgraphs(&g).member);
        }
    }
}

#[test]
fn catalogue_matches_filtered_enumeration() {
    for n in 1..=7 {
        let filtered = enumerate_graphs(n, false)
            .unwrap()
            .into_iter()
            .filter(|g| is_member(ClassId::Bpg, g))
            .count();
        assert_eq!(enumerate_bpg(n).unwrap().len(), filtered, "n = {n}");
    }
}

#[test]
fn short_chain_words_give_chain_graphs() {
    for len in 1..=10 {
        for m in 0u32..1 << len {
            let w: String = (0..len).map(|i| if m >> i & 1 == 1 { 'b' } else { 'a' }).collect();
            assert!(is_member(ClassId::Chain, &chain_word_graph(&w).unwrap()), "{w}");
        }
    }
}

#[test]
fn json_rejects_malformed_systems() {
    for bad in [
        r#"{"alphabet":["a"],"decoder":[["a","b"]],"word":["a"]}"#,
        r#"{"alphabet":["a","a"],"decoder":[],"word":["a"]}"#,
        r#"{"alphabet":["a"],"decoder":[],"word":["c"]}"#,
        r#"{"alphabet":["a"],"decoder":[],"word":["a"],"vertex_map":[2]}"#,
        "not json",
    ] {
        assert!(LetterSystem::from_json(bad).is_err(), "{bad}");
    }
}

fn successor_system(r: usize, word: &[usize]) -> LetterSystem {
    let alphabet = (0..r).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let decoder = (1..r).map(|i| (i - 1, i)).collect();
    LetterSystem::new(alphabet, decoder, word.to_vec()).unwrap()
}

proptest! {
    #[test]
    fn parikh_is_the_successor_letter_graph(word in proptest::collection::vec(0usize..4, 0..14)) {
        let letters: Vec<char> = "abcd".chars().collect();
        let text: String = word.iter().map(|&i| letters[i]).collect();
        let p = parikh_graph(&letters, &text).unwrap();
        prop_assert_eq!(&p, &letter_graph(&successor_system(4, &word)));
        prop_assert_eq!(&p, &path_word_graph(&word));
    }

    #[test]
    fn path_words_decode_to_bpgs(word in proptest::collection::vec(0usize..4, 1..12)) {
        let g = path_word_graph(&word);
        prop_assert!(is_member(ClassId::Bpg, &g));
        let sys = encode_bpg(&g).unwrap();
        prop_assert_eq!(sys.mapped_graph(), g);
    }

    #[test]
    fn letter_json_round_trips(word in proptest::collection::vec(0usize..3, 0..10)) {
        let sys = successor_system(3, &word);
        prop_assert_eq!(LetterSystem::from_json(&sys.to_json()).unwrap(), sys);
    }
}
