mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::gen::{id, RandomDag, TYPES};
use semnet_core::textproc::{resolve, segment, tokenize};
use semnet_core::{Edge, Error, NormalizationMap, SegmentMode, SemanticNetwork};

fn text() -> impl Strategy<Value = String> {
    proptest::collection::vec(
        prop_oneof![
            "[a-zA-Zéà]{1,8}",
            Just(".".to_string()),
            Just("!".to_string()),
            Just("?\"".to_string()),
            Just(",".to_string()),
            Just("\n".to_string()),
            Just("  ".to_string()),
        ],
        0..40,
    )
    .prop_map(|parts| parts.join(" "))
}

fn normalized_whitespace(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

proptest! {
    #[test]
    fn segments_cover_the_text(t in text()) {
        let sentences = segment(&t, SegmentMode::Punctuation);
        let joined: Vec<&str> = sentences.iter().map(|s| s.raw.as_str()).collect();
        prop_assert_eq!(joined.join(" "), normalized_whitespace(&t));
        for (i, s) in sentences.iter().enumerate() {
            prop_assert_eq!(s.id, i);
            prop_assert_eq!(&s.tokens, &tokenize(&s.raw));
        }
        let tokens: Vec<String> = sentences.iter().flat_map(|s| s.tokens.clone()).collect();
        prop_assert_eq!(tokens, tokenize(&t));
    }

    #[test]
    fn line_mode_yields_nonblank_lines(t in text()) {
        let sentences = segment(&t, SegmentMode::LinePerSentence);
        let lines: Vec<String> = t.lines().map(normalized_whitespace).filter(|l| !l.is_empty()).collect();
        let raws: Vec<String> = sentences.into_iter().map(|s| s.raw).collect();
        prop_assert_eq!(raws, lines);
    }

    #[test]
    fn normalization_is_idempotent(
        pairs in proptest::collection::btree_map("[a-d]{1,2}", "[e-h]{1,2}", 0..6),
        tokens in proptest::collection::vec("[a-h]{1,2}", 0..20),
    ) {
        let map = NormalizationMap::new(pairs).unwrap();
        let once = map.normalize(&tokens);
        prop_assert_eq!(map.normalize(&once), once.clone());
        prop_assert_eq!(once.len(), tokens.len());
    }

    #[test]
    fn resolution_distributes_over_union(
        seed in any::<u64>(),
        xs in proptest::collection::vec(0usize..16, 0..6),
        ys in proptest::collection::vec(0usize..16, 0..6),
    ) {
        let net = RandomDag::generate(seed, 3, 12).network();
        let label = |i: &usize| format!("w{i}");
        let xw: Vec<String> = xs.iter().map(label).collect();
        let yw: Vec<String> = ys.iter().map(label).collect();
        let rx = resolve(xw.iter().map(String::as_str), &net, None);
        let ry = resolve(yw.iter().map(String::as_str), &net, None);
        let rxy = resolve(xw.iter().chain(&yw).map(String::as_str), &net, None);
        prop_assert_eq!(rxy.resolved, &rx.resolved | &ry.resolved);
        prop_assert_eq!(rxy.unresolved, &rx.unresolved | &ry.unresolved);
    }

    #[test]
    fn random_networks_round_trip(seed in any::<u64>()) {
        let net = RandomDag::generate(seed, 3, 12).network();
        let again = SemanticNetwork::from_json_str(&net.to_json()).unwrap();
        prop_assert_eq!(again.nodes(), net.nodes());
        prop_assert_eq!(again.edges(), net.edges());
        prop_assert_eq!(again.root(), net.root());
    }

    #[test]
    fn parents_and_children_are_inverse(seed in any::<u64>()) {
        let net = RandomDag::generate(seed, 3, 12).network();
        for i in 0..net.len() {
            let a = net.require(&id(i)).unwrap();
            for p in net.parents(a).unwrap() {
                prop_assert!(net.children(p).unwrap().contains(&a));
            }
            for c in net.children(a).unwrap() {
                prop_assert!(net.parents(c).unwrap().contains(&a));
            }
        }
    }

    #[test]
    fn structural_mutations_are_rejected(seed in any::<u64>()) {
        let g = RandomDag::generate(seed, 3, 12);
        let net = g.network();
        let nodes = net.nodes().to_vec();
        let edges = net.edges().to_vec();
        let rebuild = |extra: Edge| {
            let mut e = edges.clone();
            e.push(extra);
            SemanticNetwork::new(nodes.clone(), e)
        };

        // Root above the highest node: closes a cycle.
        let last = id(g.n - 1);
        prop_assert!(matches!(rebuild(Edge::new(&id(0), &last, TYPES[0])), Err(Error::Cycle(_))));
        let dangling = matches!(rebuild(Edge::new(&last, "nowhere", TYPES[0])), Err(Error::DanglingEndpoint { .. }));
        prop_assert!(dangling);
        prop_assert!(matches!(rebuild(Edge::new(&last, &last, TYPES[0])), Err(Error::SelfLoop(_))));
        let dup = edges[0].clone();
        let duplicate = matches!(rebuild(dup), Err(Error::DuplicateEdge { .. }));
        prop_assert!(duplicate);

        let mut orphaned = nodes.clone();
        orphaned.push(semnet_core::Node::concept("\\Second"));
        prop_assert!(matches!(SemanticNetwork::new(orphaned, edges.clone()), Err(Error::MultipleRoots(_))));
        // A fresh link type on an edge pointing upward keeps the graph valid.
        prop_assert!(rebuild(Edge::new(&last, &id(0), "extra")).is_ok());
    }
}

#[test]
fn unknown_words_stay_unresolved() {
    let net = common::fixture("fig1.json");
    let r = resolve(["seller", "zzz", "SELLER"], &net, Some("en"));
    assert_eq!(r.resolved.len(), 1);
    assert_eq!(r.unresolved, BTreeSet::from(["zzz".to_string()]));
    assert!(resolve(["seller"], &net, Some("fr")).resolved.is_empty());
}
