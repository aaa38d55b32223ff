//! Seeded generators for large lexicon-shaped networks and corpora, used by
//! the benchmarks and the performance checks.
//!
//! The network is a concept taxonomy (one tenth of the nodes) under a single
//! root, with word nodes hanging off random concepts. Concept `i` takes its
//! parents from the window `[i/4, i)`, which keeps depth logarithmic.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::network::{Edge, Node, SemanticNetwork};

const LINK_TYPES: [&str; 3] = ["hypernym", "feature", "part"];

pub fn concept_id(i: usize) -> String {
    if i == 0 {
        "\\Root".to_owned()
    } else {
        format!("\\C{i}")
    }
}

pub fn word_label(i: usize) -> String {
    format!("w{i}")
}

/// A network with exactly `nodes` nodes and `edges` edges (`edges` must be
/// at least `nodes - 1` and small enough to place without duplicates).
pub fn lexicon_network(nodes: usize, edges: usize, seed: u64) -> SemanticNetwork {
    assert!(nodes >= 2 && edges >= nodes - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let concepts = (nodes / 10).max(2);
    let words = nodes - concepts;

    let mut node_list: Vec<Node> = (0..concepts).map(|i| Node::concept(concept_id(i))).collect();
    node_list.extend((0..words).map(|i| Node::word(format!("word:{i}"), word_label(i), Some("en"))));

    let mut edge_list = Vec::with_capacity(edges);
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::with_capacity(edges);
    let mut add = |edge_list: &mut Vec<Edge>, child: usize, parent: usize, t: usize| -> bool {
        if !seen.insert((child, parent, t)) {
            return false;
        }
        let id = |n: usize| {
            if n < concepts {
                concept_id(n)
            } else {
                format!("word:{}", n - concepts)
            }
        };
        edge_list.push(Edge {
            child: id(child),
            parent: id(parent),
            link_type: LINK_TYPES[t].to_owned(),
        });
        true
    };

    // Spanning edges first so every non-root node has a parent.
    for c in 1..concepts {
        let p = rng.gen_range(c / 4..c);
        add(&mut edge_list, c, p, 0);
    }
    for w in 0..words {
        let p = rng.gen_range(1.max(concepts / 8).min(concepts - 1)..concepts);
        add(&mut edge_list, concepts + w, p, 0);
    }

    // Remaining budget: about a twentieth to the taxonomy, the rest to words.
    let extra = edges - edge_list.len();
    let extra_concept = (extra / 20).min(concepts.saturating_sub(2) * 2);
    let mut placed = 0;
    while placed < extra_concept {
        let c = rng.gen_range(2..concepts);
        let p = rng.gen_range(c / 4..c);
        if add(&mut edge_list, c, p, rng.gen_range(0..LINK_TYPES.len())) {
            placed += 1;
        }
    }
    while edge_list.len() < edges {
        let w = concepts + rng.gen_range(0..words);
        let p = rng.gen_range(1..concepts);
        add(&mut edge_list, w, p, rng.gen_range(0..LINK_TYPES.len()));
    }

    edge_list.shuffle(&mut rng);
    SemanticNetwork::new(node_list, edge_list).expect("generated network is valid")
}

/// `sentences` sentences of `words_per_sentence` random word labels from a
/// [`lexicon_network`] with `vocabulary` words, one sentence per line.
pub fn random_corpus(vocabulary: usize, sentences: usize, words_per_sentence: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    for _ in 0..sentences {
        let words: Vec<String> = (0..words_per_sentence)
            .map(|_| word_label(rng.gen_range(0..vocabulary)))
            .collect();
        out.push_str(&words.join(" "));
        out.push_str(".\n");
    }
    out
}
