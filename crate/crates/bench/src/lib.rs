//! Shared inputs for the criterion benches.

pub use semnet_core;

use semnet_core::synth::{lexicon_network, random_corpus};
use semnet_core::SemanticNetwork;

pub const SEED: u64 = 0x5e_1e7;

/// Network sizes benchmarked, as (nodes, edges).
pub const SIZES: [(usize, usize); 3] = [(1_000, 3_000), (10_000, 30_000), (100_000, 300_000)];

pub fn network(nodes: usize, edges: usize) -> SemanticNetwork {
    lexicon_network(nodes, edges, SEED)
}

/// Number of word nodes in a generated network of `nodes` nodes.
pub fn vocabulary(net: &SemanticNetwork) -> usize {
    net.nodes()
        .iter()
        .filter(|n| n.kind == semnet_core::NodeKind::Word)
        .count()
}

pub fn corpus(net: &SemanticNetwork, sentences: usize) -> String {
    random_corpus(vocabulary(net), sentences, 12, SEED + 1)
}
