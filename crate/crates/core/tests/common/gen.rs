//! Seeded random single-rooted DAGs with typed edges, built both as a
//! library network and as an oracle edge list.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semnet_core::{Edge, LinkWeightConfig, Node, NodeIdx, SemanticNetwork};

use super::oracle::Dag;

pub const TYPES: [&str; 3] = ["hypernym", "synonym", "feature"];
pub const WEIGHTS: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Debug, Clone)]
pub struct RandomDag {
    pub n: usize,
    /// `(child, parent, type index)`
    pub edges: Vec<(usize, usize, usize)>,
    pub config: LinkWeightConfig,
}

pub fn id(i: usize) -> String {
    format!("n{i}")
}

impl RandomDag {
    /// `n` in `min_n..=max_n`; node 0 is the root, every other node gets one
    /// to three parents among lower-numbered nodes.
    pub fn generate(seed: u64, min_n: usize, max_n: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(min_n..=max_n);
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for child in 1..n {
            let k = rng.gen_range(1..=3);
            for _ in 0..k {
                let parent = rng.gen_range(0..child);
                let t = rng.gen_range(0..TYPES.len());
                if seen.insert((child, parent, t)) {
                    edges.push((child, parent, t));
                }
            }
        }
        edges.shuffle(&mut rng);
        // The third type is left unmapped so the default weight is used.
        let weights: BTreeMap<String, f64> = TYPES[..2]
            .iter()
            .map(|t| (t.to_string(), *WEIGHTS.choose(&mut rng).unwrap()))
            .collect();
        let default = *WEIGHTS.choose(&mut rng).unwrap();
        RandomDag {
            n,
            edges,
            config: LinkWeightConfig::new(default, weights).unwrap(),
        }
    }

    pub fn network(&self) -> SemanticNetwork {
        let nodes = (0..self.n)
            .map(|i| {
                if i % 2 == 0 {
                    Node::concept(id(i))
                } else {
                    Node::word(id(i), format!("w{i}"), None)
                }
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&(c, p, t)| Edge::new(&id(c), &id(p), TYPES[t]))
            .collect();
        SemanticNetwork::new(nodes, edges).unwrap()
    }

    pub fn dag(&self, config: &LinkWeightConfig) -> Dag {
        Dag {
            n: self.n,
            root: 0,
            edges: self
                .edges
                .iter()
                .map(|&(c, p, t)| (c, p, config.weight(TYPES[t])))
                .collect(),
        }
    }

    /// Random member sets: every singleton plus a few 2- and 3-sets.
    pub fn subjects(&self, seed: u64) -> Vec<BTreeSet<usize>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
        let mut out: Vec<BTreeSet<usize>> = (0..self.n).map(|i| BTreeSet::from([i])).collect();
        for size in [2, 3] {
            for _ in 0..3 {
                let set: BTreeSet<usize> = (0..size).map(|_| rng.gen_range(0..self.n)).collect();
                out.push(set);
            }
        }
        out
    }
}

pub fn to_idx(net: &SemanticNetwork, set: &BTreeSet<usize>) -> BTreeSet<NodeIdx> {
    set.iter().map(|&i| net.require(&id(i)).unwrap()).collect()
}

pub fn from_idx(net: &SemanticNetwork, set: &BTreeSet<NodeIdx>) -> BTreeSet<usize> {
    set.iter()
        .map(|&n| net.id(n)[1..].parse().unwrap())
        .collect()
}
