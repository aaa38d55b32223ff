#![allow(dead_code)]

pub mod check;
pub mod gen;
pub mod oracle;

use std::collections::BTreeSet;

use semnet_core::{LinkWeightConfig, SemanticNetwork};

pub fn fixture(name: &str) -> SemanticNetwork {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let json = std::fs::read_to_string(&path).unwrap();
    SemanticNetwork::from_json_str(&json).unwrap()
}

/// The network's edge list in oracle form, indexed by node position.
pub fn oracle_dag(net: &SemanticNetwork, config: &LinkWeightConfig) -> oracle::Dag {
    oracle::Dag {
        n: net.len(),
        root: net.root().index(),
        edges: net
            .edges()
            .iter()
            .map(|e| {
                (
                    net.require(&e.child).unwrap().index(),
                    net.require(&e.parent).unwrap().index(),
                    config.weight(&e.link_type),
                )
            })
            .collect(),
    }
}

/// Oracle member set for node ids.
pub fn members(net: &SemanticNetwork, ids: &[&str]) -> BTreeSet<usize> {
    ids.iter().map(|id| net.require(id).unwrap().index()).collect()
}
