//! Activation and proximity: distances built from the nearest common
//! ancestors of two subjects.
//!
//! Activation averages, over the NCA set, the summed distances from both
//! subjects to each NCA. It only sees shared features and is symmetric.
//! Proximity adds the same average taken over the ANCA set of `A` towards
//! `B`, which penalizes features `A` has and `B` lacks; it is directional.
//! Lower is closer for both.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::ancestry::{Ancestry, Closure, Subject};
use crate::error::{Error, Result};
use crate::network::{LinkWeightConfig, NodeIdx, SemanticNetwork};

/// A virtual node standing for a set of nodes (a profile, a sentence, a
/// document). Its ancestor and arc sets are the unions of its members'.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AggregateNode {
    members: Vec<NodeIdx>,
}

impl AggregateNode {
    pub fn members(&self) -> &[NodeIdx] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn aggregate(
    network: &SemanticNetwork,
    words: impl IntoIterator<Item = NodeIdx>,
) -> Result<AggregateNode> {
    let members: BTreeSet<NodeIdx> = words.into_iter().collect();
    if members.is_empty() {
        return Err(Error::EmptyAggregate);
    }
    for &m in &members {
        network.check(m)?;
    }
    Ok(AggregateNode {
        members: members.into_iter().collect(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureResult {
    pub score: f64,
    pub nca: BTreeSet<NodeIdx>,
    pub anca: BTreeSet<NodeIdx>,
    /// The NCA set was replaced by the root (empty arc intersection).
    pub fallback_root: bool,
}

/// Measure evaluation over one network and weight configuration.
#[derive(Debug)]
pub struct Scorer<'n> {
    ancestry: Ancestry<'n>,
}

impl<'n> Scorer<'n> {
    pub fn new(network: &'n SemanticNetwork, config: &LinkWeightConfig) -> Self {
        Scorer {
            ancestry: Ancestry::new(network, config),
        }
    }

    pub fn ancestry(&self) -> &Ancestry<'n> {
        &self.ancestry
    }

    pub fn network(&self) -> &'n SemanticNetwork {
        self.ancestry.network()
    }

    pub fn activation(&self, a: &Subject, b: &Subject) -> Result<MeasureResult> {
        let ends = Ends::new(&self.ancestry, a, b)?;
        let nca = self.ancestry.nca_from(a, &ends.ca, b, &ends.cb);
        Ok(MeasureResult {
            score: ends.mean_pair_distance(&nca.nodes),
            nca: nca.nodes,
            anca: BTreeSet::new(),
            fallback_root: nca.fallback_root,
        })
    }

    pub fn proximity(&self, a: &Subject, b: &Subject) -> Result<MeasureResult> {
        let ends = Ends::new(&self.ancestry, a, b)?;
        let nca = self.ancestry.nca_from(a, &ends.ca, b, &ends.cb);
        let anca = self.ancestry.anca_from(&ends.ca, &ends.cb, &nca);
        let score = ends.mean_pair_distance(&nca.nodes) + ends.mean_pair_distance(&anca);
        Ok(MeasureResult {
            score,
            nca: nca.nodes,
            anca,
            fallback_root: nca.fallback_root,
        })
    }
}

/// Both subjects of a measure with their closures.
struct Ends<'a, 'n> {
    ancestry: &'a Ancestry<'n>,
    a: &'a Subject,
    b: &'a Subject,
    ca: Arc<Closure>,
    cb: Arc<Closure>,
    upper_a: Vec<NodeIdx>,
    upper_b: Vec<NodeIdx>,
}

impl<'a, 'n> Ends<'a, 'n> {
    fn new(ancestry: &'a Ancestry<'n>, a: &'a Subject, b: &'a Subject) -> Result<Self> {
        let (ca, cb) = ancestry.closures(a, b)?;
        Ok(Ends {
            ancestry,
            a,
            b,
            ca,
            cb,
            upper_a: ancestry.upper_members(a),
            upper_b: ancestry.upper_members(b),
        })
    }

    /// `(1/n) Σ d(A, Nᵢ) + d(B, Nᵢ)`, zero for an empty set.
    fn mean_pair_distance(&self, targets: &BTreeSet<NodeIdx>) -> f64 {
        if targets.is_empty() {
            return 0.0;
        }
        let total: f64 = targets
            .iter()
            .map(|&n| {
                // Every NCA/ANCA lies in both closures (the root always does).
                let da = self.ancestry.subject_distance(self.a, &self.ca, &self.upper_a, n);
                let db = self.ancestry.subject_distance(self.b, &self.cb, &self.upper_b, n);
                da.expect("target related to A") + db.expect("target related to B")
            })
            .sum();
        total / targets.len() as f64
    }
}

pub fn activation(
    network: &SemanticNetwork,
    a: &Subject,
    b: &Subject,
    config: &LinkWeightConfig,
) -> Result<MeasureResult> {
    Scorer::new(network, config).activation(a, b)
}

pub fn proximity(
    network: &SemanticNetwork,
    a: &Subject,
    b: &Subject,
    config: &LinkWeightConfig,
) -> Result<MeasureResult> {
    Scorer::new(network, config).proximity(a, b)
}
