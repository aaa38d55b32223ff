use std::collections::BTreeMap;
use std::io::Read;

use serde::{Deserialize, Serialize};

use super::{Edge, SemanticNetwork};
use crate::error::{Error, Result};

/// Per-link-type weights. Unmapped types fall back to `default`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkWeightConfig {
    #[serde(rename = "default")]
    default_weight: f64,
    #[serde(default)]
    weights: BTreeMap<String, f64>,
}

impl Default for LinkWeightConfig {
    fn default() -> Self {
        Self::unit()
    }
}

impl LinkWeightConfig {
    /// Every link weighs 1, so distances count hops.
    pub fn unit() -> Self {
        LinkWeightConfig {
            default_weight: 1.0,
            weights: BTreeMap::new(),
        }
    }

    pub fn new(default_weight: f64, weights: BTreeMap<String, f64>) -> Result<Self> {
        let config = LinkWeightConfig {
            default_weight,
            weights,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn from_reader<R: Read>(source: R) -> Result<Self> {
        let config: LinkWeightConfig = serde_json::from_reader(source)?;
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        let bad = |w: f64| !w.is_finite() || w < 0.0;
        if bad(self.default_weight) {
            return Err(Error::InvalidWeight {
                link_type: "default".into(),
                value: self.default_weight,
            });
        }
        for (t, &w) in &self.weights {
            if bad(w) {
                return Err(Error::InvalidWeight {
                    link_type: t.clone(),
                    value: w,
                });
            }
        }
        Ok(())
    }

    pub fn default_weight(&self) -> f64 {
        self.default_weight
    }

    pub fn weights(&self) -> &BTreeMap<String, f64> {
        &self.weights
    }

    pub fn weight(&self, link_type: &str) -> f64 {
        self.weights
            .get(link_type)
            .copied()
            .unwrap_or(self.default_weight)
    }

    pub fn edge_weight(&self, edge: &Edge) -> f64 {
        self.weight(&edge.link_type)
    }

    /// Every weight (default included) multiplied by `k`.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(
            self.default_weight * k,
            self.weights.iter().map(|(t, w)| (t.clone(), w * k)).collect(),
        )
    }

    /// Weights indexed by the network's interned link types.
    pub fn resolve(&self, network: &SemanticNetwork) -> Vec<f64> {
        network
            .link_types()
            .iter()
            .map(|t| self.weight(t))
            .collect()
    }
}
