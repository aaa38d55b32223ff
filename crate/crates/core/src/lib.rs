//! Semantic-network similarity toolkit.
//!
//! A [`SemanticNetwork`] is a single-rooted DAG of word and concept nodes
//! joined by typed child-to-parent links, each link type carrying a weight
//! from a [`LinkWeightConfig`]. Two distances are defined on it:
//!
//! * **activation**: the mean, over the nearest common ancestors (NCA) of
//!   `A` and `B`, of `d(A, n) + d(B, n)`. Symmetric.
//! * **proximity**: activation plus the same mean over the asymmetric
//!   nearest common ancestors (ANCA) of `A` towards `B`, i.e. common
//!   ancestors with a direct daughter above `A` but not above `B`.
//!
//! Lower scores mean closer. Word sets (profiles, sentences, documents) are
//! scored through [`AggregateNode`]s whose ancestor and arc sets are the
//! unions of their members'. The [`apps`] module builds sentence filtering,
//! profile classification, term spotting and query expansion on top.
//!
//! ```
//! use semnet_core::{LinkWeightConfig, Scorer, SemanticNetwork, Subject};
//!
//! let json = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/fig1.json")).unwrap();
//! let net = SemanticNetwork::from_json_str(&json).unwrap();
//! let scorer = Scorer::new(&net, &LinkWeightConfig::unit());
//! let florist = Subject::Node(net.require("florist").unwrap());
//! let seller = Subject::Node(net.require("seller").unwrap());
//! assert_eq!(scorer.activation(&florist, &seller).unwrap().score, 2.0);
//! assert_eq!(scorer.proximity(&florist, &seller).unwrap().score, 6.0);
//! ```

pub mod ancestry;
pub mod apps;
pub mod error;
pub mod measures;
pub mod network;
pub mod synth;
pub mod textproc;

pub use ancestry::{Ancestry, ArcSet, Closure, NcaSet, Subject};
pub use apps::{Profile, Score, TextPipeline};
pub use error::{Error, Result};
pub use measures::{aggregate, AggregateNode, MeasureResult, Scorer};
pub use network::{
    fold_case, load_network, Edge, LinkWeightConfig, Node, NodeIdx, NodeKind, SemanticNetwork,
};
pub use textproc::{NormalizationMap, SegmentMode, Sentence, StopList};
