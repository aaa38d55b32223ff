//! The semantic network: word and concept nodes joined by typed
//! child-to-parent links, validated to form a single-rooted DAG.
//!
//! Nodes are addressed internally by dense [`NodeIdx`] handles; string ids
//! only appear at the file and CLI boundaries.

mod validate;
mod weights;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use weights::LinkWeightConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Concept,
    Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub label: String,
    pub kind: NodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lang: Option<String>,
}

impl Node {
    pub fn concept(id: impl Into<String>) -> Self {
        let id = id.into();
        Node {
            label: id.clone(),
            id,
            kind: NodeKind::Concept,
            lang: None,
        }
    }

    pub fn word(id: impl Into<String>, label: impl Into<String>, lang: Option<&str>) -> Self {
        Node {
            id: id.into(),
            label: label.into(),
            kind: NodeKind::Word,
            lang: lang.map(str::to_owned),
        }
    }
}

/// A typed link from `child` up to `parent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub child: String,
    pub parent: String,
    #[serde(rename = "type")]
    pub link_type: String,
}

impl Edge {
    pub fn new(child: &str, parent: &str, link_type: &str) -> Self {
        Edge {
            child: child.to_owned(),
            parent: parent.to_owned(),
            link_type: link_type.to_owned(),
        }
    }
}

/// Dense handle of a node inside one [`SemanticNetwork`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeIdx(u32);

impl NodeIdx {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_usize(i: usize) -> Self {
        NodeIdx(u32::try_from(i).expect("network exceeds u32::MAX nodes"))
    }
}

impl fmt::Display for NodeIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Interned link type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkTypeId(u32);

impl LinkTypeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One adjacency entry: the neighbor and the type of the connecting edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub node: NodeIdx,
    pub link_type: LinkTypeId,
}

#[derive(Serialize, Deserialize)]
struct NetworkFile {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

/// Case folding applied to word labels and tokens.
pub fn fold_case(s: &str) -> String {
    s.to_lowercase()
}

/// An immutable, indexed, single-rooted DAG of typed links.
#[derive(Debug, Clone)]
pub struct SemanticNetwork {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    ids: HashMap<String, NodeIdx>,
    link_types: Vec<String>,
    up: Vec<Vec<Link>>,
    down: Vec<Vec<Link>>,
    words: HashMap<String, Vec<NodeIdx>>,
    root: NodeIdx,
}

/// Parses and validates a network file.
pub fn load_network<R: Read>(source: R) -> Result<SemanticNetwork> {
    SemanticNetwork::from_reader(source)
}

impl SemanticNetwork {
    pub fn from_reader<R: Read>(source: R) -> Result<Self> {
        let file: NetworkFile = serde_json::from_reader(source)?;
        Self::new(file.nodes, file.edges)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: NetworkFile = serde_json::from_str(s)?;
        Self::new(file.nodes, file.edges)
    }

    /// Builds the indexes and checks every structural invariant.
    pub fn new(nodes: Vec<Node>, edges: Vec<Edge>) -> Result<Self> {
        let mut ids = HashMap::with_capacity(nodes.len());
        for (i, node) in nodes.iter().enumerate() {
            if node.id.is_empty() {
                return Err(Error::EmptyNodeId);
            }
            if node.kind == NodeKind::Concept && node.lang.is_some() {
                return Err(Error::ConceptWithLang(node.id.clone()));
            }
            if ids.insert(node.id.clone(), NodeIdx::from_usize(i)).is_some() {
                return Err(Error::DuplicateNode(node.id.clone()));
            }
        }

        let mut link_types: Vec<String> = Vec::new();
        let mut type_ids: HashMap<&str, LinkTypeId> = HashMap::new();
        let mut up = vec![Vec::new(); nodes.len()];
        let mut down = vec![Vec::new(); nodes.len()];
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for edge in &edges {
            let resolve = |id: &str| {
                ids.get(id).copied().ok_or_else(|| Error::DanglingEndpoint {
                    child: edge.child.clone(),
                    parent: edge.parent.clone(),
                    missing: id.to_owned(),
                })
            };
            let child = resolve(&edge.child)?;
            let parent = resolve(&edge.parent)?;
            if child == parent {
                return Err(Error::SelfLoop(edge.child.clone()));
            }
            let link_type = *type_ids.entry(edge.link_type.as_str()).or_insert_with(|| {
                link_types.push(edge.link_type.clone());
                LinkTypeId((link_types.len() - 1) as u32)
            });
            if !seen.insert((child, parent, link_type)) {
                return Err(Error::DuplicateEdge {
                    child: edge.child.clone(),
                    parent: edge.parent.clone(),
                    link_type: edge.link_type.clone(),
                });
            }
            up[child.index()].push(Link {
                node: parent,
                link_type,
            });
            down[parent.index()].push(Link {
                node: child,
                link_type,
            });
        }

        let root = validate::check_structure(&nodes, &up, &down)?;

        let mut words: HashMap<String, Vec<NodeIdx>> = HashMap::new();
        for (i, node) in nodes.iter().enumerate() {
            if node.kind == NodeKind::Word {
                words
                    .entry(fold_case(&node.label))
                    .or_default()
                    .push(NodeIdx::from_usize(i));
            }
        }

        Ok(SemanticNetwork {
            nodes,
            edges,
            ids,
            link_types,
            up,
            down,
            words,
            root,
        })
    }

    pub fn root(&self) -> NodeIdx {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node(&self, n: NodeIdx) -> &Node {
        &self.nodes[n.index()]
    }

    pub fn id(&self, n: NodeIdx) -> &str {
        &self.nodes[n.index()].id
    }

    pub fn node_idx(&self, id: &str) -> Option<NodeIdx> {
        self.ids.get(id).copied()
    }

    pub fn require(&self, id: &str) -> Result<NodeIdx> {
        self.node_idx(id)
            .ok_or_else(|| Error::UnknownNode(id.to_owned()))
    }

    pub fn contains(&self, n: NodeIdx) -> bool {
        n.index() < self.nodes.len()
    }

    pub(crate) fn check(&self, n: NodeIdx) -> Result<()> {
        if self.contains(n) {
            Ok(())
        } else {
            Err(Error::UnknownNode(n.to_string()))
        }
    }

    pub fn link_types(&self) -> &[String] {
        &self.link_types
    }

    pub fn link_type_name(&self, t: LinkTypeId) -> &str {
        &self.link_types[t.index()]
    }

    pub fn link_type_id(&self, name: &str) -> Option<LinkTypeId> {
        self.link_types
            .iter()
            .position(|t| t == name)
            .map(|i| LinkTypeId(i as u32))
    }

    /// Upward links of `n`, one entry per edge (a parent may appear once per
    /// link type).
    pub fn parent_links(&self, n: NodeIdx) -> &[Link] {
        &self.up[n.index()]
    }

    pub fn child_links(&self, n: NodeIdx) -> &[Link] {
        &self.down[n.index()]
    }

    pub fn parents(&self, n: NodeIdx) -> Result<BTreeSet<NodeIdx>> {
        self.check(n)?;
        Ok(self.up[n.index()].iter().map(|l| l.node).collect())
    }

    pub fn children(&self, n: NodeIdx) -> Result<BTreeSet<NodeIdx>> {
        self.check(n)?;
        Ok(self.down[n.index()].iter().map(|l| l.node).collect())
    }

    /// Word nodes whose label matches `label` after case folding, optionally
    /// restricted to one language. An empty set signals a miss.
    pub fn lookup_word(&self, label: &str, lang: Option<&str>) -> BTreeSet<NodeIdx> {
        let Some(hits) = self.words.get(&fold_case(label)) else {
            return BTreeSet::new();
        };
        hits.iter()
            .copied()
            .filter(|&n| match lang {
                Some(lang) => self.nodes[n.index()].lang.as_deref() == Some(lang),
                None => true,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&NetworkFileRef {
            nodes: &self.nodes,
            edges: &self.edges,
        })
        .expect("network serialization cannot fail")
    }

    pub fn write_json<W: Write>(&self, w: W) -> Result<()> {
        serde_json::to_writer_pretty(
            w,
            &NetworkFileRef {
                nodes: &self.nodes,
                edges: &self.edges,
            },
        )?;
        Ok(())
    }
}

#[derive(Serialize)]
struct NetworkFileRef<'a> {
    nodes: &'a [Node],
    edges: &'a [Edge],
}
