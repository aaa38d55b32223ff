//! Ancestor closures, ancestor arc sets, upward distances, and the
//! symmetric / asymmetric nearest common ancestor sets.
//!
//! Everything is derived from one primitive: the reflexive upward closure of
//! a subject, computed by Dijkstra along child->parent links. Its key set is
//! `{f} ∪ h(f)` and its values are the weighted distances from `f`. The arc
//! set `c(f)` is exactly the set of upward links leaving a node of that key
//! set, so the intersection `c(A) ∩ c(B)` is the set of links leaving nodes
//! common to both closures. No arc set is ever materialized for a measure.

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::measures::AggregateNode;
use crate::network::{LinkWeightConfig, NodeIdx, SemanticNetwork};

/// What the ancestry operations accept: a bare node or a word-set aggregate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Node(NodeIdx),
    Aggregate(AggregateNode),
}

impl Subject {
    pub fn members(&self) -> &[NodeIdx] {
        match self {
            Subject::Node(n) => std::slice::from_ref(n),
            Subject::Aggregate(agg) => agg.members(),
        }
    }

    /// Two subjects denote the same graph position when their member sets
    /// coincide; a singleton aggregate equals its bare node.
    pub fn same_as(&self, other: &Subject) -> bool {
        self.members() == other.members()
    }
}

impl From<NodeIdx> for Subject {
    fn from(n: NodeIdx) -> Self {
        Subject::Node(n)
    }
}

impl From<AggregateNode> for Subject {
    fn from(agg: AggregateNode) -> Self {
        Subject::Aggregate(agg)
    }
}

/// A set of `(child, parent)` arcs with link types erased.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArcSet(BTreeSet<(NodeIdx, NodeIdx)>);

impl ArcSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, child: NodeIdx, parent: NodeIdx) -> bool {
        self.0.contains(&(child, parent))
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeIdx, NodeIdx)> + '_ {
        self.0.iter().copied()
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        ArcSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn daughters(&self) -> BTreeSet<NodeIdx> {
        self.0.iter().map(|&(c, _)| c).collect()
    }

    pub fn ancestor_nodes(&self) -> BTreeSet<NodeIdx> {
        self.0.iter().map(|&(_, p)| p).collect()
    }
}

impl FromIterator<(NodeIdx, NodeIdx)> for ArcSet {
    fn from_iter<I: IntoIterator<Item = (NodeIdx, NodeIdx)>>(iter: I) -> Self {
        ArcSet(iter.into_iter().collect())
    }
}

/// Reflexive upward closure with minimum distances.
#[derive(Debug, Clone, Default)]
pub struct Closure {
    dist: HashMap<NodeIdx, f64>,
}

impl Closure {
    pub fn distance(&self, n: NodeIdx) -> Option<f64> {
        self.dist.get(&n).copied()
    }

    pub fn contains(&self, n: NodeIdx) -> bool {
        self.dist.contains_key(&n)
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeIdx> + '_ {
        self.dist.keys().copied()
    }

    fn merge_min(&mut self, other: &Closure) {
        for (&n, &d) in &other.dist {
            self.dist
                .entry(n)
                .and_modify(|cur| {
                    if d < *cur {
                        *cur = d
                    }
                })
                .or_insert(d);
        }
    }
}

/// NCA set plus the intermediate sets the ANCA rule needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcaSet {
    pub nodes: BTreeSet<NodeIdx>,
    /// `AncestorNodes(c(A) ∩ c(B))`.
    pub ancestor_nodes: BTreeSet<NodeIdx>,
    /// Set when the arc intersection was empty for two distinct subjects
    /// and the root was substituted.
    pub fallback_root: bool,
}

#[derive(PartialEq)]
struct Pending(f64, NodeIdx);

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    // Reversed for a min-heap.
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

/// Ancestry queries over one network under one weight configuration.
///
/// Per-node closures are memoized behind a lock; the cache is an internal
/// detail and never changes results. The type is `Sync`, so one instance
/// can serve parallel queries.
#[derive(Debug)]
pub struct Ancestry<'n> {
    network: &'n SemanticNetwork,
    weights: Vec<f64>,
    cache: RwLock<HashMap<NodeIdx, Arc<Closure>>>,
}

impl<'n> Ancestry<'n> {
    pub fn new(network: &'n SemanticNetwork, config: &LinkWeightConfig) -> Self {
        Ancestry {
            network,
            weights: config.resolve(network),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn network(&self) -> &'n SemanticNetwork {
        self.network
    }

    fn check(&self, s: &Subject) -> Result<()> {
        s.members().iter().try_for_each(|&m| self.network.check(m))
    }

    fn dijkstra(&self, source: NodeIdx) -> Closure {
        let mut dist: HashMap<NodeIdx, f64> = HashMap::new();
        let mut heap = BinaryHeap::new();
        dist.insert(source, 0.0);
        heap.push(Pending(0.0, source));
        while let Some(Pending(d, n)) = heap.pop() {
            if d > dist[&n] {
                continue;
            }
            for link in self.network.parent_links(n) {
                let nd = d + self.weights[link.link_type.index()];
                match dist.get(&link.node) {
                    Some(&cur) if cur <= nd => {}
                    _ => {
                        dist.insert(link.node, nd);
                        heap.push(Pending(nd, link.node));
                    }
                }
            }
        }
        Closure { dist }
    }

    fn node_closure(&self, n: NodeIdx) -> Arc<Closure> {
        if let Some(c) = self.cache.read().unwrap().get(&n) {
            return Arc::clone(c);
        }
        let c = Arc::new(self.dijkstra(n));
        self.cache
            .write()
            .unwrap()
            .entry(n)
            .or_insert(c)
            .clone()
    }

    /// `{members} ∪ h(s)` with the minimum distance from any member.
    pub fn closure(&self, s: &Subject) -> Result<Arc<Closure>> {
        self.check(s)?;
        Ok(self.closure_unchecked(s))
    }

    fn closure_unchecked(&self, s: &Subject) -> Arc<Closure> {
        match s.members() {
            [] => Arc::new(Closure::default()),
            [only] => self.node_closure(*only),
            members => {
                let parts: Vec<Arc<Closure>> =
                    members.iter().map(|&m| self.node_closure(m)).collect();
                let largest = (0..parts.len()).max_by_key(|&i| parts[i].len()).unwrap();
                let mut merged = (*parts[largest]).clone();
                for (i, part) in parts.iter().enumerate() {
                    if i != largest {
                        merged.merge_min(part);
                    }
                }
                Arc::new(merged)
            }
        }
    }

    /// `h(s)`: strict ancestors; for an aggregate, the union of the
    /// members' ancestor sets.
    pub fn ancestors(&self, s: &Subject) -> Result<BTreeSet<NodeIdx>> {
        self.check(s)?;
        let mut out = BTreeSet::new();
        for &m in s.members() {
            out.extend(self.node_closure(m).nodes().filter(|&n| n != m));
        }
        Ok(out)
    }

    /// `c(s)`: every arc on an upward path from `s` to the root.
    pub fn ancestor_arcs(&self, s: &Subject) -> Result<ArcSet> {
        let closure = self.closure(s)?;
        Ok(closure
            .nodes()
            .flat_map(|u| {
                self.network
                    .parent_links(u)
                    .iter()
                    .map(move |l| (u, l.node))
            })
            .collect())
    }

    /// Weighted length of the cheapest upward path between `a` and `b`,
    /// whichever is the descendant. For an aggregate, the minimum over the
    /// members related to `b`.
    pub fn distance(&self, a: &Subject, b: NodeIdx) -> Result<f64> {
        self.check(a)?;
        self.network.check(b)?;
        let closure = self.closure_unchecked(a);
        let upper = self.upper_members(a);
        self.subject_distance(a, &closure, &upper, b).ok_or_else(|| {
            let names: Vec<&str> = a.members().iter().map(|&m| self.network.id(m)).collect();
            Error::NotRelated(names.join("+"), self.network.id(b).to_owned())
        })
    }

    /// Members lying above another member. Only these can sit above a node
    /// of the subject's closure, so only they need a downward check.
    pub(crate) fn upper_members(&self, s: &Subject) -> Vec<NodeIdx> {
        let members = s.members();
        if members.len() < 2 {
            return Vec::new();
        }
        let closures: Vec<Arc<Closure>> = members.iter().map(|&m| self.node_closure(m)).collect();
        members
            .iter()
            .enumerate()
            .filter(|&(i, &m)| {
                closures
                    .iter()
                    .enumerate()
                    .any(|(j, c)| i != j && c.contains(m))
            })
            .map(|(_, &m)| m)
            .collect()
    }

    /// `min` over members of the distance to `t`, in whichever direction
    /// the member and `t` are related.
    pub(crate) fn subject_distance(
        &self,
        s: &Subject,
        closure: &Closure,
        upper: &[NodeIdx],
        t: NodeIdx,
    ) -> Option<f64> {
        let up = closure.distance(t);
        if upper.is_empty() && up.is_some() {
            return up;
        }
        // When `t` is above the subject only upper members can also sit
        // above `t`; otherwise any member may.
        let candidates = if up.is_some() { upper } else { s.members() };
        let from_t = self.node_closure(t);
        candidates
            .iter()
            .filter_map(|&m| from_t.distance(m))
            .chain(up)
            .min_by(f64::total_cmp)
    }

    pub fn nca(&self, a: &Subject, b: &Subject) -> Result<NcaSet> {
        self.check(a)?;
        self.check(b)?;
        let (ca, cb) = (self.closure_unchecked(a), self.closure_unchecked(b));
        Ok(self.nca_from(a, &ca, b, &cb))
    }

    pub fn anca(&self, a: &Subject, b: &Subject) -> Result<BTreeSet<NodeIdx>> {
        self.check(a)?;
        self.check(b)?;
        let (ca, cb) = (self.closure_unchecked(a), self.closure_unchecked(b));
        let nca = self.nca_from(a, &ca, b, &cb);
        Ok(self.anca_from(&ca, &cb, &nca))
    }

    pub(crate) fn closures(&self, a: &Subject, b: &Subject) -> Result<(Arc<Closure>, Arc<Closure>)> {
        self.check(a)?;
        self.check(b)?;
        Ok((self.closure_unchecked(a), self.closure_unchecked(b)))
    }

    pub(crate) fn nca_from(&self, a: &Subject, ca: &Closure, b: &Subject, cb: &Closure) -> NcaSet {
        let (small, large) = if ca.len() <= cb.len() { (ca, cb) } else { (cb, ca) };
        let mut daughters = BTreeSet::new();
        let mut ancestor_nodes = BTreeSet::new();
        for u in small.nodes().filter(|&u| large.contains(u)) {
            let parents = self.network.parent_links(u);
            if !parents.is_empty() {
                daughters.insert(u);
                ancestor_nodes.extend(parents.iter().map(|l| l.node));
            }
        }
        if daughters.is_empty() {
            return NcaSet {
                nodes: BTreeSet::from([self.network.root()]),
                ancestor_nodes,
                fallback_root: !a.same_as(b),
            };
        }
        NcaSet {
            nodes: daughters.difference(&ancestor_nodes).copied().collect(),
            ancestor_nodes,
            fallback_root: false,
        }
    }

    /// Ancestors in the arc intersection, minus the NCA, that have a direct
    /// daughter inside `{A} ∪ h(A)` but outside `{B} ∪ h(B)`.
    pub(crate) fn anca_from(&self, ca: &Closure, cb: &Closure, nca: &NcaSet) -> BTreeSet<NodeIdx> {
        let candidates: HashSet<NodeIdx> = nca
            .ancestor_nodes
            .difference(&nca.nodes)
            .copied()
            .collect();
        if candidates.is_empty() {
            return BTreeSet::new();
        }
        let mut out = BTreeSet::new();
        for d in ca.nodes().filter(|&d| !cb.contains(d)) {
            for link in self.network.parent_links(d) {
                if candidates.contains(&link.node) {
                    out.insert(link.node);
                }
            }
        }
        out
    }
}

/// One-shot form of [`Ancestry::ancestors`].
pub fn ancestors(network: &SemanticNetwork, f: &Subject) -> Result<BTreeSet<NodeIdx>> {
    Ancestry::new(network, &LinkWeightConfig::unit()).ancestors(f)
}

pub fn ancestor_arcs(network: &SemanticNetwork, f: &Subject) -> Result<ArcSet> {
    Ancestry::new(network, &LinkWeightConfig::unit()).ancestor_arcs(f)
}

pub fn distance(
    network: &SemanticNetwork,
    a: &Subject,
    b: NodeIdx,
    config: &LinkWeightConfig,
) -> Result<f64> {
    Ancestry::new(network, config).distance(a, b)
}

pub fn nca(network: &SemanticNetwork, a: &Subject, b: &Subject) -> Result<NcaSet> {
    Ancestry::new(network, &LinkWeightConfig::unit()).nca(a, b)
}

pub fn anca(network: &SemanticNetwork, a: &Subject, b: &Subject) -> Result<BTreeSet<NodeIdx>> {
    Ancestry::new(network, &LinkWeightConfig::unit()).anca(a, b)
}
