//! Literal, unoptimized evaluation of the ancestry sets and measures, used
//! as an independent reference. Works on plain indices and an edge list;
//! nothing here touches the library's closure or Dijkstra code.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `edges` are `(child, parent, weight)`; node 0..n, single root.
#[derive(Debug, Clone)]
pub struct Dag {
    pub n: usize,
    pub root: usize,
    pub edges: Vec<(usize, usize, f64)>,
}

impl Dag {
    fn parents(&self, u: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.edges
            .iter()
            .filter(move |e| e.0 == u)
            .map(|e| (e.1, e.2))
    }
}

/// Strict ancestors of one node, by fixpoint iteration.
pub fn h_node(dag: &Dag, m: usize) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = dag.parents(m).map(|(p, _)| p).collect();
    loop {
        let next: BTreeSet<usize> = set
            .iter()
            .flat_map(|&u| dag.parents(u).map(|(p, _)| p))
            .chain(set.iter().copied())
            .collect();
        if next == set {
            return set;
        }
        set = next;
    }
}

/// `h(M) = ∪ h(mᵢ)`.
pub fn h(dag: &Dag, members: &BTreeSet<usize>) -> BTreeSet<usize> {
    members.iter().flat_map(|&m| h_node(dag, m)).collect()
}

/// `c(M) = ∪ c(mᵢ)`, with `c(m) = {(u, v) : u ∈ {m} ∪ h(m), v ∈ h(m)}`.
pub fn c(dag: &Dag, members: &BTreeSet<usize>) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for &m in members {
        let hm = h_node(dag, m);
        for &(u, v, _) in &dag.edges {
            if (u == m || hm.contains(&u)) && hm.contains(&v) {
                out.insert((u, v));
            }
        }
    }
    out
}

/// Members plus strict ancestors.
pub fn closure(dag: &Dag, members: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut s = h(dag, members);
    s.extend(members.iter().copied());
    s
}

/// Minimum weight over every upward path from `from` to `to`, found by
/// enumerating all of them.
pub fn path_min(dag: &Dag, from: usize, to: usize) -> Option<f64> {
    if from == to {
        return Some(0.0);
    }
    let mut best: Option<f64> = None;
    for &(u, v, w) in &dag.edges {
        if u == from {
            if let Some(rest) = path_min(dag, v, to) {
                let total = w + rest;
                best = Some(best.map_or(total, |b: f64| b.min(total)));
            }
        }
    }
    best
}

/// `d(M, t)` for an ancestor-or-self `t`: min over members, in either
/// direction.
pub fn d(dag: &Dag, members: &BTreeSet<usize>, t: usize) -> Option<f64> {
    members
        .iter()
        .filter_map(|&m| path_min(dag, m, t).or_else(|| path_min(dag, t, m)))
        .min_by(f64::total_cmp)
}

pub struct NcaOut {
    pub nodes: BTreeSet<usize>,
    pub fallback: bool,
}

pub fn nca(dag: &Dag, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> NcaOut {
    let e: BTreeSet<(usize, usize)> = c(dag, a).intersection(&c(dag, b)).copied().collect();
    if e.is_empty() {
        return NcaOut {
            nodes: BTreeSet::from([dag.root]),
            fallback: a != b,
        };
    }
    let daughters: BTreeSet<usize> = e.iter().map(|&(u, _)| u).collect();
    let ancestors: BTreeSet<usize> = e.iter().map(|&(_, v)| v).collect();
    NcaOut {
        nodes: daughters.difference(&ancestors).copied().collect(),
        fallback: false,
    }
}

pub fn anca(dag: &Dag, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    let e: BTreeSet<(usize, usize)> = c(dag, a).intersection(&c(dag, b)).copied().collect();
    let ancestors: BTreeSet<usize> = e.iter().map(|&(_, v)| v).collect();
    let nca = nca(dag, a, b).nodes;
    let above_a = closure(dag, a);
    let above_b = closure(dag, b);
    ancestors
        .difference(&nca)
        .copied()
        .filter(|&n| {
            dag.edges
                .iter()
                .any(|&(d, p, _)| p == n && above_a.contains(&d) && !above_b.contains(&d))
        })
        .collect()
}

fn mean_pairs(dag: &Dag, a: &BTreeSet<usize>, b: &BTreeSet<usize>, targets: &BTreeSet<usize>) -> f64 {
    if targets.is_empty() {
        return 0.0;
    }
    let mut sum = 0.0;
    for &t in targets {
        sum += d(dag, a, t).unwrap() + d(dag, b, t).unwrap();
    }
    sum / targets.len() as f64
}

pub fn activation(dag: &Dag, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> f64 {
    mean_pairs(dag, a, b, &nca(dag, a, b).nodes)
}

pub fn proximity(dag: &Dag, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> f64 {
    activation(dag, a, b) + mean_pairs(dag, a, b, &anca(dag, a, b))
}
