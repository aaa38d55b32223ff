//! Whole-graph comparisons against the oracle and the metric laws, shared
//! by the property tests and the acceptance runner. Each returns the first
//! discrepancy as a message.

#![allow(dead_code)]

use std::collections::BTreeSet;

use semnet_core::{aggregate, Scorer, SemanticNetwork, Subject};

use super::gen::{from_idx, id, to_idx, RandomDag};
use super::oracle;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

macro_rules! ensure_eq {
    ($got:expr, $want:expr, $($msg:tt)+) => {{
        let (got, want) = (&$got, &$want);
        if got != want {
            return Err(format!("{}: got {:?}, want {:?}", format!($($msg)+), got, want));
        }
    }};
}

pub fn subject(net: &SemanticNetwork, members: &BTreeSet<usize>) -> Subject {
    let idx = to_idx(net, members);
    if idx.len() == 1 {
        Subject::Node(*idx.first().unwrap())
    } else {
        Subject::Aggregate(aggregate(net, idx).unwrap())
    }
}

/// h, c, d, NCA, ANCA, activation and proximity against the oracle for
/// every subject pair of one random graph.
pub fn oracle_equivalence(seed: u64) -> Result<(), String> {
    let g = RandomDag::generate(seed, 3, 12);
    let net = g.network();
    let dag = g.dag(&g.config);
    let scorer = Scorer::new(&net, &g.config);
    let anc = scorer.ancestry();
    let subjects = g.subjects(seed);
    let node = |n| from_idx(&net, &BTreeSet::from([n])).pop_first().unwrap();

    for a in &subjects {
        let sa = subject(&net, a);
        ensure_eq!(from_idx(&net, &anc.ancestors(&sa).unwrap()), oracle::h(&dag, a), "h({a:?})");
        let arcs: BTreeSet<(usize, usize)> =
            anc.ancestor_arcs(&sa).unwrap().iter().map(|(u, v)| (node(u), node(v))).collect();
        ensure_eq!(arcs, oracle::c(&dag, a), "c({a:?})");
        for t in 0..g.n {
            let got = anc.distance(&sa, net.require(&id(t)).unwrap()).ok();
            ensure_eq!(got, oracle::d(&dag, a, t), "d({a:?}, {t})");
        }
    }

    for a in &subjects {
        for b in &subjects {
            let (sa, sb) = (subject(&net, a), subject(&net, b));
            let nca = anc.nca(&sa, &sb).unwrap();
            let expected = oracle::nca(&dag, a, b);
            ensure_eq!(from_idx(&net, &nca.nodes), expected.nodes, "NCA({a:?}, {b:?})");
            ensure_eq!(nca.fallback_root, expected.fallback, "fallback({a:?}, {b:?})");
            ensure_eq!(
                from_idx(&net, &anc.anca(&sa, &sb).unwrap()),
                oracle::anca(&dag, a, b),
                "ANCA({a:?}, {b:?})"
            );
            ensure_eq!(
                scorer.activation(&sa, &sb).unwrap().score,
                oracle::activation(&dag, a, b),
                "activation({a:?}, {b:?})"
            );
            ensure_eq!(
                scorer.proximity(&sa, &sb).unwrap().score,
                oracle::proximity(&dag, a, b),
                "proximity({a:?}, {b:?})"
            );
        }
    }
    Ok(())
}

/// Identity, symmetry, dominance, scaling by `k` and singleton-aggregate
/// equivalence on one random graph.
pub fn metric_laws(seed: u64, k: f64) -> Result<(), String> {
    let g = RandomDag::generate(seed, 3, 12);
    let net = g.network();
    let scorer = Scorer::new(&net, &g.config);
    let scaled_config = g.config.scaled(k).unwrap();
    let scaled = Scorer::new(&net, &scaled_config);
    let subjects = g.subjects(seed);
    let close = |x: f64, y: f64| (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0);

    for a in &subjects {
        let sa = subject(&net, a);
        ensure_eq!(scorer.activation(&sa, &sa).unwrap().score, 0.0, "activation({a:?}, self)");
        ensure_eq!(scorer.proximity(&sa, &sa).unwrap().score, 0.0, "proximity({a:?}, self)");
        ensure!(!scorer.ancestry().nca(&sa, &sa).unwrap().fallback_root, "fallback on ({a:?}, self)");
        ensure!(scorer.ancestry().anca(&sa, &sa).unwrap().is_empty(), "ANCA({a:?}, self) nonempty");

        for b in &subjects {
            let sb = subject(&net, b);
            let ab = scorer.activation(&sa, &sb).unwrap();
            let ba = scorer.activation(&sb, &sa).unwrap();
            ensure_eq!(ab.score, ba.score, "activation symmetry {a:?} {b:?}");
            ensure_eq!(ab.nca, ba.nca, "NCA symmetry {a:?} {b:?}");

            let p = scorer.proximity(&sa, &sb).unwrap();
            ensure!(p.score >= ab.score, "dominance {a:?} {b:?}: {} < {}", p.score, ab.score);
            // With positive weights, equality iff ANCA empty. Aggregates
            // can have an ANCA that is one of their own members, at
            // distance zero, so only single nodes get the converse.
            if a.len() == 1 && b.len() == 1 {
                ensure_eq!(p.score == ab.score, p.anca.is_empty(), "dominance equality {a:?} {b:?}");
            } else if p.anca.is_empty() {
                ensure_eq!(p.score, ab.score, "empty ANCA {a:?} {b:?}");
            }

            let ps = scaled.proximity(&sa, &sb).unwrap();
            ensure!(close(ps.score, k * p.score), "proximity scaling {a:?} {b:?}: {} vs {}", ps.score, k * p.score);
            ensure_eq!(ps.nca, p.nca, "NCA under scaling {a:?} {b:?}");
            ensure_eq!(ps.anca, p.anca, "ANCA under scaling {a:?} {b:?}");
            let asc = scaled.activation(&sa, &sb).unwrap();
            ensure!(close(asc.score, k * ab.score), "activation scaling {a:?} {b:?}");

            for &n in p.nca.iter().chain(&p.anca) {
                ensure!(scorer.ancestry().distance(&sa, n).is_ok(), "{n} unrelated to {a:?}");
                ensure!(scorer.ancestry().distance(&sb, n).is_ok(), "{n} unrelated to {b:?}");
            }
        }
    }

    for i in 0..g.n {
        for j in 0..g.n {
            let ni = net.require(&id(i)).unwrap();
            let nj = net.require(&id(j)).unwrap();
            let (bi, bj) = (Subject::Node(ni), Subject::Node(nj));
            let (ai, aj) = (
                Subject::Aggregate(aggregate(&net, [ni]).unwrap()),
                Subject::Aggregate(aggregate(&net, [nj]).unwrap()),
            );
            let bare = scorer.proximity(&bi, &bj).unwrap();
            ensure_eq!(scorer.proximity(&ai, &bj).unwrap(), bare, "singleton {i} {j}");
            ensure_eq!(scorer.proximity(&bi, &aj).unwrap(), bare, "singleton {i} {j}");
            ensure_eq!(scorer.proximity(&ai, &aj).unwrap(), bare, "singleton {i} {j}");
            ensure_eq!(
                scorer.activation(&ai, &aj).unwrap().score,
                scorer.activation(&bi, &bj).unwrap().score,
                "singleton activation {i} {j}"
            );
        }
    }
    Ok(())
}

/// A triple of single nodes where `m(a,b) + m(b,c) < m(a,c)`.
#[derive(Debug, Clone)]
pub struct TriangleViolation {
    pub measure: &'static str,
    pub nodes: [String; 3],
    pub sides: [f64; 3],
}

/// Every triangle-inequality violation among single nodes of `net`.
pub fn triangle_violations(scorer: &Scorer<'_>) -> Vec<TriangleViolation> {
    let net = scorer.network();
    let all: Vec<(String, Subject)> = net
        .nodes()
        .iter()
        .map(|n| (n.id.clone(), Subject::Node(net.require(&n.id).unwrap())))
        .collect();
    let mut out = Vec::new();
    for name in ["activation", "proximity"] {
        let score = |x: &Subject, y: &Subject| {
            let r = if name == "activation" {
                scorer.activation(x, y)
            } else {
                scorer.proximity(x, y)
            };
            r.unwrap().score
        };
        for (na, a) in &all {
            for (nb, b) in &all {
                for (nc, c) in &all {
                    let sides = [score(a, b), score(b, c), score(a, c)];
                    if sides[0] + sides[1] < sides[2] {
                        out.push(TriangleViolation {
                            measure: name,
                            nodes: [na.clone(), nb.clone(), nc.clone()],
                            sides,
                        });
                    }
                }
            }
        }
    }
    out
}
