use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::ancestry::Subject;
use crate::error::{Error, Result};
use crate::measures::{aggregate, Scorer};
use crate::network::{NodeIdx, SemanticNetwork};

/// Parses `id`, `word`, or `a+b+...` into a subject. Node ids take
/// precedence; otherwise each part is looked up as a word (all senses).
pub fn subject_from_spec(network: &SemanticNetwork, spec: &str) -> Result<Subject> {
    let parts: Vec<&str> = spec.split('+').map(str::trim).filter(|p| !p.is_empty()).collect();
    let mut members = BTreeSet::new();
    for part in &parts {
        if let Some(n) = network.node_idx(part) {
            members.insert(n);
            continue;
        }
        let senses = network.lookup_word(part, None);
        if senses.is_empty() {
            return Err(Error::UnknownNode((*part).to_owned()));
        }
        members.extend(senses);
    }
    match (parts.len(), members.len()) {
        (_, 0) => Err(Error::EmptyAggregate),
        (1, 1) => Ok(Subject::Node(*members.first().unwrap())),
        _ => Ok(Subject::Aggregate(aggregate(network, members)?)),
    }
}

fn name(net: &SemanticNetwork, s: &Subject) -> String {
    s.members().iter().map(|&m| net.id(m)).collect::<Vec<_>>().join("+")
}

fn set(net: &SemanticNetwork, nodes: &BTreeSet<NodeIdx>) -> String {
    let mut ids: Vec<&str> = nodes.iter().map(|&n| net.id(n)).collect();
    ids.sort_unstable();
    format!("{{{}}}", ids.join(", "))
}

/// Text dump of `h`, `c`, NCA, ANCA and both measures in both directions.
pub fn inspect(scorer: &Scorer<'_>, a: &Subject, b: &Subject) -> Result<String> {
    let net = scorer.network();
    let anc = scorer.ancestry();
    let (na, nb) = (name(net, a), name(net, b));
    let mut out = String::new();
    for (n, s) in [(&na, a), (&nb, b)] {
        writeln!(out, "h({n}) = {}", set(net, &anc.ancestors(s)?)).unwrap();
        let mut arcs: Vec<String> = anc
            .ancestor_arcs(s)?
            .iter()
            .map(|(u, v)| format!("({}, {})", net.id(u), net.id(v)))
            .collect();
        arcs.sort_unstable();
        writeln!(out, "c({n}) = {{{}}}", arcs.join(", ")).unwrap();
    }
    let nca = anc.nca(a, b)?;
    writeln!(
        out,
        "NCA({na}, {nb}) = {}{}",
        set(net, &nca.nodes),
        if nca.fallback_root { " [root fallback]" } else { "" }
    )
    .unwrap();
    writeln!(out, "ANCA({na}, {nb}) = {}", set(net, &anc.anca(a, b)?)).unwrap();
    writeln!(out, "ANCA({nb}, {na}) = {}", set(net, &anc.anca(b, a)?)).unwrap();
    for (x, y, sx, sy) in [(&na, &nb, a, b), (&nb, &na, b, a)] {
        writeln!(out, "activation({x}, {y}) = {}", scorer.activation(sx, sy)?.score).unwrap();
    }
    for (x, y, sx, sy) in [(&na, &nb, a, b), (&nb, &na, b, a)] {
        writeln!(out, "proximity({x}, {y}) = {}", scorer.proximity(sx, sy)?.score).unwrap();
    }
    Ok(out)
}
