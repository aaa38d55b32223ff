//! Query expansion as typed-link traversal.
//!
//! Lexical relations are carried by link types named after them:
//! `synonym`, `alias`, `inflected`, `derived`, `geographic`, `translation`.
//! Every other link type counts as taxonomic for hypernym/hyponym
//! traversal. A word linked to a node by a `synonym` edge lexicalizes that
//! node, which then acts as its sense node.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::network::{NodeIdx, NodeKind, SemanticNetwork};

const SYNONYM: &str = "synonym";
const ALIAS: &str = "alias";
const INFLECTED: &str = "inflected";
const DERIVED: &str = "derived";
const GEOGRAPHIC: &str = "geographic";
const TRANSLATION: &str = "translation";

const LEXICAL: [&str; 6] = [SYNONYM, ALIAS, INFLECTED, DERIVED, GEOGRAPHIC, TRANSLATION];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mechanism {
    Alias,
    Synonyms,
    Hypernyms,
    Hyponyms,
    Inflected,
    Derived,
    Geographic,
    Translation,
}

impl Mechanism {
    pub const ALL: [Mechanism; 8] = [
        Mechanism::Alias,
        Mechanism::Synonyms,
        Mechanism::Hypernyms,
        Mechanism::Hyponyms,
        Mechanism::Inflected,
        Mechanism::Derived,
        Mechanism::Geographic,
        Mechanism::Translation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mechanism::Alias => "alias",
            Mechanism::Synonyms => "synonyms",
            Mechanism::Hypernyms => "hypernyms",
            Mechanism::Hyponyms => "hyponyms",
            Mechanism::Inflected => "inflected",
            Mechanism::Derived => "derived",
            Mechanism::Geographic => "geographic",
            Mechanism::Translation => "translation",
        }
    }
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mechanism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mechanism::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownMechanism(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionRequest {
    pub word: String,
    pub mechanisms: BTreeSet<Mechanism>,
    /// Target language for [`Mechanism::Translation`].
    pub lang: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Expansion {
    pub label: String,
    pub lang: Option<String>,
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lang {
            Some(lang) => write!(f, "{} ({lang})", self.label),
            None => f.write_str(&self.label),
        }
    }
}

struct Walker<'n> {
    net: &'n SemanticNetwork,
}

impl<'n> Walker<'n> {
    fn type_name(&self, t: crate::network::LinkTypeId) -> &'n str {
        self.net.link_type_name(t)
    }

    fn up_by<'a>(&'a self, n: NodeIdx, pred: impl Fn(&str) -> bool + 'a) -> impl Iterator<Item = NodeIdx> + 'a {
        self.net
            .parent_links(n)
            .iter()
            .filter(move |l| pred(self.type_name(l.link_type)))
            .map(|l| l.node)
    }

    fn down_by<'a>(&'a self, n: NodeIdx, pred: impl Fn(&str) -> bool + 'a) -> impl Iterator<Item = NodeIdx> + 'a {
        self.net
            .child_links(n)
            .iter()
            .filter(move |l| pred(self.type_name(l.link_type)))
            .map(|l| l.node)
    }

    fn is_word(&self, n: NodeIdx) -> bool {
        self.net.node(n).kind == NodeKind::Word
    }

    fn lang(&self, n: NodeIdx) -> Option<&'n str> {
        self.net.node(n).lang.as_deref()
    }

    /// Words lexicalizing the same sense node as `w`, plus words joined to
    /// `w` by a direct synonym link.
    fn co_lexicalized(&self, w: NodeIdx) -> BTreeSet<NodeIdx> {
        let is_syn = |t: &str| t == SYNONYM;
        let mut out = BTreeSet::new();
        for sense in self.up_by(w, is_syn) {
            if self.is_word(sense) {
                out.insert(sense);
            }
            out.extend(self.down_by(sense, is_syn).filter(|&n| self.is_word(n)));
        }
        out.extend(self.down_by(w, is_syn).filter(|&n| self.is_word(n)));
        out.remove(&w);
        out
    }

    fn expand_sense(&self, w: NodeIdx, m: Mechanism, lang: Option<&str>) -> BTreeSet<NodeIdx> {
        let typed = |name: &'static str| move |t: &str| t == name;
        let taxonomic = |t: &str| !LEXICAL.contains(&t);
        let both_ways = |name: &'static str| -> BTreeSet<NodeIdx> {
            self.up_by(w, typed(name)).chain(self.down_by(w, typed(name))).collect()
        };
        match m {
            Mechanism::Hypernyms => self.up_by(w, taxonomic).collect(),
            Mechanism::Hyponyms => self.down_by(w, taxonomic).collect(),
            Mechanism::Synonyms => self
                .co_lexicalized(w)
                .into_iter()
                .filter(|&n| self.lang(n) == self.lang(w))
                .collect(),
            Mechanism::Translation => {
                let Some(target) = lang else {
                    return BTreeSet::new();
                };
                self.co_lexicalized(w)
                    .into_iter()
                    .chain(both_ways(TRANSLATION))
                    .filter(|&n| self.is_word(n) && self.lang(n) == Some(target) && n != w)
                    .collect()
            }
            Mechanism::Alias => both_ways(ALIAS),
            Mechanism::Inflected => both_ways(INFLECTED),
            Mechanism::Derived => both_ways(DERIVED),
            Mechanism::Geographic => both_ways(GEOGRAPHIC),
        }
    }
}

/// Expands every sense of the requested word with each mechanism.
/// Mechanisms whose link types the network lacks yield empty sets.
pub fn expand(
    network: &SemanticNetwork,
    request: &ExpansionRequest,
) -> Result<BTreeMap<Mechanism, BTreeSet<Expansion>>> {
    if request.mechanisms.is_empty() {
        return Err(Error::NoMechanism);
    }
    if request.mechanisms.contains(&Mechanism::Translation) && request.lang.is_none() {
        return Err(Error::MissingTargetLang);
    }
    let senses = network.lookup_word(&request.word, None);
    if senses.is_empty() {
        return Err(Error::UnknownWord(request.word.clone()));
    }
    let walker = Walker { net: network };
    let mut out = BTreeMap::new();
    for &m in &request.mechanisms {
        let mut found = BTreeSet::new();
        for &w in &senses {
            for n in walker.expand_sense(w, m, request.lang.as_deref()) {
                if senses.contains(&n) {
                    continue;
                }
                let node = network.node(n);
                found.insert(Expansion {
                    label: node.label.clone(),
                    lang: node.lang.clone(),
                });
            }
        }
        out.insert(m, found);
    }
    Ok(out)
}
