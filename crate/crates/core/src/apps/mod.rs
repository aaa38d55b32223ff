//! Applications built on the measures: sentence filtering and its
//! precision/recall evaluation, profile classification, term spotting,
//! query expansion, and a debugging dump of the ancestry sets.

mod classify;
mod eval;
mod expand;
mod filter;
mod inspect;
mod terms;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::ancestry::Subject;
use crate::error::{Error, Result};
use crate::measures::aggregate;
use crate::network::SemanticNetwork;
use crate::textproc::{content_words, resolve, tokenize, NormalizationMap, Resolution, StopList};

pub use classify::classify;
pub use eval::{evaluate, EvalReport, EvalRow, DEFAULT_GRID};
pub use expand::{expand, Expansion, ExpansionRequest, Mechanism};
pub use filter::{
    filter_sentences, keep_count, mark_kept, rank, read_reference, read_scored, write_scored,
    FilterOptions, ScoredSentence,
};
pub use inspect::{inspect, subject_from_spec};
pub use terms::spot_terms;

/// A distance score, or the marker for input that had nothing to score.
/// Unresolvable sorts after every value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Score {
    Value(f64),
    Unresolvable,
}

impl Score {
    pub fn value(self) -> Option<f64> {
        match self {
            Score::Value(v) => Some(v),
            Score::Unresolvable => None,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value().unwrap_or(f64::INFINITY)
    }

    pub fn rank_cmp(&self, other: &Score) -> Ordering {
        match (self, other) {
            (Score::Value(a), Score::Value(b)) => a.total_cmp(b),
            (Score::Value(_), Score::Unresolvable) => Ordering::Less,
            (Score::Unresolvable, Score::Value(_)) => Ordering::Greater,
            (Score::Unresolvable, Score::Unresolvable) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Score::Value(v) => write!(f, "{v}"),
            Score::Unresolvable => f.write_str("inf"),
        }
    }
}

/// A named word set describing a domain of interest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub id: String,
    pub definition: Vec<String>,
}

impl Profile {
    pub fn new<I, S>(id: impl Into<String>, words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Profile {
            id: id.into(),
            definition: words.into_iter().map(Into::into).collect(),
        }
    }

    /// Looks each entry up as a whole label first (so multiword labels
    /// work), then falls back to its individual tokens. Profiles are not
    /// stopword-filtered.
    pub fn resolve(&self, network: &SemanticNetwork, lang: Option<&str>) -> Resolution {
        let mut out = Resolution::default();
        for entry in &self.definition {
            let whole = network.lookup_word(entry.trim(), lang);
            if !whole.is_empty() {
                out.resolved.extend(whole);
                continue;
            }
            let tokens = tokenize(entry);
            if tokens.len() <= 1 {
                out.unresolved.insert(entry.trim().to_owned());
                continue;
            }
            let r = resolve(tokens.iter().map(String::as_str), network, lang);
            out.resolved.extend(r.resolved);
            out.unresolved.extend(r.unresolved);
        }
        out
    }

    pub(crate) fn subject(&self, network: &SemanticNetwork, lang: Option<&str>) -> Option<Subject> {
        let r = self.resolve(network, lang);
        aggregate(network, r.resolved).ok().map(Subject::Aggregate)
    }
}

/// Reads a JSON array of `{"id", "definition": [words]}`.
pub fn load_profiles<R: Read>(source: R) -> Result<Vec<Profile>> {
    let profiles: Vec<Profile> = serde_json::from_reader(source)?;
    let mut seen = HashSet::new();
    for p in &profiles {
        if !seen.insert(p.id.as_str()) {
            return Err(Error::DuplicateProfile(p.id.clone()));
        }
        if p.definition.iter().all(|w| w.trim().is_empty()) {
            return Err(Error::EmptyProfile(p.id.clone()));
        }
    }
    Ok(profiles)
}

/// Stopword removal, normalization, and lookup applied to corpus text.
#[derive(Debug, Clone, Default)]
pub struct TextPipeline {
    pub stop: StopList,
    pub norm: NormalizationMap,
    pub lang: Option<String>,
}

impl TextPipeline {
    pub fn new(stop: StopList, norm: NormalizationMap) -> Self {
        TextPipeline {
            stop,
            norm,
            lang: None,
        }
    }

    pub fn content_words(&self, tokens: &[String]) -> BTreeSet<String> {
        content_words(&self.norm.normalize(tokens), &self.stop)
    }

    pub fn resolve_tokens(&self, network: &SemanticNetwork, tokens: &[String]) -> Resolution {
        let words = self.content_words(tokens);
        resolve(words.iter().map(String::as_str), network, self.lang.as_deref())
    }
}
