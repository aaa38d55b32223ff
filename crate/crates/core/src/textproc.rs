//! From raw text to sets of network nodes: sentence segmentation,
//! tokenization, stopword removal, entity normalization, and word lookup.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::io::{BufRead, BufReader, Read};

use crate::error::{Error, Result};
use crate::network::{fold_case, NodeIdx, SemanticNetwork};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub id: usize,
    /// Whitespace-normalized source text.
    pub raw: String,
    /// Case-folded tokens in document order.
    pub tokens: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SegmentMode {
    /// Split after `.`, `!` or `?` followed by whitespace.
    #[default]
    Punctuation,
    /// Every nonblank line is one sentence.
    LinePerSentence,
}

const CLOSERS: &[char] = &['"', '\'', ')', ']', '»', '”', '’'];

fn ends_sentence(word: &str) -> bool {
    word.trim_end_matches(CLOSERS)
        .ends_with(['.', '!', '?'])
}

pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !(c.is_alphanumeric() || c == '-' || c == '_'))
        .map(|t| t.trim_matches('-'))
        .filter(|t| !t.is_empty())
        .map(fold_case)
        .collect()
}

pub fn segment(text: &str, mode: SegmentMode) -> Vec<Sentence> {
    let mut raws: Vec<String> = Vec::new();
    match mode {
        SegmentMode::LinePerSentence => {
            for line in text.lines() {
                let words: Vec<&str> = line.split_whitespace().collect();
                if !words.is_empty() {
                    raws.push(words.join(" "));
                }
            }
        }
        SegmentMode::Punctuation => {
            let mut current: Vec<&str> = Vec::new();
            for word in text.split_whitespace() {
                current.push(word);
                if ends_sentence(word) {
                    raws.push(current.join(" "));
                    current.clear();
                }
            }
            if !current.is_empty() {
                raws.push(current.join(" "));
            }
        }
    }
    raws.into_iter()
        .enumerate()
        .map(|(id, raw)| Sentence {
            id,
            tokens: tokenize(&raw),
            raw,
        })
        .collect()
}

/// Empty words removed before scoring. Lookup is case-insensitive.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopList {
    words: HashSet<String>,
}

impl StopList {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        StopList {
            words: words.into_iter().map(|w| fold_case(w.as_ref())).collect(),
        }
    }

    /// One word per line; blank lines and `#` comments are skipped.
    pub fn from_reader<R: Read>(source: R) -> Result<Self> {
        let mut words = HashSet::new();
        for line in BufReader::new(source).lines() {
            let line = line?;
            let w = line.trim();
            if !w.is_empty() && !w.starts_with('#') {
                words.insert(fold_case(w));
            }
        }
        Ok(StopList { words })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&fold_case(word))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Distinct tokens that are not stopwords.
pub fn content_words(tokens: &[String], stop: &StopList) -> BTreeSet<String> {
    tokens
        .iter()
        .filter(|t| !stop.contains(t))
        .cloned()
        .collect()
}

/// Surface token -> replacement token, e.g. a company name to `company`.
/// No replacement may itself be a surface form, so normalizing twice is the
/// same as normalizing once.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizationMap {
    map: HashMap<String, String>,
}

impl NormalizationMap {
    pub fn new<I, K, V>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let map: HashMap<String, String> = pairs
            .into_iter()
            .map(|(k, v)| (fold_case(k.as_ref()), fold_case(v.as_ref())))
            .collect();
        let mut overlap: Vec<&String> = map.values().filter(|v| map.contains_key(*v)).collect();
        overlap.sort();
        if let Some(v) = overlap.first() {
            return Err(Error::OverlappingNormalization((*v).clone()));
        }
        Ok(NormalizationMap { map })
    }

    /// Two tab-separated columns: surface, replacement.
    pub fn from_reader<R: Read>(source: R) -> Result<Self> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        let mut seen: HashMap<String, String> = HashMap::new();
        for (i, line) in BufReader::new(source).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |message: &str| Error::MalformedLine {
                line: i + 1,
                message: message.to_owned(),
            };
            let (surface, replacement) = line
                .split_once('\t')
                .ok_or_else(|| malformed("expected `surface<TAB>replacement`"))?;
            let (surface, replacement) = (surface.trim(), replacement.trim());
            if surface.is_empty() || replacement.is_empty() || replacement.contains('\t') {
                return Err(malformed("expected `surface<TAB>replacement`"));
            }
            if let Some(prev) = seen.insert(fold_case(surface), fold_case(replacement)) {
                if prev != fold_case(replacement) {
                    return Err(malformed("conflicting replacement for a repeated surface form"));
                }
            }
            pairs.push((surface.to_owned(), replacement.to_owned()));
        }
        Self::new(pairs)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn normalize(&self, tokens: &[String]) -> Vec<String> {
        tokens
            .iter()
            .map(|t| self.map.get(t).cloned().unwrap_or_else(|| t.clone()))
            .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Resolution {
    /// Every sense of every matched word.
    pub resolved: BTreeSet<NodeIdx>,
    pub unresolved: BTreeSet<String>,
}

pub fn resolve<'w, I>(words: I, network: &SemanticNetwork, lang: Option<&str>) -> Resolution
where
    I: IntoIterator<Item = &'w str>,
{
    let mut out = Resolution::default();
    for w in words {
        let hits = network.lookup_word(w, lang);
        if hits.is_empty() {
            out.unresolved.insert(w.to_owned());
        } else {
            out.resolved.extend(hits);
        }
    }
    out
}
