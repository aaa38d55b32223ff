use std::collections::BTreeSet;
use std::io::{BufRead, BufReader, Read, Write};

use rayon::prelude::*;

use super::{Profile, Score, TextPipeline};
use crate::ancestry::Subject;
use crate::error::{Error, Result};
use crate::measures::{aggregate, Scorer};
use crate::textproc::Sentence;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterOptions {
    /// Fraction of the corpus to keep, lowest scores first.
    pub keep_fraction: f64,
    /// Optional absolute cutoff: sentences scoring above it are never kept.
    pub max_score: Option<f64>,
}

impl FilterOptions {
    pub fn keep(keep_fraction: f64) -> Self {
        FilterOptions {
            keep_fraction,
            max_score: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoredSentence {
    pub id: usize,
    pub score: Score,
    pub kept: bool,
}

pub(crate) fn check_fraction(f: f64) -> Result<()> {
    if f > 0.0 && f <= 1.0 {
        Ok(())
    } else {
        Err(Error::KeepFraction(f))
    }
}

/// `⌈fraction × total⌉`, tolerant of binary rounding (0.3 × 10 keeps 3).
pub fn keep_count(total: usize, fraction: f64) -> usize {
    let raw = (fraction * total as f64 - 1e-9).ceil();
    (raw.max(0.0) as usize).min(total)
}

/// Ascending score, then ascending sentence id.
pub fn rank(scored: &mut [ScoredSentence]) {
    scored.sort_by(|a, b| a.score.rank_cmp(&b.score).then(a.id.cmp(&b.id)));
}

/// Marks the kept prefix of an already ranked list. Unresolvable sentences
/// are never kept.
pub fn mark_kept(ranked: &mut [ScoredSentence], options: FilterOptions) {
    let quota = keep_count(ranked.len(), options.keep_fraction);
    for (i, s) in ranked.iter_mut().enumerate() {
        s.kept = i < quota
            && match (s.score, options.max_score) {
                (Score::Unresolvable, _) => false,
                (Score::Value(v), Some(max)) => v <= max,
                (Score::Value(_), None) => true,
            };
    }
}

/// Scores every sentence by activation against the profile and keeps the
/// closest fraction. Returns the sentences in rank order.
pub fn filter_sentences(
    scorer: &Scorer<'_>,
    profile: &Profile,
    corpus: &[Sentence],
    options: FilterOptions,
    pipeline: &TextPipeline,
) -> Result<Vec<ScoredSentence>> {
    check_fraction(options.keep_fraction)?;
    let network = scorer.network();
    let profile_subject = profile
        .subject(network, pipeline.lang.as_deref())
        .ok_or_else(|| Error::UnresolvableProfile(profile.id.clone()))?;
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let mut scored = corpus
        .par_iter()
        .map(|sentence| {
            let nodes = pipeline.resolve_tokens(network, &sentence.tokens).resolved;
            let score = if nodes.is_empty() {
                Score::Unresolvable
            } else {
                let s = Subject::Aggregate(aggregate(network, nodes)?);
                Score::Value(scorer.activation(&profile_subject, &s)?.score)
            };
            Ok(ScoredSentence {
                id: sentence.id,
                score,
                kept: false,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    rank(&mut scored);
    mark_kept(&mut scored, options);
    Ok(scored)
}

/// `sentence_id TAB score TAB kept(0/1)`, one line per sentence.
pub fn write_scored<W: Write>(mut w: W, scored: &[ScoredSentence]) -> Result<()> {
    for s in scored {
        writeln!(w, "{}\t{}\t{}", s.id, s.score, u8::from(s.kept))?;
    }
    Ok(())
}

pub fn read_scored<R: Read>(source: R) -> Result<Vec<ScoredSentence>> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(source).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: i + 1,
            message: "expected `sentence_id<TAB>score<TAB>kept`".to_owned(),
        };
        let cols: Vec<&str> = line.trim_end().split('\t').collect();
        let [id, score, kept] = cols.as_slice() else {
            return Err(malformed());
        };
        let id: usize = id.trim().parse().map_err(|_| malformed())?;
        let score = match score.trim() {
            "inf" => Score::Unresolvable,
            s => Score::Value(
                s.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite() && *v >= 0.0)
                    .ok_or_else(malformed)?,
            ),
        };
        let kept = match kept.trim() {
            "0" => false,
            "1" => true,
            _ => return Err(malformed()),
        };
        out.push(ScoredSentence { id, score, kept });
    }
    Ok(out)
}

/// One relevant sentence id per line.
pub fn read_reference<R: Read>(source: R) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for (i, line) in BufReader::new(source).lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.insert(t.parse().map_err(|_| Error::MalformedLine {
            line: i + 1,
            message: format!("`{t}` is not a sentence id"),
        })?);
    }
    Ok(out)
}
