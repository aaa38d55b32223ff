use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::TextPipeline;
use crate::ancestry::Subject;
use crate::error::{Error, Result};
use crate::measures::{aggregate, Scorer};
use crate::network::NodeIdx;
use crate::textproc::tokenize;

/// Ranks the document's resolvable content words by proximity to the rest
/// of the document (leave-one-out) and returns the `k` closest.
pub fn spot_terms(
    scorer: &Scorer<'_>,
    document: &str,
    k: usize,
    pipeline: &TextPipeline,
) -> Result<Vec<(String, f64)>> {
    let network = scorer.network();
    let words = pipeline.content_words(&tokenize(document));
    let senses: BTreeMap<String, BTreeSet<NodeIdx>> = words
        .into_iter()
        .filter_map(|w| {
            let hits = network.lookup_word(&w, pipeline.lang.as_deref());
            (!hits.is_empty()).then_some((w, hits))
        })
        .collect();
    if senses.len() < 2 {
        return Err(Error::TooFewTerms(senses.len()));
    }

    let mut scored = senses
        .par_iter()
        .map(|(word, nodes)| {
            let own = Subject::Aggregate(aggregate(network, nodes.iter().copied())?);
            let rest = senses
                .iter()
                .filter(|(other, _)| *other != word)
                .flat_map(|(_, n)| n.iter().copied());
            let rest = Subject::Aggregate(aggregate(network, rest)?);
            Ok((word.clone(), scorer.proximity(&own, &rest)?.score))
        })
        .collect::<Result<Vec<_>>>()?;
    scored.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    scored.truncate(k);
    Ok(scored)
}
