use rayon::prelude::*;

use super::{Profile, Score, TextPipeline};
use crate::ancestry::Subject;
use crate::error::{Error, Result};
use crate::measures::{aggregate, Scorer};
use crate::textproc::tokenize;

/// Ranks profiles by proximity from the document to each profile; the
/// lowest score wins. Profiles with no resolvable word score
/// [`Score::Unresolvable`] and rank last.
pub fn classify(
    scorer: &Scorer<'_>,
    document: &str,
    profiles: &[Profile],
    pipeline: &TextPipeline,
) -> Result<Vec<(String, Score)>> {
    if profiles.is_empty() {
        return Err(Error::NoProfiles);
    }
    let network = scorer.network();
    let nodes = pipeline.resolve_tokens(network, &tokenize(document)).resolved;
    if nodes.is_empty() {
        return Err(Error::UnresolvableDocument);
    }
    let doc = Subject::Aggregate(aggregate(network, nodes)?);

    let mut ranked = profiles
        .par_iter()
        .map(|p| {
            let score = match p.subject(network, pipeline.lang.as_deref()) {
                Some(s) => Score::Value(scorer.proximity(&doc, &s)?.score),
                None => Score::Unresolvable,
            };
            Ok((p.id.clone(), score))
        })
        .collect::<Result<Vec<_>>>()?;
    ranked.sort_by(|a, b| a.1.rank_cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(ranked)
}
