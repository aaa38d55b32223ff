use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::filter::{check_fraction, mark_kept, rank, FilterOptions, ScoredSentence};
use crate::error::{Error, Result};

/// Keep fractions of the standard 10%..50% evaluation table.
pub const DEFAULT_GRID: [f64; 5] = [0.1, 0.2, 0.3, 0.4, 0.5];

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRow {
    pub keep_fraction: f64,
    pub precision: f64,
    pub recall: f64,
    pub true_positives: usize,
    pub kept: usize,
    pub relevant: usize,
    /// Nothing was kept; precision is 1.0 by convention.
    pub vacuous_precision: bool,
    /// Nothing is relevant; recall is 1.0 by convention.
    pub vacuous_recall: bool,
}

impl EvalRow {
    pub fn from_sets(keep_fraction: f64, kept: &BTreeSet<usize>, reference: &BTreeSet<usize>) -> Self {
        let tp = kept.intersection(reference).count();
        let ratio = |num: usize, den: usize| if den == 0 { 1.0 } else { num as f64 / den as f64 };
        EvalRow {
            keep_fraction,
            precision: ratio(tp, kept.len()),
            recall: ratio(tp, reference.len()),
            true_positives: tp,
            kept: kept.len(),
            relevant: reference.len(),
            vacuous_precision: kept.is_empty(),
            vacuous_recall: reference.is_empty(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EvalReport {
    pub rows: Vec<EvalRow>,
}

impl EvalReport {
    /// Tab-separated table, one row per keep fraction.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("keep\tprecision\trecall\ttp\tkept\trelevant\n");
        for r in &self.rows {
            writeln!(
                out,
                "{:.2}\t{:.4}\t{:.4}\t{}\t{}\t{}",
                r.keep_fraction, r.precision, r.recall, r.true_positives, r.kept, r.relevant
            )
            .unwrap();
        }
        out
    }

    /// Human-readable notes for rows that used a vacuous convention.
    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        for r in &self.rows {
            if r.vacuous_precision {
                notes.push(format!("keep {:.2}: no sentence kept, precision set to 1", r.keep_fraction));
            }
            if r.vacuous_recall {
                notes.push(format!("keep {:.2}: empty reference, recall set to 1", r.keep_fraction));
            }
        }
        notes
    }
}

/// Re-ranks one scored corpus at every grid fraction and compares the kept
/// set with the reference.
pub fn evaluate(
    scored: &[ScoredSentence],
    reference: &BTreeSet<usize>,
    grid: &[f64],
) -> Result<EvalReport> {
    let ids: BTreeSet<usize> = scored.iter().map(|s| s.id).collect();
    if let Some(&id) = reference.iter().find(|id| !ids.contains(id)) {
        return Err(Error::ReferenceOutOfRange {
            id,
            size: scored.len(),
        });
    }
    let mut ranked = scored.to_vec();
    rank(&mut ranked);
    let rows = grid
        .iter()
        .map(|&f| {
            check_fraction(f)?;
            mark_kept(&mut ranked, FilterOptions::keep(f));
            let kept: BTreeSet<usize> = ranked.iter().filter(|s| s.kept).map(|s| s.id).collect();
            Ok(EvalRow::from_sets(f, &kept, reference))
        })
        .collect::<Result<_>>()?;
    Ok(EvalReport { rows })
}
