//! The "is more probable than" relation between two propositions.
//!
//! Two comparators are provided. The qualitative one ranks overall statuses
//! and breaks ties on net evidence counts. The likelihood comparator
//! multiplies the likelihood-ratio annotations of each side's evidence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::engine::{BeliefTable, EpistemicItem};
use crate::knowledge::Atom;
use crate::vocabulary::{OverallStatus, Polarity, Strength};

/// Relative tolerance under which two likelihood products are `equal`.
pub const LIKELIHOOD_TOLERANCE: f64 = 1e-9;

/// Evidence counts indexed `[conclusive, strong, weak]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct StrengthVector {
    pub for_counts: [u32; 3],
    pub against_counts: [u32; 3],
}

impl StrengthVector {
    /// Counts every item handed in, whatever its kind. Strengths off the
    /// evidence scale are ignored.
    pub fn tally<'a>(items: impl IntoIterator<Item = &'a EpistemicItem>) -> StrengthVector {
        let mut v = StrengthVector::default();
        for item in items {
            let slot = match item.strength {
                Strength::Conclusive => 0,
                Strength::Strong => 1,
                Strength::Weak => 2,
                Strength::Ordinary => continue,
            };
            match item.polarity {
                Polarity::For => v.for_counts[slot] += 1,
                Polarity::Against => v.against_counts[slot] += 1,
            }
        }
        v
    }

    /// `for - against`, slot by slot.
    pub fn net(&self) -> [i64; 3] {
        std::array::from_fn(|i| i64::from(self.for_counts[i]) - i64::from(self.against_counts[i]))
    }
}

/// Counts of the evidence-kind items in `items`.
pub fn strength_vector(items: &[EpistemicItem]) -> StrengthVector {
    StrengthVector::tally(items.iter().filter(|i| i.kind.is_evidence()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderingResult {
    More,
    Less,
    Equal,
}

impl OrderingResult {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderingResult::More => "more",
            OrderingResult::Less => "less",
            OrderingResult::Equal => "equal",
        }
    }

    pub fn reverse(self) -> OrderingResult {
        match self {
            OrderingResult::More => OrderingResult::Less,
            OrderingResult::Less => OrderingResult::More,
            OrderingResult::Equal => OrderingResult::Equal,
        }
    }
}

impl From<Ordering> for OrderingResult {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Greater => OrderingResult::More,
            Ordering::Less => OrderingResult::Less,
            Ordering::Equal => OrderingResult::Equal,
        }
    }
}

impl fmt::Display for OrderingResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Comparator {
    #[default]
    Qualitative,
    Likelihood,
}

impl FromStr for Comparator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "qualitative" => Ok(Comparator::Qualitative),
            "likelihood" => Ok(Comparator::Likelihood),
            other => Err(format!("unknown comparator `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderingError {
    #[error("`{0}` is not a declared proposition")]
    UnknownProposition(Atom),
    #[error("`{0}` is inconsistent and cannot be compared")]
    InconsistentOperand(Atom),
    #[error("evidence item `{0}` has no likelihood ratio")]
    MissingAnnotation(String),
}

/// Rank of a status on the qualitative probability scale.
pub fn probability_rank(status: OverallStatus) -> Option<u8> {
    use OverallStatus::*;
    Some(match status {
        Inconsistent => return None,
        Excluded => 0,
        Improbable => 1,
        Doubted => 2,
        Ambiguous | Unknown | Possible | Assumed | Implausible => 3,
        Plausible => 4,
        Supported => 5,
        Probable => 6,
        Confirmed => 7,
    })
}

/// Compares status ranks, then net evidence vectors lexicographically.
pub fn qualitative_compare(
    a: OverallStatus,
    a_vec: &StrengthVector,
    b: OverallStatus,
    b_vec: &StrengthVector,
) -> Option<OrderingResult> {
    let ra = probability_rank(a)?;
    let rb = probability_rank(b)?;
    Some(ra.cmp(&rb).then_with(|| a_vec.net().cmp(&b_vec.net())).into())
}

pub fn more_probable_than(
    table: &BeliefTable,
    p: &Atom,
    q: &Atom,
    comparator: Comparator,
) -> Result<OrderingResult, OrderingError> {
    let sp = table.get(p).ok_or_else(|| OrderingError::UnknownProposition(p.clone()))?;
    let sq = table.get(q).ok_or_else(|| OrderingError::UnknownProposition(q.clone()))?;
    for s in [sp, sq] {
        if s.overall == OverallStatus::Inconsistent {
            return Err(OrderingError::InconsistentOperand(s.proposition.clone()));
        }
    }
    match comparator {
        Comparator::Qualitative => Ok(qualitative_compare(
            sp.overall,
            &strength_vector(&sp.items),
            sq.overall,
            &strength_vector(&sq.items),
        )
        .expect("inconsistent operands were rejected")),
        Comparator::Likelihood => {
            let evidence = |items: &[EpistemicItem]| -> Vec<EpistemicItem> {
                items.iter().filter(|i| i.kind.is_evidence()).cloned().collect()
            };
            likelihood_compare(&evidence(&sp.items), &evidence(&sq.items))
        }
    }
}

/// Product of likelihood ratios, multiplied in ascending order so the
/// result does not depend on item order.
pub fn likelihood_product(items: &[EpistemicItem]) -> Result<f64, OrderingError> {
    let mut ratios = items
        .iter()
        .map(|i| i.likelihood_ratio.ok_or_else(|| OrderingError::MissingAnnotation(i.id.clone())))
        .collect::<Result<Vec<f64>, _>>()?;
    ratios.sort_by(f64::total_cmp);
    Ok(ratios.into_iter().product())
}

pub fn likelihood_compare(
    items_p: &[EpistemicItem],
    items_q: &[EpistemicItem],
) -> Result<OrderingResult, OrderingError> {
    let a = likelihood_product(items_p)?;
    let b = likelihood_product(items_q)?;
    Ok(compare_products(a, b))
}

/// `equal` within [`LIKELIHOOD_TOLERANCE`] relative difference.
pub fn compare_products(a: f64, b: f64) -> OrderingResult {
    if (a - b).abs() <= LIKELIHOOD_TOLERANCE * a.abs().max(b.abs()) {
        OrderingResult::Equal
    } else if a > b {
        OrderingResult::More
    } else {
        OrderingResult::Less
    }
}
