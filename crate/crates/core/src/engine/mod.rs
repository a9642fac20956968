//! Belief evaluation and revision.
//!
//! [`evaluate`] computes a [`BeliefTable`] from a knowledge base, the current
//! facts and the items observed so far. For every proposition it runs the
//! pipeline possibility, items, conflict check, evidence and argument
//! aggregation, combination; aggregation rules are then applied to a
//! fixpoint. [`revise`] applies one scenario step and re-evaluates from
//! scratch.

mod aggregation;
mod coordinates;
mod item;
mod justify;
mod revise;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::knowledge::{Atom, FactState, KnowledgeBase, RuleId};
use crate::vocabulary::OverallStatus;

pub use aggregation::apply_aggregation_rules;
pub use coordinates::{
    aggregate_arguments, aggregate_evidence, collect_items, combine, detect_inconsistency, eval_possibility,
    evidential_from_counts, is_evidential_item, ConflictReport, Coordinates, DefaultCoordinate, Evidential,
    Plausibility, Possibility, PossibilityVerdict,
};
pub use item::{EpistemicItem, InvalidItem, ItemKind, Origin};
pub use justify::{justify, Justification};
pub use revise::{revise, Revision, RevisionDelta, Session, StateChange};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EngineError {
    #[error("`{0}` is not a declared proposition")]
    UnknownProposition(Atom),
    #[error("`{0}` is neither a proposition nor a declared fact")]
    UnknownFact(Atom),
    #[error("aggregation rules did not converge within {bound} rounds")]
    NonConvergent { bound: usize },
    #[error("aggregation rules {first} and {second} set `{proposition}` to both {first_status} and {second_status}")]
    AmbiguousOverride {
        proposition: Atom,
        first: RuleId,
        first_status: OverallStatus,
        second: RuleId,
        second_status: OverallStatus,
    },
    #[error(transparent)]
    InvalidItem(#[from] InvalidItem),
}

/// Everything known about one proposition after evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BeliefState {
    pub proposition: Atom,
    pub possibility: Possibility,
    pub violated_necessity: Vec<RuleId>,
    pub evidential: Evidential,
    pub plausibility: Plausibility,
    pub default: DefaultCoordinate,
    pub overall: OverallStatus,
    pub items: Vec<EpistemicItem>,
    pub fired_aggregation_rules: Vec<RuleId>,
    pub conflict: Option<ConflictReport>,
    #[serde(skip)]
    pub(crate) necessity_rules: Vec<RuleId>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeliefTable {
    pub states: BTreeMap<Atom, BeliefState>,
    pub facts: FactState,
    /// Rounds of aggregation-rule application, at least one.
    pub iterations: usize,
}

impl BeliefTable {
    pub fn get(&self, p: &Atom) -> Option<&BeliefState> {
        self.states.get(p)
    }

    pub fn overall(&self, p: &Atom) -> Option<OverallStatus> {
        self.states.get(p).map(|s| s.overall)
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BeliefState> {
        self.states.values()
    }

    pub fn inconsistent(&self) -> impl Iterator<Item = &BeliefState> {
        self.states.values().filter(|s| s.overall == OverallStatus::Inconsistent)
    }

    /// Items that arrived through scenario steps.
    pub fn observed_items(&self) -> Vec<EpistemicItem> {
        self.states
            .values()
            .flat_map(|s| s.items.iter())
            .filter(|i| matches!(i.origin, Origin::Step(_)))
            .cloned()
            .collect()
    }
}

/// State of `p` before aggregation rules, with `extra` items (derived ones)
/// merged into the item list.
pub(crate) fn base_state(
    kb: &KnowledgeBase,
    facts: &FactState,
    observed: &[EpistemicItem],
    extra: &[EpistemicItem],
    p: &Atom,
) -> Result<BeliefState, EngineError> {
    let possibility = eval_possibility(kb, facts, p)?;
    let mut items = collect_items(kb, facts, observed, p)?;
    items.extend(extra.iter().filter(|i| &i.target == p).cloned());
    items.sort_by(EpistemicItem::canonical_cmp);

    let conflict = detect_inconsistency(p, &items, &possibility);
    // A conflicting proposition is reported, not aggregated.
    let (evidential, plausibility) = if conflict.is_some() {
        (Evidential::NoEvidence, Plausibility::NoArgument)
    } else {
        (aggregate_evidence(&items), aggregate_arguments(&items))
    };
    let default = if items.iter().any(|i| i.kind == ItemKind::Assumption) {
        DefaultCoordinate::Present
    } else {
        DefaultCoordinate::Absent
    };
    let overall = combine(&Coordinates {
        possibility: possibility.value,
        evidential,
        plausibility,
        default,
        conflict: conflict.is_some(),
        necessity_satisfied: possibility.all_conditions_true,
    });
    Ok(BeliefState {
        proposition: p.clone(),
        possibility: possibility.value,
        violated_necessity: possibility.violated,
        evidential,
        plausibility,
        default,
        overall,
        items,
        fired_aggregation_rules: Vec::new(),
        conflict,
        necessity_rules: possibility.necessity_rules,
    })
}

pub(crate) fn base_table(
    kb: &KnowledgeBase,
    facts: &FactState,
    observed: &[EpistemicItem],
    extra: &[EpistemicItem],
) -> Result<BeliefTable, EngineError> {
    let mut states = BTreeMap::new();
    for p in kb.propositions.keys() {
        states.insert(p.clone(), base_state(kb, facts, observed, extra, p)?);
    }
    Ok(BeliefTable { states, facts: facts.clone(), iterations: 0 })
}

/// Evaluates every proposition of `kb` under `facts` and `observed`.
pub fn evaluate(
    kb: &KnowledgeBase,
    facts: &FactState,
    observed: &[EpistemicItem],
) -> Result<BeliefTable, EngineError> {
    for item in observed {
        if kb.proposition(&item.target).is_none() {
            return Err(EngineError::UnknownProposition(item.target.clone()));
        }
        item.check()?;
    }
    let base = base_table(kb, facts, observed, &[])?;
    apply_aggregation_rules(kb, base)
}
