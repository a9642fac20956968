use serde::Serialize;

use super::{evaluate, BeliefState, BeliefTable, EngineError, EpistemicItem, ItemKind};
use crate::dsl::{ObserveKind, ScenarioStep};
use crate::knowledge::{Atom, FactState, KnowledgeBase};
use crate::vocabulary::OverallStatus;

/// How one proposition changed across a revision step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StateChange {
    pub proposition: Atom,
    pub before: OverallStatus,
    pub after: OverallStatus,
    /// Names of the parts of the state that differ.
    pub changed: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RevisionDelta {
    pub step: usize,
    pub changes: Vec<StateChange>,
}

impl RevisionDelta {
    pub fn between(step: usize, before: &BeliefTable, after: &BeliefTable) -> RevisionDelta {
        let changes = after
            .states
            .iter()
            .filter_map(|(atom, new)| {
                let old = before.states.get(atom)?;
                let changed = changed_parts(old, new);
                (!changed.is_empty()).then(|| StateChange {
                    proposition: atom.clone(),
                    before: old.overall,
                    after: new.overall,
                    changed,
                })
            })
            .collect();
        RevisionDelta { step, changes }
    }

    pub fn is_empty(&self) -> bool {
        self.changes.is_empty()
    }

    pub fn propositions(&self) -> impl Iterator<Item = &Atom> {
        self.changes.iter().map(|c| &c.proposition)
    }
}

fn changed_parts(a: &BeliefState, b: &BeliefState) -> Vec<&'static str> {
    let mut out = Vec::new();
    if a.possibility != b.possibility || a.violated_necessity != b.violated_necessity {
        out.push("possibility");
    }
    if a.evidential != b.evidential {
        out.push("evidential");
    }
    if a.plausibility != b.plausibility {
        out.push("plausibility");
    }
    if a.default != b.default {
        out.push("default");
    }
    if a.overall != b.overall {
        out.push("overall");
    }
    if a.items != b.items {
        out.push("items");
    }
    if a.fired_aggregation_rules != b.fired_aggregation_rules {
        out.push("aggregation");
    }
    if a.conflict != b.conflict {
        out.push("conflict");
    }
    out
}

/// Result of applying one step.
#[derive(Debug, Clone)]
pub struct Revision {
    pub facts: FactState,
    pub observed: Vec<EpistemicItem>,
    pub table: BeliefTable,
    pub delta: RevisionDelta,
}

/// Applies `step` (numbered `index`, 1-based) to the given state and
/// re-evaluates from scratch.
pub fn revise(
    kb: &KnowledgeBase,
    facts: &FactState,
    observed: &[EpistemicItem],
    index: usize,
    step: &ScenarioStep,
) -> Result<Revision, EngineError> {
    let before = evaluate(kb, facts, observed)?;
    let mut facts = facts.clone();
    let mut observed = observed.to_vec();
    apply_step(kb, &mut facts, &mut observed, index, step)?;
    let table = evaluate(kb, &facts, &observed)?;
    let delta = RevisionDelta::between(index, &before, &table);
    Ok(Revision { facts, observed, table, delta })
}

fn apply_step(
    kb: &KnowledgeBase,
    facts: &mut FactState,
    observed: &mut Vec<EpistemicItem>,
    index: usize,
    step: &ScenarioStep,
) -> Result<(), EngineError> {
    match step {
        ScenarioStep::AssertFact { atom, value } => {
            resolve_fact(kb, atom)?;
            facts.set(atom.clone(), *value);
        }
        ScenarioStep::RetractFact(atom) => {
            resolve_fact(kb, atom)?;
            facts.retract(atom);
        }
        ScenarioStep::Observe { polarity, atom, strength, kind, source } => {
            resolve_proposition(kb, atom)?;
            let kind = match kind {
                ObserveKind::Observation => ItemKind::Observation,
                ObserveKind::Report => ItemKind::Report,
            };
            observed.push(EpistemicItem::observed(
                index,
                atom.clone(),
                kind,
                *polarity,
                *strength,
                source.clone(),
            )?);
        }
        ScenarioStep::Query(atom) => resolve_proposition(kb, atom)?,
        ScenarioStep::Snapshot => {}
    }
    Ok(())
}

fn resolve_fact(kb: &KnowledgeBase, atom: &Atom) -> Result<(), EngineError> {
    if kb.is_fact_atom(atom) {
        Ok(())
    } else {
        Err(EngineError::UnknownFact(atom.clone()))
    }
}

fn resolve_proposition(kb: &KnowledgeBase, atom: &Atom) -> Result<(), EngineError> {
    if kb.proposition(atom).is_some() {
        Ok(())
    } else {
        Err(EngineError::UnknownProposition(atom.clone()))
    }
}

/// A running scenario: the current facts, observed items and belief table.
#[derive(Debug, Clone)]
pub struct Session<'kb> {
    kb: &'kb KnowledgeBase,
    facts: FactState,
    observed: Vec<EpistemicItem>,
    table: BeliefTable,
    steps: usize,
}

impl<'kb> Session<'kb> {
    /// Starts from the knowledge base's declared facts.
    pub fn new(kb: &'kb KnowledgeBase) -> Result<Session<'kb>, EngineError> {
        Session::with_state(kb, kb.facts.clone(), Vec::new())
    }

    pub fn with_state(
        kb: &'kb KnowledgeBase,
        facts: FactState,
        observed: Vec<EpistemicItem>,
    ) -> Result<Session<'kb>, EngineError> {
        let table = evaluate(kb, &facts, &observed)?;
        Ok(Session { kb, facts, observed, table, steps: 0 })
    }

    /// Applies the next step. On error the session is left unchanged.
    pub fn step(&mut self, step: &ScenarioStep) -> Result<RevisionDelta, EngineError> {
        let index = self.steps + 1;
        let mut facts = self.facts.clone();
        let mut observed = self.observed.clone();
        apply_step(self.kb, &mut facts, &mut observed, index, step)?;
        let table = match step {
            ScenarioStep::Query(_) | ScenarioStep::Snapshot => self.table.clone(),
            _ => evaluate(self.kb, &facts, &observed)?,
        };
        let delta = RevisionDelta::between(index, &self.table, &table);
        self.facts = facts;
        self.observed = observed;
        self.table = table;
        self.steps = index;
        Ok(delta)
    }

    pub fn table(&self) -> &BeliefTable {
        &self.table
    }

    pub fn facts(&self) -> &FactState {
        &self.facts
    }

    pub fn observed(&self) -> &[EpistemicItem] {
        &self.observed
    }

    pub fn steps_taken(&self) -> usize {
        self.steps
    }

    pub fn kb(&self) -> &'kb KnowledgeBase {
        self.kb
    }
}
