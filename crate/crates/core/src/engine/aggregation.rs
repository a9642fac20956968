//! Domain-specific aggregation rules, applied to a fixpoint.

use std::collections::{BTreeMap, BTreeSet};

use super::{base_table, BeliefTable, EngineError, EpistemicItem, ItemKind, Origin};
use crate::knowledge::{Atom, Effect, Guard, KnowledgeBase, RuleBody, RuleId};
use crate::vocabulary::{ForceTier, OverallStatus, Polarity, Strength};

/// Applies aggregation rules to `table` until a round changes nothing.
///
/// Each round recomputes base states (including items derived by `assert`
/// effects of the previous round), overlays the previous round's
/// `set-status` effects, and evaluates every guard against the result.
/// An override only replaces a base status of tier 3 or below, so
/// conclusive, excluded and inconsistent states survive. The table's
/// facts and scenario-observed items are the inputs; anything derived by an
/// earlier application is recomputed, so applying twice is the identity.
pub fn apply_aggregation_rules(kb: &KnowledgeBase, table: BeliefTable) -> Result<BeliefTable, EngineError> {
    let rules: Vec<_> = kb
        .aggregation_rules()
        .filter_map(|r| match &r.body {
            RuleBody::Aggregation { guards, effect } => Some((&r.id, guards, effect)),
            _ => None,
        })
        .collect();
    let bound = kb.propositions.len() * rules.len() + 1;
    let facts = table.facts.clone();
    let observed = table.observed_items();

    let mut derived: BTreeSet<(Atom, RuleId)> = BTreeSet::new();
    let mut overrides: BTreeMap<Atom, (OverallStatus, RuleId)> = BTreeMap::new();
    let mut rounds = 0;
    loop {
        rounds += 1;
        if rounds > bound {
            return Err(EngineError::NonConvergent { bound });
        }
        let extra: Vec<EpistemicItem> = derived.iter().map(|(a, id)| derived_item(a, id)).collect();
        let mut current = base_table(kb, &facts, &observed, &extra)?;
        for (atom, (status, _)) in &overrides {
            if let Some(state) = current.states.get_mut(atom) {
                if state.overall.tier() <= ForceTier::EVIDENTIAL {
                    state.overall = *status;
                }
            }
        }

        let mut next_derived = BTreeSet::new();
        let mut next_overrides: BTreeMap<Atom, (OverallStatus, RuleId)> = BTreeMap::new();
        let mut fired: BTreeMap<Atom, Vec<RuleId>> = BTreeMap::new();
        for (id, guards, effect) in &rules {
            let holds = guards.iter().all(|g| match g {
                Guard::Status(a, s) => current.overall(a) == Some(*s),
                Guard::Fact(a, v) => facts.get(a) == (*v).into(),
            });
            if !holds {
                continue;
            }
            fired.entry(effect.target().clone()).or_default().push((*id).clone());
            match effect {
                Effect::Assert(a) => {
                    next_derived.insert((a.clone(), (*id).clone()));
                }
                Effect::SetStatus(a, s) => {
                    if let Some((prev, prev_id)) = next_overrides.get(a) {
                        if prev != s {
                            return Err(EngineError::AmbiguousOverride {
                                proposition: a.clone(),
                                first: prev_id.clone(),
                                first_status: *prev,
                                second: (*id).clone(),
                                second_status: *s,
                            });
                        }
                    } else {
                        next_overrides.insert(a.clone(), (*s, (*id).clone()));
                    }
                }
            }
        }

        let same_overrides = next_overrides.len() == overrides.len()
            && next_overrides.iter().zip(&overrides).all(|((a, (s, _)), (b, (t, _)))| a == b && s == t);
        if next_derived == derived && same_overrides {
            for (atom, ids) in fired {
                if let Some(state) = current.states.get_mut(&atom) {
                    state.fired_aggregation_rules = ids;
                }
            }
            current.iterations = rounds;
            return Ok(current);
        }
        derived = next_derived;
        overrides = next_overrides;
    }
}

fn derived_item(target: &Atom, rule: &RuleId) -> EpistemicItem {
    EpistemicItem {
        id: format!("derived:{rule}"),
        target: target.clone(),
        kind: ItemKind::Derived,
        polarity: Polarity::For,
        strength: Strength::Conclusive,
        origin: Origin::Rule(rule.clone()),
        source: rule.to_string(),
        likelihood_ratio: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_kb;
    use crate::engine::evaluate;
    use crate::knowledge::build_kb;

    const MONROVIA: &str = "\
const monrovia.
prop invasion(X).
prop recommend_surveillance(X).
fact friendly_statements(monrovia) true.
fact rival_interest(monrovia) true.
evidence against invasion(X) strength strong when friendly_statements(X).
if fact rival_interest(X) true then invasion(X) is ambiguous.
if invasion(X) is ambiguous then assert recommend_surveillance(X).
";

    fn kb(text: &str) -> KnowledgeBase {
        build_kb(&parse_kb(text).unwrap()).unwrap()
    }

    #[test]
    fn monrovia_surveillance() {
        let kb = kb(MONROVIA);
        let t = evaluate(&kb, &kb.facts, &[]).unwrap();
        let invasion = Atom::ground("invasion", &["monrovia"]);
        let recommend = Atom::ground("recommend_surveillance", &["monrovia"]);
        assert_eq!(t.overall(&invasion), Some(OverallStatus::Ambiguous));
        assert_eq!(t.get(&invasion).unwrap().evidential, crate::engine::Evidential::Improbable);
        let r = t.get(&recommend).unwrap();
        assert_eq!(r.overall, OverallStatus::Confirmed);
        assert_eq!(r.fired_aggregation_rules.len(), 1);
        assert!(r.fired_aggregation_rules[0].as_str().starts_with("aggregation:recommend_surveillance(X):"));
        assert_eq!(r.items[0].kind, ItemKind::Derived);

        let again = apply_aggregation_rules(&kb, t.clone()).unwrap();
        assert_eq!(again.states, t.states);
    }

    #[test]
    fn no_guard_holds() {
        let kb = kb("prop p.\nprop q.\nassume p.\nif p is probable then q is plausible.\n");
        let t = evaluate(&kb, &kb.facts, &[]).unwrap();
        let base = base_table(&kb, &kb.facts, &[], &[]).unwrap();
        assert_eq!(t.states, base.states);
    }

    #[test]
    fn conflicting_overrides() {
        let kb = kb("prop p.\nprop q.\nassume q.\n\
                     if q is assumed then p is ambiguous.\n\
                     if q is assumed then p is doubted.\n");
        let err = evaluate(&kb, &kb.facts, &[]).unwrap_err();
        assert!(matches!(err, EngineError::AmbiguousOverride { .. }));
    }

    #[test]
    fn oscillation_is_non_convergent() {
        let kb = kb("prop p.\nfact a true.\nfact b true.\n\
                     evidence for p strength strong when a.\nevidence against p strength strong when b.\n\
                     if p is ambiguous then p is doubted.\n\
                     if p is doubted then p is ambiguous.\n");
        let err = evaluate(&kb, &kb.facts, &[]).unwrap_err();
        assert_eq!(err, EngineError::NonConvergent { bound: 3 });
    }

    #[test]
    fn conclusive_states_are_not_overridden() {
        let kb = kb("prop p.\nfact a true.\nevidence for p strength conclusive when a.\n\
                     if fact a true then p is doubted.\n");
        let t = evaluate(&kb, &kb.facts, &[]).unwrap();
        let s = t.get(&Atom::constant("p")).unwrap();
        assert_eq!(s.overall, OverallStatus::Confirmed);
        assert_eq!(s.fired_aggregation_rules.len(), 1);
    }
}
