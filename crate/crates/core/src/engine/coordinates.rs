//! Per-proposition coordinates and their combination into an overall status.
//!
//! Possibility reads only facts and necessity rules. The evidential and
//! plausibility coordinates summarise items. `combine` applies the
//! precedence ladder: conflict, then conclusive states, then evidence,
//! argument, default, and finally bare possibility.

use std::fmt;

use serde::Serialize;

use super::{EngineError, EpistemicItem, ItemKind, Origin};
use crate::knowledge::{Atom, FactState, FactValue, KnowledgeBase, RuleBody, RuleId};
use crate::ordering::StrengthVector;
use crate::vocabulary::{OverallStatus, Polarity, Strength};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Possibility {
    Possible,
    Impossible,
}

impl Possibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Possibility::Possible => "possible",
            Possibility::Impossible => "impossible",
        }
    }
}

impl fmt::Display for Possibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PossibilityVerdict {
    pub value: Possibility,
    /// Necessity rules with at least one `false` condition.
    pub violated: Vec<RuleId>,
    /// Every necessity rule for the proposition.
    pub necessity_rules: Vec<RuleId>,
    /// At least one necessity rule exists and all conditions are `true`.
    pub all_conditions_true: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Evidential {
    #[serde(rename = "confirmed-")]
    Confirmed,
    #[serde(rename = "probable-")]
    Probable,
    #[serde(rename = "supported-")]
    Supported,
    #[serde(rename = "balanced-")]
    Balanced,
    #[serde(rename = "no-evidence")]
    NoEvidence,
    #[serde(rename = "doubted-")]
    Doubted,
    #[serde(rename = "improbable-")]
    Improbable,
    #[serde(rename = "disconfirmed-")]
    Disconfirmed,
}

impl Evidential {
    pub fn as_str(self) -> &'static str {
        match self {
            Evidential::Confirmed => "confirmed-",
            Evidential::Probable => "probable-",
            Evidential::Supported => "supported-",
            Evidential::Balanced => "balanced-",
            Evidential::NoEvidence => "no-evidence",
            Evidential::Doubted => "doubted-",
            Evidential::Improbable => "improbable-",
            Evidential::Disconfirmed => "disconfirmed-",
        }
    }

    /// Position on the support scale; `balanced-` and `no-evidence` share a rank.
    pub fn rank(self) -> u8 {
        match self {
            Evidential::Disconfirmed => 0,
            Evidential::Improbable => 1,
            Evidential::Doubted => 2,
            Evidential::Balanced | Evidential::NoEvidence => 3,
            Evidential::Supported => 4,
            Evidential::Probable => 5,
            Evidential::Confirmed => 6,
        }
    }
}

impl fmt::Display for Evidential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Plausibility {
    #[serde(rename = "plausible-")]
    Plausible,
    #[serde(rename = "implausible-")]
    Implausible,
    #[serde(rename = "contested-")]
    Contested,
    #[serde(rename = "no-argument")]
    NoArgument,
}

impl Plausibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Plausibility::Plausible => "plausible-",
            Plausibility::Implausible => "implausible-",
            Plausibility::Contested => "contested-",
            Plausibility::NoArgument => "no-argument",
        }
    }
}

impl fmt::Display for Plausibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DefaultCoordinate {
    Present,
    Absent,
}

impl DefaultCoordinate {
    pub fn as_str(self) -> &'static str {
        match self {
            DefaultCoordinate::Present => "present",
            DefaultCoordinate::Absent => "absent",
        }
    }

    pub fn is_present(self) -> bool {
        self == DefaultCoordinate::Present
    }
}

impl fmt::Display for DefaultCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sources of a conclusive for/against clash on one proposition.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConflictReport {
    pub proposition: Atom,
    /// Conclusive `for` items.
    pub supporting: Vec<EpistemicItem>,
    /// Conclusive `against` items.
    pub opposing: Vec<EpistemicItem>,
    /// Violated necessity rules, the other way a conclusive `for` can clash.
    pub violated_necessity: Vec<RuleId>,
    pub summary: String,
}

impl ConflictReport {
    /// Items plus violated rules on the opposing side.
    pub fn entry_count(&self) -> usize {
        self.supporting.len() + self.opposing.len() + self.violated_necessity.len()
    }
}

pub fn eval_possibility(
    kb: &KnowledgeBase,
    facts: &FactState,
    p: &Atom,
) -> Result<PossibilityVerdict, EngineError> {
    if kb.proposition(p).is_none() {
        return Err(EngineError::UnknownProposition(p.clone()));
    }
    let mut violated = Vec::new();
    let mut necessity_rules = Vec::new();
    let mut all_true = true;
    for rule in kb.rules_for(p) {
        if let RuleBody::Necessity { conditions, .. } = &rule.body {
            necessity_rules.push(rule.id.clone());
            let states: Vec<FactValue> = conditions.iter().map(|c| facts.get(c)).collect();
            if states.contains(&FactValue::False) {
                violated.push(rule.id.clone());
            }
            all_true &= states.iter().all(|s| *s == FactValue::True);
        }
    }
    Ok(PossibilityVerdict {
        value: if violated.is_empty() { Possibility::Possible } else { Possibility::Impossible },
        violated,
        all_conditions_true: all_true && !necessity_rules.is_empty(),
        necessity_rules,
    })
}

/// Items bearing on `p`: fired evidence and argument rules, defaults, then
/// the observed items that target `p`.
pub fn collect_items(
    kb: &KnowledgeBase,
    facts: &FactState,
    observed: &[EpistemicItem],
    p: &Atom,
) -> Result<Vec<EpistemicItem>, EngineError> {
    if kb.proposition(p).is_none() {
        return Err(EngineError::UnknownProposition(p.clone()));
    }
    let mut items = Vec::new();
    for rule in kb.rules_for(p) {
        let label = |source: &Option<String>| source.clone().unwrap_or_else(|| rule.id.to_string());
        let item = match &rule.body {
            RuleBody::Evidence { polarity, strength, condition, likelihood_ratio, source, .. }
                if facts.is_true(condition) =>
            {
                EpistemicItem {
                    id: rule.id.to_string(),
                    target: p.clone(),
                    kind: ItemKind::Sign,
                    polarity: *polarity,
                    strength: *strength,
                    origin: Origin::Rule(rule.id.clone()),
                    source: label(source),
                    likelihood_ratio: *likelihood_ratio,
                }
            }
            RuleBody::Argument { polarity, strength, condition, source, .. } if facts.is_true(condition) => {
                EpistemicItem {
                    id: rule.id.to_string(),
                    target: p.clone(),
                    kind: ItemKind::Argument,
                    polarity: *polarity,
                    strength: *strength,
                    origin: Origin::Rule(rule.id.clone()),
                    source: label(source),
                    likelihood_ratio: None,
                }
            }
            RuleBody::Default { .. } => EpistemicItem {
                id: rule.id.to_string(),
                target: p.clone(),
                kind: ItemKind::Assumption,
                polarity: Polarity::For,
                strength: Strength::Ordinary,
                origin: Origin::Rule(rule.id.clone()),
                source: rule.id.to_string(),
                likelihood_ratio: None,
            },
            _ => continue,
        };
        items.push(item);
    }
    let mut mine: Vec<EpistemicItem> = observed.iter().filter(|i| &i.target == p).cloned().collect();
    mine.sort_by(EpistemicItem::canonical_cmp);
    items.extend(mine);
    Ok(items)
}

/// Reports a conclusive clash: some conclusive `for` item together with a
/// conclusive `against` item or a violated necessary condition.
pub fn detect_inconsistency(
    p: &Atom,
    items: &[EpistemicItem],
    possibility: &PossibilityVerdict,
) -> Option<ConflictReport> {
    let supporting: Vec<EpistemicItem> =
        items.iter().filter(|i| i.is_conclusive() && i.polarity == Polarity::For).cloned().collect();
    if supporting.is_empty() {
        return None;
    }
    let opposing: Vec<EpistemicItem> =
        items.iter().filter(|i| i.is_conclusive() && i.polarity == Polarity::Against).cloned().collect();
    let violated =
        if possibility.value == Possibility::Impossible { possibility.violated.clone() } else { Vec::new() };
    if opposing.is_empty() && violated.is_empty() {
        return None;
    }
    let describe = |xs: &[EpistemicItem]| {
        xs.iter().map(|i| format!("{} ({})", i.kind, i.source)).collect::<Vec<_>>().join(", ")
    };
    let mut against = describe(&opposing);
    if !violated.is_empty() {
        if !against.is_empty() {
            against.push_str("; ");
        }
        let ids: Vec<String> = violated.iter().map(ToString::to_string).collect();
        against.push_str(&format!("violated necessity {}", ids.join(", ")));
    }
    let summary = format!(
        "`{p}` is conclusively supported by {} and conclusively opposed by {against}",
        describe(&supporting)
    );
    Some(ConflictReport {
        proposition: p.clone(),
        supporting,
        opposing,
        violated_necessity: violated,
        summary,
    })
}

/// Items that take part in the evidential coordinate: evidence kinds, plus
/// conclusive arguments, which settle a proposition the way conclusive
/// evidence does.
pub fn is_evidential_item(item: &EpistemicItem) -> bool {
    item.kind.is_evidence() || (item.kind == ItemKind::Argument && item.is_conclusive())
}

pub fn aggregate_evidence(items: &[EpistemicItem]) -> Evidential {
    evidential_from_counts(&StrengthVector::tally(items.iter().filter(|i| is_evidential_item(i))))
}

/// Qualitative dominance over per-(polarity, strength) counts. Any
/// conclusive `for` wins, then any conclusive `against`; otherwise the
/// (strong, weak) pairs are compared lexicographically.
pub fn evidential_from_counts(v: &StrengthVector) -> Evidential {
    if v.for_counts[0] > 0 {
        return Evidential::Confirmed;
    }
    if v.against_counts[0] > 0 {
        return Evidential::Disconfirmed;
    }
    let pro = (v.for_counts[1], v.for_counts[2]);
    let con = (v.against_counts[1], v.against_counts[2]);
    match pro.cmp(&con) {
        std::cmp::Ordering::Greater if pro.0 > con.0 => Evidential::Probable,
        std::cmp::Ordering::Greater => Evidential::Supported,
        std::cmp::Ordering::Less if con.0 > pro.0 => Evidential::Improbable,
        std::cmp::Ordering::Less => Evidential::Doubted,
        std::cmp::Ordering::Equal if pro == (0, 0) => Evidential::NoEvidence,
        std::cmp::Ordering::Equal => Evidential::Balanced,
    }
}

/// Counts non-conclusive arguments.
pub fn aggregate_arguments(items: &[EpistemicItem]) -> Plausibility {
    let (pro, con) = items.iter().filter(|i| i.kind == ItemKind::Argument && !i.is_conclusive()).fold(
        (0usize, 0usize),
        |(p, c), i| match i.polarity {
            Polarity::For => (p + 1, c),
            Polarity::Against => (p, c + 1),
        },
    );
    match pro.cmp(&con) {
        std::cmp::Ordering::Greater => Plausibility::Plausible,
        std::cmp::Ordering::Less => Plausibility::Implausible,
        std::cmp::Ordering::Equal if pro == 0 => Plausibility::NoArgument,
        std::cmp::Ordering::Equal => Plausibility::Contested,
    }
}

/// Inputs to [`combine`].
#[derive(Debug, Clone, Copy)]
pub struct Coordinates {
    pub possibility: Possibility,
    pub evidential: Evidential,
    pub plausibility: Plausibility,
    pub default: DefaultCoordinate,
    pub conflict: bool,
    /// Necessity rules exist and all their conditions hold.
    pub necessity_satisfied: bool,
}

/// First matching rule wins.
pub fn combine(c: &Coordinates) -> OverallStatus {
    if c.conflict {
        return OverallStatus::Inconsistent;
    }
    if c.possibility == Possibility::Impossible {
        return OverallStatus::Excluded;
    }
    match c.evidential {
        Evidential::Confirmed => return OverallStatus::Confirmed,
        Evidential::Probable => return OverallStatus::Probable,
        Evidential::Supported => return OverallStatus::Supported,
        Evidential::Balanced => return OverallStatus::Ambiguous,
        Evidential::Doubted => return OverallStatus::Doubted,
        Evidential::Improbable => return OverallStatus::Improbable,
        Evidential::Disconfirmed => return OverallStatus::Excluded,
        Evidential::NoEvidence => {}
    }
    match c.plausibility {
        Plausibility::Plausible => return OverallStatus::Plausible,
        Plausibility::Implausible => return OverallStatus::Implausible,
        Plausibility::Contested => return OverallStatus::Ambiguous,
        Plausibility::NoArgument => {}
    }
    if c.default.is_present() {
        OverallStatus::Assumed
    } else if c.necessity_satisfied {
        OverallStatus::Possible
    } else {
        OverallStatus::Unknown
    }
}
