//! Knowledge-base data model: propositions, facts, rules and grounding.
//!
//! A [`KnowledgeBase`] is built from parsed declarations by [`build_kb`],
//! which expands schematic propositions and rules over the declared constant
//! universe and checks that every rule target resolves to a declared
//! proposition. Once built, a knowledge base is immutable.

mod atom;
mod ground;
mod validate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::dsl::{DeclKind, Declaration};
use crate::vocabulary::{Layer, OverallStatus, Polarity, Strength};

pub use atom::{Atom, Term};
pub use ground::{ground, ground_with_limit, DEFAULT_GROUNDING_LIMIT};
pub use validate::{validate, Diagnostic, DiagnosticKind, Severity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KbError {
    #[error("proposition `{0}` is declared more than once")]
    DuplicateProposition(Atom),
    #[error("rule `{rule}` refers to undeclared proposition `{atom}`")]
    UnknownAtom { rule: RuleId, atom: Atom },
    #[error("rule `{0}` is declared more than once")]
    DuplicateRuleId(RuleId),
    #[error("fact `{0}` is declared more than once")]
    DuplicateFact(Atom),
    #[error("fact `{0}` contains a variable")]
    NonGroundFact(Atom),
    #[error("aggregation rule `{rule}` may not set status `{status}`")]
    ForbiddenEffectStatus { rule: RuleId, status: OverallStatus },
    #[error("grounding would produce {required} rules, above the limit of {limit}")]
    GroundingExplosion { required: usize, limit: usize },
}

/// Identifier of a rule, derived from its content.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleId(String);

impl RuleId {
    pub fn new(id: impl Into<String>) -> RuleId {
        RuleId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proposition {
    pub atom: Atom,
    pub description: Option<String>,
    pub layer: Layer,
}

/// Three-valued state of a ground atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactValue {
    True,
    False,
    Unknown,
}

impl From<bool> for FactValue {
    fn from(b: bool) -> Self {
        if b {
            FactValue::True
        } else {
            FactValue::False
        }
    }
}

/// Known truth values; atoms not in the map are `unknown`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactState {
    values: BTreeMap<Atom, bool>,
}

impl FactState {
    pub fn new() -> FactState {
        FactState::default()
    }

    pub fn get(&self, atom: &Atom) -> FactValue {
        match self.values.get(atom) {
            Some(b) => FactValue::from(*b),
            None => FactValue::Unknown,
        }
    }

    pub fn is_true(&self, atom: &Atom) -> bool {
        self.get(atom) == FactValue::True
    }

    pub fn set(&mut self, atom: Atom, value: bool) {
        self.values.insert(atom, value);
    }

    /// Resets the atom to `unknown`.
    pub fn retract(&mut self, atom: &Atom) {
        self.values.remove(atom);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, bool)> {
        self.values.iter().map(|(a, v)| (a, *v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl FromIterator<(Atom, bool)> for FactState {
    fn from_iter<I: IntoIterator<Item = (Atom, bool)>>(iter: I) -> Self {
        FactState { values: iter.into_iter().collect() }
    }
}

impl Serialize for FactState {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer
            .collect_map(self.values.iter().map(|(a, v)| (a.to_string(), if *v { "true" } else { "false" })))
    }
}

/// A guard of an aggregation rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Guard {
    /// The proposition currently has this overall status.
    Status(Atom, OverallStatus),
    /// The fact currently has this truth value.
    Fact(Atom, bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Effect {
    SetStatus(Atom, OverallStatus),
    Assert(Atom),
}

impl Effect {
    pub fn target(&self) -> &Atom {
        match self {
            Effect::SetStatus(a, _) | Effect::Assert(a) => a,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RuleBody {
    /// Every condition is necessary for the target.
    Necessity {
        target: Atom,
        conditions: Vec<Atom>,
    },
    Evidence {
        target: Atom,
        polarity: Polarity,
        strength: Strength,
        condition: Atom,
        likelihood_ratio: Option<f64>,
        source: Option<String>,
    },
    Argument {
        target: Atom,
        polarity: Polarity,
        strength: Strength,
        condition: Atom,
        source: Option<String>,
    },
    Default {
        target: Atom,
    },
    Aggregation {
        guards: Vec<Guard>,
        effect: Effect,
    },
}

impl RuleBody {
    pub fn kind_name(&self) -> &'static str {
        match self {
            RuleBody::Necessity { .. } => "necessity",
            RuleBody::Evidence { .. } => "evidence",
            RuleBody::Argument { .. } => "argument",
            RuleBody::Default { .. } => "default",
            RuleBody::Aggregation { .. } => "aggregation",
        }
    }

    /// The proposition the rule concludes about.
    pub fn target(&self) -> &Atom {
        match self {
            RuleBody::Necessity { target, .. }
            | RuleBody::Evidence { target, .. }
            | RuleBody::Argument { target, .. }
            | RuleBody::Default { target } => target,
            RuleBody::Aggregation { effect, .. } => effect.target(),
        }
    }

    /// Atoms read as facts.
    pub fn condition_atoms(&self) -> Vec<&Atom> {
        match self {
            RuleBody::Necessity { conditions, .. } => conditions.iter().collect(),
            RuleBody::Evidence { condition, .. } | RuleBody::Argument { condition, .. } => {
                vec![condition]
            }
            RuleBody::Default { .. } => Vec::new(),
            RuleBody::Aggregation { guards, .. } => guards
                .iter()
                .filter_map(|g| match g {
                    Guard::Fact(a, _) => Some(a),
                    Guard::Status(..) => None,
                })
                .collect(),
        }
    }

    /// Atoms that must be declared propositions.
    pub fn proposition_atoms(&self) -> Vec<&Atom> {
        match self {
            RuleBody::Aggregation { guards, effect } => guards
                .iter()
                .filter_map(|g| match g {
                    Guard::Status(a, _) => Some(a),
                    Guard::Fact(..) => None,
                })
                .chain(std::iter::once(effect.target()))
                .collect(),
            other => vec![other.target()],
        }
    }

    /// Every atom in canonical textual order.
    pub fn atoms(&self) -> Vec<&Atom> {
        match self {
            RuleBody::Necessity { target, conditions } => std::iter::once(target).chain(conditions).collect(),
            RuleBody::Evidence { target, condition, .. } | RuleBody::Argument { target, condition, .. } => {
                vec![target, condition]
            }
            RuleBody::Default { target } => vec![target],
            RuleBody::Aggregation { guards, effect } => guards
                .iter()
                .map(|g| match g {
                    Guard::Status(a, _) | Guard::Fact(a, _) => a,
                })
                .chain(std::iter::once(effect.target()))
                .collect(),
        }
    }

    pub fn map_atoms(&self, f: &impl Fn(&Atom) -> Atom) -> RuleBody {
        match self {
            RuleBody::Necessity { target, conditions } => {
                RuleBody::Necessity { target: f(target), conditions: conditions.iter().map(f).collect() }
            }
            RuleBody::Evidence { target, polarity, strength, condition, likelihood_ratio, source } => {
                RuleBody::Evidence {
                    target: f(target),
                    polarity: *polarity,
                    strength: *strength,
                    condition: f(condition),
                    likelihood_ratio: *likelihood_ratio,
                    source: source.clone(),
                }
            }
            RuleBody::Argument { target, polarity, strength, condition, source } => RuleBody::Argument {
                target: f(target),
                polarity: *polarity,
                strength: *strength,
                condition: f(condition),
                source: source.clone(),
            },
            RuleBody::Default { target } => RuleBody::Default { target: f(target) },
            RuleBody::Aggregation { guards, effect } => RuleBody::Aggregation {
                guards: guards
                    .iter()
                    .map(|g| match g {
                        Guard::Status(a, s) => Guard::Status(f(a), *s),
                        Guard::Fact(a, v) => Guard::Fact(f(a), *v),
                    })
                    .collect(),
                effect: match effect {
                    Effect::SetStatus(a, s) => Effect::SetStatus(f(a), *s),
                    Effect::Assert(a) => Effect::Assert(f(a)),
                },
            },
        }
    }

    /// Distinct variables in order of first appearance.
    pub fn variables(&self) -> Vec<&str> {
        let mut seen = Vec::new();
        for v in self.atoms().into_iter().flat_map(|a| a.variables()) {
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen
    }

    pub fn is_ground(&self) -> bool {
        self.atoms().iter().all(|a| a.is_ground())
    }

    /// Content-derived identifier: `<kind>:<target>:<8 hex digits>`.
    pub fn derive_id(&self) -> RuleId {
        let digest = Sha256::digest(self.to_string().as_bytes());
        let hex: String = digest[..4].iter().map(|b| format!("{b:02x}")).collect();
        RuleId(format!("{}:{}:{}", self.kind_name(), self.target(), hex))
    }
}

/// Canonical text with every optional field resolved.
impl fmt::Display for RuleBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleBody::Necessity { target, conditions } => {
                write!(f, "necessary for {target}:")?;
                for (i, c) in conditions.iter().enumerate() {
                    write!(f, "{}{c}", if i == 0 { " " } else { ", " })?;
                }
            }
            RuleBody::Evidence { target, polarity, strength, condition, likelihood_ratio, source } => {
                write!(f, "evidence {polarity} {target} strength {strength} when {condition}")?;
                if let Some(lr) = likelihood_ratio {
                    write!(f, " lr {lr}")?;
                }
                if let Some(s) = source {
                    write!(f, " source {s:?}")?;
                }
            }
            RuleBody::Argument { target, polarity, strength, condition, source } => {
                write!(f, "argument {polarity} {target} strength {strength} when {condition}")?;
                if let Some(s) = source {
                    write!(f, " source {s:?}")?;
                }
            }
            RuleBody::Default { target } => write!(f, "assume {target}")?,
            RuleBody::Aggregation { guards, effect } => {
                f.write_str("if")?;
                for (i, g) in guards.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" and")?;
                    }
                    match g {
                        Guard::Status(a, s) => write!(f, " {a} is {s}")?,
                        Guard::Fact(a, v) => write!(f, " fact {a} {v}")?,
                    }
                }
                match effect {
                    Effect::SetStatus(a, s) => write!(f, " then {a} is {s}")?,
                    Effect::Assert(a) => write!(f, " then assert {a}")?,
                }
            }
        }
        f.write_str(".")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub id: RuleId,
    pub layer: Layer,
    pub body: RuleBody,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnowledgeBase {
    pub constants: BTreeSet<String>,
    pub propositions: BTreeMap<Atom, Proposition>,
    /// Sorted by identifier.
    pub rules: Vec<Rule>,
    pub facts: FactState,
    /// Atoms named by `fact` declarations.
    pub fact_atoms: BTreeSet<Atom>,
    by_target: BTreeMap<Atom, Vec<usize>>,
}

impl KnowledgeBase {
    pub fn empty() -> KnowledgeBase {
        KnowledgeBase {
            constants: BTreeSet::new(),
            propositions: BTreeMap::new(),
            rules: Vec::new(),
            facts: FactState::new(),
            fact_atoms: BTreeSet::new(),
            by_target: BTreeMap::new(),
        }
    }

    /// Collects declarations without grounding rules or resolving atoms.
    /// Schematic propositions are expanded immediately.
    pub fn assemble(declarations: &[Declaration]) -> Result<KnowledgeBase, KbError> {
        let mut kb = KnowledgeBase::empty();
        for d in declarations {
            if let DeclKind::Const(names) = &d.kind {
                kb.constants.extend(names.iter().cloned());
            }
        }
        let constants: Vec<&str> = kb.constants.iter().map(String::as_str).collect();

        let mut rules = Vec::new();
        for d in declarations {
            match &d.kind {
                DeclKind::Const(_) => {}
                DeclKind::Prop { atom, description, layer } => {
                    for instance in ground::instances_of(atom, &constants) {
                        let prop = Proposition {
                            atom: instance.clone(),
                            description: description.clone(),
                            layer: layer.unwrap_or_default(),
                        };
                        if kb.propositions.insert(instance.clone(), prop).is_some() {
                            return Err(KbError::DuplicateProposition(instance));
                        }
                    }
                }
                DeclKind::Fact { atom, value } => {
                    if !atom.is_ground() {
                        return Err(KbError::NonGroundFact(atom.clone()));
                    }
                    if !kb.fact_atoms.insert(atom.clone()) {
                        return Err(KbError::DuplicateFact(atom.clone()));
                    }
                    kb.facts.set(atom.clone(), *value);
                }
                DeclKind::Necessary { target, conditions } => {
                    rules.push(RuleBody::Necessity { target: target.clone(), conditions: conditions.clone() })
                }
                DeclKind::Evidence { polarity, target, strength, condition, lr, source } => {
                    rules.push(RuleBody::Evidence {
                        target: target.clone(),
                        polarity: *polarity,
                        strength: *strength,
                        condition: condition.clone(),
                        likelihood_ratio: *lr,
                        source: source.clone(),
                    })
                }
                DeclKind::Argument { polarity, target, strength, condition, source } => {
                    rules.push(RuleBody::Argument {
                        target: target.clone(),
                        polarity: *polarity,
                        strength: strength.unwrap_or(Strength::Ordinary),
                        condition: condition.clone(),
                        source: source.clone(),
                    })
                }
                DeclKind::Assume(target) => rules.push(RuleBody::Default { target: target.clone() }),
                DeclKind::Aggregation { guards, effect } => {
                    rules.push(RuleBody::Aggregation { guards: guards.clone(), effect: effect.clone() })
                }
            }
        }

        for body in rules {
            let id = body.derive_id();
            if let RuleBody::Aggregation { effect: Effect::SetStatus(_, status), .. } = &body {
                if status.tier() > crate::vocabulary::ForceTier::EVIDENTIAL {
                    return Err(KbError::ForbiddenEffectStatus { rule: id, status: *status });
                }
            }
            kb.rules.push(Rule { id, layer: Layer::default(), body });
        }
        kb.finish()
    }

    /// Sorts rules, rejects duplicate ids, assigns layers and rebuilds the
    /// target index.
    fn finish(mut self) -> Result<KnowledgeBase, KbError> {
        self.rules.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in self.rules.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(KbError::DuplicateRuleId(pair[0].id.clone()));
            }
        }
        for rule in &mut self.rules {
            if let Some(p) = self.propositions.get(rule.body.target()) {
                rule.layer = p.layer;
            }
        }
        self.by_target.clear();
        for (i, rule) in self.rules.iter().enumerate() {
            self.by_target.entry(rule.body.target().clone()).or_default().push(i);
        }
        Ok(self)
    }

    /// Checks that every proposition position in every rule names a declared
    /// proposition.
    fn resolve(&self) -> Result<(), KbError> {
        for rule in &self.rules {
            for atom in rule.body.proposition_atoms() {
                if !self.propositions.contains_key(atom) {
                    return Err(KbError::UnknownAtom { rule: rule.id.clone(), atom: atom.clone() });
                }
            }
        }
        Ok(())
    }

    pub fn is_ground(&self) -> bool {
        self.rules.iter().all(|r| r.body.is_ground())
    }

    pub fn proposition(&self, atom: &Atom) -> Option<&Proposition> {
        self.propositions.get(atom)
    }

    /// Rules whose target is `atom`, in identifier order.
    pub fn rules_for<'a>(&'a self, atom: &Atom) -> impl Iterator<Item = &'a Rule> + 'a {
        self.by_target.get(atom).map(|v| v.as_slice()).unwrap_or(&[]).iter().map(move |&i| &self.rules[i])
    }

    pub fn aggregation_rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().filter(|r| matches!(r.body, RuleBody::Aggregation { .. }))
    }

    pub fn rule(&self, id: &RuleId) -> Option<&Rule> {
        self.rules.binary_search_by(|r| r.id.cmp(id)).ok().map(|i| &self.rules[i])
    }

    /// Atoms a scenario may assert or retract.
    pub fn is_fact_atom(&self, atom: &Atom) -> bool {
        self.fact_atoms.contains(atom) || self.propositions.contains_key(atom)
    }
}

/// Builds a validated, grounded knowledge base from declarations.
pub fn build_kb(declarations: &[Declaration]) -> Result<KnowledgeBase, KbError> {
    build_kb_with_limit(declarations, DEFAULT_GROUNDING_LIMIT)
}

pub fn build_kb_with_limit(
    declarations: &[Declaration],
    grounding_limit: usize,
) -> Result<KnowledgeBase, KbError> {
    let raw = KnowledgeBase::assemble(declarations)?;
    let kb = ground_with_limit(&raw, grounding_limit)?;
    kb.resolve()?;
    Ok(kb)
}
