use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::knowledge::{Atom, RuleId};
use crate::vocabulary::{Polarity, Strength};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemKind {
    Observation,
    Report,
    Sign,
    Argument,
    Assumption,
    /// Conclusive support created by an aggregation rule's `assert` effect.
    Derived,
}

impl ItemKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ItemKind::Observation => "observation",
            ItemKind::Report => "report",
            ItemKind::Sign => "sign",
            ItemKind::Argument => "argument",
            ItemKind::Assumption => "assumption",
            ItemKind::Derived => "derived",
        }
    }

    pub fn is_evidence(self) -> bool {
        matches!(self, ItemKind::Observation | ItemKind::Report | ItemKind::Sign | ItemKind::Derived)
    }
}

impl fmt::Display for ItemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where an item came from. Rule origins sort before scenario steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    Rule(RuleId),
    /// 1-based scenario step index.
    Step(usize),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Rule(id) => write!(f, "rule {id}"),
            Origin::Step(n) => write!(f, "step {n}"),
        }
    }
}

impl Serialize for Origin {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Origin::Rule(id) => serializer.collect_str(&format_args!("rule:{id}")),
            Origin::Step(n) => serializer.collect_str(&format_args!("step:{n}")),
        }
    }
}

/// A single unit of support or attack on one proposition.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EpistemicItem {
    pub id: String,
    pub target: Atom,
    pub kind: ItemKind,
    pub polarity: Polarity,
    pub strength: Strength,
    pub origin: Origin,
    pub source: String,
    pub likelihood_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid {kind} item: {reason}")]
pub struct InvalidItem {
    pub kind: ItemKind,
    pub reason: &'static str,
}

impl EpistemicItem {
    /// An item arriving from a scenario `observe` step.
    pub fn observed(
        step: usize,
        target: Atom,
        kind: ItemKind,
        polarity: Polarity,
        strength: Strength,
        source: impl Into<String>,
    ) -> Result<EpistemicItem, InvalidItem> {
        let item = EpistemicItem {
            id: format!("step:{step}"),
            target,
            kind,
            polarity,
            strength,
            origin: Origin::Step(step),
            source: source.into(),
            likelihood_ratio: None,
        };
        item.check()?;
        Ok(item)
    }

    pub fn check(&self) -> Result<(), InvalidItem> {
        let fail = |reason| Err(InvalidItem { kind: self.kind, reason });
        match self.kind {
            ItemKind::Argument if !self.strength.is_argumentative() => {
                fail("arguments are conclusive or ordinary")
            }
            k if k.is_evidence() && !self.strength.is_evidential() => {
                fail("evidence is conclusive, strong or weak")
            }
            ItemKind::Assumption if self.polarity == Polarity::Against => {
                fail("assumptions cannot be against")
            }
            _ => Ok(()),
        }
    }

    pub fn is_conclusive(&self) -> bool {
        self.strength.is_conclusive()
    }

    /// Total order used for every item list the engine reports.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.origin
            .cmp(&other.origin)
            .then_with(|| self.target.cmp(&other.target))
            .then_with(|| self.kind.cmp(&other.kind))
            .then_with(|| self.polarity.cmp(&other.polarity))
            .then_with(|| self.strength.as_str().cmp(other.strength.as_str()))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.id.cmp(&other.id))
            .then_with(|| {
                let a = self.likelihood_ratio.map(f64::to_bits);
                a.cmp(&other.likelihood_ratio.map(f64::to_bits))
            })
    }
}

impl fmt::Display for EpistemicItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} from {} source {:?}",
            self.kind, self.polarity, self.strength, self.origin, self.source
        )?;
        if let Some(lr) = self.likelihood_ratio {
            write!(f, " lr {lr}")?;
        }
        Ok(())
    }
}
