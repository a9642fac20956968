//! The closed set of qualitative uncertainty terms.
//!
//! Every proposition ends up with exactly one [`OverallStatus`]. Statuses are
//! grouped into force tiers; a status of a higher tier takes precedence over
//! one of a lower tier when beliefs are revised.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// One of the thirteen overall epistemic statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OverallStatus {
    Inconsistent,
    Excluded,
    Confirmed,
    Probable,
    Supported,
    Ambiguous,
    Doubted,
    Improbable,
    Plausible,
    Implausible,
    Assumed,
    Possible,
    Unknown,
}

impl OverallStatus {
    pub const ALL: [OverallStatus; 13] = [
        OverallStatus::Inconsistent,
        OverallStatus::Excluded,
        OverallStatus::Confirmed,
        OverallStatus::Probable,
        OverallStatus::Supported,
        OverallStatus::Ambiguous,
        OverallStatus::Doubted,
        OverallStatus::Improbable,
        OverallStatus::Plausible,
        OverallStatus::Implausible,
        OverallStatus::Assumed,
        OverallStatus::Possible,
        OverallStatus::Unknown,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OverallStatus::Inconsistent => "inconsistent",
            OverallStatus::Excluded => "excluded",
            OverallStatus::Confirmed => "confirmed",
            OverallStatus::Probable => "probable",
            OverallStatus::Supported => "supported",
            OverallStatus::Ambiguous => "ambiguous",
            OverallStatus::Doubted => "doubted",
            OverallStatus::Improbable => "improbable",
            OverallStatus::Plausible => "plausible",
            OverallStatus::Implausible => "implausible",
            OverallStatus::Assumed => "assumed",
            OverallStatus::Possible => "possible",
            OverallStatus::Unknown => "unknown",
        }
    }

    pub fn tier(self) -> ForceTier {
        force_tier(self)
    }
}

impl fmt::Display for OverallStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown term `{0}`")]
pub struct UnknownTerm(pub String);

impl FromStr for OverallStatus {
    type Err = UnknownTerm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OverallStatus::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| UnknownTerm(s.to_string()))
    }
}

/// Precedence tier of a status, 0 (no information) through 5 (inconsistent).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ForceTier(u8);

impl ForceTier {
    pub const NONE: ForceTier = ForceTier(0);
    pub const DEFAULT: ForceTier = ForceTier(1);
    pub const ARGUMENTATIVE: ForceTier = ForceTier(2);
    pub const EVIDENTIAL: ForceTier = ForceTier(3);
    pub const CONCLUSIVE: ForceTier = ForceTier(4);
    pub const INCONSISTENT: ForceTier = ForceTier(5);

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for ForceTier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn force_tier(status: OverallStatus) -> ForceTier {
    use OverallStatus::*;
    match status {
        Inconsistent => ForceTier::INCONSISTENT,
        Confirmed | Excluded => ForceTier::CONCLUSIVE,
        Probable | Supported | Ambiguous | Doubted | Improbable => ForceTier::EVIDENTIAL,
        Plausible | Implausible => ForceTier::ARGUMENTATIVE,
        Assumed => ForceTier::DEFAULT,
        Possible | Unknown => ForceTier::NONE,
    }
}

/// Strict precedence: `a` overrides `b` iff its tier is strictly higher.
pub fn takes_precedence(a: OverallStatus, b: OverallStatus) -> bool {
    force_tier(a) > force_tier(b)
}

/// Strength of a single item of support or attack.
///
/// Evidence uses `conclusive`/`strong`/`weak`; arguments use
/// `conclusive`/`ordinary`. `ordinary` is only comparable with `conclusive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Conclusive,
    Strong,
    Weak,
    Ordinary,
}

impl Strength {
    pub fn as_str(self) -> &'static str {
        match self {
            Strength::Conclusive => "conclusive",
            Strength::Strong => "strong",
            Strength::Weak => "weak",
            Strength::Ordinary => "ordinary",
        }
    }

    pub fn is_conclusive(self) -> bool {
        self == Strength::Conclusive
    }

    /// Valid on the evidence scale.
    pub fn is_evidential(self) -> bool {
        !matches!(self, Strength::Ordinary)
    }

    /// Valid on the argument scale.
    pub fn is_argumentative(self) -> bool {
        matches!(self, Strength::Conclusive | Strength::Ordinary)
    }
}

impl PartialOrd for Strength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use Strength::*;
        let rank = |s: Strength| match s {
            Weak => 0,
            Strong => 1,
            Conclusive => 2,
            Ordinary => 1,
        };
        match (self, other) {
            (a, b) if a == b => Some(Ordering::Equal),
            (Ordinary, Strong | Weak) | (Strong | Weak, Ordinary) => None,
            (a, b) => Some(rank(*a).cmp(&rank(*b))),
        }
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strength {
    type Err = UnknownTerm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "conclusive" => Ok(Strength::Conclusive),
            "strong" => Ok(Strength::Strong),
            "weak" => Ok(Strength::Weak),
            "ordinary" => Ok(Strength::Ordinary),
            other => Err(UnknownTerm(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    For,
    Against,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::For => "for",
            Polarity::Against => "against",
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Knowledge layer a declaration belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    General,
    #[default]
    Domain,
    Problem,
}

impl Layer {
    pub const ALL: [Layer; 3] = [Layer::General, Layer::Domain, Layer::Problem];

    pub fn as_str(self) -> &'static str {
        match self {
            Layer::General => "general",
            Layer::Domain => "domain",
            Layer::Problem => "problem",
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Layer {
    type Err = UnknownTerm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Layer::ALL.into_iter().find(|l| l.as_str() == s).ok_or_else(|| UnknownTerm(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tier_table() {
        assert_eq!(force_tier(OverallStatus::Confirmed).value(), 4);
        assert_eq!(force_tier(OverallStatus::Probable).value(), 3);
        assert_eq!(force_tier(OverallStatus::Assumed).value(), 1);
        assert_eq!(force_tier(OverallStatus::Excluded).value(), 4);
        assert_eq!(force_tier(OverallStatus::Plausible).value(), 2);
        assert_eq!(force_tier(OverallStatus::Unknown).value(), 0);
        assert_eq!(force_tier(OverallStatus::Possible).value(), 0);
    }

    #[test]
    fn thirteen_distinct_terms() {
        let names: std::collections::BTreeSet<_> = OverallStatus::ALL.iter().map(|s| s.as_str()).collect();
        assert_eq!(names.len(), 13);
        for s in OverallStatus::ALL {
            assert_eq!(s.as_str().parse::<OverallStatus>().unwrap(), s);
        }
    }

    #[test]
    fn inconsistent_is_strictly_highest() {
        for s in OverallStatus::ALL {
            if s != OverallStatus::Inconsistent {
                assert!(takes_precedence(OverallStatus::Inconsistent, s));
            }
            assert!(force_tier(s) >= force_tier(OverallStatus::Possible));
        }
    }

    #[test]
    fn precedence_examples() {
        assert!(takes_precedence(OverallStatus::Confirmed, OverallStatus::Probable));
        assert!(takes_precedence(OverallStatus::Probable, OverallStatus::Assumed));
        assert!(!takes_precedence(OverallStatus::Supported, OverallStatus::Supported));
    }

    #[test]
    fn precedence_is_strict_partial_order() {
        let all = OverallStatus::ALL;
        for a in all {
            assert!(!takes_precedence(a, a));
            for b in all {
                let ab = takes_precedence(a, b);
                let ba = takes_precedence(b, a);
                let eq = force_tier(a) == force_tier(b);
                assert!(!(ab && ba));
                assert_eq!(ab as u8 + ba as u8 + eq as u8, 1, "{a} {b}");
                for c in all {
                    if ab && takes_precedence(b, c) {
                        assert!(takes_precedence(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn strength_ladder() {
        assert!(Strength::Conclusive > Strength::Strong);
        assert!(Strength::Strong > Strength::Weak);
        assert!(Strength::Conclusive > Strength::Ordinary);
        assert_eq!(Strength::Ordinary.partial_cmp(&Strength::Weak), None);
    }
}
