//! Textual formats: knowledge bases (`.ukb`) and scenarios (`.usc`).
//!
//! Both formats are sequences of period-terminated statements; `#` starts a
//! comment that runs to the end of the line. Identifiers beginning with an
//! upper-case letter are variables.

mod lexer;
mod parser;
mod printer;

use std::fmt;

use crate::knowledge::{Atom, Effect, Guard};
use crate::vocabulary::{Layer, Polarity, Strength};

pub use parser::{parse_atom, parse_kb, parse_scenario, parse_scenario_spanned};
pub use printer::{print_kb, print_scenario};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DeclKind {
    Const(Vec<String>),
    Prop {
        atom: Atom,
        description: Option<String>,
        layer: Option<Layer>,
    },
    Fact {
        atom: Atom,
        value: bool,
    },
    Necessary {
        target: Atom,
        conditions: Vec<Atom>,
    },
    Evidence {
        polarity: Polarity,
        target: Atom,
        strength: Strength,
        condition: Atom,
        lr: Option<f64>,
        source: Option<String>,
    },
    Argument {
        polarity: Polarity,
        target: Atom,
        /// `None` reads as `ordinary`.
        strength: Option<Strength>,
        condition: Atom,
        source: Option<String>,
    },
    Assume(Atom),
    Aggregation {
        guards: Vec<Guard>,
        effect: Effect,
    },
}

/// One parsed statement of a knowledge base. Equality ignores the span.
#[derive(Debug, Clone)]
pub struct Declaration {
    pub kind: DeclKind,
    pub span: Span,
}

impl Declaration {
    pub fn new(kind: DeclKind) -> Declaration {
        Declaration { kind, span: Span::default() }
    }
}

impl PartialEq for Declaration {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl From<DeclKind> for Declaration {
    fn from(kind: DeclKind) -> Self {
        Declaration::new(kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObserveKind {
    Observation,
    Report,
}

impl ObserveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ObserveKind::Observation => "observation",
            ObserveKind::Report => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScenarioStep {
    AssertFact {
        atom: Atom,
        value: bool,
    },
    /// Resets the atom to `unknown`.
    RetractFact(Atom),
    Observe {
        polarity: Polarity,
        atom: Atom,
        strength: Strength,
        kind: ObserveKind,
        source: String,
    },
    Query(Atom),
    Snapshot,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected {expected}, found {found}")]
    Expected { expected: String, found: String },
    #[error("unknown strength `{0}`")]
    UnknownStrength(String),
    #[error("unknown status `{0}`")]
    UnknownStatus(String),
    #[error("unknown layer `{0}`")]
    UnknownLayer(String),
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("likelihood ratio must be a positive finite number, found `{0}`")]
    InvalidLikelihoodRatio(String),
    #[error("unterminated string")]
    UnterminatedString,
    #[error("invalid escape `\\{0}`")]
    InvalidEscape(char),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {}, column {}: {kind}", span.line, span.column)]
pub struct ParseError {
    pub span: Span,
    pub kind: ParseErrorKind,
}
