//! Qualitative reasoning about uncertainty.
//!
//! Propositions are given non-numeric epistemic statuses such as
//! `possible`, `probable`, `plausible`, `assumed` or `confirmed`, computed
//! from a rule knowledge base:
//!
//! * necessity rules decide whether a proposition is still possible;
//! * evidence rules and observations give it an evidential standing;
//! * argument rules give it a plausibility standing;
//! * defaults assume it in the absence of anything else;
//! * aggregation rules encode domain-specific ways of summarising the above.
//!
//! Beliefs are revised step by step as facts and observations arrive.
//! Conclusive states take precedence over evidential ones, which take
//! precedence over defaults; conclusive support clashing with conclusive
//! opposition is reported as `inconsistent` together with its sources.
//!
//! ```
//! use qbelief::{dsl, engine, knowledge};
//!
//! let decls = dsl::parse_kb(
//!     "prop ulcer.\n\
//!      fact epigastric_pain true.\n\
//!      evidence for ulcer strength strong when epigastric_pain.\n",
//! )?;
//! let kb = knowledge::build_kb(&decls)?;
//! let table = engine::evaluate(&kb, &kb.facts, &[])?;
//! assert_eq!(table.overall(&knowledge::Atom::constant("ulcer")).unwrap().as_str(), "probable");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cli;
pub mod dsl;
pub mod engine;
pub mod knowledge;
pub mod ordering;
pub mod vocabulary;

pub use engine::{evaluate, BeliefState, BeliefTable, EpistemicItem, Session};
pub use knowledge::{build_kb, Atom, KnowledgeBase};
pub use vocabulary::{OverallStatus, Polarity, Strength};
