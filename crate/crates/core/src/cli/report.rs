//! TSV and JSON renderings of belief tables.

use std::fmt::Write;

use serde::Serialize;

use crate::engine::{BeliefState, BeliefTable, RevisionDelta};
use crate::knowledge::{Diagnostic, FactState};

pub const TSV_HEADER: &str = "proposition\tpossibility\tevidential\tplausibility\tdefault\toverall";

/// The fixed top-level JSON shape shared by every subcommand.
#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub facts: &'a FactState,
    pub beliefs: Vec<&'a BeliefState>,
    pub deltas: &'a [RevisionDelta],
    pub diagnostics: &'a [Diagnostic],
}

impl<'a> Report<'a> {
    pub fn of_table(table: &'a BeliefTable) -> Report<'a> {
        Report { facts: &table.facts, beliefs: table.iter().collect(), deltas: &[], diagnostics: &[] }
    }

    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serialises");
        s.push('\n');
        s
    }
}

/// Header plus one row per state, in the order given.
pub fn tsv<'a>(states: impl IntoIterator<Item = &'a BeliefState>) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for s in states {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            s.proposition, s.possibility, s.evidential, s.plausibility, s.default, s.overall
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_kb;
    use crate::engine::evaluate;
    use crate::knowledge::build_kb;

    #[test]
    fn rows_sorted_by_proposition() {
        let kb = build_kb(&parse_kb("prop zeta.\nprop alpha.\nassume zeta.\n").unwrap()).unwrap();
        let t = evaluate(&kb, &kb.facts, &[]).unwrap();
        let text = tsv(t.iter());
        assert_eq!(
            text,
            format!(
                "{TSV_HEADER}\nalpha\tpossible\tno-evidence\tno-argument\tabsent\tunknown\n\
                     zeta\tpossible\tno-evidence\tno-argument\tpresent\tassumed\n"
            )
        );
    }

    #[test]
    fn json_top_level_keys() {
        let kb = build_kb(&parse_kb("prop p.\nfact f true.\n").unwrap()).unwrap();
        let t = evaluate(&kb, &kb.facts, &[]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&Report::of_table(&t).to_json_pretty()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["beliefs", "deltas", "diagnostics", "facts"]);
        assert_eq!(v["facts"]["f"], "true");
        assert_eq!(v["beliefs"][0]["firedAggregationRules"], serde_json::json!([]));
        assert_eq!(v["beliefs"][0]["evidential"], "no-evidence");
    }
}
