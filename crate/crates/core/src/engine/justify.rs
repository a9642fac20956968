use std::fmt;

use serde::Serialize;

use super::{is_evidential_item, BeliefTable, EngineError, ItemKind};
use crate::knowledge::Atom;

/// A node of a justification tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Justification {
    pub label: String,
    pub children: Vec<Justification>,
}

impl Justification {
    fn leaf(label: impl Into<String>) -> Justification {
        Justification { label: label.into(), children: Vec::new() }
    }

    fn node(label: impl Into<String>, children: Vec<Justification>) -> Justification {
        Justification { label: label.into(), children }
    }

    /// Depth-first walk over every label.
    pub fn labels(&self) -> Vec<&str> {
        let mut out = vec![self.label.as_str()];
        for c in &self.children {
            out.extend(c.labels());
        }
        out
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        writeln!(f, "{:indent$}{}", "", self.label, indent = depth * 2)?;
        for c in &self.children {
            c.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

/// Indented text, two spaces per level.
impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

/// Explains the overall status of `p`: one child per coordinate with the
/// items behind it, then fired aggregation rules and any conflict.
pub fn justify(table: &BeliefTable, p: &Atom) -> Result<Justification, EngineError> {
    let state = table.get(p).ok_or_else(|| EngineError::UnknownProposition(p.clone()))?;
    let mut children = Vec::new();

    let necessity = state
        .necessity_rules
        .iter()
        .map(|id| {
            let verdict = if state.violated_necessity.contains(id) { "violated" } else { "not violated" };
            Justification::leaf(format!("necessity {id}: {verdict}"))
        })
        .collect();
    children.push(Justification::node(format!("possibility: {}", state.possibility), necessity));

    let item_nodes = |pred: &dyn Fn(&super::EpistemicItem) -> bool| {
        state.items.iter().filter(|i| pred(i)).map(|i| Justification::leaf(i.to_string())).collect()
    };
    children.push(Justification::node(
        format!("evidential: {}", state.evidential),
        item_nodes(&is_evidential_item),
    ));
    children.push(Justification::node(
        format!("plausibility: {}", state.plausibility),
        item_nodes(&|i| i.kind == ItemKind::Argument && !i.is_conclusive()),
    ));
    children.push(Justification::node(
        format!("default: {}", state.default),
        item_nodes(&|i| i.kind == ItemKind::Assumption),
    ));

    if !state.fired_aggregation_rules.is_empty() {
        children.push(Justification::node(
            "aggregation",
            state
                .fired_aggregation_rules
                .iter()
                .map(|id| Justification::leaf(format!("fired {id}")))
                .collect(),
        ));
    }

    if let Some(conflict) = &state.conflict {
        let mut sides = Vec::new();
        sides.extend(conflict.supporting.iter().map(|i| Justification::leaf(format!("supporting: {i}"))));
        sides.extend(conflict.opposing.iter().map(|i| Justification::leaf(format!("opposing: {i}"))));
        sides.extend(
            conflict
                .violated_necessity
                .iter()
                .map(|id| Justification::leaf(format!("opposing: violated necessity {id}"))),
        );
        children.push(Justification::node(format!("conflict: {}", conflict.summary), sides));
    }

    Ok(Justification::node(format!("{p}: {}", state.overall), children))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_kb;
    use crate::engine::{evaluate, EpistemicItem};
    use crate::knowledge::build_kb;
    use crate::vocabulary::{Polarity, Strength};

    #[test]
    fn confirmed_ulcer_cites_endoscopy() {
        let kb = build_kb(&parse_kb("prop ulcer.\n").unwrap()).unwrap();
        let ulcer = Atom::constant("ulcer");
        let item = EpistemicItem::observed(
            1,
            ulcer.clone(),
            ItemKind::Observation,
            Polarity::For,
            Strength::Conclusive,
            "endoscopy",
        )
        .unwrap();
        let t = evaluate(&kb, &kb.facts, &[item]).unwrap();
        let j = justify(&t, &ulcer).unwrap();
        assert_eq!(j.label, "ulcer: confirmed");
        let evidential = &j.children[1];
        assert_eq!(evidential.children.len(), 1);
        assert!(evidential.children[0].label.contains("endoscopy"));
        assert!(j
            .to_string()
            .contains("\n  evidential: confirmed-\n    observation for conclusive from step 1"));
    }

    #[test]
    fn inconsistent_cites_both_sides() {
        let kb = build_kb(
            &parse_kb("prop p.\nfact a true.\nfact e true.\nargument for p strength conclusive when a.\nevidence against p strength conclusive when e.\n")
                .unwrap(),
        )
        .unwrap();
        let p = Atom::constant("p");
        let t = evaluate(&kb, &kb.facts, &[]).unwrap();
        let j = justify(&t, &p).unwrap();
        let conflict = j.children.last().unwrap();
        assert!(conflict.label.starts_with("conflict:"));
        assert_eq!(conflict.children.len(), 2);
        assert!(conflict.children[0].label.starts_with("supporting: argument for conclusive"));
        assert!(conflict.children[1].label.starts_with("opposing: sign against conclusive"));
    }

    #[test]
    fn unknown_atom() {
        let kb = build_kb(&parse_kb("prop p.\n").unwrap()).unwrap();
        let t = evaluate(&kb, &kb.facts, &[]).unwrap();
        assert!(matches!(justify(&t, &Atom::constant("q")), Err(EngineError::UnknownProposition(_))));
    }
}
