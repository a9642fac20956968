//! Eager grounding of schematic rules over the declared constants.

use std::collections::BTreeMap;

use super::{Atom, KbError, KnowledgeBase, Rule, RuleId};

/// Default cap on the number of rules a knowledge base may ground to.
pub const DEFAULT_GROUNDING_LIMIT: usize = 10_000;

pub fn ground(kb: &KnowledgeBase) -> Result<KnowledgeBase, KbError> {
    ground_with_limit(kb, DEFAULT_GROUNDING_LIMIT)
}

/// Expands every rule with `k` distinct variables into `|constants|^k`
/// instances with ids `<rule id>#<n>`, `n` counting from 1 in lexicographic
/// order of the constant tuples (variables taken in order of first
/// appearance). Ground rules are kept as they are.
pub fn ground_with_limit(kb: &KnowledgeBase, limit: usize) -> Result<KnowledgeBase, KbError> {
    let constants: Vec<&str> = kb.constants.iter().map(String::as_str).collect();

    let required = kb.rules.iter().fold(0usize, |acc, rule| {
        let k = rule.body.variables().len() as u32;
        let n = if k == 0 { 1 } else { constants.len().checked_pow(k).unwrap_or(usize::MAX) };
        acc.saturating_add(n)
    });
    if required > limit {
        return Err(KbError::GroundingExplosion { required, limit });
    }

    let mut rules = Vec::with_capacity(required);
    for rule in &kb.rules {
        let vars = rule.body.variables();
        if vars.is_empty() {
            rules.push(rule.clone());
            continue;
        }
        for (n, tuple) in tuples(&constants, vars.len()).enumerate() {
            let binding: BTreeMap<&str, &str> = vars.iter().copied().zip(tuple).collect();
            rules.push(Rule {
                id: RuleId(format!("{}#{}", rule.id, n + 1)),
                layer: rule.layer,
                body: rule.body.map_atoms(&|a| a.substitute(&binding)),
            });
        }
    }

    KnowledgeBase { rules, ..kb.clone() }.finish()
}

/// All ground instances of an atom, in lexicographic order of bindings.
pub(crate) fn instances_of(atom: &Atom, constants: &[&str]) -> Vec<Atom> {
    let mut vars: Vec<&str> = Vec::new();
    for v in atom.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    if vars.is_empty() {
        return vec![atom.clone()];
    }
    tuples(constants, vars.len())
        .map(|tuple| {
            let binding: BTreeMap<&str, &str> = vars.iter().copied().zip(tuple).collect();
            atom.substitute(&binding)
        })
        .collect()
}

/// Odometer over `constants^k` in lexicographic order.
fn tuples<'a>(constants: &'a [&'a str], k: usize) -> impl Iterator<Item = Vec<&'a str>> + 'a {
    let total = if constants.is_empty() { 0 } else { constants.len().pow(k as u32) };
    (0..total).map(move |mut index| {
        let mut tuple = vec![""; k];
        for slot in (0..k).rev() {
            tuple[slot] = constants[index % constants.len()];
            index /= constants.len();
        }
        tuple
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_kb;
    use crate::knowledge::{build_kb, build_kb_with_limit, RuleBody};

    #[test]
    fn surveillance_rule_single_constant() {
        let kb = build_kb(
            &parse_kb(
                "const monrovia.\nprop invasion(X).\nprop recommend_surveillance(X).\n\
                 if invasion(X) is ambiguous then assert recommend_surveillance(X).\n",
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(kb.rules.len(), 1);
        assert!(kb.rules[0].id.as_str().ends_with("#1"));
        assert_eq!(kb.rules[0].body.target().to_string(), "recommend_surveillance(monrovia)");
        assert_eq!(kb.propositions.len(), 2);
    }

    #[test]
    fn ground_kb_is_unchanged() {
        let kb = build_kb(&parse_kb("prop p.\nprop q.\nassume p.\n").unwrap()).unwrap();
        assert_eq!(ground(&kb).unwrap(), kb);
    }

    #[test]
    fn two_variables_three_constants() {
        let decls = parse_kb("const a, b, c.\nprop r(X, Y).\nassume r(X, Y).\n").unwrap();
        let raw = KnowledgeBase::assemble(&decls).unwrap();
        let kb = ground(&raw).unwrap();
        // Brute-force enumeration of the expected instances.
        let cs = ["a", "b", "c"];
        let mut expected = Vec::new();
        for x in cs {
            for y in cs {
                expected.push(format!("r({x},{y})"));
            }
        }
        let got: Vec<String> = {
            let mut v: Vec<(usize, String)> = kb
                .rules
                .iter()
                .map(|r| {
                    let n: usize = r.id.as_str().rsplit('#').next().unwrap().parse().unwrap();
                    (n, r.body.target().to_string())
                })
                .collect();
            v.sort();
            v.into_iter().map(|(_, t)| t).collect()
        };
        assert_eq!(got.len(), 9);
        assert_eq!(got, expected);
    }

    #[test]
    fn grounding_is_idempotent() {
        let decls = parse_kb(
            "const a, b.\nprop p(X).\nprop q(X).\nfact c(a) true.\n\
             evidence for p(X) strength weak when c(X).\nif p(X) is supported then q(X) is plausible.\n",
        )
        .unwrap();
        let raw = KnowledgeBase::assemble(&decls).unwrap();
        let once = ground(&raw).unwrap();
        assert_eq!(ground(&once).unwrap(), once);
        assert!(once.rules.iter().all(|r| r.body.is_ground()));
    }

    #[test]
    fn explosion_is_capped() {
        let decls = parse_kb("const a, b, c.\nprop p(X, Y, Z).\nassume p(X, Y, Z).\n").unwrap();
        let err = build_kb_with_limit(&decls, 26).unwrap_err();
        assert_eq!(err, KbError::GroundingExplosion { required: 27, limit: 26 });
        assert!(build_kb_with_limit(&decls, 27).is_ok());
    }

    #[test]
    fn repeated_variable_binds_once() {
        let decls = parse_kb("const a, b.\nprop p(X, X).\nassume p(X, X).\n").unwrap();
        let kb = build_kb(&decls).unwrap();
        assert_eq!(kb.rules.len(), 2);
        assert!(matches!(&kb.rules[0].body, RuleBody::Default { target } if target.to_string() == "p(a,a)"));
    }
}
