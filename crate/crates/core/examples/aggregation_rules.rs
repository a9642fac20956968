// Domain-specific aggregation: a schematic rule base grounded over its
// constants, where one rule forces an `ambiguous` verdict despite
// evidence against, and another recommends surveillance because of it.

use qbelief::dsl::parse_kb;
use qbelief::{build_kb, evaluate};

const KB: &str = r#"
const monrovia, freedonia.
prop invasion(X) "imminent invasion" layer domain.
prop recommend_surveillance(X) layer problem.
fact friendly_relations(monrovia) true.
fact friendly_relations(freedonia) true.
fact rival_interest(monrovia) true.
fact rival_interest(freedonia) false.
evidence against invasion(X) strength strong when friendly_relations(X).
if fact rival_interest(X) true then invasion(X) is ambiguous.
if invasion(X) is ambiguous then assert recommend_surveillance(X).
"#;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let kb = build_kb(&parse_kb(KB)?)?;
    let table = evaluate(&kb, &kb.facts, &[])?;
    let mut lines =
        vec![format!("{} rules after grounding, {} aggregation rounds", kb.rules.len(), table.iterations)];
    for s in table.iter() {
        let fired: Vec<&str> = s.fired_aggregation_rules.iter().map(|r| r.as_str()).collect();
        lines.push(format!(
            "{}: evidential {}, overall {} [{}]",
            s.proposition,
            s.evidential,
            s.overall,
            fired.join(" ")
        ));
    }
    Ok(lines)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
