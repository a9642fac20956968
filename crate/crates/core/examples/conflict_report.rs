// Conclusive support meeting conclusive opposition is not combined: the
// proposition becomes `inconsistent` and the sources are reported.

use qbelief::dsl::parse_kb;
use qbelief::engine::ItemKind;
use qbelief::{build_kb, evaluate, Atom, EpistemicItem, Polarity, Strength};

const KB: &str = r#"
prop p.
fact proof true.
argument for p strength conclusive when proof source "derivation".
"#;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let kb = build_kb(&parse_kb(KB)?)?;
    let p = Atom::constant("p");
    let measurement = EpistemicItem::observed(
        1,
        p.clone(),
        ItemKind::Observation,
        Polarity::Against,
        Strength::Conclusive,
        "measurement",
    )?;
    let table = evaluate(&kb, &kb.facts, &[measurement])?;
    let state = table.get(&p).expect("p is declared");
    let mut lines = vec![format!("{p} is {}", state.overall)];
    if let Some(conflict) = &state.conflict {
        lines.push(conflict.summary.clone());
        for item in conflict.supporting.iter().chain(&conflict.opposing) {
            lines.push(format!("  {item}"));
        }
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
