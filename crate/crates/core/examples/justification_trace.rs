// Why does a proposition have its status? The justification tree lists
// necessity rules, contributing items, fired aggregation rules and any
// conflict, in a fixed order.

use qbelief::dsl::parse_kb;
use qbelief::engine::justify;
use qbelief::{build_kb, evaluate, Atom};

const KB: &str = r#"
prop leak "water leak".
prop call_plumber layer problem.
fact damp_wall true.
fact pipes_present true.
fact dripping_sound true.
necessary for leak: pipes_present.
evidence for leak strength strong when damp_wall source "inspection".
evidence for leak strength weak when dripping_sound.
argument against leak when recently_renovated.
if leak is probable then assert call_plumber.
"#;

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let kb = build_kb(&parse_kb(KB)?)?;
    let table = evaluate(&kb, &kb.facts, &[])?;
    let mut out = String::new();
    for p in ["leak", "call_plumber"] {
        out.push_str(&justify(&table, &Atom::constant(p))?.to_string());
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
