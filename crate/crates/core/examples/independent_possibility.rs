// Possibility depends only on necessary conditions and facts. Evidence,
// however strong, never makes an impossible proposition possible again,
// and learning a condition is false excludes the proposition.

use qbelief::dsl::{parse_kb, parse_scenario};
use qbelief::{build_kb, Session};

const KB: &str = r#"
prop burglary.
fact alarm_armed true.
fact entry_possible true.
necessary for burglary: entry_possible.
evidence for burglary strength strong when alarm_armed.
"#;

const SCENARIO: &str = r#"
observe against burglary strength weak kind report source "neighbour".
observe for burglary strength strong kind observation source "camera".
assert entry_possible false.
"#;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let kb = build_kb(&parse_kb(KB)?)?;
    let mut session = Session::new(&kb)?;
    let mut lines = Vec::new();
    let show = |s: &Session| {
        let b = s.table().iter().next().expect("one proposition");
        format!(
            "{}: possibility {}, evidential {}, overall {}",
            b.proposition, b.possibility, b.evidential, b.overall
        )
    };
    lines.push(show(&session));
    for step in parse_scenario(SCENARIO)? {
        session.step(&step)?;
        lines.push(show(&session));
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
