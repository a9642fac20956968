// Belief revision with precedence: a conclusive observation overrides
// strong evidence, and only the affected proposition changes.

use qbelief::dsl::{parse_kb, parse_scenario};
use qbelief::{build_kb, Session};

const KB: &str = r#"
prop ulcer "peptic ulcer".
prop gastric_cancer "gastric cancer".
fact epigastric_pain true.
evidence for ulcer strength strong when epigastric_pain source "history".
evidence against gastric_cancer strength strong when epigastric_pain source "history".
"#;

const SCENARIO: &str = r#"
observe for ulcer strength conclusive kind observation source "endoscopy".
"#;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let kb = build_kb(&parse_kb(KB)?)?;
    let mut session = Session::new(&kb)?;
    let mut lines = Vec::new();
    for s in session.table().iter() {
        lines.push(format!("before: {} is {}", s.proposition, s.overall));
    }
    for step in parse_scenario(SCENARIO)? {
        let delta = session.step(&step)?;
        for c in &delta.changes {
            lines.push(format!(
                "step {}: {} {} -> {} ({})",
                delta.step,
                c.proposition,
                c.before,
                c.after,
                c.changed.join(", ")
            ));
        }
    }
    for s in session.table().iter() {
        lines.push(format!("after: {} is {}", s.proposition, s.overall));
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
