// Static checks on a rule base: potential conclusive conflicts, cycles
// among necessary conditions, conditions nothing can ever establish, and
// per-layer statistics.

use qbelief::dsl::parse_kb;
use qbelief::knowledge::{build_kb, validate};

const KB: &str = r#"
prop engine_fault layer domain.
prop battery_flat layer domain.
prop starts layer problem.
prop starts_slowly layer problem.
fact lights_dim true.
necessary for battery_flat: starts_slowly.
necessary for starts_slowly: battery_flat.
evidence for battery_flat strength conclusive when lights_dim.
evidence against battery_flat strength conclusive when radio_works.
argument for engine_fault when strange_noise.
assume starts.
"#;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let kb = build_kb(&parse_kb(KB)?)?;
    Ok(validate(&kb).iter().map(|d| d.to_string()).collect())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
