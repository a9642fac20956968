// The knowledge-base language: parse, print in canonical form, parse
// again. Parse errors carry a line and column.

use qbelief::dsl::{parse_kb, print_kb};

const KB: &str = r#"
# Comments and free layout are accepted.
const north,   south.
prop   storm(X)  "storm \"warning\"" layer general.
fact pressure_drop(north) true.
evidence for storm(X) strength strong when pressure_drop(X) lr 3.5 source "barometer".
argument against storm(X) when clear_sky(X).
if storm(X) is probable and fact coastal(X) true then assert evacuate(X).
"#;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let decls = parse_kb(KB)?;
    let printed = print_kb(&decls);
    assert_eq!(parse_kb(&printed)?, decls, "printing is parse-stable");
    let mut lines: Vec<String> = printed.lines().map(str::to_owned).collect();
    match parse_kb("prop p.\nevidence for p strength overwhelming when q.\n") {
        Err(e) => lines.push(format!("error: {e}")),
        Ok(_) => unreachable!("`overwhelming` is not a strength"),
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
