// "Is more probable than" with both comparators: the qualitative one
// ranks overall statuses and breaks ties on net evidence counts, the
// likelihood one multiplies likelihood-ratio annotations.

use qbelief::dsl::parse_kb;
use qbelief::ordering::{more_probable_than, Comparator};
use qbelief::{build_kb, evaluate, Atom};

const KB: &str = r#"
prop flu.
prop cold.
prop allergy.
fact fever true.
fact sneezing true.
fact itchy_eyes true.
evidence for flu strength strong when fever lr 6.
evidence for flu strength weak when sneezing lr 1.5.
evidence for cold strength strong when sneezing lr 3.
evidence for allergy strength strong when itchy_eyes lr 5.
evidence for allergy strength strong when sneezing lr 2.
evidence against allergy strength weak when fever lr 0.8.
"#;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let kb = build_kb(&parse_kb(KB)?)?;
    let table = evaluate(&kb, &kb.facts, &[])?;
    let names = ["flu", "cold", "allergy"];
    let mut lines = Vec::new();
    for (i, p) in names.iter().enumerate() {
        for q in &names[i + 1..] {
            let (pa, qa) = (Atom::constant(*p), Atom::constant(*q));
            let qual = more_probable_than(&table, &pa, &qa, Comparator::Qualitative)?;
            let lik = more_probable_than(&table, &pa, &qa, Comparator::Likelihood)?;
            lines.push(format!("{p} vs {q}: qualitative {qual}, likelihood {lik}"));
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
