mod precedence_revision {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/precedence_revision.rs"));
}

mod aggregation_rules {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/aggregation_rules.rs"));
}

mod conflict_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/conflict_report.rs"));
}

mod independent_possibility {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/independent_possibility.rs"));
}

mod compare_propositions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/compare_propositions.rs"));
}

mod lint_knowledge_base {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lint_knowledge_base.rs"));
}

mod dsl_round_trip {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dsl_round_trip.rs"));
}

mod justification_trace {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/justification_trace.rs"));
}

#[test]
fn precedence_revision_example_runs() {
    let lines = precedence_revision::run_example().expect("precedence example runs");
    assert!(
        lines.contains(&"step 1: ulcer probable -> confirmed (evidential, overall, items)".to_string()),
        "{lines:?}"
    );
    assert!(lines.contains(&"after: gastric_cancer is improbable".to_string()));
}

#[test]
fn aggregation_rules_example_runs() {
    let lines = aggregation_rules::run_example().expect("aggregation example runs");
    assert!(
        lines.iter().any(|l| l.starts_with("invasion(monrovia): evidential improbable-, overall ambiguous")),
        "{lines:?}"
    );
    assert!(lines
        .iter()
        .any(|l| l.starts_with("invasion(freedonia): evidential improbable-, overall improbable")));
    assert!(lines.iter().any(|l| l.starts_with("recommend_surveillance(monrovia): evidential confirmed-, overall confirmed [aggregation:recommend_surveillance(X):")));
}

#[test]
fn conflict_report_example_runs() {
    let lines = conflict_report::run_example().expect("conflict example runs");
    assert_eq!(lines[0], "p is inconsistent");
    assert_eq!(lines.len(), 4, "{lines:?}");
}

#[test]
fn independent_possibility_example_runs() {
    let lines = independent_possibility::run_example().expect("possibility example runs");
    assert!(lines[..3].iter().all(|l| l.contains("possibility possible")), "{lines:?}");
    assert!(lines[3].ends_with("possibility impossible, evidential probable-, overall excluded"));
}

#[test]
fn compare_propositions_example_runs() {
    let lines = compare_propositions::run_example().expect("compare example runs");
    assert_eq!(lines[1], "flu vs allergy: qualitative less, likelihood more");
}

#[test]
fn lint_knowledge_base_example_runs() {
    let lines = lint_knowledge_base::run_example().expect("lint example runs");
    let kinds: Vec<&str> = lines.iter().map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(
        kinds,
        [
            "PotentialConflict",
            "NecessityCycle",
            "UnreachableRule",
            "UnreachableRule",
            "LayerStatistics",
            "LayerStatistics"
        ]
    );
}

#[test]
fn dsl_round_trip_example_runs() {
    let lines = dsl_round_trip::run_example().expect("dsl example runs");
    assert_eq!(lines[0], "const north, south.");
    assert!(lines.last().unwrap().starts_with("error: line 2, column 25"));
}

#[test]
fn justification_trace_example_runs() {
    let tree = justification_trace::run_example().expect("justification example runs");
    assert!(tree.starts_with("leak: probable\n  possibility: possible\n"), "{tree}");
    assert!(tree.contains("call_plumber: confirmed\n"));
    assert!(tree.contains("  aggregation\n    fired aggregation:call_plumber:"));
}
