use std::fmt::Write;

use super::{DeclKind, Declaration, ScenarioStep};
use crate::knowledge::{Effect, Guard};

/// Canonical text, one declaration per line.
pub fn print_kb(declarations: &[Declaration]) -> String {
    let mut out = String::new();
    for d in declarations {
        print_decl(&mut out, &d.kind);
        out.push('\n');
    }
    out
}

pub fn print_scenario(steps: &[ScenarioStep]) -> String {
    let mut out = String::new();
    for step in steps {
        match step {
            ScenarioStep::AssertFact { atom, value } => write!(out, "assert {atom} {value}"),
            ScenarioStep::RetractFact(atom) => write!(out, "retract {atom}"),
            ScenarioStep::Observe { polarity, atom, strength, kind, source } => write!(
                out,
                "observe {polarity} {atom} strength {strength} kind {} source {}",
                kind.as_str(),
                quote(source)
            ),
            ScenarioStep::Query(atom) => write!(out, "query {atom}"),
            ScenarioStep::Snapshot => write!(out, "snapshot"),
        }
        .unwrap();
        out.push_str(".\n");
    }
    out
}

fn print_decl(out: &mut String, kind: &DeclKind) {
    match kind {
        DeclKind::Const(names) => write!(out, "const {}", names.join(", ")).unwrap(),
        DeclKind::Prop { atom, description, layer } => {
            write!(out, "prop {atom}").unwrap();
            if let Some(d) = description {
                write!(out, " {}", quote(d)).unwrap();
            }
            if let Some(l) = layer {
                write!(out, " layer {l}").unwrap();
            }
        }
        DeclKind::Fact { atom, value } => write!(out, "fact {atom} {value}").unwrap(),
        DeclKind::Necessary { target, conditions } => {
            let conds: Vec<String> = conditions.iter().map(ToString::to_string).collect();
            write!(out, "necessary for {target}: {}", conds.join(", ")).unwrap();
        }
        DeclKind::Evidence { polarity, target, strength, condition, lr, source } => {
            write!(out, "evidence {polarity} {target} strength {strength} when {condition}").unwrap();
            if let Some(lr) = lr {
                write!(out, " lr {lr}").unwrap();
            }
            if let Some(s) = source {
                write!(out, " source {}", quote(s)).unwrap();
            }
        }
        DeclKind::Argument { polarity, target, strength, condition, source } => {
            write!(out, "argument {polarity} {target}").unwrap();
            if let Some(s) = strength {
                write!(out, " strength {s}").unwrap();
            }
            write!(out, " when {condition}").unwrap();
            if let Some(s) = source {
                write!(out, " source {}", quote(s)).unwrap();
            }
        }
        DeclKind::Assume(atom) => write!(out, "assume {atom}").unwrap(),
        DeclKind::Aggregation { guards, effect } => {
            out.push_str("if ");
            for (i, g) in guards.iter().enumerate() {
                if i > 0 {
                    out.push_str(" and ");
                }
                match g {
                    Guard::Status(a, s) => write!(out, "{a} is {s}").unwrap(),
                    Guard::Fact(a, v) => write!(out, "fact {a} {v}").unwrap(),
                }
            }
            match effect {
                Effect::SetStatus(a, s) => write!(out, " then {a} is {s}").unwrap(),
                Effect::Assert(a) => write!(out, " then assert {a}").unwrap(),
            }
        }
    }
    out.push('.');
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        match c {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            '\t' => q.push_str("\\t"),
            '\r' => q.push_str("\\r"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}
