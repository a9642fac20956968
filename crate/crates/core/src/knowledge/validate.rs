//! Static lint over a grounded knowledge base.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use super::{Atom, KnowledgeBase, RuleBody};
use crate::vocabulary::{Layer, Polarity, Strength};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum DiagnosticKind {
    /// Conclusive rules for and against the same proposition.
    PotentialConflict,
    NecessityCycle,
    /// A condition atom that no declaration or scenario can make true.
    UnreachableRule,
    LayerStatistics,
}

impl DiagnosticKind {
    pub fn severity(self) -> Severity {
        match self {
            DiagnosticKind::NecessityCycle => Severity::Error,
            DiagnosticKind::PotentialConflict | DiagnosticKind::UnreachableRule => Severity::Warning,
            DiagnosticKind::LayerStatistics => Severity::Info,
        }
    }
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagnosticKind::PotentialConflict => "PotentialConflict",
            DiagnosticKind::NecessityCycle => "NecessityCycle",
            DiagnosticKind::UnreachableRule => "UnreachableRule",
            DiagnosticKind::LayerStatistics => "LayerStatistics",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub severity: Severity,
    /// Rule ids and proposition atoms the diagnostic is about.
    pub subjects: Vec<String>,
    pub message: String,
}

impl Diagnostic {
    fn new(kind: DiagnosticKind, subjects: Vec<String>, message: String) -> Diagnostic {
        Diagnostic { kind, severity: kind.severity(), subjects, message }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        };
        write!(f, "{sev}\t{}\t{}\t{}", self.kind, self.subjects.join(","), self.message)
    }
}

pub fn validate(kb: &KnowledgeBase) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    potential_conflicts(kb, &mut out);
    necessity_cycles(kb, &mut out);
    unreachable_rules(kb, &mut out);
    layer_statistics(kb, &mut out);
    out.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.subjects.cmp(&b.subjects)));
    out
}

fn potential_conflicts(kb: &KnowledgeBase, out: &mut Vec<Diagnostic>) {
    for atom in kb.propositions.keys() {
        let mut pro = Vec::new();
        let mut con = Vec::new();
        for rule in kb.rules_for(atom) {
            let polarity = match &rule.body {
                RuleBody::Evidence { polarity, strength: Strength::Conclusive, .. }
                | RuleBody::Argument { polarity, strength: Strength::Conclusive, .. } => *polarity,
                _ => continue,
            };
            match polarity {
                Polarity::For => pro.push(rule.id.to_string()),
                Polarity::Against => con.push(rule.id.to_string()),
            }
        }
        if !pro.is_empty() && !con.is_empty() {
            let message = format!(
                "`{atom}` has conclusive rules for ({}) and against ({})",
                pro.join(", "),
                con.join(", ")
            );
            let mut subjects = vec![atom.to_string()];
            subjects.extend(pro);
            subjects.extend(con);
            out.push(Diagnostic::new(DiagnosticKind::PotentialConflict, subjects, message));
        }
    }
}

fn necessity_cycles(kb: &KnowledgeBase, out: &mut Vec<Diagnostic>) {
    let mut graph: DiGraph<Atom, ()> = DiGraph::new();
    let mut nodes: BTreeMap<Atom, NodeIndex> = BTreeMap::new();
    let mut node = |graph: &mut DiGraph<Atom, ()>, a: &Atom| {
        *nodes.entry(a.clone()).or_insert_with(|| graph.add_node(a.clone()))
    };
    for rule in &kb.rules {
        if let RuleBody::Necessity { target, conditions } = &rule.body {
            let t = node(&mut graph, target);
            for c in conditions {
                let c = node(&mut graph, c);
                graph.update_edge(t, c, ());
            }
        }
    }
    for scc in tarjan_scc(&graph) {
        let cyclic = scc.len() > 1 || graph.contains_edge(scc[0], scc[0]);
        if !cyclic {
            continue;
        }
        let members: BTreeSet<String> = scc.iter().map(|&i| graph[i].to_string()).collect();
        let subjects: Vec<String> = members.into_iter().collect();
        let message = format!("necessary conditions form a cycle: {}", subjects.join(" -> "));
        out.push(Diagnostic::new(DiagnosticKind::NecessityCycle, subjects, message));
    }
}

fn unreachable_rules(kb: &KnowledgeBase, out: &mut Vec<Diagnostic>) {
    for rule in &kb.rules {
        let missing: BTreeSet<String> = rule
            .body
            .condition_atoms()
            .into_iter()
            .filter(|a| !kb.is_fact_atom(a))
            .map(|a| a.to_string())
            .collect();
        if missing.is_empty() {
            continue;
        }
        let message = format!(
            "condition {} is neither a proposition nor a declared fact",
            missing.iter().map(|m| format!("`{m}`")).collect::<Vec<_>>().join(", ")
        );
        let mut subjects = vec![rule.id.to_string()];
        subjects.extend(missing);
        out.push(Diagnostic::new(DiagnosticKind::UnreachableRule, subjects, message));
    }
}

fn layer_statistics(kb: &KnowledgeBase, out: &mut Vec<Diagnostic>) {
    for layer in Layer::ALL {
        let props: Vec<String> =
            kb.propositions.values().filter(|p| p.layer == layer).map(|p| p.atom.to_string()).collect();
        if props.is_empty() {
            continue;
        }
        let rules = kb.rules.iter().filter(|r| r.layer == layer).count();
        let message = format!("layer {layer}: {} propositions, {rules} rules", props.len());
        out.push(Diagnostic::new(DiagnosticKind::LayerStatistics, props, message));
    }
}
