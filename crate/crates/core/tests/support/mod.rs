//! Seeded generators shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use qbelief::dsl::{DeclKind, Declaration, ObserveKind, ScenarioStep};
use qbelief::knowledge::{Atom, Effect, Guard, Term};
use qbelief::vocabulary::{Layer, OverallStatus, Polarity, Strength};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

const EVIDENCE_STRENGTHS: [Strength; 3] = [Strength::Conclusive, Strength::Strong, Strength::Weak];

/// Statuses an aggregation rule may set.
pub const SETTABLE: [OverallStatus; 10] = [
    OverallStatus::Probable,
    OverallStatus::Supported,
    OverallStatus::Ambiguous,
    OverallStatus::Doubted,
    OverallStatus::Improbable,
    OverallStatus::Plausible,
    OverallStatus::Implausible,
    OverallStatus::Assumed,
    OverallStatus::Possible,
    OverallStatus::Unknown,
];

fn polarity(rng: &mut TestRng) -> Polarity {
    if rng.gen_bool(0.5) {
        Polarity::For
    } else {
        Polarity::Against
    }
}

fn layer(rng: &mut TestRng) -> Layer {
    *Layer::ALL.choose(rng).unwrap()
}

/// Shape of generated knowledge bases.
#[derive(Debug, Clone, Copy)]
pub struct KbShape {
    pub max_props: usize,
    pub max_rules: usize,
    pub aggregation: bool,
}

impl Default for KbShape {
    fn default() -> Self {
        KbShape { max_props: 8, max_rules: 12, aggregation: true }
    }
}

/// A random ground knowledge base that always builds and evaluates.
///
/// Propositions are `p0..pn`, condition atoms `f0..f5`. Aggregation rules
/// only read propositions with a lower index than their target and each
/// target has at most one `set-status` rule, so the fixpoint converges.
pub fn random_kb(rng: &mut TestRng, shape: KbShape) -> Vec<Declaration> {
    let n_props = rng.gen_range(1..=shape.max_props);
    let props: Vec<Atom> = (0..n_props).map(|i| Atom::constant(format!("p{i}"))).collect();
    let conds: Vec<Atom> = (0..6).map(|i| Atom::constant(format!("f{i}"))).collect();

    let mut decls = Vec::new();
    for p in &props {
        let layer = if rng.gen_bool(0.5) { Some(layer(rng)) } else { None };
        decls.push(DeclKind::Prop { atom: p.clone(), description: None, layer });
    }
    for c in &conds {
        if rng.gen_bool(0.7) {
            decls.push(DeclKind::Fact { atom: c.clone(), value: rng.gen_bool(0.6) });
        }
    }

    let n_rules = rng.gen_range(0..=shape.max_rules);
    let mut seen: HashSet<String> = HashSet::new();
    let mut setters: BTreeSet<usize> = BTreeSet::new();
    let mut rules = 0;
    let mut attempts = 0;
    while rules < n_rules && attempts < 100 {
        attempts += 1;
        let t = rng.gen_range(0..n_props);
        let target = props[t].clone();
        let kind = match rng.gen_range(0..if shape.aggregation { 6 } else { 5 }) {
            0 => {
                let k = rng.gen_range(1..=2);
                DeclKind::Necessary { target, conditions: conds.choose_multiple(rng, k).cloned().collect() }
            }
            1 | 2 => DeclKind::Evidence {
                polarity: polarity(rng),
                target,
                strength: *EVIDENCE_STRENGTHS.choose(rng).unwrap(),
                condition: conds.choose(rng).unwrap().clone(),
                lr: rng.gen_bool(0.5).then(|| rng.gen_range(0.1..10.0)),
                source: rng.gen_bool(0.5).then(|| format!("src{}", rng.gen_range(0..4))),
            },
            3 => DeclKind::Argument {
                polarity: polarity(rng),
                target,
                strength: match rng.gen_range(0..3) {
                    0 => None,
                    1 => Some(Strength::Ordinary),
                    _ => Some(Strength::Conclusive),
                },
                condition: conds.choose(rng).unwrap().clone(),
                source: None,
            },
            4 => DeclKind::Assume(target),
            _ => {
                if t == 0 {
                    continue;
                }
                let mut guards = Vec::new();
                for _ in 0..rng.gen_range(1..=2) {
                    if rng.gen_bool(0.6) {
                        let j = rng.gen_range(0..t);
                        let s = *qbelief::OverallStatus::ALL.choose(rng).unwrap();
                        guards.push(Guard::Status(props[j].clone(), s));
                    } else {
                        guards.push(Guard::Fact(conds.choose(rng).unwrap().clone(), rng.gen_bool(0.5)));
                    }
                }
                let effect = if !setters.contains(&t) && rng.gen_bool(0.5) {
                    setters.insert(t);
                    Effect::SetStatus(target, *SETTABLE.choose(rng).unwrap())
                } else {
                    Effect::Assert(target)
                };
                DeclKind::Aggregation { guards, effect }
            }
        };
        // An omitted argument strength reads as `ordinary`; rule ids do too.
        let key = match &kind {
            DeclKind::Argument { strength: None, .. } => {
                let mut k = kind.clone();
                if let DeclKind::Argument { strength, .. } = &mut k {
                    *strength = Some(Strength::Ordinary);
                }
                k
            }
            _ => kind.clone(),
        };
        let key = qbelief::dsl::print_kb(&[Declaration::new(key)]);
        if seen.insert(key) {
            decls.push(kind);
            rules += 1;
        }
    }
    decls.into_iter().map(Declaration::new).collect()
}

pub fn random_observe(rng: &mut TestRng, props: &[Atom]) -> ScenarioStep {
    ScenarioStep::Observe {
        polarity: polarity(rng),
        atom: props.choose(rng).unwrap().clone(),
        strength: *EVIDENCE_STRENGTHS.choose(rng).unwrap(),
        kind: if rng.gen_bool(0.5) { ObserveKind::Observation } else { ObserveKind::Report },
        source: format!("witness{}", rng.gen_range(0..5)),
    }
}

const KEYWORDS: [&str; 16] = [
    "fact", "is", "assert", "for", "against", "strength", "when", "and", "then", "lr", "source", "layer",
    "true", "false", "prop", "if",
];

fn ident(rng: &mut TestRng) -> String {
    if rng.gen_bool(0.15) {
        return KEYWORDS.choose(rng).unwrap().to_string();
    }
    let first = b"abcdefghijklmnopqrstuvwxyz_";
    let rest = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
    let len = rng.gen_range(0..6);
    let mut s = String::new();
    s.push(*first.choose(rng).unwrap() as char);
    for _ in 0..len {
        s.push(*rest.choose(rng).unwrap() as char);
    }
    s
}

fn var(rng: &mut TestRng) -> String {
    ["X", "Y", "Country", "Z1"].choose(rng).unwrap().to_string()
}

fn atom(rng: &mut TestRng) -> Atom {
    let arity = *[0, 0, 0, 1, 2, 3].choose(rng).unwrap();
    let args = (0..arity)
        .map(|_| if rng.gen_bool(0.3) { Term::Var(var(rng)) } else { Term::Const(ident(rng)) })
        .collect();
    Atom::new(ident(rng), args)
}

fn text(rng: &mut TestRng) -> String {
    let pool = ['a', 'b', ' ', '"', '\\', '\n', '\t', '#', '.', 'é', '✓', '(', ')'];
    (0..rng.gen_range(0..10)).map(|_| *pool.choose(rng).unwrap()).collect()
}

fn lr(rng: &mut TestRng) -> f64 {
    match rng.gen_range(0..4) {
        0 => rng.gen_range(1..100) as f64,
        1 => rng.gen_range(1e-6..1.0),
        2 => rng.gen_range(1.0..1e6),
        _ => 10f64.powi(rng.gen_range(-30..30)),
    }
}

/// An arbitrary syntactically valid declaration list.
pub fn random_declarations(rng: &mut TestRng) -> Vec<Declaration> {
    let n = rng.gen_range(0..15);
    (0..n)
        .map(|_| {
            let kind = match rng.gen_range(0..8) {
                0 => DeclKind::Const((0..rng.gen_range(1..4)).map(|_| ident(rng)).collect()),
                1 => DeclKind::Prop {
                    atom: atom(rng),
                    description: rng.gen_bool(0.5).then(|| text(rng)),
                    layer: rng.gen_bool(0.5).then(|| layer(rng)),
                },
                2 => DeclKind::Fact { atom: atom(rng), value: rng.gen_bool(0.5) },
                3 => DeclKind::Necessary {
                    target: atom(rng),
                    conditions: (0..rng.gen_range(1..4)).map(|_| atom(rng)).collect(),
                },
                4 => DeclKind::Evidence {
                    polarity: polarity(rng),
                    target: atom(rng),
                    strength: *EVIDENCE_STRENGTHS.choose(rng).unwrap(),
                    condition: atom(rng),
                    lr: rng.gen_bool(0.5).then(|| lr(rng)),
                    source: rng.gen_bool(0.5).then(|| text(rng)),
                },
                5 => DeclKind::Argument {
                    polarity: polarity(rng),
                    target: atom(rng),
                    strength: [None, Some(Strength::Ordinary), Some(Strength::Conclusive)]
                        .choose(rng)
                        .copied()
                        .unwrap(),
                    condition: atom(rng),
                    source: rng.gen_bool(0.5).then(|| text(rng)),
                },
                6 => DeclKind::Assume(atom(rng)),
                _ => DeclKind::Aggregation {
                    guards: (0..rng.gen_range(1..4))
                        .map(|_| {
                            if rng.gen_bool(0.5) {
                                Guard::Status(atom(rng), *OverallStatus::ALL.choose(rng).unwrap())
                            } else {
                                Guard::Fact(atom(rng), rng.gen_bool(0.5))
                            }
                        })
                        .collect(),
                    effect: if rng.gen_bool(0.5) {
                        Effect::Assert(atom(rng))
                    } else {
                        Effect::SetStatus(atom(rng), *OverallStatus::ALL.choose(rng).unwrap())
                    },
                },
            };
            Declaration::new(kind)
        })
        .collect()
}

pub fn fixture(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}
