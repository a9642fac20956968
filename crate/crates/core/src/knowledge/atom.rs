use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// An argument of an atom. Variables begin with an upper-case letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Const(String),
    Var(String),
}

impl Term {
    /// Classifies an identifier lexically.
    pub fn from_ident(name: &str) -> Term {
        if name.starts_with(|c: char| c.is_ascii_uppercase()) {
            Term::Var(name.to_string())
        } else {
            Term::Const(name.to_string())
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Const(n) | Term::Var(n) => n,
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A predicate applied to zero or more terms.
///
/// The derived ordering agrees with the lexicographic ordering of the
/// rendered text, since `(`, `,` and `)` sort below every identifier
/// character.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Atom {
        Atom { predicate: predicate.into(), args }
    }

    /// A zero-arity atom.
    pub fn constant(predicate: impl Into<String>) -> Atom {
        Atom::new(predicate, Vec::new())
    }

    /// Builds a ground atom from constant names.
    pub fn ground<S: AsRef<str>>(predicate: impl Into<String>, args: &[S]) -> Atom {
        Atom::new(predicate, args.iter().map(|a| Term::Const(a.as_ref().to_string())).collect())
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| !t.is_var())
    }

    /// Variables in order of first appearance.
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.as_str()),
            Term::Const(_) => None,
        })
    }

    pub fn substitute(&self, binding: &BTreeMap<&str, &str>) -> Atom {
        Atom {
            predicate: self.predicate.clone(),
            args: self
                .args
                .iter()
                .map(|t| match t {
                    Term::Var(v) => match binding.get(v.as_str()) {
                        Some(c) => Term::Const((*c).to_string()),
                        None => t.clone(),
                    },
                    Term::Const(_) => t.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, t) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_matches_rendered_text() {
        let mut atoms = vec![
            Atom::ground("a_b", &[] as &[&str]),
            Atom::ground("a", &["x", "y"]),
            Atom::ground("a", &["xy"]),
            Atom::ground("a", &["x"]),
            Atom::constant("a"),
            Atom::constant("a1"),
        ];
        let mut by_text = atoms.clone();
        atoms.sort();
        by_text.sort_by_key(|a| a.to_string());
        assert_eq!(atoms, by_text);
    }

    #[test]
    fn lexical_variables() {
        assert!(Term::from_ident("SomeCountry").is_var());
        assert!(!Term::from_ident("monrovia").is_var());
        let a = Atom::new("invasion", vec![Term::from_ident("X")]);
        assert!(!a.is_ground());
        let b = a.substitute(&BTreeMap::from([("X", "monrovia")]));
        assert_eq!(b.to_string(), "invasion(monrovia)");
        assert!(b.is_ground());
    }
}
