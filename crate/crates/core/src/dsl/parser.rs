//! Recursive-descent parser for both grammars. The first error aborts.

use super::lexer::{tokenize, Tok};
use super::{DeclKind, Declaration, ObserveKind, ParseError, ParseErrorKind, ScenarioStep, Span};
use crate::knowledge::{Atom, Effect, Guard, Term};
use crate::vocabulary::{Layer, OverallStatus, Polarity, Strength};

pub fn parse_kb(text: &str) -> Result<Vec<Declaration>, ParseError> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    while !p.at_eof() {
        out.push(p.declaration()?);
    }
    Ok(out)
}

pub fn parse_scenario(text: &str) -> Result<Vec<ScenarioStep>, ParseError> {
    Ok(parse_scenario_spanned(text)?.into_iter().map(|(s, _)| s).collect())
}

/// Like [`parse_scenario`], keeping the position of each step.
pub fn parse_scenario_spanned(text: &str) -> Result<Vec<(ScenarioStep, Span)>, ParseError> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    while !p.at_eof() {
        let span = p.span();
        out.push((p.step()?, span));
    }
    Ok(out)
}

/// Parses a single atom such as `invasion(monrovia)`.
pub fn parse_atom(text: &str) -> Result<Atom, ParseError> {
    let mut p = Parser::new(text)?;
    let atom = p.atom()?;
    if !p.at_eof() {
        return Err(p.expected("end of input"));
    }
    Ok(atom)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser { toks: tokenize(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn at_eof(&self) -> bool {
        matches!(self.peek(), Tok::Eof)
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expected(&self, what: &str) -> ParseError {
        ParseError {
            span: self.span(),
            kind: ParseErrorKind::Expected { expected: what.to_string(), found: self.peek().describe() },
        }
    }

    fn fail(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { span: self.span(), kind }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.is_keyword(kw) {
            self.advance();
            Ok(())
        } else {
            Err(self.expected(&format!("`{kw}`")))
        }
    }

    fn punct(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            Err(self.expected(&tok.describe()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.advance();
                Ok(s)
            }
            _ => Err(self.expected("identifier")),
        }
    }

    fn string(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Str(s) => {
                let s = s.clone();
                self.advance();
                Ok(s)
            }
            _ => Err(self.expected("string")),
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let predicate = self.ident()?;
        let mut args = Vec::new();
        if *self.peek() == Tok::LParen {
            self.advance();
            loop {
                match self.peek() {
                    Tok::Ident(s) | Tok::Var(s) => {
                        args.push(Term::from_ident(s));
                        self.advance();
                    }
                    _ => return Err(self.expected("term")),
                }
                match self.peek() {
                    Tok::Comma => {
                        self.advance();
                    }
                    Tok::RParen => {
                        self.advance();
                        break;
                    }
                    _ => return Err(self.expected("`,` or `)`")),
                }
            }
        }
        Ok(Atom::new(predicate, args))
    }

    fn boolean(&mut self) -> Result<bool, ParseError> {
        if self.is_keyword("true") {
            self.advance();
            Ok(true)
        } else if self.is_keyword("false") {
            self.advance();
            Ok(false)
        } else {
            Err(self.expected("`true` or `false`"))
        }
    }

    fn polarity(&mut self) -> Result<Polarity, ParseError> {
        if self.is_keyword("for") {
            self.advance();
            Ok(Polarity::For)
        } else if self.is_keyword("against") {
            self.advance();
            Ok(Polarity::Against)
        } else {
            Err(self.expected("`for` or `against`"))
        }
    }

    fn strength(&mut self, allowed: fn(Strength) -> bool) -> Result<Strength, ParseError> {
        let found = match self.peek() {
            Tok::Ident(s) | Tok::Var(s) => s.clone(),
            Tok::Eof | Tok::Dot => return Err(self.expected("strength")),
            other => other.describe(),
        };
        match found.parse::<Strength>() {
            Ok(s) if allowed(s) => {
                self.advance();
                Ok(s)
            }
            _ => Err(self.fail(ParseErrorKind::UnknownStrength(found))),
        }
    }

    fn status(&mut self) -> Result<OverallStatus, ParseError> {
        let found = match self.peek() {
            Tok::Ident(s) | Tok::Var(s) => s.clone(),
            _ => return Err(self.expected("status")),
        };
        let status =
            found.parse::<OverallStatus>().map_err(|_| self.fail(ParseErrorKind::UnknownStatus(found)))?;
        self.advance();
        Ok(status)
    }

    fn layer(&mut self) -> Result<Layer, ParseError> {
        let found = match self.peek() {
            Tok::Ident(s) | Tok::Var(s) => s.clone(),
            _ => return Err(self.expected("layer")),
        };
        let layer = found.parse::<Layer>().map_err(|_| self.fail(ParseErrorKind::UnknownLayer(found)))?;
        self.advance();
        Ok(layer)
    }

    fn optional_source(&mut self) -> Result<Option<String>, ParseError> {
        if self.is_keyword("source") {
            self.advance();
            Ok(Some(self.string()?))
        } else {
            Ok(None)
        }
    }

    fn declaration(&mut self) -> Result<Declaration, ParseError> {
        let span = self.span();
        let head = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.expected("declaration")),
        };
        self.advance();
        let kind = match head.as_str() {
            "const" => {
                let mut names = vec![self.ident()?];
                while *self.peek() == Tok::Comma {
                    self.advance();
                    names.push(self.ident()?);
                }
                DeclKind::Const(names)
            }
            "prop" => {
                let atom = self.atom()?;
                let description =
                    if matches!(self.peek(), Tok::Str(_)) { Some(self.string()?) } else { None };
                let layer = if self.is_keyword("layer") {
                    self.advance();
                    Some(self.layer()?)
                } else {
                    None
                };
                DeclKind::Prop { atom, description, layer }
            }
            "fact" => {
                let atom = self.atom()?;
                let value = self.boolean()?;
                DeclKind::Fact { atom, value }
            }
            "necessary" => {
                self.keyword("for")?;
                let target = self.atom()?;
                self.punct(Tok::Colon)?;
                let mut conditions = vec![self.atom()?];
                while *self.peek() == Tok::Comma {
                    self.advance();
                    conditions.push(self.atom()?);
                }
                DeclKind::Necessary { target, conditions }
            }
            "evidence" => {
                let polarity = self.polarity()?;
                let target = self.atom()?;
                self.keyword("strength")?;
                let strength = self.strength(Strength::is_evidential)?;
                self.keyword("when")?;
                let condition = self.atom()?;
                let lr = if self.is_keyword("lr") {
                    self.advance();
                    Some(self.likelihood_ratio()?)
                } else {
                    None
                };
                let source = self.optional_source()?;
                DeclKind::Evidence { polarity, target, strength, condition, lr, source }
            }
            "argument" => {
                let polarity = self.polarity()?;
                let target = self.atom()?;
                let strength = if self.is_keyword("strength") {
                    self.advance();
                    Some(self.strength(Strength::is_argumentative)?)
                } else {
                    None
                };
                self.keyword("when")?;
                let condition = self.atom()?;
                let source = self.optional_source()?;
                DeclKind::Argument { polarity, target, strength, condition, source }
            }
            "assume" => DeclKind::Assume(self.atom()?),
            "if" => {
                let mut guards = vec![self.guard()?];
                while self.is_keyword("and") {
                    self.advance();
                    guards.push(self.guard()?);
                }
                self.keyword("then")?;
                let effect = self.effect()?;
                DeclKind::Aggregation { guards, effect }
            }
            _ => {
                self.pos -= 1;
                return Err(self.expected("declaration"));
            }
        };
        self.punct(Tok::Dot)?;
        Ok(Declaration { kind, span })
    }

    fn likelihood_ratio(&mut self) -> Result<f64, ParseError> {
        match self.peek().clone() {
            Tok::Number(v, text) => {
                if !(v.is_finite() && v > 0.0) {
                    return Err(self.fail(ParseErrorKind::InvalidLikelihoodRatio(text)));
                }
                self.advance();
                Ok(v)
            }
            _ => Err(self.expected("number")),
        }
    }

    /// `fact atom BOOL` unless the tokens only make sense as a status guard on
    /// a proposition that happens to be called `fact`.
    fn guard(&mut self) -> Result<Guard, ParseError> {
        let fact_guard = self.is_keyword("fact")
            && match (self.peek_at(1), self.peek_at(2)) {
                (Tok::LParen, _) => false,
                (Tok::Ident(is), Tok::Ident(third)) if is == "is" => third == "true" || third == "false",
                (Tok::Ident(_), _) => true,
                _ => false,
            };
        if fact_guard {
            self.advance();
            let atom = self.atom()?;
            let value = self.boolean()?;
            Ok(Guard::Fact(atom, value))
        } else {
            let atom = self.atom()?;
            self.keyword("is")?;
            Ok(Guard::Status(atom, self.status()?))
        }
    }

    fn effect(&mut self) -> Result<Effect, ParseError> {
        let assert = self.is_keyword("assert")
            && match (self.peek_at(1), self.peek_at(2)) {
                (Tok::Ident(is), Tok::Ident(_)) if is == "is" => false,
                (Tok::Ident(_), _) => true,
                _ => false,
            };
        if assert {
            self.advance();
            Ok(Effect::Assert(self.atom()?))
        } else {
            let atom = self.atom()?;
            self.keyword("is")?;
            Ok(Effect::SetStatus(atom, self.status()?))
        }
    }

    fn step(&mut self) -> Result<ScenarioStep, ParseError> {
        let head = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.expected("scenario step")),
        };
        self.advance();
        let step = match head.as_str() {
            "assert" => {
                let atom = self.atom()?;
                let value = self.boolean()?;
                ScenarioStep::AssertFact { atom, value }
            }
            "retract" => ScenarioStep::RetractFact(self.atom()?),
            "observe" => {
                let polarity = self.polarity()?;
                let atom = self.atom()?;
                self.keyword("strength")?;
                let strength = self.strength(Strength::is_evidential)?;
                self.keyword("kind")?;
                let kind = if self.is_keyword("observation") {
                    ObserveKind::Observation
                } else if self.is_keyword("report") {
                    ObserveKind::Report
                } else {
                    return Err(self.expected("`observation` or `report`"));
                };
                self.advance();
                self.keyword("source")?;
                let source = self.string()?;
                ScenarioStep::Observe { polarity, atom, strength, kind, source }
            }
            "query" => ScenarioStep::Query(self.atom()?),
            "snapshot" => ScenarioStep::Snapshot,
            _ => {
                self.pos -= 1;
                return Err(self.expected("scenario step"));
            }
        };
        self.punct(Tok::Dot)?;
        Ok(step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evidence_rule() {
        let d = parse_kb("evidence for ulcer strength strong when epigastric_pain.").unwrap();
        assert_eq!(
            d[0].kind,
            DeclKind::Evidence {
                polarity: Polarity::For,
                target: Atom::constant("ulcer"),
                strength: Strength::Strong,
                condition: Atom::constant("epigastric_pain"),
                lr: None,
                source: None,
            }
        );
    }

    #[test]
    fn surveillance_rule() {
        let d = parse_kb("if invasion(X) is ambiguous then assert recommend_surveillance(X).").unwrap();
        let x = || vec![Term::Var("X".into())];
        assert_eq!(
            d[0].kind,
            DeclKind::Aggregation {
                guards: vec![Guard::Status(Atom::new("invasion", x()), OverallStatus::Ambiguous)],
                effect: Effect::Assert(Atom::new("recommend_surveillance", x())),
            }
        );
    }

    #[test]
    fn missing_terminator() {
        let err = parse_kb("prop ulcer").unwrap_err();
        assert_eq!(err.span, Span { line: 1, column: 11 });
        assert!(matches!(err.kind, ParseErrorKind::Expected { .. }));
    }

    #[test]
    fn observe_step() {
        let s =
            parse_scenario("observe for ulcer strength conclusive kind observation source \"endoscopy\".")
                .unwrap();
        assert_eq!(
            s,
            vec![ScenarioStep::Observe {
                polarity: Polarity::For,
                atom: Atom::constant("ulcer"),
                strength: Strength::Conclusive,
                kind: ObserveKind::Observation,
                source: "endoscopy".into(),
            }]
        );
    }

    #[test]
    fn empty_scenario() {
        assert!(parse_scenario("").unwrap().is_empty());
        assert!(parse_scenario("# nothing\n\n").unwrap().is_empty());
    }

    #[test]
    fn unknown_strength() {
        let err = parse_scenario("observe for ulcer strength huge kind report source \"x\".").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownStrength("huge".into()));
        let err = parse_kb("evidence for p strength ordinary when q.").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownStrength("ordinary".into()));
        let err = parse_kb("argument for p strength strong when q.").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownStrength("strong".into()));
    }

    #[test]
    fn full_evidence_rule() {
        let d =
            parse_kb("evidence against p strength weak when q lr 0.25 source \"lab \\\"x\\\"\".").unwrap();
        match &d[0].kind {
            DeclKind::Evidence { lr, source, .. } => {
                assert_eq!(*lr, Some(0.25));
                assert_eq!(source.as_deref(), Some("lab \"x\""));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_kb("evidence for p strength weak when q lr 0.").unwrap_err().kind,
            ParseErrorKind::InvalidLikelihoodRatio(_)
        ));
    }

    #[test]
    fn guards_on_keyword_named_atoms() {
        let d = parse_kb("if fact is probable and fact is true then assert is.").unwrap();
        assert_eq!(
            d[0].kind,
            DeclKind::Aggregation {
                guards: vec![
                    Guard::Status(Atom::constant("fact"), OverallStatus::Probable),
                    Guard::Fact(Atom::constant("is"), true),
                ],
                effect: Effect::Assert(Atom::constant("is")),
            }
        );
        let d = parse_kb("if fact x false then assert is probable.").unwrap();
        assert_eq!(
            d[0].kind,
            DeclKind::Aggregation {
                guards: vec![Guard::Fact(Atom::constant("x"), false)],
                effect: Effect::SetStatus(Atom::constant("assert"), OverallStatus::Probable),
            }
        );
    }

    #[test]
    fn spans_and_errors_in_bounds() {
        let text = "prop a.\nprop b layer cosmic.\n";
        let err = parse_kb(text).unwrap_err();
        assert_eq!(err.span, Span { line: 2, column: 14 });
        assert_eq!(err.kind, ParseErrorKind::UnknownLayer("cosmic".into()));
    }

    #[test]
    fn defaults_are_left_unresolved() {
        let d = parse_kb("prop p.\nargument for p when q.\n").unwrap();
        assert!(matches!(d[0].kind, DeclKind::Prop { layer: None, .. }));
        assert!(matches!(d[1].kind, DeclKind::Argument { strength: None, .. }));
    }

    #[test]
    fn single_atom() {
        assert_eq!(parse_atom("invasion(monrovia)").unwrap(), Atom::ground("invasion", &["monrovia"]));
        assert!(parse_atom("a b").is_err());
    }
}
