use super::{ParseError, ParseErrorKind, Span};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    /// Lower-case or underscore initial identifier, including keywords.
    Ident(String),
    /// Upper-case initial identifier.
    Var(String),
    Str(String),
    Number(f64, String),
    Dot,
    Comma,
    Colon,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Var(s) => format!("`{s}`"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::Number(_, text) => format!("number `{text}`"),
            Tok::Dot => "`.`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1;
    let mut column = 1;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else if c.is_some() {
                column += 1;
            }
            c
        }};
    }

    while let Some(&c) = chars.peek() {
        let span = Span { line, column };
        match c {
            '\n' | ' ' | '\t' | '\r' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '.' => {
                bump!();
                out.push((Tok::Dot, span));
            }
            ',' => {
                bump!();
                out.push((Tok::Comma, span));
            }
            ':' => {
                bump!();
                out.push((Tok::Colon, span));
            }
            '(' => {
                bump!();
                out.push((Tok::LParen, span));
            }
            ')' => {
                bump!();
                out.push((Tok::RParen, span));
            }
            '"' => {
                bump!();
                let mut s = String::new();
                loop {
                    match bump!() {
                        None | Some('\n') => {
                            return Err(ParseError { span, kind: ParseErrorKind::UnterminatedString })
                        }
                        Some('"') => break,
                        Some('\\') => {
                            let esc_span = Span { line, column: column - 1 };
                            match bump!() {
                                Some('"') => s.push('"'),
                                Some('\\') => s.push('\\'),
                                Some('n') => s.push('\n'),
                                Some('t') => s.push('\t'),
                                Some('r') => s.push('\r'),
                                other => {
                                    return Err(ParseError {
                                        span: esc_span,
                                        kind: ParseErrorKind::InvalidEscape(other.unwrap_or(' ')),
                                    })
                                }
                            }
                        }
                        Some(c) => s.push(c),
                    }
                }
                out.push((Tok::Str(s), span));
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        text.push(d);
                        bump!();
                    } else {
                        break;
                    }
                }
                // A `.` only belongs to the number when a digit follows it.
                if chars.peek() == Some(&'.') {
                    let mut ahead = chars.clone();
                    ahead.next();
                    if ahead.peek().is_some_and(|d| d.is_ascii_digit()) {
                        text.push('.');
                        bump!();
                        while let Some(&d) = chars.peek() {
                            if d.is_ascii_digit() {
                                text.push(d);
                                bump!();
                            } else {
                                break;
                            }
                        }
                    }
                }
                if matches!(chars.peek(), Some('e' | 'E')) {
                    let mut ahead = chars.clone();
                    ahead.next();
                    if matches!(ahead.peek(), Some('+' | '-')) {
                        ahead.next();
                    }
                    if ahead.peek().is_some_and(|d| d.is_ascii_digit()) {
                        text.push(bump!().unwrap());
                        if matches!(chars.peek(), Some('+' | '-')) {
                            text.push(bump!().unwrap());
                        }
                        while let Some(&d) = chars.peek() {
                            if d.is_ascii_digit() {
                                text.push(d);
                                bump!();
                            } else {
                                break;
                            }
                        }
                    }
                }
                let value: f64 = text
                    .parse()
                    .map_err(|_| ParseError { span, kind: ParseErrorKind::InvalidNumber(text.clone()) })?;
                out.push((Tok::Number(value, text), span));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        bump!();
                    } else {
                        break;
                    }
                }
                if c.is_ascii_uppercase() {
                    out.push((Tok::Var(name), span));
                } else {
                    out.push((Tok::Ident(name), span));
                }
            }
            other => return Err(ParseError { span, kind: ParseErrorKind::UnexpectedChar(other) }),
        }
    }
    out.push((Tok::Eof, Span { line, column }));
    Ok(out)
}
