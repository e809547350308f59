//! Text formats for field specs and words.
//!
//! Both formats are line oriented. Each statement is `key = value` or
//! `level <name> = value`, `#` starts a comment, and a value is either an
//! exact rational (`-3`, `7/2`) or a bracketed list of values. See the
//! README for the full grammar.

use std::fmt;

use gabidulin_core::algebra::{FieldElement, FieldTower, LevelSpec, Rational};
use gabidulin_core::Automorphism;
use num_bigint::BigInt;
use num_traits::Zero;

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        Self { line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Slash,
    Open,
    Close,
    Comma,
    Equals,
    Newline,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let single = match c {
            '[' => Some(Tok::Open),
            ']' => Some(Tok::Close),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Equals),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, line: tl, col: tc });
            i += 1;
            col += 1;
        } else if c == '\n' {
            out.push(Token { tok: Tok::Newline, line: tl, col: tc });
            i += 1;
            line += 1;
            col = 1;
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c.is_ascii_digit() || c == '-' || c == '+' {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lexeme: String = chars[start..i].iter().collect();
            let n = lexeme
                .parse::<BigInt>()
                .map_err(|_| ParseError::at(tl, tc, format!("malformed integer {lexeme:?}")))?;
            col += i - start;
            out.push(Token { tok: Tok::Int(n), line: tl, col: tc });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: tl, col: tc });
        } else {
            return Err(ParseError::at(tl, tc, format!("unexpected character {c:?}")));
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

/// A parsed value with the position where it starts.
#[derive(Debug, Clone, PartialEq)]
pub struct Value {
    pub kind: ValueKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ValueKind {
    Rational(Rational),
    List(Vec<Value>),
}

#[derive(Debug, Clone)]
struct Statement {
    key: String,
    name: Option<String>,
    value: Value,
    line: usize,
    col: usize,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Token, ParseError> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(ParseError::at(t.line, t.col, format!("expected {what}, found {}", describe(&t.tok))))
        }
    }

    fn statements(&mut self) -> Result<Vec<Statement>, ParseError> {
        let mut out = Vec::new();
        loop {
            while self.peek().tok == Tok::Newline {
                self.next();
            }
            let t = self.next();
            let key = match t.tok {
                Tok::Eof => return Ok(out),
                Tok::Ident(k) => k,
                other => {
                    return Err(ParseError::at(t.line, t.col, format!("expected a key, found {}", describe(&other))))
                }
            };
            let name = match &self.peek().tok {
                Tok::Ident(n) => {
                    let n = n.clone();
                    self.next();
                    Some(n)
                }
                _ => None,
            };
            self.expect(Tok::Equals, "'='")?;
            let value = self.value()?;
            let end = self.next();
            if !matches!(end.tok, Tok::Newline | Tok::Eof) {
                return Err(ParseError::at(end.line, end.col, format!("expected end of line, found {}", describe(&end.tok))));
            }
            out.push(Statement { key, name, value, line: t.line, col: t.col });
            if end.tok == Tok::Eof {
                return Ok(out);
            }
        }
    }

    fn value(&mut self) -> Result<Value, ParseError> {
        // Newlines are allowed inside brackets.
        let t = self.next();
        match t.tok {
            Tok::Int(n) => {
                let den = if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.next();
                    match d.tok {
                        Tok::Int(d_val) if d_val > BigInt::zero() => d_val,
                        Tok::Int(_) => return Err(ParseError::at(d.line, d.col, "denominator must be positive")),
                        other => {
                            return Err(ParseError::at(d.line, d.col, format!("expected a denominator, found {}", describe(&other))))
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                Ok(Value { kind: ValueKind::Rational(Rational::new(n, den)), line: t.line, col: t.col })
            }
            Tok::Open => {
                let mut items = Vec::new();
                loop {
                    self.skip_newlines();
                    if self.peek().tok == Tok::Close {
                        self.next();
                        break;
                    }
                    items.push(self.value()?);
                    self.skip_newlines();
                    let sep = self.next();
                    match sep.tok {
                        Tok::Comma => continue,
                        Tok::Close => break,
                        other => {
                            return Err(ParseError::at(sep.line, sep.col, format!("expected ',' or ']', found {}", describe(&other))))
                        }
                    }
                }
                Ok(Value { kind: ValueKind::List(items), line: t.line, col: t.col })
            }
            other => Err(ParseError::at(t.line, t.col, format!("expected a value, found {}", describe(&other)))),
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek().tok == Tok::Newline {
            self.next();
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("{s:?}"),
        Tok::Int(n) => format!("{n}"),
        Tok::Slash => "'/'".into(),
        Tok::Open => "'['".into(),
        Tok::Close => "']'".into(),
        Tok::Comma => "','".into(),
        Tok::Equals => "'='".into(),
        Tok::Newline => "end of line".into(),
        Tok::Eof => "end of file".into(),
    }
}

fn parse_statements(text: &str) -> Result<Vec<Statement>, ParseError> {
    let tokens = tokenize(text)?;
    let statements = Parser { tokens, pos: 0 }.statements()?;
    match statements.first() {
        Some(s) if s.key == "version" && s.name.is_none() => {
            let ok = matches!(&s.value.kind, ValueKind::Rational(q) if *q == Rational::from_integer(VERSION.into()));
            if !ok {
                return Err(ParseError::at(s.value.line, s.value.col, format!("unsupported version, expected {VERSION}")));
            }
        }
        Some(s) => return Err(ParseError::at(s.line, s.col, "the first statement must be 'version = 1'")),
        None => return Err(ParseError::at(1, 1, "empty file, expected 'version = 1'")),
    }
    Ok(statements[1..].to_vec())
}

/// Interprets `value` as an element of `level`: a rational is the embedded
/// constant, a list gives coefficients over the level below with trailing
/// zeros optional.
pub fn element_from_value(tower: &FieldTower, level: usize, value: &Value) -> Result<FieldElement, ParseError> {
    match &value.kind {
        ValueKind::Rational(q) => Ok(tower.from_rational(level, q)),
        ValueKind::List(_) if level == 0 => Err(ParseError::at(value.line, value.col, "expected a rational number")),
        ValueKind::List(items) => {
            let d = tower.degree(level);
            if items.len() > d {
                return Err(ParseError::at(
                    value.line,
                    value.col,
                    format!("{} coefficients given, but {} has degree {d}", items.len(), tower.name(level)),
                ));
            }
            let coeffs = items
                .iter()
                .map(|v| element_from_value(tower, level - 1, v))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(tower.from_coeffs_below(level, &coeffs).expect("coefficient count checked"))
        }
    }
}

/// Canonical text of an element: full nested lists, rationals at level 0.
pub fn element_to_string(x: &FieldElement) -> String {
    fn go(tower: &FieldTower, level: usize, coords: &[Rational], out: &mut String) {
        if level == 0 {
            out.push_str(&coords[0].to_string());
            return;
        }
        let s = tower.abs_degree(level - 1);
        out.push('[');
        for (i, chunk) in coords.chunks(s).enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            go(tower, level - 1, chunk, out);
        }
        out.push(']');
    }
    let mut out = String::new();
    go(x.tower(), x.level(), x.coords(), &mut out);
    out
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a field spec into its tower and automorphism.
pub fn parse_spec(text: &str) -> Result<Automorphism, ParseError> {
    let statements = parse_statements(text)?;
    let mut levels: Vec<LevelSpec> = Vec::new();
    let mut tower = FieldTower::rationals();
    let mut theta = None;
    for st in &statements {
        match (st.key.as_str(), &st.name) {
            ("level", Some(name)) => {
                if theta.is_some() {
                    return Err(ParseError::at(st.line, st.col, "levels must come before theta"));
                }
                if name == "Q" || levels.iter().any(|l| &l.name == name) {
                    return Err(ParseError::at(st.line, st.col, format!("generator name {name:?} is already used")));
                }
                let ValueKind::List(items) = &st.value.kind else {
                    return Err(ParseError::at(st.value.line, st.value.col, "a defining polynomial must be a list"));
                };
                let below = tower.top();
                let min_poly = items
                    .iter()
                    .map(|v| element_from_value(&tower, below, v).map(|e| e.coords().to_vec()))
                    .collect::<Result<Vec<_>, _>>()?;
                levels.push(LevelSpec { name: name.clone(), min_poly });
                tower = FieldTower::new(levels.clone()).map_err(|e| ParseError::at(st.line, st.col, e.to_string()))?;
            }
            ("level", None) => return Err(ParseError::at(st.line, st.col, "expected 'level <name> = [...]'")),
            ("theta", None) => {
                if theta.is_some() {
                    return Err(ParseError::at(st.line, st.col, "theta is given twice"));
                }
                if tower.top() == 0 {
                    return Err(ParseError::at(st.line, st.col, "theta needs at least one level"));
                }
                let image = element_from_value(&tower, tower.top(), &st.value)?;
                let auto = Automorphism::new(&tower, image).map_err(|e| ParseError::at(st.line, st.col, e.to_string()))?;
                theta = Some(auto);
            }
            (key, _) => return Err(ParseError::at(st.line, st.col, format!("unknown statement {key:?}"))),
        }
    }
    let eof_line = text.lines().count().max(1);
    theta.ok_or_else(|| ParseError::at(eof_line, 1, "missing 'theta = ...'"))
}

pub fn spec_to_string(theta: &Automorphism) -> String {
    let tower = theta.tower();
    let mut out = format!("version = {VERSION}\n");
    for level in 1..=tower.top() {
        let spec = tower.level_spec(level);
        assert!(is_ident(&spec.name), "generator name {:?} cannot be written", spec.name);
        let coeffs: Vec<String> = spec
            .min_poly
            .into_iter()
            .map(|c| element_to_string(&tower.element(level - 1, c).expect("stored coordinates")))
            .collect();
        out.push_str(&format!("level {} = [{}]\n", spec.name, coeffs.join(", ")));
    }
    out.push_str(&format!("theta = {}\n", element_to_string(theta.generator_image())));
    out
}

/// Parses a word file whose entries live in the top level of `tower`.
pub fn parse_word(text: &str, tower: &FieldTower) -> Result<Vec<FieldElement>, ParseError> {
    parse_statements(text)?
        .iter()
        .map(|st| match (st.key.as_str(), &st.name) {
            ("entry", None) => element_from_value(tower, tower.top(), &st.value),
            (key, _) => Err(ParseError::at(st.line, st.col, format!("unknown statement {key:?}"))),
        })
        .collect()
}

pub fn word_to_string(entries: &[FieldElement]) -> String {
    let mut out = format!("version = {VERSION}\n");
    for e in entries {
        out.push_str(&format!("entry = {}\n", element_to_string(e)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gabidulin_core::presets;

    #[test]
    fn kummer_spec_reads_naturally() {
        let text = "version = 1\n# K and L\nlevel h = [1, 0, 0, 0, 1]\nlevel a = [-3, 0, 0, 0, 0, 0, 0, 0, 1]\ntheta = [0, [0, 1]]\n";
        let theta = parse_spec(text).unwrap();
        assert!(theta.same_as(&presets::kummer()));
        assert_eq!(theta.order(), 8);
    }

    #[test]
    fn fractions_and_multiline_lists() {
        let t = presets::roots8().tower().clone();
        let w = parse_word("version = 1\nentry = [1/2,\n  -3/6]\nentry = 5\n", &t).unwrap();
        let a = t.generator(1);
        assert_eq!(w[0], &t.from_rational(1, &Rational::new(1.into(), 2.into())) - &a.scale(&Rational::new(1.into(), 2.into())));
        assert_eq!(w[1], t.from_i64(1, 5));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_spec("version = 1\nlevel a = [1, 0, 1\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        let e = parse_spec("version = 1\nlevel a = [1, 0, 1]\ntheta = [0, 1, 1]\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 9));
        assert!(e.message.contains("degree 2"), "{e}");
        let e = parse_spec("version = 2\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 11));
        let e = parse_spec("version = 1\nlevel a = [1, 2]\ntheta = 3 ?\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 11));
        let e = parse_spec("version = 1\nlevel a = [1, 0, 2]\ntheta = 0\n").unwrap_err();
        assert!(e.message.contains("monic"), "{e}");
        let e = parse_word("version = 1\nentry = 1/0\n", &FieldTower::rationals()).unwrap_err();
        assert_eq!((e.line, e.col), (2, 11));
    }

    #[test]
    fn theta_must_be_a_root() {
        let e = parse_spec("version = 1\nlevel a = [1, 0, 1]\ntheta = [0, 2]\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn canonical_spec_round_trips() {
        for name in presets::NAMES {
            let theta = presets::by_name(name).unwrap();
            let text = spec_to_string(&theta);
            let back = parse_spec(&text).unwrap();
            assert!(back.same_as(&theta), "{name}");
            assert_eq!(spec_to_string(&back), text);
        }
    }
}
