//! Coefficient expressions such as `(1-t)/(2*u)`: a recursive-descent parser
//! over rationals, the symbols `t` and `u`, `+ - * / ^` and parentheses.
//!
//! Precedence, tightest first: `^`, unary `-`, `* /`, `+ -`.

use std::fmt;

use crate::scalar::{parse_rational, Rational, Scalar, Substitution};

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: Pos, message: String },
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: Pos },
}

impl CoeffError {
    pub fn pos(&self) -> Pos {
        match self {
            CoeffError::Syntax { pos, .. } | CoeffError::DivisionByZero { pos } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffExpr {
    Num(Rational),
    T,
    U,
    Neg(Box<CoeffExpr>),
    Add(Box<CoeffExpr>, Box<CoeffExpr>),
    Sub(Box<CoeffExpr>, Box<CoeffExpr>),
    Mul(Box<CoeffExpr>, Box<CoeffExpr>),
    /// The position of the `/` is kept for fold-time errors.
    Div(Box<CoeffExpr>, Box<CoeffExpr>, Pos),
    Pow(Box<CoeffExpr>, i32, Pos),
}

impl CoeffExpr {
    /// Evaluates in Q(u), rewriting `t` through the substitution.
    pub fn fold(&self, sub: Substitution) -> Result<Scalar, CoeffError> {
        Ok(match self {
            CoeffExpr::Num(r) => Scalar::from_rational(r.clone()),
            CoeffExpr::T => sub.t_as_scalar(),
            CoeffExpr::U => Scalar::u(),
            CoeffExpr::Neg(a) => -a.fold(sub)?,
            CoeffExpr::Add(a, b) => a.fold(sub)? + b.fold(sub)?,
            CoeffExpr::Sub(a, b) => a.fold(sub)? - b.fold(sub)?,
            CoeffExpr::Mul(a, b) => a.fold(sub)? * b.fold(sub)?,
            CoeffExpr::Div(a, b, pos) => {
                let d = b.fold(sub)?;
                a.fold(sub)?.checked_div(&d).map_err(|_| CoeffError::DivisionByZero { pos: *pos })?
            }
            CoeffExpr::Pow(a, k, pos) => {
                a.fold(sub)?.powi(*k).map_err(|_| CoeffError::DivisionByZero { pos: *pos })?
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    T,
    U,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(s) => format!("number {s}"),
        Tok::T => "'t'".into(),
        Tok::U => "'u'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, CoeffError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push((Tok::Num(s), pos));
            continue;
        }
        let tok = match c {
            't' => Tok::T,
            'u' => Tok::U,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(CoeffError::Syntax { pos, message: format!("unexpected character {other:?}") });
            }
        };
        out.push((tok, pos));
        col += 1;
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    /// Position of the current token, or of the last token at end of input.
    fn pos(&self) -> Pos {
        self.toks
            .get(self.at)
            .or_else(|| self.toks.last())
            .map_or(Pos { line: 1, column: 1 }, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<(Tok, Pos)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> CoeffError {
        CoeffError::Syntax { pos: self.pos(), message: message.into() }
    }

    fn unexpected(&self, wanted: &str) -> CoeffError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", describe(t))),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<CoeffExpr, CoeffError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = CoeffExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = CoeffExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<CoeffExpr, CoeffError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = CoeffExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    let (_, pos) = self.bump().expect("peeked");
                    lhs = CoeffExpr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<CoeffExpr, CoeffError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(CoeffExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<CoeffExpr, CoeffError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let (_, pos) = self.bump().expect("peeked");
        let negative = self.peek() == Some(&Tok::Minus);
        if negative {
            self.bump();
        }
        let k = match self.peek() {
            Some(Tok::Num(s)) if s.bytes().all(|b| b.is_ascii_digit()) => match s.parse::<i32>() {
                Ok(k) => k,
                Err(_) => return Err(self.error("exponent too large")),
            },
            _ => return Err(self.unexpected("an integer exponent")),
        };
        self.bump();
        Ok(CoeffExpr::Pow(Box::new(base), if negative { -k } else { k }, pos))
    }

    fn atom(&mut self) -> Result<CoeffExpr, CoeffError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                let r = parse_rational(&s)
                    .map_err(|_| CoeffError::Syntax { pos, message: format!("malformed number {s:?}") })?;
                self.bump();
                Ok(CoeffExpr::Num(r))
            }
            Some(Tok::T) => {
                self.bump();
                Ok(CoeffExpr::T)
            }
            Some(Tok::U) => {
                self.bump();
                Ok(CoeffExpr::U)
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, 't', 'u' or '('")),
        }
    }
}

pub fn parse_coeff(text: &str) -> Result<CoeffExpr, CoeffError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(CoeffError::Syntax { pos: Pos { line: 1, column: 1 }, message: "empty expression".into() });
    }
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// Parses and folds in one step.
pub fn parse_scalar(text: &str, sub: Substitution) -> Result<Scalar, CoeffError> {
    parse_coeff(text)?.fold(sub)
}
