//! Text form of [`GenExpr`].
//!
//! ```text
//! expr     := ws [sign] term (ws sign ws term)* ws
//! term     := [coeff ws "*" ws] atom | coeff
//! coeff    := number | "pi" | "e"
//! atom     := "x" ["^" exponent] | ("sin" | "cos") "(" "x" [sign coeff] ")"
//! exponent := ["-"] coeff
//! ```
//!
//! Whitespace is allowed between any two tokens. Multiplication must be
//! written out: `3x` is rejected.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::{E, PI};
use core::fmt;

#[cfg(test)]
use crate::error::Error;
use crate::error::Result;
use crate::symbolic::{GenExpr, PowerTerm, TrigBase, TrigTerm};

/// Byte range of the input an error refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
    pub text: String,
}

impl SourceSpan {
    fn new(source: &str, start: usize, end: usize) -> Self {
        SourceSpan {
            start,
            end,
            text: source[start..end].to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    X,
    Sin,
    Cos,
    Pi,
    E,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            TokenKind::Number => "number",
            TokenKind::X => "`x`",
            TokenKind::Sin => "`sin`",
            TokenKind::Cos => "`cos`",
            TokenKind::Pi => "`pi`",
            TokenKind::E => "`e`",
            TokenKind::Plus => "`+`",
            TokenKind::Minus => "`-`",
            TokenKind::Star => "`*`",
            TokenKind::Caret => "`^`",
            TokenKind::LParen => "`(`",
            TokenKind::RParen => "`)`",
            TokenKind::End => "end of input",
        };
        f.write_str(text)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    pub expected: Vec<TokenKind>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}..{}: {}",
            self.span.start, self.span.end, self.message
        )?;
        if !self.expected.is_empty() {
            f.write_str(" (expected ")?;
            for (i, kind) in self.expected.iter().enumerate() {
                if i > 0 {
                    f.write_str(" or ")?;
                }
                write!(f, "{kind}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct Token {
    kind: TokenKind,
    start: usize,
    end: usize,
    value: f64,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek_byte(&self, offset: usize) -> Option<u8> {
        self.src.as_bytes().get(self.pos + offset).copied()
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while self.peek_byte(0).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn number(&mut self, start: usize) -> Token {
        self.digits();
        if self.peek_byte(0) == Some(b'.') && self.peek_byte(1).is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
            self.digits();
        }
        if matches!(self.peek_byte(0), Some(b'e' | b'E')) {
            let sign = usize::from(matches!(self.peek_byte(1), Some(b'+' | b'-')));
            if self.peek_byte(1 + sign).is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1 + sign;
                self.digits();
            }
        }
        let text = &self.src[start..self.pos];
        Token {
            kind: TokenKind::Number,
            start,
            end: self.pos,
            // the scanned text always matches Rust's float grammar
            value: text.parse().unwrap_or(f64::NAN),
        }
    }

    fn next(&mut self) -> core::result::Result<Token, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.src[start..].chars().next() else {
            return Ok(Token {
                kind: TokenKind::End,
                start,
                end: start,
                value: 0.0,
            });
        };
        if c.is_ascii_digit() {
            return Ok(self.number(start));
        }
        if c.is_ascii_alphabetic() {
            while self.peek_byte(0).is_some_and(|b| b.is_ascii_alphabetic()) {
                self.pos += 1;
            }
            let word = &self.src[start..self.pos];
            let kind = match word {
                "x" => TokenKind::X,
                "sin" => TokenKind::Sin,
                "cos" => TokenKind::Cos,
                "pi" => TokenKind::Pi,
                "e" => TokenKind::E,
                _ => {
                    return Err(ParseError {
                        span: SourceSpan::new(self.src, start, self.pos),
                        message: alloc::format!("unknown name `{word}`"),
                        expected: Vec::new(),
                    })
                }
            };
            return Ok(Token {
                kind,
                start,
                end: self.pos,
                value: 0.0,
            });
        }
        let kind = match c {
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            _ => {
                let end = start + c.len_utf8();
                return Err(ParseError {
                    span: SourceSpan::new(self.src, start, end),
                    message: alloc::format!("unexpected character `{c}`"),
                    expected: Vec::new(),
                });
            }
        };
        self.pos += 1;
        Ok(Token {
            kind,
            start,
            end: self.pos,
            value: 0.0,
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: Token,
}

const COEFF_START: [TokenKind; 3] = [TokenKind::Number, TokenKind::Pi, TokenKind::E];
const TERM_START: [TokenKind; 6] = [
    TokenKind::Number,
    TokenKind::Pi,
    TokenKind::E,
    TokenKind::X,
    TokenKind::Sin,
    TokenKind::Cos,
];

enum Term {
    Power(PowerTerm),
    Trig(TrigTerm),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> core::result::Result<Self, ParseError> {
        let mut lexer = Lexer { src, pos: 0 };
        let current = lexer.next()?;
        Ok(Parser { lexer, current })
    }

    fn advance(&mut self) -> core::result::Result<Token, ParseError> {
        let token = self.current;
        self.current = self.lexer.next()?;
        Ok(token)
    }

    fn unexpected(&self, expected: &[TokenKind]) -> ParseError {
        let token = self.current;
        let message = if token.kind == TokenKind::End {
            "unexpected end of input".to_string()
        } else {
            alloc::format!("unexpected {}", token.kind)
        };
        ParseError {
            span: SourceSpan::new(self.lexer.src, token.start, token.end),
            message,
            expected: expected.to_vec(),
        }
    }

    fn expect(&mut self, kind: TokenKind) -> core::result::Result<Token, ParseError> {
        if self.current.kind == kind {
            self.advance()
        } else {
            Err(self.unexpected(&[kind]))
        }
    }

    fn at(&self, kinds: &[TokenKind]) -> bool {
        kinds.contains(&self.current.kind)
    }

    fn coeff(&mut self) -> core::result::Result<f64, ParseError> {
        let token = self.current;
        let value = match token.kind {
            TokenKind::Number => token.value,
            TokenKind::Pi => PI,
            TokenKind::E => E,
            _ => return Err(self.unexpected(&COEFF_START)),
        };
        self.advance()?;
        Ok(value)
    }

    fn expr(&mut self) -> Result<GenExpr> {
        let mut powers = Vec::new();
        let mut trig = Vec::new();
        let mut sign = match self.current.kind {
            TokenKind::Minus => {
                self.advance()?;
                -1.0
            }
            TokenKind::Plus => {
                self.advance()?;
                1.0
            }
            _ => 1.0,
        };
        loop {
            match self.term(sign)? {
                Term::Power(t) => powers.push(t),
                Term::Trig(t) => trig.push(t),
            }
            sign = match self.current.kind {
                TokenKind::Plus => 1.0,
                TokenKind::Minus => -1.0,
                TokenKind::End => break,
                _ => {
                    return Err(self
                        .unexpected(&[TokenKind::Plus, TokenKind::Minus, TokenKind::End])
                        .into())
                }
            };
            self.advance()?;
        }
        Ok(GenExpr::new(powers, trig))
    }

    fn term(&mut self, sign: f64) -> Result<Term> {
        if self.at(&COEFF_START) {
            let coeff = sign * self.coeff()?;
            if self.current.kind != TokenKind::Star {
                return Ok(Term::Power(PowerTerm::new(coeff, 0.0)?));
            }
            self.advance()?;
            return self.atom(coeff);
        }
        if self.at(&TERM_START) {
            return self.atom(sign);
        }
        Err(self.unexpected(&TERM_START).into())
    }

    fn atom(&mut self, coeff: f64) -> Result<Term> {
        match self.current.kind {
            TokenKind::X => {
                self.advance()?;
                let mut exponent = 1.0;
                if self.current.kind == TokenKind::Caret {
                    self.advance()?;
                    let negative = self.current.kind == TokenKind::Minus;
                    if negative {
                        self.advance()?;
                    }
                    let magnitude = self.coeff()?;
                    exponent = if negative { -magnitude } else { magnitude };
                }
                Ok(Term::Power(PowerTerm::new(coeff, exponent)?))
            }
            TokenKind::Sin | TokenKind::Cos => {
                let base = if self.advance()?.kind == TokenKind::Sin {
                    TrigBase::Sin
                } else {
                    TrigBase::Cos
                };
                self.expect(TokenKind::LParen)?;
                self.expect(TokenKind::X)?;
                let phase = match self.current.kind {
                    TokenKind::Plus => {
                        self.advance()?;
                        self.coeff()?
                    }
                    TokenKind::Minus => {
                        self.advance()?;
                        -self.coeff()?
                    }
                    _ => 0.0,
                };
                if self.current.kind != TokenKind::RParen {
                    return Err(self
                        .unexpected(&[TokenKind::Plus, TokenKind::Minus, TokenKind::RParen])
                        .into());
                }
                self.advance()?;
                Ok(Term::Trig(TrigTerm::new(coeff, base, phase)?))
            }
            _ => Err(self
                .unexpected(&[TokenKind::X, TokenKind::Sin, TokenKind::Cos])
                .into()),
        }
    }
}

/// Parses an expression into canonical [`GenExpr`] form.
///
/// Syntax problems come back as [`Error::Parse`]; a written exponent at or
/// below −1 is an [`Error::Domain`].
pub fn parse(text: &str) -> Result<GenExpr> {
    let mut parser = Parser::new(text)?;
    parser.expr()
}

/// Renders `value` with 17 significant digits, dropping trailing zeros.
/// Plain notation between 1e-5 and 1e17, scientific outside.
pub fn format_number(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return if value.is_nan() {
            "NaN".to_string()
        } else if value > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = alloc::format!("{:.16e}", libm::fabs(value));
    let (mantissa, exp) = sci.split_once('e').unwrap_or((&sci, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if value < 0.0 { "-" } else { "" };

    if (-5..17).contains(&exp) {
        let body = if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                let mut s = digits.to_string();
                s.push_str(&"0".repeat(int_len - digits.len()));
                s
            } else {
                alloc::format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            let zeros = "0".repeat((-exp - 1) as usize);
            alloc::format!("0.{zeros}{digits}")
        };
        alloc::format!("{sign}{body}")
    } else {
        let body = if digits.len() == 1 {
            digits.to_string()
        } else {
            alloc::format!("{}.{}", &digits[..1], &digits[1..])
        };
        alloc::format!("{sign}{body}e{exp}")
    }
}

fn coeff_prefix(magnitude: f64) -> String {
    if magnitude == 1.0 {
        String::new()
    } else {
        alloc::format!("{}*", format_number(magnitude))
    }
}

fn power_body(term: &PowerTerm) -> String {
    let magnitude = libm::fabs(term.coeff());
    if term.exponent() == 0.0 {
        format_number(magnitude)
    } else {
        alloc::format!(
            "{}x^{}",
            coeff_prefix(magnitude),
            format_number(term.exponent())
        )
    }
}

fn trig_body(term: &TrigTerm) -> String {
    let magnitude = libm::fabs(term.coeff());
    let name = term.base().name();
    if term.phase() == 0.0 {
        alloc::format!("{}{name}(x)", coeff_prefix(magnitude))
    } else {
        alloc::format!(
            "{}{name}(x+{})",
            coeff_prefix(magnitude),
            format_number(term.phase())
        )
    }
}

pub(crate) fn format_power(term: &PowerTerm) -> String {
    let sign = if term.coeff() < 0.0 { "-" } else { "" };
    alloc::format!("{sign}{}", power_body(term))
}

/// Canonical text: power terms by descending exponent, then trig terms.
/// `parse(&format(e))` reproduces `e` exactly.
pub fn format(expr: &GenExpr) -> String {
    let bodies = expr
        .power_terms()
        .iter()
        .rev()
        .map(|t| (t.coeff() < 0.0, power_body(t)))
        .chain(
            expr.trig_terms()
                .iter()
                .map(|t| (t.coeff() < 0.0, trig_body(t))),
        );
    let mut out = String::new();
    for (i, (negative, body)) in bodies.enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for GenExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

impl fmt::Display for PowerTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_power(self))
    }
}

impl fmt::Display for TrigTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.coeff() < 0.0 { "-" } else { "" };
        write!(f, "{sign}{}", trig_body(self))
    }
}
