//! Expressions over basis literals: `2*M[3.,2] - 1/2*m[1,0;] * m[;1]`.

use std::fmt;
use std::str::FromStr;

use superhopf::kernel::parse_q;
use superhopf::{DottedComposition, SuperPartition, SymBasis, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QsBasis {
    /// Monomial `M`.
    M,
    /// Fundamental `L`, strong refinements.
    L,
    /// Fundamental `L̄`, weak refinements.
    Lb,
}

/// Which algebra and basis a literal belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Qs(QsBasis),
    /// sNSym, basis `H`.
    H,
    Sym(SymBasis),
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Qs(QsBasis::M) => "M",
            Basis::Qs(QsBasis::L) => "L",
            Basis::Qs(QsBasis::Lb) => "Lb",
            Basis::H => "H",
            Basis::Sym(b) => b.symbol(),
        }
    }

    pub fn indexed_by_superpartitions(self) -> bool {
        matches!(self, Basis::Sym(_))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "M" => Basis::Qs(QsBasis::M),
            "L" => Basis::Qs(QsBasis::L),
            "Lb" => Basis::Qs(QsBasis::Lb),
            "H" => Basis::H,
            _ => Basis::Sym(
                s.parse()
                    .map_err(|_| format!("unknown basis {s:?}; expected one of M, L, Lb, H, m, p, e, h, s, sb, s*, sb*"))?,
            ),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Composition(DottedComposition),
    Partition(SuperPartition),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Scalar(Q),
    Literal(Basis, Index),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.pos + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(String),
    Slash,
    Plus,
    Minus,
    Star,
    Open,
    Close,
    Literal(Basis, Index),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn error(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.take_while(char::is_whitespace);
            let start = self.pos;
            let Some(c) = self.peek() else { break };
            let token = match c {
                '0'..='9' => Token::Number(self.take_while(|c| c.is_ascii_digit()).to_string()),
                'A'..='Z' | 'a'..='z' => self.literal()?,
                _ => {
                    self.pos += c.len_utf8();
                    match c {
                        '/' => Token::Slash,
                        '+' => Token::Plus,
                        '-' | '−' => Token::Minus,
                        '*' | '·' => Token::Star,
                        '(' => Token::Open,
                        ')' => Token::Close,
                        _ => return Err(self.error(start, format!("unexpected character {c:?}"))),
                    }
                }
            };
            out.push((start, token));
        }
        Ok(out)
    }

    fn literal(&mut self) -> Result<Token, ParseError> {
        let start = self.pos;
        let mut name = self.take_while(|c| c.is_ascii_alphabetic()).to_string();
        // `s*[..]` and `sb*[..]` name the dual bases; a `*` before anything
        // else is multiplication.
        if self.src[self.pos..].starts_with("*[") {
            self.pos += 1;
            name.push('*');
        }
        let basis: Basis = name.parse().map_err(|e: String| self.error(start, e))?;
        if self.peek() != Some('[') {
            return Err(self.error(self.pos, format!("expected '[' after {name}")));
        }
        self.pos += 1;
        let index_start = self.pos;
        let text = self.take_while(|c| c != ']');
        if self.peek() != Some(']') {
            return Err(self.error(index_start - 1, "unclosed '['"));
        }
        self.pos += 1;
        let invalid = |e: superhopf::Error| self.error(index_start, format!("invalid {name} index {text:?}: {e}"));
        let index = if basis.indexed_by_superpartitions() {
            Index::Partition(text.parse().map_err(invalid)?)
        } else {
            Index::Composition(text.parse().map_err(invalid)?)
        };
        Ok(Token::Literal(basis, index))
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    next: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.next).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.next).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos(),
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.next).map(|(_, t)| t.clone());
        self.next += 1;
        t
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Number(n)) => {
                let mut text = n;
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Number(d)) => text = format!("{text}/{d}"),
                        _ => {
                            self.next -= 1;
                            return Err(self.error("expected a denominator after '/'"));
                        }
                    }
                }
                parse_q(&text).map(Expr::Scalar).map_err(|e| ParseError {
                    pos,
                    message: e.to_string(),
                })
            }
            Some(Token::Literal(b, i)) => Ok(Expr::Literal(b, i)),
            Some(Token::Open) => {
                let inner = self.sum()?;
                if self.bump() != Some(Token::Close) {
                    self.next -= 1;
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(_) => {
                self.next -= 1;
                Err(self.error("expected a number, a basis element or '('"))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = Lexer { src, pos: 0 }.tokens()?;
    let mut p = Parser {
        tokens,
        next: 0,
        end: src.len(),
    };
    let e = p.sum()?;
    if p.next < p.tokens.len() {
        return Err(p.error("expected an operator"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(b: &str, i: &str) -> Expr {
        let basis: Basis = b.parse().unwrap();
        let index = if basis.indexed_by_superpartitions() {
            Index::Partition(i.parse().unwrap())
        } else {
            Index::Composition(i.parse().unwrap())
        };
        Expr::Literal(basis, index)
    }

    #[test]
    fn products_and_literals() {
        assert_eq!(
            parse("M[3.,2] * M[4.,1]").unwrap(),
            Expr::Mul(Box::new(lit("M", "3.,2")), Box::new(lit("M", "4.,1")))
        );
        assert_eq!(parse("m[1,0;]").unwrap(), lit("m", "1,0;"));
        assert_eq!(parse("M[]").unwrap(), lit("M", ""));
        assert_eq!(parse("s*[1;]").unwrap(), lit("s*", "1;"));
        assert_eq!(
            parse("s[1;]*sb*[;1]").unwrap(),
            Expr::Mul(Box::new(lit("s", "1;")), Box::new(lit("sb*", ";1")))
        );
    }

    #[test]
    fn precedence() {
        let e = parse("1/2*M[1] - -H[2.]").unwrap();
        let half = Expr::Scalar(Q::new(1.into(), 2.into()));
        assert_eq!(
            e,
            Expr::Sub(
                Box::new(Expr::Mul(Box::new(half), Box::new(lit("M", "1")))),
                Box::new(Expr::Neg(Box::new(lit("H", "2."))))
            )
        );
    }

    #[test]
    fn repeated_dotted_parts() {
        assert!(parse("M[3.,3.]").is_ok());
        assert!(parse("H[3.,3.]").is_ok());
        let err = parse("m[3,3;]").unwrap_err();
        assert_eq!(err.pos, 2);
        assert!(err.message.contains("invalid m index"), "{err}");
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse("M[1] +").unwrap_err().pos, 6);
        assert_eq!(parse("M[1] M[2]").unwrap_err().pos, 5);
        assert_eq!(parse("Q[1]").unwrap_err().pos, 0);
        assert_eq!(parse("M[1").unwrap_err().pos, 1);
        assert_eq!(parse("2 ^ M[1]").unwrap_err().pos, 2);
        assert_eq!(parse("(M[1]").unwrap_err().pos, 5);
        assert_eq!(parse("1/0").unwrap_err().pos, 0);
    }
}
