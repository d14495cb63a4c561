//! Text syntax for polynomials.
//!
//! A polynomial is a signed sum of terms.  Each term is an optional rational
//! coefficient (`3`, `1/2`) followed by a product of atoms, where an atom is
//! a generator name or a parenthesised subexpression.  Juxtaposition is the
//! planar product `·` and binds tightest; `*` (associative), `>` (successor)
//! and `<` (predecessor) share one lower precedence level and all products
//! associate to the left.  The algebra has no unit, so a bare number is not a
//! polynomial; the single token `ZERO` denotes the zero polynomial, matching
//! how it is printed.
//!
//! Errors carry 1-based line and column positions; the line is always 1 here
//! and is rebased by callers that embed polynomials in larger files.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::polynomials::{prec_mul, star_mul, succ_mul, tree_mul, Poly};
use crate::words::{Alphabet, StarWord};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Succ,
    Prec,
    LParen,
    RParen,
    Number(BigRational),
    Ident(String),
}

fn parse_err(col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        col,
        msg: msg.into(),
    }
}

/// Shift an error produced by [`parse_poly`] to its position inside a larger
/// file: `line` replaces the local line 1 and `col_offset` counts the
/// characters preceding the expression on that line.
pub(crate) fn rebase(err: Error, line: usize, col_offset: usize) -> Error {
    match err {
        Error::Parse { col, msg, .. } => Error::Parse {
            line,
            col: col + col_offset,
            msg,
        },
        Error::UnknownGenerator { name, col, .. } => Error::UnknownGenerator {
            name,
            line,
            col: col + col_offset,
        },
        other => other,
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((col, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((col, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((col, Tok::Star));
                i += 1;
            }
            '>' => {
                toks.push((col, Tok::Succ));
                i += 1;
            }
            '<' => {
                toks.push((col, Tok::Prec));
                i += 1;
            }
            '(' => {
                toks.push((col, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((col, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: String = chars[start..i].iter().collect();
                let numer: BigInt = numer.parse().expect("digit run");
                let denom = if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(parse_err(i + 1, "expected digits after '/'"));
                    }
                    let denom: String = chars[dstart..i].iter().collect();
                    denom.parse().expect("digit run")
                } else {
                    BigInt::from(1)
                };
                if denom.is_zero() {
                    return Err(parse_err(col, "zero denominator in coefficient"));
                }
                toks.push((col, Tok::Number(BigRational::new(numer, denom))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((col, Tok::Ident(chars[start..i].iter().collect())));
            }
            other => {
                return Err(parse_err(col, format!("unexpected character '{}'", other)));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::LParen))
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc += &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc -= &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let coeff = if let Some(Tok::Number(_)) = self.peek() {
            match self.bump() {
                Some(Tok::Number(c)) => Some(c),
                _ => unreachable!(),
            }
        } else {
            None
        };
        let body = self.product()?;
        Ok(match coeff {
            Some(c) => body.scaled(&c),
            None => body,
        })
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.juxt()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => Tok::Star,
                Some(Tok::Succ) => Tok::Succ,
                Some(Tok::Prec) => Tok::Prec,
                _ => break,
            };
            self.bump();
            let rhs = self.juxt()?;
            acc = match op {
                Tok::Star => star_mul(&acc, &rhs),
                Tok::Succ => succ_mul(&acc, &rhs),
                Tok::Prec => prec_mul(&acc, &rhs),
                _ => unreachable!(),
            };
        }
        Ok(acc)
    }

    fn juxt(&mut self) -> Result<Poly> {
        let mut acc = self.atom()?;
        while self.starts_atom() {
            let rhs = self.atom()?;
            acc = tree_mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Ident(name)) => match self.alphabet.index_of(&name) {
                Some(i) => Ok(Poly::monomial(StarWord::letter(i))),
                None => Err(Error::UnknownGenerator { name, line: 1, col }),
            },
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                let col = self.col();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(parse_err(col, "expected ')'")),
                }
            }
            Some(_) => Err(parse_err(col, "expected a generator or '('")),
            None => Err(parse_err(col, "unexpected end of expression")),
        }
    }
}

/// Names usable as generators or basis elements: identifier-shaped and not
/// the reserved token `ZERO`.
pub(crate) fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != "ZERO"
}

/// Parse a polynomial over `alphabet`.
pub fn parse_poly(input: &str, alphabet: &Alphabet) -> Result<Poly> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(parse_err(1, "empty polynomial expression"));
    }
    if toks.len() == 1 {
        if let (_, Tok::Ident(name)) = &toks[0] {
            if name == "ZERO" {
                return Ok(Poly::zero());
            }
        }
    }
    let end_col = input.chars().count() + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
        alphabet,
    };
    let poly = p.sum()?;
    if p.pos < p.toks.len() {
        return Err(parse_err(p.col(), "unexpected trailing input"));
    }
    Ok(poly)
}
