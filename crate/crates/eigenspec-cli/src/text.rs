//! Polynomial expression parsing and canonical printing.
//!
//! Grammar:
//!
//! ```text
//! expression  := sign? term (('+' | '-') term)*
//! term        := [coefficient '*'?] factor*       (with '*' allowed between factors)
//! factor      := variable ('^' positive-integer)?
//! coefficient := integer ('/' positive-integer)?
//! ```
//!
//! Whitespace is insignificant. Like monomials are combined and terms with
//! coefficient zero are dropped. Canonical printing orders terms by graded
//! reverse-lexicographic monomial order, descending, and round-trips
//! through the parser.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use eigenspec::{Monomial, MonomialOrder, Polynomial, Rational};

/// Parse failure with the byte offset it occurred at.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Number(String),
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Number(text[start..i].to_string()), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            other => return err(i, format!("unexpected character {other:?}")),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    variables: &'a [String],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expression(&mut self) -> Result<Vec<(Monomial, Rational)>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -1
            }
            Some(Tok::Plus) => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let (m, c) = self.term(sign)?;
            terms.push((m, c));
            match self.bump() {
                None => break,
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                Some(_) => {
                    return err(
                        self.toks[self.pos - 1].1,
                        "expected '+' or '-' between terms",
                    )
                }
            }
        }
        Ok(terms)
    }

    fn term(&mut self, sign: i64) -> Result<(Monomial, Rational), ParseError> {
        let mut coeff: Option<Rational> = None;
        if let Some(Tok::Number(_)) = self.peek() {
            coeff = Some(self.coefficient()?);
            if let Some(Tok::Star) = self.peek() {
                self.bump();
                // a '*' after the coefficient must introduce a factor
                if !matches!(self.peek(), Some(Tok::Ident(_))) {
                    return err(self.here(), "expected a variable after '*'");
                }
            }
        }

        let mut exps = vec![0usize; self.variables.len()];
        let mut saw_factor = false;
        while let Some(Tok::Ident(_)) = self.peek() {
            let at = self.here();
            let name = match self.bump() {
                Some(Tok::Ident(s)) => s,
                _ => unreachable!(),
            };
            let var = match self.variables.iter().position(|v| v == &name) {
                Some(v) => v,
                None => return err(at, format!("unknown variable {name:?}")),
            };
            let mut exp = 1usize;
            if let Some(Tok::Caret) = self.peek() {
                self.bump();
                exp = self.positive_integer("exponent")?;
            }
            exps[var] = exps[var]
                .checked_add(exp)
                .ok_or_else(|| ParseError {
                    position: at,
                    message: "exponent overflow".to_string(),
                })?;
            saw_factor = true;
            if let Some(Tok::Star) = self.peek() {
                self.bump();
                if !matches!(self.peek(), Some(Tok::Ident(_))) {
                    return err(self.here(), "expected a variable after '*'");
                }
            }
        }

        if coeff.is_none() && !saw_factor {
            return err(self.here(), "expected a term");
        }
        let c = coeff.unwrap_or_else(Rational::one)
            * Rational::from_integer(BigInt::from(sign));
        Ok((Monomial::new(exps), c))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let at = self.here();
        let numer = match self.bump() {
            Some(Tok::Number(s)) => s.parse::<BigInt>().map_err(|_| ParseError {
                position: at,
                message: "invalid integer".to_string(),
            })?,
            _ => return err(at, "expected an integer"),
        };
        if let Some(Tok::Slash) = self.peek() {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Tok::Number(s)) => {
                    let denom = s.parse::<BigInt>().map_err(|_| ParseError {
                        position: at,
                        message: "invalid integer".to_string(),
                    })?;
                    if denom.is_zero() {
                        return err(at, "zero denominator");
                    }
                    Ok(Rational::new(numer, denom))
                }
                _ => err(at, "expected a denominator"),
            }
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn positive_integer(&mut self, what: &str) -> Result<usize, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Number(s)) => {
                let value: usize = s.parse().map_err(|_| ParseError {
                    position: at,
                    message: format!("{what} overflow"),
                })?;
                if value == 0 {
                    return err(at, format!("{what} must be positive"));
                }
                Ok(value)
            }
            _ => err(at, format!("expected a positive integer {what}")),
        }
    }
}

/// Parses `text` against the ordered variable list.
pub fn parse_polynomial(text: &str, variables: &[String]) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(0, "empty expression");
    }
    let mut parser = Parser { toks, pos: 0, variables, end: text.len() };
    let terms = parser.expression()?;
    Ok(Polynomial::from_terms(variables.len(), terms))
}

/// Canonical text form: terms in descending graded reverse-lexicographic
/// order, rational coefficients as `p/q`, factors joined by `*`.
pub fn format_polynomial(p: &Polynomial, variables: &[String]) -> String {
    assert_eq!(p.nvars(), variables.len(), "variable count mismatch");
    if p.is_zero() {
        return "0".to_string();
    }
    let order = MonomialOrder::graded_revlex(p.nvars());
    let mut terms: Vec<(&Monomial, &Rational)> = p.terms().collect();
    terms.sort_by(|a, b| order.cmp(b.0, a.0));

    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = if negative { -*c } else { (*c).clone() };
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    variables[v].clone()
                } else {
                    format!("{}^{}", variables[v], e)
                }
            })
            .collect();
        if factors.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&factors.join("*"));
        } else {
            out.push_str(&magnitude.to_string());
            out.push('*');
            out.push_str(&factors.join("*"));
        }
    }
    out
}
