//! Recursive-descent parser for field elements and polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'r' | 's' | 'x' | 'y' | 'z' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::MultiPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if matches!(c, 'r' | 's' | 'x' | 'y' | 'z') {
            out.push((pos, Tok::Ident(c)));
            i += 1;
        } else if matches!(c, '+' | '-' | '*' | '/' | '^' | '(' | ')') {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else if c == '−' {
            out.push((pos, Tok::Op('-')));
            i += 1;
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    allow_vars: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.i += 1;
                let d = self.unary()?;
                if !d.is_constant() {
                    return Err(Error::Syntax { pos, msg: "division by a non-constant".into() });
                }
                let inv = d.constant_term().inv()?;
                acc = acc.scale(&inv);
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.i += 1;
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(MultiPoly::constant(FieldElement::from_rational(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(c)) => {
                let p = match c {
                    'r' => MultiPoly::constant(FieldElement::r()),
                    's' => MultiPoly::constant(FieldElement::s()),
                    _ if !self.allow_vars => return self.err(format!("variable `{c}` in a field element")),
                    'x' => MultiPoly::x(),
                    'y' => MultiPoly::y(),
                    _ => MultiPoly::z(),
                };
                self.i += 1;
                Ok(p)
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse(text: &str, allow_vars: bool) -> Result<MultiPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, i: 0, end: text.len(), allow_vars };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub(crate) fn parse_poly(text: &str) -> Result<MultiPoly> {
    parse(text, true)
}

pub(crate) fn parse_element(text: &str) -> Result<FieldElement> {
    Ok(parse(text, false)?.constant_term())
}
