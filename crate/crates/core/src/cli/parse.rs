//! Ideal expressions.
//!
//! ```text
//! ideal    := atom ('&' atom)*
//! atom     := '(' monomial (',' monomial)* ')'
//! monomial := factor ('*' factor)*
//! factor   := var ('^' posint)?
//! ```

use std::fmt;

use crate::ideal::{ExponentVector, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UndeclaredVariable(String),
    Algebra(crate::Error),
}

/// A parse failure at byte offset `pos` of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => {
                write!(f, "syntax error at position {}: {msg}", self.pos)
            }
            ParseErrorKind::UndeclaredVariable(v) => {
                write!(f, "undeclared variable '{v}' at position {}", self.pos)
            }
            ParseErrorKind::Algebra(e) => write!(f, "at position {}: {e}", self.pos),
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            kind: ParseErrorKind::Syntax(msg.into()),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected '{}'", c as char))
        }
    }

    fn ideal(&mut self) -> Result<MonomialIdeal, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'&') {
            self.pos += 1;
            let start = self.pos;
            let next = self.atom()?;
            acc = acc.intersect(&next).map_err(|e| ParseError {
                pos: start,
                kind: ParseErrorKind::Algebra(e),
            })?;
        }
        if self.peek().is_some() {
            return self.error("unexpected trailing input");
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<MonomialIdeal, ParseError> {
        self.expect(b'(')?;
        let mut gens = vec![self.monomial()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            gens.push(self.monomial()?);
        }
        self.expect(b')')?;
        MonomialIdeal::minimize(gens, self.vars.len()).map_err(|e| ParseError {
            pos: self.pos,
            kind: ParseErrorKind::Algebra(e),
        })
    }

    fn monomial(&mut self) -> Result<ExponentVector, ParseError> {
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            let (i, e) = self.factor()?;
            exps[i] = match exps[i].checked_add(e) {
                Some(v) => v,
                None => return self.error("exponent overflow"),
            };
            if self.peek() != Some(b'*') {
                return Ok(ExponentVector::new(exps));
            }
            self.pos += 1;
        }
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let ident = |c: u8, first: bool| {
            c == b'_' || c.is_ascii_alphabetic() || (!first && c.is_ascii_digit())
        };
        while self.pos < self.src.len() && ident(self.src[self.pos], self.pos == start) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected a variable");
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII identifier");
        let Some(i) = self.vars.iter().position(|v| v == name) else {
            return Err(ParseError {
                pos: start,
                kind: ParseErrorKind::UndeclaredVariable(name.to_string()),
            });
        };
        if self.peek() != Some(b'^') {
            return Ok((i, 1));
        }
        self.pos += 1;
        self.skip_ws();
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return self.error("expected an exponent");
        }
        let text = std::str::from_utf8(&self.src[digits..self.pos]).expect("ASCII digits");
        match text.parse::<u32>() {
            Ok(0) => Err(ParseError {
                pos: digits,
                kind: ParseErrorKind::Syntax("exponent must be positive".into()),
            }),
            Ok(e) => Ok((i, e)),
            Err(_) => Err(ParseError {
                pos: digits,
                kind: ParseErrorKind::Syntax("exponent does not fit in 32 bits".into()),
            }),
        }
    }
}

/// Parses `text` over the variables `vars`, in declaration order.
pub fn parse_ideal(text: &str, vars: &[String]) -> Result<MonomialIdeal, ParseError> {
    if vars.is_empty() {
        return Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::Algebra(crate::Error::ZeroArity),
        });
    }
    for (k, v) in vars.iter().enumerate() {
        let valid = v
            .bytes()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == b'_')
            && v.bytes().all(|c| c.is_ascii_alphanumeric() || c == b'_');
        if !valid || vars[..k].contains(v) {
            return Err(ParseError {
                pos: 0,
                kind: ParseErrorKind::Syntax(format!("invalid or repeated variable name '{v}'")),
            });
        }
    }
    Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    }
    .ideal()
}

/// Splits a comma-separated variable list such as `x,y,z`.
pub fn parse_vars(text: &str) -> Vec<String> {
    text.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}
