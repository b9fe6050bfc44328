use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{BinOp, Term};
use crate::algebra::{Dim, IndexSet};
use crate::error::{ParseError, Result};

/// Parse a term and check it against dimension `n`.
///
/// ```text
/// term := var | "e" INT | "0" INT | "q(" term {"," term} ")"
///       | ("t"|"and"|"or"|"sub"|"bw"|"bv") "[" INT {"," INT} "]" "(" term {"," term} ")"
/// var  := [a-z][a-z0-9_]*
/// ```
pub fn parse_term(text: &str, n: Dim) -> Result<Term> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input").into());
    }
    t.validate(n)?;
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
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

    fn expect(&mut self, c: u8) -> core::result::Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c.is_ascii_lowercase() || c.is_ascii_digit() || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> core::result::Result<u8, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match digits.parse::<u8>() {
            Ok(k) if (1..=Dim::MAX as u8).contains(&k) => Ok(k),
            _ => Err(ParseError { position: start, message: format!("index `{digits}` out of range") }),
        }
    }

    fn args(&mut self) -> core::result::Result<Vec<Term>, ParseError> {
        self.expect(b'(')?;
        let mut out = Vec::from([self.term()?]);
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.term()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn subscript(&mut self) -> core::result::Result<IndexSet, ParseError> {
        self.expect(b'[')?;
        let mut d = IndexSet::empty();
        d.insert(self.int()?);
        while self.peek() == Some(b',') {
            self.pos += 1;
            d.insert(self.int()?);
        }
        self.expect(b']')?;
        Ok(d)
    }

    fn term(&mut self) -> core::result::Result<Term, ParseError> {
        let start = match self.peek() {
            None => return Err(self.error("unexpected end of input")),
            Some(c) => c,
        };
        if start == b'0' {
            self.pos += 1;
            return Ok(Term::Zero(self.int_immediate()?));
        }
        if !start.is_ascii_lowercase() {
            return Err(self.error("expected a term"));
        }
        let at = self.pos;
        let name = self.ident();
        if let Some(digits) = name.strip_prefix('e') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                return match digits.parse::<u8>() {
                    Ok(k) if k >= 1 && (k as usize) <= Dim::MAX => Ok(Term::Const(k)),
                    _ => Err(ParseError { position: at, message: format!("constant `{name}` out of range") }),
                };
            }
        }
        match (name.as_str(), self.peek()) {
            ("q", Some(b'(')) => Ok(Term::Q(self.args()?)),
            ("t", Some(b'[')) => {
                let d = self.subscript()?;
                let args = self.args()?;
                let [x, y, z]: [Term; 3] = args
                    .try_into()
                    .map_err(|_| ParseError { position: at, message: "t takes 3 arguments".into() })?;
                Ok(Term::T(d, Box::new([x, y, z])))
            }
            (kw, Some(b'[')) if BinOp::from_keyword(kw).is_some() => {
                let op = BinOp::from_keyword(kw).unwrap();
                let d = self.subscript()?;
                let args = self.args()?;
                let [a, b]: [Term; 2] = args.try_into().map_err(|_| ParseError {
                    position: at,
                    message: format!("{kw} takes 2 arguments"),
                })?;
                Ok(Term::Bin(op, d, Box::new([a, b])))
            }
            _ => Ok(Term::Var(name)),
        }
    }

    /// Digits directly after `0`, with no whitespace allowed.
    fn int_immediate(&mut self) -> core::result::Result<u8, ParseError> {
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_digit() => self.int(),
            _ => Err(self.error("expected an index after `0`")),
        }
    }
}
