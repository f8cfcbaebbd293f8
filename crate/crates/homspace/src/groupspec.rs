//! Text grammar for group specs.
//!
//! ```text
//! spec   := factor ("x" factor)* ["+" "U" nat]
//! factor := simple | torus | alias
//! simple := ("A"|"B"|"C"|"D"|"E"|"F"|"G") nat
//! torus  := "T" nat
//! alias  := ("SL"|"SO"|"Sp"|"GL"|"PGL") "(" nat ")"
//! ```
//!
//! Aliases reduce to type data: `SL(n) -> A_{n-1}`, `SO(2n+1) -> B_n`,
//! `SO(2n) -> D_n`, `Sp(2n) -> C_n`, `GL(n) -> A_{n-1} x T1`,
//! `PGL(n) -> A_{n-1}`. Isogenous forms deliberately map to the same data:
//! every polynomial here depends only on the Weyl side. `+Uk` adds `k`
//! dimensions of unipotent radical.

use crate::homogeneous::GroupSpec;
use crate::weylcore::{Family, ReductiveType, SimpleType};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecParseError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid rank at byte {position}: {family}{rank} is not a valid type")]
    InvalidRank {
        position: usize,
        family: char,
        rank: usize,
    },
}

impl SpecParseError {
    pub fn code(&self) -> &'static str {
        match self {
            SpecParseError::Parse { .. } => "ParseError",
            SpecParseError::InvalidRank { .. } => "InvalidRank",
        }
    }
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, expected: char) -> Result<(), SpecParseError> {
        match self.peek() {
            Some(c) if c == expected => {
                self.bump();
                Ok(())
            }
            found => Err(self.err(format!("expected `{expected}`, found {}", show(found)))),
        }
    }

    fn err(&self, message: String) -> SpecParseError {
        SpecParseError::Parse {
            position: self.pos,
            message,
        }
    }

    fn letters(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.bump();
        }
        &self.text[start..self.pos]
    }

    fn nat(&mut self) -> Result<usize, SpecParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.err("expected a number".into()));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.err("number out of range".into()))
    }
}

fn show(c: Option<char>) -> String {
    match c {
        Some(c) => format!("`{c}`"),
        None => "end of input".into(),
    }
}

/// Parses a group-spec expression. On canonical forms this inverts
/// `GroupSpec`'s `Display`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecParseError> {
    let mut s = Scanner {
        text: text.trim(),
        pos: 0,
    };
    let mut factors: Vec<SimpleType> = Vec::new();
    let mut torus_rank = 0usize;
    loop {
        parse_factor(&mut s, &mut factors, &mut torus_rank)?;
        match s.peek() {
            Some('x') => {
                s.bump();
            }
            _ => break,
        }
    }
    let mut unipotent_extra = 0usize;
    if s.peek() == Some('+') {
        s.bump();
        s.eat('U')?;
        unipotent_extra = s.nat()?;
    }
    if s.peek().is_some() {
        return Err(s.err(format!("unexpected trailing input {}", show(s.peek()))));
    }
    Ok(GroupSpec::with_unipotent(
        ReductiveType::new(factors, torus_rank),
        unipotent_extra,
    ))
}

fn parse_factor(
    s: &mut Scanner,
    factors: &mut Vec<SimpleType>,
    torus_rank: &mut usize,
) -> Result<(), SpecParseError> {
    let start = s.pos;
    let name = s.letters();
    if name.is_empty() {
        return Err(s.err(format!("expected a factor, found {}", show(s.peek()))));
    }
    let simple = |family: Family, rank: usize| {
        SimpleType::new(family, rank).map_err(|_| SpecParseError::InvalidRank {
            position: start,
            family: family.letter(),
            rank,
        })
    };
    match name {
        "T" => {
            *torus_rank += s.nat()?;
            Ok(())
        }
        "A" | "B" | "C" | "D" | "E" | "F" | "G" => {
            let family = match name {
                "A" => Family::A,
                "B" => Family::B,
                "C" => Family::C,
                "D" => Family::D,
                "E" => Family::E,
                "F" => Family::F,
                _ => Family::G,
            };
            factors.push(simple(family, s.nat()?)?);
            Ok(())
        }
        "SL" | "SO" | "Sp" | "GL" | "PGL" => {
            s.eat('(')?;
            let n = s.nat()?;
            s.eat(')')?;
            match name {
                "SL" | "PGL" => {
                    // n = 1 is the trivial group
                    if n >= 2 {
                        factors.push(simple(Family::A, n - 1)?);
                    }
                }
                "GL" => {
                    if n >= 2 {
                        factors.push(simple(Family::A, n - 1)?);
                    }
                    if n >= 1 {
                        *torus_rank += 1;
                    }
                }
                "SO" => {
                    if n % 2 == 1 {
                        if n >= 3 {
                            factors.push(simple(Family::B, (n - 1) / 2)?);
                        }
                        // SO(1) is trivial
                    } else {
                        factors.push(simple(Family::D, n / 2)?);
                    }
                }
                "Sp" => {
                    if n % 2 != 0 {
                        return Err(SpecParseError::Parse {
                            position: start,
                            message: format!("Sp({n}) needs an even argument"),
                        });
                    }
                    factors.push(simple(Family::C, n / 2)?);
                }
                _ => unreachable!(),
            }
            Ok(())
        }
        other => Err(SpecParseError::Parse {
            position: start,
            message: format!("unknown factor name `{other}`"),
        }),
    }
}
