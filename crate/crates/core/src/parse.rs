//! Text formats: monomial ideal generator lists and weight files.
//!
//! Ideals are written as comma separated products of powers, for example
//! `y^3, x*y, x^3` or `x1^2, x2^2`. Letter variables are drawn from
//! `x, y, z, w` and are ordered that way; indexed variables `x1 .. xn` are
//! ordered by index and force `n` to the largest index used.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::lattice::ExponentVector;
use crate::reconstruct::RestrictedWeightData;

const LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

/// A parsed generator list before minimalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSource {
    pub raw: String,
    pub variables: Vec<String>,
    pub generators: Vec<ExponentVector>,
}

impl IdealSource {
    pub fn n(&self) -> usize {
        self.variables.len()
    }

    /// Minimal generators, rejecting non-full and infinite ideals.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let ideal = minimalize(self.generators.iter().cloned(), self.n())?;
        ideal.ensure_full_finite()?;
        Ok(ideal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Var {
    Letter(usize),
    Indexed(usize),
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                message: "number too large".into(),
            })
    }

    /// Digits immediately following the current position, no whitespace allowed.
    fn attached_number(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (start != self.pos).then(|| self.text[start..self.pos].parse().unwrap_or(u64::MAX))
    }
}

/// Parses the generator list without validating the resulting ideal.
pub fn parse_source(text: &str) -> Result<IdealSource> {
    let mut lx = Lexer { text, pos: 0 };
    let parenthesized = lx.peek() == Some('(');
    if parenthesized {
        lx.bump();
    }
    let mut raw_gens: Vec<(usize, Vec<(Var, u64)>)> = Vec::new();
    loop {
        raw_gens.push(parse_generator(&mut lx)?);
        match lx.peek() {
            Some(',') => {
                lx.bump();
            }
            Some(')') if parenthesized => {
                lx.bump();
                break;
            }
            None if !parenthesized => break,
            None => return Err(lx.error("missing closing ')'")),
            Some(c) => return Err(lx.error(format!("unexpected character '{c}'"))),
        }
    }
    if let Some(c) = lx.peek() {
        return Err(lx.error(format!("unexpected character '{c}' after ideal")));
    }

    let mut used: Vec<Var> = raw_gens
        .iter()
        .flat_map(|(_, fs)| fs.iter().map(|f| f.0))
        .collect();
    used.sort();
    used.dedup();
    let letters = used.iter().any(|v| matches!(v, Var::Letter(_)));
    let indexed = used.iter().any(|v| matches!(v, Var::Indexed(_)));
    if letters && indexed {
        return Err(Error::Syntax {
            pos: 0,
            message: "cannot mix letter variables with indexed variables".into(),
        });
    }
    let (variables, slot): (Vec<String>, BTreeMap<Var, usize>) = if indexed {
        let max = used
            .iter()
            .map(|v| match v {
                Var::Indexed(i) => *i,
                Var::Letter(_) => 0,
            })
            .max()
            .unwrap_or(0);
        (
            (1..=max).map(|i| format!("x{i}")).collect(),
            (1..=max).map(|i| (Var::Indexed(i), i - 1)).collect(),
        )
    } else {
        (
            used.iter()
                .map(|v| match v {
                    Var::Letter(i) => LETTERS[*i].to_string(),
                    Var::Indexed(_) => unreachable!(),
                })
                .collect(),
            used.iter().enumerate().map(|(i, v)| (*v, i)).collect(),
        )
    };
    let n = variables.len();
    if n == 0 {
        // only constants: the unit ideal in an unknown number of variables
        return Err(Error::ZeroGenerator);
    }
    let mut generators = Vec::with_capacity(raw_gens.len());
    for (pos, factors) in raw_gens {
        let mut coords = vec![0i64; n];
        for (var, e) in factors {
            let c = &mut coords[slot[&var]];
            *c = c
                .checked_add(i64::try_from(e).unwrap_or(i64::MAX))
                .filter(|&x| x <= 1 << 40)
                .ok_or(Error::Syntax {
                    pos,
                    message: "exponent too large".into(),
                })?;
        }
        generators.push(ExponentVector::new(coords));
    }
    Ok(IdealSource {
        raw: text.to_string(),
        variables,
        generators,
    })
}

fn parse_generator(lx: &mut Lexer<'_>) -> Result<(usize, Vec<(Var, u64)>)> {
    lx.skip_ws();
    let start = lx.pos;
    let mut factors = Vec::new();
    loop {
        match lx.peek() {
            Some('1') => {
                lx.bump();
                if lx.attached_number().is_some() {
                    return Err(Error::Syntax {
                        pos: start,
                        message: "only the constant 1 is allowed".into(),
                    });
                }
            }
            Some(c) if LETTERS.contains(&c) => {
                lx.bump();
                let var = if c == 'x' {
                    match lx.attached_number() {
                        Some(0) => return Err(lx.error("variable indices start at 1")),
                        Some(i) if i > 64 => return Err(lx.error("variable index too large")),
                        Some(i) => Var::Indexed(i as usize),
                        None => Var::Letter(0),
                    }
                } else {
                    Var::Letter(LETTERS.iter().position(|&l| l == c).unwrap())
                };
                let exp = if lx.peek() == Some('^') {
                    lx.bump();
                    lx.number()?
                } else {
                    1
                };
                factors.push((var, exp));
            }
            Some(c) => return Err(lx.error(format!("expected a variable, found '{c}'"))),
            None => return Err(lx.error("expected a variable, found end of input")),
        }
        if lx.peek() == Some('*') {
            lx.bump();
        } else {
            break;
        }
    }
    Ok((start, factors))
}

/// Parses and validates: minimal generators of a full ideal with finite quotient.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_source(text)?.ideal()
}

/// Canonical variable names: `x, y, z, w` up to four variables, else `x1 .. xn`.
pub fn variable_names(n: usize) -> Vec<String> {
    if n <= LETTERS.len() {
        LETTERS[..n].iter().map(char::to_string).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn render_monomial(m: &ExponentVector, names: &[String]) -> String {
    let factors: Vec<String> = m
        .coords()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e != 0)
        .map(|(&e, name)| {
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

pub fn render_with(ideal: &MonomialIdeal, names: &[String]) -> String {
    ideal
        .generators()
        .iter()
        .map(|g| render_monomial(g, names))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Canonical rendering; [`parse_ideal`] inverts it.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    render_with(ideal, &variable_names(ideal.n()))
}

/// Reads weight records `a1 .. an dim`, one per line. `#` starts a comment;
/// `n` is taken from the first record.
pub fn parse_weights(text: &str) -> Result<RestrictedWeightData> {
    let mut n = None;
    let mut entries = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let pos = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let mut numbers = Vec::with_capacity(fields.len());
        for f in &fields {
            numbers.push(f.parse::<i64>().map_err(|_| Error::Syntax {
                pos,
                message: format!("'{f}' is not an integer"),
            })?);
        }
        if numbers.len() < 2 {
            return Err(Error::Syntax {
                pos,
                message: "a record needs at least one coordinate and a dimension".into(),
            });
        }
        let width = numbers.len() - 1;
        match n {
            None => n = Some(width),
            Some(k) if k != width => {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: width,
                })
            }
            _ => {}
        }
        let dim = numbers.pop().unwrap();
        let dim = usize::try_from(dim).map_err(|_| Error::Syntax {
            pos,
            message: format!("negative dimension {dim}"),
        })?;
        entries.push((ExponentVector::new(numbers), dim));
    }
    let n = n.ok_or_else(|| Error::InvalidWeightData("no records found".into()))?;
    RestrictedWeightData::new(n, entries)
}

/// Writes weight records in the format read by [`parse_weights`].
pub fn render_weights(data: &RestrictedWeightData) -> String {
    let mut out = String::new();
    for (alpha, d) in data.entries() {
        out.push_str(&format!("{} {d}\n", alpha.to_record()));
    }
    out
}
