//! Text forms of monomials, ideals and weight vectors.
//!
//! ```text
//! ideal    := "0" | "(" list ")" | list
//! list     := monomial ("," monomial)*
//! monomial := factor ("*" factor)*
//! factor   := "1" | var ("^" digits)?
//! var      := "x" digits | "x_" digits | "x" | "y" | "z"
//! weights  := digits ("," digits)*
//! ```
//!
//! Variables are either indexed (`x1`, `x_2`, ...) or single letters
//! (`x`, `y`, `z`); the first identifier fixes the scheme.

use std::fmt;

use thiserror::Error;

use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, WeightVector};

const LETTERS: [char; 3] = ['x', 'y', 'z'];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Naming {
    Indexed,
    Letters,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("weight `{0}` is not a positive integer")]
    NonPositiveWeight(String),
    #[error("weights must be non-increasing")]
    NonMonotoneWeights,
    #[error("malformed exponent `{0}`")]
    MalformedExponent(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("empty input")]
    Empty,
    #[error("`{0}` mixes indexed and letter variable names")]
    MixedNaming(String),
}

/// A parse failure at a 0-based character position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at column {}", .pos + 1)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(pos: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { pos, kind })
}

/// A parsed ideal together with its source text and naming scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealExpression {
    pub source: String,
    pub ideal: MonomialIdeal,
    pub naming: Naming,
}

/// One variable occurrence: 0-based index, exponent, position of the name.
type Factor = (usize, u32, usize);

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
    naming: Option<Naming>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { chars: text.char_indices().collect(), at: 0, text, naming: None }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|(_, c)| c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.text.len(), |&(p, _)| p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.get(self.at) {
            if !c.is_ascii_digit() {
                break;
            }
            s.push(c);
            self.at += 1;
        }
        s
    }

    fn set_naming(&mut self, naming: Naming, pos: usize, name: &str) -> Result<(), ParseError> {
        match self.naming {
            Some(existing) if existing != naming => err(pos, ParseErrorKind::MixedNaming(name.to_string())),
            _ => {
                self.naming = Some(naming);
                Ok(())
            }
        }
    }

    /// Returns `None` for the literal `1`.
    fn factor(&mut self) -> Result<Option<Factor>, ParseError> {
        let Some(c) = self.peek() else { return err(self.pos(), ParseErrorKind::UnexpectedEnd) };
        let start = self.pos();
        if c == '1' {
            self.at += 1;
            if self.chars.get(self.at).is_some_and(|(_, c)| c.is_ascii_digit()) {
                return err(start, ParseErrorKind::UnexpectedChar(c));
            }
            return Ok(None);
        }
        if !c.is_ascii_alphabetic() {
            return err(start, ParseErrorKind::UnexpectedChar(c));
        }
        self.at += 1;
        let underscore = self.chars.get(self.at).is_some_and(|&(_, c)| c == '_');
        if underscore {
            self.at += 1;
        }
        let num = self.digits();
        let end = self.pos();
        let name = &self.text[start..end];
        let index = if num.is_empty() {
            if underscore {
                return err(start, ParseErrorKind::UnknownVariable(name.to_string()));
            }
            let Some(i) = LETTERS.iter().position(|&l| l == c) else {
                return err(start, ParseErrorKind::UnknownVariable(name.to_string()));
            };
            self.set_naming(Naming::Letters, start, name)?;
            i
        } else {
            if c != 'x' {
                return err(start, ParseErrorKind::UnknownVariable(name.to_string()));
            }
            self.set_naming(Naming::Indexed, start, name)?;
            match num.parse::<usize>() {
                Ok(i) if i >= 1 => i - 1,
                _ => return err(start, ParseErrorKind::UnknownVariable(name.to_string())),
            }
        };
        let mut exp = 1;
        if self.eat('^') {
            self.skip_ws();
            let epos = self.pos();
            let digits = self.digits();
            if digits.is_empty() {
                let shown = self.chars.get(self.at).map(|&(_, c)| c.to_string()).unwrap_or_default();
                return err(epos, ParseErrorKind::MalformedExponent(shown));
            }
            exp = match digits.parse::<u32>() {
                Ok(e) => e,
                Err(_) => return err(epos, ParseErrorKind::MalformedExponent(digits)),
            };
        }
        Ok(Some((index, exp, start)))
    }

    fn monomial(&mut self) -> Result<Vec<Factor>, ParseError> {
        let mut factors = Vec::new();
        factors.extend(self.factor()?);
        while self.eat('*') {
            factors.extend(self.factor()?);
        }
        Ok(factors)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => err(self.pos(), ParseErrorKind::UnexpectedChar(c)),
        }
    }
}

fn resolve_nvars(text: &str, monos: &[Vec<Factor>], nvars: Option<usize>) -> Result<usize, ParseError> {
    let inferred = monos.iter().flatten().map(|f| f.0 + 1).max().unwrap_or(1);
    match nvars {
        None => Ok(inferred),
        Some(n) => match monos.iter().flatten().find(|f| f.0 >= n) {
            Some(&(_, _, pos)) => {
                let name: String = text[pos..].chars().take_while(|c| c.is_ascii_alphanumeric() || *c == '_').collect();
                err(pos, ParseErrorKind::UnknownVariable(name))
            }
            None => Ok(n),
        },
    }
}

fn build(factors: &[Factor], n: usize) -> Result<Monomial, ParseError> {
    let mut exps = vec![0u32; n];
    for &(i, e, pos) in factors {
        exps[i] = exps[i]
            .checked_add(e)
            .ok_or_else(|| ParseError { pos, kind: ParseErrorKind::MalformedExponent("exponent overflow".into()) })?;
    }
    Ok(Monomial::new(exps))
}

/// Parses a monomial. The number of variables is `nvars` when given, else the
/// largest index mentioned.
pub fn parse_monomial(text: &str, nvars: Option<usize>) -> Result<(Monomial, Naming), ParseError> {
    let mut p = Parser::new(text);
    if p.peek().is_none() {
        return err(0, ParseErrorKind::Empty);
    }
    let factors = p.monomial()?;
    p.finish()?;
    let n = resolve_nvars(text, std::slice::from_ref(&factors), nvars)?;
    Ok((build(&factors, n)?, p.naming.unwrap_or(Naming::Indexed)))
}

/// Parses an ideal, given by generators that need not be minimal.
pub fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<IdealExpression, ParseError> {
    let monos = parse_generators(text, nvars)?;
    let ideal = MonomialIdeal::new(monos.nvars, monos.gens).expect("parsed generators share one dimension");
    Ok(IdealExpression { source: text.to_string(), ideal, naming: monos.naming })
}

/// Generators exactly as written (not minimalized).
pub struct Generators {
    pub nvars: usize,
    pub gens: Vec<Monomial>,
    pub naming: Naming,
}

pub fn parse_generators(text: &str, nvars: Option<usize>) -> Result<Generators, ParseError> {
    let mut p = Parser::new(text);
    if p.peek().is_none() {
        return err(0, ParseErrorKind::Empty);
    }
    if p.peek() == Some('0') {
        p.at += 1;
        p.finish()?;
        return Ok(Generators { nvars: nvars.unwrap_or(1), gens: Vec::new(), naming: Naming::Indexed });
    }
    let paren = p.eat('(');
    let mut monos = vec![p.monomial()?];
    while p.eat(',') {
        monos.push(p.monomial()?);
    }
    if paren && !p.eat(')') {
        return match p.peek() {
            Some(c) => err(p.pos(), ParseErrorKind::UnexpectedChar(c)),
            None => err(p.pos(), ParseErrorKind::UnexpectedEnd),
        };
    }
    p.finish()?;
    let n = resolve_nvars(text, &monos, nvars)?;
    let gens = monos.iter().map(|f| build(f, n)).collect::<Result<_, _>>()?;
    Ok(Generators { nvars: n, gens, naming: p.naming.unwrap_or(Naming::Indexed) })
}

/// Parses `w_1,w_2,...`: positive and non-increasing.
pub fn parse_weights(text: &str) -> Result<WeightVector, ParseError> {
    if text.trim().is_empty() {
        return err(0, ParseErrorKind::Empty);
    }
    let mut weights = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let item = part.trim();
        match item.parse::<u32>() {
            Ok(x) if x > 0 => {
                if weights.last().is_some_and(|&prev| prev < x) {
                    return err(offset + lead, ParseErrorKind::NonMonotoneWeights);
                }
                weights.push(x);
            }
            _ => return err(offset + lead, ParseErrorKind::NonPositiveWeight(item.to_string())),
        }
        offset += part.len() + 1;
    }
    Ok(WeightVector::new(weights).expect("validated above"))
}

/// Printer for monomials and ideals in a given naming scheme. Letter names
/// are used only when there are at most three variables.
#[derive(Clone, Copy, Debug)]
pub struct Show<'a, T> {
    pub value: &'a T,
    pub naming: Naming,
}

pub fn show<T>(value: &T, naming: Naming) -> Show<'_, T> {
    Show { value, naming }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, naming: Naming) -> fmt::Result {
    if naming == Naming::Indexed || m.nvars() > LETTERS.len() {
        return write!(f, "{m}");
    }
    if m.is_one() {
        return f.write_str("1");
    }
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate().filter(|(_, &e)| e > 0) {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "{}", LETTERS[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Show<'_, Monomial> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self.value, self.naming)
    }
}

impl fmt::Display for Show<'_, MonomialIdeal> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_zero() {
            return f.write_str("0");
        }
        for (i, g) in self.value.gens().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write_monomial(f, g, self.naming)?;
        }
        Ok(())
    }
}

/// Name of variable `i` (0-based).
pub fn variable_name(i: usize, nvars: usize, naming: Naming) -> String {
    if naming == Naming::Letters && nvars <= LETTERS.len() {
        LETTERS[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}
