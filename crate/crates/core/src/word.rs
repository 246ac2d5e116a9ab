//! Words in the generators of a string C-group.
//!
//! Letters are generator indices; `a`, `b`, `c` in the usual notation are
//! `0`, `1`, `2`. All generators of a string C-group are involutions, so the
//! inverse of a word is its reversal and `x^v` (conjugation) is `v⁻¹ x v`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default alphabet used for display and parsing: `a`↔0, `b`↔1, `c`↔2, ...
pub const ABC: &str = "abcdefghij";

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(
            self.0
                .iter()
                .copied()
                .cycle()
                .take(self.len() * n)
                .collect(),
        )
    }

    /// Reversed letter order; this is the group inverse when every letter
    /// names an involution.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `self^v = v⁻¹ · self · v` for involutive generators.
    pub fn conjugate_by(&self, v: &Word) -> Word {
        v.reversed().concat(self).concat(v)
    }

    /// Largest letter, if any.
    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    /// Parse an expression such as `((ab)^4)^{cbacbacbc}` over `alphabet`.
    ///
    /// `x^n` with a decimal `n` is a power; `x^{w}` or `x^l` with letters is
    /// conjugation by `w`. Whitespace is ignored.
    pub fn parse(expr: &str, alphabet: &str) -> Result<Word> {
        let alphabet: Vec<char> = alphabet.chars().collect();
        let chars: Vec<char> = expr.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser {
            chars: &chars,
            pos: 0,
            alphabet: &alphabet,
        };
        let w = p.sequence()?;
        if p.pos != chars.len() {
            return Err(Error::InvalidWord(format!(
                "unexpected '{}' at position {} in {expr:?}",
                chars[p.pos], p.pos
            )));
        }
        Ok(w)
    }

    pub fn parse_abc(expr: &str) -> Result<Word> {
        Word::parse(expr, ABC)
    }

    pub fn to_string_with(&self, alphabet: &str) -> String {
        let alphabet: Vec<char> = alphabet.chars().collect();
        self.0
            .iter()
            .map(|&l| alphabet.get(l).copied().unwrap_or('?'))
            .collect()
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&self.to_string_with(ABC))
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    alphabet: &'a [char],
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::InvalidWord(format!("{msg} at position {}", self.pos))
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut out = Word::empty();
        while let Some(c) = self.peek() {
            if c == ')' || c == '}' {
                break;
            }
            let t = self.term()?;
            out = out.concat(&t);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Word> {
        let mut base = self.atom()?;
        while self.peek() == Some('^') {
            self.pos += 1;
            match self.peek() {
                Some('{') => {
                    self.pos += 1;
                    let start = self.pos;
                    if let Some(n) = self.number() {
                        if self.peek() == Some('}') {
                            self.pos += 1;
                            base = base.pow(n);
                            continue;
                        }
                        self.pos = start;
                    }
                    let v = self.sequence()?;
                    if self.peek() != Some('}') {
                        return Err(self.err("expected '}'"));
                    }
                    self.pos += 1;
                    base = base.conjugate_by(&v);
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number().ok_or_else(|| self.err("bad exponent"))?;
                    base = base.pow(n);
                }
                Some(_) => {
                    let v = self.atom()?;
                    base = base.conjugate_by(&v);
                }
                None => return Err(self.err("dangling '^'")),
            }
        }
        Ok(base)
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .ok()
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.sequence()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(c) => match self.alphabet.iter().position(|&a| a == c) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Word(vec![i]))
                }
                None => Err(self.err(&format!("letter '{c}' not in alphabet"))),
            },
            None => Err(self.err("unexpected end")),
        }
    }
}
