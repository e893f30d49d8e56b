use std::fmt;

use crate::error::{Error, Result};

/// Product of generator powers, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Word(Vec<(String, i64)>);

impl Word {
    pub fn new(factors: Vec<(String, i64)>) -> Self {
        Word(factors)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn factors(&self) -> &[(String, i64)] {
        &self.0
    }

    /// Parses one word such as `a^7 b`, `a^-1 b a`, `-a b` or `cba`.
    ///
    /// A generator name is a lowercase letter optionally followed by digits;
    /// `-` before a factor inverts it and `e` alone is the identity.
    pub fn parse(text: &str) -> Result<Self> {
        parse_word(text, 0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(n, k)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Comma-separated list of words.
pub fn parse_word_list(text: &str) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_word(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn parse_word(text: &str, offset: usize) -> Result<Word> {
    let bytes = text.as_bytes();
    let err = |pos: usize, msg: &str| Error::Parse {
        pos: offset + pos,
        msg: msg.to_string(),
    };
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let number = |i: &mut usize| -> Result<i64> {
        let start = *i;
        let neg = bytes.get(*i) == Some(&b'-');
        if neg {
            *i += 1;
        }
        let digits = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        if digits == *i {
            return Err(err(start, "expected an exponent"));
        }
        let v: i64 = text[digits..*i].parse().map_err(|_| err(start, "exponent out of range"))?;
        Ok(if neg { -v } else { v })
    };

    let mut factors = Vec::new();
    skip_ws(&mut i);
    if text.trim() == "e" {
        return Ok(Word::identity());
    }
    if i == bytes.len() {
        return Err(err(i, "empty word"));
    }
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'-' {
            sign = -1;
            i += 1;
            skip_ws(&mut i);
        }
        if i >= bytes.len() || !bytes[i].is_ascii_lowercase() {
            return Err(err(i, "expected a generator name"));
        }
        let start = i;
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let name = text[start..i].to_string();
        skip_ws(&mut i);
        let mut exp = 1;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            skip_ws(&mut i);
            exp = number(&mut i)?;
        }
        factors.push((name, sign * exp));
        skip_ws(&mut i);
    }
    Ok(Word(factors))
}
