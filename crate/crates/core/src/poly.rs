//! Formal linear combinations of words with exact coefficients.
//!
//! Text format: `c1*w1 + c2*w2 + …` in increasing word order. A unit coefficient
//! is omitted (`abc`), a negative single-term coefficient becomes a ` - `
//! separator (`ababcac - abcabac`), and a coefficient with several `t`-terms is
//! parenthesized (`(t^2 + 1)*ab`). The zero polynomial prints as `0`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::alphabet::{Alphabet, Word};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Coefficient>,
}

impl Polynomial {
    pub fn zero(alphabet: &Alphabet) -> Self {
        Polynomial {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(alphabet: &Alphabet, word: Word, c: Coefficient) -> Result<Self> {
        if !alphabet.contains_word(&word) {
            return Err(Error::AlphabetMismatch);
        }
        let mut p = Self::zero(alphabet);
        p.add_term(word, c);
        Ok(p)
    }

    pub fn from_word(alphabet: &Alphabet, word: Word) -> Result<Self> {
        Self::monomial(alphabet, word, Coefficient::one())
    }

    /// Builds a polynomial from `(word, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        alphabet: &Alphabet,
        terms: impl IntoIterator<Item = (Word, Coefficient)>,
    ) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            if !alphabet.contains_word(&w) {
                return Err(Error::AlphabetMismatch);
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn same_alphabet(&self, other: &Polynomial) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &Coefficient) -> Polynomial {
        let mut out = Self::zero(&self.alphabet);
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(w, k)| (w.clone(), k * c))
            .filter(|(_, k)| !k.is_zero())
            .collect();
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scalar_mul(&Coefficient::from_int(-1))
    }

    /// Extends a word-level product bilinearly: `Σ p[u]·q[v]·op(u, v)`.
    pub fn bilinear_extend<F>(&self, other: &Polynomial, mut op: F) -> Result<Polynomial>
    where
        F: FnMut(&Word, &Word) -> Result<Polynomial>,
    {
        self.same_alphabet(other)?;
        let mut out = Self::zero(&self.alphabet);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let piece = op(u, v)?;
                piece.same_alphabet(self)?;
                let scale = cu * cv;
                for (w, k) in piece.terms {
                    out.add_term(w, &scale * &k);
                }
            }
        }
        Ok(out)
    }

    /// Parses the canonical text form (and reasonable spacing variants of it).
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Polynomial> {
        let err = |reason: &str| Error::parse("polynomial", text, reason);
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(err("empty"));
        }
        let mut p = Self::zero(alphabet);
        if trimmed == "0" {
            return Ok(p);
        }
        for (negative, term) in split_terms(trimmed).map_err(|r| err(&r))? {
            let (coeff, word) = match rfind_top_level(term, '*') {
                Some(i) => {
                    let ctext = term[..i].trim();
                    let ctext = ctext
                        .strip_prefix('(')
                        .and_then(|c| c.strip_suffix(')'))
                        .unwrap_or(ctext);
                    (ctext.parse::<Coefficient>()?, term[i + 1..].trim())
                }
                None => (Coefficient::one(), term),
            };
            let w = alphabet.parse_word(word)?;
            p.add_term(w, if negative { -coeff } else { coeff });
        }
        Ok(p)
    }
}

/// Splits at top-level binary `+`/`-`, returning `(negated, term)` pairs.
fn split_terms(text: &str) -> std::result::Result<Vec<(bool, &str)>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let mut prev: Option<char> = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced ')'".into());
                }
            }
            '+' | '-' if depth == 0 && !matches!(prev, Some('^') | Some('*')) => {
                let piece = text[start..i].trim();
                if prev.is_none() {
                    if c == '+' {
                        return Err("leading '+'".into());
                    }
                    negative = true;
                } else {
                    if piece.is_empty() {
                        return Err(format!("missing term before offset {i}"));
                    }
                    out.push((negative, piece));
                    negative = c == '-';
                }
                start = i + c.len_utf8();
            }
            _ => {}
        }
        if !c.is_whitespace() {
            prev = Some(c);
        }
    }
    if depth != 0 {
        return Err("unbalanced '('".into());
    }
    let last = text[start..].trim();
    if last.is_empty() {
        return Err("trailing operator".into());
    }
    out.push((negative, last));
    Ok(out)
}

fn rfind_top_level(text: &str, needle: char) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == needle && depth == 0 => found = Some(i),
            _ => {}
        }
    }
    found
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let word = self.alphabet.format_word(w);
            if c.is_single_term() {
                let negative = c.is_negative_leading();
                match (i, negative) {
                    (0, true) => write!(f, "-")?,
                    (0, false) => {}
                    (_, true) => write!(f, " - ")?,
                    (_, false) => write!(f, " + ")?,
                }
                let abs = if negative { -c } else { c.clone() };
                if abs.is_one() {
                    write!(f, "{word}")?;
                } else {
                    write!(f, "{abs}*{word}")?;
                }
            } else {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "({c})*{word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.alphabet, self)
    }
}
