//! The insertion products on words and their bilinear extension to polynomials.
//!
//! All five products splice `x` into `y` at some positions and differ only in
//! which positions count and with what weight:
//!
//! | kind                  | positions `i` (0-based, `y[..i] x y[i..]`) | weight                   |
//! |-----------------------|---------------------------------------------|--------------------------|
//! | `Simple`              | `0..=|y|`                                   | 1                        |
//! | `Weighted(f)`         | `0..=|y|`                                   | `f(|x|, |y|)`            |
//! | `DeltaRestricted`     | `0..|y|` with `x[0] == y[i]`                | 1                        |
//! | `Synchronized`        | `0..|y|`                                    | `lcp(x, y[i..])`         |
//! | `AdjacencyRestricted` | `0..=|y|`                                   | 1, inadmissible dropped  |
//!
//! Multiplicities are kept: two positions producing the same word add up.

use std::fmt;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::alphabet::{splice, Alphabet, Word};
use crate::coeff::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::weight::WeightFunction;

/// Which letter pairs may stand next to each other. Always symmetric with a
/// true diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct AdjacencyRelation {
    alphabet: Alphabet,
    allowed: Vec<bool>,
}

#[derive(Deserialize)]
struct RelationFile {
    alphabet: String,
    #[serde(default)]
    forbidden: Vec<(String, String)>,
}

impl AdjacencyRelation {
    pub fn full(alphabet: &Alphabet) -> Self {
        let k = alphabet.len();
        AdjacencyRelation {
            alphabet: alphabet.clone(),
            allowed: vec![true; k * k],
        }
    }

    /// Forbids each listed pair in both orders.
    pub fn with_forbidden(alphabet: &Alphabet, pairs: &[(char, char)]) -> Result<Self> {
        let mut rel = Self::full(alphabet);
        let k = alphabet.len();
        for &(a, b) in pairs {
            let ia = alphabet.index_of(a).ok_or(Error::UnknownLetter(a))? as usize;
            let ib = alphabet.index_of(b).ok_or(Error::UnknownLetter(b))? as usize;
            if ia == ib {
                return Err(Error::InvalidRelation(format!(
                    "diagonal pair ({a}, {b}) cannot be forbidden"
                )));
            }
            rel.allowed[ia * k + ib] = false;
            rel.allowed[ib * k + ia] = false;
        }
        Ok(rel)
    }

    /// Parses `{"alphabet": "abc", "forbidden": [["a","c"]]}`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: RelationFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidRelation(e.to_string()))?;
        let alphabet = Alphabet::parse(&file.alphabet)?;
        let single = |s: &str| -> Result<char> {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(Error::InvalidRelation(format!(
                    "{s:?} is not a single letter"
                ))),
            }
        };
        let pairs = file
            .forbidden
            .iter()
            .map(|(a, b)| Ok((single(a)?, single(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::with_forbidden(&alphabet, &pairs)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn allows(&self, a: u8, b: u8) -> bool {
        self.allowed[a as usize * self.alphabet.len() + b as usize]
    }

    pub fn is_full(&self) -> bool {
        self.allowed.iter().all(|&b| b)
    }

    pub fn is_admissible(&self, w: &Word) -> bool {
        w.adjacent_pairs().all(|(a, b)| self.allows(a, b))
    }

    /// Forbidden unordered pairs `(a, b)` with `a` before `b` in alphabet order.
    pub fn forbidden_pairs(&self) -> Vec<(char, char)> {
        let k = self.alphabet.len() as u8;
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                if !self.allows(a, b) {
                    out.push((self.alphabet.letter(a), self.alphabet.letter(b)));
                }
            }
        }
        out
    }
}

impl fmt::Display for AdjacencyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .forbidden_pairs()
            .into_iter()
            .map(|(a, b)| format!("{a}{b}"))
            .collect();
        write!(f, "forbidden=[{}]", pairs.join(","))
    }
}

impl fmt::Debug for AdjacencyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdjacencyRelation[{}]({self})", self.alphabet)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum InsertionOperator {
    Simple,
    Weighted(WeightFunction),
    DeltaRestricted,
    Synchronized,
    AdjacencyRestricted(AdjacencyRelation),
}

impl fmt::Display for InsertionOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsertionOperator::Simple => write!(f, "simple"),
            InsertionOperator::Weighted(w) => write!(f, "weighted(f={w})"),
            InsertionOperator::DeltaRestricted => write!(f, "delta"),
            InsertionOperator::Synchronized => write!(f, "sync"),
            InsertionOperator::AdjacencyRestricted(r) => write!(f, "adjacency({r})"),
        }
    }
}

impl fmt::Debug for InsertionOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Longest common prefix length of `x` and `w`.
fn common_prefix(x: &[u8], w: &[u8]) -> u64 {
    x.iter().zip(w).take_while(|(a, b)| a == b).count() as u64
}

impl InsertionOperator {
    /// Whether exhaustive searches include the empty word by default. The
    /// delta-restricted and synchronized products vanish on it.
    pub fn admits_empty_words(&self) -> bool {
        !matches!(
            self,
            InsertionOperator::DeltaRestricted | InsertionOperator::Synchronized
        )
    }

    pub fn relation(&self) -> Option<&AdjacencyRelation> {
        match self {
            InsertionOperator::AdjacencyRestricted(r) => Some(r),
            _ => None,
        }
    }

    /// The word-level product as `(prefactor, [(word, multiplicity)])`.
    /// Inputs are assumed valid for the operator.
    pub(crate) fn word_terms(&self, x: &Word, y: &Word) -> Result<(Coefficient, Vec<(Word, u64)>)> {
        let q = y.len();
        let all = || (0..=q).map(|i| (splice(x, y, i), 1)).collect::<Vec<_>>();
        Ok(match self {
            InsertionOperator::Simple => (Coefficient::one(), all()),
            InsertionOperator::Weighted(f) => {
                let w = f.eval(x.len() as u32, y.len() as u32)?;
                if w.is_zero() {
                    (w, Vec::new())
                } else {
                    (w, all())
                }
            }
            InsertionOperator::DeltaRestricted => {
                let terms = match x.first() {
                    Some(x0) => (0..q)
                        .filter(|&i| y.symbols()[i] == x0)
                        .map(|i| (splice(x, y, i), 1))
                        .collect(),
                    None => Vec::new(),
                };
                (Coefficient::one(), terms)
            }
            InsertionOperator::Synchronized => {
                let terms = (0..q)
                    .filter_map(|i| {
                        let s = common_prefix(x.symbols(), y.suffix(i));
                        (s > 0).then(|| (splice(x, y, i), s))
                    })
                    .collect();
                (Coefficient::one(), terms)
            }
            InsertionOperator::AdjacencyRestricted(rel) => {
                let terms = (0..=q)
                    .map(|i| splice(x, y, i))
                    .filter(|w| rel.is_admissible(w))
                    .map(|w| (w, 1))
                    .collect();
                (Coefficient::one(), terms)
            }
        })
    }

    fn validate(&self, alphabet: &Alphabet, w: &Word) -> Result<()> {
        if !alphabet.contains_word(w) {
            return Err(Error::AlphabetMismatch);
        }
        if let InsertionOperator::AdjacencyRestricted(rel) = self {
            if rel.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            if !rel.is_admissible(w) {
                return Err(Error::InadmissibleInput(alphabet.format_word(w)));
            }
        }
        Ok(())
    }

    /// The product of two words over `alphabet`.
    pub fn product(&self, alphabet: &Alphabet, x: &Word, y: &Word) -> Result<Polynomial> {
        self.validate(alphabet, x)?;
        self.validate(alphabet, y)?;
        let mut out = Polynomial::zero(alphabet);
        self.accumulate(&mut out, x, y, &Coefficient::one())?;
        Ok(out)
    }

    fn accumulate(
        &self,
        out: &mut Polynomial,
        x: &Word,
        y: &Word,
        scale: &Coefficient,
    ) -> Result<()> {
        let (pre, terms) = self.word_terms(x, y)?;
        let scale = scale * &pre;
        if scale.is_zero() {
            return Ok(());
        }
        for (w, mult) in terms {
            let c = if mult == 1 {
                scale.clone()
            } else {
                scale.scale_int(mult)
            };
            out.add_term(w, c);
        }
        Ok(())
    }

    /// Bilinear extension of the word product to polynomials.
    pub fn apply(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        if p.alphabet() != q.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        let alphabet = p.alphabet();
        for (w, _) in p.terms().chain(q.terms()) {
            self.validate(alphabet, w)?;
        }
        let mut out = Polynomial::zero(alphabet);
        for (u, cu) in p.terms() {
            for (v, cv) in q.terms() {
                self.accumulate(&mut out, u, v, &(cu * cv))?;
            }
        }
        Ok(out)
    }
}

/// `x → y`: the sum of all `|y| + 1` insertions of `x` into `y`.
pub fn simple_insertion(alphabet: &Alphabet, x: &Word, y: &Word) -> Result<Polynomial> {
    InsertionOperator::Simple.product(alphabet, x, y)
}

/// `x ⇒ y = f(|x|, |y|)·(x → y)`.
pub fn weighted_insertion(
    alphabet: &Alphabet,
    f: &WeightFunction,
    x: &Word,
    y: &Word,
) -> Result<Polynomial> {
    InsertionOperator::Weighted(f.clone()).product(alphabet, x, y)
}

/// Inserts `x` immediately before each letter of `y` equal to the first letter of `x`.
pub fn delta_restricted_insertion(alphabet: &Alphabet, x: &Word, y: &Word) -> Result<Polynomial> {
    InsertionOperator::DeltaRestricted.product(alphabet, x, y)
}

/// Inserts `x` before each letter `y[i]`, weighted by the common prefix length of `x` and `y[i..]`.
pub fn synchronized_insertion(alphabet: &Alphabet, x: &Word, y: &Word) -> Result<Polynomial> {
    InsertionOperator::Synchronized.product(alphabet, x, y)
}

/// `x → y` with every word containing a forbidden adjacent pair removed.
pub fn adjacency_restricted_insertion(
    rel: &AdjacencyRelation,
    x: &Word,
    y: &Word,
) -> Result<Polynomial> {
    InsertionOperator::AdjacencyRestricted(rel.clone()).product(rel.alphabet(), x, y)
}

/// The right-handed convention `X·a`: `a` inserted into `X`.
pub fn right_insertion(
    op: &InsertionOperator,
    big_x: &Polynomial,
    a: &Polynomial,
) -> Result<Polynomial> {
    op.apply(a, big_x)
}

/// Coefficient of `a^{p+q}` in `a^p ⇉ a^q` over a one-letter alphabet:
/// `p(2q − p + 1)/2` for `p < q`, otherwise `q(q + 1)/2`.
pub fn c_closed_form(p: u64, q: u64) -> Rational {
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    let two = BigInt::from(2);
    if p < q {
        Rational::new(&p * (&q * &two - &p + 1), two)
    } else {
        Rational::new(&q * (&q + 1), two)
    }
}
