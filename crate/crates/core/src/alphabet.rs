//! Finite alphabets and the words (monomials) of the free semigroup over them.
//!
//! A [`Word`] stores letter indices rather than characters, so it carries no
//! reference to its [`Alphabet`]. Rendering and parsing always go through the
//! alphabet. Words order by length first and then lexicographically by the
//! alphabet's declared letter order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Characters with a meaning in the polynomial and coefficient text formats.
const RESERVED: &[char] = &['*', '+', '-', '(', ')', '^', '/', '1', '"', ','];

/// An ordered set of distinct single-character letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Arc<[char]>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if letters.len() > u8::MAX as usize {
            return Err(Error::AlphabetTooLarge(letters.len()));
        }
        for (i, &c) in letters.iter().enumerate() {
            if c.is_whitespace() || RESERVED.contains(&c) {
                return Err(Error::ReservedLetter(c));
            }
            if letters[..i].contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Alphabet {
            letters: letters.into(),
        })
    }

    /// Parses an alphabet declared as a string of distinct characters, e.g. `"abc"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn letter(&self, index: u8) -> char {
        self.letters[index as usize]
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.letters.iter().position(|&l| l == c).map(|i| i as u8)
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.symbols().iter().all(|&s| (s as usize) < self.len())
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, self)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.symbols().iter().map(|&s| self.letter(s)).collect()
    }

    /// All words of exactly `len` letters, in increasing word order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> + '_ {
        let k = self.len();
        let total = (k as u128).checked_pow(len as u32);
        let total = total.unwrap_or(u128::MAX);
        (0..total).map(move |mut code| {
            let mut symbols: SmallVec<[u8; 16]> = SmallVec::from_elem(0, len);
            for slot in symbols.iter_mut().rev() {
                *slot = (code % k as u128) as u8;
                code /= k as u128;
            }
            Word { symbols }
        })
    }

    /// All words with `min_len <= |w| <= max_len`, in increasing word order.
    pub fn words_up_to(&self, min_len: usize, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        (min_len..=max_len).flat_map(move |len| self.words_of_length(len))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.letters.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite sequence of letter indices. The empty word is the unit of concatenation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    symbols: SmallVec<[u8; 16]>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = u8>) -> Self {
        Word {
            symbols: symbols.into_iter().collect(),
        }
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.symbols.first().copied()
    }

    /// The suffix starting at zero-based index `start`.
    pub fn suffix(&self, start: usize) -> &[u8] {
        &self.symbols[start..]
    }

    pub fn concat(&self, other: &Word) -> Word {
        concat(self, other)
    }

    /// Every adjacent pair `(w[i], w[i+1])`.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.symbols.windows(2).map(|p| (p[0], p[1]))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.symbols.as_slice())
    }
}

/// Parses `text` as a word over `alphabet`. `"1"` and `""` denote the empty word.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    if text.is_empty() || text == "1" {
        return Ok(Word::empty());
    }
    text.chars()
        .map(|c| alphabet.index_of(c).ok_or(Error::UnknownLetter(c)))
        .collect::<Result<SmallVec<_>>>()
        .map(|symbols| Word { symbols })
}

pub fn concat(u: &Word, v: &Word) -> Word {
    let mut symbols = SmallVec::with_capacity(u.len() + v.len());
    symbols.extend_from_slice(&u.symbols);
    symbols.extend_from_slice(&v.symbols);
    Word { symbols }
}

/// `y[..i] x y[i..]`.
pub fn insert_at(x: &Word, y: &Word, i: usize) -> Result<Word> {
    if i > y.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: y.len(),
        });
    }
    Ok(splice(x, y, i))
}

/// Unchecked [`insert_at`] for callers that already bound `i` by `|y|`.
pub(crate) fn splice(x: &Word, y: &Word, i: usize) -> Word {
    let mut symbols = SmallVec::with_capacity(x.len() + y.len());
    symbols.extend_from_slice(&y.symbols[..i]);
    symbols.extend_from_slice(&x.symbols);
    symbols.extend_from_slice(&y.symbols[i..]);
    Word { symbols }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    #[test]
    fn parse_examples() {
        let a = abc();
        let w = a.parse_word("abc").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(a.format_word(&w), "abc");

        let ab = Alphabet::parse("ab").unwrap();
        assert!(ab.parse_word("1").unwrap().is_empty());
        assert!(ab.parse_word("").unwrap().is_empty());

        assert_eq!(a.parse_word("abd"), Err(Error::UnknownLetter('d')));
    }

    #[test]
    fn alphabet_validation() {
        assert_eq!(Alphabet::parse(""), Err(Error::EmptyAlphabet));
        assert_eq!(Alphabet::parse("aba"), Err(Error::DuplicateLetter('a')));
        assert_eq!(Alphabet::parse("a*"), Err(Error::ReservedLetter('*')));
        assert_eq!(Alphabet::parse("a1"), Err(Error::ReservedLetter('1')));
        assert!(Alphabet::parse("AGCT").is_ok());
    }

    #[test]
    fn concat_examples() {
        let a = abc();
        let w = |s| a.parse_word(s).unwrap();
        assert_eq!(concat(&w("ab"), &w("c")), w("abc"));
        assert_eq!(concat(&w("1"), &w("ab")), w("ab"));
        assert_eq!(concat(&w("a"), &w("a")), w("aa"));
    }

    #[test]
    fn insert_examples() {
        let a = Alphabet::parse("abcde").unwrap();
        let w = |s| a.parse_word(s).unwrap();
        assert_eq!(insert_at(&w("abc"), &w("de"), 1).unwrap(), w("dabce"));
        assert_eq!(insert_at(&w("c"), &w("1"), 0).unwrap(), w("c"));
        assert_eq!(insert_at(&w("1"), &w("ab"), 1).unwrap(), w("ab"));
        assert_eq!(
            insert_at(&w("a"), &w("ab"), 3),
            Err(Error::PositionOutOfRange {
                position: 3,
                len: 2
            })
        );
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let a = Alphabet::parse("ba").unwrap();
        let w = |s| a.parse_word(s).unwrap();
        // alphabet order is b < a
        assert!(w("b") < w("a"));
        assert!(w("a") < w("bb"));
        assert!(w("1") < w("b"));
        assert!(w("ba") < w("ab"));
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let a = abc();
        let words: Vec<Word> = a.words_up_to(0, 3).collect();
        assert_eq!(words.len(), 1 + 3 + 9 + 27);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..3, 0..8).prop_map(Word::from_symbols)
    }

    proptest! {
        #[test]
        fn insert_at_ends_is_concat(x in word_strategy(), y in word_strategy()) {
            prop_assert_eq!(insert_at(&x, &y, 0).unwrap(), concat(&x, &y));
            prop_assert_eq!(insert_at(&x, &y, y.len()).unwrap(), concat(&y, &x));
            let all: Vec<Word> = (0..=y.len()).map(|i| insert_at(&x, &y, i).unwrap()).collect();
            prop_assert_eq!(all.len(), y.len() + 1);
            prop_assert!(all.iter().all(|w| w.len() == x.len() + y.len()));
        }

        #[test]
        fn format_parse_round_trip(w in word_strategy()) {
            let a = abc();
            prop_assert_eq!(a.parse_word(&a.format_word(&w)).unwrap(), w);
        }
    }
}
