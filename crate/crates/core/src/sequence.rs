//! Alphabets, q-ary words and symbolwise modular arithmetic.
//!
//! A [`Sequence`] is a fixed-length word over `{0, …, q−1}`. Its weight is the
//! plain sum of its symbols, so a word of length `n` has weight between `0`
//! and `n(q−1)`, and it is *balanced* when the weight sits exactly in the
//! middle, at `n(q−1)/2`.
//!
//! Words have a text form used throughout the CLI and the test fixtures:
//! for `q ≤ 10` the symbols are written as contiguous decimal digits
//! (`"21120"`), for larger alphabets as comma-separated integers
//! (`"3,12,0"`).

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported alphabet size.
pub const MAX_ALPHABET: u32 = 256;

/// An alphabet size `q` with `2 ≤ q ≤ 256`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u16);

impl Alphabet {
    pub fn new(q: u32) -> Result<Self> {
        if (2..=MAX_ALPHABET).contains(&q) {
            Ok(Alphabet(q as u16))
        } else {
            Err(Error::InvalidAlphabet(q))
        }
    }

    #[inline]
    pub fn size(self) -> u16 {
        self.0
    }

    /// The largest symbol, `q − 1`.
    #[inline]
    pub fn max_symbol(self) -> u8 {
        (self.0 - 1) as u8
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    /// `(a + b) mod q` for symbols already reduced mod `q`.
    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.0) as u8
    }

    /// `(a − b) mod q` for symbols already reduced mod `q`.
    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.0 - b as u16) % self.0) as u8
    }

    /// The q-ary complement `q − 1 − a`.
    #[inline]
    pub fn complement(self, a: u8) -> u8 {
        self.max_symbol() - a
    }

    /// `q^exp`, or `None` on overflow.
    pub fn checked_pow(self, exp: usize) -> Option<u64> {
        let exp = u32::try_from(exp).ok()?;
        (self.0 as u64).checked_pow(exp)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A q-ary word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl Sequence {
    /// Builds a word, checking that every symbol is below `q`.
    pub fn new(alphabet: Alphabet, symbols: Vec<u8>) -> Result<Self> {
        if let Some((position, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s as u16 >= alphabet.size())
        {
            return Err(Error::SymbolOutOfRange {
                symbol: symbol as u32,
                position,
                q: alphabet.size(),
            });
        }
        Ok(Sequence { alphabet, symbols })
    }

    /// Caller guarantees every symbol is below `q`.
    pub(crate) fn from_raw(alphabet: Alphabet, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as u16) < alphabet.size()));
        Sequence { alphabet, symbols }
    }

    pub fn zeros(alphabet: Alphabet, len: usize) -> Self {
        Sequence {
            alphabet,
            symbols: vec![0; len],
        }
    }

    /// Parses the text form: digits for `q ≤ 10`, comma-separated otherwise.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        let err = |reason: String| Error::Parse {
            text: text.to_string(),
            reason,
        };
        let symbols = if alphabet.size() <= 10 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| err(format!("{c:?} is not a decimal digit")))
                })
                .collect::<Result<Vec<_>>>()?
        } else if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|field| {
                    field
                        .trim()
                        .parse::<u8>()
                        .map_err(|e| err(format!("field {field:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Sequence::new(alphabet, symbols)
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn q(&self) -> u16 {
        self.alphabet.size()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    /// Sum of the symbols.
    pub fn weight(&self) -> u64 {
        weight_of(&self.symbols)
    }

    /// Whether the weight equals `len·(q−1)/2`.
    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.len() as u64 * self.alphabet.max_symbol() as u64
    }

    /// Symbolwise `(self + other) mod q`.
    pub fn add_mod(&self, other: &Sequence) -> Result<Sequence> {
        self.zip_with(other, |q, a, b| q.add(a, b))
    }

    /// Symbolwise `(self − other) mod q`.
    pub fn sub_mod(&self, other: &Sequence) -> Result<Sequence> {
        self.zip_with(other, |q, a, b| q.sub(a, b))
    }

    fn zip_with(&self, other: &Sequence, f: impl Fn(Alphabet, u8, u8) -> u8) -> Result<Sequence> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.q(),
                right: other.q(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let q = self.alphabet;
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .map(|(&a, &b)| f(q, a, b))
            .collect();
        Ok(Sequence::from_raw(q, symbols))
    }

    /// Concatenation of words over the same alphabet.
    pub fn concat(parts: &[&Sequence]) -> Result<Sequence> {
        let alphabet = match parts.first() {
            Some(first) => first.alphabet,
            None => {
                return Err(Error::LengthMismatch {
                    expected: 1,
                    found: 0,
                })
            }
        };
        let mut symbols = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for part in parts {
            if part.alphabet != alphabet {
                return Err(Error::AlphabetMismatch {
                    left: alphabet.size(),
                    right: part.q(),
                });
            }
            symbols.extend_from_slice(&part.symbols);
        }
        Ok(Sequence::from_raw(alphabet, symbols))
    }

    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Sequence {
        Sequence::from_raw(self.alphabet, self.symbols[range].to_vec())
    }
}

pub(crate) fn weight_of(symbols: &[u8]) -> u64 {
    symbols.iter().map(|&s| s as u64).sum()
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q() <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl AsRef<[u8]> for Sequence {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}
