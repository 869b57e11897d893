//! Non-binary Gray codes with unit weight steps.
//!
//! The `(r, q)`-Gray code used here maps the `q^r` words of length `r`, taken
//! in lexicographic order, to an ordering in which neighbours differ in
//! exactly one position and their weights differ by exactly one.
//!
//! The map is a left-to-right scan. The first symbol is copied. Every later
//! symbol is copied when the sum of the Gray symbols already emitted is even
//! and replaced by its complement `q − 1 − d` when that sum is odd. Decoding
//! runs the same scan over the Gray symbols, so both directions cost `O(r)`
//! and need no tables.

use crate::error::{Error, Result};
use crate::sequence::{Alphabet, Sequence};
use crate::walk::WalkTrace;

/// Largest code size [`GrayCode::walk`] will enumerate.
pub const WALK_GUARD: u64 = 1 << 20;

/// Lexicographic digits to Gray symbols.
pub fn encode_digits(alphabet: Alphabet, digits: &[u8]) -> Vec<u8> {
    let mut odd = false;
    digits
        .iter()
        .map(|&d| {
            let g = if odd { alphabet.complement(d) } else { d };
            odd ^= g & 1 == 1;
            g
        })
        .collect()
}

/// Gray symbols back to lexicographic digits.
pub fn decode_digits(alphabet: Alphabet, gray: &[u8]) -> Vec<u8> {
    let mut odd = false;
    gray.iter()
        .map(|&g| {
            let d = if odd { alphabet.complement(g) } else { g };
            odd ^= g & 1 == 1;
            d
        })
        .collect()
}

pub fn gray_encode(digits: &Sequence) -> Sequence {
    Sequence::from_raw(
        digits.alphabet(),
        encode_digits(digits.alphabet(), digits.symbols()),
    )
}

pub fn gray_decode(gray: &Sequence) -> Sequence {
    Sequence::from_raw(
        gray.alphabet(),
        decode_digits(gray.alphabet(), gray.symbols()),
    )
}

/// A Gray word together with its rank and lexicographic digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayWord {
    pub rank: u64,
    pub digits: Sequence,
    pub word: Sequence,
}

impl GrayWord {
    pub fn weight(&self) -> u64 {
        self.word.weight()
    }
}

/// The `(len, q)`-Gray code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrayCode {
    alphabet: Alphabet,
    len: usize,
    size: u64,
}

impl GrayCode {
    pub fn new(alphabet: Alphabet, len: usize) -> Result<Self> {
        let size = alphabet
            .checked_pow(len)
            .ok_or(Error::Overflow("Gray code size exceeds 64 bits"))?;
        Ok(GrayCode {
            alphabet,
            len,
            size,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of words, `q^len`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Most-significant-first base-q digits of `rank`.
    pub fn digits_of(&self, rank: u64) -> Result<Sequence> {
        if rank >= self.size {
            return Err(Error::IndexOutOfRange {
                index: rank,
                bound: self.size,
            });
        }
        let q = self.alphabet.size() as u64;
        let mut digits = vec![0u8; self.len];
        let mut v = rank;
        for slot in digits.iter_mut().rev() {
            *slot = (v % q) as u8;
            v /= q;
        }
        Ok(Sequence::from_raw(self.alphabet, digits))
    }

    pub fn unrank(&self, rank: u64) -> Result<GrayWord> {
        let digits = self.digits_of(rank)?;
        let word = gray_encode(&digits);
        Ok(GrayWord { rank, digits, word })
    }

    /// Rank of a Gray word; the inverse of [`GrayCode::unrank`].
    pub fn rank(&self, word: &Sequence) -> Result<u64> {
        self.check(word)?;
        let q = self.alphabet.size() as u64;
        Ok(decode_digits(self.alphabet, word.symbols())
            .into_iter()
            .fold(0u64, |acc, d| acc * q + d as u64))
    }

    /// Decodes a Gray word into its full [`GrayWord`] description.
    pub fn describe(&self, word: &Sequence) -> Result<GrayWord> {
        let rank = self.rank(word)?;
        Ok(GrayWord {
            rank,
            digits: gray_decode(word),
            word: word.clone(),
        })
    }

    fn check(&self, word: &Sequence) -> Result<()> {
        if word.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.size(),
                right: word.q(),
            });
        }
        if word.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: word.len(),
            });
        }
        Ok(())
    }

    /// All words in rank order.
    pub fn iter(&self) -> impl Iterator<Item = GrayWord> + '_ {
        (0..self.size).map(move |z| self.unrank(z).expect("rank below size"))
    }

    /// Weights of the words with ranks in `range`, in rank order.
    pub(crate) fn weights(&self, range: std::ops::Range<u64>) -> impl Iterator<Item = u64> + '_ {
        range.map(move |z| self.unrank(z).expect("rank below size").weight())
    }

    /// The `(rank, weight)` walk over the whole code.
    pub fn walk(&self) -> Result<WalkTrace> {
        if self.size > WALK_GUARD {
            return Err(Error::SizeGuardExceeded {
                size: self.size,
                limit: WALK_GUARD,
            });
        }
        Ok((0..self.size).zip(self.weights(0..self.size)).collect())
    }
}
