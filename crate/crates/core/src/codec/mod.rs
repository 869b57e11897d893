//! Encoder and decoder for balanced codewords `c = (u | g | y)`.
//!
//! Encoding walks the balancing indices `z = 0, 1, …, kq−1`. For each `z` the
//! payload candidate is `y = x ⊕ b_z` and the prefix is the Gray word of rank
//! `z′ = z1 + z`. The free symbol is `u = β_n − w(g) − w(y)` when that lands
//! in `{0, …, q−1}`; the first `z` for which it does is emitted.
//!
//! Decoding reads the prefix, ranks it to get `z′`, subtracts `z1` to get
//! `z`, rebuilds `b_z` and subtracts it from the payload. It needs no search
//! and no tables.

pub mod subset;
mod table;

pub use subset::{select_subset, symmetric_window, SubsetSpec};
pub use table::{enumerate_encodings, render_table, EncodingRow};

use crate::balancing::BalancingIndex;
use crate::error::{Error, Result};
use crate::graycode::GrayWord;
use crate::params::Params;
use crate::sequence::Sequence;

/// A structured codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub u: u8,
    pub prefix: GrayWord,
    pub payload: Sequence,
}

impl Codeword {
    pub fn len(&self) -> usize {
        1 + self.prefix.word.len() + self.payload.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self) -> u64 {
        self.u as u64 + self.prefix.weight() + self.payload.weight()
    }

    /// The flat word `u g₁ … g_r′ y₁ … y_k`.
    pub fn to_sequence(&self) -> Sequence {
        let alphabet = self.payload.alphabet();
        let mut symbols = Vec::with_capacity(self.len());
        symbols.push(self.u);
        symbols.extend_from_slice(self.prefix.word.symbols());
        symbols.extend_from_slice(self.payload.symbols());
        Sequence::from_raw(alphabet, symbols)
    }
}

/// Encoder output: the codeword and the balancing index that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoded {
    pub codeword: Codeword,
    pub index: BalancingIndex,
}

/// The free symbol for one row, or `None` when the gap is out of range.
pub(crate) fn free_symbol(params: &Params, prefix_weight: u64, payload_weight: u64) -> Option<u8> {
    params
        .beta_n()
        .checked_sub(prefix_weight + payload_weight)
        .filter(|&u| u <= params.alphabet().max_symbol() as u64)
        .map(|u| u as u8)
}

pub(crate) fn check_word(params: &Params, word: &Sequence, expected: usize) -> Result<()> {
    if word.alphabet() != params.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: params.q(),
            right: word.q(),
        });
    }
    if word.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: word.len(),
        });
    }
    Ok(())
}

/// Encodes `x` into the balanced codeword with the smallest balancing index.
pub fn encode(params: &Params, x: &Sequence) -> Result<Encoded> {
    check_word(params, x, params.k())?;
    let balancer = params.balancer();
    let code = params.gray_code();
    let z1 = params.z1();
    let hit = balancer
        .weights(x.symbols())
        .zip(code.weights(z1..z1 + balancer.count()))
        .find_map(|((z, wy), wg)| free_symbol(params, wg, wy).map(|u| (z, u)));
    let (z, u) = hit.ok_or(Error::EncodingFailure)?;
    let index = balancer.index(z)?;
    let payload = x.add_mod(&balancer.sequence(index))?;
    let prefix = code.unrank(z1 + z)?;
    let codeword = Codeword { u, prefix, payload };
    debug_assert_eq!(codeword.weight(), params.beta_n());
    Ok(Encoded { codeword, index })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecodeOptions {
    /// Reject words whose weight is not `β_n`.
    pub strict: bool,
}

/// Every intermediate value of one decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeTrace {
    pub u: u8,
    pub prefix: GrayWord,
    pub index: BalancingIndex,
    pub balancing: Sequence,
    pub payload: Sequence,
    pub weight: u64,
    pub message: Sequence,
}

/// Recovers the information word from a length-`n` codeword.
pub fn decode(params: &Params, word: &Sequence) -> Result<Sequence> {
    decode_with(params, word, DecodeOptions::default()).map(|t| t.message)
}

pub fn decode_with(
    params: &Params,
    word: &Sequence,
    options: DecodeOptions,
) -> Result<DecodeTrace> {
    check_word(params, word, params.n())?;
    let weight = word.weight();
    if options.strict && weight != params.beta_n() {
        return Err(Error::NotBalanced {
            weight,
            expected: params.beta_n(),
        });
    }
    let r = params.prefix_len();
    let u = word.symbols()[0];
    let prefix = params.gray_code().describe(&word.slice(1..1 + r))?;
    if !params.subset().contains(prefix.rank) {
        return Err(Error::PrefixOutOfSubset {
            rank: prefix.rank,
            z1: params.z1(),
            z2: params.z2(),
        });
    }
    let balancer = params.balancer();
    let index = balancer.index(prefix.rank - params.z1())?;
    let balancing = balancer.sequence(index);
    let payload = word.slice(1 + r..params.n());
    let message = payload.sub_mod(&balancing)?;
    Ok(DecodeTrace {
        u,
        prefix,
        index,
        balancing,
        payload,
        weight,
        message,
    })
}

/// How often each free-symbol value is chosen by the encoder over `words`.
pub fn u_histogram<'a>(
    params: &Params,
    words: impl IntoIterator<Item = &'a Sequence>,
) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; params.q() as usize];
    for x in words {
        counts[encode(params, x)?.codeword.u as usize] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Alphabet;

    fn word(q: u32, text: &str) -> Sequence {
        Sequence::parse(Alphabet::new(q).unwrap(), text).unwrap()
    }

    #[test]
    fn encode_examples() {
        let p = Params::new(3, 3).unwrap();
        let e = encode(&p, &word(3, "201")).unwrap();
        assert_eq!(e.index.z, 2);
        assert_eq!(e.codeword.to_sequence(), word(3, "202011"));
        assert_eq!(e.codeword.weight(), 6);

        let p = Params::new(3, 5).unwrap();
        let e = encode(&p, &word(3, "21120")).unwrap();
        assert_eq!(e.index.z, 0);
        assert_eq!(e.codeword.to_sequence(), word(3, "201021120"));

        let p = Params::new(4, 3).unwrap();
        let e = encode(&p, &word(4, "312")).unwrap();
        assert_eq!(e.index.z, 0);
        assert_eq!(e.codeword.to_sequence(), word(4, "201312"));
        assert_eq!(e.codeword.weight(), 9);
    }

    #[test]
    fn decode_examples() {
        let p = Params::new(3, 3).unwrap();
        let t = decode_with(&p, &word(3, "012012"), DecodeOptions::default()).unwrap();
        assert_eq!(t.prefix.rank, 3);
        assert_eq!(t.index.z, 3);
        assert_eq!(t.balancing, word(3, "111"));
        assert_eq!(t.message, word(3, "201"));

        let p = Params::new(3, 6).unwrap();
        let t = decode_with(&p, &word(3, "2100121200"), DecodeOptions::default()).unwrap();
        assert_eq!(
            (t.prefix.rank, t.index.z, t.index.s, t.index.p),
            (17, 13, 2, 1)
        );
        assert_eq!(t.balancing, word(3, "022222"));
        assert_eq!(t.message, word(3, "102011"));

        let p = Params::new(3, 4).unwrap();
        let zero = Sequence::zeros(Alphabet::new(3).unwrap(), 4);
        let c = encode(&p, &zero).unwrap().codeword.to_sequence();
        assert_eq!(decode(&p, &c).unwrap(), zero);
    }

    #[test]
    fn decode_errors() {
        let p = Params::new(3, 6).unwrap();
        // Prefix 000 has rank 0, outside [4, 21].
        assert_eq!(
            decode(&p, &word(3, "0000121200")),
            Err(Error::PrefixOutOfSubset {
                rank: 0,
                z1: 4,
                z2: 21
            })
        );
        assert!(matches!(
            decode(&p, &word(3, "210012120")),
            Err(Error::LengthMismatch { .. })
        ));

        let p = Params::new(3, 3).unwrap();
        let strict = DecodeOptions { strict: true };
        assert_eq!(
            decode_with(&p, &word(3, "000000"), strict),
            Err(Error::NotBalanced {
                weight: 0,
                expected: 6
            })
        );
        assert_eq!(decode(&p, &word(3, "000000")).unwrap(), word(3, "000"));
        assert!(decode_with(&p, &word(3, "012012"), strict).is_ok());
    }

    #[test]
    fn encode_rejects_bad_shape() {
        let p = Params::new(3, 3).unwrap();
        assert!(matches!(
            encode(&p, &word(3, "2011")),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            encode(&p, &word(4, "201")),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn histogram_counts_every_word() {
        let p = Params::new(3, 3).unwrap();
        let a = Alphabet::new(3).unwrap();
        let words: Vec<Sequence> = (0..27u8)
            .map(|v| Sequence::new(a, vec![v / 9, v / 3 % 3, v % 3]).unwrap())
            .collect();
        let h = u_histogram(&p, &words).unwrap();
        assert_eq!(h.iter().sum::<u64>(), 27);
        assert_eq!(h.len(), 3);
    }
}
