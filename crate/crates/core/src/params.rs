//! Validated code parameters.

use num_rational::Ratio;

use crate::balancing::Balancer;
use crate::codec::subset::{select_subset, SubsetSpec};
use crate::error::{Error, Result};
use crate::graycode::GrayCode;
use crate::sequence::Alphabet;

/// Gray prefix length `⌈log_q k⌉ + 1` for information length `k ≥ 1`.
pub fn prefix_length(alphabet: Alphabet, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::EmptyInformation);
    }
    let q = alphabet.size() as u64;
    let k = k as u64;
    let mut t = 0usize;
    let mut power = 1u64;
    while power < k {
        power = power.saturating_mul(q);
        t += 1;
    }
    Ok(t + 1)
}

/// Everything needed to encode and decode words of one `(q, k)` code.
///
/// Codewords have length `n = k + r′ + 1`: one free symbol `u`, an `r′`-symbol
/// Gray prefix drawn from ranks `[z1, z2]`, and the `k`-symbol payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    alphabet: Alphabet,
    k: usize,
    prefix_len: usize,
    n: usize,
    beta_n: u64,
    beta_prefix: Ratio<u64>,
    subset: SubsetSpec,
}

impl Params {
    pub fn new(q: u32, k: usize) -> Result<Self> {
        Self::with_alphabet(Alphabet::new(q)?, k)
    }

    pub fn with_alphabet(alphabet: Alphabet, k: usize) -> Result<Self> {
        let prefix_len = prefix_length(alphabet, k)?;
        let n = k
            .checked_add(prefix_len + 1)
            .ok_or(Error::Overflow("codeword length"))?;
        let max = alphabet.max_symbol() as u64;
        let twice_beta = (n as u64)
            .checked_mul(max)
            .ok_or(Error::Overflow("balancing value"))?;
        if twice_beta % 2 == 1 {
            return Err(Error::NonIntegralBalance {
                q: alphabet.size(),
                n,
                numerator: twice_beta,
            });
        }
        let subset = select_subset(alphabet, k, prefix_len)?;
        Ok(Params {
            alphabet,
            k,
            prefix_len,
            n,
            beta_n: twice_beta / 2,
            beta_prefix: Ratio::new(prefix_len as u64 * max, 2),
            subset,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> u16 {
        self.alphabet.size()
    }

    /// Information length `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Gray prefix length `r′`.
    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    /// Total redundancy `r = r′ + 1`.
    pub fn redundancy(&self) -> usize {
        self.prefix_len + 1
    }

    /// Codeword length `n = k + r′ + 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Target codeword weight `n(q−1)/2`.
    pub fn beta_n(&self) -> u64 {
        self.beta_n
    }

    /// Balancing value of the prefix alone, `r′(q−1)/2`, kept exact.
    pub fn beta_prefix(&self) -> Ratio<u64> {
        self.beta_prefix
    }

    pub fn subset(&self) -> &SubsetSpec {
        &self.subset
    }

    pub fn z1(&self) -> u64 {
        self.subset.z1
    }

    pub fn z2(&self) -> u64 {
        self.subset.z2
    }

    pub fn gray_code(&self) -> GrayCode {
        GrayCode::new(self.alphabet, self.prefix_len).expect("validated when the subset was chosen")
    }

    pub fn balancer(&self) -> Balancer {
        Balancer::new(self.alphabet, self.k).expect("validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_parameters() {
        let p = Params::new(3, 5).unwrap();
        assert_eq!(
            (p.prefix_len(), p.n(), p.beta_n(), p.z1(), p.z2()),
            (3, 9, 9, 5, 19)
        );

        let p = Params::new(3, 3).unwrap();
        assert_eq!(
            (p.prefix_len(), p.n(), p.beta_n(), p.z1(), p.z2()),
            (2, 6, 6, 0, 8)
        );

        let p = Params::new(4, 3).unwrap();
        assert_eq!(
            (p.prefix_len(), p.n(), p.beta_n(), p.z1(), p.z2()),
            (2, 6, 9, 1, 12)
        );
        assert_eq!(p.beta_prefix(), Ratio::from_integer(3));
    }

    #[test]
    fn prefix_lengths() {
        let q3 = Alphabet::new(3).unwrap();
        let lens: Vec<usize> = (1..=10).map(|k| prefix_length(q3, k).unwrap()).collect();
        assert_eq!(lens, [1, 2, 2, 3, 3, 3, 3, 3, 3, 4]);
        let q2 = Alphabet::new(2).unwrap();
        assert_eq!(prefix_length(q2, 1 << 20).unwrap(), 21);
        assert_eq!(prefix_length(q2, (1 << 20) + 1).unwrap(), 22);
    }

    #[test]
    fn half_integral_prefix_balance() {
        // q = 4, k = 6: r′ = 3 so β_r′ = 9/2.
        let p = Params::new(4, 6).unwrap();
        assert_eq!(p.prefix_len(), 3);
        assert_eq!(p.beta_prefix(), Ratio::new(9, 2));
    }

    #[test]
    fn rejections() {
        assert_eq!(Params::new(1, 3), Err(Error::InvalidAlphabet(1)));
        assert_eq!(Params::new(3, 0), Err(Error::EmptyInformation));
        assert_eq!(
            Params::new(2, 2),
            Err(Error::NonIntegralBalance {
                q: 2,
                n: 5,
                numerator: 5
            })
        );
        assert!(matches!(
            Params::new(4, 2),
            Err(Error::NonIntegralBalance { .. })
        ));
    }

    #[test]
    fn deterministic() {
        for (q, k) in [(2, 4), (3, 7), (4, 3), (6, 10), (16, 64)] {
            assert_eq!(Params::new(q, k), Params::new(q, k));
        }
    }
}
