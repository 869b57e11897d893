//! Balancing sequences and the exhaustive payload balancer.
//!
//! For an information length `k` over a q-ary alphabet there are `kq`
//! balancing sequences `b_z`, indexed by `z = s·k + p` with `0 ≤ s < q` and
//! `0 ≤ p < k`. The sequence `b_z` holds `(s + 1) mod q` in its first `p`
//! positions and `s` everywhere else, so `b_0` is all zeros and consecutive
//! indices differ in a single position, whose symbol goes up by one mod `q`.
//!
//! Adding `b_z` to a payload `x` symbolwise mod `q` therefore moves the
//! payload weight by `+1` or `−(q−1)` per step of `z`: the weights of the
//! candidates `y_z = x ⊕ b_z` form a `(1, q−1)` random walk.

use crate::error::{Error, Result};
use crate::sequence::{Alphabet, Sequence};
use crate::walk::WalkTrace;

/// A balancing index `z` with its decomposition `z = s·k + p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BalancingIndex {
    pub z: u64,
    pub s: u8,
    pub p: usize,
}

/// Balancing sequences for payloads of length `k` over one alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Balancer {
    alphabet: Alphabet,
    k: usize,
}

/// One payload candidate `y_z = x ⊕ b_z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub index: BalancingIndex,
    pub payload: Sequence,
    pub weight: u64,
}

impl Balancer {
    pub fn new(alphabet: Alphabet, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyInformation);
        }
        (k as u64)
            .checked_mul(alphabet.size() as u64)
            .ok_or(Error::Overflow("kq exceeds 64 bits"))?;
        Ok(Balancer { alphabet, k })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of balancing sequences, `kq`.
    pub fn count(&self) -> u64 {
        self.k as u64 * self.alphabet.size() as u64
    }

    pub fn index(&self, z: u64) -> Result<BalancingIndex> {
        if z >= self.count() {
            return Err(Error::IndexOutOfRange {
                index: z,
                bound: self.count(),
            });
        }
        let k = self.k as u64;
        Ok(BalancingIndex {
            z,
            s: (z / k) as u8,
            p: (z % k) as usize,
        })
    }

    pub fn sequence(&self, index: BalancingIndex) -> Sequence {
        let lead = self.alphabet.add(index.s, 1);
        let mut symbols = vec![index.s; self.k];
        symbols[..index.p].fill(lead);
        Sequence::from_raw(self.alphabet, symbols)
    }

    /// `b_z` for a raw index.
    pub fn sequence_at(&self, z: u64) -> Result<Sequence> {
        Ok(self.sequence(self.index(z)?))
    }

    fn check(&self, x: &Sequence) -> Result<()> {
        if x.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.size(),
                right: x.q(),
            });
        }
        if x.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Lazily enumerates the `kq` candidates in increasing `z`.
    pub fn candidates(&self, x: &Sequence) -> Result<Candidates> {
        self.check(x)?;
        Ok(Candidates {
            balancer: *self,
            current: x.symbols().to_vec(),
            weight: x.weight(),
            next: 0,
        })
    }

    /// The `(z, w(y_z))` walk for payload `x`.
    pub fn walk(&self, x: &Sequence) -> Result<WalkTrace> {
        self.check(x)?;
        Ok(self.weights(x.symbols()).collect())
    }

    /// `(z, w(y_z))` for all `z`, without materialising any payload.
    pub(crate) fn weights<'a>(&self, x: &'a [u8]) -> impl Iterator<Item = (u64, u64)> + 'a {
        let q = self.alphabet;
        let k = self.k;
        let mut y = x.to_vec();
        let mut weight = crate::sequence::weight_of(x);
        (0..self.count()).map(move |z| {
            let current = weight;
            step(q, &mut y, &mut weight, (z % k as u64) as usize);
            (z, current)
        })
    }
}

/// Advances `y_z` to `y_{z+1}`: the symbol at `p = z mod k` goes up by one mod `q`.
#[inline]
fn step(q: Alphabet, y: &mut [u8], weight: &mut u64, p: usize) {
    let old = y[p];
    let new = q.add(old, 1);
    y[p] = new;
    *weight = *weight + new as u64 - old as u64;
}

/// Iterator returned by [`Balancer::candidates`].
#[derive(Debug, Clone)]
pub struct Candidates {
    balancer: Balancer,
    current: Vec<u8>,
    weight: u64,
    next: u64,
}

impl Iterator for Candidates {
    type Item = Candidate;

    fn next(&mut self) -> Option<Candidate> {
        if self.next >= self.balancer.count() {
            return None;
        }
        let index = self.balancer.index(self.next).expect("z below kq");
        let item = Candidate {
            index,
            payload: Sequence::from_raw(self.balancer.alphabet, self.current.clone()),
            weight: self.weight,
        };
        step(
            self.balancer.alphabet,
            &mut self.current,
            &mut self.weight,
            index.p,
        );
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.balancer.count() - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Candidates {}
