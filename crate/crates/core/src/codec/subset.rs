//! Choosing which `kq` Gray prefixes carry the balancing indices.
//!
//! Only `kq` of the `q^r′` Gray words are needed. The encoder relies on the
//! chosen words having an average weight at (or within half a unit of) the
//! prefix balancing value `β_r′ = r′(q−1)/2`, so that together with the
//! payload average `k(q−1)/2` and the free symbol `u` the codeword walk is
//! forced through `β_n`.
//!
//! * When `kq = q^r′` every word is used.
//! * For odd `q` the Gray walk is point-symmetric about rank `⌊q^r′/2⌋`, and a
//!   window around that centre is taken directly.
//! * For even `q` there is no such symmetry, and a window of length `kq` is
//!   slid over the walk until its mean is closest to `β_r′`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graycode::GrayCode;
use crate::sequence::Alphabet;

/// An inclusive window `[z1, z2]` of Gray ranks and its exact mean weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetSpec {
    pub z1: u64,
    pub z2: u64,
    pub mean_weight: Ratio<u64>,
}

impl SubsetSpec {
    pub fn len(&self) -> u64 {
        self.z2 - self.z1 + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, rank: u64) -> bool {
        (self.z1..=self.z2).contains(&rank)
    }

    /// `|mean − target|`, exactly.
    pub fn distance_to(&self, target: Ratio<u64>) -> Ratio<u64> {
        if self.mean_weight >= target {
            self.mean_weight - target
        } else {
            target - self.mean_weight
        }
    }
}

struct Layout {
    code: GrayCode,
    size: u64,
    count: u64,
}

fn layout(alphabet: Alphabet, k: usize, prefix_len: usize) -> Result<Layout> {
    if k == 0 {
        return Err(Error::EmptyInformation);
    }
    let code = GrayCode::new(alphabet, prefix_len)?;
    let size = code.size();
    let count = (k as u64)
        .checked_mul(alphabet.size() as u64)
        .ok_or(Error::Overflow("kq exceeds 64 bits"))?;
    if count > size {
        return Err(Error::SubsetNotFound {
            len: count,
            available: size,
        });
    }
    Ok(Layout { code, size, count })
}

fn window(code: &GrayCode, z1: u64, count: u64) -> SubsetSpec {
    let sum: u64 = code.weights(z1..z1 + count).sum();
    SubsetSpec {
        z1,
        z2: z1 + count - 1,
        mean_weight: Ratio::new(sum, count),
    }
}

/// Every word is used. The Gray map is a bijection, so each position is
/// uniform over the alphabet and the mean weight is exactly `r′(q−1)/2`.
fn full_range(code: &GrayCode) -> SubsetSpec {
    SubsetSpec {
        z1: 0,
        z2: code.size() - 1,
        mean_weight: Ratio::new(code.len() as u64 * code.alphabet().max_symbol() as u64, 2),
    }
}

/// The prefix window used by the codec for `(q, k, r′)`.
///
/// For odd `q` the window starts at `⌊q^r′/2⌋ − ⌈kq/2⌉`, which puts the
/// centre rank at the right-hand side of the middle pair when `kq` is even
/// and one place right of the middle when `kq` is odd. For even `q` the
/// first window (smallest `z1`) minimising `|mean − β_r′|` is taken.
pub fn select_subset(alphabet: Alphabet, k: usize, prefix_len: usize) -> Result<SubsetSpec> {
    let Layout { code, size, count } = layout(alphabet, k, prefix_len)?;
    if count == size {
        return Ok(full_range(&code));
    }
    if alphabet.is_odd() {
        let z1 = size / 2 - count.div_ceil(2);
        return Ok(window(&code, z1, count));
    }
    Ok(sliding_window(&code, size, count))
}

/// Exact-rational sliding search; ties go to the smallest `z1`.
fn sliding_window(code: &GrayCode, size: u64, count: u64) -> SubsetSpec {
    // Compare 2·sum against count·r′(q−1) to stay in integers.
    let target = count * code.len() as u64 * code.alphabet().max_symbol() as u64;
    let mut sum: u64 = code.weights(0..count).sum();
    let mut best = ((2 * sum).abs_diff(target), 0u64);
    let leaving = code.weights(0..size - count);
    let entering = code.weights(count..size);
    for (z1, (out, inn)) in (1..).zip(leaving.zip(entering)) {
        if best.0 == 0 {
            break;
        }
        sum = sum + inn - out;
        let dist = (2 * sum).abs_diff(target);
        if dist < best.0 {
            best = (dist, z1);
        }
    }
    window(code, best.1, count)
}

/// The symmetric window about `⌊q^r′/2⌋` for odd `q`.
///
/// `z1 = ⌊q^r′/2⌋ − ⌊kq/2⌋`, and `z2 = ⌊q^r′/2⌋ + ⌊kq/2⌋` for odd `k` or
/// `⌊q^r′/2⌋ + kq/2 − 1` for even `k`. Odd `k` gives a mean of exactly
/// `β_r′`; even `k` gives a mean that rounds to it. Returns `None` for even
/// `q`, where the walk has no centre of symmetry.
pub fn symmetric_window(
    alphabet: Alphabet,
    k: usize,
    prefix_len: usize,
) -> Result<Option<SubsetSpec>> {
    if !alphabet.is_odd() {
        return Ok(None);
    }
    let Layout { code, size, count } = layout(alphabet, k, prefix_len)?;
    if count == size {
        return Ok(Some(full_range(&code)));
    }
    let centre = size / 2;
    let z1 = centre - count / 2;
    Ok(Some(window(&code, z1, count)))
}
