//! Balanced encoding of q-ary words with Gray-code prefixes.
//!
//! An information word `x` of length `k` over `{0, …, q−1}` is mapped to a
//! codeword `c = (u | g | y)` of length `n = k + r′ + 1` whose symbol sum is
//! exactly `n(q−1)/2`:
//!
//! * `y = x ⊕ b_z` is the payload shifted by one of `kq` step-shaped
//!   balancing sequences ([`balancing`]),
//! * `g` is the non-binary Gray word ([`graycode`]) of rank `z1 + z`, taken
//!   from a window of ranks whose mean weight sits at the prefix midpoint
//!   ([`codec::subset`]),
//! * `u` is one free symbol that absorbs the remaining gap.
//!
//! Decoding reads `g`, ranks it, and undoes the shift. Neither direction
//! uses lookup tables.
//!
//! ```
//! use qbalance::{decode, encode, Params, Sequence};
//!
//! let params = Params::new(3, 5)?;
//! let x = Sequence::parse(params.alphabet(), "21120")?;
//! let encoded = encode(&params, &x)?;
//! let c = encoded.codeword.to_sequence();
//! assert_eq!(c.to_string(), "201021120");
//! assert_eq!(c.weight(), params.beta_n());
//! assert_eq!(decode(&params, &c)?, x);
//! # Ok::<(), qbalance::Error>(())
//! ```

pub mod analysis;
pub mod balancing;
pub mod codec;
mod error;
pub mod graycode;
mod params;
pub mod sequence;
mod walk;

pub use balancing::{Balancer, BalancingIndex, Candidate};
pub use codec::{
    decode, decode_with, encode, enumerate_encodings, render_table, u_histogram, Codeword,
    DecodeOptions, DecodeTrace, Encoded, EncodingRow, SubsetSpec,
};
pub use error::{Error, ErrorClass, Result};
pub use graycode::{gray_decode, gray_encode, GrayCode, GrayWord};
pub use params::{prefix_length, Params};
pub use sequence::{Alphabet, Sequence};
pub use walk::WalkTrace;
