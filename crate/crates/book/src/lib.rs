//! The guide in `book/`, compiled so that its code listings run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/sequences.md")]
pub mod sequences {}

#[doc = include_str!("../../../book/src/balancing.md")]
pub mod balancing {}

#[doc = include_str!("../../../book/src/gray_codes.md")]
pub mod gray_codes {}

#[doc = include_str!("../../../book/src/subsets.md")]
pub mod subsets {}

#[doc = include_str!("../../../book/src/codec.md")]
pub mod codec {}

#[doc = include_str!("../../../book/src/redundancy.md")]
pub mod redundancy {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub mod readme {}
