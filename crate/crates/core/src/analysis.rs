//! Information length versus redundancy for this construction and for
//! earlier balancing schemes.
//!
//! Each scheme bounds the largest information length `k` that `r` redundant
//! symbols can support. Bounds built on the number of balanced words use the
//! asymptotic count `F_q^k ≈ q^k·√(6 / (π k (q²−1)))`, evaluated in the log
//! domain with the `1 + O(1/k)` factor dropped; those rows are tagged
//! `approx`. The compression-based bound with unspecified scalars is not
//! reproduced.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequence::Alphabet;

/// Largest redundancy accepted by [`redundancy_table`].
pub const MAX_REDUNDANCY: u32 = 64;

/// Natural log of the approximate number of balanced words of length `k`.
pub fn ln_balanced_cardinality(q: Alphabet, k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::EmptyInformation);
    }
    let q = q.size() as f64;
    let k = k as f64;
    Ok(k * q.ln() + 0.5 * (6.0 / (PI * k * (q * q - 1.0))).ln())
}

/// Approximate number of balanced q-ary words of length `k`.
pub fn balanced_cardinality_approx(q: Alphabet, k: u32) -> Result<f64> {
    ln_balanced_cardinality(q, k).map(f64::exp)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Parallel balancing with lookup-table prefixes: `k ≤ F_q^r / q`.
    SwartWeber,
    /// First chain-based scheme: `k ≤ (q^r − 1)/(q − 1)`.
    CapocelliA,
    /// Second chain-based scheme: `k ≤ 2(q^r − 1)/(q − 1) − r`.
    CapocelliB,
    /// Prefixless scheme: `k ≤ q^(r−1) − r`.
    Prefixless,
    /// Parallel decoding with balanced prefixes:
    /// `k ≤ (F_q^r − (q mod 2 + ((q−1)k) mod 2)) / (q − 1)`.
    Pelusi,
    /// Gray-prefix construction: `k = q^(r−2)`.
    GrayPrefix,
}

impl Scheme {
    pub const ALL: [Scheme; 6] = [
        Scheme::SwartWeber,
        Scheme::CapocelliA,
        Scheme::CapocelliB,
        Scheme::Prefixless,
        Scheme::Pelusi,
        Scheme::GrayPrefix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::SwartWeber => "swart-weber",
            Scheme::CapocelliA => "capocelli-a",
            Scheme::CapocelliB => "capocelli-b",
            Scheme::Prefixless => "prefixless",
            Scheme::Pelusi => "pelusi",
            Scheme::GrayPrefix => "this-paper",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|scheme| scheme.name() == s)
            .ok_or_else(|| Error::UnknownScheme(s.to_string()))
    }
}

/// A bound on `k`. Approximate bounds are floored to whole lengths but come
/// from the asymptotic balanced-word count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KMax {
    Exact(u128),
    Approx(f64),
}

impl KMax {
    pub fn as_f64(self) -> f64 {
        match self {
            KMax::Exact(v) => v as f64,
            KMax::Approx(v) => v,
        }
    }

    pub fn exactness(self) -> &'static str {
        match self {
            KMax::Exact(_) => "exact",
            KMax::Approx(_) => "approx",
        }
    }
}

impl fmt::Display for KMax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KMax::Exact(v) => write!(f, "{v}"),
            KMax::Approx(v) => write!(f, "{v:.0}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeBound {
    pub scheme: Scheme,
    pub q: u16,
    pub r: u32,
    pub k_max: KMax,
}

/// Result of resolving the self-referential balanced-prefix bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint {
    /// Largest integer `k` satisfying its own parity-dependent bound; may be
    /// negative when no `k ≥ 0` qualifies.
    pub k_max: f64,
    pub iterations: u32,
}

fn pow_exact(q: u16, exp: u32) -> Option<u128> {
    (q as u128).checked_pow(exp)
}

/// Largest integer `k` with `k ≤ (F_q^r − q mod 2 − ((q−1)k) mod 2)/(q−1)`.
///
/// Starts from a zero parity term, takes `⌊k⌋`, recomputes the term from it
/// and evaluates once more if the term changed.
pub fn balanced_prefix_fixed_point(q: Alphabet, r: u32) -> Result<FixedPoint> {
    let f = balanced_cardinality_approx(q, r)?;
    let qs = q.size() as u64;
    let bound = |term: u64| ((f - (qs % 2 + term) as f64) / (qs - 1) as f64).floor();
    let parity = |k: f64| {
        if k <= 0.0 || (qs - 1).is_multiple_of(2) {
            0
        } else {
            (k % 2.0) as u64
        }
    };
    let first = bound(0);
    if parity(first) == 0 {
        return Ok(FixedPoint {
            k_max: first,
            iterations: 1,
        });
    }
    // With the term set to 1 the bound drops by 1/(q−1) ≤ 1. Either ⌊k⌋ is
    // unchanged (odd, consistent) or it drops to an even value, which the
    // zero-term bound admits.
    Ok(FixedPoint {
        k_max: bound(1),
        iterations: 2,
    })
}

/// Largest information length the named scheme supports with redundancy `r`.
pub fn scheme_kmax(scheme: Scheme, q: Alphabet, r: u32) -> Result<SchemeBound> {
    let qs = q.size();
    let unsupported = || Error::UnsupportedRange {
        scheme: scheme.name(),
        q: qs,
        r,
    };
    let k_max = match scheme {
        Scheme::SwartWeber => {
            let ln = ln_balanced_cardinality(q, r).map_err(|_| unsupported())? - (qs as f64).ln();
            KMax::Approx(ln.exp().floor())
        }
        Scheme::CapocelliA => {
            let p = pow_exact(qs, r).ok_or_else(unsupported)?;
            KMax::Exact((p - 1) / (qs as u128 - 1))
        }
        Scheme::CapocelliB => {
            let p = pow_exact(qs, r).ok_or_else(unsupported)?;
            KMax::Exact((2 * ((p - 1) / (qs as u128 - 1))).saturating_sub(r as u128))
        }
        Scheme::Prefixless => {
            let p =
                pow_exact(qs, r.checked_sub(1).ok_or_else(unsupported)?).ok_or_else(unsupported)?;
            KMax::Exact(p.saturating_sub(r as u128))
        }
        Scheme::Pelusi => {
            if r == 0 {
                return Err(unsupported());
            }
            KMax::Approx(balanced_prefix_fixed_point(q, r)?.k_max)
        }
        Scheme::GrayPrefix => {
            let exp = r.checked_sub(2).ok_or_else(unsupported)?;
            KMax::Exact(pow_exact(qs, exp).ok_or_else(unsupported)?)
        }
    };
    let valid = match k_max {
        KMax::Exact(v) => v >= 1,
        KMax::Approx(v) => v.is_finite() && v >= 1.0,
    };
    if r == 0 || !valid {
        return Err(unsupported());
    }
    Ok(SchemeBound {
        scheme,
        q: qs,
        r,
        k_max,
    })
}

/// Every scheme for `r = 1..=r_max`; `(scheme, r)` pairs a bound does not
/// cover (k below 1, or beyond 128-bit range) are left out.
pub fn redundancy_table(q: Alphabet, r_max: u32) -> Result<Vec<SchemeBound>> {
    if r_max > MAX_REDUNDANCY {
        return Err(Error::SizeGuardExceeded {
            size: r_max as u64,
            limit: MAX_REDUNDANCY as u64,
        });
    }
    let mut rows = Vec::new();
    for scheme in Scheme::ALL {
        for r in 1..=r_max {
            match scheme_kmax(scheme, q, r) {
                Ok(bound) => rows.push(bound),
                Err(Error::UnsupportedRange { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(rows)
}

/// CSV with header `scheme,q,r,kmax,exactness`, preceded by `#` comment lines.
pub fn render_csv(rows: &[SchemeBound]) -> String {
    let mut out = String::new();
    out.push_str(
        "# approx rows use the asymptotic balanced-word count without its 1+O(1/k) factor\n",
    );
    out.push_str("# pelusi resolves the k-dependent parity term by fixed-point iteration\n");
    out.push_str("# the compression-based bound with unspecified scalars is omitted\n");
    out.push_str("scheme,q,r,kmax,exactness\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.scheme,
            row.q,
            row.r,
            row.k_max,
            row.k_max.exactness()
        );
    }
    out
}
