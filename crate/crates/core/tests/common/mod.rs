#![allow(dead_code)]

use std::path::PathBuf;

use qbalance::{Alphabet, Sequence};

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Data rows of a TSV fixture, header dropped.
pub fn fixture_rows(name: &str) -> Vec<Vec<String>> {
    fixture(name)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

pub fn alphabet(q: u32) -> Alphabet {
    Alphabet::new(q).unwrap()
}

pub fn word(q: u32, text: &str) -> Sequence {
    Sequence::parse(alphabet(q), text).unwrap()
}

/// Every q-ary word of length `len`, in lexicographic order.
pub fn all_words(q: u32, len: usize) -> Vec<Sequence> {
    let mut out = Vec::new();
    let mut digits = vec![0u8; len];
    loop {
        out.push(Sequence::new(alphabet(q), digits.clone()).unwrap());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if (digits[i] as u32) < q {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// The reflected Gray listing built recursively: block `a` carries the
/// shorter listing forwards for even `a` and backwards for odd `a`.
pub fn reflected_listing(q: u8, len: usize) -> Vec<Vec<u8>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let shorter = reflected_listing(q, len - 1);
    let mut out = Vec::with_capacity(shorter.len() * q as usize);
    for a in 0..q {
        let block: Box<dyn Iterator<Item = &Vec<u8>>> = if a % 2 == 0 {
            Box::new(shorter.iter())
        } else {
            Box::new(shorter.iter().rev())
        };
        for tail in block {
            let mut w = vec![a];
            w.extend_from_slice(tail);
            out.push(w);
        }
    }
    out
}
