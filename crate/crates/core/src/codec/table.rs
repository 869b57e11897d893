use std::fmt::Write as _;

use super::{check_word, free_symbol, Codeword};
use crate::balancing::BalancingIndex;
use crate::error::Result;
use crate::params::Params;
use crate::sequence::Sequence;

/// One row of the full encoding table for a single information word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingRow {
    pub index: BalancingIndex,
    pub rank: u64,
    pub balancing: Sequence,
    pub payload: Sequence,
    /// `u` falls back to 0 when the weight gap is out of range.
    pub codeword: Codeword,
    pub weight: u64,
    pub balanced: bool,
}

/// All `kq` rows, built independently of the encoder's weight-only scan.
pub fn enumerate_encodings(params: &Params, x: &Sequence) -> Result<Vec<EncodingRow>> {
    check_word(params, x, params.k())?;
    let balancer = params.balancer();
    let code = params.gray_code();
    balancer
        .candidates(x)?
        .map(|cand| {
            let rank = params.z1() + cand.index.z;
            let prefix = code.unrank(rank)?;
            let u = free_symbol(params, prefix.weight(), cand.weight).unwrap_or(0);
            let codeword = Codeword {
                u,
                prefix,
                payload: cand.payload.clone(),
            };
            let weight = codeword.weight();
            Ok(EncodingRow {
                index: cand.index,
                rank,
                balancing: balancer.sequence(cand.index),
                payload: cand.payload,
                codeword,
                weight,
                balanced: weight == params.beta_n(),
            })
        })
        .collect()
}

/// Tab-separated rendering with a header line.
pub fn render_table(rows: &[EncodingRow]) -> String {
    let mut out = String::from("z\tz_prime\tb\ty\tc\tweight\tbalanced\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.index.z,
            row.rank,
            row.balancing,
            row.payload,
            row.codeword.to_sequence(),
            row.weight,
            if row.balanced { "yes" } else { "no" },
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Alphabet;

    fn balanced_rows(q: u32, k: usize, x: &str) -> Vec<u64> {
        let p = Params::new(q, k).unwrap();
        let x = Sequence::parse(Alphabet::new(q).unwrap(), x).unwrap();
        enumerate_encodings(&p, &x)
            .unwrap()
            .iter()
            .filter(|r| r.balanced)
            .map(|r| r.index.z)
            .collect()
    }

    #[test]
    fn balanced_row_sets() {
        assert_eq!(balanced_rows(3, 3, "201"), [2, 3, 4, 5, 6, 8]);
        assert_eq!(
            balanced_rows(3, 5, "21120"),
            [0, 2, 4, 5, 6, 9, 10, 11, 12, 13]
        );
        assert_eq!(balanced_rows(4, 3, "312"), [0, 2, 3, 4, 5, 7, 9, 10]);
    }

    #[test]
    fn render_layout() {
        let p = Params::new(3, 3).unwrap();
        let x = Sequence::parse(Alphabet::new(3).unwrap(), "201").unwrap();
        let text = render_table(&enumerate_encodings(&p, &x).unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 10);
        assert_eq!(lines[3], "2\t2\t110\t011\t202011\t6\tyes");
    }
}
