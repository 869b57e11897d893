use std::fmt::Write as _;

/// Weight as a function of an index: `(index, weight)` pairs in index order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WalkTrace {
    pub points: Vec<(u64, u64)>,
}

impl WalkTrace {
    pub fn weights(&self) -> impl Iterator<Item = u64> + '_ {
        self.points.iter().map(|&(_, w)| w)
    }

    /// Successive weight differences.
    pub fn deltas(&self) -> impl Iterator<Item = i64> + '_ {
        self.points
            .windows(2)
            .map(|w| w[1].1 as i64 - w[0].1 as i64)
    }

    /// CSV with header `z,weight`, LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("z,weight\n");
        for (z, w) in &self.points {
            let _ = writeln!(out, "{z},{w}");
        }
        out
    }
}

impl FromIterator<(u64, u64)> for WalkTrace {
    fn from_iter<I: IntoIterator<Item = (u64, u64)>>(iter: I) -> Self {
        WalkTrace {
            points: iter.into_iter().collect(),
        }
    }
}
