//! Rank of matrices over GF(2) with bit-packed rows.

/// A row of bits, least significant bit of word 0 is column 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow(Vec<u64>);

impl BitRow {
    pub fn zeros(cols: usize) -> Self {
        BitRow(vec![0; cols.div_ceil(64)])
    }

    pub fn from_indices(cols: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut r = Self::zeros(cols);
        for i in ones {
            r.flip(i);
        }
        r
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    /// Highest set column.
    fn lead(&self) -> Option<usize> {
        self.0.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// `self ^= other` over the words up to and including `upto`.
    fn xor_prefix(&mut self, other: &BitRow, upto: usize) {
        for (a, b) in self.0[..=upto].iter_mut().zip(&other.0[..=upto]) {
            *a ^= b;
        }
    }
}

/// Rank over GF(2). Rows are reduced in input order against pivots keyed by
/// their leading column, so the result does not depend on scheduling.
pub fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
    let mut pivots: Vec<Option<BitRow>> = Vec::new();
    let mut r = 0;
    for mut row in rows {
        if pivots.is_empty() {
            pivots.resize(row.0.len() * 64, None);
        }
        while let Some(lead) = row.lead() {
            match &pivots[lead] {
                Some(p) => row.xor_prefix(p, lead / 64),
                None => {
                    pivots[lead] = Some(row);
                    r += 1;
                    break;
                }
            }
        }
    }
    r
}
