//! Bit-packed elimination over GF(2).

/// Rows packed into 64-bit words, bit `j % 64` of word `j / 64` holding column `j`.
pub(crate) struct BitRows {
    words: usize,
    data: Vec<u64>,
    rows: usize,
}

impl BitRows {
    pub(crate) fn from_values(rows: usize, cols: usize, values: &[u32]) -> BitRows {
        let words = cols.div_ceil(64).max(1);
        let mut data = vec![0u64; rows * words];
        for i in 0..rows {
            for j in 0..cols {
                if values[i * cols + j] & 1 == 1 {
                    data[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        BitRows { words, data, rows }
    }

    /// In-place elimination; returns the rank.
    pub(crate) fn rank(mut self) -> usize {
        let w = self.words;
        let mut rank = 0;
        for word in 0..w {
            for bit in 0..64 {
                let mask = 1u64 << bit;
                let Some(piv) = (rank..self.rows).find(|&r| self.data[r * w + word] & mask != 0) else {
                    continue;
                };
                if piv != rank {
                    for k in 0..w {
                        self.data.swap(piv * w + k, rank * w + k);
                    }
                }
                for r in rank + 1..self.rows {
                    if self.data[r * w + word] & mask != 0 {
                        for k in word..w {
                            let v = self.data[rank * w + k];
                            self.data[r * w + k] ^= v;
                        }
                    }
                }
                rank += 1;
                if rank == self.rows {
                    return rank;
                }
            }
        }
        rank
    }
}

/// Rank of a matrix whose rows fit in a single word each.
#[inline]
pub(crate) fn rank_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    let n = rows.len();
    while rank < n {
        // pivot on the lowest set bit of any remaining row
        let Some(piv) = (rank..n).find(|&r| rows[r] != 0) else {
            break;
        };
        rows.swap(piv, rank);
        let low = rows[rank] & rows[rank].wrapping_neg();
        for r in rank + 1..n {
            if rows[r] & low != 0 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}
