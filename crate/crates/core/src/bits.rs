//! Growable square bit matrix used by chain internals for relation rows.

#[derive(Debug, Clone, Default)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn new() -> Self {
        BitMatrix::default()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Appends one element; the new row and column start empty.
    pub fn push_element(&mut self) -> usize {
        let idx = self.n;
        self.n += 1;
        let needed = self.n.div_ceil(64);
        if needed > self.words {
            self.words = needed;
            for row in &mut self.rows {
                row.resize(self.words, 0);
            }
        }
        self.rows.push(vec![0; self.words]);
        idx
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i][j / 64] |= 1 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    /// `rows[i] |= rows[j]` (used for down/up-set accumulation).
    pub fn or_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = if src < dst {
            let (lo, hi) = self.rows.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        } else {
            let (lo, hi) = self.rows.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        };
        for (d, s) in b.iter_mut().zip(a.iter()) {
            *d |= *s;
        }
    }

    pub fn row_indices(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i]
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter { bits, base: w * 64 })
    }
}

struct BitIter {
    bits: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let tz = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.base + tz)
    }
}

/// Fixed-size bitmask over chain indices, for subset tests against rows.
pub(crate) fn make_mask(words: usize, indices: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for i in indices {
        mask[i / 64] |= 1 << (i % 64);
    }
    mask
}

/// `row & mask == expected` restricted to `words` words.
pub(crate) fn masked_eq(row: &[u64], mask: &[u64], expected: &[u64]) -> bool {
    mask.iter()
        .zip(expected)
        .enumerate()
        .all(|(w, (&m, &e))| (row.get(w).copied().unwrap_or(0) & m) == e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grows_across_word_boundaries() {
        let mut m = BitMatrix::new();
        for _ in 0..70 {
            m.push_element();
        }
        m.set(0, 69);
        m.set(69, 1);
        assert!(m.get(0, 69));
        assert!(m.get(69, 1));
        assert!(!m.get(1, 69));
        assert_eq!(m.row_indices(0).collect::<Vec<_>>(), vec![69]);
    }

    #[test]
    fn masked_subset_check() {
        let mut m = BitMatrix::new();
        for _ in 0..5 {
            m.push_element();
        }
        m.set(2, 0);
        m.set(2, 3);
        let mask = make_mask(1, [0, 1, 3]);
        let expected = make_mask(1, [0, 3]);
        assert!(masked_eq(m.row(2), &mask, &expected));
        let wrong = make_mask(1, [0]);
        assert!(!masked_eq(m.row(2), &mask, &wrong));
    }
}
