//! Bit-packed binary relations and element sets.
//!
//! Order relations are stored closed, one bit row per element, so that
//! `leq` queries are a single bit test and transitive closure is a
//! word-parallel Warshall pass.

/// A binary relation on `rows x cols`, one bit per pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitRel {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitRel {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        BitRel {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    /// The identity relation on `n` elements.
    pub fn identity(n: usize) -> Self {
        let mut r = BitRel::new(n, n);
        for i in 0..n {
            r.set(i, i);
        }
        r
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.words_per_row + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn union_with(&mut self, other: &BitRel) {
        debug_assert!(self.rows == other.rows && self.cols == other.cols);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= *b;
        }
    }

    /// Relational composition `self ; other` (square relations).
    pub fn compose(&self, other: &BitRel) -> BitRel {
        debug_assert!(self.cols == other.rows);
        let mut out = BitRel::new(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    let (lo, hi) = (i * out.words_per_row, (i + 1) * out.words_per_row);
                    let (jlo, jhi) = (j * other.words_per_row, (j + 1) * other.words_per_row);
                    let (dst, src) = (lo..hi, jlo..jhi);
                    for (d, s) in dst.zip(src) {
                        out.bits[d] |= other.bits[s];
                    }
                }
            }
        }
        out
    }

    /// In-place reflexive-transitive closure (square relations).
    pub fn close(&mut self) {
        debug_assert!(self.rows == self.cols);
        for i in 0..self.rows {
            self.set(i, i);
        }
        // Warshall with word-parallel row unions.
        for k in 0..self.rows {
            let krow = self.row(k).to_vec();
            for i in 0..self.rows {
                if self.get(i, k) {
                    let base = i * self.words_per_row;
                    for (w, kw) in krow.iter().enumerate() {
                        self.bits[base + w] |= kw;
                    }
                }
            }
        }
    }

    pub fn is_transitive(&self) -> bool {
        debug_assert!(self.rows == self.cols);
        for i in 0..self.rows {
            for k in 0..self.rows {
                if self.get(i, k) {
                    let irow = self.row(i);
                    let krow = self.row(k);
                    if krow.iter().zip(irow).any(|(kw, iw)| kw & !iw != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn iter_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).filter_map(move |j| self.get(i, j).then_some((i, j))))
    }
}

impl std::fmt::Debug for BitRel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_pairs()).finish()
    }
}

/// A subset of `0..len`, bit-packed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct BitSetN {
    len: usize,
    words: Vec<u64>,
}

impl BitSetN {
    pub fn empty(len: usize) -> Self {
        BitSetN {
            len,
            words: vec![0; len.div_ceil(64).max(1)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSetN::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSetN::empty(len);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn universe_len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn is_subset_of(&self, other: &BitSetN) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &BitSetN) -> BitSetN {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
        out
    }

    pub fn intersection(&self, other: &BitSetN) -> BitSetN {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
        out
    }

    pub fn complement(&self) -> BitSetN {
        let mut out = BitSetN::full(self.len);
        for (a, b) in out.words.iter_mut().zip(&self.words) {
            *a &= !*b;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }
}

impl std::fmt::Debug for BitSetN {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_reflexive_and_transitive() {
        let mut r = BitRel::new(3, 3);
        r.set(0, 1);
        r.set(1, 2);
        r.close();
        assert!(r.get(0, 2));
        assert!((0..3).all(|i| r.get(i, i)));
        assert!(r.is_transitive());
    }

    #[test]
    fn compose_matches_by_hand() {
        let mut r = BitRel::new(2, 2);
        r.set(0, 1);
        let rr = r.compose(&r);
        assert_eq!(rr.iter_pairs().count(), 0);
        let mut s = BitRel::new(2, 2);
        s.set(0, 1);
        s.set(1, 0);
        let ss = s.compose(&s);
        assert!(ss.get(0, 0) && ss.get(1, 1));
    }

    #[test]
    fn bitset_ops() {
        let a = BitSetN::from_indices(70, [0, 65]);
        let b = BitSetN::from_indices(70, [65]);
        assert!(b.is_subset_of(&a));
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![65]);
        assert_eq!(a.complement().count(), 68);
        assert_eq!(a.union(&b).count(), 2);
    }
}
