//! Small growable bitmask used for order relations and element sets.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mask {
    len: usize,
    bits: Vec<u64>,
}

impl Mask {
    pub fn empty(len: usize) -> Self {
        Mask {
            len,
            bits: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Mask::empty(len);
        for i in 0..len {
            m.set(i);
        }
        m
    }

    pub fn single(len: usize, i: usize) -> Self {
        let mut m = Mask::empty(len);
        m.set(i);
        m
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.bits[i / WORD] |= 1 << (i % WORD);
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.bits[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn intersect_with(&mut self, other: &Mask) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Mask) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &Mask) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl FromIterator<usize> for Mask {
    /// Collects indices into a mask sized to fit the largest one; callers
    /// that need a fixed length should use `empty(len)` + `set`.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let len = items.iter().max().map_or(0, |m| m + 1);
        let mut mask = Mask::empty(len);
        for i in items {
            mask.set(i);
        }
        mask
    }
}
