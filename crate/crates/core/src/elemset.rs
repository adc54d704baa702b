//! Dense sets of ring elements.
//!
//! Rings are capped at [`MAX_RING_SIZE`] elements, so a set of elements fits
//! in a fixed 256-bit block. Sets are `Copy`, hash cheaply (the enumeration
//! engine dedups millions of them) and order canonically: by cardinality
//! first, then lexicographically on the sorted member list, which is the
//! order every catalog and report uses.

pub const MAX_RING_SIZE: usize = 256;

const WORDS: usize = MAX_RING_SIZE / 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet {
    words: [u64; WORDS],
}

impl ElemSet {
    pub const fn empty() -> Self {
        ElemSet { words: [0; WORDS] }
    }

    pub fn singleton(i: u16) -> Self {
        let mut s = Self::empty();
        s.insert(i);
        s
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_RING_SIZE);
        let mut s = Self::empty();
        for i in 0..n {
            s.insert(i as u16);
        }
        s
    }

    pub fn insert(&mut self, i: u16) -> bool {
        let (w, b) = (usize::from(i) / 64, usize::from(i) % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, i: u16) {
        let (w, b) = (usize::from(i) / 64, usize::from(i) % 64);
        self.words[w] &= !(1 << b);
    }

    pub fn contains(&self, i: u16) -> bool {
        let (w, b) = (usize::from(i) / 64, usize::from(i) % 64);
        self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        out
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<u16> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<u16> {
        self.iter().next()
    }
}

pub struct Iter<'a> {
    set: &'a ElemSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = u16;

    fn next(&mut self) -> Option<u16> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
        let b = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some((self.word * 64 + b) as u16)
    }
}

impl FromIterator<u16> for ElemSet {
    fn from_iter<T: IntoIterator<Item = u16>>(iter: T) -> Self {
        let mut s = Self::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Extend<u16> for ElemSet {
    fn extend<T: IntoIterator<Item = u16>>(&mut self, iter: T) {
        for i in iter {
            self.insert(i);
        }
    }
}

impl Ord for ElemSet {
    /// Cardinality first, then lexicographic on sorted member lists; this is
    /// the canonical report order for families of sets.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = ElemSet::empty();
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(200);
        assert!(s.contains(3) && s.contains(200) && !s.contains(4));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![3, 200]);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a: ElemSet = [1u16, 3].into_iter().collect();
        let b: ElemSet = [1u16, 2, 4].into_iter().collect();
        let c: ElemSet = [1u16, 3, 5].into_iter().collect();
        assert!(a < b, "smaller sets come first");
        assert!(b < c, "equal size falls back to lex on members");
        assert_eq!(format!("{a}"), "{1, 3}");
    }

    #[test]
    fn set_algebra() {
        let a: ElemSet = [0u16, 1, 2].into_iter().collect();
        let b: ElemSet = [2u16, 3].into_iter().collect();
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersect(&b).to_vec(), vec![2]);
        assert_eq!(a.minus(&b).to_vec(), vec![0, 1]);
        assert!(a.intersects(&b));
        assert!(a.intersect(&b).is_subset(&a));
        assert!(!a.is_subset(&b));
    }
}
