//! Fixed-width element sets.

use std::fmt;

/// Largest structure order representable by [`Bits`].
pub const MAX_ELEMENTS: usize = 128;

/// A set of indices below [`MAX_ELEMENTS`], stored as a single `u128`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Bits(u128);

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    #[inline]
    pub fn from_raw(raw: u128) -> Self {
        Bits(raw)
    }

    #[inline]
    pub fn raw(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        Bits(1u128 << i)
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Bits(u128::MAX)
        } else {
            Bits((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Bits) -> Bits {
        Bits(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Bits) -> Bits {
        Bits(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Bits) -> Bits {
        Bits(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Bits) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitsIter {
        BitsIter(self.0)
    }

    /// Members in ascending order.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order used for deterministic listings: by size, then by the ascending
    /// member list compared lexicographically.
    pub fn listing_cmp(self, other: Bits) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut b = Bits::EMPTY;
        for i in iter {
            b.insert(i);
        }
        b
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitsIter(u128);

impl Iterator for BitsIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitsIter {}
