//! Fixed-capacity vertex bitsets.
//!
//! Every set of vertices in the crate (neighborhoods, dominating sets,
//! monomial supports, simplicial faces) is a [`VertexSet`]. The capacity is
//! [`MAX_VERTICES`] = 128, stored in two machine words.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count any graph may have.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices in `0..128`.
///
/// Sets are ordered lexicographically by their ascending element sequence:
/// `{0, 1, 5} < {0, 2}` and `{0, 1} < {0, 1, 5}`. This is the order used
/// for every tie-break on witnesses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; 2],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0, 0] };

    pub const fn new() -> Self {
        Self::EMPTY
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds capacity");
        let lo = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        let hi = if n >= 128 {
            u64::MAX
        } else if n > 64 {
            (1u64 << (n - 64)) - 1
        } else {
            0
        };
        VertexSet { words: [lo, hi] }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// Builds a set from the low bits of `mask`.
    pub fn from_bits(mask: u128) -> Self {
        VertexSet {
            words: [mask as u64, (mask >> 64) as u64],
        }
    }

    pub fn bits(&self) -> u128 {
        (self.words[0] as u128) | ((self.words[1] as u128) << 64)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds capacity");
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.words[v >> 6] &= !(1u64 << (v & 63));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        (self.words[0].count_ones() + self.words[1].count_ones()) as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words == [0, 0]
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words[0] & !other.words[0] == 0 && self.words[1] & !other.words[1] == 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words[0] & other.words[0] == 0 && self.words[1] & other.words[1] == 0
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        *self | *other
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        *self & *other
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        *self - *other
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::full(n) - *self
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        if self.words[0] != 0 {
            Some(self.words[0].trailing_zeros() as usize)
        } else if self.words[1] != 0 {
            Some(64 + self.words[1].trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        if self.words[1] != 0 {
            Some(127 - self.words[1].leading_zeros() as usize)
        } else if self.words[0] != 0 {
            Some(63 - self.words[0].leading_zeros() as usize)
        } else {
            None
        }
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { words: self.words }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels every element `v` as `map[v]`.
    pub fn map(&self, map: &[usize]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

pub struct Iter {
    words: [u64; 2],
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        for (i, w) in self.words.iter_mut().enumerate() {
            if *w != 0 {
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(i * 64 + bit);
            }
        }
        None
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.words[0].count_ones() + self.words[1].count_ones()) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = *self ^ *other;
        let Some(x) = diff.first() else {
            return Ordering::Equal;
        };
        // The ascending sequences agree below x. The set holding x is
        // smaller unless the other one has run out of elements.
        let (rest, ord) = if self.contains(x) {
            (other, Ordering::Less)
        } else {
            (self, Ordering::Greater)
        };
        match rest.last() {
            Some(m) if m > x => ord,
            _ => ord.reverse(),
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            words: [self.words[0] ^ rhs.words[0], self.words[1] ^ rhs.words[1]],
        }
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            words: [self.words[0] | rhs.words[0], self.words[1] | rhs.words[1]],
        }
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.words[0] |= rhs.words[0];
        self.words[1] |= rhs.words[1];
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            words: [self.words[0] & rhs.words[0], self.words[1] & rhs.words[1]],
        }
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.words[0] &= rhs.words[0];
        self.words[1] &= rhs.words[1];
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            words: [self.words[0] & !rhs.words[0], self.words[1] & !rhs.words[1]],
        }
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.words[0] &= !rhs.words[0];
        self.words[1] &= !rhs.words[1];
    }
}

/// Complement within the full 128-element capacity. Prefer
/// [`VertexSet::complement`] when a vertex count is known.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet {
            words: [!self.words[0], !self.words[1]],
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as an ascending array of vertex indices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds capacity {MAX_VERTICES}"
            )));
        }
        Ok(items.into_iter().collect())
    }
}
