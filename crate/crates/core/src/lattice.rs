//! The ambient lattice `E_k^n`: value alphabets, points, value sets and
//! dense point sets.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of logic values.
pub const MAX_K: usize = 16;

/// Largest supported number of points `k^n` in a dense table.
pub const MAX_POINTS: usize = 1 << 20;

/// The value alphabet `E_k = {0, 1, ..., k-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u8);

impl Alphabet {
    pub fn new(k: usize) -> Result<Self> {
        if (2..=MAX_K).contains(&k) {
            Ok(Alphabet(k as u8))
        } else {
            Err(Error::InvalidAlphabet(k))
        }
    }

    #[inline]
    pub fn k(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn size(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn top(self) -> u8 {
        self.0 - 1
    }

    /// The full value set `{0, ..., k-1}`.
    pub fn full(self) -> ValueSet {
        ValueSet(((1u32 << self.0) - 1) as u16)
    }

    /// `{1, ..., k-1}`.
    pub fn nonzero(self) -> ValueSet {
        ValueSet(self.full().0 & !1)
    }

    pub fn check(self, value: usize) -> Result<u8> {
        if value < self.size() {
            Ok(value as u8)
        } else {
            Err(Error::ValueOutOfRange { value, k: self.0 })
        }
    }
}

/// The shape `(k, n)` of a lattice `E_k^n`.
///
/// Points are encoded in mixed radix with `x1` as the most significant digit,
/// so index order is the lexicographic order of coordinate tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    k: Alphabet,
    n: usize,
    size: usize,
}

impl Space {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        Self::with_alphabet(Alphabet::new(k)?, n)
    }

    pub fn with_alphabet(k: Alphabet, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::precondition("at least one variable is required"));
        }
        let mut size = 1usize;
        for _ in 0..n {
            size = size
                .checked_mul(k.size())
                .filter(|&s| s <= MAX_POINTS)
                .ok_or_else(|| Error::capacity(format!("k^n = {}^{} exceeds {} points", k.k(), n, MAX_POINTS)))?;
        }
        Ok(Space { k, n, size })
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.k
    }

    #[inline]
    pub fn k(&self) -> u8 {
        self.k.k()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points, `k^n`.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn encode(&self, p: &Point) -> Result<usize> {
        self.check_point(p)?;
        Ok(self.encode_unchecked(p.coords()))
    }

    pub(crate) fn encode_unchecked(&self, coords: &[u8]) -> usize {
        let k = self.k.size();
        coords.iter().fold(0, |acc, &c| acc * k + c as usize)
    }

    pub fn decode(&self, mut index: usize) -> Point {
        debug_assert!(index < self.size);
        let k = self.k.size();
        let mut coords = vec![0u8; self.n];
        for c in coords.iter_mut().rev() {
            *c = (index % k) as u8;
            index /= k;
        }
        Point(coords)
    }

    pub fn check_point(&self, p: &Point) -> Result<()> {
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: p.dim() });
        }
        for &c in p.coords() {
            self.k.check(c as usize)?;
        }
        Ok(())
    }

    /// All points in index order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.size).map(move |i| self.decode(i))
    }

    /// Place value of coordinate `var` in the mixed-radix encoding.
    pub(crate) fn stride(&self, var: usize) -> usize {
        self.k.size().pow((self.n - 1 - var) as u32)
    }

    pub(crate) fn same_shape(&self, other: &Space) -> Result<()> {
        if self.k != other.k {
            return Err(Error::AlphabetMismatch { expected: self.k(), found: other.k() });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }
}

/// A vertex of `E_k^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<u8>);

impl Point {
    pub fn new(coords: impl Into<Vec<u8>>) -> Self {
        Point(coords.into())
    }

    #[inline]
    pub fn coords(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<u8>> for Point {
    fn from(v: Vec<u8>) -> Self {
        Point(v)
    }
}

impl<const N: usize> From<[u8; N]> for Point {
    fn from(v: [u8; N]) -> Self {
        Point(v.to_vec())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A subset of `E_k`, stored as its characteristic bit vector.
///
/// Ordering is by the bit mask read as an integer; this is the order used for
/// canonical sorting of conjunctions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueSet(u16);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);

    pub fn from_bits(bits: u16) -> Self {
        ValueSet(bits)
    }

    pub fn singleton(v: u8) -> Self {
        ValueSet(1 << v)
    }

    /// The contiguous run `[lo, hi]`; empty when `lo > hi`.
    pub fn range(lo: u8, hi: u8) -> Self {
        (lo..=hi).collect()
    }

    #[inline]
    pub fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: u8) -> bool {
        v < 16 && self.0 & (1 << v) != 0
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
    pub fn with(self, v: u8) -> Self {
        ValueSet(self.0 | (1 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ValueSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ValueSet(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn least(self) -> Option<u8> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as u8)
    }

    pub fn greatest(self) -> Option<u8> {
        (self.0 != 0).then(|| 15 - self.0.leading_zeros() as u8)
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..16u8).filter(move |&v| self.contains(v))
    }

    /// True when the members form a single run `[a, b]` with no gaps.
    pub fn is_contiguous(self) -> bool {
        match (self.least(), self.greatest()) {
            (Some(lo), Some(hi)) => self.len() == (hi - lo + 1) as usize,
            _ => false,
        }
    }

    /// True when the set is an upper interval `[a, k-1]`.
    pub fn is_upper(self, k: Alphabet) -> bool {
        self.is_contiguous() && self.greatest() == Some(k.top())
    }

    /// `J_M(x)`: `k-1` when `x` is a member, 0 otherwise.
    pub fn indicator(self, x: u8, k: Alphabet) -> Result<u8> {
        k.check(x as usize)?;
        Ok(if self.contains(x) { k.top() } else { 0 })
    }
}

impl FromIterator<u8> for ValueSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        iter.into_iter().fold(ValueSet::EMPTY, ValueSet::with)
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A dense subset of `E_k^n`, indexed by the space's point encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    space: Space,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(space: Space) -> Self {
        PointSet { space, words: vec![0; space.size().div_ceil(64)] }
    }

    pub fn full(space: Space) -> Self {
        let mut s = Self::empty(space);
        for i in 0..space.size() {
            s.insert_index(i);
        }
        s
    }

    pub fn from_points<'a>(space: Space, points: impl IntoIterator<Item = &'a Point>) -> Result<Self> {
        let mut s = Self::empty(space);
        for p in points {
            s.insert_index(space.encode(p)?);
        }
        Ok(s)
    }

    pub fn from_indices(space: Space, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(space);
        for i in indices {
            s.insert_index(i);
        }
        s
    }

    #[inline]
    pub fn space(&self) -> Space {
        self.space
    }

    #[inline]
    pub fn insert_index(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove_index(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, p: &Point) -> Result<()> {
        let i = self.space.encode(p)?;
        self.insert_index(i);
        Ok(())
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.space.encode(p).is_ok_and(|i| self.contains_index(i))
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.indices().map(|i| self.space.decode(i))
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.space, other.space);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        PointSet { space: self.space, words }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.space, other.space);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        PointSet { space: self.space, words }
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.space, other.space);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        PointSet { space: self.space, words }
    }

    pub fn complement(&self) -> PointSet {
        PointSet::full(self.space).difference(self)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_bounds() {
        assert!(Alphabet::new(1).is_err());
        assert!(Alphabet::new(17).is_err());
        let k = Alphabet::new(16).unwrap();
        assert_eq!(k.full().len(), 16);
        assert_eq!(k.nonzero().len(), 15);
    }

    #[test]
    fn space_cap() {
        assert!(Space::new(2, 20).is_ok());
        assert!(matches!(Space::new(2, 21), Err(Error::Capacity(_))));
        assert!(matches!(Space::new(16, 6), Err(Error::Capacity(_))));
    }

    #[test]
    fn mixed_radix_x1_most_significant() {
        let s = Space::new(3, 3).unwrap();
        assert_eq!(s.encode(&Point::from([0, 0, 1])).unwrap(), 1);
        assert_eq!(s.encode(&Point::from([1, 0, 0])).unwrap(), 9);
        assert_eq!(s.decode(14), Point::from([1, 1, 2]));
        for i in 0..s.size() {
            assert_eq!(s.encode(&s.decode(i)).unwrap(), i);
        }
        assert_eq!(s.stride(0), 9);
    }

    #[test]
    fn point_checks() {
        let s = Space::new(3, 2).unwrap();
        assert!(matches!(s.encode(&Point::from([0, 3])), Err(Error::ValueOutOfRange { .. })));
        assert!(matches!(s.encode(&Point::from([0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn indicator_values() {
        let k3 = Alphabet::new(3).unwrap();
        let m: ValueSet = [1, 2].into_iter().collect();
        assert_eq!(m.indicator(2, k3).unwrap(), 2);
        assert_eq!(m.indicator(0, k3).unwrap(), 0);
        assert!(m.indicator(3, k3).is_err());
        let k5 = Alphabet::new(5).unwrap();
        assert_eq!(k5.full().indicator(3, k5).unwrap(), 4);
    }

    #[test]
    fn value_set_shapes() {
        let k = Alphabet::new(4).unwrap();
        assert!(ValueSet::range(1, 3).is_upper(k));
        assert!(ValueSet::range(1, 2).is_contiguous());
        assert!(!ValueSet::range(1, 2).is_upper(k));
        let gap: ValueSet = [0, 2].into_iter().collect();
        assert!(!gap.is_contiguous());
        assert!(!ValueSet::EMPTY.is_contiguous());
        assert_eq!(gap.to_string(), "{0,2}");
    }

    #[test]
    fn point_set_ops() {
        let s = Space::new(2, 7).unwrap();
        let a = PointSet::from_indices(s, [0, 5, 64, 127]);
        let b = PointSet::from_indices(s, [5, 100]);
        assert_eq!(a.len(), 4);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.intersection(&b).indices().collect::<Vec<_>>(), vec![5]);
        assert_eq!(a.difference(&b).indices().collect::<Vec<_>>(), vec![0, 64, 127]);
        assert_eq!(a.complement().len(), 124);
        assert!(!a.is_disjoint(&b));
    }
}
