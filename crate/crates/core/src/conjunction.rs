//! Intervals (sublattices), elementary conjunctions and DNFs.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Alphabet, Point, PointSet, Space, ValueSet};

/// Visits the encoded index of every point of `factors` in index order.
/// Stops early and returns `false` as soon as `visit` returns `false`.
pub(crate) fn for_each_index(space: Space, factors: &[ValueSet], mut visit: impl FnMut(usize) -> bool) -> bool {
    let members: Vec<Vec<u8>> = factors.iter().map(|m| m.iter().collect()).collect();
    if members.iter().any(Vec::is_empty) {
        return true;
    }
    let strides: Vec<usize> = (0..factors.len()).map(|j| space.stride(j)).collect();
    let mut digit = vec![0usize; factors.len()];
    loop {
        let index = digit.iter().zip(&members).zip(&strides).map(|((&d, m), &s)| m[d] as usize * s).sum();
        if !visit(index) {
            return false;
        }
        // odometer, last variable fastest
        let mut j = factors.len();
        loop {
            if j == 0 {
                return true;
            }
            j -= 1;
            digit[j] += 1;
            if digit[j] < members[j].len() {
                break;
            }
            digit[j] = 0;
        }
    }
}

/// A sublattice `M_1 x ... x M_n` of `E_k^n` with every factor nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    k: Alphabet,
    factors: Vec<ValueSet>,
}

impl Interval {
    pub fn new(k: Alphabet, factors: Vec<ValueSet>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::precondition("an interval needs at least one factor"));
        }
        Space::with_alphabet(k, factors.len())?;
        for (var, m) in factors.iter().enumerate() {
            if m.is_empty() {
                return Err(Error::EmptyFactor { var: var + 1 });
            }
            if !m.is_subset(k.full()) {
                return Err(Error::ValueOutOfRange { value: m.greatest().unwrap_or(0) as usize, k: k.k() });
            }
        }
        Ok(Interval { k, factors })
    }

    /// The whole lattice.
    pub fn full(space: Space) -> Self {
        Interval { k: space.alphabet(), factors: vec![space.alphabet().full(); space.n()] }
    }

    /// The one-point interval `{p}`.
    pub fn singleton(space: Space, p: &Point) -> Result<Self> {
        space.check_point(p)?;
        Ok(Interval { k: space.alphabet(), factors: p.coords().iter().map(|&c| ValueSet::singleton(c)).collect() })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.k
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[ValueSet] {
        &self.factors
    }

    pub fn factor(&self, var: usize) -> ValueSet {
        self.factors[var]
    }

    pub fn space(&self) -> Space {
        // shape is validated in `Interval::new`
        Space::with_alphabet(self.k, self.n()).expect("interval shape within caps")
    }

    /// Number of points, `prod |M_j|`.
    pub fn size(&self) -> usize {
        self.factors.iter().map(|m| m.len()).product()
    }

    pub fn is_full_factor(&self, var: usize) -> bool {
        self.factors[var] == self.k.full()
    }

    /// Variables with a non-full factor.
    pub fn dependent_vars(&self) -> Vec<usize> {
        (0..self.n()).filter(|&j| !self.is_full_factor(j)).collect()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.n() && self.factors.iter().zip(p.coords()).all(|(m, &c)| m.contains(c))
    }

    pub(crate) fn contains_coords(&self, coords: &[u8]) -> bool {
        self.factors.iter().zip(coords).all(|(m, &c)| m.contains(c))
    }

    /// `points(self) ⊆ points(other)`.
    pub fn is_subset(&self, other: &Interval) -> bool {
        self.factors.len() == other.factors.len()
            && self.factors.iter().zip(&other.factors).all(|(a, b)| a.is_subset(*b))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.factors.len() == other.factors.len()
            && self.factors.iter().zip(&other.factors).all(|(a, b)| !a.intersection(*b).is_empty())
    }

    /// Copy with `value` added to the factor of `var`.
    pub fn enlarged(&self, var: usize, value: u8) -> Interval {
        let mut factors = self.factors.clone();
        factors[var] = factors[var].with(value);
        Interval { k: self.k, factors }
    }

    pub fn indices(&self, space: Space) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for_each_index(space, &self.factors, |i| {
            out.push(i);
            true
        });
        out
    }

    /// Explicit point set, in index order.
    pub fn points(&self) -> Vec<Point> {
        let space = self.space();
        self.indices(space).into_iter().map(|i| space.decode(i)).collect()
    }

    pub fn to_point_set(&self, space: Space) -> PointSet {
        PointSet::from_indices(space, self.indices(space))
    }

    pub fn is_inside(&self, set: &PointSet) -> bool {
        for_each_index(set.space(), &self.factors, |i| set.contains_index(i))
    }

    pub fn intersects_set(&self, set: &PointSet) -> bool {
        !for_each_index(set.space(), &self.factors, |i| !set.contains_index(i))
    }
}

/// `min[J_{M_1}(x_1), ..., J_{M_n}(x_n), gamma]`: takes the value `gamma` on
/// its interval and 0 elsewhere.
///
/// Ordering (gamma first, then factor masks) is the canonical term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryConjunction {
    gamma: u8,
    interval: Interval,
}

impl ElementaryConjunction {
    pub fn new(interval: Interval, gamma: u8) -> Result<Self> {
        if gamma == 0 {
            return Err(Error::ZeroGamma);
        }
        interval.alphabet().check(gamma as usize)?;
        Ok(ElementaryConjunction { gamma, interval })
    }

    /// Shorthand for building a conjunction from raw factor sets.
    pub fn from_factors(k: Alphabet, factors: Vec<ValueSet>, gamma: u8) -> Result<Self> {
        Self::new(Interval::new(k, factors)?, gamma)
    }

    pub fn gamma(&self) -> u8 {
        self.gamma
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn alphabet(&self) -> Alphabet {
        self.interval.alphabet()
    }

    pub fn n(&self) -> usize {
        self.interval.n()
    }

    pub fn eval(&self, p: &Point) -> Result<u8> {
        if p.dim() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: p.dim() });
        }
        let k = self.alphabet();
        let mut value = self.gamma;
        for (m, &x) in self.interval.factors().iter().zip(p.coords()) {
            value = value.min(m.indicator(x, k)?);
        }
        Ok(value)
    }

    /// `kn - sum |M_j|`.
    pub fn rank(&self) -> usize {
        let k = self.alphabet().size();
        k * self.n() - self.interval.factors().iter().map(|m| m.len()).sum::<usize>()
    }

    /// True when some variable has disjoint factors, i.e. the truth regions
    /// do not meet.
    pub fn orthogonal(&self, other: &ElementaryConjunction) -> Result<bool> {
        self.same_shape(other)?;
        Ok(!self.interval.intersects(&other.interval))
    }

    pub(crate) fn same_shape(&self, other: &ElementaryConjunction) -> Result<()> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch { expected: self.alphabet().k(), found: other.alphabet().k() });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: other.n() });
        }
        Ok(())
    }

    pub(crate) fn with_interval(&self, interval: Interval) -> ElementaryConjunction {
        ElementaryConjunction { gamma: self.gamma, interval }
    }
}

impl fmt::Display for ElementaryConjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (j, m) in self.interval.factors().iter().enumerate() {
            if self.interval.is_full_factor(j) {
                continue;
            }
            if any {
                f.write_str("*")?;
            }
            write!(f, "J{}(x{})", m, j + 1)?;
            any = true;
        }
        if !any {
            f.write_str("TRUE")?;
        }
        write!(f, "->{}", self.gamma)
    }
}

/// A disjunction (pointwise max) of elementary conjunctions over one space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dnf {
    space: Space,
    terms: Vec<ElementaryConjunction>,
}

impl Dnf {
    pub fn new(space: Space, terms: Vec<ElementaryConjunction>) -> Result<Self> {
        for t in &terms {
            if t.alphabet() != space.alphabet() {
                return Err(Error::AlphabetMismatch { expected: space.k(), found: t.alphabet().k() });
            }
            if t.n() != space.n() {
                return Err(Error::DimensionMismatch { expected: space.n(), found: t.n() });
            }
        }
        Ok(Dnf { space, terms })
    }

    /// The empty disjunction, i.e. constant 0.
    pub fn empty(space: Space) -> Self {
        Dnf { space, terms: Vec::new() }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> &[ElementaryConjunction] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, term: ElementaryConjunction) -> Result<()> {
        Dnf::new(self.space, vec![term.clone()])?;
        self.terms.push(term);
        Ok(())
    }

    pub fn eval(&self, p: &Point) -> Result<u8> {
        self.space.check_point(p)?;
        Ok(self.eval_unchecked(p.coords()))
    }

    pub(crate) fn eval_unchecked(&self, coords: &[u8]) -> u8 {
        self.terms.iter().filter(|t| t.interval.contains_coords(coords)).map(|t| t.gamma).max().unwrap_or(0)
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(ElementaryConjunction::rank).sum()
    }

    /// Copy with terms in canonical order. Duplicates are kept.
    pub fn canonical(&self) -> Dnf {
        let mut terms = self.terms.clone();
        terms.sort();
        Dnf { space: self.space, terms }
    }

    pub fn without(&self, index: usize) -> Dnf {
        let mut terms = self.terms.clone();
        terms.remove(index);
        Dnf { space: self.space, terms }
    }
}
