//! Total and partially defined k-valued functions as dense tables.

use crate::conjunction::Dnf;
use crate::error::{Error, Result};
use crate::lattice::{Point, PointSet, Space};

/// A total function `E_k^n -> E_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KFunction {
    space: Space,
    table: Vec<u8>,
}

impl KFunction {
    pub fn new(space: Space, table: Vec<u8>) -> Result<Self> {
        if table.len() != space.size() {
            return Err(Error::DimensionMismatch { expected: space.size(), found: table.len() });
        }
        for &v in &table {
            space.alphabet().check(v as usize)?;
        }
        Ok(KFunction { space, table })
    }

    pub fn constant(space: Space, value: u8) -> Result<Self> {
        space.alphabet().check(value as usize)?;
        Ok(KFunction { space, table: vec![value; space.size()] })
    }

    pub fn from_fn(space: Space, mut f: impl FnMut(&Point) -> u8) -> Result<Self> {
        let table = space.points().map(|p| f(&p)).collect();
        Self::new(space, table)
    }

    /// Materializes a DNF into its truth table.
    pub fn from_dnf(dnf: &Dnf) -> Self {
        let space = dnf.space();
        let table = space.points().map(|p| dnf.eval_unchecked(p.coords())).collect();
        KFunction { space, table }
    }

    /// The quasi-Boolean function equal to `gamma` on `set` and 0 elsewhere.
    pub fn indicator(set: &PointSet, gamma: u8) -> Result<Self> {
        let space = set.space();
        space.alphabet().check(gamma as usize)?;
        let mut table = vec![0; space.size()];
        for i in set.indices() {
            table[i] = gamma;
        }
        Ok(KFunction { space, table })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn get(&self, p: &Point) -> Result<u8> {
        Ok(self.table[self.space.encode(p)?])
    }

    #[inline]
    pub fn at(&self, index: usize) -> u8 {
        self.table[index]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// `N_f`, the support.
    pub fn support(&self) -> PointSet {
        PointSet::from_indices(self.space, (0..self.table.len()).filter(|&i| self.table[i] != 0))
    }

    /// Points where the value is at least `gamma`.
    pub fn at_least(&self, gamma: u8) -> PointSet {
        PointSet::from_indices(self.space, (0..self.table.len()).filter(|&i| self.table[i] >= gamma))
    }

    pub fn level_set(&self, gamma: u8) -> PointSet {
        PointSet::from_indices(self.space, (0..self.table.len()).filter(|&i| self.table[i] == gamma))
    }

    /// Pointwise comparison; errors when the shapes differ.
    pub fn equals(&self, other: &KFunction) -> Result<bool> {
        self.space.same_shape(&other.space)?;
        Ok(self.table == other.table)
    }

    /// First point where the DNF's value differs from this function.
    pub fn first_mismatch(&self, dnf: &Dnf) -> Result<Option<Point>> {
        self.space.same_shape(&dnf.space())?;
        Ok(self
            .space
            .points()
            .enumerate()
            .find(|(i, p)| dnf.eval_unchecked(p.coords()) != self.table[*i])
            .map(|(_, p)| p))
    }

    pub fn is_realized_by(&self, dnf: &Dnf) -> Result<bool> {
        Ok(self.first_mismatch(dnf)?.is_none())
    }
}

/// A function defined on pairwise disjoint sets `M_0, ..., M_m`, taking the
/// value `gamma_i` on `M_i` (with `gamma_0 = 0`); undefined elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialKFunction {
    space: Space,
    table: Vec<Option<u8>>,
}

/// One defined class `M_i` together with its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinedClass {
    pub gamma: u8,
    pub points: PointSet,
}

impl PartialKFunction {
    pub fn from_table(space: Space, table: Vec<Option<u8>>) -> Result<Self> {
        if table.len() != space.size() {
            return Err(Error::DimensionMismatch { expected: space.size(), found: table.len() });
        }
        for v in table.iter().flatten() {
            space.alphabet().check(*v as usize)?;
        }
        Ok(PartialKFunction { space, table })
    }

    /// Builds from `(gamma_i, M_i)` pairs. The sets must be pairwise disjoint.
    pub fn from_classes(space: Space, classes: &[(u8, Vec<Point>)]) -> Result<Self> {
        let mut table = vec![None; space.size()];
        for (gamma, points) in classes {
            space.alphabet().check(*gamma as usize)?;
            for p in points {
                let i = space.encode(p)?;
                if table[i].is_some() {
                    return Err(Error::Overlap(p.to_string()));
                }
                table[i] = Some(*gamma);
            }
        }
        Ok(PartialKFunction { space, table })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn table(&self) -> &[Option<u8>] {
        &self.table
    }

    pub fn get(&self, p: &Point) -> Result<Option<u8>> {
        Ok(self.table[self.space.encode(p)?])
    }

    pub fn is_total(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    pub fn to_total(&self) -> Option<KFunction> {
        let table = self.table.iter().copied().collect::<Option<Vec<u8>>>()?;
        Some(KFunction { space: self.space, table })
    }

    /// `M_0` followed by the nonzero classes in increasing value order.
    /// `M_0` is always present, possibly empty; other classes are nonempty.
    pub fn classes(&self) -> Vec<DefinedClass> {
        let k = self.space.alphabet().size();
        let mut sets = vec![PointSet::empty(self.space); k];
        for (i, v) in self.table.iter().enumerate() {
            if let Some(v) = v {
                sets[*v as usize].insert_index(i);
            }
        }
        sets.into_iter()
            .enumerate()
            .filter(|(g, s)| *g == 0 || !s.is_empty())
            .map(|(g, points)| DefinedClass { gamma: g as u8, points })
            .collect()
    }

    /// True when the DNF takes the prescribed value on every defined point.
    pub fn agrees_with(&self, dnf: &Dnf) -> Result<bool> {
        self.space.same_shape(&dnf.space())?;
        Ok(self.space.points().zip(&self.table).all(|(p, v)| v.is_none_or(|v| dnf.eval_unchecked(p.coords()) == v)))
    }
}

impl From<&KFunction> for PartialKFunction {
    fn from(f: &KFunction) -> Self {
        PartialKFunction { space: f.space, table: f.table.iter().map(|&v| Some(v)).collect() }
    }
}

/// Pointwise equality of two total functions of the same shape.
pub fn functions_equal(f: &KFunction, g: &KFunction) -> Result<bool> {
    f.equals(g)
}
