//! Quasi-Boolean level decomposition and the nested "maximum" representation.

use crate::function::KFunction;
use crate::lattice::{PointSet, Space};

/// One quasi-Boolean slice `f_gamma`: value `gamma` on `points`, 0 elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub gamma: u8,
    pub points: PointSet,
}

/// `f = max(f_{gamma_1}, ..., f_{gamma_m})` with `gamma_1 < ... < gamma_m`,
/// one level per nonzero value attained by `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    space: Space,
    levels: Vec<Level>,
}

impl LevelDecomposition {
    pub fn space(&self) -> Space {
        self.space
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// `E_f`: the nonzero values attained.
    pub fn attained(&self) -> Vec<u8> {
        self.levels.iter().map(|l| l.gamma).collect()
    }

    /// Pointwise max of the quasi-Boolean slices.
    pub fn recompose(&self) -> KFunction {
        let mut table = vec![0u8; self.space.size()];
        for level in &self.levels {
            for i in level.points.indices() {
                table[i] = table[i].max(level.gamma);
            }
        }
        KFunction::new(self.space, table).expect("levels hold in-range values")
    }
}

pub fn decompose(f: &KFunction) -> LevelDecomposition {
    let space = f.space();
    let mut sets = vec![PointSet::empty(space); space.alphabet().size()];
    for (i, &v) in f.table().iter().enumerate() {
        sets[v as usize].insert_index(i);
    }
    let levels = sets
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|(_, s)| !s.is_empty())
        .map(|(g, points)| Level { gamma: g as u8, points })
        .collect();
    LevelDecomposition { space, levels }
}

/// Carrier of level `gamma_i`: the union of all level sets `gamma_j`, `j >= i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    pub gamma: u8,
    pub points: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxRepresentation {
    carriers: Vec<Carrier>,
}

impl MaxRepresentation {
    pub fn carriers(&self) -> &[Carrier] {
        &self.carriers
    }
}

pub fn max_representation(d: &LevelDecomposition) -> MaxRepresentation {
    let mut acc = PointSet::empty(d.space);
    let mut carriers: Vec<Carrier> = d
        .levels
        .iter()
        .rev()
        .map(|level| {
            acc = acc.union(&level.points);
            Carrier { gamma: level.gamma, points: acc.clone() }
        })
        .collect();
    carriers.reverse();
    MaxRepresentation { carriers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Point;

    #[test]
    fn zero_function_has_no_levels() {
        let f = KFunction::constant(Space::new(3, 2).unwrap(), 0).unwrap();
        let d = decompose(&f);
        assert!(d.levels().is_empty());
        assert!(max_representation(&d).carriers().is_empty());
        assert_eq!(d.recompose(), f);
    }

    #[test]
    fn identity_on_three_values() {
        let s = Space::new(3, 1).unwrap();
        let f = KFunction::new(s, vec![0, 1, 2]).unwrap();
        let d = decompose(&f);
        assert_eq!(d.attained(), vec![1, 2]);
        let pts: Vec<Vec<Point>> = d.levels().iter().map(|l| l.points.points().collect()).collect();
        assert_eq!(pts, vec![vec![Point::from([1])], vec![Point::from([2])]]);

        let m = max_representation(&d);
        let carriers: Vec<Vec<Point>> = m.carriers().iter().map(|c| c.points.points().collect()).collect();
        assert_eq!(carriers, vec![vec![Point::from([1]), Point::from([2])], vec![Point::from([2])]]);
    }

    #[test]
    fn max_of_two_variables() {
        let s = Space::new(3, 2).unwrap();
        let f = KFunction::from_fn(s, |p| p.coords()[0].max(p.coords()[1])).unwrap();
        let m = max_representation(&decompose(&f));
        assert_eq!(m.carriers()[0].points.len(), 8);
        assert_eq!(m.carriers()[1].points.len(), 5);
        assert_eq!(m.carriers()[0].points, f.support());
    }

    #[test]
    fn single_level_carrier_is_the_level() {
        let s = Space::new(3, 3).unwrap();
        let f = KFunction::from_fn(s, |p| u8::from(p.coords()[2] == 1)).unwrap();
        let d = decompose(&f);
        let m = max_representation(&d);
        assert_eq!(m.carriers()[0].points, d.levels()[0].points);
    }
}
