//! Maximal intervals of a carrier set and the reduced (abbreviated) DNF.

use std::collections::HashSet;

use crate::conjunction::{for_each_index, Dnf, ElementaryConjunction, Interval};
use crate::decomposition::{decompose, max_representation};
use crate::error::{Error, Result};
use crate::function::{KFunction, PartialKFunction};
use crate::lattice::{PointSet, Space, ValueSet};

/// Region a conjunction's interval has to stay inside.
pub type CarrierSet = PointSet;

/// True when adding `value` to the factor of `var` keeps `iv` inside `carrier`.
/// Only the new slice `x_var = value` needs checking.
fn can_enlarge(iv: &Interval, var: usize, value: u8, carrier: &PointSet) -> bool {
    let mut slice = iv.factors().to_vec();
    slice[var] = ValueSet::singleton(value);
    for_each_index(carrier.space(), &slice, |i| carrier.contains_index(i))
}

/// All maximal intervals inside `carrier`, in canonical (factor mask) order.
///
/// Every interval inside the carrier grows into a maximal one through
/// single-value enlargements, so a search from every singleton visits each
/// maximal interval; the fixpoints of that search are exactly the maximal ones.
pub fn maximal_intervals(carrier: &CarrierSet) -> Vec<Interval> {
    let space = carrier.space();
    let k = space.k();
    let mut seen: HashSet<Interval> = HashSet::new();
    let mut stack: Vec<Interval> = Vec::new();
    let mut out = Vec::new();

    for i in carrier.indices() {
        let seed = Interval::singleton(space, &space.decode(i)).expect("decoded point fits");
        if seen.insert(seed.clone()) {
            stack.push(seed);
        }
        while let Some(iv) = stack.pop() {
            let mut grew = false;
            for var in 0..space.n() {
                for value in 0..k {
                    if iv.factor(var).contains(value) || !can_enlarge(&iv, var, value, carrier) {
                        continue;
                    }
                    grew = true;
                    let next = iv.enlarged(var, value);
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
            if !grew {
                out.push(iv);
            }
        }
    }
    out.sort();
    out
}

/// Whether `iv` is maximal inside `carrier`. Any strictly larger interval in
/// the carrier is reachable by a single-value enlargement, so checking those
/// suffices.
pub fn is_maximal_in(iv: &Interval, carrier: &CarrierSet) -> Result<bool> {
    if iv.alphabet() != carrier.space().alphabet() || iv.n() != carrier.space().n() {
        return Err(Error::precondition("interval and carrier have different shapes"));
    }
    if !iv.is_inside(carrier) {
        return Err(Error::precondition("interval is not inside the carrier"));
    }
    let k = carrier.space().k();
    Ok((0..iv.n())
        .all(|var| (0..k).all(|value| iv.factor(var).contains(value) || !can_enlarge(iv, var, value, carrier))))
}

/// Where a block of reduced-DNF terms came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedLevel {
    pub gamma: u8,
    /// The region the level's intervals are maximal in.
    pub carrier: CarrierSet,
    /// The points each kept interval must meet (the level set, or `M_i`).
    pub target: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedDnf {
    dnf: Dnf,
    levels: Vec<ReducedLevel>,
}

impl ReducedDnf {
    pub fn dnf(&self) -> &Dnf {
        &self.dnf
    }

    pub fn into_dnf(self) -> Dnf {
        self.dnf
    }

    pub fn levels(&self) -> &[ReducedLevel] {
        &self.levels
    }

    pub fn level(&self, gamma: u8) -> Option<&ReducedLevel> {
        self.levels.iter().find(|l| l.gamma == gamma)
    }
}

fn assemble(space: Space, levels: Vec<ReducedLevel>) -> ReducedDnf {
    let mut terms = Vec::new();
    for level in &levels {
        for iv in maximal_intervals(&level.carrier) {
            if iv.intersects_set(&level.target) {
                terms.push(ElementaryConjunction::new(iv, level.gamma).expect("nonzero level"));
            }
        }
    }
    terms.sort();
    ReducedDnf { dnf: Dnf::new(space, terms).expect("terms built over the same space"), levels }
}

/// Reduced DNF of a total function: for each attained level, every maximal
/// interval of its carrier (points with value `>= gamma`) that meets the
/// level set.
pub fn reduced_dnf(f: &KFunction) -> ReducedDnf {
    let decomposition = decompose(f);
    let repr = max_representation(&decomposition);
    let levels = decomposition
        .levels()
        .iter()
        .zip(repr.carriers())
        .map(|(level, carrier)| ReducedLevel {
            gamma: level.gamma,
            carrier: carrier.points.clone(),
            target: level.points.clone(),
        })
        .collect();
    assemble(f.space(), levels)
}

/// Reduced normal form of a partial function: level `gamma_i` uses the
/// carrier `E_k^n \ (M_0 ∪ ... ∪ M_{i-1})` and keeps intervals meeting `M_i`.
pub fn reduced_dnf_partial(f: &PartialKFunction) -> ReducedDnf {
    let space = f.space();
    let mut forbidden = PointSet::empty(space);
    let mut levels = Vec::new();
    for class in f.classes() {
        if class.gamma > 0 {
            levels.push(ReducedLevel {
                gamma: class.gamma,
                carrier: forbidden.complement(),
                target: class.points.clone(),
            });
        }
        forbidden = forbidden.union(&class.points);
    }
    assemble(space, levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Point;

    fn vs(v: &[u8]) -> ValueSet {
        v.iter().copied().collect()
    }

    fn example_ones() -> PointSet {
        let s = Space::new(3, 3).unwrap();
        let pts = [[0, 1, 1], [1, 1, 1], [1, 2, 1], [2, 1, 1], [1, 2, 2]].map(Point::from);
        PointSet::from_points(s, &pts).unwrap()
    }

    fn iv(factors: &[&[u8]]) -> Interval {
        let k = crate::lattice::Alphabet::new(3).unwrap();
        Interval::new(k, factors.iter().map(|f| vs(f)).collect()).unwrap()
    }

    #[test]
    fn whole_lattice_has_one_maximal_interval() {
        let s = Space::new(3, 2).unwrap();
        assert_eq!(maximal_intervals(&PointSet::full(s)), vec![Interval::full(s)]);
        assert!(maximal_intervals(&PointSet::empty(s)).is_empty());
    }

    #[test]
    fn single_point_carrier() {
        let s = Space::new(3, 2).unwrap();
        let p = Point::from([2, 0]);
        let carrier = PointSet::from_points(s, [&p]).unwrap();
        assert_eq!(maximal_intervals(&carrier), vec![Interval::singleton(s, &p).unwrap()]);
    }

    #[test]
    fn worked_example_maximal_intervals() {
        let found = maximal_intervals(&example_ones());
        assert_eq!(found, vec![iv(&[&[1], &[2], &[1, 2]]), iv(&[&[1], &[1, 2], &[1]]), iv(&[&[0, 1, 2], &[1], &[1]])]);
    }

    #[test]
    fn maximality_checks() {
        let ones = example_ones();
        assert!(!is_maximal_in(&iv(&[&[1], &[1], &[1]]), &ones).unwrap());
        assert!(is_maximal_in(&iv(&[&[1], &[2], &[1, 2]]), &ones).unwrap());
        let s = Space::new(3, 3).unwrap();
        assert!(is_maximal_in(&Interval::full(s), &PointSet::full(s)).unwrap());
        assert!(is_maximal_in(&iv(&[&[2], &[2], &[2]]), &ones).is_err());
    }

    #[test]
    fn identity_function_reduced() {
        let s = Space::new(3, 1).unwrap();
        let f = KFunction::new(s, vec![0, 1, 2]).unwrap();
        let r = reduced_dnf(&f);
        let shown: Vec<String> = r.dnf().terms().iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, vec!["J{1,2}(x1)->1", "J{2}(x1)->2"]);
        assert!(f.is_realized_by(r.dnf()).unwrap());
    }

    #[test]
    fn zero_function_reduced_is_empty() {
        let f = KFunction::constant(Space::new(3, 2).unwrap(), 0).unwrap();
        assert!(reduced_dnf(&f).dnf().is_empty());
    }

    #[test]
    fn partial_examples() {
        let s = Space::new(3, 2).unwrap();
        let p = Point::from([1, 2]);
        let one = PartialKFunction::from_classes(s, &[(1, vec![p.clone()])]).unwrap();
        let r = reduced_dnf_partial(&one);
        assert_eq!(r.dnf().terms().len(), 1);
        assert_eq!(r.dnf().terms()[0].interval(), &Interval::full(s));

        let rest: Vec<Point> = s.points().filter(|q| *q != p).collect();
        let pinned = PartialKFunction::from_classes(s, &[(0, rest), (1, vec![p.clone()])]).unwrap();
        let r = reduced_dnf_partial(&pinned);
        assert_eq!(r.dnf().terms()[0].interval(), &Interval::singleton(s, &p).unwrap());

        let s1 = Space::new(3, 1).unwrap();
        let gap =
            PartialKFunction::from_classes(s1, &[(0, vec![Point::from([0])]), (1, vec![Point::from([2])])]).unwrap();
        let r = reduced_dnf_partial(&gap);
        let shown: Vec<String> = r.dnf().terms().iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, vec!["J{1,2}(x1)->1"]);
        assert!(gap.agrees_with(r.dnf()).unwrap());
    }
}
