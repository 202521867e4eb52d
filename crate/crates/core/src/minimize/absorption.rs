//! Absorption of a conjunction by a disjunction, single-term removal steps,
//! and the class-S coverage criterion over `eps_k^{n,t}`.

use crate::conjunction::{for_each_index, Dnf, ElementaryConjunction, Interval};
use crate::error::{Error, Result};
use crate::lattice::{Point, ValueSet};

/// A point where `ec` exceeds `d`, if any.
pub fn absorption_witness(d: &Dnf, ec: &ElementaryConjunction) -> Result<Option<Point>> {
    Dnf::new(d.space(), vec![ec.clone()])?;
    let space = d.space();
    let mut witness = None;
    // ec is 0 off its interval, so only the interval can violate ec <= d
    for_each_index(space, ec.interval().factors(), |i| {
        let p = space.decode(i);
        if d.eval_unchecked(p.coords()) < ec.gamma() {
            witness = Some(p);
            false
        } else {
            true
        }
    });
    Ok(witness)
}

/// `ec(x) <= d(x)` for every point `x`.
pub fn absorbs(d: &Dnf, ec: &ElementaryConjunction) -> Result<bool> {
    Ok(absorption_witness(d, ec)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RemovalStep {
    /// The remaining terms absorb the removed one.
    Accepted(Dnf),
    /// The removed term is needed at `witness`.
    Rejected { witness: Point },
}

/// Drops the term at `index` if the other terms absorb it.
pub fn remove_step(d: &Dnf, index: usize) -> Result<RemovalStep> {
    let Some(term) = d.terms().get(index) else {
        return Err(Error::precondition(format!("term index {index} out of range (len {})", d.len())));
    };
    let rest = d.without(index);
    Ok(match absorption_witness(&rest, term)? {
        None => RemovalStep::Accepted(rest),
        Some(witness) => RemovalStep::Rejected { witness },
    })
}

/// Every non-full factor avoids 0.
pub fn is_class_s_shaped(ec: &ElementaryConjunction) -> bool {
    let iv = ec.interval();
    (0..iv.n()).all(|j| iv.is_full_factor(j) || !iv.factor(j).contains(0))
}

/// Replaces every non-full factor by `{1, ..., k-1}`.
pub fn widen_class_s(ec: &ElementaryConjunction) -> Result<ElementaryConjunction> {
    if !is_class_s_shaped(ec) {
        return Err(Error::precondition(format!("{ec} has a non-full factor containing 0")));
    }
    let iv = ec.interval();
    let nonzero = iv.alphabet().nonzero();
    let factors: Vec<ValueSet> =
        (0..iv.n()).map(|j| if iv.is_full_factor(j) { iv.factor(j) } else { nonzero }).collect();
    Ok(ec.with_interval(Interval::new(iv.alphabet(), factors)?))
}

fn check_family(terms: &[ElementaryConjunction], ec: &ElementaryConjunction) -> Result<()> {
    if !is_class_s_shaped(ec) {
        return Err(Error::precondition(format!("{ec} is not class-S shaped")));
    }
    for t in terms {
        t.same_shape(ec)?;
        if !is_class_s_shaped(t) {
            return Err(Error::precondition(format!("{t} is not class-S shaped")));
        }
        if t.gamma() != ec.gamma() {
            return Err(Error::precondition(format!(
                "{t} has level {} but the absorbed conjunction has level {}",
                t.gamma(),
                ec.gamma()
            )));
        }
    }
    Ok(())
}

/// The coverage criterion itself, without the applicability gate: with the
/// variables `ec` depends on moved to the front (`t` of them), do the widened
/// terms cover every point whose first `t` coordinates are nonzero?
///
/// This is exact only under the conditions [`absorbs_theorem2`] enforces.
pub fn theorem2_criterion(terms: &[ElementaryConjunction], ec: &ElementaryConjunction) -> Result<bool> {
    check_family(terms, ec)?;
    let space = ec.interval().space();
    let k = space.alphabet();
    let dependent = ec.interval().dependent_vars();
    let mut order = dependent.clone();
    order.extend((0..space.n()).filter(|j| !dependent.contains(j)));
    let t = dependent.len();

    let widened: Vec<Vec<ValueSet>> = terms
        .iter()
        .map(|term| {
            let w = widen_class_s(term)?;
            Ok(order.iter().map(|&j| w.interval().factor(j)).collect())
        })
        .collect::<Result<_>>()?;

    // eps_k^{n,t} in the reindexed coordinates
    let region: Vec<ValueSet> = (0..space.n()).map(|j| if j < t { k.nonzero() } else { k.full() }).collect();
    Ok(for_each_index(space, &region, |i| {
        let p = space.decode(i);
        widened.iter().any(|w| w.iter().zip(p.coords()).all(|(m, &c)| m.contains(c)))
    }))
}

/// Fast absorption test for class-S conjunctions at a common level.
///
/// Preconditions: `ec` and every term are class-S shaped (non-full factors
/// avoid 0) and share `ec`'s level; terms at other levels are the caller's
/// to filter out. In addition every term's factor on each variable `ec`
/// depends on must be full or contain `ec`'s factor there, otherwise the
/// widening step can claim coverage the terms do not provide and the call
/// fails with [`Error::NotApplicable`].
pub fn absorbs_theorem2(terms: &[ElementaryConjunction], ec: &ElementaryConjunction) -> Result<bool> {
    check_family(terms, ec)?;
    let iv = ec.interval();
    for (ti, term) in terms.iter().enumerate() {
        for var in iv.dependent_vars() {
            let m = term.interval().factor(var);
            if !term.interval().is_full_factor(var) && !iv.factor(var).is_subset(m) {
                return Err(Error::NotApplicable { term: ti, var: var + 1 });
            }
        }
    }
    theorem2_criterion(terms, ec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Alphabet, Space};

    fn ec(k: usize, factors: &[&[u8]], gamma: u8) -> ElementaryConjunction {
        let k = Alphabet::new(k).unwrap();
        let factors = factors.iter().map(|f| f.iter().copied().collect()).collect();
        ElementaryConjunction::from_factors(k, factors, gamma).unwrap()
    }

    fn eq10() -> (Dnf, ElementaryConjunction, ElementaryConjunction) {
        let a = ec(3, &[&[0, 1, 2], &[1], &[1]], 1);
        let b = ec(3, &[&[1], &[2], &[1, 2]], 1);
        let d = Dnf::new(Space::new(3, 3).unwrap(), vec![a.clone(), b.clone()]).unwrap();
        (d, a, b)
    }

    #[test]
    fn reflexive_absorption() {
        let (d, a, b) = eq10();
        assert!(absorbs(&d, &a).unwrap());
        assert!(absorbs(&d, &b).unwrap());
    }

    #[test]
    fn first_term_does_not_absorb_second() {
        let (_, a, b) = eq10();
        let d = Dnf::new(Space::new(3, 3).unwrap(), vec![a]).unwrap();
        let w = absorption_witness(&d, &b).unwrap().unwrap();
        assert!(w == Point::from([1, 2, 1]) || w == Point::from([1, 2, 2]));
    }

    #[test]
    fn higher_level_top_absorbs_everything_below() {
        let s = Space::new(3, 3).unwrap();
        let top = ElementaryConjunction::new(Interval::full(s), 2).unwrap();
        let d = Dnf::new(s, vec![top]).unwrap();
        let (_, a, b) = eq10();
        assert!(absorbs(&d, &a).unwrap() && absorbs(&d, &b).unwrap());
    }

    #[test]
    fn removal_steps() {
        let (d, a, _) = eq10();
        match remove_step(&d, 1).unwrap() {
            RemovalStep::Rejected { witness } => assert_eq!(witness, Point::from([1, 2, 1])),
            other => panic!("unexpected {other:?}"),
        }
        let dup = Dnf::new(d.space(), vec![a.clone(), a]).unwrap();
        assert!(matches!(remove_step(&dup, 0).unwrap(), RemovalStep::Accepted(r) if r.len() == 1));
        assert!(remove_step(&d, 2).is_err());
    }

    #[test]
    fn widening() {
        let w = widen_class_s(&ec(3, &[&[1], &[2]], 1)).unwrap();
        assert_eq!(w, ec(3, &[&[1, 2], &[1, 2]], 1));
        let full = ec(3, &[&[0, 1, 2], &[0, 1, 2]], 2);
        assert_eq!(widen_class_s(&full).unwrap(), full);
        let upper = ec(3, &[&[1, 2]], 1);
        assert_eq!(widen_class_s(&upper).unwrap(), upper);
        assert!(widen_class_s(&ec(3, &[&[0, 1]], 1)).is_err());
    }

    #[test]
    fn criterion_self_cover() {
        let k = ec(3, &[&[1], &[0, 1, 2], &[2]], 1);
        assert!(absorbs_theorem2(std::slice::from_ref(&k), &k).unwrap());
    }

    #[test]
    fn narrower_term_is_not_applicable() {
        let k = ec(3, &[&[1, 2]], 1);
        let terms = [ec(3, &[&[1]], 1)];
        assert_eq!(absorbs_theorem2(&terms, &k), Err(Error::NotApplicable { term: 0, var: 1 }));
        // the ungated criterion claims coverage that is not there
        assert!(theorem2_criterion(&terms, &k).unwrap());
        let d = Dnf::new(Space::new(3, 1).unwrap(), terms.to_vec()).unwrap();
        assert!(!absorbs(&d, &k).unwrap());
    }

    #[test]
    fn split_cover_misses_zero_slice() {
        let k = ec(3, &[&[1], &[0, 1, 2]], 1);
        let terms = [ec(3, &[&[1, 2], &[1]], 1), ec(3, &[&[1, 2], &[2]], 1)];
        let d = Dnf::new(Space::new(3, 2).unwrap(), terms.to_vec()).unwrap();
        assert!(!absorbs_theorem2(&terms, &k).unwrap());
        assert_eq!(absorption_witness(&d, &k).unwrap(), Some(Point::from([1, 0])));
    }

    #[test]
    fn mixed_levels_rejected() {
        let k = ec(3, &[&[1]], 1);
        assert!(matches!(absorbs_theorem2(&[ec(3, &[&[1]], 2)], &k), Err(Error::Precondition(_))));
    }
}
