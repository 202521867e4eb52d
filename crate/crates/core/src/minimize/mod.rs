//! Exact two-level minimization over the reduced DNF's terms.

mod absorption;
mod cover;

use std::fmt;
use std::str::FromStr;

pub use absorption::{
    absorbs, absorbs_theorem2, absorption_witness, is_class_s_shaped, remove_step, theorem2_criterion, widen_class_s,
    RemovalStep,
};
pub use cover::{CoverInstance, LevelCover, DEAD_END_NODE_CAP, MINIMIZE_NODE_CAP};

use crate::conjunction::Dnf;
use crate::error::{Error, Result};
use crate::function::KFunction;
use crate::reduced::reduced_dnf;

/// Cap on the number of dead-end DNFs assembled across levels.
pub const DEAD_END_RESULT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Shortest: fewest terms, ties broken by total rank.
    #[default]
    FewestTerms,
    /// Total rank, ties broken by term count.
    LeastTotalRank,
}

impl Metric {
    pub fn evaluate(self, dnf: &Dnf) -> usize {
        match self {
            Metric::FewestTerms => dnf.len(),
            Metric::LeastTotalRank => dnf.total_rank(),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "terms" => Ok(Metric::FewestTerms),
            "rank" => Ok(Metric::LeastTotalRank),
            other => Err(Error::precondition(format!("unknown metric {other:?} (expected terms|rank)"))),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::FewestTerms => "terms",
            Metric::LeastTotalRank => "rank",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimizationResult {
    pub dnf: Dnf,
    pub metric: Metric,
    pub objective_value: usize,
    pub optimal: bool,
}

/// Every subset of `pool` that realizes `f` and loses that property when any
/// one of its terms is dropped. Sorted, terms within each DNF canonical.
pub fn dead_end_dnfs(f: &KFunction, pool: &Dnf) -> Result<Vec<Dnf>> {
    let instance = CoverInstance::new(f, pool)?;
    let mut nodes = 0u64;
    let per_level = instance
        .levels()
        .iter()
        .map(|level| cover::irredundant_covers(level, &mut nodes))
        .collect::<Result<Vec<_>>>()?;

    let total = per_level.iter().try_fold(1usize, |acc, covers| acc.checked_mul(covers.len()));
    if total.is_none_or(|t| t > DEAD_END_RESULT_CAP) {
        return Err(Error::capacity(format!("more than {DEAD_END_RESULT_CAP} dead-end DNFs")));
    }

    let mut combos: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for covers in &per_level {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                covers.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    let mut out: Vec<Dnf> = combos.iter().map(|c| instance.assemble(c)).collect();
    out.sort_by(|a, b| a.terms().cmp(b.terms()));
    out.dedup();
    Ok(out)
}

/// Exact optimum over subsets of `pool`.
pub fn minimize_with_pool(f: &KFunction, pool: &Dnf, metric: Metric) -> Result<MinimizationResult> {
    let instance = CoverInstance::new(f, pool)?;
    let mut nodes = 0u64;
    let picks = instance
        .levels()
        .iter()
        .map(|level| cover::optimal_cover(level, metric, &mut nodes))
        .collect::<Result<Vec<_>>>()?;
    let dnf = instance.assemble(&picks);
    Ok(MinimizationResult { objective_value: metric.evaluate(&dnf), dnf, metric, optimal: true })
}

/// Exact minimal DNF of `f` under `metric`, searched over the reduced DNF.
/// Every cover term can be enlarged to a maximal interval without adding
/// terms or rank, so restricting to the reduced DNF loses nothing.
pub fn minimize_dnf(f: &KFunction, metric: Metric) -> Result<MinimizationResult> {
    let pool = reduced_dnf(f).into_dnf();
    minimize_with_pool(f, &pool, metric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Point, Space};

    fn worked_example() -> KFunction {
        let s = Space::new(3, 3).unwrap();
        let ones = [[0, 1, 1], [1, 1, 1], [1, 2, 1], [2, 1, 1], [1, 2, 2]].map(Point::from);
        KFunction::from_fn(s, |p| u8::from(ones.contains(p))).unwrap()
    }

    fn shown(d: &Dnf) -> Vec<String> {
        d.terms().iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn constant_zero_minimizes_to_empty() {
        let f = KFunction::constant(Space::new(3, 2).unwrap(), 0).unwrap();
        let r = minimize_dnf(&f, Metric::FewestTerms).unwrap();
        assert!(r.dnf.is_empty());
        assert_eq!(r.objective_value, 0);
        assert_eq!(dead_end_dnfs(&f, &r.dnf).unwrap().len(), 1);
    }

    #[test]
    fn worked_example_has_one_dead_end() {
        let f = worked_example();
        let pool = reduced_dnf(&f).into_dnf();
        assert_eq!(pool.len(), 3);
        let dead = dead_end_dnfs(&f, &pool).unwrap();
        assert_eq!(dead.len(), 1);
        assert_eq!(shown(&dead[0]), vec!["J{1}(x1)*J{2}(x2)*J{1,2}(x3)->1", "J{1}(x2)*J{1}(x3)->1"]);
    }

    #[test]
    fn worked_example_minimum() {
        let f = worked_example();
        for metric in [Metric::FewestTerms, Metric::LeastTotalRank] {
            let r = minimize_dnf(&f, metric).unwrap();
            assert!(f.is_realized_by(&r.dnf).unwrap());
            assert_eq!(r.dnf.len(), 2);
            assert!(r.optimal);
        }
        assert_eq!(minimize_dnf(&f, Metric::FewestTerms).unwrap().objective_value, 2);
        assert_eq!(minimize_dnf(&f, Metric::LeastTotalRank).unwrap().objective_value, 4 + 5);
    }

    #[test]
    fn pool_must_realize() {
        let f = worked_example();
        let pool = reduced_dnf(&f).into_dnf();
        let short = pool.without(0);
        assert!(matches!(dead_end_dnfs(&f, &short), Err(Error::Precondition(_))));
    }

    #[test]
    fn single_maximal_interval_per_level() {
        let s = Space::new(3, 2).unwrap();
        let f = KFunction::from_fn(s, |p| p.coords()[0]).unwrap();
        let pool = reduced_dnf(&f).into_dnf();
        let dead = dead_end_dnfs(&f, &pool).unwrap();
        assert_eq!(dead, vec![pool]);
    }

    #[test]
    fn metric_parsing() {
        assert_eq!("terms".parse::<Metric>().unwrap(), Metric::FewestTerms);
        assert_eq!("rank".parse::<Metric>().unwrap(), Metric::LeastTotalRank);
        assert!("cost".parse::<Metric>().is_err());
    }
}
