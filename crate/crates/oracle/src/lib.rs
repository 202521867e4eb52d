//! Brute-force reference implementations for testing `kdnf`.
//!
//! Everything here works from explicit point enumeration and exhaustive
//! subset search. Nothing calls the library's search code, so a disagreement
//! always points at the fast path. Not for production use.

use kdnf::{
    Dnf, ElementaryConjunction, Error, Interval, KFunction, Metric, MinimizationResult, Point, PointSet, Result, Space,
    ValueOrder, ValueSet,
};

/// Cap on candidate intervals, `(2^k - 1)^n`.
pub const INTERVAL_CAP: u64 = 10_000_000;
/// Cap on lattice points for pointwise checks.
pub const POINT_CAP: usize = 1_000_000;
/// Cap on candidate terms for subset search (per level).
pub const SUBSET_CAP: usize = 20;
/// Cap on tables enumerated for counting, `k^(k^n)`.
pub const TABLE_CAP: u64 = 100_000_000;

fn capacity(msg: String) -> Error {
    Error::Capacity(msg)
}

/// Every n-tuple of nonempty value sets, in lexicographic mask order.
fn all_intervals(space: Space) -> Result<Vec<Interval>> {
    let k = space.alphabet();
    let per_factor = (1u64 << k.k()) - 1;
    let total = per_factor
        .checked_pow(space.n() as u32)
        .filter(|&t| t <= INTERVAL_CAP)
        .ok_or_else(|| capacity(format!("(2^{} - 1)^{} candidate intervals", k.k(), space.n())))?;
    let mut out = Vec::with_capacity(total as usize);
    for mut code in 0..total {
        let mut factors = vec![ValueSet::EMPTY; space.n()];
        for f in factors.iter_mut().rev() {
            *f = ValueSet::from_bits((code % per_factor + 1) as u16);
            code /= per_factor;
        }
        out.push(Interval::new(k, factors)?);
    }
    Ok(out)
}

fn membership(space: Space, iv: &Interval) -> Vec<bool> {
    space.points().map(|p| iv.contains(&p)).collect()
}

/// Maximal intervals of `carrier` by exhaustive enumeration and pairwise
/// point-set containment.
pub fn oracle_maximal_intervals(carrier: &PointSet) -> Result<Vec<Interval>> {
    let space = carrier.space();
    let inside: Vec<(Interval, Vec<bool>)> = all_intervals(space)?
        .into_iter()
        .map(|iv| {
            let m = membership(space, &iv);
            (iv, m)
        })
        .filter(|(_, m)| m.iter().enumerate().all(|(i, &b)| !b || carrier.contains_index(i)))
        .collect();
    let contains = |big: &[bool], small: &[bool]| small.iter().zip(big).all(|(&s, &b)| !s || b);
    let mut out: Vec<Interval> = inside
        .iter()
        .filter(|(iv, m)| !inside.iter().any(|(other, om)| other != iv && contains(om, m)))
        .map(|(iv, _)| iv.clone())
        .collect();
    out.sort();
    Ok(out)
}

fn dnf_value(terms: &[ElementaryConjunction], p: &Point) -> Result<u8> {
    terms.iter().try_fold(0u8, |acc, t| Ok(acc.max(t.eval(p)?)))
}

/// `ec(x) <= max_j terms_j(x)` at every point of the lattice.
pub fn oracle_absorbs(space: Space, terms: &[ElementaryConjunction], ec: &ElementaryConjunction) -> Result<bool> {
    if space.size() > POINT_CAP {
        return Err(capacity(format!("{} points", space.size())));
    }
    for p in space.points() {
        if ec.eval(&p)? > dnf_value(terms, &p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn realizes(f: &KFunction, terms: &[ElementaryConjunction]) -> Result<bool> {
    for p in f.space().points() {
        if dnf_value(terms, &p)? != f.get(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn subset_of<T: Clone>(items: &[T], mask: u32) -> Vec<T> {
    items.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, t)| t.clone()).collect()
}

/// Exact optimum by trying every subset of the maximal intervals of each
/// level's carrier. Ties are broken like the library: by the secondary cost,
/// then by the lexicographically smallest sorted candidate list.
pub fn oracle_minimize(f: &KFunction, metric: Metric) -> Result<MinimizationResult> {
    let space = f.space();
    let mut chosen = Vec::new();
    for gamma in 1..space.k() {
        let level: Vec<usize> = (0..space.size()).filter(|&i| f.at(i) == gamma).collect();
        if level.is_empty() {
            continue;
        }
        let carrier = PointSet::from_indices(space, (0..space.size()).filter(|&i| f.at(i) >= gamma));
        let candidates: Vec<ElementaryConjunction> = oracle_maximal_intervals(&carrier)?
            .into_iter()
            .filter(|iv| level.iter().any(|&i| iv.contains(&space.decode(i))))
            .map(|iv| ElementaryConjunction::new(iv, gamma))
            .collect::<Result<_>>()?;
        if candidates.len() > SUBSET_CAP {
            return Err(capacity(format!("{} candidates at level {gamma}", candidates.len())));
        }
        let mut best: Option<((usize, usize), Vec<usize>)> = None;
        for mask in 0u32..(1 << candidates.len()) {
            let picks = subset_of(&candidates, mask);
            let covered = level.iter().all(|&i| {
                let p = space.decode(i);
                picks.iter().any(|t| t.interval().contains(&p))
            });
            if !covered {
                continue;
            }
            let len = picks.len();
            let rank: usize = picks.iter().map(|t| t.rank()).sum();
            let cost = match metric {
                Metric::FewestTerms => (len, rank),
                Metric::LeastTotalRank => (rank, len),
            };
            let index_list: Vec<usize> = (0..candidates.len()).filter(|i| mask & (1 << i) != 0).collect();
            let key = (cost, index_list);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        let (_, picks) = best.expect("maximal intervals cover the level");
        chosen.extend(picks.into_iter().map(|i| candidates[i].clone()));
    }
    chosen.sort();
    let dnf = Dnf::new(space, chosen)?;
    Ok(MinimizationResult { objective_value: metric.evaluate(&dnf), dnf, metric, optimal: true })
}

/// Subsets of `pool` realizing `f` from which no term can be dropped.
pub fn oracle_dead_ends(f: &KFunction, pool: &Dnf) -> Result<Vec<Dnf>> {
    let terms = pool.terms();
    if terms.len() > SUBSET_CAP {
        return Err(capacity(format!("{} pool terms", terms.len())));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << terms.len()) {
        let picks = subset_of(terms, mask);
        if !realizes(f, &picks)? {
            continue;
        }
        let mut irredundant = true;
        for skip in 0..picks.len() {
            let mut rest = picks.clone();
            rest.remove(skip);
            if realizes(f, &rest)? {
                irredundant = false;
                break;
            }
        }
        if irredundant {
            let mut sorted = picks;
            sorted.sort();
            out.push(Dnf::new(f.space(), sorted)?);
        }
    }
    out.sort_by(|a, b| a.terms().cmp(b.terms()));
    out.dedup();
    Ok(out)
}

fn le_points(order: &ValueOrder, a: &Point, b: &Point) -> bool {
    a.coords().iter().zip(b.coords()).all(|(&x, &y)| order.le(x, y))
}

/// Monotonicity over all comparable pairs.
pub fn oracle_is_monotone(f: &KFunction, order: &ValueOrder) -> Result<bool> {
    let points: Vec<Point> = f.space().points().collect();
    for (i, a) in points.iter().enumerate() {
        for (j, b) in points.iter().enumerate() {
            if le_points(order, a, b) && !order.le(f.at(i), f.at(j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Counts monotone functions by enumerating every table.
pub fn oracle_count_monotone(n: usize, order: &ValueOrder) -> Result<u64> {
    let space = Space::with_alphabet(order.alphabet(), n)?;
    let k = space.k() as u64;
    let tables = k
        .checked_pow(space.size() as u32)
        .filter(|&t| t <= TABLE_CAP)
        .ok_or_else(|| capacity(format!("{}^{} tables", k, space.size())))?;
    let mut count = 0;
    for mut code in 0..tables {
        let mut table = vec![0u8; space.size()];
        for v in table.iter_mut() {
            *v = (code % k) as u8;
            code /= k;
        }
        if oracle_is_monotone(&KFunction::new(space, table)?, order)? {
            count += 1;
        }
    }
    Ok(count)
}
