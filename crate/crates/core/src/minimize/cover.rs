//! Per-level set cover over a pool of terms: irredundant (dead-end) cover
//! enumeration and exact branch-and-bound minimization.

use crate::conjunction::Dnf;
use crate::decomposition::decompose;
use crate::error::{Error, Result};
use crate::function::KFunction;

use super::Metric;

/// Visited-node cap for dead-end enumeration.
pub const DEAD_END_NODE_CAP: u64 = 1_000_000;

/// Visited-node cap for branch-and-bound minimization.
pub const MINIMIZE_NODE_CAP: u64 = 10_000_000;

/// Covering problem for one level `gamma`: the level set must be covered by
/// pool terms at that level.
#[derive(Clone, Debug)]
pub struct LevelCover {
    gamma: u8,
    /// Point indices of the level set.
    universe: Vec<usize>,
    /// Pool positions of the usable terms.
    candidates: Vec<usize>,
    ranks: Vec<u64>,
    /// Universe positions covered by each candidate.
    covers: Vec<Vec<usize>>,
    /// Candidates covering each universe position, ascending.
    covered_by: Vec<Vec<usize>>,
}

impl LevelCover {
    pub fn gamma(&self) -> u8 {
        self.gamma
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    /// Pool positions of the terms usable at this level.
    pub fn candidates(&self) -> &[usize] {
        &self.candidates
    }
}

/// A function together with a pool of terms realizing it, split into
/// independent per-level covering problems.
///
/// Every pool term is `<= f` (the pool realizes `f`), so a subset realizes
/// `f` exactly when each point with `f(p) = gamma` is covered by some subset
/// term at level `gamma`.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    pool: Dnf,
    levels: Vec<LevelCover>,
}

impl CoverInstance {
    pub fn new(f: &KFunction, pool: &Dnf) -> Result<Self> {
        if let Some(p) = f.first_mismatch(pool)? {
            return Err(Error::precondition(format!("term pool does not realize the function at {p}")));
        }
        let space = f.space();
        let levels = decompose(f)
            .levels()
            .iter()
            .map(|level| {
                let universe: Vec<usize> = level.points.indices().collect();
                let mut candidates = Vec::new();
                let mut covers = Vec::new();
                let mut ranks = Vec::new();
                for (pos, term) in pool.terms().iter().enumerate() {
                    if term.gamma() != level.gamma {
                        continue;
                    }
                    let set = term.interval().to_point_set(space);
                    let hit: Vec<usize> = (0..universe.len()).filter(|&u| set.contains_index(universe[u])).collect();
                    if !hit.is_empty() {
                        candidates.push(pos);
                        covers.push(hit);
                        ranks.push(term.rank() as u64);
                    }
                }
                let mut covered_by = vec![Vec::new(); universe.len()];
                for (c, hit) in covers.iter().enumerate() {
                    for &u in hit {
                        covered_by[u].push(c);
                    }
                }
                LevelCover { gamma: level.gamma, universe, candidates, ranks, covers, covered_by }
            })
            .collect();
        Ok(CoverInstance { pool: pool.clone(), levels })
    }

    pub fn pool(&self) -> &Dnf {
        &self.pool
    }

    pub fn levels(&self) -> &[LevelCover] {
        &self.levels
    }

    /// Builds the DNF for chosen candidate positions, one list per level.
    pub(crate) fn assemble(&self, chosen: &[Vec<usize>]) -> Dnf {
        let mut terms: Vec<_> = self
            .levels
            .iter()
            .zip(chosen)
            .flat_map(|(level, picks)| picks.iter().map(|&c| self.pool.terms()[level.candidates[c]].clone()))
            .collect();
        terms.sort();
        Dnf::new(self.pool.space(), terms).expect("pool terms share the space")
    }
}

struct Search<'a> {
    level: &'a LevelCover,
    count: Vec<u32>,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    nodes: &'a mut u64,
    cap: u64,
}

impl<'a> Search<'a> {
    fn new(level: &'a LevelCover, nodes: &'a mut u64, cap: u64) -> Self {
        Search {
            level,
            count: vec![0; level.universe.len()],
            forbidden: vec![false; level.candidates.len()],
            chosen: Vec::new(),
            nodes,
            cap,
        }
    }

    fn tick(&mut self) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.cap {
            return Err(Error::capacity(format!("cover search visited more than {} nodes", self.cap)));
        }
        Ok(())
    }

    /// Uncovered element with the fewest allowed candidates, with its options.
    /// `None` when everything is covered.
    fn branch_point(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for (u, &n) in self.count.iter().enumerate() {
            if n > 0 {
                continue;
            }
            let options: Vec<usize> =
                self.level.covered_by[u].iter().copied().filter(|&c| !self.forbidden[c]).collect();
            if best.as_ref().is_none_or(|b| options.len() < b.len()) {
                let done = options.is_empty();
                best = Some(options);
                if done {
                    break;
                }
            }
        }
        best
    }

    fn add(&mut self, c: usize) {
        for &u in &self.level.covers[c] {
            self.count[u] += 1;
        }
        self.chosen.push(c);
    }

    fn remove(&mut self, c: usize) {
        for &u in &self.level.covers[c] {
            self.count[u] -= 1;
        }
        self.chosen.pop();
    }

    fn all_chosen_essential(&self) -> bool {
        self.chosen.iter().all(|&c| self.level.covers[c].iter().any(|&u| self.count[u] == 1))
    }

    fn sorted_chosen(&self) -> Vec<usize> {
        let mut v = self.chosen.clone();
        v.sort_unstable();
        v
    }

    /// Each irredundant cover is reached exactly once: when branching on an
    /// element, later branches forbid the earlier options.
    fn irredundant(&mut self, out: &mut Vec<Vec<usize>>) -> Result<()> {
        self.tick()?;
        let Some(options) = self.branch_point() else {
            out.push(self.sorted_chosen());
            return Ok(());
        };
        let mut banned = Vec::new();
        for c in options {
            self.add(c);
            if self.all_chosen_essential() {
                self.irredundant(out)?;
            }
            self.remove(c);
            self.forbidden[c] = true;
            banned.push(c);
        }
        for c in banned {
            self.forbidden[c] = false;
        }
        Ok(())
    }

    fn cost(&self, metric: Metric) -> (u64, u64) {
        let len = self.chosen.len() as u64;
        let rank: u64 = self.chosen.iter().map(|&c| self.level.ranks[c]).sum();
        match metric {
            Metric::FewestTerms => (len, rank),
            Metric::LeastTotalRank => (rank, len),
        }
    }

    fn lower_bound(&self, metric: Metric, options: &[usize]) -> (u64, u64) {
        let (a, b) = self.cost(metric);
        match metric {
            Metric::FewestTerms => {
                let uncovered = self.count.iter().filter(|&&n| n == 0).count() as u64;
                let widest = (0..self.level.candidates.len())
                    .filter(|&c| !self.forbidden[c])
                    .map(|c| self.level.covers[c].iter().filter(|&&u| self.count[u] == 0).count() as u64)
                    .max()
                    .unwrap_or(0)
                    .max(1);
                (a + uncovered.div_ceil(widest), b)
            }
            Metric::LeastTotalRank => {
                let cheapest = options.iter().map(|&c| self.level.ranks[c]).min().unwrap_or(0);
                (a + cheapest, b + 1)
            }
        }
    }

    fn optimum(&mut self, metric: Metric, best: &mut Option<((u64, u64), Vec<usize>)>) -> Result<()> {
        self.tick()?;
        let Some(options) = self.branch_point() else {
            let candidate = (self.cost(metric), self.sorted_chosen());
            if best.as_ref().is_none_or(|b| candidate < *b) {
                *best = Some(candidate);
            }
            return Ok(());
        };
        if options.is_empty() {
            return Ok(());
        }
        if let Some((bound, _)) = best {
            if self.lower_bound(metric, &options) > *bound {
                return Ok(());
            }
        }
        let mut banned = Vec::new();
        for c in options {
            self.add(c);
            self.optimum(metric, best)?;
            self.remove(c);
            self.forbidden[c] = true;
            banned.push(c);
        }
        for c in banned {
            self.forbidden[c] = false;
        }
        Ok(())
    }
}

/// All irredundant covers of one level, as sorted candidate positions.
pub(crate) fn irredundant_covers(level: &LevelCover, nodes: &mut u64) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    Search::new(level, nodes, DEAD_END_NODE_CAP).irredundant(&mut out)?;
    out.sort();
    Ok(out)
}

/// Optimal cover of one level; ties go to the lexicographically smallest
/// sorted candidate list.
pub(crate) fn optimal_cover(level: &LevelCover, metric: Metric, nodes: &mut u64) -> Result<Vec<usize>> {
    let mut best = None;
    Search::new(level, nodes, MINIMIZE_NODE_CAP).optimum(metric, &mut best)?;
    let (_, picks) = best.expect("level set is covered by the pool");
    Ok(picks)
}
