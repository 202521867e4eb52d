//! Partial orders on `E_k`, monotonicity, structural checks for monotone
//! functions, exact counting, and the class-S cardinality estimate.

use std::f64::consts::PI;

use crate::conjunction::Dnf;
use crate::error::{Error, Result};
use crate::function::KFunction;
use crate::lattice::{Alphabet, Point, Space};
use crate::minimize::dead_end_dnfs;
use crate::reduced::reduced_dnf;

/// Node budget for the monotone-function backtracker.
pub const MONOTONE_NODE_CAP: u64 = 10_000_000;

/// A partial order on `E_k`, stored as its full `<=` relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValueOrder {
    k: Alphabet,
    le: Vec<bool>,
}

impl ValueOrder {
    /// `le(a, b)` gives `a <= b`. The relation must be a partial order.
    pub fn from_relation(k: Alphabet, le: impl Fn(u8, u8) -> bool) -> Result<Self> {
        let n = k.size();
        let mut table = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = le(a as u8, b as u8);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if !at(a, a) {
                return Err(Error::precondition(format!("order is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && at(a, b) && at(b, a) {
                    return Err(Error::precondition(format!("order is not antisymmetric on {a}, {b}")));
                }
                for c in 0..n {
                    if at(a, b) && at(b, c) && !at(a, c) {
                        return Err(Error::precondition(format!("order is not transitive on {a}, {b}, {c}")));
                    }
                }
            }
        }
        Ok(ValueOrder { k, le: table })
    }

    /// The chain `0 < 1 < ... < k-1`.
    pub fn total(k: Alphabet) -> Self {
        Self::from_relation(k, |a, b| a <= b).expect("chain is a partial order")
    }

    /// `0 < i` for every nonzero `i`; nonzero values pairwise incomparable.
    pub fn star(k: Alphabet) -> Self {
        Self::from_relation(k, |a, b| a == 0 || a == b).expect("star is a partial order")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.k
    }

    #[inline]
    pub fn le(&self, a: u8, b: u8) -> bool {
        self.le[a as usize * self.k.size() + b as usize]
    }

    /// `a >= b` in this order.
    #[inline]
    pub fn dominates(&self, a: u8, b: u8) -> bool {
        self.le(b, a)
    }

    /// Values `b` covering `a`: `a < b` with nothing strictly between.
    pub fn upper_covers(&self, a: u8) -> Vec<u8> {
        let k = self.k.k();
        (0..k)
            .filter(|&b| b != a && self.le(a, b))
            .filter(|&b| !(0..k).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b)))
            .collect()
    }

    pub fn lower_covers(&self, b: u8) -> Vec<u8> {
        (0..self.k.k()).filter(|&a| self.upper_covers(a).contains(&b)).collect()
    }

    /// Position of each value in some linear extension.
    fn linear_ranks(&self) -> Vec<usize> {
        let k = self.k.k();
        let mut ranks: Vec<usize> = (0..k).map(|a| (0..k).filter(|&b| self.le(b, a)).count()).collect();
        // `below-count` is a linear extension up to ties; break ties by value
        let mut order: Vec<u8> = (0..k).collect();
        order.sort_by_key(|&a| (ranks[a as usize], a));
        for (pos, &a) in order.iter().enumerate() {
            ranks[a as usize] = pos;
        }
        ranks
    }
}

/// Outcome of a monotonicity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    Monotone,
    /// `lower <= upper` coordinatewise but `f(lower) <= f(upper)` fails.
    Violation {
        lower: Point,
        upper: Point,
    },
}

impl Monotonicity {
    pub fn is_monotone(&self) -> bool {
        matches!(self, Monotonicity::Monotone)
    }
}

fn check_order(space: Space, order: &ValueOrder) -> Result<()> {
    if space.alphabet() != order.alphabet() {
        return Err(Error::AlphabetMismatch { expected: space.k(), found: order.alphabet().k() });
    }
    Ok(())
}

/// Checks monotonicity over covering pairs only (points differing in one
/// coordinate by one covering step), which suffices by transitivity.
pub fn is_monotone(f: &KFunction, order: &ValueOrder) -> Result<Monotonicity> {
    let space = f.space();
    check_order(space, order)?;
    let covers: Vec<Vec<u8>> = (0..space.k()).map(|a| order.upper_covers(a)).collect();
    for i in 0..space.size() {
        let p = space.decode(i);
        for var in 0..space.n() {
            let a = p.coords()[var];
            for &b in &covers[a as usize] {
                let j = i + (b as usize) * space.stride(var) - (a as usize) * space.stride(var);
                if !order.le(f.at(i), f.at(j)) {
                    return Ok(Monotonicity::Violation { lower: p, upper: space.decode(j) });
                }
            }
        }
    }
    Ok(Monotonicity::Monotone)
}

fn require_total_monotone(f: &KFunction) -> Result<()> {
    match is_monotone(f, &ValueOrder::total(f.space().alphabet()))? {
        Monotonicity::Monotone => Ok(()),
        Monotonicity::Violation { lower, upper } => {
            Err(Error::precondition(format!("function is not monotone: f{lower} > f{upper}")))
        }
    }
}

/// A term's lower corner and whether it is covered by no other term of the
/// reduced DNF at the same level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorePoint {
    pub term: usize,
    pub point: Point,
    pub exclusive: bool,
}

/// Structural facts about the reduced DNF of a monotone function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub reduced: Dnf,
    /// Every factor of every term is `[a, k-1]`.
    pub upper_intervals: bool,
    pub dead_end_count: usize,
    /// Exactly one dead-end DNF, and it is the reduced DNF.
    pub unique_dead_end: bool,
    pub core_points: Vec<CorePoint>,
}

impl Theorem1Report {
    pub fn holds(&self) -> bool {
        self.upper_intervals && self.unique_dead_end && self.core_points.iter().all(|c| c.exclusive)
    }
}

/// For `f` monotone under the chain order: checks that the reduced DNF uses
/// only upper-interval factors, that it is the unique dead-end DNF, and that
/// each term's corner `(a_1, ..., a_n)` is a core point.
pub fn check_theorem1_shape(f: &KFunction) -> Result<Theorem1Report> {
    require_total_monotone(f)?;
    let k = f.space().alphabet();
    let reduced = reduced_dnf(f).into_dnf();
    let upper_intervals = reduced.terms().iter().all(|t| t.interval().factors().iter().all(|m| m.is_upper(k)));
    let dead = dead_end_dnfs(f, &reduced)?;
    let unique_dead_end = dead.len() == 1 && dead[0] == reduced;

    let core_points = reduced
        .terms()
        .iter()
        .enumerate()
        .map(|(ti, t)| {
            let corner: Vec<u8> = t.interval().factors().iter().map(|m| m.least().expect("nonempty")).collect();
            let exclusive = !reduced
                .terms()
                .iter()
                .enumerate()
                .any(|(oi, o)| oi != ti && o.gamma() == t.gamma() && o.interval().contains_coords(&corner));
            CorePoint { term: ti, point: Point::new(corner), exclusive }
        })
        .collect();

    Ok(Theorem1Report { dead_end_count: dead.len(), reduced, upper_intervals, unique_dead_end, core_points })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub reduced: Dnf,
    /// Every factor is a gap-free run `[a, b]`.
    pub contiguous_factors: bool,
}

pub fn check_corollary_shape(f: &KFunction) -> Result<CorollaryReport> {
    require_total_monotone(f)?;
    let reduced = reduced_dnf(f).into_dnf();
    let contiguous_factors = reduced.terms().iter().all(|t| t.interval().factors().iter().all(|m| m.is_contiguous()));
    Ok(CorollaryReport { reduced, contiguous_factors })
}

/// Leading term of the cardinality estimate for class S, in log2 form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsiEstimate {
    pub n: usize,
    pub k: usize,
    /// `log2 psi(n) = k^(n+1) / (sqrt(2 pi (k-1)) sqrt(n))`; the `(1 + eps(n))`
    /// factor is dropped.
    pub log2_psi: f64,
    /// Largest chain width, 2 for the star order.
    pub d: u32,
    /// Variance infimum `(k-1)/k^2`.
    pub big_d: f64,
}

/// `psi(n) = d^( k^n / (sqrt(2 pi D) sqrt(n)) )` with the star order's
/// `d = 2` and `D = (k-1)/k^2`, attained by `Z_0 = -(k-1)/k`, `Z_i = 1/k`.
pub fn psi_estimate(n: usize, k: usize) -> Result<PsiEstimate> {
    if n == 0 {
        return Err(Error::precondition("psi estimate needs n >= 1"));
    }
    let k = Alphabet::new(k)?.size();
    let kf = k as f64;
    let log2_psi = kf.powi(n as i32 + 1) / ((2.0 * PI * (kf - 1.0)).sqrt() * (n as f64).sqrt());
    Ok(PsiEstimate { n, k, log2_psi, d: 2, big_d: (kf - 1.0) / (kf * kf) })
}

/// Enumerates monotone functions by backtracking over the points in a linear
/// extension of the product order; each point's value only has to dominate
/// its lower covers, which are all assigned earlier.
struct MonotoneSearch<'a> {
    order: &'a ValueOrder,
    /// Point indices in linear-extension order.
    sequence: Vec<usize>,
    /// Lower-cover neighbours of each point (by index).
    below: Vec<Vec<usize>>,
    table: Vec<u8>,
    nodes: u64,
}

impl<'a> MonotoneSearch<'a> {
    fn new(space: Space, order: &'a ValueOrder) -> Self {
        let ranks = order.linear_ranks();
        let mut sequence: Vec<usize> = (0..space.size()).collect();
        sequence.sort_by_key(|&i| {
            let p = space.decode(i);
            p.coords().iter().map(|&c| ranks[c as usize]).collect::<Vec<_>>()
        });
        let lower: Vec<Vec<u8>> = (0..space.k()).map(|b| order.lower_covers(b)).collect();
        let below = (0..space.size())
            .map(|i| {
                let p = space.decode(i);
                let mut out = Vec::new();
                for var in 0..space.n() {
                    let b = p.coords()[var] as usize;
                    for &a in &lower[b] {
                        out.push(i - b * space.stride(var) + a as usize * space.stride(var));
                    }
                }
                out
            })
            .collect();
        MonotoneSearch { order, sequence, below, table: vec![0; space.size()], nodes: 0 }
    }

    fn run(&mut self, pos: usize, visit: &mut impl FnMut(&[u8])) -> Result<()> {
        self.nodes += 1;
        if self.nodes > MONOTONE_NODE_CAP {
            return Err(Error::capacity(format!("monotone search exceeded {MONOTONE_NODE_CAP} nodes")));
        }
        if pos == self.sequence.len() {
            visit(&self.table);
            return Ok(());
        }
        let i = self.sequence[pos];
        for v in 0..self.order.alphabet().k() {
            if self.below[i].iter().all(|&j| self.order.le(self.table[j], v)) {
                self.table[i] = v;
                self.run(pos + 1, visit)?;
            }
        }
        Ok(())
    }
}

fn monotone_space(n: usize, order: &ValueOrder) -> Result<Space> {
    Space::with_alphabet(order.alphabet(), n)
}

/// Number of functions `E_k^n -> E_k` monotone under `order`.
pub fn count_monotone_exact(n: usize, order: &ValueOrder) -> Result<u64> {
    let space = monotone_space(n, order)?;
    let mut count = 0u64;
    MonotoneSearch::new(space, order).run(0, &mut |_| count += 1)?;
    Ok(count)
}

/// All functions monotone under `order`, in search order.
pub fn monotone_functions(n: usize, order: &ValueOrder) -> Result<Vec<KFunction>> {
    let space = monotone_space(n, order)?;
    let mut out = Vec::new();
    MonotoneSearch::new(space, order)
        .run(0, &mut |t| out.push(KFunction::new(space, t.to_vec()).expect("values in range")))?;
    Ok(out)
}
