//! Representation and exact minimization of k-valued logic functions as
//! disjunctive normal forms over sublattices of `E_k^n`.
//!
//! A function `f: E_k^n -> E_k` is split into quasi-Boolean levels, each
//! level is covered by maximal intervals of its carrier (the reduced DNF),
//! and covers are then pruned to dead-end or optimal DNFs.

pub mod conjunction;
pub mod decomposition;
pub mod error;
pub mod function;
pub mod lattice;
pub mod minimize;
pub mod monotone;
pub mod reduced;
pub mod text;

pub use conjunction::{Dnf, ElementaryConjunction, Interval};
pub use decomposition::{decompose, max_representation, LevelDecomposition, MaxRepresentation};
pub use error::{Error, Result};
pub use function::{functions_equal, KFunction, PartialKFunction};
pub use lattice::{Alphabet, Point, PointSet, Space, ValueSet};
pub use minimize::{
    absorbs, absorbs_theorem2, absorption_witness, dead_end_dnfs, minimize_dnf, remove_step, widen_class_s, Metric,
    MinimizationResult, RemovalStep,
};
pub use monotone::{
    check_corollary_shape, check_theorem1_shape, count_monotone_exact, is_monotone, monotone_functions, psi_estimate,
    Monotonicity, PsiEstimate, ValueOrder,
};
pub use reduced::{is_maximal_in, maximal_intervals, reduced_dnf, reduced_dnf_partial, CarrierSet, ReducedDnf};
