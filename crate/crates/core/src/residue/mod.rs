//! Iterated residues of rational integrands with one formal parameter `t`.
//!
//! Two independent routes are provided: [`eval_residue`] expands a [`ResidueExpr`]
//! as a truncated Laurent series, and [`sums`] evaluates the corresponding
//! finite binomial sums directly.

pub mod catalog;
pub mod expr;
pub mod series;
pub mod sums;

pub use catalog::TripleShape;
pub use expr::{Atom, ResidueExpr, TExponent};
pub use series::{eval_residue, TruncSeries, TruncationPlan};
pub use sums::{
    direct_sum, k_generalized_sum, triple_sum_gp, triple_sum_gtilde, twisted_f, twisted_r1_r2,
};
