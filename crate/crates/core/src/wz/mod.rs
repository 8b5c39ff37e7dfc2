//! Hypergeometric summation: shift quotients, Gosper, order-one Zeilberger,
//! certificate checking and first-order recurrences.

pub mod gosper;
pub mod linalg;
pub mod ratio;
pub mod recurrence;
pub mod term;
pub mod zeilberger;

pub use gosper::gosper;
pub use ratio::{shift_ratio, FactoredRatio, ShiftVar};
pub use recurrence::{solve_first_order, Recurrence};
pub use term::{definite_sum, Affine, BinomFactor, HyperTerm};
pub use zeilberger::{verify_certificate, zeilberger, zeilberger_order1, Certificate, SearchBounds, Verdict};
