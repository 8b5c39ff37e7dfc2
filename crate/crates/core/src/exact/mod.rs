//! Exact scalar and polynomial arithmetic.

pub mod binom;
pub mod bipoly;
pub mod poly;
pub mod rat;
pub mod ratfunc;

pub use binom::{binom_affine, binom_affine_signed, binom_big, binom_int, binom_poly, binom_rat, binom_signed};
pub use bipoly::BiPoly;
pub use poly::{ParamPoly, Var};
pub use rat::Rat;
pub use ratfunc::{PolyRing, RatFunc};

/// Monic gcd of two polynomials; both zero is a domain error.
pub fn poly_gcd(a: &ParamPoly, b: &ParamPoly) -> crate::Result<ParamPoly> {
    a.gcd(b)
}

/// Multiplicity of `r` as a root of `f`; zero `f` is a domain error.
pub fn root_multiplicity(f: &ParamPoly, r: &Rat) -> crate::Result<usize> {
    f.root_multiplicity(r)
}
