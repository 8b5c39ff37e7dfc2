//! Generalised binomial coefficients `C(a, k) = a(a-1)...(a-k+1)/k!`.

use num_bigint::BigInt;

use super::poly::{ParamPoly, Var};
use super::rat::{factorial_int, Rat};

/// `C(n, k)` for any integer `n` (negative included) and natural `k`.
pub fn binom_int(n: i64, k: u32) -> Rat {
    binom_big(&BigInt::from(n), k)
}

pub fn binom_big(n: &BigInt, k: u32) -> Rat {
    let mut num = BigInt::from(1);
    for j in 0..k {
        num *= n - BigInt::from(j);
    }
    Rat::new(num, factorial_int(k))
}

/// `C(n, k)` with `C(n, k) = 0` for negative `k`.
pub fn binom_signed(n: i64, k: i64) -> Rat {
    if k < 0 {
        Rat::zero()
    } else {
        binom_int(n, k as u32)
    }
}

/// `C(r, k)` for rational `r`.
pub fn binom_rat(r: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k {
        acc = acc * (r - Rat::from(j));
    }
    acc / Rat::factorial(k)
}

/// `C(t + shift, k)` as a degree-`k` polynomial in `t`.
pub fn binom_poly(shift: &Rat, k: u32) -> ParamPoly {
    let mut acc = ParamPoly::one(Var::T);
    for j in 0..k {
        let lin = ParamPoly::new(vec![shift - Rat::from(j), Rat::one()], Var::T);
        acc = &acc * &lin;
    }
    acc.scale(&Rat::factorial(k).recip())
}

/// `C(a + b·t, k)` with `b` in `{-1, 0, 1}` (any integer works).
pub fn binom_affine(a: &Rat, b: i64, k: u32) -> ParamPoly {
    match b {
        0 => ParamPoly::constant(binom_rat(a, k), Var::T),
        1 => binom_poly(a, k),
        _ => binom_poly(a, k).compose_affine(&Rat::from(b), &Rat::zero()),
    }
}

/// `C(a + b·t, k)` with `C(·, k) = 0` for negative `k`.
pub fn binom_affine_signed(a: &Rat, b: i64, k: i64) -> ParamPoly {
    if k < 0 {
        ParamPoly::zero(Var::T)
    } else {
        binom_affine(a, b, k as u32)
    }
}
