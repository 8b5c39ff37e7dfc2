//! Direct finite-sum forms of the residues and their closed forms.

use std::collections::HashMap;

use super::catalog::{self, TripleShape};
use super::expr::TExponent;
use crate::exact::{binom_affine, binom_int, binom_poly, binom_signed, ParamPoly, Rat, Var};

/// Memoised `C(a + b·t, k)`.
#[derive(Default)]
struct BinomCache {
    map: HashMap<(Rat, i64, i64), ParamPoly>,
}

impl BinomCache {
    fn get(&mut self, e: &TExponent, k: i64) -> ParamPoly {
        if k < 0 {
            return ParamPoly::zero(Var::T);
        }
        self.map
            .entry((e.constant.clone(), e.t_coeff, k))
            .or_insert_with(|| binom_affine(&e.constant, e.t_coeff, k as u32))
            .clone()
    }
}

fn sign(e: i64) -> Rat {
    Rat::sign_pow(e)
}

/// Residue of a [`TripleShape`] by expanding each factor and summing over the
/// three free indices: `s` from `(z2 - z3)^D` and `j`, `k` from the two
/// geometric series.
pub fn direct_sum(shape: &TripleShape) -> ParamPoly {
    let n = shape.common_pole;
    let d = shape.diff as i64;
    let m = shape.geom as i64;
    let mut cache = BinomCache::default();
    let mut acc = ParamPoly::zero(Var::T);
    for s in 0..=d {
        let cs = binom_int(d, s as u32);
        for j in 0..=(n - 1 - d + s).max(-1) {
            let a2 = n - 1 - d + s - j;
            let b2 = cache.get(&shape.beta2, a2);
            let cj = binom_signed(-m, j);
            for k in 0..=(n - 1 - s).max(-1) {
                let a3 = n - 1 - s - k;
                let c = &cs * &cj * binom_signed(-m, k) * sign(s + j + k);
                let g = cache.get(&shape.gamma, shape.z1_pole + n - 1 + j + k);
                let term = &(&b2 * &cache.get(&shape.beta3, a3)) * &g;
                acc = &acc + &term.scale(&c);
            }
        }
    }
    acc
}

/// The triple sum for `G_p(t)` over `1 ≤ i ≤ 2p-1`, `0 ≤ j ≤ 2p-1-i`, `0 ≤ k ≤ i-1`,
/// with the alternating sign `(-1)^(i+j+k)` coming from the expansion of
/// `(z2 - z3)^(2p)` and the two geometric factors.
pub fn triple_sum_gp(p: u32) -> ParamPoly {
    triple_sum_gp_signed(p, true)
}

/// Same index set without the alternating sign. Kept for comparison only: it does
/// not agree with the residue.
pub fn triple_sum_gp_unsigned(p: u32) -> ParamPoly {
    triple_sum_gp_signed(p, false)
}

fn triple_sum_gp_signed(p: u32, signed: bool) -> ParamPoly {
    let p = p as i64;
    let t = TExponent::int(0, 1);
    let top = TExponent::int(2 * p - 1, -1);
    let mut cache = BinomCache::default();
    let mut acc = ParamPoly::zero(Var::T);
    for i in 1..=2 * p - 1 {
        for j in 0..=2 * p - i - 1 {
            for k in 0..=i - 1 {
                let mut c = binom_int(2 * p, i as u32)
                    * binom_int(-2 * p, j as u32)
                    * binom_int(-2 * p, k as u32);
                if signed {
                    c = c * sign(i + j + k);
                }
                let term = &(&cache.get(&t, 2 * p - 1 - i - j) * &cache.get(&t, i - 1 - k))
                    * &cache.get(&top, 2 * p + j + k + 1);
                acc = &acc + &term.scale(&c);
            }
        }
    }
    acc
}

/// `G̃_m(t)` over `0 ≤ i ≤ 2m`, `0 ≤ j ≤ 2m-i`, `0 ≤ k ≤ i`.
pub fn triple_sum_gtilde(m: u32) -> ParamPoly {
    let m = m as i64;
    let t = TExponent::int(0, 1);
    let top = TExponent::int(2 * m, -1);
    let mut cache = BinomCache::default();
    let mut acc = ParamPoly::zero(Var::T);
    for i in 0..=2 * m {
        for j in 0..=2 * m - i {
            for k in 0..=i {
                let c = sign(i + j + k)
                    * binom_int(-2 * m - 1, k as u32)
                    * binom_int(-2 * m - 1, j as u32)
                    * binom_int(2 * m, i as u32);
                let term = &(&cache.get(&t, i - k) * &cache.get(&t, 2 * m - j - i))
                    * &cache.get(&top, 2 * m + 1 + k + j);
                acc = &acc + &term.scale(&c);
            }
        }
    }
    acc
}

/// Twisted `F(m, t)` summed over `0 ≤ i ≤ 2m` and all `j, k ≥ 0` with
/// nonnegative lower indices.
pub fn twisted_f(m: u32) -> ParamPoly {
    let m = m as i64;
    let top = TExponent::half(4 * m + 1, -1);
    let plus = TExponent::half(1, 1);
    let minus = TExponent::half(-1, 1);
    let mut cache = BinomCache::default();
    let mut acc = ParamPoly::zero(Var::T);
    for i in 0..=2 * m {
        for k in 0..=i {
            for j in 0..=2 * m - i {
                let c = sign(j + k + i)
                    * binom_int(-2 * m - 1, j as u32)
                    * binom_int(-2 * m - 1, k as u32)
                    * binom_int(2 * m, i as u32);
                let term = &(&cache.get(&top, 2 * m + 3 + j + k) * &cache.get(&plus, i - k))
                    * &cache.get(&minus, 2 * m - j - i);
                acc = &acc + &term.scale(&c);
            }
        }
    }
    acc
}

/// The two twisted residues, each with unit normalisation of the outer constants.
pub fn twisted_r1_r2(m: u32) -> (ParamPoly, ParamPoly) {
    (
        direct_sum(&catalog::twisted_r1(m)),
        direct_sum(&catalog::twisted_r2(m)),
    )
}

/// `Σ_{i=k}^{2p-k} (-1)^i C(2p,i) C(-2p,2p-k-i) C(-2p,i-k)`.
pub fn k_generalized_sum(p: u32, k: u32) -> Rat {
    let (p, k) = (p as i64, k as i64);
    (k..=2 * p - k)
        .map(|i| {
            sign(i)
                * binom_int(2 * p, i as u32)
                * binom_signed(-2 * p, 2 * p - k - i)
                * binom_signed(-2 * p, i - k)
        })
        .sum()
}

/// `2 (-1)^p (3p-1-k)! / ((2p-k) (p-1)!^2 (p-k)!)`.
pub fn k_generalized_closed(p: u32, k: u32) -> Rat {
    let f = |n: u32| Rat::factorial(n);
    Rat::from(2) * sign(p as i64) * f(3 * p - 1 - k)
        / (Rat::from(2 * p - k) * f(p - 1).pow(2) * f(p - k))
}

/// `H_p(t) = C(2p,p) C(2p-2,p-1) C(t+p, 4p-1)`.
pub fn h_p(p: u32) -> ParamPoly {
    let p64 = p as i64;
    let c = binom_int(2 * p64, p) * binom_int(2 * p64 - 2, p - 1);
    binom_poly(&Rat::from(p), 4 * p - 1).scale(&c)
}

/// `-C(2m,m)^2 C(t+m, 4m+1)`.
pub fn gtilde_closed(m: u32) -> ParamPoly {
    let c = binom_int(2 * m as i64, m).pow(2);
    binom_poly(&Rat::from(m), 4 * m + 1).scale(&-c)
}

/// `C(2m,m) C(2m+1,m) (t-m) C(t+1/2+m, 4m+2) / ((4m+3)(2m-1))`.
pub fn twisted_f_closed(m: u32) -> ParamPoly {
    let m64 = m as i64;
    let c = binom_int(2 * m64, m) * binom_int(2 * m64 + 1, m)
        / (Rat::from(4 * m64 + 3) * Rat::from(2 * m64 - 1));
    let lin = ParamPoly::linear_root(&Rat::from(m), Var::T);
    let b = binom_poly(&(Rat::new(1, 2) + Rat::from(m)), 4 * m + 2);
    (&lin * &b).scale(&c)
}

/// `-C(2m,m)^2 (2m+1)/(m+1) C(t+m+1/2, 4m+2)`.
pub fn r2_closed(m: u32) -> ParamPoly {
    let m64 = m as i64;
    let c = binom_int(2 * m64, m).pow(2) * Rat::new(2 * m64 + 1, m64 + 1);
    binom_poly(&(Rat::from(m) + Rat::new(1, 2)), 4 * m + 2).scale(&-c)
}

/// The constant `c` with `computed = c · expected`, when one exists.
pub fn proportionality_constant(computed: &ParamPoly, expected: &ParamPoly) -> Option<Rat> {
    if expected.is_zero() {
        return computed.is_zero().then(Rat::one);
    }
    let d = expected.degree()?;
    let c = computed.coeff(d) / expected.coeff(d);
    (expected.scale(&c) == *computed).then_some(c)
}

/// `p(2c - t)` for the reflection `t ↦ 2c - t` written as `t ↦ s - t`.
pub fn reflect(p: &ParamPoly, s: &Rat) -> ParamPoly {
    p.compose_affine(&-Rat::one(), s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gp_at_two() {
        let expected = binom_poly(&Rat::from(2), 7).scale(&Rat::from(12));
        assert_eq!(h_p(2), expected);
        assert_eq!(triple_sum_gp(2), expected);
    }

    #[test]
    fn unsigned_gp_sum_disagrees() {
        assert_ne!(triple_sum_gp_unsigned(2), h_p(2));
    }

    #[test]
    fn gtilde_degenerate_case() {
        assert_eq!(triple_sum_gtilde(0), ParamPoly::from_ints(&[0, -1], Var::T));
    }

    #[test]
    fn k_sum_small_cases() {
        assert_eq!(k_generalized_sum(2, 1), Rat::from(16));
        assert_eq!(k_generalized_sum(2, 2), Rat::from(6));
        assert_eq!(k_generalized_closed(2, 2), Rat::from(6));
        assert_eq!(k_generalized_closed(3, 1), Rat::from(-252));
    }

    #[test]
    fn proportionality_reports_constant() {
        let a = ParamPoly::from_ints(&[1, 2], Var::T);
        assert_eq!(proportionality_constant(&a.scale(&Rat::new(-3, 2)), &a), Some(Rat::new(-3, 2)));
        assert_eq!(proportionality_constant(&ParamPoly::from_ints(&[1, 1], Var::T), &a), None);
    }
}
