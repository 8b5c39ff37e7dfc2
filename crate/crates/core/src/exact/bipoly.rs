//! Sparse polynomials in two variables `(n, i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::binom::binom_int;
use super::poly::{ParamPoly, Var};
use super::rat::Rat;

/// Sparse map from `(deg_n, deg_i)` to coefficient. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn n() -> Self {
        Self::monomial(1, 0, Rat::one())
    }

    pub fn i() -> Self {
        Self::monomial(0, 1, Rat::one())
    }

    pub fn monomial(dn: u32, di: u32, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(dn, di, c);
        p
    }

    /// `c0 + cn·n + ci·i`.
    pub fn linear(c0: i64, cn: i64, ci: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, Rat::from(c0));
        p.add_term(1, 0, Rat::from(cn));
        p.add_term(0, 1, Rat::from(ci));
        p
    }

    /// Embed a polynomial in `n`.
    pub fn from_poly_n(p: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(k as u32, 0, c.clone());
        }
        out
    }

    /// Embed a polynomial in `i`.
    pub fn from_poly_i(p: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, k as u32, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, dn: u32, di: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((dn, di)).or_insert_with(Rat::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&(dn, di));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_i(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, di)| di).max()
    }

    pub fn degree_n(&self) -> Option<u32> {
        self.terms.keys().map(|&(dn, _)| dn).max()
    }

    /// Coefficient of `i^k`, a polynomial in `n`.
    pub fn coeff_i(&self, k: u32) -> ParamPoly {
        let deg = self.degree_n().unwrap_or(0) as usize;
        let mut c = vec![Rat::zero(); deg + 1];
        for (&(dn, di), v) in &self.terms {
            if di == k {
                c[dn as usize] += v;
            }
        }
        ParamPoly::new(c, Var::N)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn eval(&self, n: &Rat, i: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&(dn, di), c)| c * n.pow(dn) * i.pow(di))
            .sum()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitute `i -> i + c`.
    pub fn shift_i(&self, c: i64) -> Self {
        self.shift(0, c)
    }

    /// Substitute `n -> n + c`.
    pub fn shift_n(&self, c: i64) -> Self {
        self.shift(c, 0)
    }

    fn shift(&self, cn: i64, ci: i64) -> Self {
        if cn == 0 && ci == 0 {
            return self.clone();
        }
        let mut out = Self::zero();
        for (&(dn, di), v) in &self.terms {
            // (n + cn)^dn (i + ci)^di expanded binomially.
            for a in 0..=dn {
                let ca = binom_int(dn as i64, a) * Rat::from(cn).pow(dn - a);
                if ca.is_zero() {
                    continue;
                }
                for b in 0..=di {
                    let cb = binom_int(di as i64, b) * Rat::from(ci).pow(di - b);
                    if cb.is_zero() {
                        continue;
                    }
                    out.add_term(a, b, v * &ca * &cb);
                }
            }
        }
        out
    }

    /// Least common multiple of coefficient denominators.
    pub fn denom_lcm(&self) -> num_bigint::BigInt {
        Rat::denom_lcm(self.terms.values())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(dn, di), c)| {
                let mut s = format!("({c})");
                match dn {
                    0 => {}
                    1 => s.push_str("*n"),
                    _ => s.push_str(&format!("*n^{dn}")),
                }
                match di {
                    0 => {}
                    1 => s.push_str("*i"),
                    _ => s.push_str(&format!("*i^{di}")),
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl<'b> Add<&'b BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'b BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(dn, di), v) in &rhs.terms {
            out.add_term(dn, di, v.clone());
        }
        out
    }
}

impl<'b> Sub<&'b BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'b BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(dn, di), v) in &rhs.terms {
            out.add_term(dn, di, -v);
        }
        out
    }
}

impl<'b> Mul<&'b BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'b BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(an, ai), av) in &self.terms {
            for (&(bn, bi), bv) in &rhs.terms {
                out.add_term(an + bn, ai + bi, av * bv);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rat::one())
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_coefficients_stored() {
        let p = &BiPoly::linear(1, 2, 3) - &BiPoly::linear(1, 2, 3);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = &BiPoly::linear(1, -2, 3).pow(3) * &BiPoly::linear(0, 1, 1);
        let q = p.shift_i(2).shift_n(-1);
        for (n, i) in [(0, 0), (3, -2), (5, 7)] {
            let (n, i) = (Rat::from(n), Rat::from(i));
            let lhs = q.eval(&n, &i);
            let rhs = p.eval(&(&n - Rat::one()), &(&i + Rat::from(2)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coefficient_extraction() {
        // (n + i)^2 = n^2 + 2 n i + i^2
        let p = BiPoly::linear(0, 1, 1).pow(2);
        assert_eq!(p.coeff_i(1), ParamPoly::from_ints(&[0, 2], Var::N));
        assert_eq!(p.coeff_i(0), ParamPoly::from_ints(&[0, 0, 1], Var::N));
    }
}
