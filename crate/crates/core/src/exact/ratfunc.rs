//! Rational functions over the polynomial types of this module.

use std::fmt;

use super::bipoly::BiPoly;
use super::poly::{ParamPoly, Var};
use super::rat::Rat;
use crate::error::{Error, Result};

/// Minimal ring interface shared by [`ParamPoly`] and [`BiPoly`].
pub trait PolyRing: Clone + fmt::Display {
    fn ring_zero(&self) -> Self;
    fn ring_one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl PolyRing for ParamPoly {
    fn ring_zero(&self) -> Self {
        ParamPoly::zero(self.var())
    }
    fn ring_one(&self) -> Self {
        ParamPoly::one(self.var())
    }
    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl PolyRing for BiPoly {
    fn ring_zero(&self) -> Self {
        BiPoly::zero()
    }
    fn ring_one(&self) -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `num / den` with `den` never the zero polynomial.
#[derive(Clone)]
pub struct RatFunc<P: PolyRing> {
    num: P,
    den: P,
}

impl<P: PolyRing> RatFunc<P> {
    pub fn new(num: P, den: P) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: P) -> Self {
        let den = p.ring_one();
        RatFunc { num: p, den }
    }

    pub fn num(&self) -> &P {
        &self.num
    }

    pub fn den(&self) -> &P {
        &self.den
    }

    pub fn into_parts(self) -> (P, P) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality of cleared forms: `a/b == c/d` iff `a·d == c·b`.
    pub fn cross_diff(&self, other: &Self) -> P {
        self.num.mul(&other.den).sub(&other.num.mul(&self.den))
    }

    pub fn add(&self, o: &Self) -> Self {
        RatFunc {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        RatFunc {
            num: self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFunc {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl RatFunc<BiPoly> {
    pub fn equals(&self, other: &Self) -> bool {
        self.cross_diff(other).is_zero()
    }

    /// Value at a point; `None` where the denominator vanishes.
    pub fn eval(&self, n: &Rat, i: &Rat) -> Option<Rat> {
        let d = self.den.eval(n, i);
        (!d.is_zero()).then(|| self.num.eval(n, i) / d)
    }

    pub fn shift_i(&self, c: i64) -> Self {
        RatFunc {
            num: self.num.shift_i(c),
            den: self.den.shift_i(c),
        }
    }

    pub fn shift_n(&self, c: i64) -> Self {
        RatFunc {
            num: self.num.shift_n(c),
            den: self.den.shift_n(c),
        }
    }
}

impl RatFunc<ParamPoly> {
    pub fn constant(c: Rat, var: Var) -> Self {
        Self::from_poly(ParamPoly::constant(c, var))
    }

    /// Cancel the gcd and make the denominator monic.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return RatFunc {
                num: ParamPoly::zero(self.num.var()),
                den: ParamPoly::one(self.num.var()),
            };
        }
        let g = self.num.gcd(&self.den).expect("denominator is nonzero");
        let num = self.num.div_exact(&g).expect("gcd divides numerator");
        let den = self.den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading().recip();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.cross_diff(other).is_zero()
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl<P: PolyRing> fmt::Display for RatFunc<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<P: PolyRing> fmt::Debug for RatFunc<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_denominator_rejected() {
        let r = RatFunc::new(BiPoly::one(), BiPoly::zero());
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn cross_multiplied_equality() {
        // (n + i)/(n) == (n^2 + n i)/(n^2)
        let a = RatFunc::new(BiPoly::linear(0, 1, 1), BiPoly::n()).unwrap();
        let b = RatFunc::new(
            &BiPoly::linear(0, 1, 1) * &BiPoly::n(),
            BiPoly::n().pow(2),
        )
        .unwrap();
        assert!(a.equals(&b));
        assert!(!a.equals(&RatFunc::from_poly(BiPoly::one())));
    }

    #[test]
    fn univariate_reduction() {
        let x = ParamPoly::ident(Var::N);
        let num = &(&x * &x) - &ParamPoly::one(Var::N);
        let den = (&x - &ParamPoly::one(Var::N)).scale(&Rat::from(2));
        let r = RatFunc::new(num, den).unwrap().reduced();
        assert_eq!(r.den(), &ParamPoly::one(Var::N));
        assert_eq!(r.num(), &ParamPoly::from_ints(&[1, 1], Var::N).scale(&Rat::new(1, 2)));
    }
}
