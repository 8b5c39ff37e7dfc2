//! Dense univariate polynomials over [`Rat`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rat::Rat;
use crate::error::{Error, Result};

/// Display label for the polynomial's indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    #[default]
    T,
    X,
    N,
    I,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
            Var::N => "n",
            Var::I => "i",
        }
    }
}

/// A univariate polynomial stored as a dense coefficient list, lowest degree first.
///
/// The coefficient list never carries trailing zeros, so the zero polynomial is
/// the empty list and `coeffs().last()` is the leading coefficient.
#[derive(Clone, Serialize, Deserialize)]
pub struct ParamPoly {
    coeffs: Vec<Rat>,
    #[serde(default)]
    var: Var,
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for ParamPoly {}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<Rat>, var: Var) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        ParamPoly { coeffs, var }
    }

    pub fn zero(var: Var) -> Self {
        ParamPoly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rat::one(), var)
    }

    pub fn constant(c: Rat, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    /// The indeterminate itself.
    pub fn ident(var: Var) -> Self {
        Self::new(vec![Rat::zero(), Rat::one()], var)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rat, var: Var) -> Self {
        Self::new(vec![-r, Rat::one()], var)
    }

    /// Monic product of `(x - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rat>, var: Var) -> Self {
        roots
            .into_iter()
            .fold(Self::one(var), |acc, r| &acc * &Self::linear_root(r, var))
    }

    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from(c)).collect(), var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.var), |acc, _| &acc * self)
    }

    /// Substitution `p(a·x + b)`.
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()], self.var);
        self.coeffs.iter().rev().fold(Self::zero(self.var), |acc, c| {
            &(&acc * &lin) + &Self::constant(c.clone(), self.var)
        })
    }

    pub fn shift(&self, b: &Rat) -> Self {
        self.compose_affine(&Rat::one(), b)
    }

    /// Substitution `p(q(x))`.
    pub fn compose(&self, q: &ParamPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(self.var), |acc, c| {
            &(&acc * q) + &Self::constant(c.clone(), self.var)
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from(k))
                .collect(),
            self.var,
        )
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &ParamPoly) -> Result<(ParamPoly, ParamPoly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lc_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(self.var), Self::zero(self.var)));
        };
        if sd < dd {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let mut quot = vec![Rat::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot, self.var), Self::new(rem, self.var)))
    }

    /// Quotient when `d` divides `self` exactly, otherwise `None`.
    pub fn div_exact(&self, d: &ParamPoly) -> Option<ParamPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &ParamPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &ParamPoly) -> Result<ParamPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("gcd of two zero polynomials".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // Normalising remainders keeps coefficient sizes down.
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Largest `k` with `(x - r)^k | self`.
    pub fn root_multiplicity(&self, r: &Rat) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Domain("root multiplicity in the zero polynomial".into()));
        }
        let lin = Self::linear_root(r, self.var);
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(&lin) {
            cur = q;
            k += 1;
        }
        Ok(k)
    }

    /// Least common multiple of coefficient denominators.
    pub fn denom_lcm(&self) -> num_bigint::BigInt {
        Rat::denom_lcm(&self.coeffs)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.name();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl<'b> Add<&'b ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &'b ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        ParamPoly::new(coeffs, self.var)
    }
}

impl<'b> Sub<&'b ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &'b ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        ParamPoly::new(coeffs, self.var)
    }
}

impl<'b> Mul<&'b ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &'b ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero(self.var);
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        ParamPoly::new(out, self.var)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::new(self.coeffs.iter().map(|c| -c).collect(), self.var)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: &'a ParamPoly) -> ParamPoly {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}
