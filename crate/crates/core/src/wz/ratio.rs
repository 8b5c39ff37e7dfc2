//! Shift quotients of hypergeometric terms as products of linear factors.

use num_integer::Integer;

use super::term::{Affine, BinomFactor, HyperTerm};
use crate::error::{Error, Result};
use crate::exact::{BiPoly, Rat, RatFunc};

/// `constant · Π num / Π den` with every factor linear in `(n, i)`.
///
/// Factors are primitive and have a positive leading coefficient (in `i`, then
/// `n`); factors independent of both variables are folded into the constant, and
/// identical factors in numerator and denominator are cancelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRatio {
    pub constant: Rat,
    pub num: Vec<Affine>,
    pub den: Vec<Affine>,
}

impl FactoredRatio {
    pub fn one() -> Self {
        FactoredRatio {
            constant: Rat::one(),
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        FactoredRatio {
            constant: c,
            ..Self::one()
        }
    }

    /// Build from raw factor lists; a numerator factor that is identically zero is a domain error.
    pub fn from_factors(constant: Rat, num: Vec<Affine>, den: Vec<Affine>) -> Result<Self> {
        let mut r = FactoredRatio {
            constant,
            num: Vec::new(),
            den: Vec::new(),
        };
        for f in num {
            let (c, g) = normalize(f)?;
            r.constant = r.constant * c;
            if let Some(g) = g {
                r.num.push(g);
            }
        }
        for f in den {
            let (c, g) = normalize(f)?;
            r.constant = r.constant / c;
            if let Some(g) = g {
                r.den.push(g);
            }
        }
        r.cancel();
        Ok(r)
    }

    fn cancel(&mut self) {
        self.num.sort();
        self.den.sort();
        let mut num = Vec::with_capacity(self.num.len());
        let mut den = std::mem::take(&mut self.den);
        for f in self.num.drain(..) {
            if let Some(pos) = den.iter().position(|g| *g == f) {
                den.remove(pos);
            } else {
                num.push(f);
            }
        }
        self.num = num;
        self.den = den;
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = FactoredRatio {
            constant: &self.constant * &o.constant,
            num: self.num.iter().chain(&o.num).copied().collect(),
            den: self.den.iter().chain(&o.den).copied().collect(),
        };
        r.cancel();
        r
    }

    pub fn inv(&self) -> Self {
        FactoredRatio {
            constant: self.constant.recip(),
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    /// Substitute `(n, i) -> (n + dn, i + di)`.
    pub fn shifted(&self, dn: i64, di: i64) -> Self {
        let mut r = FactoredRatio {
            constant: self.constant.clone(),
            num: self.num.iter().map(|f| f.shifted(dn, di)).collect(),
            den: self.den.iter().map(|f| f.shifted(dn, di)).collect(),
        };
        r.cancel();
        r
    }

    pub fn numerator(&self) -> BiPoly {
        product(&self.num).scale(&Rat::from_int(self.constant.numer().clone()))
    }

    pub fn denominator(&self) -> BiPoly {
        product(&self.den).scale(&Rat::from_int(self.constant.denom().clone()))
    }

    pub fn to_ratfunc(&self) -> RatFunc<BiPoly> {
        RatFunc::new(self.numerator(), self.denominator()).expect("denominator factors are nonzero")
    }

    /// Value at a point, `None` on a pole.
    pub fn eval(&self, n: &Rat, i: &Rat) -> Option<Rat> {
        self.to_ratfunc().eval(n, i)
    }
}

impl std::fmt::Display for FactoredRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = |v: &[Affine]| {
            if v.is_empty() {
                "1".to_string()
            } else {
                v.iter().map(|a| format!("({a})")).collect::<Vec<_>>().join("")
            }
        };
        write!(f, "{} * {} / {}", self.constant, side(&self.num), side(&self.den))
    }
}

pub fn product(fs: &[Affine]) -> BiPoly {
    fs.iter().fold(BiPoly::one(), |acc, f| &acc * &f.to_bipoly())
}

/// Split off content and sign: `f = c · g` with `g` primitive and leading coefficient positive.
fn normalize(f: Affine) -> Result<(Rat, Option<Affine>)> {
    if f.is_constant() {
        if f.c0 == 0 {
            return Err(Error::Domain("zero factor in a shift quotient".into()));
        }
        return Ok((Rat::from(f.c0), None));
    }
    let g = f.c0.gcd(&f.cn).gcd(&f.ci);
    let lead = if f.ci != 0 { f.ci } else { f.cn };
    let c = if lead < 0 { -g } else { g };
    Ok((
        Rat::from(c),
        Some(Affine::new(f.c0 / c, f.cn / c, f.ci / c)),
    ))
}

/// `Γ(x + d) / Γ(x)` as linear factors.
fn gamma_ratio(x: Affine, d: i64) -> (Vec<Affine>, Vec<Affine>) {
    if d >= 0 {
        ((0..d).map(|j| x + Affine::constant(j)).collect(), Vec::new())
    } else {
        (Vec::new(), (1..=-d).map(|j| x - Affine::constant(j)).collect())
    }
}

/// `C(a + da, k + dk) / C(a, k)` for the factor `C(a, k)` shifted by `(dn, di)`.
fn binom_shift(f: &BinomFactor, dn: i64, di: i64) -> (Vec<Affine>, Vec<Affine>) {
    let a = f.top;
    let k = f.bottom;
    let da = a.cn * dn + a.ci * di;
    let dk = k.cn * dn + k.ci * di;
    let one = Affine::constant(1);
    let (n1, d1) = gamma_ratio(a + one, da);
    let (n2, d2) = gamma_ratio(k + one, dk);
    let (n3, d3) = gamma_ratio(a - k + one, da - dk);
    let num = n1.into_iter().chain(d2).chain(d3).collect();
    let den = d1.into_iter().chain(n2).chain(n3).collect();
    (num, den)
}

/// `F(n + dn, i + di) / F(n, i)` in factored form.
pub fn factored_shift(f: &HyperTerm, dn: i64, di: i64) -> Result<FactoredRatio> {
    let sign = Rat::sign_pow(f.sign.cn * dn + f.sign.ci * di);
    let mut num = Vec::new();
    let mut den = Vec::new();
    for b in &f.factors {
        let (n, d) = binom_shift(b, dn, di);
        num.extend(n);
        den.extend(d);
    }
    FactoredRatio::from_factors(sign, num, den)
}

/// Which variable to shift by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftVar {
    N,
    I,
}

/// `F(n+1, i)/F(n, i)` or `F(n, i+1)/F(n, i)`, fully cancelled.
pub fn shift_ratio(f: &HyperTerm, var: ShiftVar) -> Result<RatFunc<BiPoly>> {
    let (dn, di) = match var {
        ShiftVar::N => (1, 0),
        ShiftVar::I => (0, 1),
    };
    Ok(factored_shift(f, dn, di)?.to_ratfunc())
}
