//! Proper hypergeometric terms built from binomial factors with affine arguments.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binom_big, BiPoly, Rat};

/// `c0 + cn·n + ci·i` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Affine {
    #[serde(default)]
    pub c0: i64,
    #[serde(default)]
    pub cn: i64,
    #[serde(default)]
    pub ci: i64,
}

impl Affine {
    pub const fn new(c0: i64, cn: i64, ci: i64) -> Self {
        Affine { c0, cn, ci }
    }

    pub const fn constant(c0: i64) -> Self {
        Affine::new(c0, 0, 0)
    }

    pub fn eval(&self, n: i64, i: i64) -> i64 {
        self.c0 + self.cn * n + self.ci * i
    }

    pub fn eval_rat(&self, n: &Rat, i: &Rat) -> Rat {
        Rat::from(self.c0) + Rat::from(self.cn) * n + Rat::from(self.ci) * i
    }

    /// `self(n + dn, i + di)`.
    pub fn shifted(&self, dn: i64, di: i64) -> Self {
        Affine::new(self.c0 + self.cn * dn + self.ci * di, self.cn, self.ci)
    }

    pub fn is_constant(&self) -> bool {
        self.cn == 0 && self.ci == 0
    }

    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::linear(self.c0, self.cn, self.ci)
    }
}

impl std::ops::Add for Affine {
    type Output = Affine;
    fn add(self, o: Affine) -> Affine {
        Affine::new(self.c0 + o.c0, self.cn + o.cn, self.ci + o.ci)
    }
}

impl std::ops::Sub for Affine {
    type Output = Affine;
    fn sub(self, o: Affine) -> Affine {
        Affine::new(self.c0 - o.c0, self.cn - o.cn, self.ci - o.ci)
    }
}

impl std::fmt::Display for Affine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (c, v) in [(self.cn, "n"), (self.ci, "i")] {
            match c {
                0 => {}
                1 => parts.push(v.to_string()),
                -1 => parts.push(format!("-{v}")),
                _ => parts.push(format!("{c}{v}")),
            }
        }
        if self.c0 != 0 || parts.is_empty() {
            parts.push(self.c0.to_string());
        }
        let s = parts.join(" + ").replace("+ -", "- ");
        write!(f, "{s}")
    }
}

/// `C(top, bottom)`; zero whenever `bottom < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomFactor {
    pub top: Affine,
    pub bottom: Affine,
}

impl BinomFactor {
    pub const fn new(top: Affine, bottom: Affine) -> Self {
        BinomFactor { top, bottom }
    }

    pub fn eval(&self, n: i64, i: i64) -> Rat {
        let k = self.bottom.eval(n, i);
        if k < 0 {
            return Rat::zero();
        }
        binom_big(&BigInt::from(self.top.eval(n, i)), k as u32)
    }
}

/// `(-1)^sign(n,i) · Π C(top_j, bottom_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperTerm {
    #[serde(default)]
    pub sign: Affine,
    pub factors: Vec<BinomFactor>,
}

impl HyperTerm {
    pub fn new(sign: Affine, factors: Vec<BinomFactor>) -> Self {
        HyperTerm { sign, factors }
    }

    pub fn eval(&self, n: i64, i: i64) -> Rat {
        let mut acc = Rat::sign_pow(self.sign.eval(n, i));
        for f in &self.factors {
            acc = acc * f.eval(n, i);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: HyperTerm = serde_json::from_str(s)?;
        if t.factors.is_empty() {
            return Err(Error::Input("hypergeometric term needs at least one factor".into()));
        }
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }
}

/// `Σ_{i = lower(n)}^{upper(n)} F(n, i)`; bounds must not depend on `i`.
pub fn definite_sum(f: &HyperTerm, lower: Affine, upper: Affine, n: i64) -> Result<Rat> {
    if lower.ci != 0 || upper.ci != 0 {
        return Err(Error::Input("summation bounds must depend on n only".into()));
    }
    let (lo, hi) = (lower.eval(n, 0), upper.eval(n, 0));
    Ok((lo..=hi).map(|i| f.eval(n, i)).sum())
}

/// `(-1)^i C(-2m-1, i) C(-2m-1, 2m-i) C(2m, i)`, summed over `0 ≤ i ≤ 2m`.
pub fn striplet_term() -> HyperTerm {
    HyperTerm::new(
        Affine::new(0, 0, 1),
        vec![
            BinomFactor::new(Affine::new(-1, -2, 0), Affine::new(0, 0, 1)),
            BinomFactor::new(Affine::new(-1, -2, 0), Affine::new(0, 2, -1)),
            BinomFactor::new(Affine::new(0, 2, 0), Affine::new(0, 0, 1)),
        ],
    )
}

/// `(-1)^i C(2p, i) C(-2p, 2p-1-i) C(-2p, i-1)`, summed over `1 ≤ i ≤ 2p-1`.
pub fn triplet_linear_term() -> HyperTerm {
    HyperTerm::new(
        Affine::new(0, 0, 1),
        vec![
            BinomFactor::new(Affine::new(0, 2, 0), Affine::new(0, 0, 1)),
            BinomFactor::new(Affine::new(0, -2, 0), Affine::new(-1, 2, -1)),
            BinomFactor::new(Affine::new(0, -2, 0), Affine::new(-1, 0, 1)),
        ],
    )
}

/// `(-1)^i C(-2m-1, 2m-i-1) C(-2m-1, i) C(2m, i)`, summed over `0 ≤ i ≤ 2m-1`.
pub fn twisted_term() -> HyperTerm {
    HyperTerm::new(
        Affine::new(0, 0, 1),
        vec![
            BinomFactor::new(Affine::new(-1, -2, 0), Affine::new(-1, 2, -1)),
            BinomFactor::new(Affine::new(-1, -2, 0), Affine::new(0, 0, 1)),
            BinomFactor::new(Affine::new(0, 2, 0), Affine::new(0, 0, 1)),
        ],
    )
}

/// `Sum(m) = Σ_{i=0}^{2m} F(m, i)`.
pub fn striplet_sum(m: i64) -> Rat {
    definite_sum(&striplet_term(), Affine::constant(0), Affine::new(0, 2, 0), m).expect("n-only bounds")
}

/// `f(p) = Σ_{i=1}^{2p-1} (-1)^i C(2p,i) C(-2p,2p-1-i) C(-2p,i-1)`.
pub fn triplet_linear_sum(p: i64) -> Rat {
    definite_sum(&triplet_linear_term(), Affine::constant(1), Affine::new(-1, 2, 0), p)
        .expect("n-only bounds")
}

/// `TSum(m) = Σ_{i=0}^{2m-1} (-1)^i C(-2m-1,2m-i-1) C(-2m-1,i) C(2m,i)`.
pub fn twisted_sum(m: i64) -> Rat {
    definite_sum(&twisted_term(), Affine::constant(0), Affine::new(-1, 2, 0), m).expect("n-only bounds")
}

/// `(-1)^m (3m)! / m!^3`.
pub fn striplet_sum_closed(m: u32) -> Rat {
    Rat::sign_pow(m as i64) * Rat::factorial(3 * m) / Rat::factorial(m).pow(3)
}

/// `(-1)^p 2 (3p-2)! / ((2p-1) (p-1)!^3)`.
pub fn triplet_linear_closed(p: u32) -> Rat {
    Rat::sign_pow(p as i64) * Rat::from(2) * Rat::factorial(3 * p - 2)
        / (Rat::from(2 * p - 1) * Rat::factorial(p - 1).pow(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sums() {
        assert_eq!(striplet_sum(1), Rat::from(-6));
        assert_eq!(striplet_sum(2), Rat::from(90));
        assert_eq!(triplet_linear_sum(2), Rat::from(16));
        assert_eq!(twisted_sum(1), Rat::from(3));
    }

    #[test]
    fn json_shape() {
        let t = striplet_term();
        let back = HyperTerm::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        let src = r#"{"sign":{"c0":0,"cn":0,"ci":1},"factors":[{"top":{"c0":0,"cn":2,"ci":0},"bottom":{"c0":0,"cn":0,"ci":1}}]}"#;
        let t = HyperTerm::from_json(src).unwrap();
        assert_eq!(t.eval(2, 1), Rat::from(-4));
    }

    #[test]
    fn empty_range_is_zero() {
        let t = striplet_term();
        let s = definite_sum(&t, Affine::constant(3), Affine::constant(1), 1).unwrap();
        assert!(s.is_zero());
    }
}
