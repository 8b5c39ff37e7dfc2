//! Weights and the defining polynomials of each Zhu-algebra family.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Rat, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Family {
    Triplet { p: u32 },
    Super { m: u32 },
    TwistedSuper { m: u32 },
    C0,
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Triplet { p } if p < 2 => Err(Error::Param(format!("triplet needs p >= 2, got {p}"))),
            Family::Super { m } | Family::TwistedSuper { m } if m < 1 => {
                Err(Error::Param(format!("super families need m >= 1, got {m}")))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Triplet { .. } => "triplet",
            Family::Super { .. } => "super",
            Family::TwistedSuper { .. } => "twisted-super",
            Family::C0 => "c0",
        }
    }

    pub fn param(&self) -> Option<(&'static str, u32)> {
        match *self {
            Family::Triplet { p } => Some(("p", p)),
            Family::Super { m } | Family::TwistedSuper { m } => Some(("m", m)),
            Family::C0 => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some((k, v)) => write!(f, "{}({k}={v})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// `h_{i,1} = ((p-i)^2 - (p-1)^2) / (4p)`.
pub fn triplet_weight(p: u32, i: i64) -> Rat {
    let p = p as i64;
    r((p - i).pow(2) - (p - 1).pow(2), 4 * p)
}

/// `h^{2i+1,1} = ((m-i)^2 - m^2) / (2(2m+1))`.
pub fn super_weight(m: u32, i: i64) -> Rat {
    let m = m as i64;
    r((m - i).pow(2) - m * m, 2 * (2 * m + 1))
}

/// `h^{2i+2,1} = ((2m-1-2i)^2 - 4m^2) / (8(2m+1)) + 1/16`.
pub fn twisted_weight(m: u32, i: i64) -> Rat {
    let m = m as i64;
    r((2 * m - 1 - 2 * i).pow(2) - 4 * m * m, 8 * (2 * m + 1)) + r(1, 16)
}

/// `c_{2m+1,1} / 24`, the shift in `[ω] = [τ]^2 + c/24`.
pub fn twisted_central_shift(m: u32) -> Rat {
    let m = m as i64;
    r(2 * m + 1 - 8 * m * m, 16 * (2 * m + 1))
}

/// Zeros of the cutoff polynomial in the `W_{2,3}` case.
pub fn c0_cutoff_roots() -> Vec<Rat> {
    vec![r(5, 1), r(7, 1), r(10, 3), r(33, 8), r(21, 8), r(35, 24)]
}

/// `g(x)` of the `W_{2,3}` relation `[F∘E] = g([ω]) * p([ω]) * [H]`, with `ν = 1`.
pub fn c0_g() -> ParamPoly {
    ParamPoly::new(
        vec![r(5767168, 215441), r(-918683648, 14003665), r(62128128, 14003665)],
        Var::X,
    )
}

fn x_poly(roots: &[Rat]) -> ParamPoly {
    ParamPoly::from_roots(roots, Var::X)
}

fn power_of(base: i64, e: u32) -> Rat {
    Rat::from(base).pow(e)
}

/// Weight lists and the `y^2 = q(x)`, cutoff and full polynomials of one family.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub family: Family,
    /// Weights attached to the family, in index order.
    pub weights: Vec<Rat>,
    /// Leading constant of `q`.
    pub q_constant: Rat,
    pub q: ParamPoly,
    pub cutoff: ParamPoly,
    /// `cutoff · q / q_constant`.
    pub full: ParamPoly,
    /// Polynomial whose quotient ring is the center, in a variable with rational roots.
    pub center_poly: ParamPoly,
    /// Candidate roots of `center_poly`.
    pub center_roots: Vec<Rat>,
    /// Roots of the cutoff in the center variable; side blocks are spanned by
    /// `cutoff / (x - root)`.
    pub side_roots: Vec<Rat>,
    /// Description of the presentation variable and any rescaling.
    pub variable_note: String,
}

/// Substitute `x^2 ↦ x^2 / s` in an even polynomial.
pub fn rescale_even(f: &ParamPoly, s: &Rat) -> Result<ParamPoly> {
    let mut out = Vec::with_capacity(f.coeffs().len());
    for (k, c) in f.coeffs().iter().enumerate() {
        if k % 2 == 1 {
            if !c.is_zero() {
                return Err(Error::Domain("rescale_even needs an even polynomial".into()));
            }
            out.push(Rat::zero());
        } else {
            out.push(c / &s.pow(k as u32 / 2));
        }
    }
    Ok(ParamPoly::new(out, f.var()))
}

/// `f(x^2 + c)`.
fn substitute_square_plus(f: &ParamPoly, c: &Rat) -> ParamPoly {
    let inner = ParamPoly::new(vec![c.clone(), Rat::zero(), Rat::one()], Var::X);
    f.compose(&inner)
}

pub fn build_catalog(family: Family) -> Result<Catalog> {
    family.validate()?;
    Ok(match family {
        Family::Triplet { p } => triplet(p),
        Family::Super { m } => super_family(m),
        Family::TwistedSuper { m } => twisted(m)?,
        Family::C0 => c0(),
    })
}

fn triplet(p: u32) -> Catalog {
    let p_i = p as i64;
    let weights: Vec<Rat> = (1..=3 * p_i - 1).map(|i| triplet_weight(p, i)).collect();
    let q_roots = &weights[..(2 * p - 1) as usize];
    let cut_roots = &weights[(2 * p - 1) as usize..];
    let q_constant = power_of(4 * p_i, 2 * p - 1) / Rat::factorial(2 * p - 1).pow(2);
    let q = x_poly(q_roots).scale(&q_constant);
    let cutoff = x_poly(cut_roots);
    let full = x_poly(&weights);
    Catalog {
        family: Family::Triplet { p },
        center_poly: full.clone(),
        center_roots: dedup(&weights),
        side_roots: cut_roots.to_vec(),
        weights,
        q_constant,
        q,
        cutoff,
        full,
        variable_note: "x = [ω]".into(),
    }
}

fn super_family(m: u32) -> Catalog {
    let m_i = m as i64;
    let weights: Vec<Rat> = (0..=3 * m_i).map(|i| super_weight(m, i)).collect();
    let q_roots = &weights[..(2 * m + 1) as usize];
    let cut_roots = &weights[(2 * m + 1) as usize..];
    let q_constant = power_of(2, 2 * m + 1) * power_of(2 * m_i + 1, 2 * m + 1) / Rat::factorial(2 * m + 1);
    let q = x_poly(q_roots).scale(&q_constant);
    let cutoff = x_poly(cut_roots);
    let full = x_poly(&weights);
    Catalog {
        family: Family::Super { m },
        center_poly: full.clone(),
        center_roots: dedup(&weights),
        side_roots: cut_roots.to_vec(),
        weights,
        q_constant,
        q,
        cutoff,
        full,
        variable_note: "x = [ω]".into(),
    }
}

fn twisted(m: u32) -> Result<Catalog> {
    let m_i = m as i64;
    let weights: Vec<Rat> = (0..=3 * m_i).map(|i| twisted_weight(m, i)).collect();
    let shift = twisted_central_shift(m);
    let q_constant = power_of(2, 2 * m - 1) * power_of(2 * m_i + 1, 2 * m) / Rat::factorial(2 * m).pow(2);
    let scale = Rat::from(8 * (2 * m_i + 1));
    // q(τ) = C̃ Π_{i<m} (τ^2 - (2i+1-2m)^2 / (8(2m+1)))^2
    let mut q = ParamPoly::constant(q_constant.clone(), Var::X);
    for i in 0..m_i {
        let c = Rat::from((2 * i + 1 - 2 * m_i).pow(2)) / &scale;
        let factor = ParamPoly::new(vec![-c, Rat::zero(), Rat::one()], Var::X);
        q = &q * &factor.pow(2);
    }
    let r_omega = x_poly(&weights[2 * m as usize..]);
    let rf_omega = x_poly(&weights);
    let cutoff = substitute_square_plus(&r_omega, &shift);
    let full = substitute_square_plus(&rf_omega, &shift);
    // u = sqrt(8(2m+1)) τ has the rational roots ±(2m-1-2i)
    let center_poly = rescale_even(&full, &scale)?;
    let odd = |i: i64| Rat::from(2 * m_i - 1 - 2 * i);
    let mut center_roots: Vec<Rat> = (0..=3 * m_i).flat_map(|i| [odd(i), -odd(i)]).collect();
    center_roots = dedup(&center_roots);
    let side_roots: Vec<Rat> = (2 * m_i..=3 * m_i).flat_map(|i| [odd(i), -odd(i)]).collect();
    Ok(Catalog {
        family: Family::TwistedSuper { m },
        weights,
        q_constant,
        q,
        cutoff,
        full,
        center_poly,
        center_roots,
        side_roots,
        variable_note: format!(
            "x = [τ], [ω] = [τ]^2 + {shift}; center analysed in u = ({scale})^(1/2) [τ]"
        ),
    })
}

fn c0() -> Catalog {
    let cut_roots = c0_cutoff_roots();
    let cutoff = x_poly(&cut_roots);
    let doubled = [r(1, 1), r(2, 1), r(1, 8), r(5, 8), r(1, 3)];
    let mut q_roots = vec![Rat::zero(); 3];
    for h in &doubled {
        q_roots.push(h.clone());
        q_roots.push(h.clone());
    }
    q_roots.push(r(-1, 24));
    let q = x_poly(&q_roots);
    let full = &cutoff * &q;
    let mut weights = q_roots.clone();
    weights.extend(cut_roots.iter().cloned());
    Catalog {
        family: Family::C0,
        center_poly: full.clone(),
        center_roots: dedup(&weights),
        side_roots: cut_roots,
        weights,
        q_constant: Rat::one(),
        q,
        cutoff,
        full,
        variable_note: "x = [ω]; q = f_{2,3} / p".into(),
    }
}

fn dedup(v: &[Rat]) -> Vec<Rat> {
    let mut out: Vec<Rat> = v.to_vec();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplet_p2_q() {
        let c = build_catalog(Family::Triplet { p: 2 }).unwrap();
        let expected = x_poly(&[r(-1, 8), Rat::zero(), Rat::zero()]).scale(&r(512, 36));
        assert_eq!(c.q, expected);
    }

    #[test]
    fn super_m1_full() {
        let c = build_catalog(Family::Super { m: 1 }).unwrap();
        let expected = x_poly(&[Rat::zero(), r(-1, 6), Rat::zero(), r(1, 2)]);
        assert_eq!(c.full, expected);
    }

    #[test]
    fn c0_full_degree() {
        let c = build_catalog(Family::C0).unwrap();
        assert_eq!(c.full.degree(), Some(20));
        assert_eq!(c.full.root_multiplicity(&Rat::zero()).unwrap(), 3);
    }

    #[test]
    fn twisted_weights_match_tau_roots() {
        for m in 1..=3u32 {
            let shift = twisted_central_shift(m);
            for i in 0..=3 * m as i64 {
                let tau2 = twisted_weight(m, i) - &shift;
                let expect = r((2 * m as i64 - 1 - 2 * i).pow(2), 8 * (2 * m as i64 + 1));
                assert_eq!(tau2, expect);
            }
        }
    }

    #[test]
    fn rejects_small_parameters() {
        assert!(build_catalog(Family::Triplet { p: 1 }).is_err());
        assert!(build_catalog(Family::Super { m: 0 }).is_err());
    }
}
