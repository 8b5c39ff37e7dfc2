//! Telescoping certificates: verification and the order-one Zeilberger search.

use serde::{Deserialize, Serialize};

use super::gosper::{gosper_form, search_degree, solve_gosper_equation, MAX_X_DEGREE};
use super::ratio::{factored_shift, product, FactoredRatio};
use super::recurrence::Recurrence;
use super::term::{Affine, HyperTerm};
use crate::error::{Error, Result};
use crate::exact::{BiPoly, ParamPoly, Rat, RatFunc, Var};

/// Largest degree in `n` accepted for a recurrence coefficient.
pub const MAX_COEFF_DEGREE: usize = 4;

/// Degree limits for the telescoper search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Degree in `i` of the Gosper numerator `x`.
    pub x_degree: usize,
    /// Degree in `n` of each recurrence coefficient.
    pub coeff_degree: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            x_degree: MAX_X_DEGREE,
            coeff_degree: MAX_COEFF_DEGREE,
        }
    }
}

/// `Σ_j a_j(n) F(n+j, i) = R(n, i+1) - R(n, i)` with `R = G · F`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub coefficients: Vec<ParamPoly>,
    pub multiplier: RatFunc<BiPoly>,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub pass: bool,
    /// Cleared numerator of `lhs - rhs`; zero exactly when the identity holds.
    pub discrepancy: BiPoly,
}

/// Check the telescoping identity as an identity of rational functions in `(n, i)`.
pub fn verify_certificate(f: &HyperTerm, cert: &Certificate) -> Result<Verdict> {
    if cert.coefficients.is_empty() {
        return Err(Error::Input("certificate has no recurrence coefficients".into()));
    }
    let mut lhs = RatFunc::from_poly(BiPoly::zero());
    for (j, a) in cert.coefficients.iter().enumerate() {
        let shift = factored_shift(f, j as i64, 0)?.to_ratfunc();
        lhs = lhs.add(&RatFunc::from_poly(BiPoly::from_poly_n(a)).mul(&shift));
    }
    let r_i = factored_shift(f, 0, 1)?.to_ratfunc();
    let g = &cert.multiplier;
    let rhs = g.shift_i(1).mul(&r_i).sub(g);
    let discrepancy = lhs.cross_diff(&rhs);
    Ok(Verdict {
        pass: discrepancy.is_zero(),
        discrepancy,
    })
}

/// `R(n, i) = G(n, i) F(n, i)` at a point, `None` on a pole of `G`.
pub fn certificate_value(f: &HyperTerm, cert: &Certificate, n: i64, i: i64) -> Option<Rat> {
    let g = cert.multiplier.eval(&Rat::from(n), &Rat::from(i))?;
    Some(g * f.eval(n, i))
}

/// `Σ_j a_j(n) F(n+j, i)` at a point.
pub fn recurrence_lhs(f: &HyperTerm, coeffs: &[ParamPoly], n: i64, i: i64) -> Rat {
    coeffs
        .iter()
        .enumerate()
        .map(|(j, a)| a.eval(&Rat::from(n)) * f.eval(n + j as i64, i))
        .sum()
}

/// Result of a successful order-one search.
#[derive(Clone, Debug)]
pub struct ZeilbergerResult {
    pub recurrence: Recurrence,
    pub certificate: Certificate,
    pub x_degree: usize,
}

/// Coprime integer-primitive coefficients with positive leading entry, the
/// common factor `g` removed and the scalar `k` applied.
fn normalize_coefficients(ps: &[ParamPoly]) -> (Rat, ParamPoly, Vec<ParamPoly>) {
    let g = ps
        .iter()
        .filter(|p| !p.is_zero())
        .fold(None::<ParamPoly>, |acc, p| {
            Some(match acc {
                None => p.monic(),
                Some(g) => g.gcd(p).expect("nonzero operands"),
            })
        })
        .expect("some coefficient is nonzero");
    let ps: Vec<ParamPoly> = ps.iter().map(|p| p.div_exact(&g).expect("gcd")).collect();
    let d = Rat::denom_lcm(ps.iter().flat_map(|p| p.coeffs()));
    let mut content = num_bigint::BigInt::from(0);
    for c in ps.iter().flat_map(|p| p.coeffs()) {
        let v = (c * &Rat::from_int(d.clone())).to_integer().expect("integral");
        content = num_integer::Integer::gcd(&content, &v);
    }
    let mut k = Rat::new(d, content);
    let lead = ps.iter().rev().find(|p| !p.is_zero()).expect("nonzero").leading();
    if (&lead * &k).is_negative() {
        k = -k;
    }
    let ps = ps.iter().map(|p| p.scale(&k)).collect();
    (k, g, ps)
}

/// Search for `a0(n) F(n, i) + a1(n) F(n+1, i) = R(n, i+1) - R(n, i)`.
///
/// The answer is re-verified with [`verify_certificate`]; `Ok(None)` means no
/// certificate exists within the degree bounds.
pub fn zeilberger_order1(f: &HyperTerm) -> Result<Option<ZeilbergerResult>> {
    zeilberger(f, 1, SearchBounds::default())
}

/// Search for a telescoper `Σ_{j=0}^{order} a_j(n) F(n+j, i) = R(n, i+1) - R(n, i)`.
///
/// Trailing zero coefficients are dropped, so the result may have lower order.
pub fn zeilberger(f: &HyperTerm, order: usize, bounds: SearchBounds) -> Result<Option<ZeilbergerResult>> {
    if order == 0 {
        return Err(Error::Input("telescoper order must be positive".into()));
    }
    let uv = factored_shift(f, 1, 0)?;
    // F(n+j)/F(n) = N_j / D with D = Π_{l<order} v(n+l)
    let shifted = |fs: &[Affine], l: usize| -> Vec<Affine> { fs.iter().map(|a| a.shifted(l as i64, 0)).collect() };
    let d_factors: Vec<Affine> = (0..order).flat_map(|l| shifted(&uv.den, l)).collect();
    let mut numerators = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let mut fs: Vec<Affine> = (0..j).flat_map(|l| shifted(&uv.num, l)).collect();
        fs.extend((j..order).flat_map(|l| shifted(&uv.den, l)));
        numerators.push(product(&fs).scale(&uv.constant.pow(j as u32)));
    }
    let r_i = factored_shift(f, 0, 1)?;
    let d_ratio =
        FactoredRatio::from_factors(Rat::one(), d_factors.clone(), shifted_i(&d_factors))?;
    let form = gosper_form(&r_i.mul(&d_ratio));
    let rhs: Vec<BiPoly> = numerators.iter().map(|p| p * &form.c).collect();
    let Some(deg) = search_degree(&form, &rhs, bounds.x_degree) else {
        return Ok(None);
    };
    let Some(sol) = solve_gosper_equation(&form, &rhs, deg) else {
        return Ok(None);
    };
    let (k, g, mut coeffs) = normalize_coefficients(&sol.s);
    while coeffs.last().is_some_and(|a| a.is_zero()) {
        coeffs.pop();
    }
    if coeffs.len() < 2 || coeffs.iter().any(|a| a.degree().unwrap_or(0) > bounds.coeff_degree) {
        return Ok(None);
    }
    let num = (&form.b.shift_i(-1) * &sol.x).scale(&k);
    let den = &(&form.c * &product(&d_factors)) * &BiPoly::from_poly_n(&g);
    let certificate = Certificate {
        coefficients: coeffs.clone(),
        multiplier: RatFunc::new(num, den)?,
    };
    if !verify_certificate(f, &certificate)?.pass {
        return Err(Error::Internal("Zeilberger output failed re-verification".into()));
    }
    Ok(Some(ZeilbergerResult {
        recurrence: Recurrence::new(coeffs)?,
        certificate,
        x_degree: sol.degree,
    }))
}

/// Wider limits for telescopers beyond order one.
pub const EXTENDED_BOUNDS: SearchBounds = SearchBounds {
    x_degree: 12,
    coeff_degree: 8,
};

/// Lowest-order telescoper with order at most `max_order`.
pub fn minimal_telescoper(f: &HyperTerm, max_order: usize, bounds: SearchBounds) -> Result<Option<ZeilbergerResult>> {
    for order in 1..=max_order {
        if let Some(z) = zeilberger(f, order, bounds)? {
            return Ok(Some(z));
        }
    }
    Ok(None)
}

fn shifted_i(fs: &[Affine]) -> Vec<Affine> {
    fs.iter().map(|a| a.shifted(0, 1)).collect()
}

fn bipoly_in_i(coeffs: &[ParamPoly]) -> BiPoly {
    let mut out = BiPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        for (dn, v) in c.coeffs().iter().enumerate() {
            out.add_term(dn as u32, k as u32, v.clone());
        }
    }
    out
}

fn n_poly(c: &[i64]) -> ParamPoly {
    ParamPoly::from_ints(c, Var::N)
}

/// The printed certificate for `(-1)^i C(-2m-1,i) C(-2m-1,2m-i) C(2m,i)` with
/// coefficients `(-3(3m+1)(3m+2), -(m+1)^2)`.
pub fn striplet_certificate() -> Certificate {
    let m1 = n_poly(&[1, 1]);
    let quartic = bipoly_in_i(&[
        &m1 * &n_poly(&[45, 259, 548, 506, 172]).scale(&Rat::from(4)),
        &m1 * &n_poly(&[92, 395, 558, 260]).scale(&Rat::from(-2)),
        &m1 * &n_poly(&[59, 168, 120]),
        &m1 * &n_poly(&[4, 5]).scale(&Rat::from(-2)),
        m1.clone(),
    ]);
    let i2 = BiPoly::i().pow(2);
    let num = &(&i2 * &BiPoly::linear(1, 4, -1)) * &quartic;
    let den = &(&(&BiPoly::from_poly_n(&m1) * &BiPoly::linear(1, 2, 0)).scale(&Rat::from(4))
        * &BiPoly::linear(1, 2, -1).pow(2))
        * &BiPoly::linear(2, 2, -1).pow(2);
    let rec = super::recurrence::striplet_recurrence();
    Certificate {
        coefficients: rec.coeffs,
        multiplier: RatFunc::new(num, den).expect("nonzero denominator"),
    }
}

/// Both sides of the boundary identity
/// `(m+1)^2 (F(m+1,2m) + F(m+1,2m+1) + F(m+1,2m+2)) + 3(3m+1)(3m+2) F(m,2m) = R(m,2m)`.
pub fn striplet_boundary(m: i64) -> (Rat, Option<Rat>) {
    let f = super::term::striplet_term();
    let cert = striplet_certificate();
    let lhs = Rat::from((m + 1) * (m + 1))
        * (f.eval(m + 1, 2 * m) + f.eval(m + 1, 2 * m + 1) + f.eval(m + 1, 2 * m + 2))
        + Rat::from(3 * (3 * m + 1) * (3 * m + 2)) * f.eval(m, 2 * m);
    (lhs, certificate_value(&f, &cert, m, 2 * m))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    n: u32,
    i: u32,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct MultiplierJson {
    numerator: Vec<TermJson>,
    denominator: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    coefficients: Vec<Vec<Rat>>,
    multiplier: MultiplierJson,
}

fn terms_of(p: &BiPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(&(n, i), c)| TermJson { n, i, c: c.clone() })
        .collect()
}

fn bipoly_of(ts: &[TermJson]) -> BiPoly {
    let mut p = BiPoly::zero();
    for t in ts {
        p.add_term(t.n, t.i, t.c.clone());
    }
    p
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let j = CertificateJson {
            coefficients: self.coefficients.iter().map(|c| c.coeffs().to_vec()).collect(),
            multiplier: MultiplierJson {
                numerator: terms_of(self.multiplier.num()),
                denominator: terms_of(self.multiplier.den()),
            },
        };
        serde_json::to_string_pretty(&j).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: CertificateJson = serde_json::from_str(s)?;
        let den = bipoly_of(&j.multiplier.denominator);
        if den.is_zero() {
            return Err(Error::Input("certificate multiplier has a zero denominator".into()));
        }
        Ok(Certificate {
            coefficients: j
                .coefficients
                .into_iter()
                .map(|c| ParamPoly::new(c, Var::N))
                .collect(),
            multiplier: RatFunc::new(bipoly_of(&j.multiplier.numerator), den)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wz::term::striplet_term;

    #[test]
    fn printed_certificate_verifies() {
        let v = verify_certificate(&striplet_term(), &striplet_certificate()).unwrap();
        assert!(v.pass, "discrepancy {}", v.discrepancy);
    }

    #[test]
    fn flipped_coefficient_fails() {
        let mut cert = striplet_certificate();
        cert.coefficients[0] = -&cert.coefficients[0];
        let v = verify_certificate(&striplet_term(), &cert).unwrap();
        assert!(!v.pass);
        assert!(!v.discrepancy.is_zero());
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = striplet_certificate();
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert!(back.multiplier.equals(&cert.multiplier));
        assert_eq!(back.coefficients, cert.coefficients);
    }
}
