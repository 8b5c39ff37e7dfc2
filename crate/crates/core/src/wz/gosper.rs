//! Gosper's algorithm over `Q(n)` for ratios given as products of linear factors.

use super::linalg::nullspace;
use super::ratio::{product, FactoredRatio};
use super::term::Affine;
use crate::exact::{BiPoly, ParamPoly, Rat, RatFunc};

/// Largest degree in `i` tried for the polynomial solution `x(i)`.
pub const MAX_X_DEGREE: usize = 8;

/// `r(i) = a(i)/b(i) · c(i+1)/c(i)` with `gcd(a(i), b(i+h)) = 1` for all `h ≥ 0`.
#[derive(Clone, Debug)]
pub struct GosperForm {
    pub a: BiPoly,
    pub b: BiPoly,
    pub c: BiPoly,
}

/// `h ≥ 0` and `λ` with `f(i) = λ · g(i + h)`, if they exist.
fn shift_match(f: &Affine, g: &Affine) -> Option<(i64, Rat)> {
    if f.ci == 0 || g.ci == 0 || f.ci * g.cn != f.cn * g.ci {
        return None;
    }
    let num = f.c0 * g.ci - g.c0 * f.ci;
    let den = f.ci * g.ci;
    if num % den != 0 || num / den < 0 {
        return None;
    }
    Some((num / den, Rat::new(f.ci, g.ci)))
}

pub fn gosper_form(r: &FactoredRatio) -> GosperForm {
    let (mut a, ka): (Vec<Affine>, Vec<Affine>) = r.num.iter().partition(|f| f.ci != 0);
    let (mut b, kb): (Vec<Affine>, Vec<Affine>) = r.den.iter().partition(|f| f.ci != 0);
    let mut constant = r.constant.clone();
    let mut c: Vec<Affine> = Vec::new();
    'outer: loop {
        for ia in 0..a.len() {
            for ib in 0..b.len() {
                if let Some((h, lambda)) = shift_match(&a[ia], &b[ib]) {
                    let g = a.remove(ia);
                    b.remove(ib);
                    constant = constant * lambda;
                    c.extend((1..=h).map(|j| g.shifted(0, -j)));
                    continue 'outer;
                }
            }
        }
        break;
    }
    let cnum = Rat::from_int(constant.numer().clone());
    let cden = Rat::from_int(constant.denom().clone());
    GosperForm {
        a: (&product(&a) * &product(&ka)).scale(&cnum),
        b: (&product(&b) * &product(&kb)).scale(&cden),
        c: product(&c),
    }
}

fn rows_of(columns: &[BiPoly]) -> Vec<Vec<ParamPoly>> {
    let deg = columns.iter().filter_map(|c| c.degree_i()).max().unwrap_or(0);
    (0..=deg)
        .map(|j| columns.iter().map(|c| c.coeff_i(j)).collect())
        .collect()
}

/// Constant rational value of `num / den` when it does not depend on `n`.
fn constant_quotient(num: &ParamPoly, den: &ParamPoly) -> Option<Rat> {
    let q = num.div_exact(den)?;
    match q.degree() {
        None => Some(Rat::zero()),
        Some(0) => Some(q.coeff(0)),
        _ => None,
    }
}

/// Upper bound on `deg_i x` for `a(i) x(i+1) - b(i-1) x(i) = P(i)` with `deg_i P = dp`.
pub fn degree_bound(form: &GosperForm, dp: usize) -> usize {
    let b_prev = form.b.shift_i(-1);
    let da = form.a.degree_i().unwrap_or(0) as usize;
    let db = b_prev.degree_i().unwrap_or(0) as usize;
    let lead_a = form.a.coeff_i(da as u32);
    let lead_b = b_prev.coeff_i(db as u32);
    if da != db || lead_a != lead_b {
        return dp.saturating_sub(da.max(db));
    }
    let generic = (dp + 1).saturating_sub(da);
    if da == 0 {
        return generic;
    }
    let gap = &form.a.coeff_i(da as u32 - 1) - &b_prev.coeff_i(da as u32 - 1);
    match constant_quotient(&-&gap, &lead_a) {
        Some(d) if d.is_integer() && !d.is_negative() => {
            let d = d.to_integer().expect("integral");
            generic.max(usize::try_from(d).unwrap_or(usize::MAX))
        }
        _ => generic,
    }
}

fn i_power(base: &BiPoly, k: usize) -> BiPoly {
    base.pow(k as u32)
}

/// Solution of `a(i) x(i+1) - b(i-1) x(i) = Σ_j s_j · rhs_j(i)` with some `s_j ≠ 0`,
/// polynomial in `n` throughout.
#[derive(Clone, Debug)]
pub struct GosperSolution {
    pub x: BiPoly,
    pub s: Vec<ParamPoly>,
    pub degree: usize,
}

pub fn solve_gosper_equation(form: &GosperForm, rhs: &[BiPoly], degree: usize) -> Option<GosperSolution> {
    let b_prev = form.b.shift_i(-1);
    let ip1 = BiPoly::linear(1, 0, 1);
    let i = BiPoly::i();
    let mut columns = Vec::with_capacity(degree + 1 + rhs.len());
    for k in 0..=degree {
        columns.push(&(&form.a * &i_power(&ip1, k)) - &(&b_prev * &i_power(&i, k)));
    }
    for r in rhs {
        columns.push(-r);
    }
    let cols = columns.len();
    let kernel = nullspace(rows_of(&columns), cols);
    let v = kernel
        .into_iter()
        .find(|v| v[degree + 1..].iter().any(|e| !e.is_zero()))?;
    let mut x = BiPoly::zero();
    for (k, c) in v[..=degree].iter().enumerate() {
        for (dn, val) in c.coeffs().iter().enumerate() {
            x.add_term(dn as u32, k as u32, val.clone());
        }
    }
    Some(GosperSolution {
        degree: x.degree_i().unwrap_or(0) as usize,
        x,
        s: v[degree + 1..].to_vec(),
    })
}

/// Degree to search for right-hand sides `rhs`, or `None` past `max_degree`.
pub fn search_degree(form: &GosperForm, rhs: &[BiPoly], max_degree: usize) -> Option<usize> {
    let dp = rhs.iter().filter_map(|r| r.degree_i()).max().unwrap_or(0) as usize;
    let d = degree_bound(form, dp);
    (d <= max_degree).then_some(d)
}

/// Gosper certificate `y(i)` with `F(i) = y(i+1) F(i+1) - y(i) F(i)` for the term with
/// ratio `r`, if `F` is indefinitely summable with `deg x ≤` [`MAX_X_DEGREE`].
pub fn gosper(r: &FactoredRatio) -> Option<RatFunc<BiPoly>> {
    let form = gosper_form(r);
    let rhs = [form.c.clone()];
    let deg = search_degree(&form, &rhs, MAX_X_DEGREE)?;
    let sol = solve_gosper_equation(&form, &rhs, deg)?;
    let num = &form.b.shift_i(-1) * &sol.x;
    let den = &form.c * &BiPoly::from_poly_n(&sol.s[0]);
    Some(RatFunc::new(num, den).expect("nonzero denominator"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(num: Vec<Affine>, den: Vec<Affine>) -> FactoredRatio {
        FactoredRatio::from_factors(Rat::one(), num, den).unwrap()
    }

    #[test]
    fn i_times_factorial_is_summable() {
        // t_i = i·i!, t_{i+1}/t_i = (i+1)^2 / i
        let r = ratio(vec![Affine::new(1, 0, 1); 2], vec![Affine::new(0, 0, 1)]);
        let y = gosper(&r).expect("summable");
        let t = |i: i64| Rat::from(i) * Rat::factorial(i as u32);
        let n0 = Rat::zero();
        for i in 1..=5 {
            let yi = y.eval(&n0, &Rat::from(i)).unwrap();
            let yj = y.eval(&n0, &Rat::from(i + 1)).unwrap();
            assert_eq!(yj * t(i + 1) - yi * t(i), t(i));
        }
    }

    #[test]
    fn harmonic_term_is_not_summable() {
        let r = ratio(vec![Affine::new(0, 0, 1)], vec![Affine::new(1, 0, 1)]);
        assert!(gosper(&r).is_none());
    }

    #[test]
    fn binomial_row_is_not_summable() {
        let r = ratio(vec![Affine::new(0, 1, -1)], vec![Affine::new(1, 0, 1)]);
        assert!(gosper(&r).is_none());
    }
}
