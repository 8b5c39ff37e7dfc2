//! Generic iterated-residue evaluator over truncated multivariate Laurent series.
//!
//! Every atom is expanded in the region `|x_last| < ... < |x_first|` and the
//! product is formed term by term. Truncation orders come from an a-priori
//! exponent budget: processing variables from innermost to outermost, the sum
//! of the lower exponent bounds of the other atoms fixes how far each atom has
//! to be expanded for the target coefficient to be exact.

use std::collections::HashMap;

use super::expr::{Atom, ResidueExpr};
use crate::error::{Error, Result};
use crate::exact::{binom_affine, binom_int, ParamPoly, Rat, Var};

type Exps = [i64; 3];

/// Expansion limits derived for one expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationPlan {
    /// Exponent extracted per variable.
    pub target: Vec<i64>,
    /// Per atom, per variable: the largest exponent of that atom that can reach the target.
    pub caps: Vec<Vec<i64>>,
    /// Per atom, per variable: the smallest exponent the atom can contribute.
    pub lower: Vec<Vec<i64>>,
    /// Per atom, per variable: the largest exponent the atom can contribute, if bounded.
    pub upper: Vec<Vec<Option<i64>>>,
    /// Set when some atom cannot reach the target at all; the residue is then zero.
    pub empty: bool,
}

impl TruncationPlan {
    pub fn build(expr: &ResidueExpr) -> Result<Self> {
        Self::build_padded(expr, 0)
    }

    /// Plan with every cap widened by `pad`; used to confirm that the unpadded plan is exact.
    pub fn build_padded(expr: &ResidueExpr, pad: i64) -> Result<Self> {
        expr.validate()?;
        let nv = expr.variables.len();
        let na = expr.atoms.len();
        let target: Vec<i64> = expr.residue_orders.iter().map(|k| -k).collect();
        let mut caps = vec![vec![0i64; nv]; na];
        let mut lower = vec![vec![0i64; nv]; na];
        let mut upper = vec![vec![Some(0i64); nv]; na];
        let mut geom_r: Vec<Option<i64>> = vec![None; na];
        let mut empty = false;

        for v in (0..nv).rev() {
            for (a, atom) in expr.atoms.iter().enumerate() {
                let (lo, hi) = match *atom {
                    Atom::Power { var, exp } if var == v => (exp, Some(exp)),
                    Atom::OnePlusPow { var, ref exp } if var == v => {
                        let finite = (exp.t_coeff == 0)
                            .then(|| exp.constant.to_i64())
                            .flatten()
                            .filter(|&c| c >= 0);
                        (0, finite)
                    }
                    Atom::Diff { first, second, exp } if first == v || second == v => {
                        (0, Some(exp as i64))
                    }
                    Atom::GeomInv { inner, exp, .. } if inner == v => {
                        (0, if exp == 0 { Some(0) } else { None })
                    }
                    Atom::GeomInv { outer, .. } if outer == v => {
                        let r = geom_r[a].ok_or_else(|| {
                            Error::Internal("inner variable of (1 - y/x)^-n not planned before x".into())
                        })?;
                        (-r, Some(0))
                    }
                    _ => (0, Some(0)),
                };
                lower[a][v] = lo;
                upper[a][v] = hi;
            }
            let total_lo: i64 = (0..na).map(|a| lower[a][v]).sum();
            for a in 0..na {
                let cap = target[v] - (total_lo - lower[a][v]) + pad;
                caps[a][v] = match upper[a][v] {
                    Some(hi) => cap.min(hi),
                    None => cap,
                };
                if caps[a][v] < lower[a][v] {
                    empty = true;
                }
            }
            for (a, atom) in expr.atoms.iter().enumerate() {
                if let Atom::GeomInv { inner, .. } = *atom {
                    if inner == v {
                        geom_r[a] = Some(caps[a][v].max(0));
                    }
                }
            }
        }
        Ok(TruncationPlan {
            target,
            caps,
            lower,
            upper,
            empty,
        })
    }
}

/// A sparse truncated Laurent series with polynomial-in-`t` coefficients.
#[derive(Clone, Debug, Default)]
pub struct TruncSeries {
    terms: HashMap<Exps, ParamPoly>,
}

impl TruncSeries {
    fn unit() -> Self {
        let mut terms = HashMap::new();
        terms.insert([0; 3], ParamPoly::one(Var::T));
        TruncSeries { terms }
    }

    fn push(&mut self, e: Exps, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(cur) => {
                *cur = &*cur + &c;
                if cur.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exps) -> ParamPoly {
        self.terms.get(e).cloned().unwrap_or_else(|| ParamPoly::zero(Var::T))
    }

    fn mul_pruned(&self, rhs: &TruncSeries, keep: impl Fn(&Exps) -> bool) -> TruncSeries {
        let mut out = TruncSeries::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                if keep(&e) {
                    out.push(e, ca * cb);
                }
            }
        }
        out
    }
}

fn expand_atom(atom: &Atom, caps: &[i64]) -> TruncSeries {
    let mut s = TruncSeries::default();
    let one = || ParamPoly::one(Var::T);
    let konst = |c: Rat| ParamPoly::constant(c, Var::T);
    match *atom {
        Atom::Power { var, exp } => {
            let mut e = [0; 3];
            e[var] = exp;
            s.push(e, one());
        }
        Atom::OnePlusPow { var, ref exp } => {
            for k in 0..=caps[var].max(-1) {
                let mut e = [0; 3];
                e[var] = k;
                s.push(e, binom_affine(&exp.constant, exp.t_coeff, k as u32));
            }
        }
        Atom::Diff { first, second, exp } => {
            let n = exp as i64;
            for r in 0..=n {
                if n - r > caps[first] || r > caps[second] {
                    continue;
                }
                let mut e = [0; 3];
                e[first] = n - r;
                e[second] = r;
                s.push(e, konst(binom_int(n, r as u32) * Rat::sign_pow(r)));
            }
        }
        Atom::GeomInv { outer, inner, exp } => {
            if exp == 0 {
                s.push([0; 3], one());
                return s;
            }
            let n = exp as i64;
            for r in 0..=caps[inner].max(-1) {
                if -r > caps[outer] {
                    continue;
                }
                let mut e = [0; 3];
                e[inner] = r;
                e[outer] = -r;
                s.push(e, konst(binom_int(n + r - 1, r as u32)));
            }
        }
    }
    s
}

/// Evaluate the iterated residue as an exact polynomial in `t`.
pub fn eval_residue(expr: &ResidueExpr) -> Result<ParamPoly> {
    let plan = TruncationPlan::build(expr)?;
    eval_with_plan(expr, &plan)
}

pub fn eval_with_plan(expr: &ResidueExpr, plan: &TruncationPlan) -> Result<ParamPoly> {
    if plan.empty {
        return Ok(ParamPoly::zero(Var::T));
    }
    let nv = expr.variables.len();
    let mut target = [0i64; 3];
    target[..nv].copy_from_slice(&plan.target);

    let mut expanded: Vec<(usize, TruncSeries)> = expr
        .atoms
        .iter()
        .enumerate()
        .map(|(a, atom)| (a, expand_atom(atom, &plan.caps[a])))
        .collect();
    // Small factors first so pruning bites early.
    expanded.sort_by_key(|(_, s)| s.len());

    let na = expanded.len();
    // Suffix sums of lower and upper bounds over the atoms still to be multiplied.
    let mut rem_lo = vec![[0i64; 3]; na + 1];
    let mut rem_hi = vec![[Some(0i64); 3]; na + 1];
    for j in (0..na).rev() {
        let a = expanded[j].0;
        for v in 0..nv {
            rem_lo[j][v] = rem_lo[j + 1][v] + plan.lower[a][v];
            rem_hi[j][v] = match (rem_hi[j + 1][v], plan.upper[a][v]) {
                (Some(x), Some(y)) => Some(x + y.min(plan.caps[a][v])),
                _ => None,
            };
        }
    }

    let mut acc = TruncSeries::unit();
    for (j, (_, s)) in expanded.iter().enumerate() {
        let lo = rem_lo[j + 1];
        let hi = rem_hi[j + 1];
        acc = acc.mul_pruned(s, |e| {
            (0..nv).all(|v| {
                e[v] + lo[v] <= target[v] && hi[v].is_none_or(|h| e[v] + h >= target[v])
            })
        });
        if acc.is_empty() {
            return Ok(ParamPoly::zero(Var::T));
        }
    }
    if acc.terms.keys().any(|e| e[..nv] != target[..nv]) {
        return Err(Error::Internal("pruning left a non-target monomial".into()));
    }
    Ok(acc.coeff(&target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::expr::TExponent;

    #[test]
    fn single_variable_binomial_coefficient() {
        // Res_x x^-4 (1+x)^t = C(t, 3)
        let e = ResidueExpr::residue(
            &["x"],
            vec![
                Atom::Power { var: 0, exp: -4 },
                Atom::OnePlusPow {
                    var: 0,
                    exp: TExponent::int(0, 1),
                },
            ],
        )
        .unwrap();
        assert_eq!(eval_residue(&e).unwrap(), crate::exact::binom_poly(&Rat::zero(), 3));
    }

    #[test]
    fn geometric_expansion_coefficient() {
        // Res_{x,y} x^-1 y^-3 (1 - y/x)^-2 picks r = 2 from the y expansion and
        // then needs x^-1 * x^-2 ... which has no x^-1 term: zero.
        let e = ResidueExpr::residue(
            &["x", "y"],
            vec![
                Atom::Power { var: 0, exp: -1 },
                Atom::Power { var: 1, exp: -3 },
                Atom::GeomInv {
                    outer: 0,
                    inner: 1,
                    exp: 2,
                },
            ],
        )
        .unwrap();
        assert!(eval_residue(&e).unwrap().is_zero());

        // Res_{x,y} x^1 y^-3 (1 - y/x)^-2 = C(3, 2) = 3
        let e = ResidueExpr::residue(
            &["x", "y"],
            vec![
                Atom::Power { var: 0, exp: 1 },
                Atom::Power { var: 1, exp: -3 },
                Atom::GeomInv {
                    outer: 0,
                    inner: 1,
                    exp: 2,
                },
            ],
        )
        .unwrap();
        assert_eq!(eval_residue(&e).unwrap(), ParamPoly::constant(Rat::from(3), Var::T));
    }

    #[test]
    fn difference_expansion() {
        // constant term of (x - y)^2 x^-1 y^-1 is -2
        let e = ResidueExpr::new(
            vec!["x".into(), "y".into()],
            vec![
                Atom::Diff {
                    first: 0,
                    second: 1,
                    exp: 2,
                },
                Atom::Power { var: 0, exp: -1 },
                Atom::Power { var: 1, exp: -1 },
            ],
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(eval_residue(&e).unwrap(), ParamPoly::constant(Rat::from(-2), Var::T));
    }
}
