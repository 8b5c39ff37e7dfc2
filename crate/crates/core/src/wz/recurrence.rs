//! Linear recurrences with polynomial coefficients.

use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Rat, RatFunc, Var};

/// `Σ_j a_j(n) f(n + j) = 0`, optionally seeded with `f(n0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence {
    pub coeffs: Vec<ParamPoly>,
    pub init: Option<(i64, Rat)>,
}

impl Recurrence {
    pub fn new(coeffs: Vec<ParamPoly>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if !c.is_zero() => Ok(Recurrence { coeffs, init: None }),
            _ => Err(Error::Input("recurrence needs a nonzero leading coefficient".into())),
        }
    }

    pub fn with_init(mut self, n0: i64, f0: Rat) -> Self {
        self.init = Some((n0, f0));
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn display(&self) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let shift = if j == 0 { "n".to_string() } else { format!("n+{j}") };
                format!("({c}) f({shift})")
            })
            .collect::<Vec<_>>()
            .join(" + ")
            + " = 0"
    }
}

fn n_poly(c: &[i64]) -> ParamPoly {
    ParamPoly::from_ints(c, Var::N)
}

/// `-3(3n+1)(3n+2) f(n) - (n+1)^2 f(n+1) = 0`.
pub fn striplet_recurrence() -> Recurrence {
    let a0 = (&n_poly(&[1, 3]) * &n_poly(&[2, 3])).scale(&Rat::from(-3));
    let a1 = -&n_poly(&[1, 1]).pow(2);
    Recurrence::new(vec![a0, a1]).expect("nonzero leading coefficient")
}

/// `3(3n-1)(2n-1)(3n+1) f(n) + (2n+1) n^2 f(n+1) = 0`.
pub fn triplet_linear_recurrence() -> Recurrence {
    let a0 = (&(&n_poly(&[-1, 3]) * &n_poly(&[-1, 2])) * &n_poly(&[1, 3])).scale(&Rat::from(3));
    let a1 = &n_poly(&[1, 2]) * &n_poly(&[0, 1]).pow(2);
    Recurrence::new(vec![a0, a1]).expect("nonzero leading coefficient")
}

/// Iterate a first-order recurrence from its seed up to `n_max`.
pub fn solve_first_order(rec: &Recurrence, n_max: i64) -> Result<Vec<Rat>> {
    if rec.order() != 1 {
        return Err(Error::Input(format!("expected a first-order recurrence, got order {}", rec.order())));
    }
    let (n0, f0) = rec
        .init
        .clone()
        .ok_or_else(|| Error::Input("recurrence has no initial value".into()))?;
    let mut out = vec![f0];
    for n in n0..n_max {
        let x = Rat::from(n);
        let lead = rec.coeffs[1].eval(&x);
        if lead.is_zero() {
            return Err(Error::SingularRecurrence { n });
        }
        let next = -(rec.coeffs[0].eval(&x) * out.last().expect("seeded")) / lead;
        out.push(next);
    }
    Ok(out)
}

/// `λ(n)` with `found = λ · expected` coefficientwise, if the two recurrences agree.
pub fn proportionality(found: &[ParamPoly], expected: &[ParamPoly]) -> Option<RatFunc<ParamPoly>> {
    if found.len() != expected.len() {
        return None;
    }
    let j = expected.iter().position(|e| !e.is_zero())?;
    if found[j].is_zero() {
        return None;
    }
    let ratio = RatFunc::new(found[j].clone(), expected[j].clone()).ok()?.reduced();
    let consistent = found
        .iter()
        .zip(expected)
        .all(|(f, e)| (f * ratio.den()) == (e * ratio.num()));
    consistent.then_some(ratio)
}

/// Whether every sequence with `s(n+1)/s(n) = ratio(n)` satisfies `rec`, as an
/// identity of rational functions in `n`.
pub fn annihilates(rec: &Recurrence, ratio: &RatFunc<ParamPoly>) -> bool {
    let one = RatFunc::from_poly(ParamPoly::one(Var::N));
    let mut step = one.clone();
    let mut total = RatFunc::from_poly(ParamPoly::zero(Var::N));
    for (j, a) in rec.coeffs.iter().enumerate() {
        total = total.add(&RatFunc::from_poly(a.clone()).mul(&step)).reduced();
        let shifted = RatFunc::new(
            ratio.num().shift(&Rat::from(j as i64)),
            ratio.den().shift(&Rat::from(j as i64)),
        )
        .expect("shifted denominator is nonzero");
        step = step.mul(&shifted).reduced();
    }
    total.is_zero()
}

/// `s(n+1)/s(n)` for a first-order recurrence.
pub fn first_order_ratio(rec: &Recurrence) -> Result<RatFunc<ParamPoly>> {
    if rec.order() != 1 {
        return Err(Error::Input(format!("expected a first-order recurrence, got order {}", rec.order())));
    }
    RatFunc::new(-&rec.coeffs[0], rec.coeffs[1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_multiple_annihilates() {
        let l = striplet_recurrence();
        let rho = first_order_ratio(&l).unwrap();
        assert!(annihilates(&l, &rho));
        // (S + 1) applied to L
        let (a0, a1) = (&l.coeffs[0], &l.coeffs[1]);
        let m = Recurrence::new(vec![
            a0.clone(),
            a1 + &a0.shift(&Rat::one()),
            a1.shift(&Rat::one()),
        ])
        .unwrap();
        assert!(annihilates(&m, &rho));
        assert!(!annihilates(&triplet_linear_recurrence(), &rho));
    }

    #[test]
    fn constant_recurrence() {
        let rec = Recurrence::new(vec![n_poly(&[-1]), n_poly(&[1])])
            .unwrap()
            .with_init(0, Rat::one());
        assert!(solve_first_order(&rec, 5).unwrap().iter().all(|v| v.is_one()));
    }

    #[test]
    fn triplet_step() {
        let rec = triplet_linear_recurrence().with_init(2, Rat::from(16));
        assert_eq!(solve_first_order(&rec, 3).unwrap()[1], Rat::from(-252));
    }

    #[test]
    fn striplet_step() {
        let rec = striplet_recurrence().with_init(1, Rat::from(-6));
        assert_eq!(solve_first_order(&rec, 2).unwrap()[1], Rat::from(90));
    }

    #[test]
    fn singular_step_is_reported() {
        // n f(n+1) = f(n) is singular at n = 0
        let rec = Recurrence::new(vec![n_poly(&[-1]), n_poly(&[0, 1])])
            .unwrap()
            .with_init(-2, Rat::one());
        assert!(matches!(solve_first_order(&rec, 3), Err(Error::SingularRecurrence { n: 0 })));
    }
}
