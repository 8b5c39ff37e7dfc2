//! Quotients of the rank-2 module `Q[x] ⊕ Q[x]·y` with `y^2 = q(x)`.

use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Var};

/// `a(x) + b(x)·y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Elem {
    pub a: ParamPoly,
    pub b: ParamPoly,
}

impl Elem {
    pub fn new(a: ParamPoly, b: ParamPoly) -> Self {
        Elem { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn sub_scaled(&self, s: &ParamPoly, o: &Elem) -> Elem {
        Elem::new(&self.a - &(s * &o.a), &self.b - &(s * &o.b))
    }
}

/// `Q[x][y] / (y^2 - q)` together with an ideal given by generators.
#[derive(Clone, Debug)]
pub struct ModulePres {
    pub q: ParamPoly,
    pub generators: Vec<Elem>,
}

/// Triangular basis `{(a1, d_b), (d_a, 0)}` of the ideal as a `Q[x]`-module.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub d_a: ParamPoly,
    pub top: Option<Elem>,
}

/// An explicit monomial basis of the quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientBasis {
    /// `x^a` for `a < plain`.
    pub plain: usize,
    /// `x^b y` for `b < with_y`.
    pub with_y: usize,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.plain + self.with_y
    }
}

fn zero() -> ParamPoly {
    ParamPoly::zero(Var::X)
}

fn monomial(k: usize) -> ParamPoly {
    let mut c = vec![crate::exact::Rat::zero(); k + 1];
    c[k] = crate::exact::Rat::one();
    ParamPoly::new(c, Var::X)
}

impl ModulePres {
    /// The ideal generated by `cutoff·y`, as in the kernel of the singlet map.
    pub fn kernel(q: ParamPoly, cutoff: ParamPoly) -> Self {
        ModulePres {
            q,
            generators: vec![Elem::new(zero(), cutoff)],
        }
    }

    pub fn times_y(&self, e: &Elem) -> Elem {
        Elem::new(&e.b * &self.q, e.a.clone())
    }

    /// Generators closed under multiplication by `y`; `y^2 = q` makes one step enough.
    fn module_generators(&self) -> Vec<Elem> {
        self.generators
            .iter()
            .flat_map(|g| [g.clone(), self.times_y(g)])
            .collect()
    }

    pub fn hermite(&self) -> Result<Hermite> {
        let mut gens: Vec<Elem> = self.module_generators().into_iter().filter(|g| !g.is_zero()).collect();
        // Euclid on the y-components
        let mut top: Option<Elem> = None;
        loop {
            let Some(i) = (0..gens.len())
                .filter(|&i| !gens[i].b.is_zero())
                .min_by_key(|&i| gens[i].b.degree())
            else {
                break;
            };
            let pivot = gens.swap_remove(i);
            let mut rest = Vec::new();
            for g in gens.drain(..) {
                let g = if g.b.is_zero() {
                    g
                } else {
                    let (s, _) = g.b.div_rem(&pivot.b)?;
                    g.sub_scaled(&s, &pivot)
                };
                if !g.is_zero() {
                    rest.push(g);
                }
            }
            if rest.iter().all(|g| g.b.is_zero()) {
                gens = rest;
                top = Some(pivot);
                break;
            }
            rest.push(pivot);
            gens = rest;
        }
        let d_a = gens.iter().fold(zero(), |acc, g| {
            if acc.is_zero() {
                g.a.monic()
            } else {
                acc.gcd(&g.a).expect("nonzero")
            }
        });
        let top = top.map(|t| {
            let lc = t.b.leading().recip();
            Elem::new(t.a.scale(&lc), t.b.scale(&lc))
        });
        let top = match top {
            Some(t) if !d_a.is_zero() => {
                let (_, ra) = t.a.div_rem(&d_a)?;
                Some(Elem::new(ra, t.b))
            }
            t => t,
        };
        Ok(Hermite { d_a, top })
    }
}

impl Hermite {
    /// Normal form of `e` modulo the ideal.
    pub fn reduce(&self, e: &Elem) -> Result<Elem> {
        let mut e = e.clone();
        if let Some(t) = &self.top {
            let (s, rb) = e.b.div_rem(&t.b)?;
            e = Elem::new(&e.a - &(&s * &t.a), rb);
        }
        if !self.d_a.is_zero() {
            let (_, ra) = e.a.div_rem(&self.d_a)?;
            e.a = ra;
        }
        Ok(e)
    }

    fn basis(&self) -> Result<QuotientBasis> {
        let bound = |p: Option<&ParamPoly>| -> Result<usize> {
            match p {
                Some(p) if !p.is_zero() => Ok(p.degree().unwrap_or(0)),
                _ => Err(Error::Domain("quotient is infinite-dimensional".into())),
            }
        };
        Ok(QuotientBasis {
            plain: bound(Some(&self.d_a))?,
            with_y: bound(self.top.as_ref().map(|t| &t.b))?,
        })
    }
}

fn in_span(e: &Elem, basis: &QuotientBasis) -> bool {
    e.a.degree().is_none_or(|d| d < basis.plain) && e.b.degree().is_none_or(|d| d < basis.with_y)
}

/// Dimension of the quotient by the ideal, with the basis verified: every
/// generator and its `y`-multiple reduce to zero, the basis elements are fixed by
/// reduction, and the first monomials outside the basis reduce into its span.
pub fn kernel_quotient_basis(pres: &ModulePres) -> Result<QuotientBasis> {
    if pres.generators.iter().all(|g| g.is_zero()) {
        return Err(Error::Domain("ideal has no nonzero generator".into()));
    }
    let h = pres.hermite()?;
    let basis = h.basis()?;
    for g in pres.module_generators() {
        if !h.reduce(&g)?.is_zero() {
            return Err(Error::Internal("ideal generator does not reduce to zero".into()));
        }
    }
    for a in 0..basis.plain {
        let e = Elem::new(monomial(a), zero());
        if h.reduce(&e)? != e {
            return Err(Error::Internal(format!("basis element x^{a} is reducible")));
        }
    }
    for b in 0..basis.with_y {
        let e = Elem::new(zero(), monomial(b));
        if h.reduce(&e)? != e {
            return Err(Error::Internal(format!("basis element x^{b} y is reducible")));
        }
    }
    let edge = [
        Elem::new(monomial(basis.plain), zero()),
        Elem::new(zero(), monomial(basis.with_y)),
    ];
    for e in &edge {
        if !in_span(&h.reduce(e)?, &basis) {
            return Err(Error::Internal("reduction leaves the candidate basis".into()));
        }
    }
    Ok(basis)
}

pub fn kernel_quotient_dim(pres: &ModulePres) -> Result<usize> {
    Ok(kernel_quotient_basis(pres)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> ParamPoly {
        ParamPoly::from_ints(c, Var::X)
    }

    #[test]
    fn principal_kernel_dimension() {
        // q = x^3, cutoff = x - 1: dim = deg(cutoff·q) + deg cutoff = 4 + 1
        let pres = ModulePres::kernel(xp(&[0, 0, 0, 1]), xp(&[-1, 1]));
        let b = kernel_quotient_basis(&pres).unwrap();
        assert_eq!(b, QuotientBasis { plain: 4, with_y: 1 });
    }

    #[test]
    fn extra_generator_shrinks_quotient() {
        let mut pres = ModulePres::kernel(xp(&[0, 0, 1]), xp(&[-1, 1]));
        pres.generators.push(Elem::new(xp(&[0, 1]), zero()));
        // ideal contains x and (x-1)y, hence y·x = x y and y itself
        assert_eq!(kernel_quotient_dim(&pres).unwrap(), 1);
    }

    #[test]
    fn zero_cutoff_is_rejected() {
        let pres = ModulePres::kernel(xp(&[1]), zero());
        assert!(kernel_quotient_dim(&pres).is_err());
    }

    #[test]
    fn reduction_is_idempotent() {
        let pres = ModulePres::kernel(xp(&[2, 0, 1]), xp(&[-3, 0, 1]));
        let h = pres.hermite().unwrap();
        let e = Elem::new(xp(&[1, 2, 3, 4, 5, 6]), xp(&[7, 8, 9]));
        let once = h.reduce(&e).unwrap();
        assert_eq!(h.reduce(&once).unwrap(), once);
        assert!(once.b.degree().unwrap() < 2);
    }
}
