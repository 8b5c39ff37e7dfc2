//! Graded-commutative presentations by monomial rewriting.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
    /// Twice the conformal weight; drives the rewriting order.
    pub weight: u32,
}

pub type Monomial = Vec<u32>;

/// Sparse polynomial in the generators.
pub type Poly = BTreeMap<Monomial, Rat>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleSource {
    /// Taken from the relation list.
    Relation,
    /// Added so that products land in the asserted spanning set.
    Span,
    /// `g^2 = 0` for odd `g`.
    OddSquare,
}

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Monomial,
    pub rhs: Poly,
    pub source: RuleSource,
}

#[derive(Clone, Debug)]
pub struct GradedPres {
    pub generators: Vec<Generator>,
    pub rules: Vec<Rule>,
}

/// A critical pair whose two reductions disagree.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalPair {
    pub monomial: String,
    pub left_rule: String,
    pub right_rule: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PoissonReport {
    pub total: usize,
    pub even: usize,
    pub basis: Vec<String>,
    pub unresolved_pairs: Vec<CriticalPair>,
    pub closure_ok: bool,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl GradedPres {
    pub fn new(generators: Vec<Generator>) -> Self {
        GradedPres {
            generators,
            rules: Vec::new(),
        }
    }

    pub fn index(&self, name: &str) -> usize {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .unwrap_or_else(|| panic!("unknown generator {name}"))
    }

    /// Monomial from `(name, exponent)` pairs.
    pub fn mono(&self, parts: &[(&str, u32)]) -> Monomial {
        let mut m = vec![0; self.generators.len()];
        for (name, e) in parts {
            m[self.index(name)] += e;
        }
        m
    }

    /// Add `word -> rhs`, where `word` is read left to right and reordered with its
    /// Koszul sign.
    pub fn rule(&mut self, word: &[(&str, u32)], rhs: &[(i64, &[(&str, u32)])], source: RuleSource) {
        let mut lhs = vec![0; self.generators.len()];
        let mut sign = Rat::one();
        for (name, e) in word {
            for _ in 0..*e {
                let single = self.mono(&[(name, 1)]);
                let (m, s) = self.mul_mono(&lhs, &single).expect("rule word is nonzero");
                lhs = m;
                sign = sign * s;
            }
        }
        let mut poly = Poly::new();
        for (c, parts) in rhs {
            poly.insert(self.mono(parts), Rat::from(*c) * &sign);
        }
        self.rules.push(Rule { lhs, rhs: poly, source });
    }

    fn is_odd(&self, k: usize) -> bool {
        self.generators[k].parity == Parity::Odd
    }

    pub fn is_even_monomial(&self, m: &[u32]) -> bool {
        (0..m.len()).filter(|&k| self.is_odd(k)).map(|k| m[k]).sum::<u32>() % 2 == 0
    }

    fn weight(&self, m: &[u32]) -> u32 {
        m.iter().zip(&self.generators).map(|(e, g)| e * g.weight).sum()
    }

    /// Weighted degree, then lexicographic with earlier generators heavier.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.cmp(b))
    }

    /// `a · b` in canonical order with its Koszul sign, or `None` if an odd square appears.
    pub fn mul_mono(&self, a: &[u32], b: &[u32]) -> Option<(Monomial, Rat)> {
        let mut out = Vec::with_capacity(a.len());
        for k in 0..a.len() {
            let e = a[k] + b[k];
            if self.is_odd(k) && e > 1 {
                return None;
            }
            out.push(e);
        }
        let mut swaps = 0u32;
        for j in 0..a.len() {
            if !self.is_odd(j) || a[j] == 0 {
                continue;
            }
            for k in 0..j {
                if self.is_odd(k) && b[k] == 1 {
                    swaps += 1;
                }
            }
        }
        Some((out, Rat::sign_pow(swaps as i64)))
    }

    fn mul_poly_mono(&self, p: &Poly, m: &[u32]) -> Poly {
        let mut out = Poly::new();
        for (pm, c) in p {
            if let Some((prod, s)) = self.mul_mono(pm, m) {
                add_term(&mut out, prod, c * &s);
            }
        }
        out
    }

    fn all_rules(&self) -> Vec<Rule> {
        let mut rules = self.rules.clone();
        for k in (0..self.generators.len()).filter(|&k| self.is_odd(k)) {
            let mut lhs = vec![0; self.generators.len()];
            lhs[k] = 2;
            rules.push(Rule {
                lhs,
                rhs: Poly::new(),
                source: RuleSource::OddSquare,
            });
        }
        rules
    }

    /// Every rule must rewrite to strictly smaller monomials, which forces termination.
    pub fn check_termination(&self) -> Result<()> {
        for r in &self.rules {
            if r.lhs.iter().all(|&e| e == 0) {
                return Err(Error::Input("rule with constant left-hand side".into()));
            }
            for m in r.rhs.keys() {
                if self.compare(m, &r.lhs) != Ordering::Less {
                    return Err(Error::Input(format!(
                        "rule {} -> {} is not decreasing",
                        self.show_mono(&r.lhs),
                        self.show_poly(&r.rhs)
                    )));
                }
            }
        }
        Ok(())
    }

    fn reduce_once(&self, m: &[u32]) -> Option<Poly> {
        let r = self.rules.iter().find(|r| divides(&r.lhs, m))?;
        let q: Monomial = m.iter().zip(&r.lhs).map(|(a, b)| a - b).collect();
        let (_, s) = self.mul_mono(&r.lhs, &q).expect("m is a nonzero monomial");
        let mut out = self.mul_poly_mono(&r.rhs, &q);
        for c in out.values_mut() {
            *c = &*c * &s;
        }
        Some(out)
    }

    /// Normal form; terminates once [`check_termination`](Self::check_termination) passes.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut todo = p.clone();
        let mut done = Poly::new();
        while let Some((m, c)) = pop_largest(self, &mut todo) {
            match self.reduce_once(&m) {
                Some(rep) => {
                    for (rm, rc) in rep {
                        add_term(&mut todo, rm, &rc * &c);
                    }
                }
                None => add_term(&mut done, m, c),
            }
        }
        done
    }

    /// Largest power of each generator before a pure-power rule (or oddness) kills it.
    fn power_bounds(&self) -> Result<Vec<u32>> {
        (0..self.generators.len())
            .map(|k| {
                if self.is_odd(k) {
                    return Ok(1);
                }
                self.rules
                    .iter()
                    .filter(|r| r.lhs.iter().enumerate().all(|(j, &e)| (j == k) == (e > 0)))
                    .map(|r| r.lhs[k] - 1)
                    .min()
                    .ok_or_else(|| {
                        Error::Input(format!(
                            "generator {} is not nilpotent; the quotient is infinite",
                            self.generators[k].name
                        ))
                    })
            })
            .collect()
    }

    /// Standard monomials, i.e. those divisible by no left-hand side.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let bounds = self.power_bounds()?;
        let mut out = Vec::new();
        let mut cur = vec![0u32; bounds.len()];
        loop {
            if !self.rules.iter().any(|r| divides(&r.lhs, &cur)) {
                out.push(cur.clone());
            }
            let mut k = 0;
            loop {
                if k == cur.len() {
                    out.sort_by(|a, b| self.compare(a, b));
                    return Ok(out);
                }
                if cur[k] < bounds[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    fn route(&self, rule: &Rule, lcm: &[u32]) -> Poly {
        let q: Monomial = lcm.iter().zip(&rule.lhs).map(|(a, b)| a - b).collect();
        let s = self
            .mul_mono(&rule.lhs, &q)
            .map(|(_, s)| s)
            .unwrap_or_else(Rat::one);
        let mut p = self.mul_poly_mono(&rule.rhs, &q);
        for c in p.values_mut() {
            *c = &*c * &s;
        }
        self.normal_form(&p)
    }

    /// Overlaps of left-hand sides whose two reductions disagree.
    pub fn unresolved_pairs(&self) -> Vec<CriticalPair> {
        let rules = self.all_rules();
        let mut out = Vec::new();
        for i in 0..rules.len() {
            for j in i + 1..rules.len() {
                let (a, b) = (&rules[i], &rules[j]);
                if !a.lhs.iter().zip(&b.lhs).any(|(x, y)| *x > 0 && *y > 0) {
                    continue;
                }
                if a.source == RuleSource::OddSquare && b.source == RuleSource::OddSquare {
                    continue;
                }
                let lcm: Monomial = a.lhs.iter().zip(&b.lhs).map(|(x, y)| *x.max(y)).collect();
                let left = self.route(a, &lcm);
                let right = self.route(b, &lcm);
                // an odd square makes the overlap itself zero
                let vanishes = lcm.iter().enumerate().any(|(k, &e)| self.is_odd(k) && e > 1);
                let ok = if vanishes {
                    left.is_empty() && right.is_empty()
                } else {
                    left == right
                };
                if !ok {
                    out.push(CriticalPair {
                        monomial: self.show_mono(&lcm),
                        left_rule: self.show_rule(a),
                        right_rule: self.show_rule(b),
                        left: self.show_poly(&left),
                        right: self.show_poly(&right),
                    });
                }
            }
        }
        out
    }

    /// Products of basis monomials reduce into the span of the basis.
    pub fn closure_holds(&self, basis: &[Monomial]) -> bool {
        for a in basis {
            for b in basis {
                let Some((m, s)) = self.mul_mono(a, b) else { continue };
                let nf = self.normal_form(&Poly::from([(m, s)]));
                if !nf.keys().all(|k| basis.binary_search_by(|x| self.compare(x, k)).is_ok()) {
                    return false;
                }
            }
        }
        true
    }

    pub fn show_mono(&self, m: &[u32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(&self.generators)
            .filter(|(e, _)| **e > 0)
            .map(|(e, g)| if *e == 1 { g.name.clone() } else { format!("{}^{e}", g.name) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }

    pub fn show_poly(&self, p: &Poly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        p.iter()
            .map(|(m, c)| format!("{c}·{}", self.show_mono(m)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn show_rule(&self, r: &Rule) -> String {
        format!("{} -> {}", self.show_mono(&r.lhs), self.show_poly(&r.rhs))
    }
}

fn add_term(p: &mut Poly, m: Monomial, c: Rat) {
    let e = p.entry(m.clone()).or_insert_with(Rat::zero);
    *e += &c;
    if e.is_zero() {
        p.remove(&m);
    }
}

fn pop_largest(pres: &GradedPres, p: &mut Poly) -> Option<(Monomial, Rat)> {
    let key = p.keys().max_by(|a, b| pres.compare(a, b))?.clone();
    let c = p.remove(&key).expect("present");
    Some((key, c))
}

/// Dimension of the presented algebra from its standard monomials.
pub fn poisson_dim(pres: &GradedPres) -> Result<PoissonReport> {
    pres.check_termination()?;
    let basis = pres.standard_monomials()?;
    let even = basis.iter().filter(|m| pres.is_even_monomial(m)).count();
    Ok(PoissonReport {
        total: basis.len(),
        even,
        unresolved_pairs: pres.unresolved_pairs(),
        closure_ok: pres.closure_holds(&basis),
        basis: basis.iter().map(|m| pres.show_mono(m)).collect(),
    })
}

fn gen(name: &str, parity: Parity, weight: u32) -> Generator {
    Generator {
        name: name.into(),
        parity,
        weight,
    }
}

/// `P(W(p))` on `ω, H, E, F` with `ν = 1`.
pub fn triplet_presentation(p: u32) -> Result<GradedPres> {
    if p < 2 {
        return Err(Error::Param(format!("triplet needs p >= 2, got {p}")));
    }
    let w = 2 * (2 * p - 1);
    let mut g = GradedPres::new(vec![
        gen("H", Parity::Even, w),
        gen("E", Parity::Even, w),
        gen("F", Parity::Even, w),
        gen("w", Parity::Even, 4),
    ]);
    use RuleSource::Relation;
    g.rule(&[("w", 3 * p - 1)], &[], Relation);
    g.rule(&[("E", 2)], &[], Relation);
    g.rule(&[("F", 2)], &[], Relation);
    g.rule(&[("H", 1), ("E", 1)], &[], Relation);
    g.rule(&[("H", 1), ("F", 1)], &[], Relation);
    g.rule(&[("H", 2)], &[(1, &[("w", 2 * p - 1)])], Relation);
    g.rule(&[("E", 1), ("F", 1)], &[(-1, &[("w", 2 * p - 1)])], Relation);
    for x in ["H", "E", "F"] {
        g.rule(&[("w", p), (x, 1)], &[], Relation);
    }
    Ok(g)
}

/// `P(SW(m))` on `ω, τ, E, F, H, Ê, F̂, Ĥ` with `ν_1 = ν_2 = 1`; `τ, E, F, H` are odd.
pub fn super_presentation(m: u32) -> Result<GradedPres> {
    if m < 1 {
        return Err(Error::Param(format!("super families need m >= 1, got {m}")));
    }
    let mut g = GradedPres::new(vec![
        gen("Ĥ", Parity::Even, 4 * m + 2),
        gen("Ê", Parity::Even, 4 * m + 2),
        gen("F̂", Parity::Even, 4 * m + 2),
        gen("H", Parity::Odd, 4 * m + 1),
        gen("E", Parity::Odd, 4 * m + 1),
        gen("F", Parity::Odd, 4 * m + 1),
        gen("τ", Parity::Odd, 3),
        gen("w", Parity::Even, 4),
    ]);
    use RuleSource::{Relation, Span};
    g.rule(&[("w", 3 * m + 1)], &[], Relation);
    g.rule(&[("Ê", 2)], &[], Relation);
    g.rule(&[("F̂", 2)], &[], Relation);
    g.rule(&[("Ĥ", 1), ("Ê", 1)], &[], Relation);
    g.rule(&[("Ĥ", 1), ("F̂", 1)], &[], Relation);
    g.rule(&[("Ĥ", 2)], &[(1, &[("w", 2 * m + 1)])], Relation);
    for (x, xh) in [("E", "Ê"), ("F", "F̂"), ("H", "Ĥ")] {
        g.rule(&[("τ", 1), (xh, 1)], &[], Relation);
        g.rule(&[("τ", 1), (x, 1)], &[(1, &[(xh, 1)])], Relation);
        g.rule(&[("w", m + 1), (x, 1)], &[], Relation);
        g.rule(&[("w", m + 1), (xh, 1)], &[], Relation);
    }
    for (a, b) in [("E", "F"), ("H", "E"), ("H", "F"), ("Ê", "F̂")] {
        g.rule(&[(a, 1), (b, 1)], &[], Span);
    }
    for x in ["E", "F", "H"] {
        for xh in ["Ê", "F̂", "Ĥ"] {
            g.rule(&[(xh, 1), (x, 1)], &[], Span);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_nilpotent_generator() {
        let mut g = GradedPres::new(vec![gen("w", Parity::Even, 1)]);
        g.rule(&[("w", 3)], &[], RuleSource::Relation);
        let r = poisson_dim(&g).unwrap();
        assert_eq!((r.total, r.even), (3, 3));
        assert!(r.unresolved_pairs.is_empty());
    }

    #[test]
    fn odd_generators_anticommute() {
        let g = GradedPres::new(vec![gen("a", Parity::Odd, 1), gen("b", Parity::Odd, 1)]);
        let (m, s) = g.mul_mono(&[0, 1], &[1, 0]).unwrap();
        assert_eq!(m, vec![1, 1]);
        assert_eq!(s, Rat::from(-1));
        assert!(g.mul_mono(&[1, 0], &[1, 0]).is_none());
    }

    #[test]
    fn increasing_rule_is_rejected() {
        let mut g = GradedPres::new(vec![gen("a", Parity::Even, 1), gen("b", Parity::Even, 1)]);
        g.rule(&[("b", 1)], &[(1, &[("a", 2)])], RuleSource::Relation);
        assert!(poisson_dim(&g).is_err());
    }

    #[test]
    fn non_nilpotent_generator_is_rejected() {
        let g = GradedPres::new(vec![gen("a", Parity::Even, 1)]);
        assert!(poisson_dim(&g).is_err());
    }

    #[test]
    fn triplet_is_confluent() {
        for p in 2..=4 {
            let r = poisson_dim(&triplet_presentation(p).unwrap()).unwrap();
            assert_eq!(r.total, 6 * p as usize - 1);
            assert!(r.unresolved_pairs.is_empty(), "{:?}", r.unresolved_pairs);
            assert!(r.closure_ok);
        }
    }
}
