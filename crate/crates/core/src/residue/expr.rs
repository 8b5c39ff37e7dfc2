//! Iterated-residue expressions and their JSON form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Exponent `a + b·t` of a `(1 + x)` factor. `a` must lie in `(1/2)Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TExponent {
    #[serde(rename = "const")]
    pub constant: Rat,
    #[serde(default)]
    pub t_coeff: i64,
}

impl TExponent {
    pub fn new(constant: Rat, t_coeff: i64) -> Self {
        TExponent { constant, t_coeff }
    }

    pub fn int(c: i64, t_coeff: i64) -> Self {
        TExponent::new(Rat::from(c), t_coeff)
    }

    pub fn half(num: i64, t_coeff: i64) -> Self {
        TExponent::new(Rat::new(num, 2), t_coeff)
    }
}

/// One factor of a residue integrand. Variables are indices into [`ResidueExpr::variables`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `x^e`.
    Power { var: usize, exp: i64 },
    /// `(1 + x)^(a + b t)`.
    OnePlusPow { var: usize, exp: TExponent },
    /// `(x_first - x_second)^exp`.
    Diff { first: usize, second: usize, exp: u32 },
    /// `(1 - x_inner / x_outer)^(-exp)`, expanded in powers of `x_inner / x_outer`.
    GeomInv { outer: usize, inner: usize, exp: u32 },
}

impl Atom {
    fn vars(&self) -> Vec<usize> {
        match *self {
            Atom::Power { var, .. } | Atom::OnePlusPow { var, .. } => vec![var],
            Atom::Diff { first, second, .. } => vec![first, second],
            Atom::GeomInv { outer, inner, .. } => vec![outer, inner],
        }
    }
}

/// A product of atoms over ordered variables together with the residue order
/// to extract in each variable.
///
/// Variables are ordered from largest to smallest: the expansion region is
/// `|x_last| < ... < |x_first|`. A residue order `k` extracts the coefficient
/// of `x^(-k)`; the ordinary residue is `k = 1` and a constant term is `k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueExpr {
    pub variables: Vec<String>,
    pub atoms: Vec<Atom>,
    pub residue_orders: Vec<i64>,
}

impl ResidueExpr {
    pub fn new(variables: Vec<String>, atoms: Vec<Atom>, residue_orders: Vec<i64>) -> Result<Self> {
        let e = ResidueExpr {
            variables,
            atoms,
            residue_orders,
        };
        e.validate()?;
        Ok(e)
    }

    /// Ordinary residue in every variable.
    pub fn residue(variables: &[&str], atoms: Vec<Atom>) -> Result<Self> {
        let orders = vec![1; variables.len()];
        Self::new(variables.iter().map(|s| s.to_string()).collect(), atoms, orders)
    }

    pub fn validate(&self) -> Result<()> {
        let nv = self.variables.len();
        if nv == 0 || nv > 3 {
            return Err(Error::Input(format!("expected 1 to 3 variables, got {nv}")));
        }
        for (a, name) in self.variables.iter().enumerate() {
            if self.variables[..a].contains(name) {
                return Err(Error::Input(format!("duplicate variable {name:?}")));
            }
        }
        if self.residue_orders.len() != nv {
            return Err(Error::Input("one residue order per variable is required".into()));
        }
        for atom in &self.atoms {
            if atom.vars().iter().any(|&v| v >= nv) {
                return Err(Error::Input(format!("atom {atom:?} references an undeclared variable")));
            }
            match atom {
                Atom::OnePlusPow { exp, .. } => {
                    if exp.t_coeff.abs() > 1 {
                        return Err(Error::Input(format!(
                            "t coefficient {} of a (1+x) exponent must be -1, 0 or 1",
                            exp.t_coeff
                        )));
                    }
                    let twice = &exp.constant * Rat::from(2);
                    if !twice.is_integer() {
                        return Err(Error::Input(format!(
                            "(1+x) exponent constant {} is not in (1/2)Z",
                            exp.constant
                        )));
                    }
                }
                Atom::Diff { first, second, .. } if first == second => {
                    return Err(Error::Input("difference atom needs two distinct variables".into()));
                }
                Atom::GeomInv { outer, inner, .. } if outer >= inner => {
                    return Err(Error::Input(format!(
                        "(1 - {}/{})^-n requires {} to precede {} in the ordering",
                        self.variables[*inner],
                        self.variables[*outer],
                        self.variables[*outer],
                        self.variables[*inner]
                    )));
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: ExprJson = serde_json::from_str(s)?;
        raw.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ExprJson::from(self)).expect("serialisable")
    }
}

#[derive(Serialize, Deserialize)]
struct ExprJson {
    variables: Vec<String>,
    atoms: Vec<AtomJson>,
    #[serde(default)]
    residue_orders: BTreeMap<String, i64>,
}

#[derive(Serialize, Deserialize)]
struct AtomJson {
    kind: AtomKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    var: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vars: Option<[String; 2]>,
    exponent: TExponent,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(rename_all = "snake_case")]
enum AtomKind {
    Power,
    OnePlusPow,
    Diff,
    GeomInv,
}

impl TryFrom<ExprJson> for ResidueExpr {
    type Error = Error;

    fn try_from(raw: ExprJson) -> Result<Self> {
        let index = |name: &str| {
            raw.variables
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Input(format!("unknown variable {name:?}")))
        };
        for name in raw.residue_orders.keys() {
            index(name)?;
        }
        let mut atoms = Vec::with_capacity(raw.atoms.len());
        for a in &raw.atoms {
            let single = || {
                a.var
                    .as_deref()
                    .ok_or_else(|| Error::Input("atom needs a \"var\" field".into()))
                    .and_then(index)
            };
            let pair = || -> Result<(usize, usize)> {
                let [x, y] = a
                    .vars
                    .as_ref()
                    .ok_or_else(|| Error::Input("atom needs a \"vars\" pair".into()))?;
                Ok((index(x)?, index(y)?))
            };
            let integral = || -> Result<i64> {
                if a.exponent.t_coeff != 0 {
                    return Err(Error::Input("only (1+x) atoms may depend on t".into()));
                }
                a.exponent
                    .constant
                    .to_i64()
                    .ok_or_else(|| Error::Input(format!("non-integer exponent {}", a.exponent.constant)))
            };
            let natural = || -> Result<u32> {
                u32::try_from(integral()?).map_err(|_| Error::Input("exponent must be natural".into()))
            };
            atoms.push(match a.kind {
                AtomKind::Power => Atom::Power {
                    var: single()?,
                    exp: integral()?,
                },
                AtomKind::OnePlusPow => Atom::OnePlusPow {
                    var: single()?,
                    exp: a.exponent.clone(),
                },
                AtomKind::Diff => {
                    let (first, second) = pair()?;
                    Atom::Diff {
                        first,
                        second,
                        exp: natural()?,
                    }
                }
                AtomKind::GeomInv => {
                    let (outer, inner) = pair()?;
                    Atom::GeomInv {
                        outer,
                        inner,
                        exp: natural()?,
                    }
                }
            });
        }
        let orders = raw
            .variables
            .iter()
            .map(|v| raw.residue_orders.get(v).copied().unwrap_or(1))
            .collect();
        ResidueExpr::new(raw.variables, atoms, orders)
    }
}

impl From<&ResidueExpr> for ExprJson {
    fn from(e: &ResidueExpr) -> Self {
        let name = |v: usize| e.variables[v].clone();
        let int = |k: i64| TExponent::int(k, 0);
        let atoms = e
            .atoms
            .iter()
            .map(|a| match a {
                Atom::Power { var, exp } => AtomJson {
                    kind: AtomKind::Power,
                    var: Some(name(*var)),
                    vars: None,
                    exponent: int(*exp),
                },
                Atom::OnePlusPow { var, exp } => AtomJson {
                    kind: AtomKind::OnePlusPow,
                    var: Some(name(*var)),
                    vars: None,
                    exponent: exp.clone(),
                },
                Atom::Diff { first, second, exp } => AtomJson {
                    kind: AtomKind::Diff,
                    var: None,
                    vars: Some([name(*first), name(*second)]),
                    exponent: int(*exp as i64),
                },
                Atom::GeomInv { outer, inner, exp } => AtomJson {
                    kind: AtomKind::GeomInv,
                    var: None,
                    vars: Some([name(*outer), name(*inner)]),
                    exponent: int(*exp as i64),
                },
            })
            .collect();
        ExprJson {
            variables: e.variables.clone(),
            atoms,
            residue_orders: e
                .variables
                .iter()
                .cloned()
                .zip(e.residue_orders.iter().copied())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_violation_is_rejected() {
        let atoms = vec![Atom::GeomInv {
            outer: 1,
            inner: 0,
            exp: 2,
        }];
        let err = ResidueExpr::residue(&["x1", "x2"], atoms).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn quarter_shift_is_rejected() {
        let atoms = vec![Atom::OnePlusPow {
            var: 0,
            exp: TExponent::new(Rat::new(1, 4), 1),
        }];
        assert!(ResidueExpr::residue(&["x"], atoms).is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = ResidueExpr::residue(
            &["x1", "x2"],
            vec![
                Atom::Power { var: 0, exp: -3 },
                Atom::OnePlusPow {
                    var: 1,
                    exp: TExponent::half(1, -1),
                },
                Atom::GeomInv {
                    outer: 0,
                    inner: 1,
                    exp: 2,
                },
                Atom::Diff {
                    first: 0,
                    second: 1,
                    exp: 1,
                },
            ],
        )
        .unwrap();
        let back = ResidueExpr::from_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn unknown_variable_in_json() {
        let src = r#"{"variables":["x"],"atoms":[{"kind":"power","var":"y","exponent":{"const":"-1"}}]}"#;
        assert!(matches!(ResidueExpr::from_json(src), Err(Error::Input(_))));
    }
}
