//! Integrands of the three-variable residue identities.
//!
//! Every catalog integrand has the shape
//!
//! ```text
//! (1+z1)^γ z1^(-c) (z1 z2 z3)^(-N) (1 - z2/z1)^(-M) (1 - z3/z1)^(-M) (z2 - z3)^D (1+z2)^β2 (1+z3)^β3
//! ```
//!
//! so one description feeds both the series evaluator and the direct sum.

use super::expr::{Atom, ResidueExpr, TExponent};

/// Parameters of the common three-variable integrand shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleShape {
    /// Extra pole order `c` in `z1`.
    pub z1_pole: i64,
    /// Common pole order `N` of `z1 z2 z3`.
    pub common_pole: i64,
    /// Exponent `M` of both geometric factors.
    pub geom: u32,
    /// Exponent `D` of `z2 - z3`.
    pub diff: u32,
    pub gamma: TExponent,
    pub beta2: TExponent,
    pub beta3: TExponent,
}

impl TripleShape {
    pub fn to_expr(&self) -> ResidueExpr {
        let atoms = vec![
            Atom::Power {
                var: 0,
                exp: -self.common_pole - self.z1_pole,
            },
            Atom::Power {
                var: 1,
                exp: -self.common_pole,
            },
            Atom::Power {
                var: 2,
                exp: -self.common_pole,
            },
            Atom::GeomInv {
                outer: 0,
                inner: 1,
                exp: self.geom,
            },
            Atom::GeomInv {
                outer: 0,
                inner: 2,
                exp: self.geom,
            },
            Atom::Diff {
                first: 1,
                second: 2,
                exp: self.diff,
            },
            Atom::OnePlusPow {
                var: 0,
                exp: self.gamma.clone(),
            },
            Atom::OnePlusPow {
                var: 1,
                exp: self.beta2.clone(),
            },
            Atom::OnePlusPow {
                var: 2,
                exp: self.beta3.clone(),
            },
        ];
        ResidueExpr::residue(&["z1", "z2", "z3"], atoms).expect("catalog integrands are well formed")
    }
}

/// `G_p(t)`: triplet integrand, `N = 2p`, `c = 2`, `M = D = 2p`, `γ = 2p-1-t`, `β = t`.
pub fn triplet(p: u32) -> TripleShape {
    let p = p as i64;
    TripleShape {
        z1_pole: 2,
        common_pole: 2 * p,
        geom: (2 * p) as u32,
        diff: (2 * p) as u32,
        gamma: TExponent::int(2 * p - 1, -1),
        beta2: TExponent::int(0, 1),
        beta3: TExponent::int(0, 1),
    }
}

/// Compact form of the super-triplet residue.
pub fn striplet(m: u32) -> TripleShape {
    let m = m as i64;
    TripleShape {
        z1_pole: 1,
        common_pole: 2 * m + 1,
        geom: (2 * m + 1) as u32,
        diff: (2 * m) as u32,
        gamma: TExponent::int(2 * m, -1),
        beta2: TExponent::int(0, 1),
        beta3: TExponent::int(0, 1),
    }
}

/// Twisted residue `F(m, t)` with half-integer exponents.
pub fn twisted_f(m: u32) -> TripleShape {
    let m = m as i64;
    TripleShape {
        z1_pole: 3,
        common_pole: 2 * m + 1,
        geom: (2 * m + 1) as u32,
        diff: (2 * m) as u32,
        gamma: TExponent::half(4 * m + 1, -1),
        beta2: TExponent::half(1, 1),
        beta3: TExponent::half(-1, 1),
    }
}

/// First twisted vanishing residue.
pub fn twisted_r1(m: u32) -> TripleShape {
    TripleShape {
        z1_pole: 2,
        ..twisted_f(m)
    }
}

/// Second twisted residue.
pub fn twisted_r2(m: u32) -> TripleShape {
    let m = m as i64;
    TripleShape {
        z1_pole: 1,
        common_pole: 2 * m + 2,
        geom: (2 * m + 1) as u32,
        diff: (2 * m + 2) as u32,
        gamma: TExponent::half(4 * m + 1, -1),
        beta2: TExponent::half(-1, 1),
        beta3: TExponent::half(-1, 1),
    }
}

/// The uncompacted super-triplet residue: one integrand per `i` in `0..=2m`,
/// carrying `z2^(-i-1) z3^i (z2 - z3)^(2m+1)`.
pub fn striplet_expanded(m: u32) -> Vec<ResidueExpr> {
    let base = striplet(m);
    (0..=2 * m as i64)
        .map(|i| {
            let mut e = TripleShape {
                diff: base.diff + 1,
                ..base.clone()
            }
            .to_expr();
            e.atoms.push(Atom::Power { var: 1, exp: -i - 1 });
            e.atoms.push(Atom::Power { var: 2, exp: i });
            e
        })
        .collect()
}

/// Named catalog entries accepted by the CLI.
pub fn lookup(name: &str, param: u32) -> Option<TripleShape> {
    match name {
        "triplet" => Some(triplet(param)),
        "striplet" => Some(striplet(param)),
        "twisted-f" => Some(twisted_f(param)),
        "twisted-r1" => Some(twisted_r1(param)),
        "twisted-r2" => Some(twisted_r2(param)),
        _ => None,
    }
}

pub const NAMES: [&str; 5] = ["triplet", "striplet", "twisted-f", "twisted-r1", "twisted-r2"];
