//! Root multiplicities of the center polynomial.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Rat};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootMult {
    pub value: Rat,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CenterStructure {
    pub poly_degree: usize,
    pub roots: Vec<RootMult>,
    /// Largest Jordan block of multiplication by `x` on `Q[x]/(f)`.
    pub max_rank: usize,
}

impl CenterStructure {
    pub fn count_with_multiplicity(&self, k: usize) -> usize {
        self.roots.iter().filter(|r| r.multiplicity == k).count()
    }
}

/// Factor `f` completely over the candidate roots; anything left over is a data error.
pub fn center_structure(f: &ParamPoly, candidates: &[Rat]) -> Result<CenterStructure> {
    let degree = f
        .degree()
        .ok_or_else(|| Error::Domain("center polynomial is zero".into()))?;
    let mut rest = f.clone();
    let mut roots = Vec::new();
    let mut seen: Vec<&Rat> = Vec::new();
    for r in candidates {
        if seen.contains(&r) {
            continue;
        }
        seen.push(r);
        let k = rest.root_multiplicity(r)?;
        if k == 0 {
            continue;
        }
        let factor = ParamPoly::linear_root(r, f.var()).pow(k as u32);
        rest = rest.div_exact(&factor).expect("multiplicity divides");
        roots.push(RootMult {
            value: r.clone(),
            multiplicity: k,
        });
    }
    if rest.degree() != Some(0) {
        return Err(Error::Input(format!(
            "center polynomial does not split over the candidates; cofactor {rest}"
        )));
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    let max_rank = roots.iter().map(|r| r.multiplicity).max().unwrap_or(0);
    Ok(CenterStructure {
        poly_degree: degree,
        roots,
        max_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Var;

    #[test]
    fn double_root_at_zero() {
        let f = ParamPoly::from_roots(&[Rat::zero(), Rat::zero(), Rat::new(-1, 8)], Var::X);
        let c = center_structure(&f, &[Rat::zero(), Rat::new(-1, 8)]).unwrap();
        assert_eq!(c.max_rank, 2);
        assert_eq!(c.count_with_multiplicity(2), 1);
    }

    #[test]
    fn non_split_is_an_error() {
        let f = ParamPoly::from_ints(&[1, 0, 1], Var::X);
        assert!(center_structure(&f, &[Rat::zero()]).is_err());
    }
}
