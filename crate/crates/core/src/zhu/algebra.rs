//! Block dimensions, centers and decompositions of the Zhu algebras.

use serde::Serialize;

use super::center::{center_structure, RootMult};
use super::module::{kernel_quotient_dim, Elem, ModulePres};
use super::poisson::{poisson_dim, super_presentation, triplet_presentation};
use super::spectral::{build_catalog, rescale_even, Catalog, Family};
use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Rat, Var};

pub const NORMALIZATION_NOTE: &str =
    "undetermined nonzero constants in relations are set to 1; dimensions and block structure do not depend on them";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Blocks {
    pub minus: usize,
    pub zero: usize,
    pub plus: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CenterJson {
    pub poly_degree: usize,
    pub roots: Vec<RootMult>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Matrix,
    Ideal,
}

/// One summand: a 2×2 matrix algebra or a local ideal `Q[x]/(x-r)^k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summand {
    pub kind: BlockKind,
    pub dim: usize,
    /// Root of the center polynomial the summand is attached to.
    pub root: Rat,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decomposition {
    pub matrix_blocks: usize,
    pub two_dim_ideals: usize,
    pub one_dim_ideals: usize,
    /// Local ideals of dimension at least three, as `(dim, count)`.
    pub higher_ideals: Vec<(usize, usize)>,
    pub summands: Vec<Summand>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraReport {
    pub family: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub blocks: Blocks,
    pub total: usize,
    pub center: CenterJson,
    pub max_nilpotent_rank: usize,
    pub decomposition: Decomposition,
    pub normalization_note: String,
}

impl AlgebraReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }
}

/// Rank over `Q` of a list of polynomials, viewed as coefficient vectors.
pub fn poly_rank(polys: &[ParamPoly]) -> usize {
    let width = polys.iter().filter_map(|p| p.degree()).max().map_or(0, |d| d + 1);
    let mut rows: Vec<Vec<Rat>> = polys
        .iter()
        .map(|p| (0..width).map(|k| p.coeff(k)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][c].recip();
        let prow: Vec<Rat> = rows[rank].iter().map(|v| v * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&prow) {
                *x -= &(&f * p);
            }
        }
        rank += 1;
    }
    rank
}

fn center_variable_cutoff(cat: &Catalog) -> Result<ParamPoly> {
    match cat.family {
        Family::TwistedSuper { m } => rescale_even(&cat.cutoff, &Rat::from(8 * (2 * m as i64 + 1))),
        _ => Ok(cat.cutoff.clone()),
    }
}

/// Dimension of `A_{±1}`: the span of `cutoff / (x − r)` over the cutoff roots.
fn side_dim(cat: &Catalog) -> Result<usize> {
    let cutoff = center_variable_cutoff(cat)?;
    let mut span = Vec::with_capacity(cat.side_roots.len());
    for r in &cat.side_roots {
        let lin = ParamPoly::linear_root(r, Var::X);
        let s = cutoff
            .div_exact(&lin)
            .ok_or_else(|| Error::Internal(format!("{r} is not a root of the cutoff")))?;
        span.push(s);
    }
    Ok(poly_rank(&span))
}

fn params_of(family: Family) -> serde_json::Map<String, serde_json::Value> {
    let mut map = serde_json::Map::new();
    if let Some((k, v)) = family.param() {
        map.insert(k.into(), v.into());
    }
    map
}

fn kernel_pres(cat: &Catalog) -> ModulePres {
    let mut pres = ModulePres::kernel(cat.q.clone(), cat.cutoff.clone());
    if cat.family == Family::C0 {
        pres.generators.push(Elem::new(cat.full.clone(), ParamPoly::zero(Var::X)));
    }
    pres
}

pub fn assemble_algebra(family: Family) -> Result<AlgebraReport> {
    let cat = build_catalog(family)?;
    let zero = kernel_quotient_dim(&kernel_pres(&cat))?;
    let side = side_dim(&cat)?;
    let center = center_structure(&cat.center_poly, &cat.center_roots)?;
    let cutoff = center_variable_cutoff(&cat)?;
    let mut summands: Vec<Summand> = Vec::new();
    for r in &cat.side_roots {
        summands.push(Summand {
            kind: BlockKind::Matrix,
            dim: 4,
            root: r.clone(),
        });
    }
    for rm in &center.roots {
        let on_cutoff = cutoff.root_multiplicity(&rm.value)?;
        let k = rm.multiplicity - on_cutoff;
        if k > 0 {
            summands.push(Summand {
                kind: BlockKind::Ideal,
                dim: k,
                root: rm.value.clone(),
            });
        }
    }
    let total = 2 * side + zero;
    let summed: usize = summands.iter().map(|s| s.dim).sum();
    if summed != total {
        return Err(Error::Internal(format!(
            "summands add up to {summed}, block dimensions to {total}"
        )));
    }
    let ideals = |k: usize| {
        summands
            .iter()
            .filter(|s| s.kind == BlockKind::Ideal && s.dim == k)
            .count()
    };
    let mut higher = Vec::new();
    let max_ideal = summands.iter().map(|s| s.dim).max().unwrap_or(0);
    for k in 3..=max_ideal {
        let c = ideals(k);
        if c > 0 {
            higher.push((k, c));
        }
    }
    Ok(AlgebraReport {
        family: family.name().into(),
        params: params_of(family),
        blocks: Blocks {
            minus: side,
            zero,
            plus: side,
        },
        total,
        center: CenterJson {
            poly_degree: center.poly_degree,
            roots: center.roots.clone(),
        },
        max_nilpotent_rank: center.max_rank,
        decomposition: Decomposition {
            matrix_blocks: cat.side_roots.len(),
            two_dim_ideals: ideals(2),
            one_dim_ideals: ideals(1),
            higher_ideals: higher,
            summands,
        },
        normalization_note: format!("{NORMALIZATION_NOTE}; {}", cat.variable_note),
    })
}

/// `A(SW(m))` as `m` matrix blocks, `m` two-dimensional ideals and one line.
pub fn super_decomposition(m: u32) -> Result<AlgebraReport> {
    let report = assemble_algebra(Family::Super { m })?;
    let d = &report.decomposition;
    let m = m as usize;
    if (d.matrix_blocks, d.two_dim_ideals, d.one_dim_ideals) != (m, m, 1) || report.total != 6 * m + 1 {
        return Err(Error::Internal(format!(
            "unexpected decomposition ({}, {}, {}) of total {}",
            d.matrix_blocks, d.two_dim_ideals, d.one_dim_ideals, report.total
        )));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub family: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub dim_a: usize,
    /// `P` or its even part `P0`.
    pub poisson_part: String,
    pub dim_p: Option<usize>,
    /// `<`, `=`, `>` or `unknown`.
    pub relation: String,
    pub note: String,
}

fn relation(a: usize, p: usize) -> String {
    match a.cmp(&p) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    }
    .into()
}

pub fn inequality_report(family: Family) -> Result<InequalityReport> {
    let a = assemble_algebra(family)?;
    let (part, dim_p, note) = match family {
        Family::Triplet { p } => {
            let r = poisson_dim(&triplet_presentation(p)?)?;
            ("P", Some(r.total), String::new())
        }
        Family::Super { m } => {
            let r = poisson_dim(&super_presentation(m)?)?;
            ("P0", Some(r.even), String::new())
        }
        Family::TwistedSuper { m } => {
            let r = poisson_dim(&super_presentation(m)?)?;
            ("P", Some(r.total), String::new())
        }
        Family::C0 => (
            "P",
            None,
            "dim P is not derivable from the available data; a strict inequality is only conjectured".to_string(),
        ),
    };
    Ok(InequalityReport {
        family: a.family,
        params: a.params,
        dim_a: a.total,
        poisson_part: part.into(),
        relation: dim_p.map_or_else(|| "unknown".into(), |p| relation(a.total, p)),
        dim_p,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_lagrange_basis() {
        let roots = [Rat::from(1), Rat::from(2), Rat::from(3)];
        let f = ParamPoly::from_roots(&roots, Var::X);
        let span: Vec<ParamPoly> = roots
            .iter()
            .map(|r| f.div_exact(&ParamPoly::linear_root(r, Var::X)).unwrap())
            .collect();
        assert_eq!(poly_rank(&span), 3);
        assert_eq!(poly_rank(&[span[0].clone(), span[0].scale(&Rat::from(2))]), 1);
    }

    #[test]
    fn triplet_p2_total() {
        let r = assemble_algebra(Family::Triplet { p: 2 }).unwrap();
        assert_eq!(r.total, 11);
        assert_eq!(r.blocks, Blocks { minus: 2, zero: 7, plus: 2 });
    }

    #[test]
    fn super_m1_line_weight() {
        let r = super_decomposition(1).unwrap();
        let line = r
            .decomposition
            .summands
            .iter()
            .find(|s| s.kind == BlockKind::Ideal && s.dim == 1)
            .unwrap();
        assert_eq!(line.root, Rat::new(-1, 6));
    }
}
