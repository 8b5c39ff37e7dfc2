use zhu_lab::exact::{poly_gcd, ParamPoly, Rat, Var};
use zhu_lab::zhu::algebra::{poly_rank, BlockKind};
use zhu_lab::zhu::module::{kernel_quotient_basis, Elem};
use zhu_lab::zhu::poisson::{super_presentation, triplet_presentation};
use zhu_lab::zhu::spectral::{c0_g, triplet_weight};
use zhu_lab::zhu::*;

fn kernel_dim(family: Family) -> usize {
    let c = build_catalog(family).unwrap();
    kernel_quotient_dim(&ModulePres::kernel(c.q, c.cutoff)).unwrap()
}

#[test]
fn kernel_quotient_sweeps() {
    for p in 2..=6u32 {
        assert_eq!(kernel_dim(Family::Triplet { p }), 4 * p as usize - 1, "p={p}");
    }
    for m in 1..=4u32 {
        assert_eq!(kernel_dim(Family::Super { m }), 4 * m as usize + 1, "m={m}");
    }
    for m in 1..=3u32 {
        assert_eq!(kernel_dim(Family::TwistedSuper { m }), 8 * m as usize + 4, "m={m}");
    }
}

#[test]
fn kernel_basis_has_documented_shape() {
    for p in 2..=4u32 {
        let c = build_catalog(Family::Triplet { p }).unwrap();
        let b = kernel_quotient_basis(&ModulePres::kernel(c.q.clone(), c.cutoff.clone())).unwrap();
        assert_eq!(b.plain, (&c.cutoff * &c.q).degree().unwrap());
        assert_eq!(b.with_y, c.cutoff.degree().unwrap());
    }
}

#[test]
fn algebra_totals() {
    for p in 2..=6u32 {
        let r = assemble_algebra(Family::Triplet { p }).unwrap();
        let p = p as usize;
        assert_eq!((r.blocks.minus, r.blocks.zero, r.blocks.plus), (p, 4 * p - 1, p));
        assert_eq!(r.total, 6 * p - 1);
    }
    for m in 1..=4u32 {
        let r = super_decomposition(m).unwrap();
        assert_eq!(r.total, 6 * m as usize + 1);
    }
    for m in 1..=3u32 {
        let r = assemble_algebra(Family::TwistedSuper { m }).unwrap();
        let m = m as usize;
        assert_eq!(r.blocks.minus, 2 * m + 2);
        assert_eq!(r.total, 12 * m + 8);
        assert_eq!(r.center.poly_degree, 6 * m + 2);
    }
    let r = assemble_algebra(Family::C0).unwrap();
    assert_eq!((r.blocks.minus, r.blocks.zero, r.blocks.plus), (6, 26, 6));
    assert_eq!(r.total, 38);
    assert_eq!(r.center.poly_degree, 20);
    assert_eq!(r.max_nilpotent_rank, 3);
}

#[test]
fn totals_equal_block_sums() {
    let fams = [
        Family::Triplet { p: 3 },
        Family::Super { m: 2 },
        Family::TwistedSuper { m: 2 },
        Family::C0,
    ];
    for f in fams {
        let r = assemble_algebra(f).unwrap();
        assert_eq!(r.total, r.blocks.minus + r.blocks.zero + r.blocks.plus);
        let s: usize = r.decomposition.summands.iter().map(|s| s.dim).sum();
        assert_eq!(s, r.total);
    }
}

#[test]
fn super_summands_carry_weights() {
    let r = super_decomposition(2).unwrap();
    let weights: Vec<Rat> = (0..=6).map(|i| zhu_lab::zhu::spectral::super_weight(2, i)).collect();
    let matrix: Vec<&Rat> = r
        .decomposition
        .summands
        .iter()
        .filter(|s| s.kind == BlockKind::Matrix)
        .map(|s| &s.root)
        .collect();
    assert_eq!(matrix, vec![&weights[5], &weights[6]]);
    let line = r.decomposition.summands.iter().find(|s| s.dim == 1).unwrap();
    assert_eq!(line.root, weights[2]);
}

#[test]
fn logarithmic_indicators() {
    for p in 2..=6u32 {
        let c = build_catalog(Family::Triplet { p }).unwrap();
        let s = center_structure(&c.center_poly, &c.center_roots).unwrap();
        assert_eq!(s.count_with_multiplicity(2), p as usize - 1);
        assert_eq!(s.max_rank, 2);
    }
    for m in 1..=4u32 {
        let c = build_catalog(Family::Super { m }).unwrap();
        let s = center_structure(&c.center_poly, &c.center_roots).unwrap();
        assert_eq!(s.count_with_multiplicity(2), m as usize);
    }
    let c = build_catalog(Family::C0).unwrap();
    let s = center_structure(&c.center_poly, &c.center_roots).unwrap();
    assert_eq!(s.count_with_multiplicity(3), 1);
    let triple = s.roots.iter().find(|r| r.multiplicity == 3).unwrap();
    assert!(triple.value.is_zero());
    assert_eq!(s.max_rank, 3);
}

#[test]
fn weight_symmetry() {
    for p in 2..=6u32 {
        for i in 1..p as i64 {
            assert_eq!(triplet_weight(p, i), triplet_weight(p, 2 * p as i64 - i));
        }
    }
}

#[test]
fn triplet_factorization_is_consistent() {
    for p in 2..=6u32 {
        let c = build_catalog(Family::Triplet { p }).unwrap();
        let g = c.q.scale(&c.q_constant.recip());
        assert_eq!(&c.cutoff * &g, c.full);
        for i in 1..=(2 * p - 1) as i64 {
            assert!(g.eval(&triplet_weight(p, i)).is_zero());
        }
    }
}

#[test]
fn side_spanning_sets_are_independent() {
    for p in 2..=4u32 {
        let c = build_catalog(Family::Triplet { p }).unwrap();
        let span: Vec<ParamPoly> = c
            .side_roots
            .iter()
            .map(|r| c.cutoff.div_exact(&ParamPoly::linear_root(r, Var::X)).unwrap())
            .collect();
        assert_eq!(poly_rank(&span), p as usize);
    }
}

#[test]
fn c0_g_is_coprime_to_full() {
    let c = build_catalog(Family::C0).unwrap();
    let g = poly_gcd(&c0_g(), &c.full).unwrap();
    assert_eq!(g.degree(), Some(0));
}

#[test]
fn c0_extra_generator_is_redundant() {
    let c = build_catalog(Family::C0).unwrap();
    let principal = ModulePres::kernel(c.q.clone(), c.cutoff.clone());
    let mut with_full = principal.clone();
    with_full.generators.push(Elem::new(c.full.clone(), ParamPoly::zero(Var::X)));
    assert_eq!(kernel_quotient_dim(&principal).unwrap(), 26);
    assert_eq!(kernel_quotient_dim(&with_full).unwrap(), 26);
}

#[test]
fn poisson_triplet_sweep() {
    for p in 2..=6u32 {
        let r = poisson_dim(&triplet_presentation(p).unwrap()).unwrap();
        assert_eq!(r.total, 6 * p as usize - 1);
        assert!(r.closure_ok);
    }
}

#[test]
fn poisson_super_sweep() {
    for m in 1..=4u32 {
        let r = poisson_dim(&super_presentation(m).unwrap()).unwrap();
        let m = m as usize;
        assert_eq!((r.total, r.even), (12 * m + 8, 6 * m + 4));
        assert!(r.closure_ok);
    }
}

#[test]
fn poisson_super_reports_the_tau_h_hat_pair() {
    let r = poisson_dim(&super_presentation(1).unwrap()).unwrap();
    assert!(
        r.unresolved_pairs.iter().any(|c| c.monomial.contains('τ') && c.monomial.contains("Ĥ")),
        "{:?}",
        r.unresolved_pairs
    );
}

#[test]
fn inequality_records() {
    for m in 1..=4u32 {
        let r = inequality_report(Family::Super { m }).unwrap();
        assert_eq!(r.relation, "<");
        assert_eq!(r.dim_p, Some(6 * m as usize + 4));
    }
    let r = inequality_report(Family::Triplet { p: 3 }).unwrap();
    assert_eq!((r.dim_a, r.dim_p, r.relation.as_str()), (17, Some(17), "="));
    let r = inequality_report(Family::C0).unwrap();
    assert_eq!((r.dim_a, r.dim_p, r.relation.as_str()), (38, None, "unknown"));
}

#[test]
fn report_json_shape() {
    let v: serde_json::Value = serde_json::from_str(&assemble_algebra(Family::C0).unwrap().to_json()).unwrap();
    assert_eq!(v["total"], 38);
    assert_eq!(v["blocks"]["zero"], 26);
    assert_eq!(v["center"]["poly_degree"], 20);
    assert!(v["center"]["roots"][0]["value"].is_string());
    assert!(v["decomposition"]["matrix_blocks"].is_number());
    assert!(v["normalization_note"].as_str().unwrap().contains("set to 1"));
}
