use proptest::prelude::*;
use zhu_lab::exact::{binom_int, binom_poly, ParamPoly, Rat, Var};
use zhu_lab::residue::catalog;
use zhu_lab::residue::sums::{
    gtilde_closed, h_p, k_generalized_closed, proportionality_constant, r2_closed, reflect,
    triple_sum_gp_unsigned, twisted_f_closed,
};
use zhu_lab::residue::*;

#[test]
fn series_and_sums_agree_on_every_shape() {
    for p in 2..=3 {
        let shape = catalog::triplet(p);
        let series = eval_residue(&shape.to_expr()).unwrap();
        assert_eq!(series, direct_sum(&shape), "triplet p={p}");
        assert_eq!(series, triple_sum_gp(p), "triplet printed sum p={p}");
    }
    for m in 0..=2 {
        let shape = catalog::striplet(m);
        let series = eval_residue(&shape.to_expr()).unwrap();
        assert_eq!(series, triple_sum_gtilde(m), "striplet m={m}");
        assert_eq!(series, direct_sum(&shape), "striplet direct m={m}");
    }
    for m in 1..=2 {
        let f = catalog::twisted_f(m);
        assert_eq!(eval_residue(&f.to_expr()).unwrap(), twisted_f(m), "twisted F m={m}");
        let (r1, r2) = twisted_r1_r2(m);
        assert_eq!(eval_residue(&catalog::twisted_r1(m).to_expr()).unwrap(), r1);
        assert_eq!(eval_residue(&catalog::twisted_r2(m).to_expr()).unwrap(), r2);
    }
}

#[test]
fn padded_truncation_changes_nothing() {
    for expr in [
        catalog::triplet(2).to_expr(),
        catalog::twisted_r2(1).to_expr(),
        catalog::striplet(1).to_expr(),
    ] {
        let tight = TruncationPlan::build(&expr).unwrap();
        let padded = TruncationPlan::build_padded(&expr, 3).unwrap();
        assert_eq!(
            series::eval_with_plan(&expr, &tight).unwrap(),
            series::eval_with_plan(&expr, &padded).unwrap()
        );
    }
}

#[test]
fn expanded_striplet_form_matches_compact_form() {
    for m in 0..=2 {
        let total = catalog::striplet_expanded(m)
            .iter()
            .map(|e| eval_residue(e).unwrap())
            .fold(ParamPoly::zero(Var::T), |a, b| &a + &b);
        assert_eq!(total, triple_sum_gtilde(m), "m={m}");
    }
}

#[test]
fn gp_closed_form_and_structure() {
    for p in 2..=5u32 {
        let g = triple_sum_gp(p);
        assert_eq!(g, h_p(p), "p={p}");
        assert_eq!(g.degree(), Some(4 * p as usize - 1));
        // G_p(t) = -G_p(2p-2-t) for every p; a (-1)^p sign only matches odd p.
        let mirrored = reflect(&g, &Rat::from(2 * p - 2));
        assert_eq!(g, -&mirrored, "p={p}");
        assert_eq!(g == mirrored.scale(&Rat::sign_pow(p as i64)), p % 2 == 1);
        for t in -(p as i64)..=3 * p as i64 - 2 {
            assert!(g.eval(&Rat::from(t)).is_zero(), "p={p} t={t}");
        }
        assert!(binom_poly(&Rat::from(p), 4 * p - 1).divides(&g));
    }
}

#[test]
fn gp_linear_coefficient() {
    for p in 2..=4u32 {
        let f = |n: u32| Rat::factorial(n);
        let expected = Rat::sign_pow(p as i64) * f(2 * p) * f(2 * p - 2) * f(3 * p - 2)
            / (f(p) * f(p - 1).pow(2) * f(4 * p - 1));
        assert_eq!(triple_sum_gp(p).coeff(1), expected);
    }
}

#[test]
fn alternating_sign_is_required() {
    for p in 2..=3 {
        assert_ne!(triple_sum_gp_unsigned(p), triple_sum_gp(p));
    }
}

#[test]
fn gtilde_closed_form() {
    assert_eq!(triple_sum_gtilde(0), ParamPoly::from_ints(&[0, -1], Var::T));
    assert_eq!(
        triple_sum_gtilde(1),
        binom_poly(&Rat::one(), 5).scale(&Rat::from(-4))
    );
    for m in 1..=3 {
        assert_eq!(triple_sum_gtilde(m), gtilde_closed(m), "m={m}");
    }
    assert!(triple_sum_gtilde(2).eval(&Rat::from(-2)).is_zero());
}

#[test]
fn twisted_closed_forms() {
    for m in 1..=2u32 {
        let f = twisted_f(m);
        assert_eq!(f, twisted_f_closed(m), "m={m}");
        assert!(f.eval(&Rat::from(m)).is_zero());
        assert_eq!(f, -reflect(&f, &Rat::from(2 * m)));
        let (r1, r2) = twisted_r1_r2(m);
        assert!(r1.is_zero(), "m={m}");
        assert_eq!(proportionality_constant(&r2, &r2_closed(m)), Some(Rat::one()));
    }
    let (_, r2) = twisted_r1_r2(1);
    assert!(r2.eval(&Rat::new(-3, 2)).is_zero());
}

#[test]
fn k_generalized_identity() {
    assert_eq!(k_generalized_sum(2, 1), Rat::from(16));
    for p in 2..=5 {
        for k in 1..=p {
            assert_eq!(k_generalized_sum(p, k), k_generalized_closed(p, k), "p={p} k={k}");
        }
    }
}

#[test]
fn ct_eval_json_document() {
    let src = r#"{
        "variables": ["x"],
        "atoms": [
            {"kind": "power", "var": "x", "exponent": {"const": "-3"}},
            {"kind": "one_plus_pow", "var": "x", "exponent": {"const": "1/2", "t_coeff": 1}}
        ],
        "residue_orders": {"x": 1}
    }"#;
    let e = ResidueExpr::from_json(src).unwrap();
    assert_eq!(eval_residue(&e).unwrap(), binom_poly(&Rat::new(1, 2), 2));
    let back = ResidueExpr::from_json(&e.to_json()).unwrap();
    assert_eq!(eval_residue(&back).unwrap(), binom_poly(&Rat::new(1, 2), 2));
}

// Residue of x^-(k+1) (1+x)^n equals C(n, k) for every integer n.
proptest! {
    #[test]
    fn one_variable_residue_is_binomial(n in -6i64..8, k in 0u32..6, order in 1i64..3) {
        let e = ResidueExpr::new(
            vec!["x".into()],
            vec![
                Atom::Power { var: 0, exp: -(k as i64) - order },
                Atom::OnePlusPow { var: 0, exp: TExponent::int(n, 0) },
            ],
            vec![order],
        ).unwrap();
        prop_assert_eq!(eval_residue(&e).unwrap(), ParamPoly::constant(binom_int(n, k), Var::T));
    }
}
