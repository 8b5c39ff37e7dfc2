use zhu_lab::exact::{BiPoly, ParamPoly, Rat, RatFunc, Var};
use zhu_lab::wz::recurrence::{
    annihilates, first_order_ratio, proportionality, striplet_recurrence, triplet_linear_recurrence,
};
use zhu_lab::wz::term::*;
use zhu_lab::wz::zeilberger::{
    certificate_value, minimal_telescoper, recurrence_lhs, striplet_boundary, striplet_certificate,
    EXTENDED_BOUNDS,
};
use zhu_lab::wz::*;

fn constant_ratio(r: &RatFunc<ParamPoly>) -> Option<Rat> {
    let r = r.reduced();
    (r.num().degree() == Some(0) && r.den().degree() == Some(0)).then(|| r.num().coeff(0) / r.den().coeff(0))
}

#[test]
fn zeilberger_recovers_striplet_recurrence() {
    let z = zeilberger_order1(&striplet_term()).unwrap().expect("found");
    let lambda = proportionality(&z.recurrence.coeffs, &striplet_recurrence().coeffs).expect("proportional");
    assert!(constant_ratio(&lambda).is_some(), "ratio {lambda}");
    assert!(verify_certificate(&striplet_term(), &z.certificate).unwrap().pass);
}

#[test]
fn zeilberger_recovers_triplet_linear_recurrence() {
    let z = zeilberger_order1(&triplet_linear_term()).unwrap().expect("found");
    assert!(proportionality(&z.recurrence.coeffs, &triplet_linear_recurrence().coeffs).is_some());
}

#[test]
fn twisted_summand_has_no_order_one_telescoper() {
    assert!(zeilberger_order1(&twisted_term()).unwrap().is_none());
    let wide = zeilberger(&twisted_term(), 1, EXTENDED_BOUNDS).unwrap();
    assert!(wide.is_none());
}

#[test]
fn twisted_sum_satisfies_a_left_multiple_of_the_striplet_recurrence() {
    let z = minimal_telescoper(&twisted_term(), 2, EXTENDED_BOUNDS).unwrap().expect("found");
    assert_eq!(z.recurrence.order(), 2);
    assert!(verify_certificate(&twisted_term(), &z.certificate).unwrap().pass);
    let rho = first_order_ratio(&striplet_recurrence()).unwrap();
    assert!(annihilates(&z.recurrence, &rho));
    let lead = &z.recurrence.coeffs[2];
    assert!((1..=200).all(|n| !lead.eval(&Rat::from(n)).is_zero()));
    for m in 1..=10 {
        assert_eq!(twisted_sum(m), -striplet_sum(m) / Rat::from(2), "m={m}");
    }
}

#[test]
fn closed_forms_of_the_sums() {
    for m in 1..=10u32 {
        assert_eq!(striplet_sum(m as i64), striplet_sum_closed(m));
    }
    for p in 2..=10u32 {
        assert_eq!(triplet_linear_sum(p as i64), triplet_linear_closed(p));
    }
}

#[test]
fn recurrence_and_summation_routes_coincide() {
    let rec = striplet_recurrence().with_init(1, striplet_sum(1));
    let vals = solve_first_order(&rec, 8).unwrap();
    for (k, v) in vals.iter().enumerate() {
        assert_eq!(*v, striplet_sum(k as i64 + 1));
    }
    let rec = triplet_linear_recurrence().with_init(2, Rat::from(16));
    let vals = solve_first_order(&rec, 8).unwrap();
    assert_eq!(vals[1], Rat::from(-252));
    for (k, v) in vals.iter().enumerate() {
        assert_eq!(*v, triplet_linear_sum(k as i64 + 2));
    }
}

#[test]
fn printed_certificate_telescopes_pointwise() {
    let f = striplet_term();
    let cert = striplet_certificate();
    for m in 1..=6 {
        for i in 0..2 * m - 1 {
            let lhs = recurrence_lhs(&f, &cert.coefficients, m, i);
            let r1 = certificate_value(&f, &cert, m, i + 1).unwrap();
            let r0 = certificate_value(&f, &cert, m, i).unwrap();
            assert_eq!(lhs, r1 - r0, "m={m} i={i}");
        }
    }
}

#[test]
fn boundary_identity() {
    for m in 1..=8 {
        let (lhs, rhs) = striplet_boundary(m);
        assert_eq!(Some(lhs), rhs, "m={m}");
    }
}

#[test]
fn zero_certificate_does_not_telescope_a_binomial_row() {
    let f = HyperTerm::new(
        Affine::default(),
        vec![BinomFactor::new(Affine::new(0, 2, 0), Affine::new(0, 0, 1))],
    );
    let cert = Certificate {
        coefficients: vec![ParamPoly::from_ints(&[1], Var::N), ParamPoly::from_ints(&[-1], Var::N)],
        multiplier: RatFunc::from_poly(BiPoly::zero()),
    };
    assert!(!verify_certificate(&f, &cert).unwrap().pass);
    // rowwise: Σ_i C(2n,i) - Σ_i C(2n+2,i) ≠ 0
    let row = |n: i64| definite_sum(&f, Affine::constant(0), Affine::new(2, 2, 0), n).unwrap();
    assert_ne!(row(1) - row(2), Rat::zero());
}

#[test]
fn shift_ratio_of_the_printed_term_matches_quotients() {
    let f = striplet_term();
    let r = shift_ratio(&f, ShiftVar::I).unwrap();
    let q = f.eval(2, 2) / f.eval(2, 1);
    assert_eq!(r.eval(&Rat::from(2), &Rat::from(1)).unwrap(), q);
}
