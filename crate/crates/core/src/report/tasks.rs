use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{timed_claim, ClaimRecord, ParamRange, Report, RunConfig, Status, Task};
use crate::error::{Error, Result};
use crate::exact::{poly_gcd, ParamPoly, Rat};
use crate::residue::sums::{
    gtilde_closed, h_p, k_generalized_closed, proportionality_constant, r2_closed, reflect, twisted_f_closed,
};
use crate::residue::{catalog, eval_residue, k_generalized_sum, triple_sum_gp, triple_sum_gtilde, twisted_f};
use crate::residue::{twisted_r1_r2, ResidueExpr};
use crate::wz::ratio::factored_shift;
use crate::wz::recurrence::{annihilates, first_order_ratio, proportionality, striplet_recurrence};
use crate::wz::recurrence::triplet_linear_recurrence;
use crate::wz::term::{
    striplet_sum, striplet_sum_closed, striplet_term, triplet_linear_closed, triplet_linear_sum, triplet_linear_term,
    twisted_sum, twisted_term,
};
use crate::wz::zeilberger::{minimal_telescoper, striplet_boundary, striplet_certificate, EXTENDED_BOUNDS};
use crate::wz::{gosper, verify_certificate, zeilberger_order1, Certificate, HyperTerm};
use crate::zhu::poisson::{super_presentation, triplet_presentation};
use crate::zhu::spectral::c0_g;
use crate::zhu::{assemble_algebra, build_catalog, inequality_report, poisson_dim, AlgebraReport, Family};

type Point = (Vec<ClaimRecord>, Vec<Value>);

/// Largest `p` whose triple sum is cross-checked against the series route.
const RESIDUE_CROSS_CHECK_MAX: u32 = 4;
const BOUNDARY_MAX: u32 = 8;

fn eq_claim(id: &str, params: &[(&str, u32)], expected: impl ToString, computed: impl ToString) -> Result<ClaimRecord> {
    let (e, c) = (expected.to_string(), computed.to_string());
    timed_claim(id, params, || {
        let ok = e == c;
        Ok((e, c, Status::from_bool(ok)))
    })
}

fn sort_point(mut p: Point) -> Point {
    p.0.sort_by(|a, b| a.params.values().cmp(b.params.values()).then_with(|| a.id.cmp(&b.id)));
    p
}

pub(super) fn execute(config: &RunConfig, range: Option<ParamRange>) -> Result<Point> {
    let values: Vec<u32> = range.map(|r| r.values().collect()).unwrap_or_default();
    let points: Vec<Point> = match config.task {
        Task::ZhuC0 => vec![zhu_c0()?],
        Task::Wz => {
            let mut pts = vec![wz_global()?];
            pts.extend(sweep(&values, wz_point)?);
            pts
        }
        Task::KIdentity => {
            let k = config.k;
            if let Some(k) = k {
                if values.iter().all(|&p| k > p) {
                    return Err(Error::Param(format!("k = {k} exceeds every p in the range")));
                }
            }
            sweep(&values, |p| k_identity(p, k))?
        }
        Task::TripletCt => sweep(&values, triplet_ct)?,
        Task::StripletCt => sweep(&values, striplet_ct)?,
        Task::TwistedCt => sweep(&values, twisted_ct)?,
        Task::ZhuTriplet => sweep(&values, zhu_triplet)?,
        Task::ZhuStriplet => sweep(&values, zhu_striplet)?,
        Task::ZhuTwisted => sweep(&values, zhu_twisted)?,
        Task::PoissonTriplet => sweep(&values, poisson_triplet)?,
        Task::PoissonStriplet => sweep(&values, poisson_striplet)?,
    };
    let mut claims = Vec::new();
    let mut artifacts = Vec::new();
    for (c, a) in points {
        claims.extend(c);
        artifacts.extend(a);
    }
    Ok((claims, artifacts))
}

fn sweep(values: &[u32], f: impl Fn(u32) -> Result<Point> + Sync) -> Result<Vec<Point>> {
    values.par_iter().map(|&v| f(v).map(sort_point)).collect()
}

fn triplet_ct(p: u32) -> Result<Point> {
    let params = [("p", p)];
    let g = triple_sum_gp(p);
    let mut claims = Vec::new();
    claims.push(timed_claim("thm-identity-triplet", &params, || {
        let h = h_p(p);
        let mut ok = g == h;
        let mut computed = g.to_string();
        if (2..=RESIDUE_CROSS_CHECK_MAX).contains(&p) {
            let r = eval_residue(&catalog::triplet(p).to_expr())?;
            ok &= r == g;
            computed += if r == g { " [series route agrees]" } else { " [series route differs]" };
        }
        Ok((h.to_string(), computed, Status::from_bool(ok)))
    })?);
    claims.push(timed_claim("steps-skew-triplet", &params, || {
        let mirrored = reflect(&g, &Rat::from(2 * p as i64 - 2));
        let sign = Rat::sign_pow(p as i64);
        let found = if g == mirrored {
            "G_p(t) = G_p(2p-2-t)"
        } else if g == -&mirrored {
            "G_p(t) = -G_p(2p-2-t)"
        } else {
            "no sign relation"
        };
        Ok((
            format!("G_p(t) = {}G_p(2p-2-t)", if sign.is_one() { "" } else { "-" }),
            found.to_string(),
            Status::from_bool(g == mirrored.scale(&sign)),
        ))
    })?);
    claims.push(timed_claim("steps-roots-triplet", &params, || {
        let lo = -(p as i64);
        let hi = 3 * p as i64 - 2;
        let zeros = (lo..=hi).filter(|&t| g.eval(&Rat::from(t)).is_zero()).count();
        let total = (hi - lo + 1) as usize;
        Ok((
            format!("zero at all {total} integers in [{lo}, {hi}]"),
            format!("zero at {zeros} of {total}"),
            Status::from_bool(zeros == total),
        ))
    })?);
    Ok((claims, Vec::new()))
}

fn striplet_ct(m: u32) -> Result<Point> {
    let c = eq_claim("thm-identity-striplet", &[("m", m)], gtilde_closed(m), triple_sum_gtilde(m))?;
    Ok((vec![c], Vec::new()))
}

fn twisted_ct(m: u32) -> Result<Point> {
    let params = [("m", m)];
    let (r1, r2) = twisted_r1_r2(m);
    let claims = vec![
        eq_claim("thm-identity-tstriplet", &params, twisted_f_closed(m), twisted_f(m))?,
        eq_claim("tw-nova-i", &params, ParamPoly::zero(crate::exact::Var::T), &r1)?,
        timed_claim("tw-nova-ii", &params, || {
            let expected = r2_closed(m);
            let status = match proportionality_constant(&r2, &expected) {
                Some(c) if !c.is_zero() => Status::ProportionalPass(c),
                _ => Status::Fail,
            };
            Ok((format!("proportional to {expected}"), r2.to_string(), status))
        })?,
    ];
    Ok((claims, Vec::new()))
}

fn k_identity(p: u32, k: Option<u32>) -> Result<Point> {
    let ks: Vec<u32> = match k {
        Some(k) if k <= p => vec![k],
        Some(_) => Vec::new(),
        None => (1..=p).collect(),
    };
    let claims = ks
        .into_iter()
        .map(|k| {
            eq_claim(
                "remark-k-identity",
                &[("p", p), ("k", k)],
                k_generalized_closed(p, k),
                k_generalized_sum(p, k),
            )
        })
        .collect::<Result<_>>()?;
    Ok((claims, Vec::new()))
}

fn constant_of(r: &crate::exact::RatFunc<ParamPoly>) -> Option<Rat> {
    let r = r.reduced();
    (r.num().degree() == Some(0) && r.den().degree() == Some(0)).then(|| r.num().coeff(0) / r.den().coeff(0))
}

fn recurrence_claim(id: &str, term: &HyperTerm, expected: crate::wz::Recurrence) -> Result<ClaimRecord> {
    timed_claim(id, &[], || {
        let found = zeilberger_order1(term)?;
        let (computed, status) = match &found {
            None => ("no order-1 telescoper".to_string(), Status::Fail),
            Some(z) => {
                let c = proportionality(&z.recurrence.coeffs, &expected.coeffs)
                    .as_ref()
                    .and_then(constant_of);
                let status = match c {
                    Some(c) if c.is_one() => Status::Pass,
                    Some(c) => Status::ProportionalPass(c),
                    None => Status::Fail,
                };
                (z.recurrence.display(), status)
            }
        };
        Ok((format!("proportional to {}", expected.display()), computed, status))
    })
}

fn wz_global() -> Result<Point> {
    let mut claims = vec![
        timed_claim("appendix-zeil1", &[], || {
            let v = verify_certificate(&striplet_term(), &striplet_certificate())?;
            let computed = if v.pass { "telescopes".to_string() } else { format!("discrepancy {}", v.discrepancy) };
            Ok(("telescopes".into(), computed, Status::from_bool(v.pass)))
        })?,
        recurrence_claim("appendix-rec-striplet", &striplet_term(), striplet_recurrence())?,
        recurrence_claim("appendix-rec-triplet", &triplet_linear_term(), triplet_linear_recurrence())?,
    ];
    // TSum is compared against the recurrence of Sum.
    let mut tsum = recurrence_claim("appendix-rec-tsum", &twisted_term(), striplet_recurrence())?;
    if !tsum.status.passed() {
        if let Some(z) = minimal_telescoper(&twisted_term(), 2, EXTENDED_BOUNDS)? {
            let rho = first_order_ratio(&striplet_recurrence())?;
            let verified = verify_certificate(&twisted_term(), &z.certificate)?.pass;
            tsum.computed = format!(
                "{}; minimal telescoper has order {} (certificate {}, {} the ratio of Sum)",
                tsum.computed,
                z.recurrence.order(),
                if verified { "verified" } else { "rejected" },
                if annihilates(&z.recurrence, &rho) { "annihilates" } else { "does not annihilate" },
            );
        }
    }
    claims.push(tsum);
    Ok(sort_point((claims, Vec::new())))
}

fn wz_point(v: u32) -> Result<Point> {
    let m = v as i64;
    let mut claims = vec![
        eq_claim("eq-sum-striplet", &[("m", v)], striplet_sum_closed(v), striplet_sum(m))?,
        eq_claim("eq-tsum", &[("m", v)], -striplet_sum(m) / Rat::from(2), twisted_sum(m))?,
    ];
    if v <= BOUNDARY_MAX {
        claims.push(timed_claim("appendix-zeil2", &[("m", v)], || {
            let (lhs, rhs) = striplet_boundary(m);
            let computed = rhs.as_ref().map_or("pole".to_string(), |r| r.to_string());
            let ok = rhs.as_ref() == Some(&lhs);
            Ok((lhs.to_string(), computed, Status::from_bool(ok)))
        })?);
    }
    if v >= 2 {
        claims.push(eq_claim("eq-sum-triplet", &[("p", v)], triplet_linear_closed(v), triplet_linear_sum(m))?);
    }
    Ok((claims, Vec::new()))
}

fn algebra(family: Family) -> Result<(AlgebraReport, Value)> {
    let r = assemble_algebra(family)?;
    let v = serde_json::to_value(&r)?;
    Ok((r, v))
}

fn blocks_of(r: &AlgebraReport) -> String {
    format!("({}, {}, {})", r.blocks.minus, r.blocks.zero, r.blocks.plus)
}

fn roots_with_multiplicity(r: &AlgebraReport, k: usize) -> usize {
    r.center.roots.iter().filter(|x| x.multiplicity == k).count()
}

fn zhu_triplet(p: u32) -> Result<Point> {
    let (r, v) = algebra(Family::Triplet { p })?;
    let params = [("p", p)];
    let pu = p as usize;
    let claims = vec![
        eq_claim("thm-dim-zhu-triplet", &params, 6 * pu - 1, r.total)?,
        eq_claim("thm-jezgra", &params, 4 * pu - 1, r.blocks.zero)?,
        eq_claim("zhu-side-triplet", &params, format!("({pu}, {pu})"), format!("({}, {})", r.blocks.minus, r.blocks.plus))?,
        eq_claim("cor-log-triplet", &params, pu - 1, roots_with_multiplicity(&r, 2))?,
    ];
    Ok((claims, vec![v]))
}

fn zhu_striplet(m: u32) -> Result<Point> {
    let (r, v) = algebra(Family::Super { m })?;
    let params = [("m", m)];
    let mu = m as usize;
    let d = &r.decomposition;
    let claims = vec![
        eq_claim("thm-dim-zhu-striplet", &params, 6 * mu + 1, r.total)?,
        eq_claim("thm-jezgra-n1", &params, 4 * mu + 1, r.blocks.zero)?,
        eq_claim(
            "thm-decomp-striplet",
            &params,
            format!("({mu}, {mu}, 1)"),
            format!("({}, {}, {})", d.matrix_blocks, d.two_dim_ideals, d.one_dim_ideals),
        )?,
        eq_claim("cor-log-striplet", &params, mu, roots_with_multiplicity(&r, 2))?,
    ];
    Ok((claims, vec![v]))
}

fn zhu_twisted(m: u32) -> Result<Point> {
    let (r, v) = algebra(Family::TwistedSuper { m })?;
    let params = [("m", m)];
    let mu = m as usize;
    let claims = vec![
        eq_claim("thm-dim-twisted", &params, 12 * mu + 8, r.total)?,
        eq_claim("prop-ker-ramond", &params, 8 * mu + 4, r.blocks.zero)?,
        eq_claim("twisted-center", &params, 6 * mu + 2, r.center.poly_degree)?,
    ];
    Ok((claims, vec![v]))
}

fn zhu_c0() -> Result<Point> {
    let (r, v) = algebra(Family::C0)?;
    let full = build_catalog(Family::C0)?.full;
    let triple: Vec<&Rat> = r.center.roots.iter().filter(|x| x.multiplicity == 3).map(|x| &x.value).collect();
    let claims = vec![
        eq_claim("c0-blocks", &[], "(6, 26, 6)", blocks_of(&r))?,
        timed_claim("c0-coprime", &[], || {
            let g = poly_gcd(&c0_g(), &full)?;
            Ok(("1".into(), g.to_string(), Status::from_bool(g.degree() == Some(0))))
        })?,
        eq_claim("c0-center", &[], 20, r.center.poly_degree)?,
        eq_claim("c0-dim", &[], 38, r.total)?,
        eq_claim(
            "c0-nilpotent-rank",
            &[],
            "rank 3, unique triple root at 0",
            if r.max_nilpotent_rank == 3 && triple.len() == 1 && triple[0].is_zero() {
                "rank 3, unique triple root at 0".to_string()
            } else {
                format!("rank {}, triple roots {:?}", r.max_nilpotent_rank, triple)
            },
        )?,
    ];
    Ok((claims, vec![v]))
}

fn poisson_triplet(p: u32) -> Result<Point> {
    let pr = poisson_dim(&triplet_presentation(p)?)?;
    let ineq = inequality_report(Family::Triplet { p })?;
    let params = [("p", p)];
    let claims = vec![
        eq_claim("poisson-dim-triplet", &params, 6 * p as usize - 1, pr.total)?,
        timed_claim("poisson-eq-triplet", &params, || {
            let expected = 6 * p as usize - 1;
            let ok = ineq.relation == "=" && ineq.dim_a == expected;
            Ok((
                format!("dim A = dim P = {expected}"),
                format!("dim A = {} {} dim P = {}", ineq.dim_a, ineq.relation, pr.total),
                Status::from_bool(ok),
            ))
        })?,
    ];
    Ok((claims, vec![json!({ "p": p, "poisson": pr, "comparison": ineq })]))
}

fn poisson_striplet(m: u32) -> Result<Point> {
    let pr = poisson_dim(&super_presentation(m)?)?;
    let ineq = inequality_report(Family::Super { m })?;
    let params = [("m", m)];
    let mu = m as usize;
    let claims = vec![
        eq_claim("poisson-dim-striplet", &params, 12 * mu + 8, pr.total)?,
        eq_claim("poisson-even-striplet", &params, 6 * mu + 4, pr.even)?,
        timed_claim("cor-strict-inequality", &params, || {
            let computed = format!("{} {} {}", ineq.dim_a, ineq.relation, pr.even);
            Ok((
                format!("dim A < dim P0 = {}", 6 * mu + 4),
                computed,
                Status::from_bool(ineq.relation == "<"),
            ))
        })?,
    ];
    Ok((claims, vec![json!({ "m": m, "poisson": pr, "comparison": ineq })]))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Iterated residue of the expression in `path`.
pub fn ct_eval(path: &Path) -> Result<Report> {
    let expr = ResidueExpr::from_json(&read(path)?)?;
    let r = eval_residue(&expr)?;
    let mut report = Report::new("ct-eval", serde_json::Map::new());
    report.artifacts.push(json!({
        "residue": r.to_string(),
        "coefficients": r.coeffs(),
    }));
    Ok(report)
}

/// Gosper's algorithm on the term in `path`, summing over `i`.
pub fn wz_gosper(path: &Path) -> Result<Report> {
    let term = HyperTerm::from_json(&read(path)?)?;
    let ratio = factored_shift(&term, 0, 1)?;
    let y = gosper(&ratio);
    let mut report = Report::new("wz-gosper", serde_json::Map::new());
    report.artifacts.push(json!({
        "ratio": ratio.to_string(),
        "summable": y.is_some(),
        "certificate": y.map(|y| y.to_string()),
    }));
    Ok(report)
}

/// Order-one creative telescoping on the term in `path`.
pub fn wz_zeilberger(path: &Path) -> Result<Report> {
    let term = HyperTerm::from_json(&read(path)?)?;
    let z = zeilberger_order1(&term)?;
    let mut report = Report::new("wz-zeilberger", serde_json::Map::new());
    let artifact = match z {
        None => json!({ "found": false }),
        Some(z) => {
            let cert: Value = serde_json::from_str(&z.certificate.to_json())?;
            json!({
                "found": true,
                "recurrence": z.recurrence.display(),
                "certificate": cert,
            })
        }
    };
    report.artifacts.push(artifact);
    Ok(report)
}

/// Checks the certificate in `cert_path` against the term in `term_path`.
pub fn wz_verify_cert(term_path: &Path, cert_path: &Path) -> Result<Report> {
    let term = HyperTerm::from_json(&read(term_path)?)?;
    let cert = Certificate::from_json(&read(cert_path)?)?;
    let mut report = Report::new("wz-verify-cert", serde_json::Map::new());
    let claim = timed_claim("certificate", &[], || {
        let v = verify_certificate(&term, &cert)?;
        let computed = if v.pass { "telescopes".to_string() } else { format!("discrepancy {}", v.discrepancy) };
        Ok(("telescopes".into(), computed, Status::from_bool(v.pass)))
    })?;
    report.push_claims([claim]);
    Ok(report)
}
