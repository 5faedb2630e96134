//! Condition checkers. Each condition is compared on the generic input,
//! with fresh variables for the scalars, so a pass is a proof for all
//! inputs at this point.

use super::project::{project_second, project_third_levels};
use super::ring::reduce_point;
use super::{point_difference, ring_names, Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::infinitesimal::all_simple_polynomials;
use crate::poly::{Monomial, MonomialIdeal, Polynomial};
use crate::report::Report;
use crate::weil::WeilHom;

/// Largest `n` accepted by the standalone second and third checkers.
pub const CHECK_CAP: usize = 4;

/// Largest exponent of `X_i` over the basis.
fn max_exponent(j: &JetCandidate, i: usize) -> u32 {
    j.algebra().basis().iter().map(|m| m.exponent(i - 1)).max().unwrap_or(0)
}

/// The pseudotangential conditions for any approach: projection, scaling
/// along each axis, the same with a nilpotent scalar, and invariance under
/// adjacent transpositions when the object is symmetric.
pub fn check_pseudo(j: &JetCandidate) -> Result<Report> {
    let mut report = Report::new();
    let zero = MonomialIdeal::zero();
    let names = j.input_names();
    let (n, p) = (j.nvars(), j.params().len());
    let g = j.generic_input();
    let out = j.apply(&g, &zero)?;
    report.record("projection", point_difference(&out.project(), &g, &names));

    let k = j.algebra().nvars();
    let gi = j.generic_input_in(n + 1, p);
    let s = Polynomial::var(n + 1, n);
    let plain = j.apply(&gi, &zero)?;
    let alpha_names = ring_names(&names, n + 1, &["alpha"]);
    for i in 1..=k {
        let lhs = j.apply(&gi.scale_axis(&s, i)?, &zero)?;
        let rhs = plain.scale_axis(&s, i)?;
        report.record(format!("scaling X{i}"), point_difference(&lhs, &rhs, &alpha_names));
    }

    // A single nilpotent `e` with `e^(order+1) = 0` stands for every `D_m`:
    // both sides have degree at most `order` in `e`, so agreement here is
    // agreement as polynomials in `e`, hence for every `m`.
    let e_names = ring_names(&names, n + 1, &["e"]);
    for i in 1..=k {
        let order = (j.approach().order() as u32).max(j.input_degree() * max_exponent(j, i)).max(1);
        let ideal = MonomialIdeal::new([Monomial::var_pow(n, order + 1)]);
        let lhs = j.apply(&reduce_point(&gi.scale_axis(&s, i)?, &ideal), &ideal)?;
        let rhs = reduce_point(&plain.scale_axis(&s, i)?, &ideal);
        report.record(
            format!("infinitesimal scaling X{i} (e^{} = 0)", order + 1),
            point_difference(&lhs, &rhs, &e_names),
        );
    }

    if k >= 2 && j.approach().object().is_symmetric() {
        let alg = j.algebra().clone();
        for i in 0..k - 1 {
            let images = (0..k)
                .map(|v| {
                    Polynomial::var(
                        k,
                        if v == i {
                            i + 1
                        } else if v == i + 1 {
                            i
                        } else {
                            v
                        },
                    )
                })
                .collect();
            let h = WeilHom::new(alg.clone(), alg.clone(), images)?;
            let lhs = j.apply(&g.apply(&h)?, &zero)?;
            let rhs = out.apply(&h)?;
            report.record(format!("symmetry X{} <-> X{}", i + 1, i + 2), point_difference(&lhs, &rhs, &names));
        }
    }
    Ok(report)
}

fn capped(n: usize) -> Result<()> {
    if n > CHECK_CAP {
        return Err(Error::CapExceeded { what: "jet order".into(), value: n, cap: CHECK_CAP });
    }
    Ok(())
}

/// Pseudotangential conditions over `D^n`.
pub fn check_second(j: &JetCandidate) -> Result<Report> {
    match j.approach() {
        Approach::Second(n) => capped(*n)?,
        other => return Err(Error::Precondition(format!("expected a second-approach candidate, got {other}"))),
    }
    check_pseudo(j)
}

/// Pseudotangential conditions over `D_n`.
pub fn check_third(j: &JetCandidate) -> Result<Report> {
    match j.approach() {
        Approach::Third(n) => capped(*n as usize)?,
        other => return Err(Error::Precondition(format!("expected a third-approach candidate, got {other}"))),
    }
    check_pseudo(j)
}

/// Dual of `(d_1..d_(n+1)) -> (d_1, .., d_(n-1), d_n d_(n+1))`.
pub fn product_condition_hom(n: usize) -> Result<WeilHom> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    let src = crate::infinitesimal::InfObject::Basic(n).algebra()?;
    let tgt = crate::infinitesimal::InfObject::Basic(n + 1).algebra()?;
    let mut images: Vec<Polynomial> = (0..n - 1).map(|v| Polynomial::var(n + 1, v)).collect();
    images.push(&Polynomial::var(n + 1, n - 1) * &Polynomial::var(n + 1, n));
    WeilHom::new(src, tgt, images)
}

/// Tangentiality over `D^n`: at every level `k >= 2` down from `n`, the
/// product condition for the level-`k` projection, plus the
/// pseudotangential conditions of every lower projection.
pub fn check_second_tangential(j: &JetCandidate) -> Result<Report> {
    let Approach::Second(n) = *j.approach() else {
        return Err(Error::Precondition(format!("expected a second-approach candidate, got {}", j.approach())));
    };
    capped(n)?;
    let mut report = Report::new();
    if n <= 1 {
        report.pass(format!("D^{n}: tangential = pseudotangential"));
        return Ok(report);
    }
    let zero = MonomialIdeal::zero();
    let mut cur = j.clone();
    for k in (2..=n).rev() {
        let proj = project_second(&cur)?;
        let mu = product_condition_hom(k - 1)?;
        let g = proj.generic_input();
        let lhs = cur.apply(&g.apply(&mu)?, &zero)?;
        let rhs = proj.apply(&g, &zero)?.apply(&mu)?;
        report.record(format!("D^{k} product"), point_difference(&lhs, &rhs, &proj.input_names()));
        report.absorb(&format!("D^{}: ", k - 1), check_pseudo(&proj)?);
        cur = proj;
    }
    Ok(report)
}

/// Tangentiality over `D_n`: for every level `k >= 2` and every simple
/// polynomial `rho` on `D_k`, `nabla_k(g . rho) = nabla_l(g) . rho` with
/// `l = dim rho`; plus the pseudotangential conditions of the projections.
pub fn check_third_tangential(j: &JetCandidate) -> Result<Report> {
    let Approach::Third(n) = *j.approach() else {
        return Err(Error::Precondition(format!("expected a third-approach candidate, got {}", j.approach())));
    };
    capped(n as usize)?;
    let mut report = Report::new();
    if n <= 1 {
        report.pass(format!("D_{n}: tangential = pseudotangential"));
        return Ok(report);
    }
    let zero = MonomialIdeal::zero();
    let levels = project_third_levels(j)?;
    for k in (2..=n).rev() {
        for rho in all_simple_polynomials(k) {
            let l = rho.dim();
            let h = rho.hom()?;
            let low = &levels[l as usize];
            let g = low.generic_input();
            let lhs = levels[k as usize].apply(&g.apply(&h)?, &zero)?;
            let rhs = low.apply(&g, &zero)?.apply(&h)?;
            report.record(format!("D_{k} simple {rho}"), point_difference(&lhs, &rhs, &low.input_names()));
        }
        report.absorb(&format!("D_{}: ", k - 1), check_pseudo(&levels[k as usize - 1])?);
    }
    Ok(report)
}
