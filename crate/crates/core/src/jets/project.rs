//! Projections to lower order: `d_(n+1) . nabla . s_(n+1)` over `D^n`, and
//! the equalizer solve over `D_n`.

use super::{point_difference, ring_names, Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::infinitesimal::InfObject;
use crate::limits::product_equalizer;
use crate::linalg;
use crate::poly::{Monomial, MonomialIdeal, Polynomial};
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::report::Report;
use crate::weil::{WeilElement, WeilHom};

fn second_order(j: &JetCandidate) -> Result<usize> {
    match j.approach() {
        Approach::Second(n) => Ok(*n),
        other => Err(Error::Precondition(format!("expected a second-approach candidate, got {other}"))),
    }
}

fn third_order(j: &JetCandidate) -> Result<u32> {
    match j.approach() {
        Approach::Third(n) => Ok(*n),
        other => Err(Error::Precondition(format!("expected a third-approach candidate, got {other}"))),
    }
}

/// `D^(n+1)` candidate to `D^n`: body of `d_(n+1) . nabla . s_(n+1)`.
pub fn project_second(j: &JetCandidate) -> Result<JetCandidate> {
    let n1 = second_order(j)?;
    if n1 == 0 {
        return Err(Error::Precondition("nothing below D^0".into()));
    }
    let n = n1 - 1;
    JetCandidate::derive(
        Approach::Second(n),
        j.space(),
        j.params().to_vec(),
        j.base_point().to_vec(),
        j.fiber_point().to_vec(),
        |g| j.apply(&g.s(n + 1)?, &MonomialIdeal::zero())?.d(n + 1),
    )
}

/// Iterated [`project_second`] down to `D^k`.
pub fn project_second_to(j: &JetCandidate, k: usize) -> Result<JetCandidate> {
    let n = second_order(j)?;
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let mut cur = j.clone();
    for _ in k..n {
        cur = project_second(&cur)?;
    }
    Ok(cur)
}

/// `D_(n+1)` candidate to `D_n`. The input `g(d1 d2)` with `d1` in
/// `D_(n+1)` and `d2` in `D_n` is fed to the candidate with coefficients in
/// the dual algebra of `D_n`; the output lies in the equalizer, and the
/// unique `g'` with `g'(d1 d2)` equal to it is found by a linear solve.
pub fn project_third(j: &JetCandidate) -> Result<JetCandidate> {
    let n1 = third_order(j)?;
    if n1 == 0 {
        return Err(Error::Precondition("nothing below D_0".into()));
    }
    let n = n1 - 1;
    let (_, cone) = product_equalizer(n)?;
    let leg = cone.legs[0].clone();
    let big = j.algebra().clone();
    JetCandidate::derive(
        Approach::Third(n),
        j.space(),
        j.params().to_vec(),
        j.base_point().to_vec(),
        j.fiber_point().to_vec(),
        |g| {
            let n0 = super::ring::coeff_vars(g).unwrap_or(j.params().len());
            let y = n0;
            let ring = n0 + 1;
            let ideal = MonomialIdeal::new([Monomial::var_pow(y, n + 1)]);
            // Coefficient of X^k becomes g_k Y^k; nothing at X^(n+1).
            let lifted = g
                .components()
                .iter()
                .map(|c| {
                    let mut coeffs: Vec<Polynomial> = (0..=n as usize)
                        .map(|k| c.coeff(k).extend(ring).mul_monomial(&Monomial::var_pow(y, k as u32)))
                        .collect();
                    coeffs.push(Polynomial::zero(ring));
                    WeilElement::from_coeffs(big.clone(), coeffs)
                })
                .collect::<Result<Vec<_>>>()?;
            let lifted = ProlongedPoint::new(CoordSpace::plain(g.space().dim()), big.clone(), lifted)?;
            let out = j.apply(&lifted, &ideal)?;
            let target = leg.target().clone();
            let matrix = leg.matrix();
            let fiber = out
                .fiber_part()
                .components()
                .iter()
                .map(|c| {
                    // Right-hand side over the basis of W(D_(n+1)) (x) W(D_n).
                    let rhs = target
                        .basis()
                        .iter()
                        .map(|m| {
                            let a = m.exponent(0) as usize;
                            let b = m.exponent(1);
                            let split = c.coeff(a).split_by_var(y);
                            split.get(&b).map(|q| q.shrink(n0)).unwrap_or_else(|| Ok(Polynomial::zero(n0)))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let sol = linalg::solve(&matrix, leg.source().dim(), &rhs)?;
                    WeilElement::from_coeffs(leg.source().clone(), sol)
                })
                .collect::<Result<Vec<_>>>()?;
            ProlongedPoint::new(CoordSpace::plain(j.space().fiber), leg.source().clone(), fiber)
        },
    )
}

/// Iterated [`project_third`] down to `D_k`.
pub fn project_third_to(j: &JetCandidate, k: u32) -> Result<JetCandidate> {
    let n = third_order(j)?;
    if k > n {
        return Err(Error::IndexOutOfRange { index: k as usize, max: n as usize });
    }
    let mut cur = j.clone();
    for _ in k..n {
        cur = project_third(&cur)?;
    }
    Ok(cur)
}

/// Every projection of a `D_n` candidate, indexed by level `0..=n`.
pub(crate) fn project_third_levels(j: &JetCandidate) -> Result<Vec<JetCandidate>> {
    let n = third_order(j)?;
    let mut levels = vec![j.clone()];
    for _ in 0..n {
        let next = project_third(levels.last().unwrap())?;
        levels.push(next);
    }
    levels.reverse();
    Ok(levels)
}

/// The restriction square over `D_(n+1)`: truncating the output to `D_n`
/// equals the projected candidate on the truncated input.
pub fn check_restriction_square(j: &JetCandidate) -> Result<Report> {
    let n1 = third_order(j)?;
    let mut report = Report::new();
    if n1 == 0 {
        report.pass("D_0: nothing to project");
        return Ok(report);
    }
    let proj = project_third(j)?;
    let r = WeilHom::new(j.algebra().clone(), InfObject::Power(n1 - 1).algebra()?, vec![Polynomial::var(1, 0)])?;
    let g = j.generic_input();
    let zero = MonomialIdeal::zero();
    let lhs = j.apply(&g, &zero)?.apply(&r)?;
    let rhs = proj.apply(&g.apply(&r)?, &zero)?;
    report.record(format!("D_{n1} restriction square"), point_difference(&lhs, &rhs, &j.input_names()));
    Ok(report)
}

/// The `s_i` and `d_i` squares between a `D^(n+1)` candidate and its
/// projection.
pub fn check_structure_squares(j: &JetCandidate) -> Result<Report> {
    let n1 = second_order(j)?;
    let mut report = Report::new();
    if n1 == 0 {
        report.pass("D^0: nothing to project");
        return Ok(report);
    }
    let proj = project_second(j)?;
    let zero = MonomialIdeal::zero();
    let low = proj.generic_input();
    let high = j.generic_input();
    let out_low = proj.apply(&low, &zero)?;
    let out_high = j.apply(&high, &zero)?;
    for i in 1..=n1 {
        let lhs = j.apply(&low.s(i)?, &zero)?;
        let rhs = out_low.s(i)?;
        report.record(format!("s_{i} square"), point_difference(&lhs, &rhs, &proj.input_names()));
        let lhs = out_high.d(i)?;
        let rhs = proj.apply(&high.d(i)?, &zero)?;
        let names = ring_names(&j.input_names(), j.nvars(), &[]);
        report.record(format!("d_{i} square"), point_difference(&lhs, &rhs, &names));
    }
    Ok(report)
}
