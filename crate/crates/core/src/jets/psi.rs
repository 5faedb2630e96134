//! From `D^n` candidates to `D_n` candidates through the sum map
//! `D^n -> D_n`.

use num_traits::One;

use super::check::{check_third, check_third_tangential};
use super::induced::induced_map;
use super::project::{project_second, project_second_to, project_third};
use super::{point_difference, Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::infinitesimal::{InfMap, InfObject};
use crate::poly::{format_poly, Monomial, MonomialIdeal, Polynomial, Rat};
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::report::Report;
use crate::weil::WeilElement;

/// Largest `n` for `psi` and `phi`.
pub const TRANSMOGRIFY_CAP: usize = 3;

fn factorial(k: usize) -> Rat {
    (1..=k).fold(Rat::one(), |acc, i| acc * Rat::from_integer(i.into()))
}

/// `g' (d)` is read off `nabla(g . +)`: the coefficient at `d^k` is the
/// common coefficient at every square-free monomial of degree `k`,
/// divided by `k!`.
pub fn psi(j: &JetCandidate) -> Result<JetCandidate> {
    let Approach::Second(n) = *j.approach() else {
        return Err(Error::Precondition(format!("expected a second-approach candidate, got {}", j.approach())));
    };
    if n > TRANSMOGRIFY_CAP {
        return Err(Error::CapExceeded { what: "transmogrification order".into(), value: n, cap: TRANSMOGRIFY_CAP });
    }
    let cube = InfObject::Basic(n);
    let low = InfObject::Power(n as u32).algebra()?;
    JetCandidate::derive(
        Approach::Third(n as u32),
        j.space(),
        j.params().to_vec(),
        j.base_point().to_vec(),
        j.fiber_point().to_vec(),
        |g| {
            let names = j.input_names();
            let delta = j.apply(&g.plus_precompose(&cube)?, &MonomialIdeal::zero())?;
            let alg = delta.algebra().clone();
            let fiber = delta
                .fiber_part()
                .components()
                .iter()
                .enumerate()
                .map(|(f, c)| {
                    let mut coeffs = Vec::with_capacity(n + 1);
                    for k in 0..=n {
                        let mut common: Option<Polynomial> = None;
                        for (b, m) in alg.basis().iter().enumerate() {
                            if m.degree() as usize != k {
                                continue;
                            }
                            let q = c.coeff(b);
                            match &common {
                                None => common = Some(q.clone()),
                                Some(first) if first != q => {
                                    return Err(Error::Inconsistent(format!(
                                        "fiber {} is not symmetric in degree {k}: {} vs {}",
                                        f + 1,
                                        format_poly(first, &ring_or(&names, q.nvars())),
                                        format_poly(q, &ring_or(&names, q.nvars()))
                                    )));
                                }
                                _ => {}
                            }
                        }
                        let q = common.expect("every degree up to n occurs");
                        coeffs.push(q.scale(&(Rat::one() / factorial(k))));
                    }
                    let mut e = WeilElement::zero(low.clone(), &coeffs[0]);
                    for (k, q) in coeffs.into_iter().enumerate() {
                        let idx = low.index_of(&Monomial::var_pow(0, k as u32)).expect("d^k is a basis monomial");
                        e.set_coeff(idx, q);
                    }
                    Ok(e)
                })
                .collect::<Result<Vec<_>>>()?;
            ProlongedPoint::new(CoordSpace::plain(j.space().fiber), low.clone(), fiber)
        },
    )
}

fn ring_or(names: &[String], n: usize) -> Vec<String> {
    super::ring_names(names, n, &[])
}

/// `psi(nabla)` is pseudotangential and tangential, and `psi` commutes with
/// the projections.
pub fn check_psi(j: &JetCandidate) -> Result<Report> {
    let mut report = Report::new();
    let p = psi(j)?;
    report.absorb("psi: ", check_third(&p)?);
    report.absorb("psi: ", check_third_tangential(&p)?);
    if j.approach().order() >= 1 {
        let lhs = project_third(&p)?;
        let rhs = psi(&project_second(j)?)?;
        report.record("psi projection square", lhs.body_difference(&rhs));
    }
    Ok(report)
}

/// `nabla^obj(g . +) = psi(nabla_dim)(g) . +` for a generic `g` over
/// `D_dim`, `dim` the dimension of `obj`.
pub fn check_plus_compatibility(j: &JetCandidate, obj: &InfObject) -> Result<Report> {
    let dim = obj.dimension()?;
    let induced = induced_map(j, obj)?;
    let low = psi(&project_second_to(j, dim)?)?;
    let g = low.generic_input();
    let zero = MonomialIdeal::zero();
    let lhs = induced.apply(&g.plus_precompose(obj)?, &zero)?;
    let rhs = low.apply(&g, &zero)?.plus_precompose(obj)?;
    let mut report = Report::new();
    report.record(format!("plus compatibility over {obj}"), point_difference(&lhs, &rhs, &low.input_names()));
    Ok(report)
}

/// For `n = 3` and `rho = d^2`: `psi(nabla)(g . rho) . +` computed directly,
/// through `D(6)` by `(d1 d2, d1 d3, d2 d3, d1 d2, d1 d3, d2 d3)`, and as
/// `psi(nabla_1)(g) . rho . +`.
pub fn check_psi_chi_route(j: &JetCandidate) -> Result<Report> {
    if *j.approach() != Approach::Second(3) {
        return Err(Error::Precondition(format!("expected a D^3 candidate, got {}", j.approach())));
    }
    let cube = InfObject::Basic(3);
    let wide = InfObject::FirstOrder(6);
    let x = |v| Polynomial::var(3, v);
    let pairs = [&x(0) * &x(1), &x(0) * &x(2), &x(1) * &x(2)];
    let comps: Vec<Polynomial> = pairs.iter().chain(pairs.iter()).cloned().collect();
    let chi = InfMap::polynomial(cube.clone(), wide.clone(), comps)?;
    let rho = InfMap::polynomial(InfObject::Power(3), InfObject::Power(1), vec![Polynomial::var(1, 0).pow(2)])?;

    let top = psi(j)?;
    let one = psi(&project_second_to(j, 1)?)?;
    let g = one.generic_input();
    let zero = MonomialIdeal::zero();
    let direct = top.apply(&g.apply(rho.hom())?, &zero)?.plus_precompose(&cube)?;
    let induced = induced_map(j, &wide)?;
    let via_wide = induced.apply(&g.plus_precompose(&wide)?, &zero)?.apply(chi.hom())?;
    let lowered = one.apply(&g, &zero)?.apply(rho.hom())?.plus_precompose(&cube)?;
    let names = one.input_names();
    let mut report = Report::new();
    report.record("rho = d^2: direct vs through D(6)", point_difference(&direct, &via_wide, &names));
    report.record("rho = d^2: direct vs lowered", point_difference(&direct, &lowered, &names));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::SectionJet;
    use crate::poly::{int, parse_poly_with};

    #[test]
    fn psi_is_identity_at_one() {
        let s = SectionJet::symbolic(1, 1, 1, &[int(0)]).unwrap();
        let p = psi(&s.second(1).unwrap()).unwrap();
        assert_eq!(p.body(), s.third(1).unwrap().body());
    }

    #[test]
    fn psi_second_order_taylor() {
        // s(x + h) = s0 + s1 h + s2 h^2 at x = 0; the D_2 image of
        // g1 d + g2 d^2 is s1 g1 d + (s1 g2 + s2 g1^2) d^2.
        let s = SectionJet::symbolic(1, 1, 2, &[int(0)]).unwrap();
        let p = psi(&s.second(2).unwrap()).unwrap();
        let names = p.input_names();
        assert_eq!(names, ["s1_0", "s1_1", "s1_2", "g1_1", "g1_2"]);
        assert_eq!(p.body()[0][0], parse_poly_with("s1_1*g1_1", &names).unwrap());
        assert_eq!(p.body()[0][1], parse_poly_with("s1_1*g1_2+s1_2*g1_1^2", &names).unwrap());
        assert!(p.same_map(&s.third(2).unwrap()));
    }

    #[test]
    fn asymmetric_candidate_is_rejected() {
        let s = SectionJet::symbolic(1, 1, 2, &[int(0)]).unwrap();
        let j = s.second(2).unwrap();
        let names = j.input_names();
        let bad = j.perturbed(0, 1, &parse_poly_with("g1_10", &names).unwrap()).unwrap();
        assert!(matches!(psi(&bad), Err(Error::Inconsistent(_))));
    }
}
