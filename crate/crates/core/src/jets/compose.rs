//! Composition of jets along a tower of bundles `P -> E -> M`.

use super::project::{project_second, project_third};
use super::ring::respace;
use super::{Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::poly::MonomialIdeal;
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::report::Report;

/// `upper` lives over `R^(m+e) x R^q`, `lower` over `R^m x R^e`, at
/// compatible points and over the same parameters. The result lives over
/// `R^m x R^(e+q)`.
pub fn compose_jets(upper: &JetCandidate, lower: &JetCandidate) -> Result<JetCandidate> {
    if upper.approach() != lower.approach() {
        return Err(Error::Precondition(format!("{} over {}", upper.approach(), lower.approach())));
    }
    if upper.params() != lower.params() {
        return Err(Error::PointMismatch("jets are written over different parameters".into()));
    }
    let (m, e) = (lower.space().base, lower.space().fiber);
    let q = upper.space().fiber;
    if upper.space().base != m + e {
        return Err(Error::DimensionMismatch(format!(
            "upper base has {} coordinates, expected {}",
            upper.space().base,
            m + e
        )));
    }
    let mut expected = lower.base_point().to_vec();
    expected.extend_from_slice(lower.fiber_point());
    if upper.base_point() != expected.as_slice() {
        return Err(Error::PointMismatch("upper jet is not based at the lower jet's point".into()));
    }
    let mut fiber = lower.fiber_point().to_vec();
    fiber.extend_from_slice(upper.fiber_point());
    JetCandidate::derive(
        lower.approach().clone(),
        CoordSpace::bundle(m, e + q),
        lower.params().to_vec(),
        lower.base_point().to_vec(),
        fiber,
        |g| {
            let zero = MonomialIdeal::zero();
            let mid = lower.apply(g, &zero)?;
            let top = upper.apply(&respace(&mid, CoordSpace::plain(m + e))?, &zero)?;
            let mut comps = mid.fiber_part().components().to_vec();
            comps.extend_from_slice(top.fiber_part().components());
            let fiber = ProlongedPoint::new(CoordSpace::plain(e + q), g.algebra().clone(), comps)?;
            ProlongedPoint::pair(g, &fiber)
        },
    )
}

/// Projecting the composite equals composing the projections.
pub fn check_composition(upper: &JetCandidate, lower: &JetCandidate) -> Result<Report> {
    let composite = compose_jets(upper, lower)?;
    let mut report = Report::new();
    let project = match composite.approach() {
        Approach::Second(0) | Approach::Third(0) => {
            report.pass("order 0: point pairing");
            return Ok(report);
        }
        Approach::Second(_) => project_second,
        Approach::Third(_) => project_third,
        other => return Err(Error::Unsupported(format!("composition check for {other}"))),
    };
    let lhs = project(&composite)?;
    let rhs = compose_jets(&project(upper)?, &project(lower)?)?;
    report.record("projection of composite", lhs.body_difference(&rhs));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::SectionJet;
    use crate::poly::{int, parse_poly_with, Polynomial};

    #[test]
    fn composite_of_sections() {
        // Lower s(x) = x^2 at 1, upper u(x, y) = x y at (1, 1).
        let h = vec!["h".to_string()];
        let lower = SectionJet::new(
            2,
            vec![],
            vec![Polynomial::from_int(0, 1)],
            vec![parse_poly_with("1+2*h+h^2", &h).unwrap()],
        )
        .unwrap();
        let hk = vec!["h1".to_string(), "h2".to_string()];
        let upper = SectionJet::new(
            2,
            vec![],
            vec![Polynomial::from_int(0, 1), Polynomial::from_int(0, 1)],
            vec![parse_poly_with("1+h1+h2+h1*h2", &hk).unwrap()],
        )
        .unwrap();
        let both = lower.then(&upper).unwrap();
        let c = compose_jets(&upper.second(2).unwrap(), &lower.second(2).unwrap()).unwrap();
        assert_eq!(c.body_difference(&both.second(2).unwrap()), None);
        assert!(check_composition(&upper.second(2).unwrap(), &lower.second(2).unwrap()).unwrap().all_passed());
    }

    #[test]
    fn point_mismatch() {
        let lower = SectionJet::symbolic(1, 1, 1, &[int(0)]).unwrap().second(1).unwrap();
        let upper = SectionJet::symbolic(2, 1, 1, &[int(0), int(0)]).unwrap().second(1).unwrap();
        assert!(compose_jets(&upper, &lower).is_err());
    }
}
