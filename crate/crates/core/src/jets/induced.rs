//! Extending a `D^n` candidate to any simplicial object of dimension at
//! most `n`, by gluing its projections along the standard covering.

use super::project::project_second;
use super::{point_difference, Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::infinitesimal::{InfMap, InfObject};
use crate::limits::standard_qcr;
use crate::linalg;
use crate::poly::{MonomialIdeal, Polynomial};
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::report::Report;
use crate::weil::WeilElement;

/// The map over `obj` whose restriction to every covering piece `D^k` is
/// the level-`k` projection of `j`.
pub fn induced_map(j: &JetCandidate, obj: &InfObject) -> Result<JetCandidate> {
    let Approach::Second(n) = *j.approach() else {
        return Err(Error::Precondition(format!("expected a second-approach candidate, got {}", j.approach())));
    };
    let dim = obj.dimension()?;
    if dim > n {
        return Err(Error::Precondition(format!("{obj} has dimension {dim} > {n}")));
    }
    let (rep, verdict) = standard_qcr(obj)?;
    if !verdict.is_limit {
        return Err(Error::Inconsistent(format!("the covering of {obj} is not a quasi-colimit")));
    }
    let mut levels = vec![j.clone()];
    for _ in 0..n {
        let next = project_second(levels.last().unwrap())?;
        levels.push(next);
    }
    levels.reverse();
    let alg = obj.algebra()?;
    let mut stacked: Vec<Vec<_>> = Vec::new();
    for piece in &rep.pieces {
        stacked.extend(piece.map.hom().matrix());
    }
    JetCandidate::derive(
        Approach::Induced(obj.clone()),
        j.space(),
        j.params().to_vec(),
        j.base_point().to_vec(),
        j.fiber_point().to_vec(),
        |g| {
            let zero = MonomialIdeal::zero();
            let outs = rep
                .pieces
                .iter()
                .map(|piece| levels[piece.coords.len()].apply(&g.apply(piece.map.hom())?, &zero))
                .collect::<Result<Vec<_>>>()?;
            let fiber = (0..j.space().fiber)
                .map(|f| {
                    let rhs: Vec<Polynomial> =
                        outs.iter().flat_map(|o| o.fiber_part().component(f).coeffs().to_vec()).collect();
                    let sol = linalg::solve(&stacked, alg.dim(), &rhs)?;
                    WeilElement::from_coeffs(alg.clone(), sol)
                })
                .collect::<Result<Vec<_>>>()?;
            ProlongedPoint::new(CoordSpace::plain(j.space().fiber), alg.clone(), fiber)
        },
    )
}

/// One map of a naturality chain.
#[derive(Clone, Debug)]
pub struct NaturalityStep {
    pub name: String,
    pub map: InfMap,
}

fn step(name: &str, source: InfObject, target: InfObject, comps: &[&[usize]]) -> Result<NaturalityStep> {
    let k = source.degree();
    let components = comps
        .iter()
        .map(|vars| vars.iter().fold(Polynomial::one(k), |acc, &v| &acc * &Polynomial::var(k, v - 1)))
        .collect();
    Ok(NaturalityStep { name: name.into(), map: InfMap::monomial(source, target, components)? })
}

/// `D^3 -> D{4;(1,2)} -> D{5;(1,2),(3,4)} -> D{6;(1,2),(3,4),(5,6)} -> D(3)`,
/// composing to `(d1 d2, d1 d3, d2 d3)`.
pub fn chi_chain() -> Result<Vec<NaturalityStep>> {
    let a = InfObject::Basic(3);
    let b = InfObject::simplicial(4, vec![vec![1, 2]])?;
    let c = InfObject::simplicial(5, vec![vec![1, 2], vec![3, 4]])?;
    let d = InfObject::simplicial(6, vec![vec![1, 2], vec![3, 4], vec![5, 6]])?;
    let e = InfObject::FirstOrder(3);
    Ok(vec![
        step("chi1_1", a, b.clone(), &[&[1], &[1], &[2], &[3]])?,
        step("chi1_2", b, c.clone(), &[&[1], &[2], &[3], &[3], &[4]])?,
        step("chi1_3", c, d.clone(), &[&[1], &[2], &[3], &[4], &[5], &[5]])?,
        step("chi2", d, e, &[&[1, 3], &[2, 5], &[4, 6]])?,
    ])
}

/// For each step `chi: A -> B`, `nabla^A . W(chi) = W(chi) . nabla^B` on a
/// generic point over `B`.
pub fn check_naturality(j: &JetCandidate, steps: &[NaturalityStep]) -> Result<Report> {
    let zero = MonomialIdeal::zero();
    let mut report = Report::new();
    for s in steps {
        let (src, tgt) = (s.map.source(), s.map.target());
        let over_src = induced_map(j, src)?;
        let over_tgt = induced_map(j, tgt)?;
        let g = over_tgt.generic_input();
        let lhs = over_src.apply(&g.apply(s.map.hom())?, &zero)?;
        let rhs = over_tgt.apply(&g, &zero)?.apply(s.map.hom())?;
        report.record(format!("{}: {src} -> {tgt}", s.name), point_difference(&lhs, &rhs, &over_tgt.input_names()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::SectionJet;
    use crate::poly::int;

    fn holonomic(n: usize) -> JetCandidate {
        SectionJet::symbolic(1, 1, n, &[int(0)]).unwrap().second(n).unwrap()
    }

    #[test]
    fn over_the_cube_itself() {
        let j = holonomic(2);
        let i = induced_map(&j, &InfObject::Basic(2)).unwrap();
        assert!(i.same_map(&j));
    }

    #[test]
    fn chain_composes_to_pair_products() {
        let steps = chi_chain().unwrap();
        let mut h = steps.last().unwrap().map.hom().clone();
        for s in steps.iter().rev().skip(1) {
            h = h.then(s.map.hom()).unwrap();
        }
        let x = |v| Polynomial::var(3, v);
        assert_eq!(h.images(), &[&x(0) * &x(1), &x(0) * &x(2), &x(1) * &x(2)]);
    }

    #[test]
    fn faces_of_the_fat_square() {
        // Over D{3}_2 the restriction to each coordinate plane is the D^2
        // projection.
        let j = holonomic(3);
        let obj: InfObject = "D{3}_2".parse().unwrap();
        let i = induced_map(&j, &obj).unwrap();
        let low = project_second(&j).unwrap();
        let g = i.generic_input();
        let zero = MonomialIdeal::zero();
        let out = i.apply(&g, &zero).unwrap();
        for coords in [[2, 3], [1, 3], [1, 2]] {
            let inj = InfMap::injection(InfObject::Basic(2), obj.clone(), &coords).unwrap();
            let lhs = out.apply(inj.hom()).unwrap();
            let rhs = low.apply(&g.apply(inj.hom()).unwrap(), &zero).unwrap();
            assert_eq!(point_difference(&lhs, &rhs, &i.input_names()), None, "{coords:?}");
        }
    }

    #[test]
    fn dimension_too_large() {
        assert!(induced_map(&holonomic(1), &InfObject::Basic(2)).is_err());
    }
}
