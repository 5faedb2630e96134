use proptest::prelude::*;
use weiljet::infinitesimal::InfObject;
use weiljet::jets::{
    check_composition, check_plus_compatibility, check_psi, check_psi_chi_route, check_restriction_square,
    check_second, check_second_tangential, check_structure_squares, check_third, check_third_tangential, compose_jets,
    project_second, psi, Approach, JetCandidate, SectionJet, TowerClass,
};
use weiljet::par::{self, Exec};
use weiljet::poly::{int, parse_poly_with, Monomial, Polynomial, Rat};
use weiljet::prolong::CoordSpace;

/// One-variable section with Taylor coefficients `cs` at 0.
fn section(order: usize, cs: &[Rat]) -> SectionJet {
    let t = Polynomial::from_terms(1, cs.iter().enumerate().map(|(k, c)| (Monomial::var_pow(0, k as u32), c.clone())));
    SectionJet::new(order, vec![], vec![Polynomial::from_int(0, 0)], vec![t]).unwrap()
}

fn candidate(n: usize, fiber: i64, row: Vec<Polynomial>) -> JetCandidate {
    JetCandidate::new(
        Approach::Second(n),
        CoordSpace::bundle(1, 1),
        vec![],
        vec![Polynomial::from_int(0, 0)],
        vec![Polynomial::from_int(0, fiber)],
        vec![row],
    )
    .unwrap()
}

fn passes(j: &JetCandidate) -> bool {
    check_second(j).unwrap().all_passed() && check_second_tangential(j).unwrap().all_passed()
}

/// Every D^1 candidate with body `c0 + c1 g + c2 g^2` that passes is the
/// jet of the section with slope `c1`, and those all pass.
#[test]
fn order_one_completeness() {
    let cs = [-1i64, 0, 1, 2];
    for c0 in cs {
        for c1 in cs {
            for c2 in cs {
                let g = Polynomial::var(1, 0);
                let body = &(&Polynomial::from_int(1, c0) + &g.scale(&int(c1))) + &g.pow(2).scale(&int(c2));
                let j = candidate(1, 5, vec![body]);
                let holo = section(1, &[int(5), int(c1)]).second(1).unwrap();
                assert_eq!(passes(&j), j.same_map(&holo), "c = ({c0}, {c1}, {c2})");
                assert_eq!(passes(&j), c0 == 0 && c2 == 0);
            }
        }
    }
}

/// A small lattice of D^2 bodies: the ones passing every condition are
/// exactly the jets of `s(h) = a h + b h^2`.
#[test]
fn order_two_completeness() {
    let mut cases = Vec::new();
    for a in 0..3 {
        for a2 in 0..2 {
            for b in 0..3 {
                for b2 in 0..2 {
                    for c in 0..3 {
                        for d in 0..3 {
                            for f in 0..2 {
                                cases.push([a, a2, b, b2, c, d, f]);
                            }
                        }
                    }
                }
            }
        }
    }
    let results = par::map(Exec::Auto, &cases, |&[a, a2, b, b2, c, d, f]| {
        let names = ["g1_10", "g1_01", "g1_11"].map(String::from);
        let p = |s: String| parse_poly_with(&s, &names).unwrap();
        let j = candidate(
            2,
            0,
            vec![
                p(format!("{a}*g1_10+{a2}*g1_01")),
                p(format!("{b2}*g1_10+{b}*g1_01")),
                p(format!("{c}*g1_11+{d}*g1_10*g1_01+{f}*g1_10")),
            ],
        );
        let ok = passes(&j);
        let expected = a2 == 0 && b2 == 0 && f == 0 && a == b && c == a;
        let holo = section(2, &[int(0), int(a), Rat::new(d.into(), 2.into())]).second(2).unwrap();
        (ok == expected && ok == j.same_map(&holo), [a, a2, b, b2, c, d, f])
    });
    let bad: Vec<_> = results.into_iter().filter(|(ok, _)| !ok).map(|(_, c)| c).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

fn taylor(m: usize, n: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=n, m), -3i64..=3, 1i64..=2), 0..5).prop_map(move |terms| {
        Polynomial::from_terms(
            m,
            terms
                .into_iter()
                .filter(|(e, _, _)| e.iter().sum::<u32>() <= n)
                .map(|(e, a, b)| (Monomial::from_exponents(&e), Rat::new(a.into(), b.into()))),
        )
    })
}

fn concrete_section() -> impl Strategy<Value = SectionJet> {
    (1usize..=2, 1usize..=2, 1usize..=2).prop_flat_map(|(m, e, n)| {
        (prop::collection::vec(-2i64..=2, m), prop::collection::vec(taylor(m, n as u32), e)).prop_map(
            move |(base, tay)| {
                SectionJet::new(n, vec![], base.into_iter().map(|b| Polynomial::from_int(0, b)).collect(), tay).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sections_pass_everything(s in concrete_section()) {
        let n = s.order();
        let second = s.second(n).unwrap();
        let third = s.third(n as u32).unwrap();
        for r in [
            check_second(&second), check_second_tangential(&second),
            check_third(&third), check_third_tangential(&third),
            check_psi(&second), check_structure_squares(&second),
        ] {
            let r = r.unwrap();
            prop_assert!(r.all_passed(), "{:?}", r.failed_names());
        }
        prop_assert!(psi(&second).unwrap().same_map(&third));
        let tower = s.first(n).unwrap();
        prop_assert_eq!(tower.classify().unwrap(), TowerClass::Holonomic);
        prop_assert!(tower.phi(n).unwrap().same_map(&second));
        prop_assert!(project_second(&second).unwrap().same_map(&s.truncate(n - 1).second(n - 1).unwrap()));
    }

    #[test]
    fn composite_of_sections(lower_t in taylor(1, 2), upper_t in taylor(2, 2), x in -2i64..=2) {
        let lower = SectionJet::new(2, vec![], vec![Polynomial::from_int(0, x)], vec![lower_t]).unwrap();
        let y = lower.fiber_point()[0].clone();
        let upper = SectionJet::new(2, vec![], vec![Polynomial::from_int(0, x), y], vec![upper_t]).unwrap();
        let c = compose_jets(&upper.second(2).unwrap(), &lower.second(2).unwrap()).unwrap();
        prop_assert!(c.same_map(&lower.then(&upper).unwrap().second(2).unwrap()));
        let r = check_composition(&upper.second(2).unwrap(), &lower.second(2).unwrap()).unwrap();
        prop_assert!(r.all_passed());
        let r = check_composition(&upper.third(2).unwrap(), &lower.third(2).unwrap()).unwrap();
        prop_assert!(r.all_passed());
    }
}

fn symbolic(m: usize, n: usize) -> SectionJet {
    SectionJet::symbolic(m, 1, n, &(0..m).map(|i| int(i as i64)).collect::<Vec<_>>()).unwrap()
}

#[test]
fn plus_compatibility_over_the_fat_square() {
    let j = symbolic(1, 3).second(3).unwrap();
    let obj: InfObject = "D{3}_2".parse().unwrap();
    let r = check_plus_compatibility(&j, &obj).unwrap();
    assert!(r.all_passed(), "{:?}", r.failed_names());
}

#[test]
fn chi_route_at_order_three() {
    let j = symbolic(1, 3).second(3).unwrap();
    let r = check_psi_chi_route(&j).unwrap();
    assert_eq!(r.len(), 2);
    assert!(r.all_passed(), "{:?}", r.failed_names());
}

#[test]
fn restriction_square_for_two_base_coordinates() {
    let j = symbolic(2, 2).third(2).unwrap();
    assert!(check_restriction_square(&j).unwrap().all_passed());
}

#[test]
fn symbolic_third_jets_pass() {
    for n in 1..=3 {
        let t = symbolic(1, n).third(n as u32).unwrap();
        assert!(check_third(&t).unwrap().all_passed());
        assert!(check_third_tangential(&t).unwrap().all_passed());
    }
}

#[test]
fn asymmetric_body_is_caught_by_psi() {
    // Over D^3 the three mixed second-order coefficients must agree.
    let j = symbolic(1, 3).second(3).unwrap();
    let names = j.input_names();
    let idx = j.algebra().index_of(&Monomial::from_exponents(&[1, 1, 0])).unwrap();
    let g = Polynomial::var(j.nvars(), names.iter().position(|s| s == "g1_100").unwrap());
    let bad = j.perturbed(0, idx, &g).unwrap();
    assert!(psi(&bad).is_err());
    assert!(!check_second_tangential(&bad).unwrap().all_passed());
}
