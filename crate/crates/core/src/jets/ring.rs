//! Moving between Weil elements with polynomial coefficients and single
//! polynomials in `coefficient vars ++ algebra vars`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{MonomialIdeal, Polynomial};
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::weil::{WeilAlgebra, WeilElement};

/// `sum c_b X^b`, algebra variables placed after the `n` coefficient ones.
pub(crate) fn embed(e: &WeilElement<Polynomial>, n: usize) -> Polynomial {
    let alg = e.algebra();
    let total = n + alg.nvars();
    let mut out = Polynomial::zero(total);
    for (m, c) in alg.basis().iter().zip(e.coeffs()) {
        if c.is_zero() {
            continue;
        }
        out = &out + &c.extend(total).mul_monomial(&m.shift(n));
    }
    out
}

/// Inverse of [`embed`]; terms in the algebra's ideal are dropped.
pub(crate) fn extract(p: &Polynomial, n: usize, alg: &Arc<WeilAlgebra>) -> Result<WeilElement<Polynomial>> {
    if p.nvars() != n + alg.nvars() {
        return Err(Error::VarCount(n + alg.nvars(), p.nvars()));
    }
    let mut coeffs = vec![Polynomial::zero(n); alg.dim()];
    for (m, c) in p.terms() {
        let a = m.restrict(n, n + alg.nvars());
        if let Some(i) = alg.index_of(&a) {
            let t = Polynomial::term(n, m.restrict(0, n), c.clone());
            coeffs[i] = &coeffs[i] + &t;
        }
    }
    WeilElement::from_coeffs(alg.clone(), coeffs)
}

pub(crate) fn shifted_ideal(alg: &WeilAlgebra, n: usize) -> MonomialIdeal {
    alg.ideal().shift(n)
}

/// Every coefficient reduced modulo `ideal`.
pub(crate) fn reduce_point(p: &ProlongedPoint<Polynomial>, ideal: &MonomialIdeal) -> ProlongedPoint<Polynomial> {
    if ideal.is_zero() {
        return p.clone();
    }
    p.map_coeffs(|c| c.normal_form(ideal))
}

/// Same components, different split into base and fiber.
pub(crate) fn respace(p: &ProlongedPoint<Polynomial>, space: CoordSpace) -> Result<ProlongedPoint<Polynomial>> {
    ProlongedPoint::new(space, p.algebra().clone(), p.components().to_vec())
}

/// Number of coefficient variables of a symbolic point.
pub(crate) fn coeff_vars(p: &ProlongedPoint<Polynomial>) -> Option<usize> {
    p.components().first().map(|c| c.coeff(0).nvars())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinitesimal::InfObject;

    #[test]
    fn embed_extract_round_trip() {
        let alg = InfObject::Basic(2).algebra().unwrap();
        let g = ProlongedPoint::generic(CoordSpace::plain(1), alg.clone(), 0, 4).unwrap();
        let e = embed(g.component(0), 4);
        assert_eq!(e.nvars(), 6);
        assert_eq!(extract(&e, 4, &alg).unwrap(), *g.component(0));
    }
}
