//! JSON form of a prolonged point. Coefficients are polynomial texts in the
//! parameters declared up front; with no parameters they are rationals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CoordSpace, ProlongedPoint};
use crate::error::{Error, Result};
use crate::poly::{format_poly, parse_poly_with, Polynomial};
use crate::weil::json::{monomial_text, parse_monomial, AlgebraJson};
use crate::weil::WeilElement;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct PointJson {
    #[serde(default)]
    pub params: Vec<String>,
    pub base: usize,
    #[serde(default)]
    pub fiber: usize,
    pub algebra: AlgebraJson,
    pub components: Vec<BTreeMap<String, String>>,
}

impl PointJson {
    pub fn from_point(p: &ProlongedPoint<Polynomial>, params: &[String]) -> Self {
        let alg = p.algebra();
        let components = p
            .components()
            .iter()
            .map(|c| {
                alg.basis()
                    .iter()
                    .zip(c.coeffs())
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(m, q)| (monomial_text(m, alg.nvars()), format_poly(q, params)))
                    .collect()
            })
            .collect();
        PointJson {
            params: params.to_vec(),
            base: p.space().base,
            fiber: p.space().fiber,
            algebra: AlgebraJson::from_algebra(alg),
            components,
        }
    }

    pub fn to_point(&self) -> Result<ProlongedPoint<Polynomial>> {
        let alg = self.algebra.to_algebra()?;
        let np = self.params.len();
        let components = self
            .components
            .iter()
            .map(|map| {
                let mut e = WeilElement::zero(alg.clone(), &Polynomial::zero(np));
                for (m, c) in map {
                    let m = parse_monomial(m, alg.nvars())?;
                    let i = alg.index_of(&m).ok_or_else(|| Error::Schema(format!("{m} is not a basis monomial")))?;
                    e.set_coeff(i, parse_poly_with(c, &self.params)?);
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        ProlongedPoint::new(CoordSpace::bundle(self.base, self.fiber), alg, components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinitesimal::InfObject;

    #[test]
    fn round_trip() {
        let alg = InfObject::Basic(2).algebra().unwrap();
        let space = CoordSpace::bundle(1, 1);
        let names = ProlongedPoint::generic_names(space, &alg);
        let g = ProlongedPoint::generic(space, alg, 0, names.len()).unwrap();
        let j = PointJson::from_point(&g, &names);
        let text = serde_json::to_string(&j).unwrap();
        let back: PointJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_point().unwrap(), g);
    }
}
