//! JSON forms: algebra `{vars, generators}`, element `{algebra, coeffs}`,
//! hom `{source, target, images}`. Monomials and polynomials use the text
//! format with default variable names.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{WeilAlgebra, WeilElement, WeilHom};
use crate::error::{Error, Result};
use crate::poly::{parse_poly, parse_rat, text, Monomial, MonomialIdeal, Polynomial, Rat};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct AlgebraJson {
    pub vars: usize,
    pub generators: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ElementJson {
    pub algebra: AlgebraJson,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct HomJson {
    pub source: AlgebraJson,
    pub target: AlgebraJson,
    pub images: Vec<String>,
}

pub fn monomial_text(m: &Monomial, nvars: usize) -> String {
    if m.is_one() {
        "1".into()
    } else {
        Polynomial::monomial(nvars, m.clone()).to_string()
    }
}

pub fn parse_monomial(s: &str, nvars: usize) -> Result<Monomial> {
    let p = parse_poly(s, nvars)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if *c == Rat::from_integer(1.into()) => Ok(m.clone()),
        _ => Err(Error::Schema(format!("not a monomial: {s}"))),
    }
}

impl AlgebraJson {
    pub fn from_algebra(a: &WeilAlgebra) -> Self {
        AlgebraJson {
            vars: a.nvars(),
            generators: a.ideal().generators().iter().map(|g| monomial_text(g, a.nvars())).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Arc<WeilAlgebra>> {
        let gens = self.generators.iter().map(|g| parse_monomial(g, self.vars)).collect::<Result<Vec<_>>>()?;
        WeilAlgebra::new(self.vars, MonomialIdeal::new(gens))
    }
}

impl ElementJson {
    pub fn from_element(e: &WeilElement) -> Self {
        let a = e.algebra();
        let coeffs = a
            .basis()
            .iter()
            .zip(e.coeffs())
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(m, c)| (monomial_text(m, a.nvars()), text::format_rat(c)))
            .collect();
        ElementJson { algebra: AlgebraJson::from_algebra(a), coeffs }
    }

    pub fn to_element(&self) -> Result<WeilElement> {
        let alg = self.algebra.to_algebra()?;
        let mut e = WeilElement::zero(alg.clone(), &Rat::from_integer(0.into()));
        for (m, c) in &self.coeffs {
            let m = parse_monomial(m, alg.nvars())?;
            let i = alg.index_of(&m).ok_or_else(|| Error::Schema(format!("{m} is not a basis monomial")))?;
            e.set_coeff(i, parse_rat(c)?);
        }
        Ok(e)
    }
}

impl HomJson {
    pub fn from_hom(h: &WeilHom) -> Self {
        HomJson {
            source: AlgebraJson::from_algebra(h.source()),
            target: AlgebraJson::from_algebra(h.target()),
            images: h.images().iter().map(|p| p.to_string()).collect(),
        }
    }

    pub fn to_hom(&self) -> Result<WeilHom> {
        let source = self.source.to_algebra()?;
        let target = self.target.to_algebra()?;
        let images = self.images.iter().map(|s| parse_poly(s, target.nvars())).collect::<Result<Vec<_>>>()?;
        WeilHom::new(source, target, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn element_round_trip() {
        let alg =
            WeilAlgebra::new(2, MonomialIdeal::new(vec![Monomial::var_pow(0, 3), Monomial::var_pow(1, 2)])).unwrap();
        let e = WeilElement::from_polynomial(alg, &parse_poly("1/2-X1*X2+7*X1^2", 2).unwrap()).unwrap();
        let j = serde_json::to_string(&ElementJson::from_element(&e)).unwrap();
        let back: ElementJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_element().unwrap(), e);
    }

    #[test]
    fn hom_round_trip() {
        let d = WeilAlgebra::new(1, MonomialIdeal::new(vec![Monomial::var_pow(0, 2)])).unwrap();
        let d2 = WeilAlgebra::new(1, MonomialIdeal::new(vec![Monomial::var_pow(0, 3)])).unwrap();
        let h = WeilHom::new(d, d2, vec![parse_poly("X1^2", 1).unwrap()]).unwrap();
        let j = HomJson::from_hom(&h);
        assert_eq!(j.images, vec!["X1^2".to_string()]);
        assert_eq!(j.to_hom().unwrap(), h);
    }
}
