use std::fmt;
use std::sync::Arc;

use super::WeilAlgebra;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, Polynomial, Rat};

/// An element of a Weil algebra: one coefficient per basis monomial.
///
/// Coefficients are usually rationals; with `C = Polynomial` they carry
/// symbolic parameters and identities become polynomial identities.
#[derive(Clone, Debug, PartialEq)]
pub struct WeilElement<C: Coeff = Rat> {
    alg: Arc<WeilAlgebra>,
    coeffs: Vec<C>,
}

impl<C: Coeff> WeilElement<C> {
    pub fn from_coeffs(alg: Arc<WeilAlgebra>, coeffs: Vec<C>) -> Result<Self> {
        if coeffs.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for an algebra of dimension {}",
                coeffs.len(),
                alg.dim()
            )));
        }
        Ok(WeilElement { alg, coeffs })
    }

    /// The zero element, with `proto` fixing the coefficient ring.
    pub fn zero(alg: Arc<WeilAlgebra>, proto: &C) -> Self {
        let coeffs = vec![proto.zero_like(); alg.dim()];
        WeilElement { alg, coeffs }
    }

    /// `c` times the unit.
    pub fn constant(alg: Arc<WeilAlgebra>, c: C) -> Self {
        let mut e = Self::zero(alg, &c);
        e.coeffs[0] = c;
        e
    }

    pub fn algebra(&self) -> &Arc<WeilAlgebra> {
        &self.alg
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    /// Coefficient at a monomial; zero when it is not a basis monomial.
    pub fn coeff_at(&self, m: &Monomial) -> C {
        match self.alg.index_of(m) {
            Some(i) => self.coeffs[i].clone(),
            None => self.coeffs[0].zero_like(),
        }
    }

    pub fn set_coeff(&mut self, i: usize, c: C) {
        self.coeffs[i] = c;
    }

    /// Coefficient of the unit, i.e. the image under augmentation.
    pub fn unit_coeff(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.vanishes())
    }

    /// True when every non-unit coefficient vanishes.
    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.vanishes())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a.plus(b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a.minus(b)))
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        WeilElement {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.alg.clone(), &self.coeffs[0]);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.vanishes() {
                    continue;
                }
                if let Some(k) = self.alg.product_index(i, j) {
                    out.coeffs[k] = out.coeffs[k].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.alg.clone(), self.coeffs[0].one_like());
        for _ in 0..k {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map(|c| c.scale(r))
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn map(&self, f: impl Fn(&C) -> C) -> Self {
        WeilElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl WeilElement<Rat> {
    /// Reduces a polynomial in the algebra's variables into the basis.
    pub fn from_polynomial(alg: Arc<WeilAlgebra>, p: &Polynomial) -> Result<Self> {
        if p.nvars() != alg.nvars() {
            return Err(Error::VarCount(alg.nvars(), p.nvars()));
        }
        let mut coeffs = vec![Rat::from_integer(0.into()); alg.dim()];
        for (m, c) in p.terms() {
            if let Some(i) = alg.index_of(m) {
                coeffs[i] = c.clone();
            }
        }
        Ok(WeilElement { alg, coeffs })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.alg.nvars(), self.alg.basis().iter().cloned().zip(self.coeffs.iter().cloned()))
    }

    pub fn basis_element(alg: Arc<WeilAlgebra>, i: usize) -> Self {
        let mut e = Self::zero(alg, &Rat::from_integer(0.into()));
        e.coeffs[i] = Rat::from_integer(1.into());
        e
    }

    /// Embeds into polynomial coefficients over `nvars` parameters.
    pub fn to_symbolic(&self, nvars: usize) -> WeilElement<Polynomial> {
        WeilElement {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|c| Polynomial::constant(nvars, c.clone())).collect(),
        }
    }
}

impl fmt::Display for WeilElement<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialIdeal};

    fn alg(n: usize, gens: &[&[u32]]) -> Arc<WeilAlgebra> {
        WeilAlgebra::new(n, MonomialIdeal::new(gens.iter().map(|g| Monomial::from_exponents(g)))).unwrap()
    }

    fn el(a: &Arc<WeilAlgebra>, s: &str) -> WeilElement {
        WeilElement::from_polynomial(a.clone(), &parse_poly(s, a.nvars()).unwrap()).unwrap()
    }

    #[test]
    fn mul_examples() {
        let d2 = alg(1, &[&[3]]);
        let p = el(&d2, "1+X1");
        assert_eq!(p.mul(&p).unwrap(), el(&d2, "1+2*X1+X1^2"));
        let d = alg(1, &[&[2]]);
        let x = el(&d, "X1");
        assert!(x.mul(&x).unwrap().is_zero());
        let d32 = alg(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]);
        let prod = el(&d32, "X1+X2").mul(&el(&d32, "X1+X3")).unwrap();
        assert_eq!(prod, el(&d32, "X1*X2+X1*X3+X2*X3"));
        assert_eq!(x.mul(&p), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn augmentation_ideal_is_nilpotent() {
        let d32 = alg(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]);
        let n = el(&d32, "3*X1-X2+1/2*X2*X3+X1*X3");
        assert!(n.pow(d32.dim() as u32).is_zero());
    }
}
