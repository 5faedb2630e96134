use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::InfObject;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::weil::{WeilElement, WeilHom};

/// `d^e1 + d^e2 + ...` for `d` in `D_n`, every coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplePolynomial {
    n: u32,
    exponents: BTreeSet<u32>,
}

impl SimplePolynomial {
    pub fn new(n: u32, exponents: impl IntoIterator<Item = u32>) -> Result<Self> {
        let exponents: BTreeSet<u32> = exponents.into_iter().collect();
        if exponents.is_empty() {
            return Err(Error::Precondition("a simple polynomial needs at least one term".into()));
        }
        if let Some(&e) = exponents.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::IndexOutOfRange { index: e as usize, max: n as usize });
        }
        Ok(SimplePolynomial { n, exponents })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn exponents(&self) -> &BTreeSet<u32> {
        &self.exponents
    }

    pub fn polynomial(&self) -> Polynomial {
        let terms = self.exponents.iter().map(|&e| (Monomial::var_pow(0, e), crate::poly::int(1)));
        Polynomial::from_terms(1, terms)
    }

    /// The element of the dual algebra of `D_n`.
    pub fn element(&self) -> WeilElement {
        let alg = InfObject::Power(self.n).algebra().expect("D_n is finite");
        WeilElement::from_polynomial(alg, &self.polynomial()).expect("one variable")
    }

    /// Largest `k` with `rho^k != 0`.
    pub fn dim(&self) -> u32 {
        let rho = self.element();
        let mut acc = rho.clone();
        let mut k = 1;
        loop {
            let next = acc.mul(&rho).expect("same algebra");
            if next.is_zero() {
                return k;
            }
            acc = next;
            k += 1;
        }
    }

    /// Dual of `rho: D_n -> D_dim`, i.e. `X -> rho(X)`.
    pub fn hom(&self) -> Result<WeilHom> {
        let source = InfObject::Power(self.dim()).algebra()?;
        let target = InfObject::Power(self.n).algebra()?;
        WeilHom::new(source, Arc::clone(&target), vec![self.polynomial()])
    }
}

/// Every simple polynomial on `D_n`, ordered by exponent bitmask.
pub fn all_simple_polynomials(n: u32) -> Vec<SimplePolynomial> {
    (1u64..(1 << n))
        .map(|bits| {
            let exps = (1..=n).filter(|e| bits & (1 << (e - 1)) != 0);
            SimplePolynomial::new(n, exps).expect("nonempty, in range")
        })
        .collect()
}

impl fmt::Display for SimplePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.exponents.iter().map(|&e| if e == 1 { "d".to_string() } else { format!("d^{e}") }).collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(n: u32, e: &[u32]) -> u32 {
        SimplePolynomial::new(n, e.iter().copied()).unwrap().dim()
    }

    #[test]
    fn dims_in_d3() {
        assert_eq!(dim(3, &[1]), 3);
        assert_eq!(dim(3, &[1, 2]), 3);
        assert_eq!(dim(3, &[1, 3]), 3);
        assert_eq!(dim(3, &[2]), 1);
        assert_eq!(dim(3, &[3]), 1);
        assert_eq!(dim(3, &[2, 3]), 1);
        assert_eq!(dim(1, &[1]), 1);
    }

    #[test]
    fn hom_is_well_defined() {
        for rho in all_simple_polynomials(4) {
            rho.hom().unwrap();
        }
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(SimplePolynomial::new(3, []).is_err());
        assert!(SimplePolynomial::new(3, [4]).is_err());
        assert!(SimplePolynomial::new(3, [0]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(SimplePolynomial::new(3, [3, 1]).unwrap().to_string(), "d+d^3");
    }
}
