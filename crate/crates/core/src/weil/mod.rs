//! Weil algebras presented as quotients of polynomial rings by monomial
//! ideals, their elements, homomorphisms and tensor products.

mod element;
mod hom;
pub mod json;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

pub use element::WeilElement;
pub use hom::WeilHom;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialIdeal, Polynomial};

/// `Q[X1..Xm] / I` with `I` a monomial ideal containing a pure power of
/// every variable. The basis is the set of standard monomials (those outside
/// `I`) in graded-lex order, so the unit comes first.
#[derive(Clone, Debug)]
pub struct WeilAlgebra {
    nvars: usize,
    ideal: MonomialIdeal,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl PartialEq for WeilAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.ideal == other.ideal
    }
}

impl Eq for WeilAlgebra {}

impl WeilAlgebra {
    pub fn new(nvars: usize, ideal: MonomialIdeal) -> Result<Arc<WeilAlgebra>> {
        if ideal.var_bound() > nvars {
            return Err(Error::VarCount(nvars, ideal.var_bound()));
        }
        if ideal.contains(&Monomial::one()) {
            return Err(Error::Unsupported("the unit ideal gives the zero ring".into()));
        }
        if let Some(v) = (0..nvars).find(|&v| ideal.pure_power(v).is_none()) {
            return Err(Error::InfiniteDimensional(v + 1));
        }
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut basis = Vec::new();
        let mut frontier = Vec::new();
        if !ideal.contains(&Monomial::one()) {
            seen.insert(Monomial::one());
            frontier.push(Monomial::one());
        }
        while let Some(m) = frontier.pop() {
            for v in 0..nvars {
                let next = m.mul(&Monomial::var(v));
                if !ideal.contains(&next) && seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
            basis.push(m);
        }
        basis.sort();
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Arc::new(WeilAlgebra { nvars, ideal, basis, index }))
    }

    /// The ground field, with no variables.
    pub fn ground() -> Arc<WeilAlgebra> {
        WeilAlgebra::new(0, MonomialIdeal::zero()).expect("ground field")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of the product of two basis monomials, or `None` if it vanishes.
    pub fn product_index(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&self.basis[i].mul(&self.basis[j]))
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        p.normal_form(&self.ideal)
    }

    /// `W1 ⊗ W2`: variables of `w2` are shifted past those of `w1`.
    pub fn tensor(w1: &WeilAlgebra, w2: &WeilAlgebra) -> Arc<WeilAlgebra> {
        let ideal = w1.ideal.union(&w2.ideal.shift(w1.nvars));
        WeilAlgebra::new(w1.nvars + w2.nvars, ideal).expect("tensor of Weil algebras is Weil")
    }
}

impl fmt::Display for WeilAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.ideal.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "Q[{} vars]/({})", self.nvars, gens.join(", "))
    }
}

/// Shorthand for `WeilAlgebra::tensor`.
pub fn tensor(w1: &WeilAlgebra, w2: &WeilAlgebra) -> Arc<WeilAlgebra> {
    WeilAlgebra::tensor(w1, w2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pure(n: usize, k: u32) -> Arc<WeilAlgebra> {
        WeilAlgebra::new(n, MonomialIdeal::new((0..n).map(|v| Monomial::var_pow(v, k)))).unwrap()
    }

    #[test]
    fn build_examples() {
        let d = pure(1, 2);
        assert_eq!(d.basis(), &[Monomial::one(), Monomial::var(0)]);
        let d2 = pure(1, 3);
        assert_eq!(d2.dim(), 3);
        let mut gens: Vec<Monomial> = (0..3).map(|v| Monomial::var_pow(v, 2)).collect();
        gens.push(Monomial::from_exponents(&[1, 1, 1]));
        let d32 = WeilAlgebra::new(3, MonomialIdeal::new(gens)).unwrap();
        // independent count: exponent vectors in {0,1}^3 other than (1,1,1)
        let oracle = (0..8u32).filter(|b| *b != 7).count();
        assert_eq!(d32.dim(), oracle);
        assert_eq!(d32.basis()[0], Monomial::one());
    }

    #[test]
    fn infinite_dimensional_rejected() {
        let i = MonomialIdeal::new(vec![Monomial::var_pow(0, 2)]);
        assert_eq!(WeilAlgebra::new(2, i).unwrap_err(), Error::InfiniteDimensional(2));
    }

    #[test]
    fn tensor_dims() {
        let a = pure(1, 3);
        let b = pure(1, 2);
        let t = tensor(&a, &b);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.ideal().generators(), &[Monomial::var_pow(1, 2), Monomial::var_pow(0, 3)]);
        assert_eq!(*tensor(&a, &WeilAlgebra::ground()), *a);
    }
}
