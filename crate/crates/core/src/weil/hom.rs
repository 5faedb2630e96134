use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use super::{WeilAlgebra, WeilElement};
use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial, Rat};

/// A unital, augmentation-preserving algebra map `source -> target`, stored
/// as the images of the source variables. The induced linear map on bases is
/// computed once on first use.
#[derive(Debug)]
pub struct WeilHom {
    source: Arc<WeilAlgebra>,
    target: Arc<WeilAlgebra>,
    images: Vec<Polynomial>,
    basis_images: OnceLock<Vec<WeilElement>>,
}

impl Clone for WeilHom {
    fn clone(&self) -> Self {
        WeilHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.clone(),
            basis_images: self.basis_images.clone(),
        }
    }
}

impl PartialEq for WeilHom {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.images == other.images
    }
}

impl WeilHom {
    /// Checks arity, augmentation and well-definedness, then builds the hom.
    pub fn new(source: Arc<WeilAlgebra>, target: Arc<WeilAlgebra>, images: Vec<Polynomial>) -> Result<WeilHom> {
        if images.len() != source.nvars() {
            return Err(Error::Arity { expected: source.nvars(), got: images.len() });
        }
        if let Some(p) = images.iter().find(|p| p.nvars() != target.nvars()) {
            return Err(Error::VarCount(target.nvars(), p.nvars()));
        }
        let images: Vec<Polynomial> = images.iter().map(|p| target.reduce(p)).collect();
        if let Some(j) = images.iter().position(|p| !p.constant_term().is_zero()) {
            return Err(Error::NonAugmented(j + 1));
        }
        for g in source.ideal().generators() {
            let img = Polynomial::monomial(source.nvars(), g.clone()).substitute_into(
                target.nvars(),
                &images,
                target.ideal(),
            )?;
            if !img.is_zero() {
                return Err(Error::IllDefined(g.to_string()));
            }
        }
        Ok(WeilHom { source, target, images, basis_images: OnceLock::new() })
    }

    pub fn identity(alg: Arc<WeilAlgebra>) -> WeilHom {
        let n = alg.nvars();
        let images = (0..n).map(|v| Polynomial::var(n, v)).collect();
        WeilHom::new(alg.clone(), alg, images).expect("identity is well-defined")
    }

    pub fn source(&self) -> &Arc<WeilAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<WeilAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of each source basis monomial, in target coordinates.
    pub fn basis_images(&self) -> &[WeilElement] {
        self.basis_images.get_or_init(|| {
            self.source
                .basis()
                .iter()
                .map(|m| {
                    let p = Polynomial::monomial(self.source.nvars(), m.clone())
                        .substitute_into(self.target.nvars(), &self.images, self.target.ideal())
                        .expect("arity checked at construction");
                    WeilElement::from_polynomial(self.target.clone(), &p).expect("target variables")
                })
                .collect()
        })
    }

    /// Matrix of the linear map: `target.dim()` rows, `source.dim()` columns.
    pub fn matrix(&self) -> Vec<Vec<Rat>> {
        let imgs = self.basis_images();
        (0..self.target.dim()).map(|r| imgs.iter().map(|e| e.coeff(r).clone()).collect()).collect()
    }

    pub fn apply<C: Coeff>(&self, a: &WeilElement<C>) -> Result<WeilElement<C>> {
        if !(Arc::ptr_eq(a.algebra(), &self.source) || **a.algebra() == *self.source) {
            return Err(Error::AlgebraMismatch);
        }
        let proto = a.coeff(0);
        let mut out = WeilElement::zero(self.target.clone(), proto);
        let mut acc: Vec<C> = out.coeffs().to_vec();
        for (b, img) in self.basis_images().iter().enumerate() {
            let c = a.coeff(b);
            if c.vanishes() {
                continue;
            }
            for (t, r) in img.coeffs().iter().enumerate() {
                if !r.is_zero() {
                    acc[t] = acc[t].plus(&c.scale(r));
                }
            }
        }
        for (t, c) in acc.into_iter().enumerate() {
            out.set_coeff(t, c);
        }
        Ok(out)
    }

    /// `then ∘ self`: first `self`, then `then`.
    pub fn then(&self, then: &WeilHom) -> Result<WeilHom> {
        if *self.target != *then.source {
            return Err(Error::AlgebraMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|p| p.substitute_into(then.target.nvars(), &then.images, then.target.ideal()))
            .collect::<Result<Vec<_>>>()?;
        WeilHom::new(self.source.clone(), then.target.clone(), images)
    }

    /// True when the induced linear map is injective.
    pub fn is_injective(&self) -> bool {
        crate::linalg::rank(&self.matrix()) == self.source.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Monomial, MonomialIdeal};

    fn pure(n: usize, k: u32) -> Arc<WeilAlgebra> {
        WeilAlgebra::new(n, MonomialIdeal::new((0..n).map(|v| Monomial::var_pow(v, k)))).unwrap()
    }

    fn el(a: &Arc<WeilAlgebra>, s: &str) -> WeilElement {
        WeilElement::from_polynomial(a.clone(), &parse_poly(s, a.nvars()).unwrap()).unwrap()
    }

    #[test]
    fn square_map() {
        let d = pure(1, 2);
        let d2 = pure(1, 3);
        let h = WeilHom::new(d.clone(), d2.clone(), vec![parse_poly("X1^2", 1).unwrap()]).unwrap();
        assert_eq!(h.apply(&el(&d, "1+3*X1")).unwrap(), el(&d2, "1+3*X1^2"));
    }

    #[test]
    fn inclusion_is_well_defined() {
        let d = pure(1, 2);
        let d2 = pure(1, 3);
        assert!(WeilHom::new(d2, d, vec![parse_poly("X1", 1).unwrap()]).is_ok());
    }

    #[test]
    fn errors() {
        let d = pure(1, 2);
        let d2 = pure(1, 3);
        assert_eq!(
            WeilHom::new(d.clone(), d2.clone(), vec![parse_poly("X1", 1).unwrap()]).unwrap_err(),
            Error::IllDefined("X1^2".into())
        );
        assert_eq!(
            WeilHom::new(d.clone(), d2, vec![parse_poly("1+X1^2", 1).unwrap()]).unwrap_err(),
            Error::NonAugmented(1)
        );
        assert_eq!(WeilHom::new(d.clone(), d, vec![]).unwrap_err(), Error::Arity { expected: 1, got: 0 });
    }

    #[test]
    fn transposition_and_identity() {
        let d2 = pure(2, 2);
        let swap =
            WeilHom::new(d2.clone(), d2.clone(), vec![parse_poly("X2", 2).unwrap(), parse_poly("X1", 2).unwrap()])
                .unwrap();
        assert_eq!(swap.apply(&el(&d2, "X1")).unwrap(), el(&d2, "X2"));
        let e = el(&d2, "2-X1+5*X1*X2");
        assert_eq!(WeilHom::identity(d2.clone()).apply(&e).unwrap(), e);
        let twice = swap.then(&swap).unwrap();
        assert_eq!(twice, WeilHom::identity(d2));
    }
}
