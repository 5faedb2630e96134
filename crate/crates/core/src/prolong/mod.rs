//! Weil prolongations of coordinate spaces: points of `R^k ⊗ W`, the
//! functorial action of Weil homs, and the structure maps on `D^n` points.

pub mod json;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::infinitesimal::{plus_map, InfObject};
use crate::poly::{Coeff, Polynomial, Rat};
use crate::weil::{WeilAlgebra, WeilElement, WeilHom};

/// `R^(base+fiber)`, projecting onto the first `base` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoordSpace {
    pub base: usize,
    pub fiber: usize,
}

impl CoordSpace {
    pub fn plain(k: usize) -> Self {
        CoordSpace { base: k, fiber: 0 }
    }

    pub fn bundle(base: usize, fiber: usize) -> Self {
        CoordSpace { base, fiber }
    }

    pub fn dim(&self) -> usize {
        self.base + self.fiber
    }
}

/// A point of `space ⊗ algebra`: one algebra element per coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct ProlongedPoint<C: Coeff = Rat> {
    space: CoordSpace,
    algebra: Arc<WeilAlgebra>,
    components: Vec<WeilElement<C>>,
}

fn basic(n: usize) -> Arc<WeilAlgebra> {
    InfObject::Basic(n).algebra().expect("D^n is finite")
}

/// Dual of `D^(n+1) -> D^n` dropping coordinate `i`.
pub fn degeneracy_hom(n: usize, i: usize) -> Result<WeilHom> {
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: n + 1 });
    }
    let images = (1..=n).map(|k| Polynomial::var(n + 1, if k < i { k - 1 } else { k })).collect();
    WeilHom::new(basic(n), basic(n + 1), images)
}

/// Dual of `D^n -> D^(n+1)` inserting `0` at coordinate `i`.
pub fn face_hom(n: usize, i: usize) -> Result<WeilHom> {
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: n + 1 });
    }
    let images = (1..=n + 1)
        .map(|k| match k.cmp(&i) {
            std::cmp::Ordering::Less => Polynomial::var(n, k - 1),
            std::cmp::Ordering::Equal => Polynomial::zero(n),
            std::cmp::Ordering::Greater => Polynomial::var(n, k - 2),
        })
        .collect();
    WeilHom::new(basic(n + 1), basic(n), images)
}

/// Dual of the coordinate permutation `(d_1..d_n) -> (d_p(1)..d_p(n))`,
/// `perm` 1-based.
pub fn permutation_hom(n: usize, perm: &[usize]) -> Result<WeilHom> {
    if perm.len() != n {
        return Err(Error::Arity { expected: n, got: perm.len() });
    }
    let images = perm.iter().map(|&p| Polynomial::var(n, p - 1)).collect();
    WeilHom::new(basic(n), basic(n), images)
}

impl<C: Coeff> ProlongedPoint<C> {
    pub fn new(space: CoordSpace, algebra: Arc<WeilAlgebra>, components: Vec<WeilElement<C>>) -> Result<Self> {
        if components.len() != space.dim() {
            return Err(Error::Arity { expected: space.dim(), got: components.len() });
        }
        if components.iter().any(|c| **c.algebra() != *algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(ProlongedPoint { space, algebra, components })
    }

    pub fn space(&self) -> CoordSpace {
        self.space
    }

    pub fn algebra(&self) -> &Arc<WeilAlgebra> {
        &self.algebra
    }

    pub fn components(&self) -> &[WeilElement<C>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &WeilElement<C> {
        &self.components[i]
    }

    /// Unit coefficients: the underlying point of the space.
    pub fn base_point(&self) -> Vec<C> {
        self.components.iter().map(|c| c.unit_coeff().clone()).collect()
    }

    /// `id ⊗ h`, componentwise.
    pub fn apply(&self, h: &WeilHom) -> Result<Self> {
        let components = self.components.iter().map(|c| h.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(ProlongedPoint { space: self.space, algebra: h.target().clone(), components })
    }

    /// `π ⊗ id`: keeps the base block.
    pub fn project(&self) -> Self {
        ProlongedPoint {
            space: CoordSpace::plain(self.space.base),
            algebra: self.algebra.clone(),
            components: self.components[..self.space.base].to_vec(),
        }
    }

    /// The fiber block as a point of `R^fiber ⊗ W`.
    pub fn fiber_part(&self) -> Self {
        ProlongedPoint {
            space: CoordSpace::plain(self.space.fiber),
            algebra: self.algebra.clone(),
            components: self.components[self.space.base..].to_vec(),
        }
    }

    /// Stacks a base point and a fiber point into a bundle point.
    pub fn pair(base: &Self, fiber: &Self) -> Result<Self> {
        if *base.algebra != *fiber.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let mut components = base.components.clone();
        components.extend(fiber.components.iter().cloned());
        Ok(ProlongedPoint {
            space: CoordSpace::bundle(base.space.dim(), fiber.space.dim()),
            algebra: base.algebra.clone(),
            components,
        })
    }

    /// Substitutes `X_i -> alpha X_i`: the coefficient at each basis
    /// monomial picks up `alpha` to the power of its `X_i` exponent.
    pub fn scale_axis(&self, alpha: &C, i: usize) -> Result<Self> {
        let n = self.algebra.nvars();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let factors: Vec<C> = self
            .algebra
            .basis()
            .iter()
            .map(|m| {
                let e = m.exponent(i - 1);
                (0..e).fold(alpha.one_like(), |acc, _| acc.times(alpha))
            })
            .collect();
        let components = self
            .components
            .iter()
            .map(|c| {
                let coeffs = c.coeffs().iter().zip(&factors).map(|(a, f)| a.times(f)).collect();
                WeilElement::from_coeffs(self.algebra.clone(), coeffs).expect("same length")
            })
            .collect();
        Ok(ProlongedPoint { space: self.space, algebra: self.algebra.clone(), components })
    }

    /// Scales every variable at once.
    pub fn scale(&self, alpha: &C) -> Result<Self> {
        (1..=self.algebra.nvars()).try_fold(self.clone(), |p, i| p.scale_axis(alpha, i))
    }

    fn basic_order(&self) -> Result<usize> {
        let n = self.algebra.nvars();
        if *self.algebra != *basic(n) {
            return Err(Error::Precondition(format!("expected a point over W(D^{n}), got {}", self.algebra)));
        }
        Ok(n)
    }

    /// `s_i`: `D^n` point to `D^(n+1)` point, coordinate `i` made a dummy.
    pub fn s(&self, i: usize) -> Result<Self> {
        let n = self.basic_order()?;
        self.apply(&degeneracy_hom(n, i)?)
    }

    /// `d_i`: `D^(n+1)` point to `D^n` point, coordinate `i` set to zero.
    pub fn d(&self, i: usize) -> Result<Self> {
        let n = self.basic_order()?;
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: i, max: 0 });
        }
        self.apply(&face_hom(n - 1, i)?)
    }

    /// Precomposes a `D_n` point with the sum map of `obj` (dimension `n`).
    pub fn plus_precompose(&self, obj: &InfObject) -> Result<Self> {
        let h = plus_map(obj)?;
        if **h.source() != *self.algebra {
            return Err(Error::DimensionMismatch(format!(
                "{obj} has dimension {}, point lives over {}",
                h.source().dim() - 1,
                self.algebra
            )));
        }
        self.apply(&h)
    }

    /// Every non-unit coefficient vanishes.
    pub fn is_degenerate(&self) -> bool {
        self.components.iter().all(|c| c.is_constant())
    }

    /// The base projection is degenerate.
    pub fn is_vertical(&self) -> bool {
        self.project().is_degenerate()
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> ProlongedPoint<D> {
        let components = self
            .components
            .iter()
            .map(|c| {
                WeilElement::from_coeffs(self.algebra.clone(), c.coeffs().iter().map(&f).collect())
                    .expect("same length")
            })
            .collect();
        ProlongedPoint { space: self.space, algebra: self.algebra.clone(), components }
    }
}

impl ProlongedPoint<Rat> {
    /// A point from polynomials in the algebra variables, one per coordinate.
    pub fn from_polynomials(space: CoordSpace, algebra: Arc<WeilAlgebra>, polys: &[Polynomial]) -> Result<Self> {
        let components =
            polys.iter().map(|p| WeilElement::from_polynomial(algebra.clone(), p)).collect::<Result<Vec<_>>>()?;
        Self::new(space, algebra, components)
    }

    pub fn to_symbolic(&self, nparams: usize) -> ProlongedPoint<Polynomial> {
        self.map_coeffs(|c| Polynomial::constant(nparams, c.clone()))
    }
}

impl ProlongedPoint<Polynomial> {
    /// The generic point: coefficient `b` of coordinate `c` is parameter
    /// `offset + c * dim + b`, out of `nparams`.
    pub fn generic(space: CoordSpace, algebra: Arc<WeilAlgebra>, offset: usize, nparams: usize) -> Result<Self> {
        let dim = algebra.dim();
        let need = offset + space.dim() * dim;
        if need > nparams {
            return Err(Error::VarCount(need, nparams));
        }
        let components = (0..space.dim())
            .map(|c| {
                let coeffs = (0..dim).map(|b| Polynomial::var(nparams, offset + c * dim + b)).collect();
                WeilElement::from_coeffs(algebra.clone(), coeffs).expect("dim coefficients")
            })
            .collect();
        Ok(ProlongedPoint { space, algebra, components })
    }

    /// Parameter names matching [`ProlongedPoint::generic`].
    pub fn generic_names(space: CoordSpace, algebra: &WeilAlgebra) -> Vec<String> {
        let mut names = Vec::new();
        for c in 0..space.dim() {
            for m in algebra.basis() {
                let exps: String = m.exponents(algebra.nvars()).iter().map(|e| e.to_string()).collect();
                names.push(if m.is_one() { format!("c{}", c + 1) } else { format!("c{}_{exps}", c + 1) });
            }
        }
        names
    }

    /// Evaluates every coefficient at rational parameter values.
    pub fn evaluate(&self, values: &[Rat]) -> Result<ProlongedPoint<Rat>> {
        let components = self
            .components
            .iter()
            .map(|c| {
                let coeffs = c.coeffs().iter().map(|p| p.eval(values)).collect::<Result<Vec<_>>>()?;
                WeilElement::from_coeffs(self.algebra.clone(), coeffs)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ProlongedPoint { space: self.space, algebra: self.algebra.clone(), components })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse_poly};

    fn pt(n: usize, polys: &[&str]) -> ProlongedPoint {
        let alg = basic(n);
        let ps: Vec<_> = polys.iter().map(|s| parse_poly(s, n).unwrap()).collect();
        ProlongedPoint::from_polynomials(CoordSpace::plain(polys.len()), alg, &ps).unwrap()
    }

    #[test]
    fn transposition_acts() {
        let g = pt(2, &["5+2*X1+3*X2+7*X1*X2"]);
        let swapped = g.apply(&permutation_hom(2, &[2, 1]).unwrap()).unwrap();
        assert_eq!(swapped, pt(2, &["5+3*X1+2*X2+7*X1*X2"]));
    }

    #[test]
    fn structure_maps() {
        assert_eq!(pt(1, &["4+3*X1"]).s(1).unwrap(), pt(2, &["4+3*X2"]));
        assert_eq!(pt(2, &["4+3*X1+5*X2+6*X1*X2"]).d(1).unwrap(), pt(1, &["4+5*X1"]));
        let g = pt(2, &["1+X1-X2+2*X1*X2"]);
        assert_eq!(g.s(3).unwrap().d(3).unwrap(), g);
        assert!(g.s(4).is_err());
    }

    #[test]
    fn scaling() {
        let g = pt(2, &["3+X1+5*X1*X2"]);
        assert_eq!(g.scale_axis(&int(2), 1).unwrap(), pt(2, &["3+2*X1+10*X1*X2"]));
        assert_eq!(g.scale_axis(&int(1), 2).unwrap(), g);
        assert!(pt(1, &["3+X1"]).scale_axis(&int(0), 1).unwrap().is_degenerate());
        assert!(g.scale_axis(&int(2), 3).is_err());
    }

    #[test]
    fn degenerate_and_vertical() {
        let alg = basic(1);
        let space = CoordSpace::bundle(1, 1);
        let mk = |a: &str, b: &str| {
            ProlongedPoint::from_polynomials(
                space,
                alg.clone(),
                &[parse_poly(a, 1).unwrap(), parse_poly(b, 1).unwrap()],
            )
            .unwrap()
        };
        assert!(mk("2", "3").is_degenerate());
        let v = mk("2", "3+4*X1");
        assert!(v.is_vertical() && !v.is_degenerate());
        assert!(!mk("2+X1", "3").is_vertical());
    }

    #[test]
    fn plus_precompose_examples() {
        let alg = InfObject::Power(2).algebra().unwrap();
        let g = ProlongedPoint::from_polynomials(CoordSpace::plain(1), alg, &[parse_poly("7+2*X1+3*X1^2", 1).unwrap()])
            .unwrap();
        let out = g.plus_precompose(&InfObject::Basic(2)).unwrap();
        assert_eq!(out, pt(2, &["7+2*X1+2*X2+6*X1*X2"]));
        assert!(g.plus_precompose(&InfObject::Basic(3)).is_err());
        let d = pt(1, &["1+X1"]);
        assert_eq!(d.plus_precompose(&InfObject::Basic(1)).unwrap(), d);
    }

    #[test]
    fn generic_point_names() {
        let alg = basic(2);
        let names = ProlongedPoint::generic_names(CoordSpace::plain(1), &alg);
        assert_eq!(names, vec!["c1", "c1_10", "c1_01", "c1_11"]);
        let g = ProlongedPoint::generic(CoordSpace::plain(1), alg, 0, 4).unwrap();
        let back = g.s(1).unwrap().d(1).unwrap();
        assert_eq!(back, g);
    }
}
