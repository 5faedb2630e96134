//! Exact multivariate polynomials over the rationals with monomial-ideal
//! normal forms.

mod ideal;
mod monomial;
mod polynomial;
pub mod text;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use text::{default_names, format_poly, format_rat, parse_poly, parse_poly_with, parse_rat};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Coefficient ring for Weil elements: exact rationals, or polynomials in
/// symbolic parameters. Every operation is a `Rat`-algebra operation.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    fn lift_rat(&self, r: &Rat) -> Self;

    fn one_like(&self) -> Self {
        self.lift_rat(&Rat::one())
    }

    fn negated(&self) -> Self {
        self.scale(&-Rat::one())
    }
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn lift_rat(&self, r: &Rat) -> Self {
        r.clone()
    }
}

impl Coeff for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.nvars())
    }
    fn vanishes(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        Polynomial::scale(self, r)
    }
    fn lift_rat(&self, r: &Rat) -> Self {
        Polynomial::constant(self.nvars(), r.clone())
    }
}
