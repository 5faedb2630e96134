//! Jets over a trivial coordinate bundle `R^m x R^e -> R^m` at a point, in
//! the three approaches: towers of 1-tangentials, maps over `D^n` points
//! and maps over `D_n` points.
//!
//! A candidate is stored as polynomial bodies. For every fiber coordinate
//! and every non-unit basis monomial of the algebra, the output coefficient
//! is a polynomial in the symbolic input coefficients `g{j}_{exps}` (and in
//! whatever parameters the point and the body were written with). The base
//! part of the output is the input by construction. Every check below is an
//! exact polynomial identity.

mod check;
mod compose;
mod induced;
pub mod json;
mod project;
mod psi;
mod ring;
mod section;
mod tower;

use std::fmt;
use std::sync::Arc;

pub use check::{
    check_pseudo, check_second, check_second_tangential, check_third, check_third_tangential, product_condition_hom,
};
pub use compose::{check_composition, compose_jets};
pub use induced::{check_naturality, chi_chain, induced_map, NaturalityStep};
pub use project::{
    check_restriction_square, check_structure_squares, project_second, project_second_to, project_third,
    project_third_to,
};
pub use psi::{check_plus_compatibility, check_psi, check_psi_chi_route, psi};
pub use section::SectionJet;
pub use tower::{FirstApproachTower, TowerClass};

use crate::error::{Error, Result};
use crate::infinitesimal::InfObject;
use crate::poly::{format_poly, MonomialIdeal, Polynomial};
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::weil::{WeilAlgebra, WeilElement};

/// Which infinitesimal object a candidate lives over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Approach {
    /// Over `D^n`.
    Second(usize),
    /// Over `D_n`.
    Third(u32),
    /// Over any simplicial object, as produced by [`induced_map`].
    Induced(InfObject),
}

impl Approach {
    pub fn object(&self) -> InfObject {
        match self {
            Approach::Second(n) => InfObject::Basic(*n),
            Approach::Third(n) => InfObject::Power(*n),
            Approach::Induced(o) => o.clone(),
        }
    }

    /// `n` for `D^n` and `D_n`, the degree otherwise.
    pub fn order(&self) -> usize {
        match self {
            Approach::Second(n) => *n,
            Approach::Third(n) => *n as usize,
            Approach::Induced(o) => o.degree(),
        }
    }
}

impl fmt::Display for Approach {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Approach::Second(n) => write!(f, "second D^{n}"),
            Approach::Third(n) => write!(f, "third D_{n}"),
            Approach::Induced(o) => write!(f, "induced {o}"),
        }
    }
}

/// A candidate (pseudo)tangential at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct JetCandidate {
    approach: Approach,
    algebra: Arc<WeilAlgebra>,
    space: CoordSpace,
    params: Vec<String>,
    base: Vec<Polynomial>,
    fiber: Vec<Polynomial>,
    body: Vec<Vec<Polynomial>>,
}

impl JetCandidate {
    /// `base` and `fiber` are polynomials in `params`; `body[f][b - 1]` is
    /// the output coefficient of fiber coordinate `f` at basis monomial `b`,
    /// a polynomial in `params ++ inputs`.
    pub fn new(
        approach: Approach,
        space: CoordSpace,
        params: Vec<String>,
        base: Vec<Polynomial>,
        fiber: Vec<Polynomial>,
        body: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let algebra = approach.object().algebra()?;
        let p = params.len();
        if base.len() != space.base {
            return Err(Error::Arity { expected: space.base, got: base.len() });
        }
        if fiber.len() != space.fiber || body.len() != space.fiber {
            return Err(Error::Arity { expected: space.fiber, got: fiber.len().min(body.len()) });
        }
        if let Some(q) = base.iter().chain(&fiber).find(|q| q.nvars() != p) {
            return Err(Error::VarCount(p, q.nvars()));
        }
        let nvars = p + space.base * (algebra.dim() - 1);
        for row in &body {
            if row.len() != algebra.dim() - 1 {
                return Err(Error::Arity { expected: algebra.dim() - 1, got: row.len() });
            }
            if let Some(q) = row.iter().find(|q| q.nvars() != nvars) {
                return Err(Error::VarCount(nvars, q.nvars()));
            }
        }
        Ok(JetCandidate { approach, algebra, space, params, base, fiber, body })
    }

    /// Builds a candidate from what it does to the generic input: `f`
    /// receives the generic point over `params ++ inputs` and returns the
    /// output as a bundle point (or only its fiber block).
    pub fn derive(
        approach: Approach,
        space: CoordSpace,
        params: Vec<String>,
        base: Vec<Polynomial>,
        fiber: Vec<Polynomial>,
        f: impl FnOnce(&ProlongedPoint<Polynomial>) -> Result<ProlongedPoint<Polynomial>>,
    ) -> Result<Self> {
        let algebra = approach.object().algebra()?;
        let n = params.len() + space.base * (algebra.dim() - 1);
        let zero_body = vec![vec![Polynomial::zero(n); algebra.dim() - 1]; space.fiber];
        let skeleton = JetCandidate::new(approach, space, params, base, fiber, zero_body)?;
        let gamma = skeleton.generic_input();
        let out = f(&gamma)?;
        let out_fiber = if out.space() == space { out.fiber_part() } else { out };
        if out_fiber.space().dim() != space.fiber || **out_fiber.algebra() != *algebra {
            return Err(Error::DimensionMismatch(format!(
                "derived output has {} coordinates over {}",
                out_fiber.space().dim(),
                out_fiber.algebra()
            )));
        }
        let mut body = Vec::with_capacity(space.fiber);
        for (k, c) in out_fiber.components().iter().enumerate() {
            let unit = c.coeff(0);
            if *unit != skeleton.fiber[k].extend(n) {
                return Err(Error::PointMismatch(format!(
                    "fiber {} of the output sits at {}, expected {}",
                    k + 1,
                    format_poly(unit, &skeleton.input_names()),
                    format_poly(&skeleton.fiber[k], &skeleton.params)
                )));
            }
            body.push(c.coeffs()[1..].to_vec());
        }
        Ok(JetCandidate { body, ..skeleton })
    }

    pub fn approach(&self) -> &Approach {
        &self.approach
    }

    pub fn algebra(&self) -> &Arc<WeilAlgebra> {
        &self.algebra
    }

    pub fn space(&self) -> CoordSpace {
        self.space
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn base_point(&self) -> &[Polynomial] {
        &self.base
    }

    pub fn fiber_point(&self) -> &[Polynomial] {
        &self.fiber
    }

    pub fn body(&self) -> &[Vec<Polynomial>] {
        &self.body
    }

    /// Number of symbolic input coefficients.
    pub fn ninputs(&self) -> usize {
        self.space.base * (self.algebra.dim() - 1)
    }

    /// Variables of a body polynomial: parameters, then inputs.
    pub fn nvars(&self) -> usize {
        self.params.len() + self.ninputs()
    }

    /// Index of input `(j, b)`: coordinate `j` (0-based) at basis monomial
    /// `b >= 1`.
    pub fn input_var(&self, j: usize, b: usize) -> usize {
        self.params.len() + j * (self.algebra.dim() - 1) + (b - 1)
    }

    /// Names of the body variables: parameters, then `g{j}_{exps}`.
    pub fn input_names(&self) -> Vec<String> {
        let mut names = self.params.clone();
        for j in 0..self.space.base {
            for m in &self.algebra.basis()[1..] {
                let exps: String = m.exponents(self.algebra.nvars()).iter().map(|e| e.to_string()).collect();
                names.push(format!("g{}_{exps}", j + 1));
            }
        }
        names
    }

    /// Same body viewed as another approach over the same algebra.
    pub fn relabel(&self, approach: Approach) -> Result<Self> {
        if *approach.object().algebra()? != *self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(JetCandidate { approach, ..self.clone() })
    }

    /// Same jet with its parameters embedded at `offset` in a longer list.
    pub fn with_params(&self, params: Vec<String>, offset: usize) -> Result<Self> {
        let p = self.params.len();
        if offset + p > params.len() {
            return Err(Error::VarCount(offset + p, params.len()));
        }
        let np = params.len();
        let shift_point = |q: &Polynomial| q.map_vars(np, |v| v + offset);
        let nv = np + self.ninputs();
        let shift_body = |q: &Polynomial| q.map_vars(nv, |v| if v < p { v + offset } else { v - p + np });
        JetCandidate::new(
            self.approach.clone(),
            self.space,
            params,
            self.base.iter().map(shift_point).collect(),
            self.fiber.iter().map(shift_point).collect(),
            self.body.iter().map(|r| r.iter().map(shift_body).collect()).collect(),
        )
    }

    /// The generic input point in a ring of `nvars` variables whose first
    /// entries are the parameters and whose inputs start at `offset`.
    pub fn generic_input_in(&self, nvars: usize, offset: usize) -> ProlongedPoint<Polynomial> {
        let dim = self.algebra.dim();
        let components = (0..self.space.base)
            .map(|j| {
                let mut coeffs = vec![self.base[j].extend(nvars)];
                coeffs.extend((1..dim).map(|b| Polynomial::var(nvars, offset + j * (dim - 1) + b - 1)));
                WeilElement::from_coeffs(self.algebra.clone(), coeffs).expect("dim coefficients")
            })
            .collect();
        ProlongedPoint::new(CoordSpace::plain(self.space.base), self.algebra.clone(), components)
            .expect("consistent by construction")
    }

    pub fn generic_input(&self) -> ProlongedPoint<Polynomial> {
        self.generic_input_in(self.nvars(), self.params.len())
    }

    /// Applies the candidate to a symbolic input whose coefficients live in
    /// a ring extending the parameters, reducing by `ideal` in that ring.
    pub fn apply(
        &self,
        gamma: &ProlongedPoint<Polynomial>,
        ideal: &MonomialIdeal,
    ) -> Result<ProlongedPoint<Polynomial>> {
        if **gamma.algebra() != *self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        if gamma.space().dim() != self.space.base {
            return Err(Error::Arity { expected: self.space.base, got: gamma.space().dim() });
        }
        let n = ring::coeff_vars(gamma).unwrap_or(self.params.len());
        let p = self.params.len();
        if n < p {
            return Err(Error::VarCount(p, n));
        }
        for (j, c) in gamma.components().iter().enumerate() {
            if c.coeff(0).normal_form(ideal) != self.base[j].extend(n) {
                return Err(Error::PointMismatch(format!(
                    "input coordinate {} is not based at the jet's point",
                    j + 1
                )));
            }
        }
        let mut images: Vec<Polynomial> = (0..p).map(|v| Polynomial::var(n, v)).collect();
        for c in gamma.components() {
            images.extend(c.coeffs()[1..].iter().cloned());
        }
        let fiber = self
            .body
            .iter()
            .zip(&self.fiber)
            .map(|(row, y)| {
                let mut coeffs = vec![y.extend(n)];
                for q in row {
                    coeffs.push(q.substitute_into(n, &images, ideal)?);
                }
                WeilElement::from_coeffs(self.algebra.clone(), coeffs)
            })
            .collect::<Result<Vec<_>>>()?;
        let fiber = ProlongedPoint::new(CoordSpace::plain(self.space.fiber), self.algebra.clone(), fiber)?;
        let base =
            ProlongedPoint::new(CoordSpace::plain(self.space.base), self.algebra.clone(), gamma.components().to_vec())?;
        ProlongedPoint::pair(&base, &fiber)
    }

    /// Largest total degree of a body polynomial in the inputs.
    pub fn input_degree(&self) -> u32 {
        let inputs: Vec<usize> = (self.params.len()..self.nvars()).collect();
        self.body.iter().flatten().map(|q| q.degree_in_set(&inputs)).max().unwrap_or(0)
    }

    /// Largest degree of a body polynomial in any single input.
    pub fn max_single_input_degree(&self) -> u32 {
        (self.params.len()..self.nvars())
            .flat_map(|v| self.body.iter().flatten().map(move |q| q.degree_in(v)))
            .max()
            .unwrap_or(0)
    }

    /// Body equality, ignoring the approach tag.
    pub fn same_map(&self, other: &JetCandidate) -> bool {
        *self.algebra == *other.algebra
            && self.space == other.space
            && self.params == other.params
            && self.base == other.base
            && self.fiber == other.fiber
            && self.body == other.body
    }

    /// First body entry where two candidates differ.
    pub fn body_difference(&self, other: &JetCandidate) -> Option<String> {
        if !(*self.algebra == *other.algebra && self.space == other.space && self.params == other.params) {
            return Some(format!("different shapes: {} vs {}", self.approach, other.approach));
        }
        if self.base != other.base || self.fiber != other.fiber {
            return Some("different points".into());
        }
        let names = self.input_names();
        for (f, (a, b)) in self.body.iter().zip(&other.body).enumerate() {
            for (k, (p, q)) in a.iter().zip(b).enumerate() {
                if p != q {
                    let m = &self.algebra.basis()[k + 1];
                    return Some(format!(
                        "fiber {} at {}: {} vs {}",
                        f + 1,
                        crate::weil::json::monomial_text(m, self.algebra.nvars()),
                        format_poly(p, &names),
                        format_poly(q, &names)
                    ));
                }
            }
        }
        None
    }

    /// Adds `delta` (over the body variables) to one body entry.
    pub fn perturbed(&self, fiber: usize, basis_index: usize, delta: &Polynomial) -> Result<Self> {
        if fiber >= self.space.fiber || basis_index == 0 || basis_index >= self.algebra.dim() {
            return Err(Error::IndexOutOfRange { index: basis_index, max: self.algebra.dim() - 1 });
        }
        let mut out = self.clone();
        let slot = &mut out.body[fiber][basis_index - 1];
        *slot = slot.checked_add(delta)?;
        Ok(out)
    }
}

/// Names for a ring that extends `names` by anonymous extras.
pub(crate) fn ring_names(names: &[String], total: usize, extra: &[&str]) -> Vec<String> {
    let mut out = names.to_vec();
    for e in extra {
        if out.len() < total {
            out.push(e.to_string());
        }
    }
    while out.len() < total {
        out.push(format!("t{}", out.len() + 1));
    }
    out
}

/// Witness for the first coefficient where two symbolic points differ.
pub(crate) fn point_difference(
    lhs: &ProlongedPoint<Polynomial>,
    rhs: &ProlongedPoint<Polynomial>,
    names: &[String],
) -> Option<String> {
    if lhs.space().dim() != rhs.space().dim() || **lhs.algebra() != **rhs.algebra() {
        return Some("outputs have different shapes".into());
    }
    let alg = lhs.algebra();
    for (c, (a, b)) in lhs.components().iter().zip(rhs.components()).enumerate() {
        for (k, (p, q)) in a.coeffs().iter().zip(b.coeffs()).enumerate() {
            if p != q {
                let d = p - q;
                return Some(format!(
                    "coordinate {} at {}: difference {}",
                    c + 1,
                    crate::weil::json::monomial_text(&alg.basis()[k], alg.nvars()),
                    format_poly(&d, names)
                ));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly_with;

    fn linear_d1() -> JetCandidate {
        // m = e = 1 at (0, 0): fiber tangent 3 * g1_1.
        let names = vec!["g1_1".to_string()];
        JetCandidate::new(
            Approach::Second(1),
            CoordSpace::bundle(1, 1),
            vec![],
            vec![Polynomial::zero(0)],
            vec![Polynomial::zero(0)],
            vec![vec![parse_poly_with("3*g1_1", &names).unwrap()]],
        )
        .unwrap()
    }

    #[test]
    fn input_layout() {
        let j = linear_d1();
        assert_eq!(j.input_names(), vec!["g1_1"]);
        let out = j.apply(&j.generic_input(), &MonomialIdeal::zero()).unwrap();
        assert_eq!(out.component(1).coeff(1), &parse_poly_with("3*g1_1", &["g1_1".to_string()]).unwrap());
    }

    #[test]
    fn derive_reproduces_body() {
        let j = linear_d1();
        let again = JetCandidate::derive(
            Approach::Second(1),
            j.space(),
            vec![],
            j.base_point().to_vec(),
            j.fiber_point().to_vec(),
            |g| j.apply(g, &MonomialIdeal::zero()),
        )
        .unwrap();
        assert_eq!(again, j);
    }

    #[test]
    fn shape_errors() {
        let bad = JetCandidate::new(
            Approach::Second(1),
            CoordSpace::bundle(1, 1),
            vec![],
            vec![Polynomial::zero(0)],
            vec![Polynomial::zero(0)],
            vec![vec![Polynomial::zero(3)]],
        );
        assert!(matches!(bad, Err(Error::VarCount(1, 3))));
    }
}
