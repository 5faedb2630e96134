//! Truncated Taylor data of a section `s: R^m -> R^e` at a point, and the
//! holonomic jets it generates in each approach.

use super::ring::{embed, extract, shifted_ideal};
use super::tower::FirstApproachTower;
use super::{Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialIdeal, Polynomial, Rat};
use crate::prolong::{CoordSpace, ProlongedPoint};

/// `s(x + h) = taylor(h)` up to total degree `order` in `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionJet {
    m: usize,
    e: usize,
    order: usize,
    params: Vec<String>,
    base: Vec<Polynomial>,
    taylor: Vec<Polynomial>,
}

fn monomials_up_to(m: usize, order: usize) -> Vec<Monomial> {
    fn go(v: usize, m: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == m {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for k in 0..=left {
            cur.push(k as u32);
            go(v + 1, m, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, order, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl SectionJet {
    /// `taylor[f]` is a polynomial in `params ++ h_1..h_m` of degree at most
    /// `order` in the `h`.
    pub fn new(order: usize, params: Vec<String>, base: Vec<Polynomial>, taylor: Vec<Polynomial>) -> Result<Self> {
        let (m, e, p) = (base.len(), taylor.len(), params.len());
        if let Some(q) = base.iter().find(|q| q.nvars() != p) {
            return Err(Error::VarCount(p, q.nvars()));
        }
        let hs: Vec<usize> = (p..p + m).collect();
        for q in &taylor {
            if q.nvars() != p + m {
                return Err(Error::VarCount(p + m, q.nvars()));
            }
            if q.degree_in_set(&hs) as usize > order {
                return Err(Error::Precondition(format!("Taylor polynomial exceeds order {order}")));
            }
        }
        Ok(SectionJet { m, e, order, params, base, taylor })
    }

    /// Every Taylor coefficient a fresh parameter `s{f}_{exps}`, at a
    /// rational base point.
    pub fn symbolic(m: usize, e: usize, order: usize, base: &[Rat]) -> Result<Self> {
        if base.len() != m {
            return Err(Error::Arity { expected: m, got: base.len() });
        }
        let monos = monomials_up_to(m, order);
        let mut params = Vec::new();
        for f in 0..e {
            for mono in &monos {
                let exps: String = mono.exponents(m).iter().map(|x| x.to_string()).collect();
                params.push(format!("s{}_{exps}", f + 1));
            }
        }
        let p = params.len();
        let taylor = (0..e)
            .map(|f| {
                let mut q = Polynomial::zero(p + m);
                for (k, mono) in monos.iter().enumerate() {
                    q = &q + &Polynomial::var(p + m, f * monos.len() + k).mul_monomial(&mono.shift(p));
                }
                q
            })
            .collect();
        let base = base.iter().map(|c| Polynomial::constant(p, c.clone())).collect();
        SectionJet::new(order, params, base, taylor)
    }

    pub fn base_dim(&self) -> usize {
        self.m
    }

    pub fn fiber_dim(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn base_point(&self) -> &[Polynomial] {
        &self.base
    }

    pub fn taylor(&self) -> &[Polynomial] {
        &self.taylor
    }

    /// `s(x)`.
    pub fn fiber_point(&self) -> Vec<Polynomial> {
        let p = self.params.len();
        let hs: Vec<usize> = (p..p + self.m).collect();
        self.taylor.iter().map(|q| q.kill_vars(&hs).shrink(p).expect("no h left")).collect()
    }

    /// Drops every term of degree above `order` in `h`.
    pub fn truncate(&self, order: usize) -> Self {
        let p = self.params.len();
        let taylor = self
            .taylor
            .iter()
            .map(|q| {
                Polynomial::from_terms(
                    q.nvars(),
                    q.terms()
                        .filter(|(mono, _)| mono.restrict(p, p + self.m).degree() as usize <= order)
                        .map(|(mono, c)| (mono.clone(), c.clone())),
                )
            })
            .collect();
        SectionJet { order: order.min(self.order), taylor, ..self.clone() }
    }

    /// Same section with its parameters embedded at `offset` in `params`.
    pub fn with_params(&self, params: Vec<String>, offset: usize) -> Result<Self> {
        let p = self.params.len();
        if offset + p > params.len() {
            return Err(Error::VarCount(offset + p, params.len()));
        }
        let np = params.len();
        let base = self.base.iter().map(|q| q.map_vars(np, |v| v + offset)).collect();
        let taylor = self
            .taylor
            .iter()
            .map(|q| q.map_vars(np + self.m, |v| if v < p { v + offset } else { v - p + np }))
            .collect();
        SectionJet::new(self.order, params, base, taylor)
    }

    /// The section `x -> (s(x), u(x, s(x)))` for `u` a section over the
    /// total space `R^(m+e)` based at `(x, s(x))`. Both must share
    /// parameters.
    pub fn then(&self, upper: &SectionJet) -> Result<SectionJet> {
        if upper.params != self.params {
            return Err(Error::PointMismatch("sections are written over different parameters".into()));
        }
        if upper.m != self.m + self.e {
            return Err(Error::DimensionMismatch(format!(
                "upper base has {} coordinates, expected {}",
                upper.m,
                self.m + self.e
            )));
        }
        let mut expected = self.base.clone();
        expected.extend(self.fiber_point());
        if upper.base != expected {
            return Err(Error::PointMismatch("upper section is not based at the lower section's value".into()));
        }
        let p = self.params.len();
        let n = p + self.m;
        let mut images: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(n, v)).collect();
        for (q, y) in self.taylor.iter().zip(self.fiber_point()) {
            images.push(q - &y.extend(n));
        }
        let mut taylor = self.taylor.clone();
        for q in &upper.taylor {
            taylor.push(q.substitute_into(n, &images, &MonomialIdeal::zero())?);
        }
        let order = self.order.min(upper.order);
        let out = SectionJet {
            m: self.m,
            e: self.e + upper.e,
            order: self.order.max(upper.order) * 2,
            params: self.params.clone(),
            base: self.base.clone(),
            taylor,
        };
        Ok(out.truncate(order))
    }

    /// `s` applied to a point of `R^m (x) W` based at `x`: the truncated
    /// Taylor composition, exact in the algebra.
    pub fn compose_with(&self, gamma: &ProlongedPoint<Polynomial>) -> Result<ProlongedPoint<Polynomial>> {
        if gamma.space().dim() != self.m {
            return Err(Error::Arity { expected: self.m, got: gamma.space().dim() });
        }
        let alg = gamma.algebra().clone();
        let n = super::ring::coeff_vars(gamma).unwrap_or(self.params.len());
        let p = self.params.len();
        let total = n + alg.nvars();
        let ideal = shifted_ideal(&alg, n);
        let mut images: Vec<Polynomial> = (0..p).map(|v| Polynomial::var(total, v)).collect();
        for (c, x) in gamma.components().iter().zip(&self.base) {
            if *c.coeff(0) != x.extend(n) {
                return Err(Error::PointMismatch("input is not based at the section's base point".into()));
            }
            images.push(&embed(c, n) - &c.coeff(0).extend(total));
        }
        let fiber = self
            .taylor
            .iter()
            .map(|q| extract(&q.substitute_into(total, &images, &ideal)?, n, &alg))
            .collect::<Result<Vec<_>>>()?;
        let fiber = ProlongedPoint::new(CoordSpace::plain(self.e), alg, fiber)?;
        ProlongedPoint::pair(gamma, &fiber)
    }

    fn candidate(&self, approach: Approach) -> Result<JetCandidate> {
        JetCandidate::derive(
            approach,
            CoordSpace::bundle(self.m, self.e),
            self.params.clone(),
            self.base.clone(),
            self.fiber_point(),
            |g| self.compose_with(g),
        )
    }

    fn order_matches(&self, n: usize) -> Result<()> {
        if self.order != n {
            return Err(Error::Precondition(format!("section of order {} for a jet of order {n}", self.order)));
        }
        Ok(())
    }

    /// `g -> (g, s . g)` over `D^n`.
    pub fn second(&self, n: usize) -> Result<JetCandidate> {
        self.order_matches(n)?;
        self.candidate(Approach::Second(n))
    }

    /// `g -> (g, s . g)` over `D_n`.
    pub fn third(&self, n: u32) -> Result<JetCandidate> {
        self.order_matches(n as usize)?;
        self.candidate(Approach::Third(n))
    }

    /// The iterated prolongation: level `k` is the Jacobian at `x` of the
    /// level `k - 1` fiber coordinates as functions of the base point.
    pub fn first(&self, k: usize) -> Result<FirstApproachTower> {
        self.order_matches(k)?;
        let p = self.params.len();
        let hs: Vec<usize> = (p..p + self.m).collect();
        let at_x = |q: &Polynomial| q.kill_vars(&hs).shrink(p).expect("no h left");
        let mut coords: Vec<Polynomial> = self.taylor.clone();
        let mut levels = Vec::with_capacity(k);
        for _ in 0..k {
            let jac: Vec<Vec<Polynomial>> =
                coords.iter().map(|q| hs.iter().map(|&h| q.derivative(h)).collect()).collect();
            levels.push(jac.iter().map(|row| row.iter().map(at_x).collect()).collect());
            coords.extend(jac.into_iter().flatten());
        }
        FirstApproachTower::new(self.m, self.params.clone(), self.base.clone(), self.fiber_point(), levels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse_poly_with};

    fn square_at(x: i64) -> SectionJet {
        // s(x + h) = (x + h)^2
        let names = vec!["h".to_string()];
        let t = parse_poly_with(&format!("{}+{}*h+h^2", x * x, 2 * x), &names).unwrap();
        SectionJet::new(2, vec![], vec![Polynomial::constant(0, int(x))], vec![t]).unwrap()
    }

    #[test]
    fn square_at_zero_kills_tangents() {
        let s = square_at(0).truncate(1);
        let j = s.second(1).unwrap();
        assert!(j.body()[0][0].is_zero());
    }

    #[test]
    fn square_at_one_over_d2() {
        let j = square_at(1).second(2).unwrap();
        let names = j.input_names();
        assert_eq!(names, vec!["g1_10", "g1_01", "g1_11"]);
        let want = ["2*g1_10", "2*g1_01", "2*g1_11+2*g1_10*g1_01"];
        for (b, w) in want.iter().enumerate() {
            assert_eq!(j.body()[0][b], parse_poly_with(w, &names).unwrap());
        }
        assert_eq!(j.fiber_point()[0], Polynomial::from_int(0, 1));
    }

    #[test]
    fn symbolic_parameters() {
        let s = SectionJet::symbolic(2, 1, 1, &[int(0), int(0)]).unwrap();
        assert_eq!(s.params(), ["s1_00", "s1_10", "s1_01"]);
        assert_eq!(s.fiber_point()[0], Polynomial::var(3, 0));
    }

    #[test]
    fn linear_section_gives_linear_body() {
        let s = SectionJet::symbolic(1, 1, 3, &[int(2)]).unwrap().truncate(1);
        let s = SectionJet { order: 3, ..s };
        let j = s.third(3).unwrap();
        assert!(j.input_degree() <= 1);
    }

    #[test]
    fn order_mismatch() {
        assert!(square_at(1).second(3).is_err());
    }
}
