use std::sync::Arc;

use num_traits::One;

use super::InfObject;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::report::Report;
use crate::weil::{tensor, WeilAlgebra, WeilHom};

/// A map between infinitesimal objects, given by one polynomial in the
/// source coordinates per target coordinate. Its dual runs the other way.
#[derive(Clone, Debug)]
pub struct InfMap {
    source: InfObject,
    target: InfObject,
    components: Vec<Polynomial>,
    hom: WeilHom,
}

impl InfMap {
    /// Any augmented polynomial components; the dual must be well-defined.
    pub fn polynomial(source: InfObject, target: InfObject, components: Vec<Polynomial>) -> Result<InfMap> {
        let hom = WeilHom::new(target.algebra()?, source.algebra()?, components.clone())?;
        Ok(InfMap { source, target, components, hom })
    }

    /// Each component is zero or a single monomial with coefficient 1.
    pub fn monomial(source: InfObject, target: InfObject, components: Vec<Polynomial>) -> Result<InfMap> {
        for (j, c) in components.iter().enumerate() {
            let ok = c.is_zero() || (c.len() == 1 && c.terms().all(|(_, r)| r.is_one()));
            if !ok {
                return Err(Error::Precondition(format!("component {} is not a monomial: {c}", j + 1)));
            }
        }
        Self::polynomial(source, target, components)
    }

    /// Coordinate injection sending source coordinate `i` to target
    /// coordinate `coords[i]` (1-based), zeros elsewhere.
    pub fn injection(source: InfObject, target: InfObject, coords: &[usize]) -> Result<InfMap> {
        let k = source.degree();
        if coords.len() != k {
            return Err(Error::Arity { expected: k, got: coords.len() });
        }
        let m = target.degree();
        let mut comps = vec![Polynomial::zero(k); m];
        for (i, &j) in coords.iter().enumerate() {
            if j == 0 || j > m {
                return Err(Error::IndexOutOfRange { index: j, max: m });
            }
            comps[j - 1] = Polynomial::var(k, i);
        }
        Self::monomial(source, target, comps)
    }

    pub fn source(&self) -> &InfObject {
        &self.source
    }

    pub fn target(&self) -> &InfObject {
        &self.target
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// The dual hom from the target's algebra to the source's.
    pub fn hom(&self) -> &WeilHom {
        &self.hom
    }

    pub fn is_monomial(&self) -> bool {
        self.components.iter().all(|c| c.is_zero() || (c.len() == 1 && c.terms().all(|(_, r)| r.is_one())))
    }
}

/// Dual of `(d1..dm) -> d1+...+dm` into `D_k`, `k` the dimension.
pub fn plus_map(obj: &InfObject) -> Result<WeilHom> {
    let k = obj.dimension()?;
    let source = InfObject::Power(k as u32).algebra()?;
    let target = obj.algebra()?;
    let m = obj.degree();
    let sum = (0..m).fold(Polynomial::zero(m), |acc, v| acc + Polynomial::var(m, v));
    WeilHom::new(source, target, vec![sum])
}

fn coordinate_hom(source: &Arc<WeilAlgebra>, target: &Arc<WeilAlgebra>) -> Result<WeilHom> {
    let n = target.nvars();
    let images = (0..source.nvars()).map(|v| Polynomial::var(n, v)).collect();
    WeilHom::new(source.clone(), target.clone(), images)
}

fn check(report: &mut Report, name: String, r: Result<()>) {
    report.record(name, r.err().map(|e| e.to_string()));
}

/// Identity-on-coordinates inclusions between pure-power objects over
/// the grid `m, n <= 4`, plus the reverse inclusion as a negative control.
pub fn check_inclusions() -> Report {
    let mut report = Report::new();
    let pm = |m: usize, n: u32| InfObject::PowerM { m, n };
    for m in 1..=4usize {
        for n in 1..=4u32 {
            let r = InfMap::injection(pm(m, n), pm(m, n + 1), &(1..=m).collect::<Vec<_>>()).map(|_| ());
            check(&mut report, format!("D({m})_{n} in D({m})_{}", n + 1), r);
            let rev = InfMap::injection(pm(m, n + 1), pm(m, n), &(1..=m).collect::<Vec<_>>());
            let r = match rev {
                Err(Error::IllDefined(_)) => Ok(()),
                Err(e) => Err(e),
                Ok(_) => Err(Error::Precondition("reverse inclusion accepted".into())),
            };
            check(&mut report, format!("D({m})_{} not in D({m})_{n}", n + 1), r);
        }
    }
    for n in 0..=4u32 {
        let r = (|| {
            let a = pm(1, n).algebra()?;
            let b = InfObject::Power(n).algebra()?;
            if *a != *b {
                return Err(Error::AlgebraMismatch);
            }
            let there = coordinate_hom(&a, &b)?;
            let back = coordinate_hom(&b, &a)?;
            if there.then(&back)? != WeilHom::identity(a.clone()) {
                return Err(Error::Precondition("not mutually inverse".into()));
            }
            Ok(())
        })();
        check(&mut report, format!("D(1)_{n} = D_{n}"), r);
    }
    for m1 in 1..=3usize {
        for m2 in 1..=(4 - m1) {
            for n in 1..=4u32 {
                let r = (|| {
                    let prod = tensor(&*pm(m1, n).algebra()?, &*pm(m2, 1).algebra()?);
                    coordinate_hom(&pm(m1 + m2, n + 1).algebra()?, &prod).map(|_| ())
                })();
                check(&mut report, format!("D({m1})_{n} x D({m2})_1 in D({})_{}", m1 + m2, n + 1), r);
                let r = (|| {
                    let prod = tensor(&*pm(m1, n).algebra()?, &*pm(m2, n).algebra()?);
                    coordinate_hom(&prod, &pm(m1 + m2, n).algebra()?).map(|_| ())
                })();
                check(&mut report, format!("D({})_{n} in D({m1})_{n} x D({m2})_{n}", m1 + m2), r);
            }
        }
    }
    report
}
