//! Concrete diagrams used by the jet constructions.

use std::sync::Arc;

use super::{Cone, WeilDiagram};
use crate::error::Result;
use crate::infinitesimal::InfObject;
use crate::poly::Polynomial;
use crate::weil::{tensor, WeilAlgebra, WeilHom};

fn basic(k: usize) -> Result<Arc<WeilAlgebra>> {
    InfObject::Basic(k).algebra()
}

fn power(n: u32) -> Result<Arc<WeilAlgebra>> {
    InfObject::Power(n).algebra()
}

fn vars(nvars: usize, which: &[usize]) -> Vec<Polynomial> {
    which.iter().map(|&v| Polynomial::var(nvars, v)).collect()
}

/// `W(D^n) -> W(D^(n+1))` (forget the last coordinate) equalizing the
/// identity and the map killing the last coordinate.
pub fn drop_last_equalizer(n: usize) -> Result<(WeilDiagram, Cone)> {
    let apex = basic(n)?;
    let big = basic(n + 1)?;
    let leg = WeilHom::new(apex.clone(), big.clone(), vars(n + 1, &(0..n).collect::<Vec<_>>()))?;
    let mut kill: Vec<Polynomial> = vars(n + 1, &(0..n).collect::<Vec<_>>());
    kill.push(Polynomial::zero(n + 1));
    let kill = WeilHom::new(big.clone(), big.clone(), kill)?;
    let mut d = WeilDiagram::new(vec![big.clone(), big.clone()]);
    d.add_arrow(0, 1, WeilHom::identity(big))?;
    d.add_arrow(0, 1, kill)?;
    let cone = Cone::new(apex, vec![leg.clone(), leg])?;
    Ok((d, cone))
}

/// `W(D_n) -> W(D_(n+1) x D_n)` via `(d1,d2) -> d1 d2`, equalizing
/// `(d1,d2,d3) -> (d1 d2, d3)` and `(d1,d2,d3) -> (d1, d2 d3)`.
pub fn product_equalizer(n: u32) -> Result<(WeilDiagram, Cone)> {
    let apex = power(n)?;
    let a = tensor(&*power(n + 1)?, &*power(n)?);
    let b = tensor(&tensor(&*power(n + 1)?, &*power(n + 1)?), &*power(n)?);
    let leg = WeilHom::new(apex.clone(), a.clone(), vec![&Polynomial::var(2, 0) * &Polynomial::var(2, 1)])?;
    let z = |v| Polynomial::var(3, v);
    let f = WeilHom::new(a.clone(), b.clone(), vec![&z(0) * &z(1), z(2)])?;
    let g = WeilHom::new(a.clone(), b.clone(), vec![z(0), &z(1) * &z(2)])?;
    let leg_b = leg.then(&f)?;
    let mut d = WeilDiagram::new(vec![a, b]);
    d.add_arrow(0, 1, f)?;
    d.add_arrow(0, 1, g)?;
    Ok((d, Cone::new(apex, vec![leg, leg_b])?))
}

fn transposition(n: usize, i: usize) -> Result<WeilHom> {
    let alg = basic(n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.swap(i, i + 1);
    WeilHom::new(alg.clone(), alg, vars(n, &order))
}

fn symmetric_diagram(n: usize, with_identity: bool) -> Result<(WeilDiagram, Cone)> {
    let obj = basic(n)?;
    let plus = crate::infinitesimal::plus_map(&InfObject::Basic(n))?;
    let mut d = WeilDiagram::new(vec![obj.clone(), obj.clone()]);
    if with_identity {
        d.add_arrow(0, 1, WeilHom::identity(obj.clone()))?;
    }
    for i in 0..n.saturating_sub(1) {
        d.add_arrow(0, 1, transposition(n, i)?)?;
    }
    Ok((d, Cone::new(plus.source().clone(), vec![plus.clone(), plus])?))
}

/// `W(D_n) -> W(D^n)` via the sum map, as the joint equalizer of the
/// identity and every adjacent transposition.
pub fn symmetric_limit(n: usize) -> Result<(WeilDiagram, Cone)> {
    symmetric_diagram(n, true)
}

/// The same fork with the transpositions alone. Without the identity
/// this does not cut out the symmetric part.
pub fn symmetric_multifork(n: usize) -> Result<(WeilDiagram, Cone)> {
    symmetric_diagram(n, false)
}

#[cfg(test)]
mod tests {
    use super::super::limit_subspace;
    use super::*;

    #[test]
    fn equalizers_are_limits() {
        for n in 0..=3 {
            let (d, c) = drop_last_equalizer(n).unwrap();
            assert!(limit_subspace(&d, &c).unwrap().is_limit, "drop last {n}");
        }
        for n in 1..=3 {
            let (d, c) = product_equalizer(n).unwrap();
            assert!(limit_subspace(&d, &c).unwrap().is_limit, "product {n}");
        }
        for n in 1..=4 {
            let (d, c) = symmetric_limit(n).unwrap();
            let v = limit_subspace(&d, &c).unwrap();
            assert!(v.is_limit, "symmetric {n}");
            assert_eq!(v.subspace_dim, n + 1);
        }
    }

    #[test]
    fn bare_multifork_is_not_a_limit() {
        let (d, c) = symmetric_multifork(2).unwrap();
        let v = limit_subspace(&d, &c).unwrap();
        assert!(!v.is_limit);
        assert_eq!(v.subspace_dim, 4);
    }
}
