//! Finite diagrams of Weil algebras and exact limit certification.

mod diagrams;
mod qcr;

use std::sync::Arc;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::poly::{format_rat, Rat};
use crate::weil::{WeilAlgebra, WeilHom};

pub use diagrams::{drop_last_equalizer, product_equalizer, symmetric_limit, symmetric_multifork};
pub use qcr::{standard_qcr, verify_nonstandard_qcr, verify_qcr, Overlap, Piece, QCRepresentation};

/// Objects plus arrows `(source, target, hom)` between them.
#[derive(Clone, Debug)]
pub struct WeilDiagram {
    objects: Vec<Arc<WeilAlgebra>>,
    arrows: Vec<(usize, usize, WeilHom)>,
}

impl WeilDiagram {
    pub fn new(objects: Vec<Arc<WeilAlgebra>>) -> Self {
        WeilDiagram { objects, arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, source: usize, target: usize, hom: WeilHom) -> Result<()> {
        let n = self.objects.len();
        for i in [source, target] {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
            }
        }
        if **hom.source() != *self.objects[source] || **hom.target() != *self.objects[target] {
            return Err(Error::AlgebraMismatch);
        }
        self.arrows.push((source, target, hom));
        Ok(())
    }

    pub fn objects(&self) -> &[Arc<WeilAlgebra>] {
        &self.objects
    }

    pub fn arrows(&self) -> &[(usize, usize, WeilHom)] {
        &self.arrows
    }

    /// Reorders objects: new position `k` holds old object `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0; perm.len()];
        for (k, &old) in perm.iter().enumerate() {
            inv[old] = k;
        }
        WeilDiagram {
            objects: perm.iter().map(|&i| self.objects[i].clone()).collect(),
            arrows: self.arrows.iter().map(|(s, t, h)| (inv[*s], inv[*t], h.clone())).collect(),
        }
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.objects.len() + 1);
        let mut acc = 0;
        off.push(0);
        for o in &self.objects {
            acc += o.dim();
            off.push(acc);
        }
        off
    }

    /// Rows cutting the equalizer subspace out of the product of all objects.
    pub fn constraint_matrix(&self) -> (Matrix, usize) {
        let off = self.offsets();
        let total = *off.last().unwrap();
        let mut rows = Vec::new();
        for (s, t, h) in &self.arrows {
            let m = h.matrix();
            for (r, mrow) in m.iter().enumerate() {
                let mut row = vec![Rat::zero(); total];
                for (c, x) in mrow.iter().enumerate() {
                    row[off[*s] + c] += x;
                }
                row[off[*t] + r] -= Rat::from_integer(1.into());
                rows.push(row);
            }
        }
        (rows, total)
    }

    /// Dimension of the equalizer subspace.
    pub fn limit_dim(&self) -> usize {
        let (c, total) = self.constraint_matrix();
        total - linalg::rank(&c)
    }
}

/// An apex with one leg into each object of a diagram.
#[derive(Clone, Debug)]
pub struct Cone {
    pub apex: Arc<WeilAlgebra>,
    pub legs: Vec<WeilHom>,
}

impl Cone {
    pub fn new(apex: Arc<WeilAlgebra>, legs: Vec<WeilHom>) -> Result<Cone> {
        if let Some(l) = legs.iter().find(|l| **l.source() != *apex) {
            return Err(Error::DimensionMismatch(format!("leg from {} does not start at the apex", l.source())));
        }
        Ok(Cone { apex, legs })
    }

    pub fn permuted(&self, perm: &[usize]) -> Cone {
        Cone { apex: self.apex.clone(), legs: perm.iter().map(|&i| self.legs[i].clone()).collect() }
    }
}

/// Why a cone is not a limit.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// The cone does not commute with this arrow.
    NonCommuting { arrow: usize },
    /// A nonzero apex vector every leg kills.
    Kernel(Vec<Rat>),
    /// The legs miss part of the equalizer; `witness` lies in it but not in
    /// the image.
    Missing { missing: usize, witness: Vec<Rat> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitVerdict {
    pub is_limit: bool,
    pub apex_dim: usize,
    pub subspace_dim: usize,
    pub certificate: Option<Certificate>,
}

fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(format_rat(r))).collect())
}

impl LimitVerdict {
    pub fn to_json(&self) -> Value {
        let cert = match &self.certificate {
            None => Value::Null,
            Some(Certificate::NonCommuting { arrow }) => json!({"kind": "non-commuting", "arrow": arrow}),
            Some(Certificate::Kernel(v)) => json!({"kind": "kernel", "vector": rats(v)}),
            Some(Certificate::Missing { missing, witness }) => {
                json!({"kind": "missing", "missing": missing, "witness": rats(witness)})
            }
        };
        json!({
            "verdict": if self.is_limit { "LIMIT" } else { "NOT-LIMIT" },
            "apex_dim": self.apex_dim,
            "subspace_dim": self.subspace_dim,
            "certificate": cert,
        })
    }
}

/// Decides whether `cone` is a limit of `diagram`: the legs must commute
/// with every arrow and map the apex bijectively onto the equalizer.
pub fn limit_subspace(diagram: &WeilDiagram, cone: &Cone) -> Result<LimitVerdict> {
    if cone.legs.len() != diagram.objects.len() {
        return Err(Error::Arity { expected: diagram.objects.len(), got: cone.legs.len() });
    }
    for (leg, obj) in cone.legs.iter().zip(&diagram.objects) {
        if **leg.target() != **obj {
            return Err(Error::AlgebraMismatch);
        }
    }
    let apex_dim = cone.apex.dim();
    let subspace_dim = diagram.limit_dim();
    for (k, (s, t, h)) in diagram.arrows.iter().enumerate() {
        if cone.legs[*s].then(h)?.matrix() != cone.legs[*t].matrix() {
            return Ok(LimitVerdict {
                is_limit: false,
                apex_dim,
                subspace_dim,
                certificate: Some(Certificate::NonCommuting { arrow: k }),
            });
        }
    }
    // Canonical map apex -> product, legs stacked.
    let l: Matrix = cone.legs.iter().flat_map(|leg| leg.matrix()).collect();
    let kernel = linalg::nullspace(&l, apex_dim);
    if let Some(v) = kernel.into_iter().next() {
        return Ok(LimitVerdict { is_limit: false, apex_dim, subspace_dim, certificate: Some(Certificate::Kernel(v)) });
    }
    if subspace_dim != apex_dim {
        let (c, total) = diagram.constraint_matrix();
        let witness = linalg::nullspace(&c, total)
            .into_iter()
            .find(|v| {
                let mut aug: Matrix =
                    (0..total).map(|r| l[r].iter().cloned().chain([v[r].clone()]).collect()).collect();
                if aug.is_empty() {
                    aug.push(vec![]);
                }
                linalg::rank(&aug) > apex_dim
            })
            .expect("a larger subspace has a vector outside the image");
        return Ok(LimitVerdict {
            is_limit: false,
            apex_dim,
            subspace_dim,
            certificate: Some(Certificate::Missing { missing: subspace_dim - apex_dim, witness }),
        });
    }
    Ok(LimitVerdict { is_limit: true, apex_dim, subspace_dim, certificate: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinitesimal::InfObject;
    use crate::poly::Polynomial;

    #[test]
    fn product_of_two_copies_with_no_arrows_is_not_a_limit_of_one() {
        let d = InfObject::Basic(1).algebra().unwrap();
        let diagram = WeilDiagram::new(vec![d.clone(), d.clone()]);
        let id = WeilHom::identity(d.clone());
        let v = limit_subspace(&diagram, &Cone::new(d, vec![id.clone(), id]).unwrap()).unwrap();
        assert!(!v.is_limit);
        assert_eq!(v.subspace_dim, 4);
        assert!(matches!(v.certificate, Some(Certificate::Missing { missing: 2, .. })));
    }

    #[test]
    fn non_injective_cone_gives_kernel() {
        let d = InfObject::Basic(1).algebra().unwrap();
        let zero = WeilHom::new(d.clone(), d.clone(), vec![Polynomial::zero(1)]).unwrap();
        let diagram = WeilDiagram::new(vec![d.clone()]);
        let v = limit_subspace(&diagram, &Cone::new(d, vec![zero]).unwrap()).unwrap();
        assert!(matches!(v.certificate, Some(Certificate::Kernel(_))));
    }
}
