//! Quasi-colimit representations by basic objects `D^k`.

use serde_json::{json, Value};

use super::{limit_subspace, Cone, LimitVerdict, WeilDiagram};
use crate::error::{Error, Result};
use crate::infinitesimal::{InfMap, InfObject};
use crate::poly::format_poly;

/// Largest target degree for the standard construction.
pub const QCR_DEGREE_CAP: usize = 8;
/// Largest total dimension of the product space we are willing to cut.
pub const QCR_SIZE_CAP: usize = 4096;

/// A basic object mapped into the target.
#[derive(Clone, Debug)]
pub struct Piece {
    /// Target coordinates hit, for coordinate injections.
    pub coords: Vec<usize>,
    pub map: InfMap,
}

/// A basic object mapped into two pieces.
#[derive(Clone, Debug)]
pub struct Overlap {
    pub pieces: (usize, usize),
    pub coords: Vec<usize>,
    pub left: InfMap,
    pub right: InfMap,
}

#[derive(Clone, Debug)]
pub struct QCRepresentation {
    pub target: InfObject,
    pub pieces: Vec<Piece>,
    pub overlaps: Vec<Overlap>,
}

fn positions(within: &[usize], of: &[usize]) -> Vec<usize> {
    of.iter().map(|c| within.iter().position(|x| x == c).unwrap() + 1).collect()
}

impl QCRepresentation {
    /// Pieces injected at the given coordinate sets, overlapping pairwise
    /// on their common coordinates.
    pub fn from_coordinate_sets(target: InfObject, sets: &[Vec<usize>]) -> Result<Self> {
        let pieces = sets
            .iter()
            .map(|c| {
                let map = InfMap::injection(InfObject::Basic(c.len()), target.clone(), c)?;
                Ok(Piece { coords: c.clone(), map })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut overlaps = Vec::new();
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                let common: Vec<usize> = sets[a].iter().filter(|c| sets[b].contains(c)).copied().collect();
                let src = InfObject::Basic(common.len());
                let left =
                    InfMap::injection(src.clone(), InfObject::Basic(sets[a].len()), &positions(&sets[a], &common))?;
                let right = InfMap::injection(src, InfObject::Basic(sets[b].len()), &positions(&sets[b], &common))?;
                overlaps.push(Overlap { pieces: (a, b), coords: common, left, right });
            }
        }
        Ok(QCRepresentation { target, pieces, overlaps })
    }

    /// Drops a piece together with every overlap touching it.
    pub fn without_piece(&self, i: usize) -> Self {
        let shift = |k: usize| if k > i { k - 1 } else { k };
        let pieces = self.pieces.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
        let overlaps = self
            .overlaps
            .iter()
            .filter(|o| o.pieces.0 != i && o.pieces.1 != i)
            .map(|o| Overlap { pieces: (shift(o.pieces.0), shift(o.pieces.1)), ..o.clone() })
            .collect();
        QCRepresentation { target: self.target.clone(), pieces, overlaps }
    }

    fn product_size(&self) -> Result<usize> {
        let mut total = 0;
        for p in &self.pieces {
            total += p.map.hom().target().dim();
        }
        for o in &self.overlaps {
            total += o.left.hom().target().dim();
        }
        Ok(total)
    }

    /// Dual diagram (pieces, then overlaps) with the cone from the target.
    pub fn dual(&self) -> Result<(WeilDiagram, Cone)> {
        let size = self.product_size()?;
        if size > QCR_SIZE_CAP {
            return Err(Error::CapExceeded { what: "product dimension".into(), value: size, cap: QCR_SIZE_CAP });
        }
        let mut objects: Vec<_> = self.pieces.iter().map(|p| p.map.hom().target().clone()).collect();
        objects.extend(self.overlaps.iter().map(|o| o.left.hom().target().clone()));
        let mut d = WeilDiagram::new(objects);
        let mut legs: Vec<_> = self.pieces.iter().map(|p| p.map.hom().clone()).collect();
        let np = self.pieces.len();
        for (k, o) in self.overlaps.iter().enumerate() {
            d.add_arrow(o.pieces.0, np + k, o.left.hom().clone())?;
            d.add_arrow(o.pieces.1, np + k, o.right.hom().clone())?;
            legs.push(legs[o.pieces.0].then(o.left.hom())?);
        }
        let apex = self.target.algebra()?;
        Ok((d, Cone::new(apex, legs)?))
    }

    pub fn to_json(&self) -> Value {
        let comps = |m: &InfMap| -> Vec<String> {
            let names: Vec<String> = (1..=m.source().degree()).map(|i| format!("d{i}")).collect();
            m.components().iter().map(|c| format_poly(c, &names)).collect()
        };
        json!({
            "target": self.target.to_string(),
            "pieces": self.pieces.iter().map(|p| json!({
                "object": p.map.source().to_string(),
                "coords": p.coords,
                "injection": comps(&p.map),
            })).collect::<Vec<_>>(),
            "overlaps": self.overlaps.iter().map(|o| json!({
                "object": o.left.source().to_string(),
                "pieces": [o.pieces.0 + 1, o.pieces.1 + 1],
                "coords": o.coords,
                "into_first": comps(&o.left),
                "into_second": comps(&o.right),
            })).collect::<Vec<_>>(),
        })
    }

    /// Plain-text picture of the representation.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.target);
        let list = |c: &[usize]| c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        for (k, p) in self.pieces.iter().enumerate() {
            out += &format!("  P{} = {} --({})--> {}\n", k + 1, p.map.source(), list(&p.coords), self.target);
        }
        for o in &self.overlaps {
            let (a, b) = o.pieces;
            out += &format!(
                "  P{} <--{}-- {} --{}--> P{}   common ({})\n",
                a + 1,
                describe(&o.left),
                o.left.source(),
                describe(&o.right),
                b + 1,
                list(&o.coords)
            );
        }
        out
    }
}

fn describe(m: &InfMap) -> String {
    let names: Vec<String> = (1..=m.source().degree()).map(|i| format!("d{i}")).collect();
    let parts: Vec<String> = m.components().iter().map(|c| format_poly(c, &names)).collect();
    format!("({})", parts.join(","))
}

/// Certifies a representation through its dual diagram.
pub fn verify_qcr(rep: &QCRepresentation) -> Result<LimitVerdict> {
    let (d, c) = rep.dual()?;
    limit_subspace(&d, &c)
}

/// Like [`verify_qcr`] for a hand-built representation of `target`; every
/// map into the target must be a monomial mapping.
pub fn verify_nonstandard_qcr(target: &InfObject, rep: &QCRepresentation) -> Result<LimitVerdict> {
    if rep.target != *target {
        return Err(Error::Precondition(format!("representation is of {}, not {}", rep.target, target)));
    }
    if let Some(k) = rep.pieces.iter().position(|p| !p.map.is_monomial()) {
        return Err(Error::Precondition(format!("piece {} does not map in monomially", k + 1)));
    }
    verify_qcr(rep)
}

/// The standard representation: one `D^k` per maximal S-free index set,
/// overlapping on common subsets. Certified before it is returned.
pub fn standard_qcr(obj: &InfObject) -> Result<(QCRepresentation, LimitVerdict)> {
    if obj.degree() > QCR_DEGREE_CAP {
        return Err(Error::CapExceeded { what: "degree".into(), value: obj.degree(), cap: QCR_DEGREE_CAP });
    }
    let sets = obj.maximal_free_sets()?;
    let rep = QCRepresentation::from_coordinate_sets(obj.clone(), &sets)?;
    let verdict = verify_qcr(&rep)?;
    if !verdict.is_limit {
        return Err(Error::Inconsistent(format!("standard representation of {obj} failed certification")));
    }
    Ok((rep, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> InfObject {
        s.parse().unwrap()
    }

    #[test]
    fn fat_three_two() {
        let (rep, v) = standard_qcr(&p("D{3}_2")).unwrap();
        assert!(v.is_limit);
        let coords: Vec<_> = rep.pieces.iter().map(|x| x.coords.clone()).collect();
        assert_eq!(coords, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(rep.pieces.iter().all(|x| x.map.source() == &InfObject::Basic(2)));
        assert_eq!(rep.overlaps.len(), 3);
        assert!(rep.overlaps.iter().all(|o| o.left.source() == &InfObject::Basic(1)));
        // P1 and P2 share coordinate 1: first slot of both.
        assert_eq!(rep.overlaps[0].coords, vec![1]);
        assert_eq!(describe(&rep.overlaps[0].left), "(d1,0)");
        // P2 = (1,3) and P3 = (2,3) share coordinate 3: second slot of both.
        assert_eq!(describe(&rep.overlaps[2].right), "(0,d1)");
    }

    #[test]
    fn trivial_and_first_order() {
        let (rep, _) = standard_qcr(&p("D^3")).unwrap();
        assert_eq!(rep.pieces.len(), 1);
        assert!(rep.overlaps.is_empty());
        let (rep, _) = standard_qcr(&p("D(2)")).unwrap();
        assert_eq!(rep.pieces.len(), 2);
        assert_eq!(rep.overlaps.len(), 1);
        assert_eq!(rep.overlaps[0].left.source(), &InfObject::Basic(0));
    }

    #[test]
    fn deleting_a_piece_breaks_it() {
        let (rep, _) = standard_qcr(&p("D{3}_2")).unwrap();
        let v = verify_qcr(&rep.without_piece(0)).unwrap();
        assert!(!v.is_limit);
        assert!(v.certificate.is_some());
    }

    #[test]
    fn redundant_piece_is_still_a_limit() {
        let t = p("D{3;(1,3),(2,3)}");
        let rep = QCRepresentation::from_coordinate_sets(t.clone(), &[vec![1, 2], vec![3], vec![1]]).unwrap();
        assert!(verify_nonstandard_qcr(&t, &rep).unwrap().is_limit);
        assert!(verify_nonstandard_qcr(&p("D^3"), &rep).is_err());
    }

    #[test]
    fn caps() {
        assert!(matches!(standard_qcr(&InfObject::Basic(9)), Err(Error::CapExceeded { .. })));
    }
}
