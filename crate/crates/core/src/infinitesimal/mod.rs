//! Simplicial infinitesimal objects and their dual Weil algebras.

mod maps;
mod simple;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialIdeal};
use crate::weil::WeilAlgebra;

pub use maps::{check_inclusions, plus_map, InfMap};
pub use simple::{all_simple_polynomials, SimplePolynomial};

/// Largest degree accepted by the exhaustive dimension search.
pub const DIMENSION_CAP: usize = 20;

/// An infinitesimal object, remembered by the syntax it was written in.
///
/// Sequences in `Simplicial` are 1-based, strictly increasing, and kept
/// minimal: a sequence containing another member is dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InfObject {
    /// `D^m`; `D` is `D^1`.
    Basic(usize),
    /// `D_n`, one coordinate with `d^(n+1) = 0`.
    Power(u32),
    /// `D(m)_n`, all products of `n+1` coordinates vanish.
    PowerM { m: usize, n: u32 },
    /// `D(m)`, pairwise products vanish.
    FirstOrder(usize),
    /// `D{m}_n`, square-zero coordinates with all `(n+1)`-fold products zero.
    Fat { m: usize, n: usize },
    /// `D{m;S}`.
    Simplicial { m: usize, s: Vec<Vec<usize>> },
}

/// Drops sequences that contain another member, then sorts.
fn minimalize(mut s: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    s.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    s.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for q in s {
        if !kept.iter().any(|k| k.iter().all(|i| q.contains(i))) {
            kept.push(q);
        }
    }
    kept.sort();
    kept
}

fn subsets_of_size(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        go(1, m, k, &mut Vec::new(), &mut out);
    }
    out
}

fn mask(seq: &[usize]) -> u64 {
    seq.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
}

impl InfObject {
    /// Builds `D{m;S}`, validating and minimalizing `S`.
    pub fn simplicial(m: usize, s: Vec<Vec<usize>>) -> Result<InfObject> {
        for q in &s {
            if q.is_empty() {
                return Err(Error::Precondition("empty sequence in S".into()));
            }
            if q.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!("sequence {q:?} is not strictly increasing")));
            }
            if q[0] < 1 || *q.last().unwrap() > m {
                return Err(Error::IndexOutOfRange { index: *q.last().unwrap(), max: m });
            }
        }
        Ok(InfObject::Simplicial { m, s: minimalize(s) })
    }

    /// The degree: number of coordinates.
    pub fn degree(&self) -> usize {
        match *self {
            InfObject::Basic(m) | InfObject::FirstOrder(m) => m,
            InfObject::Power(_) => 1,
            InfObject::PowerM { m, .. } | InfObject::Fat { m, .. } | InfObject::Simplicial { m, .. } => m,
        }
    }

    /// The `(m, S)` description when the object is of the form `D{m;S}`.
    /// Pure-power objects qualify only for orders 0 and 1.
    pub fn as_simplicial(&self) -> Option<(usize, Vec<Vec<usize>>)> {
        match self {
            InfObject::Basic(m) => Some((*m, Vec::new())),
            InfObject::FirstOrder(m) => Some((*m, subsets_of_size(*m, 2))),
            InfObject::Fat { m, n } => Some((*m, subsets_of_size(*m, n + 1))),
            InfObject::Simplicial { m, s } => Some((*m, s.clone())),
            InfObject::Power(n) => Self::low_order(1, *n),
            InfObject::PowerM { m, n } => Self::low_order(*m, *n),
        }
    }

    fn low_order(m: usize, n: u32) -> Option<(usize, Vec<Vec<usize>>)> {
        match n {
            0 => Some((m, subsets_of_size(m, 1))),
            1 => Some((m, subsets_of_size(m, 2))),
            _ => None,
        }
    }

    /// True for `D{m;S}` shapes, false for `D_n` and `D(m)_n` with `n >= 2`.
    pub fn is_square_free(&self) -> bool {
        self.as_simplicial().is_some()
    }

    /// Dimension: longest S-free index set for `D{m;S}`; the order `n`
    /// for `D_n` and `D(m)_n`.
    pub fn dimension(&self) -> Result<usize> {
        match self.as_simplicial() {
            Some((m, s)) => Ok(max_free_size(m, &s)?),
            None => match *self {
                InfObject::Power(n) | InfObject::PowerM { n, .. } => Ok(n as usize),
                _ => unreachable!("square-free kinds handled above"),
            },
        }
    }

    /// Every maximal S-free index set, in lexicographic order.
    pub fn maximal_free_sets(&self) -> Result<Vec<Vec<usize>>> {
        let (m, s) =
            self.as_simplicial().ok_or_else(|| Error::Unsupported(format!("{self} is not of the form D{{m;S}}")))?;
        if m > DIMENSION_CAP {
            return Err(Error::CapExceeded { what: "degree".into(), value: m, cap: DIMENSION_CAP });
        }
        let masks: Vec<u64> = s.iter().map(|q| mask(q)).collect();
        let free = |x: u64| masks.iter().all(|&q| x & q != q);
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0u64..(1 << m) {
            if !free(x) {
                continue;
            }
            let maximal = (0..m).all(|i| x & (1 << i) != 0 || !free(x | 1 << i));
            if maximal {
                out.push((1..=m).filter(|i| x & (1 << (i - 1)) != 0).collect());
            }
        }
        out.sort();
        Ok(out)
    }

    /// Closed under all coordinate permutations.
    pub fn is_symmetric(&self) -> bool {
        let Some((m, s)) = self.as_simplicial() else {
            return true;
        };
        // Adjacent transpositions generate the symmetric group.
        (1..m).all(|i| {
            let mut t: Vec<Vec<usize>> = s
                .iter()
                .map(|q| {
                    let mut r: Vec<usize> = q
                        .iter()
                        .map(|&j| {
                            if j == i {
                                i + 1
                            } else if j == i + 1 {
                                i
                            } else {
                                j
                            }
                        })
                        .collect();
                    r.sort();
                    r
                })
                .collect();
            t.sort();
            t == s
        })
    }

    /// The dual Weil algebra.
    pub fn algebra(&self) -> Result<Arc<WeilAlgebra>> {
        let (nvars, gens): (usize, Vec<Monomial>) = match self.as_simplicial() {
            Some((m, s)) => {
                let mut g: Vec<Monomial> = (0..m).map(|v| Monomial::var_pow(v, 2)).collect();
                g.extend(s.iter().map(|q| Monomial::square_free(&q.iter().map(|i| i - 1).collect::<Vec<_>>())));
                (m, g)
            }
            None => match *self {
                InfObject::Power(n) => (1, vec![Monomial::var_pow(0, n + 1)]),
                InfObject::PowerM { m, n } => (m, monomials_of_degree(m, n + 1)),
                _ => unreachable!(),
            },
        };
        WeilAlgebra::new(nvars, MonomialIdeal::new(gens))
    }
}

fn monomials_of_degree(m: usize, d: u32) -> Vec<Monomial> {
    fn go(v: usize, m: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v + 1 == m {
            cur.push(left);
            out.push(Monomial::from_exponents(cur));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(v + 1, m, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(0, m, d, &mut Vec::new(), &mut out);
    }
    out
}

fn max_free_size(m: usize, s: &[Vec<usize>]) -> Result<usize> {
    if m > DIMENSION_CAP {
        return Err(Error::CapExceeded { what: "degree".into(), value: m, cap: DIMENSION_CAP });
    }
    let masks: Vec<u64> = s.iter().map(|q| mask(q)).collect();
    let mut best = 0;
    for x in 0u64..(1 << m) {
        let size = x.count_ones() as usize;
        if size > best && masks.iter().all(|&q| x & q != q) {
            best = size;
        }
    }
    Ok(best)
}

impl fmt::Display for InfObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfObject::Basic(1) => write!(f, "D"),
            InfObject::Basic(m) => write!(f, "D^{m}"),
            InfObject::Power(n) => write!(f, "D_{n}"),
            InfObject::PowerM { m, n } => write!(f, "D({m})_{n}"),
            InfObject::FirstOrder(m) => write!(f, "D({m})"),
            InfObject::Fat { m, n } => write!(f, "D{{{m}}}_{n}"),
            InfObject::Simplicial { m, s } => {
                let seqs: Vec<String> = s
                    .iter()
                    .map(|q| {
                        let parts: Vec<String> = q.iter().map(|i| i.to_string()).collect();
                        format!("({})", parts.join(","))
                    })
                    .collect();
                write!(f, "D{{{m};{}}}", seqs.join(","))
            }
        }
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })
    }

    fn seqs(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        if self.peek() != Some(b'(') {
            return Ok(out);
        }
        loop {
            self.expect(b'(')?;
            let mut q = vec![self.int()?];
            while self.eat(b',') {
                q.push(self.int()?);
            }
            self.expect(b')')?;
            out.push(q);
            if !self.eat(b',') {
                return Ok(out);
            }
        }
    }
}

fn small(n: usize, pos: usize) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Parse { pos, msg: "order too large".into() })
}

impl FromStr for InfObject {
    type Err = Error;

    fn from_str(text: &str) -> Result<InfObject> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('∅', "");
        let mut c = Cursor { s: cleaned.as_bytes(), pos: 0 };
        c.expect(b'D')?;
        let obj = match c.peek() {
            None => InfObject::Basic(1),
            Some(b'^') => {
                c.pos += 1;
                InfObject::Basic(c.int()?)
            }
            Some(b'_') => {
                c.pos += 1;
                let p = c.pos;
                InfObject::Power(small(c.int()?, p)?)
            }
            Some(b'(') => {
                c.pos += 1;
                let m = c.int()?;
                c.expect(b')')?;
                if c.eat(b'_') {
                    let p = c.pos;
                    InfObject::PowerM { m, n: small(c.int()?, p)? }
                } else {
                    InfObject::FirstOrder(m)
                }
            }
            Some(b'{') => {
                c.pos += 1;
                let m = c.int()?;
                if c.eat(b';') {
                    let at = c.pos;
                    let s = c.seqs()?;
                    c.expect(b'}')?;
                    InfObject::simplicial(m, s).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?
                } else {
                    c.expect(b'}')?;
                    c.expect(b'_')?;
                    InfObject::Fat { m, n: c.int()? }
                }
            }
            Some(_) => return Err(c.err("expected one of ^ _ ( {")),
        };
        if c.pos != c.s.len() {
            return Err(c.err("trailing input"));
        }
        Ok(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> InfObject {
        s.parse().unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(p("D(3)").degree(), 3);
        assert_eq!(p("D^0").degree(), 0);
        assert_eq!(p("D{3;(1,2)}").degree(), 3);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(p("D(3)").dimension().unwrap(), 1);
        assert_eq!(p("D{3;(1,2),(1,3),(2,3)}").dimension().unwrap(), 1);
        assert_eq!(p("D{3;(1,2)}").dimension().unwrap(), 2);
        assert_eq!(p("D^3").dimension().unwrap(), 3);
        assert_eq!(p("D{3;}").dimension().unwrap(), 3);
        assert_eq!(p("D_4").dimension().unwrap(), 4);
        assert_eq!(p("D(2)_3").dimension().unwrap(), 3);
        assert_eq!(p("D{3}_2").dimension().unwrap(), 2);
        assert!(matches!(InfObject::Basic(21).dimension(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn symmetry_examples() {
        assert!(p("D(3)").is_symmetric());
        assert!(!p("D{3;(1,2)}").is_symmetric());
        assert!(p("D{4;}").is_symmetric());
        assert!(p("D{3;(1,2),(1,3),(2,3)}").is_symmetric());
        assert!(!p("D{3;(1,3),(2,3)}").is_symmetric());
    }

    #[test]
    fn round_trip() {
        for s in ["D", "D^3", "D_2", "D(3)_2", "D{3}_2", "D(3)", "D{3;(1,2),(1,3)}", "D{2;}", "D^0"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("D^1"), InfObject::Basic(1));
        assert_eq!(p("D{3;(1,2),(1,2,3)}"), p("D{3;(1,2)}"));
    }

    #[test]
    fn parse_errors() {
        for s in ["", "E", "D{3;(2,1)}", "D{3;(1,4)}", "D{3;()}", "D^", "D_2x", "D{3}"] {
            assert!(s.parse::<InfObject>().is_err(), "{s}");
        }
    }

    #[test]
    fn algebras() {
        assert_eq!(p("D{3}_2").algebra().unwrap().dim(), 7);
        assert_eq!(p("D_2").algebra().unwrap().dim(), 3);
        assert_eq!(p("D(2)_2").algebra().unwrap().dim(), 6);
        assert_eq!(p("D(3)").algebra().unwrap().dim(), 4);
        assert_eq!(p("D^0").algebra().unwrap().dim(), 1);
        assert_eq!(p("D_0").algebra().unwrap().dim(), 1);
        assert_eq!(*p("D(2)_1").algebra().unwrap(), *p("D(2)").algebra().unwrap());
    }

    #[test]
    fn maximal_free_sets_of_fat_object() {
        let sets = p("D{3}_2").maximal_free_sets().unwrap();
        assert_eq!(sets, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let sets = p("D{3;(1,3),(2,3)}").maximal_free_sets().unwrap();
        assert_eq!(sets, vec![vec![1, 2], vec![3]]);
    }
}
