//! Towers of 1-tangentials. Level `k` is a linear map from tangents of the
//! base to tangents of the level `k - 1` total space, stored as a matrix
//! `A_k` with `F_(k-1)` rows and `m` columns, where `F_0 = e` and
//! `F_k = F_(k-1) (1 + m)`. The fiber point at level `k` is
//! `(y, A_1, .., A_k)` flattened row-major.

use std::fmt;

use super::check::check_pseudo;
use super::ring::{embed, extract};
use super::{Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::infinitesimal::InfObject;
use crate::poly::{format_poly, Monomial, MonomialIdeal, Polynomial};
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::report::Report;

/// Largest tower depth the checker and `phi` accept.
pub const TOWER_CAP: usize = 3;

/// Where a tower lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TowerClass {
    NonHolonomic,
    SemiHolonomic,
    Holonomic,
}

impl fmt::Display for TowerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerClass::NonHolonomic => "non-holonomic",
            TowerClass::SemiHolonomic => "semi-holonomic",
            TowerClass::Holonomic => "holonomic",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FirstApproachTower {
    m: usize,
    params: Vec<String>,
    base: Vec<Polynomial>,
    fiber: Vec<Polynomial>,
    levels: Vec<Vec<Vec<Polynomial>>>,
}

/// Coordinate pairs forced equal on the level-`k` fiber point.
type Pairs = Vec<(usize, usize)>;

impl FirstApproachTower {
    pub fn new(
        m: usize,
        params: Vec<String>,
        base: Vec<Polynomial>,
        fiber: Vec<Polynomial>,
        levels: Vec<Vec<Vec<Polynomial>>>,
    ) -> Result<Self> {
        let p = params.len();
        if base.len() != m {
            return Err(Error::Arity { expected: m, got: base.len() });
        }
        if let Some(q) = base.iter().chain(&fiber).find(|q| q.nvars() != p) {
            return Err(Error::VarCount(p, q.nvars()));
        }
        let mut rows = fiber.len();
        for level in &levels {
            if level.len() != rows {
                return Err(Error::Arity { expected: rows, got: level.len() });
            }
            for row in level {
                if row.len() != m {
                    return Err(Error::Arity { expected: m, got: row.len() });
                }
                if let Some(q) = row.iter().find(|q| q.nvars() != p) {
                    return Err(Error::VarCount(p, q.nvars()));
                }
            }
            rows *= 1 + m;
        }
        Ok(FirstApproachTower { m, params, base, fiber, levels })
    }

    pub fn base_dim(&self) -> usize {
        self.m
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber.len()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
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

    /// `A_k`, for `1 <= k <= depth`.
    pub fn level(&self, k: usize) -> Result<&[Vec<Polynomial>]> {
        if k == 0 || k > self.depth() {
            return Err(Error::IndexOutOfRange { index: k, max: self.depth() });
        }
        Ok(&self.levels[k - 1])
    }

    pub fn levels(&self) -> &[Vec<Vec<Polynomial>>] {
        &self.levels
    }

    /// `F_k`.
    pub fn fiber_size(&self, k: usize) -> usize {
        self.fiber.len() * (1 + self.m).pow(k as u32)
    }

    /// The level-`k` fiber point `(y, A_1, .., A_k)`.
    pub fn point(&self, k: usize) -> Vec<Polynomial> {
        let mut out = self.fiber.clone();
        for level in &self.levels[..k] {
            out.extend(level.iter().flatten().cloned());
        }
        out
    }

    /// The first `k` levels.
    pub fn truncated(&self, k: usize) -> Result<Self> {
        if k > self.depth() {
            return Err(Error::IndexOutOfRange { index: k, max: self.depth() });
        }
        Ok(FirstApproachTower { levels: self.levels[..k].to_vec(), ..self.clone() })
    }

    /// Adds `delta` to entry `(row, col)` of `A_k`.
    pub fn perturbed(&self, k: usize, row: usize, col: usize, delta: &Polynomial) -> Result<Self> {
        let rows = self.level(k)?.len();
        if row >= rows || col >= self.m {
            return Err(Error::IndexOutOfRange { index: row.max(col), max: rows.max(self.m) - 1 });
        }
        let mut out = self.clone();
        let slot = &mut out.levels[k - 1][row][col];
        *slot = slot.checked_add(delta)?;
        Ok(out)
    }

    /// Level `k` as a 1-tangential over `R^m x R^(F_(k-1))` at the level
    /// `k - 1` point.
    pub fn level_candidate(&self, k: usize) -> Result<JetCandidate> {
        let a = self.level(k)?;
        let p = self.params.len();
        let n = p + self.m;
        let body = a
            .iter()
            .map(|row| {
                let mut q = Polynomial::zero(n);
                for (j, c) in row.iter().enumerate() {
                    q = &q + &(&c.extend(n) * &Polynomial::var(n, p + j));
                }
                vec![q]
            })
            .collect();
        JetCandidate::new(
            Approach::Second(1),
            CoordSpace::bundle(self.m, self.fiber_size(k - 1)),
            self.params.clone(),
            self.base.clone(),
            self.point(k - 1),
            body,
        )
    }

    /// Coordinate equalities cutting the semi-holonomic (or holonomic)
    /// level-`k` space out of the non-holonomic one.
    fn constraints(&self, k: usize, holonomic: bool) -> Pairs {
        if k < 2 {
            return Vec::new();
        }
        let m = self.m;
        let (f1, f2) = (self.fiber_size(k - 1), self.fiber_size(k - 2));
        let mut out = self.constraints(k - 1, holonomic);
        for (a, b) in self.related_pairs(k) {
            out.push((f1 + a, b));
        }
        for (a, b) in self.tangent_pairs(k, holonomic) {
            out.push((f1 + a, f1 + b));
        }
        if holonomic {
            for f in 0..f2 {
                for i in 0..m {
                    for j in i + 1..m {
                        out.push((f1 + (f2 + f * m + i) * m + j, f1 + (f2 + f * m + j) * m + i));
                    }
                }
            }
        }
        out
    }

    /// `A_k` entry against the level `k - 1` coordinate it must equal.
    /// Indices are row-major into `A_k` and into the level `k - 1` point.
    fn related_pairs(&self, k: usize) -> Pairs {
        let m = self.m;
        let f2 = self.fiber_size(k - 2);
        (0..f2).flat_map(|r| (0..m).map(move |l| (r * m + l, f2 + r * m + l))).collect()
    }

    /// Pairs of `A_k` entries equal because the image of `A_k` must be
    /// tangent to the constrained level `k - 1` space.
    fn tangent_pairs(&self, k: usize, holonomic: bool) -> Pairs {
        let m = self.m;
        self.constraints(k - 1, holonomic)
            .into_iter()
            .flat_map(|(a, b)| (0..m).map(move |l| (a * m + l, b * m + l)))
            .collect()
    }

    fn entry_of(&self, k: usize, idx: usize) -> &Polynomial {
        &self.levels[k - 1][idx / self.m][idx % self.m]
    }

    fn pair_witness(&self, k: usize, pairs: &[(usize, usize)], rhs_in_point: bool) -> Option<String> {
        let point = self.point(k - 1);
        for &(a, b) in pairs {
            let lhs = self.entry_of(k, a);
            let rhs = if rhs_in_point { &point[b] } else { self.entry_of(k, b) };
            if lhs != rhs {
                let (r, c) = (a / self.m, a % self.m);
                return Some(format!(
                    "A_{k}[{}][{}] = {}, expected {}",
                    r + 1,
                    c + 1,
                    format_poly(lhs, &self.params),
                    format_poly(rhs, &self.params)
                ));
            }
        }
        None
    }

    /// The two composites from `W(D^2)` points to level `k - 2` points
    /// built from `A_k`, on `a X1 + b X2 + c X1 X2`.
    fn composite_witness(&self, k: usize) -> Option<String> {
        let (m, p) = (self.m, self.params.len());
        let n = p + 3 * m + 2;
        let (x1, x2) = (n - 2, n - 1);
        let ideal = MonomialIdeal::new([Monomial::var_pow(x1, 2), Monomial::var_pow(x2, 2)]);
        let a: Vec<Polynomial> = (0..m).map(|i| Polynomial::var(n, p + i)).collect();
        let b: Vec<Polynomial> = (0..m).map(|i| Polynomial::var(n, p + m + i)).collect();
        let c: Vec<Polynomial> = (0..m).map(|i| Polynomial::var(n, p + 2 * m + i)).collect();
        let vx1 = Polynomial::var(n, x1);
        let vx2 = Polynomial::var(n, x2);
        let ak = &self.levels[k - 1];
        let point = self.point(k - 1);
        let f2 = self.fiber_size(k - 2);
        let run = |u: &[Polynomial], w: &[Polynomial]| -> Vec<Polynomial> {
            // Level k - 1 point moved along X2 by A_k u.
            let moved: Vec<Polynomial> = ak
                .iter()
                .zip(&point)
                .map(|(row, x)| {
                    let mut d = Polynomial::zero(n);
                    for (q, uj) in row.iter().zip(u) {
                        d = &d + &(&q.extend(n) * uj);
                    }
                    &x.extend(n) + &(&vx2 * &d)
                })
                .collect();
            (0..f2)
                .map(|f| {
                    let mut t = Polynomial::zero(n);
                    for (i, wi) in w.iter().enumerate() {
                        t = &t + &moved[f2 + f * m + i].mul_mod(wi, &ideal);
                    }
                    (&moved[f] + &vx1.mul_mod(&t, &ideal)).normal_form(&ideal)
                })
                .collect()
        };
        let w1: Vec<Polynomial> = b.iter().zip(&c).map(|(bi, ci)| bi + &(ci * &vx2)).collect();
        let w2: Vec<Polynomial> = a.iter().zip(&c).map(|(ai, ci)| ai + &(ci * &vx2)).collect();
        let lhs = run(&a, &w1);
        let swap = |v: usize| {
            if v == x1 {
                x2
            } else if v == x2 {
                x1
            } else {
                v
            }
        };
        let rhs: Vec<Polynomial> = run(&b, &w2).iter().map(|q| q.map_vars(n, swap)).collect();
        let mut names = self.params.clone();
        for tag in ["a", "b", "c"] {
            names.extend((1..=m).map(|i| format!("{tag}{i}")));
        }
        names.extend(["X1".to_string(), "X2".to_string()]);
        lhs.iter().zip(&rhs).enumerate().find(|(_, (l, r))| l != r).map(|(f, (l, r))| {
            format!("coordinate {}: {} vs {}", f + 1, format_poly(l, &names), format_poly(r, &names))
        })
    }

    /// Every level's 1-tangential conditions, relatedness and tangency
    /// from level 2 on, and the holonomy composites.
    pub fn check(&self) -> Result<(Report, TowerClass)> {
        if self.depth() > TOWER_CAP {
            return Err(Error::CapExceeded { what: "tower depth".into(), value: self.depth(), cap: TOWER_CAP });
        }
        let mut report = Report::new();
        let mut semi = true;
        let mut holo = true;
        for k in 1..=self.depth() {
            report.absorb(&format!("level {k}: "), check_pseudo(&self.level_candidate(k)?)?);
            if k < 2 {
                continue;
            }
            let w = self.pair_witness(k, &self.related_pairs(k), true);
            semi &= w.is_none();
            report.record(format!("level {k}: related to level {}", k - 1), w);
            let tangent = self.tangent_pairs(k, false);
            if !tangent.is_empty() {
                let w = self.pair_witness(k, &tangent, false);
                semi &= w.is_none();
                report.record(format!("level {k}: tangent to semi-holonomic level {}", k - 1), w);
            }
            let w = self.composite_witness(k);
            holo &= w.is_none();
            report.record(format!("level {k}: composites agree"), w);
            let extra: Pairs = self.tangent_pairs(k, true).into_iter().filter(|q| !tangent.contains(q)).collect();
            if !extra.is_empty() {
                let w = self.pair_witness(k, &extra, false);
                holo &= w.is_none();
                report.record(format!("level {k}: tangent to holonomic level {}", k - 1), w);
            }
        }
        let class = match (semi, holo) {
            (false, _) => TowerClass::NonHolonomic,
            (true, false) => TowerClass::SemiHolonomic,
            (true, true) => TowerClass::Holonomic,
        };
        Ok((report, class))
    }

    pub fn classify(&self) -> Result<TowerClass> {
        Ok(self.check()?.1)
    }

    /// The `D^n` candidate of a holonomic tower, `n <= depth`.
    pub fn phi(&self, n: usize) -> Result<JetCandidate> {
        let t = self.truncated(n)?;
        let class = t.classify()?;
        if class != TowerClass::Holonomic {
            return Err(Error::Precondition(format!("the tower is {class} through level {n}")));
        }
        self.phi_raw(n)
    }

    /// Same construction with no holonomy check. The input coordinate along
    /// `X_j` moves the level `j - 1` point by `A_j`, innermost last, so the
    /// output only reads each level at points already moved by the outer
    /// coordinates.
    pub fn phi_raw(&self, n: usize) -> Result<JetCandidate> {
        if n > self.depth() {
            return Err(Error::IndexOutOfRange { index: n, max: self.depth() });
        }
        let (m, e) = (self.m, self.fiber.len());
        let alg = InfObject::Basic(n).algebra()?;
        JetCandidate::derive(
            Approach::Second(n),
            CoordSpace::bundle(m, e),
            self.params.clone(),
            self.base.clone(),
            self.fiber.clone(),
            |g| {
                let nv = super::ring::coeff_vars(g).unwrap_or(self.params.len());
                let r = nv + n;
                let ideal = MonomialIdeal::new((0..n).map(|i| Monomial::var_pow(nv + i, 2)));
                let gamma: Vec<Polynomial> = g.components().iter().map(|c| embed(c, nv)).collect();
                let mut data: Vec<Polynomial> = self.point(n).iter().map(|q| q.extend(r)).collect();
                for j in (1..=n).rev() {
                    let xj = nv + j - 1;
                    let killed: Vec<usize> = (nv..xj).collect();
                    let v: Vec<Polynomial> = gamma
                        .iter()
                        .map(|q| {
                            q.kill_vars(&killed).split_by_var(xj).remove(&1).unwrap_or_else(|| Polynomial::zero(r))
                        })
                        .collect();
                    let f = self.fiber_size(j - 1);
                    let vx = Polynomial::var(r, xj);
                    data = (0..f)
                        .map(|row| {
                            let mut d = Polynomial::zero(r);
                            for (i, vi) in v.iter().enumerate() {
                                d = &d + &data[f + row * m + i].mul_mod(vi, &ideal);
                            }
                            (&data[row] + &vx.mul_mod(&d, &ideal)).normal_form(&ideal)
                        })
                        .collect();
                }
                let fiber = data.iter().map(|q| extract(q, nv, &alg)).collect::<Result<Vec<_>>>()?;
                ProlongedPoint::new(CoordSpace::plain(e), alg.clone(), fiber)
            },
        )
    }
}
