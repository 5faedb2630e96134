use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, MonomialIdeal, Rat};
use crate::error::{Error, Result};

/// Sparse polynomial over the rationals in a declared number of variables.
/// Zero coefficients are never stored.
///
/// The arithmetic operators panic on a variable-count mismatch; the
/// `checked_*` methods report it as an error instead.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::term(nvars, Monomial::one(), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rat::from_integer(c.into()))
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        assert!(v < nvars, "variable X{} outside {} variables", v + 1, nvars);
        Self::term(nvars, Monomial::var(v), Rat::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: Rat) -> Self {
        assert!(m.var_bound() <= nvars, "monomial outside {nvars} variables");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(nvars: usize, m: Monomial) -> Self {
        Self::term(nvars, m, Rat::one())
    }

    /// Builds from terms, summing repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(nvars: usize, terms: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert!(m.var_bound() <= nvars, "monomial outside {nvars} variables");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order, constant first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Total degree counting only the variables in `vars`.
    pub fn degree_in_set(&self, vars: &[usize]) -> u32 {
        self.terms.keys().map(|m| vars.iter().map(|&v| m.exponent(v)).sum()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Indices of variables that occur.
    pub fn vars_used(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().flat_map(|m| m.support()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn same_vars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VarCount(self.nvars, other.nvars))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        Ok(self.mul_mod(other, &MonomialIdeal::zero()))
    }

    /// Product with every term in `ideal` dropped as it is produced.
    pub fn mul_mod(&self, other: &Polynomial, ideal: &MonomialIdeal) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if !ideal.contains(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    fn neg_ref(&self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, r: &Rat) -> Polynomial {
        if r.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        assert!(m.var_bound() <= self.nvars);
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        self.pow_mod(k, &MonomialIdeal::zero())
    }

    pub fn pow_mod(&self, k: u32, ideal: &MonomialIdeal) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars).normal_form(ideal);
        for _ in 0..k {
            acc = acc.mul_mod(self, ideal);
        }
        acc
    }

    /// Deletes every term whose monomial lies in `ideal`.
    pub fn normal_form(&self, ideal: &MonomialIdeal) -> Polynomial {
        if ideal.is_zero() {
            return self.clone();
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| !ideal.contains(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Replaces each variable `X_j` by `images[j]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        self.substitute_mod(images, &MonomialIdeal::zero())
    }

    /// Substitution followed by normal form, reducing after every product.
    pub fn substitute_mod(&self, images: &[Polynomial], ideal: &MonomialIdeal) -> Result<Polynomial> {
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        self.substitute_into(target, images, ideal)
    }

    /// Substitution into a ring with `target` variables, reduced by `ideal`.
    pub fn substitute_into(&self, target: usize, images: &[Polynomial], ideal: &MonomialIdeal) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, got: images.len() });
        }
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::VarCount(target, bad.nvars));
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, e) in m.pairs() {
                if t.is_zero() {
                    break;
                }
                let p = powers.entry((v, e)).or_insert_with(|| images[v].pow_mod(e, ideal));
                t = t.mul_mod(p, ideal);
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out.normal_form(ideal))
    }

    /// Same polynomial viewed in a ring with `n >= nvars` variables.
    pub fn extend(&self, n: usize) -> Polynomial {
        assert!(n >= self.nvars, "cannot extend {} variables to {n}", self.nvars);
        Polynomial { nvars: n, terms: self.terms.clone() }
    }

    /// Same polynomial viewed in a ring with `n` variables; fails if a
    /// variable at index `n` or above occurs.
    pub fn shrink(&self, n: usize) -> Result<Polynomial> {
        if self.terms.keys().any(|m| m.var_bound() > n) {
            return Err(Error::VarCount(self.nvars, n));
        }
        Ok(Polynomial { nvars: n, terms: self.terms.clone() })
    }

    /// Renames variables through `f` into a ring with `n` variables.
    pub fn map_vars(&self, n: usize, f: impl Fn(usize) -> usize) -> Polynomial {
        Polynomial::from_terms(n, self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Partial derivative in variable `v`.
    pub fn derivative(&self, v: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let lowered = Monomial::from_pairs(m.pairs().map(|(a, k)| if a == v { (a, k - 1) } else { (a, k) }));
            out.add_term(lowered, c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Groups terms by the exponent of `v`, with `v` removed from each
    /// monomial.
    pub fn split_by_var(&self, v: usize) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(v)).or_insert_with(|| Polynomial::zero(self.nvars)).add_term(m.without(v), c.clone());
        }
        out
    }

    /// Sets every variable in `vars` to zero.
    pub fn kill_vars(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exponent(v) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at rational values for every variable.
    pub fn eval(&self, values: &[Rat]) -> Result<Rat> {
        if values.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, got: values.len() });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.pairs() {
                for _ in 0..e {
                    t *= &values[v];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Leading term in graded-lex order that is first to differ from
    /// `other`, as a witness of inequality.
    pub fn first_difference(&self, other: &Polynomial) -> Option<(Monomial, Rat, Rat)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coeff(m), other.coeff(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}
