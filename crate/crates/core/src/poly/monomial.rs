use std::cmp::Ordering;

/// A power product of variables, stored sparsely as `(variable, exponent)`
/// pairs sorted by variable with every exponent positive.
///
/// The `Ord` impl is graded lexicographic: total degree first, then the
/// exponent vector compared so that `X1` sorts before `X2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v as u32, 1)])
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(v as u32, e)])
        }
    }

    /// Builds from a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, &e)| (v as u32, e)).collect())
    }

    /// Builds from arbitrary `(variable, exponent)` pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).map(|(a, e)| (a as u32, e)).collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (a, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == a => last.1 += e,
                _ => out.push((a, e)),
            }
        }
        Monomial(out)
    }

    /// Product of the given variables, each to the first power.
    pub fn square_free(vars: &[usize]) -> Self {
        Self::from_pairs(vars.iter().map(|&v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0.binary_search_by_key(&(v as u32), |&(a, _)| a).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().map(|&(v, _)| v as usize).collect()
    }

    /// One past the largest variable index used, or 0.
    pub fn var_bound(&self) -> usize {
        self.0.last().map(|&(v, _)| v as usize + 1).unwrap_or(0)
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(v, e) in &self.0 {
            out[v as usize] = e;
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.0 {
            while j < other.0.len() && other.0[j].0 < v {
                j += 1;
            }
            if j == other.0.len() || other.0[j].0 != v || other.0[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self` when divisible.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_pairs(other.pairs().map(|(v, e)| (v, e - self.exponent(v)))))
    }

    /// Renames variables through `f`; exponents of variables sent to the same
    /// index add up.
    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_pairs(self.pairs().map(|(v, e)| (f(v), e)))
    }

    pub fn shift(&self, offset: usize) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v + offset as u32, e)).collect())
    }

    /// Keeps only the variables in `lo..hi`, shifted down by `lo`.
    pub fn restrict(&self, lo: usize, hi: usize) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter(|&&(v, _)| (v as usize) >= lo && (v as usize) < hi)
                .map(|&(v, e)| (v - lo as u32, e))
                .collect(),
        )
    }

    /// Drops variable `v` entirely.
    pub fn without(&self, v: usize) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(a, _)| a as usize != v).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Less;
                    }
                    if vb < va {
                        return Ordering::Greater;
                    }
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let mut v = [
            Monomial::from_exponents(&[0, 2]),
            Monomial::from_exponents(&[1, 1]),
            Monomial::one(),
            Monomial::from_exponents(&[0, 1]),
            Monomial::from_exponents(&[2, 0]),
            Monomial::from_exponents(&[1, 0]),
        ];
        v.sort();
        let dense: Vec<Vec<u32>> = v.iter().map(|m| m.exponents(2)).collect();
        assert_eq!(dense, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_exponents(&[1, 0, 1]);
        let b = Monomial::from_exponents(&[2, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient(&b), Some(Monomial::from_exponents(&[1, 1, 0])));
        assert!(Monomial::one().divides(&a));
    }

    #[test]
    fn mul_merges() {
        let a = Monomial::from_exponents(&[1, 0, 2]);
        let b = Monomial::from_exponents(&[0, 3, 1]);
        assert_eq!(a.mul(&b), Monomial::from_exponents(&[1, 3, 3]));
        assert_eq!(a.pow(2), Monomial::from_exponents(&[2, 0, 4]));
    }
}
