use super::Monomial;

/// An ideal generated by monomials, kept minimal: no generator divides
/// another. Generators are sorted in graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        // Sorted by degree, so a divisor always comes before its multiples.
        for g in all {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { gens: kept }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn union(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().chain(other.gens.iter()).cloned())
    }

    pub fn shift(&self, offset: usize) -> MonomialIdeal {
        MonomialIdeal { gens: self.gens.iter().map(|g| g.shift(offset)).collect() }
    }

    /// Smallest `k` with `X_v^k` in the ideal, if any.
    pub fn pure_power(&self, v: usize) -> Option<u32> {
        self.gens.iter().filter(|g| g.support() == [v]).map(|g| g.degree()).min()
    }

    pub fn var_bound(&self) -> usize {
        self.gens.iter().map(|g| g.var_bound()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimalizes() {
        let i = MonomialIdeal::new(vec![
            Monomial::from_exponents(&[2, 0]),
            Monomial::from_exponents(&[3, 1]),
            Monomial::from_exponents(&[1, 1]),
            Monomial::from_exponents(&[1, 1]),
        ]);
        assert_eq!(i.generators(), &[Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[1, 1])]);
        assert!(i.contains(&Monomial::from_exponents(&[1, 3])));
        assert!(!i.contains(&Monomial::from_exponents(&[1, 0])));
        assert_eq!(i.pure_power(0), Some(2));
        assert_eq!(i.pure_power(1), None);
    }
}
