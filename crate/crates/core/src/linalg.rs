//! Exact Gaussian elimination over the rationals. Right-hand sides may live
//! in any `Coeff` module, so systems with symbolic data solve exactly.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Rat};

pub type Matrix = Vec<Vec<Rat>>;

/// Reduced row echelon form; returns the reduced rows and pivot columns.
pub fn rref(m: &Matrix, ncols: usize) -> (Matrix, Vec<usize>) {
    let mut dummy: Vec<Rat> = vec![Rat::zero(); m.len()];
    let (rows, pivots) = eliminate(m, ncols, &mut dummy);
    (rows, pivots)
}

fn eliminate<C: Coeff>(m: &Matrix, ncols: usize, rhs: &mut [C]) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.clone();
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        rhs.swap(r, p);
        let inv = Rat::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        rhs[r] = rhs[r].scale(&inv);
        for i in 0..nrows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot = a[r].clone();
            for (x, p) in a[i].iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= p * &f;
                }
            }
            let t = rhs[r].scale(&f);
            rhs[i] = rhs[i].minus(&t);
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    rref(m, ncols).1.len()
}

/// Basis of `{x : m x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(m: &Matrix, ncols: usize) -> Vec<Vec<Rat>> {
    let (a, pivots) = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -a[i][f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of `m x = b`. Fails when the system is inconsistent or
/// the solution is not unique.
pub fn solve<C: Coeff>(m: &Matrix, ncols: usize, b: &[C]) -> Result<Vec<C>> {
    if m.len() != b.len() {
        return Err(Error::DimensionMismatch(format!("{} rows, {} right-hand sides", m.len(), b.len())));
    }
    let Some(proto) = b.first().cloned() else {
        return if ncols == 0 {
            Ok(Vec::new())
        } else {
            Err(Error::Inconsistent("no equations for a nonempty unknown".into()))
        };
    };
    let mut rhs = b.to_vec();
    let (_, pivots) = eliminate(m, ncols, &mut rhs);
    if let Some(r) = (pivots.len()..rhs.len()).find(|&r| !rhs[r].vanishes()) {
        return Err(Error::Inconsistent(format!("equation {r} has no solution")));
    }
    if pivots.len() < ncols {
        return Err(Error::Inconsistent(format!("solution not unique: rank {} < {} unknowns", pivots.len(), ncols)));
    }
    let mut x = vec![proto.zero_like(); ncols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = rhs[i].clone();
    }
    Ok(x)
}

pub fn mat_vec(m: &Matrix, v: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, Polynomial};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let k = nullspace(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_symbolic_rhs() {
        let a = m(&[&[2, 0], &[1, 1], &[0, 3]]);
        let p = Polynomial::var(1, 0);
        let b = vec![p.scale(&int(2)), &p + &Polynomial::one(1), Polynomial::from_int(1, 3)];
        let x = solve(&a, 2, &b).unwrap();
        assert_eq!(x, vec![p.clone(), Polynomial::one(1)]);
        let bad = vec![p.clone(), p.clone(), p.clone()];
        assert!(matches!(solve(&a, 2, &bad), Err(Error::Inconsistent(_))));
    }
}
