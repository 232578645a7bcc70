//! Exact Gaussian elimination over the rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Reduced row echelon form in place; returns the pivot column of each
/// non-zero row.
pub fn row_reduce(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut copy = rows.to_vec();
    row_reduce(&mut copy).len()
}

/// Solve `A x = b` for a unique `x`. An underdetermined or inconsistent
/// system is an error.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let unknowns = a.first().map_or(0, |r| r.len());
    if a.len() != b.len() {
        return Err(Error::InvalidParameter(alloc::format!(
            "{} equations but {} right-hand sides",
            a.len(),
            b.len()
        )));
    }
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&unknowns) {
        return Err(Error::Inconsistent("linear system has no solution".into()));
    }
    if pivots.len() < unknowns {
        return Err(Error::Underdetermined { unknowns, rank: pivots.len() });
    }
    Ok((0..unknowns).map(|i| aug[i][unknowns].clone()).collect())
}

/// Determinant of a square matrix.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &a[c][c];
            for j in c..n {
                let delta = &factor * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn solves_small_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[q(3), q(5)]).unwrap();
        assert_eq!(x, [Rational::new(4.into(), 5.into()), Rational::new(7.into(), 5.into())]);
    }

    #[test]
    fn detects_rank_deficiency() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&a), 1);
        assert!(matches!(solve(&a, &[q(1), q(2)]), Err(Error::Underdetermined { .. })));
        assert!(matches!(solve(&a, &[q(1), q(3)]), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn determinant_matches_cofactor() {
        let a = m(&[&[0, 2, 1], &[3, 1, 4], &[1, 5, 9]]);
        // cofactor expansion along the first row
        let cof = 0 * (1 * 9 - 4 * 5) - 2 * (3 * 9 - 4 * 1) + 1 * (3 * 5 - 1 * 1);
        assert_eq!(determinant(&a), q(cof));
    }
}
