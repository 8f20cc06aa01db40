//! Dense exact linear algebra over the rationals. Sizes here never exceed a
//! few dozen, so plain Gauss-Jordan elimination is enough.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Solves `sum_j x_j * columns[j] = rhs` for a full-column-rank system.
///
/// Returns `None` when the system is inconsistent or the columns are
/// dependent.
pub fn solve_columns(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let cols = columns.len();
    // augmented matrix, row-major
    let mut a: Matrix = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let p = (pivot_row..rows).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, p);
        let inv = Rational::one() / &a[pivot_row][col];
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=cols {
                    let delta = &f * &a[pivot_row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| a[i][cols].clone()).collect())
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..2 * n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
