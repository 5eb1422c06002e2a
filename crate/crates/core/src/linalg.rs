//! Small exact linear algebra over the rationals: symmetric congruence
//! diagonalization and dense solve/kernel routines used by the Gram engine.

use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Rational>>;

pub fn is_symmetric(m: &Matrix) -> bool {
    let n = m.len();
    m.iter().all(|row| row.len() == n)
        && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Diagonalize a symmetric matrix by congruence, returning the diagonal
/// pivots. When every remaining diagonal entry vanishes, the basis pair
/// (e_i + e_j, e_i - e_j) is used, so a Gram block [[0,c],[c,0]] yields
/// the pivots (2c, -2c).
///
/// A singular input is reported together with the dimension of its radical.
pub fn congruent_diagonal(gram: &Matrix) -> Result<Vec<Rational>> {
    if !is_symmetric(gram) {
        return Err(Error::NonSymmetric);
    }
    let n = gram.len();
    let mut m = gram.clone();
    let mut pivots: Vec<Rational> = Vec::with_capacity(n);
    let mut k = 0;
    while k < n {
        if let Some(s) = (k..n).find(|&s| !m[s][s].is_zero()) {
            swap_basis(&mut m, k, s);
        } else {
            let off = (k..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero());
            match off {
                None => return Err(Error::Singular { radical_dim: n - k }),
                Some((i, j)) => {
                    hyperbolic_pair_change(&mut m, i, j);
                    swap_basis(&mut m, k, i);
                }
            }
        }
        let pivot = m[k][k].clone();
        debug_assert!(!pivot.is_zero());
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let c = &m[i][k] / &pivot;
            // row_i -= c * row_k, then col_i -= c * col_k on the updated matrix
            for j in k..n {
                let t = &m[k][j] * &c;
                m[i][j] = &m[i][j] - &t;
            }
            for r in k..n {
                let t = &m[r][k] * &c;
                m[r][i] = &m[r][i] - &t;
            }
        }
        pivots.push(pivot);
        k += 1;
    }
    Ok(pivots)
}

fn swap_basis(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Change basis on positions (i, j) to (e_i + e_j, e_i - e_j).
fn hyperbolic_pair_change(m: &mut Matrix, i: usize, j: usize) {
    let n = m.len();
    for r in 0..n {
        let s = &m[r][i] + &m[r][j];
        let d = &s - &(&m[r][j] + &m[r][j]);
        m[r][i] = s;
        m[r][j] = d;
    }
    for c in 0..n {
        let s = &m[i][c] + &m[j][c];
        let d = &s - &(&m[j][c] + &m[j][c]);
        m[i][c] = s;
        m[j][c] = d;
    }
}

/// Solve M x = b by Gauss-Jordan elimination; None if inconsistent.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let cols = if n == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m[i].clone();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        if let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) {
            a.swap(r, p);
            let inv = a[r][c].clone();
            for j in c..=cols {
                a[r][j] = &a[r][j] / &inv;
            }
            for i in 0..n {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in c..=cols {
                        let t = &a[r][j] * &f;
                        a[i][j] = &a[i][j] - &t;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
    }
    for row in a.iter().skip(r) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[row][cols].clone();
    }
    Some(x)
}

/// Basis of the null space of M.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let n = m.len();
    if n == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a = m.clone();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        if let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) {
            a.swap(r, p);
            let inv = a[r][c].clone();
            for j in c..cols {
                a[r][j] = &a[r][j] / &inv;
            }
            for i in 0..n {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in c..cols {
                        let t = &a[r][j] * &f;
                        a[i][j] = &a[i][j] - &t;
                    }
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
        }
    }
    let pivot_set: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::from_integer(1.into());
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}
