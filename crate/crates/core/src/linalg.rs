//! Exact Gaussian elimination over the scalar field.

use crate::error::{Error, Result};
use crate::scalars::{Gauss, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot is invertible");
        for x in m[r].iter_mut().skip(c) {
            *x = x.mul(&inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..cols {
                if !pivot_row[k].is_zero() {
                    row[k] = row[k].sub(&f.mul(&pivot_row[k]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Rank over the Gaussian rationals.
pub fn rank_gauss(mut m: Vec<Vec<Gauss>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        let pivot: Vec<Gauss> = m[r].iter().map(|x| x * &inv).collect();
        for row in m.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..cols {
                if !pivot[k].is_zero() {
                    row[k] = &row[k] - &(&f * &pivot[k]);
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank of a radical-free matrix after substituting `t = t0`; a lower bound
/// for the rank over the function field. `None` when `t0` hits a pole.
pub fn rank_at(m: &Matrix, t0: &Gauss) -> Option<usize> {
    let mut g = Vec::with_capacity(m.len());
    for row in m {
        let mut out = Vec::with_capacity(row.len());
        for x in row {
            out.push(x.eval_exact(t0)?);
        }
        g.push(out);
    }
    Some(rank_gauss(g))
}

/// A basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Scalar>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = w[r][free].neg();
        }
        out.push(v);
    }
    out
}

/// One solution of `m x = b`, or an error when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return Err(Error::Inconsistent("linear system has no solution".into()));
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Ok(x)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    // columns are basis vectors
    let m: Matrix = (0..v.len()).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    solve(&m, v).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn rank_and_nullspace() {
        let t = Scalar::t();
        let m = vec![vec![s(1), t.clone(), s(0)], vec![t.clone(), t.mul(&t), s(0)]];
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot = row.iter().zip(v).fold(Scalar::zero(), |a, (x, y)| a.add(&x.mul(y)));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_and_inconsistency() {
        let m = vec![vec![s(2), s(1)], vec![s(1), s(-1)]];
        let x = solve(&m, &[s(3), s(0)]).unwrap();
        assert_eq!(x, vec![s(1), s(1)]);
        let m = vec![vec![s(1), s(1)], vec![s(1), s(1)]];
        assert!(solve(&m, &[s(1), s(2)]).is_err());
        assert!(in_span(&[vec![s(1), s(2)]], &[s(2), s(4)]));
        assert!(!in_span(&[vec![s(1), s(2)]], &[s(2), s(5)]));
    }
}
