//! Small dense linear solves for the Newton polish.

use crate::scalar::{lit, Scalar};

/// Solve `a x = b` (row-major `n x n`) by Gaussian elimination with partial
/// pivoting. Returns `None` when a pivot falls below `rel_tol` times the
/// largest entry.
pub(crate) fn solve_dense<T: Scalar>(mut a: Vec<T>, mut b: Vec<T>, rel_tol: T) -> Option<Vec<T>> {
    let n = b.len();
    debug_assert_eq!(a.len(), n * n);
    let scale = a.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    if scale == T::zero() {
        return None;
    }
    for col in 0..n {
        let pivot_row = (col..n).max_by(|&r, &s| {
            a[r * n + col]
                .abs()
                .partial_cmp(&a[s * n + col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot_row * n + col].abs() <= rel_tol * scale {
            return None;
        }
        if pivot_row != col {
            for j in 0..n {
                a.swap(col * n + j, pivot_row * n + j);
            }
            b.swap(col, pivot_row);
        }
        let p = a[col * n + col];
        for r in (col + 1)..n {
            let f = a[r * n + col] / p;
            if f == T::zero() {
                continue;
            }
            for j in col..n {
                a[r * n + j] = a[r * n + j] - f * a[col * n + j];
            }
            b[r] = b[r] - f * b[col];
        }
    }
    let mut x = vec![T::zero(); n];
    for i in (0..n).rev() {
        let s = ((i + 1)..n).fold(b[i], |acc, j| acc - a[i * n + j] * x[j]);
        x[i] = s / a[i * n + i];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

/// Regularized least squares step `(J^T J + mu I) x = J^T r`.
pub(crate) fn damped_least_squares<T: Scalar>(jac: &[T], rhs: &[T], rows: usize, cols: usize, mu: T) -> Option<Vec<T>> {
    let mut normal = vec![T::zero(); cols * cols];
    let mut jtr = vec![T::zero(); cols];
    for r in 0..rows {
        for i in 0..cols {
            let jri = jac[r * cols + i];
            if jri == T::zero() {
                continue;
            }
            jtr[i] = jtr[i] + jri * rhs[r];
            for j in 0..cols {
                normal[i * cols + j] = normal[i * cols + j] + jri * jac[r * cols + j];
            }
        }
    }
    let diag_max = (0..cols).fold(T::zero(), |m, i| m.max(normal[i * cols + i]));
    let damping = mu * diag_max.max(T::one());
    for i in 0..cols {
        normal[i * cols + i] = normal[i * cols + i] + damping;
    }
    solve_dense(normal, jtr, lit(1e-300))
}
