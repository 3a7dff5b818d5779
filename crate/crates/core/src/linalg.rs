//! Small dense linear-algebra helpers over `f64` slices.

use alloc::vec::Vec;

/// Determinant of the `n x n` row-major matrix `m`.
///
/// Closed-form cofactor expansion for `n <= 3`, LU with partial pivoting
/// above that.
pub(crate) fn det(m: &[f64], n: usize) -> f64 {
    debug_assert_eq!(m.len(), n * n);
    match n {
        0 => 1.0,
        1 => m[0],
        2 => m[0] * m[3] - m[1] * m[2],
        3 => {
            m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6])
        }
        _ => det_lu(m.to_vec(), n),
    }
}

fn det_lu(mut a: Vec<f64>, n: usize) -> f64 {
    let mut sign = 1.0;
    for col in 0..n {
        let mut pivot = col;
        let mut best = a[col * n + col].abs();
        for row in col + 1..n {
            let v = a[row * n + col].abs();
            if v > best {
                best = v;
                pivot = row;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for c in 0..n {
                a.swap(col * n + c, pivot * n + c);
            }
            sign = -sign;
        }
        let diag = a[col * n + col];
        for row in col + 1..n {
            let factor = a[row * n + col] / diag;
            if factor != 0.0 {
                for c in col..n {
                    a[row * n + c] -= factor * a[col * n + c];
                }
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * a[i * n + i])
}

/// Determinant of the matrix whose columns are `cols` (each of length `cols.len()`).
pub(crate) fn det_columns(cols: &[&[f64]]) -> f64 {
    let n = cols.len();
    let mut m = Vec::with_capacity(n * n);
    for row in 0..n {
        for col in cols {
            m.push(col[row]);
        }
    }
    det(&m, n)
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Orthonormalises `vectors` in order, dropping any that are (numerically)
/// dependent on the ones already kept. `scale` sets the dependence threshold.
pub(crate) fn orthonormal_basis(vectors: &[Vec<f64>], scale: f64) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for b in &basis {
                let d = dot(&w, b);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= d * bi;
                }
            }
        }
        let len = norm(&w);
        if len > 1e-9 * scale {
            w.iter_mut().for_each(|x| *x /= len);
            basis.push(w);
        }
    }
    basis
}

/// Removes from `v` its components along the orthonormal `basis`.
pub(crate) fn reject(v: &[f64], basis: &[Vec<f64>]) -> Vec<f64> {
    let mut w = v.to_vec();
    for b in basis {
        let d = dot(&w, b);
        for (wi, bi) in w.iter_mut().zip(b) {
            *wi -= d * bi;
        }
    }
    w
}
