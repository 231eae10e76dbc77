//! Dense linear algebra kernels used by the GP surrogate and NMF
//! initialization: Cholesky factorization, triangular solves, modified
//! Gram-Schmidt orthonormalization, one-sided Jacobi SVD, and a randomized
//! truncated SVD (subspace iteration).
//!
//! Everything here is deterministic given its inputs; the randomized SVD
//! takes an explicit seed.

use ndarray::{Array1, Array2, ArrayView2, Axis};

use crate::error::{Error, Result};
use crate::seeding;
use rand_distr::{Distribution, StandardNormal};

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
///
/// Fails when the matrix is not positive definite (non-positive pivot).
pub fn cholesky(a: &Array2<f64>) -> Result<Array2<f64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::invalid("cholesky: matrix must be square"));
    }
    let mut l = Array2::<f64>::zeros((n, n));
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[[i, j]];
            for k in 0..j {
                sum -= l[[i, k]] * l[[j, k]];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::invalid(format!(
                        "cholesky: matrix not positive definite (pivot {i} = {sum:e})"
                    )));
                }
                l[[i, j]] = sum.sqrt();
            } else {
                l[[i, j]] = sum / l[[j, j]];
            }
        }
    }
    Ok(l)
}

/// Solves L x = b with L lower triangular.
pub fn solve_lower(l: &Array2<f64>, b: &Array1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut x = b.clone();
    for i in 0..n {
        for k in 0..i {
            let v = x[k];
            x[i] -= l[[i, k]] * v;
        }
        x[i] /= l[[i, i]];
    }
    x
}

/// Solves Lᵀ x = b with L lower triangular.
pub fn solve_lower_transpose(l: &Array2<f64>, b: &Array1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut x = b.clone();
    for i in (0..n).rev() {
        for k in i + 1..n {
            let v = x[k];
            x[i] -= l[[k, i]] * v;
        }
        x[i] /= l[[i, i]];
    }
    x
}

/// Solves (L Lᵀ) x = b given the Cholesky factor L.
pub fn cholesky_solve(l: &Array2<f64>, b: &Array1<f64>) -> Array1<f64> {
    solve_lower_transpose(l, &solve_lower(l, b))
}

/// Orthonormalizes the columns of `y` in place via modified Gram-Schmidt,
/// dropping columns that are (numerically) in the span of earlier ones.
/// Returns the matrix of surviving orthonormal columns.
pub fn orthonormalize_columns(y: &Array2<f64>) -> Array2<f64> {
    let (rows, cols) = y.dim();
    let mut kept: Vec<Array1<f64>> = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut v = y.column(j).to_owned();
        for q in &kept {
            let dot = v.dot(q);
            v.scaled_add(-dot, q);
        }
        // second pass for numerical insurance on nearly dependent columns
        for q in &kept {
            let dot = v.dot(q);
            v.scaled_add(-dot, q);
        }
        let norm = v.dot(&v).sqrt();
        if norm > 1e-12 {
            kept.push(v / norm);
        }
    }
    let mut q = Array2::<f64>::zeros((rows, kept.len()));
    for (j, col) in kept.iter().enumerate() {
        q.column_mut(j).assign(col);
    }
    q
}

/// Thin SVD computed by one-sided Jacobi rotations on the columns of `a`.
///
/// Returns (U, sigma, V) with `a = U · diag(sigma) · Vᵀ`, singular values
/// sorted descending, and each singular vector sign-normalized so its
/// largest-magnitude left entry is positive. When the columns of `a` are
/// already mutually orthogonal no rotation is applied, so axis-aligned
/// structure in the input is preserved exactly.
pub fn jacobi_svd(a: &ArrayView2<f64>) -> (Array2<f64>, Vec<f64>, Array2<f64>) {
    let (m, n) = a.dim();
    let mut w = a.to_owned(); // becomes U * diag(sigma)
    let mut v = Array2::<f64>::eye(n);
    let eps = 1e-14;
    let max_sweeps = 60;

    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                let col_p = w.column(p);
                let col_q = w.column(q);
                let alpha = col_p.dot(&col_p);
                let beta = col_q.dot(&col_q);
                let gamma = col_p.dot(&col_q);
                if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                off = off.max(gamma.abs() / (alpha * beta).sqrt().max(1e-300));
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let wp = w[[i, p]];
                    let wq = w[[i, q]];
                    w[[i, p]] = c * wp - s * wq;
                    w[[i, q]] = s * wp + c * wq;
                }
                for i in 0..n {
                    let vp = v[[i, p]];
                    let vq = v[[i, q]];
                    v[[i, p]] = c * vp - s * vq;
                    v[[i, q]] = s * vp + c * vq;
                }
            }
        }
        if off < 1e-13 {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| w.column(j).dot(&w.column(j)).sqrt())
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap().then(i.cmp(&j)));

    let rank = n.min(m);
    let mut u = Array2::<f64>::zeros((m, rank));
    let mut sigma = vec![0.0; rank];
    let mut vs = Array2::<f64>::zeros((n, rank));
    for (out, &j) in order.iter().take(rank).enumerate() {
        sigma[out] = norms[j];
        if norms[j] > 1e-300 {
            let mut ucol = w.column(j).to_owned() / norms[j];
            let mut vcol = v.column(j).to_owned();
            // sign convention: largest-|.| entry of u is positive
            let mut idx = 0;
            let mut best = 0.0f64;
            for (i, &x) in ucol.iter().enumerate() {
                if x.abs() > best {
                    best = x.abs();
                    idx = i;
                }
            }
            if ucol[idx] < 0.0 {
                ucol.mapv_inplace(|x| -x);
                vcol.mapv_inplace(|x| -x);
            }
            u.column_mut(out).assign(&ucol);
            vs.column_mut(out).assign(&vcol);
        }
    }
    (u, sigma, vs)
}

/// Randomized truncated SVD of `m` keeping `k` components: Gaussian sketch,
/// `power_steps` rounds of subspace iteration with re-orthonormalization,
/// then an exact small SVD of the projected matrix.
pub fn randomized_svd(
    m: &ArrayView2<f64>,
    k: usize,
    oversample: usize,
    power_steps: usize,
    seed: u64,
) -> (Array2<f64>, Vec<f64>, Array2<f64>) {
    let (rows, cols) = m.dim();
    let p = (k + oversample).min(rows).min(cols);
    let mut rng = seeding::rng_from(&[seed, 0x5fd]);
    let mut omega = Array2::<f64>::zeros((cols, p));
    for x in omega.iter_mut() {
        *x = StandardNormal.sample(&mut rng);
    }

    let mut y = m.dot(&omega);
    for _ in 0..power_steps {
        y = orthonormalize_columns(&y);
        y = m.dot(&m.t().dot(&y));
    }
    let q = orthonormalize_columns(&y);
    let b = q.t().dot(m); // p' x cols

    let (ub, sigma, vb) = jacobi_svd(&b.view());
    let keep = k.min(sigma.len());
    let u_full = q.dot(&ub.slice(ndarray::s![.., ..keep]));
    let v_full = vb.slice(ndarray::s![.., ..keep]).to_owned();
    (u_full, sigma[..keep].to_vec(), v_full)
}

/// Population mean and standard deviation of a slice.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Median of a slice; the mean of the two middle order statistics when the
/// length is even.
pub fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "median of empty slice");
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

#[allow(unused)]
pub(crate) fn frobenius_sq(a: &ArrayView2<f64>) -> f64 {
    a.iter().map(|x| x * x).sum()
}

/// Reconstruction check helper used in tests: max |a - u s vᵀ| entry.
#[allow(unused)]
pub(crate) fn svd_residual(
    a: &ArrayView2<f64>,
    u: &Array2<f64>,
    sigma: &[f64],
    v: &Array2<f64>,
) -> f64 {
    let mut us = u.clone();
    for (j, &s) in sigma.iter().enumerate() {
        us.index_axis_mut(Axis(1), j).mapv_inplace(|x| x * s);
    }
    let rec = us.dot(&v.t());
    let mut worst = 0.0f64;
    for (x, y) in a.iter().zip(rec.iter()) {
        worst = worst.max((x - y).abs());
    }
    worst
}
