//! Shared dense/tridiagonal symmetric eigensolver kernels: Sturm-sequence
//! counting, bisection for the smallest eigenvalues, inverse iteration,
//! Cholesky reduction of a symmetric-definite pencil and Householder
//! tridiagonalization. The same tridiagonal engine backs the 1D
//! finite-difference solver and the 2D dense path.

use crate::error::{Result, SpectralError};

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// strictly below `x`, by counting negative LDL^T pivots.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    debug_assert_eq!(off.len(), n - 1);
    // LAPACK-style pivot floor keeps e^2 / q finite when a pivot lands on zero
    let emax2 = off.iter().fold(1.0f64, |m, &e| m.max(e * e));
    let pivmin = f64::MIN_POSITIVE * emax2;

    let mut count = 0;
    let mut q = 1.0;
    for i in 0..n {
        let e2 = if i > 0 { off[i - 1] * off[i - 1] } else { 0.0 };
        q = (diag[i] - x) - e2 / q;
        // an exact pivot hit counts as "below" (LAPACK convention)
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin bounds of a symmetric tridiagonal matrix.
pub fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo - 1.0, hi + 1.0)
}

pub const BISECTION_MAX_ITER: usize = 200;
pub const BISECTION_REL_TOL: f64 = 1e-13;

/// The `k` smallest eigenvalues of (diag, off), ascending, each bisected to
/// relative tolerance [`BISECTION_REL_TOL`]. Deterministic.
pub fn smallest_eigenvalues(diag: &[f64], off: &[f64], k: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    assert!(k <= n, "requested {k} eigenvalues of an {n}-dim matrix");
    let (glo, ghi) = gershgorin(diag, off);
    let mut out = Vec::with_capacity(k);
    for idx in 0..k {
        let mut a = glo;
        let mut b = ghi;
        let mut converged = false;
        for _ in 0..BISECTION_MAX_ITER {
            let mid = 0.5 * (a + b);
            if b - a <= BISECTION_REL_TOL * mid.abs().max(1.0) {
                converged = true;
                break;
            }
            if sturm_count(diag, off, mid) <= idx {
                a = mid;
            } else {
                b = mid;
            }
        }
        if !converged && b - a > 1e-10 * (0.5 * (a + b)).abs().max(1.0) {
            return Err(SpectralError::BisectionStalled {
                iterations: BISECTION_MAX_ITER,
            });
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

/// LU factorization of (T - shift I) with partial pivoting for a symmetric
/// tridiagonal T; fill appears on a second superdiagonal.
struct ShiftedLu {
    lower: Vec<f64>,
    diag: Vec<f64>,
    up1: Vec<f64>,
    up2: Vec<f64>,
    swapped: Vec<bool>,
}

fn factor_shifted(diag: &[f64], off: &[f64], shift: f64) -> ShiftedLu {
    let n = diag.len();
    let mut d: Vec<f64> = diag.iter().map(|&v| v - shift).collect();
    let mut u1 = vec![0.0; n];
    let mut u2 = vec![0.0; n];
    for i in 0..n - 1 {
        u1[i] = off[i];
    }
    let mut lower = vec![0.0; n];
    let mut swapped = vec![false; n];
    let scale = diag.iter().fold(1.0f64, |m, &v| m.max(v.abs()))
        + off.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let tiny = f64::EPSILON * scale;
    let guard = |x: f64| {
        if x.abs() < tiny {
            if x >= 0.0 {
                tiny
            } else {
                -tiny
            }
        } else {
            x
        }
    };
    for i in 0..n - 1 {
        // row i may carry fill (d[i], u1[i], u2[i]); row i+1 is pristine
        let sub = off[i];
        let next_off = if i + 2 <= n - 1 { off[i + 1] } else { 0.0 };
        if d[i].abs() >= sub.abs() {
            d[i] = guard(d[i]);
            let m = sub / d[i];
            lower[i] = m;
            d[i + 1] -= m * u1[i];
            if i + 1 < n - 1 {
                u1[i + 1] = next_off - m * u2[i];
            }
        } else {
            swapped[i] = true;
            let m = d[i] / sub;
            lower[i] = m;
            let (old_d1, old_u1, old_u2) = (d[i + 1], u1[i], u2[i]);
            d[i] = sub;
            u1[i] = old_d1;
            u2[i] = next_off;
            d[i + 1] = old_u1 - m * old_d1;
            if i + 1 < n - 1 {
                u1[i + 1] = old_u2 - m * next_off;
            }
        }
    }
    d[n - 1] = guard(d[n - 1]);
    ShiftedLu {
        lower,
        diag: d,
        up1: u1,
        up2: u2,
        swapped,
    }
}

impl ShiftedLu {
    fn solve(&self, rhs: &mut [f64]) {
        let n = rhs.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                rhs.swap(i, i + 1);
            }
            rhs[i + 1] -= self.lower[i] * rhs[i];
        }
        rhs[n - 1] /= self.diag[n - 1];
        if n >= 2 {
            rhs[n - 2] = (rhs[n - 2] - self.up1[n - 2] * rhs[n - 1]) / self.diag[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            rhs[i] = (rhs[i] - self.up1[i] * rhs[i + 1] - self.up2[i] * rhs[i + 2]) / self.diag[i];
        }
    }
}

const INVERSE_ITERATIONS: usize = 3;
pub const EIGENVECTOR_RESIDUAL_TOL: f64 = 1e-8;

/// Eigenvector of (diag, off) for the eigenvalue `lambda` by inverse
/// iteration from the supplied start vector, re-orthogonalized against
/// `previous` (used within degenerate clusters). Returns a unit vector.
pub fn inverse_iteration(
    diag: &[f64],
    off: &[f64],
    lambda: f64,
    start: &[f64],
    previous: &[Vec<f64>],
) -> Result<Vec<f64>> {
    let n = diag.len();
    let lu = factor_shifted(diag, off, lambda);
    let mut y = start.to_vec();
    normalize(&mut y);
    for _ in 0..INVERSE_ITERATIONS {
        lu.solve(&mut y);
        for p in previous {
            let dot: f64 = y.iter().zip(p).map(|(a, b)| a * b).sum();
            for (yi, pi) in y.iter_mut().zip(p) {
                *yi -= dot * pi;
            }
        }
        normalize(&mut y);
    }
    // relative residual ||T y - lambda y||
    let mut res = 0.0f64;
    for i in 0..n {
        let mut v = (diag[i] - lambda) * y[i];
        if i > 0 {
            v += off[i - 1] * y[i - 1];
        }
        if i < n - 1 {
            v += off[i] * y[i + 1];
        }
        res += v * v;
    }
    let scale = diag.iter().fold(lambda.abs(), |m, &v| m.max(v.abs()));
    let res = res.sqrt() / scale.max(1.0);
    if res > EIGENVECTOR_RESIDUAL_TOL {
        return Err(SpectralError::EigenvectorResidual { residual: res });
    }
    Ok(y)
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

// ----- dense symmetric kernels (row-major, n x n) -----

/// In-place lower Cholesky A = L L^T. Strict upper triangle is left stale.
pub fn cholesky_lower(a: &mut [f64], n: usize) -> Result<()> {
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= a[j * n + k] * a[j * n + k];
        }
        if d <= 0.0 {
            return Err(SpectralError::MassNotPositiveDefinite { row: j, pivot: d });
        }
        let d = d.sqrt();
        a[j * n + j] = d;
        for i in j + 1..n {
            let mut s = a[i * n + j];
            let (row_i, row_j) = (i * n, j * n);
            for k in 0..j {
                s -= a[row_i + k] * a[row_j + k];
            }
            a[i * n + j] = s / d;
        }
    }
    Ok(())
}

/// Overwrite symmetric `a` with L^{-1} a L^{-T} where `l` holds a lower
/// Cholesky factor; the result is symmetric.
pub fn reduce_spd_pencil(a: &mut [f64], l: &[f64], n: usize) {
    // pass 1: a <- L^{-1} a, eliminating whole rows so the inner loops run
    // over contiguous memory
    for i in 0..n {
        let (head, tail) = a.split_at_mut(i * n);
        let row_i = &mut tail[..n];
        for k in 0..i {
            let lik = l[i * n + k];
            let row_k = &head[k * n..k * n + n];
            for j in 0..n {
                row_i[j] -= lik * row_k[j];
            }
        }
        let d = l[i * n + i];
        for x in row_i.iter_mut() {
            *x /= d;
        }
    }
    // pass 2: a <- a L^{-T} (forward substitution along each row)
    for i in 0..n {
        let row = i * n;
        for j in 0..n {
            let mut s = a[row + j];
            for k in 0..j {
                s -= a[row + k] * l[j * n + k];
            }
            a[row + j] = s / l[j * n + j];
        }
    }
    // symmetrize against roundoff drift
    for i in 0..n {
        for j in 0..i {
            let m = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = m;
            a[j * n + i] = m;
        }
    }
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form,
/// eigenvalues only (no accumulation of the orthogonal factor). Reads and
/// writes the upper triangle only, keeping every inner loop contiguous.
pub fn householder_tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n.saturating_sub(1)];
    if n == 0 {
        return (diag, off);
    }
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    for j in 0..n.saturating_sub(2) {
        // by symmetry the pivot column below the diagonal is row j's tail
        let row_j = j * n;
        let col0 = a[row_j + j + 1];
        let mut norm2 = 0.0;
        for k in j + 1..n {
            let x = a[row_j + k];
            norm2 += x * x;
        }
        if norm2 - col0 * col0 <= f64::EPSILON * f64::EPSILON * norm2 {
            // column already tridiagonal
            diag[j] = a[row_j + j];
            off[j] = col0;
            continue;
        }
        let norm = norm2.sqrt();
        let alpha = if col0 >= 0.0 { -norm } else { norm };
        // Householder H = I - beta v v^T with v = x - alpha e1
        v[j + 1] = col0 - alpha;
        let mut vtv = v[j + 1] * v[j + 1];
        for k in j + 2..n {
            v[k] = a[row_j + k];
            vtv += v[k] * v[k];
        }
        let beta = 2.0 / vtv;
        // p = beta A v on the trailing block via a symmetric-upper sweep
        for x in &mut p[j + 1..n] {
            *x = 0.0;
        }
        for i in j + 1..n {
            let row = i * n;
            let vi = v[i];
            let mut s = a[row + i] * vi;
            for k in i + 1..n {
                let aik = a[row + k];
                s += aik * v[k];
                p[k] += aik * vi;
            }
            p[i] += s;
        }
        let mut vtp = 0.0;
        for i in j + 1..n {
            p[i] *= beta;
            vtp += v[i] * p[i];
        }
        // w = p - (beta/2)(v^T p) v, then A <- A - v w^T - w v^T
        let kappa = 0.5 * beta * vtp;
        for i in j + 1..n {
            p[i] -= kappa * v[i];
        }
        for i in j + 1..n {
            let (vi, pi) = (v[i], p[i]);
            let row = i * n;
            for k in i..n {
                a[row + k] -= vi * p[k] + pi * v[k];
            }
        }
        diag[j] = a[row_j + j];
        off[j] = alpha;
    }
    if n >= 2 {
        diag[n - 2] = a[(n - 2) * n + (n - 2)];
        off[n - 2] = a[(n - 2) * n + (n - 1)];
    }
    diag[n - 1] = a[(n - 1) * n + (n - 1)];
    (diag, off)
}

/// Eigenvalues of a symmetric 2x2 matrix, ascending.
pub fn sym2x2_eigenvalues(m: [[f64; 2]; 2]) -> [f64; 2] {
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
    [tr / 2.0 - disc, tr / 2.0 + disc]
}
