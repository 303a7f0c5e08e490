//! Independent reference computations shared by the integration tests.
//! None of these reuse the library's numerical code.

#![allow(dead_code)]

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// Returns the diagonal and the sub-diagonal.
fn tridiagonalize(a: &[Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for k in 0..n.saturating_sub(2) {
        let alpha_sq: f64 = (k + 1..n).map(|i| m[i][k] * m[i][k]).sum();
        if alpha_sq == 0.0 {
            continue;
        }
        let x0 = m[k + 1][k];
        let alpha = if x0 >= 0.0 {
            -alpha_sq.sqrt()
        } else {
            alpha_sq.sqrt()
        };
        let mut v = vec![0.0; n];
        v[k + 1] = x0 - alpha;
        for i in k + 2..n {
            v[i] = m[i][k];
        }
        let vnorm_sq: f64 = v.iter().map(|x| x * x).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        // M ← H M H with H = I - 2 v vᵀ / (vᵀ v)
        let p: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| m[i][j] * v[j]).sum::<f64>() * 2.0 / vnorm_sq)
            .collect();
        let kfac: f64 = v.iter().zip(&p).map(|(x, y)| x * y).sum::<f64>() / vnorm_sq;
        let w: Vec<f64> = (0..n).map(|i| p[i] - kfac * v[i]).collect();
        for i in 0..n {
            for j in 0..n {
                m[i][j] -= v[i] * w[j] + w[i] * v[j];
            }
        }
    }
    let diag = (0..n).map(|i| m[i][i]).collect();
    let off = (1..n).map(|i| m[i][i - 1]).collect();
    (diag, off)
}

/// Number of eigenvalues of the tridiagonal matrix below `x`, counted by
/// the sign changes of the Sturm sequence.
fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0f64;
    for i in 0..diag.len() {
        let b2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x - if i == 0 { 0.0 } else { b2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of a symmetric matrix, descending, by Sturm bisection
/// on its Householder tridiagonal form.
pub fn bisection_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let (diag, off) = tridiagonalize(a);
    let radius = (0..n)
        .map(|i| {
            diag[i].abs()
                + if i > 0 { off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { off[i].abs() } else { 0.0 }
        })
        .fold(0.0f64, f64::max)
        + 1.0;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        // k-th smallest: smallest x with more than k eigenvalues below it
        let (mut lo, mut hi) = (-radius, radius);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if sturm_count(&diag, &off, mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 4.0 * f64::EPSILON * radius {
                break;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out.reverse();
    out
}

/// Determinant by cofactor expansion along the first row. Exponential; use
/// only for small matrices.
pub fn laplace_determinant(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    match n {
        0 => 1.0,
        1 => a[0][0],
        2 => a[0][0] * a[1][1] - a[0][1] * a[1][0],
        _ => (0..n)
            .map(|j| {
                if a[0][j] == 0.0 {
                    return 0.0;
                }
                let minor: Vec<Vec<f64>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * a[0][j] * laplace_determinant(&minor)
            })
            .sum(),
    }
}

/// `M Mᵀ` for a rectangular matrix given by rows.
pub fn gram(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    m.iter()
        .map(|a| {
            m.iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

/// `-S²` for a skew matrix, whose eigenvalues are `|λ|²` of `S`.
pub fn negated_square(s: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = s.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| -(0..n).map(|k| s[i][k] * s[k][j]).sum::<f64>())
                .collect()
        })
        .collect()
}

/// Square roots of the eigenvalues of a positive semidefinite matrix.
/// Eigenvalues within rounding of zero map to exactly zero, since the square
/// root would magnify them to about `1e-8`.
pub fn root_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let scale = a.iter().flatten().fold(1.0f64, |s, v| s.max(v.abs()));
    bisection_eigenvalues(a)
        .into_iter()
        .map(|v| if v <= 1e-12 * scale { 0.0 } else { v.sqrt() })
        .collect()
}

/// `-S²` has eigenvalues `|λ|²` of `S`.
pub fn skew_abs_eigenvalues(s: &[Vec<f64>]) -> Vec<f64> {
    root_eigenvalues(&negated_square(s))
}

/// Probabilities proportional to `|x_i|`, then `1 - Σ p_i²`.
pub fn i1_from_values(values: &[f64]) -> f64 {
    let total: f64 = values.iter().map(|v| v.abs()).sum();
    1.0 - values
        .iter()
        .map(|v| (v.abs() / total).powi(2))
        .sum::<f64>()
}

/// Rényi-type entropy with logarithm base `base`.
pub fn i2_from_values(values: &[f64], alpha: f64, base: f64) -> f64 {
    let total: f64 = values.iter().map(|v| v.abs()).sum();
    let s: f64 = values
        .iter()
        .filter(|v| **v != 0.0)
        .map(|v| (v.abs() / total).powf(alpha))
        .sum();
    s.ln() / base.ln() / (1.0 - alpha)
}

/// Daróczy-type entropy.
pub fn i3_from_values(values: &[f64], alpha: f64) -> f64 {
    let total: f64 = values.iter().map(|v| v.abs()).sum();
    let s: f64 = values
        .iter()
        .filter(|v| **v != 0.0)
        .map(|v| (v.abs() / total).powf(alpha))
        .sum();
    (s - 1.0) / (2f64.powf(1.0 - alpha) - 1.0)
}

/// Rows of a library matrix as nested vectors.
pub fn rows(m: &graphent::DenseMatrix) -> Vec<Vec<f64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!((a - b).abs() <= tol, "{what}: {a} vs {b} (tol {tol})");
}

pub fn assert_all_close(a: &[f64], b: &[f64], tol: f64, what: &str) {
    assert_eq!(a.len(), b.len(), "{what}: lengths differ");
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        assert!((x - y).abs() <= tol, "{what}[{k}]: {x} vs {y} (tol {tol})");
    }
}
