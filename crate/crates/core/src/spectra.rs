//! Dense eigenvalue kernel.
//!
//! Everything spectral goes through [`symmetric_eigenvalues`], a cyclic
//! Jacobi solver. Singular values are read off the symmetric augmented
//! matrix `[[0, M], [Mᵀ, 0]]`, whose eigenvalues are `±σ_i` padded with
//! zeros; this keeps the absolute error of a small `σ` near machine
//! precision instead of the square root of it that `sqrt(eig(M Mᵀ))` gives.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::zoo::MatrixKind;

/// Symmetry tolerance accepted by the solvers (absolute, per entry).
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Jacobi stops once the off-diagonal Frobenius norm falls below this
/// fraction of the input's Frobenius norm.
pub const JACOBI_REL_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Values of positive semidefinite quantities in `[-CLAMP, 0)` are rounded
/// to zero; anything more negative is reported as a numerical failure.
pub const NEGATIVE_CLAMP: f64 = 1e-10;
/// Spectral values within this fraction of the input's Frobenius norm are
/// set to exactly zero. Jacobi only resolves eigenvalues to about
/// `JACOBI_REL_TOL` of that norm, and leftover noise of order `1e-16`
/// would otherwise contribute `1e-8` to `Σ p_i^α` at `α = 1/2`.
pub const ZERO_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumKind {
    Eigenvalues,
    SingularValues,
    AbsoluteEigenvalues,
}

/// A descending list of real spectral values.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    kind: SpectrumKind,
    source: Option<MatrixKind>,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, kind: SpectrumKind) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            values,
            kind,
            source: None,
        }
    }

    pub fn with_source(mut self, source: MatrixKind) -> Self {
        self.source = Some(source);
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn source(&self) -> Option<MatrixKind> {
        self.source
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Σ |value|`, the energy of the spectrum.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }
}

/// Eigenvalues of a real symmetric matrix, in descending order.
pub fn symmetric_eigenvalues(m: &DenseMatrix) -> Result<Spectrum> {
    m.check_symmetric(SYMMETRY_TOL)?;
    let n = m.rows();
    let mut a: Vec<f64> = m.as_slice().to_vec();
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = avg;
            a[j * n + i] = avg;
        }
    }
    let floor = ZERO_TOL * frobenius(&a);
    jacobi_in_place(&mut a, n)?;
    let diag = (0..n).map(|i| flush(a[i * n + i], floor)).collect();
    Ok(Spectrum::new(diag, SpectrumKind::Eigenvalues))
}

fn frobenius(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn flush(v: f64, floor: f64) -> f64 {
    if v.abs() <= floor {
        0.0
    } else {
        v
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic row-by-row Jacobi on a symmetric `n x n` buffer. On return the
/// diagonal holds the eigenvalues.
fn jacobi_in_place(a: &mut [f64], n: usize) -> Result<()> {
    let norm = frobenius(a);
    if !norm.is_finite() {
        return Err(Error::NonFinite);
    }
    let target = JACOBI_REL_TOL * norm;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(a, n) <= target {
            return Ok(());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    if off_diagonal_norm(a, n) <= target {
        Ok(())
    } else {
        Err(Error::NoConvergence(JACOBI_MAX_SWEEPS))
    }
}

fn clamp_nonnegative(v: f64) -> Result<f64> {
    if v >= 0.0 {
        Ok(v)
    } else if v >= -NEGATIVE_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::NegativeEigenvalue(v))
    }
}

/// Singular values of any rectangular matrix, descending, padded with
/// zeros to at least `pad_to` entries.
pub fn singular_values(m: &DenseMatrix, pad_to: usize) -> Result<Spectrum> {
    let (r, c) = (m.rows(), m.cols());
    let k = r.min(c);
    let mut values = Vec::with_capacity(pad_to.max(k));
    if k > 0 {
        let size = r + c;
        let mut aug = vec![0.0; size * size];
        for i in 0..r {
            for j in 0..c {
                let x = m[(i, j)];
                aug[i * size + r + j] = x;
                aug[(r + j) * size + i] = x;
            }
        }
        let floor = ZERO_TOL * frobenius(&aug);
        jacobi_in_place(&mut aug, size)?;
        let mut eig: Vec<f64> = (0..size).map(|i| flush(aug[i * size + i], floor)).collect();
        eig.sort_by(|a, b| b.total_cmp(a));
        for &v in &eig[..k] {
            values.push(clamp_nonnegative(v)?);
        }
    }
    values.resize(pad_to.max(k), 0.0);
    Ok(Spectrum::new(values, SpectrumKind::SingularValues))
}

/// `|λ_i|` for a real skew-symmetric matrix, whose eigenvalues are `±iσ`.
pub fn skew_absolute_eigenvalues(m: &DenseMatrix) -> Result<Spectrum> {
    m.check_skew(SYMMETRY_TOL)?;
    let s = singular_values(m, m.rows())?;
    Ok(Spectrum::new(s.values, SpectrumKind::AbsoluteEigenvalues))
}

/// `Σ |value_i|^α` with `0^α = 0`.
pub fn spectral_moment(s: &Spectrum, alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::AlphaNonPositive(alpha));
    }
    Ok(s.values
        .iter()
        .map(|v| if *v == 0.0 { 0.0 } else { v.abs().powf(alpha) })
        .sum())
}

/// Determinant by LU factorization with partial pivoting. A pivot below
/// `n·ε·max|a_ij|` makes the result exactly zero.
pub fn determinant(m: &DenseMatrix) -> Result<f64> {
    m.check_square()?;
    let n = m.rows();
    let mut a = m.as_slice().to_vec();
    let scale = a.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let tiny = n as f64 * f64::EPSILON * scale;
    let mut det = 1.0;
    for col in 0..n {
        let (pivot_row, pivot_abs) =
            (col..n)
                .map(|r| (r, a[r * n + col].abs()))
                .fold(
                    (col, -1.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
        if pivot_abs <= tiny {
            return Ok(0.0);
        }
        if pivot_row != col {
            for j in 0..n {
                a.swap(col * n + j, pivot_row * n + j);
            }
            det = -det;
        }
        let pivot = a[col * n + col];
        det *= pivot;
        for r in col + 1..n {
            let factor = a[r * n + col] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                a[r * n + j] -= factor * a[col * n + j];
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn diagonal_and_k2() {
        let d = DenseMatrix::from_diagonal(&[3.0, 1.0, 2.0]);
        assert_eq!(
            symmetric_eigenvalues(&d).unwrap().values(),
            &[3.0, 2.0, 1.0]
        );
        let a = DenseMatrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        let s = symmetric_eigenvalues(&a).unwrap();
        assert!(close(s.values(), &[1.0, -1.0], 1e-15));
        assert_eq!(s.kind(), SpectrumKind::Eigenvalues);
    }

    #[test]
    fn rejects_nonsymmetric() {
        let a = DenseMatrix::from_rows(&[[0.0, 1.0], [0.5, 0.0]]).unwrap();
        assert!(matches!(
            symmetric_eigenvalues(&a),
            Err(Error::NonSymmetric { .. })
        ));
        let s = DenseMatrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        assert!(matches!(
            skew_absolute_eigenvalues(&s),
            Err(Error::NonSkew { .. })
        ));
    }

    #[test]
    fn zero_matrices() {
        let z = DenseMatrix::zeros(3, 3);
        assert_eq!(symmetric_eigenvalues(&z).unwrap().values(), &[0.0; 3]);
        assert_eq!(singular_values(&z, 3).unwrap().values(), &[0.0; 3]);
        assert_eq!(skew_absolute_eigenvalues(&z).unwrap().values(), &[0.0; 3]);
        let wide = DenseMatrix::zeros(0, 0);
        assert!(singular_values(&wide, 2).unwrap().values() == [0.0, 0.0]);
    }

    #[test]
    fn singular_values_pad() {
        let col = DenseMatrix::from_rows(&[[1.0], [1.0]]).unwrap();
        let s = singular_values(&col, 2).unwrap();
        assert!(close(s.values(), &[2f64.sqrt(), 0.0], 1e-15));
        assert_eq!(singular_values(&col, 0).unwrap().len(), 1);
    }

    #[test]
    fn skew_pair() {
        let k = DenseMatrix::from_rows(&[[0.0, 1.0], [-1.0, 0.0]]).unwrap();
        let s = skew_absolute_eigenvalues(&k).unwrap();
        assert!(close(s.values(), &[1.0, 1.0], 1e-15));
        assert_eq!(s.kind(), SpectrumKind::AbsoluteEigenvalues);
        assert!((determinant(&k).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn moments() {
        let s = Spectrum::new(vec![4.0, 1.0, 1.0], SpectrumKind::Eigenvalues);
        assert_eq!(spectral_moment(&s, 2.0).unwrap(), 18.0);
        assert_eq!(spectral_moment(&s, 1.0).unwrap(), s.energy());
        let z = Spectrum::new(vec![0.0; 4], SpectrumKind::Eigenvalues);
        assert_eq!(spectral_moment(&z, 0.5).unwrap(), 0.0);
        assert_eq!(spectral_moment(&s, 0.0), Err(Error::AlphaNonPositive(0.0)));
        assert!(spectral_moment(&s, -1.0).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&DenseMatrix::identity(4)).unwrap(), 1.0);
        let a = DenseMatrix::from_rows(&[[0.0, 2.0], [3.0, 1.0]]).unwrap();
        assert!((determinant(&a).unwrap() + 6.0).abs() < 1e-14);
        let singular = DenseMatrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]).unwrap();
        assert_eq!(determinant(&singular).unwrap(), 0.0);
        assert!(determinant(&DenseMatrix::zeros(2, 3)).is_err());
        assert_eq!(determinant(&DenseMatrix::zeros(0, 0)).unwrap(), 1.0);
    }

    #[test]
    fn sorted_descending_with_negatives() {
        let a =
            DenseMatrix::from_rows(&[[2.0, 0.0, 0.0], [0.0, -5.0, 0.0], [0.0, 0.0, 0.5]]).unwrap();
        assert_eq!(
            symmetric_eigenvalues(&a).unwrap().values(),
            &[2.0, 0.5, -5.0]
        );
    }
}
