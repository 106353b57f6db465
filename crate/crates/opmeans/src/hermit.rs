//! Dense Hermitian linear algebra: eigendecomposition, spectral-calculus
//! matrix functions, Hermitization, and tolerance-aware Loewner comparison.
//!
//! Everything here is a pure function over immutable values. The eigensolver
//! is a cyclic Jacobi iteration with complex rotations; it is deterministic
//! for identical input.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative Hermiticity tolerance used when validating raw entries.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Default relative tolerance for PSD verdicts and Loewner comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Condition-number cap for inverses and negative powers.
pub const COND_CAP: f64 = 1e12;

const MAX_JACOBI_SWEEPS: usize = 60;

/// A square complex matrix with no symmetry guarantee. Intermediate products
/// live here until they are Hermitized.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::NotSquare {
                rows: dim,
                cols: entries.len() / dim.max(1),
            });
        }
        Ok(ComplexMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    /// (M + M*)/2, the nearest Hermitian matrix in Frobenius norm.
    pub fn hermitize(&self) -> HermitianMatrix {
        let n = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
            }
        }
        HermitianMatrix { dim: n, entries }
    }

    pub fn fro_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.dim + j]
    }
}

/// Square complex Hermitian matrix. Construction validates the Hermiticity
/// invariant; all arithmetic that stays on the Hermitian manifold is closed.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Validates `entries[i][j] == conj(entries[j][i])` within
    /// `HERMITICITY_TOL` relative to the largest absolute entry.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dim must be >= 1".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::NotSquare {
                rows: dim,
                cols: entries.len() / dim,
            });
        }
        let scale = entries
            .iter()
            .map(|z| z.norm())
            .fold(0.0_f64, f64::max);
        let mut max_dev = 0.0_f64;
        for i in 0..dim {
            for j in 0..=i {
                let dev = (entries[i * dim + j] - entries[j * dim + i].conj()).norm();
                max_dev = max_dev.max(dev);
            }
        }
        if max_dev > HERMITICITY_TOL * scale.max(1e-300) && max_dev > 0.0 {
            return Err(Error::NotHermitian {
                max_dev,
                tol: HERMITICITY_TOL * scale,
            });
        }
        // Snap to the manifold so downstream arithmetic sees exact symmetry.
        Ok(ComplexMatrix { dim, entries }.hermitize())
    }

    pub fn zeros(dim: usize) -> Self {
        HermitianMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut m = Self::zeros(dim);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * dim + i] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn from_real(dim: usize, real: &[f64]) -> Result<Self> {
        let entries = real.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn as_complex(&self) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.clone(),
        }
    }

    pub fn add(&self, rhs: &HermitianMatrix) -> Result<HermitianMatrix> {
        self.check_dim(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(HermitianMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn sub(&self, rhs: &HermitianMatrix) -> Result<HermitianMatrix> {
        self.check_dim(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(HermitianMatrix {
            dim: self.dim,
            entries,
        })
    }

    /// Scaling by a real keeps the matrix Hermitian.
    pub fn scale(&self, c: f64) -> HermitianMatrix {
        HermitianMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }

    pub fn fro_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn check_dim(&self, rhs: &HermitianMatrix) -> Result<()> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(())
    }

    /// Eigendecomposition by cyclic Jacobi with complex plane rotations.
    /// Eigenvalues come back sorted ascending with matching eigenvector
    /// columns; the iteration order is fixed, so the result is deterministic.
    pub fn eigh(&self) -> Result<SpectralDecomposition> {
        let n = self.dim;
        let mut a = self.as_complex();
        let mut v = ComplexMatrix::identity(n);
        let norm = self.fro_norm();
        let stop = 1e-14 * norm.max(1e-300);

        let mut converged = n <= 1 || off_diagonal_norm(&a) <= stop;
        let mut sweeps = 0;
        while !converged {
            if sweeps >= MAX_JACOBI_SWEEPS {
                return Err(Error::NoConvergence { sweeps });
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
            sweeps += 1;
            converged = off_diagonal_norm(&a) <= stop;
        }

        let mut order: Vec<usize> = (0..n).collect();
        let eigs: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
        order.sort_by(|&i, &j| eigs[i].partial_cmp(&eigs[j]).unwrap());

        let mut eigenvalues = Vec::with_capacity(n);
        let mut vectors = ComplexMatrix::zeros(n);
        for (col, &src) in order.iter().enumerate() {
            eigenvalues.push(eigs[src]);
            for row in 0..n {
                vectors[(row, col)] = v[(row, src)];
            }
        }
        Ok(SpectralDecomposition {
            eigenvalues,
            vectors,
        })
    }

    /// Spectral calculus: V f(Lambda) V*, Hermitized. Every eigenvalue must
    /// satisfy `domain_check`, otherwise the offending eigenvalue is named.
    pub fn apply_spectral_function(
        &self,
        function: &str,
        f: impl Fn(f64) -> f64,
        domain_check: impl Fn(f64) -> bool,
    ) -> Result<HermitianMatrix> {
        let decomp = self.eigh()?;
        for &lambda in &decomp.eigenvalues {
            if !domain_check(lambda) {
                return Err(Error::Domain {
                    function: function.to_string(),
                    eigenvalue: lambda,
                });
            }
        }
        let mapped: Vec<f64> = decomp.eigenvalues.iter().map(|&l| f(l)).collect();
        Ok(decomp.reconstruct_with(&mapped))
    }

    /// Guard shared by inverses and negative powers: rejects lambda_min <= 0
    /// and cond > `COND_CAP` with distinct errors.
    fn checked_pd_decomposition(&self) -> Result<SpectralDecomposition> {
        let decomp = self.eigh()?;
        let lambda_min = decomp.eigenvalues[0];
        let lambda_max = *decomp.eigenvalues.last().unwrap();
        if lambda_min <= 0.0 {
            return Err(Error::NotPositiveDefinite { lambda_min });
        }
        let cond = lambda_max / lambda_min;
        if cond > COND_CAP {
            return Err(Error::IllConditioned {
                cond,
                cap: COND_CAP,
            });
        }
        Ok(decomp)
    }

    pub fn sqrt(&self) -> Result<HermitianMatrix> {
        self.apply_spectral_function("sqrt", f64::sqrt, |l| l >= 0.0)
    }

    pub fn inverse(&self) -> Result<HermitianMatrix> {
        let d = self.checked_pd_decomposition()?;
        let mapped: Vec<f64> = d.eigenvalues.iter().map(|&l| 1.0 / l).collect();
        Ok(d.reconstruct_with(&mapped))
    }

    pub fn inv_sqrt(&self) -> Result<HermitianMatrix> {
        let d = self.checked_pd_decomposition()?;
        let mapped: Vec<f64> = d.eigenvalues.iter().map(|&l| 1.0 / l.sqrt()).collect();
        Ok(d.reconstruct_with(&mapped))
    }

    /// t^p computed as exp(p ln t); negative p goes through the PD guard.
    pub fn powf(&self, p: f64) -> Result<HermitianMatrix> {
        if p < 0.0 {
            let d = self.checked_pd_decomposition()?;
            let mapped: Vec<f64> = d.eigenvalues.iter().map(|&l| (p * l.ln()).exp()).collect();
            return Ok(d.reconstruct_with(&mapped));
        }
        self.apply_spectral_function("powf", |l| (p * l.ln()).exp(), |l| l > 0.0)
    }

    /// PSD check with relative tolerance: true iff
    /// lambda_min >= -tol * max(1, |lambda|_max). The witness is a unit
    /// eigenvector for lambda_min.
    pub fn psd_verdict(&self, tol: f64) -> Result<PsdVerdict> {
        if tol <= 0.0 {
            return Err(Error::InvalidParameter("tol must be positive".into()));
        }
        let d = self.eigh()?;
        let lambda_min = d.eigenvalues[0];
        let spectral = d
            .eigenvalues
            .iter()
            .map(|l| l.abs())
            .fold(0.0_f64, f64::max);
        let scale = spectral.max(1.0);
        Ok(PsdVerdict {
            is_psd: lambda_min >= -tol * scale,
            lambda_min,
            witness: d.eigenvector(0),
        })
    }
}

/// Eigenvalues (ascending) plus orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.dim()).map(|i| self.vectors[(i, k)]).collect()
    }

    /// V diag(values) V*, Hermitized.
    pub fn reconstruct_with(&self, values: &[f64]) -> HermitianMatrix {
        let n = self.dim();
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.vectors[(i, k)] * self.vectors[(j, k)].conj() * values[k];
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc.conj();
            }
        }
        for i in 0..n {
            out[(i, i)] = Complex64::new(out[(i, i)].re, 0.0);
        }
        out.hermitize()
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.reconstruct_with(&self.eigenvalues)
    }
}

/// Result of a one-sided PSD check.
#[derive(Debug, Clone)]
pub struct PsdVerdict {
    pub is_psd: bool,
    pub lambda_min: f64,
    pub witness: Vec<Complex64>,
}

/// Loewner relation between two Hermitian matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LoewnerRelation {
    /// A <= B
    Le,
    /// A >= B
    Ge,
    /// A = B within tolerance
    Eq,
    Incomparable,
}

/// Verdict of `loewner_compare` with margins both ways. `margin_le` is
/// lambda_min(B - A), `margin_ge` is lambda_min(A - B). Witnesses are the
/// eigenpairs attaining a violated minimum; both are present when the pair
/// is incomparable.
#[derive(Debug, Clone)]
pub struct LoewnerVerdict {
    pub relation: LoewnerRelation,
    pub margin_le: f64,
    pub margin_ge: f64,
    pub witness_le: Option<(f64, Vec<Complex64>)>,
    pub witness_ge: Option<(f64, Vec<Complex64>)>,
}

/// Compares A and B in the Loewner order with relative tolerance `tol`.
pub fn loewner_compare(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    tol: f64,
) -> Result<LoewnerVerdict> {
    let b_minus_a = b.sub(a)?;
    let a_minus_b = a.sub(b)?;
    let le = b_minus_a.psd_verdict(tol)?;
    let ge = a_minus_b.psd_verdict(tol)?;
    let relation = match (le.is_psd, ge.is_psd) {
        (true, true) => LoewnerRelation::Eq,
        (true, false) => LoewnerRelation::Le,
        (false, true) => LoewnerRelation::Ge,
        (false, false) => LoewnerRelation::Incomparable,
    };
    Ok(LoewnerVerdict {
        relation,
        margin_le: le.lambda_min,
        margin_ge: ge.lambda_min,
        witness_le: (!le.is_psd).then(|| (le.lambda_min, le.witness.clone())),
        witness_ge: (!ge.is_psd).then(|| (ge.lambda_min, ge.witness.clone())),
    })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One complex Jacobi rotation zeroing a[(p,q)]. The 2x2 pivot block
/// [[alpha, m e^{i phi}], [m e^{-i phi}, gamma]] is diagonalized by the
/// unitary U = [[c, -s e^{i phi}], [s e^{-i phi}, c]] with
/// tan(2 theta) = 2m / (alpha - gamma).
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let m = apq.norm();
    if m < 1e-300 {
        return;
    }
    let phase = apq / m;
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;

    let tau = (alpha - gamma) / (2.0 * m);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.dim();
    let s_phase = phase * s; // s e^{i phi}
    let s_phase_conj = s_phase.conj(); // s e^{-i phi}

    // A <- A U (columns p, q)
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * c + aiq * s_phase_conj;
        a[(i, q)] = -aip * s_phase + aiq * c;
    }
    // A <- U* A (rows p, q)
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj * c + aqj * s_phase;
        a[(q, j)] = -apj * s_phase_conj + aqj * c;
    }
    // Pivot entries are known exactly.
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    // V <- V U
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c + viq * s_phase_conj;
        v[(i, q)] = -vip * s_phase + viq * c;
    }
}

/// On-disk matrix format: {"dim": n, "real": n x n, "imag": optional n x n}.
#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub real: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imag: Option<Vec<Vec<f64>>>,
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<HermitianMatrix> {
        let n = self.dim;
        let check_shape = |rows: &Vec<Vec<f64>>| -> Result<()> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::NotSquare {
                    rows: rows.len(),
                    cols: rows.first().map_or(0, |r| r.len()),
                });
            }
            Ok(())
        };
        check_shape(&self.real)?;
        if let Some(imag) = &self.imag {
            check_shape(imag)?;
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let im = self.imag.as_ref().map_or(0.0, |m| m[i][j]);
                entries.push(Complex64::new(self.real[i][j], im));
            }
        }
        HermitianMatrix::new(n, entries)
    }

    pub fn from_matrix(m: &HermitianMatrix) -> Self {
        let n = m.dim();
        let real = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).re).collect())
            .collect();
        let has_imag = (0..n).any(|i| (0..n).any(|j| m.get(i, j).im != 0.0));
        let imag = has_imag.then(|| {
            (0..n)
                .map(|i| (0..n).map(|j| m.get(i, j).im).collect())
                .collect()
        });
        MatrixJson {
            dim: n,
            real,
            imag,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat2(a: f64, b: f64, c: f64, d: f64) -> HermitianMatrix {
        HermitianMatrix::from_real(2, &[a, b, c, d]).unwrap()
    }

    #[test]
    fn eigh_diagonal() {
        let d = HermitianMatrix::diagonal(&[3.0, 1.0]).eigh().unwrap();
        assert_eq!(d.eigenvalues, vec![1.0, 3.0]);
        assert!((d.eigenvector(0)[1].norm() - 1.0).abs() < 1e-14);
        assert!((d.eigenvector(1)[0].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigh_identity() {
        let d = HermitianMatrix::identity(3).eigh().unwrap();
        assert_eq!(d.eigenvalues, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn eigh_symmetric_2x2() {
        let d = mat2(2.0, 1.0, 1.0, 2.0).eigh().unwrap();
        assert!((d.eigenvalues[0] - 1.0).abs() < 1e-13);
        assert!((d.eigenvalues[1] - 3.0).abs() < 1e-13);
        // first eigenvector proportional to (1, -1)/sqrt(2)
        let v = d.eigenvector(0);
        let ratio = v[0] / v[1];
        assert!((ratio + Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn eigh_complex_entries() {
        let h = HermitianMatrix::new(
            2,
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(2.0, 0.0),
            ],
        )
        .unwrap();
        let d = h.eigh().unwrap();
        assert!((d.eigenvalues[0] - 1.0).abs() < 1e-13);
        assert!((d.eigenvalues[1] - 3.0).abs() < 1e-13);
        let resid = d.reconstruct().sub(&h).unwrap().fro_norm();
        assert!(resid < 1e-13 * h.fro_norm());
    }

    #[test]
    fn spectral_sqrt_diagonal() {
        let s = HermitianMatrix::diagonal(&[4.0, 9.0]).sqrt().unwrap();
        assert!((s.get(0, 0).re - 2.0).abs() < 1e-14);
        assert!((s.get(1, 1).re - 3.0).abs() < 1e-14);
        assert!(s.get(0, 1).norm() < 1e-14);
    }

    #[test]
    fn spectral_inverse_diagonal() {
        let s = HermitianMatrix::diagonal(&[2.0, 4.0]).inverse().unwrap();
        assert!((s.get(0, 0).re - 0.5).abs() < 1e-14);
        assert!((s.get(1, 1).re - 0.25).abs() < 1e-14);
    }

    #[test]
    fn spectral_sqrt_2x2() {
        let s = mat2(2.0, 1.0, 1.0, 2.0).sqrt().unwrap();
        let hi = (3.0_f64.sqrt() + 1.0) / 2.0;
        let lo = (3.0_f64.sqrt() - 1.0) / 2.0;
        assert!((s.get(0, 0).re - hi).abs() < 1e-12);
        assert!((s.get(0, 1).re - lo).abs() < 1e-12);
        let sq = s.as_complex().mul(&s.as_complex()).unwrap().hermitize();
        assert!(sq.sub(&mat2(2.0, 1.0, 1.0, 2.0)).unwrap().fro_norm() < 1e-12);
    }

    #[test]
    fn sqrt_rejects_negative_eigenvalue() {
        let err = mat2(1.0, 2.0, 2.0, 1.0).sqrt().unwrap_err();
        match err {
            Error::Domain { eigenvalue, .. } => assert!((eigenvalue + 1.0).abs() < 1e-12),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn inverse_rejects_singular() {
        let err = HermitianMatrix::diagonal(&[1.0, 0.0]).inverse().unwrap_err();
        assert!(matches!(err, Error::NotPositiveDefinite { .. }));
    }

    #[test]
    fn inverse_rejects_ill_conditioned() {
        let err = HermitianMatrix::diagonal(&[1e-14, 1.0]).inverse().unwrap_err();
        assert!(matches!(err, Error::IllConditioned { .. }));
    }

    #[test]
    fn hermitize_examples() {
        let m = ComplexMatrix::from_entries(
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let h = m.hermitize();
        assert!((h.get(0, 1).re - 0.5).abs() < 1e-15);
        assert!((h.get(1, 0).re - 0.5).abs() < 1e-15);

        let already = ComplexMatrix::from_entries(
            2,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(2.0, 1.0),
                Complex64::new(2.0, -1.0),
                Complex64::new(3.0, 0.0),
            ],
        )
        .unwrap();
        let h2 = already.hermitize();
        assert_eq!(h2.get(0, 1), Complex64::new(2.0, 1.0));
    }

    #[test]
    fn non_hermitian_rejected() {
        let err = HermitianMatrix::from_real(2, &[1.0, 2.0, 5.0, 1.0]).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { .. }));
    }

    #[test]
    fn psd_verdict_examples() {
        let v = HermitianMatrix::diagonal(&[1.0, 0.0])
            .psd_verdict(DEFAULT_TOL)
            .unwrap();
        assert!(v.is_psd);
        assert_eq!(v.lambda_min, 0.0);
        assert!((v.witness[1].norm() - 1.0).abs() < 1e-14);

        let v = HermitianMatrix::diagonal(&[1.0, -1e-6])
            .psd_verdict(1e-9)
            .unwrap();
        assert!(!v.is_psd);
        assert!((v.lambda_min + 1e-6).abs() < 1e-18);

        let v = mat2(1.0, 2.0, 2.0, 1.0).psd_verdict(DEFAULT_TOL).unwrap();
        assert!(!v.is_psd);
        assert!((v.lambda_min + 1.0).abs() < 1e-12);
        let ratio = v.witness[0] / v.witness[1];
        assert!((ratio + Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn loewner_compare_examples() {
        let a = HermitianMatrix::diagonal(&[1.0, 2.0]);
        let b = HermitianMatrix::diagonal(&[2.0, 3.0]);
        let v = loewner_compare(&a, &b, DEFAULT_TOL).unwrap();
        assert_eq!(v.relation, LoewnerRelation::Le);
        assert_eq!(v.margin_le, 1.0);

        let v = loewner_compare(&a, &a, DEFAULT_TOL).unwrap();
        assert_eq!(v.relation, LoewnerRelation::Eq);
        assert_eq!(v.margin_le, 0.0);
        assert_eq!(v.margin_ge, 0.0);

        let a = HermitianMatrix::diagonal(&[1.0, 3.0]);
        let b = HermitianMatrix::diagonal(&[2.0, 2.0]);
        let v = loewner_compare(&a, &b, DEFAULT_TOL).unwrap();
        assert_eq!(v.relation, LoewnerRelation::Incomparable);
        let (_, w_le) = v.witness_le.as_ref().unwrap();
        let (_, w_ge) = v.witness_ge.as_ref().unwrap();
        assert!((w_le[1].norm() - 1.0).abs() < 1e-14);
        assert!((w_ge[0].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn loewner_dimension_mismatch() {
        let a = HermitianMatrix::identity(2);
        let b = HermitianMatrix::identity(3);
        assert!(matches!(
            loewner_compare(&a, &b, DEFAULT_TOL),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn matrix_json_roundtrip() {
        let json = r#"{"dim":2,"real":[[1.0,2.0],[2.0,3.0]]}"#;
        let parsed: MatrixJson = serde_json::from_str(json).unwrap();
        let m = parsed.to_matrix().unwrap();
        assert_eq!(m.get(0, 1).re, 2.0);
        let back = MatrixJson::from_matrix(&m);
        assert!(back.imag.is_none());
        assert_eq!(back.real[1][0], 2.0);
    }

    #[test]
    fn matrix_json_rejects_non_hermitian() {
        let json = r#"{"dim":2,"real":[[1.0,2.0],[5.0,3.0]]}"#;
        let parsed: MatrixJson = serde_json::from_str(json).unwrap();
        assert!(parsed.to_matrix().is_err());
    }
}
