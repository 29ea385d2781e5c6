//! Cyclic Jacobi eigendecomposition for small complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies a real plane rotation that annihilates it. Sweeps
//! continue until the off-diagonal Frobenius norm drops below
//! [`OFF_DIAGONAL_THRESHOLD`].

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub const OFF_DIAGONAL_THRESHOLD: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// stored as columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column(k)
    }

    /// Rebuilds `V diag(f(λ)) V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            let v = self.vector(k);
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] += v[i] * v[j].conj() * w;
                }
            }
        }
        out
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
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

/// Diagonalises a Hermitian matrix. The input is symmetrised as `(A + A†)/2`
/// before rotating, so tiny Hermiticity defects are tolerated.
pub fn eigh(a: &ComplexMatrix) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::Usage(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m = (&a.clone() + &a.adjoint()).scale_real(0.5);
    let mut v = ComplexMatrix::identity(n);

    let mut converged = off_diagonal_norm(&m) < OFF_DIAGONAL_THRESHOLD;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&m) < OFF_DIAGONAL_THRESHOLD;
    }
    if !converged {
        return Err(Error::Domain(format!(
            "Jacobi iteration did not converge after {MAX_SWEEPS} sweeps"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, dst)] = v[(i, src)];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let n = m.rows();
    let phase = Complex64::from_polar(1.0, -apq.arg());
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let theta = 0.5 * (2.0 * r).atan2(aqq - app);
    let (s, c) = theta.sin_cos();

    // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]] restricted to (p, q).
    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = phase * (-s);
    let g_qq = phase * c;

    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * g_pp + akq * g_qp;
        m[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        m[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

/// Eigenvalues only, ascending.
pub fn eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(eigh(a)?.values)
}

/// Trace norm `‖A‖₁ = Σ|λᵢ|` of a Hermitian matrix.
pub fn trace_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(eigenvalues(a)?.iter().map(|x| x.abs()).sum())
}
