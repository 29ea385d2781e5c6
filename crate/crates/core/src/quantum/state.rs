use num_complex::Complex64;

use super::eigen::{eigenvalues, trace_norm};
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub const TOL_HERMITIAN: f64 = 1e-9;
pub const TOL_TRACE: f64 = 1e-9;
pub const TOL_PSD: f64 = 1e-9;
pub const TOL_CPTP: f64 = 1e-9;
/// Eigenvalues below this threshold are treated as outside the support.
pub const TOL_SUPPORT: f64 = 1e-10;

/// A validated density operator: Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Domain(format!(
                "density matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let defect = matrix.hermiticity_defect();
        if defect > TOL_HERMITIAN {
            return Err(Error::Domain(format!(
                "matrix is not Hermitian (defect {defect:.3e})"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TOL_TRACE || tr.im.abs() > TOL_TRACE {
            return Err(Error::Domain(format!("trace must be 1, got {tr}")));
        }
        let min_eig = eigenvalues(&matrix)?[0];
        if min_eig < -TOL_PSD {
            return Err(Error::Domain(format!(
                "matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})"
            )));
        }
        Ok(Self { matrix })
    }

    /// Pure state |ψ⟩⟨ψ| for a normalised vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        Self::new(ComplexMatrix::outer(psi, psi))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Trace distance `‖ρ − σ‖₁` (unnormalised trace norm of the difference).
    pub fn trace_distance(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::Usage(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        trace_norm(&(&self.matrix - &other.matrix))
    }
}

#[cfg(test)]
mod tests {
    use super::super::matrix::c;
    use super::*;

    #[test]
    fn rejects_non_unit_trace() {
        let m = ComplexMatrix::identity(2);
        assert!(matches!(DensityMatrix::new(m), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_negative_eigenvalue() {
        let m = ComplexMatrix::from_diagonal(&[1.5, -0.5]);
        assert!(matches!(DensityMatrix::new(m), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_rows(vec![
            vec![c(0.5, 0.0), c(0.1, 0.0)],
            vec![c(0.0, 0.0), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(matches!(DensityMatrix::new(m), Err(Error::Domain(_))));
    }

    #[test]
    fn trace_distance_of_orthogonal_pure_states() {
        let zero = DensityMatrix::pure(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let one = DensityMatrix::pure(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((zero.trace_distance(&one).unwrap() - 2.0).abs() < 1e-12);
    }
}
