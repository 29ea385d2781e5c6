use num_complex::Complex64;

use super::eigen::trace_norm;
use super::matrix::{c, ComplexMatrix};
use super::state::{DensityMatrix, TOL_CPTP};
use crate::error::{Error, Result};

/// Completely positive trace-preserving map given by Kraus operators
/// `K_k : C^dim_in → C^dim_out`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    dim_in: usize,
    dim_out: usize,
    kraus_ops: Vec<ComplexMatrix>,
}

impl KrausChannel {
    /// Checks shapes and the completeness relation `Σ K†K = I` within [`TOL_CPTP`].
    pub fn new(kraus_ops: Vec<ComplexMatrix>) -> Result<Self> {
        let first = kraus_ops
            .first()
            .ok_or_else(|| Error::Domain("channel needs at least one Kraus operator".into()))?;
        let (dim_out, dim_in) = (first.rows(), first.cols());
        if let Some(bad) = kraus_ops
            .iter()
            .position(|k| (k.rows(), k.cols()) != (dim_out, dim_in))
        {
            return Err(Error::Domain(format!(
                "Kraus operator {bad} has shape {}x{}, expected {dim_out}x{dim_in}",
                kraus_ops[bad].rows(),
                kraus_ops[bad].cols()
            )));
        }
        let mut completeness = ComplexMatrix::zeros(dim_in, dim_in);
        for k in &kraus_ops {
            completeness = &completeness + &(&k.adjoint() * k);
        }
        let defect = completeness.max_abs_diff(&ComplexMatrix::identity(dim_in));
        if defect > TOL_CPTP {
            return Err(Error::Domain(format!(
                "Kraus operators are not trace preserving (defect {defect:.3e})"
            )));
        }
        Ok(Self {
            dim_in,
            dim_out,
            kraus_ops,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim_in: dim,
            dim_out: dim,
            kraus_ops: vec![ComplexMatrix::identity(dim)],
        }
    }

    /// Qubit Pauli channel `ρ ↦ Σ_k p_k U_k ρ U_k†` with U = (I, X, Y, Z).
    pub fn pauli(probs: [f64; 4]) -> Result<Self> {
        if probs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
            return Err(Error::Domain(format!(
                "Pauli probabilities {probs:?} outside [0, 1]"
            )));
        }
        let paulis = pauli_unitaries();
        Self::new(
            probs
                .iter()
                .zip(paulis.iter())
                .filter(|(&p, _)| p > 0.0)
                .map(|(&p, u)| u.scale_real(p.sqrt()))
                .collect(),
        )
    }

    /// Amplitude damping with decay probability `gamma`.
    pub fn amplitude_damping(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::Domain(format!("damping {gamma} outside [0, 1]")));
        }
        let k0 = ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c((1.0 - gamma).sqrt(), 0.0)],
        ])?;
        let k1 = ComplexMatrix::from_rows(vec![
            vec![c(0.0, 0.0), c(gamma.sqrt(), 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])?;
        Self::new(vec![k0, k1])
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn kraus_ops(&self) -> &[ComplexMatrix] {
        &self.kraus_ops
    }

    /// `E(ρ) = Σ K ρ K†` on an arbitrary (not necessarily normalised) operator.
    pub fn apply(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim_out, self.dim_out);
        for k in &self.kraus_ops {
            out = &out + &(&(k * rho) * &k.adjoint());
        }
        out
    }

    /// The channel `ρ ↦ V† E(U ρ U†) V`.
    pub fn conjugated(&self, u: &ComplexMatrix, v: &ComplexMatrix) -> Self {
        let v_dag = v.adjoint();
        Self {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            kraus_ops: self.kraus_ops.iter().map(|k| &(&v_dag * k) * u).collect(),
        }
    }
}

/// The four single-qubit Pauli unitaries (I, X, Y, Z).
pub fn pauli_unitaries() -> [ComplexMatrix; 4] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        ComplexMatrix::identity(2),
        ComplexMatrix::from_rows(vec![vec![z, one], vec![one, z]]).unwrap(),
        ComplexMatrix::from_rows(vec![vec![z, -i], vec![i, z]]).unwrap(),
        ComplexMatrix::from_rows(vec![vec![one, z], vec![z, -one]]).unwrap(),
    ]
}

/// `|Φ⟩ = (|00⟩ + |11⟩)/√2`.
pub fn bell_phi_plus() -> Vec<Complex64> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]
}

/// Bell basis indexed by Pauli: `|B_k⟩ = (I ⊗ U_k)|Φ⟩`.
pub fn bell_basis() -> [Vec<Complex64>; 4] {
    let phi = bell_phi_plus();
    pauli_unitaries().map(|u| {
        let op = ComplexMatrix::identity(2).kron(&u);
        (0..4)
            .map(|i| (0..4).map(|j| op[(i, j)] * phi[j]).sum())
            .collect()
    })
}

/// Choi matrix `σ_E = (I ⊗ E)(Φ)` of a qubit-input channel, with the
/// reference qubit as the first tensor factor.
pub fn choi_matrix(channel: &KrausChannel) -> Result<DensityMatrix> {
    if channel.dim_in != 2 {
        return Err(Error::Usage(format!(
            "Choi construction expects a qubit input, got dimension {}",
            channel.dim_in
        )));
    }
    let phi = bell_phi_plus();
    let phi_proj = ComplexMatrix::outer(&phi, &phi);
    let d = 2 * channel.dim_out;
    let mut sigma = ComplexMatrix::zeros(d, d);
    for k in &channel.kraus_ops {
        let lifted = ComplexMatrix::identity(2).kron(k);
        sigma = &sigma + &(&(&lifted * &phi_proj) * &lifted.adjoint());
    }
    DensityMatrix::new(sigma)
}

/// Outcome of a Weyl-covariance check.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceReport {
    pub covariant: bool,
    /// Trace-norm residual `‖σ_{E_k} − σ_E‖₁` for k = I, X, Y, Z.
    pub residuals: [f64; 4],
}

/// Checks `E(U_k ρ U_k†) = U_k E(ρ) U_k†` for every Pauli `U_k` by comparing the
/// Choi matrix of `ρ ↦ U_k† E(U_k ρ U_k†) U_k` against that of E.
pub fn is_weyl_covariant(channel: &KrausChannel, tol: f64) -> Result<CovarianceReport> {
    if channel.dim_in != 2 || channel.dim_out != 2 {
        return Err(Error::Usage(format!(
            "Weyl covariance check expects a qubit channel, got {}→{}",
            channel.dim_in, channel.dim_out
        )));
    }
    let sigma = choi_matrix(channel)?;
    let mut residuals = [0.0; 4];
    for (slot, u) in residuals.iter_mut().zip(pauli_unitaries().iter()) {
        let twisted = choi_matrix(&channel.conjugated(u, u))?;
        *slot = trace_norm(&(twisted.matrix() - sigma.matrix()))?;
    }
    Ok(CovarianceReport {
        covariant: residuals.iter().all(|&r| r <= tol),
        residuals,
    })
}
