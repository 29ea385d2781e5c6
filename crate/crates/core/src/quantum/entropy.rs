use super::eigen::eigh;
use super::state::{DensityMatrix, TOL_SUPPORT};
use crate::error::{Error, Result};

/// `x log₂ x` with the continuous extension `0 log 0 = 0`.
pub(crate) fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Binary Shannon entropy H₂(p) in bits.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("probability {p} outside [0, 1]")));
    }
    Ok(-xlog2x(p) - xlog2x(1.0 - p))
}

/// Shannon entropy of a probability vector, in bits.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    -probs.iter().map(|&p| xlog2x(p)).sum::<f64>()
}

/// Von Neumann entropy `−Tr ρ log₂ ρ`.
pub fn vn_entropy(rho: &DensityMatrix) -> Result<f64> {
    let spectrum = eigh(rho.matrix())?.values;
    let s = shannon_entropy(&spectrum);
    Ok(s.clamp(0.0, (rho.dim() as f64).log2()))
}

/// Quantum relative entropy `S(ρ‖γ) = Tr ρ (log₂ ρ − log₂ γ)` in bits.
///
/// Returns `+∞` when the support of ρ is not contained in the support of γ,
/// i.e. when ρ puts more than [`TOL_SUPPORT`] weight on the eigenvectors of γ
/// whose eigenvalues fall below [`TOL_SUPPORT`].
pub fn relative_entropy(rho: &DensityMatrix, gamma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != gamma.dim() {
        return Err(Error::Usage(format!(
            "dimension mismatch: {} vs {}",
            rho.dim(),
            gamma.dim()
        )));
    }
    let er = eigh(rho.matrix())?;
    let eg = eigh(gamma.matrix())?;
    let n = rho.dim();

    let rho_vecs: Vec<_> = (0..n).map(|i| er.vector(i)).collect();
    let gamma_vecs: Vec<_> = (0..n).map(|j| eg.vector(j)).collect();

    let mut leakage = 0.0;
    let mut cross = 0.0;
    for (j, wj) in gamma_vecs.iter().enumerate() {
        let qj = eg.values[j];
        // ⟨w_j| ρ |w_j⟩ = Σᵢ pᵢ |⟨vᵢ|w_j⟩|²
        let weight: f64 = rho_vecs
            .iter()
            .zip(&er.values)
            .filter(|(_, &p)| p > 0.0)
            .map(|(vi, &p)| {
                let overlap: num_complex::Complex64 =
                    vi.iter().zip(wj).map(|(a, b)| a.conj() * b).sum();
                p * overlap.norm_sqr()
            })
            .sum();
        if qj < TOL_SUPPORT {
            leakage += weight;
        } else {
            cross += weight * qj.log2();
        }
    }
    if leakage > TOL_SUPPORT {
        return Ok(f64::INFINITY);
    }
    let neg_entropy: f64 = er.values.iter().map(|&p| xlog2x(p)).sum();
    Ok((neg_entropy - cross).max(0.0))
}
