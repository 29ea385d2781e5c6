//! Bell-diagonal two-qubit states: relative entropy of entanglement in closed
//! form, the matching separable state, and a numerical minimiser used to
//! check both.

use super::channel::{bell_basis, pauli_unitaries};
use super::eigen::eigenvalues;
use super::entropy::{binary_entropy, xlog2x};
use super::matrix::ComplexMatrix;
use super::state::{DensityMatrix, TOL_PSD, TOL_TRACE};
use crate::error::{Error, Result};

/// Four Bell-basis weights, stored in descending order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagonalSpectrum {
    lambdas: [f64; 4],
}

impl BellDiagonalSpectrum {
    pub fn new(lambdas: [f64; 4]) -> Result<Self> {
        if lambdas.iter().any(|l| !(0.0..=1.0).contains(l)) {
            return Err(Error::Domain(format!(
                "Bell weights {lambdas:?} must lie in [0, 1]"
            )));
        }
        let total: f64 = lambdas.iter().sum();
        if (total - 1.0).abs() > TOL_TRACE {
            return Err(Error::Domain(format!(
                "Bell weights sum to {total}, expected 1"
            )));
        }
        let mut sorted = lambdas;
        sorted.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { lambdas: sorted })
    }

    /// Reads the spectrum off a Bell-diagonal density matrix.
    pub fn of_state(rho: &DensityMatrix) -> Result<Self> {
        if !is_bell_diagonal(rho, 1e-9)? {
            return Err(Error::Domain("state is not Bell-diagonal".into()));
        }
        let w = bell_weights(rho)?;
        Self::new(w.map(|x| x.clamp(0.0, 1.0)))
    }

    pub fn lambdas(&self) -> [f64; 4] {
        self.lambdas
    }

    pub fn max(&self) -> f64 {
        self.lambdas[0]
    }

    /// `Σ_k λ_k |B_k⟩⟨B_k|`, assigning the sorted weights to B_0..B_3.
    pub fn to_density_matrix(&self) -> DensityMatrix {
        let basis = bell_basis();
        let mut m = ComplexMatrix::zeros(4, 4);
        for (lambda, b) in self.lambdas.iter().zip(basis.iter()) {
            m = &m + &ComplexMatrix::outer(b, b).scale_real(*lambda);
        }
        DensityMatrix::new(m).expect("convex mixture of Bell projectors is a state")
    }
}

/// Diagonal of a two-qubit operator in the Pauli-indexed Bell basis
/// `|B_k⟩ = (I ⊗ U_k)|Φ⟩`, unsorted.
pub fn bell_weights(rho: &DensityMatrix) -> Result<[f64; 4]> {
    if rho.dim() != 4 {
        return Err(Error::Usage(format!(
            "expected a two-qubit state, got dimension {}",
            rho.dim()
        )));
    }
    let basis = bell_basis();
    Ok(std::array::from_fn(|k| {
        rho.matrix().sandwich(&basis[k], &basis[k]).re
    }))
}

/// True if every off-diagonal Bell-basis element is below `tol` in modulus.
pub fn is_bell_diagonal(rho: &DensityMatrix, tol: f64) -> Result<bool> {
    if rho.dim() != 4 {
        return Ok(false);
    }
    let basis = bell_basis();
    for j in 0..4 {
        for k in 0..4 {
            if j != k && rho.matrix().sandwich(&basis[j], &basis[k]).norm() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Partial transpose on the second factor of a `2 ⊗ d` operator.
pub fn partial_transpose(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = m.rows();
    if !m.is_square() || !n.is_multiple_of(2) {
        return Err(Error::Usage(format!(
            "expected a 2⊗d operator, got {}x{}",
            n,
            m.cols()
        )));
    }
    let d = n / 2;
    let mut out = ComplexMatrix::zeros(n, n);
    for a in 0..2 {
        for b in 0..d {
            for a2 in 0..2 {
                for b2 in 0..d {
                    out[(a * d + b2, a2 * d + b)] = m[(a * d + b, a2 * d + b2)];
                }
            }
        }
    }
    Ok(out)
}

/// Peres–Horodecki test: the partial transpose has no eigenvalue below `−τ_psd`.
pub fn is_ppt(rho: &DensityMatrix) -> Result<bool> {
    let pt = partial_transpose(rho.matrix())?;
    Ok(eigenvalues(&pt)?[0] >= -TOL_PSD)
}

/// Bilateral Pauli twirl `ρ ↦ ¼ Σ_k (U_k ⊗ U_k*) ρ (U_k ⊗ U_k*)†`.
///
/// An LOCC that maps any two-qubit state to the Bell-diagonal state with the
/// same Bell-basis diagonal.
pub fn bilateral_pauli_twirl(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::Usage(format!(
            "expected a two-qubit state, got dimension {}",
            rho.dim()
        )));
    }
    let mut out = ComplexMatrix::zeros(4, 4);
    for u in pauli_unitaries() {
        let op = u.kron(&u.conj());
        out = &out + &(&(&op * rho.matrix()) * &op.adjoint());
    }
    DensityMatrix::new(out.scale_real(0.25))
}

/// Relative entropy of entanglement of a Bell-diagonal state:
/// `1 − H₂(λ_max)` when `λ_max ≥ 1/2`, otherwise 0.
pub fn ree_bell_diagonal(spec: &BellDiagonalSpectrum) -> f64 {
    let top = spec.max();
    if top < 0.5 {
        return 0.0;
    }
    let h = binary_entropy(top).expect("Bell weight is a probability");
    (1.0 - h).clamp(0.0, 1.0)
}

/// Bell-diagonal separable state attaining [`ree_bell_diagonal`].
///
/// Weights are `(1/2, λ₂/(2(1−λ₁)), λ₃/(2(1−λ₁)), λ₄/(2(1−λ₁)))` in the same
/// basis order as [`BellDiagonalSpectrum::to_density_matrix`]. Spectra with
/// `λ_max < 1/2` are already separable and returned unchanged; for the pure
/// Bell state the remaining half goes to the second basis element.
pub fn closest_separable_bell_diagonal(spec: &BellDiagonalSpectrum) -> DensityMatrix {
    let l = spec.lambdas();
    if l[0] < 0.5 {
        return spec.to_density_matrix();
    }
    let rest = 1.0 - l[0];
    let weights = if rest <= f64::EPSILON {
        [0.5, 0.5, 0.0, 0.0]
    } else {
        [
            0.5,
            l[1] / (2.0 * rest),
            l[2] / (2.0 * rest),
            l[3] / (2.0 * rest),
        ]
    };
    let basis = bell_basis();
    let mut m = ComplexMatrix::zeros(4, 4);
    for (w, b) in weights.iter().zip(basis.iter()) {
        m = &m + &ComplexMatrix::outer(b, b).scale_real(*w);
    }
    DensityMatrix::new(m).expect("convex mixture of Bell projectors is a state")
}

const ORACLE_GRID: usize = 40;
const ORACLE_MIN_STEP: f64 = 1e-12;

/// Relative entropy between commuting Bell-diagonal operators.
/// Closest separable state of a Bell-diagonal `rho`, kept in `rho`'s own
/// Bell frame (no reordering of the weights).
pub fn closest_separable_state(rho: &DensityMatrix) -> Result<DensityMatrix> {
    let w = bell_weights(rho)?.map(|x| x.clamp(0.0, 1.0));
    let top = (0..4).fold(0, |k, i| if w[i] > w[k] { i } else { k });
    let rest = 1.0 - w[top];
    let weights: [f64; 4] = if w[top] < 0.5 {
        w
    } else if rest <= f64::EPSILON {
        // any partner works; take the next Pauli index
        std::array::from_fn(|i| {
            if i == top || i == (top + 1) % 4 {
                0.5
            } else {
                0.0
            }
        })
    } else {
        std::array::from_fn(|i| if i == top { 0.5 } else { w[i] / (2.0 * rest) })
    };
    let total: f64 = weights.iter().sum();
    let basis = bell_basis();
    let mut m = ComplexMatrix::zeros(4, 4);
    for (x, b) in weights.iter().zip(basis.iter()) {
        m = &m + &ComplexMatrix::outer(b, b).scale_real(*x / total);
    }
    DensityMatrix::new(m)
}

fn bell_kl(lambdas: &[f64; 4], mus: &[f64; 4]) -> f64 {
    let mut acc = 0.0;
    for (&l, &m) in lambdas.iter().zip(mus) {
        if l <= 0.0 {
            continue;
        }
        if m <= 0.0 {
            return f64::INFINITY;
        }
        acc += xlog2x(l) - l * m.log2();
    }
    acc
}

fn feasible(mus: &[f64; 4]) -> bool {
    mus.iter().all(|&m| (0.0..=0.5).contains(&m))
}

/// Numerical upper bound on the REE: minimises `S(ρ‖γ)` over separable
/// Bell-diagonal γ (weights in `[0, 1/2]`) by a uniform grid followed by
/// pairwise mass-transfer pattern search with step halving.
pub fn ree_numeric_oracle(spec: &BellDiagonalSpectrum) -> f64 {
    let lambdas = spec.lambdas();
    let step = 1.0 / ORACLE_GRID as f64;
    let half = ORACLE_GRID / 2;

    let mut best = [0.25; 4];
    let mut best_val = bell_kl(&lambdas, &best);
    for i in 0..=half {
        for j in 0..=half {
            for k in 0..=half {
                let used = i + j + k;
                if used > ORACLE_GRID || ORACLE_GRID - used > half {
                    continue;
                }
                let mus = [
                    i as f64 * step,
                    j as f64 * step,
                    k as f64 * step,
                    (ORACLE_GRID - used) as f64 * step,
                ];
                let val = bell_kl(&lambdas, &mus);
                if val < best_val {
                    best_val = val;
                    best = mus;
                }
            }
        }
    }

    let mut delta = step;
    while delta >= ORACLE_MIN_STEP {
        let mut improved = false;
        for from in 0..4 {
            for to in 0..4 {
                if from == to {
                    continue;
                }
                let mut trial = best;
                trial[from] -= delta;
                trial[to] += delta;
                if !feasible(&trial) {
                    continue;
                }
                let val = bell_kl(&lambdas, &trial);
                if val < best_val {
                    best_val = val;
                    best = trial;
                    improved = true;
                }
            }
        }
        if !improved {
            delta *= 0.5;
        }
    }
    best_val.max(0.0)
}
