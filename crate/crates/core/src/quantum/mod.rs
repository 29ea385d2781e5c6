//! Small dense quantum-information toolkit: matrices, Hermitian eigensolver,
//! entropies, Kraus channels and Choi matrices, Bell-diagonal REE.

pub mod bell;
pub mod channel;
pub mod eigen;
pub mod entropy;
pub mod matrix;
pub mod state;

pub use bell::{
    bell_weights, bilateral_pauli_twirl, closest_separable_bell_diagonal, closest_separable_state,
    is_bell_diagonal, is_ppt, partial_transpose, ree_bell_diagonal, ree_numeric_oracle,
    BellDiagonalSpectrum,
};
pub use channel::{
    bell_basis, bell_phi_plus, choi_matrix, is_weyl_covariant, pauli_unitaries, CovarianceReport,
    KrausChannel,
};
pub use eigen::{eigenvalues, eigh, trace_norm, HermitianEigen};
pub use entropy::{binary_entropy, relative_entropy, shannon_entropy, vn_entropy};
pub use matrix::ComplexMatrix;
pub use state::DensityMatrix;
