//! Channel models attached to network edges and their REE weights.

use std::f64::consts::LN_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::entropy::binary_entropy;
use crate::quantum::matrix::{c, ComplexMatrix};
use crate::quantum::{ree_bell_diagonal, BellDiagonalSpectrum, KrausChannel};

const PAULI_SUM_TOL: f64 = 1e-9;

/// Channel model on an edge, tagged by `kind` in JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChannelDescriptor {
    /// Pure-loss bosonic channel with transmissivity `eta ∈ (0, 1)`.
    PureLoss { eta: f64 },
    /// Quantum-limited amplifier with gain `g > 1`.
    QlimAmp { g: f64 },
    /// Qubit dephasing with flip probability `p`.
    Dephasing { p: f64 },
    /// Qubit erasure with erasure probability `p`.
    Erasure { p: f64 },
    /// Qubit Pauli channel with probabilities for (I, X, Y, Z).
    Pauli { probs: [f64; 4] },
    /// Noiseless channel; infinite weight.
    Ideal,
    /// User-supplied REE weight in bits per use.
    Custom { w: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedFormPaper,
    ClosedFormLiterature,
    Custom,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ClosedFormPaper => "closed_form_paper",
            Provenance::ClosedFormLiterature => "closed_form_literature",
            Provenance::Custom => "custom",
        })
    }
}

/// REE weight of an edge in bits per network use; `+∞` for ideal edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeWeight {
    pub value: f64,
    pub distillable: bool,
    pub provenance: Provenance,
}

/// A single failed parameter check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamError {
    pub param: &'static str,
    pub message: String,
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.param, self.message)
    }
}

fn check(errors: &mut Vec<ParamError>, ok: bool, param: &'static str, message: &str) {
    if !ok {
        errors.push(ParamError {
            param,
            message: message.to_string(),
        });
    }
}

fn is_probability(p: f64) -> bool {
    (0.0..=1.0).contains(&p)
}

impl ChannelDescriptor {
    pub fn kind(&self) -> &'static str {
        match self {
            ChannelDescriptor::PureLoss { .. } => "pure_loss",
            ChannelDescriptor::QlimAmp { .. } => "qlim_amp",
            ChannelDescriptor::Dephasing { .. } => "dephasing",
            ChannelDescriptor::Erasure { .. } => "erasure",
            ChannelDescriptor::Pauli { .. } => "pauli",
            ChannelDescriptor::Ideal => "ideal",
            ChannelDescriptor::Custom { .. } => "custom",
        }
    }

    /// Parameters as a comma-separated list, empty for `ideal`.
    pub fn params_label(&self) -> String {
        match self {
            ChannelDescriptor::PureLoss { eta } => eta.to_string(),
            ChannelDescriptor::QlimAmp { g } => g.to_string(),
            ChannelDescriptor::Dephasing { p } | ChannelDescriptor::Erasure { p } => p.to_string(),
            ChannelDescriptor::Pauli { probs } => probs
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(","),
            ChannelDescriptor::Ideal => String::new(),
            ChannelDescriptor::Custom { w } => w.to_string(),
        }
    }

    /// Discrete-variable kinds have a qubit Kraus realisation.
    pub fn is_discrete(&self) -> bool {
        matches!(
            self,
            ChannelDescriptor::Dephasing { .. }
                | ChannelDescriptor::Erasure { .. }
                | ChannelDescriptor::Pauli { .. }
                | ChannelDescriptor::Ideal
        )
    }
}

impl fmt::Display for ChannelDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelDescriptor::Ideal => f.write_str("ideal"),
            other => write!(f, "{}({})", other.kind(), other.params_label()),
        }
    }
}

/// Collects every parameter violation; an empty list means the descriptor is valid.
pub fn validate(desc: &ChannelDescriptor) -> Vec<ParamError> {
    let mut errors = Vec::new();
    match *desc {
        ChannelDescriptor::PureLoss { eta } => {
            check(
                &mut errors,
                eta > 0.0 && eta < 1.0,
                "eta",
                "η must lie in (0,1)",
            );
        }
        ChannelDescriptor::QlimAmp { g } => {
            check(
                &mut errors,
                g > 1.0 && g.is_finite(),
                "g",
                "gain must be finite and > 1",
            );
        }
        ChannelDescriptor::Dephasing { p } | ChannelDescriptor::Erasure { p } => {
            check(&mut errors, is_probability(p), "p", "p must lie in [0,1]");
        }
        ChannelDescriptor::Pauli { probs } => {
            check(
                &mut errors,
                probs.iter().all(|&p| is_probability(p)),
                "probs",
                "each probability must lie in [0,1]",
            );
            let total: f64 = probs.iter().sum();
            check(
                &mut errors,
                (total - 1.0).abs() <= PAULI_SUM_TOL,
                "probs",
                "probabilities must sum to 1",
            );
        }
        ChannelDescriptor::Ideal => {}
        ChannelDescriptor::Custom { w } => {
            check(
                &mut errors,
                w >= 0.0 && w.is_finite(),
                "w",
                "weight must be finite and ≥ 0",
            );
        }
    }
    errors
}

fn ensure_valid(desc: &ChannelDescriptor) -> Result<()> {
    let errors = validate(desc);
    if errors.is_empty() {
        Ok(())
    } else {
        let joined = errors
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        Err(Error::Domain(format!(
            "invalid {} channel: {joined}",
            desc.kind()
        )))
    }
}

/// `−log₂(1 − x)` computed through `ln_1p` for accuracy at small `x`.
fn neg_log2_one_minus(x: f64) -> f64 {
    -(-x).ln_1p() / LN_2
}

/// REE weight `E_R(σ_E)` of the channel's Choi matrix.
pub fn edge_weight(desc: &ChannelDescriptor) -> Result<EdgeWeight> {
    ensure_valid(desc)?;
    let (value, distillable, provenance) = match *desc {
        ChannelDescriptor::PureLoss { eta } => {
            (neg_log2_one_minus(eta), true, Provenance::ClosedFormPaper)
        }
        ChannelDescriptor::QlimAmp { g } => (
            neg_log2_one_minus(1.0 / g),
            true,
            Provenance::ClosedFormLiterature,
        ),
        ChannelDescriptor::Dephasing { p } => {
            let h = binary_entropy(p.min(1.0 - p))?;
            (1.0 - h, true, Provenance::ClosedFormLiterature)
        }
        ChannelDescriptor::Erasure { p } => (1.0 - p, true, Provenance::ClosedFormLiterature),
        ChannelDescriptor::Pauli { probs } => {
            let spec = BellDiagonalSpectrum::new(probs)?;
            (
                ree_bell_diagonal(&spec),
                false,
                Provenance::ClosedFormLiterature,
            )
        }
        ChannelDescriptor::Ideal => (f64::INFINITY, false, Provenance::ClosedFormLiterature),
        ChannelDescriptor::Custom { w } => (w, false, Provenance::Custom),
    };
    Ok(EdgeWeight {
        value: value.max(0.0),
        distillable,
        provenance,
    })
}

/// Qubit Kraus realisation of a discrete-variable channel.
///
/// Erasure maps a qubit to a qutrit whose third level `|e⟩` flags the erasure.
pub fn kraus_of(desc: &ChannelDescriptor) -> Result<KrausChannel> {
    if !desc.is_discrete() {
        return Err(Error::Unsupported(desc.kind().to_string()));
    }
    ensure_valid(desc)?;
    match *desc {
        ChannelDescriptor::Ideal => Ok(KrausChannel::identity(2)),
        ChannelDescriptor::Dephasing { p } => KrausChannel::pauli([1.0 - p, 0.0, 0.0, p]),
        ChannelDescriptor::Pauli { probs } => KrausChannel::pauli(probs),
        ChannelDescriptor::Erasure { p } => {
            let keep = (1.0 - p).sqrt();
            let lose = p.sqrt();
            let zero = c(0.0, 0.0);
            let k_keep = ComplexMatrix::from_rows(vec![
                vec![c(keep, 0.0), zero],
                vec![zero, c(keep, 0.0)],
                vec![zero, zero],
            ])?;
            let k_from0 = ComplexMatrix::from_rows(vec![
                vec![zero, zero],
                vec![zero, zero],
                vec![c(lose, 0.0), zero],
            ])?;
            let k_from1 = ComplexMatrix::from_rows(vec![
                vec![zero, zero],
                vec![zero, zero],
                vec![zero, c(lose, 0.0)],
            ])?;
            KrausChannel::new(vec![k_keep, k_from0, k_from1])
        }
        _ => unreachable!("continuous-variable kinds rejected above"),
    }
}
