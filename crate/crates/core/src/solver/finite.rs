use crate::error::{Error, Result};
use crate::quantum::binary_entropy;

/// Inputs of the asymptotic-continuity penalty `δ(ε, d) = 4ε log₂ d + 2H₂(ε)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSizeParams {
    /// Trace-distance closeness to the target state.
    pub epsilon: f64,
    /// `log₂ d` for the target-state dimension d.
    pub log2_dim: f64,
    /// Number of network uses.
    pub n: u64,
    /// Growth constant `α_n` with `d ≤ 2^(α_n n)`.
    pub alpha_n: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSizePenalty {
    pub delta: f64,
    pub per_use: f64,
}

/// Penalty δ and its per-use form: `4ε α_n + 2H₂(ε)/n` when `α_n` is given,
/// otherwise `δ / n`.
pub fn finite_size_penalty(p: &FiniteSizeParams) -> Result<FiniteSizePenalty> {
    if !(0.0..=1.0).contains(&p.epsilon) {
        return Err(Error::Domain(format!(
            "epsilon {} outside [0, 1]",
            p.epsilon
        )));
    }
    if !(p.log2_dim >= 0.0 && p.log2_dim.is_finite()) {
        return Err(Error::Domain(format!(
            "log2_dim {} must be finite and ≥ 0",
            p.log2_dim
        )));
    }
    if p.n == 0 {
        return Err(Error::Domain("n must be a positive integer".into()));
    }
    if let Some(a) = p.alpha_n {
        if !(a >= 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!("alpha_n {a} must be finite and ≥ 0")));
        }
    }
    let h = binary_entropy(p.epsilon)?;
    let delta = 4.0 * p.epsilon * p.log2_dim + 2.0 * h;
    let n = p.n as f64;
    let per_use = match p.alpha_n {
        Some(a) => 4.0 * p.epsilon * a + 2.0 * h / n,
        None => delta / n,
    };
    Ok(FiniteSizePenalty { delta, per_use })
}
