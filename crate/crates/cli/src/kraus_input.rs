//! Channel input for `check-covariance`: a catalog descriptor, an
//! amplitude-damping channel, or an explicit Kraus list.

use qnet_core::channel::{kraus_of, ChannelDescriptor};
use qnet_core::quantum::matrix::c;
use qnet_core::quantum::{ComplexMatrix, KrausChannel};
use qnet_core::{Error, Result};
use serde::Deserialize;
use serde_json::Value;

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AmplitudeDamping {
    #[allow(dead_code)]
    kind: String,
    gamma: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KrausList {
    #[allow(dead_code)]
    kind: String,
    ops: Vec<Vec<Vec<Entry>>>,
}

fn invalid(e: serde_json::Error) -> Error {
    Error::Validation(e.to_string())
}

/// Parses `text` into a Kraus channel.
///
/// Accepted shapes: any catalog descriptor with a Kraus realisation,
/// `{"kind":"amplitude_damping","gamma":γ}`, or
/// `{"kind":"kraus","ops":[[[row], ...], ...]}` with entries given as a real
/// number or `[re, im]`.
pub fn parse_channel(text: &str) -> Result<KrausChannel> {
    let value: Value = serde_json::from_str(text).map_err(invalid)?;
    match value.get("kind").and_then(Value::as_str) {
        Some("amplitude_damping") => {
            let ad: AmplitudeDamping = serde_json::from_value(value).map_err(invalid)?;
            KrausChannel::amplitude_damping(ad.gamma)
        }
        Some("kraus") => {
            let list: KrausList = serde_json::from_value(value).map_err(invalid)?;
            let ops = list
                .ops
                .into_iter()
                .map(|rows| {
                    ComplexMatrix::from_rows(
                        rows.into_iter()
                            .map(|row| {
                                row.into_iter()
                                    .map(|e| match e {
                                        Entry::Real(x) => c(x, 0.0),
                                        Entry::Complex([re, im]) => c(re, im),
                                    })
                                    .collect()
                            })
                            .collect(),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            KrausChannel::new(ops)
        }
        _ => {
            let desc: ChannelDescriptor = serde_json::from_value(value).map_err(invalid)?;
            let problems = qnet_core::channel::validate(&desc);
            if let Some(p) = problems.first() {
                return Err(Error::Validation(format!("{}: {}", p.param, p.message)));
            }
            kraus_of(&desc)
        }
    }
}
