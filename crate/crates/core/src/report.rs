//! JSON and text rendering of solver results.
//!
//! JSON numbers carry 12 significant digits; `+∞` is encoded as the string
//! `"inf"`. Text output uses 4 significant digits.

use serde_json::{json, Map, Value};

use crate::network::QuantumNetwork;
use crate::quantum::CovarianceReport;
use crate::solver::{BoundReport, FiniteSizePenalty, SenderBound};

pub const JSON_SIGNIFICANT_DIGITS: usize = 12;
pub const TEXT_SIGNIFICANT_DIGITS: usize = 4;

/// Rounds to `digits` significant digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .expect("scientific notation parses back")
}

/// Extended-real as JSON: a number rounded to 12 significant digits, or `"inf"`.
pub fn json_number(x: f64) -> Value {
    if x == f64::INFINITY {
        return Value::String("inf".into());
    }
    serde_json::Number::from_f64(round_significant(x, JSON_SIGNIFICANT_DIGITS))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// Decodes [`json_number`] output.
pub fn parse_json_number(v: &Value) -> Option<f64> {
    match v {
        Value::String(s) if s == "inf" => Some(f64::INFINITY),
        other => other.as_f64(),
    }
}

/// Extended-real as text with 4 significant digits, or `inf`.
pub fn text_number(x: f64) -> String {
    if x == f64::INFINITY {
        return "inf".into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (TEXT_SIGNIFICANT_DIGITS as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn weights_json(net: &QuantumNetwork) -> Value {
    Value::Array(
        net.edges()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                json!({
                    "index": i,
                    "u": net.nodes()[e.u],
                    "v": net.nodes()[e.v],
                    "channel": serde_json::to_value(&e.channel).expect("descriptor serialises"),
                    "weight": json_number(e.weight.value),
                    "distillable": e.weight.distillable,
                    "provenance": e.weight.provenance.to_string(),
                })
            })
            .collect(),
    )
}

pub fn bound_report_json(net: &QuantumNetwork, report: &BoundReport) -> Value {
    let cut_set: Vec<Value> = report
        .witness
        .cut_set
        .iter()
        .map(|&i| {
            let e = &net.edges()[i];
            json!({
                "u": net.nodes()[e.u],
                "v": net.nodes()[e.v],
                "index": i,
                "weight": json_number(e.weight.value),
            })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("bound".into(), json_number(report.bound));
    obj.insert(
        "method".into(),
        Value::String(report.method.as_str().into()),
    );
    obj.insert(
        "witness".into(),
        json!({
            "side_a": report.witness.cut.side_a(net),
            "cut_set": cut_set,
            "flow_value": json_number(report.witness.flow_value),
        }),
    );
    obj.insert(
        "distillable_network".into(),
        Value::Bool(report.distillable_network),
    );
    obj.insert("tolerance".into(), json_number(report.tolerance));
    obj.insert("per_edge_weights".into(), weights_json(net));
    Value::Object(obj)
}

pub fn per_sender_json(net: &QuantumNetwork, bounds: &[SenderBound]) -> Value {
    Value::Array(
        bounds
            .iter()
            .map(|b| {
                json!({
                    "sender": b.sender,
                    "bound": json_number(b.report.bound),
                    "method": b.report.method.as_str(),
                    "witness": {
                        "side_a": b.report.witness.cut.side_a(net),
                        "cut_set": b.report.witness.cut_set,
                        "flow_value": json_number(b.report.witness.flow_value),
                    },
                })
            })
            .collect(),
    )
}

pub fn covariance_json(report: &CovarianceReport, tolerance: f64) -> Value {
    json!({
        "weyl_covariant": report.covariant,
        "tolerance": json_number(tolerance),
        "residuals": {
            "I": json_number(report.residuals[0]),
            "X": json_number(report.residuals[1]),
            "Y": json_number(report.residuals[2]),
            "Z": json_number(report.residuals[3]),
        },
    })
}

pub fn finite_size_json(p: &FiniteSizePenalty) -> Value {
    json!({
        "delta": json_number(p.delta),
        "per_use": json_number(p.per_use),
    })
}

/// Multi-line human-readable bound report.
pub fn bound_report_text(net: &QuantumNetwork, report: &BoundReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("bound: {} bits/use\n", text_number(report.bound)));
    out.push_str(&format!("method: {}\n", report.method));
    out.push_str(&format!(
        "witness: A = {{{}}}, B = {{{}}}\n",
        report.witness.cut.side_a(net).join(", "),
        report.witness.cut.side_b(net).join(", ")
    ));
    out.push_str("cut-set:\n");
    for &i in &report.witness.cut_set {
        let e = &net.edges()[i];
        out.push_str(&format!(
            "  [{i}] {} -- {}  {}  w={}\n",
            net.nodes()[e.u],
            net.nodes()[e.v],
            e.channel,
            text_number(e.weight.value)
        ));
    }
    out.push_str(&format!(
        "flow: {}\n",
        text_number(report.witness.flow_value)
    ));
    out.push_str(&format!(
        "distillable network: {}\n",
        report.distillable_network
    ));
    out
}

/// Per-edge weight table as aligned text.
pub fn weights_text(net: &QuantumNetwork) -> String {
    let mut out = String::from("index\tu\tv\tchannel\tweight\tdistillable\tprovenance\n");
    for (i, e) in net.edges().iter().enumerate() {
        out.push_str(&format!(
            "{i}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            net.nodes()[e.u],
            net.nodes()[e.v],
            e.channel,
            text_number(e.weight.value),
            e.weight.distillable,
            e.weight.provenance
        ));
    }
    out
}
