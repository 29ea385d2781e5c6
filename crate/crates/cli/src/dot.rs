//! Graphviz export.

use std::fmt::Write;

use qnet_core::network::{QuantumNetwork, Role};
use qnet_core::report::text_number;
use qnet_core::solver::BoundReport;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn weight_label(w: f64) -> String {
    if w == f64::INFINITY {
        "inf".into()
    } else {
        format!("{w:.3}")
    }
}

/// Renders `net` as an undirected DOT graph. Senders are boxes, receivers
/// double circles. Edges of the witness cut-set, when given, are dashed.
pub fn to_dot(net: &QuantumNetwork, witness: Option<&BoundReport>) -> String {
    let mut out = String::from("graph qnet {\n");
    if let Some(report) = witness {
        let _ = writeln!(
            out,
            "  label={};",
            quoted(&format!("bound = {} bits/use", text_number(report.bound)))
        );
    }
    for (i, name) in net.nodes().iter().enumerate() {
        let shape = match net.role(i) {
            Role::Sender => "box",
            Role::Receiver => "doublecircle",
            Role::Free => "ellipse",
        };
        let _ = writeln!(
            out,
            "  {} [label={}, shape={shape}];",
            quoted(name),
            quoted(name)
        );
    }
    for (i, e) in net.edges().iter().enumerate() {
        let label = format!("{} | w={}", e.channel, weight_label(e.weight.value));
        let dashed = witness.is_some_and(|r| r.witness.cut_set.contains(&i));
        let style = if dashed { ", style=dashed" } else { "" };
        let _ = writeln!(
            out,
            "  {} -- {} [label={}{style}];",
            quoted(&net.nodes()[e.u]),
            quoted(&net.nodes()[e.v]),
            quoted(&label)
        );
    }
    out.push_str("}\n");
    out
}
