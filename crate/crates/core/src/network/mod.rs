//! Quantum network as an undirected multigraph with channel-labelled edges,
//! designated senders and receivers, and its JSON document form.

mod cut;

pub use cut::{
    crossing_edges, cut_set, enumerate_cuts, multi_edge_ree_flow, Cut, CutEnumerator, CutWitness,
    DEFAULT_MAX_FREE_NODES,
};

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::channel::{edge_weight, validate, ChannelDescriptor, EdgeWeight};
use crate::error::{Error, Result};

/// JSON document describing a network. Field names are part of the file format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkDocument {
    pub nodes: Vec<String>,
    pub senders: Vec<String>,
    pub receivers: Vec<String>,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub u: String,
    pub v: String,
    pub channel: ChannelDescriptor,
}

impl NetworkDocument {
    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("network document serialises")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("network document serialises")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// One validation finding, located by a JSON-style path such as `edges[2].u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub path: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        if self.path.is_empty() {
            write!(f, "{tag}: {}", self.message)
        } else {
            write!(f, "{tag}: {}: {}", self.path, self.message)
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub items: Vec<Diagnostic>,
}

impl Diagnostics {
    fn error(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.items.push(Diagnostic {
            severity: Severity::Error,
            path: path.into(),
            message: message.into(),
        });
    }

    fn warning(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.items.push(Diagnostic {
            severity: Severity::Warning,
            path: path.into(),
            message: message.into(),
        });
    }

    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.items.iter().filter(|d| d.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Diagnostic> {
        self.items
            .iter()
            .filter(|d| d.severity == Severity::Warning)
    }

    pub fn has_errors(&self) -> bool {
        self.errors().next().is_some()
    }
}

/// Structural and parameter checks on a network document.
///
/// Errors: duplicate or unknown node names, empty or overlapping terminal
/// sets, self-loops, invalid channel parameters. Warnings (reported only when
/// the structure is sound): isolated nodes, receivers unreachable from every
/// sender, and a bound that is trivially zero.
pub fn validate_network(doc: &NetworkDocument) -> Diagnostics {
    let mut diags = Diagnostics::default();

    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, name) in doc.nodes.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            diags.error(
                format!("nodes[{i}]"),
                format!("duplicate node name `{name}`"),
            );
        }
    }

    for (field, list) in [("senders", &doc.senders), ("receivers", &doc.receivers)] {
        if list.is_empty() {
            diags.error(field, format!("{field} must not be empty"));
        }
        let mut seen = HashSet::new();
        for (i, name) in list.iter().enumerate() {
            if !index.contains_key(name.as_str()) {
                diags.error(format!("{field}[{i}]"), format!("unknown node `{name}`"));
            }
            if !seen.insert(name) {
                diags.error(format!("{field}[{i}]"), format!("`{name}` listed twice"));
            }
        }
    }
    let senders: HashSet<&String> = doc.senders.iter().collect();
    if let Some((i, name)) = doc
        .receivers
        .iter()
        .enumerate()
        .find(|(_, r)| senders.contains(r))
    {
        diags.error(
            format!("receivers[{i}]"),
            format!("senders and receivers must be disjoint (`{name}` is both)"),
        );
    }

    for (i, e) in doc.edges.iter().enumerate() {
        for (end, name) in [("u", &e.u), ("v", &e.v)] {
            if !index.contains_key(name.as_str()) {
                diags.error(
                    format!("edges[{i}].{end}"),
                    format!("unknown node `{name}`"),
                );
            }
        }
        if e.u == e.v {
            diags.error(format!("edges[{i}]"), format!("self-loop on `{}`", e.u));
        }
        for err in validate(&e.channel) {
            diags.error(format!("edges[{i}].channel.{}", err.param), err.message);
        }
    }

    if diags.has_errors() {
        return diags;
    }

    let n = doc.nodes.len();
    let mut adjacency = vec![Vec::new(); n];
    for e in &doc.edges {
        let (u, v) = (index[e.u.as_str()], index[e.v.as_str()]);
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for (i, name) in doc.nodes.iter().enumerate() {
        if adjacency[i].is_empty() {
            diags.warning(format!("nodes[{i}]"), format!("node `{name}` is isolated"));
        }
    }

    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = doc.senders.iter().map(|s| index[s.as_str()]).collect();
    for &s in &queue {
        reached[s] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adjacency[x] {
            if !reached[y] {
                reached[y] = true;
                queue.push_back(y);
            }
        }
    }
    let mut unreachable = 0;
    for (j, name) in doc.receivers.iter().enumerate() {
        if !reached[index[name.as_str()]] {
            unreachable += 1;
            diags.warning(
                format!("receivers[{j}]"),
                format!("receiver `{name}` is unreachable from every sender"),
            );
        }
    }
    if unreachable == doc.receivers.len() {
        diags.warning(
            "",
            "no receiver is connected to any sender: bound is trivially zero",
        );
    }
    diags
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Sender,
    Receiver,
    Free,
}

/// An edge with endpoints resolved to node indices and its weight precomputed.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub channel: ChannelDescriptor,
    pub weight: EdgeWeight,
}

/// Validated, immutable network.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumNetwork {
    nodes: Vec<String>,
    roles: Vec<Role>,
    senders: Vec<usize>,
    receivers: Vec<usize>,
    edges: Vec<Edge>,
}

impl QuantumNetwork {
    /// Builds a network, rejecting any document with error diagnostics.
    pub fn from_document(doc: &NetworkDocument) -> Result<Self> {
        let diags = validate_network(doc);
        if diags.has_errors() {
            let msg = diags
                .errors()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            return Err(Error::Validation(msg));
        }
        let index: HashMap<&str, usize> = doc
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let senders: Vec<usize> = doc.senders.iter().map(|s| index[s.as_str()]).collect();
        let receivers: Vec<usize> = doc.receivers.iter().map(|s| index[s.as_str()]).collect();
        let mut roles = vec![Role::Free; doc.nodes.len()];
        for &s in &senders {
            roles[s] = Role::Sender;
        }
        for &r in &receivers {
            roles[r] = Role::Receiver;
        }
        let edges = doc
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    u: index[e.u.as_str()],
                    v: index[e.v.as_str()],
                    channel: e.channel.clone(),
                    weight: edge_weight(&e.channel)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            nodes: doc.nodes.clone(),
            roles,
            senders,
            receivers,
            edges,
        })
    }

    pub fn to_document(&self) -> NetworkDocument {
        NetworkDocument {
            nodes: self.nodes.clone(),
            senders: self
                .senders
                .iter()
                .map(|&i| self.nodes[i].clone())
                .collect(),
            receivers: self
                .receivers
                .iter()
                .map(|&i| self.nodes[i].clone())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDocument {
                    u: self.nodes[e.u].clone(),
                    v: self.nodes[e.v].clone(),
                    channel: e.channel.clone(),
                })
                .collect(),
        }
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }

    pub fn role(&self, node: usize) -> Role {
        self.roles[node]
    }

    pub fn senders(&self) -> &[usize] {
        &self.senders
    }

    pub fn receivers(&self) -> &[usize] {
        &self.receivers
    }

    /// Nodes that are neither senders nor receivers, in document order.
    pub fn free_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.roles[i] == Role::Free)
            .collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// True when every edge is one of the distillable channel kinds.
    pub fn is_distillable(&self) -> bool {
        self.edges.iter().all(|e| e.weight.distillable)
    }

    /// Warnings from [`validate_network`]; a constructed network has no errors.
    pub fn warnings(&self) -> Vec<Diagnostic> {
        validate_network(&self.to_document())
            .warnings()
            .cloned()
            .collect()
    }

    /// Same graph with a different sender set; former senders become free nodes.
    pub fn with_senders(&self, senders: &[&str]) -> Result<Self> {
        let mut doc = self.to_document();
        doc.senders = senders.iter().map(|s| s.to_string()).collect();
        Self::from_document(&doc)
    }

    /// Same network with edge `index` carrying a different channel.
    pub fn with_edge_channel(&self, index: usize, channel: ChannelDescriptor) -> Result<Self> {
        let mut doc = self.to_document();
        let edge = doc
            .edges
            .get_mut(index)
            .ok_or_else(|| Error::Usage(format!("no edge with index {index}")))?;
        edge.channel = channel;
        Self::from_document(&doc)
    }

    /// Same network with edge `index` removed.
    pub fn without_edge(&self, index: usize) -> Result<Self> {
        let mut doc = self.to_document();
        if index >= doc.edges.len() {
            return Err(Error::Usage(format!("no edge with index {index}")));
        }
        doc.edges.remove(index);
        Self::from_document(&doc)
    }

    /// Same network with an additional edge appended.
    pub fn with_extra_edge(&self, u: &str, v: &str, channel: ChannelDescriptor) -> Result<Self> {
        let mut doc = self.to_document();
        doc.edges.push(EdgeDocument {
            u: u.to_string(),
            v: v.to_string(),
            channel,
        });
        Self::from_document(&doc)
    }
}

/// Parses and validates a network JSON document.
pub fn parse_network(text: &[u8]) -> Result<QuantumNetwork> {
    let doc: NetworkDocument =
        serde_json::from_slice(text).map_err(|e| Error::Validation(e.to_string()))?;
    QuantumNetwork::from_document(&doc)
}
