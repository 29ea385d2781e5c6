//! Minimum multi-edge REE flow over all sender/receiver cuts.
//!
//! Two independent routes compute the same quantity: exhaustive enumeration of
//! cuts ([`bound_brute_force`]) and a max-flow on the graph with all senders
//! merged into a super-source and all receivers into a super-sink
//! ([`bound_max_flow`]). The reported bound is always the exact sum over the
//! witness cut's edges.

mod finite;
mod maxflow;

pub use finite::{finite_size_penalty, FiniteSizeParams, FiniteSizePenalty};
pub use maxflow::{FlowGraph, FLOW_EPS};

use std::cmp::Ordering;
use std::fmt;
use std::thread;

use crate::channel::EdgeWeight;
use crate::error::Result;
use crate::network::{
    enumerate_cuts, Cut, CutWitness, QuantumNetwork, Role, DEFAULT_MAX_FREE_NODES,
};

/// Free-node count up to which [`Method::Auto`] enumerates cuts.
pub const AUTO_BRUTE_FORCE_LIMIT: usize = 16;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    BruteForce,
    MaxFlow,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::BruteForce => "brute_force",
            Method::MaxFlow => "max_flow",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub max_free_nodes: usize,
    /// Worker threads for enumeration; values below 2 run inline.
    pub jobs: usize,
    pub tolerance: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            max_free_nodes: DEFAULT_MAX_FREE_NODES,
            jobs: 1,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// Upper bound on the sum of conferencing-key rates together with the cut
/// attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub bound: f64,
    pub witness: CutWitness,
    pub method: Method,
    /// Weights indexed like [`QuantumNetwork::edges`].
    pub per_edge_weights: Vec<EdgeWeight>,
    pub tolerance: f64,
    /// True when every edge is distillable, so the bound is also the min-cut
    /// of the multi-edge secret-key capacity.
    pub distillable_network: bool,
}

impl BoundReport {
    fn new(net: &QuantumNetwork, witness: CutWitness, method: Method, tolerance: f64) -> Self {
        Self {
            bound: witness.flow_value,
            witness,
            method,
            per_edge_weights: net.edges().iter().map(|e| e.weight).collect(),
            tolerance,
            distillable_network: net.is_distillable(),
        }
    }
}

/// Evaluates the bound with the requested method. `Auto` enumerates when the
/// free-node count is at most [`AUTO_BRUTE_FORCE_LIMIT`], else runs max-flow.
pub fn bound(net: &QuantumNetwork, method: Method, opts: &SolverOptions) -> Result<BoundReport> {
    match method {
        Method::BruteForce => bound_brute_force(net, opts),
        Method::MaxFlow => Ok(bound_max_flow(net, opts)),
        Method::Auto => {
            if net.free_nodes().len() <= AUTO_BRUTE_FORCE_LIMIT.min(opts.max_free_nodes) {
                bound_brute_force(net, opts)
            } else {
                Ok(bound_max_flow(net, opts))
            }
        }
    }
}

struct Best {
    value: f64,
    counter: u64,
    key: Vec<String>,
}

/// Orders candidates by value, then by the sorted side-A name list.
fn better(value: f64, key: &[&str], best: &Best) -> bool {
    match value.total_cmp(&best.value) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => key.iter().copied().lt(best.key.iter().map(String::as_str)),
    }
}

fn flow_of_mask(net: &QuantumNetwork, mask: &[bool]) -> f64 {
    net.edges()
        .iter()
        .filter(|e| mask[e.u] != mask[e.v])
        .map(|e| e.weight.value)
        .sum()
}

fn scan_range(net: &QuantumNetwork, max_free: usize, start: u64, end: u64) -> Result<Option<Best>> {
    let cuts = enumerate_cuts(net, max_free)?.range(start, end);
    let mut best: Option<Best> = None;
    for (counter, cut) in (start..).zip(cuts) {
        let value = flow_of_mask(net, cut.mask());
        let key = cut.sorted_side_a(net);
        if best.as_ref().is_none_or(|b| better(value, &key, b)) {
            best = Some(Best {
                value,
                counter,
                key: key.into_iter().map(str::to_string).collect(),
            });
        }
    }
    Ok(best)
}

/// Exact minimum over every cut. Ties go to the lexicographically smallest
/// sorted side-A name list. With `opts.jobs > 1` disjoint counter ranges are
/// scanned in parallel and reduced with the same ordering.
pub fn bound_brute_force(net: &QuantumNetwork, opts: &SolverOptions) -> Result<BoundReport> {
    let enumerator = enumerate_cuts(net, opts.max_free_nodes)?;
    let total = enumerator.total();
    let jobs = (opts.jobs.max(1) as u64).min(total);

    let partials: Vec<Option<Best>> = if jobs <= 1 {
        vec![scan_range(net, opts.max_free_nodes, 0, total)?]
    } else {
        let chunk = total.div_ceil(jobs);
        thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let (start, end) = (j * chunk, ((j + 1) * chunk).min(total));
                    scope.spawn(move || scan_range(net, opts.max_free_nodes, start, end))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect::<Result<Vec<_>>>()
        })?
    };

    let mut best: Option<Best> = None;
    for candidate in partials.into_iter().flatten() {
        let key: Vec<&str> = candidate.key.iter().map(String::as_str).collect();
        if best
            .as_ref()
            .is_none_or(|b| better(candidate.value, &key, b))
        {
            best = Some(candidate);
        }
    }
    let best = best.expect("at least one cut always exists");
    let witness = CutWitness::new(net, enumerator.cut_at(best.counter));
    Ok(BoundReport::new(
        net,
        witness,
        Method::BruteForce,
        opts.tolerance,
    ))
}

const SOURCE: usize = 0;
const SINK: usize = 1;

/// Min-cut through max-flow. Senders collapse into one source and receivers
/// into one sink; each undirected edge becomes a pair of antiparallel arcs.
/// Infinite weights are capped at `Σ finite + 1`, and the witness is the
/// residual-reachable side of the source.
pub fn bound_max_flow(net: &QuantumNetwork, opts: &SolverOptions) -> BoundReport {
    let free = net.free_nodes();
    let mut slot: Vec<usize> = (0..net.node_count())
        .map(|i| match net.role(i) {
            Role::Sender => SOURCE,
            Role::Receiver => SINK,
            Role::Free => 0,
        })
        .collect();
    for (k, &i) in free.iter().enumerate() {
        slot[i] = k + 2;
    }

    let finite_total: f64 = net
        .edges()
        .iter()
        .map(|e| e.weight.value)
        .filter(|w| w.is_finite())
        .sum();
    let cap = finite_total + 1.0;

    let mut graph = FlowGraph::new(free.len() + 2);
    for e in net.edges() {
        let (u, v) = (slot[e.u], slot[e.v]);
        if u == v {
            continue;
        }
        let w = if e.weight.value.is_finite() {
            e.weight.value
        } else {
            cap
        };
        graph.add_undirected(u, v, w);
    }
    graph.max_flow(SOURCE, SINK);
    let reach = graph.source_side(SOURCE);

    let mask: Vec<bool> = (0..net.node_count())
        .map(|i| match net.role(i) {
            Role::Sender => true,
            Role::Receiver => false,
            Role::Free => reach[slot[i]],
        })
        .collect();
    let cut = Cut::from_mask(net, mask).expect("residual side keeps terminals separated");
    let witness = CutWitness::new(net, cut);
    BoundReport::new(net, witness, Method::MaxFlow, opts.tolerance)
}

/// Bound for one sender acting alone; the other senders become relays.
#[derive(Debug, Clone, PartialEq)]
pub struct SenderBound {
    pub sender: String,
    pub report: BoundReport,
}

/// Single-sender bounds: for each sender, the minimum over cuts that separate
/// that sender from all receivers, with the remaining senders left free.
pub fn per_sender_bounds(
    net: &QuantumNetwork,
    method: Method,
    opts: &SolverOptions,
) -> Result<Vec<SenderBound>> {
    net.senders()
        .iter()
        .map(|&s| {
            let name = net.nodes()[s].clone();
            let single = net.with_senders(&[name.as_str()])?;
            Ok(SenderBound {
                report: bound(&single, method, opts)?,
                sender: name,
            })
        })
        .collect()
}
