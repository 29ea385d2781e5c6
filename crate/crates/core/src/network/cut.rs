use super::{QuantumNetwork, Role};
use crate::error::{Error, Result};

/// Default cap on free (non-terminal) nodes for exhaustive cut enumeration.
pub const DEFAULT_MAX_FREE_NODES: usize = 22;

/// Bipartition `(A, B)` of the nodes with every sender in A and every receiver in B.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    in_a: Vec<bool>,
}

impl Cut {
    /// Builds a cut from a per-node membership mask (`true` = side A).
    pub fn from_mask(net: &QuantumNetwork, in_a: Vec<bool>) -> Result<Self> {
        if in_a.len() != net.node_count() {
            return Err(Error::Usage(format!(
                "cut mask has {} entries for {} nodes",
                in_a.len(),
                net.node_count()
            )));
        }
        for (i, &a) in in_a.iter().enumerate() {
            match (net.role(i), a) {
                (Role::Sender, false) => {
                    return Err(Error::Usage(format!(
                        "sender `{}` must be on side A",
                        net.nodes()[i]
                    )))
                }
                (Role::Receiver, true) => {
                    return Err(Error::Usage(format!(
                        "receiver `{}` must be on side B",
                        net.nodes()[i]
                    )))
                }
                _ => {}
            }
        }
        Ok(Self { in_a })
    }

    /// Builds a cut from the names on side A; senders are added implicitly.
    pub fn from_side_a(net: &QuantumNetwork, side_a: &[&str]) -> Result<Self> {
        let mut in_a: Vec<bool> = (0..net.node_count())
            .map(|i| net.role(i) == Role::Sender)
            .collect();
        for name in side_a {
            let i = net
                .node_index(name)
                .ok_or_else(|| Error::Usage(format!("unknown node `{name}`")))?;
            in_a[i] = true;
        }
        Self::from_mask(net, in_a)
    }

    pub fn mask(&self) -> &[bool] {
        &self.in_a
    }

    pub fn contains(&self, node: usize) -> bool {
        self.in_a[node]
    }

    /// Side-A node names in document order.
    pub fn side_a<'n>(&self, net: &'n QuantumNetwork) -> Vec<&'n str> {
        self.names(net, true)
    }

    /// Side-B node names in document order.
    pub fn side_b<'n>(&self, net: &'n QuantumNetwork) -> Vec<&'n str> {
        self.names(net, false)
    }

    fn names<'n>(&self, net: &'n QuantumNetwork, side: bool) -> Vec<&'n str> {
        net.nodes()
            .iter()
            .zip(&self.in_a)
            .filter(|(_, &a)| a == side)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Side-A names sorted, the key used for deterministic tie-breaking.
    pub fn sorted_side_a<'n>(&self, net: &'n QuantumNetwork) -> Vec<&'n str> {
        let mut names = self.side_a(net);
        names.sort_unstable();
        names
    }
}

/// A cut together with its cut-set and multi-edge REE flow.
#[derive(Debug, Clone, PartialEq)]
pub struct CutWitness {
    pub cut: Cut,
    /// Indices into [`QuantumNetwork::edges`], in input order.
    pub cut_set: Vec<usize>,
    pub flow_value: f64,
}

impl CutWitness {
    pub fn new(net: &QuantumNetwork, cut: Cut) -> Self {
        let cut_set = cut_set(net, &cut);
        let flow_value = sum_weights(net, &cut_set);
        Self {
            cut,
            cut_set,
            flow_value,
        }
    }
}

/// Edges with exactly one endpoint inside `side_a`, for any node bipartition.
pub fn crossing_edges(net: &QuantumNetwork, side_a: &[bool]) -> Vec<usize> {
    net.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| side_a[e.u] != side_a[e.v])
        .map(|(i, _)| i)
        .collect()
}

/// The cut-set: edges crossing the bipartition, in input edge order.
pub fn cut_set(net: &QuantumNetwork, cut: &Cut) -> Vec<usize> {
    crossing_edges(net, &cut.in_a)
}

fn sum_weights(net: &QuantumNetwork, edges: &[usize]) -> f64 {
    edges.iter().map(|&i| net.edges()[i].weight.value).sum()
}

/// Sum of edge REE weights across the cut; `+∞` if any crossing edge is ideal.
pub fn multi_edge_ree_flow(net: &QuantumNetwork, cut: &Cut) -> f64 {
    sum_weights(net, &cut_set(net, cut))
}

/// Iterator over every valid cut of a network.
///
/// Free nodes are numbered in document order; bit `i` of a binary counter set
/// means free node `i` joins side A. The counter runs over `[start, end)`.
#[derive(Debug, Clone)]
pub struct CutEnumerator {
    base: Vec<bool>,
    free: Vec<usize>,
    next: u64,
    end: u64,
}

impl CutEnumerator {
    /// Total number of cuts, `2^free`.
    pub fn total(&self) -> u64 {
        1u64 << self.free.len()
    }

    /// Restricts the counter to `[start, end)` (clamped to the total).
    pub fn range(mut self, start: u64, end: u64) -> Self {
        let total = self.total();
        self.next = start.min(total);
        self.end = end.min(total);
        self
    }

    /// The cut for a given counter value.
    pub fn cut_at(&self, counter: u64) -> Cut {
        let mut in_a = self.base.clone();
        for (bit, &node) in self.free.iter().enumerate() {
            if counter >> bit & 1 == 1 {
                in_a[node] = true;
            }
        }
        Cut { in_a }
    }
}

impl Iterator for CutEnumerator {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        if self.next >= self.end {
            return None;
        }
        let cut = self.cut_at(self.next);
        self.next += 1;
        Some(cut)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CutEnumerator {}

/// All `2^free` cuts, or a capacity error when `free > max_free_nodes`.
pub fn enumerate_cuts(net: &QuantumNetwork, max_free_nodes: usize) -> Result<CutEnumerator> {
    let free = net.free_nodes();
    let limit = max_free_nodes.min(62);
    if free.len() > limit {
        return Err(Error::Capacity {
            free: free.len(),
            limit,
        });
    }
    let base = (0..net.node_count())
        .map(|i| net.role(i) == Role::Sender)
        .collect();
    let end = 1u64 << free.len();
    Ok(CutEnumerator {
        base,
        free,
        next: 0,
        end,
    })
}

#[cfg(test)]
mod tests {
    use super::super::parse_network;
    use super::*;
    use std::collections::HashSet;

    fn chain() -> QuantumNetwork {
        parse_network(
            br#"{"nodes":["a","r","b"],"senders":["a"],"receivers":["b"],"edges":[
                {"u":"a","v":"r","channel":{"kind":"pure_loss","eta":0.5}},
                {"u":"r","v":"b","channel":{"kind":"pure_loss","eta":0.75}}]}"#,
        )
        .unwrap()
    }

    fn diamond() -> QuantumNetwork {
        parse_network(
            br#"{"nodes":["a","x","y","b"],"senders":["a"],"receivers":["b"],"edges":[
                {"u":"a","v":"x","channel":{"kind":"dephasing","p":0.1}},
                {"u":"a","v":"y","channel":{"kind":"dephasing","p":0.1}},
                {"u":"x","v":"b","channel":{"kind":"erasure","p":0.5}},
                {"u":"y","v":"b","channel":{"kind":"erasure","p":0.5}}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn chain_cut_sets() {
        let net = chain();
        let c1 = Cut::from_side_a(&net, &["a"]).unwrap();
        assert_eq!(cut_set(&net, &c1), vec![0]);
        let c2 = Cut::from_side_a(&net, &["a", "r"]).unwrap();
        assert_eq!(cut_set(&net, &c2), vec![1]);
        assert!((multi_edge_ree_flow(&net, &c1) - 1.0).abs() < 1e-15);
        assert!((multi_edge_ree_flow(&net, &c2) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn diamond_cut_set() {
        let net = diamond();
        let cut = Cut::from_side_a(&net, &["a", "x"]).unwrap();
        // edges a-y (1) and x-b (2)
        assert_eq!(cut_set(&net, &cut), vec![1, 2]);
    }

    #[test]
    fn invalid_cuts_rejected() {
        let net = chain();
        assert!(Cut::from_side_a(&net, &["b"]).is_err());
        assert!(Cut::from_side_a(&net, &["zz"]).is_err());
        assert!(Cut::from_mask(&net, vec![false, true, false]).is_err());
        assert!(Cut::from_mask(&net, vec![true]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let single = parse_network(
            br#"{"nodes":["a","b"],"senders":["a"],"receivers":["b"],
                "edges":[{"u":"a","v":"b","channel":{"kind":"ideal"}}]}"#,
        )
        .unwrap();
        assert_eq!(
            enumerate_cuts(&single, DEFAULT_MAX_FREE_NODES)
                .unwrap()
                .count(),
            1
        );

        let net = chain();
        let cuts: Vec<_> = enumerate_cuts(&net, DEFAULT_MAX_FREE_NODES)
            .unwrap()
            .collect();
        assert_eq!(cuts.len(), 2);
        assert_eq!(cuts[0].side_a(&net), vec!["a"]);
        assert_eq!(cuts[1].side_a(&net), vec!["a", "r"]);

        let d = diamond();
        let cuts: HashSet<_> = enumerate_cuts(&d, DEFAULT_MAX_FREE_NODES)
            .unwrap()
            .collect();
        assert_eq!(cuts.len(), 4);
    }

    #[test]
    fn enumeration_limit() {
        let net = diamond();
        assert!(matches!(
            enumerate_cuts(&net, 1),
            Err(Error::Capacity { free: 2, limit: 1 })
        ));
    }

    #[test]
    fn empty_cut_set_has_zero_flow() {
        let net = parse_network(
            br#"{"nodes":["a","x","b","y"],"senders":["a"],"receivers":["b"],"edges":[
                {"u":"a","v":"x","channel":{"kind":"ideal"}},
                {"u":"b","v":"y","channel":{"kind":"ideal"}}]}"#,
        )
        .unwrap();
        let cut = Cut::from_side_a(&net, &["a", "x"]).unwrap();
        assert!(cut_set(&net, &cut).is_empty());
        assert_eq!(multi_edge_ree_flow(&net, &cut), 0.0);
    }

    #[test]
    fn ideal_edge_saturates() {
        let net = parse_network(
            br#"{"nodes":["a","b"],"senders":["a"],"receivers":["b"],"edges":[
                {"u":"a","v":"b","channel":{"kind":"ideal"}},
                {"u":"a","v":"b","channel":{"kind":"dephasing","p":0.1}}]}"#,
        )
        .unwrap();
        let cut = Cut::from_side_a(&net, &[]).unwrap();
        assert_eq!(multi_edge_ree_flow(&net, &cut), f64::INFINITY);
    }
}
