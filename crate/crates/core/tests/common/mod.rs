#![allow(dead_code)]

use num_complex::Complex64;
use qnet_core::channel::ChannelDescriptor;
use qnet_core::network::{EdgeDocument, NetworkDocument, QuantumNetwork};
use qnet_core::quantum::{
    closest_separable_bell_diagonal, BellDiagonalSpectrum, ComplexMatrix, DensityMatrix,
};
use rand::rngs::StdRng;
use rand::Rng;

/// Random channel with a finite weight.
pub fn random_finite_channel(rng: &mut StdRng) -> ChannelDescriptor {
    match rng.gen_range(0..6) {
        0 => ChannelDescriptor::PureLoss {
            eta: rng.gen_range(0.01..0.99),
        },
        1 => ChannelDescriptor::QlimAmp {
            g: rng.gen_range(1.05..10.0),
        },
        2 => ChannelDescriptor::Dephasing {
            p: rng.gen_range(0.0..1.0),
        },
        3 => ChannelDescriptor::Erasure {
            p: rng.gen_range(0.0..1.0),
        },
        4 => {
            let raw: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..1.0));
            let total: f64 = raw.iter().sum();
            ChannelDescriptor::Pauli {
                probs: raw.map(|x| x / total),
            }
        }
        _ => ChannelDescriptor::Custom {
            w: rng.gen_range(0.0..3.0),
        },
    }
}

/// Random network with at most `max_nodes` nodes and `max_edges` edges,
/// parallel edges allowed, finite weights only.
pub fn random_network(rng: &mut StdRng, max_nodes: usize, max_edges: usize) -> QuantumNetwork {
    let n = rng.gen_range(2..=max_nodes);
    let nodes: Vec<String> = (0..n).map(|i| format!("n{i:02}")).collect();
    let n_senders = rng.gen_range(1..=(n - 1).min(3));
    let n_receivers = rng.gen_range(1..=(n - n_senders).min(3));
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let senders = order[..n_senders]
        .iter()
        .map(|&i| nodes[i].clone())
        .collect();
    let receivers = order[n_senders..n_senders + n_receivers]
        .iter()
        .map(|&i| nodes[i].clone())
        .collect();
    let m = rng.gen_range(1..=max_edges);
    let edges = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            EdgeDocument {
                u: nodes[u].clone(),
                v: nodes[v].clone(),
                channel: random_finite_channel(rng),
            }
        })
        .collect();
    QuantumNetwork::from_document(&NetworkDocument {
        nodes,
        senders,
        receivers,
        edges,
    })
    .unwrap()
}

/// Independent minimum over all node subsets containing every sender and no
/// receiver, computed straight from the edge list.
pub fn naive_min_cut(net: &QuantumNetwork) -> f64 {
    let n = net.node_count();
    let mut best = f64::INFINITY;
    for subset in 0u32..(1 << n) {
        let inside = |i: usize| subset >> i & 1 == 1;
        if !net.senders().iter().all(|&s| inside(s)) || net.receivers().iter().any(|&r| inside(r)) {
            continue;
        }
        let value: f64 = net
            .edges()
            .iter()
            .filter(|e| inside(e.u) != inside(e.v))
            .map(|e| e.weight.value)
            .sum();
        best = best.min(value);
    }
    best
}

/// Random full-rank density matrix `G G† / Tr(G G†)`.
pub fn random_density(rng: &mut StdRng, dim: usize) -> DensityMatrix {
    let rows = (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect()
        })
        .collect();
    let g = ComplexMatrix::from_rows(rows).unwrap();
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    DensityMatrix::new(gg.scale_real(1.0 / tr)).unwrap()
}

/// Uniform random point of the probability simplex.
pub fn random_probs4(rng: &mut StdRng) -> [f64; 4] {
    let raw: [f64; 4] = std::array::from_fn(|_| -rng.gen_range(f64::EPSILON..1.0).ln());
    let total: f64 = raw.iter().sum();
    raw.map(|x| x / total)
}

/// Random Bell spectrum with its largest weight at least 1/2.
pub fn random_entangled_probs(rng: &mut StdRng) -> [f64; 4] {
    let top = rng.gen_range(0.5..=1.0);
    let rest = random_probs4(rng);
    let tail: f64 = rest[1..].iter().sum();
    [
        top,
        (1.0 - top) * rest[1] / tail,
        (1.0 - top) * rest[2] / tail,
        (1.0 - top) * rest[3] / tail,
    ]
}

/// Block candidate `(1−p)·γ*(Φ) ⊕ p·(I/2 ⊗ |e⟩⟨e|)` on 2⊗3.
pub fn erasure_candidate(p: f64) -> DensityMatrix {
    let bell = BellDiagonalSpectrum::new([1.0, 0.0, 0.0, 0.0]).unwrap();
    let gamma_star = closest_separable_bell_diagonal(&bell);
    let mut m = ComplexMatrix::zeros(6, 6);
    // embed the qubit⊗qubit block: index (a, b) ↦ 3a + b for b ∈ {0, 1}
    for a in 0..2 {
        for b in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    m[(3 * a + b, 3 * a2 + b2)] =
                        gamma_star.matrix()[(2 * a + b, 2 * a2 + b2)] * (1.0 - p);
                }
            }
        }
    }
    m[(2, 2)] = Complex64::new(p / 2.0, 0.0);
    m[(5, 5)] = Complex64::new(p / 2.0, 0.0);
    DensityMatrix::new(m).unwrap()
}
