mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use qnet_core::channel::ChannelDescriptor;
use qnet_core::network::{
    crossing_edges, enumerate_cuts, multi_edge_ree_flow, parse_network, DEFAULT_MAX_FREE_NODES,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{random_finite_channel, random_network};

#[test]
fn cut_sets_are_symmetric_in_sides() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..100 {
        let net = random_network(&mut rng, 10, 25);
        for cut in enumerate_cuts(&net, DEFAULT_MAX_FREE_NODES)
            .unwrap()
            .take(64)
        {
            let flipped: Vec<bool> = cut.mask().iter().map(|a| !a).collect();
            let a: HashSet<_> = crossing_edges(&net, cut.mask()).into_iter().collect();
            let b: HashSet<_> = crossing_edges(&net, &flipped).into_iter().collect();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn flows_nonnegative_and_monotone_under_edge_addition() {
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..100 {
        let net = random_network(&mut rng, 9, 20);
        let n = net.node_count();
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let bigger = net
            .with_extra_edge(
                &net.nodes()[u],
                &net.nodes()[v],
                random_finite_channel(&mut rng),
            )
            .unwrap();
        let before = enumerate_cuts(&net, DEFAULT_MAX_FREE_NODES).unwrap();
        let after = enumerate_cuts(&bigger, DEFAULT_MAX_FREE_NODES).unwrap();
        for (c0, c1) in before.zip(after) {
            assert_eq!(c0.mask(), c1.mask());
            let f0 = multi_edge_ree_flow(&net, &c0);
            let f1 = multi_edge_ree_flow(&bigger, &c1);
            assert!(f0 >= 0.0);
            assert!(f1 >= f0);
        }
    }
}

#[test]
fn enumeration_is_exhaustive_without_duplicates() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..30 {
        let net = random_network(&mut rng, 14, 30);
        let free = net.free_nodes().len();
        assert!(free <= 12);
        let cuts: Vec<_> = enumerate_cuts(&net, DEFAULT_MAX_FREE_NODES)
            .unwrap()
            .collect();
        assert_eq!(cuts.len(), 1 << free);
        let unique: HashSet<_> = cuts.iter().collect();
        assert_eq!(unique.len(), cuts.len());
    }
}

#[test]
fn parallel_edges_add_in_cut_sets() {
    let net = parse_network(
        br#"{"nodes":["a","b"],"senders":["a"],"receivers":["b"],"edges":[
            {"u":"a","v":"b","channel":{"kind":"custom","w":0.25}},
            {"u":"b","v":"a","channel":{"kind":"custom","w":0.5}}]}"#,
    )
    .unwrap();
    let cut = enumerate_cuts(&net, DEFAULT_MAX_FREE_NODES)
        .unwrap()
        .next()
        .unwrap();
    assert_eq!(multi_edge_ree_flow(&net, &cut), 0.75);
}

fn arb_channel() -> impl Strategy<Value = ChannelDescriptor> {
    prop_oneof![
        (0.001f64..0.999).prop_map(|eta| ChannelDescriptor::PureLoss { eta }),
        (1.001f64..50.0).prop_map(|g| ChannelDescriptor::QlimAmp { g }),
        (0.0f64..=1.0).prop_map(|p| ChannelDescriptor::Dephasing { p }),
        (0.0f64..=1.0).prop_map(|p| ChannelDescriptor::Erasure { p }),
        Just(ChannelDescriptor::Ideal),
        (0.0f64..5.0).prop_map(|w| ChannelDescriptor::Custom { w }),
    ]
}

proptest! {
    #[test]
    fn canonical_json_round_trip(
        n in 3usize..8,
        raw_edges in prop::collection::vec((0usize..8, 0usize..8, arb_channel()), 0..12),
    ) {
        let nodes: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<String> = raw_edges
            .iter()
            .filter(|(u, v, _)| u % n != v % n)
            .map(|(u, v, ch)| {
                format!(
                    r#"{{"u":"v{}","v":"v{}","channel":{}}}"#,
                    u % n,
                    v % n,
                    serde_json::to_string(ch).unwrap()
                )
            })
            .collect();
        let text = format!(
            r#"{{"nodes":{},"senders":["v0"],"receivers":["v{}"],"edges":[{}]}}"#,
            serde_json::to_string(&nodes).unwrap(),
            n - 1,
            edges.join(",")
        );
        let net = parse_network(text.as_bytes()).unwrap();
        let canonical = net.to_document().to_json();
        let reparsed = parse_network(canonical.as_bytes()).unwrap();
        prop_assert_eq!(&reparsed, &net);
        prop_assert_eq!(reparsed.to_document().to_json(), canonical);
    }
}
