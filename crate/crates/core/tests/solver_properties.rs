mod common;

use qnet_core::channel::ChannelDescriptor;
use qnet_core::network::{multi_edge_ree_flow, parse_network, Cut, QuantumNetwork};
use qnet_core::solver::{
    bound, bound_brute_force, bound_max_flow, per_sender_bounds, Method, SolverOptions,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{naive_min_cut, random_network};

fn opts() -> SolverOptions {
    SolverOptions::default()
}

fn assert_valid_witness(net: &QuantumNetwork, report: &qnet_core::solver::BoundReport) {
    let cut = Cut::from_mask(net, report.witness.cut.mask().to_vec()).unwrap();
    assert_eq!(multi_edge_ree_flow(net, &cut), report.bound);
    assert_eq!(report.witness.flow_value, report.bound);
    assert!(report.bound >= 0.0);
}

#[test]
fn brute_force_matches_naive_enumeration() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..150 {
        let net = random_network(&mut rng, 10, 25);
        let bf = bound_brute_force(&net, &opts()).unwrap();
        assert!((bf.bound - naive_min_cut(&net)).abs() <= 1e-12);
        assert_valid_witness(&net, &bf);
    }
}

#[test]
fn max_flow_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(32);
    for _ in 0..300 {
        let net = random_network(&mut rng, 12, 30);
        let bf = bound_brute_force(&net, &opts()).unwrap();
        let mf = bound_max_flow(&net, &opts());
        assert!(
            (bf.bound - mf.bound).abs() <= 1e-9,
            "{} vs {}",
            bf.bound,
            mf.bound
        );
        assert_valid_witness(&net, &mf);
    }
}

#[test]
fn single_pair_is_classical_min_cut() {
    // unit-weight 3×3 grid, opposite corners: min cut is the corner degree 2
    let mut edges = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            if c + 1 < 3 {
                edges.push(format!(
                    r#"{{"u":"g{r}{c}","v":"g{r}{}","channel":{{"kind":"custom","w":1.0}}}}"#,
                    c + 1
                ));
            }
            if r + 1 < 3 {
                edges.push(format!(
                    r#"{{"u":"g{r}{c}","v":"g{}{c}","channel":{{"kind":"custom","w":1.0}}}}"#,
                    r + 1
                ));
            }
        }
    }
    let nodes: Vec<String> = (0..3)
        .flat_map(|r| (0..3).map(move |c| format!("\"g{r}{c}\"")))
        .collect();
    let text = format!(
        r#"{{"nodes":[{}],"senders":["g00"],"receivers":["g22"],"edges":[{}]}}"#,
        nodes.join(","),
        edges.join(",")
    );
    let net = parse_network(text.as_bytes()).unwrap();
    let naive = naive_min_cut(&net);
    assert_eq!(naive, 2.0);
    assert_eq!(bound_brute_force(&net, &opts()).unwrap().bound, naive);
    assert!((bound_max_flow(&net, &opts()).bound - naive).abs() <= 1e-9);

    let mut rng = StdRng::seed_from_u64(33);
    let mut checked = 0;
    while checked < 50 {
        let net = random_network(&mut rng, 10, 25);
        if net.senders().len() != 1 || net.receivers().len() != 1 {
            continue;
        }
        let mf = bound_max_flow(&net, &opts());
        assert!((mf.bound - naive_min_cut(&net)).abs() <= 1e-9);
        checked += 1;
    }
}

#[test]
fn raising_or_removing_edges_is_monotone() {
    let mut rng = StdRng::seed_from_u64(34);
    for _ in 0..100 {
        let net = random_network(&mut rng, 10, 25);
        let base = bound(&net, Method::Auto, &opts()).unwrap().bound;
        let i = rng.gen_range(0..net.edges().len());
        let w = net.edges()[i].weight.value + rng.gen_range(0.01..2.0);
        let raised = net
            .with_edge_channel(i, ChannelDescriptor::Custom { w })
            .unwrap();
        assert!(bound(&raised, Method::Auto, &opts()).unwrap().bound >= base - 1e-12);
        let removed = net.without_edge(i).unwrap();
        assert!(bound(&removed, Method::Auto, &opts()).unwrap().bound <= base + 1e-12);
    }
}

#[test]
fn merging_senders_equals_ideal_links_between_them() {
    let mut rng = StdRng::seed_from_u64(35);
    let mut checked = 0;
    while checked < 50 {
        let net = random_network(&mut rng, 10, 20);
        if net.senders().len() < 2 {
            continue;
        }
        let joint = bound_brute_force(&net, &opts()).unwrap().bound;
        // one sender, the rest tied to it by infinite-weight edges
        let names: Vec<String> = net
            .senders()
            .iter()
            .map(|&s| net.nodes()[s].clone())
            .collect();
        let mut linked = net.with_senders(&[names[0].as_str()]).unwrap();
        for other in &names[1..] {
            linked = linked
                .with_extra_edge(&names[0], other, ChannelDescriptor::Ideal)
                .unwrap();
        }
        let via_links = bound_brute_force(&linked, &opts()).unwrap().bound;
        assert!((joint - via_links).abs() <= 1e-12, "{joint} vs {via_links}");
        checked += 1;
    }
}

#[test]
fn per_sender_bounds_specialise_and_never_exceed_joint() {
    let mut rng = StdRng::seed_from_u64(36);
    for _ in 0..80 {
        let net = random_network(&mut rng, 10, 25);
        let joint = bound(&net, Method::Auto, &opts()).unwrap();
        let per = per_sender_bounds(&net, Method::Auto, &opts()).unwrap();
        assert_eq!(per.len(), net.senders().len());
        if net.senders().len() == 1 {
            assert_eq!(per[0].report.bound, joint.bound);
            assert!((per[0].report.bound - bound_max_flow(&net, &opts()).bound).abs() <= 1e-9);
        }
        for p in &per {
            assert!(p.report.bound <= joint.bound + 1e-12);
        }
    }
}

#[test]
fn symmetric_senders_get_equal_bounds() {
    let net = parse_network(
        br#"{"nodes":["a1","a2","r","b1","b2"],"senders":["a1","a2"],"receivers":["b1","b2"],"edges":[
            {"u":"a1","v":"r","channel":{"kind":"pure_loss","eta":0.6}},
            {"u":"a2","v":"r","channel":{"kind":"pure_loss","eta":0.6}},
            {"u":"r","v":"b1","channel":{"kind":"dephasing","p":0.05}},
            {"u":"r","v":"b2","channel":{"kind":"dephasing","p":0.05}}]}"#,
    )
    .unwrap();
    let per = per_sender_bounds(&net, Method::Auto, &opts()).unwrap();
    assert_eq!(per[0].report.bound, per[1].report.bound);
}

#[test]
fn infinite_cut_reported_for_ideal_only_paths() {
    let net = parse_network(
        br#"{"nodes":["a","x","b"],"senders":["a"],"receivers":["b"],"edges":[
            {"u":"a","v":"x","channel":{"kind":"ideal"}},
            {"u":"x","v":"b","channel":{"kind":"ideal"}},
            {"u":"a","v":"b","channel":{"kind":"custom","w":3.0}}]}"#,
    )
    .unwrap();
    assert_eq!(bound_max_flow(&net, &opts()).bound, f64::INFINITY);
    assert_eq!(
        bound_brute_force(&net, &opts()).unwrap().bound,
        f64::INFINITY
    );
}
