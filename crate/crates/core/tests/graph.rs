mod common;

use std::collections::BTreeSet;

use common::*;
use mlsna::graph::{load_dsn, load_msn};
use mlsna::io::{format_edge_list, parse_edge_list, parse_event_log};
use mlsna::{Error, Msn};
use proptest::prelude::*;

#[test]
fn empty_records_give_empty_network() {
    let net = load_msn(Vec::<(String, String, String, f64)>::new()).unwrap();
    assert_eq!((net.node_count(), net.layer_count(), net.edge_count()), (0, 0, 0));
}

#[test]
fn repeated_record_is_rejected() {
    let r = load_msn(vec![("x", "y", "l1", 1.0), ("x", "y", "l1", 1.0)]);
    assert!(matches!(r, Err(Error::DuplicateEdge { .. })));
}

#[test]
fn self_loop_is_rejected() {
    assert!(matches!(load_msn(vec![("x", "x", "l1", 1.0)]), Err(Error::SelfLoop { .. })));
}

#[test]
fn negative_or_nan_weight_is_rejected() {
    assert!(load_msn(vec![("x", "y", "l", -1.0)]).is_err());
    assert!(load_msn(vec![("x", "y", "l", f64::NAN)]).is_err());
}

#[test]
fn listed_first_layer_tuples_load() {
    let tuples = [
        ("x", "y"),
        ("y", "x"),
        ("x", "z"),
        ("z", "x"),
        ("y", "z"),
        ("u", "z"),
        ("u", "v"),
        ("v", "u"),
    ];
    let net = load_msn(tuples.iter().map(|&(a, b)| (a, b, "l1", 1.0))).unwrap();
    assert_eq!(net.layer_count(), 1);
    assert_eq!(net.edge_count(), 8);
    // t has no tuple on this layer, so only five nodes appear
    assert_eq!(net.node_count(), 5);
}

#[test]
fn layer_views_of_three_layer_example() {
    let net = three_layer_example();
    assert_eq!(net.node_count(), 6);
    let l1 = net.layer_view("l1").unwrap();
    let l2 = net.layer_view("l2").unwrap();
    assert_eq!(l1.layer_count(), 1);
    assert_eq!(l1.layer_pair_count(0), 8);
    assert_eq!(l2.layer_pair_count(0), 6);
    assert_eq!(l1.node_count(), 6);
}

#[test]
fn unknown_layer_view() {
    assert!(matches!(Msn::empty().layer_view("l1"), Err(Error::UnknownLayer(_))));
}

#[test]
fn induced_subgraph_cases() {
    let net = three_layer_example();
    let all: BTreeSet<usize> = (0..net.node_count()).collect();
    assert_eq!(net.induced_subgraph(&all).unwrap(), net);

    let x = net.node_id("x").unwrap();
    let single = net.induced_subgraph(&BTreeSet::from([x])).unwrap();
    assert_eq!((single.node_count(), single.edge_count()), (1, 0));

    let members: BTreeSet<usize> = ["x", "y", "z"].iter().map(|n| net.node_id(n).unwrap()).collect();
    let sub = net.induced_subgraph(&members).unwrap();
    let brute = net.edges().filter(|(s, t, _, _)| members.contains(s) && members.contains(t)).count();
    assert_eq!(sub.edge_count(), brute);

    assert!(matches!(net.induced_subgraph(&BTreeSet::from([99])), Err(Error::UnknownNode(_))));
}

#[test]
fn overlapping_windows() {
    let day = 1;
    let events = vec![
        ("a", "b", "l", 1.0, 0),
        ("b", "c", "l", 1.0, 60 * day),
        ("c", "a", "l", 1.0, 100 * day),
        ("a", "c", "l", 1.0, 179 * day),
    ];
    let dsn = load_dsn(events, 90 * day, 45 * day).unwrap();
    let spans: Vec<(i64, i64)> = dsn.frames.iter().map(|f| (f.start, f.end)).collect();
    assert_eq!(spans, vec![(0, 90), (45, 135), (90, 180)]);
    let counts: Vec<usize> = dsn.frames.iter().map(|f| f.network.edge_count()).collect();
    assert_eq!(counts, vec![2, 2, 2]);
}

#[test]
fn disjoint_windows() {
    let events = vec![("a", "b", "l", 1.0, 0), ("a", "b", "l", 1.0, 50), ("a", "b", "l", 1.0, 100)];
    let dsn = load_dsn(events, 45, 0).unwrap();
    let spans: Vec<(i64, i64)> = dsn.frames.iter().map(|f| (f.start, f.end)).collect();
    assert_eq!(spans, vec![(0, 45), (45, 90), (90, 135)]);
}

#[test]
fn single_event_single_frame() {
    let dsn = load_dsn(vec![("a", "b", "l", 1.0, 0)], 10, 0).unwrap();
    assert_eq!(dsn.len(), 1);
    assert_eq!(dsn.frames[0].network.edge_count(), 1);
}

#[test]
fn repeated_events_sum_within_a_frame() {
    let dsn = load_dsn(vec![("a", "b", "l", 1.0, 1), ("a", "b", "l", 2.5, 3)], 10, 0).unwrap();
    let net = &dsn.frames[0].network;
    assert_eq!(net.weight(net.node_id("a").unwrap(), net.node_id("b").unwrap(), 0), 3.5);
}

#[test]
fn window_errors() {
    let ev = vec![("a", "b", "l", 1.0, 0)];
    assert!(matches!(load_dsn(ev.clone(), 0, 0), Err(Error::InvalidWindow { .. })));
    assert!(matches!(load_dsn(ev, 10, 10), Err(Error::InvalidWindow { .. })));
    let none: Vec<(&str, &str, &str, f64, i64)> = Vec::new();
    assert!(matches!(load_dsn(none, 10, 0), Err(Error::EmptyLog)));
}

#[test]
fn edge_list_round_trip() {
    let text = "# comment\nsource\ttarget\tlayer\tweight\na\tb\twork\t0.5\nb\tc\thome\t1\n";
    let net = load_msn(parse_edge_list(text, false).unwrap()).unwrap();
    let again = load_msn(parse_edge_list(&format_edge_list(&net), false).unwrap()).unwrap();
    assert_eq!(net, again);
    let und = load_msn(parse_edge_list(text, true).unwrap()).unwrap();
    assert_eq!(und.edge_count(), 4);
}

#[test]
fn event_log_needs_timestamp() {
    assert!(matches!(parse_event_log("a\tb\tl\t1\n", false), Err(Error::Parse { .. })));
    assert_eq!(parse_event_log("a\tb\tl\t1\t7\n", true).unwrap().len(), 2);
}

proptest! {
    #[test]
    fn record_order_does_not_matter(spec in msn_spec(6, 3), seed in any::<u64>()) {
        let records: Vec<(String, String, String, f64)> = spec
            .edges
            .iter()
            .map(|&(s, t, l, w)| (format!("n{s}"), format!("n{t}"), format!("l{l}"), w))
            .collect();
        let mut shuffled = records.clone();
        mlsna::rng::SeededRng::new(seed).shuffle(&mut shuffled);
        prop_assert_eq!(load_msn(records).unwrap(), load_msn(shuffled).unwrap());
    }

    #[test]
    fn frame_boundaries(window in 1i64..20, overlap_frac in 0.0f64..1.0, times in prop::collection::vec(0i64..200, 1..30)) {
        let overlap = ((window as f64) * overlap_frac) as i64;
        let overlap = overlap.min(window - 1);
        let events: Vec<(String, String, String, f64, i64)> = times
            .iter()
            .enumerate()
            .map(|(i, &t)| (format!("a{}", i % 3), format!("b{}", i % 4), "l".to_string(), 1.0, t))
            .collect();
        let dsn = load_dsn(events, window, overlap).unwrap();
        let origin = *times.iter().min().unwrap();
        let step = window - overlap;
        for (k, f) in dsn.frames.iter().enumerate() {
            prop_assert_eq!(f.start, origin + k as i64 * step);
            prop_assert_eq!(f.end, f.start + window);
        }
        let cap = (window + step - 1) / step;
        for &t in &times {
            let hits = dsn.frames.iter().filter(|f| f.start <= t && t < f.end).count();
            prop_assert!(hits >= 1 && hits as i64 <= cap);
        }
    }

    #[test]
    fn inducing_is_idempotent_and_monotone(spec in msn_spec(7, 3), mask in any::<u8>(), sub in any::<u8>()) {
        let net = spec.build();
        let big: BTreeSet<usize> = (0..net.node_count()).filter(|i| mask >> i & 1 == 1).collect();
        let small: BTreeSet<usize> = big.iter().copied().filter(|i| sub >> i & 1 == 1).collect();
        let once = net.induced_subgraph(&big).unwrap();
        let all: BTreeSet<usize> = (0..once.node_count()).collect();
        prop_assert_eq!(&once.induced_subgraph(&all).unwrap(), &once);
        let edge_names = |m: &Msn| -> BTreeSet<(String, String, String)> {
            m.edges()
                .map(|(s, t, l, _)| (m.node_name(s).to_string(), m.node_name(t).to_string(), m.layer_name(l).to_string()))
                .collect()
        };
        let small_edges = edge_names(&net.induced_subgraph(&small).unwrap());
        prop_assert!(small_edges.is_subset(&edge_names(&once)));
    }
}
