mod common;

use common::*;
use mlsna::paths::*;
use mlsna::{Error, MsnBuilder};
use proptest::prelude::*;

#[test]
fn strangeness_cases() {
    let full = load(&[("x", "y", "a", 1.0), ("x", "y", "b", 1.0)]);
    assert_eq!(strangeness(&full, 0, 1, WeightTransform::Invert).unwrap(), 0.0);
    assert_eq!(strangeness(&full, 1, 0, WeightTransform::Invert).unwrap(), 1.0);
    let half = load(&[("x", "y", "a", 0.5), ("y", "x", "b", 1.0)]);
    assert_eq!(strangeness(&half, 0, 1, WeightTransform::Invert).unwrap(), 0.75);
    assert_eq!(strangeness(&half, 0, 1, WeightTransform::Direct).unwrap(), 0.25);
    let heavy = load(&[("x", "y", "a", 3.0)]);
    assert!(matches!(strangeness(&heavy, 0, 1, WeightTransform::Invert), Err(Error::WeightOutOfRange { .. })));
}

#[test]
fn multi_edge_modes() {
    let net = load(&[("x", "y", "a", 1.0), ("x", "y", "b", 1.0), ("y", "z", "a", 0.2), ("z", "x", "b", 0.9)]);
    let all = multi_edges(&net, MultiEdgeMode::Both, 1, 1.0, WeightTransform::Invert).unwrap();
    assert_eq!(all.len(), 3);
    let every_layer = multi_edges(&net, MultiEdgeMode::ByLayers, 2, 1.0, WeightTransform::Invert).unwrap();
    assert_eq!(every_layer.len(), 1);
    assert_eq!((every_layer[0].source, every_layer[0].target, every_layer[0].layer_count), (0, 1, 2));
    let near = multi_edges(&net, MultiEdgeMode::ByDistance, 1, 0.5, WeightTransform::Invert).unwrap();
    assert_eq!(near.len(), 1);
    assert!(matches!(
        multi_edges(&net, MultiEdgeMode::Both, 1, 1.5, WeightTransform::Invert),
        Err(Error::ParameterOutOfRange { .. })
    ));
}

#[test]
fn no_multi_edges_means_only_source() {
    let mut b = MsnBuilder::new();
    b.add_node("s").add_node("t").add_layer("l");
    let net = b.build();
    let r = shortest_paths_dap(&net, 0, 1, 1.0, WeightTransform::Invert).unwrap();
    assert_eq!(r.length(0), 0.0);
    assert!(r.length(1).is_infinite());
    assert_eq!(r.path_to(1), None);
    let r = shortest_paths_mda(&net, 0, 1, WeightTransform::Invert).unwrap();
    assert_eq!(r.lengths.len(), 1);
}

#[test]
fn single_multi_edge() {
    let net = load(&[("s", "t", "l", 0.7)]);
    let r = shortest_paths_dap(&net, 0, 1, 1.0, WeightTransform::Invert).unwrap();
    assert!((r.length(1) - 0.3).abs() < 1e-12);
    assert_eq!(r.path_to(1), Some(vec![0, 1]));
}

#[test]
fn unknown_source() {
    let net = load(&[("s", "t", "l", 0.7)]);
    assert!(matches!(shortest_paths_dap(&net, 9, 1, 1.0, WeightTransform::Invert), Err(Error::UnknownNode(_))));
    assert!(matches!(shortest_paths_mda(&net, 9, 1, WeightTransform::Invert), Err(Error::UnknownNode(_))));
}

#[test]
fn single_layer_closeness_from_path_lengths() {
    // with one layer and weight 0 every multi-edge has length 1, so path
    // lengths are hop counts
    let pairs = [("a", "b"), ("b", "c"), ("c", "d"), ("b", "e")];
    let mut b = MsnBuilder::new();
    for (x, y) in pairs {
        b.add_edge(x, y, "l", 0.0).unwrap();
        b.add_edge(y, x, "l", 0.0).unwrap();
    }
    let net = b.build();
    for x in 0..net.node_count() {
        let r = shortest_paths_mda(&net, x, 1, WeightTransform::Invert).unwrap();
        let hops = mlsna::measures::hop_distances(&net, x);
        for y in 0..net.node_count() {
            assert_eq!(r.lengths.get(&y).copied(), hops[y].map(|h| h as f64));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dap_at_full_beta_equals_mda(spec in msn_spec(10, 4)) {
        let net = spec.build();
        for alpha in 1..=spec.layers {
            for s in 0..spec.n {
                let dap = shortest_paths_dap(&net, s, alpha, 1.0, WeightTransform::Invert).unwrap();
                let mda = shortest_paths_mda(&net, s, alpha, WeightTransform::Invert).unwrap();
                prop_assert_eq!(&dap.lengths, &mda.lengths);
            }
        }
    }

    #[test]
    fn both_match_all_pairs_oracle(spec in msn_spec(8, 3), beta in 0.0f64..=1.0) {
        let net = spec.build();
        for alpha in 1..=spec.layers {
            let fw = floyd_warshall(&spec, alpha, beta);
            let fw_full = floyd_warshall(&spec, alpha, 1.0);
            for s in 0..spec.n {
                let dap = shortest_paths_dap(&net, s, alpha, beta, WeightTransform::Invert).unwrap();
                let mda = shortest_paths_mda(&net, s, alpha, WeightTransform::Invert).unwrap();
                for t in 0..spec.n {
                    prop_assert!(close(dap.length(t), fw[s][t]), "dap {} vs {}", dap.length(t), fw[s][t]);
                    prop_assert!(close(mda.length(t), fw_full[s][t]));
                }
            }
        }
    }

    #[test]
    fn predecessor_chains_are_consistent(spec in msn_spec(8, 3)) {
        let net = spec.build();
        for s in 0..spec.n {
            let r = shortest_paths_dap(&net, s, 1, 1.0, WeightTransform::Invert).unwrap();
            prop_assert_eq!(r.length(s), 0.0);
            for (&t, &len) in &r.lengths {
                let path = r.path_to(t).unwrap();
                prop_assert_eq!(path[0], s);
                prop_assert_eq!(*path.last().unwrap(), t);
                let walked: f64 = path.windows(2).map(|p| strangeness(&net, p[0], p[1], WeightTransform::Invert).unwrap()).sum();
                prop_assert!((walked - len).abs() < 1e-9);
                // triangle inequality over multi-edges
                for e in multi_edges(&net, MultiEdgeMode::Both, 1, 1.0, WeightTransform::Invert).unwrap() {
                    if e.source == t {
                        prop_assert!(r.length(e.target) <= len + e.distance + 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn strangeness_is_bounded_and_antimonotone(spec in msn_spec(6, 3)) {
        let net = spec.build();
        for x in 0..spec.n {
            for y in 0..spec.n {
                if x == y {
                    continue;
                }
                let d = strangeness(&net, x, y, WeightTransform::Invert).unwrap();
                prop_assert!((0.0..=1.0).contains(&d));
                let total: f64 = (0..spec.layers).map(|l| net.weight(x, y, l)).sum();
                prop_assert!((d - (1.0 - total / spec.layers as f64)).abs() < 1e-12);
            }
        }
    }
}
