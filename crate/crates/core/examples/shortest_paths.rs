//! Shortest paths across layers with both multi-edge strategies.

use mlsna::paths::{shortest_paths_dap, shortest_paths_mda, WeightTransform};
use mlsna::MsnBuilder;

fn main() -> mlsna::Result<()> {
    let mut b = MsnBuilder::new();
    for (s, t, layer, w) in [
        ("a", "b", "email", 0.9),
        ("a", "b", "phone", 0.8),
        ("b", "c", "email", 0.2),
        ("a", "d", "phone", 0.6),
        ("d", "c", "email", 0.7),
        ("d", "c", "phone", 0.9),
    ] {
        b.add_edge(s, t, layer, w)?;
    }
    let net = b.build();
    let a = net.node_id("a")?;

    let dap = shortest_paths_dap(&net, a, 1, 1.0, WeightTransform::Invert)?;
    let mda = shortest_paths_mda(&net, a, 2, WeightTransform::Invert)?;
    for x in 0..net.node_count() {
        let show = |p: Option<Vec<usize>>| match p {
            Some(p) => p.iter().map(|&v| net.node_name(v)).collect::<Vec<_>>().join(" -> "),
            None => "unreachable".into(),
        };
        println!(
            "{}: any-layer {:.2} [{}], two-layer {:.2} [{}]",
            net.node_name(x),
            dap.length(x),
            show(dap.path_to(x)),
            mda.length(x),
            show(mda.path_to(x)),
        );
    }
    Ok(())
}
