//! Generates a three-layer benchmark with planted communities and checks
//! how well extraction recovers them.

use mlsna::benchmark::{generate_mlfr, BenchmarkSpec};
use mlsna::community::{clecc_method, CommunityCondition, MethodOptions};
use mlsna::evaluation::{nmi, Unassigned};

fn main() -> mlsna::Result<()> {
    let spec = BenchmarkSpec {
        n: 300,
        layers: 3,
        avg_degree: 12.0,
        max_degree: 30.0,
        mu: 0.1,
        cmin: 15,
        cmax: 40,
        seed: 7,
        ..BenchmarkSpec::default()
    };
    let (net, truth) = generate_mlfr(&spec)?;
    println!("{} nodes, {} edge records, {} planted communities", net.node_count(), net.edge_count(), truth.community_count());
    for l in 0..net.layer_count() {
        println!("layer {}: {} links", net.layer_name(l), net.layer_pair_count(l));
    }
    for alpha in 1..=3 {
        let (found, _) = clecc_method(&net, MethodOptions::new(alpha, CommunityCondition::Weak))?;
        let score = nmi(&truth.base(), &found, Unassigned::Singletons)?;
        println!("α = {alpha}: {} groups, NMI {:.3}", found.groups.len(), score);
    }
    Ok(())
}
