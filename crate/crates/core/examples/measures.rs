//! Node and pair measures on a small two-layer network.

use mlsna::measures::{cdc, clcc, clecc, degree_centrality, mdc, multi_neighbourhood, social_position, Direction, MdcVersion, NeighbourhoodMode, SocialPositionParams};
use mlsna::MsnBuilder;

fn main() -> mlsna::Result<()> {
    let mut b = MsnBuilder::new();
    for (s, t, layer) in [
        ("ann", "bob", "work"),
        ("bob", "cat", "work"),
        ("cat", "ann", "work"),
        ("ann", "bob", "family"),
        ("bob", "dan", "family"),
        ("dan", "ann", "family"),
        ("cat", "dan", "family"),
    ] {
        b.add_edge(s, t, layer, 1.0)?;
        b.add_edge(t, s, layer, 1.0)?;
    }
    let net = b.build();

    println!("node  MN(α=2)  CLCC(α=1)  CDC(α=1)  MDC1   MDC2   MDC3");
    for x in 0..net.node_count() {
        let mn = multi_neighbourhood(&net, x, 2, NeighbourhoodMode::Any)?;
        println!(
            "{:<5} {:<8} {:<10.3} {:<9.3} {:<6.3} {:<6.3} {:.3}",
            net.node_name(x),
            mn.len(),
            clcc(&net, x, 1)?,
            cdc(&net, x, 1, Direction::Total)?,
            mdc(&net, x, MdcVersion::Layers, Direction::Total)?,
            mdc(&net, x, MdcVersion::Union, Direction::Total)?,
            mdc(&net, x, MdcVersion::LayerSum, Direction::Total)?,
        );
    }

    let (ann, bob) = (net.node_id("ann")?, net.node_id("bob")?);
    println!("CLECC(ann, bob, α=1) = {:.3}", clecc(&net, ann, bob, 1)?);

    let work = net.layer_view("work")?;
    let sp = social_position(&work, SocialPositionParams::default())?;
    for x in 0..work.node_count() {
        println!(
            "work layer: {} degree {:.0}, social position {:.3}",
            work.node_name(x),
            degree_centrality(&work, x, Direction::Total, false, false)?,
            sp[x]
        );
    }
    Ok(())
}
