//! Tracks groups across snapshots and prints the detected events and the
//! resulting timelines.

use mlsna::evolution::{evolution_chains, ged, GedParams, ImportanceSource};
use mlsna::graph::Group;
use mlsna::{Dsn, MsnBuilder, Partition};

fn clique(b: &mut MsnBuilder, members: &[u32]) -> mlsna::Result<()> {
    for &x in members {
        for &y in members {
            if x != y {
                b.add_edge(&x.to_string(), &y.to_string(), "contact", 1.0)?;
            }
        }
    }
    Ok(())
}

fn main() -> mlsna::Result<()> {
    let snapshots: Vec<Vec<(&str, Vec<u32>)>> = vec![
        vec![("A", (1..=6).collect())],
        vec![("A", (1..=8).collect())],
        vec![("B", vec![1, 2, 3, 4]), ("C", vec![5, 6, 7])],
        vec![("B", vec![1, 2, 3]), ("C", vec![5, 6, 7])],
        vec![("D", vec![1, 2, 3, 5, 6, 7])],
    ];
    let mut universe = MsnBuilder::new();
    for n in 1..=8 {
        universe.add_node(&n.to_string());
    }
    universe.add_layer("contact");

    let mut frames = Vec::new();
    let mut partitions = Vec::new();
    for groups in &snapshots {
        let mut b = universe.clone();
        for (_, m) in groups {
            clique(&mut b, m)?;
        }
        let net = b.build();
        let mut p = Partition::default();
        for (id, m) in groups {
            let members = m.iter().map(|x| net.node_id(&x.to_string())).collect::<mlsna::Result<Vec<_>>>()?;
            p.groups.push(Group::new(*id, members)?);
        }
        frames.push(net);
        partitions.push(p);
    }
    let dsn = Dsn::from_frames(frames, 1, 0)?;

    let events = ged(&dsn, &partitions, GedParams::new(0.6, 0.6, ImportanceSource::SocialPosition))?;
    for e in &events {
        println!(
            "t{} {:>2} -> t{} {:>2}: {:<11} fwd {:.2} bwd {:.2}",
            e.frame_i,
            e.group_i.as_deref().unwrap_or("-"),
            e.frame_j,
            e.group_j.as_deref().unwrap_or("-"),
            e.kind,
            e.inclusion_fwd,
            e.inclusion_bwd
        );
    }
    for chain in evolution_chains(&events) {
        let path: Vec<String> = chain.steps.iter().map(|s| format!("t{}:{}({})", s.frame, s.group, s.size)).collect();
        println!("{}", path.join(" > "));
    }
    Ok(())
}
