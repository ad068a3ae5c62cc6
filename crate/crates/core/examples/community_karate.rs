//! Community extraction on Zachary's karate club, scored against the
//! observed split.

use mlsna::community::{clecc_method, clecc_plus, CommunityCondition, MethodOptions};
use mlsna::datasets::{karate_club, karate_factions};
use mlsna::evaluation::{nmi, Unassigned};

fn main() -> mlsna::Result<()> {
    let net = karate_club();
    let truth = karate_factions(&net);
    let (found, trace) = clecc_method(&net, MethodOptions::new(1, CommunityCondition::Weak))?;
    println!("{} removal rounds", trace.iterations.len());
    for g in &found.groups {
        let names: Vec<&str> = g.members.iter().map(|&x| net.node_name(x)).collect();
        println!("group {} ({}): {}", g.id, g.len(), names.join(" "));
    }
    let loose: Vec<&str> = found.unassigned.iter().map(|&x| net.node_name(x)).collect();
    println!("unassigned: {}", loose.join(" "));
    println!("NMI = {:.4}", nmi(&truth, &found, Unassigned::Singletons)?);

    let placed = clecc_plus(&net, &found);
    println!("after placing unassigned nodes: NMI = {:.4}", nmi(&truth, &placed, Unassigned::Singletons)?);
    Ok(())
}
