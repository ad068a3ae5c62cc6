use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{Msn, NodeIx};

/// Which existence test a candidate subgraph must pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CommunityCondition {
    /// Total internal degree exceeds total external degree.
    #[default]
    Weak,
    /// Every member has more internal than external links.
    Strong,
}

/// (internal, external) tuple counts of each member, over all layers and
/// both directions.
pub fn member_degrees(msn: &Msn, members: &BTreeSet<NodeIx>) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(members.len());
    for &x in members {
        msn.check_node(x)?;
        let (mut k_in, mut k_out) = (0, 0);
        for l in 0..msn.layer_count() {
            for &(y, _) in msn.out_edges(x, l).iter().chain(msn.in_edges(x, l)) {
                if members.contains(&y) {
                    k_in += 1;
                } else {
                    k_out += 1;
                }
            }
        }
        out.push((k_in, k_out));
    }
    Ok(out)
}

pub fn is_weak_community(msn: &Msn, members: &BTreeSet<NodeIx>) -> Result<bool> {
    let degrees = member_degrees(msn, members)?;
    let k_in: usize = degrees.iter().map(|d| d.0).sum();
    let k_out: usize = degrees.iter().map(|d| d.1).sum();
    Ok(k_in > k_out)
}

pub fn is_strong_community(msn: &Msn, members: &BTreeSet<NodeIx>) -> Result<bool> {
    Ok(member_degrees(msn, members)?.iter().all(|&(i, o)| i > o))
}

pub fn satisfies(msn: &Msn, members: &BTreeSet<NodeIx>, condition: CommunityCondition) -> Result<bool> {
    match condition {
        CommunityCondition::Weak => is_weak_community(msn, members),
        CommunityCondition::Strong => is_strong_community(msn, members),
    }
}
