//! Small reference networks bundled with the library.

use crate::graph::{load_msn, Msn, NodeIx, Partition};

/// The 78 friendships of Zachary's karate club, members numbered 1..=34.
pub const KARATE_EDGES: [(u8, u8); 78] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 11), (1, 12), (1, 13), (1, 14), (1, 18),
    (1, 20), (1, 22), (1, 32), (2, 3), (2, 4), (2, 8), (2, 14), (2, 18), (2, 20), (2, 22), (2, 31), (3, 4), (3, 8),
    (3, 9), (3, 10), (3, 14), (3, 28), (3, 29), (3, 33), (4, 8), (4, 13), (4, 14), (5, 7), (5, 11), (6, 7), (6, 11),
    (6, 17), (7, 17), (9, 31), (9, 33), (9, 34), (10, 34), (14, 34), (15, 33), (15, 34), (16, 33), (16, 34),
    (19, 33), (19, 34), (20, 34), (21, 33), (21, 34), (23, 33), (23, 34), (24, 26), (24, 28), (24, 30), (24, 33),
    (24, 34), (25, 26), (25, 28), (25, 32), (26, 32), (27, 30), (27, 34), (28, 34), (29, 32), (29, 34), (30, 33),
    (30, 34), (31, 33), (31, 34), (32, 33), (32, 34), (33, 34),
];

/// Members who followed Mr Hi after the club split; the rest joined John.
pub const KARATE_MR_HI: [u8; 17] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22];

/// The karate club as a single-layer network with both directions per friendship.
pub fn karate_club() -> Msn {
    let mut records = Vec::with_capacity(KARATE_EDGES.len() * 2);
    for &(a, b) in &KARATE_EDGES {
        records.push((a.to_string(), b.to_string(), "friendship".to_string(), 1.0));
        records.push((b.to_string(), a.to_string(), "friendship".to_string(), 1.0));
    }
    load_msn(records).expect("karate edges are valid")
}

/// The two clubs after the split, over the node indices of [`karate_club`].
pub fn karate_factions(net: &Msn) -> Partition {
    let labels: Vec<Option<&str>> = (0..net.node_count())
        .map(|x: NodeIx| {
            let member: u8 = net.node_name(x).parse().unwrap_or(0);
            Some(if KARATE_MR_HI.contains(&member) { "mr_hi" } else { "john" })
        })
        .collect();
    let mut p = Partition::from_labels(&labels);
    p.groups.sort_by(|a, b| b.id.cmp(&a.id));
    p
}
