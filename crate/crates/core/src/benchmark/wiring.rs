use std::collections::HashSet;

use crate::graph::NodeIx;
use crate::rng::SeededRng;

pub(crate) fn key(a: NodeIx, b: NodeIx) -> (NodeIx, NodeIx) {
    (a.min(b), a.max(b))
}

/// Configuration-model pairing of `stubs` (one entry per stub). Pairs that
/// would form a self-loop, a duplicate or a disallowed link are repaired by
/// swapping with already placed edges, up to `budget` attempts; stubs still
/// unmatched afterwards are dropped. Returns the new edges and the number of
/// dropped stubs.
pub(crate) fn wire<F>(
    mut stubs: Vec<NodeIx>,
    allowed: F,
    existing: &mut HashSet<(NodeIx, NodeIx)>,
    rng: &mut SeededRng,
    budget: usize,
) -> (Vec<(NodeIx, NodeIx)>, usize)
where
    F: Fn(NodeIx, NodeIx) -> bool,
{
    rng.shuffle(&mut stubs);
    let ok = |a: NodeIx, b: NodeIx, existing: &HashSet<(NodeIx, NodeIx)>| {
        a != b && allowed(a, b) && !existing.contains(&key(a, b))
    };
    let mut edges: Vec<(NodeIx, NodeIx)> = Vec::new();
    let mut leftover = Vec::new();
    let mut iter = stubs.chunks_exact(2);
    for pair in &mut iter {
        let (a, b) = (pair[0], pair[1]);
        if ok(a, b, existing) {
            existing.insert(key(a, b));
            edges.push((a, b));
        } else {
            leftover.push(a);
            leftover.push(b);
        }
    }
    let mut dropped = iter.remainder().len();

    let mut attempts = 0;
    while leftover.len() >= 2 && attempts < budget {
        attempts += 1;
        let u = leftover[leftover.len() - 1];
        let j = rng.below(leftover.len() - 1);
        let v = leftover[j];
        if ok(u, v, existing) {
            existing.insert(key(u, v));
            edges.push((u, v));
            leftover.pop();
            leftover.swap_remove(j);
            continue;
        }
        if edges.is_empty() {
            break;
        }
        // swap: (c,d) + (u,v) -> (u,c) + (v,d)
        let e = rng.below(edges.len());
        let (mut c, mut d) = edges[e];
        if rng.chance(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        if u == c || v == d || key(u, c) == key(v, d) {
            continue;
        }
        existing.remove(&key(c, d));
        if ok(u, c, existing) && ok(v, d, existing) {
            existing.insert(key(u, c));
            existing.insert(key(v, d));
            edges[e] = (u, c);
            edges.push((v, d));
            leftover.pop();
            leftover.swap_remove(j);
        } else {
            existing.insert(key(c, d));
        }
    }
    dropped += leftover.len();
    (edges, dropped)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_graph_without_drops() {
        let mut rng = SeededRng::new(11);
        let stubs: Vec<NodeIx> = (0..32).flat_map(|v| std::iter::repeat(v).take(14)).collect();
        let mut existing = HashSet::new();
        let (edges, dropped) = wire(stubs, |_, _| true, &mut existing, &mut rng, 10_000);
        assert_eq!(dropped, 0);
        let mut deg = vec![0; 32];
        for (a, b) in &edges {
            assert_ne!(a, b);
            deg[*a] += 1;
            deg[*b] += 1;
        }
        assert!(deg.iter().all(|&d| d == 14));
        assert_eq!(existing.len(), edges.len());
    }
}
