//! Multi-layered distances, multi-edges and single-source shortest paths.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::graph::{Msn, NodeIx};
use crate::measures::{check_alpha, link_counts};

/// How edge weights turn into distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightTransform {
    /// Strong ties are short: d = 1 − Σw/|L|.
    #[default]
    Invert,
    /// Weights already express distance: d = Σw/|L|.
    Direct,
}

/// Which predicate admits an ordered pair as a multi-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiEdgeMode {
    ByLayers,
    ByDistance,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiEdge {
    pub source: NodeIx,
    pub target: NodeIx,
    pub distance: f64,
    pub layer_count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathResult {
    pub source: NodeIx,
    /// Reachable nodes only; absent means unreachable.
    pub lengths: BTreeMap<NodeIx, f64>,
    pub predecessors: BTreeMap<NodeIx, NodeIx>,
}

impl PathResult {
    pub fn length(&self, target: NodeIx) -> f64 {
        self.lengths.get(&target).copied().unwrap_or(f64::INFINITY)
    }

    /// Nodes from source to `target`, or `None` when unreachable.
    pub fn path_to(&self, target: NodeIx) -> Option<Vec<NodeIx>> {
        if !self.lengths.contains_key(&target) {
            return None;
        }
        let mut path = vec![target];
        let mut v = target;
        while v != self.source {
            v = self.predecessors[&v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }
}

/// Distance from x to y: 1 − Σ_l w(x,y,l)/|L| (or Σw/|L| with `Direct`).
pub fn strangeness(msn: &Msn, x: NodeIx, y: NodeIx, transform: WeightTransform) -> Result<f64> {
    msn.check_node(x)?;
    msn.check_node(y)?;
    let layers = msn.layer_count();
    if layers == 0 {
        return Ok(match transform {
            WeightTransform::Invert => 1.0,
            WeightTransform::Direct => 0.0,
        });
    }
    let mut sum = 0.0;
    for l in 0..layers {
        let w = msn.weight(x, y, l);
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::WeightOutOfRange {
                from: msn.node_name(x).into(),
                to: msn.node_name(y).into(),
                weight: w,
            });
        }
        sum += w;
    }
    let share = sum / layers as f64;
    Ok(match transform {
        WeightTransform::Invert => 1.0 - share,
        WeightTransform::Direct => share,
    })
}

fn check_beta(beta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::ParameterOutOfRange {
            name: "beta",
            value: beta,
        });
    }
    Ok(())
}

/// Outgoing multi-edges of one node that satisfy the mode's predicate.
fn node_multi_edges(
    msn: &Msn,
    x: NodeIx,
    mode: MultiEdgeMode,
    alpha: usize,
    beta: f64,
    transform: WeightTransform,
) -> Result<Vec<MultiEdge>> {
    let mut out = Vec::new();
    for (y, counts) in link_counts(msn, x) {
        if counts.outgoing == 0 {
            continue;
        }
        let distance = strangeness(msn, x, y, transform)?;
        let by_layers = counts.outgoing >= alpha;
        let by_distance = distance <= beta;
        let keep = match mode {
            MultiEdgeMode::ByLayers => by_layers,
            MultiEdgeMode::ByDistance => by_distance,
            MultiEdgeMode::Both => by_layers && by_distance,
        };
        if keep {
            out.push(MultiEdge {
                source: x,
                target: y,
                distance,
                layer_count: counts.outgoing,
            });
        }
    }
    Ok(out)
}

/// All directed multi-edges admitted by `mode`. Only pairs with at least one
/// edge x → y are candidates.
pub fn multi_edges(
    msn: &Msn,
    mode: MultiEdgeMode,
    alpha: usize,
    beta: f64,
    transform: WeightTransform,
) -> Result<Vec<MultiEdge>> {
    if mode != MultiEdgeMode::ByDistance {
        check_alpha(msn, alpha)?;
    }
    if mode != MultiEdgeMode::ByLayers {
        check_beta(beta)?;
    }
    let mut all = Vec::new();
    for x in 0..msn.node_count() {
        all.extend(node_multi_edges(msn, x, mode, alpha, beta, transform)?);
    }
    Ok(all)
}

#[derive(PartialEq)]
struct Entry(f64, NodeIx);

impl Eq for Entry {}

impl Ord for Entry {
    // min-heap on (distance, node id)
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra<F>(n: usize, source: NodeIx, mut expand: F) -> Result<PathResult>
where
    F: FnMut(NodeIx) -> Result<Vec<(NodeIx, f64)>>,
{
    let mut dist = vec![f64::INFINITY; n];
    let mut pred: Vec<Option<NodeIx>> = vec![None; n];
    let mut done = vec![false; n];
    dist[source] = 0.0;
    let mut heap = BinaryHeap::from([Entry(0.0, source)]);
    while let Some(Entry(d, v)) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        for (w, len) in expand(v)? {
            let nd = d + len;
            if nd < dist[w] {
                dist[w] = nd;
                pred[w] = Some(v);
                heap.push(Entry(nd, w));
            }
        }
    }
    let mut result = PathResult {
        source,
        lengths: BTreeMap::new(),
        predecessors: BTreeMap::new(),
    };
    for v in 0..n {
        if dist[v].is_finite() {
            result.lengths.insert(v, dist[v]);
            if let Some(p) = pred[v] {
                result.predecessors.insert(v, p);
            }
        }
    }
    Ok(result)
}

/// Precomputed multi-edge graph for repeated shortest-path queries.
#[derive(Debug, Clone)]
pub struct MultiEdgeGraph {
    adjacency: Vec<Vec<(NodeIx, f64)>>,
}

impl MultiEdgeGraph {
    pub fn build(msn: &Msn, alpha: usize, beta: f64, transform: WeightTransform) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); msn.node_count()];
        for e in multi_edges(msn, MultiEdgeMode::Both, alpha, beta, transform)? {
            adjacency[e.source].push((e.target, e.distance));
        }
        Ok(Self { adjacency })
    }

    pub fn shortest_paths(&self, source: NodeIx) -> Result<PathResult> {
        if source >= self.adjacency.len() {
            return Err(Error::UnknownNode(format!("#{source}")));
        }
        dijkstra(self.adjacency.len(), source, |v| Ok(self.adjacency[v].clone()))
    }
}

/// Dijkstra over the graph of multi-edges with at least α layers and
/// distance at most β, built up front.
pub fn shortest_paths_dap(
    msn: &Msn,
    source: NodeIx,
    alpha: usize,
    beta: f64,
    transform: WeightTransform,
) -> Result<PathResult> {
    msn.check_node(source)?;
    MultiEdgeGraph::build(msn, alpha, beta, transform)?.shortest_paths(source)
}

/// Dijkstra that expands each settled node through its outgoing
/// multi-layered neighbourhood MN^Out(v,α) on demand.
pub fn shortest_paths_mda(msn: &Msn, source: NodeIx, alpha: usize, transform: WeightTransform) -> Result<PathResult> {
    msn.check_node(source)?;
    check_alpha(msn, alpha)?;
    dijkstra(msn.node_count(), source, |v| {
        Ok(node_multi_edges(msn, v, MultiEdgeMode::ByLayers, alpha, 1.0, transform)?
            .into_iter()
            .map(|e| (e.target, e.distance))
            .collect())
    })
}
