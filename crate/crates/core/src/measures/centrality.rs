use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Msn, NodeIx};

/// Edge direction considered by degree-type measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    #[default]
    Total,
    In,
    Out,
}

/// Scaling applied to raw betweenness (a sum over ordered source/target pairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetweennessNorm {
    Raw,
    /// Divide by n − 1.
    #[default]
    NodeCount,
    /// Divide by (n − 1)(n − 2), the usual [0,1] scaling.
    Pairs,
}

fn single_layer(net: &Msn) -> Result<()> {
    if net.layer_count() > 1 {
        return Err(Error::NotSingleLayer(net.layer_count()));
    }
    Ok(())
}

fn outs(net: &Msn, x: NodeIx) -> &[(NodeIx, f64)] {
    if net.layer_count() == 0 {
        &[]
    } else {
        net.out_edges(x, 0)
    }
}

fn ins(net: &Msn, x: NodeIx) -> &[(NodeIx, f64)] {
    if net.layer_count() == 0 {
        &[]
    } else {
        net.in_edges(x, 0)
    }
}

/// Degree of `x` on a single-layer network: distinct neighbours for `Total`,
/// edge counts for `In`/`Out`, or the matching weight sums when `weighted`.
pub fn degree_centrality(net: &Msn, x: NodeIx, direction: Direction, normalized: bool, weighted: bool) -> Result<f64> {
    single_layer(net)?;
    net.check_node(x)?;
    let n = net.node_count();
    if normalized && n < 2 {
        return Err(Error::DegenerateNetwork("normalized degree needs two nodes".into()));
    }
    let sum = |edges: &[(NodeIx, f64)]| -> f64 {
        if weighted {
            edges.iter().map(|e| e.1).sum()
        } else {
            edges.len() as f64
        }
    };
    let d = match direction {
        Direction::In => sum(ins(net, x)),
        Direction::Out => sum(outs(net, x)),
        Direction::Total if weighted => sum(ins(net, x)) + sum(outs(net, x)),
        Direction::Total => net.neighbours(x).len() as f64,
    };
    Ok(if normalized { d / (n - 1) as f64 } else { d })
}

/// Hop distances from `x` along outgoing edges; `None` when unreachable.
pub fn hop_distances(net: &Msn, x: NodeIx) -> Vec<Option<usize>> {
    let mut dist = vec![None; net.node_count()];
    dist[x] = Some(0);
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].unwrap_or(0);
        for &(w, _) in outs(net, v) {
            if dist[w].is_none() {
                dist[w] = Some(dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Closeness of `x`: 1/Σd over reachable nodes, or r/Σd when normalized,
/// r being the number of reachable nodes. Unreachable nodes are left out.
pub fn closeness(net: &Msn, x: NodeIx, normalized: bool) -> Result<f64> {
    single_layer(net)?;
    net.check_node(x)?;
    let dist = hop_distances(net, x);
    let reach: Vec<usize> = dist
        .iter()
        .enumerate()
        .filter(|(y, _)| *y != x)
        .filter_map(|(_, d)| *d)
        .collect();
    let total: usize = reach.iter().sum();
    if total == 0 {
        return Ok(0.0);
    }
    let numerator = if normalized { reach.len() as f64 } else { 1.0 };
    Ok(numerator / total as f64)
}

/// Raw betweenness of every node (Brandes, unit edge lengths, ordered pairs).
pub fn betweenness_all(net: &Msn) -> Result<Vec<f64>> {
    single_layer(net)?;
    let n = net.node_count();
    let mut bc = vec![0.0; n];
    for s in 0..n {
        let mut stack = Vec::with_capacity(n);
        let mut preds: Vec<Vec<NodeIx>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![-1i64; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &(w, _) in outs(net, v) {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        let mut delta = vec![0.0; n];
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    Ok(bc)
}

/// Betweenness of `x` under the chosen scaling.
pub fn betweenness(net: &Msn, x: NodeIx, norm: BetweennessNorm) -> Result<f64> {
    single_layer(net)?;
    net.check_node(x)?;
    let n = net.node_count();
    if n < 3 {
        return Err(Error::DegenerateNetwork("betweenness needs three nodes".into()));
    }
    let raw = betweenness_all(net)?[x];
    let nf = n as f64;
    Ok(match norm {
        BetweennessNorm::Raw => raw,
        BetweennessNorm::NodeCount => raw / (nf - 1.0),
        BetweennessNorm::Pairs => raw / ((nf - 1.0) * (nf - 2.0)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SocialPositionParams {
    pub epsilon: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SocialPositionParams {
    fn default() -> Self {
        Self {
            epsilon: 0.85,
            tol: 1e-6,
            max_iter: 1000,
        }
    }
}

/// Social position of every node: SP(x) = (1 − ε) + ε Σ_y SP(y)·C(y→x),
/// iterated from SP = 1. C(y→x) is y's weight to x over all layers divided by
/// y's total outgoing weight.
pub fn social_position(net: &Msn, params: SocialPositionParams) -> Result<Vec<f64>> {
    let SocialPositionParams { epsilon, tol, max_iter } = params;
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::ParameterOutOfRange {
            name: "epsilon",
            value: epsilon,
        });
    }
    let n = net.node_count();
    // incoming commitments: for each x, (y, C(y→x))
    let mut out_weight = vec![0.0; n];
    let mut combined: Vec<std::collections::BTreeMap<NodeIx, f64>> = vec![Default::default(); n];
    for (s, t, _, w) in net.edges() {
        out_weight[s] += w;
        *combined[t].entry(s).or_insert(0.0) += w;
    }
    let commit: Vec<Vec<(NodeIx, f64)>> = combined
        .into_iter()
        .map(|m| {
            m.into_iter()
                .filter(|(y, _)| out_weight[*y] > 0.0)
                .map(|(y, w)| (y, w / out_weight[y]))
                .collect()
        })
        .collect();
    let mut sp = vec![1.0; n];
    for _ in 0..max_iter {
        let next: Vec<f64> = commit
            .iter()
            .map(|inc| (1.0 - epsilon) + epsilon * inc.iter().map(|&(y, c)| sp[y] * c).sum::<f64>())
            .collect();
        let diff = next.iter().zip(&sp).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        sp = next;
        if diff < tol {
            return Ok(sp);
        }
    }
    Err(Error::NoConvergence(max_iter))
}
