use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Msn, NodeIx};
use crate::measures::neighbourhood::{multi_neighbourhood, NeighbourhoodMode};

/// Denominator convention of the cross-layered edge clustering coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CleccDenominator {
    /// |(MN(x) ∪ MN(y)) \ {x,y}|
    #[default]
    Exclusive,
    /// |(MN(x) ∪ MN(y)) \ {x,y}| + 1, counting the pair's own link once.
    /// This is the convention under which the karate removal trace is printed.
    EdgeInclusive,
}

impl CleccDenominator {
    pub(crate) fn value(self, common: usize, others: usize) -> f64 {
        let denom = match self {
            CleccDenominator::Exclusive => others,
            CleccDenominator::EdgeInclusive => others + 1,
        };
        if denom == 0 {
            0.0
        } else {
            common as f64 / denom as f64
        }
    }
}

fn single_layer_neighbours(net: &Msn, x: NodeIx) -> Result<BTreeSet<NodeIx>> {
    if net.layer_count() > 1 {
        return Err(Error::NotSingleLayer(net.layer_count()));
    }
    net.check_node(x)?;
    Ok(net.neighbours(x))
}

fn triangle_counts(net: &Msn, x: NodeIx, y: NodeIx) -> Result<(usize, usize)> {
    let nx = single_layer_neighbours(net, x)?;
    let ny = single_layer_neighbours(net, y)?;
    if !nx.contains(&y) {
        return Err(Error::NoSuchEdge(net.node_name(x).into(), net.node_name(y).into()));
    }
    let z = nx.intersection(&ny).count();
    let s = (nx.len() - 1).min(ny.len() - 1);
    if s == 0 {
        return Err(Error::DegenerateDenominator(format!(
            "edge {}-{} cannot close a triangle",
            net.node_name(x),
            net.node_name(y)
        )));
    }
    Ok((z, s))
}

/// Edge clustering coefficient (z + 1)/s: z triangles on the edge, s the
/// smaller endpoint degree not counting the edge itself.
pub fn ecc(net: &Msn, x: NodeIx, y: NodeIx) -> Result<f64> {
    let (z, s) = triangle_counts(net, x, y)?;
    Ok((z + 1) as f64 / s as f64)
}

/// Share of possible triangles on the edge that exist, z/s.
pub fn triangle_ratio(net: &Msn, x: NodeIx, y: NodeIx) -> Result<f64> {
    let (z, s) = triangle_counts(net, x, y)?;
    Ok(z as f64 / s as f64)
}

/// Cross-layered edge clustering coefficient with the exclusive denominator.
pub fn clecc(msn: &Msn, x: NodeIx, y: NodeIx, alpha: usize) -> Result<f64> {
    clecc_with(msn, x, y, alpha, CleccDenominator::Exclusive)
}

/// Common multi-layered neighbours of x and y over the size of their union
/// without the endpoints, under the chosen denominator convention.
pub fn clecc_with(msn: &Msn, x: NodeIx, y: NodeIx, alpha: usize, denominator: CleccDenominator) -> Result<f64> {
    let mx = multi_neighbourhood(msn, x, alpha, NeighbourhoodMode::Any)?;
    let my = multi_neighbourhood(msn, y, alpha, NeighbourhoodMode::Any)?;
    let common = mx.intersection(&my).count();
    let others = mx.union(&my).filter(|&&v| v != x && v != y).count();
    Ok(denominator.value(common, others))
}
