use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Msn, NodeIx};
use crate::measures::centrality::Direction;
use crate::measures::neighbourhood::{layer_neighbourhood, multi_neighbourhood, NeighbourhoodMode};

/// Which denominator the multi-layered degree centrality uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdcVersion {
    /// (n − 1)·|L|
    Layers,
    /// (n − 1)·|MN(x,1)|
    Union,
    /// (n − 1)·Σ_l |N(x,l)|
    LayerSum,
}

fn need_two(msn: &Msn) -> Result<f64> {
    if msn.node_count() < 2 {
        return Err(Error::DegenerateNetwork("needs at least two nodes".into()));
    }
    Ok((msn.node_count() - 1) as f64)
}

fn directed_weight(msn: &Msn, x: NodeIx, y: NodeIx, l: usize, direction: Direction) -> f64 {
    match direction {
        Direction::Total => msn.weight(x, y, l) + msn.weight(y, x, l),
        Direction::In => msn.weight(y, x, l),
        Direction::Out => msn.weight(x, y, l),
    }
}

/// Cross-layered clustering coefficient: weighted in- plus out-degree of
/// every member of MN(x,α) counted inside MN(x,α), over 2·|MN|·|L|.
pub fn clcc(msn: &Msn, x: NodeIx, alpha: usize) -> Result<f64> {
    let mn = multi_neighbourhood(msn, x, alpha, NeighbourhoodMode::Any)?;
    if mn.len() <= 1 {
        return Ok(0.0);
    }
    let mut sum = 0.0;
    for l in 0..msn.layer_count() {
        for &y in &mn {
            sum += msn.in_edges(y, l).iter().filter(|e| mn.contains(&e.0)).map(|e| e.1).sum::<f64>();
            sum += msn.out_edges(y, l).iter().filter(|e| mn.contains(&e.0)).map(|e| e.1).sum::<f64>();
        }
    }
    Ok(sum / (2.0 * mn.len() as f64 * msn.layer_count() as f64))
}

/// Cross-layered degree centrality: weights between x and MN(x,α) summed
/// over all layers, over (n − 1)·|L|.
pub fn cdc(msn: &Msn, x: NodeIx, alpha: usize, direction: Direction) -> Result<f64> {
    let mn = multi_neighbourhood(msn, x, alpha, NeighbourhoodMode::Any)?;
    let n1 = need_two(msn)?;
    let mut sum = 0.0;
    for l in 0..msn.layer_count() {
        for &y in &mn {
            sum += directed_weight(msn, x, y, l, direction);
        }
    }
    Ok(sum / (n1 * msn.layer_count() as f64))
}

/// Multi-layered degree centrality: per-layer weighted degrees over N(x,l)
/// summed over layers, divided per `version`. Versions with an empty
/// neighbourhood-based denominator give 0.
pub fn mdc(msn: &Msn, x: NodeIx, version: MdcVersion, direction: Direction) -> Result<f64> {
    msn.check_node(x)?;
    let n1 = need_two(msn)?;
    let mut sum = 0.0;
    let mut union = BTreeSet::new();
    let mut layer_sum = 0usize;
    for l in 0..msn.layer_count() {
        let nb = layer_neighbourhood(msn, x, l)?;
        for &y in &nb {
            sum += directed_weight(msn, x, y, l, direction);
        }
        layer_sum += nb.len();
        union.extend(nb);
    }
    let denom = match version {
        MdcVersion::Layers => msn.layer_count(),
        MdcVersion::Union => union.len(),
        MdcVersion::LayerSum => layer_sum,
    };
    if denom == 0 {
        return Ok(0.0);
    }
    Ok(sum / (n1 * denom as f64))
}
