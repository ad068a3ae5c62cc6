use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{LayerIx, Msn, NodeIx};

/// Which directions count toward the layer threshold of a multi-layered
/// neighbourhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighbourhoodMode {
    /// y → x on at least α layers.
    In,
    /// x → y on at least α layers.
    Out,
    /// Both `In` and `Out`, possibly on different layers.
    InOutAny,
    /// Both directions on the same layer, on at least α layers.
    InOut,
    /// Either direction on at least α layers.
    #[default]
    Any,
}

/// Per-neighbour layer counts of one node.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LinkCounts {
    pub incoming: usize,
    pub outgoing: usize,
    pub bidirectional: usize,
    pub any: usize,
}

impl LinkCounts {
    pub fn count(&self, mode: NeighbourhoodMode) -> usize {
        match mode {
            NeighbourhoodMode::In => self.incoming,
            NeighbourhoodMode::Out => self.outgoing,
            NeighbourhoodMode::InOutAny => self.incoming.min(self.outgoing),
            NeighbourhoodMode::InOut => self.bidirectional,
            NeighbourhoodMode::Any => self.any,
        }
    }
}

pub(crate) fn check_alpha(msn: &Msn, alpha: usize) -> Result<()> {
    if alpha < 1 || alpha > msn.layer_count() {
        return Err(Error::AlphaOutOfRange {
            alpha,
            layers: msn.layer_count(),
        });
    }
    Ok(())
}

/// Layer counts toward every node linked to `x` on some layer.
pub fn link_counts(msn: &Msn, x: NodeIx) -> BTreeMap<NodeIx, LinkCounts> {
    let mut counts: BTreeMap<NodeIx, LinkCounts> = BTreeMap::new();
    for l in 0..msn.layer_count() {
        let outs = msn.out_edges(x, l);
        let ins = msn.in_edges(x, l);
        for &(y, _) in outs {
            counts.entry(y).or_default().outgoing += 1;
        }
        for &(y, _) in ins {
            counts.entry(y).or_default().incoming += 1;
        }
        let (mut i, mut j) = (0, 0);
        while i < outs.len() || j < ins.len() {
            let a = outs.get(i).map(|e| e.0);
            let b = ins.get(j).map(|e| e.0);
            let y = match (a, b) {
                (Some(a), Some(b)) if a == b => {
                    counts.entry(a).or_default().bidirectional += 1;
                    i += 1;
                    j += 1;
                    a
                }
                (Some(a), Some(b)) if a < b => {
                    i += 1;
                    a
                }
                (Some(a), None) => {
                    i += 1;
                    a
                }
                (_, Some(b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            counts.entry(y).or_default().any += 1;
        }
    }
    counts
}

/// N(x,l): nodes linked to `x` in either direction on layer `l`.
pub fn layer_neighbourhood(msn: &Msn, x: NodeIx, l: LayerIx) -> Result<BTreeSet<NodeIx>> {
    msn.check_node(x)?;
    msn.check_layer(l)?;
    let mut set: BTreeSet<NodeIx> = msn.out_edges(x, l).iter().map(|e| e.0).collect();
    set.extend(msn.in_edges(x, l).iter().map(|e| e.0));
    Ok(set)
}

/// MN(x,α) under the given mode.
pub fn multi_neighbourhood(msn: &Msn, x: NodeIx, alpha: usize, mode: NeighbourhoodMode) -> Result<BTreeSet<NodeIx>> {
    msn.check_node(x)?;
    check_alpha(msn, alpha)?;
    Ok(link_counts(msn, x)
        .into_iter()
        .filter(|(_, c)| c.count(mode) >= alpha)
        .map(|(y, _)| y)
        .collect())
}

/// MN(x,α) in `Any` mode for every node, as sorted vectors.
pub(crate) fn all_any_neighbourhoods(msn: &Msn, alpha: usize) -> Vec<Vec<NodeIx>> {
    (0..msn.node_count())
        .map(|x| {
            link_counts(msn, x)
                .into_iter()
                .filter(|(_, c)| c.any >= alpha)
                .map(|(y, _)| y)
                .collect()
        })
        .collect()
}
