use std::collections::HashSet;

use crate::benchmark::powerlaw::{community_sizes, degree_sequence};
use crate::benchmark::spec::BenchmarkSpec;
use crate::benchmark::wiring::wire;
use crate::error::{Error, Result};
use crate::graph::{Msn, NodeIx, Partition};
use crate::rng::SeededRng;

/// Planted community of every node on every layer; layer 0 is the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruth {
    pub layers: Vec<Vec<usize>>,
}

impl GroundTruth {
    pub fn partition(&self, layer: usize) -> Partition {
        let labels: Vec<Option<usize>> = self.layers[layer].iter().map(|&c| Some(c)).collect();
        Partition::from_labels(&labels)
    }

    pub fn base(&self) -> Partition {
        self.partition(0)
    }

    pub fn community_count(&self) -> usize {
        self.layers[0].iter().max().map_or(0, |m| m + 1)
    }
}

/// Community and planned internal/external degree of every node on one layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPlan {
    pub community: Vec<usize>,
    pub internal: Vec<usize>,
    pub external: Vec<usize>,
}

impl LayerPlan {
    pub fn members(&self, c: usize) -> Vec<NodeIx> {
        (0..self.community.len()).filter(|&x| self.community[x] == c).collect()
    }

    pub fn community_count(&self) -> usize {
        self.community.iter().max().map_or(0, |m| m + 1)
    }
}

pub(crate) fn node_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Undirected pairs as a single-layer network with both directions, weight 1.
pub(crate) fn single_layer(n: usize, pairs: &HashSet<(NodeIx, NodeIx)>) -> Msn {
    let mut sorted: Vec<_> = pairs.iter().copied().collect();
    sorted.sort_unstable();
    let edges = sorted.iter().flat_map(|&(a, b)| [(a, b, 0, 1.0), (b, a, 0, 1.0)]).collect();
    Msn::assemble(node_names(n), vec!["1".to_string()], edges)
}

/// Wires internal stubs community by community and external stubs across
/// communities. Returns the pairs and the number of dropped stubs.
pub(crate) fn wire_plan(plan: &LayerPlan, rng: &mut SeededRng, budget: usize) -> (HashSet<(NodeIx, NodeIx)>, usize) {
    let mut pairs = HashSet::new();
    let mut dropped = 0;
    for c in 0..plan.community_count() {
        let stubs: Vec<NodeIx> = plan
            .members(c)
            .into_iter()
            .flat_map(|x| std::iter::repeat(x).take(plan.internal[x]))
            .collect();
        dropped += wire(stubs, |_, _| true, &mut pairs, rng, budget).1;
    }
    let stubs: Vec<NodeIx> = (0..plan.community.len())
        .flat_map(|x| std::iter::repeat(x).take(plan.external[x]))
        .collect();
    let community = &plan.community;
    dropped += wire(stubs, |a, b| community[a] != community[b], &mut pairs, rng, budget).1;
    (pairs, dropped)
}

/// Draws degrees and community sizes, splits each degree into internal and
/// external parts, and places nodes into communities large enough for their
/// internal degree.
pub fn plan_base_layer(spec: &BenchmarkSpec, rng: &mut SeededRng) -> Result<LayerPlan> {
    spec.validate()?;
    let n = spec.n;
    let degrees = degree_sequence(n, spec.avg_degree, spec.max_degree, spec.tau1, rng)?;
    let sizes = community_sizes(n, spec.cmin, spec.cmax, spec.tau2, rng)?;
    let internal: Vec<usize> = degrees
        .iter()
        .map(|&k| ((1.0 - spec.mu) * k as f64).round() as usize)
        .collect();

    let mut order: Vec<NodeIx> = (0..n).collect();
    rng.shuffle(&mut order);
    order.sort_by_key(|&x| std::cmp::Reverse(internal[x]));

    let mut free = sizes.clone();
    let mut community = vec![usize::MAX; n];
    let mut internal_final = internal.clone();
    for &x in &order {
        let fits: Vec<usize> = (0..sizes.len()).filter(|&c| free[c] > 0 && sizes[c] > internal[x]).collect();
        let c = if fits.is_empty() {
            let c = (0..sizes.len())
                .filter(|&c| free[c] > 0)
                .max_by_key(|&c| sizes[c])
                .ok_or_else(|| Error::InfeasibleSpec("no community slot left".into()))?;
            internal_final[x] = sizes[c] - 1;
            c
        } else {
            let total: usize = fits.iter().map(|&c| free[c]).sum();
            let mut r = rng.below(total);
            let mut pick = fits[0];
            for &c in &fits {
                if r < free[c] {
                    pick = c;
                    break;
                }
                r -= free[c];
            }
            pick
        };
        free[c] -= 1;
        community[x] = c;
    }
    let external = (0..n).map(|x| degrees[x] - internal[x]).collect();
    Ok(LayerPlan {
        community,
        internal: internal_final,
        external,
    })
}

/// LFR-style single-layer benchmark with planted communities.
pub fn generate_lfr_base(spec: &BenchmarkSpec) -> Result<(Msn, GroundTruth)> {
    let mut rng = SeededRng::new(spec.seed);
    let (net, plan) = lfr_with_plan(spec, &mut rng)?;
    Ok((net, GroundTruth { layers: vec![plan.community] }))
}

pub(crate) fn lfr_with_plan(spec: &BenchmarkSpec, rng: &mut SeededRng) -> Result<(Msn, LayerPlan)> {
    let plan = plan_base_layer(spec, rng)?;
    let (pairs, _dropped) = wire_plan(&plan, rng, 100 * spec.n);
    Ok((single_layer(spec.n, &pairs), plan))
}

const GN_NODES: usize = 128;
const GN_GROUP: usize = 32;
const GN_DEGREE: usize = 16;

/// The 128-node, four-community benchmark with every node of degree 16,
/// `round(out_ratio·16)` of them leaving the node's community.
pub fn generate_gn(out_ratio: f64, seed: u64) -> Result<(Msn, GroundTruth)> {
    if !(0.0..=1.0).contains(&out_ratio) {
        return Err(Error::ParameterOutOfRange {
            name: "out_ratio",
            value: out_ratio,
        });
    }
    let k_out = (out_ratio * GN_DEGREE as f64).round() as usize;
    let plan = LayerPlan {
        community: (0..GN_NODES).map(|x| x / GN_GROUP).collect(),
        internal: vec![GN_DEGREE - k_out; GN_NODES],
        external: vec![k_out; GN_NODES],
    };
    let mut rng = SeededRng::new(seed);
    const ATTEMPTS: usize = 100;
    for _ in 0..ATTEMPTS {
        let (pairs, dropped) = wire_plan(&plan, &mut rng, 100 * GN_NODES);
        if dropped == 0 {
            return Ok((single_layer(GN_NODES, &pairs), GroundTruth { layers: vec![plan.community] }));
        }
    }
    Err(Error::WiringFailure(ATTEMPTS))
}
