use std::collections::{BTreeSet, HashMap, HashSet};

use crate::benchmark::lfr::{lfr_with_plan, node_names, GroundTruth, LayerPlan};
use crate::benchmark::spec::BenchmarkSpec;
use crate::benchmark::wiring::key;
use crate::error::Result;
use crate::graph::{Msn, NodeIx};
use crate::rng::SeededRng;

/// Vertices still waiting for links on one layer, ordered by
/// (remaining degree, vertex id).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairList {
    entries: BTreeSet<(usize, NodeIx)>,
    remaining: HashMap<NodeIx, usize>,
}

impl PairList {
    pub fn new(entries: impl IntoIterator<Item = (usize, NodeIx)>) -> Self {
        let mut list = Self::default();
        for (k, x) in entries {
            if k > 0 {
                list.entries.insert((k, x));
                list.remaining.insert(x, k);
            }
        }
        list
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, x: NodeIx) -> bool {
        self.remaining.contains_key(&x)
    }

    pub fn entries(&self) -> Vec<(usize, NodeIx)> {
        self.entries.iter().copied().collect()
    }

    fn pop_last(&mut self) -> Option<(usize, NodeIx)> {
        let last = self.entries.pop_last()?;
        self.remaining.remove(&last.1);
        Some(last)
    }

    fn decrement(&mut self, x: NodeIx) {
        if let Some(k) = self.remaining.remove(&x) {
            self.entries.remove(&(k, x));
            if k > 1 {
                self.entries.insert((k - 1, x));
                self.remaining.insert(x, k - 1);
            }
        }
    }
}

/// Links of one layer under construction plus the number of layers each
/// pair already spans.
struct LayerState<'a> {
    adjacent: &'a mut HashSet<(NodeIx, NodeIx)>,
    spans: &'a mut HashMap<(NodeIx, NodeIx), usize>,
    cdf: &'a [f64],
}

impl LayerState<'_> {
    fn fits(&self, x: NodeIx, y: NodeIx, rng: &mut SeededRng) -> bool {
        let c = self.spans.get(&key(x, y)).copied().unwrap_or(0);
        rng.uniform_closed() >= self.cdf[c.min(self.cdf.len() - 1)]
    }

    fn link(&mut self, x: NodeIx, y: NodeIx) {
        self.adjacent.insert(key(x, y));
        *self.spans.entry(key(x, y)).or_default() += 1;
    }
}

/// F(c) = Σ_{j≤c} j^−θ / Σ_{j≤L} j^−θ for c = 0..=L.
pub fn layer_count_cdf(layers: usize, exponent: f64) -> Vec<f64> {
    let mut acc = vec![0.0];
    for j in 1..=layers {
        acc.push(acc[j - 1] + (j as f64).powf(-exponent));
    }
    let total = acc[layers];
    acc.iter().map(|v| if total > 0.0 { v / total } else { 1.0 }).collect()
}

/// Fully serves the last vertex of `list`: first from its base-layer
/// neighbours (when given), then from the list itself scanned backwards,
/// skipping at most `jumper` candidates that the layer-count distribution
/// rejects. Returns the number of stubs of that vertex that could not be placed.
fn serve_last<C>(
    list: &mut PairList,
    base_neighbours: Option<&[NodeIx]>,
    compatible: &C,
    state: &mut LayerState,
    rng: &mut SeededRng,
) -> usize
where
    C: Fn(NodeIx, NodeIx) -> bool,
{
    let Some((mut needed, x)) = list.pop_last() else {
        return 0;
    };
    if let Some(nbrs) = base_neighbours {
        let mut proposals: Vec<NodeIx> = nbrs
            .iter()
            .copied()
            .filter(|&y| y != x && list.contains(y) && compatible(x, y) && !state.adjacent.contains(&key(x, y)))
            .collect();
        rng.shuffle(&mut proposals);
        for y in proposals {
            if needed == 0 {
                break;
            }
            if state.fits(x, y, rng) {
                state.link(x, y);
                list.decrement(y);
                needed -= 1;
            }
        }
    }
    if needed > 0 {
        let candidates: Vec<NodeIx> = list.entries.iter().rev().map(|&(_, y)| y).collect();
        let mut jumper = candidates.len().saturating_sub(needed);
        let mut erase = Vec::new();
        for y in candidates {
            if needed == 0 {
                break;
            }
            if state.adjacent.contains(&key(x, y)) || !compatible(x, y) {
                continue;
            }
            if jumper > 0 && !state.fits(x, y, rng) {
                jumper -= 1;
                continue;
            }
            state.link(x, y);
            erase.push(y);
            needed -= 1;
        }
        for y in erase {
            list.decrement(y);
        }
    }
    needed
}

/// Serves a single list vertex-at-a-time with no base layer and no
/// distribution skew. Returns the links made and the dropped stub count.
pub fn distribute_pair_list(entries: &[(usize, NodeIx)]) -> (Vec<(NodeIx, NodeIx)>, usize) {
    let mut list = PairList::new(entries.iter().copied());
    let mut adjacent = HashSet::new();
    let mut spans = HashMap::new();
    let cdf = [0.0];
    let mut state = LayerState {
        adjacent: &mut adjacent,
        spans: &mut spans,
        cdf: &cdf,
    };
    let mut rng = SeededRng::new(0);
    let mut links = Vec::new();
    let mut dropped = 0;
    while let Some(&(_, x)) = list.entries.last() {
        let before: HashSet<_> = state.adjacent.clone();
        dropped += serve_last(&mut list, None, &|_, _| true, &mut state, &mut rng);
        let mut new: Vec<_> = state.adjacent.difference(&before).copied().collect();
        new.sort_unstable();
        links.extend(new.into_iter().map(|(a, b)| if a == x { (a, b) } else { (b, a) }));
    }
    (links, dropped)
}

/// Exchanges internal degrees between random pairs of the same community
/// when neither vertex would end up with more external than internal links.
/// Returns the number of accepted swaps.
pub fn swap_degrees(plan: &mut LayerPlan, prob: f64, rng: &mut SeededRng) -> usize {
    let groups: Vec<Vec<NodeIx>> = (0..plan.community_count()).map(|c| plan.members(c)).collect();
    let mut swaps = 0;
    for x in 0..plan.community.len() {
        if !rng.chance(prob) {
            continue;
        }
        let group = &groups[plan.community[x]];
        let y = group[rng.below(group.len())];
        if y == x {
            continue;
        }
        if plan.external[x] <= plan.internal[y] && plan.external[y] <= plan.internal[x] {
            plan.internal.swap(x, y);
            swaps += 1;
        }
    }
    swaps
}

/// Exchanges the community slots of random vertex pairs from different
/// communities; both degrees travel with the slot. Returns the swap count.
pub fn swap_memberships(plan: &mut LayerPlan, prob: f64, rng: &mut SeededRng) -> usize {
    let n = plan.community.len();
    if plan.community_count() < 2 {
        return 0;
    }
    let mut swaps = 0;
    for x in 0..n {
        if !rng.chance(prob) {
            continue;
        }
        let y = rng.below(n);
        if plan.community[x] == plan.community[y] {
            continue;
        }
        plan.community.swap(x, y);
        plan.internal.swap(x, y);
        plan.external.swap(x, y);
        swaps += 1;
    }
    swaps
}

/// Builds every non-base layer from its plan, copying the base layer as is.
/// `plans[0]` describes the base layer. Returns the network and the number
/// of stubs that could not be placed.
pub fn distribute_layers(
    base: &Msn,
    plans: &[LayerPlan],
    layer_exponent: f64,
    rng: &mut SeededRng,
) -> Result<(Msn, usize)> {
    let n = base.node_count();
    let layers = plans.len();
    let cdf = layer_count_cdf(layers, layer_exponent);
    let base_nbrs: Vec<Vec<NodeIx>> = (0..n).map(|x| base.out_edges(x, 0).iter().map(|e| e.0).collect()).collect();

    let mut adjacency: Vec<HashSet<(NodeIx, NodeIx)>> = vec![HashSet::new(); layers];
    let mut spans: HashMap<(NodeIx, NodeIx), usize> = HashMap::new();
    for x in 0..n {
        for &y in &base_nbrs[x] {
            if x < y {
                adjacency[0].insert((x, y));
                spans.insert((x, y), 1);
            }
        }
    }

    let base_plan = &plans[0];
    let communities = plans.iter().map(LayerPlan::community_count).max().unwrap_or(0);
    let mut dropped = 0;
    // one group per community, then the external links
    for group in 0..=communities {
        let external = group == communities;
        let mut lists: Vec<PairList> = (0..layers)
            .map(|l| {
                if l == 0 {
                    return PairList::default();
                }
                let p = &plans[l];
                PairList::new((0..n).filter_map(|x| {
                    if external {
                        Some((p.external[x], x))
                    } else if p.community[x] == group {
                        Some((p.internal[x], x))
                    } else {
                        None
                    }
                }))
            })
            .collect();
        let mut active: Vec<usize> = (1..layers).filter(|&l| !lists[l].is_empty()).collect();
        while !active.is_empty() {
            let pick = rng.below(active.len());
            let l = active[pick];
            let plan = &plans[l];
            let &(_, x) = lists[l].entries.last().expect("active list is non-empty");
            let same_home = base_plan.community[x] == plan.community[x];
            let base_choice = if external || same_home { Some(base_nbrs[x].as_slice()) } else { None };
            let compatible = |a: NodeIx, b: NodeIx| {
                if external {
                    plan.community[a] != plan.community[b]
                } else {
                    plan.community[a] == plan.community[b]
                }
            };
            let mut state = LayerState {
                adjacent: &mut adjacency[l],
                spans: &mut spans,
                cdf: &cdf,
            };
            dropped += serve_last(&mut lists[l], base_choice, &compatible, &mut state, rng);
            if lists[l].is_empty() {
                active.swap_remove(pick);
            }
        }
    }

    let mut edges = Vec::new();
    for (l, pairs) in adjacency.iter().enumerate() {
        let mut sorted: Vec<_> = pairs.iter().copied().collect();
        sorted.sort_unstable();
        edges.extend(sorted.into_iter().flat_map(|(a, b)| [(a, b, l, 1.0), (b, a, l, 1.0)]));
    }
    let names = (1..=layers).map(|l| l.to_string()).collect();
    Ok((Msn::assemble(node_names(n), names, edges), dropped))
}

/// Multi-layer benchmark: an LFR-style base layer, per-layer degree and
/// membership swaps, then layer-by-layer link distribution.
pub fn generate_mlfr(spec: &BenchmarkSpec) -> Result<(Msn, GroundTruth)> {
    let mut rng = SeededRng::new(spec.seed);
    let (base, base_plan) = lfr_with_plan(spec, &mut rng)?;
    let mut plans = vec![base_plan];
    for _ in 1..spec.layers {
        let mut plan = plans[0].clone();
        swap_degrees(&mut plan, spec.degree_swap_prob, &mut rng);
        swap_memberships(&mut plan, spec.membership_swap_prob, &mut rng);
        plans.push(plan);
    }
    let (net, _dropped) = distribute_layers(&base, &plans, spec.layer_exponent, &mut rng)?;
    let truth = GroundTruth {
        layers: plans.into_iter().map(|p| p.community).collect(),
    };
    Ok((net, truth))
}
