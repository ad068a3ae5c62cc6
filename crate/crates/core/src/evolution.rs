//! Group evolution discovery: inclusion between groups of consecutive
//! frames, event classification and per-group timelines.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{natural_cmp, Dsn, Group, Msn, NodeIx, Partition};
use crate::measures::{social_position, SocialPositionParams};

/// How member importance inside a group is measured.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum ImportanceSource {
    #[default]
    SocialPosition,
    SocialPositionWith(SocialPositionParams),
    /// Unnormalized within-group degree summed over layers.
    Degree,
    /// Quantity only.
    None,
}

/// Importance of every member of `group`, measured on the part of `net`
/// induced by the group. `None` means the quality factor is skipped.
pub fn member_importance(group: &Group, net: &Msn, source: ImportanceSource) -> Result<Option<BTreeMap<NodeIx, f64>>> {
    let params = match source {
        ImportanceSource::None => return Ok(None),
        ImportanceSource::SocialPosition => Some(SocialPositionParams::default()),
        ImportanceSource::SocialPositionWith(p) => Some(p),
        ImportanceSource::Degree => None,
    };
    let sub = net.induced_subgraph(&group.members)?;
    let values = match params {
        Some(p) => social_position(&sub, p)?,
        None => (0..sub.node_count())
            .map(|x| {
                (0..sub.layer_count())
                    .map(|l| {
                        let mut seen: BTreeSet<NodeIx> = sub.out_edges(x, l).iter().map(|e| e.0).collect();
                        seen.extend(sub.in_edges(x, l).iter().map(|e| e.0));
                        seen.len() as f64
                    })
                    .sum()
            })
            .collect(),
    };
    Ok(Some(group.members.iter().copied().zip(values).collect()))
}

/// I(G1,G2) = |G1∩G2|/|G1| · Σ_{G1∩G2} w / Σ_{G1} w. Without weights, or when
/// every weight is zero, only the first factor is used.
pub fn inclusion_weighted(g1: &Group, g2: &Group, weights: Option<&BTreeMap<NodeIx, f64>>) -> Result<f64> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let common = g1.members.intersection(&g2.members).count();
    let quantity = common as f64 / g1.len() as f64;
    let Some(w) = weights else {
        return Ok(quantity);
    };
    let weight = |x: &NodeIx| w.get(x).copied().unwrap_or(0.0);
    let total: f64 = g1.members.iter().map(weight).sum();
    if total <= 0.0 {
        return Ok(quantity);
    }
    let inside: f64 = g1.members.iter().filter(|x| g2.members.contains(x)).map(weight).sum::<f64>() + 0.0;
    Ok(quantity * (inside / total))
}

/// Inclusion of `g1` in `g2`, with importance measured in `net_i`, the
/// network of `g1`'s frame.
pub fn inclusion(g1: &Group, g2: &Group, net_i: &Msn, importance: ImportanceSource) -> Result<f64> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let weights = member_importance(g1, net_i, importance)?;
    inclusion_weighted(g1, g2, weights.as_ref())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Continuing,
    Shrinking,
    Growing,
    Splitting,
    Merging,
    Dissolving,
    Forming,
}

impl EventKind {
    pub const ALL: [EventKind; 7] = [
        EventKind::Continuing,
        EventKind::Shrinking,
        EventKind::Growing,
        EventKind::Splitting,
        EventKind::Merging,
        EventKind::Dissolving,
        EventKind::Forming,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EventKind::Continuing => "continuing",
            EventKind::Shrinking => "shrinking",
            EventKind::Growing => "growing",
            EventKind::Splitting => "splitting",
            EventKind::Merging => "merging",
            EventKind::Dissolving => "dissolving",
            EventKind::Forming => "forming",
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EventKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EventKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("unknown event {s:?}"),
            })
    }
}

/// Decides the event between G1 (earlier frame) and G2 (next frame).
///
/// `matches_prev` counts next-frame groups matching G1 and `matches_next`
/// counts earlier-frame groups matching G2, where a match means
/// I(G1,G2) ≥ α or I(G2,G1) ≥ β. Conditions are tried in the order
/// continuing, shrinking, growing, splitting, merging.
#[allow(clippy::too_many_arguments)]
pub fn classify_event(
    i12: f64,
    i21: f64,
    size1: usize,
    size2: usize,
    matches_prev: usize,
    matches_next: usize,
    alpha: f64,
    beta: f64,
) -> Option<EventKind> {
    let fwd = i12 >= alpha;
    let bwd = i21 >= beta;
    if fwd && bwd && size1 == size2 {
        return Some(EventKind::Continuing);
    }
    if (fwd && bwd && size1 > size2) || (!fwd && bwd && size1 >= size2 && matches_prev == 1) {
        return Some(EventKind::Shrinking);
    }
    if (fwd && bwd && size1 < size2) || (fwd && !bwd && size1 <= size2 && matches_next == 1) {
        return Some(EventKind::Growing);
    }
    if !fwd && bwd && size1 >= size2 && matches_prev > 1 {
        return Some(EventKind::Splitting);
    }
    if fwd && !bwd && size1 <= size2 && matches_next > 1 {
        return Some(EventKind::Merging);
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvolutionEvent {
    pub frame_i: usize,
    /// Absent for forming.
    pub group_i: Option<String>,
    pub frame_j: usize,
    /// Absent for dissolving.
    pub group_j: Option<String>,
    pub kind: EventKind,
    /// I(G1,G2); for forming and dissolving the largest value over all counterparts.
    pub inclusion_fwd: f64,
    /// I(G2,G1); same convention.
    pub inclusion_bwd: f64,
    pub size_i: usize,
    pub size_j: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GedParams {
    pub alpha: f64,
    pub beta: f64,
    pub importance: ImportanceSource,
    /// Below this inclusion, in both directions and against every
    /// counterpart, a group forms or dissolves.
    pub threshold: f64,
}

impl GedParams {
    pub fn new(alpha: f64, beta: f64, importance: ImportanceSource) -> Self {
        Self {
            alpha,
            beta,
            importance,
            threshold: 0.1,
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, value) in [("alpha", self.alpha), ("beta", self.beta), ("threshold", self.threshold)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::ParameterOutOfRange { name, value });
            }
        }
        Ok(())
    }
}

/// Runs event discovery over every pair of consecutive frames.
pub fn ged(dsn: &Dsn, partitions: &[Partition], params: GedParams) -> Result<Vec<EvolutionEvent>> {
    params.validate()?;
    if dsn.len() != partitions.len() {
        return Err(Error::FrameMismatch {
            frames: dsn.len(),
            partitions: partitions.len(),
        });
    }
    let weights = partitions
        .iter()
        .zip(&dsn.frames)
        .map(|(p, f)| {
            p.groups
                .iter()
                .map(|g| member_importance(g, &f.network, params.importance))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut events = Vec::new();
    for i in 0..partitions.len().saturating_sub(1) {
        let (earlier, later) = (&partitions[i].groups, &partitions[i + 1].groups);
        let mut fwd = vec![vec![0.0; later.len()]; earlier.len()];
        let mut bwd = vec![vec![0.0; later.len()]; earlier.len()];
        for (a, g1) in earlier.iter().enumerate() {
            for (b, g2) in later.iter().enumerate() {
                fwd[a][b] = inclusion_weighted(g1, g2, weights[i][a].as_ref())?;
                bwd[a][b] = inclusion_weighted(g2, g1, weights[i + 1][b].as_ref())?;
            }
        }
        let matched = |a: usize, b: usize| fwd[a][b] >= params.alpha || bwd[a][b] >= params.beta;
        let fan_out: Vec<usize> = (0..earlier.len()).map(|a| (0..later.len()).filter(|&b| matched(a, b)).count()).collect();
        let fan_in: Vec<usize> = (0..later.len()).map(|b| (0..earlier.len()).filter(|&a| matched(a, b)).count()).collect();

        for (a, g1) in earlier.iter().enumerate() {
            for (b, g2) in later.iter().enumerate() {
                let kind = classify_event(
                    fwd[a][b],
                    bwd[a][b],
                    g1.len(),
                    g2.len(),
                    fan_out[a],
                    fan_in[b],
                    params.alpha,
                    params.beta,
                );
                if let Some(kind) = kind {
                    events.push(EvolutionEvent {
                        frame_i: i,
                        group_i: Some(g1.id.clone()),
                        frame_j: i + 1,
                        group_j: Some(g2.id.clone()),
                        kind,
                        inclusion_fwd: fwd[a][b],
                        inclusion_bwd: bwd[a][b],
                        size_i: g1.len(),
                        size_j: g2.len(),
                    });
                }
            }
        }
        let below = |a: usize, b: usize| fwd[a][b] < params.threshold && bwd[a][b] < params.threshold;
        let max_of = |v: &mut dyn Iterator<Item = f64>| v.fold(0.0, f64::max);
        for (a, g1) in earlier.iter().enumerate() {
            if (0..later.len()).all(|b| below(a, b)) {
                events.push(EvolutionEvent {
                    frame_i: i,
                    group_i: Some(g1.id.clone()),
                    frame_j: i + 1,
                    group_j: None,
                    kind: EventKind::Dissolving,
                    inclusion_fwd: max_of(&mut fwd[a].iter().copied()),
                    inclusion_bwd: max_of(&mut bwd[a].iter().copied()),
                    size_i: g1.len(),
                    size_j: 0,
                });
            }
        }
        for (b, g2) in later.iter().enumerate() {
            if (0..earlier.len()).all(|a| below(a, b)) {
                events.push(EvolutionEvent {
                    frame_i: i,
                    group_i: None,
                    frame_j: i + 1,
                    group_j: Some(g2.id.clone()),
                    kind: EventKind::Forming,
                    inclusion_fwd: max_of(&mut fwd.iter().map(|r| r[b])),
                    inclusion_bwd: max_of(&mut bwd.iter().map(|r| r[b])),
                    size_i: 0,
                    size_j: g2.len(),
                });
            }
        }
    }
    Ok(events)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TimelineStep {
    pub frame: usize,
    pub group: String,
    pub size: usize,
}

/// One path through the event graph: the groups visited frame by frame and
/// the events between them, ending with dissolving when it happened.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timeline {
    pub formed: bool,
    pub steps: Vec<TimelineStep>,
    pub events: Vec<EvolutionEvent>,
}

fn node_cmp(a: &(usize, String), b: &(usize, String)) -> Ordering {
    a.0.cmp(&b.0).then_with(|| natural_cmp(&a.1, &b.1))
}

/// Follows group identity through events. Every split forks the timeline.
/// Where several groups flow into one, the timeline of the largest
/// predecessor (lowest id on ties) carries on; the others stop at the merge.
pub fn evolution_chains(events: &[EvolutionEvent]) -> Vec<Timeline> {
    type Node = (usize, String);
    let mut outgoing: BTreeMap<Node, Vec<&EvolutionEvent>> = BTreeMap::new();
    let mut incoming: BTreeMap<Node, Vec<&EvolutionEvent>> = BTreeMap::new();
    let mut formed: BTreeSet<Node> = BTreeSet::new();
    let mut dissolved: BTreeMap<Node, &EvolutionEvent> = BTreeMap::new();
    let mut sizes: BTreeMap<Node, usize> = BTreeMap::new();
    for e in events {
        if let Some(g) = &e.group_i {
            sizes.insert((e.frame_i, g.clone()), e.size_i);
        }
        if let Some(g) = &e.group_j {
            sizes.insert((e.frame_j, g.clone()), e.size_j);
        }
        match (&e.group_i, &e.group_j) {
            (Some(a), Some(b)) => {
                outgoing.entry((e.frame_i, a.clone())).or_default().push(e);
                incoming.entry((e.frame_j, b.clone())).or_default().push(e);
            }
            (None, Some(b)) => {
                formed.insert((e.frame_j, b.clone()));
            }
            (Some(a), None) => {
                dissolved.insert((e.frame_i, a.clone()), e);
            }
            (None, None) => {}
        }
    }
    // the predecessor whose timeline survives each confluence
    let mut heir: BTreeMap<Node, Node> = BTreeMap::new();
    for (node, parents) in &incoming {
        let best = parents
            .iter()
            .map(|e| (e.size_i, (e.frame_i, e.group_i.clone().unwrap_or_default())))
            .max_by(|x, y| x.0.cmp(&y.0).then_with(|| node_cmp(&y.1, &x.1)))
            .map(|(_, n)| n);
        if let Some(b) = best {
            heir.insert(node.clone(), b);
        }
    }

    let mut starts: Vec<Node> = sizes.keys().filter(|n| !incoming.contains_key(*n)).cloned().collect();
    starts.sort_by(node_cmp);
    let mut out = Vec::new();
    for start in starts {
        let first = TimelineStep {
            frame: start.0,
            group: start.1.clone(),
            size: sizes[&start],
        };
        let mut stack = vec![Timeline {
            formed: formed.contains(&start),
            steps: vec![first],
            events: Vec::new(),
        }];
        while let Some(mut t) = stack.pop() {
            let last = t.steps.last().expect("timeline has a step");
            let here: Node = (last.frame, last.group.clone());
            let mut next: Vec<&EvolutionEvent> = outgoing.get(&here).cloned().unwrap_or_default();
            if next.is_empty() {
                if let Some(d) = dissolved.get(&here) {
                    t.events.push((*d).clone());
                }
                out.push(t);
                continue;
            }
            next.sort_by(|a, b| natural_cmp(a.group_j.as_deref().unwrap_or(""), b.group_j.as_deref().unwrap_or("")));
            // push in reverse so the first successor is explored first
            for e in next.into_iter().rev() {
                let target: Node = (e.frame_j, e.group_j.clone().unwrap_or_default());
                let mut branch = t.clone();
                branch.events.push(e.clone());
                branch.steps.push(TimelineStep {
                    frame: target.0,
                    group: target.1.clone(),
                    size: sizes[&target],
                });
                if heir.get(&target) == Some(&here) {
                    stack.push(branch);
                } else {
                    out.push(branch);
                }
            }
        }
    }
    out
}
