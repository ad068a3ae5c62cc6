use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::community::conditions::{satisfies, CommunityCondition};
use crate::error::Result;
use crate::graph::{Group, Msn, NodeIx, Partition};
use crate::measures::{all_any_neighbourhoods, check_alpha, CleccDenominator};

const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodOptions {
    pub alpha: usize,
    pub condition: CommunityCondition,
    pub denominator: CleccDenominator,
    /// Keep every pair's value at the start of each iteration in the trace.
    pub record_values: bool,
}

impl MethodOptions {
    pub fn new(alpha: usize, condition: CommunityCondition) -> Self {
        Self {
            alpha,
            condition,
            denominator: CleccDenominator::EdgeInclusive,
            record_values: false,
        }
    }
}

/// Pairs removed together in one iteration and their shared minimum value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Removal {
    pub pairs: Vec<(NodeIx, NodeIx)>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrozenGroup {
    /// Number of iterations completed when the group froze (0 = before any removal).
    pub iteration: usize,
    pub id: String,
    pub members: Vec<NodeIx>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ExtractionTrace {
    pub iterations: Vec<Removal>,
    pub frozen: Vec<FrozenGroup>,
    /// (x, y, value) for every live pair at the start of each iteration, x > y.
    /// Filled only when `record_values` is set.
    pub snapshots: Vec<Vec<(NodeIx, NodeIx, f64)>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Key(f64);

impl Eq for Key {}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Work<'a> {
    msn: &'a Msn,
    options: MethodOptions,
    adj: Vec<Vec<NodeIx>>,
    component: Vec<usize>,
    members: Vec<Vec<NodeIx>>,
    values: HashMap<(NodeIx, NodeIx), f64>,
    queue: BTreeSet<(Key, NodeIx, NodeIx)>,
    unassigned: BTreeSet<NodeIx>,
    frozen: Vec<(usize, Vec<NodeIx>)>,
}

fn ordered(a: NodeIx, b: NodeIx) -> (NodeIx, NodeIx) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl<'a> Work<'a> {
    fn pair_value(&self, a: NodeIx, b: NodeIx) -> f64 {
        let (na, nb) = (&self.adj[a], &self.adj[b]);
        let (mut i, mut j, mut common) = (0, 0, 0);
        while i < na.len() && j < nb.len() {
            match na[i].cmp(&nb[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        let union = na.len() + nb.len() - common;
        let endpoints = usize::from(na.binary_search(&b).is_ok()) + usize::from(nb.binary_search(&a).is_ok());
        self.options.denominator.value(common, union - endpoints)
    }

    fn set_value(&mut self, a: NodeIx, b: NodeIx) {
        let key = ordered(a, b);
        let v = self.pair_value(key.0, key.1);
        if let Some(old) = self.values.insert(key, v) {
            self.queue.remove(&(Key(old), key.0, key.1));
        }
        self.queue.insert((Key(v), key.0, key.1));
    }

    fn drop_value(&mut self, a: NodeIx, b: NodeIx) {
        let key = ordered(a, b);
        if let Some(old) = self.values.remove(&key) {
            self.queue.remove(&(Key(old), key.0, key.1));
        }
    }

    fn components_of(&self, nodes: &[NodeIx]) -> Vec<Vec<NodeIx>> {
        let inside: BTreeSet<NodeIx> = nodes.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in nodes {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if inside.contains(&w) && seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn activate(&mut self, comp: Vec<NodeIx>, compute: bool) {
        let id = self.members.len();
        for &v in &comp {
            self.component[v] = id;
        }
        if compute {
            for &a in &comp {
                let nbrs = self.adj[a].clone();
                for b in nbrs {
                    if a < b {
                        self.set_value(a, b);
                    }
                }
            }
        }
        self.members.push(comp);
    }

    fn freeze(&mut self, comp: Vec<NodeIx>, iteration: usize) {
        for &a in &comp {
            let nbrs = self.adj[a].clone();
            for b in nbrs {
                self.drop_value(a, b);
            }
        }
        self.frozen.push((iteration, comp));
    }

    /// Sorts pieces of a broken component: singletons become unassigned; when
    /// two or more non-trivial pieces appear each is validated, otherwise the
    /// remaining piece keeps being processed.
    fn settle(&mut self, pieces: Vec<Vec<NodeIx>>, iteration: usize, fresh: bool) -> Result<()> {
        let mut nontrivial = Vec::new();
        for p in pieces {
            if p.len() == 1 {
                self.unassigned.insert(p[0]);
            } else {
                nontrivial.push(p);
            }
        }
        let split = nontrivial.len() >= 2;
        for p in nontrivial {
            let set: BTreeSet<NodeIx> = p.iter().copied().collect();
            if split && satisfies(self.msn, &set, self.options.condition)? {
                self.freeze(p, iteration);
            } else {
                self.activate(p, fresh);
            }
        }
        Ok(())
    }
}

/// Divisive extraction: repeatedly removes every pair at the minimum
/// cross-layered edge clustering coefficient and validates components as
/// they separate, on the α-filtered working graph.
pub fn clecc_method(msn: &Msn, options: MethodOptions) -> Result<(Partition, ExtractionTrace)> {
    check_alpha(msn, options.alpha)?;
    let n = msn.node_count();
    let mut work = Work {
        msn,
        options,
        adj: all_any_neighbourhoods(msn, options.alpha),
        component: vec![usize::MAX; n],
        members: Vec::new(),
        values: HashMap::new(),
        queue: BTreeSet::new(),
        unassigned: BTreeSet::new(),
        frozen: Vec::new(),
    };
    let all: Vec<NodeIx> = (0..n).collect();
    let initial = work.components_of(&all);
    work.settle(initial, 0, true)?;

    let mut trace = ExtractionTrace::default();
    while let Some(&(Key(min), _, _)) = work.queue.first() {
        if options.record_values {
            let mut snap: Vec<(NodeIx, NodeIx, f64)> = work.values.iter().map(|(&(a, b), &v)| (b, a, v)).collect();
            snap.sort_by(|p, q| (p.0, p.1).cmp(&(q.0, q.1)));
            trace.snapshots.push(snap);
        }
        let mut batch = Vec::new();
        while let Some(&(Key(v), a, b)) = work.queue.first() {
            if v > min + TIE_TOLERANCE {
                break;
            }
            work.queue.pop_first();
            work.values.remove(&(a, b));
            batch.push((a, b));
        }
        let mut touched = BTreeSet::new();
        for &(a, b) in &batch {
            work.adj[a].retain(|&v| v != b);
            work.adj[b].retain(|&v| v != a);
            touched.insert(a);
            touched.insert(b);
        }
        for &a in &touched {
            let nbrs = work.adj[a].clone();
            for b in nbrs {
                work.set_value(a, b);
            }
        }
        let iteration = trace.iterations.len() + 1;
        let broken: BTreeSet<usize> = touched.iter().map(|&v| work.component[v]).collect();
        for c in broken {
            let nodes = std::mem::take(&mut work.members[c]);
            let pieces = work.components_of(&nodes);
            work.settle(pieces, iteration, false)?;
        }
        trace.iterations.push(Removal {
            pairs: batch.into_iter().map(|(a, b)| (b, a)).collect(),
            value: min,
        });
    }

    let mut frozen = work.frozen;
    frozen.sort_by_key(|(_, m)| m[0]);
    let mut partition = Partition {
        groups: Vec::new(),
        unassigned: work.unassigned,
    };
    for (i, (iteration, members)) in frozen.into_iter().enumerate() {
        trace.frozen.push(FrozenGroup {
            iteration,
            id: i.to_string(),
            members: members.clone(),
        });
        partition.groups.push(Group::new(i.to_string(), members)?);
    }
    trace.frozen.sort_by_key(|g| g.iteration);
    Ok((partition, trace))
}

/// Places each unassigned node into the group holding the most of its
/// distinct neighbours in the original network. Ties and nodes without
/// grouped neighbours stay unassigned; assigned nodes never move.
pub fn clecc_plus(msn: &Msn, partition: &Partition) -> Partition {
    let mut owner: HashMap<NodeIx, usize> = HashMap::new();
    for (i, g) in partition.groups.iter().enumerate() {
        for &m in &g.members {
            owner.insert(m, i);
        }
    }
    let mut result = partition.clone();
    for &u in &partition.unassigned {
        if u >= msn.node_count() {
            continue;
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for y in msn.neighbours(u) {
            if let Some(&g) = owner.get(&y) {
                *counts.entry(g).or_default() += 1;
            }
        }
        let best = counts.values().copied().max().unwrap_or(0);
        let leaders: Vec<usize> = counts.iter().filter(|(_, &c)| c == best).map(|(&g, _)| g).collect();
        if best > 0 && leaders.len() == 1 {
            result.groups[leaders[0]].members.insert(u);
            result.unassigned.remove(&u);
        }
    }
    result
}
