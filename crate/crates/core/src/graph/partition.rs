use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::msn::NodeIx;

/// A non-empty set of nodes with an opaque id, optionally tied to a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub id: String,
    pub members: BTreeSet<NodeIx>,
    pub frame: Option<usize>,
}

impl Group {
    pub fn new(id: impl Into<String>, members: impl IntoIterator<Item = NodeIx>) -> Result<Group> {
        let members: BTreeSet<NodeIx> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyGroup);
        }
        Ok(Group {
            id: id.into(),
            members,
            frame: None,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Groups plus the nodes left outside every group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Partition {
    pub groups: Vec<Group>,
    pub unassigned: BTreeSet<NodeIx>,
}

impl Partition {
    /// Disjoint partition from one optional label per node index.
    pub fn from_labels<L: ToString + Ord + Clone>(labels: &[Option<L>]) -> Partition {
        let mut by_label: BTreeMap<L, BTreeSet<NodeIx>> = BTreeMap::new();
        let mut order = Vec::new();
        let mut unassigned = BTreeSet::new();
        for (x, label) in labels.iter().enumerate() {
            match label {
                Some(l) => {
                    if !by_label.contains_key(l) {
                        order.push(l.clone());
                    }
                    by_label.entry(l.clone()).or_default().insert(x);
                }
                None => {
                    unassigned.insert(x);
                }
            }
        }
        let groups = order
            .into_iter()
            .map(|l| Group {
                id: l.to_string(),
                members: by_label.remove(&l).unwrap_or_default(),
                frame: None,
            })
            .collect();
        Partition { groups, unassigned }
    }

    /// Every node mentioned by a group or the unassigned set.
    pub fn universe(&self) -> BTreeSet<NodeIx> {
        let mut u = self.unassigned.clone();
        for g in &self.groups {
            u.extend(g.members.iter().copied());
        }
        u
    }

    pub fn is_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        for g in &self.groups {
            for &m in &g.members {
                if !seen.insert(m) || self.unassigned.contains(&m) {
                    return false;
                }
            }
        }
        true
    }

    /// Group position of each node in `0..n` (first group wins on overlap).
    pub fn labels(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, g) in self.groups.iter().enumerate() {
            for &m in &g.members {
                if m < n && out[m].is_none() {
                    out[m] = Some(i);
                }
            }
        }
        out
    }

    pub fn assigned_count(&self) -> usize {
        self.groups.iter().map(Group::len).sum()
    }
}
