//! Partition comparison: confusion matrices and normalized mutual information.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{NodeIx, Partition};

/// What to do with nodes outside every group before scoring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Unassigned {
    /// Each unassigned node is its own cluster.
    #[default]
    Singletons,
    /// Nodes unassigned in either partition are left out.
    Drop,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    /// counts[i][j] = nodes in model cluster i and extracted cluster j.
    pub counts: Vec<Vec<usize>>,
    pub row_sums: Vec<usize>,
    pub col_sums: Vec<usize>,
    pub total: usize,
}

fn clusters(p: &Partition, keep: &BTreeSet<NodeIx>, policy: Unassigned) -> Result<BTreeMap<NodeIx, usize>> {
    let mut label = BTreeMap::new();
    let mut next = 0;
    for g in &p.groups {
        let mut used = false;
        for &m in &g.members {
            if !keep.contains(&m) {
                continue;
            }
            if label.insert(m, next).is_some() {
                return Err(Error::OverlappingGroups(format!("#{m}")));
            }
            used = true;
        }
        if used {
            next += 1;
        }
    }
    if policy == Unassigned::Singletons {
        for &m in &p.unassigned {
            if label.contains_key(&m) {
                return Err(Error::OverlappingGroups(format!("#{m}")));
            }
            label.insert(m, next);
            next += 1;
        }
    }
    Ok(label)
}

/// Cross-tabulates model clusters (rows) against extracted clusters (columns).
pub fn confusion_matrix(model: &Partition, extracted: &Partition, policy: Unassigned) -> Result<ConfusionMatrix> {
    let universe = model.universe();
    if universe != extracted.universe() {
        return Err(Error::UniverseMismatch);
    }
    let keep: BTreeSet<NodeIx> = match policy {
        Unassigned::Singletons => universe,
        Unassigned::Drop => universe
            .into_iter()
            .filter(|m| !model.unassigned.contains(m) && !extracted.unassigned.contains(m))
            .collect(),
    };
    let rows = clusters(model, &keep, policy)?;
    let cols = clusters(extracted, &keep, policy)?;
    let r = rows.values().map(|&v| v + 1).max().unwrap_or(0);
    let c = cols.values().map(|&v| v + 1).max().unwrap_or(0);
    let mut counts = vec![vec![0; c]; r];
    for (node, &i) in &rows {
        counts[i][cols[node]] += 1;
    }
    let row_sums = counts.iter().map(|row| row.iter().sum()).collect();
    let col_sums = (0..c).map(|j| counts.iter().map(|row| row[j]).sum()).collect();
    Ok(ConfusionMatrix {
        counts,
        row_sums,
        col_sums,
        total: keep.len(),
    })
}

impl ConfusionMatrix {
    /// −2 Σ n_ij ln(n_ij n / n_i n_j) / (Σ n_i ln(n_i/n) + Σ n_j ln(n_j/n)),
    /// 1 when both sides are a single cluster.
    pub fn nmi(&self) -> f64 {
        let n = self.total as f64;
        if self.total == 0 {
            return 1.0;
        }
        let mut num = 0.0;
        for (i, row) in self.counts.iter().enumerate() {
            for (j, &nij) in row.iter().enumerate() {
                if nij > 0 {
                    let nij = nij as f64;
                    num += nij * (nij * n / (self.row_sums[i] as f64 * self.col_sums[j] as f64)).ln();
                }
            }
        }
        let entropy = |sums: &[usize]| -> f64 {
            sums.iter()
                .filter(|&&s| s > 0)
                .map(|&s| s as f64 * (s as f64 / n).ln())
                .sum()
        };
        let den = entropy(&self.row_sums) + entropy(&self.col_sums);
        if den == 0.0 {
            return 1.0;
        }
        (-2.0 * num / den).clamp(0.0, 1.0)
    }
}

/// Normalized mutual information between a model and an extracted partition.
pub fn nmi(model: &Partition, extracted: &Partition, policy: Unassigned) -> Result<f64> {
    Ok(confusion_matrix(model, extracted, policy)?.nmi())
}
