//! Fixed-length evolution sequences for classifiers, and precision / recall /
//! F-measure scoring of their predictions.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::evolution::{EventKind, Timeline};

pub const DEFAULT_WINDOW: usize = 4;

/// `sizes.len()` consecutive group sizes, the events between them, and the
/// event that followed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceRow {
    pub sizes: Vec<usize>,
    pub events: Vec<EventKind>,
    pub label: EventKind,
}

/// Slides a window of `window` steps along every timeline. A row needs
/// `window − 1` events inside the window and one more as its label.
pub fn extract_sequences(chains: &[Timeline], window: usize) -> Vec<SequenceRow> {
    let mut rows = Vec::new();
    if window == 0 {
        return rows;
    }
    for chain in chains {
        let events: Vec<EventKind> = chain
            .events
            .iter()
            .map(|e| e.kind)
            .filter(|&k| k != EventKind::Forming)
            .collect();
        if events.len() < window {
            continue;
        }
        for start in 0..=events.len() - window {
            rows.push(SequenceRow {
                sizes: chain.steps[start..start + window].iter().map(|s| s.size).collect(),
                events: events[start..start + window - 1].to_vec(),
                label: events[start + window - 1],
            });
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetFormat {
    Csv,
    Arff,
}

fn header(window: usize) -> Vec<String> {
    let mut cols = Vec::new();
    for t in 1..=window {
        cols.push(format!("size_t{t}"));
        if t < window {
            cols.push(format!("event_t{t}_t{}", t + 1));
        }
    }
    cols.push("label".into());
    cols
}

fn row_fields(row: &SequenceRow) -> Vec<String> {
    let mut out = Vec::new();
    for (i, s) in row.sizes.iter().enumerate() {
        out.push(s.to_string());
        if let Some(e) = row.events.get(i) {
            out.push(e.to_string());
        }
    }
    out.push(row.label.to_string());
    out
}

/// Serializes rows as CSV with a header, or as an ARFF-style text with
/// nominal attribute declarations.
pub fn export_dataset(rows: &[SequenceRow], format: DatasetFormat) -> Result<String> {
    let first = rows.first().ok_or(Error::EmptyDataset)?;
    let cols = header(first.sizes.len());
    let mut out = String::new();
    match format {
        DatasetFormat::Csv => {
            out.push_str(&cols.join(","));
            out.push('\n');
        }
        DatasetFormat::Arff => {
            let nominal: Vec<&str> = EventKind::ALL
                .iter()
                .filter(|&&k| k != EventKind::Forming)
                .map(|k| k.name())
                .collect();
            let nominal = format!("{{{}}}", nominal.join(","));
            out.push_str("@relation group_evolution\n\n");
            for c in &cols {
                let kind = if c.starts_with("size_") { "numeric" } else { nominal.as_str() };
                out.push_str(&format!("@attribute {c} {kind}\n"));
            }
            out.push_str("\n@data\n");
        }
    }
    for row in rows {
        out.push_str(&row_fields(row).join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Reads rows back from the CSV written by [`export_dataset`].
pub fn read_csv_dataset(text: &str) -> Result<Vec<SequenceRow>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines.next().ok_or(Error::EmptyDataset)?;
    let columns = head.split(',').count();
    if columns < 2 || columns % 2 != 0 {
        return Err(Error::Parse {
            line: 1,
            message: format!("unexpected header {head:?}"),
        });
    }
    let window = columns / 2;
    let mut rows = Vec::new();
    for (i, line) in lines {
        let bad = |m: String| Error::Parse { line: i + 1, message: m };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != columns {
            return Err(bad(format!("expected {columns} fields, found {}", fields.len())));
        }
        let mut sizes = Vec::new();
        let mut events = Vec::new();
        for (k, f) in fields[..columns - 1].iter().enumerate() {
            if k % 2 == 0 {
                sizes.push(f.parse().map_err(|_| bad(format!("bad size {f:?}")))?);
            } else {
                events.push(f.parse().map_err(|_| bad(format!("bad event {f:?}")))?);
            }
        }
        let label = fields[columns - 1].parse().map_err(|_| bad("bad label".into()))?;
        debug_assert_eq!(sizes.len(), window);
        rows.push(SequenceRow { sizes, events, label });
    }
    if rows.is_empty() {
        return Err(Error::EmptyDataset);
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassScore {
    pub class: String,
    pub tp: usize,
    pub fp: usize,
    pub fn_: usize,
    pub precision: f64,
    pub recall: f64,
    pub f: f64,
    /// Occurrences among the labels.
    pub support: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrfReport {
    pub classes: Vec<ClassScore>,
    /// Per-class F weighted by support.
    pub weighted_f: f64,
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

/// One-vs-rest precision, recall and F for every class seen in either list.
pub fn prf<S: AsRef<str>>(predictions: &[S], labels: &[S]) -> Result<PrfReport> {
    if predictions.len() != labels.len() {
        return Err(Error::LengthMismatch(predictions.len(), labels.len()));
    }
    let classes: BTreeSet<&str> = predictions.iter().chain(labels).map(AsRef::as_ref).collect();
    let mut counts: BTreeMap<&str, (usize, usize, usize, usize)> = classes.iter().map(|&c| (c, (0, 0, 0, 0))).collect();
    for (p, l) in predictions.iter().zip(labels) {
        let (p, l) = (p.as_ref(), l.as_ref());
        counts.get_mut(l).expect("known class").3 += 1;
        if p == l {
            counts.get_mut(p).expect("known class").0 += 1;
        } else {
            counts.get_mut(p).expect("known class").1 += 1;
            counts.get_mut(l).expect("known class").2 += 1;
        }
    }
    let mut scores = Vec::new();
    let (mut weighted, mut total) = (0.0, 0usize);
    for (class, (tp, fp, fn_, support)) in counts {
        let precision = ratio(tp, tp + fp);
        let recall = ratio(tp, tp + fn_);
        let f = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        weighted += support as f64 * f;
        total += support;
        scores.push(ClassScore {
            class: class.to_string(),
            tp,
            fp,
            fn_,
            precision,
            recall,
            f,
            support,
        });
    }
    Ok(PrfReport {
        classes: scores,
        weighted_f: if total == 0 { 0.0 } else { weighted / total as f64 },
    })
}
