//! Text formats: tab-separated edge lists and event logs, `node,group_id`
//! assignment files, and atomic file writes.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Msn, NodeIx, Partition};

pub type EdgeRecord = (String, String, String, f64);
pub type EventRecord = (String, String, String, f64, i64);

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `source<TAB>target<TAB>layer<TAB>weight` lines. A first line whose
/// weight column is not a number is taken as a header.
pub fn parse_edge_list(text: &str, undirected: bool) -> Result<Vec<EdgeRecord>> {
    let mut out = Vec::new();
    for (idx, (line, raw)) in data_lines(text).enumerate() {
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() != 4 {
            return Err(parse_err(line, format!("expected 4 columns, found {}", cols.len())));
        }
        let weight = match cols[3].trim().parse::<f64>() {
            Ok(w) => w,
            Err(_) if idx == 0 => continue,
            Err(_) => return Err(parse_err(line, format!("bad weight {:?}", cols[3]))),
        };
        push_record(&mut out, cols[0], cols[1], cols[2], weight, undirected);
    }
    Ok(out)
}

fn push_record(out: &mut Vec<EdgeRecord>, s: &str, t: &str, l: &str, w: f64, undirected: bool) {
    let (s, t, l) = (s.trim().to_string(), t.trim().to_string(), l.trim().to_string());
    if undirected {
        out.push((t.clone(), s.clone(), l.clone(), w));
    }
    out.push((s, t, l, w));
}

/// Parses five-column event-log lines; the fifth column is an integer timestamp.
pub fn parse_event_log(text: &str, undirected: bool) -> Result<Vec<EventRecord>> {
    let mut out = Vec::new();
    for (idx, (line, raw)) in data_lines(text).enumerate() {
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() != 5 {
            return Err(parse_err(line, format!("expected 5 columns, found {}", cols.len())));
        }
        let parsed = (cols[3].trim().parse::<f64>(), cols[4].trim().parse::<i64>());
        let (w, ts) = match parsed {
            (Ok(w), Ok(ts)) => (w, ts),
            _ if idx == 0 => continue,
            _ => return Err(parse_err(line, "bad weight or timestamp")),
        };
        let (s, t, l) = (cols[0].trim().to_string(), cols[1].trim().to_string(), cols[2].trim().to_string());
        if undirected {
            out.push((t.clone(), s.clone(), l.clone(), w, ts));
        }
        out.push((s, t, l, w, ts));
    }
    Ok(out)
}

/// Writes edges in the edge-list format, with a header line.
pub fn format_edge_list(msn: &Msn) -> String {
    let mut s = String::from("source\ttarget\tlayer\tweight\n");
    for (a, b, l, w) in msn.edges() {
        s.push_str(&format!("{}\t{}\t{}\t{}\n", msn.node_name(a), msn.node_name(b), msn.layer_name(l), w));
    }
    s
}

/// Parses `node,group_id` lines. `-1` or an empty group id marks an
/// unassigned node. A node may appear on several lines (overlapping groups).
pub fn parse_assignments(text: &str) -> Result<Vec<(String, Option<String>)>> {
    let mut out = Vec::new();
    for (idx, (line, raw)) in data_lines(text).enumerate() {
        let cols: Vec<&str> = raw.split(',').map(str::trim).collect();
        if cols.len() != 2 {
            return Err(parse_err(line, format!("expected node,group_id, found {:?}", raw)));
        }
        if idx == 0 && cols[0] == "node" {
            continue;
        }
        let group = match cols[1] {
            "" | "-1" => None,
            g => Some(g.to_string()),
        };
        out.push((cols[0].to_string(), group));
    }
    Ok(out)
}

/// Turns assignments into a partition, resolving node names with `index`.
/// Groups keep their labels as ids, in order of first appearance.
pub fn partition_from_assignments<F>(assignments: &[(String, Option<String>)], mut index: F) -> Result<Partition>
where
    F: FnMut(&str) -> Result<NodeIx>,
{
    let mut order: Vec<String> = Vec::new();
    let mut members: BTreeMap<String, Vec<NodeIx>> = BTreeMap::new();
    let mut partition = Partition::default();
    for (node, group) in assignments {
        let x = index(node)?;
        match group {
            Some(g) => {
                if !members.contains_key(g) {
                    order.push(g.clone());
                }
                members.entry(g.clone()).or_default().push(x);
            }
            None => {
                partition.unassigned.insert(x);
            }
        }
    }
    for g in order {
        let m = members.remove(&g).unwrap_or_default();
        partition.groups.push(crate::graph::Group::new(g, m)?);
    }
    Ok(partition)
}

/// `node,group_id` text for a partition; unassigned nodes get `-1`.
pub fn format_assignments(partition: &Partition, names: &[String]) -> String {
    let mut rows: Vec<(NodeIx, String)> = Vec::new();
    for g in &partition.groups {
        for &m in &g.members {
            rows.push((m, g.id.clone()));
        }
    }
    for &m in &partition.unassigned {
        rows.push((m, "-1".to_string()));
    }
    rows.sort();
    let mut s = String::from("node,group_id\n");
    for (m, g) in rows {
        s.push_str(&format!("{},{}\n", names[m], g));
    }
    s
}

/// Writes `contents` to a temporary file beside `path`, then renames it into
/// place, so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
