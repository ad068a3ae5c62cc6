#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use mlsna::graph::{load_msn, Group};
use mlsna::measures::{Direction, NeighbourhoodMode};
use mlsna::{Msn, MsnBuilder, NodeIx, Partition};
use proptest::prelude::*;

pub const TOL: f64 = 1e-9;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < TOL || (a.is_infinite() && b.is_infinite())
}

/// Both directions for every listed pair.
pub fn undirected(pairs: &[(&str, &str, &str)]) -> Msn {
    let mut b = MsnBuilder::new();
    for &(x, y, l) in pairs {
        b.add_edge(x, y, l, 1.0).unwrap();
        b.add_edge(y, x, l, 1.0).unwrap();
    }
    b.build()
}

/// Three-layer, six-node network rebuilt from its per-layer neighbour lists.
pub fn three_layer_example() -> Msn {
    let l1 = [("x", "u"), ("x", "y"), ("x", "z"), ("y", "z"), ("z", "t"), ("z", "u"), ("u", "v"), ("t", "v")];
    let l2 = [("x", "u"), ("x", "v"), ("x", "y"), ("x", "z"), ("y", "v"), ("u", "v")];
    let l3 = [("x", "u"), ("x", "v"), ("x", "y"), ("x", "z"), ("y", "v"), ("y", "z"), ("z", "t"), ("t", "v")];
    let mut pairs = Vec::new();
    for (layer, list) in [("l1", &l1[..]), ("l2", &l2[..]), ("l3", &l3[..])] {
        for &(a, b) in list {
            pairs.push((a, b, layer));
        }
    }
    undirected(&pairs)
}

/// Single-layer network around the edge x–y: x has five other neighbours,
/// y six, three of them shared.
pub fn edge_example() -> Msn {
    let mut pairs = vec![("x", "y", "l")];
    for n in ["a", "b", "f", "g", "h"] {
        pairs.push(("x", n, "l"));
    }
    for n in ["b", "c", "d", "e", "f", "g"] {
        pairs.push(("y", n, "l"));
    }
    undirected(&pairs)
}

pub fn names(net: &Msn, set: &BTreeSet<NodeIx>) -> BTreeSet<String> {
    set.iter().map(|&x| net.node_name(x).to_string()).collect()
}

pub fn set_of(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Rows of the karate removal trace: pair and its value in up to three rounds.
pub fn karate_trace() -> Vec<(u32, u32, [Option<f64>; 3])> {
    let text = std::fs::read_to_string(fixture("karate_clecc_trace.tsv")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            let v = |s: &str| if s == "-" { None } else { Some(s.parse::<f64>().unwrap()) };
            (f[0].parse().unwrap(), f[1].parse().unwrap(), [v(f[2]), v(f[3]), v(f[4])])
        })
        .collect()
}

/// Team, conference and reported group of the football network.
pub fn football_groups() -> Vec<(String, String, String)> {
    let text = std::fs::read_to_string(fixture("football_groups.tsv")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f[0].to_string(), f[1].to_string(), f[2].to_string())
        })
        .collect()
}

/// Minimal GML reader: node ids with optional labels and undirected edges.
pub fn read_gml(text: &str) -> Msn {
    let tokens: Vec<String> = {
        let mut out = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c == '"' {
                chars.next();
                let mut s = String::new();
                for c in chars.by_ref() {
                    if c == '"' {
                        break;
                    }
                    s.push(c);
                }
                out.push(s);
            } else if c == '[' || c == ']' {
                out.push(c.to_string());
                chars.next();
            } else {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '[' || c == ']' {
                        break;
                    }
                    s.push(c);
                    chars.next();
                }
                out.push(s);
            }
        }
        out
    };
    let mut labels: BTreeMap<String, String> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let kind = tokens[i].as_str();
        if (kind == "node" || kind == "edge") && tokens.get(i + 1).map(String::as_str) == Some("[") {
            let mut j = i + 2;
            let mut fields = BTreeMap::new();
            while tokens[j] != "]" {
                fields.insert(tokens[j].clone(), tokens[j + 1].clone());
                j += 2;
            }
            if kind == "node" {
                let id = fields["id"].clone();
                labels.insert(id.clone(), fields.get("label").cloned().unwrap_or(id));
            } else {
                edges.push((fields["source"].clone(), fields["target"].clone()));
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    let mut pairs = BTreeSet::new();
    for (s, t) in edges {
        let (s, t) = (labels[&s].clone(), labels[&t].clone());
        if s != t {
            pairs.insert((s.clone(), t.clone()));
            pairs.insert((t, s));
        }
    }
    let mut b = MsnBuilder::new();
    for label in labels.values() {
        b.add_node(label);
    }
    for (s, t) in pairs {
        b.add_edge(&s, &t, "1", 1.0).unwrap();
    }
    b.build()
}

/// Random multi-layer network description: node count, layer count and
/// directed weighted edges without self-loops or duplicates.
#[derive(Debug, Clone)]
pub struct Spec {
    pub n: usize,
    pub layers: usize,
    pub edges: Vec<(usize, usize, usize, f64)>,
}

impl Spec {
    pub fn build(&self) -> Msn {
        let mut b = MsnBuilder::new();
        for x in 0..self.n {
            b.add_node(&format!("n{x}"));
        }
        for l in 0..self.layers {
            b.add_layer(&format!("l{l}"));
        }
        for &(s, t, l, w) in &self.edges {
            b.add_edge(&format!("n{s}"), &format!("n{t}"), &format!("l{l}"), w).unwrap();
        }
        b.build()
    }
}

fn dedupe(edges: Vec<(usize, usize, usize, f64)>, symmetric: bool) -> Vec<(usize, usize, usize, f64)> {
    let mut seen = BTreeMap::new();
    for (s, t, l, w) in edges {
        if s == t {
            continue;
        }
        seen.entry((s, t, l)).or_insert(w);
        if symmetric {
            seen.entry((t, s, l)).or_insert(w);
        }
    }
    seen.into_iter().map(|((s, t, l), w)| (s, t, l, w)).collect()
}

/// Directed networks with weights in (0, 1].
pub fn msn_spec(max_n: usize, max_layers: usize) -> impl Strategy<Value = Spec> {
    (2..=max_n, 1..=max_layers).prop_flat_map(|(n, layers)| {
        prop::collection::vec((0..n, 0..n, 0..layers, 1u32..=4), 0..n * n * layers)
            .prop_map(move |raw| Spec {
                n,
                layers,
                edges: dedupe(raw.into_iter().map(|(s, t, l, w)| (s, t, l, w as f64 / 4.0)).collect(), false),
            })
    })
}

/// Undirected networks (both directions, equal weights).
pub fn undirected_spec(max_n: usize, max_layers: usize) -> impl Strategy<Value = Spec> {
    (2..=max_n, 1..=max_layers).prop_flat_map(|(n, layers)| {
        prop::collection::vec((0..n, 0..n, 0..layers), 0..n * n * layers / 2 + 1).prop_map(move |raw| Spec {
            n,
            layers,
            edges: dedupe(raw.into_iter().map(|(s, t, l)| (s, t, l, 1.0)).collect(), true),
        })
    })
}

// ---- literal-formula oracles ------------------------------------------------

fn has(spec: &Spec, s: usize, t: usize, l: usize) -> bool {
    spec.edges.iter().any(|&(a, b, c, _)| a == s && b == t && c == l)
}

fn w(spec: &Spec, s: usize, t: usize, l: usize) -> f64 {
    spec.edges
        .iter()
        .find(|&&(a, b, c, _)| a == s && b == t && c == l)
        .map(|e| e.3)
        .unwrap_or(0.0)
}

pub fn mn_oracle(spec: &Spec, x: usize, alpha: usize, mode: NeighbourhoodMode) -> BTreeSet<usize> {
    (0..spec.n)
        .filter(|&y| y != x)
        .filter(|&y| {
            let layers = 0..spec.layers;
            let inc = layers.clone().filter(|&l| has(spec, y, x, l)).count();
            let out = layers.clone().filter(|&l| has(spec, x, y, l)).count();
            let both = layers.clone().filter(|&l| has(spec, y, x, l) && has(spec, x, y, l)).count();
            let any = layers.filter(|&l| has(spec, y, x, l) || has(spec, x, y, l)).count();
            match mode {
                NeighbourhoodMode::In => inc >= alpha,
                NeighbourhoodMode::Out => out >= alpha,
                NeighbourhoodMode::InOutAny => inc >= alpha && out >= alpha,
                NeighbourhoodMode::InOut => both >= alpha,
                NeighbourhoodMode::Any => any >= alpha,
            }
        })
        .collect()
}

pub fn clcc_oracle(spec: &Spec, x: usize, alpha: usize) -> f64 {
    let mn = mn_oracle(spec, x, alpha, NeighbourhoodMode::Any);
    if mn.len() <= 1 {
        return 0.0;
    }
    let mut total = 0.0;
    for l in 0..spec.layers {
        for &y in &mn {
            for &z in &mn {
                total += w(spec, z, y, l) + w(spec, y, z, l);
            }
        }
    }
    total / (2.0 * mn.len() as f64 * spec.layers as f64)
}

fn dir_w(spec: &Spec, x: usize, y: usize, l: usize, d: Direction) -> f64 {
    match d {
        Direction::Total => w(spec, x, y, l) + w(spec, y, x, l),
        Direction::In => w(spec, y, x, l),
        Direction::Out => w(spec, x, y, l),
    }
}

pub fn cdc_oracle(spec: &Spec, x: usize, alpha: usize, d: Direction) -> f64 {
    let mn = mn_oracle(spec, x, alpha, NeighbourhoodMode::Any);
    let mut total = 0.0;
    for l in 0..spec.layers {
        for &y in &mn {
            total += dir_w(spec, x, y, l, d);
        }
    }
    total / ((spec.n - 1) as f64 * spec.layers as f64)
}

/// Versions 1, 2, 3.
pub fn mdc_oracle(spec: &Spec, x: usize, version: u8, d: Direction) -> f64 {
    let layer_nb = |l: usize| -> BTreeSet<usize> {
        (0..spec.n).filter(|&y| y != x && (has(spec, x, y, l) || has(spec, y, x, l))).collect()
    };
    let mut total = 0.0;
    let mut union = BTreeSet::new();
    let mut sum_sizes = 0;
    for l in 0..spec.layers {
        let nb = layer_nb(l);
        for &y in &nb {
            total += dir_w(spec, x, y, l, d);
        }
        sum_sizes += nb.len();
        union.extend(nb);
    }
    let denom = match version {
        1 => spec.layers,
        2 => union.len(),
        _ => sum_sizes,
    };
    if denom == 0 {
        0.0
    } else {
        total / ((spec.n - 1) as f64 * denom as f64)
    }
}

pub fn clecc_oracle(spec: &Spec, x: usize, y: usize, alpha: usize) -> f64 {
    let mx = mn_oracle(spec, x, alpha, NeighbourhoodMode::Any);
    let my = mn_oracle(spec, y, alpha, NeighbourhoodMode::Any);
    let common = mx.intersection(&my).count();
    let union = mx.union(&my).filter(|&&v| v != x && v != y).count();
    if union == 0 {
        0.0
    } else {
        common as f64 / union as f64
    }
}

/// (triangles on the edge + 1) / (smaller degree − 1), by enumeration.
pub fn ecc_oracle(spec: &Spec, x: usize, y: usize) -> Option<f64> {
    let adj = |a: usize, b: usize| has(spec, a, b, 0) || has(spec, b, a, 0);
    let deg = |a: usize| (0..spec.n).filter(|&b| b != a && adj(a, b)).count();
    let triangles = (0..spec.n).filter(|&z| z != x && z != y && adj(x, z) && adj(y, z)).count();
    let s = deg(x).min(deg(y)).checked_sub(1)?;
    if s == 0 {
        return None;
    }
    Some((triangles + 1) as f64 / s as f64)
}

/// All-pairs distances over the multi-edge graph (≥ α outgoing layers and
/// strangeness ≤ β).
pub fn floyd_warshall(spec: &Spec, alpha: usize, beta: f64) -> Vec<Vec<f64>> {
    let n = spec.n;
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (x, row) in d.iter_mut().enumerate() {
        row[x] = 0.0;
    }
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let layers = (0..spec.layers).filter(|&l| has(spec, x, y, l)).count();
            let share: f64 = (0..spec.layers).map(|l| w(spec, x, y, l)).sum::<f64>() / spec.layers as f64;
            let dist = 1.0 - share;
            if layers >= 1 && layers >= alpha && dist <= beta {
                d[x][y] = d[x][y].min(dist);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every shortest path between every ordered pair, by exhaustive BFS
/// layering; returns raw betweenness (ordered pairs).
pub fn betweenness_oracle(spec: &Spec) -> Vec<f64> {
    let n = spec.n;
    let adj = |a: usize, b: usize| has(spec, a, b, 0);
    let mut dist = vec![vec![usize::MAX; n]; n];
    for s in 0..n {
        dist[s][s] = 0;
        let mut frontier = vec![s];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for t in 0..n {
                    if adj(v, t) && dist[s][t] == usize::MAX {
                        dist[s][t] = d;
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
    }
    // number of shortest paths by enumeration of all walks of the right length
    fn count(n: usize, adj: &dyn Fn(usize, usize) -> bool, dist: &[Vec<usize>], s: usize, t: usize, via: Option<usize>) -> f64 {
        fn walk(
            n: usize,
            adj: &dyn Fn(usize, usize) -> bool,
            dist: &[Vec<usize>],
            s: usize,
            v: usize,
            t: usize,
            via: Option<usize>,
            seen_via: bool,
        ) -> f64 {
            if v == t {
                return if via.is_none() || seen_via { 1.0 } else { 0.0 };
            }
            let mut total = 0.0;
            for u in 0..n {
                if adj(v, u) && dist[s][u] == dist[s][v] + 1 && dist[u][t] != usize::MAX && dist[s][u] + dist[u][t] == dist[s][t] {
                    total += walk(n, adj, dist, s, u, t, via, seen_via || Some(u) == via);
                }
            }
            total
        }
        walk(n, adj, dist, s, s, t, via, false)
    }
    let mut bc = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t || dist[s][t] == usize::MAX {
                continue;
            }
            let all = count(n, &adj, &dist, s, t, None);
            for (v, b) in bc.iter_mut().enumerate() {
                if v != s && v != t {
                    *b += count(n, &adj, &dist, s, t, Some(v)) / all;
                }
            }
        }
    }
    bc
}

/// −2 Σ n_ij ln(n_ij n / n_i n_j) / (Σ n_i ln(n_i/n) + Σ n_j ln(n_j/n)) from
/// two label vectors.
pub fn nmi_oracle(a: &[usize], b: &[usize]) -> f64 {
    let n = a.len() as f64;
    let mut na: BTreeMap<usize, f64> = BTreeMap::new();
    let mut nb: BTreeMap<usize, f64> = BTreeMap::new();
    let mut nab: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for (&x, &y) in a.iter().zip(b) {
        *na.entry(x).or_default() += 1.0;
        *nb.entry(y).or_default() += 1.0;
        *nab.entry((x, y)).or_default() += 1.0;
    }
    let num: f64 = nab.iter().map(|(&(x, y), &v)| v * (v * n / (na[&x] * nb[&y])).ln()).sum();
    let den: f64 = na.values().map(|&v| v * (v / n).ln()).sum::<f64>() + nb.values().map(|&v| v * (v / n).ln()).sum::<f64>();
    if den == 0.0 {
        1.0
    } else {
        -2.0 * num / den
    }
}

pub fn partition_of(labels: &[usize]) -> Partition {
    let opt: Vec<Option<usize>> = labels.iter().map(|&l| Some(l)).collect();
    Partition::from_labels(&opt)
}

pub fn group(id: &str, members: &[usize]) -> Group {
    Group::new(id, members.iter().copied()).unwrap()
}

pub fn load(records: &[(&str, &str, &str, f64)]) -> Msn {
    load_msn(records.iter().map(|&(a, b, l, w)| (a.to_string(), b.to_string(), l.to_string(), w))).unwrap()
}

/// The eight-frame storyline fixture: frames over one shared node set and
/// the groups found in each.
pub fn storyline() -> (mlsna::Dsn, Vec<Partition>) {
    use mlsna::io::{parse_assignments, parse_edge_list, partition_from_assignments};
    let dir = fixture("storyline");
    let read = |name: String| std::fs::read_to_string(dir.join(name)).unwrap();
    let records: Vec<_> = (0..8).map(|k| parse_edge_list(&read(format!("frame_{k}.tsv")), true).unwrap()).collect();
    let assignments: Vec<_> = (0..8).map(|k| parse_assignments(&read(format!("groups_{k}.csv"))).unwrap()).collect();
    let mut universe = MsnBuilder::new();
    for (s, t, l, _) in records.iter().flatten() {
        universe.add_node(s).add_node(t).add_layer(l);
    }
    for (n, _) in assignments.iter().flatten() {
        universe.add_node(n);
    }
    let networks = records
        .iter()
        .map(|recs| {
            let mut b = universe.clone();
            for (s, t, l, w) in recs {
                b.add_edge(s, t, l, *w).unwrap();
            }
            b.build()
        })
        .collect();
    let dsn = mlsna::Dsn::from_frames(networks, 1, 0).unwrap();
    let partitions = assignments
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let net = &dsn.frames[k].network;
            partition_from_assignments(a, |n| net.node_id(n)).unwrap()
        })
        .collect();
    (dsn, partitions)
}

/// A drifting community structure: `frames` snapshots of `n` nodes whose
/// groups move, split and merge at random, with dense links inside groups.
pub fn random_dsn(n: usize, frames: usize, seed: u64) -> (mlsna::Dsn, Vec<Partition>) {
    let mut rng = mlsna::rng::SeededRng::new(seed);
    let mut labels: Vec<Option<usize>> = (0..n).map(|x| Some(x % 5)).collect();
    let mut next_label = 5;
    let mut networks = Vec::new();
    let mut partitions = Vec::new();
    for _ in 0..frames {
        for l in labels.iter_mut() {
            if rng.chance(0.1) {
                *l = if rng.chance(0.2) { None } else { Some(rng.below(next_label)) };
            }
        }
        let live: BTreeSet<usize> = labels.iter().flatten().copied().collect();
        let live: Vec<usize> = live.into_iter().collect();
        if live.len() > 1 && rng.chance(0.3) {
            let (a, b) = (live[rng.below(live.len())], live[rng.below(live.len())]);
            for l in labels.iter_mut() {
                if *l == Some(b) {
                    *l = Some(a);
                }
            }
        }
        if rng.chance(0.3) {
            let a = live[rng.below(live.len())];
            for l in labels.iter_mut() {
                if *l == Some(a) && rng.chance(0.5) {
                    *l = Some(next_label);
                }
            }
            next_label += 1;
        }
        let mut b = MsnBuilder::new();
        b.add_layer("l");
        for x in 0..n {
            b.add_node(&format!("n{x}"));
        }
        for x in 0..n {
            for y in x + 1..n {
                let p = if labels[x].is_some() && labels[x] == labels[y] { 0.7 } else { 0.02 };
                if rng.chance(p) {
                    let w = 0.25 * (1 + rng.below(4)) as f64;
                    b.add_edge(&format!("n{x}"), &format!("n{y}"), "l", w).unwrap();
                    b.add_edge(&format!("n{y}"), &format!("n{x}"), "l", w).unwrap();
                }
            }
        }
        networks.push(b.build());
        let mut p = Partition::from_labels(&labels);
        p.groups.retain(|g| g.len() > 1);
        let kept: BTreeSet<usize> = p.groups.iter().flat_map(|g| g.members.iter().copied()).collect();
        p.unassigned = (0..n).filter(|x| !kept.contains(x)).collect();
        partitions.push(p);
    }
    (mlsna::Dsn::from_frames(networks, 1, 0).unwrap(), partitions)
}
