use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};

/// Dense node index into an [`Msn`].
pub type NodeIx = usize;
/// Dense layer index into an [`Msn`].
pub type LayerIx = usize;

/// Orders ids so that "2" sorts before "10": purely numeric ids compare by
/// value and come before everything else, the rest compare as strings.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Id(String);

impl Ord for Id {
    fn cmp(&self, other: &Self) -> Ordering {
        natural_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Id {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Accumulates nodes, layers and edges before freezing them into an [`Msn`].
#[derive(Debug, Default, Clone)]
pub struct MsnBuilder {
    nodes: BTreeSet<Id>,
    layers: BTreeSet<Id>,
    edges: HashMap<(String, String, String), f64>,
}

impl MsnBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, node: &str) -> &mut Self {
        self.nodes.insert(Id(node.to_string()));
        self
    }

    pub fn add_layer(&mut self, layer: &str) -> &mut Self {
        self.layers.insert(Id(layer.to_string()));
        self
    }

    /// Adds one directed tuple, rejecting self-loops, duplicates and bad weights.
    pub fn add_edge(&mut self, source: &str, target: &str, layer: &str, weight: f64) -> Result<&mut Self> {
        self.check(source, target, layer, weight)?;
        let key = (source.to_string(), target.to_string(), layer.to_string());
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge {
                from: key.0,
                to: key.1,
                layer: key.2,
            });
        }
        self.edges.insert(key, weight);
        self.add_node(source).add_node(target).add_layer(layer);
        Ok(self)
    }

    /// Like [`add_edge`](Self::add_edge) but sums the weight into an existing tuple.
    pub fn accumulate_edge(&mut self, source: &str, target: &str, layer: &str, weight: f64) -> Result<&mut Self> {
        self.check(source, target, layer, weight)?;
        *self
            .edges
            .entry((source.to_string(), target.to_string(), layer.to_string()))
            .or_insert(0.0) += weight;
        self.add_node(source).add_node(target).add_layer(layer);
        Ok(self)
    }

    fn check(&self, source: &str, target: &str, layer: &str, weight: f64) -> Result<()> {
        if source == target {
            return Err(Error::SelfLoop {
                node: source.to_string(),
                layer: layer.to_string(),
            });
        }
        if !weight.is_finite() || weight < 0.0 {
            return Err(Error::InvalidWeight {
                from: source.to_string(),
                to: target.to_string(),
                weight,
            });
        }
        Ok(())
    }

    pub fn build(&self) -> Msn {
        let nodes: Vec<String> = self.nodes.iter().map(|i| i.0.clone()).collect();
        let layers: Vec<String> = self.layers.iter().map(|i| i.0.clone()).collect();
        let node_index: HashMap<String, NodeIx> = nodes.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let layer_index: HashMap<String, LayerIx> = layers.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let edges = self
            .edges
            .iter()
            .map(|((s, t, l), w)| (node_index[s], node_index[t], layer_index[l], *w))
            .collect();
        Msn::assemble(nodes, layers, edges)
    }
}

/// A multi-layered network: nodes, an ordered layer set and directed weighted
/// tuples, at most one per (source, target, layer).
#[derive(Debug, Clone)]
pub struct Msn {
    nodes: Vec<String>,
    node_index: HashMap<String, NodeIx>,
    layers: Vec<String>,
    layer_index: HashMap<String, LayerIx>,
    out_adj: Vec<Vec<Vec<(NodeIx, f64)>>>,
    in_adj: Vec<Vec<Vec<(NodeIx, f64)>>>,
    edge_count: usize,
}

impl PartialEq for Msn {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.layers == other.layers && self.out_adj == other.out_adj
    }
}

impl Msn {
    /// Builds from already-indexed parts. Panics on invalid tuples, which
    /// only internal generators produce.
    pub(crate) fn assemble(nodes: Vec<String>, layers: Vec<String>, edges: Vec<(NodeIx, NodeIx, LayerIx, f64)>) -> Msn {
        let n = nodes.len();
        let mut out_adj = vec![vec![Vec::new(); n]; layers.len()];
        let mut in_adj = vec![vec![Vec::new(); n]; layers.len()];
        for &(s, t, l, w) in &edges {
            assert!(s != t, "self-loop");
            out_adj[l][s].push((t, w));
            in_adj[l][t].push((s, w));
        }
        for layer in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            for list in layer.iter_mut() {
                list.sort_by_key(|e| e.0);
                let before = list.len();
                list.dedup_by_key(|e| e.0);
                assert_eq!(before, list.len(), "duplicate edge");
            }
        }
        let node_index = nodes.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let layer_index = layers.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Msn {
            nodes,
            node_index,
            layers,
            layer_index,
            out_adj,
            in_adj,
            edge_count: edges.len(),
        }
    }

    pub fn empty() -> Msn {
        MsnBuilder::new().build()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// Number of directed tuples over all layers.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn layers(&self) -> &[String] {
        &self.layers
    }

    pub fn node_name(&self, x: NodeIx) -> &str {
        &self.nodes[x]
    }

    pub fn layer_name(&self, l: LayerIx) -> &str {
        &self.layers[l]
    }

    pub fn node_id(&self, name: &str) -> Result<NodeIx> {
        self.node_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownNode(name.to_string()))
    }

    pub fn layer_id(&self, name: &str) -> Result<LayerIx> {
        self.layer_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLayer(name.to_string()))
    }

    pub(crate) fn check_node(&self, x: NodeIx) -> Result<()> {
        if x < self.nodes.len() {
            Ok(())
        } else {
            Err(Error::UnknownNode(format!("#{x}")))
        }
    }

    pub(crate) fn check_layer(&self, l: LayerIx) -> Result<()> {
        if l < self.layers.len() {
            Ok(())
        } else {
            Err(Error::UnknownLayer(format!("#{l}")))
        }
    }

    /// Outgoing (target, weight) pairs of `x` on layer `l`, sorted by target.
    pub fn out_edges(&self, x: NodeIx, l: LayerIx) -> &[(NodeIx, f64)] {
        &self.out_adj[l][x]
    }

    /// Incoming (source, weight) pairs of `x` on layer `l`, sorted by source.
    pub fn in_edges(&self, x: NodeIx, l: LayerIx) -> &[(NodeIx, f64)] {
        &self.in_adj[l][x]
    }

    /// Weight of ⟨x,y,l⟩, 0 when absent.
    pub fn weight(&self, x: NodeIx, y: NodeIx, l: LayerIx) -> f64 {
        self.edge(x, y, l).unwrap_or(0.0)
    }

    pub fn edge(&self, x: NodeIx, y: NodeIx, l: LayerIx) -> Option<f64> {
        let list = &self.out_adj[l][x];
        list.binary_search_by_key(&y, |e| e.0).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, x: NodeIx, y: NodeIx, l: LayerIx) -> bool {
        self.edge(x, y, l).is_some()
    }

    /// All tuples as (source, target, layer, weight), ordered by layer, source, target.
    pub fn edges(&self) -> impl Iterator<Item = (NodeIx, NodeIx, LayerIx, f64)> + '_ {
        self.out_adj.iter().enumerate().flat_map(|(l, layer)| {
            layer
                .iter()
                .enumerate()
                .flat_map(move |(s, list)| list.iter().map(move |&(t, w)| (s, t, l, w)))
        })
    }

    /// Number of directed tuples on one layer.
    pub fn layer_edge_count(&self, l: LayerIx) -> usize {
        self.out_adj[l].iter().map(Vec::len).sum()
    }

    /// Number of unordered node pairs linked in either direction on one layer.
    pub fn layer_pair_count(&self, l: LayerIx) -> usize {
        let mut pairs = BTreeSet::new();
        for (s, list) in self.out_adj[l].iter().enumerate() {
            for &(t, _) in list {
                pairs.insert((s.min(t), s.max(t)));
            }
        }
        pairs.len()
    }

    /// ⟨V, E_l, {l}⟩: all nodes, only the edges of layer `l`.
    pub fn layer_view(&self, layer: &str) -> Result<Msn> {
        let l = self.layer_id(layer)?;
        let edges = self.edges().filter(|e| e.2 == l).map(|(s, t, _, w)| (s, t, 0, w)).collect();
        Ok(Msn::assemble(self.nodes.clone(), vec![layer.to_string()], edges))
    }

    /// Keeps exactly the edges with both endpoints in `members`; layers are kept.
    pub fn induced_subgraph(&self, members: &BTreeSet<NodeIx>) -> Result<Msn> {
        for &m in members {
            self.check_node(m)?;
        }
        let remap: BTreeMap<NodeIx, NodeIx> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let nodes = members.iter().map(|&m| self.nodes[m].clone()).collect();
        let edges = self
            .edges()
            .filter_map(|(s, t, l, w)| Some((*remap.get(&s)?, *remap.get(&t)?, l, w)))
            .collect();
        Ok(Msn::assemble(nodes, self.layers.clone(), edges))
    }

    /// Same as [`induced_subgraph`](Self::induced_subgraph) with member names.
    pub fn induced_by_names<S: AsRef<str>>(&self, members: &[S]) -> Result<Msn> {
        let set = members
            .iter()
            .map(|m| self.node_id(m.as_ref()))
            .collect::<Result<BTreeSet<_>>>()?;
        self.induced_subgraph(&set)
    }

    /// Distinct nodes linked to `x` in either direction on any layer.
    pub fn neighbours(&self, x: NodeIx) -> BTreeSet<NodeIx> {
        let mut set = BTreeSet::new();
        for l in 0..self.layers.len() {
            set.extend(self.out_adj[l][x].iter().map(|e| e.0));
            set.extend(self.in_adj[l][x].iter().map(|e| e.0));
        }
        set
    }
}

/// Builds an [`Msn`] from (source, target, layer, weight) records; nodes and
/// layers are inferred from the records.
pub fn load_msn<I, S>(records: I) -> Result<Msn>
where
    I: IntoIterator<Item = (S, S, S, f64)>,
    S: AsRef<str>,
{
    let mut b = MsnBuilder::new();
    for (s, t, l, w) in records {
        b.add_edge(s.as_ref(), t.as_ref(), l.as_ref(), w)?;
    }
    Ok(b.build())
}
