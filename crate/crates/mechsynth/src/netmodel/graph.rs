//! Augmented-graph machinery: connectivity, deterministic spanning trees,
//! fundamental circuit matrices, and port-graph shape classification.
//!
//! The augmented graph of a network has one edge per port and one edge per
//! element. A network has a well-defined admittance exactly when the port
//! edges can be extended to a spanning tree, i.e. contain no circuit.

use std::collections::{BTreeMap, VecDeque};

use crate::exact::Scalar;

use super::netlist::{MechNetwork, NodeId};
use super::NetError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeId {
    Port(usize),
    Element(usize),
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false when the two endpoints were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            true
        }
    }
}

/// Fundamental circuit matrix `[B, F]` of the augmented graph with respect
/// to a spanning tree. Rows correspond to chords, columns of `b` to
/// elements, columns of `f` to ports.
#[derive(Clone, Debug)]
pub struct CircuitStructure {
    pub b: Vec<Vec<i8>>,
    pub f: Vec<Vec<i8>>,
    pub tree: Vec<EdgeId>,
    pub chords: Vec<EdgeId>,
}

/// Oriented edge list of the augmented graph: ports first (plus -> minus),
/// then elements (a -> b).
fn augmented_edges<K: Scalar>(net: &MechNetwork<K>) -> Vec<(EdgeId, NodeId, NodeId)> {
    let mut edges = Vec::with_capacity(net.ports.len() + net.elements.len());
    for (i, p) in net.ports.iter().enumerate() {
        edges.push((EdgeId::Port(i), p.plus, p.minus));
    }
    for (i, e) in net.elements.iter().enumerate() {
        edges.push((EdgeId::Element(i), e.a, e.b));
    }
    edges
}

fn node_index<K: Scalar>(net: &MechNetwork<K>) -> BTreeMap<NodeId, usize> {
    net.nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect()
}

pub fn is_connected<K: Scalar>(net: &MechNetwork<K>) -> bool {
    let idx = node_index(net);
    if idx.is_empty() {
        return false;
    }
    let mut uf = UnionFind::new(idx.len());
    for (_, u, v) in augmented_edges(net) {
        uf.union(idx[&u], idx[&v]);
    }
    let root = uf.find(0);
    (1..idx.len()).all(|i| uf.find(i) == root)
}

/// True iff the port edges contain no circuit, i.e. are jointly extendable
/// to a spanning tree of the connected augmented graph.
pub fn port_graph_extends_to_tree<K: Scalar>(net: &MechNetwork<K>) -> Result<bool, NetError> {
    if !is_connected(net) {
        return Err(NetError::DisconnectedGraph);
    }
    let idx = node_index(net);
    let mut uf = UnionFind::new(idx.len());
    for p in &net.ports {
        if !uf.union(idx[&p.plus], idx[&p.minus]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Port-graph shape for classification of n-port realizations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PortGraphShape {
    /// All port edges share one common vertex (a star).
    LTree,
    /// Port edges form a simple path.
    PTree,
    Neither,
}

pub fn classify_port_graph<K: Scalar>(net: &MechNetwork<K>) -> Result<PortGraphShape, NetError> {
    let idx = node_index(net);
    let mut uf = UnionFind::new(idx.len());
    for p in &net.ports {
        if !uf.union(idx[&p.plus], idx[&p.minus]) {
            return Err(NetError::PortCircuit);
        }
    }
    if net.ports.is_empty() {
        return Ok(PortGraphShape::Neither);
    }
    // L-tree: a vertex common to every port edge.
    let first = net.ports[0];
    for candidate in [first.plus, first.minus] {
        if net
            .ports
            .iter()
            .all(|p| p.plus == candidate || p.minus == candidate)
        {
            return Ok(PortGraphShape::LTree);
        }
    }
    // P-tree: connected, acyclic (already known), maximum degree two.
    let mut degree: BTreeMap<NodeId, usize> = BTreeMap::new();
    for p in &net.ports {
        *degree.entry(p.plus).or_default() += 1;
        *degree.entry(p.minus).or_default() += 1;
    }
    let mut uf_ports = UnionFind::new(idx.len());
    for p in &net.ports {
        uf_ports.union(idx[&p.plus], idx[&p.minus]);
    }
    let touched: Vec<usize> = degree.keys().map(|n| idx[n]).collect();
    let root = uf_ports.find(touched[0]);
    let one_component = touched.iter().all(|&t| uf_ports.find(t) == root);
    if one_component && degree.values().all(|&d| d <= 2) {
        return Ok(PortGraphShape::PTree);
    }
    Ok(PortGraphShape::Neither)
}

/// Build the fundamental circuit matrix with a deterministic spanning tree:
/// edges are scanned ports first, then elements, each in declaration order,
/// which yields the lexicographically smallest tree containing the ports.
///
/// With `require_ports_in_tree`, a port edge that closes a circuit is a
/// [`NetError::NotWellDefined`] failure; otherwise it simply becomes a chord
/// (used by the solvability cross-check).
pub fn circuit_structure<K: Scalar>(
    net: &MechNetwork<K>,
    require_ports_in_tree: bool,
) -> Result<CircuitStructure, NetError> {
    circuit_structure_with_order(net, require_ports_in_tree, None)
}

/// Same as [`circuit_structure`], with an optional permutation of the
/// element scan order. Different orders produce different spanning trees;
/// the resulting admittance must not depend on the choice.
pub fn circuit_structure_with_order<K: Scalar>(
    net: &MechNetwork<K>,
    require_ports_in_tree: bool,
    element_order: Option<&[usize]>,
) -> Result<CircuitStructure, NetError> {
    if !is_connected(net) {
        return Err(NetError::DisconnectedGraph);
    }
    let idx = node_index(net);
    let n_v = idx.len();
    let edges = augmented_edges(net);

    let mut scan: Vec<usize> = (0..net.ports.len()).collect();
    match element_order {
        Some(order) => {
            debug_assert_eq!(order.len(), net.elements.len());
            scan.extend(order.iter().map(|&i| net.ports.len() + i));
        }
        None => scan.extend(net.ports.len()..edges.len()),
    }

    let mut uf = UnionFind::new(n_v);
    let mut in_tree = vec![false; edges.len()];
    let mut tree = Vec::new();
    let mut chords = Vec::new();
    for &e in &scan {
        let (id, u, v) = edges[e];
        if uf.union(idx[&u], idx[&v]) {
            in_tree[e] = true;
            tree.push(id);
        } else {
            if require_ports_in_tree && matches!(id, EdgeId::Port(_)) {
                return Err(NetError::NotWellDefined);
            }
            chords.push(e);
        }
    }
    // Keep chord rows in global edge order for determinism.
    chords.sort_unstable();

    // Tree adjacency for path finding: node -> (neighbor, edge index, forward?)
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n_v];
    for (e, &(_, u, v)) in edges.iter().enumerate() {
        if in_tree[e] {
            let (ui, vi) = (idx[&u], idx[&v]);
            adj[ui].push((vi, e, true));
            adj[vi].push((ui, e, false));
        }
    }

    let n_ports = net.ports.len();
    let n_elems = net.elements.len();
    let mut b = Vec::with_capacity(chords.len());
    let mut f = Vec::with_capacity(chords.len());
    for &c in &chords {
        let (_, u, v) = edges[c];
        let mut row_b = vec![0i8; n_elems];
        let mut row_f = vec![0i8; n_ports];
        // The circuit is the chord plus the tree path from its head back to
        // its tail, oriented along the chord.
        match edges[c].0 {
            EdgeId::Port(i) => row_f[i] = 1,
            EdgeId::Element(i) => row_b[i] = 1,
        }
        let path = tree_path(&adj, idx[&v], idx[&u]);
        for (e, forward) in path {
            let sign = if forward { 1 } else { -1 };
            match edges[e].0 {
                EdgeId::Port(i) => row_f[i] = sign,
                EdgeId::Element(i) => row_b[i] = sign,
            }
        }
        b.push(row_b);
        f.push(row_f);
    }

    debug_assert_eq!(chords.len(), n_elems + n_ports + 1 - n_v);
    Ok(CircuitStructure {
        b,
        f,
        tree,
        chords: chords.iter().map(|&c| edges[c].0).collect(),
    })
}

/// Tree path from `from` to `to` as (edge index, traversed forward) pairs.
fn tree_path(
    adj: &[Vec<(usize, usize, bool)>],
    from: usize,
    to: usize,
) -> Vec<(usize, bool)> {
    if from == to {
        return Vec::new();
    }
    let mut prev: Vec<Option<(usize, usize, bool)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, e, fwd) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, e, fwd));
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (p, e, fwd) = prev[cur].expect("tree is connected");
        path.push((e, fwd));
        cur = p;
    }
    path.reverse();
    path
}
