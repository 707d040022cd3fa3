//! Brute-force enumeration of small three-port networks, deduplicated by
//! canonical labeling. This is the necessity-side test oracle: every
//! admittance such a network can produce must pass the decision procedure.

use std::collections::BTreeSet;

use crate::canon::{canonical_typed, Pair};
use crate::exact::Rat;
use crate::netmodel::{ElementKind, MechNetwork};
use crate::par;

/// Canonical key of an augmented multigraph with port edges distinguished
/// from element edges: the lexicographically smallest (ports, elements)
/// edge-list pair over all vertex relabelings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct CanonForm {
    n_vertices: u32,
    ports: Vec<Pair>,
    elements: Vec<Pair>,
}

fn canonical_form(n: u32, ports: &[Pair], elements: &[Pair]) -> CanonForm {
    let (mut lists, _) = canonical_typed(n, &[ports, elements]);
    let elements = lists.pop().unwrap();
    let ports = lists.pop().unwrap();
    CanonForm {
        n_vertices: n,
        ports,
        elements,
    }
}

fn acyclic(n: u32, edges: &[Pair]) -> bool {
    let mut parent: Vec<u32> = (0..n).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        if parent[x as usize] != x {
            let r = find(parent, parent[x as usize]);
            parent[x as usize] = r;
        }
        parent[x as usize]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra as usize] = rb;
    }
    true
}

fn connected_covering(n: u32, ports: &[Pair], elements: &[Pair]) -> bool {
    let mut parent: Vec<u32> = (0..n).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        if parent[x as usize] != x {
            let r = find(parent, parent[x as usize]);
            parent[x as usize] = r;
        }
        parent[x as usize]
    }
    let mut touched = vec![false; n as usize];
    for &(a, b) in ports.iter().chain(elements) {
        touched[a as usize] = true;
        touched[b as usize] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra as usize] = rb;
        }
    }
    if !touched.iter().all(|&t| t) {
        return false;
    }
    let root = find(&mut parent, 0);
    (1..n).all(|v| find(&mut parent, v) == root)
}

fn multisets(pairs: &[Pair], size: usize) -> Vec<Vec<Pair>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(pairs: &[Pair], size: usize, from: usize, current: &mut Vec<Pair>, out: &mut Vec<Vec<Pair>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in from..pairs.len() {
            current.push(pairs[i]);
            rec(pairs, size, i, current, out);
            current.pop();
        }
    }
    rec(pairs, size, 0, &mut current, &mut out);
    out
}

fn subsets3(pairs: &[Pair]) -> Vec<[Pair; 3]> {
    let n = pairs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([pairs[i], pairs[j], pairs[k]]);
            }
        }
    }
    out
}

/// Every isomorphism-class representative of a connected three-port network
/// with `<= max_elements` elements and exactly 4..=`max_vertices` vertices,
/// ports jointly extendable to a spanning tree. Elements carry placeholder
/// unit values for callers to randomize; port orientation is normalized.
///
/// The scan fans out per port-edge choice under the `parallel` feature.
pub fn enumerate_small_networks(max_elements: usize, max_vertices: usize) -> Vec<MechNetwork<Rat>> {
    assert!(max_vertices >= 4, "three acyclic port edges need four vertices");
    let mut forms: BTreeSet<CanonForm> = BTreeSet::new();
    for n in 4..=max_vertices as u32 {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a, b));
            }
        }
        let port_choices: Vec<[Pair; 3]> = subsets3(&pairs)
            .into_iter()
            .filter(|ports| acyclic(n, ports))
            .collect();
        let min_elems = (n as usize).saturating_sub(1).saturating_sub(3);
        for k in min_elems..=max_elements {
            let element_choices = multisets(&pairs, k);
            let found: Vec<Vec<CanonForm>> = par::map_collect(port_choices.clone(), |ports| {
                let mut local = Vec::new();
                for elements in &element_choices {
                    if !connected_covering(n, &ports, elements) {
                        continue;
                    }
                    local.push(canonical_form(n, &ports, elements));
                }
                local
            });
            for batch in found {
                forms.extend(batch);
            }
        }
    }
    forms.into_iter().map(network_from_form).collect()
}

fn network_from_form(form: CanonForm) -> MechNetwork<Rat> {
    let mut net = MechNetwork::new();
    for &(a, b) in &form.ports {
        net.add_port(a, b).expect("distinct endpoints");
    }
    for &(a, b) in &form.elements {
        net.add_element(ElementKind::Conductance, Rat::one(), a, b)
            .expect("distinct endpoints");
    }
    net
}

/// Replace element values positionally; lengths must match.
pub fn with_element_values(net: &MechNetwork<Rat>, values: &[Rat]) -> MechNetwork<Rat> {
    assert_eq!(net.elements.len(), values.len());
    let mut out = net.clone();
    for (e, v) in out.elements.iter_mut().zip(values) {
        e.value = v.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netmodel::{classify_port_graph, port_graph_extends_to_tree, PortGraphShape};

    #[test]
    fn no_element_networks_are_the_two_port_trees() {
        let nets = enumerate_small_networks(0, 4);
        assert_eq!(nets.len(), 2);
        let shapes: Vec<PortGraphShape> = nets
            .iter()
            .map(|n| classify_port_graph(n).unwrap())
            .collect();
        assert!(shapes.contains(&PortGraphShape::LTree));
        assert!(shapes.contains(&PortGraphShape::PTree));
    }

    #[test]
    fn four_vertex_classes_include_star_and_path_topologies() {
        let nets = enumerate_small_networks(3, 4);
        assert!(nets.len() > 10);
        let mut star_seen = false;
        let mut path_seen = false;
        for net in &nets {
            assert!(port_graph_extends_to_tree(net).unwrap());
            match classify_port_graph(net).unwrap() {
                PortGraphShape::LTree => star_seen = true,
                PortGraphShape::PTree => path_seen = true,
                PortGraphShape::Neither => {}
            }
        }
        assert!(star_seen && path_seen);
    }

    #[test]
    fn seven_vertex_networks_are_trees() {
        let nets = enumerate_small_networks(3, 7);
        let seven: Vec<_> = nets.iter().filter(|n| n.nodes.len() == 7).collect();
        assert!(!seven.is_empty());
        for net in seven {
            // Six edges on seven vertices: the augmented graph is a tree.
            assert_eq!(net.elements.len() + net.ports.len(), 6);
        }
    }

    #[test]
    fn representatives_are_canonical_and_unique() {
        let nets = enumerate_small_networks(2, 5);
        let mut seen = BTreeSet::new();
        for net in &nets {
            let ports: Vec<Pair> = net.ports.iter().map(|p| (p.plus.min(p.minus), p.plus.max(p.minus))).collect();
            let elements: Vec<Pair> = net.elements.iter().map(|e| (e.a.min(e.b), e.a.max(e.b))).collect();
            let form = canonical_form(net.nodes.len() as u32, &ports, &elements);
            assert_eq!(form.ports, ports, "representative not canonical");
            assert_eq!(form.elements, elements, "representative not canonical");
            assert!(seen.insert(form), "duplicate isomorphism class");
        }
    }
}
