//! Netlist data model: typed two-terminal elements plus oriented ports.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::{Poly, Rat, RationalFunction, Scalar};

use super::NetError;

pub type NodeId = u32;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum ElementKind {
    Spring,
    Damper,
    Inerter,
    Conductance,
}

impl ElementKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ElementKind::Spring => "spring",
            ElementKind::Damper => "damper",
            ElementKind::Inerter => "inerter",
            ElementKind::Conductance => "conductance",
        }
    }
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl FromStr for ElementKind {
    type Err = NetError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "spring" => Ok(ElementKind::Spring),
            "damper" => Ok(ElementKind::Damper),
            "inerter" => Ok(ElementKind::Inerter),
            "conductance" => Ok(ElementKind::Conductance),
            other => Err(NetError::BadNetlist(format!("unknown element kind {other:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<K: Scalar> {
    pub kind: ElementKind,
    pub value: K,
    pub a: NodeId,
    pub b: NodeId,
    /// Slot name used by topology catalogs ("k1", "b", ...); empty otherwise.
    pub label: Option<String>,
}

impl<K: Scalar> Element<K> {
    /// Impedance of a single element: spring `s/k`, damper `1/c`,
    /// inerter `1/(b s)`, conductance `1/g`.
    pub fn impedance(&self) -> Result<RationalFunction<K>, NetError> {
        if self.value.is_zero() || self.value.is_negative() {
            return Err(NetError::NonpositiveValue);
        }
        let v = Poly::constant(self.value.clone());
        let one = Poly::one();
        let s = Poly::<K>::var();
        let rf = match self.kind {
            ElementKind::Spring => RationalFunction::new(s, v),
            ElementKind::Damper => RationalFunction::new(one, v),
            ElementKind::Inerter => RationalFunction::new(one, v.mul(&s)),
            ElementKind::Conductance => RationalFunction::new(one, v),
        };
        Ok(rf.expect("positive element value"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Port {
    pub plus: NodeId,
    pub minus: NodeId,
}

/// A mechanical (or resistive-analog) network: node set, element list, and
/// ordered, oriented ports. Ports are numbered by their position, starting
/// at one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MechNetwork<K: Scalar> {
    pub nodes: BTreeSet<NodeId>,
    pub elements: Vec<Element<K>>,
    pub ports: Vec<Port>,
}

impl<K: Scalar> Default for MechNetwork<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Scalar> MechNetwork<K> {
    pub fn new() -> Self {
        MechNetwork {
            nodes: BTreeSet::new(),
            elements: Vec::new(),
            ports: Vec::new(),
        }
    }

    pub fn add_node(&mut self, n: NodeId) {
        self.nodes.insert(n);
    }

    /// Add an element with a strictly positive value.
    pub fn add_element(
        &mut self,
        kind: ElementKind,
        value: K,
        a: NodeId,
        b: NodeId,
    ) -> Result<(), NetError> {
        self.add_labeled_element(kind, value, a, b, None)
    }

    pub fn add_labeled_element(
        &mut self,
        kind: ElementKind,
        value: K,
        a: NodeId,
        b: NodeId,
        label: Option<String>,
    ) -> Result<(), NetError> {
        if a == b {
            return Err(NetError::SameEndpoints);
        }
        if value.is_zero() || value.is_negative() {
            return Err(NetError::NonpositiveValue);
        }
        self.nodes.insert(a);
        self.nodes.insert(b);
        self.elements.push(Element {
            kind,
            value,
            a,
            b,
            label,
        });
        Ok(())
    }

    /// Add an element, silently omitting it when the value is exactly zero.
    /// Synthesized element values are allowed to degenerate to zero; zero
    /// elements never appear in an emitted netlist.
    pub fn add_element_dropping_zero(
        &mut self,
        kind: ElementKind,
        value: K,
        a: NodeId,
        b: NodeId,
    ) -> Result<(), NetError> {
        if value.is_zero() {
            return Ok(());
        }
        self.add_element(kind, value, a, b)
    }

    pub fn add_port(&mut self, plus: NodeId, minus: NodeId) -> Result<(), NetError> {
        if plus == minus {
            return Err(NetError::SameEndpoints);
        }
        self.nodes.insert(plus);
        self.nodes.insert(minus);
        self.ports.push(Port { plus, minus });
        Ok(())
    }

    pub fn port_count(&self) -> usize {
        self.ports.len()
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn map_values<L: Scalar>(&self, f: impl Fn(&K) -> L) -> MechNetwork<L> {
        MechNetwork {
            nodes: self.nodes.clone(),
            elements: self
                .elements
                .iter()
                .map(|e| Element {
                    kind: e.kind,
                    value: f(&e.value),
                    a: e.a,
                    b: e.b,
                    label: e.label.clone(),
                })
                .collect(),
            ports: self.ports.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    kind: String,
    value: String,
    nodes: [NodeId; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct PortDoc {
    plus: NodeId,
    minus: NodeId,
}

#[derive(Serialize, Deserialize)]
struct NetlistDoc {
    nodes: Vec<NodeId>,
    elements: Vec<ElementDoc>,
    ports: Vec<PortDoc>,
}

impl MechNetwork<Rat> {
    /// Stable single-line netlist serialization. Values are exact rational
    /// strings.
    pub fn to_json(&self) -> String {
        let doc = NetlistDoc {
            nodes: self.nodes.iter().copied().collect(),
            elements: self
                .elements
                .iter()
                .map(|e| ElementDoc {
                    kind: e.kind.as_str().to_string(),
                    value: e.value.to_string(),
                    nodes: [e.a, e.b],
                    label: e.label.clone(),
                })
                .collect(),
            ports: self
                .ports
                .iter()
                .map(|p| PortDoc {
                    plus: p.plus,
                    minus: p.minus,
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("netlist serialization")
    }

    /// Parse a netlist, rejecting anything that is not an exact rational.
    pub fn from_json(text: &str) -> Result<Self, NetError> {
        let doc: NetlistDoc =
            serde_json::from_str(text).map_err(|e| NetError::BadNetlist(e.to_string()))?;
        let mut net = MechNetwork::new();
        for n in doc.nodes {
            net.add_node(n);
        }
        for e in doc.elements {
            let kind: ElementKind = e.kind.parse()?;
            let value: Rat = e
                .value
                .parse()
                .map_err(|_| NetError::BadNetlist(format!("bad element value {:?}", e.value)))?;
            net.add_labeled_element(kind, value, e.nodes[0], e.nodes[1], e.label)?;
        }
        for p in doc.ports {
            net.add_port(p.plus, p.minus)?;
        }
        Ok(net)
    }
}
