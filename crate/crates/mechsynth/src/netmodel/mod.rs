//! Netlist data model and the independent symbolic admittance oracle.
//!
//! Everything a synthesis routine emits is re-verified through this module
//! before it is reported; the oracle is the ground truth of the crate.

pub mod admittance;
pub mod graph;
pub mod netlist;

pub use admittance::{
    admittance_matrix, admittance_matrix_with_order, driving_point, loop_system_nonsingular,
};
pub use graph::{
    circuit_structure, classify_port_graph, is_connected, port_graph_extends_to_tree,
    CircuitStructure, EdgeId, PortGraphShape,
};
pub use netlist::{Element, ElementKind, MechNetwork, NodeId, Port};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetError {
    #[error("augmented graph is not connected")]
    DisconnectedGraph,
    #[error("admittance not well-defined: port edges contain a circuit")]
    NotWellDefined,
    #[error("port count mismatch: expected {expected}, got {got}")]
    PortCountMismatch { expected: usize, got: usize },
    #[error("element value must be strictly positive")]
    NonpositiveValue,
    #[error("port edges contain a circuit")]
    PortCircuit,
    #[error("element or port endpoints must be distinct")]
    SameEndpoints,
    #[error("bad netlist: {0}")]
    BadNetlist(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
