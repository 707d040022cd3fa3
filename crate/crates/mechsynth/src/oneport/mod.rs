//! One-port realization theory for networks of one damper, one inerter, and
//! springs: coefficient admissibility, the quartic- and cubic-form
//! classifiers with their synthesis routines, the Foster preamble for the
//! degenerate branch, the spring two-port lemma, and the realizability
//! region machinery.

pub mod foster;
pub mod region;
pub mod theorem5;
pub mod theorem6;
pub mod twoport;
pub mod wq;

pub use foster::{foster_synthesize, FosterError, SpTerm};
pub use region::{
    classify_arbitrary_springs, region_classify, region_map_rows, region_map_rows_seq,
    region_quantities, AtMostThreeBranch, RegionClass, RegionError, RegionPoint,
    RegionQuantities, SpringBudget,
};
pub use theorem5::{
    classify_theorem5, cond1_witnesses, fig2_topology, regenerate_fig2_catalog, synth_fig2,
    Cond1Witness, CoveringCase, Theorem5Branch, Theorem5Error, Theorem5Reject,
};
pub use theorem6::{
    classify_theorem6, synth_fig3, Fig3Network, ScaleMode, SqrtMode, Theorem6Error,
    Theorem6Outcome,
};
pub use twoport::{two_port_spring, TwoPortError, TwoPortSpringMatrix};
pub use wq::{build_g, w_quantities, WQuantities, WqError};
