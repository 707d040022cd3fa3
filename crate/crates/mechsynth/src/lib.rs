//! Exact-arithmetic synthesis and verification of passive mechanical
//! networks built from springs, dampers, and inerters.
//!
//! The crate decides realizability conditions for small network classes,
//! emits concrete netlists with exact rational element values, and verifies
//! every synthesized network against an independent symbolic admittance
//! oracle based on loop analysis of the augmented graph. All arithmetic is
//! exact: big-integer rationals, optionally extended by a single square
//! root. There is no floating point on any decision path.
//!
//! The `parallel` feature (on by default) runs the embarrassingly parallel
//! sweeps — region maps, batch verification, enumeration — on a rayon pool;
//! without it everything falls back to sequential loops with identical
//! results.
//!
//! ```
//! use mechsynth::paramount3::PortMatrix3;
//! use mechsynth::resistive3::theorem1;
//! use mechsynth::netmodel::admittance_matrix;
//!
//! // Decide a three-port admittance and re-check the synthesized netlist.
//! let m = PortMatrix3::from_text("[[1,1,0],[1,2,-1],[0,-1,1]]").unwrap();
//! let result = theorem1(&m).unwrap().expect("realizable");
//! assert_eq!(result.network.element_count(), 2);
//! let y = admittance_matrix(&result.network).unwrap();
//! assert_eq!(y[1][2].to_string(), "-1");
//! ```

pub(crate) mod canon;
pub mod exact;
pub mod netmodel;
pub mod oneport;
pub mod par;
pub mod paramount3;
pub mod resistive3;

pub use exact::{CoefficientVector, Poly, Quad, Rat, RationalFunction, Scalar};
pub use netmodel::{Element, ElementKind, MechNetwork, Port};
pub use paramount3::PortMatrix3;
