//! Two-port spring networks: any well-defined spring two-port admittance is
//! `(1/s) K` with paramount `K`, realizable by three springs, flipping one
//! port polarity when the coupling entry is negative.

use thiserror::Error;

use crate::exact::{Rat, RationalFunction};
use crate::netmodel::{admittance_matrix, ElementKind, MechNetwork, NetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwoPortError {
    #[error("matrix is not paramount: need K11 >= |K12| and K22 >= |K12|")]
    NotParamount,
    #[error(transparent)]
    Net(#[from] NetError),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoPortSpringMatrix {
    pub k11: Rat,
    pub k12: Rat,
    pub k22: Rat,
}

impl TwoPortSpringMatrix {
    pub fn is_paramount(&self) -> bool {
        self.k11 >= self.k12.abs() && self.k22 >= self.k12.abs()
    }
}

/// Realize `Y = (1/s) K` by the three-spring two-port:
/// `k1 = K11 - |K12|` across port 1, `k2 = |K12|` bridging, and
/// `k3 = K22 - |K12|` across port 2. A negative coupling is recorded by
/// flipping port 2. Zero-valued springs are omitted.
pub fn two_port_spring(k: &TwoPortSpringMatrix) -> Result<MechNetwork<Rat>, TwoPortError> {
    if !k.is_paramount() {
        return Err(TwoPortError::NotParamount);
    }
    let coupling = k.k12.abs();
    let k1 = &k.k11 - &coupling;
    let k3 = &k.k22 - &coupling;
    let mut net = MechNetwork::new();
    net.add_port(1, 0)?;
    if k.k12.is_negative() {
        net.add_port(2, 0)?;
    } else {
        net.add_port(0, 2)?;
    }
    net.add_element_dropping_zero(ElementKind::Spring, k1, 1, 0)?;
    net.add_element_dropping_zero(ElementKind::Spring, coupling, 1, 2)?;
    net.add_element_dropping_zero(ElementKind::Spring, k3, 2, 0)?;

    let y = admittance_matrix(&net)?;
    let s = RationalFunction::var();
    let expected = |v: &Rat| RationalFunction::constant(v.clone()).div(&s).unwrap();
    let target = [
        [expected(&k.k11), expected(&k.k12)],
        [expected(&k.k12), expected(&k.k22)],
    ];
    for i in 0..2 {
        for j in 0..2 {
            if y[i][j] != target[i][j] {
                return Err(TwoPortError::OracleMismatch(format!(
                    "entry ({i},{j}) is {} instead of {}",
                    y[i][j], target[i][j]
                )));
            }
        }
    }
    Ok(net)
}
