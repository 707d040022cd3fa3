//! Decision and synthesis for three-port resistive (spring-analog) networks
//! with at most three elements on four nodes.
//!
//! A symmetric 3x3 matrix is realizable in this class iff it passes either
//! the L-tree test (port star) or the P-tree test (port path). Acceptance
//! produces a certificate, the certificate drives the synthesis, and every
//! synthesized netlist is re-verified against the admittance oracle before
//! it is returned.

mod enumerate;

pub use enumerate::{enumerate_small_networks, with_element_values};

use std::fmt;

use thiserror::Error;

use crate::exact::{Rat, RationalFunction};
use crate::netmodel::{admittance_matrix, ElementKind, MechNetwork, NetError};
use crate::paramount3::{sign_normalize, PortMatrix3, SignPattern, SignTarget};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("certificate does not match the matrix")]
    InvalidCertificate,
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error(transparent)]
    Net(#[from] NetError),
}

/// Accepted L-tree certificate: sign pattern, off-diagonal magnitudes,
/// diagonal slacks, and the count of exact zeros among those six quantities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LTreeCertificate {
    pub pattern: SignPattern,
    /// `|y12|, |y13|, |y23|`
    pub off: [Rat; 3],
    /// `y11 - |y12| - |y13|`, `y22 - |y12| - |y23|`, `y33 - |y13| - |y23|`
    pub slack: [Rat; 3],
    pub zero_count: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LTreeReject {
    pub product_nonpositive: bool,
    pub slacks_nonnegative: bool,
    pub zero_count: usize,
}

impl fmt::Display for LTreeReject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L-tree reject: off-diagonal product nonpositive={}, slacks nonnegative={}, zeros={} (need >= 3)",
            self.product_nonpositive, self.slacks_nonnegative, self.zero_count
        )
    }
}

fn ltree_quantities(m: &PortMatrix3) -> ([Rat; 3], [Rat; 3]) {
    let off = [m.y12.abs(), m.y13.abs(), m.y23.abs()];
    let slack = [
        &(&m.y11 - &off[0]) - &off[1],
        &(&m.y22 - &off[0]) - &off[2],
        &(&m.y33 - &off[1]) - &off[2],
    ];
    (off, slack)
}

/// L-tree realizability test.
pub fn check_ltree(m: &PortMatrix3) -> Result<LTreeCertificate, LTreeReject> {
    let product = &(&m.y12 * &m.y13) * &m.y23;
    let (off, slack) = ltree_quantities(m);
    let zero_count = off.iter().chain(slack.iter()).filter(|q| q.is_zero()).count();
    let product_nonpositive = !product.is_positive();
    let slacks_nonnegative = slack.iter().all(|s| !s.is_negative());
    if !(product_nonpositive && slacks_nonnegative && zero_count >= 3) {
        return Err(LTreeReject {
            product_nonpositive,
            slacks_nonnegative,
            zero_count,
        });
    }
    let (pattern, _) = sign_normalize(m, SignTarget::AllOffDiagNonPositive)
        .expect("nonpositive product admits a sign pattern");
    Ok(LTreeCertificate {
        pattern,
        off,
        slack,
        zero_count,
    })
}

/// Build the star-port network for an accepted L-tree certificate.
///
/// Ports run from nodes 1, 2, 3 to the common node 0, with polarities from
/// the certificate pattern; conductances `|y_ij|` sit between port nodes and
/// each slack between its port node and node 0. Zero values are omitted.
pub fn synth_ltree(
    cert: &LTreeCertificate,
    m: &PortMatrix3,
) -> Result<MechNetwork<Rat>, SynthError> {
    let recheck = check_ltree(m).map_err(|_| SynthError::InvalidCertificate)?;
    if recheck != *cert {
        return Err(SynthError::InvalidCertificate);
    }
    let mut net = MechNetwork::new();
    for (i, &d) in cert.pattern.d.iter().enumerate() {
        let node = (i + 1) as u32;
        if d > 0 {
            net.add_port(node, 0)?;
        } else {
            net.add_port(0, node)?;
        }
    }
    let pairs = [(1u32, 2u32), (1, 3), (2, 3)];
    for (g, (a, b)) in cert.off.iter().zip(pairs) {
        net.add_element_dropping_zero(ElementKind::Conductance, g.clone(), a, b)?;
    }
    for (i, g) in cert.slack.iter().enumerate() {
        net.add_element_dropping_zero(ElementKind::Conductance, g.clone(), (i + 1) as u32, 0)?;
    }
    Ok(net)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PTreeCase {
    A,
    B,
    C,
}

impl fmt::Display for PTreeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PTreeCase::A => write!(f, "a"),
            PTreeCase::B => write!(f, "b"),
            PTreeCase::C => write!(f, "c"),
        }
    }
}

/// Accepted P-tree certificate: the arrangement (row permutation and sign
/// pattern) under which the path inequalities hold, the matching case of
/// the path lemma, the six inequality slacks, and the equality count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PTreeCertificate {
    pub pattern: SignPattern,
    /// `arranged[i] = original index placed at path position i` (0-based).
    pub permutation: [usize; 3],
    pub case: PTreeCase,
    pub slacks: [Rat; 6],
    pub equality_count: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PTreeReject {
    pub product_nonnegative: bool,
    /// Highest equality count among arrangements whose slacks were all
    /// non-negative; `None` when no arrangement was feasible.
    pub best_equality_count: Option<usize>,
}

impl fmt::Display for PTreeReject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P-tree reject: off-diagonal product nonnegative={}, best equality count={:?} (need >= 3)",
            self.product_nonnegative, self.best_equality_count
        )
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// The six path quantities for an arranged matrix; these are exactly the
/// candidate conductances of the path realization.
fn ptree_quantities(a: &PortMatrix3) -> [Rat; 6] {
    [
        &a.y11 - &a.y12,
        &a.y12 - &a.y13,
        a.y13.clone(),
        &(&a.y22 - &a.y23) - &(&a.y12 - &a.y13),
        &a.y23 - &a.y13,
        &a.y33 - &a.y23,
    ]
}

fn case_for_permutation(perm: &[usize; 3]) -> PTreeCase {
    let outer = (perm[0].min(perm[2]), perm[0].max(perm[2]));
    match outer {
        (0, 2) => PTreeCase::A,
        (0, 1) => PTreeCase::B,
        (1, 2) => PTreeCase::C,
        _ => unreachable!(),
    }
}

/// P-tree realizability test. Searches permutations in lexicographic order
/// and sign patterns in Gray order; returns the first valid arrangement.
pub fn check_ptree(m: &PortMatrix3) -> Result<PTreeCertificate, PTreeReject> {
    let mut best: Option<usize> = None;
    for perm in &PERMUTATIONS {
        let permuted = m.permuted(perm);
        for pattern in SignPattern::ALL {
            let arranged = pattern.apply(&permuted);
            let slacks = ptree_quantities(&arranged);
            if slacks.iter().any(Rat::is_negative) {
                continue;
            }
            let equality_count = slacks.iter().filter(|q| q.is_zero()).count();
            if equality_count >= 3 {
                return Ok(PTreeCertificate {
                    pattern,
                    permutation: *perm,
                    case: case_for_permutation(perm),
                    slacks,
                    equality_count,
                });
            }
            best = Some(best.map_or(equality_count, |b: usize| b.max(equality_count)));
        }
    }
    let product = &(&m.y12 * &m.y13) * &m.y23;
    Err(PTreeReject {
        product_nonnegative: !product.is_negative(),
        best_equality_count: best,
    })
}

/// Build the path-port network for an accepted P-tree certificate.
///
/// The arranged matrix is realized on the path 1-2-3-4 with ports
/// `(1,2), (2,3), (3,4)` oriented the same direction; conductances are the
/// six slack quantities. Arrangement is then undone through port order and
/// polarity. Zero values are omitted.
pub fn synth_ptree(
    cert: &PTreeCertificate,
    m: &PortMatrix3,
) -> Result<MechNetwork<Rat>, SynthError> {
    let recheck = check_ptree(m).map_err(|_| SynthError::InvalidCertificate)?;
    if recheck != *cert {
        return Err(SynthError::InvalidCertificate);
    }
    let mut net = MechNetwork::new();
    // Port slot for original index cert.permutation[k] is path edge k.
    let mut port_edges: [(u32, u32); 3] = [(0, 0); 3];
    for (k, &orig) in cert.permutation.iter().enumerate() {
        let (lo, hi) = ((k + 1) as u32, (k + 2) as u32);
        port_edges[orig] = if cert.pattern.d[k] > 0 { (lo, hi) } else { (hi, lo) };
    }
    for (plus, minus) in port_edges {
        net.add_port(plus, minus)?;
    }
    let pairs = [(1u32, 2u32), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    for (g, (a, b)) in cert.slacks.iter().zip(pairs) {
        net.add_element_dropping_zero(ElementKind::Conductance, g.clone(), a, b)?;
    }
    Ok(net)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Branch {
    LTree(LTreeCertificate),
    PTree(PTreeCertificate),
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::LTree(_) => "l-tree",
            Branch::PTree(_) => "p-tree",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SynthesisResult {
    pub branch: Branch,
    pub network: MechNetwork<Rat>,
    /// Always true on return: the netlist was checked against the oracle.
    pub verified: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Theorem1Reject {
    pub ltree: LTreeReject,
    pub ptree: PTreeReject,
}

impl fmt::Display for Theorem1Reject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}", self.ltree, self.ptree)
    }
}

/// Compare an oracle admittance matrix (rational functions) against a
/// constant target matrix, entry for entry.
pub fn oracle_matches_constant(
    y: &[Vec<RationalFunction<Rat>>],
    m: &PortMatrix3,
) -> bool {
    for i in 0..3 {
        for j in 0..3 {
            if y[i][j] != RationalFunction::constant(m.get(i, j)) {
                return false;
            }
        }
    }
    true
}

/// End-to-end decision and synthesis: try the L-tree test, then the P-tree
/// test; on acceptance synthesize and verify against the admittance oracle
/// before returning.
pub fn theorem1(m: &PortMatrix3) -> Result<Result<SynthesisResult, Theorem1Reject>, SynthError> {
    let ltree = match check_ltree(m) {
        Ok(cert) => {
            let net = synth_ltree(&cert, m)?;
            verify_against(m, &net)?;
            return Ok(Ok(SynthesisResult {
                branch: Branch::LTree(cert),
                network: net,
                verified: true,
            }));
        }
        Err(reject) => reject,
    };
    let ptree = match check_ptree(m) {
        Ok(cert) => {
            let net = synth_ptree(&cert, m)?;
            verify_against(m, &net)?;
            return Ok(Ok(SynthesisResult {
                branch: Branch::PTree(cert),
                network: net,
                verified: true,
            }));
        }
        Err(reject) => reject,
    };
    Ok(Err(Theorem1Reject { ltree, ptree }))
}

fn verify_against(m: &PortMatrix3, net: &MechNetwork<Rat>) -> Result<(), SynthError> {
    debug_assert!(net.element_count() <= 3);
    debug_assert!(net.nodes.len() <= 4);
    let y = admittance_matrix(net)?;
    if !oracle_matches_constant(&y, m) {
        return Err(SynthError::OracleMismatch(format!(
            "synthesized network admittance does not reproduce {m}"
        )));
    }
    Ok(())
}
