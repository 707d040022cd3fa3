//! Foster-preamble synthesis of series-parallel one-ports.
//!
//! Bounded search over preamble step orderings: remove an admittance pole
//! at zero (parallel spring) or at infinity (parallel inerter), an
//! impedance pole at zero (series inerter) or at infinity (series spring),
//! or an exact constant (damper, parallel from the admittance or series
//! from the impedance). The element census (at most three springs, one
//! damper, one inerter) is enforced at every node and the first ordering
//! that terminates exactly wins.

use thiserror::Error;

use crate::exact::{Poly, Rat, RationalFunction};
use crate::netmodel::{ElementKind, MechNetwork, NetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FosterError {
    #[error("no preamble ordering realizes this admittance within the element census")]
    CensusExceeded,
    #[error("admittance must be nonzero")]
    ZeroAdmittance,
    #[error(transparent)]
    Net(#[from] NetError),
}

/// Series-parallel composition tree over single elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpTerm {
    Element(ElementKind, Rat),
    Series(Vec<SpTerm>),
    Parallel(Vec<SpTerm>),
}

impl SpTerm {
    /// Admittance by the series/parallel composition laws. This is an
    /// independent route from the loop-analysis oracle and is used to
    /// cross-check it.
    pub fn admittance(&self) -> RationalFunction<Rat> {
        match self {
            SpTerm::Element(kind, value) => element_admittance(*kind, value),
            SpTerm::Parallel(children) => children
                .iter()
                .map(SpTerm::admittance)
                .fold(RationalFunction::zero(), |acc, y| acc.add(&y)),
            SpTerm::Series(children) => {
                let z = children
                    .iter()
                    .map(|c| c.admittance().inv().expect("nonzero branch admittance"))
                    .fold(RationalFunction::zero(), |acc, z| acc.add(&z));
                z.inv().expect("nonzero series impedance")
            }
        }
    }

    /// Element counts as (springs, dampers, inerters).
    pub fn census(&self) -> (usize, usize, usize) {
        match self {
            SpTerm::Element(kind, _) => match kind {
                ElementKind::Spring => (1, 0, 0),
                ElementKind::Damper => (0, 1, 0),
                ElementKind::Inerter => (0, 0, 1),
                ElementKind::Conductance => (0, 0, 0),
            },
            SpTerm::Series(children) | SpTerm::Parallel(children) => children
                .iter()
                .map(SpTerm::census)
                .fold((0, 0, 0), |(a, b, c), (x, y, z)| (a + x, b + y, c + z)),
        }
    }

    /// Flatten into a one-port netlist across nodes (1, 0).
    pub fn to_network(&self) -> Result<MechNetwork<Rat>, NetError> {
        let mut net = MechNetwork::new();
        net.add_port(1, 0)?;
        let mut next_node = 2u32;
        build(self, 1, 0, &mut net, &mut next_node)?;
        Ok(net)
    }
}

fn element_admittance(kind: ElementKind, value: &Rat) -> RationalFunction<Rat> {
    let v = Poly::constant(value.clone());
    let s = Poly::<Rat>::var();
    match kind {
        ElementKind::Spring => RationalFunction::new(v, s).expect("s is nonzero"),
        ElementKind::Damper | ElementKind::Conductance => RationalFunction::from_poly(v),
        ElementKind::Inerter => RationalFunction::from_poly(v.mul(&s)),
    }
}

fn build(
    term: &SpTerm,
    plus: u32,
    minus: u32,
    net: &mut MechNetwork<Rat>,
    next_node: &mut u32,
) -> Result<(), NetError> {
    match term {
        SpTerm::Element(kind, value) => net.add_element(*kind, value.clone(), plus, minus),
        SpTerm::Parallel(children) => {
            for c in children {
                build(c, plus, minus, net, next_node)?;
            }
            Ok(())
        }
        SpTerm::Series(children) => {
            let mut from = plus;
            for (i, c) in children.iter().enumerate() {
                let to = if i + 1 == children.len() {
                    minus
                } else {
                    let n = *next_node;
                    *next_node += 1;
                    n
                };
                build(c, from, to, net, next_node)?;
                from = to;
            }
            Ok(())
        }
    }
}

#[derive(Clone, Copy)]
struct Census {
    springs: usize,
    dampers: usize,
    inerters: usize,
}

impl Census {
    fn full() -> Self {
        Census {
            springs: 3,
            dampers: 1,
            inerters: 1,
        }
    }

    fn take(&self, kind: ElementKind) -> Option<Census> {
        let mut c = *self;
        let slot = match kind {
            ElementKind::Spring => &mut c.springs,
            ElementKind::Damper => &mut c.dampers,
            ElementKind::Inerter => &mut c.inerters,
            ElementKind::Conductance => return None,
        };
        if *slot == 0 {
            None
        } else {
            *slot -= 1;
            Some(c)
        }
    }
}

/// Residue of a simple admittance pole at `s = 0`, when present. Search
/// remainders need not be positive-real, so a higher-order pole can occur;
/// no single element removes one, and `None` prunes that path.
fn pole_at_zero(y: &RationalFunction<Rat>) -> Option<Rat> {
    if y.is_zero() || !y.den().constant_term().is_zero() {
        return None;
    }
    // den = s * d1 with num(0) != 0 by coprimality.
    let d1 = y.den().exact_div(&Poly::var());
    let d1_at_zero = d1.constant_term();
    if d1_at_zero.is_zero() {
        return None;
    }
    Some(&y.num().constant_term() / &d1_at_zero)
}

/// Coefficient of the admittance pole at infinity, when present.
fn pole_at_infinity(y: &RationalFunction<Rat>) -> Option<Rat> {
    let dn = y.num().degree()?;
    let dd = y.den().degree().expect("nonzero denominator");
    if dn == dd + 1 {
        // Denominator is monic.
        Some(y.num().leading().unwrap().clone())
    } else {
        None
    }
}

/// Finite value at infinity, when degrees match.
fn value_at_infinity(y: &RationalFunction<Rat>) -> Option<Rat> {
    let dn = y.num().degree()?;
    let dd = y.den().degree().expect("nonzero denominator");
    if dn == dd {
        Some(y.num().leading().unwrap().clone())
    } else {
        None
    }
}

/// Finite value at zero, when there is no pole there.
fn value_at_zero(y: &RationalFunction<Rat>) -> Option<Rat> {
    let d0 = y.den().constant_term();
    if d0.is_zero() {
        None
    } else {
        Some(&y.num().constant_term() / &d0)
    }
}

/// Recognize a single element: `k/s`, `c`, or `b*s` with positive value.
fn as_single_element(y: &RationalFunction<Rat>) -> Option<(ElementKind, Rat)> {
    let dn = y.num().degree()?;
    let dd = y.den().degree().expect("nonzero denominator");
    if dn == 0 && dd == 1 && y.den().constant_term().is_zero() {
        let k = y.num().constant_term();
        return k.is_positive().then_some((ElementKind::Spring, k));
    }
    if dn == 0 && dd == 0 {
        let c = y.num().constant_term();
        return c.is_positive().then_some((ElementKind::Damper, c));
    }
    if dn == 1 && dd == 0 && y.num().constant_term().is_zero() {
        let b = y.num().leading().unwrap().clone();
        return b.is_positive().then_some((ElementKind::Inerter, b));
    }
    None
}

fn sub_parallel(y: &RationalFunction<Rat>, kind: ElementKind, v: &Rat) -> RationalFunction<Rat> {
    y.sub(&element_admittance(kind, v))
}

const MAX_DEPTH: usize = 6;

fn search(y: &RationalFunction<Rat>, census: Census, depth: usize) -> Option<SpTerm> {
    if let Some((kind, value)) = as_single_element(y) {
        if census.take(kind).is_some() {
            return Some(SpTerm::Element(kind, value));
        }
    }
    if depth == 0 {
        return None;
    }

    // Parallel extractions from the admittance.
    let mut parallel_moves: Vec<(ElementKind, Rat)> = Vec::new();
    if let Some(k) = pole_at_zero(y) {
        if k.is_positive() {
            parallel_moves.push((ElementKind::Spring, k));
        }
    }
    if let Some(b) = pole_at_infinity(y) {
        if b.is_positive() {
            parallel_moves.push((ElementKind::Inerter, b));
        }
    }
    for c in [value_at_infinity(y), value_at_zero(y)].into_iter().flatten() {
        if c.is_positive() && !parallel_moves.iter().any(|(k, v)| *k == ElementKind::Damper && *v == c) {
            parallel_moves.push((ElementKind::Damper, c));
        }
    }
    for (kind, value) in parallel_moves {
        let Some(rest_census) = census.take(kind) else {
            continue;
        };
        let rest = sub_parallel(y, kind, &value);
        if rest.is_zero() {
            return Some(SpTerm::Element(kind, value));
        }
        if let Some(rest_term) = search(&rest, rest_census, depth - 1) {
            let mut children = vec![SpTerm::Element(kind, value)];
            match rest_term {
                SpTerm::Parallel(grand) => children.extend(grand),
                other => children.push(other),
            }
            return Some(SpTerm::Parallel(children));
        }
    }

    // Series extractions from the impedance.
    let z = y.inv().expect("nonzero admittance");
    let mut series_moves: Vec<(ElementKind, Rat)> = Vec::new();
    if let Some(r) = pole_at_infinity(&z) {
        // Z ~ r*s: a series spring with k = 1/r.
        if r.is_positive() {
            series_moves.push((ElementKind::Spring, r.recip().unwrap()));
        }
    }
    if let Some(r) = pole_at_zero(&z) {
        // Z ~ r/s: a series inerter with b = 1/r.
        if r.is_positive() {
            series_moves.push((ElementKind::Inerter, r.recip().unwrap()));
        }
    }
    for z0 in [value_at_infinity(&z), value_at_zero(&z)].into_iter().flatten() {
        if z0.is_positive() {
            let c = z0.recip().unwrap();
            if !series_moves.iter().any(|(k, v)| *k == ElementKind::Damper && *v == c) {
                series_moves.push((ElementKind::Damper, c));
            }
        }
    }
    for (kind, value) in series_moves {
        let Some(rest_census) = census.take(kind) else {
            continue;
        };
        let z_rest = z.sub(&element_admittance(kind, &value).inv().expect("positive value"));
        if z_rest.is_zero() {
            return Some(SpTerm::Element(kind, value));
        }
        let Ok(y_rest) = z_rest.inv() else {
            continue;
        };
        if let Some(rest_term) = search(&y_rest, rest_census, depth - 1) {
            let mut children = vec![SpTerm::Element(kind, value)];
            match rest_term {
                SpTerm::Series(grand) => children.extend(grand),
                other => children.push(other),
            }
            return Some(SpTerm::Series(children));
        }
    }
    None
}

/// Synthesize a series-parallel network with at most three springs, one
/// damper, and one inerter whose driving-point admittance equals `y`
/// exactly. The composition tree found by the preamble search is flattened
/// to a netlist; the caller re-verifies it through the oracle.
pub fn foster_synthesize(y: &RationalFunction<Rat>) -> Result<MechNetwork<Rat>, FosterError> {
    if y.is_zero() {
        return Err(FosterError::ZeroAdmittance);
    }
    let term = search(y, Census::full(), MAX_DEPTH).ok_or(FosterError::CensusExceeded)?;
    debug_assert_eq!(term.admittance(), *y);
    Ok(term.to_network()?)
}
