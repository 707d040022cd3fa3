//! The symbolic admittance oracle.
//!
//! For a network whose port edges extend to a spanning tree, the port
//! admittance matrix equals `F^T (B R B^T)^{-1} F`, where `[B, F]` is a
//! fundamental circuit matrix of the augmented graph and `R` is the diagonal
//! matrix of element impedances. The inverse is taken over the field of
//! rational functions by fraction-free (Bareiss) elimination on the
//! denominator-cleared polynomial system.
//!
//! This module is the ground truth the synthesis routines are verified
//! against, so it depends on nothing but the graph machinery and exact
//! polynomial arithmetic.

use crate::exact::{Poly, RationalFunction, Scalar};

use super::graph::{circuit_structure, circuit_structure_with_order, CircuitStructure};
use super::netlist::MechNetwork;
use super::NetError;

/// Fraction-free forward elimination of the augmented matrix `[m | rhs]`.
/// Returns `None` when `m` is singular.
fn bareiss_forward<K: Scalar>(aug: &mut [Vec<Poly<K>>], n: usize) -> Option<()> {
    let cols = if n == 0 { 0 } else { aug[0].len() };
    let mut prev = Poly::<K>::one();
    for k in 0..n {
        if aug[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !aug[r][k].is_zero())?;
            aug.swap(k, swap);
        }
        for i in k + 1..n {
            for j in k + 1..cols {
                let t = aug[k][k].mul(&aug[i][j]).sub(&aug[i][k].mul(&aug[k][j]));
                aug[i][j] = t.exact_div(&prev);
            }
            aug[i][k] = Poly::zero();
        }
        prev = aug[k][k].clone();
    }
    Some(())
}

/// Solve `m x = rhs` over the rational-function field.
fn bareiss_solve<K: Scalar>(
    m: Vec<Vec<Poly<K>>>,
    rhs: Vec<Vec<Poly<K>>>,
) -> Option<Vec<Vec<RationalFunction<K>>>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let n_rhs = rhs[0].len();
    let mut aug: Vec<Vec<Poly<K>>> = m
        .into_iter()
        .zip(rhs)
        .map(|(mut row, r)| {
            row.extend(r);
            row
        })
        .collect();
    bareiss_forward(&mut aug, n)?;

    let mut x: Vec<Vec<RationalFunction<K>>> =
        vec![vec![RationalFunction::zero(); n_rhs]; n];
    for i in (0..n).rev() {
        let pivot = RationalFunction::from_poly(aug[i][i].clone());
        for q in 0..n_rhs {
            let mut acc = RationalFunction::from_poly(aug[i][n + q].clone());
            for l in i + 1..n {
                if aug[i][l].is_zero() {
                    continue;
                }
                let term = RationalFunction::from_poly(aug[i][l].clone()).mul(&x[l][q]);
                acc = acc.sub(&term);
            }
            x[i][q] = acc.div(&pivot).expect("pivot nonzero after elimination");
        }
    }
    Some(x)
}

fn bareiss_nonsingular<K: Scalar>(m: Vec<Vec<Poly<K>>>) -> bool {
    let n = m.len();
    if n == 0 {
        return true;
    }
    let mut aug = m;
    bareiss_forward(&mut aug, n).is_some()
}

/// Denominator-cleared loop matrix: returns `(D, B R B^T * D)` where `D` is
/// the least common multiple of the element impedance denominators.
fn scaled_loop_matrix<K: Scalar>(
    net: &MechNetwork<K>,
    cs: &CircuitStructure,
) -> Result<(Poly<K>, Vec<Vec<Poly<K>>>), NetError> {
    let impedances: Vec<RationalFunction<K>> = net
        .elements
        .iter()
        .map(|e| e.impedance())
        .collect::<Result<_, _>>()?;
    let mut lcm = Poly::<K>::one();
    for z in &impedances {
        lcm = Poly::lcm(&lcm, z.den());
    }
    let scaled: Vec<Poly<K>> = impedances
        .iter()
        .map(|z| z.num().mul(&lcm.exact_div(z.den())))
        .collect();

    let rows = cs.b.len();
    let n_elems = net.elements.len();
    let mut m = vec![vec![Poly::<K>::zero(); rows]; rows];
    for j in 0..rows {
        for k in j..rows {
            let mut acc = Poly::<K>::zero();
            for i in 0..n_elems {
                let prod = i32::from(cs.b[j][i]) * i32::from(cs.b[k][i]);
                match prod {
                    0 => {}
                    1 => acc = acc.add(&scaled[i]),
                    -1 => acc = acc.sub(&scaled[i]),
                    _ => unreachable!(),
                }
            }
            m[j][k] = acc.clone();
            m[k][j] = acc;
        }
    }
    Ok((lcm, m))
}

/// Port admittance matrix, exact, using the deterministic spanning tree.
pub fn admittance_matrix<K: Scalar>(
    net: &MechNetwork<K>,
) -> Result<Vec<Vec<RationalFunction<K>>>, NetError> {
    let cs = circuit_structure(net, true)?;
    admittance_from_structure(net, &cs)
}

/// Admittance computed against an explicit element scan order (hence a
/// different spanning tree). The result must agree with
/// [`admittance_matrix`]; tests use this to check tree independence.
pub fn admittance_matrix_with_order<K: Scalar>(
    net: &MechNetwork<K>,
    element_order: &[usize],
) -> Result<Vec<Vec<RationalFunction<K>>>, NetError> {
    let cs = circuit_structure_with_order(net, true, Some(element_order))?;
    admittance_from_structure(net, &cs)
}

fn admittance_from_structure<K: Scalar>(
    net: &MechNetwork<K>,
    cs: &CircuitStructure,
) -> Result<Vec<Vec<RationalFunction<K>>>, NetError> {
    let n = net.ports.len();
    let rows = cs.b.len();
    if rows == 0 {
        // Every edge is a tree branch: port currents vanish identically.
        return Ok(vec![vec![RationalFunction::zero(); n]; n]);
    }
    let (lcm, m) = scaled_loop_matrix(net, cs)?;
    let rhs: Vec<Vec<Poly<K>>> = (0..rows)
        .map(|r| {
            (0..n)
                .map(|p| match cs.f[r][p] {
                    0 => Poly::zero(),
                    1 => Poly::one(),
                    -1 => Poly::one().neg(),
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();
    let x = bareiss_solve(m, rhs).ok_or_else(|| {
        NetError::InternalInvariant(
            "loop impedance matrix singular although ports extend to a tree".into(),
        )
    })?;

    let lcm_rf = RationalFunction::from_poly(lcm);
    let mut y = vec![vec![RationalFunction::<K>::zero(); n]; n];
    for p in 0..n {
        for q in p..n {
            let mut acc = RationalFunction::zero();
            for r in 0..rows {
                match cs.f[r][p] {
                    0 => {}
                    1 => acc = acc.add(&x[r][q]),
                    -1 => acc = acc.sub(&x[r][q]),
                    _ => unreachable!(),
                }
            }
            let val = acc.mul(&lcm_rf);
            y[p][q] = val.clone();
            y[q][p] = val;
        }
    }
    Ok(y)
}

/// Driving-point admittance of a one-port network.
pub fn driving_point<K: Scalar>(net: &MechNetwork<K>) -> Result<RationalFunction<K>, NetError> {
    if net.ports.len() != 1 {
        return Err(NetError::PortCountMismatch {
            expected: 1,
            got: net.ports.len(),
        });
    }
    Ok(admittance_matrix(net)?.remove(0).remove(0))
}

/// Direct solvability of the loop system `B R B^T`, computed without
/// assuming the ports fit in the spanning tree. Port edges that close
/// circuits simply become chords. Used to cross-check the tree criterion
/// for well-defined admittance.
pub fn loop_system_nonsingular<K: Scalar>(net: &MechNetwork<K>) -> Result<bool, NetError> {
    let cs = circuit_structure(net, false)?;
    if cs.b.is_empty() {
        return Ok(true);
    }
    let (_, m) = scaled_loop_matrix(net, &cs)?;
    Ok(bareiss_nonsingular(m))
}
