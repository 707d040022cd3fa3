//! Realizability regions for one damper, one inerter, and springs.
//!
//! Over the spring-matrix parameters, the set realizable with an arbitrary
//! number of springs is cut out by five sign conditions on the entries of a
//! non-negative definite matrix; the subset needing at most three springs is
//! the union of the zero-minor locus, the lambda boundaries, and the m-zero
//! segments. The region map enumerates a rational lattice in the
//! `(G5, G6)` plane and classifies every point exactly.

use crate::exact::{CoefficientVector, Rat};
use crate::par;
use crate::paramount3::PortMatrix3;

use super::theorem5::{classify_theorem5, Theorem5Branch, Theorem5Error};
use super::theorem6::{classify_theorem6, ScaleMode, Theorem6Error, Theorem6Outcome};
use super::wq::w_quantities;

/// The ratio gaps and boundary quantities of a spring matrix, with the
/// matrix entries named `G1..G6` as `(y11, y22, y33, y12, y13, y23)`.
/// The m-ratios require their divisor entry to be nonzero; a zero divisor
/// is itself a zero-minor witness and is reported as such.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionQuantities {
    /// `m1 = G6`
    pub m1: Rat,
    /// `m1_dag = G5`
    pub m1_dag: Rat,
    /// `m2 = G2 - G4 G6 / G5`
    pub m2: Option<Rat>,
    /// `m2_dag = G1 - G4 G5 / G6`
    pub m2_dag: Option<Rat>,
    /// `m3 = G3 - G5 G6 / G4`
    pub m3: Option<Rat>,
    /// `l1 = G1G2G3 + G4G5G6 - G1G6^2 - G2G5^2`
    pub lambda1: Rat,
    /// `l2 = G1G2G3 + G4G5G6 - G1G6^2 - G3G4^2`
    pub lambda2: Rat,
    /// `l3 = G1G2G3 + G4G5G6 - G3G4^2 - G2G5^2`
    pub lambda3: Rat,
    /// `l4 = det(G)`
    pub lambda4: Rat,
}

pub fn region_quantities(g: &PortMatrix3) -> RegionQuantities {
    let (g1, g2, g3) = (&g.y11, &g.y22, &g.y33);
    let (g4, g5, g6) = (&g.y12, &g.y13, &g.y23);
    let base = &(&(g1 * g2) * g3) + &(&(g4 * g5) * g6);
    let t16 = g1 * &(g6 * g6);
    let t25 = g2 * &(g5 * g5);
    let t34 = g3 * &(g4 * g4);
    let ratio = |num: Rat, den: &Rat, diag: &Rat| -> Option<Rat> {
        if den.is_zero() {
            None
        } else {
            Some(diag - &(&num / den))
        }
    };
    RegionQuantities {
        m1: g6.clone(),
        m1_dag: g5.clone(),
        m2: ratio(g4 * g6, g5, g2),
        m2_dag: ratio(g4 * g5, g6, g1),
        m3: ratio(g5 * g6, g4, g3),
        lambda1: &(&base - &t16) - &t25,
        lambda2: &(&base - &t16) - &t34,
        lambda3: &(&base - &t34) - &t25,
        lambda4: g.det(),
    }
}

/// Point classification on the realizability map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RegionClass {
    NotRealizable,
    ArbitrarySprings,
    AtMostThreeBoundary,
    AtMostThreeSegment,
}

impl RegionClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegionClass::NotRealizable => "not-realizable",
            RegionClass::ArbitrarySprings => "arbitrary-springs",
            RegionClass::AtMostThreeBoundary => "at-most-three-boundary",
            RegionClass::AtMostThreeSegment => "at-most-three-interior-segment",
        }
    }
}

/// First zero among the first- and second-order minors, in a fixed order
/// that names the boundary lambdas before the segment quantities.
fn zero_minor_witness(g: &PortMatrix3, q: &RegionQuantities) -> Option<&'static str> {
    let product = &(&g.y12 * &g.y13) * &g.y23;
    // Lambda boundaries subsume covering-case equalities.
    if product.is_positive() {
        for (l, name) in [
            (&q.lambda1, "lambda1"),
            (&q.lambda2, "lambda2"),
            (&q.lambda3, "lambda3"),
        ] {
            if l.is_zero() {
                return Some(name);
            }
        }
    }
    if product.is_negative() && q.lambda4.is_zero() {
        return Some("lambda4");
    }
    // m quantities: zero ratio gaps and zero divisors.
    if q.m1.is_zero() {
        return Some("m1");
    }
    if q.m1_dag.is_zero() {
        return Some("m1d");
    }
    if g.y12.is_zero() {
        return Some("g4");
    }
    match (&q.m2, &q.m2_dag, &q.m3) {
        (Some(m2), _, _) if m2.is_zero() => return Some("m2"),
        _ => {}
    }
    if let Some(m2d) = &q.m2_dag {
        if m2d.is_zero() {
            return Some("m2d");
        }
    }
    if let Some(m3) = &q.m3 {
        if m3.is_zero() {
            return Some("m3");
        }
    }
    // Remaining first/second-order minors.
    let alpha2 = &(&g.y11 * &g.y22) - &(&g.y12 * &g.y12);
    let alpha1 = &(&g.y11 * &g.y33) - &(&g.y13 * &g.y13);
    let beta1 = &(&g.y22 * &g.y33) - &(&g.y23 * &g.y23);
    for (v, name) in [
        (&g.y11, "g1"),
        (&g.y22, "g2"),
        (&g.y33, "g3"),
        (&alpha2, "alpha2"),
        (&alpha1, "alpha1"),
        (&beta1, "beta1"),
    ] {
        if v.is_zero() {
            return Some(name);
        }
    }
    None
}

/// Whether the at-most-three class holds beyond the zero-minor locus: a
/// vanishing lambda with the matching sign of `G4 G5 G6`.
fn lambda_witness(g: &PortMatrix3, q: &RegionQuantities) -> Option<&'static str> {
    let product = &(&g.y12 * &g.y13) * &g.y23;
    if product.is_positive() {
        for (l, name) in [
            (&q.lambda1, "lambda1"),
            (&q.lambda2, "lambda2"),
            (&q.lambda3, "lambda3"),
        ] {
            if l.is_zero() {
                return Some(name);
            }
        }
    }
    if product.is_negative() && q.lambda4.is_zero() {
        return Some("lambda4");
    }
    None
}

fn first_negative_principal_minor(g: &PortMatrix3) -> &'static str {
    let alpha2 = &(&g.y11 * &g.y22) - &(&g.y12 * &g.y12);
    let alpha1 = &(&g.y11 * &g.y33) - &(&g.y13 * &g.y13);
    let beta1 = &(&g.y22 * &g.y33) - &(&g.y23 * &g.y23);
    for (v, name) in [
        (&g.y11, "g1"),
        (&g.y22, "g2"),
        (&g.y33, "g3"),
        (&alpha2, "alpha2"),
        (&alpha1, "alpha1"),
        (&beta1, "beta1"),
        (&g.det(), "lambda4"),
    ] {
        if v.is_negative() {
            return name;
        }
    }
    unreachable!("called only when some principal minor is negative")
}

/// Five strict realizability conditions for an arbitrary number of springs.
fn arbitrary_condition(g: &PortMatrix3, q: &RegionQuantities) -> Option<u8> {
    let product = &(&g.y12 * &g.y13) * &g.y23;
    if product.is_negative() {
        return Some(1);
    }
    if !product.is_positive() {
        return None;
    }
    let m2 = q.m2.as_ref().expect("G5 != 0 when the product is nonzero");
    let m2d = q.m2_dag.as_ref().expect("G6 != 0");
    let m3 = q.m3.as_ref().expect("G4 != 0");
    if m2d.is_positive() && m2.is_positive() && m3.is_positive() {
        return Some(2);
    }
    if m3.is_negative() && !q.lambda1.is_negative() {
        return Some(3);
    }
    if m2.is_negative() && !q.lambda2.is_negative() {
        return Some(4);
    }
    if m2d.is_negative() && !q.lambda3.is_negative() {
        return Some(5);
    }
    None
}

/// Exact classification of a spring matrix on the realizability map.
pub fn region_classify(g: &PortMatrix3) -> (RegionClass, String, RegionQuantities) {
    let q = region_quantities(g);
    let psd = {
        let alpha2 = &(&g.y11 * &g.y22) - &(&g.y12 * &g.y12);
        let alpha1 = &(&g.y11 * &g.y33) - &(&g.y13 * &g.y13);
        let beta1 = &(&g.y22 * &g.y33) - &(&g.y23 * &g.y23);
        !g.y11.is_negative()
            && !g.y22.is_negative()
            && !g.y33.is_negative()
            && !alpha2.is_negative()
            && !alpha1.is_negative()
            && !beta1.is_negative()
            && !q.lambda4.is_negative()
    };
    if !psd {
        return (
            RegionClass::NotRealizable,
            first_negative_principal_minor(g).to_string(),
            q,
        );
    }
    if let Some(witness) = lambda_witness(g, &q) {
        return (RegionClass::AtMostThreeBoundary, witness.to_string(), q);
    }
    if let Some(witness) = zero_minor_witness(g, &q) {
        return (RegionClass::AtMostThreeSegment, witness.to_string(), q);
    }
    if let Some(cond) = arbitrary_condition(g, &q) {
        return (RegionClass::ArbitrarySprings, format!("cond{cond}"), q);
    }
    (RegionClass::NotRealizable, "none".to_string(), q)
}

/// One classified lattice point of the region map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionPoint {
    pub g5: Rat,
    pub g6: Rat,
    pub class: RegionClass,
    pub witness: String,
}

fn lattice(lo: &Rat, hi: &Rat, grid: usize) -> Vec<Rat> {
    assert!(grid >= 2, "grid must have at least two points per axis");
    let span = hi - lo;
    let steps = Rat::from_int(grid as i64 - 1);
    (0..grid)
        .map(|i| lo + &(&(&span * &Rat::from_int(i as i64)) / &steps))
        .collect()
}

fn classify_row(
    g1: &Rat,
    g2: &Rat,
    g3: &Rat,
    g4: &Rat,
    g5: &Rat,
    g6s: &[Rat],
) -> Vec<RegionPoint> {
    g6s.iter()
        .map(|g6| {
            let g = PortMatrix3::new(
                g1.clone(),
                g2.clone(),
                g3.clone(),
                g4.clone(),
                g5.clone(),
                g6.clone(),
            );
            let (class, witness, _) = region_classify(&g);
            RegionPoint {
                g5: g5.clone(),
                g6: g6.clone(),
                class,
                witness,
            }
        })
        .collect()
}

/// Classify every point of the `(G5, G6)` lattice with the diagonal and
/// `G4` fixed. Rows are independent and fan out on the rayon pool when the
/// `parallel` feature is on; output order is row-major either way.
pub fn region_map_rows(
    g1: &Rat,
    g2: &Rat,
    g3: &Rat,
    g4: &Rat,
    grid: usize,
    lo: &Rat,
    hi: &Rat,
) -> Vec<RegionPoint> {
    let axis = lattice(lo, hi, grid);
    let rows = par::map_collect(axis.clone(), |g5| {
        classify_row(g1, g2, g3, g4, &g5, &axis)
    });
    rows.into_iter().flatten().collect()
}

/// Always-sequential twin of [`region_map_rows`] for benchmarking.
pub fn region_map_rows_seq(
    g1: &Rat,
    g2: &Rat,
    g3: &Rat,
    g4: &Rat,
    grid: usize,
    lo: &Rat,
    hi: &Rat,
) -> Vec<RegionPoint> {
    let axis = lattice(lo, hi, grid);
    let rows = par::map_collect_seq(axis.clone(), |g5| {
        classify_row(g1, g2, g3, g4, &g5, &axis)
    });
    rows.into_iter().flatten().collect()
}

/// Realizability with one damper, one inerter, and springs, classified from
/// a coefficient vector of either form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpringBudget {
    /// Realizable with at most three springs.
    AtMostThree(AtMostThreeBranch),
    /// Realizable, but only with more than three springs.
    ArbitraryOnly(u8),
    NotRealizable,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AtMostThreeBranch {
    Quartic(Theorem5Branch),
    /// Cubic-form condition index and witness scale.
    Cubic(u8, Rat),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegionError {
    #[error(transparent)]
    Quartic(#[from] Theorem5Error),
    #[error(transparent)]
    Cubic(#[from] Theorem6Error),
}

/// Decide the spring budget of a coefficient vector: for the quartic form,
/// admissibility plus the five strict conditions, with the at-most-three
/// subset detected by the quartic classifier; the cubic form never needs
/// more than three springs.
pub fn classify_arbitrary_springs(cv: &CoefficientVector) -> Result<SpringBudget, RegionError> {
    if cv.beta4 == 0 {
        return match classify_theorem6(cv, ScaleMode::ScaleSearch)? {
            Theorem6Outcome::Accepted { condition, lambda } => Ok(SpringBudget::AtMostThree(
                AtMostThreeBranch::Cubic(condition, lambda),
            )),
            Theorem6Outcome::Rejected => Ok(SpringBudget::NotRealizable),
        };
    }
    match classify_theorem5(cv)? {
        Ok(branch) => Ok(SpringBudget::AtMostThree(AtMostThreeBranch::Quartic(
            branch,
        ))),
        Err(reject) => {
            if !reject.admissible {
                return Ok(SpringBudget::NotRealizable);
            }
            let wq = w_quantities(cv).expect("quartic form checked");
            // Admissible and Condition-1-free, so every W_i is nonzero and
            // the ratio gaps are well-defined.
            let two = Rat::from_int(2);
            let gap_a3 = cv.a3() - &(&wq.w / &(&two * &wq.w3));
            let gap_b3 = cv.b3() - &(&wq.w / &(&two * &wq.w2));
            let gap_b2 = cv.b2() - &(&wq.w / &(&two * &wq.w1));
            let (a3, a2, a1, a0) = (cv.a3(), cv.a2(), cv.a1(), cv.a0());
            let (b3, b2, b1) = (cv.b3(), cv.b2(), cv.b1());
            let s_c = &(a0 + &(a3 * b1)) + &(a1 * b3); // vs a2*b2
            let s_b = &(a0 + &(a3 * b1)) + &(a2 * b2); // vs a1*b3
            let s_d = &(a0 + &(a1 * b3)) + &(a2 * b2); // vs a3*b1
            let cond = if wq.w.is_negative() {
                Some(1)
            } else if !wq.w.is_positive() {
                None
            } else if gap_a3.is_positive() && gap_b3.is_positive() && gap_b2.is_positive() {
                Some(2)
            } else if gap_b2.is_negative() && !(&s_c - &(a2 * b2)).is_negative() {
                Some(3)
            } else if gap_b3.is_negative() && !(&s_b - &(a1 * b3)).is_negative() {
                Some(4)
            } else if gap_a3.is_negative() && !(&s_d - &(a3 * b1)).is_negative() {
                Some(5)
            } else {
                None
            };
            Ok(match cond {
                Some(c) => SpringBudget::ArbitraryOnly(c),
                None => SpringBudget::NotRealizable,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn g_with(g5: Rat, g6: Rat) -> PortMatrix3 {
        PortMatrix3::new(r(1), r(1), r(1), Rat::frac(1, 2), g5, g6)
    }

    #[test]
    fn interior_point_is_arbitrary_condition_2() {
        let g = g_with(Rat::frac(7, 10), Rat::frac(7, 10));
        let (class, witness, q) = region_classify(&g);
        assert_eq!(class, RegionClass::ArbitrarySprings);
        assert_eq!(witness, "cond2");
        assert!(q.lambda4.is_positive());
    }

    #[test]
    fn zero_g5_sits_on_a_segment() {
        let g = g_with(r(0), Rat::frac(1, 2));
        let (class, witness, _) = region_classify(&g);
        assert_eq!(class, RegionClass::AtMostThreeSegment);
        assert_eq!(witness, "m1d");
    }

    #[test]
    fn negative_product_region_is_condition_1() {
        let g = g_with(Rat::frac(1, 5), Rat::frac(-1, 5));
        let (class, witness, _) = region_classify(&g);
        assert_eq!(class, RegionClass::ArbitrarySprings);
        assert_eq!(witness, "cond1");
    }

    #[test]
    fn indefinite_point_not_realizable() {
        let g = g_with(r(1), Rat::frac(9, 10));
        let (class, _, q) = region_classify(&g);
        assert_eq!(class, RegionClass::NotRealizable);
        assert!(q.lambda4.is_negative());
    }

    #[test]
    fn lattice_is_exact() {
        let pts = lattice(&r(-1), &r(1), 201);
        assert_eq!(pts.len(), 201);
        assert_eq!(pts[0], r(-1));
        assert_eq!(pts[200], r(1));
        assert_eq!(pts[100], r(0));
        assert_eq!(&pts[1] - &pts[0], Rat::frac(1, 100));
    }

    #[test]
    fn parallel_and_sequential_maps_agree() {
        let (one, half) = (r(1), Rat::frac(1, 2));
        let par = region_map_rows(&one, &one, &one, &half, 21, &r(-1), &r(1));
        let seq = region_map_rows_seq(&one, &one, &one, &half, 21, &r(-1), &r(1));
        assert_eq!(par, seq);
        assert_eq!(par.len(), 21 * 21);
    }

    #[test]
    fn arbitrary_only_vector_detected() {
        // G = (1,2,3) diagonal, off-diagonal (1/2, 1/2, 1/2): all twelve
        // witnesses nonzero, W > 0, all three ratio gaps positive.
        let g = PortMatrix3::new(r(1), r(2), r(3), Rat::frac(1, 2), Rat::frac(1, 2), Rat::frac(1, 2));
        let ab = crate::paramount3::AlphaBeta::from_matrix(&g);
        let cv = ab.as_coefficient_vector();
        let out = classify_arbitrary_springs(&cv).unwrap();
        assert_eq!(out, SpringBudget::ArbitraryOnly(2));
    }

    #[test]
    fn cond1_vector_is_at_most_three() {
        let cv = CoefficientVector::quartic(r(1), r(1), r(2), r(2), r(2), r(3), r(5));
        let out = classify_arbitrary_springs(&cv).unwrap();
        assert!(matches!(
            out,
            SpringBudget::AtMostThree(AtMostThreeBranch::Quartic(Theorem5Branch::Cond1(_)))
        ));
    }

    #[test]
    fn inadmissible_vector_not_realizable() {
        let cv = CoefficientVector::quartic(r(1), r(1), r(2), r(2), r(2), r(3), r(1));
        assert_eq!(
            classify_arbitrary_springs(&cv).unwrap(),
            SpringBudget::NotRealizable
        );
        // Negative W1 (a2 > a3*b3) fails admissibility outright.
        let cv = CoefficientVector::quartic(r(1), r(5), r(2), r(2), r(2), r(3), r(5));
        assert_eq!(
            classify_arbitrary_springs(&cv).unwrap(),
            SpringBudget::NotRealizable
        );
    }
}
