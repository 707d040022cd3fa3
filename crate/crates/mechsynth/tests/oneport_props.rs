//! Round trips and identities of the one-port theory: the cubic-form
//! configurations, the covering configurations, the Foster branch, the
//! spring-matrix consistency identities, and the subset relations between
//! the at-most-three and arbitrary-spring classes.

mod common;

use common::*;
use rand::prelude::*;

use mechsynth::exact::{coefficient_form, CoefficientVector, Rat};
use mechsynth::netmodel::{driving_point, ElementKind, MechNetwork};
use mechsynth::oneport::{
    build_g, classify_arbitrary_springs, classify_theorem5, classify_theorem6, cond1_witnesses,
    fig2_topology, foster_synthesize, region_map_rows, synth_fig2, synth_fig3, two_port_spring,
    w_quantities, AtMostThreeBranch, CoveringCase, Fig3Network, ScaleMode, SpringBudget,
    SqrtMode, Theorem5Branch, Theorem6Outcome, TwoPortSpringMatrix,
};
use mechsynth::paramount3::{nonneg_definite_via_coeffs, AlphaBeta, PortMatrix3};

/// The five cubic-form configurations, built here independently of the
/// synthesis path: values may be zero (dropped), `b` and `c` must be
/// positive.
pub fn cubic_config(
    cond: u8,
    b: &Rat,
    c: &Rat,
    k1: &Rat,
    k2: &Rat,
    k3: &Rat,
) -> MechNetwork<Rat> {
    let mut net = MechNetwork::new();
    net.add_port(1, 0).unwrap();
    let s = ElementKind::Spring;
    match cond {
        1 => {
            net.add_element(ElementKind::Inerter, b.clone(), 1, 0).unwrap();
            net.add_element(ElementKind::Damper, c.clone(), 1, 0).unwrap();
            net.add_element_dropping_zero(s, k1.clone(), 1, 0).unwrap();
        }
        2 => {
            net.add_element_dropping_zero(s, k1.clone(), 1, 0).unwrap();
            net.add_element_dropping_zero(s, k2.clone(), 1, 2).unwrap();
            net.add_element_dropping_zero(s, k3.clone(), 2, 0).unwrap();
            net.add_element(ElementKind::Inerter, b.clone(), 2, 0).unwrap();
            net.add_element(ElementKind::Damper, c.clone(), 2, 0).unwrap();
        }
        3 => {
            net.add_element(ElementKind::Damper, c.clone(), 1, 0).unwrap();
            net.add_element_dropping_zero(s, k1.clone(), 1, 0).unwrap();
            net.add_element_dropping_zero(s, k2.clone(), 1, 2).unwrap();
            net.add_element_dropping_zero(s, k3.clone(), 2, 0).unwrap();
            net.add_element(ElementKind::Inerter, b.clone(), 2, 0).unwrap();
        }
        4 => {
            net.add_element(ElementKind::Inerter, b.clone(), 1, 0).unwrap();
            net.add_element_dropping_zero(s, k1.clone(), 1, 0).unwrap();
            net.add_element_dropping_zero(s, k2.clone(), 1, 2).unwrap();
            net.add_element_dropping_zero(s, k3.clone(), 2, 0).unwrap();
            net.add_element(ElementKind::Damper, c.clone(), 2, 0).unwrap();
        }
        5 => {
            net.add_element_dropping_zero(s, k1.clone(), 1, 0).unwrap();
            net.add_element(ElementKind::Inerter, b.clone(), 1, 2).unwrap();
            net.add_element_dropping_zero(s, k3.clone(), 1, 2).unwrap();
            net.add_element(ElementKind::Damper, c.clone(), 2, 0).unwrap();
            net.add_element_dropping_zero(s, k2.clone(), 2, 0).unwrap();
        }
        _ => unreachable!(),
    }
    net
}

/// Forward-generate a cubic-form instance on one configuration; `None` when
/// the dropped-zero network degenerates (disconnects or cancels out of the
/// generic shape).
pub fn cubic_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    cond: u8,
) -> Option<(MechNetwork<Rat>, CoefficientVector)> {
    let b = rand_positive(rng, 12);
    let c = rand_positive(rng, 12);
    let k1 = rand_nonneg(rng, 12, 8);
    let k2 = rand_nonneg(rng, 12, 8);
    let k3 = rand_nonneg(rng, 12, 8);
    let net = cubic_config(cond, &b, &c, &k1, &k2, &k3);
    let y = driving_point(&net).ok()?;
    if y.is_zero() {
        return None;
    }
    let cv = coefficient_form(&y).ok()?;
    if cv.beta4 != 0 {
        return None;
    }
    Some((net, cv))
}

#[test]
fn cubic_round_trip_every_configuration() {
    let mut rng = rng(0x6F01);
    for cond in 1..=5u8 {
        let mut done = 0;
        let mut degenerate = 0;
        while done < 120 {
            let Some((net, cv)) = cubic_instance(&mut rng, cond) else {
                degenerate += 1;
                assert!(degenerate < 2000, "generator starves for condition {cond}");
                continue;
            };
            let outcome = classify_theorem6(&cv, ScaleMode::ScaleSearch).unwrap();
            let Theorem6Outcome::Accepted { condition, lambda } = outcome else {
                // Value degeneracies can cancel the generic shape (for
                // example the bridge spring vanishing); skip those.
                degenerate += 1;
                assert!(degenerate < 2000);
                continue;
            };
            if condition != cond {
                // A degenerate valuation may fall into an earlier
                // condition's family; exact classification decides by the
                // first match. Only generic instances must map back.
                degenerate += 1;
                assert!(degenerate < 2000);
                continue;
            }
            let synth = synth_fig3(&cv, condition, &lambda, SqrtMode::ExactOnly).unwrap();
            let expected = driving_point(&net).unwrap();
            match synth {
                Fig3Network::Rational(resynth) => {
                    assert_eq!(driving_point(&resynth).unwrap(), expected);
                }
                Fig3Network::Quadratic(_) => panic!("scale search should find a square"),
            }
            done += 1;
        }
    }
}

#[test]
fn covering_round_trip_every_case() {
    let mut rng = rng(0x6F02);
    for case in CoveringCase::ALL {
        let topo = fig2_topology(case).unwrap();
        let mut done = 0;
        let mut degenerate = 0;
        while done < 120 {
            let mut net = topo.clone();
            for e in net.elements.iter_mut() {
                e.value = rand_positive(&mut rng, 12);
            }
            let y = driving_point(&net).unwrap();
            let cv = coefficient_form(&y).unwrap();
            let branch = if cv.beta4 == 1 {
                Some(classify_theorem5(&cv).unwrap().unwrap())
            } else {
                None
            };
            if branch != Some(Theorem5Branch::Cond2(case)) {
                // Measure-zero valuations can cancel a factor or zero an
                // extra witness, which legitimately reroutes them; the
                // covering branch is for generic instances.
                degenerate += 1;
                assert!(degenerate < 100, "too many degenerate draws for case {case}");
                continue;
            }
            let resynth = synth_fig2(&cv, case).unwrap();
            assert_eq!(driving_point(&resynth).unwrap(), y);
            done += 1;
        }
    }
}

#[test]
fn foster_round_trip_on_preamble_built_networks() {
    let mut rng = rng(0x6F03);
    let mut done = 0;
    while done < 200 {
        let term = rand_ladder(&mut rng);
        let net = term.to_network().unwrap();
        let y = driving_point(&net).unwrap();
        let Ok(cv) = coefficient_form(&y) else { continue };
        if cv.beta4 != 1 {
            continue;
        }
        let branch = classify_theorem5(&cv).unwrap().unwrap();
        assert!(matches!(branch, Theorem5Branch::Cond1(_)));
        let resynth = foster_synthesize(&y).unwrap();
        let mut springs = 0;
        let mut dampers = 0;
        let mut inerters = 0;
        for e in &resynth.elements {
            match e.kind {
                ElementKind::Spring => springs += 1,
                ElementKind::Damper => dampers += 1,
                ElementKind::Inerter => inerters += 1,
                ElementKind::Conductance => {}
            }
        }
        assert!(springs <= 3 && dampers <= 1 && inerters <= 1);
        assert_eq!(driving_point(&resynth).unwrap(), y);
        done += 1;
    }
}

#[test]
fn foster_on_general_series_parallel_trees_is_logged_not_asserted() {
    // General series-parallel trees include parallel-of-series compositions
    // with no top-level single element; the bounded preamble move set
    // cannot always deconstruct those. Soundness is asserted (every success
    // is exact, classification never rejects); the census-exceeded rate is
    // reported for analysis.
    let mut rng = rng(0x6F04);
    let (mut attempted, mut succeeded, mut exceeded) = (0, 0, 0);
    while attempted < 300 {
        let term = rand_sp_tree(&mut rng);
        let net = term.to_network().unwrap();
        let y = driving_point(&net).unwrap();
        let Ok(cv) = coefficient_form(&y) else { continue };
        if cv.beta4 != 1 {
            continue;
        }
        let branch = classify_theorem5(&cv).unwrap().unwrap();
        if !matches!(branch, Theorem5Branch::Cond1(_)) {
            continue;
        }
        attempted += 1;
        match foster_synthesize(&y) {
            Ok(resynth) => {
                assert_eq!(driving_point(&resynth).unwrap(), y, "inexact resynthesis");
                succeeded += 1;
            }
            Err(_) => exceeded += 1,
        }
    }
    println!(
        "general series-parallel preamble coverage: {succeeded}/{attempted} succeeded, {exceeded} census-exceeded (logged for analysis)"
    );
    assert!(succeeded > 0);
}

/// Random non-negative definite spring matrix via diagonal dominance, with
/// occasional zeroed entries for boundary coverage.
fn rand_psd(rng: &mut rand_chacha::ChaCha8Rng) -> PortMatrix3 {
    let mut g = rand_dominant_matrix3(rng, 6);
    if rng.gen_bool(0.2) {
        g.y23 = Rat::zero();
    }
    if rng.gen_bool(0.1) {
        g.y13 = Rat::zero();
    }
    g
}

#[test]
fn matrix_condition_identities_hold_exactly() {
    let mut rng = rng(0x6F05);
    for _ in 0..800 {
        let g = rand_psd(&mut rng);
        let (psd, ab) = nonneg_definite_via_coeffs(&g);
        assert!(psd, "dominant matrices are non-negative definite");
        let cv = ab.as_coefficient_vector();
        let wq = w_quantities(&cv).unwrap();
        assert!(wq.admissible(), "matrix-generated vectors are admissible");
        // The spring matrix rebuilt from the coefficients reproduces the
        // entries up to the sign freedom absorbed by cross-sign changes:
        // the diagonal and the squared off-diagonal entries match, and the
        // determinant equals a0 exactly.
        let rebuilt = build_g(&cv).unwrap();
        assert_eq!(rebuilt.y11, g.y11);
        assert_eq!(rebuilt.y22, g.y22);
        assert_eq!(rebuilt.y33, g.y33);
        for (a, b) in [
            (&rebuilt.y12, &g.y12),
            (&rebuilt.y13, &g.y13),
            (&rebuilt.y23, &g.y23),
        ] {
            assert_eq!(a * a, b * b);
        }
        assert_eq!(rebuilt.det(), *cv.a0());
        assert!(nonneg_definite_via_coeffs(&rebuilt).0);
    }
}

#[test]
fn twelve_witness_equivalence_both_directions() {
    let mut rng = rng(0x6F06);
    for round in 0..800 {
        let mut g = rand_psd(&mut rng);
        // Half the rounds force a specific minor to vanish.
        if round % 2 == 0 {
            match rng.gen_range(0..4) {
                0 => g.y12 = Rat::zero(),
                1 => {
                    // second-order principal minor: y11*y22 = y12^2
                    let y12 = rand_positive(&mut rng, 4);
                    g.y11 = &y12 * &y12;
                    g.y22 = Rat::one();
                    g.y12 = y12;
                    // keep dominance elsewhere by zeroing the rest
                    g.y13 = Rat::zero();
                    g.y23 = Rat::zero();
                    g.y33 = rand_positive(&mut rng, 4);
                }
                2 => {
                    // cross minor: y11*y23 = y12*y13
                    g.y11 = Rat::from_int(4);
                    g.y12 = Rat::one();
                    g.y13 = Rat::from_int(2);
                    g.y23 = Rat::frac(1, 2);
                    g.y22 = Rat::from_int(3);
                    g.y33 = Rat::from_int(3);
                }
                _ => g.y11 = Rat::zero(),
            }
        }
        if !nonneg_definite_via_coeffs(&g).0 {
            continue;
        }
        let cv = AlphaBeta::from_matrix(&g).as_coefficient_vector();
        let wq = w_quantities(&cv).unwrap();
        if !wq.admissible() {
            continue;
        }
        let witnesses = cond1_witnesses(&cv, &wq);
        let minor_zero = has_zero_low_order_minor(&g);
        assert_eq!(
            !witnesses.is_empty(),
            minor_zero,
            "witness set {witnesses:?} disagrees with minors of {g}"
        );
    }
}

fn has_zero_low_order_minor(g: &PortMatrix3) -> bool {
    let entries = [
        g.y11.clone(),
        g.y22.clone(),
        g.y33.clone(),
        g.y12.clone(),
        g.y13.clone(),
        g.y23.clone(),
    ];
    if entries.iter().any(Rat::is_zero) {
        return true;
    }
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    for rows in pairs {
        for cols in pairs {
            if g.minor2(rows, cols).is_zero() {
                return true;
            }
        }
    }
    false
}

#[test]
fn half_sum_identities_hold_exactly() {
    let mut rng = rng(0x6F07);
    let two = Rat::from_int(2);
    for _ in 0..800 {
        let g = rand_psd(&mut rng);
        let cv = AlphaBeta::from_matrix(&g).as_coefficient_vector();
        let (g1, g2, g3) = (&g.y11, &g.y22, &g.y33);
        let (g4, g5, g6) = (&g.y12, &g.y13, &g.y23);
        let base = &(&(g1 * g2) * g3) + &(&(g4 * g5) * g6);
        let t16 = g1 * &(g6 * g6);
        let t25 = g2 * &(g5 * g5);
        let t34 = g3 * &(g4 * g4);
        let (a3, a2, a1, a0) = (cv.a3(), cv.a2(), cv.a1(), cv.a0());
        let (b3, b2, b1) = (cv.b3(), cv.b2(), cv.b1());
        // lambda2-type: base - G1G6^2 - G3G4^2 = (a0 + a3b1 + a2b2 - a1b3)/2
        assert_eq!(
            &(&base - &t16) - &t34,
            &(&(&(a0 + &(a3 * b1)) + &(a2 * b2)) - &(a1 * b3)) / &two
        );
        // lambda1-type: base - G1G6^2 - G2G5^2 = (a0 + a3b1 + a1b3 - a2b2)/2
        assert_eq!(
            &(&base - &t16) - &t25,
            &(&(&(a0 + &(a3 * b1)) + &(a1 * b3)) - &(a2 * b2)) / &two
        );
        // lambda3-type: base - G2G5^2 - G3G4^2 = (a0 + a1b3 + a2b2 - a3b1)/2
        assert_eq!(
            &(&base - &t25) - &t34,
            &(&(&(a0 + &(a1 * b3)) + &(a2 * b2)) - &(a3 * b1)) / &two
        );
    }
}

#[test]
fn at_most_three_is_a_proper_subset_of_arbitrary() {
    let mut rng = rng(0x6F08);
    let mut at_most_three = 0;
    let mut arbitrary_only = 0;
    for _ in 0..2000 {
        let g = rand_psd(&mut rng);
        let cv = AlphaBeta::from_matrix(&g).as_coefficient_vector();
        let quartic = classify_theorem5(&cv).unwrap();
        let budget = classify_arbitrary_springs(&cv).unwrap();
        match (&quartic, &budget) {
            (Ok(_), SpringBudget::AtMostThree(_)) => at_most_three += 1,
            (Ok(_), other) => panic!("accepted vector not in the broader class: {other:?}"),
            (Err(_), SpringBudget::ArbitraryOnly(_)) => arbitrary_only += 1,
            (Err(reject), SpringBudget::NotRealizable) => {
                assert!(reject.admissible, "inadmissible vectors never classify");
            }
            (Err(_), SpringBudget::AtMostThree(_)) => {
                panic!("broader classifier claims at-most-three where the quartic test rejects")
            }
        }
    }
    assert!(at_most_three > 0);
    assert!(arbitrary_only > 0, "difference set must be nonempty");

    // The worked interior point is in the difference set.
    let g = PortMatrix3::new(
        Rat::one(),
        Rat::one(),
        Rat::one(),
        Rat::frac(1, 2),
        Rat::frac(7, 10),
        Rat::frac(7, 10),
    );
    let cv = AlphaBeta::from_matrix(&g).as_coefficient_vector();
    assert!(classify_theorem5(&cv).unwrap().is_err());
    assert_eq!(
        classify_arbitrary_springs(&cv).unwrap(),
        SpringBudget::ArbitraryOnly(2)
    );
}

#[test]
fn cubic_budget_delegates_to_the_cubic_classifier() {
    let mut rng = rng(0x6F09);
    let mut accepted = 0;
    for cond in 1..=5u8 {
        for _ in 0..40 {
            let Some((_, cv)) = cubic_instance(&mut rng, cond) else {
                continue;
            };
            let direct = classify_theorem6(&cv, ScaleMode::ScaleSearch).unwrap();
            let budget = classify_arbitrary_springs(&cv).unwrap();
            match (direct, budget) {
                (
                    Theorem6Outcome::Accepted { condition, lambda },
                    SpringBudget::AtMostThree(AtMostThreeBranch::Cubic(c, l)),
                ) => {
                    assert_eq!((condition, lambda), (c, l));
                    accepted += 1;
                }
                // Degenerate valuations (inactive damper or inerter after
                // zero-spring drops) fall outside the class consistently.
                (Theorem6Outcome::Rejected, SpringBudget::NotRealizable) => {}
                (a, b) => panic!("budget classifier disagrees with the cubic one: {a:?} vs {b:?}"),
            }
        }
    }
    assert!(accepted > 100);
}

#[test]
fn scale_search_strictly_extends_as_written() {
    // The five literal conditions are not invariant under a common positive
    // rescale of the coefficients, while the admittance is; the scale-search
    // mode must therefore (a) be itself scale-invariant and (b) strictly
    // extend the literal mode. The discrepancy set is reported.
    let mut rng = rng(0x6F0A);
    let (mut both, mut only_scale, mut neither) = (0, 0, 0);
    for cond in 1..=5u8 {
        for _ in 0..60 {
            let Some((_, cv)) = cubic_instance(&mut rng, cond) else {
                continue;
            };
            let baseline = classify_theorem6(&cv, ScaleMode::ScaleSearch).unwrap();
            // Rescale the vector; the admittance is unchanged.
            let lambda = rand_positive(&mut rng, 6);
            let scaled = cv.scaled(&lambda);
            let as_written = classify_theorem6(&scaled, ScaleMode::AsWritten).unwrap();
            let searched = classify_theorem6(&scaled, ScaleMode::ScaleSearch).unwrap();
            match (&baseline, &searched) {
                (
                    Theorem6Outcome::Accepted { condition: c0, .. },
                    Theorem6Outcome::Accepted { condition: c1, .. },
                ) => assert_eq!(c0, c1, "scale search is not scale-invariant"),
                (Theorem6Outcome::Rejected, Theorem6Outcome::Rejected) => {}
                (a, b) => panic!("scale search changed under rescale: {a:?} vs {b:?}"),
            }
            match (&as_written, &searched) {
                (Theorem6Outcome::Accepted { .. }, Theorem6Outcome::Accepted { .. }) => both += 1,
                (Theorem6Outcome::Rejected, Theorem6Outcome::Accepted { .. }) => only_scale += 1,
                (Theorem6Outcome::Rejected, Theorem6Outcome::Rejected) => neither += 1,
                (Theorem6Outcome::Accepted { .. }, Theorem6Outcome::Rejected) => {
                    panic!("scale search lost a literally accepted vector")
                }
            }
        }
    }
    println!(
        "cubic-form scale sensitivity: accepted by both modes {both}, rescued by scale search {only_scale}, degenerate rejects {neither}"
    );
    assert!(only_scale > 0, "scale search must rescue rescaled vectors");
}

#[test]
fn region_map_symmetry_under_simultaneous_sign_flip() {
    // Flipping the signs of both free entries leaves every classification
    // quantity invariant (the product and all squares are even).
    let one = Rat::one();
    let half = Rat::frac(1, 2);
    let rows = region_map_rows(&one, &one, &one, &half, 25, &-&one, &one);
    let grid = 25;
    let find = |i: usize, j: usize| &rows[i * grid + j];
    for i in 0..grid {
        for j in 0..grid {
            let p = find(i, j);
            let q = find(grid - 1 - i, grid - 1 - j);
            assert_eq!(p.g5, -&q.g5);
            assert_eq!(p.g6, -&q.g6);
            assert_eq!(p.class, q.class, "class not mirror-symmetric at ({},{})", p.g5, p.g6);
            assert_eq!(p.witness, q.witness, "witness not mirror-symmetric");
        }
    }
}

#[test]
fn quadratic_extension_verifies_irrational_springs_end_to_end() {
    // Force the literal tuple through synthesis: the bridge spring becomes
    // sqrt(radicand), which is usually irrational, and the whole netlist is
    // then verified over Q(sqrt(d)) against the rational admittance.
    let mut rng = rng(0x6F0C);
    let mut quadratic_seen = 0;
    let mut attempts = 0;
    while quadratic_seen < 40 && attempts < 4000 {
        attempts += 1;
        let Some((net, cv)) = cubic_instance(&mut rng, 2) else {
            continue;
        };
        let as_written = classify_theorem6(&cv, ScaleMode::AsWritten).unwrap();
        let Theorem6Outcome::Accepted { condition: 2, lambda } = as_written else {
            continue;
        };
        match synth_fig3(&cv, 2, &lambda, SqrtMode::AllowQuadratic).unwrap() {
            Fig3Network::Rational(resynth) => {
                assert_eq!(
                    driving_point(&resynth).unwrap(),
                    driving_point(&net).unwrap()
                );
            }
            Fig3Network::Quadratic(resynth) => {
                // synth_fig3 already verified the admittance over the
                // extension field; check the values really are irrational.
                assert!(resynth
                    .elements
                    .iter()
                    .any(|e| e.value.as_rat().is_none()));
                quadratic_seen += 1;
            }
        }
    }
    assert!(
        quadratic_seen >= 20,
        "too few irrational-spring instances: {quadratic_seen}"
    );
}

#[test]
fn two_port_spring_matrices_round_trip() {
    let mut rng = rng(0x6F0B);
    for _ in 0..200 {
        let k12 = rand_signed(&mut rng, 8);
        let k11 = &k12.abs() + &rand_nonneg(&mut rng, 8, 4);
        let k22 = &k12.abs() + &rand_nonneg(&mut rng, 8, 4);
        let k = TwoPortSpringMatrix { k11, k12, k22 };
        // two_port_spring verifies the admittance internally.
        let net = two_port_spring(&k).unwrap();
        assert!(net.element_count() <= 3);
        assert!(net
            .elements
            .iter()
            .all(|e| e.kind == ElementKind::Spring && e.value.is_positive()));
    }
}
