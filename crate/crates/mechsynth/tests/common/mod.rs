//! Shared helpers for the randomized suites. All randomness flows from one
//! seed, overridable through MECHSYNTH_SEED for reproduction.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use mechsynth::exact::{Poly, Rat, RationalFunction};
use mechsynth::netmodel::{ElementKind, MechNetwork};
use mechsynth::oneport::SpTerm;
use mechsynth::paramount3::PortMatrix3;

pub fn seed() -> u64 {
    std::env::var("MECHSYNTH_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x6D65_6368_7379_6E74) // "mechsynt"
}

/// Deterministic stream per suite; `salt` separates suites.
pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::frac(n, d)
}

/// Uniform nonzero positive rational with small numerator/denominator.
pub fn rand_positive(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let n = rng.gen_range(1..=bound);
    let d = rng.gen_range(1..=bound);
    Rat::frac(n, d)
}

/// Positive rational that is zero with probability ~ 1/zero_in.
pub fn rand_nonneg(rng: &mut ChaCha8Rng, bound: i64, zero_in: u32) -> Rat {
    if rng.gen_ratio(1, zero_in) {
        Rat::zero()
    } else {
        rand_positive(rng, bound)
    }
}

pub fn rand_signed(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let r = rand_positive(rng, bound);
    if rng.gen_bool(0.5) {
        -&r
    } else {
        r
    }
}

pub fn rand_poly(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> Poly<Rat> {
    let deg = rng.gen_range(0..=max_degree);
    let coeffs = (0..=deg)
        .map(|_| {
            if rng.gen_bool(0.2) {
                Rat::zero()
            } else {
                rand_signed(rng, bound)
            }
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

pub fn rand_nonzero_poly(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> Poly<Rat> {
    loop {
        let p = rand_poly(rng, max_degree, bound);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random connected augmented graph: up to `max_vertices` vertices,
/// `n_ports` ports, up to `max_elements` elements of mixed kinds with
/// positive values. Connectivity is not guaranteed; callers filter.
pub fn rand_network(
    rng: &mut ChaCha8Rng,
    n_ports: usize,
    max_vertices: u32,
    max_elements: usize,
) -> MechNetwork<Rat> {
    let n_v = rng.gen_range(2.max(n_ports as u32)..=max_vertices);
    let mut net = MechNetwork::new();
    let pair = |rng: &mut ChaCha8Rng| {
        let a = rng.gen_range(0..n_v);
        let mut b = rng.gen_range(0..n_v);
        while b == a {
            b = rng.gen_range(0..n_v);
        }
        (a, b)
    };
    for _ in 0..n_ports {
        let (a, b) = pair(rng);
        net.add_port(a, b).unwrap();
    }
    let n_e = rng.gen_range(1..=max_elements);
    let kinds = [
        ElementKind::Spring,
        ElementKind::Damper,
        ElementKind::Inerter,
        ElementKind::Conductance,
    ];
    for _ in 0..n_e {
        let (a, b) = pair(rng);
        let kind = kinds[rng.gen_range(0..kinds.len())];
        net.add_element(kind, rand_positive(rng, 9), a, b).unwrap();
    }
    net
}

/// Random series-parallel composition with exactly one damper, one inerter,
/// and 0..=3 springs arranged as an arbitrary binary tree.
pub fn rand_sp_tree(rng: &mut ChaCha8Rng) -> SpTerm {
    let n_springs = rng.gen_range(0..=3);
    let mut leaves: Vec<SpTerm> = vec![
        SpTerm::Element(ElementKind::Damper, rand_positive(rng, 12)),
        SpTerm::Element(ElementKind::Inerter, rand_positive(rng, 12)),
    ];
    for _ in 0..n_springs {
        leaves.push(SpTerm::Element(ElementKind::Spring, rand_positive(rng, 12)));
    }
    leaves.shuffle(rng);
    while leaves.len() > 1 {
        let b = leaves.pop().unwrap();
        let a = leaves.pop().unwrap();
        let combined = if rng.gen_bool(0.5) {
            SpTerm::Series(vec![a, b])
        } else {
            SpTerm::Parallel(vec![a, b])
        };
        let pos = rng.gen_range(0..=leaves.len());
        leaves.insert(pos, combined);
    }
    leaves.pop().unwrap()
}

/// Ladder-style series-parallel network: built by wrapping one element at a
/// time in series or parallel, i.e. by inverse preamble moves.
pub fn rand_ladder(rng: &mut ChaCha8Rng) -> SpTerm {
    let n_springs = rng.gen_range(0..=3);
    let mut pool: Vec<ElementKind> = vec![ElementKind::Damper, ElementKind::Inerter];
    for _ in 0..n_springs {
        pool.push(ElementKind::Spring);
    }
    pool.shuffle(rng);
    let mut term = SpTerm::Element(pool.pop().unwrap(), rand_positive(rng, 12));
    while let Some(kind) = pool.pop() {
        let e = SpTerm::Element(kind, rand_positive(rng, 12));
        term = if rng.gen_bool(0.5) {
            SpTerm::Parallel(vec![e, term])
        } else {
            SpTerm::Series(vec![e, term])
        };
    }
    term
}

pub fn rand_matrix3(rng: &mut ChaCha8Rng, bound: i64) -> PortMatrix3 {
    PortMatrix3::new(
        rand_signed(rng, bound),
        rand_signed(rng, bound),
        rand_signed(rng, bound),
        rand_signed(rng, bound),
        rand_signed(rng, bound),
        rand_signed(rng, bound),
    )
}

/// Diagonally dominant symmetric matrix with non-negative diagonal: always
/// realizable as a star network, hence paramount.
pub fn rand_dominant_matrix3(rng: &mut ChaCha8Rng, bound: i64) -> PortMatrix3 {
    let y12 = rand_signed(rng, bound);
    let y13 = rand_signed(rng, bound);
    let y23 = rand_signed(rng, bound);
    let slack = |rng: &mut ChaCha8Rng| rand_nonneg(rng, bound, 3);
    let y11 = &(&y12.abs() + &y13.abs()) + &slack(rng);
    let y22 = &(&y12.abs() + &y23.abs()) + &slack(rng);
    let y33 = &(&y13.abs() + &y23.abs()) + &slack(rng);
    PortMatrix3::new(y11, y22, y33, y12, y13, y23)
}

/// Brute-force paramountcy: every principal minor must dominate the
/// absolute value of every minor sharing the same rows, all orders
/// including the full determinant against itself.
pub fn paramount_brute_force(m: &PortMatrix3) -> bool {
    let idx = [0usize, 1, 2];
    // order 1
    for &i in &idx {
        for &j in &idx {
            if m.get(i, i) < m.get(i, j).abs() {
                return false;
            }
        }
    }
    // order 2
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    for &rows in &pairs {
        for &cols in &pairs {
            if m.minor2(rows, rows) < m.minor2(rows, cols).abs() {
                return false;
            }
        }
    }
    // order 3: the only minor sharing all rows is the determinant itself.
    let det = m.det();
    det >= det.abs()
}

/// Non-negative definiteness by direct evaluation of all seven principal
/// minors.
pub fn psd_by_principal_minors(m: &PortMatrix3) -> bool {
    let minors = [
        m.get(0, 0),
        m.get(1, 1),
        m.get(2, 2),
        m.minor2((0, 1), (0, 1)),
        m.minor2((0, 2), (0, 2)),
        m.minor2((1, 2), (1, 2)),
        m.det(),
    ];
    minors.iter().all(|v| !v.is_negative())
}

/// Direct solvability of the node-potential system with port voltage
/// sources: unknowns are node potentials and port currents; equations are
/// KCL at every node but the reference, the port voltage constraints, and a
/// grounded reference. Unique solvability for arbitrary source values is
/// exactly a nonsingular coefficient matrix over the rational-function
/// field. This is an independent route from the loop-analysis oracle.
pub fn nodal_system_solvable(net: &MechNetwork<Rat>) -> bool {
    let nodes: Vec<u32> = net.nodes.iter().copied().collect();
    let index = |n: u32| nodes.iter().position(|&x| x == n).unwrap();
    let n_v = nodes.len();
    let n_p = net.ports.len();
    let dim = n_v + n_p;
    let mut m = vec![vec![RationalFunction::<Rat>::zero(); dim]; dim];

    // KCL rows for every node except the reference (row 0 is reused for the
    // ground equation).
    for e in &net.elements {
        let g = e.impedance().unwrap().inv().unwrap();
        let (ia, ib) = (index(e.a), index(e.b));
        for (from, to) in [(ia, ib), (ib, ia)] {
            if from == 0 {
                continue;
            }
            m[from][from] = m[from][from].add(&g);
            m[from][to] = m[from][to].sub(&g);
        }
    }
    for (p, port) in net.ports.iter().enumerate() {
        let (ip, im) = (index(port.plus), index(port.minus));
        if ip != 0 {
            m[ip][n_v + p] = m[ip][n_v + p].sub(&RationalFunction::one());
        }
        if im != 0 {
            m[im][n_v + p] = m[im][n_v + p].add(&RationalFunction::one());
        }
        // Port voltage constraint row.
        m[n_v + p][ip] = m[n_v + p][ip].add(&RationalFunction::one());
        m[n_v + p][im] = m[n_v + p][im].sub(&RationalFunction::one());
    }
    // Ground the reference node.
    m[0][0] = RationalFunction::one();

    nonsingular(m)
}

/// Gaussian elimination over the rational-function field.
pub fn nonsingular(mut m: Vec<Vec<RationalFunction<Rat>>>) -> bool {
    let n = m.len();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return false;
        };
        m.swap(k, p);
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].div(&pivot).unwrap();
            for j in k..n {
                let t = factor.mul(&m[k][j]);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    true
}

/// Nodal driving-point admittance of a multi-port resistive network by
/// brute-force elimination, used to cross-check the loop-analysis oracle on
/// spring-only examples. Returns the full port admittance matrix.
pub fn nodal_admittance(net: &MechNetwork<Rat>) -> Option<Vec<Vec<RationalFunction<Rat>>>> {
    let nodes: Vec<u32> = net.nodes.iter().copied().collect();
    let index = |n: u32| nodes.iter().position(|&x| x == n).unwrap();
    let n_v = nodes.len();
    let n_p = net.ports.len();
    let dim = n_v + n_p;
    let mut m = vec![vec![RationalFunction::<Rat>::zero(); dim]; dim];
    for e in &net.elements {
        let g = e.impedance().unwrap().inv().unwrap();
        let (ia, ib) = (index(e.a), index(e.b));
        for (from, to) in [(ia, ib), (ib, ia)] {
            if from == 0 {
                continue;
            }
            m[from][from] = m[from][from].add(&g);
            m[from][to] = m[from][to].sub(&g);
        }
    }
    for (p, port) in net.ports.iter().enumerate() {
        let (ip, im) = (index(port.plus), index(port.minus));
        if ip != 0 {
            m[ip][n_v + p] = m[ip][n_v + p].sub(&RationalFunction::one());
        }
        if im != 0 {
            m[im][n_v + p] = m[im][n_v + p].add(&RationalFunction::one());
        }
        m[n_v + p][ip] = m[n_v + p][ip].add(&RationalFunction::one());
        m[n_v + p][im] = m[n_v + p][im].sub(&RationalFunction::one());
    }
    m[0][0] = RationalFunction::one();

    // Solve for each unit port-voltage excitation; the port currents are
    // the admittance matrix columns.
    let mut y = vec![vec![RationalFunction::<Rat>::zero(); n_p]; n_p];
    for q in 0..n_p {
        let mut rhs = vec![RationalFunction::<Rat>::zero(); dim];
        rhs[n_v + q] = RationalFunction::one();
        let x = solve(m.clone(), rhs)?;
        for p in 0..n_p {
            y[p][q] = x[n_v + p].clone();
        }
    }
    Some(y)
}

fn solve(
    mut m: Vec<Vec<RationalFunction<Rat>>>,
    mut rhs: Vec<RationalFunction<Rat>>,
) -> Option<Vec<RationalFunction<Rat>>> {
    let n = m.len();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, p);
        rhs.swap(k, p);
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].div(&pivot).unwrap();
            for j in k..n {
                let t = factor.mul(&m[k][j]);
                m[i][j] = m[i][j].sub(&t);
            }
            let t = factor.mul(&rhs[k]);
            rhs[i] = rhs[i].sub(&t);
        }
    }
    let mut x = vec![RationalFunction::<Rat>::zero(); n];
    for i in (0..n).rev() {
        let mut acc = rhs[i].clone();
        for j in i + 1..n {
            let t = m[i][j].mul(&x[j]);
            acc = acc.sub(&t);
        }
        x[i] = acc.div(&m[i][i]).ok()?;
    }
    Some(x)
}
