//! Symmetric 3x3 matrix analysis: paramountcy, cross-sign-change
//! normalization, and the coefficient characterization of non-negative
//! definiteness.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{CoefficientVector, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Paramount3Error {
    #[error("no cross-sign pattern achieves the requested sign target")]
    NoPattern,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("cannot parse matrix: {0}")]
    BadMatrix(String),
}

/// Real symmetric 3x3 matrix; only the six independent entries are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PortMatrix3 {
    pub y11: Rat,
    pub y22: Rat,
    pub y33: Rat,
    pub y12: Rat,
    pub y13: Rat,
    pub y23: Rat,
}

impl PortMatrix3 {
    pub fn new(y11: Rat, y22: Rat, y33: Rat, y12: Rat, y13: Rat, y23: Rat) -> Self {
        PortMatrix3 {
            y11,
            y22,
            y33,
            y12,
            y13,
            y23,
        }
    }

    pub fn diagonal(a: Rat, b: Rat, c: Rat) -> Self {
        PortMatrix3::new(a, b, c, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn identity() -> Self {
        PortMatrix3::diagonal(Rat::one(), Rat::one(), Rat::one())
    }

    pub fn from_rows(rows: &[[Rat; 3]; 3]) -> Result<Self, Paramount3Error> {
        if rows[0][1] != rows[1][0] || rows[0][2] != rows[2][0] || rows[1][2] != rows[2][1] {
            return Err(Paramount3Error::NotSymmetric);
        }
        Ok(PortMatrix3::new(
            rows[0][0].clone(),
            rows[1][1].clone(),
            rows[2][2].clone(),
            rows[0][1].clone(),
            rows[0][2].clone(),
            rows[1][2].clone(),
        ))
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> Rat {
        match (i.min(j), i.max(j)) {
            (0, 0) => self.y11.clone(),
            (1, 1) => self.y22.clone(),
            (2, 2) => self.y33.clone(),
            (0, 1) => self.y12.clone(),
            (0, 2) => self.y13.clone(),
            (1, 2) => self.y23.clone(),
            _ => panic!("index out of range"),
        }
    }

    pub fn rows(&self) -> [[Rat; 3]; 3] {
        [
            [self.get(0, 0), self.get(0, 1), self.get(0, 2)],
            [self.get(1, 0), self.get(1, 1), self.get(1, 2)],
            [self.get(2, 0), self.get(2, 1), self.get(2, 2)],
        ]
    }

    /// Determinant of the 2x2 minor with the given rows and columns.
    pub fn minor2(&self, rows: (usize, usize), cols: (usize, usize)) -> Rat {
        &(&self.get(rows.0, cols.0) * &self.get(rows.1, cols.1))
            - &(&self.get(rows.0, cols.1) * &self.get(rows.1, cols.0))
    }

    pub fn det(&self) -> Rat {
        let a = &self.y11 * &self.minor2((1, 2), (1, 2));
        let b = &self.y12 * &self.minor2((1, 2), (0, 2));
        let c = &self.y13 * &self.minor2((1, 2), (0, 1));
        &(&a - &b) + &c
    }

    /// Simultaneous row/column permutation: entry (i,j) of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize; 3]) -> Self {
        PortMatrix3::new(
            self.get(perm[0], perm[0]),
            self.get(perm[1], perm[1]),
            self.get(perm[2], perm[2]),
            self.get(perm[0], perm[1]),
            self.get(perm[0], perm[2]),
            self.get(perm[1], perm[2]),
        )
    }

    /// Matrix text form: row-major rational entries, e.g.
    /// `[[1,1,0],[1,2,-1],[0,-1,1]]`.
    pub fn from_text(text: &str) -> Result<Self, Paramount3Error> {
        let rows = parse_rows(text).map_err(Paramount3Error::BadMatrix)?;
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(Paramount3Error::BadMatrix("need 3x3 entries".into()));
        }
        let arr = [
            [rows[0][0].clone(), rows[0][1].clone(), rows[0][2].clone()],
            [rows[1][0].clone(), rows[1][1].clone(), rows[1][2].clone()],
            [rows[2][0].clone(), rows[2][1].clone(), rows[2][2].clone()],
        ];
        PortMatrix3::from_rows(&arr)
    }
}

/// Parse `[[a,b,...],[...],...]` with exact rational entries.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<Rat>>, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("matrix must be bracketed: {text}"))?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, c) in inner.char_indices() {
        match c {
            '[' => {
                if depth == 0 {
                    start = Some(i + 1);
                }
                depth += 1;
            }
            ']' => {
                depth = depth.checked_sub(1).ok_or("unbalanced brackets")?;
                if depth == 0 {
                    let row_txt = &inner[start.ok_or("unbalanced brackets")?..i];
                    let row: Result<Vec<Rat>, _> = row_txt
                        .split(',')
                        .map(|e| Rat::from_str(e).map_err(|err| err.to_string()))
                        .collect();
                    rows.push(row?);
                }
            }
            _ => {}
        }
    }
    if depth != 0 || rows.is_empty() {
        return Err(format!("malformed matrix: {text}"));
    }
    Ok(rows)
}

impl fmt::Display for PortMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rows();
        write!(
            f,
            "[[{},{},{}],[{},{},{}],[{},{},{}]]",
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]
        )
    }
}

/// Cross-sign-change pattern acting on a symmetric 3x3 matrix as
/// `y'_ij = d_i d_j y_ij`. The first entry is pinned to +1 since global
/// negation acts trivially, leaving exactly four patterns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignPattern {
    pub d: [i8; 3],
}

impl SignPattern {
    pub const IDENTITY: SignPattern = SignPattern { d: [1, 1, 1] };

    /// All four patterns, in Gray order over the last two entries.
    pub const ALL: [SignPattern; 4] = [
        SignPattern { d: [1, 1, 1] },
        SignPattern { d: [1, 1, -1] },
        SignPattern { d: [1, -1, -1] },
        SignPattern { d: [1, -1, 1] },
    ];

    pub fn apply(&self, m: &PortMatrix3) -> PortMatrix3 {
        let sgn = |i: usize, j: usize, v: Rat| {
            if self.d[i] * self.d[j] < 0 {
                -v
            } else {
                v
            }
        };
        PortMatrix3::new(
            m.y11.clone(),
            m.y22.clone(),
            m.y33.clone(),
            sgn(0, 1, m.y12.clone()),
            sgn(0, 2, m.y13.clone()),
            sgn(1, 2, m.y23.clone()),
        )
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |d: i8| if d > 0 { '+' } else { '-' };
        write!(f, "({},{},{})", c(self.d[0]), c(self.d[1]), c(self.d[2]))
    }
}

/// Paramountcy for a symmetric 3x3 matrix: every principal minor dominates,
/// in absolute value, every minor built from the same rows. For this size
/// the binding checks are the first- and second-order ones; the full-order
/// comparison is implied (checked against the brute-force oracle in tests).
pub fn is_paramount(m: &PortMatrix3) -> bool {
    // First order: y_ii >= |y_ij| for every j (j = i gives y_ii >= 0).
    for i in 0..3 {
        let principal = m.get(i, i);
        for j in 0..3 {
            if principal < m.get(i, j).abs() {
                return false;
            }
        }
    }
    // Second order: rows {r0, r1}, principal columns vs all column pairs.
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    for &rows in &pairs {
        let principal = m.minor2(rows, rows);
        for &cols in &pairs {
            if principal < m.minor2(rows, cols).abs() {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignTarget {
    AllOffDiagNonPositive,
    AllOffDiagNonNegative,
}

/// Search the four cross-sign patterns for one achieving the target.
/// Succeeds for the non-positive target iff `y12*y13*y23 <= 0`, and for the
/// non-negative target iff the product is `>= 0`.
pub fn sign_normalize(
    m: &PortMatrix3,
    target: SignTarget,
) -> Result<(SignPattern, PortMatrix3), Paramount3Error> {
    for pattern in SignPattern::ALL {
        let applied = pattern.apply(m);
        let ok = match target {
            SignTarget::AllOffDiagNonPositive => {
                !applied.y12.is_positive()
                    && !applied.y13.is_positive()
                    && !applied.y23.is_positive()
            }
            SignTarget::AllOffDiagNonNegative => {
                !applied.y12.is_negative()
                    && !applied.y13.is_negative()
                    && !applied.y23.is_negative()
            }
        };
        if ok {
            return Ok((pattern, applied));
        }
    }
    Err(Paramount3Error::NoPattern)
}

/// The seven quantities of the coefficient characterization of non-negative
/// definiteness, derived exactly from the matrix entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaBeta {
    pub a3: Rat,
    pub a2: Rat,
    pub a1: Rat,
    pub a0: Rat,
    pub b3: Rat,
    pub b2: Rat,
    pub b1: Rat,
}

impl AlphaBeta {
    pub fn from_matrix(g: &PortMatrix3) -> Self {
        AlphaBeta {
            a3: g.y11.clone(),
            a2: &(&g.y11 * &g.y22) - &(&g.y12 * &g.y12),
            a1: &(&g.y11 * &g.y33) - &(&g.y13 * &g.y13),
            a0: g.det(),
            b3: g.y22.clone(),
            b2: g.y33.clone(),
            b1: &(&g.y22 * &g.y33) - &(&g.y23 * &g.y23),
        }
    }

    pub fn all_nonnegative(&self) -> bool {
        [&self.a3, &self.a2, &self.a1, &self.a0, &self.b3, &self.b2, &self.b1]
            .iter()
            .all(|c| !c.is_negative())
    }

    pub fn as_coefficient_vector(&self) -> CoefficientVector {
        CoefficientVector::quartic(
            self.a3.clone(),
            self.a2.clone(),
            self.a1.clone(),
            self.a0.clone(),
            self.b3.clone(),
            self.b2.clone(),
            self.b1.clone(),
        )
    }
}

/// Non-negative definiteness decided through the seven derived coefficients:
/// the matrix is non-negative definite iff all of them are non-negative.
pub fn nonneg_definite_via_coeffs(g: &PortMatrix3) -> (bool, AlphaBeta) {
    let ab = AlphaBeta::from_matrix(g);
    let ok = ab.all_nonnegative();
    (ok, ab)
}
