//! W-quantities of a quartic-form coefficient vector and the spring-matrix
//! construction they certify.
//!
//! For `Y = (a3 s^3 + a2 s^2 + a1 s + a0)/(s^4 + b3 s^3 + b2 s^2 + b1 s)`:
//!
//! ```text
//! W1 = a3*b3 - a2      W2 = a3*b2 - a1      W3 = b2*b3 - b1
//! W  = a0 + 2*a3*b2*b3 - a3*b1 - a2*b2 - a1*b3
//! ```
//!
//! The vector is admissible iff `W1, W2, W3 >= 0` and `W^2 = 4 W1 W2 W3`;
//! admissibility is exactly the existence of a symmetric spring matrix `G`
//! whose entries reproduce the coefficients.

use thiserror::Error;

use crate::exact::{CoefficientVector, Rat};
use crate::paramount3::{nonneg_definite_via_coeffs, PortMatrix3};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WqError {
    #[error("coefficient vector is not in the quartic form (beta4 must be 1)")]
    WrongForm,
    #[error("inadmissible: W-quantities fail W1,W2,W3 >= 0 and W^2 = 4 W1 W2 W3")]
    Inadmissible,
    #[error("some W-quantity is not a rational square; the spring matrix has irrational entries")]
    IrrationalEntries,
    #[error("coefficients must be non-negative")]
    NonnegativityViolation,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WQuantities {
    pub w1: Rat,
    pub w2: Rat,
    pub w3: Rat,
    pub w: Rat,
}

impl WQuantities {
    pub fn admissible(&self) -> bool {
        !self.w1.is_negative()
            && !self.w2.is_negative()
            && !self.w3.is_negative()
            && &self.w * &self.w == &(&(&Rat::from_int(4) * &self.w1) * &self.w2) * &self.w3
    }
}

/// Compute the W-quantities of a quartic-form vector.
pub fn w_quantities(cv: &CoefficientVector) -> Result<WQuantities, WqError> {
    if cv.beta4 != 1 {
        return Err(WqError::WrongForm);
    }
    let (a3, a2, a1, a0) = (cv.a3(), cv.a2(), cv.a1(), cv.a0());
    let (b3, b2, b1) = (cv.b3(), cv.b2(), cv.b1());
    let w1 = &(a3 * b3) - a2;
    let w2 = &(a3 * b2) - a1;
    let w3 = &(b2 * b3) - b1;
    let two_a3_b2_b3 = &(&Rat::from_int(2) * &(a3 * b2)) * b3;
    let w = &(&(&(a0 + &two_a3_b2_b3) - &(a3 * b1)) - &(a2 * b2)) - &(a1 * b3);
    Ok(WQuantities { w1, w2, w3, w })
}

/// Construct the symmetric spring matrix certified by admissible
/// W-quantities: diagonal `(a3, b3, b2)`, off-diagonal magnitudes
/// `sqrt(W1), sqrt(W2), sqrt(W3)`, signs chosen so `2*G4*G5*G6 = W` with
/// `G4, G5 >= 0` and the sign of `W` carried by `G6`.
///
/// Requires each nonzero `W_i` to be a rational square; admissible vectors
/// produced by rational spring matrices always satisfy this.
pub fn build_g(cv: &CoefficientVector) -> Result<PortMatrix3, WqError> {
    let wq = w_quantities(cv)?;
    if !wq.admissible() {
        return Err(WqError::Inadmissible);
    }
    let g4 = wq.w1.sqrt_exact().ok_or(WqError::IrrationalEntries)?;
    let g5 = wq.w2.sqrt_exact().ok_or(WqError::IrrationalEntries)?;
    let g6_mag = wq.w3.sqrt_exact().ok_or(WqError::IrrationalEntries)?;
    let g6 = if wq.w.is_negative() { -&g6_mag } else { g6_mag };
    let g = PortMatrix3::new(
        cv.a3().clone(),
        cv.b3().clone(),
        cv.b2().clone(),
        g4,
        g5,
        g6,
    );
    debug_assert!({
        let two_prod = &(&Rat::from_int(2) * &(&g.y12 * &g.y13)) * &g.y23;
        two_prod == wq.w
    });
    debug_assert_eq!(g.det(), *cv.a0());
    debug_assert!(nonneg_definite_via_coeffs(&g).0 || !cv.all_nonnegative());
    Ok(g)
}
