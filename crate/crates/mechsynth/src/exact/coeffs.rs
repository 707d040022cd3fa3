//! Admittance coefficient vectors.
//!
//! One-port admittances handled by the classifiers come in two shapes,
//! distinguished by the `beta4` flag:
//!
//! * quartic form, `beta4 = 1`:
//!   `Y = (a3 s^3 + a2 s^2 + a1 s + a0) / (s^4 + b3 s^3 + b2 s^2 + b1 s)`
//! * cubic form, `beta4 = 0`:
//!   `Y = (a3 s^3 + a2 s^2 + a1 s + a0) / (b3 s^3 + b2 s^2 + b1 s)`
//!
//! Extraction works on the numerator/denominator pair exactly as supplied:
//! shape decisions (degree of the denominator, zero constant term) are made
//! on the given pair, not on the reduced canonical form.

use super::poly::Poly;
use super::ratfun::RationalFunction;
use super::{ExactError, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientVector {
    /// `[a3, a2, a1, a0]`
    pub alpha: [Rat; 4],
    /// `[b3, b2, b1]`
    pub beta: [Rat; 3],
    /// 1 for the quartic form, 0 for the cubic form.
    pub beta4: u8,
}

impl CoefficientVector {
    pub fn quartic(a3: Rat, a2: Rat, a1: Rat, a0: Rat, b3: Rat, b2: Rat, b1: Rat) -> Self {
        CoefficientVector {
            alpha: [a3, a2, a1, a0],
            beta: [b3, b2, b1],
            beta4: 1,
        }
    }

    pub fn cubic(a3: Rat, a2: Rat, a1: Rat, a0: Rat, b3: Rat, b2: Rat, b1: Rat) -> Self {
        CoefficientVector {
            alpha: [a3, a2, a1, a0],
            beta: [b3, b2, b1],
            beta4: 0,
        }
    }

    pub fn a3(&self) -> &Rat {
        &self.alpha[0]
    }
    pub fn a2(&self) -> &Rat {
        &self.alpha[1]
    }
    pub fn a1(&self) -> &Rat {
        &self.alpha[2]
    }
    pub fn a0(&self) -> &Rat {
        &self.alpha[3]
    }
    pub fn b3(&self) -> &Rat {
        &self.beta[0]
    }
    pub fn b2(&self) -> &Rat {
        &self.beta[1]
    }
    pub fn b1(&self) -> &Rat {
        &self.beta[2]
    }

    pub fn all_nonnegative(&self) -> bool {
        self.alpha.iter().chain(self.beta.iter()).all(|c| !c.is_negative())
    }

    /// Multiply every coefficient by a positive scale.
    pub fn scaled(&self, lambda: &Rat) -> Self {
        assert!(lambda.is_positive(), "scale must be positive");
        CoefficientVector {
            alpha: [
                self.a3() * lambda,
                self.a2() * lambda,
                self.a1() * lambda,
                self.a0() * lambda,
            ],
            beta: [self.b3() * lambda, self.b2() * lambda, self.b1() * lambda],
            beta4: self.beta4,
        }
    }

    /// Rebuild the admittance this vector denotes.
    pub fn reassemble(&self) -> Result<RationalFunction<Rat>, ExactError> {
        let num = Poly::from_coeffs(vec![
            self.a0().clone(),
            self.a1().clone(),
            self.a2().clone(),
            self.a3().clone(),
        ]);
        let mut den_coeffs = vec![
            Rat::zero(),
            self.b1().clone(),
            self.b2().clone(),
            self.b3().clone(),
        ];
        if self.beta4 == 1 {
            den_coeffs.push(Rat::one());
        }
        RationalFunction::new(num, Poly::from_coeffs(den_coeffs))
    }
}

/// Read quartic-form coefficients off a numerator/denominator pair.
///
/// Requires the pair as given to have a degree-4 denominator with zero
/// constant term and a numerator of degree at most 3; both are rescaled so
/// the `s^4` coefficient is exactly one.
pub fn extract_quartic(num: &Poly<Rat>, den: &Poly<Rat>) -> Result<CoefficientVector, ExactError> {
    if den.degree() != Some(4) {
        return Err(ExactError::ShapeMismatch(format!(
            "denominator degree {:?}, need exactly 4",
            den.degree().map(|d| d as i64).unwrap_or(-1)
        )));
    }
    if !den.constant_term().is_zero() {
        return Err(ExactError::ShapeMismatch(
            "denominator must have zero constant term".into(),
        ));
    }
    if num.degree().map(|d| d > 3).unwrap_or(false) {
        return Err(ExactError::ShapeMismatch(
            "numerator degree exceeds 3".into(),
        ));
    }
    let scale = den.leading().unwrap().recip().expect("nonzero leading");
    let num = num.mul_scalar(&scale);
    let den = den.mul_scalar(&scale);
    Ok(CoefficientVector::quartic(
        num.coeff(3),
        num.coeff(2),
        num.coeff(1),
        num.coeff(0),
        den.coeff(3),
        den.coeff(2),
        den.coeff(1),
    ))
}

/// Read cubic-form coefficients off a numerator/denominator pair as given.
/// The tuple is one representative; classifiers own any rescaling.
pub fn extract_cubic(num: &Poly<Rat>, den: &Poly<Rat>) -> Result<CoefficientVector, ExactError> {
    if den.is_zero() || den.degree().map(|d| d > 3).unwrap_or(false) {
        return Err(ExactError::ShapeMismatch(
            "denominator degree must be between 1 and 3".into(),
        ));
    }
    if !den.constant_term().is_zero() {
        return Err(ExactError::ShapeMismatch(
            "denominator must have zero constant term".into(),
        ));
    }
    if num.degree().map(|d| d > 3).unwrap_or(false) {
        return Err(ExactError::ShapeMismatch(
            "numerator degree exceeds 3".into(),
        ));
    }
    Ok(CoefficientVector::cubic(
        num.coeff(3),
        num.coeff(2),
        num.coeff(1),
        num.coeff(0),
        den.coeff(3),
        den.coeff(2),
        den.coeff(1),
    ))
}

/// Bring a canonical admittance into one of the two coefficient forms,
/// multiplying numerator and denominator by `s` when the reduced denominator
/// has a nonzero constant term. This is the dispatch used when an admittance
/// arrives as a function rather than as a literal coefficient list.
pub fn coefficient_form(rf: &RationalFunction<Rat>) -> Result<CoefficientVector, ExactError> {
    let (mut num, mut den) = (rf.num().clone(), rf.den().clone());
    if rf.is_zero() {
        return Err(ExactError::ShapeMismatch("zero admittance".into()));
    }
    if !den.constant_term().is_zero() {
        num = num.shift_up(1);
        den = den.shift_up(1);
    }
    match den.degree() {
        Some(4) => extract_quartic(&num, &den),
        Some(d) if d <= 3 => extract_cubic(&num, &den),
        other => Err(ExactError::ShapeMismatch(format!(
            "denominator degree {:?} outside the admissible family",
            other
        ))),
    }
}
