//! Rational functions in `s` over an exact coefficient field.
//!
//! Canonical form: numerator and denominator coprime, denominator monic,
//! zero stored as 0/1. Equality of canonical values is therefore plain
//! structural comparison, which is what every oracle check in this crate
//! relies on.

use std::fmt;
use std::str::FromStr;

use super::poly::{Poly, Scalar};
use super::{ExactError, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction<K: Scalar> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Scalar> RationalFunction<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        Ok(rf)
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: K) -> Self {
        RationalFunction::from_poly(Poly::constant(c))
    }

    /// The variable `s` as a rational function.
    pub fn var() -> Self {
        RationalFunction::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = Poly::gcd(&self.num, &self.den);
        if g.degree().map(|d| d > 0).unwrap_or(false) {
            self.num = self.num.exact_div(&g);
            self.den = self.den.exact_div(&g);
        }
        let lead = self.den.leading().expect("nonzero denominator").clone();
        if lead != K::one() {
            let inv = K::inv(&lead).expect("field inverse");
            self.num = self.num.mul_scalar(&inv);
            self.den = self.den.mul_scalar(&inv);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("denominator product nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("denominator product nonzero")
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        RationalFunction::new(num, den).expect("denominator product nonzero")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        RationalFunction::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Evaluate at a point; `None` on a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(K::mul(&self.num.eval(x), &K::inv(&d).unwrap()))
    }

    pub fn map_scalars<L: Scalar>(&self, f: impl Fn(&K) -> L) -> RationalFunction<L> {
        // Scalar embeddings preserve coprimality and monicity, so the image
        // is already canonical.
        let num = self.num.map_scalars(&f);
        let den = self.den.map_scalars(&f);
        debug_assert!(den.is_monic());
        RationalFunction { num, den }
    }
}

impl RationalFunction<Rat> {
    pub fn to_quad(&self) -> RationalFunction<super::Quad> {
        self.map_scalars(|c| super::Quad::from_rat(c.clone()))
    }
}

impl<K: Scalar> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<K: Scalar> fmt::Debug for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse a polynomial in `s` with integer or `p/q*`-style coefficients.
/// Accepted terms: `3`, `s`, `-s^2`, `2s^3`, `2*s^3`, `3/4*s`.
fn parse_poly(text: &str) -> Result<Poly<Rat>, ExactError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ExactError::BadFunction(text.to_string()));
    }
    let bytes = compact.as_bytes();
    let mut terms: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' && i != start {
            terms.push((start, i));
            start = i;
        }
    }
    terms.push((start, compact.len()));

    let mut poly = Poly::zero();
    for (a, b) in terms {
        let term = &compact[a..b];
        poly = poly.add(&parse_term(term, text)?);
    }
    Ok(poly)
}

fn parse_term(term: &str, whole: &str) -> Result<Poly<Rat>, ExactError> {
    let err = || ExactError::BadFunction(whole.to_string());
    let (sign, rest) = match term.strip_prefix('-') {
        Some(r) => (-Rat::one(), r),
        None => (Rat::one(), term.strip_prefix('+').unwrap_or(term)),
    };
    if rest.is_empty() {
        return Err(err());
    }
    // Split into optional coefficient literal and optional s-power.
    let (coef_str, var_str) = match rest.find('s') {
        Some(pos) => (&rest[..pos], &rest[pos..]),
        None => (rest, ""),
    };
    let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
    let coef = if coef_str.is_empty() {
        Rat::one()
    } else {
        coef_str.parse::<Rat>().map_err(|_| err())?
    };
    let degree = if var_str.is_empty() {
        0
    } else if var_str == "s" {
        1
    } else {
        let exp = var_str.strip_prefix("s^").ok_or_else(err)?;
        exp.parse::<usize>().map_err(|_| err())?
    };
    Ok(Poly::monomial(&sign * &coef, degree))
}

/// Strip one matched outer parenthesis pair, if it encloses the whole string.
fn strip_outer_parens(s: &str) -> Option<&str> {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return None;
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return None;
                }
            }
            _ => {}
        }
    }
    Some(&s[1..s.len() - 1])
}

impl FromStr for RationalFunction<Rat> {
    type Err = ExactError;

    /// Parses `"(num)/(den)"`, a bare polynomial, or `num/den` split at the
    /// last top-level `/`. Examples: `"k/s"` style `"2/s"`,
    /// `"(s^3+2s^2+2s+3)/(s^3+s^2+2s)"`, `"s^2+1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        // Fully parenthesized (A)/(B)
        let mut depth = 0usize;
        if s.starts_with('(') {
            for (i, c) in s.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            let rest = s[i + 1..].trim_start();
                            if let Some(den_part) = rest.strip_prefix('/') {
                                let num = parse_poly(&s[1..i])?;
                                let den_txt =
                                    strip_outer_parens(den_part).unwrap_or(den_part.trim());
                                let den = parse_poly(den_txt)?;
                                return RationalFunction::new(num, den);
                            }
                            break;
                        }
                    }
                    _ => {}
                }
            }
            if let Some(inner) = strip_outer_parens(s) {
                return RationalFunction::new(parse_poly(inner)?, Poly::one());
            }
        }
        // Bare polynomial
        if let Ok(p) = parse_poly(s) {
            return RationalFunction::new(p, Poly::one());
        }
        // num/den at the last '/'
        if let Some(pos) = s.rfind('/') {
            let num_txt = s[..pos].trim();
            let den_txt = s[pos + 1..].trim();
            let num = parse_poly(strip_outer_parens(num_txt).unwrap_or(num_txt))?;
            let den = parse_poly(strip_outer_parens(den_txt).unwrap_or(den_txt))?;
            return RationalFunction::new(num, den);
        }
        Err(ExactError::BadFunction(s.to_string()))
    }
}
