//! Exact rational scalars.
//!
//! `Rat` wraps an arbitrary-precision reduced fraction: denominator always
//! positive, numerator and denominator coprime, zero stored as 0/1. The text
//! form is `p/q` or plain `p`; anything float-like is rejected.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Poly, Scalar};
use super::ExactError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    /// `num/den`, reduced and sign-normalized.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    /// Convenience over machine integers; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den)).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn min(a: &Rat, b: &Rat) -> Rat {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Rat, b: &Rat) -> Rat {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Exact square root when both numerator and denominator are perfect
    /// squares; `None` otherwise (including all negative inputs).
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = exact_int_sqrt(self.numer())?;
        let d = exact_int_sqrt(self.denom())?;
        Some(Rat(BigRational::new(n, d)))
    }

    pub fn is_square(&self) -> bool {
        self.sqrt_exact().is_some()
    }
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl FromStr for Rat {
    type Err = ExactError;

    /// Accepts `p` or `p/q` with optional leading sign. Decimal points,
    /// exponents, and embedded whitespace are format errors: the toolkit's
    /// interfaces are exact-rational only.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s.contains(['.', 'e', 'E']) || s.contains(char::is_whitespace) {
            return Err(ExactError::BadRational(s.to_string()));
        }
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num_str).map_err(|_| ExactError::BadRational(s.to_string()))?;
        let den = BigInt::from_str(den_str).map_err(|_| ExactError::BadRational(s.to_string()))?;
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if den.sign() == Sign::Minus {
            return Err(ExactError::BadRational(s.to_string()));
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Rat::is_negative(self)
    }
    fn add(a: &Self, b: &Self) -> Self {
        a + b
    }
    fn sub(a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(a: &Self) -> Self {
        -a
    }
    fn inv(a: &Self) -> Option<Self> {
        a.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    /// Subresultant PRS on the integer-cleared polynomials; fraction-free
    /// internally, monic on the way out.
    fn poly_gcd(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let ai = clear_denominators(a);
        let bi = clear_denominators(b);
        let g = int_poly_gcd(ai, bi);
        Poly::from_coeffs(g.into_iter().map(Rat::from_bigint).collect()).monic()
    }
}

impl Poly<Rat> {
    /// Coefficient-list text form, ascending in degree: `"[2, 2/1, 1, 1]"`
    /// is `2 + 2s + s^2 + s^3`.
    pub fn from_coeff_text(text: &str) -> Result<Self, ExactError> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| ExactError::BadFunction(text.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs: Result<Vec<Rat>, _> = inner.split(',').map(Rat::from_str).collect();
        Ok(Poly::from_coeffs(coeffs?))
    }

    pub fn to_coeff_text(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Scale a rational polynomial to integer coefficients (primitive part).
fn clear_denominators(p: &Poly<Rat>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

fn int_deg(p: &[BigInt]) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

/// `lc(b)^(deg a - deg b + 1) * a  mod  b`, computed synthetically. Steps
/// that drop the degree by more than one apply fewer multiplications, so the
/// remainder is rescaled at the end to match the exact pseudo-remainder.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_deg(b);
    let lb = b.last().unwrap().clone();
    let needed = int_deg(a) + 1 - db; // delta + 1
    let mut applied = 0usize;
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() >= db + 1 {
        let k = r.len() - 1 - db;
        let head = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        applied += 1;
        for j in 0..=db {
            r[k + j] -= &head * &b[j];
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            return r;
        }
    }
    if applied < needed {
        let scale = lb.pow((needed - applied) as u32);
        for c in r.iter_mut() {
            *c = &*c * &scale;
        }
    }
    r
}

/// Subresultant polynomial remainder sequence over the integers.
/// Returns the primitive gcd of two nonzero primitive polynomials.
fn int_poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if int_deg(&a) >= int_deg(&b) {
        (a, b)
    } else {
        (b, a)
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = int_deg(&a) - int_deg(&b);
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return primitive_part(b);
        }
        if int_deg(&r) == 0 {
            return vec![BigInt::one()];
        }
        let divisor = &g * h.pow(delta as u32);
        let r: Vec<BigInt> = r
            .into_iter()
            .map(|c| {
                let (q, rem) = c.div_rem(&divisor);
                debug_assert!(rem.is_zero(), "subresultant division must be exact");
                q
            })
            .collect();
        a = b;
        b = r;
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero(), "subresultant h-update must be exact");
            q
        };
    }
}
