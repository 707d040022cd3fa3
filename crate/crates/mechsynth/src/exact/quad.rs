//! Real quadratic-extension scalars `a + b*sqrt(d)`.
//!
//! Used when a synthesis formula takes a square root whose radicand is not a
//! rational square: element values then live in `Q(sqrt(d))` and the
//! admittance oracle verifies them exactly in that field, never through
//! floats. All values mixed in one computation must share the same radical;
//! purely rational values (`b = 0`) are compatible with any radical.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Scalar;
use super::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quad {
    a: Rat,
    b: Rat,
    /// Positive non-square integer under the radical; zero when `b = 0`.
    d: BigInt,
}

impl Quad {
    pub fn from_rat(a: Rat) -> Self {
        Quad {
            a,
            b: Rat::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn new(a: Rat, b: Rat, d: BigInt) -> Self {
        if b.is_zero() {
            Quad::from_rat(a)
        } else {
            debug_assert!(d.is_positive(), "radical must be positive");
            debug_assert!(
                super::rat::Rat::from_bigint(d.clone()).sqrt_exact().is_none(),
                "radical must not be a perfect square"
            );
            Quad { a, b, d }
        }
    }

    /// Exact square root of a non-negative rational, pulling perfect-square
    /// factors out of the radical.
    pub fn sqrt_of(r: &Rat) -> Option<Quad> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Quad::from_rat(Rat::zero()));
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let t = r.numer() * r.denom();
        let (square_root, radical) = split_square(&t);
        let scale = Rat::new(square_root, r.denom().clone()).expect("positive denominator");
        if radical.is_one() {
            Some(Quad::from_rat(scale))
        } else {
            Some(Quad::new(Rat::zero(), scale, radical))
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_part(&self) -> (&Rat, &BigInt) {
        (&self.b, &self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    fn common_radical(&self, other: &Self) -> BigInt {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.d.clone(),
            (false, true) => self.d.clone(),
            (false, false) => {
                assert_eq!(self.d, other.d, "mixed radicals in one computation");
                self.d.clone()
            }
        }
    }

    /// `a^2 - b^2 d`, the field norm against the conjugate.
    fn norm(&self) -> Rat {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rat::from_bigint(self.d.clone()))
    }
}

/// `t = u^2 * d` with `d` kept free of small square factors.
fn split_square(t: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(t.is_positive());
    let mut rest = t.clone();
    let mut root = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000u32);
    while &p * &p <= rest && p <= limit {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            root *= &p;
        }
        p += 1;
    }
    // A large leftover may itself be a perfect square.
    let s = rest.sqrt();
    if &(&s * &s) == &rest {
        root *= s;
        rest = BigInt::one();
    }
    (root, rest)
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.d);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -&self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl Scalar for Quad {
    fn zero() -> Self {
        Quad::from_rat(Rat::zero())
    }

    fn one() -> Self {
        Quad::from_rat(Rat::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn is_negative(&self) -> bool {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => self.a.is_negative(),
            (true, false) => self.b.is_negative(),
            (false, false) => {
                // Compare a against -b*sqrt(d) by squaring on the correct side.
                let d = Rat::from_bigint(self.d.clone());
                let a2 = &self.a * &self.a;
                let b2d = &(&self.b * &self.b) * &d;
                if self.a.is_negative() && self.b.is_negative() {
                    true
                } else if !self.a.is_negative() && !self.b.is_negative() {
                    false
                } else if self.a.is_negative() {
                    // a < 0 < b: negative iff a^2 > b^2 d
                    a2 > b2d
                } else {
                    // b < 0 < a: negative iff a^2 < b^2 d
                    a2 < b2d
                }
            }
        }
    }

    fn add(x: &Self, y: &Self) -> Self {
        let d = x.common_radical(y);
        Quad::new(&x.a + &y.a, &x.b + &y.b, d)
    }

    fn sub(x: &Self, y: &Self) -> Self {
        let d = x.common_radical(y);
        Quad::new(&x.a - &y.a, &x.b - &y.b, d)
    }

    fn mul(x: &Self, y: &Self) -> Self {
        let d = x.common_radical(y);
        let dr = Rat::from_bigint(d.clone());
        let a = &(&x.a * &y.a) + &(&(&x.b * &y.b) * &dr);
        let b = &(&x.a * &y.b) + &(&x.b * &y.a);
        Quad::new(a, b, d)
    }

    fn neg(x: &Self) -> Self {
        Quad::new(-&x.a, -&x.b, x.d.clone())
    }

    fn inv(x: &Self) -> Option<Self> {
        if x.is_zero() {
            return None;
        }
        let n = x.norm();
        debug_assert!(!n.is_zero(), "nonzero quadratic element has nonzero norm");
        let n_inv = n.recip().unwrap();
        Some(Quad::new(&x.a * &n_inv, -&(&x.b * &n_inv), x.d.clone()))
    }

    fn from_rat(r: &Rat) -> Self {
        Quad::from_rat(r.clone())
    }
}
