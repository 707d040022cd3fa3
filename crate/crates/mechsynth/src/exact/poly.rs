//! Dense univariate polynomials in the Laplace variable `s`.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! trimmed; the empty coefficient list is the zero polynomial.

use std::fmt;

/// Coefficient field for polynomials and rational functions.
///
/// Implemented by [`Rat`](super::Rat) (exact rationals) and
/// [`Quad`](super::Quad) (rationals extended by a single square root).
/// Arithmetic is exposed as associated functions so implementors stay free
/// to provide ordinary operator impls without method-resolution clashes.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Sign in the real embedding; drives the canonical-form conventions.
    fn is_negative(&self) -> bool;
    fn add(a: &Self, b: &Self) -> Self;
    fn sub(a: &Self, b: &Self) -> Self;
    fn mul(a: &Self, b: &Self) -> Self;
    fn neg(a: &Self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(a: &Self) -> Option<Self>;
    fn div(a: &Self, b: &Self) -> Option<Self> {
        Self::inv(b).map(|i| Self::mul(a, &i))
    }
    /// Embed an exact rational.
    fn from_rat(r: &super::Rat) -> Self;

    /// Polynomial gcd over this field. The default is the monic Euclidean
    /// algorithm; `Rat` overrides it with a fraction-free subresultant
    /// remainder sequence to keep intermediate coefficients small.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        euclid_gcd(a, b)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K: Scalar> {
    coeffs: Vec<K>,
}

impl<K: Scalar> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c * s^deg`.
    pub fn monomial(c: K, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The variable `s` itself.
    pub fn var() -> Self {
        Poly::monomial(K::one(), 1)
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(K::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `s^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> K {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| *c == K::one()).unwrap_or(false)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(K::add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(K::sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| K::neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = K::add(&out[i + j], &K::mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| K::mul(a, c)).collect())
    }

    /// Multiply by `s^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = K::add(&K::mul(&acc, x), c);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = K::inv(d.leading().unwrap()).expect("leading coefficient not invertible");
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![K::zero(); rem.len() - dd];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let factor = K::mul(rem.last().unwrap(), &lead_inv);
            if !factor.is_zero() {
                quot[k] = factor.clone();
                for (j, c) in d.coeffs.iter().enumerate() {
                    rem[k + j] = K::sub(&rem[k + j], &K::mul(&factor, c));
                }
            }
            rem.pop();
            while rem.last().is_some_and(K::is_zero) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Division known to be exact; debug-asserts a zero remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "exact_div: nonzero remainder");
        q
    }

    /// Monic gcd (the zero polynomial for two zero inputs).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        K::poly_gcd(a, b)
    }

    pub fn lcm(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let g = Self::gcd(a, b);
        a.mul(b).exact_div(&g).monic()
    }

    /// Scale to leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = K::inv(l).expect("leading coefficient not invertible");
                self.mul_scalar(&inv)
            }
        }
    }

    pub fn map_scalars<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

/// Monic Euclidean gcd, the generic fallback for any coefficient field.
pub fn euclid_gcd<K: Scalar>(a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

impl<K: Scalar> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Scalar> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", K::neg(c))
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_is_one = mag == K::one();
            match (i, coeff_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "s")?,
                (1, false) => write!(f, "{mag}*s")?,
                (_, true) => write!(f, "s^{i}")?,
                (_, false) => write!(f, "{mag}*s^{i}")?,
            }
        }
        Ok(())
    }
}
