//! Exact arithmetic in Z[zeta_e].
//!
//! Values are stored in the power basis `1, zeta, ..., zeta^(phi(e)-1)`
//! reduced modulo the cyclotomic polynomial, so equality is coefficientwise.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Rational;

/// Coefficients of `Phi_e`, lowest degree first.
pub fn cyclotomic_polynomial(e: usize) -> Vec<i64> {
    assert!(e >= 1, "cyclotomic polynomial of order 0");
    let divisors: Vec<usize> = (1..=e).filter(|d| e.is_multiple_of(*d)).collect();
    let mut known: Vec<(usize, Vec<i64>)> = Vec::new();
    for &d in &divisors {
        // x^d - 1
        let mut num = vec![0i64; d + 1];
        num[0] = -1;
        num[d] = 1;
        for (dd, phi) in &known {
            if d % dd == 0 {
                num = divide_monic(&num, phi);
            }
        }
        known.push((d, num));
    }
    known.pop().unwrap().1
}

/// Exact quotient of `num` by the monic `den`.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Shared per-conductor data: `Phi_e` and the reduced images of every `zeta^j`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloBasis {
    e: usize,
    phi: usize,
    poly: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

impl CycloBasis {
    pub fn new(e: usize) -> Arc<Self> {
        let poly = cyclotomic_polynomial(e);
        let phi = poly.len() - 1;
        let mut powers = Vec::with_capacity(e);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and reduce the top coefficient
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            for (j, c) in next.iter_mut().enumerate() {
                *c -= top * poly[j];
            }
            cur = next;
        }
        debug_assert_eq!(cur, powers[0]);
        Arc::new(CycloBasis { e, phi, poly, powers })
    }

    pub fn conductor(&self) -> usize {
        self.e
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }
}

/// An element of Z[zeta_e] in canonical reduced form.
#[derive(Clone)]
pub struct CyclotomicInt {
    basis: Arc<CycloBasis>,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(basis: &Arc<CycloBasis>) -> Self {
        CyclotomicInt { basis: basis.clone(), coeffs: vec![BigInt::zero(); basis.phi] }
    }

    pub fn from_int(basis: &Arc<CycloBasis>, n: impl Into<BigInt>) -> Self {
        let mut v = Self::zero(basis);
        v.coeffs[0] = n.into();
        v
    }

    pub fn one(basis: &Arc<CycloBasis>) -> Self {
        Self::from_int(basis, 1)
    }

    /// `zeta^j`, any integer `j`.
    pub fn zeta(basis: &Arc<CycloBasis>, j: i64) -> Self {
        let j = j.rem_euclid(basis.e as i64) as usize;
        CyclotomicInt { basis: basis.clone(), coeffs: basis.powers[j].iter().map(|&c| c.into()).collect() }
    }

    /// `sum_j m_j zeta^j` with `multiplicities.len() == e`.
    pub fn from_root_powers(basis: &Arc<CycloBasis>, multiplicities: &[i64]) -> Self {
        assert_eq!(multiplicities.len(), basis.e, "multiplicity vector must have length e");
        let mut v = Self::zero(basis);
        for (j, &m) in multiplicities.iter().enumerate() {
            if m != 0 {
                v.add_scaled_power(j, &BigInt::from(m));
            }
        }
        v
    }

    fn add_scaled_power(&mut self, j: usize, m: &BigInt) {
        for (c, &p) in self.coeffs.iter_mut().zip(&self.basis.powers[j % self.basis.e]) {
            if p != 0 {
                *c += m * p;
            }
        }
    }

    pub fn basis(&self) -> &Arc<CycloBasis> {
        &self.basis
    }

    pub fn conductor(&self) -> usize {
        self.basis.e
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Image under `zeta -> zeta^k`.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let e = self.basis.e;
        if k.gcd(&(e as i64)) != 1 {
            return Err(Error::NotCoprime { k, e });
        }
        let k = k.rem_euclid(e as i64) as usize;
        let mut out = Self::zero(&self.basis);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled_power(j * k % e, c);
            }
        }
        Ok(out)
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois_apply(-1).expect("-1 is a unit")
    }

    /// The value as a rational number when it lies in Z.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_integer().map(Rational::from_integer)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Non-authoritative floating point embedding with `zeta = exp(2 pi i / e)`.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let e = self.basis.e as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, c)| {
            let c = c.to_string().parse::<f64>().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * j as f64 / e;
            (re + c * t.cos(), im + c * t.sin())
        })
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.basis.e, other.basis.e, "cyclotomic values with different conductors");
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.basis.e == other.basis.e && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInt {}

impl Ord for CyclotomicInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis.e.cmp(&other.basis.e).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for CyclotomicInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for CyclotomicInt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.basis.e.hash(state);
        self.coeffs.hash(state);
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: Self) -> CyclotomicInt {
        self.check_same(rhs);
        CyclotomicInt {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: Self) -> CyclotomicInt {
        self.check_same(rhs);
        CyclotomicInt {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { basis: self.basis.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: Self) -> CyclotomicInt {
        self.check_same(rhs);
        let phi = self.basis.phi;
        let mut full = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += a * b;
                }
            }
        }
        let mut out = CyclotomicInt::zero(&self.basis);
        for (t, c) in full.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled_power(t, c);
            }
        }
        out
    }
}

impl Add for CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: Self) -> CyclotomicInt {
        &self + &rhs
    }
}

impl Mul for CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: Self) -> CyclotomicInt {
        &self * &rhs
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (j, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => format!("z{}", self.basis.e),
                (_, true) => format!("z{}^{j}", self.basis.e),
                (1, false) => format!("{mag}*z{}", self.basis.e),
                (_, false) => format!("{mag}*z{}^{j}", self.basis.e),
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sign, body)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "+") => write!(f, "{body}")?,
                (0, _) => write!(f, "-{body}")?,
                _ => write!(f, " {sign} {body}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CyclotomicInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CyclotomicInt", 2)?;
        s.serialize_field("e", &self.basis.e)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}
