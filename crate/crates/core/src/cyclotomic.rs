//! Exact arithmetic in the ring of cyclotomic integers `Z[ζ_p]` for an odd
//! prime `p`, in the integral basis `{1, ζ, …, ζ^{p-2}}`. The relation
//! `ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})` keeps representations unique, so
//! equality and rationality tests are coefficientwise.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::is_prime;

/// An element of `Z[ζ_p]`, stored as `p - 1` arbitrary-precision
/// coefficients over the basis `{1, ζ, …, ζ^{p-2}}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        assert!(p >= 3 && is_prime(p as u64), "p must be an odd prime");
        CycInt { p, coeffs: vec![BigInt::zero(); (p - 1) as usize] }
    }

    pub fn one(p: u32) -> Self {
        Self::from_integer(p, BigInt::one())
    }

    pub fn from_integer(p: u32, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(p);
        x.coeffs[0] = c.into();
        x
    }

    /// `ζ_p^{j mod p}`, reduced to the canonical basis.
    pub fn root_of_unity(p: u32, j: i64) -> Self {
        let mut x = Self::zero(p);
        let e = j.rem_euclid(p as i64) as usize;
        if e < (p - 1) as usize {
            x.coeffs[e] = BigInt::one();
        } else {
            // ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})
            for c in x.coeffs.iter_mut() {
                *c = -BigInt::one();
            }
        }
        x
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The underlying integer if the element is rational, else an
    /// integrity error.
    pub fn as_integer(&self) -> Result<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::Integrity(format!("{self} is not a rational integer")))
        }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}` (consistently on all embeddings).
    pub fn conj(&self) -> CycInt {
        let p = self.p;
        let mut out = Self::zero(p);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // ζ^i ↦ ζ^{p-i}
            let e = ((p as usize) - i) % p as usize;
            if e < (p - 1) as usize {
                out.coeffs[e] += c;
            } else {
                for o in out.coeffs.iter_mut() {
                    *o -= c;
                }
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> CycInt {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    fn assert_same_field(&self, other: &CycInt) {
        assert_eq!(self.p, other.p, "mixed cyclotomic fields: Z[ζ_{}] vs Z[ζ_{}]", self.p, other.p);
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.assert_same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycInt { p: self.p, coeffs }
    }
}

impl AddAssign<&CycInt> for CycInt {
    fn add_assign(&mut self, rhs: &CycInt) {
        self.assert_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.assert_same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycInt { p: self.p, coeffs }
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.assert_same_field(rhs);
        let p = self.p as usize;
        // Convolution with exponents reduced mod p, then elimination of
        // the ζ^{p-1} component.
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[(i + j) % p] += a * b;
            }
        }
        let top = full.pop().unwrap();
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c -= &top;
            }
        }
        CycInt { p: self.p, coeffs: full }
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·ζ")?,
                _ => write!(f, "{c}·ζ^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CycInt", 2)?;
        s.serialize_field("p", &self.p)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}
