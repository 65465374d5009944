//! Exponent vectors in `k[x1, x2, x3, x4]` and pure-difference binomials.
//!
//! Variables are indexed `0..4` internally and printed as `x1..x4`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x1^e1 x2^e2 x3^e3 x4^e4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub [u32; 4]);

impl ExponentVector {
    pub const ONE: ExponentVector = ExponentVector([0; 4]);

    pub const fn new(e: [u32; 4]) -> Self {
        ExponentVector(e)
    }

    /// `x_i^k`.
    pub fn pure_power(i: usize, k: u32) -> Self {
        let mut e = [0; 4];
        e[i] = k;
        ExponentVector(e)
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    #[inline]
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Weighted degree `sum e_i * w_i`; for the semigroup generators this is
    /// the S-degree.
    #[inline]
    pub fn weighted_degree(&self, w: &[u64; 4]) -> u64 {
        self.0.iter().zip(w).map(|(&e, &n)| e as u64 * n).sum()
    }

    /// Variables with positive exponent, as a bitmask (bit `i` is `x_{i+1}`).
    #[inline]
    pub fn support(&self) -> u8 {
        let mut m = 0;
        for i in 0..4 {
            if self.0[i] > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    #[inline]
    pub fn contains_var(&self, i: usize) -> bool {
        self.0[i] > 0
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.0[0] <= other.0[0]
            && self.0[1] <= other.0[1]
            && self.0[2] <= other.0[2]
            && self.0[3] <= other.0[3]
    }

    #[inline]
    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(std::array::from_fn(|i| self.0[i].max(other.0[i])))
    }

    #[inline]
    pub fn gcd(&self, other: &Self) -> Self {
        ExponentVector(std::array::from_fn(|i| self.0[i].min(other.0[i])))
    }

    #[inline]
    pub fn is_coprime(&self, other: &Self) -> bool {
        self.support() & other.support() == 0
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        ExponentVector(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.divides(self) {
            Some(self.div_unchecked(other))
        } else {
            None
        }
    }

    #[inline]
    pub(crate) fn div_unchecked(&self, other: &Self) -> Self {
        ExponentVector(std::array::from_fn(|i| self.0[i] - other.0[i]))
    }

    /// Colon `x^self : x^other`, i.e. `x^self / gcd(x^self, x^other)`.
    #[inline]
    pub fn colon(&self, other: &Self) -> Self {
        ExponentVector(std::array::from_fn(|i| self.0[i].saturating_sub(other.0[i])))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for i in 0..4 {
            let e = self.0[i];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    /// Parses `1`, `x3`, `x1^5*x3^2`, `x1^5 x3^2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("cannot parse monomial `{s}`"));
        if s == "1" {
            return Ok(ExponentVector::ONE);
        }
        let mut e = [0u32; 4];
        for tok in s.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let tok = tok.strip_prefix('x').ok_or_else(bad)?;
            let (var, exp) = match tok.split_once('^') {
                Some((v, k)) => (v, k.parse::<u32>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let var: usize = var.parse().map_err(|_| bad())?;
            if !(1..=4).contains(&var) {
                return Err(bad());
            }
            e[var - 1] += exp;
        }
        Ok(ExponentVector(e))
    }
}

/// A binomial `x^plus - x^minus` of the toric ideal.
///
/// The two terms are coprime and distinct. Equality is structural; use
/// [`Binomial::same_up_to_sign`] or [`Binomial::canonical`] when the sign does
/// not matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: ExponentVector,
    pub minus: ExponentVector,
}

impl Binomial {
    /// Builds `x^plus - x^minus` after cancelling the common monomial factor.
    /// Returns `None` when the two terms coincide.
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Option<Self> {
        if plus == minus {
            return None;
        }
        let g = plus.gcd(&minus);
        Some(Binomial { plus: plus.div_unchecked(&g), minus: minus.div_unchecked(&g) })
    }

    pub fn from_arrays(plus: [u32; 4], minus: [u32; 4]) -> Option<Self> {
        Self::new(ExponentVector(plus), ExponentVector(minus))
    }

    pub fn flipped(&self) -> Self {
        Binomial { plus: self.minus, minus: self.plus }
    }

    /// The orientation whose `plus` term is larger as an exponent array.
    pub fn canonical(&self) -> Self {
        match self.plus.cmp(&self.minus) {
            Ordering::Less => self.flipped(),
            _ => *self,
        }
    }

    pub fn same_up_to_sign(&self, other: &Self) -> bool {
        self == other || self.flipped() == *other
    }

    pub fn support(&self) -> u8 {
        self.plus.support() | self.minus.support()
    }

    pub fn has_full_support(&self) -> bool {
        self.support() == 0b1111
    }

    /// Common S-degree of the two terms, or `None` if they differ.
    pub fn homogeneous_degree(&self, gens: &[u64; 4]) -> Option<u64> {
        let d = self.plus.weighted_degree(gens);
        (d == self.minus.weighted_degree(gens)).then_some(d)
    }

    /// The vector `plus - minus`, an element of the kernel lattice.
    pub fn difference(&self) -> [i64; 4] {
        std::array::from_fn(|i| self.plus.0[i] as i64 - self.minus.0[i] as i64)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

impl FromStr for Binomial {
    type Err = Error;

    /// Parses `x1^5 - x3*x4`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('-')
            .ok_or_else(|| Error::InvalidInput(format!("cannot parse binomial `{s}`")))?;
        Binomial::new(a.parse()?, b.parse()?)
            .ok_or_else(|| Error::InvalidInput(format!("binomial `{s}` is zero")))
    }
}

/// Sorted canonical forms, for comparing generating sets up to sign and order.
pub fn canonical_set(bs: &[Binomial]) -> Vec<Binomial> {
    let mut v: Vec<Binomial> = bs.iter().map(Binomial::canonical).collect();
    v.sort();
    v.dedup();
    v
}
