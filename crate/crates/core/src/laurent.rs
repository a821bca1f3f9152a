//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};

/// Sparse map exponent → coefficient. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds `Σ coeffs[k] t^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(low + k as i64, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Span `max_exp − min_exp`; `None` for zero.
    pub fn width(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// `p(t) ↦ p(t⁻¹)`
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when `divisor` does not divide.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let d_low = divisor.min_exp()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_high = divisor.max_exp().unwrap();
        let d_lead = &divisor.terms[&d_high];
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(r_high) = rem.max_exp() {
            if r_high - rem.min_exp().unwrap() < d_high - d_low {
                return None;
            }
            let r_lead = &rem.terms[&r_high];
            if !(r_lead % d_lead).is_zero() {
                return None;
            }
            let q = Self::monomial(r_lead / d_lead, r_high - d_high);
            rem = &rem - &(&q * divisor);
            quotient = &quotient + &q;
        }
        Some(quotient)
    }

    /// Multiplies by the unit `±t^k` that makes the lowest exponent 0 and the
    /// lowest coefficient positive.
    pub fn normalize(&self) -> Result<Self> {
        let low = self.min_exp().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(-low);
        Ok(if self.terms[&low].is_negative() {
            -&shifted
        } else {
            shifted
        })
    }

    /// [`normalize`](Self::normalize) that maps zero to zero.
    pub fn normalized_or_zero(&self) -> Self {
        self.normalize().unwrap_or_default()
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn eq_up_to_units(&self, other: &LaurentPoly) -> bool {
        self.normalized_or_zero() == other.normalized_or_zero()
    }

    /// Coefficient list from the lowest exponent, as `i64` where representable.
    pub fn to_i64_coeffs(&self) -> Option<(i64, Vec<i64>)> {
        let low = self.min_exp()?;
        let high = self.max_exp()?;
        (low..=high)
            .map(|e| self.coeff(e).to_i64())
            .collect::<Option<Vec<_>>>()
            .map(|c| (low, c))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `1 - 3t + t^2`, `t^-1 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if e == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{magnitude}{var}")?;
            }
        }
        Ok(())
    }
}

/// JSON form `{"exponent": coefficient}`; coefficients outside `i64` become strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => map.serialize_entry(&e.to_string(), &v)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}
