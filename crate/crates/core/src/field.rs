//! Prime-field arithmetic GF(q).
//!
//! Matrix code works on raw `u32` residues through [`PrimeField`]; the
//! [`FieldElement`] wrapper carries its modulus and rejects mixed-field
//! operations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported modulus.
pub const MAX_MODULUS: u32 = 1 << 16;

/// The prime field GF(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&q) {
            return Err(Error::Usage(format!(
                "field size q={q} outside supported range 2..={MAX_MODULUS}"
            )));
        }
        if !is_prime(q) {
            return Err(Error::Usage(format!("field size q={q} is not prime")));
        }
        Ok(Self { q })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >= self.q {
            return Err(Error::Usage(format!(
                "value {value} is not a residue mod {}",
                self.q
            )));
        }
        Ok(FieldElement { value, q: self.q })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, q: self.q }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1, q: self.q }
    }

    /// Reduce an arbitrary integer into the field.
    #[inline]
    pub fn reduce(&self, value: i64) -> u32 {
        value.rem_euclid(self.q as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.q == 0 {
            return Err(Error::Domain(format!("inverse of zero in GF({})", self.q)));
        }
        let (mut old_r, mut r) = (a as i64, self.q as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let quot = old_r / r;
            (old_r, r) = (r, old_r - quot * r);
            (old_s, s) = (s, old_s - quot * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(self.reduce(old_s))
    }

    /// Iterate over all field elements as raw residues.
    pub fn residues(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of GF(q) tagged with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    q: u32,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { q: self.q }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<PrimeField> {
        if self.q != other.q {
            return Err(Error::Usage(format!(
                "mixing elements of GF({}) and GF({})",
                self.q, other.q
            )));
        }
        Ok(self.field())
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self { value: f.add(self.value, other.value), q: self.q })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self { value: f.sub(self.value, other.value), q: self.q })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        let f = self.same_field(&other)?;
        Ok(Self { value: f.mul(self.value, other.value), q: self.q })
    }

    pub fn inv(self) -> Result<Self> {
        let value = self.field().inv(self.value)?;
        Ok(Self { value, q: self.q })
    }
}

// The operator impls panic on mixed fields; use the `checked_*` methods when
// the operands may come from different fields.
impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: self.field().neg(self.value), q: self.q }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(q: u32, v: u32) -> FieldElement {
        PrimeField::new(q).unwrap().element(v).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!((el(3, 2) + el(3, 2)).value(), 1);
        assert_eq!(el(5, 3).inv().unwrap().value(), 2);
        assert_eq!((-el(2, 1)).value(), 1);
    }

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(65537).is_err());
        assert!(PrimeField::new(65521).is_ok());
        assert!(PrimeField::new(7).unwrap().element(7).is_err());
    }

    #[test]
    fn inverse_of_zero_is_domain_error() {
        assert!(matches!(el(7, 0).inv(), Err(Error::Domain(_))));
    }

    #[test]
    fn mixing_fields_is_usage_error() {
        assert!(matches!(el(3, 1).checked_add(el(5, 1)), Err(Error::Usage(_))));
        assert!(matches!(el(3, 1).checked_mul(el(5, 1)), Err(Error::Usage(_))));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u32, 3, 5, 7] {
            let f = PrimeField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_for_larger_primes() {
        for q in [11u32, 257, 65521] {
            let f = PrimeField::new(q).unwrap();
            for a in (1..q).step_by((q / 97).max(1) as usize) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
            }
        }
    }
}
