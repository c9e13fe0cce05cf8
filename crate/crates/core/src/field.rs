//! Prime fields and roots of unity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible modulus; keeps every product of two residues inside `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// A residue modulo the prime of some [`PrimeField`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Caller guarantees `x` is already reduced.
    pub(crate) fn from_residue(x: u64) -> Self {
        FieldElement(x)
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer.
    pub fn elem(self, x: i64) -> FieldElement {
        FieldElement(x.rem_euclid(self.p as i64) as u64)
    }

    pub fn add(self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement((x.0 + y.0) % self.p)
    }

    pub fn sub(self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement((x.0 + self.p - y.0) % self.p)
    }

    pub fn neg(self, x: FieldElement) -> FieldElement {
        FieldElement((self.p - x.0) % self.p)
    }

    pub fn mul(self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(x.0 * y.0 % self.p)
    }

    pub fn pow(self, x: FieldElement, e: u64) -> FieldElement {
        FieldElement(pow_mod(x.0, e, self.p))
    }

    pub fn inv(self, x: FieldElement) -> Result<FieldElement> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement(pow_mod(x.0, self.p - 2, self.p)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(self, x: FieldElement) -> Option<u64> {
        if x.0 == 0 {
            return None;
        }
        let mut acc = x.0;
        let mut d = 1;
        while acc != 1 {
            acc = acc * x.0 % self.p;
            d += 1;
        }
        Some(d)
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.p).map(FieldElement)
    }

    pub fn units(self) -> impl Iterator<Item = FieldElement> {
        (1..self.p).map(FieldElement)
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `a / gcd(a, p)`: the order of the root of unity that parametrises the
/// commutation relations in characteristic `p`.
///
/// Only one factor of `gcd(a, p)` is divided out, so when `p^2 | a` the result
/// is still divisible by `p` and [`find_primitive_root`] fails for it.
pub fn derive_a_bar(a: u64, p: u64) -> u64 {
    a / gcd(a, p)
}

/// Smallest residue of multiplicative order exactly `a_bar`.
pub fn find_primitive_root(a_bar: u64, field: PrimeField) -> Result<FieldElement> {
    let p = field.modulus();
    if a_bar == 0 || !(p - 1).is_multiple_of(a_bar) {
        return Err(Error::NoSuchRoot { a_bar, p });
    }
    field
        .units()
        .find(|&x| field.order(x) == Some(a_bar))
        .ok_or(Error::NoSuchRoot { a_bar, p })
}

/// The ground field together with the exponent `a`, the derived `a_bar` and a
/// chosen primitive `a_bar`-th root of unity `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    field: PrimeField,
    a: u64,
    a_bar: u64,
    q: FieldElement,
    q_inv: FieldElement,
}

impl FieldSpec {
    /// Uses the smallest primitive root.
    pub fn new(p: u64, a: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        check_exponent(a)?;
        let a_bar = derive_a_bar(a, p);
        let q = find_primitive_root(a_bar, field)?;
        Self::assemble(field, a, a_bar, q)
    }

    /// Uses a caller-supplied root, which must have order exactly `a_bar`.
    pub fn with_root(p: u64, a: u64, q: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        check_exponent(a)?;
        let a_bar = derive_a_bar(a, p);
        if !(p - 1).is_multiple_of(a_bar) {
            return Err(Error::NoSuchRoot { a_bar, p });
        }
        let q = FieldElement(q % p);
        if field.order(q) != Some(a_bar) {
            return Err(Error::NotPrimitiveRoot { q: q.0, a_bar, p });
        }
        Self::assemble(field, a, a_bar, q)
    }

    fn assemble(field: PrimeField, a: u64, a_bar: u64, q: FieldElement) -> Result<Self> {
        let q_inv = field.inv(q)?;
        Ok(Self { field, a, a_bar, q, q_inv })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.modulus()
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn a_bar(&self) -> u64 {
        self.a_bar
    }

    pub fn q(&self) -> FieldElement {
        self.q
    }

    pub fn q_inv(&self) -> FieldElement {
        self.q_inv
    }
}

fn check_exponent(a: u64) -> Result<()> {
    if a < 2 {
        return Err(Error::InvalidParameter(format!("exponent a = {a} must be at least 2")));
    }
    Ok(())
}
