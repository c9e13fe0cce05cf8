//! The quantum complete intersection
//! `k<x_1, …, x_c> / (x_i^a, x_i x_j - q x_j x_i for i < j)`
//! in its normal-form monomial basis `x_1^{e_1} ⋯ x_c^{e_c}`, `0 ≤ e_i < a`.
//!
//! Monomials are indexed by `Σ e_i a^{i-1}`, so `x_1` varies fastest. Products
//! are brought into normal form with `x_j x_i = q^{-1} x_i x_j` for `i < j`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, PrimeField};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    field: FieldSpec,
    c: usize,
}

impl AlgebraSpec {
    pub fn new(field: FieldSpec, c: usize) -> Result<Self> {
        if c < 2 {
            return Err(Error::InvalidParameter(format!("number of generators c = {c} must be at least 2")));
        }
        let a = field.a() as usize;
        if a.checked_pow(c as u32).is_none_or(|d| d > 1 << 20) {
            return Err(Error::InvalidParameter(format!("a^c = {a}^{c} is too large")));
        }
        Ok(Self { field, c })
    }

    /// `c` generators, exponent `a`, over `F_p` with the smallest primitive root.
    pub fn from_params(c: usize, a: u64, p: u64) -> Result<Self> {
        Self::new(FieldSpec::new(p, a)?, c)
    }

    pub fn field_spec(&self) -> FieldSpec {
        self.field
    }

    pub fn field(&self) -> PrimeField {
        self.field.field()
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn a(&self) -> usize {
        self.field.a() as usize
    }

    pub fn q(&self) -> FieldElement {
        self.field.q()
    }

    pub fn dim(&self) -> usize {
        self.a().pow(self.c as u32)
    }

    pub fn exponents(&self, index: usize) -> Vec<usize> {
        let a = self.a();
        let mut rest = index;
        (0..self.c)
            .map(|_| {
                let e = rest % a;
                rest /= a;
                e
            })
            .collect()
    }

    pub fn index_of(&self, exponents: &[usize]) -> usize {
        exponents.iter().rev().fold(0, |acc, &e| acc * self.a() + e)
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        (0..self.dim()).map(move |i| Monomial { exponents: self.exponents(i) })
    }

    /// All monomials other than 1; a basis of the radical.
    pub fn radical_basis(&self) -> Vec<Monomial> {
        self.monomials().skip(1).collect()
    }

    /// Product of the basis monomials with the given indices, as
    /// `(index, coefficient)`, or `None` when it vanishes.
    pub fn multiply_monomials(&self, left: usize, right: usize) -> Option<(usize, FieldElement)> {
        let l = self.exponents(left);
        let r = self.exponents(right);
        let a = self.a();
        let mut swaps = 0u64;
        let mut sum = Vec::with_capacity(self.c);
        for i in 0..self.c {
            if l[i] + r[i] >= a {
                return None;
            }
            sum.push(l[i] + r[i]);
            // every x_j on the right with j < i must pass the x_i on the left
            swaps += (l[i] * r[..i].iter().sum::<usize>()) as u64;
        }
        let coeff = self.field().pow(self.field.q_inv(), swaps % self.field.a_bar());
        Some((self.index_of(&sum), coeff))
    }

    /// Matrix of `y ↦ x y` on the monomial basis.
    pub fn left_mult_matrix(&self, x: &AlgebraElement) -> Matrix {
        self.mult_matrix(x, true)
    }

    /// Matrix of `y ↦ y x` on the monomial basis.
    pub fn right_mult_matrix(&self, x: &AlgebraElement) -> Matrix {
        self.mult_matrix(x, false)
    }

    fn mult_matrix(&self, x: &AlgebraElement, left: bool) -> Matrix {
        let n = self.dim();
        let field = self.field();
        let mut m = Matrix::zeros(field, n, n);
        for col in 0..n {
            for (&idx, &coeff) in &x.terms {
                let prod = if left {
                    self.multiply_monomials(idx, col)
                } else {
                    self.multiply_monomials(col, idx)
                };
                if let Some((row, f)) = prod {
                    let v = field.add(FieldElement::from_residue(m.get(row, col)), field.mul(coeff, f));
                    m.set(row, col, v.value());
                }
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<usize>,
}

impl Monomial {
    pub fn new(spec: &AlgebraSpec, exponents: Vec<usize>) -> Result<Self> {
        if exponents.len() != spec.c() {
            return Err(Error::WrongArity { expected: spec.c(), got: exponents.len() });
        }
        if let Some(&e) = exponents.iter().find(|&&e| e >= spec.a()) {
            return Err(Error::InvalidParameter(format!("exponent {e} is not below a = {}", spec.a())));
        }
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }
}

/// A sparse element of the algebra; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    spec: AlgebraSpec,
    terms: BTreeMap<usize, FieldElement>,
}

impl AlgebraElement {
    pub fn zero(spec: AlgebraSpec) -> Self {
        Self { spec, terms: BTreeMap::new() }
    }

    pub fn one(spec: AlgebraSpec) -> Self {
        Self::from_terms(spec, [(0, FieldElement::ONE)])
    }

    /// The generator `x_{i+1}` (zero-based `i`).
    pub fn generator(spec: AlgebraSpec, i: usize) -> Self {
        assert!(i < spec.c(), "generator index out of range");
        Self::from_terms(spec, [(spec.a().pow(i as u32), FieldElement::ONE)])
    }

    pub fn monomial(spec: AlgebraSpec, m: &Monomial) -> Self {
        Self::from_terms(spec, [(spec.index_of(m.exponents()), FieldElement::ONE)])
    }

    fn from_terms(spec: AlgebraSpec, terms: impl IntoIterator<Item = (usize, FieldElement)>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { spec, terms }
    }

    /// From coordinates on the monomial basis.
    pub fn from_dense(spec: AlgebraSpec, coords: &[u64]) -> Self {
        assert_eq!(coords.len(), spec.dim());
        let f = spec.field();
        Self::from_terms(spec, coords.iter().enumerate().map(|(i, &x)| (i, f.elem(x as i64))))
    }

    pub fn to_dense(&self) -> Vec<u64> {
        let mut v = vec![0; self.spec.dim()];
        for (&i, c) in &self.terms {
            v[i] = c.value();
        }
        v
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(&self.spec.index_of(m.exponents())).copied().unwrap_or_default()
    }

    /// `(monomial index, coefficient)` in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, FieldElement)> + '_ {
        self.terms.iter().map(|(&i, &c)| (i, c))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let f = self.spec.field();
        let mut terms = self.terms.clone();
        for (&i, &c) in &rhs.terms {
            let e = terms.entry(i).or_default();
            *e = f.add(*e, c);
        }
        Ok(Self::from_terms(self.spec, terms))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.scale(self.spec.field().elem(-1)))
    }

    pub fn scale(&self, s: FieldElement) -> Self {
        let f = self.spec.field();
        Self::from_terms(self.spec, self.terms.iter().map(|(&i, &c)| (i, f.mul(c, s))))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let f = self.spec.field();
        let mut acc: BTreeMap<usize, FieldElement> = BTreeMap::new();
        for (&i, &ci) in &self.terms {
            for (&j, &cj) in &rhs.terms {
                if let Some((k, w)) = self.spec.multiply_monomials(i, j) {
                    let e = acc.entry(k).or_default();
                    *e = f.add(*e, f.mul(f.mul(ci, cj), w));
                }
            }
        }
        Ok(Self::from_terms(self.spec, acc))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.spec), |acc, _| acc.mul(self).expect("same spec"))
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.spec != rhs.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }
}

/// Canonical text form `coeff*x1^e1…xc^ec + …` in ascending monomial order.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&i, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*")?;
            for (v, e) in self.spec.exponents(i).iter().enumerate() {
                write!(f, "x{}^{}", v + 1, e)?;
            }
        }
        Ok(())
    }
}

/// `u_λ = Σ λ_i x_i`.
pub fn u_lambda(spec: AlgebraSpec, lambda: &[FieldElement]) -> Result<AlgebraElement> {
    if lambda.len() != spec.c() {
        return Err(Error::WrongArity { expected: spec.c(), got: lambda.len() });
    }
    let a = spec.a();
    Ok(AlgebraElement::from_terms(
        spec,
        lambda.iter().enumerate().map(|(i, &l)| (a.pow(i as u32), l)),
    ))
}

/// The automorphism `x_i ↦ μ_i x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalAutomorphism {
    mu: Vec<FieldElement>,
}

impl DiagonalAutomorphism {
    pub fn new(mu: Vec<FieldElement>) -> Result<Self> {
        if mu.iter().any(|m| m.is_zero()) {
            return Err(Error::InvalidAutomorphism("every scaling factor must be nonzero".into()));
        }
        Ok(Self { mu })
    }

    pub fn identity(c: usize) -> Self {
        Self { mu: vec![FieldElement::ONE; c] }
    }

    pub fn mu(&self) -> &[FieldElement] {
        &self.mu
    }

    /// `ψ_μ ∘ ψ_ν = ψ_{μν}`.
    pub fn compose(&self, other: &Self, field: PrimeField) -> Self {
        assert_eq!(self.mu.len(), other.mu.len());
        Self { mu: self.mu.iter().zip(&other.mu).map(|(&a, &b)| field.mul(a, b)).collect() }
    }

    pub fn inverse(&self, field: PrimeField) -> Self {
        Self { mu: self.mu.iter().map(|&m| field.inv(m).expect("nonzero")).collect() }
    }

    /// Scale factor `∏ μ_i^{e_i}` on the monomial with the given index.
    pub fn monomial_factor(&self, spec: &AlgebraSpec, index: usize) -> FieldElement {
        let f = spec.field();
        spec.exponents(index)
            .iter()
            .zip(&self.mu)
            .fold(FieldElement::ONE, |acc, (&e, &m)| f.mul(acc, f.pow(m, e as u64)))
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if self.mu.len() != x.spec.c() {
            return Err(Error::WrongArity { expected: x.spec.c(), got: self.mu.len() });
        }
        let f = x.spec.field();
        Ok(AlgebraElement::from_terms(
            x.spec,
            x.terms.iter().map(|(&i, &c)| (i, f.mul(c, self.monomial_factor(&x.spec, i)))),
        ))
    }

    pub fn to_general(&self, spec: AlgebraSpec) -> Result<Automorphism> {
        let images = (0..spec.c())
            .map(|i| AlgebraElement::generator(spec, i).scale(self.mu[i]))
            .collect();
        Automorphism::new(spec, images)
    }
}

/// An automorphism given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    spec: AlgebraSpec,
    images: Vec<AlgebraElement>,
}

impl Automorphism {
    /// Checks that the defining relations map to zero and that the induced
    /// map on `r / r^2` is invertible.
    pub fn new(spec: AlgebraSpec, images: Vec<AlgebraElement>) -> Result<Self> {
        if images.len() != spec.c() {
            return Err(Error::WrongArity { expected: spec.c(), got: images.len() });
        }
        if images.iter().any(|x| x.spec != spec) {
            return Err(Error::SpecMismatch);
        }
        let a = spec.a() as u32;
        for (i, x) in images.iter().enumerate() {
            if !x.pow(a).is_zero() {
                return Err(Error::InvalidAutomorphism(format!("image of x{} is not nilpotent of order a", i + 1)));
            }
        }
        for i in 0..spec.c() {
            for j in i + 1..spec.c() {
                let lhs = images[i].mul(&images[j])?;
                let rhs = images[j].mul(&images[i])?.scale(spec.q());
                if !lhs.sub(&rhs)?.is_zero() {
                    return Err(Error::InvalidAutomorphism(format!(
                        "images of x{} and x{} violate the q-commutation relation",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let field = spec.field();
        let mut linear = Matrix::zeros(field, spec.c(), spec.c());
        for (i, x) in images.iter().enumerate() {
            for j in 0..spec.c() {
                linear.set(j, i, x.terms.get(&spec.a().pow(j as u32)).map_or(0, |c| c.value()));
            }
        }
        if linear.rank() < spec.c() {
            return Err(Error::InvalidAutomorphism("linear part is singular".into()));
        }
        Ok(Self { spec, images })
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if x.spec != self.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = AlgebraElement::zero(self.spec);
        for (&i, &c) in &x.terms {
            let mut term = AlgebraElement::one(self.spec).scale(c);
            for (g, &e) in self.spec.exponents(i).iter().enumerate() {
                term = term.mul(&self.images[g].pow(e as u32))?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }
}
