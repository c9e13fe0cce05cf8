//! Rank varieties pushed through `F(λ) = (λ_1^a, …, λ_c^a)`.
//!
//! A direction `λ` lies in the rank variety of `M` when `M` is not free over
//! `k[u_λ] / (u_λ^a)`, i.e. when `a · rank(U^{a-1}) ≠ dim M` for
//! `U = Σ λ_i X_i`. The support variety of `M` is taken to be the image of
//! the rank variety under `F`, scanned over the rational points of
//! `P^{c-1}(F_p)`. A variety is stored as its set of projective points; the
//! empty set is the trivial variety `{0}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::linalg::Matrix;
use crate::module::ModuleRep;
use crate::par::{self, Strategy};

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    pub fn new(field: PrimeField, coords: &[FieldElement]) -> Result<Self> {
        let lead = coords.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroLambda)?;
        let inv = field.inv(*lead)?;
        Ok(Self { coords: coords.iter().map(|&x| field.mul(x, inv)).collect() })
    }

    pub fn from_ints(field: PrimeField, coords: &[i64]) -> Result<Self> {
        let v: Vec<FieldElement> = coords.iter().map(|&x| field.elem(x)).collect();
        Self::new(field, &v)
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn values(&self) -> Vec<u64> {
        self.coords.iter().map(|x| x.value()).collect()
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All rational points of `P^{c-1}(F_p)` in lexicographic order.
pub fn projective_points(c: usize, field: PrimeField) -> Vec<ProjPoint> {
    let p = field.modulus();
    let mut out = Vec::new();
    for lead in 0..c {
        let free = c - lead - 1;
        let count = p.pow(free as u32);
        for mut k in 0..count {
            let mut coords = vec![FieldElement::ZERO; c];
            coords[lead] = FieldElement::ONE;
            for slot in coords[lead + 1..].iter_mut().rev() {
                *slot = field.elem((k % p) as i64);
                k /= p;
            }
            out.push(ProjPoint { coords });
        }
    }
    out.sort();
    out
}

/// `F(λ) = (λ_1^a, …, λ_c^a)`, renormalised.
pub fn f_map(point: &ProjPoint, a: u64, field: PrimeField) -> ProjPoint {
    let powered: Vec<FieldElement> = point.coords.iter().map(|&x| field.pow(x, a)).collect();
    ProjPoint::new(field, &powered).expect("F(λ) is nonzero for nonzero λ")
}

/// True iff `M` restricted to `k[u_λ]/(u_λ^a)` is not free.
pub fn point_in_rank_variety(m: &ModuleRep, lambda: &ProjPoint) -> bool {
    let u = m.u_action(lambda.coords()).expect("point has c coordinates");
    let a = m.spec().a();
    a * u.pow(a as u64 - 1).rank() != m.dim()
}

/// Jordan block sizes of a nilpotent matrix, largest first, read off from
/// the ranks of its powers.
pub fn jordan_block_sizes(u: &Matrix) -> Vec<usize> {
    let n = u.rows();
    let mut ranks = vec![n];
    let mut power = Matrix::identity(u.field(), n);
    while *ranks.last().unwrap() > 0 {
        power = power.mul(u);
        let r = power.rank();
        assert!(r < *ranks.last().unwrap() || r == 0, "matrix is not nilpotent");
        ranks.push(r);
    }
    // blocks of size ≥ k: ranks[k-1] - ranks[k]
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(k, exactly));
    }
    sizes
}

/// The directions `λ ∈ P^{c-1}(F_p)` at which `M` restricts non-freely.
pub fn rank_variety(m: &ModuleRep, strategy: Strategy) -> Vec<ProjPoint> {
    let pts = projective_points(m.spec().c(), m.spec().field());
    let hits = par::map(strategy, &pts, |l| point_in_rank_variety(m, l));
    pts.into_iter().zip(hits).filter(|(_, h)| *h).map(|(l, _)| l).collect()
}

pub fn support_variety(m: &ModuleRep) -> VarietySet {
    support_variety_with(m, Strategy::default())
}

pub fn support_variety_with(m: &ModuleRep, strategy: Strategy) -> VarietySet {
    let spec = m.spec();
    let field = spec.field();
    let a = spec.a() as u64;
    let points = rank_variety(m, strategy).iter().map(|l| f_map(l, a, field)).collect();
    VarietySet { c: spec.c(), p: field.modulus(), points }
}

/// The line through `point`, i.e. the single projective point.
pub fn line_of(field: PrimeField, point: &[FieldElement]) -> Result<VarietySet> {
    let pt = ProjPoint::new(field, point)?;
    Ok(VarietySet { c: point.len(), p: field.modulus(), points: BTreeSet::from([pt]) })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarietySet {
    c: usize,
    p: u64,
    points: BTreeSet<ProjPoint>,
}

impl VarietySet {
    pub fn trivial(c: usize, field: PrimeField) -> Self {
        Self { c, p: field.modulus(), points: BTreeSet::new() }
    }

    /// Every rational point.
    pub fn full(c: usize, field: PrimeField) -> Self {
        Self { c, p: field.modulus(), points: projective_points(c, field).into_iter().collect() }
    }

    pub fn from_points(c: usize, field: PrimeField, points: impl IntoIterator<Item = ProjPoint>) -> Result<Self> {
        let points: BTreeSet<ProjPoint> = points.into_iter().collect();
        if points.iter().any(|pt| pt.coords.len() != c) {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self { c, p: field.modulus(), points })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn points(&self) -> impl Iterator<Item = &ProjPoint> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// No points: the variety is just the origin.
    pub fn is_trivial(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Every variety contains the origin.
    pub fn contains_origin(&self) -> bool {
        true
    }

    pub fn contains(&self, pt: &ProjPoint) -> bool {
        self.points.contains(pt)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.c, self.p) != (other.c, other.p) {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.points.is_subset(&other.points))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { points: self.points.intersection(&other.points).cloned().collect(), ..self.clone_empty() })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { points: self.points.union(&other.points).cloned().collect(), ..self.clone_empty() })
    }

    fn clone_empty(&self) -> Self {
        Self { c: self.c, p: self.p, points: BTreeSet::new() }
    }

    pub fn to_json(&self) -> VarietyJson {
        VarietyJson {
            ambient: Ambient { c: self.c, p: self.p },
            points: self.points.iter().map(ProjPoint::values).collect(),
            trivial: self.is_trivial(),
        }
    }
}

impl std::fmt::Display for VarietySet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return f.write_str("{0}");
        }
        let parts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for VarietySet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ambient {
    pub c: usize,
    pub p: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyJson {
    pub ambient: Ambient,
    pub points: Vec<Vec<u64>>,
    pub trivial: bool,
}
