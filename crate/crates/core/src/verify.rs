//! The counterexample to a tensor product property: for `M = A u_λ` and
//! `B = _{ψ_μ}A_1`, the variety of `B ⊗_A M` is the line `ℓ_{F(μ⁻¹λ)}` while
//! that of `M` is `ℓ_{F(λ)}`. Every claim is checked twice: the varieties are
//! scanned and compared with the closed-form lines, and the module
//! isomorphism `A u_{μ⁻¹λ} ≅ B ⊗_A M` is verified on an explicit matrix.

use serde::Serialize;

use crate::algebra::{AlgebraSpec, DiagonalAutomorphism};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::module::{
    check_isomorphism_via_map, cyclic_twist_isomorphism, cyclic_u_module, tensor_bimodule_module,
    twist_to_tensor_map, BimoduleRep, ModuleMap, ModuleRep,
};
use crate::variety::{f_map, line_of, support_variety, ProjPoint, VarietySet};

/// Scans cover rational points only.
pub const RATIONAL_POINTS_CAVEAT: &str =
    "varieties are scanned over the rational points of P^{c-1}(F_p), not over an algebraic closure";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleParams {
    pub c: usize,
    pub a: u64,
    pub p: u64,
    pub q: u64,
    pub lambda: Vec<u64>,
    pub mu: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub params: CounterexampleParams,
    pub v_m: VarietySet,
    pub v_bm: VarietySet,
    pub predicted_v_m: VarietySet,
    pub predicted_v_bm: VarietySet,
    pub scans_match_predictions: bool,
    pub containment_holds: bool,
    pub iso_verified: bool,
    pub confirmed: bool,
    pub caveat: &'static str,
}

/// Builds the algebra with the smallest primitive root, reporting a missing
/// root as [`Error::FieldUnsuitable`].
pub fn algebra_for(c: usize, a: u64, p: u64) -> Result<AlgebraSpec> {
    let field = FieldSpec::new(p, a).map_err(unsuitable)?;
    AlgebraSpec::new(field, c)
}

pub(crate) fn unsuitable(e: Error) -> Error {
    match e {
        Error::NoSuchRoot { a_bar, p } => Error::FieldUnsuitable(format!(
            "F_{p} has no root of unity of order exactly {a_bar} ({a_bar} does not divide {p} - 1)"
        )),
        other => other,
    }
}

fn violated(clause: impl Into<String>) -> Error {
    Error::PreconditionViolated { clause: clause.into() }
}

fn to_elems(spec: &AlgebraSpec, v: &[i64], name: &str) -> Result<Vec<FieldElement>> {
    if v.len() != spec.c() {
        return Err(violated(format!("{name} must have c = {} coordinates, got {}", spec.c(), v.len())));
    }
    Ok(v.iter().map(|&x| spec.field().elem(x)).collect())
}

/// Validated inputs of the construction.
struct Inputs {
    spec: AlgebraSpec,
    lambda: Vec<FieldElement>,
    psi: DiagonalAutomorphism,
}

fn inputs(spec: AlgebraSpec, lambda: &[i64], mu: &[i64], generic: bool) -> Result<Inputs> {
    let field = spec.field();
    let lam = to_elems(&spec, lambda, "lambda")?;
    let mu = to_elems(&spec, mu, "mu")?;
    if lam.iter().all(|x| x.is_zero()) {
        return Err(violated("lambda must be nonzero"));
    }
    if mu.iter().any(|x| x.is_zero()) {
        return Err(violated("every mu_i must be nonzero"));
    }
    if generic {
        let a = spec.a() as u64;
        let powers: Vec<FieldElement> = mu.iter().map(|&m| field.pow(m, a)).collect();
        if powers.iter().all(|&x| x == powers[0]) {
            return Err(violated("the mu_i^a must not all be equal"));
        }
        let on_support: Vec<FieldElement> =
            powers.iter().zip(&lam).filter(|(_, l)| !l.is_zero()).map(|(&x, _)| x).collect();
        if on_support.iter().all(|&x| x == on_support[0]) {
            return Err(violated(
                "the mu_i^a must not all be equal on the indices where lambda_i is nonzero",
            ));
        }
    }
    let psi = DiagonalAutomorphism::new(mu)?;
    Ok(Inputs { spec, lambda: lam, psi })
}

fn params(inp: &Inputs) -> CounterexampleParams {
    CounterexampleParams {
        c: inp.spec.c(),
        a: inp.spec.a() as u64,
        p: inp.spec.field().modulus(),
        q: inp.spec.q().value(),
        lambda: inp.lambda.iter().map(|x| x.value()).collect(),
        mu: inp.psi.mu().iter().map(|x| x.value()).collect(),
    }
}

/// `μ⁻¹λ`.
fn scaled_lambda(inp: &Inputs) -> Vec<FieldElement> {
    let field = inp.spec.field();
    inp.lambda
        .iter()
        .zip(inp.psi.inverse(field).mu())
        .map(|(&l, &m)| field.mul(l, m))
        .collect()
}

/// `ℓ_{F(v)}`.
pub fn predicted_line(spec: &AlgebraSpec, v: &[FieldElement]) -> Result<VarietySet> {
    let field = spec.field();
    let pt = ProjPoint::new(field, v)?;
    line_of(field, f_map(&pt, spec.a() as u64, field).coords())
}

/// `V(A u_λ)` and `V(_{ψ_μ}A_1 ⊗_A A u_λ)` by scan, without the genericity
/// precondition on `μ`.
pub fn scan_pair(spec: AlgebraSpec, lambda: &[i64], mu: &[i64]) -> Result<(VarietySet, VarietySet)> {
    let inp = inputs(spec, lambda, mu, false)?;
    let m = cyclic_u_module(spec, &inp.lambda)?;
    let b = BimoduleRep::twisted(&inp.psi, spec)?;
    let bm = tensor_bimodule_module(&b, &m)?;
    Ok((support_variety(&m), support_variety(&bm)))
}

/// `A u_{μ⁻¹λ} → _{ψ_μ}(A u_λ) → _{ψ_μ}A_1 ⊗_A A u_λ`.
pub fn counterexample_isomorphism(spec: AlgebraSpec, lambda: &[FieldElement], psi: &DiagonalAutomorphism) -> Result<ModuleMap> {
    let first = cyclic_twist_isomorphism(spec, lambda, psi)?;
    let m = cyclic_u_module(spec, lambda)?;
    let second = twist_to_tensor_map(psi, &m)?;
    ModuleMap::new(first.source, second.target, second.matrix.mul(&first.matrix))
}

pub fn run_counterexample(c: usize, a: u64, p: u64, lambda: &[i64], mu: &[i64]) -> Result<CounterexampleReport> {
    run_counterexample_in(algebra_for(c, a, p)?, lambda, mu)
}

pub fn run_counterexample_in(spec: AlgebraSpec, lambda: &[i64], mu: &[i64]) -> Result<CounterexampleReport> {
    let inp = inputs(spec, lambda, mu, true)?;
    let m = cyclic_u_module(spec, &inp.lambda)?;
    let b = BimoduleRep::twisted(&inp.psi, spec)?;
    let bm = tensor_bimodule_module(&b, &m)?;
    let v_m = support_variety(&m);
    let v_bm = support_variety(&bm);
    let predicted_v_m = predicted_line(&spec, &inp.lambda)?;
    let predicted_v_bm = predicted_line(&spec, &scaled_lambda(&inp))?;
    let iso = counterexample_isomorphism(spec, &inp.lambda, &inp.psi)?;
    let iso_verified = check_isomorphism_via_map(&iso) && iso.target == bm;
    let scans_match_predictions = v_m == predicted_v_m && v_bm == predicted_v_bm;
    let containment_holds = v_bm.is_subset(&v_m)?;
    Ok(CounterexampleReport {
        params: params(&inp),
        confirmed: scans_match_predictions && iso_verified && !containment_holds,
        v_m,
        v_bm,
        predicted_v_m,
        predicted_v_bm,
        scans_match_predictions,
        containment_holds,
        iso_verified,
        caveat: RATIONAL_POINTS_CAVEAT,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollarySides {
    /// `V^b(B) := V(B ⊗_A k)`.
    pub v_b: VarietySet,
    pub v_m: VarietySet,
    pub intersection: VarietySet,
    pub v_bm: VarietySet,
    /// `V(B ⊗_A M) = V^b(B) ∩ V(M)`.
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub params: CounterexampleParams,
    pub sides: CorollarySides,
    /// The same comparison with `k` in place of `M`.
    pub control_with_k: CorollarySides,
    pub confirmed: bool,
    pub caveat: &'static str,
}

fn sides(b: &BimoduleRep, m: &ModuleRep) -> Result<CorollarySides> {
    let spec = *m.spec();
    let v_b = support_variety(&tensor_bimodule_module(b, &ModuleRep::simple(spec))?);
    let v_m = support_variety(m);
    let v_bm = support_variety(&tensor_bimodule_module(b, m)?);
    let intersection = v_b.intersect(&v_m)?;
    Ok(CorollarySides { equal: intersection == v_bm, v_b, v_m, intersection, v_bm })
}

/// Both sides of the would-be tensor product formula for `B = _{ψ_μ}A_1`,
/// `M = A u_λ`, with no genericity requirement on `μ`.
pub fn corollary_sides(spec: AlgebraSpec, lambda: &[i64], mu: &[i64]) -> Result<CorollarySides> {
    let inp = inputs(spec, lambda, mu, false)?;
    let b = BimoduleRep::twisted(&inp.psi, spec)?;
    sides(&b, &cyclic_u_module(spec, &inp.lambda)?)
}

pub fn run_corollary_demo(c: usize, a: u64, p: u64, lambda: &[i64], mu: &[i64]) -> Result<CorollaryReport> {
    run_corollary_demo_in(algebra_for(c, a, p)?, lambda, mu)
}

pub fn run_corollary_demo_in(spec: AlgebraSpec, lambda: &[i64], mu: &[i64]) -> Result<CorollaryReport> {
    let inp = inputs(spec, lambda, mu, true)?;
    let b = BimoduleRep::twisted(&inp.psi, spec)?;
    let main = sides(&b, &cyclic_u_module(spec, &inp.lambda)?)?;
    let control = sides(&b, &ModuleRep::simple(spec))?;
    Ok(CorollaryReport {
        params: params(&inp),
        confirmed: !main.equal && control.equal,
        sides: main,
        control_with_k: control,
        caveat: RATIONAL_POINTS_CAVEAT,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn set(p: u64, pts: &[&[i64]]) -> VarietySet {
        let f = PrimeField::new(p).unwrap();
        VarietySet::from_points(2, f, pts.iter().map(|v| ProjPoint::from_ints(f, v).unwrap())).unwrap()
    }

    #[test]
    fn default_counterexample() {
        let r = run_counterexample(2, 3, 7, &[1, 1], &[1, 3]).unwrap();
        assert_eq!(r.v_m, set(7, &[&[1, 1]]));
        assert_eq!(r.v_bm, set(7, &[&[1, 6]]));
        assert!(!r.containment_holds);
        assert!(r.iso_verified);
        assert!(r.confirmed);
        assert_eq!(r.params.q, 2);
    }

    #[test]
    fn small_counterexample() {
        let r = run_counterexample(2, 2, 5, &[1, 1], &[1, 2]).unwrap();
        assert_eq!(r.v_m, set(5, &[&[1, 1]]));
        assert_eq!(r.v_bm, set(5, &[&[1, 4]]));
        assert!(r.confirmed);
    }

    #[test]
    fn preconditions() {
        let err = run_counterexample(2, 3, 7, &[1, 1], &[1, 1]).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated { ref clause } if clause.contains("not all be equal")));
        assert!(matches!(run_counterexample(2, 3, 7, &[0, 0], &[1, 3]), Err(Error::PreconditionViolated { .. })));
        assert!(matches!(run_counterexample(2, 3, 7, &[1, 1], &[0, 3]), Err(Error::PreconditionViolated { .. })));
        assert!(matches!(run_counterexample(2, 3, 7, &[1, 1, 1], &[1, 3]), Err(Error::PreconditionViolated { .. })));
        // (1,0) only sees mu_1
        let err = run_counterexample(2, 3, 7, &[1, 0], &[1, 3]).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated { ref clause } if clause.contains("lambda_i is nonzero")));
        assert!(matches!(run_counterexample(2, 3, 11, &[1, 1], &[1, 3]), Err(Error::FieldUnsuitable(_))));
    }

    #[test]
    fn corollary_default() {
        let r = run_corollary_demo(2, 3, 7, &[1, 1], &[1, 3]).unwrap();
        // B ⊗ k ≅ k, so V^b(B) is the variety of k
        let spec = algebra_for(2, 3, 7).unwrap();
        assert_eq!(r.sides.v_b, support_variety(&ModuleRep::simple(spec)));
        assert_eq!(r.sides.intersection, set(7, &[&[1, 1]]));
        assert_eq!(r.sides.v_bm, set(7, &[&[1, 6]]));
        assert!(!r.sides.equal);
        assert!(r.control_with_k.equal);
        assert!(r.confirmed);
    }

    #[test]
    fn corollary_sanity_identity_twist() {
        let spec = algebra_for(2, 3, 7).unwrap();
        let s = corollary_sides(spec, &[1, 1], &[1, 1]).unwrap();
        assert!(s.equal);
        assert_eq!(s.v_bm, s.v_m);
    }

    #[test]
    fn reports_serialize_deterministically() {
        let a = serde_json::to_string(&run_counterexample(2, 3, 7, &[1, 1], &[1, 3]).unwrap()).unwrap();
        let b = serde_json::to_string(&run_counterexample(2, 3, 7, &[1, 1], &[1, 3]).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(r#""v_bm":{"ambient":{"c":2,"p":7},"points":[[1,6]],"trivial":false}"#));
    }
}
