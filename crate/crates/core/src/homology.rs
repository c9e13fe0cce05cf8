//! Minimal projective resolutions over the local selfinjective algebra `A`.
//!
//! Since `A` is local, a projective cover of `M` is the free module on a
//! basis of the top `M / rM`, and the Betti numbers are the tops of the
//! successive syzygies.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::module::{ModuleRep, Submodule};

/// Minimum length of a Betti sequence accepted by [`complexity_estimate`].
pub const MIN_BETTI_TERMS: usize = 6;
/// First homological degree used in the growth fit.
pub const WINDOW_START: usize = 2;

/// `dim M / rM`.
pub fn top(m: &ModuleRep) -> usize {
    m.dim() - m.radical_rank()
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub free: ModuleRep,
    /// `dim M × dim free`; column `s * a^c + j` is monomial `j` applied to generator `s`.
    pub surjection: Matrix,
    /// Representatives of a basis of `M / rM`.
    pub generators: Vec<Vec<u64>>,
}

pub fn projective_cover_map(m: &ModuleRep) -> ProjectiveCover {
    let spec = *m.spec();
    let field = spec.field();
    let radical_image: Vec<Vec<u64>> = m
        .actions()
        .iter()
        .flat_map(|x| (0..m.dim()).map(move |j| x.column(j)))
        .collect();
    let rm = Subspace::spanned_by(field, m.dim(), &radical_image);
    let generators: Vec<Vec<u64>> = rm
        .complement_columns()
        .into_iter()
        .map(|j| {
            let mut e = vec![0u64; m.dim()];
            e[j] = 1;
            e
        })
        .collect();
    let n = spec.dim();
    let mut columns = Vec::with_capacity(generators.len() * n);
    for g in &generators {
        for idx in 0..n {
            // x_1^{e_1} ⋯ x_c^{e_c} g: apply x_c first
            let mut v = g.clone();
            for (x, &e) in m.actions().iter().zip(&spec.exponents(idx)).rev() {
                for _ in 0..e {
                    v = x.apply(&v);
                }
            }
            columns.push(v);
        }
    }
    let surjection = Matrix::from_columns(field, m.dim(), &columns);
    ProjectiveCover { free: ModuleRep::free(spec, generators.len()), surjection, generators }
}

/// `Ω M` as a submodule of its projective cover.
pub fn syzygy_submodule(m: &ModuleRep) -> Submodule {
    let cover = projective_cover_map(m);
    let kernel = cover.surjection.kernel();
    let basis = Subspace::spanned_by(m.spec().field(), cover.free.dim(), &kernel);
    cover.free.restrict(basis)
}

pub fn syzygy(m: &ModuleRep) -> ModuleRep {
    syzygy_submodule(m).module
}

/// True iff the kernel of the cover lies in `r · (free cover)`, i.e. no
/// kernel vector has a nonzero coefficient on the identity monomial of any
/// free summand.
pub fn cover_is_minimal(m: &ModuleRep) -> bool {
    let n = m.spec().dim();
    syzygy_submodule(m)
        .basis
        .basis()
        .iter()
        .all(|v| v.iter().step_by(n).all(|&x| x == 0))
}

pub fn is_projective(m: &ModuleRep) -> bool {
    syzygy(m).is_zero()
}

#[derive(Clone, Debug)]
pub struct ResolutionPrefix {
    pub module: ModuleRep,
    /// `b_0, …, b_n`.
    pub betti: Vec<usize>,
    /// `Ω^1 M, …, Ω^n M`.
    pub syzygies: Vec<ModuleRep>,
}

pub fn resolve(m: &ModuleRep, n: usize) -> ResolutionPrefix {
    let mut betti = vec![top(m)];
    let mut syzygies = Vec::with_capacity(n);
    let mut current = m.clone();
    for _ in 0..n {
        let next = syzygy(&current);
        betti.push(top(&next));
        syzygies.push(next.clone());
        current = next;
    }
    ResolutionPrefix { module: m.clone(), betti, syzygies }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexityFit {
    pub complexity: usize,
    /// Inclusive degree range the fit used.
    pub window: (usize, usize),
    /// Least-squares slope of `ln b_n` against `ln(n + 1)`, if a fit was needed.
    pub slope: Option<f64>,
}

/// Polynomial growth rate of a Betti sequence: `0` if it ends in zero,
/// otherwise `round(s) + 1` where `s` is the least-squares slope of
/// `ln b_n` against `ln(n + 1)` over degrees `2..=n`.
pub fn complexity_estimate(betti: &[usize]) -> Result<ComplexityFit> {
    if betti.len() < MIN_BETTI_TERMS {
        return Err(Error::InsufficientData { needed: MIN_BETTI_TERMS, got: betti.len() });
    }
    let window = (WINDOW_START, betti.len() - 1);
    if betti[window.1] == 0 {
        return Ok(ComplexityFit { complexity: 0, window, slope: None });
    }
    let pts: Vec<(f64, f64)> = (window.0..=window.1)
        .filter(|&n| betti[n] > 0)
        .map(|n| (((n + 1) as f64).ln(), (betti[n] as f64).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let complexity = slope.round().max(0.0) as usize + 1;
    Ok(ComplexityFit { complexity, window, slope: Some(slope) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::field::FieldElement;
    use crate::module::{cyclic_u_module, random_module};

    fn spec(c: usize, a: u64, p: u64) -> AlgebraSpec {
        AlgebraSpec::from_params(c, a, p).unwrap()
    }

    fn ones(c: usize) -> Vec<FieldElement> {
        vec![FieldElement::ONE; c]
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn top_examples() {
        let s = spec(2, 2, 5);
        assert_eq!(top(&ModuleRep::free(s, 3)), 3);
        assert_eq!(top(&ModuleRep::simple(s)), 1);
        assert_eq!(top(&cyclic_u_module(s, &ones(2)).unwrap()), 1);
        assert_eq!(top(&ModuleRep::zero(s)), 0);
    }

    #[test]
    fn cover_examples() {
        let s = spec(2, 3, 7);
        let free = ModuleRep::free(s, 2);
        let c = projective_cover_map(&free);
        assert_eq!(c.free.dim(), 18);
        assert!(c.surjection.inverse().is_some());
        let k = ModuleRep::simple(s);
        let c = projective_cover_map(&k);
        assert_eq!(c.free.dim(), 9);
        assert_eq!(c.surjection.rank(), 1);
        let om = syzygy_submodule(&k);
        // the radical: every monomial but 1
        assert_eq!(om.basis.pivots(), &(1..9).collect::<Vec<_>>()[..]);
        assert_eq!(projective_cover_map(&ModuleRep::zero(s)).free.dim(), 0);
    }

    #[test]
    fn syzygy_examples() {
        let s = spec(2, 2, 5);
        assert!(syzygy(&ModuleRep::free(s, 2)).is_zero());
        assert_eq!(syzygy(&ModuleRep::simple(s)).dim(), 3);
        for lam in [[1, 0], [1, 1], [1, 3], [0, 1]] {
            let l: Vec<FieldElement> = lam.iter().map(|&x| s.field().elem(x)).collect();
            let m = cyclic_u_module(s, &l).unwrap();
            assert_eq!(syzygy(&m).dim(), s.dim() - m.dim());
        }
    }

    #[test]
    fn resolution_of_k_matches_series() {
        // Betti numbers of k are the coefficients of 1/(1-t)^c
        for (c, a, p, n) in [(2, 3, 7, 8), (2, 2, 5, 8), (3, 2, 5, 6)] {
            let r = resolve(&ModuleRep::simple(spec(c, a, p)), n);
            let expected: Vec<usize> = (0..=n).map(|i| binom(i + c - 1, c - 1)).collect();
            assert_eq!(r.betti, expected, "c={c} a={a}");
            assert!(r.syzygies.iter().all(|m| m.validate().is_ok()));
        }
    }

    #[test]
    fn resolution_examples() {
        let s = spec(2, 3, 7);
        assert_eq!(resolve(&ModuleRep::free(s, 2), 4).betti, vec![2, 0, 0, 0, 0]);
        let s = spec(2, 2, 5);
        let r = resolve(&cyclic_u_module(s, &ones(2)).unwrap(), 8);
        assert_eq!(r.betti, vec![1; 9]);
    }

    #[test]
    fn projectivity_examples() {
        let s = spec(2, 3, 7);
        assert!(is_projective(&ModuleRep::free(s, 2)));
        assert!(is_projective(&ModuleRep::zero(s)));
        assert!(!is_projective(&ModuleRep::simple(s)));
        assert!(!is_projective(&cyclic_u_module(s, &ones(2)).unwrap()));
    }

    #[test]
    fn covers_are_minimal() {
        for (c, a, p) in [(2, 2, 5), (2, 3, 7), (3, 2, 5)] {
            let s = spec(c, a, p);
            for seed in 0..15 {
                let m = random_module(s, 24, seed);
                assert!(cover_is_minimal(&m));
                let r = resolve(&m, 3);
                for (i, om) in r.syzygies.iter().enumerate() {
                    assert!(cover_is_minimal(om));
                    assert_eq!(top(om), r.betti[i + 1]);
                }
            }
        }
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity_estimate(&[1, 0, 0, 0, 0, 0, 0]).unwrap().complexity, 0);
        assert_eq!(complexity_estimate(&[1, 1, 1, 1, 1, 1, 1]).unwrap().complexity, 1);
        assert_eq!(complexity_estimate(&[1, 2, 3, 4, 5, 6, 7]).unwrap().complexity, 2);
        let quad: Vec<usize> = (0..11).map(|n| binom(n + 2, 2)).collect();
        assert_eq!(complexity_estimate(&quad).unwrap().complexity, 3);
        assert_eq!(
            complexity_estimate(&[1, 2, 3]),
            Err(Error::InsufficientData { needed: 6, got: 3 })
        );
        let fit = complexity_estimate(&[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(fit.window, (2, 6));
    }
}
