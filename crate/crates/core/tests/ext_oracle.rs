//! Ext^n(k, k) from a deliberately non-minimal free resolution, compared
//! against the Betti numbers of the minimal one.

use qci::algebra::AlgebraSpec;
use qci::homology::resolve;
use qci::linalg::{Matrix, Subspace};
use qci::module::ModuleRep;

/// One step: a free module mapping onto the span of `gens` inside `ambient`.
struct Step {
    free: ModuleRep,
    gens: Vec<Vec<u64>>,
}

fn kernel_generators(ambient: &ModuleRep, gens: &[Vec<u64>]) -> (ModuleRep, Vec<Vec<u64>>) {
    let spec = *ambient.spec();
    let f = spec.field();
    let free = ModuleRep::free(spec, gens.len());
    let columns: Vec<Vec<u64>> = gens
        .iter()
        .flat_map(|g| (0..spec.dim()).map(move |alpha| (alpha, g)))
        .map(|(alpha, g)| ambient.monomial_action(alpha).apply(g))
        .collect();
    let phi = Matrix::from_columns(f, ambient.dim(), &columns);
    (free, phi.kernel())
}

/// Minimal generators of the submodule spanned by `basis`, followed by one
/// redundant generator (their sum).
fn padded_generators(module: &ModuleRep, basis: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let f = module.spec().field();
    let n = module.dim();
    let radical: Vec<Vec<u64>> =
        basis.iter().flat_map(|v| module.actions().iter().map(move |x| x.apply(v))).collect();
    let mut span = radical.clone();
    let mut gens = Vec::new();
    for v in basis {
        if !Subspace::spanned_by(f, n, &span).contains(v) {
            span.push(v.clone());
            gens.push(v.clone());
        }
    }
    if let Some(first) = gens.first() {
        let sum = gens.iter().skip(1).fold(first.clone(), |acc, g| {
            acc.iter().zip(g).map(|(x, y)| (x + y) % f.modulus()).collect()
        });
        gens.push(sum);
    }
    gens
}

/// Coefficients of the unit monomial of each free summand: the matrix of the
/// differential after applying Hom(-, k).
fn unit_coefficients(spec: &AlgebraSpec, gens: &[Vec<u64>], target_rank: usize) -> Matrix {
    let rows: Vec<u64> = gens.iter().flat_map(|g| (0..target_rank).map(move |j| g[j * spec.dim()])).collect();
    Matrix::from_rows(spec.field(), gens.len(), target_rank, rows)
}

fn ext_dims(spec: AlgebraSpec, top: usize) -> Vec<usize> {
    let k = ModuleRep::simple(spec);
    let mut steps = vec![Step { free: k.clone(), gens: padded_generators(&k, &[vec![1]]) }];
    let mut ranks = vec![steps[0].gens.len()];
    let mut diffs: Vec<Matrix> = Vec::new();
    for _ in 0..=top {
        let last = steps.last().unwrap();
        let (free, kernel) = kernel_generators(&last.free, &last.gens);
        let gens = padded_generators(&free, &kernel);
        diffs.push(unit_coefficients(&spec, &gens, last.gens.len()));
        ranks.push(gens.len());
        steps.push(Step { free, gens });
    }
    // Cochain complex k^{r_0} -> k^{r_1} -> ...; diffs[i] maps degree i to i+1.
    (0..=top)
        .map(|i| {
            let into = if i == 0 { 0 } else { diffs[i - 1].rank() };
            ranks[i] - diffs[i].rank() - into
        })
        .collect()
}

fn check(params: (usize, u64, u64), top: usize) {
    let (c, a, p) = params;
    let spec = AlgebraSpec::from_params(c, a, p).unwrap();
    let ext = ext_dims(spec, top);
    let betti = resolve(&ModuleRep::simple(spec), top).betti;
    assert_eq!(ext, betti, "{params:?}");
}

#[test]
fn ext_matches_betti_two_variables_a3() {
    check((2, 3, 7), 5);
}

#[test]
fn ext_matches_betti_two_variables_a2() {
    check((2, 2, 5), 5);
}

#[test]
fn ext_matches_betti_three_variables() {
    check((3, 2, 5), 4);
}

#[test]
fn padding_makes_resolution_non_minimal() {
    let spec = AlgebraSpec::from_params(2, 3, 7).unwrap();
    let k = ModuleRep::simple(spec);
    let gens = padded_generators(&k, &[vec![1]]);
    let (free, kernel) = kernel_generators(&k, &gens);
    let next = padded_generators(&free, &kernel);
    assert!(unit_coefficients(&spec, &next, gens.len()).rank() > 0);
}
