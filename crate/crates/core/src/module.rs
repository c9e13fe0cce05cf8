//! Left modules and bimodules as explicit matrix representations.
//!
//! All matrices act on column vectors. A left module stores `X_i`, the action
//! of `x_i`. A bimodule additionally stores `R_i` with `R_i v = v · x_i`, so
//! the right action of `x_i x_j` is `R_j R_i`, and the right relations read
//! `R_j R_i = q R_i R_j` for `i < j`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{u_lambda, AlgebraElement, AlgebraSpec, DiagonalAutomorphism};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{Matrix, Quotient, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    spec: AlgebraSpec,
    dim: usize,
    actions: Vec<Matrix>,
}

impl ModuleRep {
    /// Validates the defining relations.
    pub fn new(spec: AlgebraSpec, dim: usize, actions: Vec<Matrix>) -> Result<Self> {
        let m = Self { spec, dim, actions };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(spec: AlgebraSpec, dim: usize, actions: Vec<Matrix>) -> Self {
        debug_assert!(check_left_relations(&spec, dim, &actions).is_ok());
        Self { spec, dim, actions }
    }

    pub fn validate(&self) -> Result<()> {
        check_left_relations(&self.spec, self.dim, &self.actions)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn zero(spec: AlgebraSpec) -> Self {
        Self::new_unchecked(spec, 0, vec![Matrix::zeros(spec.field(), 0, 0); spec.c()])
    }

    /// The simple module `k = A / r`.
    pub fn simple(spec: AlgebraSpec) -> Self {
        Self::new_unchecked(spec, 1, vec![Matrix::zeros(spec.field(), 1, 1); spec.c()])
    }

    /// `A^rank` with copies laid out consecutively, each on the monomial basis.
    pub fn free(spec: AlgebraSpec, rank: usize) -> Self {
        let regular: Vec<Matrix> = (0..spec.c())
            .map(|i| spec.left_mult_matrix(&AlgebraElement::generator(spec, i)))
            .collect();
        let blocks = Matrix::identity(spec.field(), rank);
        let actions = regular.iter().map(|x| blocks.kron(x)).collect();
        Self::new_unchecked(spec, rank * spec.dim(), actions)
    }

    /// Action of the basis monomial with the given index, `X_1^{e_1} ⋯ X_c^{e_c}`.
    pub fn monomial_action(&self, index: usize) -> Matrix {
        self.spec
            .exponents(index)
            .iter()
            .zip(&self.actions)
            .fold(Matrix::identity(self.spec.field(), self.dim), |acc, (&e, x)| acc.mul(&x.pow(e as u64)))
    }

    pub fn element_action(&self, x: &AlgebraElement) -> Result<Matrix> {
        if *x.spec() != self.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = Matrix::zeros(self.spec.field(), self.dim, self.dim);
        for (idx, c) in x.terms() {
            out = out.add(&self.monomial_action(idx).scale(c.value()));
        }
        Ok(out)
    }

    /// `Σ λ_i X_i`.
    pub fn u_action(&self, lambda: &[FieldElement]) -> Result<Matrix> {
        if lambda.len() != self.spec.c() {
            return Err(Error::WrongArity { expected: self.spec.c(), got: lambda.len() });
        }
        Ok(self
            .actions
            .iter()
            .zip(lambda)
            .fold(Matrix::zeros(self.spec.field(), self.dim, self.dim), |acc, (x, l)| {
                acc.add(&x.scale(l.value()))
            }))
    }

    /// The twisted module `_ψ M`, where `x_i` acts as `μ_i X_i`.
    pub fn twist(&self, psi: &DiagonalAutomorphism) -> Result<Self> {
        if psi.mu().len() != self.spec.c() {
            return Err(Error::WrongArity { expected: self.spec.c(), got: psi.mu().len() });
        }
        let actions = self.actions.iter().zip(psi.mu()).map(|(x, m)| x.scale(m.value())).collect();
        Ok(Self::new_unchecked(self.spec, self.dim, actions))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let actions = self.actions.iter().zip(&other.actions).map(|(x, y)| x.block_diag(y)).collect();
        Ok(Self::new_unchecked(self.spec, self.dim + other.dim, actions))
    }

    /// The submodule generated by `generators`.
    pub fn submodule(&self, generators: &[Vec<u64>]) -> Submodule {
        let field = self.spec.field();
        let mut span = Subspace::spanned_by(field, self.dim, generators);
        loop {
            let mut vectors = span.basis().to_vec();
            for b in span.basis() {
                for x in &self.actions {
                    vectors.push(x.apply(b));
                }
            }
            let next = Subspace::spanned_by(field, self.dim, &vectors);
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        self.restrict(span)
    }

    /// Restriction to an invariant subspace; panics if it is not invariant.
    pub fn restrict(&self, basis: Subspace) -> Submodule {
        let actions = self
            .actions
            .iter()
            .map(|x| {
                let columns: Vec<Vec<u64>> = basis
                    .basis()
                    .iter()
                    .map(|b| basis.coords(&x.apply(b)).expect("subspace is invariant"))
                    .collect();
                Matrix::from_columns(self.spec.field(), basis.dim(), &columns)
            })
            .collect();
        Submodule { module: Self::new_unchecked(self.spec, basis.dim(), actions), basis }
    }

    /// `M / S` for an invariant subspace `S`.
    pub fn quotient(&self, sub: &Subspace) -> (Self, Quotient) {
        let q = sub.quotient();
        let actions = self.actions.iter().map(|x| q.induced(x)).collect();
        (Self::new_unchecked(self.spec, q.dim(), actions), q)
    }

    /// Dimension of `r M = Σ image(X_i)`.
    pub fn radical_rank(&self) -> usize {
        if self.dim == 0 {
            return 0;
        }
        let blocks: Vec<&Matrix> = self.actions.iter().collect();
        Matrix::hstack(&blocks).rank()
    }
}

fn check_left_relations(spec: &AlgebraSpec, dim: usize, actions: &[Matrix]) -> Result<()> {
    if actions.len() != spec.c() {
        return Err(Error::InvalidModule(format!("expected {} action matrices, got {}", spec.c(), actions.len())));
    }
    check_shapes(spec, dim, actions)?;
    let a = spec.a() as u64;
    for (i, x) in actions.iter().enumerate() {
        if !x.pow(a).is_zero() {
            return Err(Error::InvalidModule(format!("X{}^{a} != 0", i + 1)));
        }
    }
    let q = spec.q().value();
    for i in 0..actions.len() {
        for j in i + 1..actions.len() {
            if actions[i].mul(&actions[j]) != actions[j].mul(&actions[i]).scale(q) {
                return Err(Error::InvalidModule(format!("X{0} X{1} != q X{1} X{0}", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

fn check_right_relations(spec: &AlgebraSpec, dim: usize, actions: &[Matrix]) -> Result<()> {
    if actions.len() != spec.c() {
        return Err(Error::InvalidModule(format!("expected {} right actions, got {}", spec.c(), actions.len())));
    }
    check_shapes(spec, dim, actions)?;
    let a = spec.a() as u64;
    for (i, r) in actions.iter().enumerate() {
        if !r.pow(a).is_zero() {
            return Err(Error::InvalidModule(format!("R{}^{a} != 0", i + 1)));
        }
    }
    let q = spec.q().value();
    for i in 0..actions.len() {
        for j in i + 1..actions.len() {
            if actions[j].mul(&actions[i]) != actions[i].mul(&actions[j]).scale(q) {
                return Err(Error::InvalidModule(format!("R{1} R{0} != q R{0} R{1}", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

fn check_shapes(spec: &AlgebraSpec, dim: usize, actions: &[Matrix]) -> Result<()> {
    for x in actions {
        if x.rows() != dim || x.cols() != dim {
            return Err(Error::InvalidModule(format!(
                "action has shape {}x{}, expected {dim}x{dim}",
                x.rows(),
                x.cols()
            )));
        }
        if x.modulus() != spec.field().modulus() {
            return Err(Error::SpecMismatch);
        }
    }
    Ok(())
}

/// A submodule together with its echelon basis in the ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub module: ModuleRep,
    pub basis: Subspace,
}

/// `A u_λ` as a submodule of the regular module.
pub fn cyclic_u_submodule(spec: AlgebraSpec, lambda: &[FieldElement]) -> Result<Submodule> {
    let u = u_lambda(spec, lambda)?;
    if u.is_zero() {
        return Err(Error::ZeroLambda);
    }
    // m · u_λ for every basis monomial m
    let right = spec.right_mult_matrix(&u);
    let columns: Vec<Vec<u64>> = (0..spec.dim()).map(|j| right.column(j)).collect();
    let span = Subspace::spanned_by(spec.field(), spec.dim(), &columns);
    Ok(ModuleRep::free(spec, 1).restrict(span))
}

pub fn cyclic_u_module(spec: AlgebraSpec, lambda: &[FieldElement]) -> Result<ModuleRep> {
    cyclic_u_submodule(spec, lambda).map(|s| s.module)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleRep {
    spec: AlgebraSpec,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl BimoduleRep {
    pub fn new(spec: AlgebraSpec, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        let b = Self { spec, dim, left, right };
        b.validate()?;
        Ok(b)
    }

    fn new_unchecked(spec: AlgebraSpec, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Self {
        let b = Self { spec, dim, left, right };
        debug_assert!(b.validate().is_ok());
        b
    }

    pub fn validate(&self) -> Result<()> {
        check_left_relations(&self.spec, self.dim, &self.left)?;
        check_right_relations(&self.spec, self.dim, &self.right)?;
        for (i, l) in self.left.iter().enumerate() {
            for (j, r) in self.right.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::InvalidModule(format!("L{} and R{} do not commute", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right
    }

    pub fn zero(spec: AlgebraSpec) -> Self {
        let z = vec![Matrix::zeros(spec.field(), 0, 0); spec.c()];
        Self::new_unchecked(spec, 0, z.clone(), z)
    }

    /// `A` as a bimodule over itself.
    pub fn regular(spec: AlgebraSpec) -> Self {
        Self::twisted(&DiagonalAutomorphism::identity(spec.c()), spec).expect("identity has the right arity")
    }

    /// `_ψA_1`: left action through `ψ`, right action by multiplication.
    pub fn twisted(psi: &DiagonalAutomorphism, spec: AlgebraSpec) -> Result<Self> {
        if psi.mu().len() != spec.c() {
            return Err(Error::WrongArity { expected: spec.c(), got: psi.mu().len() });
        }
        let gens: Vec<AlgebraElement> = (0..spec.c()).map(|i| AlgebraElement::generator(spec, i)).collect();
        let left = gens
            .iter()
            .zip(psi.mu())
            .map(|(x, m)| spec.left_mult_matrix(x).scale(m.value()))
            .collect();
        let right = gens.iter().map(|x| spec.right_mult_matrix(x)).collect();
        Ok(Self::new_unchecked(spec, spec.dim(), left, right))
    }

    /// The underlying left module.
    pub fn left_module(&self) -> ModuleRep {
        ModuleRep::new_unchecked(self.spec, self.dim, self.left.clone())
    }
}

/// `B ⊗_A M` with the projection from `B ⊗_k M` (index `b * dim M + m`).
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub module: ModuleRep,
    pub projection: Quotient,
    left_dim: usize,
    right_dim: usize,
}

impl TensorModule {
    /// Coordinates of the class `[b ⊗ m]`.
    pub fn class_of(&self, b: &[u64], m: &[u64]) -> Vec<u64> {
        assert_eq!((b.len(), m.len()), (self.left_dim, self.right_dim));
        let p = self.module.spec().field().modulus();
        let v: Vec<u64> = b.iter().flat_map(|&x| m.iter().map(move |&y| x * y % p)).collect();
        self.projection.project(&v)
    }
}

/// Span of the images of `R_i ⊗ 1 - 1 ⊗ X_i`.
fn balancing_relations(right: &[Matrix], left_of_second: &[Matrix], dim1: usize, dim2: usize) -> Vec<Vec<u64>> {
    let field = right.first().map(|m| m.field());
    let Some(field) = field else { return Vec::new() };
    let id1 = Matrix::identity(field, dim1);
    let id2 = Matrix::identity(field, dim2);
    let mut columns = Vec::new();
    for (r, x) in right.iter().zip(left_of_second) {
        let k = r.kron(&id2).sub(&id1.kron(x));
        for j in 0..k.cols() {
            let col = k.column(j);
            if col.iter().any(|&v| v != 0) {
                columns.push(col);
            }
        }
    }
    columns
}

pub fn tensor_bimodule_module_full(b: &BimoduleRep, m: &ModuleRep) -> Result<TensorModule> {
    if b.spec != m.spec {
        return Err(Error::SpecMismatch);
    }
    let field = m.spec.field();
    let n = b.dim * m.dim;
    let rel = balancing_relations(&b.right, &m.actions, b.dim, m.dim);
    let sub = Subspace::spanned_by(field, n, &rel);
    let q = sub.quotient();
    let id = Matrix::identity(field, m.dim);
    let actions = b.left.iter().map(|l| q.induced(&l.kron(&id))).collect();
    Ok(TensorModule {
        module: ModuleRep::new_unchecked(m.spec, q.dim(), actions),
        projection: q,
        left_dim: b.dim,
        right_dim: m.dim,
    })
}

/// `B ⊗_A M`.
pub fn tensor_bimodule_module(b: &BimoduleRep, m: &ModuleRep) -> Result<ModuleRep> {
    tensor_bimodule_module_full(b, m).map(|t| t.module)
}

/// `B1 ⊗_A B2` with the left action of `B1` and the right action of `B2`.
pub fn tensor_bimodules(b1: &BimoduleRep, b2: &BimoduleRep) -> Result<(BimoduleRep, Quotient)> {
    if b1.spec != b2.spec {
        return Err(Error::SpecMismatch);
    }
    let field = b1.spec.field();
    let n = b1.dim * b2.dim;
    let rel = balancing_relations(&b1.right, &b2.left, b1.dim, b2.dim);
    let q = Subspace::spanned_by(field, n, &rel).quotient();
    let id1 = Matrix::identity(field, b1.dim);
    let id2 = Matrix::identity(field, b2.dim);
    let left = b1.left.iter().map(|l| q.induced(&l.kron(&id2))).collect();
    let right = b2.right.iter().map(|r| q.induced(&id1.kron(r))).collect();
    Ok((BimoduleRep::new_unchecked(b1.spec, q.dim(), left, right), q))
}

/// A linear map between modules, `matrix: source → target`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: ModuleRep,
    pub target: ModuleRep,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: ModuleRep, target: ModuleRep, matrix: Matrix) -> Result<Self> {
        if source.spec != target.spec {
            return Err(Error::SpecMismatch);
        }
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::InvalidModule(format!(
                "map has shape {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        Ok(Self { source, target, matrix })
    }

    pub fn identity(m: ModuleRep) -> Self {
        let matrix = Matrix::identity(m.spec.field(), m.dim);
        Self { source: m.clone(), target: m, matrix }
    }

    /// `f X_i^{src} = X_i^{tgt} f` for every `i`.
    pub fn intertwines(&self) -> bool {
        self.source
            .actions
            .iter()
            .zip(&self.target.actions)
            .all(|(s, t)| self.matrix.mul(s) == t.mul(&self.matrix))
    }
}

/// True iff the map is invertible and a module homomorphism.
pub fn check_isomorphism_via_map(f: &ModuleMap) -> bool {
    f.matrix.is_square() && f.matrix.inverse().is_some() && f.intertwines()
}

/// True iff `matrix: src → tgt` is invertible and intertwines both actions.
pub fn check_bimodule_isomorphism(src: &BimoduleRep, tgt: &BimoduleRep, matrix: &Matrix) -> bool {
    matrix.is_square()
        && matrix.rows() == tgt.dim
        && matrix.cols() == src.dim
        && matrix.inverse().is_some()
        && src.left.iter().zip(&tgt.left).all(|(s, t)| matrix.mul(s) == t.mul(matrix))
        && src.right.iter().zip(&tgt.right).all(|(s, t)| matrix.mul(s) == t.mul(matrix))
}

/// The map `_ψM → B ⊗_A M`, `m ↦ [1 ⊗ m]`, for `B = _ψA_1`. With `ψ` the
/// identity it is the unit isomorphism `M → A ⊗_A M`.
pub fn twist_to_tensor_map(psi: &DiagonalAutomorphism, m: &ModuleRep) -> Result<ModuleMap> {
    let spec = m.spec;
    let b = BimoduleRep::twisted(psi, spec)?;
    let t = tensor_bimodule_module_full(&b, m)?;
    let one = AlgebraElement::one(spec).to_dense();
    let columns: Vec<Vec<u64>> = (0..m.dim)
        .map(|j| {
            let mut e = vec![0u64; m.dim];
            e[j] = 1;
            t.class_of(&one, &e)
        })
        .collect();
    let matrix = Matrix::from_columns(spec.field(), t.module.dim(), &columns);
    ModuleMap::new(m.twist(psi)?, t.module, matrix)
}

/// `A u_{μ⁻¹λ} → _{ψ_μ}(A u_λ)`, `w ↦ ψ_μ(w)` on elements of `A`.
pub fn cyclic_twist_isomorphism(
    spec: AlgebraSpec,
    lambda: &[FieldElement],
    psi: &DiagonalAutomorphism,
) -> Result<ModuleMap> {
    let field = spec.field();
    let inv = psi.inverse(field);
    if lambda.len() != spec.c() || psi.mu().len() != spec.c() {
        return Err(Error::WrongArity { expected: spec.c(), got: lambda.len().min(psi.mu().len()) });
    }
    let scaled: Vec<FieldElement> = lambda.iter().zip(inv.mu()).map(|(&l, &m)| field.mul(l, m)).collect();
    let source = cyclic_u_submodule(spec, &scaled)?;
    let target = cyclic_u_submodule(spec, lambda)?;
    let columns = source
        .basis
        .basis()
        .iter()
        .map(|w| {
            let image = psi.apply(&AlgebraElement::from_dense(spec, w))?;
            target
                .basis
                .coords(&image.to_dense())
                .ok_or_else(|| Error::InvalidModule("ψ(w) is not in the target".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_columns(field, target.module.dim(), &columns);
    ModuleMap::new(source.module, target.module.twist(psi)?, matrix)
}

/// A random module of dimension at most `max_dim`: a submodule or quotient
/// of a small free module generated by random elements. Deterministic in
/// `seed`.
pub fn random_module(spec: AlgebraSpec, max_dim: usize, seed: u64) -> ModuleRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if max_dim == 0 {
        return ModuleRep::zero(spec);
    }
    let p = spec.field().modulus();
    let n = spec.dim();
    for _ in 0..64 {
        let rank = if max_dim >= 2 * n && rng.gen_bool(0.3) { 2 } else { 1 };
        let free = ModuleRep::free(spec, rank);
        let gens: Vec<Vec<u64>> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let density = rng.gen_range(0.1..0.6);
                let unit_ok = rng.gen_bool(0.15);
                (0..rank * n)
                    .map(|i| {
                        let is_unit = i % n == 0;
                        if (is_unit && !unit_ok) || !rng.gen_bool(density) {
                            0
                        } else {
                            rng.gen_range(1..p)
                        }
                    })
                    .collect()
            })
            .collect();
        let sub = free.submodule(&gens);
        let candidate = if rng.gen_bool(0.5) {
            sub.module
        } else {
            free.quotient(&sub.basis).0
        };
        if candidate.dim() > 0 && candidate.dim() <= max_dim {
            return candidate;
        }
    }
    ModuleRep::simple(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(c: usize, a: u64, p: u64) -> AlgebraSpec {
        AlgebraSpec::from_params(c, a, p).unwrap()
    }

    fn pt(s: &AlgebraSpec, v: &[i64]) -> Vec<FieldElement> {
        v.iter().map(|&x| s.field().elem(x)).collect()
    }

    fn diag(s: &AlgebraSpec, v: &[i64]) -> DiagonalAutomorphism {
        DiagonalAutomorphism::new(pt(s, v)).unwrap()
    }

    #[test]
    fn free_module_examples() {
        let s = spec(2, 2, 5);
        let a = ModuleRep::free(s, 1);
        assert_eq!(a.dim(), 4);
        assert_eq!(a.actions()[0], s.left_mult_matrix(&AlgebraElement::generator(s, 0)));
        assert_eq!(ModuleRep::free(s, 0).dim(), 0);
        assert_eq!(ModuleRep::free(spec(2, 3, 7), 2).dim(), 18);
        assert!(ModuleRep::free(spec(2, 3, 7), 2).validate().is_ok());
    }

    #[test]
    fn simple_module_examples() {
        let s = spec(2, 3, 7);
        let k = ModuleRep::simple(s);
        assert_eq!(k.dim(), 1);
        assert!(k.actions().iter().all(Matrix::is_zero));
        assert_eq!(k.direct_sum(&k).unwrap().dim(), 2);
    }

    #[test]
    fn cyclic_examples() {
        let s = spec(2, 2, 5);
        let sub = cyclic_u_submodule(s, &pt(&s, &[1, 0])).unwrap();
        assert_eq!(sub.module.dim(), 2);
        // span{x_1, x_1 x_2}: monomial indices 1 and 3
        assert_eq!(sub.basis.pivots(), &[1, 3]);
        assert_eq!(cyclic_u_module(s, &pt(&s, &[1, 1])).unwrap().dim(), 2);
        assert_eq!(cyclic_u_module(s, &pt(&s, &[0, 0])), Err(Error::ZeroLambda));
        assert_eq!(cyclic_u_module(spec(2, 3, 7), &pt(&s, &[1, 1])).unwrap().dim(), 6);
    }

    #[test]
    fn twist_examples() {
        let s = spec(2, 3, 7);
        let a = ModuleRep::free(s, 1);
        assert_eq!(a.twist(&DiagonalAutomorphism::identity(2)).unwrap(), a);
        let k = ModuleRep::simple(s);
        assert_eq!(k.twist(&diag(&s, &[2, 3])).unwrap(), k);
        let t = a.twist(&diag(&s, &[2, 3])).unwrap();
        assert_eq!(t.actions()[0], a.actions()[0].scale(2));
        assert_eq!(t.actions()[1], a.actions()[1].scale(3));
        assert!(t.validate().is_ok());
    }

    #[test]
    fn twisted_bimodule_examples() {
        let s = spec(2, 2, 5);
        let regular = BimoduleRep::regular(s);
        assert!(regular.validate().is_ok());
        let b = BimoduleRep::twisted(&diag(&s, &[1, 2]), s).unwrap();
        assert!(b.validate().is_ok());
        let x1 = s.left_mult_matrix(&AlgebraElement::generator(s, 0));
        let x2 = s.left_mult_matrix(&AlgebraElement::generator(s, 1));
        assert_eq!(b.left_actions()[0], x1);
        assert_eq!(b.left_actions()[1], x2.scale(2));
        assert_eq!(b.right_actions(), regular.right_actions());
    }

    #[test]
    fn validation_rejects_bad_actions() {
        let s = spec(2, 3, 7);
        let a = ModuleRep::free(s, 1);
        // swapped generators break q-commutation for q != q^{-1}
        let swapped = vec![a.actions()[1].clone(), a.actions()[0].clone()];
        assert!(ModuleRep::new(s, 9, swapped).is_err());
        let id = Matrix::identity(s.field(), 2);
        assert!(ModuleRep::new(s, 2, vec![id.clone(), id]).is_err());
        assert!(ModuleRep::new(s, 1, vec![Matrix::zeros(s.field(), 1, 1)]).is_err());
        // right actions used as left actions violate the left relations
        let b = BimoduleRep::regular(s);
        assert!(ModuleRep::new(s, 9, b.right_actions().to_vec()).is_err());
        assert!(BimoduleRep::new(s, 9, b.left_actions().to_vec(), b.left_actions().to_vec()).is_err());
    }

    #[test]
    fn tensor_examples() {
        let s = spec(2, 3, 7);
        let m = cyclic_u_module(s, &pt(&s, &[1, 1])).unwrap();
        let unit = twist_to_tensor_map(&DiagonalAutomorphism::identity(2), &m).unwrap();
        assert!(check_isomorphism_via_map(&unit));
        let psi = diag(&s, &[1, 3]);
        let tw = twist_to_tensor_map(&psi, &m).unwrap();
        assert_eq!(tw.target.dim(), m.dim());
        assert!(check_isomorphism_via_map(&tw));
        let zero = tensor_bimodule_module(&BimoduleRep::regular(s), &ModuleRep::zero(s)).unwrap();
        assert_eq!(zero.dim(), 0);
        let other = spec(2, 2, 5);
        assert_eq!(
            tensor_bimodule_module(&BimoduleRep::regular(other), &m).unwrap_err(),
            Error::SpecMismatch
        );
    }

    #[test]
    fn bimodule_tensor_examples() {
        let s = spec(2, 3, 7);
        let a = BimoduleRep::regular(s);
        let (aa, _) = tensor_bimodules(&a, &a).unwrap();
        assert_eq!(aa.dim(), 9);
        assert!(aa.validate().is_ok());
        let (z, _) = tensor_bimodules(&a, &BimoduleRep::zero(s)).unwrap();
        assert_eq!(z.dim(), 0);

        let psi = diag(&s, &[2, 3]);
        let phi = diag(&s, &[5, 6]);
        let (t, q) = tensor_bimodules(&BimoduleRep::twisted(&psi, s).unwrap(), &BimoduleRep::twisted(&phi, s).unwrap()).unwrap();
        let composite = BimoduleRep::twisted(&psi.compose(&phi, s.field()), s).unwrap();
        assert_eq!(t.dim(), composite.dim());
        // w ↦ [1 ⊗ w]
        let one = AlgebraElement::one(s).to_dense();
        let columns: Vec<Vec<u64>> = (0..s.dim())
            .map(|j| {
                let mut e = vec![0u64; s.dim()];
                e[j] = 1;
                let v: Vec<u64> = one.iter().flat_map(|&x| e.iter().map(move |&y| x * y)).collect();
                q.project(&v)
            })
            .collect();
        let map = Matrix::from_columns(s.field(), t.dim(), &columns);
        assert!(check_bimodule_isomorphism(&composite, &t, &map));
    }

    #[test]
    fn isomorphism_checks() {
        let s = spec(2, 2, 5);
        let m = cyclic_u_module(s, &pt(&s, &[1, 1])).unwrap();
        assert!(check_isomorphism_via_map(&ModuleMap::identity(m.clone())));
        let zero = ModuleMap::new(m.clone(), m.clone(), Matrix::zeros(s.field(), 2, 2)).unwrap();
        assert!(!check_isomorphism_via_map(&zero));
        let f = cyclic_twist_isomorphism(s, &pt(&s, &[1, 1]), &diag(&s, &[1, 2])).unwrap();
        assert!(check_isomorphism_via_map(&f));
    }

    #[test]
    fn direct_sum_examples() {
        let s = spec(2, 3, 7);
        let m = cyclic_u_module(s, &pt(&s, &[1, 2])).unwrap();
        assert_eq!(m.direct_sum(&ModuleRep::zero(s)).unwrap(), m);
        let k = ModuleRep::simple(s);
        assert_eq!(k.direct_sum(&m).unwrap().dim(), 1 + m.dim());
        assert!(k.direct_sum(&m).unwrap().validate().is_ok());
    }

    #[test]
    fn random_modules_are_valid_and_reproducible() {
        for (c, a, p) in [(2, 2, 5), (2, 3, 7), (3, 2, 5)] {
            let s = spec(c, a, p);
            for seed in 0..40 {
                let m = random_module(s, 20, seed);
                assert!(m.validate().is_ok());
                assert!(m.dim() <= 20 && m.dim() > 0);
                assert_eq!(m, random_module(s, 20, seed));
            }
        }
        assert_eq!(random_module(spec(2, 2, 5), 0, 1).dim(), 0);
    }
}
