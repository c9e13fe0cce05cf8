//! A seeded, machine-readable run of the structural invariants across the
//! field, algebra, module, homology, variety and counterexample layers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{u_lambda, AlgebraElement, AlgebraSpec, DiagonalAutomorphism};
use crate::field::{find_primitive_root, FieldElement, PrimeField};
use crate::homology::{complexity_estimate, cover_is_minimal, is_projective, resolve, syzygy};
use crate::module::{
    check_isomorphism_via_map, cyclic_twist_isomorphism, cyclic_u_module, random_module, tensor_bimodule_module,
    tensor_bimodules, twist_to_tensor_map, BimoduleRep, ModuleRep,
};
use crate::par::{self, Strategy};
use crate::variety::{jordan_block_sizes, point_in_rank_variety, projective_points, support_variety, ProjPoint};
use crate::verify::{predicted_line, run_counterexample_in, scan_pair};

/// Decides whether a point lies in the rank variety of a module.
pub type FreenessCriterion = dyn Fn(&ModuleRep, &ProjPoint) -> bool + Sync;

const PARAMS: [(usize, u64, u64); 3] = [(2, 2, 5), (2, 3, 7), (3, 2, 5)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random cases per sampled property.
    pub cases: usize,
    /// Dimension bound for random modules.
    pub max_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 0, cases: 50, max_dim: 24 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub properties_run: usize,
    pub total_cases: usize,
    pub all_passed: bool,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }
}

struct Ctx<'a> {
    seed: u64,
    cases: usize,
    max_dim: usize,
    criterion: &'a FreenessCriterion,
}

impl Ctx<'_> {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn spec_of((c, a, p): (usize, u64, u64)) -> AlgebraSpec {
    AlgebraSpec::from_params(c, a, p).expect("suite parameters are valid")
}

fn random_spec(rng: &mut ChaCha8Rng) -> AlgebraSpec {
    spec_of(PARAMS[rng.gen_range(0..PARAMS.len())])
}

fn random_element(rng: &mut ChaCha8Rng, s: AlgebraSpec) -> AlgebraElement {
    let p = s.field().modulus();
    let v: Vec<u64> = (0..s.dim()).map(|_| rng.gen_range(0..p)).collect();
    AlgebraElement::from_dense(s, &v)
}

fn random_units(rng: &mut ChaCha8Rng, s: &AlgebraSpec) -> Vec<FieldElement> {
    let p = s.field().modulus();
    (0..s.c()).map(|_| s.field().elem(rng.gen_range(1..p) as i64)).collect()
}

fn random_point(rng: &mut ChaCha8Rng, s: &AlgebraSpec) -> ProjPoint {
    let p = s.field().modulus();
    loop {
        let v: Vec<FieldElement> = (0..s.c()).map(|_| s.field().elem(rng.gen_range(0..p) as i64)).collect();
        if let Ok(pt) = ProjPoint::new(s.field(), &v) {
            return pt;
        }
    }
}

fn sampled(ctx: &Ctx, salt: u64, f: impl Fn(&mut ChaCha8Rng, &mut Tally) + Sync) -> Tally {
    let seeds: Vec<u64> = {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ salt);
        (0..ctx.cases).map(|_| rng.gen()).collect()
    };
    par::map(Strategy::default(), &seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let mut t = Tally::default();
        f(&mut rng, &mut t);
        t
    })
    .into_iter()
    .fold(Tally::default(), Tally::merge)
}

fn field_inverse(ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng();
    let mut t = Tally::default();
    for _ in 0..ctx.cases {
        let p = [5u64, 7, 101, 65_537][rng.gen_range(0..4)];
        let f = PrimeField::new(p).unwrap();
        let x = f.elem(rng.gen_range(1..p) as i64);
        t.check(f.mul(x, f.inv(x).unwrap()) == FieldElement::ONE, || format!("{x} in F_{p}"));
    }
    t
}

fn primitive_root_order(_: &Ctx) -> Tally {
    let mut t = Tally::default();
    for p in [3u64, 5, 7, 11, 13, 31] {
        let f = PrimeField::new(p).unwrap();
        for a_bar in (1..p).filter(|d| (p - 1) % d == 0) {
            let q = find_primitive_root(a_bar, f).unwrap();
            let exact = f.pow(q, a_bar) == FieldElement::ONE && (1..a_bar).all(|d| f.pow(q, d) != FieldElement::ONE);
            t.check(exact, || format!("a_bar={a_bar} p={p}"));
        }
    }
    t
}

fn associativity(ctx: &Ctx) -> Tally {
    sampled(ctx, 1, |rng, t| {
        let s = random_spec(rng);
        let (x, y, z) = (random_element(rng, s), random_element(rng, s), random_element(rng, s));
        let lhs = x.mul(&y).unwrap().mul(&z).unwrap();
        let rhs = x.mul(&y.mul(&z).unwrap()).unwrap();
        t.check(lhs == rhs, || format!("({x})({y})({z})"));
    })
}

fn q_commutation(_: &Ctx) -> Tally {
    let mut t = Tally::default();
    for params in PARAMS {
        let s = spec_of(params);
        for i in 0..s.c() {
            for j in i + 1..s.c() {
                let (xi, xj) = (AlgebraElement::generator(s, i), AlgebraElement::generator(s, j));
                let ok = xi.mul(&xj).unwrap() == xj.mul(&xi).unwrap().scale(s.q());
                t.check(ok, || format!("x{} x{} in {params:?}", i + 1, j + 1));
            }
        }
    }
    t
}

fn u_lambda_nilpotent(ctx: &Ctx) -> Tally {
    sampled(ctx, 2, |rng, t| {
        let s = random_spec(rng);
        let pt = random_point(rng, &s);
        let u = u_lambda(s, pt.coords()).unwrap();
        t.check(u.pow(s.a() as u32).is_zero(), || format!("lambda={pt}"));
    })
}

fn automorphism_multiplicative(ctx: &Ctx) -> Tally {
    sampled(ctx, 3, |rng, t| {
        let s = random_spec(rng);
        let psi = DiagonalAutomorphism::new(random_units(rng, &s)).unwrap();
        let (x, y) = (random_element(rng, s), random_element(rng, s));
        let lhs = psi.apply(&x.mul(&y).unwrap()).unwrap();
        let rhs = psi.apply(&x).unwrap().mul(&psi.apply(&y).unwrap()).unwrap();
        t.check(lhs == rhs, || format!("mu={:?}", psi.mu()));
    })
}

fn automorphism_composition(ctx: &Ctx) -> Tally {
    sampled(ctx, 4, |rng, t| {
        let s = random_spec(rng);
        let psi = DiagonalAutomorphism::new(random_units(rng, &s)).unwrap();
        let phi = DiagonalAutomorphism::new(random_units(rng, &s)).unwrap();
        let x = random_element(rng, s);
        let lhs = psi.compose(&phi, s.field()).apply(&x).unwrap();
        let rhs = psi.apply(&phi.apply(&x).unwrap()).unwrap();
        t.check(lhs == rhs, || format!("mu={:?} nu={:?}", psi.mu(), phi.mu()));
    })
}

fn relations_hold(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    sampled(ctx, 5, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim, rng.gen());
        t.check(m.validate().is_ok(), || format!("random module of dim {}", m.dim()));
        let psi = DiagonalAutomorphism::new(random_units(rng, &s)).unwrap();
        t.check(m.twist(&psi).unwrap().validate().is_ok(), || "twist".into());
        let b = BimoduleRep::twisted(&psi, s).unwrap();
        t.check(b.validate().is_ok(), || format!("twisted bimodule mu={:?}", psi.mu()));
    })
}

fn unit_law(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    sampled(ctx, 6, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim, rng.gen());
        let f = twist_to_tensor_map(&DiagonalAutomorphism::identity(s.c()), &m).unwrap();
        t.check(check_isomorphism_via_map(&f), || format!("dim {}", m.dim()));
    })
}

fn twist_tensor(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    sampled(ctx, 7, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim, rng.gen());
        let psi = DiagonalAutomorphism::new(random_units(rng, &s)).unwrap();
        let f = twist_to_tensor_map(&psi, &m).unwrap();
        let ok = f.source.dim() == f.target.dim() && check_isomorphism_via_map(&f);
        t.check(ok, || format!("mu={:?} dim {}", psi.mu(), m.dim()));
    })
}

fn tensor_associativity(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    sampled(ctx, 8, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim.min(12), rng.gen());
        let b1 = BimoduleRep::twisted(&DiagonalAutomorphism::new(random_units(rng, &s)).unwrap(), s).unwrap();
        let b2 = BimoduleRep::twisted(&DiagonalAutomorphism::new(random_units(rng, &s)).unwrap(), s).unwrap();
        let (b12, _) = tensor_bimodules(&b1, &b2).unwrap();
        let lhs = tensor_bimodule_module(&b12, &m).unwrap();
        let rhs = tensor_bimodule_module(&b1, &tensor_bimodule_module(&b2, &m).unwrap()).unwrap();
        let ok = lhs.dim() == rhs.dim() && support_variety(&lhs) == support_variety(&rhs);
        t.check(ok, || format!("dims {} vs {}", lhs.dim(), rhs.dim()));
    })
}

fn proof_isomorphism(_: &Ctx) -> Tally {
    let s = spec_of((2, 2, 5));
    let f = s.field();
    let cases: Vec<(ProjPoint, Vec<FieldElement>)> = projective_points(2, f)
        .into_iter()
        .flat_map(|l| {
            f.units().flat_map(move |m1| f.units().map(move |m2| vec![m1, m2])).map(move |mu| (l.clone(), mu))
        })
        .collect();
    par::map(Strategy::default(), &cases, |(l, mu)| {
        let mut t = Tally::default();
        let psi = DiagonalAutomorphism::new(mu.clone()).unwrap();
        let map = cyclic_twist_isomorphism(s, l.coords(), &psi).unwrap();
        t.check(check_isomorphism_via_map(&map), || format!("lambda={l} mu={mu:?}"));
        t
    })
    .into_iter()
    .fold(Tally::default(), Tally::merge)
}

fn cover_minimal(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    sampled(ctx, 9, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim, rng.gen());
        let r = resolve(&m, 2);
        let ok = cover_is_minimal(&m) && r.syzygies.iter().all(cover_is_minimal);
        t.check(ok, || format!("dim {}", m.dim()));
    })
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn betti_of_k(_: &Ctx) -> Tally {
    let mut t = Tally::default();
    for (params, depth) in [((2, 3, 7), 8), ((2, 2, 5), 8), ((3, 2, 5), 6)] {
        let s = spec_of(params);
        let betti = resolve(&ModuleRep::simple(s), depth).betti;
        for (n, &b) in betti.iter().enumerate() {
            t.check(b == binom(n + s.c() - 1, s.c() - 1), || format!("{params:?} b_{n} = {b}"));
        }
    }
    t
}

fn complexity_coherence(_: &Ctx) -> Tally {
    let mut t = Tally::default();
    for params in [(2, 3, 7), (2, 2, 5)] {
        let s = spec_of(params);
        let k = resolve(&ModuleRep::simple(s), 8);
        let ck = complexity_estimate(&k.betti).unwrap().complexity;
        t.check(ck == s.c(), || format!("{params:?} cx(k) = {ck}"));
        let ones = vec![FieldElement::ONE; s.c()];
        let m = cyclic_u_module(s, &ones).unwrap();
        let cm = complexity_estimate(&resolve(&m, 8).betti).unwrap().complexity;
        let line_dim = support_variety(&m).len();
        t.check(cm == 1 && line_dim == 1, || format!("{params:?} cx(Au) = {cm}"));
    }
    t
}

fn projectivity_detection(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    let mut fixed = Tally::default();
    for params in PARAMS {
        let s = spec_of(params);
        let ones = vec![FieldElement::ONE; s.c()];
        for m in [ModuleRep::free(s, 1), ModuleRep::free(s, 2), ModuleRep::simple(s), cyclic_u_module(s, &ones).unwrap()] {
            fixed.check(support_variety(&m).is_trivial() == is_projective(&m), || format!("{params:?} dim {}", m.dim()));
        }
    }
    fixed.merge(sampled(ctx, 10, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim, rng.gen());
        t.check(support_variety(&m).is_trivial() == is_projective(&m), || format!("dim {}", m.dim()));
    }))
}

fn direct_sum_union(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    sampled(ctx, 11, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim / 2, rng.gen());
        let n = random_module(s, max_dim / 2, rng.gen());
        let lhs = support_variety(&m.direct_sum(&n).unwrap());
        let rhs = support_variety(&m).union(&support_variety(&n)).unwrap();
        t.check(lhs == rhs, || format!("{lhs} vs {rhs}"));
    })
}

fn syzygy_invariance(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    sampled(ctx, 12, move |rng, t| {
        let s = random_spec(rng);
        let mut m = random_module(s, max_dim, rng.gen());
        while is_projective(&m) {
            m = random_module(s, max_dim, rng.gen());
        }
        let v = support_variety(&m);
        let w = support_variety(&syzygy(&m));
        t.check(v == w, || format!("{v} vs {w}"));
    })
}

fn twist_transport(_: &Ctx) -> Tally {
    let s = spec_of((2, 3, 7));
    let f = s.field();
    let cases: Vec<(ProjPoint, Vec<FieldElement>)> = projective_points(2, f)
        .into_iter()
        .flat_map(|l| {
            f.units().flat_map(move |m1| f.units().map(move |m2| vec![m1, m2])).map(move |mu| (l.clone(), mu))
        })
        .collect();
    par::map(Strategy::default(), &cases, |(l, mu)| {
        let mut t = Tally::default();
        let psi = DiagonalAutomorphism::new(mu.clone()).unwrap();
        let twisted = cyclic_u_module(s, l.coords()).unwrap().twist(&psi).unwrap();
        let scaled: Vec<FieldElement> =
            l.coords().iter().zip(psi.inverse(f).mu()).map(|(&x, &m)| f.mul(x, m)).collect();
        let expected = predicted_line(&s, &scaled).unwrap();
        t.check(support_variety(&twisted) == expected, || format!("lambda={l} mu={mu:?}"));
        t
    })
    .into_iter()
    .fold(Tally::default(), Tally::merge)
}

fn rank_criterion_soundness(ctx: &Ctx) -> Tally {
    let max_dim = ctx.max_dim;
    let criterion = ctx.criterion;
    let big = Ctx { cases: ctx.cases * 4, ..*ctx };
    sampled(&big, 13, move |rng, t| {
        let s = random_spec(rng);
        let m = random_module(s, max_dim, rng.gen());
        let l = random_point(rng, &s);
        let u = m.u_action(l.coords()).unwrap();
        let free = jordan_block_sizes(&u).iter().all(|&b| b == s.a());
        t.check(criterion(&m, &l) == !free, || format!("dim {} lambda={l}", m.dim()));
    })
}

fn sweep_cases(p: u64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let f = PrimeField::new(p).unwrap();
    let mut out = Vec::new();
    for l in projective_points(2, f) {
        for m1 in 1..p as i64 {
            for m2 in 1..p as i64 {
                let lam: Vec<i64> = l.values().iter().map(|&x| x as i64).collect();
                out.push((lam, vec![m1, m2]));
            }
        }
    }
    out
}

fn powers_equal_on_support(spec: &AlgebraSpec, lambda: &[i64], mu: &[i64]) -> bool {
    let f = spec.field();
    let a = spec.a() as u64;
    let pw: Vec<FieldElement> = lambda
        .iter()
        .zip(mu)
        .filter(|(&l, _)| f.elem(l) != FieldElement::ZERO)
        .map(|(_, &m)| f.pow(f.elem(m), a))
        .collect();
    pw.iter().all(|&x| x == pw[0])
}

fn counterexample_sweep(_: &Ctx) -> Tally {
    let mut t = Tally::default();
    for (a, p) in [(2u64, 5u64), (3, 7)] {
        let s = spec_of((2, a, p));
        let cases: Vec<_> = sweep_cases(p)
            .into_iter()
            .filter(|(l, m)| !powers_equal_on_support(&s, l, m))
            .collect();
        let results = par::map(Strategy::default(), &cases, |(l, m)| {
            let r = run_counterexample_in(s, l, m);
            let ok = matches!(&r, Ok(r) if r.confirmed && !r.containment_holds && r.iso_verified);
            (ok, format!("a={a} p={p} lambda={l:?} mu={m:?}"))
        });
        for (ok, msg) in results {
            t.check(ok, || msg);
        }
    }
    t
}

fn genericity_sharpness(_: &Ctx) -> Tally {
    let mut t = Tally::default();
    for (a, p) in [(2u64, 5u64), (3, 7)] {
        let s = spec_of((2, a, p));
        let cases = sweep_cases(p);
        let results = par::map(Strategy::default(), &cases, |(l, m)| {
            let (vm, vbm) = scan_pair(s, l, m).unwrap();
            let contained = vbm.is_subset(&vm).unwrap() && vm.is_subset(&vbm).unwrap();
            (contained == powers_equal_on_support(&s, l, m), format!("a={a} p={p} lambda={l:?} mu={m:?}"))
        });
        for (ok, msg) in results {
            t.check(ok, || msg);
        }
    }
    t
}

type Property = (&'static str, fn(&Ctx) -> Tally);

const PROPERTIES: [Property; 22] = [
    ("field.inverse", field_inverse),
    ("field.primitive_root_order", primitive_root_order),
    ("algebra.associativity", associativity),
    ("algebra.q_commutation", q_commutation),
    ("algebra.u_lambda_nilpotent", u_lambda_nilpotent),
    ("algebra.automorphism_multiplicative", automorphism_multiplicative),
    ("algebra.automorphism_composition", automorphism_composition),
    ("modrep.relations_hold", relations_hold),
    ("modrep.unit_law", unit_law),
    ("modrep.twist_tensor", twist_tensor),
    ("modrep.tensor_associativity", tensor_associativity),
    ("modrep.proof_isomorphism", proof_isomorphism),
    ("homology.cover_minimal", cover_minimal),
    ("homology.betti_of_k", betti_of_k),
    ("homology.complexity_coherence", complexity_coherence),
    ("variety.projectivity_detection", projectivity_detection),
    ("variety.direct_sum_union", direct_sum_union),
    ("variety.syzygy_invariance", syzygy_invariance),
    ("variety.twist_transport", twist_transport),
    ("variety.rank_criterion_soundness", rank_criterion_soundness),
    ("verify.counterexample_sweep", counterexample_sweep),
    ("verify.genericity_sharpness", genericity_sharpness),
];

pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|p| p.0).collect()
}

pub fn run_property_suite(config: SuiteConfig) -> SuiteReport {
    run_property_suite_with(config, &point_in_rank_variety)
}

/// Runs every property, using `criterion` wherever the suite checks the
/// freeness test against its Jordan-type oracle.
pub fn run_property_suite_with(config: SuiteConfig, criterion: &FreenessCriterion) -> SuiteReport {
    let indexed: Vec<(usize, Property)> = PROPERTIES.iter().copied().enumerate().collect();
    let properties = par::map(Strategy::default(), &indexed, |&(i, (name, run))| {
        let ctx = Ctx {
            seed: config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64),
            cases: config.cases,
            max_dim: config.max_dim,
            criterion,
        };
        let t = run(&ctx);
        PropertyResult { name, cases: t.cases, failures: t.failures, passed: t.failures == 0, first_failure: t.first_failure }
    });
    SuiteReport {
        config,
        properties_run: properties.len(),
        total_cases: properties.iter().map(|p| p.cases).sum(),
        all_passed: properties.iter().all(|p| p.passed),
        properties,
    }
}

/// Off-by-one variant of [`point_in_rank_variety`] for checking that the
/// suite notices a broken criterion.
pub fn mutated_rank_criterion(m: &ModuleRep, lambda: &ProjPoint) -> bool {
    let u = m.u_action(lambda.coords()).expect("point has c coordinates");
    let a = m.spec().a();
    a * u.pow(a as u64 - 1).rank() + 1 != m.dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let r = run_property_suite(SuiteConfig { seed: 7, cases: 6, max_dim: 16 });
        for p in &r.properties {
            assert!(p.passed, "{}: {:?}", p.name, p.first_failure);
            assert!(p.cases > 0, "{} ran no cases", p.name);
        }
        assert_eq!(r.properties_run, PROPERTIES.len());
    }

    #[test]
    fn mutation_is_caught() {
        let r = run_property_suite_with(SuiteConfig { seed: 7, cases: 6, max_dim: 16 }, &mutated_rank_criterion);
        assert!(!r.all_passed);
        assert!(!r.property("variety.rank_criterion_soundness").unwrap().passed);
    }
}
