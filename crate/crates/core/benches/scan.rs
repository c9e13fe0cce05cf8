use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qci::algebra::AlgebraSpec;
use qci::field::PrimeField;
use qci::linalg::Matrix;
use qci::module::{random_module, ModuleRep};
use qci::par::Strategy;
use qci::variety::support_variety_with;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn variety_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("support_variety");
    group.sample_size(10);
    let cases = [
        ("k_c3_a2_p5", ModuleRep::simple(AlgebraSpec::from_params(3, 2, 5).unwrap())),
        ("free2_c3_a2_p7", ModuleRep::free(AlgebraSpec::from_params(3, 2, 7).unwrap(), 2)),
        ("random_c2_a3_p13", random_module(AlgebraSpec::from_params(2, 3, 13).unwrap(), 18, 5)),
    ];
    for (name, m) in &cases {
        for (label, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, name), m, |b, m| b.iter(|| support_variety_with(m, strategy)));
        }
    }
    group.finish();
}

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("echelon");
    group.sample_size(10);
    let f = PrimeField::new(65_521).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [128usize, 256] {
        let data = (0..n * n).map(|_| rng.gen_range(0..f.modulus())).collect();
        let m = Matrix::from_rows(f, n, n, data);
        for (label, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, n), &m, |b, m| b.iter(|| m.echelon_with(strategy)));
        }
    }
    group.finish();
}

criterion_group!(benches, variety_scan, elimination);
criterion_main!(benches);
