use bimcat_core::*;
use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn braids(c: &mut Criterion) {
    let w: BraidWord = "B5: s1 s2 s3^-1 s4 s2 s1^-1 s3 s4^-1 s2 s1"
        .parse()
        .unwrap();
    let v = w.compose(&w.inverse()).compose(&w);
    c.bench_function("braid_equal/B5 len 30", |b| {
        b.iter(|| braid_equal(black_box(&w), black_box(&v)).unwrap())
    });
}

fn reductions(c: &mut Criterion) {
    let t = parse_term("(((a+b)*(c+(1*d)))*((a+0)+(b*(c+d))))").unwrap();
    c.bench_function("normal_form/9 leaves", |b| {
        b.iter(|| normal_form(black_box(&t)))
    });
    c.bench_function("delta_reduce/random strategy", |b| {
        let t = parse_term("(((a+b)*(c+d))*(e+f))").unwrap();
        let mut seed = 0;
        b.iter(|| {
            seed += 1;
            delta_reduce_with(&t, Strategy::Random(seed)).unwrap()
        })
    });
}

fn coherence(c: &mut Criterion) {
    let spec = FuzzSpec::new(Flavor::Symmetric);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    c.bench_function("decide/random parallel pair", |b| {
        b.iter_batched(
            || random_parallel_pair(&mut rng, &spec),
            |(p, q)| decide(&p, &q, Flavor::Symmetric).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn targets(c: &mut Criterion) {
    c.bench_function("check_axioms/sigma bound 2", |b| {
        b.iter(|| check_axioms(&sigma_target(), 2))
    });
}

fn operads(c: &mut Criterion) {
    c.bench_function("free_nfold_enumerate/n=2 k=4", |b| {
        b.iter(|| free_nfold_enumerate(2, 4))
    });
}

fn matrices(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_matrix_axioms");
    group.sample_size(10);
    group.bench_function("sigma 20 samples", |b| {
        b.iter(|| {
            let cfg = MatConfig {
                samples: 20,
                ..MatConfig::new(7)
            };
            verify_matrix_axioms(&sigma_target(), &cfg).unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, braids, reductions, coherence, targets, operads, matrices);
criterion_main!(benches);
