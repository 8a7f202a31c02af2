use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use poset_codes::{chain_product_poset, weight_dist_bruteforce, Budget, Poset};
use poset_codes_bench::{n2_code, n3_code};

fn ideal_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideals");
    for (n, r) in [(2, 8), (3, 5), (4, 4), (8, 2)] {
        let p = chain_product_poset(n, r).unwrap();
        group.bench_with_input(BenchmarkId::new("chain_product", format!("{n}x{r}")), &p, |b, p| {
            b.iter(|| black_box(p.ideals().count()))
        });
    }
    let anti = Poset::antichain(16).unwrap();
    group.bench_function("antichain_16", |b| b.iter(|| black_box(anti.ideals().count())));
    group.finish();
}

fn generalized_weights(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("generalized_weights");
    for (q, r, k1, k2) in [(2, 5, 2, 3), (5, 5, 4, 4)] {
        let code = n2_code(q, r, k1, k2);
        group.bench_function(format!("n2_q{q}_r{r}_k{}", k1 + k2), |b| {
            b.iter(|| black_box(code.generalized_weights(&budget).unwrap()))
        });
    }
    let code = n3_code(3, 7);
    group.bench_function("n3_q3_r7", |b| b.iter(|| black_box(code.classify(&budget).unwrap())));
    group.finish();
}

fn brute_force_distribution(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("weight_distribution");
    group.sample_size(20);
    for (q, r, k1, k2) in [(3, 4, 2, 2), (5, 4, 3, 3)] {
        let code = n2_code(q, r, k1, k2);
        group.bench_function(format!("n2_q{q}_r{r}_k{}", k1 + k2), |b| {
            b.iter(|| black_box(weight_dist_bruteforce(&code, &budget).unwrap()))
        });
    }
    let code = n3_code(3, 6);
    group.bench_function("n3_q3_r6", |b| b.iter(|| black_box(weight_dist_bruteforce(&code, &budget).unwrap())));
    group.finish();
}

criterion_group!(benches, ideal_enumeration, generalized_weights, brute_force_distribution);
criterion_main!(benches);
