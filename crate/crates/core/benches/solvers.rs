use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use connpart::bounds::packing_partitions_with;
use connpart::exact::{cmc, edge_partition_profile, ExactConfig};
use connpart::families::{binary_clique, nonmonotone_example, random_connected};
use connpart::verify::{run_suite, Suite, VerifyOptions};
use connpart::Parallelism;

const MODES: [Parallelism; 2] = [Parallelism::Sequential, Parallelism::Rayon];

fn exact_profiles(c: &mut Criterion) {
    let mut group = c.benchmark_group("edge_profile");
    group.sample_size(10);
    let (example, _) = nonmonotone_example();
    let clique = binary_clique(2, 1).unwrap();
    for mode in MODES {
        let cfg = ExactConfig::default().with_max_elements(64).with_parallelism(mode);
        group.bench_with_input(BenchmarkId::new("example", format!("{mode:?}")), &cfg, |b, cfg| {
            b.iter(|| edge_partition_profile(black_box(&example), 2, cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("binary_clique_2_1", format!("{mode:?}")), &cfg, |b, cfg| {
            b.iter(|| edge_partition_profile(black_box(&clique), 2, cfg).unwrap())
        });
    }
    group.finish();
}

fn max_cut(c: &mut Criterion) {
    let mut group = c.benchmark_group("cmc");
    group.sample_size(10);
    let g = random_connected(16, 40, 1).unwrap();
    for mode in MODES {
        let cfg = ExactConfig::default().with_parallelism(mode);
        group.bench_with_input(BenchmarkId::new("n16_m40", format!("{mode:?}")), &cfg, |b, cfg| {
            b.iter(|| cmc(black_box(&g), 2, cfg).unwrap())
        });
    }
    group.finish();
}

fn packing(c: &mut Criterion) {
    let mut group = c.benchmark_group("packing");
    let g = random_connected(40, 400, 2).unwrap();
    for mode in MODES {
        group.bench_with_input(BenchmarkId::new("n40_m400_k3", format!("{mode:?}")), &mode, |b, &mode| {
            b.iter(|| packing_partitions_with(black_box(&g), 3, mode).unwrap())
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for mode in MODES {
        let opts = VerifyOptions { count: Some(40), parallelism: mode, ..VerifyOptions::default() };
        group.bench_with_input(BenchmarkId::new("inequalities_40", format!("{mode:?}")), &opts, |b, opts| {
            b.iter(|| run_suite(Suite::Inequalities, opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact_profiles, max_cut, packing, suites);
criterion_main!(benches);
