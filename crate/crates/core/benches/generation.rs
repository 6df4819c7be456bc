use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use krongraph::metrics::{local_triangles_with, top_eigenvalues_with, EigenOptions};
use krongraph::models::{
    associated_cl, generate_cl_with, generate_skg_with, symmetrize, GenerationOptions, SkgParams,
};
use krongraph::par::Execution;
use krongraph::GeneratorMatrix;

const MODES: [(&str, Execution); 2] = [
    ("parallel", Execution::Parallel),
    ("sequential", Execution::Sequential),
];

fn options(execution: Execution) -> GenerationOptions {
    GenerationOptions {
        execution,
        ..Default::default()
    }
}

fn bench_generation(c: &mut Criterion) {
    let t = GeneratorMatrix::graph500();
    let mut group = c.benchmark_group("generate");
    group.sample_size(10);
    for levels in [14u32, 16] {
        let m = 16u64 << levels;
        let params = SkgParams::new(t, levels, m).unwrap();
        let degrees = associated_cl(&t, levels, m).unwrap();
        group.throughput(Throughput::Elements(m));
        for (mode, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(format!("skg/{mode}"), levels),
                &levels,
                |b, _| b.iter(|| generate_skg_with(&params, 1, &options(exec)).unwrap()),
            );
            group.bench_with_input(
                BenchmarkId::new(format!("cl/{mode}"), levels),
                &levels,
                |b, _| b.iter(|| generate_cl_with(&degrees, m, 1, &options(exec)).unwrap()),
            );
        }
    }
    group.finish();
}

fn bench_metrics(c: &mut Criterion) {
    let levels = 14;
    let params = SkgParams::new(GeneratorMatrix::graph500(), levels, 16 << levels).unwrap();
    let g = symmetrize(&generate_skg_with(&params, 1, &Default::default()).unwrap()).graph;
    let mut group = c.benchmark_group("metrics");
    group.sample_size(10);
    for (mode, exec) in MODES {
        group.bench_function(BenchmarkId::new("triangles", mode), |b| {
            b.iter(|| local_triangles_with(&g, exec))
        });
        let opts = EigenOptions {
            execution: exec,
            ..Default::default()
        };
        group.bench_function(BenchmarkId::new("top25_eigenvalues", mode), |b| {
            b.iter(|| top_eigenvalues_with(&g, 25, &opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_generation, bench_metrics);
criterion_main!(benches);
