use std::hint::black_box;
use std::path::Path;

use criterion::{criterion_group, criterion_main, Criterion};
use interval_rules::oracle::{reference_pipeline, DEFAULT_CAP};
use interval_rules::synth::{random_case, RandomTaskShape};
use interval_rules::{
    discretize, load_csv, min_int_change, min_int_change_parallel, mine_rules, ClassColumn, ModalityMode,
};

fn iris() -> interval_rules::Dataset {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/iris.csv");
    load_csv(path, &ClassColumn::parse("class"), b',').expect("iris.csv")
}

fn bench_iris(c: &mut Criterion) {
    let data = iris();
    let mut group = c.benchmark_group("iris");
    for label in ["setosa", "versicolor", "virginica"] {
        let task = data.split_one_vs_rest(label).unwrap();
        let task = discretize(&task, ModalityMode::Equiprobable, 10).unwrap();
        let maxfp = (task.n_neg() as f64 * 0.1).ceil() as usize;
        group.bench_function(format!("sequential/{label}"), |b| {
            b.iter(|| min_int_change(black_box(&task), 0))
        });
        group.bench_function(format!("parallel/{label}"), |b| {
            b.iter(|| min_int_change_parallel(black_box(&task), 0))
        });
        group.bench_function(format!("pipeline/{label}"), |b| {
            b.iter(|| mine_rules(black_box(&task), 0, maxfp))
        });
    }
    group.finish();
}

fn bench_small(c: &mut Criterion) {
    let cases: Vec<_> = (0..20).map(|s| random_case(s, RandomTaskShape::default())).collect();
    let mut group = c.benchmark_group("small");
    group.bench_function("miner", |b| {
        b.iter(|| {
            for case in &cases {
                black_box(mine_rules(&case.task, case.minsup, case.maxfp));
            }
        })
    });
    group.bench_function("oracle", |b| {
        b.iter(|| {
            for case in &cases {
                black_box(reference_pipeline(&case.task, case.minsup, case.maxfp, DEFAULT_CAP).unwrap());
            }
        })
    });
    group.finish();
}

criterion_group!(benches, bench_iris, bench_small);
criterion_main!(benches);
