use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion, Throughput};
use flawshift::{ColumnIterator, LatticePath};
use flawshift_bench::random_dyck;
use std::hint::black_box;

fn init(c: &mut Criterion) {
    let mut g = c.benchmark_group("column_init");
    for k in [1_000usize, 10_000, 100_000, 1_000_000] {
        g.throughput(Throughput::Elements(k as u64));
        let nested = LatticePath::nested(k);
        g.bench_with_input(BenchmarkId::new("nested", k), &nested, |b, x| {
            b.iter(|| ColumnIterator::new(black_box(x)).unwrap())
        });
        let random = random_dyck(k, 1);
        g.bench_with_input(BenchmarkId::new("random", k), &random, |b, x| {
            b.iter(|| ColumnIterator::new(black_box(x)).unwrap())
        });
    }
    g.finish();
}

fn full_column(c: &mut Criterion) {
    let mut g = c.benchmark_group("column_yields");
    for k in [1_000usize, 100_000, 1_000_000] {
        g.throughput(Throughput::Elements(k as u64));
        let x = random_dyck(k, 2);
        g.bench_with_input(BenchmarkId::from_parameter(k), &x, |b, x| {
            b.iter_batched_ref(
                || ColumnIterator::new(x).unwrap(),
                |it| {
                    while let Some(d) = it.advance() {
                        black_box(d);
                    }
                },
                BatchSize::LargeInput,
            )
        });
    }
    g.finish();
}

criterion_group!(benches, init, full_column);
criterion_main!(benches);
