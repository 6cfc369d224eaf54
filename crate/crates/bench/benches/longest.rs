use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use supergrid::geom::c;
use supergrid::{cshape, hamiltonian_cycle, hamiltonian_path, Shape};

fn longest_c_scaling(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("longest_c");
    group.sample_size(10);
    for side in [100, 200, 400, 800] {
        let third = side / 3;
        let shape = Shape::c_shape(side, side, side / 2, third, third, side - 2 * third).unwrap();
        group.throughput(Throughput::Elements(shape.size() as u64));
        group.bench_with_input(
            BenchmarkId::new("hamiltonian_pair", side * side),
            &shape,
            |b, shape| {
                b.iter(|| cshape::longest_c(shape, c(1, 1), black_box(c(side, side))).unwrap())
            },
        );
        let thin = Shape::c_shape(side, side, side / 2, side - 2, 1, 1).unwrap();
        group.bench_with_input(
            BenchmarkId::new("bounded_pair", side * side),
            &thin,
            |b, shape| b.iter(|| cshape::longest_c(shape, c(1, 1), black_box(c(side, 1))).unwrap()),
        );
    }
    group.finish();
}

fn rectangles(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("rect");
    group.sample_size(10);
    for side in [100, 300] {
        let shape = Shape::rect(side, side).unwrap();
        group.throughput(Throughput::Elements(shape.size() as u64));
        group.bench_with_input(
            BenchmarkId::new("hp_interior", side * side),
            &shape,
            |b, shape| {
                b.iter(|| {
                    hamiltonian_path(
                        shape,
                        c(side / 2, side / 2),
                        black_box(c(side / 2 + 1, side / 2)),
                    )
                    .unwrap()
                })
            },
        );
        group.bench_with_input(BenchmarkId::new("hc", side * side), &shape, |b, shape| {
            b.iter(|| hamiltonian_cycle(black_box(shape)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, longest_c_scaling, rectangles);
criterion_main!(benches);
