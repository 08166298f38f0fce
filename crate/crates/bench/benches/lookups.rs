use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use holoflow_core::lattice::cells_in_box;
use holoflow_core::rational::frac;
use holoflow_core::states::verify_sphere;
use holoflow_core::verify::family_gauge_sweep;
use holoflow_core::CubicalFamily;

fn lookups(c: &mut Criterion) {
    for d in [3usize, 4] {
        let family = CubicalFamily::main(d).unwrap();
        let cells = cells_in_box(0, &vec![-2; d], &vec![2; d], 2);
        c.bench_function(&format!("coeff_b all pairs d={d} ({} cells)", cells.len()), |b| {
            b.iter(|| {
                for p in &cells {
                    for q in &cells {
                        black_box(family.coeff_b(p, q).unwrap());
                    }
                }
            })
        });
    }
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    let family = CubicalFamily::main(3).unwrap();
    g.bench_function("gauge d=3 R=3", |b| b.iter(|| family_gauge_sweep(&family, 0, 3).unwrap()));
    let areas = vec![frac(1, 2), frac(1, 3), frac(1, 6)];
    g.bench_function("sphere n=3 degree 4", |b| b.iter(|| verify_sphere(&areas, 4).unwrap()));
    g.finish();
}

criterion_group!(benches, lookups, sweeps);
criterion_main!(benches);
