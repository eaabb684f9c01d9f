use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rigid_dt::dtgw::{correspondence_check, quintic_preset};
use rigid_dt::schur::cauchy_schur_side;
use rigid_dt::vertex::VertexCounter;
use rigid_dt::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn p_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("p_table");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "n12_d4"), &exec, |b, &exec| {
            b.iter(|| VertexCounter::new().p_table(black_box(12), black_box(4), exec))
        });
    }
    g.finish();
}

fn cauchy(c: &mut Criterion) {
    let mut g = c.benchmark_group("cauchy_schur_side");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "q16_v5"), &exec, |b, &exec| {
            b.iter(|| cauchy_schur_side(black_box(16), black_box(5), exec))
        });
    }
    g.finish();
}

fn correspondence(c: &mut Criterion) {
    let geom = quintic_preset();
    let mut g = c.benchmark_group("correspondence_check");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, "quintic_d2_g6"), &exec, |b, &exec| {
            b.iter(|| correspondence_check(&geom, black_box(2), black_box(6), exec))
        });
    }
    g.finish();
}

criterion_group!(benches, p_table, cauchy, correspondence);
criterion_main!(benches);
