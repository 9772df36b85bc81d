use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use spinharm_core::gstruct::{GStructure, UnitSpinor};
use spinharm_core::homogeneous::{builtin_names, load_model, ModelAnalysis};
use spinharm_core::numeric;
use spinharm_core::scalar::{rational_roots, Polynomial};

fn structures(c: &mut Criterion) {
    for n in [6, 7] {
        c.bench_function(&format!("gstructure_s5_n{n}"), |b| {
            b.iter(|| GStructure::new(UnitSpinor::basis(black_box(n), 5).unwrap()).unwrap())
        });
    }
}

fn models(c: &mut Criterion) {
    for name in builtin_names() {
        let model = load_model(name).unwrap();
        let analysis = ModelAnalysis::new(model.clone()).unwrap();
        c.bench_function(&format!("{name}_extract"), |b| b.iter(|| analysis.extract_s_eta().unwrap()));
        c.bench_function(&format!("{name}_harmonicity"), |b| b.iter(|| analysis.harmonicity().unwrap()));
        c.bench_function(&format!("{name}_numeric"), |b| b.iter(|| numeric::evaluate(&model, black_box(0.7)).unwrap()));
    }
}

fn roots(c: &mut Criterion) {
    // (2t - 3)(t - 1/8)(t^2 + 1)(5t + 4)
    let p = [&[-3, 2][..], &[-1, 8], &[1, 0, 1], &[4, 5]]
        .iter()
        .fold(Polynomial::one(), |acc, f| &acc * &Polynomial::from_ints(f));
    c.bench_function("rational_roots_degree5", |b| b.iter(|| rational_roots(black_box(&p)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = structures, models, roots
}
criterion_main!(benches);
