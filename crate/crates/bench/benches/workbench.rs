use std::collections::BTreeMap;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use omlogic_core::harness::{run_trials, TrialConfig};
use omlogic_core::oml::{boolean_2, enumerate_omls, mo, OmlView};
use omlogic_core::semantics::{eval_wff, Interpretation, Structure};
use omlogic_core::syntax::{parse_wff, Language};
use omlogic_core::tvalgebra::{find_isomorphism, TVAlgebra};

fn bench_enumerate(c: &mut Criterion) {
    c.bench_function("enumerate_omls_8", |b| {
        b.iter(|| black_box(enumerate_omls(8).unwrap().len()))
    });
}

fn bench_isomorphism(c: &mut Criterion) {
    let prod = TVAlgebra::product(mo(2).algebra(), boolean_2().algebra()).unwrap();
    let perm: Vec<usize> = (0..prod.len()).rev().collect();
    let shuffled = prod.relabeled(&perm);
    c.bench_function("find_isomorphism_12", |b| {
        b.iter(|| black_box(find_isomorphism(&prod, &shuffled).is_some()))
    });
}

fn bench_decompose(c: &mut Criterion) {
    let mo2_x_two = TVAlgebra::product(mo(2).algebra(), boolean_2().algebra()).unwrap();
    let big = OmlView::new(TVAlgebra::product(&mo2_x_two, boolean_2().algebra()).unwrap()).unwrap();
    c.bench_function("decompose_24", |b| {
        b.iter(|| black_box(big.decompose().0.len()))
    });
}

fn bench_eval(c: &mut Criterion) {
    let lang = Language::with_standard_connectives(&[("P", 1)], &[]).unwrap();
    let interp = Interpretation::new(&lang, &["m1", "m2"], &BTreeMap::new()).unwrap();
    let base = BTreeMap::from([(
        "P".to_string(),
        vec![
            (vec!["m1".to_string()], "a".to_string()),
            (vec!["m2".to_string()], "b".to_string()),
        ],
    )]);
    let s = Structure::new(lang, interp, mo(2).into_algebra(), &base).unwrap();
    let w = parse_wff(
        s.extended_language(),
        "forall x. (P(x) | ~P(x)) & (P(m1) | P(x))",
    )
    .unwrap();
    c.bench_function("eval_depth3_mo2", |b| {
        b.iter(|| black_box(eval_wff(&s, &w).unwrap()))
    });
}

fn bench_trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("trials");
    group.sample_size(10);
    group.bench_function("run_trials_10", |b| {
        b.iter(|| black_box(run_trials(TrialConfig::new(7, 10)).unwrap().agreements))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_enumerate,
    bench_isomorphism,
    bench_decompose,
    bench_eval,
    bench_trials
);
criterion_main!(benches);
