use std::hint::black_box;
use std::time::Duration;

use cayley_drg::graphs::{cayley_graph, graph6, NamedGraph};
use cayley_drg::groups::{ConnectionSet, GroupSpec};
use cayley_drg::spectral::spectrum;
use cayley_drg::structure::krausz;
use cayley_drg::symmetry::{automorphism_group, canonical_form, regular_subgroup_search};
use criterion::{criterion_group, criterion_main, Criterion};

fn named(name: &str) -> cayley_drg::graphs::Graph {
    NamedGraph::parse(name).unwrap().build().unwrap()
}

fn symmetry(c: &mut Criterion) {
    let tc = named("line(tutte_coxeter)");
    let hs = named("hoffman_singleton");
    c.bench_function("aut/line(tutte_coxeter)", |b| b.iter(|| automorphism_group(black_box(&tc))));
    c.bench_function("aut/hoffman_singleton", |b| b.iter(|| automorphism_group(black_box(&hs))));
    c.bench_function("canonical/hoffman_singleton", |b| b.iter(|| canonical_form(black_box(&hs))));

    let p = named("petersen");
    let aut = automorphism_group(&p);
    c.bench_function("regular_search/petersen", |b| {
        b.iter(|| regular_subgroup_search(black_box(&p), &aut, Duration::from_secs(60)))
    });
}

fn spectral(c: &mut Criterion) {
    let hs = named("line(hoffman_singleton)");
    let mut group = c.benchmark_group("spectrum");
    group.sample_size(10);
    group.bench_function("line(hoffman_singleton)", |b| b.iter(|| spectrum(black_box(&hs))));
    group.finish();
}

fn structure(c: &mut Criterion) {
    let g = GroupSpec::parse("SD(73,9,2)").unwrap().build().unwrap();
    let words = cayley_drg::groups::parse_word_list("b, a^-1 b a").unwrap();
    let elems: Vec<_> = words.iter().map(|w| g.evaluate(w).unwrap()).collect();
    let s = ConnectionSet::inverse_closure(&g, elems).unwrap();
    let pg8 = cayley_graph(&g, &s);
    c.bench_function("krausz/pg8_line", |b| b.iter(|| krausz(black_box(&pg8))));

    let text = graph6::encode(&pg8);
    c.bench_function("graph6/decode_pg8_line", |b| b.iter(|| graph6::decode(black_box(&text))));
}

criterion_group!(benches, symmetry, spectral, structure);
criterion_main!(benches);
