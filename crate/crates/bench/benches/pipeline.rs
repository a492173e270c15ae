use std::hint::black_box;

use conceptmap::index::{build_index, query, QueryOptions};
use conceptmap::lexer::{lex, skeleton};
use conceptmap::linker::{annotate_file, Linker};
use conceptmap::profile::{
    build_profile, documents_from_posts, entity_documents, CorpusStats, NgramRange, ProfileParams,
};
use conceptmap::{Entity, LinkConfig, Preprocessor};
use conceptmap_bench::{java_sources, posts};
use criterion::{criterion_group, criterion_main, Criterion, Throughput};

fn lexing(c: &mut Criterion) {
    let sources = java_sources();
    let bytes: usize = sources.iter().map(String::len).sum();
    let mut group = c.benchmark_group("lexer");
    group.throughput(Throughput::Bytes(bytes as u64));
    group.bench_function("lex", |b| {
        b.iter(|| sources.iter().map(|s| lex(black_box(s)).tokens.len()).sum::<usize>())
    });
    group.bench_function("skeleton", |b| {
        b.iter(|| sources.iter().map(|s| skeleton(black_box(s)).len()).sum::<usize>())
    });
    group.finish();
}

fn profiles(c: &mut Criterion) {
    let pre = Preprocessor::default();
    let docs = documents_from_posts(&posts("pipeline/dump.xml"), &pre);
    let range = NgramRange { min: 1, max: 7 };
    c.bench_function("corpus_stats", |b| {
        b.iter(|| CorpusStats::build(black_box(&docs), range).unwrap())
    });
    let stats = CorpusStats::build(&docs, range).unwrap();
    let params = ProfileParams {
        range,
        ..ProfileParams::default()
    };
    let loop_docs = entity_documents(&docs, "loop");
    c.bench_function("build_profile", |b| {
        b.iter(|| build_profile(&Entity::seed("loop"), black_box(&loop_docs), &stats, &params).unwrap())
    });
}

fn search(c: &mut Criterion) {
    let pre = Preprocessor::default();
    let docs = documents_from_posts(&posts("pipeline/dump.xml"), &pre);
    let range = NgramRange { min: 1, max: 7 };
    let stats = CorpusStats::build(&docs, range).unwrap();
    let params = ProfileParams {
        range,
        ..ProfileParams::default()
    };
    let profiles: Vec<_> = ["array", "loop", "conditional", "increment", "decrement"]
        .iter()
        .map(|&e| build_profile(&Entity::seed(e), &entity_documents(&docs, e), &stats, &params).unwrap())
        .collect();
    let linker = Linker::new(&profiles, LinkConfig::default()).unwrap();
    let files: Vec<(String, String)> = java_sources()
        .iter()
        .enumerate()
        .map(|(i, s)| (format!("F{i:02}.java"), annotate_file(s, &linker).text))
        .collect();
    c.bench_function("build_index", |b| {
        b.iter(|| build_index(black_box(&files), &pre).unwrap())
    });
    let index = build_index(&files, &pre).unwrap();
    let options = QueryOptions::default();
    c.bench_function("query_one_term", |b| {
        b.iter(|| query(&index, black_box(&["loop"]), &pre, options).unwrap())
    });
    c.bench_function("query_two_terms", |b| {
        b.iter(|| query(&index, black_box(&["array", "length"]), &pre, options).unwrap())
    });
}

criterion_group!(benches, lexing, profiles, search);
criterion_main!(benches);
