//! Compares sequential and data-parallel batch analysis over a realistic
//! word list: every form the seed lexicon generates, tiled to 10k words,
//! plus a sprinkle of unanalysable strings.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use morph_core::engine::{analyze_batch, analyze_batch_seq, generate, GenQuery};
use morph_core::Lexicon;

fn seed_lexicon() -> Lexicon {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/seed.lex");
    let text = std::fs::read_to_string(path).expect("seed lexicon present");
    Lexicon::from_str(&text).expect("seed lexicon loads")
}

fn corpus(lex: &Lexicon, size: usize) -> Vec<String> {
    let mut base: Vec<String> = Vec::new();
    for lemma in lex.lemmas() {
        let forms = generate(lex, &GenQuery::lemma(lemma)).expect("known lemma");
        base.extend(forms.into_iter().map(|f| f.surface));
    }
    base.extend(
        ["impresido", "presidento", "doctors", "abolo", "zzz"]
            .iter()
            .map(|s| s.to_string()),
    );
    base.into_iter().cycle().take(size).collect()
}

fn bench_batch(c: &mut Criterion) {
    let lex = seed_lexicon();
    let mut group = c.benchmark_group("analyze_batch");
    for &size in &[1_000usize, 10_000] {
        let words = corpus(&lex, size);
        group.throughput(Throughput::Elements(size as u64));
        group.bench_with_input(BenchmarkId::new("sequential", size), &words, |b, words| {
            b.iter(|| analyze_batch_seq(&lex, words))
        });
        // With default features this is the rayon path; without, it is the
        // sequential fallback and the two series should coincide.
        group.bench_with_input(BenchmarkId::new("default", size), &words, |b, words| {
            b.iter(|| analyze_batch(&lex, words))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_batch);
criterion_main!(benches);
