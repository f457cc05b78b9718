//! Shared helpers for the integration and acceptance suites: the seed
//! lexicon, naive reference implementations (independent of the trie and of
//! the engine's search), and corpus builders.
//!
//! The reference implementations deliberately use linear scans and inline
//! constraint checks so that agreement with the library is meaningful.

#![allow(dead_code)]

use std::collections::BTreeSet;

use morph_core::engine::{Analysis, FeatureBundle, GenQuery, RuleId};
use morph_core::featcodes::{FinVerbFeatures, StemTypeCode};
use morph_core::lexicon::{LexEntry, Lexicon, Tag, Unifiable, WordFeatures};
use morph_core::segment::{Piece, Segmentation, ShapePattern};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/seed.lex");

pub fn seed_lexicon() -> Lexicon {
    let text = std::fs::read_to_string(SEED_PATH).expect("seed lexicon file");
    Lexicon::from_str(&text).expect("seed lexicon loads cleanly")
}

/// Words the engine must reject outright.
pub fn rejection_corpus() -> Vec<&'static str> {
    vec![
        "impresido",
        "presidento",
        "doctors",
        "abolo",
        "hacido",
        "decido",
        "luzes",
        "bambues",
        "leido",
        "querimos",
        "poderé",
        "estan",
        "niñoes",
        "azuls",
        "grandees",
        "sala",
        "temeramos",
        "qqq",
    ]
}

/// Every surface any lemma generates.
pub fn all_generated_surfaces(lex: &Lexicon) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for lemma in lex.lemmas() {
        let forms = morph_core::engine::generate(lex, &GenQuery::lemma(lemma))
            .expect("lemma from the index is known");
        out.extend(forms.into_iter().map(|f| f.surface));
    }
    out
}

/// Characters occurring in any surface of the lexicon.
pub fn surface_alphabet(lex: &Lexicon) -> Vec<char> {
    let mut set = BTreeSet::new();
    for entry in lex.entries() {
        set.extend(entry.surface().chars());
    }
    set.into_iter().collect()
}

/// Deterministic random strings over the lexicon alphabet.
pub fn random_words(lex: &Lexicon, count: usize, max_len: usize, seed: u64) -> Vec<String> {
    let alphabet = surface_alphabet(lex);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len)
                .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
                .collect()
        })
        .collect()
}

fn scan_ids(lex: &Lexicon, tag: Tag, surface: &str) -> Vec<usize> {
    lex.ids_of_tag(tag)
        .iter()
        .copied()
        .filter(|&id| lex.entry(id).surface() == surface)
        .collect()
}

/// Reference segmenter: enumerates every split point over characters and
/// filters each piece by a linear scan. No trie involved.
pub fn naive_segment(lex: &Lexicon, word: &str, pattern: ShapePattern) -> Vec<Segmentation> {
    let chars: Vec<char> = word.chars().collect();
    let n = chars.len();
    let tags = pattern.tags();
    let text = |a: usize, b: usize| -> String { chars[a..b].iter().collect() };
    let piece = |a: usize, b: usize, tag: Tag| -> Option<Piece> {
        let t = text(a, b);
        let ids = scan_ids(lex, tag, &t);
        (!ids.is_empty()).then_some(Piece {
            text: t,
            entry_ids: ids,
        })
    };

    let mut out = Vec::new();
    match tags {
        [t0] => {
            if n > 0 {
                if let Some(p) = piece(0, n, *t0) {
                    out.push(Segmentation {
                        pattern,
                        pieces: vec![p],
                    });
                }
            }
        }
        [t0, t1] => {
            // The final piece may be empty only for vm (i == n); an empty
            // scan result rules it out automatically otherwise.
            let hi = if *t1 == Tag::Vm { n } else { n.saturating_sub(1) };
            for i in 1..=hi {
                let (Some(p0), Some(p1)) = (piece(0, i, *t0), piece(i, n, *t1)) else {
                    continue;
                };
                out.push(Segmentation {
                    pattern,
                    pieces: vec![p0, p1],
                });
            }
        }
        [t0, t1, t2] => {
            for i in 1..n {
                for j in (i + 1)..n {
                    let (Some(p0), Some(p1), Some(p2)) =
                        (piece(0, i, *t0), piece(i, j, *t1), piece(j, n, *t2))
                    else {
                        continue;
                    };
                    out.push(Segmentation {
                        pattern,
                        pieces: vec![p0, p1, p2],
                    });
                }
            }
        }
        _ => unreachable!("patterns have 1-3 pieces"),
    }
    out
}

pub fn naive_segment_all(lex: &Lexicon, word: &str) -> Vec<Segmentation> {
    ShapePattern::ALL
        .iter()
        .flat_map(|&p| naive_segment(lex, word, p))
        .collect()
}

/// Reference analyser: enumerates entry tuples by linear scan and string
/// concatenation, re-stating the rule constraints inline.
pub fn brute_analyze(lex: &Lexicon, word: &str) -> BTreeSet<Analysis> {
    let mut out = BTreeSet::new();
    if word.is_empty() {
        return out;
    }

    // [w]
    for id in scan_ids(lex, Tag::W, word) {
        let e = lex.entry(id).as_w().unwrap();
        out.insert(Analysis {
            bundle: FeatureBundle {
                lemma: e.lemma.clone(),
                category: e.category,
                features: e.features,
            },
            rule: RuleId::WDirect,
            entry_ids: vec![id],
        });
    }

    // [vl, vm]
    for &sid in lex.ids_of_tag(Tag::Vl) {
        let stem = lex.entry(sid).as_vl().unwrap();
        let Some(rest) = word.strip_prefix(stem.surface.as_str()) else {
            continue;
        };
        if stem.surface.is_empty() {
            continue;
        }
        for eid in scan_ids(lex, Tag::Vm, rest) {
            let vm = lex.entry(eid).as_vm().unwrap();
            if !vm.conjugations.contains(&stem.conjugation) {
                continue;
            }
            if !stem.suffix_types.contains(&vm.suffix_type) {
                continue;
            }
            let wildcard = stem.stem_types.len() == 1
                && stem.stem_types.contains(&StemTypeCode::WILDCARD);
            if !wildcard && !stem.stem_types.contains(&vm.stem_type) {
                continue;
            }
            out.insert(Analysis {
                bundle: FeatureBundle {
                    lemma: stem.lemma.clone(),
                    category: stem.category,
                    features: WordFeatures::Verbal(FinVerbFeatures::new(
                        vm.person_number,
                        vm.tense_mood,
                    )),
                },
                rule: if wildcard {
                    RuleId::VerbRegular
                } else {
                    RuleId::VerbExplicit
                },
                entry_ids: vec![sid, eid],
            });
        }
    }

    // [wl]
    for id in scan_ids(lex, Tag::Wl, word) {
        let e = lex.entry(id).as_wl().unwrap();
        out.insert(Analysis {
            bundle: FeatureBundle {
                lemma: e.lemma.clone(),
                category: e.category,
                features: WordFeatures::Nominal {
                    gender: e.gender,
                    number: e.number,
                },
            },
            rule: RuleId::Nom4,
            entry_ids: vec![id],
        });
    }

    // Two- and three-piece nominal shapes over every split of the word.
    let chars: Vec<char> = word.chars().collect();
    let n = chars.len();
    let text = |a: usize, b: usize| -> String { chars[a..b].iter().collect() };

    for i in 1..n {
        let left = text(0, i);
        let right = text(i, n);

        // [wl, nn]
        for wid in scan_ids(lex, Tag::Wl, &left) {
            let wl = lex.entry(wid).as_wl().unwrap();
            for nid in scan_ids(lex, Tag::Nn, &right) {
                let nn = lex.entry(nid).as_nn().unwrap();
                if wl.number_types.contains(&nn.number_type) {
                    out.insert(Analysis {
                        bundle: FeatureBundle {
                            lemma: wl.lemma.clone(),
                            category: wl.category,
                            features: WordFeatures::Nominal {
                                gender: wl.gender,
                                number: Unifiable::Bound(nn.number),
                            },
                        },
                        rule: RuleId::Nom2,
                        entry_ids: vec![wid, nid],
                    });
                }
            }
        }

        for sid in scan_ids(lex, Tag::Nl, &left) {
            let nl = lex.entry(sid).as_nl().unwrap();

            // [nl, ng]
            for gid in scan_ids(lex, Tag::Ng, &right) {
                let ng = lex.entry(gid).as_ng().unwrap();
                if nl.gender_types.contains(&ng.gender_type) {
                    out.insert(Analysis {
                        bundle: FeatureBundle {
                            lemma: nl.lemma.clone(),
                            category: nl.category,
                            features: WordFeatures::Nominal {
                                gender: Unifiable::Bound(ng.gender),
                                number: Unifiable::Bound(ng.number),
                            },
                        },
                        rule: RuleId::Nom1,
                        entry_ids: vec![sid, gid],
                    });
                }
            }

            // [nl, nn] restricted to plu2 on both sides
            for nid in scan_ids(lex, Tag::Nn, &right) {
                let nn = lex.entry(nid).as_nn().unwrap();
                if nn.number_type == morph_core::lexicon::NumberType::Plu2
                    && nl.number_types.contains(&morph_core::lexicon::NumberType::Plu2)
                {
                    out.insert(Analysis {
                        bundle: FeatureBundle {
                            lemma: nl.lemma.clone(),
                            category: nl.category,
                            features: WordFeatures::Nominal {
                                gender: nl.gender,
                                number: Unifiable::Bound(nn.number),
                            },
                        },
                        rule: RuleId::Nom3,
                        entry_ids: vec![sid, nid],
                    });
                }
            }

            // [nl, ng, nn]: the gender rule output always takes plu1
            for j in (i + 1)..n {
                let mid = text(i, j);
                let tail = text(j, n);
                for gid in scan_ids(lex, Tag::Ng, &mid) {
                    let ng = lex.entry(gid).as_ng().unwrap();
                    if !nl.gender_types.contains(&ng.gender_type) {
                        continue;
                    }
                    for nid in scan_ids(lex, Tag::Nn, &tail) {
                        let nn = lex.entry(nid).as_nn().unwrap();
                        if nn.number_type != morph_core::lexicon::NumberType::Plu1 {
                            continue;
                        }
                        out.insert(Analysis {
                            bundle: FeatureBundle {
                                lemma: nl.lemma.clone(),
                                category: nl.category,
                                features: WordFeatures::Nominal {
                                    gender: Unifiable::Bound(ng.gender),
                                    number: Unifiable::Bound(nn.number),
                                },
                            },
                            rule: RuleId::Nom1Then2,
                            entry_ids: vec![sid, gid, nid],
                        });
                    }
                }
            }
        }
    }

    out
}

/// All surfaces a query generates, empty when the lemma is unknown.
pub fn surfaces_for(lex: &Lexicon, q: GenQuery) -> BTreeSet<String> {
    morph_core::engine::generate(lex, &q)
        .map(|forms| forms.into_iter().map(|f| f.surface).collect())
        .unwrap_or_default()
}

pub fn entry_line(entry: &LexEntry) -> String {
    morph_core::lexicon::render_entry(entry)
}
