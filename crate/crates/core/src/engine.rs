//! The rule engine: two verb rules and four nominal rules applied over
//! segmentations for analysis, and run generatively from the lexicon for
//! generation. Both directions use the same compatibility checks, so a form
//! analyses if and only if it generates.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::featcodes::{decode_code, FinVerbFeatures, PersonNumber, StemTypeCode, TenseMood};
use crate::lexicon::{
    Category, FullWordEntry, Gender, GenderSuffixEntry, Lexicon, NominalStemEntry, Number,
    NumberSuffixEntry, NumberType, NumberableWordEntry, Tag, Unifiable, VerbEndingEntry,
    VerbStemEntry, WordFeatures,
};
use crate::segment::{segment_all, ShapePattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
}

/// The grammatical output of one reading: everything a syntactic layer gets
/// to see. Contextual features (stem/suffix/gender/number types) never
/// percolate here.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeatureBundle {
    pub lemma: String,
    pub category: Category,
    pub features: WordFeatures,
}

/// Which rule produced an analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    /// Whole-word lexicon hit.
    WDirect,
    /// Verb rule with an explicit stem-type list.
    VerbExplicit,
    /// Verb rule for wildcard (`100`) stems.
    VerbRegular,
    /// Nominal stem + gender suffix, promoted to a word.
    Nom1,
    /// Numberable word + number suffix.
    Nom2,
    /// Nominal stem + plu2 number suffix.
    Nom3,
    /// Numberable word promoted unchanged.
    Nom4,
    /// Gender rule feeding the number rule (three pieces).
    Nom1Then2,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::WDirect => "W_DIRECT",
            RuleId::VerbExplicit => "VERB_EXPLICIT",
            RuleId::VerbRegular => "VERB_REGULAR",
            RuleId::Nom1 => "NOM1",
            RuleId::Nom2 => "NOM2",
            RuleId::Nom3 => "NOM3",
            RuleId::Nom4 => "NOM4",
            RuleId::Nom1Then2 => "NOM1+2",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One reading of a surface word: the feature bundle plus its derivation
/// trace (rule and contributing entry ids).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Analysis {
    pub bundle: FeatureBundle,
    pub rule: RuleId,
    pub entry_ids: Vec<usize>,
}

/// Generation request. Only the lemma is required; absent fields match
/// anything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenQuery {
    pub lemma: String,
    pub category: Option<Category>,
    pub person_number: Option<PersonNumber>,
    pub tense_mood: Option<TenseMood>,
    pub gender: Option<Gender>,
    pub number: Option<Number>,
}

impl GenQuery {
    pub fn lemma(lemma: impl Into<String>) -> Self {
        GenQuery {
            lemma: lemma.into(),
            ..GenQuery::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratedForm {
    pub surface: String,
    pub bundle: FeatureBundle,
}

/// Checks that a stem and an ending may concatenate: shared conjugation,
/// an ending series the stem accepts, and either a wildcard stem or an
/// ending slot the stem lists.
pub fn verb_compatible(stem: &VerbStemEntry, ending: &VerbEndingEntry) -> bool {
    verb_rule(stem, ending).is_some()
}

fn stem_is_wildcard(stem: &VerbStemEntry) -> bool {
    stem.stem_types.len() == 1 && stem.stem_types.contains(&StemTypeCode::WILDCARD)
}

fn verb_rule(stem: &VerbStemEntry, ending: &VerbEndingEntry) -> Option<RuleId> {
    if !ending.conjugations.contains(&stem.conjugation)
        || !stem.suffix_types.contains(&ending.suffix_type)
    {
        return None;
    }
    if stem_is_wildcard(stem) {
        Some(RuleId::VerbRegular)
    } else if stem.stem_types.contains(&ending.stem_type) {
        Some(RuleId::VerbExplicit)
    } else {
        None
    }
}

/// Gender rule: stem + gender suffix gives a numberable word that takes the
/// plain plural (plu1). Gender and number come from the suffix.
pub fn nominal_rule1(
    stem: &NominalStemEntry,
    g: &GenderSuffixEntry,
) -> Option<NumberableWordEntry> {
    if !stem.gender_types.contains(&g.gender_type) {
        return None;
    }
    Some(NumberableWordEntry {
        lemma: stem.lemma.clone(),
        category: stem.category,
        number_types: [NumberType::Plu1].into_iter().collect(),
        gender: Unifiable::Bound(g.gender),
        number: Unifiable::Bound(g.number),
        surface: format!("{}{}", stem.surface, g.surface),
    })
}

/// Number rule: numberable word + number suffix. The word's own number is
/// ignored; the suffix decides.
pub fn nominal_rule2(
    word: &NumberableWordEntry,
    n: &NumberSuffixEntry,
) -> Option<FullWordEntry> {
    if !word.number_types.contains(&n.number_type) {
        return None;
    }
    Some(FullWordEntry {
        lemma: word.lemma.clone(),
        category: word.category,
        features: WordFeatures::Nominal {
            gender: word.gender,
            number: Unifiable::Bound(n.number),
        },
        surface: format!("{}{}", word.surface, n.surface),
    })
}

/// Allomorph-plural rule: stem + plu2 suffix directly forms a word (leon-es,
/// luc-es). Gender comes from the stem itself. Restricted to plu2.
pub fn nominal_rule3(stem: &NominalStemEntry, n: &NumberSuffixEntry) -> Option<FullWordEntry> {
    if n.number_type != NumberType::Plu2 || !stem.number_types.contains(&NumberType::Plu2) {
        return None;
    }
    Some(FullWordEntry {
        lemma: stem.lemma.clone(),
        category: stem.category,
        features: WordFeatures::Nominal {
            gender: stem.gender,
            number: Unifiable::Bound(n.number),
        },
        surface: format!("{}{}", stem.surface, n.surface),
    })
}

/// Promotion rule: a numberable word is a word as it stands.
pub fn nominal_rule4(word: &NumberableWordEntry) -> FullWordEntry {
    FullWordEntry {
        lemma: word.lemma.clone(),
        category: word.category,
        features: WordFeatures::Nominal {
            gender: word.gender,
            number: word.number,
        },
        surface: word.surface.clone(),
    }
}

fn bundle_of_word(e: &FullWordEntry) -> FeatureBundle {
    FeatureBundle {
        lemma: e.lemma.clone(),
        category: e.category,
        features: e.features,
    }
}

fn bundle_of_verb(stem: &VerbStemEntry, ending: &VerbEndingEntry) -> FeatureBundle {
    FeatureBundle {
        lemma: stem.lemma.clone(),
        category: stem.category,
        features: WordFeatures::Verbal(FinVerbFeatures::new(
            ending.person_number,
            ending.tense_mood,
        )),
    }
}

/// Analyses a surface word into every reading the lexicon and rules license.
/// An empty result means the word is not recognised (which is also how
/// paradigm gaps surface).
pub fn analyze(lex: &Lexicon, word: &str) -> Vec<Analysis> {
    let mut out: Vec<Analysis> = Vec::new();
    let mut push = |a: Analysis| {
        if !out.contains(&a) {
            out.push(a);
        }
    };

    for seg in segment_all(lex, word) {
        match seg.pattern {
            ShapePattern::W => {
                for &id in &seg.pieces[0].entry_ids {
                    let e = lex.entry(id).as_w().expect("w trie holds w entries");
                    push(Analysis {
                        bundle: bundle_of_word(e),
                        rule: RuleId::WDirect,
                        entry_ids: vec![id],
                    });
                }
            }
            ShapePattern::VlVm => {
                for &sid in &seg.pieces[0].entry_ids {
                    let stem = lex.entry(sid).as_vl().expect("vl trie holds vl entries");
                    for &eid in &seg.pieces[1].entry_ids {
                        let ending = lex.entry(eid).as_vm().expect("vm trie holds vm entries");
                        if let Some(rule) = verb_rule(stem, ending) {
                            push(Analysis {
                                bundle: bundle_of_verb(stem, ending),
                                rule,
                                entry_ids: vec![sid, eid],
                            });
                        }
                    }
                }
            }
            ShapePattern::Wl => {
                for &id in &seg.pieces[0].entry_ids {
                    let word = lex.entry(id).as_wl().expect("wl trie holds wl entries");
                    push(Analysis {
                        bundle: bundle_of_word(&nominal_rule4(word)),
                        rule: RuleId::Nom4,
                        entry_ids: vec![id],
                    });
                }
            }
            ShapePattern::WlNn => {
                for &wid in &seg.pieces[0].entry_ids {
                    let word = lex.entry(wid).as_wl().expect("wl trie holds wl entries");
                    for &nid in &seg.pieces[1].entry_ids {
                        let n = lex.entry(nid).as_nn().expect("nn trie holds nn entries");
                        if let Some(w) = nominal_rule2(word, n) {
                            push(Analysis {
                                bundle: bundle_of_word(&w),
                                rule: RuleId::Nom2,
                                entry_ids: vec![wid, nid],
                            });
                        }
                    }
                }
            }
            ShapePattern::NlNg => {
                for &sid in &seg.pieces[0].entry_ids {
                    let stem = lex.entry(sid).as_nl().expect("nl trie holds nl entries");
                    for &gid in &seg.pieces[1].entry_ids {
                        let g = lex.entry(gid).as_ng().expect("ng trie holds ng entries");
                        if let Some(wl) = nominal_rule1(stem, g) {
                            push(Analysis {
                                bundle: bundle_of_word(&nominal_rule4(&wl)),
                                rule: RuleId::Nom1,
                                entry_ids: vec![sid, gid],
                            });
                        }
                    }
                }
            }
            ShapePattern::NlNgNn => {
                for &sid in &seg.pieces[0].entry_ids {
                    let stem = lex.entry(sid).as_nl().expect("nl trie holds nl entries");
                    for &gid in &seg.pieces[1].entry_ids {
                        let g = lex.entry(gid).as_ng().expect("ng trie holds ng entries");
                        let Some(wl) = nominal_rule1(stem, g) else {
                            continue;
                        };
                        for &nid in &seg.pieces[2].entry_ids {
                            let n = lex.entry(nid).as_nn().expect("nn trie holds nn entries");
                            if let Some(w) = nominal_rule2(&wl, n) {
                                push(Analysis {
                                    bundle: bundle_of_word(&w),
                                    rule: RuleId::Nom1Then2,
                                    entry_ids: vec![sid, gid, nid],
                                });
                            }
                        }
                    }
                }
            }
            ShapePattern::NlNn => {
                for &sid in &seg.pieces[0].entry_ids {
                    let stem = lex.entry(sid).as_nl().expect("nl trie holds nl entries");
                    for &nid in &seg.pieces[1].entry_ids {
                        let n = lex.entry(nid).as_nn().expect("nn trie holds nn entries");
                        if let Some(w) = nominal_rule3(stem, n) {
                            push(Analysis {
                                bundle: bundle_of_word(&w),
                                rule: RuleId::Nom3,
                                entry_ids: vec![sid, nid],
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

fn unify_with_query<T: Copy + Eq>(v: Unifiable<T>, q: Option<T>) -> Option<Unifiable<T>> {
    match q {
        None => Some(v),
        Some(qv) => v.unify(Unifiable::Bound(qv)),
    }
}

/// Filters a candidate bundle against the query. Unbound lexicon values
/// unify with a concrete query value and the result reports the query's
/// value.
fn refine(bundle: FeatureBundle, q: &GenQuery) -> Option<FeatureBundle> {
    if let Some(cat) = q.category {
        if bundle.category != cat {
            return None;
        }
    }
    match bundle.features {
        WordFeatures::Verbal(f) => {
            if q.gender.is_some() || q.number.is_some() {
                return None;
            }
            if q.person_number.is_some_and(|pn| pn != f.person_number) {
                return None;
            }
            if q.tense_mood.is_some_and(|tm| tm != f.tense_mood) {
                return None;
            }
            Some(bundle)
        }
        WordFeatures::Nominal { gender, number } => {
            if q.person_number.is_some() || q.tense_mood.is_some() {
                return None;
            }
            let gender = unify_with_query(gender, q.gender)?;
            let number = unify_with_query(number, q.number)?;
            Some(FeatureBundle {
                features: WordFeatures::Nominal { gender, number },
                ..bundle
            })
        }
    }
}

/// Runs the rules generatively: every surface the lemma's entries can build,
/// filtered by the query. The result is a set; duplicate derivations of the
/// same (surface, bundle) collapse.
pub fn generate(lex: &Lexicon, q: &GenQuery) -> Result<BTreeSet<GeneratedForm>, EngineError> {
    let refs = lex
        .lemma_refs(&q.lemma)
        .ok_or_else(|| EngineError::UnknownLemma(q.lemma.clone()))?;

    let mut out = BTreeSet::new();
    let mut add = |surface: &str, bundle: FeatureBundle| {
        if let Some(bundle) = refine(bundle, q) {
            out.insert(GeneratedForm {
                surface: surface.to_string(),
                bundle,
            });
        }
    };

    for &id in &refs.w {
        let e = lex.entry(id).as_w().expect("w ref");
        add(&e.surface, bundle_of_word(e));
    }

    for &sid in &refs.vl {
        let stem = lex.entry(sid).as_vl().expect("vl ref");
        for &eid in lex.ids_of_tag(Tag::Vm) {
            let ending = lex.entry(eid).as_vm().expect("vm id");
            if verb_rule(stem, ending).is_some() {
                let surface = format!("{}{}", stem.surface, ending.surface);
                add(&surface, bundle_of_verb(stem, ending));
            }
        }
    }

    for &wid in &refs.wl {
        let word = lex.entry(wid).as_wl().expect("wl ref");
        let promoted = nominal_rule4(word);
        add(&promoted.surface, bundle_of_word(&promoted));
        for &nid in lex.ids_of_tag(Tag::Nn) {
            let n = lex.entry(nid).as_nn().expect("nn id");
            if let Some(w) = nominal_rule2(word, n) {
                add(&w.surface, bundle_of_word(&w));
            }
        }
    }

    for &sid in &refs.nl {
        let stem = lex.entry(sid).as_nl().expect("nl ref");
        for &gid in lex.ids_of_tag(Tag::Ng) {
            let g = lex.entry(gid).as_ng().expect("ng id");
            let Some(wl) = nominal_rule1(stem, g) else {
                continue;
            };
            let promoted = nominal_rule4(&wl);
            add(&promoted.surface, bundle_of_word(&promoted));
            for &nid in lex.ids_of_tag(Tag::Nn) {
                let n = lex.entry(nid).as_nn().expect("nn id");
                if let Some(w) = nominal_rule2(&wl, n) {
                    add(&w.surface, bundle_of_word(&w));
                }
            }
        }
        for &nid in lex.ids_of_tag(Tag::Nn) {
            let n = lex.entry(nid).as_nn().expect("nn id");
            if let Some(w) = nominal_rule3(stem, n) {
                add(&w.surface, bundle_of_word(&w));
            }
        }
    }

    Ok(out)
}

/// One verb paradigm row: a concrete slot and every surface realising it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParadigmRow {
    pub code: StemTypeCode,
    pub features: FinVerbFeatures,
    pub surfaces: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NominalCell {
    pub gender: Gender,
    pub number: Number,
    pub surfaces: BTreeSet<String>,
}

/// Full inflection table of one lemma. Verb rows follow conjugation-table
/// order with gaps preserved as empty sets; nominals get the four
/// gender/number cells (unbound values count for both sides).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paradigm {
    pub verb: Option<Vec<ParadigmRow>>,
    pub nominal: Option<Vec<NominalCell>>,
}

pub fn generate_paradigm(lex: &Lexicon, lemma: &str) -> Result<Paradigm, EngineError> {
    let forms = generate(lex, &GenQuery::lemma(lemma))?;

    let mut any_verbal = false;
    let mut any_nominal = false;
    if let Some(refs) = lex.lemma_refs(lemma) {
        any_verbal = !refs.vl.is_empty();
        any_nominal = !refs.wl.is_empty() || !refs.nl.is_empty();
        for &id in &refs.w {
            match lex.entry(id).as_w().expect("w ref").features {
                WordFeatures::Verbal(_) => any_verbal = true,
                WordFeatures::Nominal { .. } => any_nominal = true,
            }
        }
    }

    let verb = any_verbal.then(|| {
        crate::featcodes::all_codes()
            .map(|code| {
                let features = decode_code(code).expect("concrete code");
                let surfaces = forms
                    .iter()
                    .filter(|f| f.bundle.features == WordFeatures::Verbal(features))
                    .map(|f| f.surface.clone())
                    .collect();
                ParadigmRow {
                    code,
                    features,
                    surfaces,
                }
            })
            .collect()
    });

    let nominal = any_nominal.then(|| {
        [
            (Gender::Masc, Number::Sing),
            (Gender::Masc, Number::Plu),
            (Gender::Fem, Number::Sing),
            (Gender::Fem, Number::Plu),
        ]
        .into_iter()
        .map(|(gender, number)| {
            let surfaces = forms
                .iter()
                .filter(|f| match f.bundle.features {
                    WordFeatures::Nominal { gender: g, number: n } => {
                        g.unify(Unifiable::Bound(gender)).is_some()
                            && n.unify(Unifiable::Bound(number)).is_some()
                    }
                    WordFeatures::Verbal(_) => false,
                })
                .map(|f| f.surface.clone())
                .collect();
            NominalCell {
                gender,
                number,
                surfaces,
            }
        })
        .collect()
    });

    Ok(Paradigm { verb, nominal })
}

/// Analyses a batch of independent words, in input order. With the
/// `parallel` feature the work is spread across threads.
#[cfg(feature = "parallel")]
pub fn analyze_batch<S: AsRef<str> + Sync>(lex: &Lexicon, words: &[S]) -> Vec<Vec<Analysis>> {
    use rayon::prelude::*;
    words
        .par_iter()
        .map(|w| analyze(lex, w.as_ref()))
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub fn analyze_batch<S: AsRef<str> + Sync>(lex: &Lexicon, words: &[S]) -> Vec<Vec<Analysis>> {
    analyze_batch_seq(lex, words)
}

/// Sequential batch analysis, kept callable under every feature set so the
/// two paths can be compared.
pub fn analyze_batch_seq<S: AsRef<str> + Sync>(lex: &Lexicon, words: &[S]) -> Vec<Vec<Analysis>> {
    words.iter().map(|w| analyze(lex, w.as_ref())).collect()
}
