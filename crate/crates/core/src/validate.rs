//! Lexicon consistency checks. The validator only reports; it never rejects
//! a loaded lexicon.

use std::collections::BTreeSet;
use std::fmt;

use crate::engine::{generate, GenQuery};
use crate::featcodes::{
    decode_code, expand_stem_types, FinVerbFeatures, PersonNumber, StemTypeCode, TenseMood,
};
use crate::lexicon::{Lexicon, Tag, WordFeatures};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    /// A `vm` entry whose stem-type code decodes to different features than
    /// the entry declares.
    FeatureCodeMismatch {
        entry_id: usize,
        declared: FinVerbFeatures,
        decoded: FinVerbFeatures,
    },
    /// Courtesy-imperative surfaces differ from their pres_subj twins.
    CourtesyMismatch {
        lemma: String,
        code: StemTypeCode,
        twin: StemTypeCode,
        surfaces: BTreeSet<String>,
        twin_surfaces: BTreeSet<String>,
    },
    /// A stem lists a slot code no compatible ending can realise.
    DeadStemCode {
        entry_id: usize,
        lemma: String,
        code: StemTypeCode,
    },
    /// A stem mixes the wildcard 100 with concrete codes.
    MixedWildcard { entry_id: usize, lemma: String },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::FeatureCodeMismatch {
                entry_id,
                declared,
                decoded,
            } => write!(
                f,
                "vm entry #{entry_id}: declares {declared} but its code decodes to {decoded}"
            ),
            Finding::CourtesyMismatch {
                lemma,
                code,
                twin,
                surfaces,
                twin_surfaces,
            } => write!(
                f,
                "{lemma}: courtesy code {code} yields {surfaces:?} but twin {twin} yields {twin_surfaces:?}"
            ),
            Finding::DeadStemCode {
                entry_id,
                lemma,
                code,
            } => write!(
                f,
                "vl entry #{entry_id} ({lemma}): no compatible vm ending realises code {code}"
            ),
            Finding::MixedWildcard { entry_id, lemma } => write!(
                f,
                "vl entry #{entry_id} ({lemma}): wildcard 100 mixed with concrete codes"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.findings.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            writeln!(f, "lexicon is consistent")
        } else {
            for finding in &self.findings {
                writeln!(f, "{finding}")?;
            }
            Ok(())
        }
    }
}

pub fn validate_lexicon(lex: &Lexicon) -> ValidationReport {
    let mut findings = Vec::new();

    // (a) vm feature/code agreement.
    for &id in lex.ids_of_tag(Tag::Vm) {
        let vm = lex.entry(id).as_vm().expect("vm id");
        let declared = FinVerbFeatures::new(vm.person_number, vm.tense_mood);
        let decoded = decode_code(vm.stem_type).expect("loaded vm codes are concrete");
        if declared != decoded {
            findings.push(Finding::FeatureCodeMismatch {
                entry_id: id,
                declared,
                decoded,
            });
        }
    }

    // (d) mixed wildcard sets, and (c) dead codes on each stem entry.
    for &id in lex.ids_of_tag(Tag::Vl) {
        let stem = lex.entry(id).as_vl().expect("vl id");
        let has_wildcard = stem.stem_types.contains(&StemTypeCode::WILDCARD);
        if has_wildcard && stem.stem_types.len() > 1 {
            findings.push(Finding::MixedWildcard {
                entry_id: id,
                lemma: stem.lemma.clone(),
            });
        }
        let codes: BTreeSet<StemTypeCode> = if has_wildcard && stem.stem_types.len() == 1 {
            expand_stem_types(&stem.stem_types).expect("singleton wildcard expands")
        } else {
            stem.stem_types
                .iter()
                .copied()
                .filter(|c| !c.is_wildcard())
                .collect()
        };
        for code in codes {
            let realised = lex.ids_of_tag(Tag::Vm).iter().any(|&vid| {
                let vm = lex.entry(vid).as_vm().expect("vm id");
                vm.stem_type == code
                    && vm.conjugations.contains(&stem.conjugation)
                    && stem.suffix_types.contains(&vm.suffix_type)
            });
            if !realised {
                findings.push(Finding::DeadStemCode {
                    entry_id: id,
                    lemma: stem.lemma.clone(),
                    code,
                });
            }
        }
    }

    // (b) courtesy imperatives must share surfaces with their pres_subj
    // twins. Verbs without courtesy forms (defectives, impersonals) are not
    // flagged; the check fires only where courtesy surfaces exist.
    let twins = [
        (
            FinVerbFeatures::new(PersonNumber::Sing3, TenseMood::Imper),
            FinVerbFeatures::new(PersonNumber::Sing3, TenseMood::PresSubj),
        ),
        (
            FinVerbFeatures::new(PersonNumber::Plu3, TenseMood::Imper),
            FinVerbFeatures::new(PersonNumber::Plu3, TenseMood::PresSubj),
        ),
    ];
    let lemmas: Vec<String> = lex.lemmas().map(|s| s.to_string()).collect();
    for lemma in lemmas {
        let Ok(forms) = generate(lex, &GenQuery::lemma(&lemma)) else {
            continue;
        };
        let surfaces_of = |f: FinVerbFeatures| -> BTreeSet<String> {
            forms
                .iter()
                .filter(|form| form.bundle.features == WordFeatures::Verbal(f))
                .map(|form| form.surface.clone())
                .collect()
        };
        for (courtesy, twin) in twins {
            let surfaces = surfaces_of(courtesy);
            if surfaces.is_empty() {
                continue;
            }
            let twin_surfaces = surfaces_of(twin);
            if surfaces != twin_surfaces {
                findings.push(Finding::CourtesyMismatch {
                    lemma: lemma.clone(),
                    code: crate::featcodes::encode_features(courtesy).expect("imper code"),
                    twin: crate::featcodes::encode_features(twin).expect("subj code"),
                    surfaces,
                    twin_surfaces,
                });
            }
        }
    }

    ValidationReport { findings }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;

    #[test]
    fn reports_feature_code_mismatch() {
        let lex = Lexicon::from_str("vm\tsing_1\tpart\tnofin\t2,3\t99\treg\tido\n").unwrap();
        let report = validate_lexicon(&lex);
        assert_eq!(report.findings.len(), 1);
        assert!(matches!(
            report.findings[0],
            Finding::FeatureCodeMismatch { .. }
        ));
    }

    #[test]
    fn reports_dead_codes() {
        // Stem lists 13 and 82 but only 13 has a compatible ending.
        let lex = Lexicon::from_str(
            "\
vl\tsalir\tv\t3\t13,82\treg\tsal
vm\tsing_3\tpres_ind\tfin\t2,3\t13\treg\te
",
        )
        .unwrap();
        let report = validate_lexicon(&lex);
        assert_eq!(report.findings.len(), 1);
        assert!(matches!(
            &report.findings[0],
            Finding::DeadStemCode { code, .. } if code.value() == 82
        ));
    }

    #[test]
    fn reports_mixed_wildcard() {
        let lex = Lexicon::from_str(
            "\
vl\tamar\tv\t1\t100,11\treg\tam
vm\tsing_1\tpres_ind\tfin\t1,2,3\t11\treg\to
",
        )
        .unwrap();
        let report = validate_lexicon(&lex);
        assert!(report
            .findings
            .iter()
            .any(|f| matches!(f, Finding::MixedWildcard { .. })));
    }

    #[test]
    fn reports_courtesy_mismatch() {
        // 83 yields "salga" but 53 yields nothing: inconsistent courtesy.
        let lex = Lexicon::from_str(
            "\
vl\tsalir\tv\t3\t83\treg\tsalg
vm\tsing_3\timper\tfin\t2,3\t83\treg\ta
",
        )
        .unwrap();
        let report = validate_lexicon(&lex);
        assert!(report
            .findings
            .iter()
            .any(|f| matches!(f, Finding::CourtesyMismatch { .. })));
    }

    #[test]
    fn consistent_block_is_clean() {
        let lex = Lexicon::from_str(
            "\
vl\tsalir\tv\t3\t53,83\treg\tsalg
vm\tsing_3\tpres_subj\tfin\t2,3\t53\treg\ta
vm\tsing_3\timper\tfin\t2,3\t83\treg\ta
",
        )
        .unwrap();
        let report = validate_lexicon(&lex);
        assert!(report.is_empty(), "unexpected findings: {report}");
    }
}
