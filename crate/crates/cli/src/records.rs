//! Output records and their JSON / TSV renderings.
//!
//! JSON output is one object per line and deserialises back to the same
//! records. TSV uses a fixed column order: word, lemma, category, pn/gender,
//! tm/number, rule. Nominal readings put gender and number in the pn and tm
//! columns; `_` marks an unbound value and `-` an inapplicable column.

use serde::{Deserialize, Serialize};

use morph_core::engine::{Analysis, GeneratedForm};
use morph_core::lexicon::{Unifiable, WordFeatures};

/// One reading in serialisable form. Verbal readings carry person/number and
/// tense/mood; nominal ones carry gender and number, spelling unbound values
/// as `_`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingRecord {
    pub lemma: String,
    pub category: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub person_number: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tense_mood: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gender: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub number: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeRecord {
    pub word: String,
    pub analyses: Vec<ReadingRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerateRecord {
    pub surface: String,
    #[serde(flatten)]
    pub reading: ReadingRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentRecord {
    pub word: String,
    pub pattern: String,
    pub pieces: Vec<String>,
}

fn unifiable_str<T: Copy>(v: Unifiable<T>, as_str: impl Fn(T) -> &'static str) -> String {
    match v {
        Unifiable::Unbound => "_".to_string(),
        Unifiable::Bound(x) => as_str(x).to_string(),
    }
}

fn features_fields(
    features: &WordFeatures,
) -> (Option<String>, Option<String>, Option<String>, Option<String>) {
    match features {
        WordFeatures::Verbal(f) => (
            Some(f.person_number.as_str().to_string()),
            Some(f.tense_mood.as_str().to_string()),
            None,
            None,
        ),
        WordFeatures::Nominal { gender, number } => (
            None,
            None,
            Some(unifiable_str(*gender, morph_core::lexicon::Gender::as_str)),
            Some(unifiable_str(*number, morph_core::lexicon::Number::as_str)),
        ),
    }
}

impl ReadingRecord {
    pub fn from_analysis(a: &Analysis) -> Self {
        let (person_number, tense_mood, gender, number) = features_fields(&a.bundle.features);
        ReadingRecord {
            lemma: a.bundle.lemma.clone(),
            category: a.bundle.category.as_str().to_string(),
            person_number,
            tense_mood,
            gender,
            number,
            rule: Some(a.rule.as_str().to_string()),
        }
    }

    pub fn from_form(f: &GeneratedForm) -> Self {
        let (person_number, tense_mood, gender, number) = features_fields(&f.bundle.features);
        ReadingRecord {
            lemma: f.bundle.lemma.clone(),
            category: f.bundle.category.as_str().to_string(),
            person_number,
            tense_mood,
            gender,
            number,
            rule: None,
        }
    }

    /// The four shared TSV columns plus the rule column.
    fn tsv_tail(&self) -> String {
        let col = |v: &Option<String>, alt: &Option<String>| -> String {
            v.clone()
                .or_else(|| alt.clone())
                .unwrap_or_else(|| "-".to_string())
        };
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.lemma,
            self.category,
            col(&self.person_number, &self.gender),
            col(&self.tense_mood, &self.number),
            self.rule.clone().unwrap_or_else(|| "-".to_string())
        )
    }
}

impl AnalyzeRecord {
    pub fn new(word: &str, analyses: &[Analysis]) -> Self {
        AnalyzeRecord {
            word: word.to_string(),
            analyses: analyses.iter().map(ReadingRecord::from_analysis).collect(),
        }
    }

    pub fn to_tsv(&self) -> String {
        if self.analyses.is_empty() {
            return format!("{}\t-\t-\t-\t-\t-", self.word);
        }
        self.analyses
            .iter()
            .map(|r| format!("{}\t{}", self.word, r.tsv_tail()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl GenerateRecord {
    pub fn new(form: &GeneratedForm) -> Self {
        GenerateRecord {
            surface: form.surface.clone(),
            reading: ReadingRecord::from_form(form),
        }
    }

    pub fn to_tsv(&self) -> String {
        format!("{}\t{}", self.surface, self.reading.tsv_tail())
    }
}

impl SegmentRecord {
    pub fn to_tsv(&self) -> String {
        format!("{}\t{}\t{}", self.word, self.pattern, self.pieces.join("|"))
    }
}
