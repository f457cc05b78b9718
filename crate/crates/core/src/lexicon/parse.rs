//! Line parser and renderer for the lexicon file format.
//!
//! One entry per line: `tag<TAB>field<TAB>...<TAB>surface`. `#` starts a
//! comment line, `_` is an unbound value, `NULL` an empty surface (legal for
//! `vm` endings only), multi-value fields are comma separated without spaces.
//! Code 0 is spelled `00`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::{
    Category, Finiteness, FullWordEntry, Gender, GenderSuffixEntry, GenderType, LexEntry,
    NominalStemEntry, Number, NumberSuffixEntry, NumberType, NumberableWordEntry, SuffixType,
    Tag, Unifiable, VerbEndingEntry, VerbStemEntry, WordFeatures,
};
use crate::featcodes::{encode_features, FinVerbFeatures, PersonNumber, StemTypeCode, TenseMood};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownTag(String),
    FieldCount { expected: usize, got: usize },
    UnknownValue { what: &'static str, atom: String },
    UnknownCode(i64),
    BadInteger(String),
    EmptyList(&'static str),
    EmptySurface,
    InvalidFeatureCombination(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnknownTag(t) => write!(f, "unknown category tag `{t}`"),
            ParseErrorKind::FieldCount { expected, got } => {
                write!(f, "expected {expected} fields, found {got}")
            }
            ParseErrorKind::UnknownValue { what, atom } => {
                write!(f, "`{atom}` is not a valid {what}")
            }
            ParseErrorKind::UnknownCode(c) => write!(f, "unknown stem-type code {c}"),
            ParseErrorKind::BadInteger(s) => write!(f, "`{s}` is not an integer"),
            ParseErrorKind::EmptyList(what) => write!(f, "{what} list must not be empty"),
            ParseErrorKind::EmptySurface => {
                write!(f, "empty surface (NULL) is only legal for vm entries")
            }
            ParseErrorKind::InvalidFeatureCombination(s) => {
                write!(f, "invalid feature combination: {s}")
            }
        }
    }
}

/// Parse failure inside one line; `column` is the 1-based field position
/// (the category tag is column 1).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct EntryParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

fn err(column: usize, kind: ParseErrorKind) -> EntryParseError {
    EntryParseError { column, kind }
}

struct Fields<'a> {
    fields: Vec<&'a str>,
}

impl<'a> Fields<'a> {
    /// `n` counts the fields after the tag.
    fn expect(line: &'a str, n: usize) -> Result<Fields<'a>, EntryParseError> {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != n + 1 {
            return Err(err(
                1,
                ParseErrorKind::FieldCount {
                    expected: n + 1,
                    got: fields.len(),
                },
            ));
        }
        Ok(Fields { fields })
    }

    fn get(&self, i: usize) -> (&'a str, usize) {
        // i is 0-based after the tag; columns are 1-based including the tag.
        (self.fields[i + 1], i + 2)
    }
}

fn parse_atom<T>(
    field: (&str, usize),
    what: &'static str,
    from_atom: impl Fn(&str) -> Option<T>,
) -> Result<T, EntryParseError> {
    let (s, col) = field;
    from_atom(s).ok_or_else(|| {
        err(
            col,
            ParseErrorKind::UnknownValue {
                what,
                atom: s.to_string(),
            },
        )
    })
}

fn parse_set<T: Ord>(
    field: (&str, usize),
    what: &'static str,
    from_atom: impl Fn(&str) -> Option<T>,
) -> Result<BTreeSet<T>, EntryParseError> {
    let (s, col) = field;
    if s.is_empty() {
        return Err(err(col, ParseErrorKind::EmptyList(what)));
    }
    s.split(',')
        .map(|atom| {
            from_atom(atom).ok_or_else(|| {
                err(
                    col,
                    ParseErrorKind::UnknownValue {
                        what,
                        atom: atom.to_string(),
                    },
                )
            })
        })
        .collect()
}

fn parse_code(field: (&str, usize)) -> Result<StemTypeCode, EntryParseError> {
    let (s, col) = field;
    let n: i64 = s
        .parse()
        .map_err(|_| err(col, ParseErrorKind::BadInteger(s.to_string())))?;
    StemTypeCode::from_int(n).map_err(|_| err(col, ParseErrorKind::UnknownCode(n)))
}

fn parse_code_set(field: (&str, usize)) -> Result<BTreeSet<StemTypeCode>, EntryParseError> {
    let (s, col) = field;
    if s.is_empty() {
        return Err(err(col, ParseErrorKind::EmptyList("stem_type")));
    }
    s.split(',').map(|item| parse_code((item, col))).collect()
}

fn parse_conj(field: (&str, usize)) -> Result<u8, EntryParseError> {
    let (s, col) = field;
    match s.parse::<u8>() {
        Ok(n @ 1..=3) => Ok(n),
        Ok(_) | Err(_) => Err(err(
            col,
            ParseErrorKind::UnknownValue {
                what: "conjugation",
                atom: s.to_string(),
            },
        )),
    }
}

fn parse_conj_set(field: (&str, usize)) -> Result<BTreeSet<u8>, EntryParseError> {
    let (s, col) = field;
    if s.is_empty() {
        return Err(err(col, ParseErrorKind::EmptyList("conjugation")));
    }
    s.split(',').map(|item| parse_conj((item, col))).collect()
}

fn parse_unifiable<T>(
    field: (&str, usize),
    what: &'static str,
    from_atom: impl Fn(&str) -> Option<T>,
) -> Result<Unifiable<T>, EntryParseError> {
    let (s, _) = field;
    if s == "_" {
        return Ok(Unifiable::Unbound);
    }
    parse_atom(field, what, from_atom).map(Unifiable::Bound)
}

/// Nominal entries (`wl`, `nl`) carry `n` or `adj`, never `v`.
fn parse_nominal_category(field: (&str, usize)) -> Result<Category, EntryParseError> {
    let (s, col) = field;
    match Category::from_atom(s) {
        Some(Category::N) => Ok(Category::N),
        Some(Category::Adj) => Ok(Category::Adj),
        _ => Err(err(
            col,
            ParseErrorKind::UnknownValue {
                what: "nominal category (n or adj)",
                atom: s.to_string(),
            },
        )),
    }
}

/// Surface field: `NULL` means empty, which only `vm` entries may use.
fn parse_surface(field: (&str, usize), allow_empty: bool) -> Result<String, EntryParseError> {
    let (s, col) = field;
    if s == "NULL" || s.is_empty() {
        if allow_empty {
            Ok(String::new())
        } else {
            Err(err(col, ParseErrorKind::EmptySurface))
        }
    } else {
        Ok(s.to_string())
    }
}

/// Parses one non-comment, non-blank line into a typed entry.
pub fn parse_entry(line: &str) -> Result<LexEntry, EntryParseError> {
    let tag_str = line.split('\t').next().unwrap_or("");
    let tag = Tag::from_atom(tag_str)
        .ok_or_else(|| err(1, ParseErrorKind::UnknownTag(tag_str.to_string())))?;

    match tag {
        Tag::W => {
            let f = Fields::expect(line, 5)?;
            let lemma = f.get(0).0.to_string();
            let category = parse_atom(f.get(1), "category", Category::from_atom)?;
            let surface = parse_surface(f.get(4), false)?;
            let features = match category {
                Category::V => {
                    let pn = parse_atom(f.get(2), "person_number", PersonNumber::from_atom)?;
                    let tm = parse_atom(f.get(3), "tense_mood", TenseMood::from_atom)?;
                    let feats = FinVerbFeatures::new(pn, tm);
                    if encode_features(feats).is_err() {
                        return Err(err(
                            4,
                            ParseErrorKind::InvalidFeatureCombination(feats.to_string()),
                        ));
                    }
                    WordFeatures::Verbal(feats)
                }
                Category::N | Category::Adj => WordFeatures::Nominal {
                    gender: parse_unifiable(f.get(2), "gender", Gender::from_atom)?,
                    number: parse_unifiable(f.get(3), "number", Number::from_atom)?,
                },
            };
            Ok(LexEntry::W(FullWordEntry {
                lemma,
                category,
                features,
                surface,
            }))
        }
        Tag::Wl => {
            let f = Fields::expect(line, 6)?;
            Ok(LexEntry::Wl(NumberableWordEntry {
                lemma: f.get(0).0.to_string(),
                category: parse_nominal_category(f.get(1))?,
                number_types: parse_set(f.get(2), "number_type", NumberType::from_atom)?,
                gender: parse_unifiable(f.get(3), "gender", Gender::from_atom)?,
                number: parse_unifiable(f.get(4), "number", Number::from_atom)?,
                surface: parse_surface(f.get(5), false)?,
            }))
        }
        Tag::Vl => {
            let f = Fields::expect(line, 6)?;
            let category = parse_atom(f.get(1), "category", Category::from_atom)?;
            if category != Category::V {
                return Err(err(
                    3,
                    ParseErrorKind::UnknownValue {
                        what: "vl category (must be v)",
                        atom: category.as_str().to_string(),
                    },
                ));
            }
            Ok(LexEntry::Vl(VerbStemEntry {
                lemma: f.get(0).0.to_string(),
                category,
                conjugation: parse_conj(f.get(2))?,
                stem_types: parse_code_set(f.get(3))?,
                suffix_types: parse_set(f.get(4), "suffix_type", SuffixType::from_atom)?,
                surface: parse_surface(f.get(5), false)?,
            }))
        }
        Tag::Nl => {
            let f = Fields::expect(line, 7)?;
            Ok(LexEntry::Nl(NominalStemEntry {
                lemma: f.get(0).0.to_string(),
                category: parse_nominal_category(f.get(1))?,
                gender_types: parse_set(f.get(2), "gender_type", GenderType::from_atom)?,
                number_types: parse_set(f.get(3), "number_type", NumberType::from_atom)?,
                gender: parse_unifiable(f.get(4), "gender", Gender::from_atom)?,
                number: parse_unifiable(f.get(5), "number", Number::from_atom)?,
                surface: parse_surface(f.get(6), false)?,
            }))
        }
        Tag::Vm => {
            let f = Fields::expect(line, 7)?;
            let stem_type = parse_code(f.get(4))?;
            if stem_type.is_wildcard() {
                return Err(err(
                    6,
                    ParseErrorKind::UnknownValue {
                        what: "concrete stem_type",
                        atom: "100".to_string(),
                    },
                ));
            }
            Ok(LexEntry::Vm(VerbEndingEntry {
                person_number: parse_atom(f.get(0), "person_number", PersonNumber::from_atom)?,
                tense_mood: parse_atom(f.get(1), "tense_mood", TenseMood::from_atom)?,
                finiteness: parse_atom(f.get(2), "finiteness", Finiteness::from_atom)?,
                conjugations: parse_conj_set(f.get(3))?,
                stem_type,
                suffix_type: parse_atom(f.get(5), "suffix_type", SuffixType::from_atom)?,
                surface: parse_surface(f.get(6), true)?,
            }))
        }
        Tag::Ng => {
            let f = Fields::expect(line, 4)?;
            let gender_type = parse_atom(f.get(0), "gender_type", GenderType::from_atom)?;
            if gender_type == GenderType::No {
                return Err(err(
                    2,
                    ParseErrorKind::UnknownValue {
                        what: "ng gender_type",
                        atom: "no".to_string(),
                    },
                ));
            }
            Ok(LexEntry::Ng(GenderSuffixEntry {
                gender_type,
                gender: parse_atom(f.get(1), "gender", Gender::from_atom)?,
                number: parse_atom(f.get(2), "number", Number::from_atom)?,
                surface: parse_surface(f.get(3), false)?,
            }))
        }
        Tag::Nn => {
            let f = Fields::expect(line, 3)?;
            let number_type = parse_atom(f.get(0), "number_type", NumberType::from_atom)?;
            if number_type == NumberType::No {
                return Err(err(
                    2,
                    ParseErrorKind::UnknownValue {
                        what: "nn number_type",
                        atom: "no".to_string(),
                    },
                ));
            }
            Ok(LexEntry::Nn(NumberSuffixEntry {
                number_type,
                number: parse_atom(f.get(1), "number", Number::from_atom)?,
                surface: parse_surface(f.get(2), false)?,
            }))
        }
    }
}

fn render_unifiable<T: Copy>(v: Unifiable<T>, as_str: impl Fn(T) -> &'static str) -> String {
    match v {
        Unifiable::Unbound => "_".to_string(),
        Unifiable::Bound(x) => as_str(x).to_string(),
    }
}

fn render_surface(s: &str) -> &str {
    if s.is_empty() {
        "NULL"
    } else {
        s
    }
}

fn join<T: Copy, I: IntoIterator<Item = T>>(items: I, f: impl Fn(T) -> String) -> String {
    items
        .into_iter()
        .map(f)
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders an entry back to its file line. `parse_entry(render_entry(e))`
/// reproduces `e` exactly; multi-value fields come out in canonical sorted
/// order.
pub fn render_entry(entry: &LexEntry) -> String {
    match entry {
        LexEntry::W(e) => {
            let (a, b) = match e.features {
                WordFeatures::Verbal(f) => (
                    f.person_number.as_str().to_string(),
                    f.tense_mood.as_str().to_string(),
                ),
                WordFeatures::Nominal { gender, number } => (
                    render_unifiable(gender, Gender::as_str),
                    render_unifiable(number, Number::as_str),
                ),
            };
            format!(
                "w\t{}\t{}\t{}\t{}\t{}",
                e.lemma,
                e.category,
                a,
                b,
                render_surface(&e.surface)
            )
        }
        LexEntry::Wl(e) => format!(
            "wl\t{}\t{}\t{}\t{}\t{}\t{}",
            e.lemma,
            e.category,
            join(e.number_types.iter().copied(), |t| t.as_str().to_string()),
            render_unifiable(e.gender, Gender::as_str),
            render_unifiable(e.number, Number::as_str),
            render_surface(&e.surface)
        ),
        LexEntry::Vl(e) => format!(
            "vl\t{}\t{}\t{}\t{}\t{}\t{}",
            e.lemma,
            e.category,
            e.conjugation,
            join(e.stem_types.iter().copied(), |c| c.as_file_str()),
            join(e.suffix_types.iter().copied(), |t| t.as_str().to_string()),
            render_surface(&e.surface)
        ),
        LexEntry::Nl(e) => format!(
            "nl\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            e.lemma,
            e.category,
            join(e.gender_types.iter().copied(), |t| t.as_str().to_string()),
            join(e.number_types.iter().copied(), |t| t.as_str().to_string()),
            render_unifiable(e.gender, Gender::as_str),
            render_unifiable(e.number, Number::as_str),
            render_surface(&e.surface)
        ),
        LexEntry::Vm(e) => format!(
            "vm\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            e.person_number,
            e.tense_mood,
            e.finiteness,
            join(e.conjugations.iter().copied(), |c| c.to_string()),
            e.stem_type.as_file_str(),
            e.suffix_type,
            render_surface(&e.surface)
        ),
        LexEntry::Ng(e) => format!(
            "ng\t{}\t{}\t{}\t{}",
            e.gender_type,
            e.gender,
            e.number,
            render_surface(&e.surface)
        ),
        LexEntry::Nn(e) => format!(
            "nn\t{}\t{}\t{}",
            e.number_type,
            e.number,
            render_surface(&e.surface)
        ),
    }
}
