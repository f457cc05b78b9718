//! The allomorph lexicon: seven entry categories, the line-oriented file
//! format, and per-category surface tries.
//!
//! Every piece of a word form is a lexicon entry. Stems and suffix morphemes
//! carry contextual features (stem type, suffix type, conjugation, gender
//! type, number type) that the rule engine checks by set membership; whole
//! irregular forms are stored as `w` entries and need no rule at all.

mod parse;
mod trie;

pub use parse::{parse_entry, render_entry, EntryParseError, ParseErrorKind};
pub use trie::{NodeId, SurfaceTrie};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Read;

use thiserror::Error;

use crate::featcodes::{FinVerbFeatures, StemTypeCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    V,
    N,
    Adj,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::V => "v",
            Category::N => "n",
            Category::Adj => "adj",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "v" => Category::V,
            "n" => Category::N,
            "adj" => Category::Adj,
            _ => return None,
        })
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gender {
    Masc,
    Fem,
}

impl Gender {
    pub fn as_str(self) -> &'static str {
        match self {
            Gender::Masc => "masc",
            Gender::Fem => "fem",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "masc" => Gender::Masc,
            "fem" => Gender::Fem,
            _ => return None,
        })
    }
}

impl fmt::Display for Gender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Number {
    Sing,
    Plu,
}

impl Number {
    pub fn as_str(self) -> &'static str {
        match self {
            Number::Sing => "sing",
            Number::Plu => "plu",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "sing" => Number::Sing,
            "plu" => Number::Plu,
            _ => return None,
        })
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Gender-suffix selector. `No` appears only in nominal-stem selector lists,
/// where it blocks gender suffixation outright; no `ng` entry carries it.
/// The file format spells the `Fem` selector and the `fem` gender value the
/// same way and tells them apart by field position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenderType {
    Mas1,
    Mas2,
    Fem,
    No,
}

impl GenderType {
    pub fn as_str(self) -> &'static str {
        match self {
            GenderType::Mas1 => "mas1",
            GenderType::Mas2 => "mas2",
            GenderType::Fem => "fem",
            GenderType::No => "no",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "mas1" => GenderType::Mas1,
            "mas2" => GenderType::Mas2,
            "fem" => GenderType::Fem,
            "no" => GenderType::No,
            _ => return None,
        })
    }
}

impl fmt::Display for GenderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Number-suffix selector; `No` blocks pluralisation and never appears on an
/// `nn` entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NumberType {
    Plu1,
    Plu2,
    No,
}

impl NumberType {
    pub fn as_str(self) -> &'static str {
        match self {
            NumberType::Plu1 => "plu1",
            NumberType::Plu2 => "plu2",
            NumberType::No => "no",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "plu1" => NumberType::Plu1,
            "plu2" => NumberType::Plu2,
            "no" => NumberType::No,
            _ => return None,
        })
    }
}

impl fmt::Display for NumberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Names one allomorph series of the verbal ending inventory. A stem lists
/// the series it combines with; an ending belongs to exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuffixType {
    Reg,
    Pres,
    Pret1,
    Pret2,
    FutCond,
    ImpSubj,
    Imper,
    Infin,
    Ger,
    Part1,
    Part2,
}

impl SuffixType {
    pub fn as_str(self) -> &'static str {
        match self {
            SuffixType::Reg => "reg",
            SuffixType::Pres => "pres",
            SuffixType::Pret1 => "pret1",
            SuffixType::Pret2 => "pret2",
            SuffixType::FutCond => "fut_cond",
            SuffixType::ImpSubj => "imp_subj",
            SuffixType::Imper => "imper",
            SuffixType::Infin => "infin",
            SuffixType::Ger => "ger",
            SuffixType::Part1 => "part1",
            SuffixType::Part2 => "part2",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "reg" => SuffixType::Reg,
            "pres" => SuffixType::Pres,
            "pret1" => SuffixType::Pret1,
            "pret2" => SuffixType::Pret2,
            "fut_cond" => SuffixType::FutCond,
            "imp_subj" => SuffixType::ImpSubj,
            "imper" => SuffixType::Imper,
            "infin" => SuffixType::Infin,
            "ger" => SuffixType::Ger,
            "part1" => SuffixType::Part1,
            "part2" => SuffixType::Part2,
            _ => return None,
        })
    }
}

impl fmt::Display for SuffixType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Finiteness {
    Fin,
    Nofin,
}

impl Finiteness {
    pub fn as_str(self) -> &'static str {
        match self {
            Finiteness::Fin => "fin",
            Finiteness::Nofin => "nofin",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "fin" => Finiteness::Fin,
            "nofin" => Finiteness::Nofin,
            _ => return None,
        })
    }
}

impl fmt::Display for Finiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value that may be left unbound in the lexicon. Unbound unifies with
/// anything and takes the other side's value; two bound values unify only
/// when equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unifiable<T> {
    Unbound,
    Bound(T),
}

impl<T: Copy + Eq> Unifiable<T> {
    pub fn unify(self, other: Unifiable<T>) -> Option<Unifiable<T>> {
        match (self, other) {
            (Unifiable::Unbound, o) => Some(o),
            (s, Unifiable::Unbound) => Some(s),
            (Unifiable::Bound(a), Unifiable::Bound(b)) => {
                if a == b {
                    Some(Unifiable::Bound(a))
                } else {
                    None
                }
            }
        }
    }

    pub fn bound(self) -> Option<T> {
        match self {
            Unifiable::Bound(v) => Some(v),
            Unifiable::Unbound => None,
        }
    }

    pub fn is_unbound(self) -> bool {
        matches!(self, Unifiable::Unbound)
    }
}

/// The seven entry categories of the lexicon file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    W,
    Wl,
    Vl,
    Nl,
    Vm,
    Ng,
    Nn,
}

impl Tag {
    pub const ALL: [Tag; 7] = [Tag::W, Tag::Wl, Tag::Vl, Tag::Nl, Tag::Vm, Tag::Ng, Tag::Nn];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::W => "w",
            Tag::Wl => "wl",
            Tag::Vl => "vl",
            Tag::Nl => "nl",
            Tag::Vm => "vm",
            Tag::Ng => "ng",
            Tag::Nn => "nn",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "w" => Tag::W,
            "wl" => Tag::Wl,
            "vl" => Tag::Vl,
            "nl" => Tag::Nl,
            "vm" => Tag::Vm,
            "ng" => Tag::Ng,
            "nn" => Tag::Nn,
            _ => return None,
        })
    }

    fn index(self) -> usize {
        match self {
            Tag::W => 0,
            Tag::Wl => 1,
            Tag::Vl => 2,
            Tag::Nl => 3,
            Tag::Vm => 4,
            Tag::Ng => 5,
            Tag::Nn => 6,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verb stem allomorph (`vl`): which paradigm slots it may realise and which
/// ending series it combines with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VerbStemEntry {
    pub lemma: String,
    pub category: Category,
    pub conjugation: u8,
    pub stem_types: BTreeSet<StemTypeCode>,
    pub suffix_types: BTreeSet<SuffixType>,
    pub surface: String,
}

/// Verbal ending allomorph (`vm`). The surface may be empty (bare-stem
/// imperatives like `sal`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VerbEndingEntry {
    pub person_number: crate::featcodes::PersonNumber,
    pub tense_mood: crate::featcodes::TenseMood,
    pub finiteness: Finiteness,
    pub conjugations: BTreeSet<u8>,
    pub stem_type: StemTypeCode,
    pub suffix_type: SuffixType,
    pub surface: String,
}

/// Nominal stem allomorph (`nl`): selector lists for gender and number
/// suffixes plus the stem's own (possibly unbound) gender and number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NominalStemEntry {
    pub lemma: String,
    pub category: Category,
    pub gender_types: BTreeSet<GenderType>,
    pub number_types: BTreeSet<NumberType>,
    pub gender: Unifiable<Gender>,
    pub number: Unifiable<Number>,
    pub surface: String,
}

/// A word that can still take a number suffix (`wl`), either listed in the
/// lexicon or derived by the gender rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberableWordEntry {
    pub lemma: String,
    pub category: Category,
    pub number_types: BTreeSet<NumberType>,
    pub gender: Unifiable<Gender>,
    pub number: Unifiable<Number>,
    pub surface: String,
}

/// Gender suffix morpheme (`ng`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenderSuffixEntry {
    pub gender_type: GenderType,
    pub gender: Gender,
    pub number: Number,
    pub surface: String,
}

/// Number suffix morpheme (`nn`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberSuffixEntry {
    pub number_type: NumberType,
    pub number: Number,
    pub surface: String,
}

/// Grammatical features of a complete word: verbal or nominal shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordFeatures {
    Verbal(FinVerbFeatures),
    Nominal {
        gender: Unifiable<Gender>,
        number: Unifiable<Number>,
    },
}

/// Complete inflected word form stored directly (`w`): suppletive verb forms
/// and invariant or tantum nominals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullWordEntry {
    pub lemma: String,
    pub category: Category,
    pub features: WordFeatures,
    pub surface: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LexEntry {
    W(FullWordEntry),
    Wl(NumberableWordEntry),
    Vl(VerbStemEntry),
    Nl(NominalStemEntry),
    Vm(VerbEndingEntry),
    Ng(GenderSuffixEntry),
    Nn(NumberSuffixEntry),
}

impl LexEntry {
    pub fn tag(&self) -> Tag {
        match self {
            LexEntry::W(_) => Tag::W,
            LexEntry::Wl(_) => Tag::Wl,
            LexEntry::Vl(_) => Tag::Vl,
            LexEntry::Nl(_) => Tag::Nl,
            LexEntry::Vm(_) => Tag::Vm,
            LexEntry::Ng(_) => Tag::Ng,
            LexEntry::Nn(_) => Tag::Nn,
        }
    }

    pub fn surface(&self) -> &str {
        match self {
            LexEntry::W(e) => &e.surface,
            LexEntry::Wl(e) => &e.surface,
            LexEntry::Vl(e) => &e.surface,
            LexEntry::Nl(e) => &e.surface,
            LexEntry::Vm(e) => &e.surface,
            LexEntry::Ng(e) => &e.surface,
            LexEntry::Nn(e) => &e.surface,
        }
    }

    pub fn lemma(&self) -> Option<&str> {
        match self {
            LexEntry::W(e) => Some(&e.lemma),
            LexEntry::Wl(e) => Some(&e.lemma),
            LexEntry::Vl(e) => Some(&e.lemma),
            LexEntry::Nl(e) => Some(&e.lemma),
            _ => None,
        }
    }

    pub fn as_w(&self) -> Option<&FullWordEntry> {
        match self {
            LexEntry::W(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_wl(&self) -> Option<&NumberableWordEntry> {
        match self {
            LexEntry::Wl(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_vl(&self) -> Option<&VerbStemEntry> {
        match self {
            LexEntry::Vl(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_nl(&self) -> Option<&NominalStemEntry> {
        match self {
            LexEntry::Nl(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_vm(&self) -> Option<&VerbEndingEntry> {
        match self {
            LexEntry::Vm(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_ng(&self) -> Option<&GenderSuffixEntry> {
        match self {
            LexEntry::Ng(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_nn(&self) -> Option<&NumberSuffixEntry> {
        match self {
            LexEntry::Nn(e) => Some(e),
            _ => None,
        }
    }
}

/// Entries of one lemma, grouped by the tags that carry lemmas.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaRefs {
    pub w: Vec<usize>,
    pub wl: Vec<usize>,
    pub vl: Vec<usize>,
    pub nl: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadWarning {
    DuplicateLine { line: usize, first_seen: usize },
}

impl fmt::Display for LoadWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadWarning::DuplicateLine { line, first_seen } => {
                write!(f, "line {line}: duplicate of line {first_seen}, stored once")
            }
        }
    }
}

/// A parse failure tied to its line in the source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {error}")]
pub struct LineParseError {
    pub line: usize,
    pub error: EntryParseError,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("failed to read lexicon: {0}")]
    Io(#[from] std::io::Error),
    /// Every bad line in the input, not just the first.
    #[error("{} parse error(s):\n{}", .0.len(), format_line_errors(.0))]
    Parse(Vec<LineParseError>),
}

fn format_line_errors(errors: &[LineParseError]) -> String {
    errors
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// The loaded lexicon. Immutable after construction; lookups are read-only,
/// so shared references can be used from any number of threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    entries: Vec<LexEntry>,
    by_tag: [Vec<usize>; 7],
    tries: [SurfaceTrie; 7],
    lemma_index: BTreeMap<String, LemmaRefs>,
    has_empty_vm: bool,
    warnings: Vec<LoadWarning>,
}

impl Lexicon {
    /// Parses a whole lexicon file. All lines are checked and every error is
    /// reported; nothing is returned unless the entire file is clean.
    pub fn from_str(text: &str) -> Result<Lexicon, LoadError> {
        let mut entries = Vec::new();
        let mut errors = Vec::new();
        let mut seen: std::collections::HashMap<&str, usize> = std::collections::HashMap::new();
        let mut warnings = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(&first) = seen.get(line) {
                warnings.push(LoadWarning::DuplicateLine {
                    line: line_no,
                    first_seen: first,
                });
                continue;
            }
            seen.insert(line, line_no);
            match parse_entry(line) {
                Ok(entry) => entries.push(entry),
                Err(error) => errors.push(LineParseError { line: line_no, error }),
            }
        }

        if !errors.is_empty() {
            return Err(LoadError::Parse(errors));
        }
        Ok(Lexicon::from_entries(entries, warnings))
    }

    /// Reads and parses a lexicon from any byte source (UTF-8).
    pub fn load(mut source: impl Read) -> Result<Lexicon, LoadError> {
        let mut text = String::new();
        source.read_to_string(&mut text)?;
        Lexicon::from_str(&text)
    }

    fn from_entries(entries: Vec<LexEntry>, warnings: Vec<LoadWarning>) -> Lexicon {
        let mut by_tag: [Vec<usize>; 7] = Default::default();
        let mut tries: [SurfaceTrie; 7] = Default::default();
        let mut lemma_index: BTreeMap<String, LemmaRefs> = BTreeMap::new();
        let mut has_empty_vm = false;

        for (id, entry) in entries.iter().enumerate() {
            let tag = entry.tag();
            by_tag[tag.index()].push(id);
            tries[tag.index()].insert(entry.surface(), id);
            if tag == Tag::Vm && entry.surface().is_empty() {
                has_empty_vm = true;
            }
            if let Some(lemma) = entry.lemma() {
                let refs = lemma_index.entry(lemma.to_string()).or_default();
                match tag {
                    Tag::W => refs.w.push(id),
                    Tag::Wl => refs.wl.push(id),
                    Tag::Vl => refs.vl.push(id),
                    Tag::Nl => refs.nl.push(id),
                    _ => unreachable!("lemma on non-lemma tag"),
                }
            }
        }

        Lexicon {
            entries,
            by_tag,
            tries,
            lemma_index,
            has_empty_vm,
            warnings,
        }
    }

    pub fn entry(&self, id: usize) -> &LexEntry {
        &self.entries[id]
    }

    pub fn entries(&self) -> &[LexEntry] {
        &self.entries
    }

    /// Ids of all entries of one tag, in file order.
    pub fn ids_of_tag(&self, tag: Tag) -> &[usize] {
        &self.by_tag[tag.index()]
    }

    pub fn trie(&self, tag: Tag) -> &SurfaceTrie {
        &self.tries[tag.index()]
    }

    /// All entries of `tag` whose surface equals `surface`, in file order.
    pub fn lookup_exact<'a>(
        &'a self,
        tag: Tag,
        surface: &str,
    ) -> impl Iterator<Item = &'a LexEntry> + 'a {
        self.lookup_exact_ids(tag, surface)
            .iter()
            .map(move |&id| &self.entries[id])
    }

    pub fn lookup_exact_ids(&self, tag: Tag, surface: &str) -> &[usize] {
        self.tries[tag.index()].entries_for(surface)
    }

    pub fn lemma_refs(&self, lemma: &str) -> Option<&LemmaRefs> {
        self.lemma_index.get(lemma)
    }

    pub fn lemmas(&self) -> impl Iterator<Item = &str> {
        self.lemma_index.keys().map(|s| s.as_str())
    }

    /// True when some `vm` entry has an empty surface; only then may the
    /// segmenter propose an empty ending piece.
    pub fn has_empty_vm(&self) -> bool {
        self.has_empty_vm
    }

    pub fn warnings(&self) -> &[LoadWarning] {
        &self.warnings
    }
}
