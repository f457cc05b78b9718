//! Bidirectional morphological engine for Spanish inflection.
//!
//! Surface word forms are analysed into (lemma, grammatical features) and
//! generated from (lemma, feature query) with one lexicon and six
//! concatenation rules. Morpho-graphemics is handled by storing every stem
//! and ending allomorph explicitly; the rules only concatenate pieces whose
//! contextual features unify, so exactly the correct forms are accepted and
//! produced — alternative forms come out as multiple results and paradigm
//! gaps stay empty.
//!
//! Modules:
//! - [`featcodes`]: the numeric slot codes of the conjugation table.
//! - [`lexicon`]: entry types, file format, loader and surface tries.
//! - [`segment`]: trie-guided splitting of words into candidate pieces.
//! - [`engine`]: the rules, analysis, generation and paradigm tables.
//! - [`validate`]: consistency report over a loaded lexicon.

pub mod engine;
pub mod featcodes;
pub mod lexicon;
pub mod segment;
pub mod validate;

pub use engine::{
    analyze, analyze_batch, analyze_batch_seq, generate, generate_paradigm, Analysis, EngineError,
    FeatureBundle, GenQuery, GeneratedForm, Paradigm, RuleId,
};
pub use lexicon::{LexEntry, Lexicon, LoadError, Tag};
pub use segment::{segment, segment_all, segment_with_stats, Segmentation, ShapePattern};
pub use validate::{validate_lexicon, ValidationReport};
