//! Batch command-line front end: analysis, generation, paradigm display,
//! segmentation debugging and lexicon validation.
//!
//! Exit codes: 0 full success, 1 empty results (unrecognised words, paradigm
//! gaps, validation findings), 2 usage or lexicon errors.

use std::fs::File;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unicode_normalization::UnicodeNormalization;

use morph_core::engine::{analyze_batch, generate, generate_paradigm, GenQuery};
use morph_core::featcodes::{PersonNumber, TenseMood};
use morph_core::lexicon::{Category, Gender, Lexicon, Number};
use morph_core::segment::segment_all;
use morph_core::validate_lexicon;
use morph_cli::records::{AnalyzeRecord, GenerateRecord, SegmentRecord};

/// Words are analysed in batches of this size so stdin batch mode streams
/// instead of buffering the whole input.
const BATCH: usize = 512;

#[derive(Parser)]
#[command(name = "morph", version, about = "Spanish inflection engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct Common {
    /// Lexicon file to load.
    #[arg(long, env = "MORPH_LEXICON", value_name = "PATH")]
    lexicon: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct Normalize {
    /// Skip NFC normalisation of input words.
    #[arg(long)]
    no_normalize: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse words given as arguments, or one per line on stdin.
    Analyze {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        normalize: Normalize,
        words: Vec<String>,
    },
    /// Generate all forms of a lemma matching the given features.
    Generate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        normalize: Normalize,
        #[arg(long)]
        lemma: String,
        /// Person-number (sing_1 .. plu_3, no).
        #[arg(long)]
        pn: Option<String>,
        /// Tense-mood (pres_ind .. part).
        #[arg(long)]
        tm: Option<String>,
        /// Gender (masc, fem).
        #[arg(long)]
        gender: Option<String>,
        /// Number (sing, plu).
        #[arg(long)]
        number: Option<String>,
        /// Category (v, n, adj).
        #[arg(long)]
        cat: Option<String>,
    },
    /// Print the full inflection table of a lemma.
    Paradigm {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        normalize: Normalize,
        #[arg(long)]
        lemma: String,
    },
    /// Show every segmentation of the given words (debugging aid).
    Segment {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        normalize: Normalize,
        words: Vec<String>,
    },
    /// Check the lexicon for internal inconsistencies.
    Validate {
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("morph: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(common: &Common) -> Result<Lexicon, String> {
    let file = File::open(&common.lexicon)
        .map_err(|e| format!("cannot open {}: {e}", common.lexicon.display()))?;
    Lexicon::load(file).map_err(|e| e.to_string())
}

fn nfc(word: &str, normalize: &Normalize) -> String {
    if normalize.no_normalize {
        word.to_string()
    } else {
        word.nfc().collect()
    }
}

fn parse_flag<T>(
    value: &Option<String>,
    what: &str,
    from_atom: impl Fn(&str) -> Option<T>,
) -> Result<Option<T>, String> {
    match value {
        None => Ok(None),
        Some(atom) => from_atom(atom)
            .map(Some)
            .ok_or_else(|| format!("`{atom}` is not a valid {what}")),
    }
}


/// Writes one output line; a closed pipe (e.g. piping into `head`) ends the
/// program quietly instead of reporting an error.
fn emit(out: &mut dyn Write, line: &str) -> Result<(), String> {
    match writeln!(out, "{line}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(e.to_string()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze {
            common,
            normalize,
            words,
        } => {
            let lex = load(&common)?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let mut all_recognised = true;

            let mut process = |batch: &[String], out: &mut dyn Write| -> Result<(), String> {
                let results = analyze_batch(&lex, batch);
                for (word, analyses) in batch.iter().zip(&results) {
                    if analyses.is_empty() {
                        all_recognised = false;
                    }
                    let record = AnalyzeRecord::new(word, analyses);
                    let line = match common.format {
                        Format::Json => serde_json::to_string(&record)
                            .map_err(|e| format!("serialisation failed: {e}"))?,
                        Format::Tsv => record.to_tsv(),
                    };
                    emit(out, &line)?;
                }
                Ok(())
            };

            if words.is_empty() {
                // Stream stdin in fixed-size batches; memory stays bounded
                // regardless of input length and output keeps input order.
                let stdin = io::stdin();
                let mut batch = Vec::with_capacity(BATCH);
                for line in stdin.lock().lines() {
                    let line = line.map_err(|e| e.to_string())?;
                    let word = nfc(line.trim(), &normalize);
                    if word.is_empty() {
                        continue;
                    }
                    batch.push(word);
                    if batch.len() == BATCH {
                        process(&batch, &mut out)?;
                        batch.clear();
                    }
                }
                if !batch.is_empty() {
                    process(&batch, &mut out)?;
                }
            } else {
                let words: Vec<String> = words.iter().map(|w| nfc(w, &normalize)).collect();
                process(&words, &mut out)?;
            }
            Ok(if all_recognised {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Generate {
            common,
            normalize,
            lemma,
            pn,
            tm,
            gender,
            number,
            cat,
        } => {
            let lex = load(&common)?;
            let query = GenQuery {
                lemma: nfc(&lemma, &normalize),
                category: parse_flag(&cat, "category", Category::from_atom)?,
                person_number: parse_flag(&pn, "person_number", PersonNumber::from_atom)?,
                tense_mood: parse_flag(&tm, "tense_mood", TenseMood::from_atom)?,
                gender: parse_flag(&gender, "gender", Gender::from_atom)?,
                number: parse_flag(&number, "number", Number::from_atom)?,
            };
            let forms = generate(&lex, &query).map_err(|e| e.to_string())?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for form in &forms {
                let record = GenerateRecord::new(form);
                let line = match common.format {
                    Format::Json => serde_json::to_string(&record)
                        .map_err(|e| format!("serialisation failed: {e}"))?,
                    Format::Tsv => record.to_tsv(),
                };
                emit(&mut out, &line)?;
            }
            Ok(if forms.is_empty() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }

        Command::Paradigm {
            common,
            normalize,
            lemma,
        } => {
            let lex = load(&common)?;
            let lemma = nfc(&lemma, &normalize);
            let paradigm = generate_paradigm(&lex, &lemma).map_err(|e| e.to_string())?;
            let stdout = io::stdout();
            let mut out = stdout.lock();

            if let Some(rows) = &paradigm.verb {
                for row in rows {
                    let surfaces = if row.surfaces.is_empty() {
                        "-".to_string()
                    } else {
                        row.surfaces.iter().cloned().collect::<Vec<_>>().join(",")
                    };
                    emit(
                        &mut out,
                        &format!(
                            "{}\t{}\t{}\t{}",
                            row.code,
                            row.features.person_number,
                            row.features.tense_mood,
                            surfaces
                        ),
                    )?;
                }
            }
            if let Some(cells) = &paradigm.nominal {
                for cell in cells {
                    let surfaces = if cell.surfaces.is_empty() {
                        "-".to_string()
                    } else {
                        cell.surfaces.iter().cloned().collect::<Vec<_>>().join(",")
                    };
                    emit(
                        &mut out,
                        &format!("{}\t{}\t{}", cell.gender, cell.number, surfaces),
                    )?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Segment {
            common,
            normalize,
            words,
        } => {
            let lex = load(&common)?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for word in &words {
                let word = nfc(word, &normalize);
                for seg in segment_all(&lex, &word) {
                    let record = SegmentRecord {
                        word: word.clone(),
                        pattern: seg.pattern.as_str().to_string(),
                        pieces: seg.pieces.iter().map(|p| p.text.clone()).collect(),
                    };
                    let line = match common.format {
                        Format::Json => serde_json::to_string(&record)
                            .map_err(|e| format!("serialisation failed: {e}"))?,
                        Format::Tsv => record.to_tsv(),
                    };
                    emit(&mut out, &line)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Validate { common } => {
            let lex = load(&common)?;
            let report = validate_lexicon(&lex);
            for warning in lex.warnings() {
                eprintln!("warning: {warning}");
            }
            if report.is_empty() {
                println!("lexicon is consistent: {} entries", lex.entries().len());
                Ok(ExitCode::SUCCESS)
            } else {
                print!("{report}");
                Ok(ExitCode::from(1))
            }
        }
    }
}
