//! Numeric codes for the inflected-form slots of the verb paradigm and the
//! conversions between codes and (person-number, tense-mood) feature pairs.
//!
//! Finite cells use a two-digit code: the tens digit selects the tense-mood
//! row (1..=7 for `pres_ind`..`cond`, 8 for `imper`) and the units digit the
//! person-number column (1..=6 for `sing_1`..`plu_3`). The imperative row only
//! has the columns `sing_2`, `sing_3`, `plu_2`, `plu_3` (82, 83, 85, 86; 83
//! and 86 are the courtesy imperatives, which share surfaces with 53 and 56).
//! The non-finite forms get 00 (infinitive), 90 (gerund) and 99 (participle),
//! for 49 concrete codes in total. The extra value 100 is a wildcard standing
//! for the disjunction of all 49.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FeatError {
    #[error("unknown stem-type code {0}")]
    UnknownCode(i64),
    #[error("the wildcard code 100 does not denote a concrete form")]
    WildcardCode,
    #[error("wildcard 100 cannot be combined with other stem-type codes")]
    MixedWildcard,
    #[error("no code exists for ({0}, {1})")]
    InvalidCombination(PersonNumber, TenseMood),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PersonNumber {
    Sing1,
    Sing2,
    Sing3,
    Plu1,
    Plu2,
    Plu3,
    /// Non-finite forms (infinitive, gerund, participle) carry no person.
    None,
}

impl PersonNumber {
    pub fn as_str(self) -> &'static str {
        match self {
            PersonNumber::Sing1 => "sing_1",
            PersonNumber::Sing2 => "sing_2",
            PersonNumber::Sing3 => "sing_3",
            PersonNumber::Plu1 => "plu_1",
            PersonNumber::Plu2 => "plu_2",
            PersonNumber::Plu3 => "plu_3",
            PersonNumber::None => "no",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "sing_1" => PersonNumber::Sing1,
            "sing_2" => PersonNumber::Sing2,
            "sing_3" => PersonNumber::Sing3,
            "plu_1" => PersonNumber::Plu1,
            "plu_2" => PersonNumber::Plu2,
            "plu_3" => PersonNumber::Plu3,
            "no" => PersonNumber::None,
            _ => return None,
        })
    }

    fn column(self) -> Option<u8> {
        match self {
            PersonNumber::Sing1 => Some(1),
            PersonNumber::Sing2 => Some(2),
            PersonNumber::Sing3 => Some(3),
            PersonNumber::Plu1 => Some(4),
            PersonNumber::Plu2 => Some(5),
            PersonNumber::Plu3 => Some(6),
            PersonNumber::None => None,
        }
    }

    fn from_column(c: u8) -> Self {
        match c {
            1 => PersonNumber::Sing1,
            2 => PersonNumber::Sing2,
            3 => PersonNumber::Sing3,
            4 => PersonNumber::Plu1,
            5 => PersonNumber::Plu2,
            6 => PersonNumber::Plu3,
            _ => unreachable!("column digit out of range"),
        }
    }
}

impl fmt::Display for PersonNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TenseMood {
    PresInd,
    ImpfInd,
    IndfInd,
    FutInd,
    PresSubj,
    ImpfSubj,
    Cond,
    Imper,
    Inf,
    Ger,
    Part,
}

impl TenseMood {
    pub fn as_str(self) -> &'static str {
        match self {
            TenseMood::PresInd => "pres_ind",
            TenseMood::ImpfInd => "impf_ind",
            TenseMood::IndfInd => "indf_ind",
            TenseMood::FutInd => "fut_ind",
            TenseMood::PresSubj => "pres_subj",
            TenseMood::ImpfSubj => "impf_subj",
            TenseMood::Cond => "cond",
            TenseMood::Imper => "imper",
            TenseMood::Inf => "inf",
            TenseMood::Ger => "ger",
            TenseMood::Part => "part",
        }
    }

    pub fn from_atom(s: &str) -> Option<Self> {
        Some(match s {
            "pres_ind" => TenseMood::PresInd,
            "impf_ind" => TenseMood::ImpfInd,
            "indf_ind" => TenseMood::IndfInd,
            "fut_ind" => TenseMood::FutInd,
            "pres_subj" => TenseMood::PresSubj,
            "impf_subj" => TenseMood::ImpfSubj,
            "cond" => TenseMood::Cond,
            "imper" => TenseMood::Imper,
            "inf" => TenseMood::Inf,
            "ger" => TenseMood::Ger,
            "part" => TenseMood::Part,
            _ => return None,
        })
    }

    fn row(self) -> Option<u8> {
        match self {
            TenseMood::PresInd => Some(1),
            TenseMood::ImpfInd => Some(2),
            TenseMood::IndfInd => Some(3),
            TenseMood::FutInd => Some(4),
            TenseMood::PresSubj => Some(5),
            TenseMood::ImpfSubj => Some(6),
            TenseMood::Cond => Some(7),
            TenseMood::Imper => Some(8),
            _ => None,
        }
    }

    fn from_row(r: u8) -> Self {
        match r {
            1 => TenseMood::PresInd,
            2 => TenseMood::ImpfInd,
            3 => TenseMood::IndfInd,
            4 => TenseMood::FutInd,
            5 => TenseMood::PresSubj,
            6 => TenseMood::ImpfSubj,
            7 => TenseMood::Cond,
            8 => TenseMood::Imper,
            _ => unreachable!("row digit out of range"),
        }
    }
}

impl fmt::Display for TenseMood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One validated stem-type code: a concrete paradigm slot or the wildcard 100.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StemTypeCode(u8);

impl StemTypeCode {
    pub const WILDCARD: StemTypeCode = StemTypeCode(100);
    pub const INF: StemTypeCode = StemTypeCode(0);
    pub const GER: StemTypeCode = StemTypeCode(90);
    pub const PART: StemTypeCode = StemTypeCode(99);

    pub fn from_int(value: i64) -> Result<Self, FeatError> {
        match value {
            0 | 90 | 99 | 100 => Ok(StemTypeCode(value as u8)),
            11..=16 | 21..=26 | 31..=36 | 41..=46 | 51..=56 | 61..=66 | 71..=76 => {
                Ok(StemTypeCode(value as u8))
            }
            82 | 83 | 85 | 86 => Ok(StemTypeCode(value as u8)),
            _ => Err(FeatError::UnknownCode(value)),
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_wildcard(self) -> bool {
        self.0 == 100
    }

    /// Renders as it appears in lexicon files: code 0 is spelled "00".
    pub fn as_file_str(self) -> String {
        if self.0 == 0 {
            "00".to_string()
        } else {
            self.0.to_string()
        }
    }
}

impl fmt::Display for StemTypeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_file_str())
    }
}

/// Person-number and tense-mood of one finite or non-finite verb form.
///
/// Plain data; the pairing constraints (non-finite forms have no person, the
/// imperative lacks first persons) are enforced by `encode_features` and by
/// the lexicon validator, not by construction, so that inconsistent entries
/// can be loaded and reported instead of rejected blindly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinVerbFeatures {
    pub person_number: PersonNumber,
    pub tense_mood: TenseMood,
}

impl FinVerbFeatures {
    pub fn new(person_number: PersonNumber, tense_mood: TenseMood) -> Self {
        FinVerbFeatures {
            person_number,
            tense_mood,
        }
    }
}

impl fmt::Display for FinVerbFeatures {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.person_number, self.tense_mood)
    }
}

/// All 49 concrete codes in conjugation-table order: the seven full rows, then
/// the imperative row, then infinitive, gerund and participle.
pub const TABLE_ORDER: [u8; 49] = [
    11, 12, 13, 14, 15, 16, // pres_ind
    21, 22, 23, 24, 25, 26, // impf_ind
    31, 32, 33, 34, 35, 36, // indf_ind
    41, 42, 43, 44, 45, 46, // fut_ind
    51, 52, 53, 54, 55, 56, // pres_subj
    61, 62, 63, 64, 65, 66, // impf_subj
    71, 72, 73, 74, 75, 76, // cond
    82, 83, 85, 86, // imper
    0, 90, 99, // inf, ger, part
];

/// Iterator over the 49 concrete codes in table order.
pub fn all_codes() -> impl Iterator<Item = StemTypeCode> {
    TABLE_ORDER.iter().map(|&c| StemTypeCode(c))
}

/// Maps a concrete code to its (person-number, tense-mood) cell.
pub fn decode_code(code: StemTypeCode) -> Result<FinVerbFeatures, FeatError> {
    match code.0 {
        100 => Err(FeatError::WildcardCode),
        0 => Ok(FinVerbFeatures::new(PersonNumber::None, TenseMood::Inf)),
        90 => Ok(FinVerbFeatures::new(PersonNumber::None, TenseMood::Ger)),
        99 => Ok(FinVerbFeatures::new(PersonNumber::None, TenseMood::Part)),
        n => {
            let row = n / 10;
            let col = n % 10;
            Ok(FinVerbFeatures::new(
                PersonNumber::from_column(col),
                TenseMood::from_row(row),
            ))
        }
    }
}

/// Inverse of `decode_code`: maps a feature pair to its cell's code.
pub fn encode_features(f: FinVerbFeatures) -> Result<StemTypeCode, FeatError> {
    match (f.person_number, f.tense_mood) {
        (PersonNumber::None, TenseMood::Inf) => Ok(StemTypeCode::INF),
        (PersonNumber::None, TenseMood::Ger) => Ok(StemTypeCode::GER),
        (PersonNumber::None, TenseMood::Part) => Ok(StemTypeCode::PART),
        (pn, tm) => {
            let row = tm.row();
            let col = pn.column();
            match (row, col) {
                (Some(r), Some(c)) => {
                    // The imperative row has no sing_1/plu_1 cells.
                    if r == 8 && (c == 1 || c == 4) {
                        Err(FeatError::InvalidCombination(pn, tm))
                    } else {
                        Ok(StemTypeCode(10 * r + c))
                    }
                }
                _ => Err(FeatError::InvalidCombination(pn, tm)),
            }
        }
    }
}

/// Expands the wildcard shorthand: `{100}` becomes the full 49-code set, any
/// concrete set is returned unchanged.
pub fn expand_stem_types(
    codes: &std::collections::BTreeSet<StemTypeCode>,
) -> Result<std::collections::BTreeSet<StemTypeCode>, FeatError> {
    if codes.contains(&StemTypeCode::WILDCARD) {
        if codes.len() > 1 {
            return Err(FeatError::MixedWildcard);
        }
        Ok(all_codes().collect())
    } else {
        Ok(codes.clone())
    }
}

/// The pres_subj twin of a courtesy-imperative code: 83 -> 53, 86 -> 56.
/// Surfaces filed under a courtesy code must equal the twin's; the lexicon
/// validator checks this.
pub fn courtesy_twin(code: StemTypeCode) -> Option<StemTypeCode> {
    match code.0 {
        83 => Some(StemTypeCode(53)),
        86 => Some(StemTypeCode(56)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn decode_table_cells() {
        assert_eq!(
            decode_code(StemTypeCode::from_int(11).unwrap()).unwrap(),
            FinVerbFeatures::new(PersonNumber::Sing1, TenseMood::PresInd)
        );
        assert_eq!(
            decode_code(StemTypeCode::from_int(99).unwrap()).unwrap(),
            FinVerbFeatures::new(PersonNumber::None, TenseMood::Part)
        );
        assert_eq!(
            decode_code(StemTypeCode::from_int(0).unwrap()).unwrap(),
            FinVerbFeatures::new(PersonNumber::None, TenseMood::Inf)
        );
        assert_eq!(
            decode_code(StemTypeCode::from_int(90).unwrap()).unwrap(),
            FinVerbFeatures::new(PersonNumber::None, TenseMood::Ger)
        );
        assert_eq!(
            decode_code(StemTypeCode::from_int(83).unwrap()).unwrap(),
            FinVerbFeatures::new(PersonNumber::Sing3, TenseMood::Imper)
        );
    }

    #[test]
    fn invalid_codes_rejected() {
        for bad in [47, 17, 81, 84, 101, 7, 10, 60, 77, 80, 89, 91, 98, -1, 1000] {
            assert_eq!(
                StemTypeCode::from_int(bad),
                Err(FeatError::UnknownCode(bad)),
                "code {bad} should be rejected"
            );
        }
    }

    #[test]
    fn wildcard_does_not_decode() {
        assert_eq!(decode_code(StemTypeCode::WILDCARD), Err(FeatError::WildcardCode));
    }

    #[test]
    fn encode_table_cells() {
        assert_eq!(
            encode_features(FinVerbFeatures::new(PersonNumber::Plu3, TenseMood::ImpfSubj))
                .unwrap()
                .value(),
            66
        );
        assert_eq!(
            encode_features(FinVerbFeatures::new(PersonNumber::None, TenseMood::Ger))
                .unwrap()
                .value(),
            90
        );
    }

    #[test]
    fn imperative_first_persons_rejected() {
        for pn in [PersonNumber::Sing1, PersonNumber::Plu1] {
            assert_eq!(
                encode_features(FinVerbFeatures::new(pn, TenseMood::Imper)),
                Err(FeatError::InvalidCombination(pn, TenseMood::Imper))
            );
        }
        assert_eq!(
            encode_features(FinVerbFeatures::new(PersonNumber::Sing1, TenseMood::Inf)),
            Err(FeatError::InvalidCombination(PersonNumber::Sing1, TenseMood::Inf))
        );
        assert_eq!(
            encode_features(FinVerbFeatures::new(PersonNumber::None, TenseMood::PresInd)),
            Err(FeatError::InvalidCombination(PersonNumber::None, TenseMood::PresInd))
        );
    }

    #[test]
    fn bijection_over_all_codes() {
        let mut seen = BTreeSet::new();
        for code in all_codes() {
            let f = decode_code(code).unwrap();
            assert_eq!(encode_features(f).unwrap(), code);
            seen.insert(code);
        }
        assert_eq!(seen.len(), 49);
    }

    #[test]
    fn bijection_over_all_feature_pairs() {
        // Every (pn, tm) pair that encodes must decode back to itself; exactly
        // 49 pairs encode.
        let pns = [
            PersonNumber::Sing1,
            PersonNumber::Sing2,
            PersonNumber::Sing3,
            PersonNumber::Plu1,
            PersonNumber::Plu2,
            PersonNumber::Plu3,
            PersonNumber::None,
        ];
        let tms = [
            TenseMood::PresInd,
            TenseMood::ImpfInd,
            TenseMood::IndfInd,
            TenseMood::FutInd,
            TenseMood::PresSubj,
            TenseMood::ImpfSubj,
            TenseMood::Cond,
            TenseMood::Imper,
            TenseMood::Inf,
            TenseMood::Ger,
            TenseMood::Part,
        ];
        let mut ok = 0;
        for &pn in &pns {
            for &tm in &tms {
                let f = FinVerbFeatures::new(pn, tm);
                if let Ok(code) = encode_features(f) {
                    assert_eq!(decode_code(code).unwrap(), f);
                    ok += 1;
                }
            }
        }
        assert_eq!(ok, 49);
    }

    #[test]
    fn expand_wildcard() {
        let wild: BTreeSet<_> = [StemTypeCode::WILDCARD].into_iter().collect();
        let full = expand_stem_types(&wild).unwrap();
        assert_eq!(full.len(), 49);
        assert!(!full.contains(&StemTypeCode::WILDCARD));

        let concrete: BTreeSet<_> = [11, 51]
            .into_iter()
            .map(|c| StemTypeCode::from_int(c).unwrap())
            .collect();
        assert_eq!(expand_stem_types(&concrete).unwrap(), concrete);

        let mixed: BTreeSet<_> = [
            StemTypeCode::WILDCARD,
            StemTypeCode::from_int(11).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(expand_stem_types(&mixed), Err(FeatError::MixedWildcard));
    }

    #[test]
    fn expand_is_idempotent() {
        let wild: BTreeSet<_> = [StemTypeCode::WILDCARD].into_iter().collect();
        let once = expand_stem_types(&wild).unwrap();
        let twice = expand_stem_types(&once).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn courtesy_twins() {
        assert_eq!(
            courtesy_twin(StemTypeCode::from_int(83).unwrap()),
            Some(StemTypeCode::from_int(53).unwrap())
        );
        assert_eq!(
            courtesy_twin(StemTypeCode::from_int(86).unwrap()),
            Some(StemTypeCode::from_int(56).unwrap())
        );
        assert_eq!(courtesy_twin(StemTypeCode::from_int(11).unwrap()), None);
        assert_eq!(courtesy_twin(StemTypeCode::from_int(82).unwrap()), None);
    }

    #[test]
    fn file_rendering_of_zero() {
        assert_eq!(StemTypeCode::INF.as_file_str(), "00");
        assert_eq!(StemTypeCode::from_int(90).unwrap().as_file_str(), "90");
    }
}
