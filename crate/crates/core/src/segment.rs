//! Trie-guided word segmentation.
//!
//! A surface word is split into 1-3 pieces matching one of seven shape
//! patterns, one per grammar rule (plus direct whole-word lookup). Instead of
//! blindly proposing every split point, the walk follows the letter trie of
//! the piece's category, so only attested prefixes are ever extended. The
//! search is still complete: every split whose pieces are all attested is
//! found.

use crate::lexicon::{Lexicon, SurfaceTrie, Tag};

/// The piece shapes licensed by the grammar. `NlNgNn` exists because the
/// gender rule's output feeds the number rule; pre-splitting into three
/// pieces lets the engine apply both rules without re-segmenting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapePattern {
    W,
    VlVm,
    Wl,
    WlNn,
    NlNg,
    NlNgNn,
    NlNn,
}

impl ShapePattern {
    /// Fixed evaluation order used by `segment_all`.
    pub const ALL: [ShapePattern; 7] = [
        ShapePattern::W,
        ShapePattern::VlVm,
        ShapePattern::Wl,
        ShapePattern::WlNn,
        ShapePattern::NlNg,
        ShapePattern::NlNgNn,
        ShapePattern::NlNn,
    ];

    pub fn tags(self) -> &'static [Tag] {
        match self {
            ShapePattern::W => &[Tag::W],
            ShapePattern::VlVm => &[Tag::Vl, Tag::Vm],
            ShapePattern::Wl => &[Tag::Wl],
            ShapePattern::WlNn => &[Tag::Wl, Tag::Nn],
            ShapePattern::NlNg => &[Tag::Nl, Tag::Ng],
            ShapePattern::NlNgNn => &[Tag::Nl, Tag::Ng, Tag::Nn],
            ShapePattern::NlNn => &[Tag::Nl, Tag::Nn],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ShapePattern::W => "w",
            ShapePattern::VlVm => "vl+vm",
            ShapePattern::Wl => "wl",
            ShapePattern::WlNn => "wl+nn",
            ShapePattern::NlNg => "nl+ng",
            ShapePattern::NlNgNn => "nl+ng+nn",
            ShapePattern::NlNn => "nl+nn",
        }
    }
}

impl std::fmt::Display for ShapePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One matched piece: its text and every lexicon entry attesting it, in file
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub text: String,
    pub entry_ids: Vec<usize>,
}

/// One split of a word. Piece texts concatenate back to the input exactly;
/// only the final piece of `vl+vm` may be empty (bare-stem imperatives).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    pub pattern: ShapePattern,
    pub pieces: Vec<Piece>,
}

/// Counters from one segmentation run. A node step is one attempted trie
/// edge traversal.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SegmentStats {
    pub node_steps: usize,
}

/// All splits of `word` matching `pattern`, ordered by increasing length of
/// the first piece, then the second.
pub fn segment(lex: &Lexicon, word: &str, pattern: ShapePattern) -> Vec<Segmentation> {
    segment_with_stats(lex, word, pattern).0
}

/// Like `segment`, also reporting how many trie node steps the walk took.
pub fn segment_with_stats(
    lex: &Lexicon,
    word: &str,
    pattern: ShapePattern,
) -> (Vec<Segmentation>, SegmentStats) {
    let chars: Vec<char> = word.chars().collect();
    let mut out = Vec::new();
    let mut stats = SegmentStats::default();
    let mut pieces = Vec::new();
    walk(
        lex,
        &chars,
        pattern,
        0,
        0,
        &mut pieces,
        &mut out,
        &mut stats.node_steps,
    );
    (out, stats)
}

/// Union over all seven patterns in fixed order. A word segmentable under
/// several patterns appears once per pattern; each leads to its own
/// derivation.
pub fn segment_all(lex: &Lexicon, word: &str) -> Vec<Segmentation> {
    ShapePattern::ALL
        .iter()
        .flat_map(|&p| segment(lex, word, p))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn walk(
    lex: &Lexicon,
    chars: &[char],
    pattern: ShapePattern,
    piece_idx: usize,
    pos: usize,
    pieces: &mut Vec<Piece>,
    out: &mut Vec<Segmentation>,
    steps: &mut usize,
) {
    let tags = pattern.tags();
    let tag = tags[piece_idx];
    let trie = lex.trie(tag);
    let last = piece_idx + 1 == tags.len();
    let mut node = SurfaceTrie::ROOT;

    if last {
        // The final piece must consume the remainder exactly. An empty
        // remainder matches entries stored at the root, i.e. empty surfaces;
        // only vm endings may be empty, so this is the bare-stem case.
        for &c in &chars[pos..] {
            *steps += 1;
            match trie.descend(node, c) {
                Some(next) => node = next,
                None => return,
            }
        }
        let ids = trie.entries_at(node);
        if !ids.is_empty() {
            let mut all = pieces.clone();
            all.push(Piece {
                text: chars[pos..].iter().collect(),
                entry_ids: ids.to_vec(),
            });
            out.push(Segmentation {
                pattern,
                pieces: all,
            });
        }
    } else {
        // Non-final pieces are non-empty attested prefixes, visited in
        // increasing length so the output order is canonical.
        for i in pos..chars.len() {
            *steps += 1;
            match trie.descend(node, chars[i]) {
                Some(next) => node = next,
                None => return,
            }
            let ids = trie.entries_at(node);
            if !ids.is_empty() {
                pieces.push(Piece {
                    text: chars[pos..=i].iter().collect(),
                    entry_ids: ids.to_vec(),
                });
                walk(lex, chars, pattern, piece_idx + 1, i + 1, pieces, out, steps);
                pieces.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;

    fn lex() -> Lexicon {
        Lexicon::from_str(
            "\
ng\tmas2\tmasc\tsing\te
ng\tfem\tfem\tsing\ta
nn\tplu1\tplu\ts
nn\tplu2\tplu\tes
nl\tpresidente\tn\tmas2,fem\tplu1\t_\t_\tpresident
vl\tsalir\tv\t3\t00,12,13,85\treg\tsal
vl\tsalir\tv\t3\t82\timper\tsal
vl\tsalir\tv\t3\t11,51\treg\tsalg
vm\tsing_2\timper\tfin\t2,3\t82\timper\tNULL
vm\tsing_3\tpres_ind\tfin\t2,3\t13\treg\te
vm\tsing_1\tpres_ind\tfin\t1,2,3\t11\treg\to
",
        )
        .unwrap()
    }

    fn texts(s: &Segmentation) -> Vec<&str> {
        s.pieces.iter().map(|p| p.text.as_str()).collect()
    }

    #[test]
    fn three_piece_split() {
        let lex = lex();
        let segs = segment(&lex, "presidentas", ShapePattern::NlNgNn);
        assert_eq!(segs.len(), 1);
        assert_eq!(texts(&segs[0]), vec!["president", "a", "s"]);
    }

    #[test]
    fn bare_stem_uses_empty_final_piece() {
        let lex = lex();
        let segs = segment(&lex, "sal", ShapePattern::VlVm);
        assert_eq!(segs.len(), 1);
        assert_eq!(texts(&segs[0]), vec!["sal", ""]);
        // Both sal stems attest the first piece.
        assert_eq!(segs[0].pieces[0].entry_ids.len(), 2);
    }

    #[test]
    fn no_empty_piece_without_empty_vm() {
        let text = "\
vl\tsalir\tv\t3\t00,12\treg\tsal
vm\tsing_3\tpres_ind\tfin\t2,3\t13\treg\te
";
        let lex = Lexicon::from_str(text).unwrap();
        assert!(!lex.has_empty_vm());
        assert!(segment(&lex, "sal", ShapePattern::VlVm).is_empty());
    }

    #[test]
    fn unattested_substrings_match_nothing() {
        let lex = lex();
        for pattern in ShapePattern::ALL {
            assert!(segment(&lex, "qqq", pattern).is_empty());
        }
        assert!(segment_all(&lex, "qqq").is_empty());
    }

    #[test]
    fn empty_word_has_no_segmentations() {
        let lex = lex();
        assert!(segment_all(&lex, "").is_empty());
    }

    #[test]
    fn splits_ordered_by_first_piece_length() {
        // Two nl stems, one a prefix of the other, both continuable.
        let text = "\
nl\tx\tn\tfem\tplu1\t_\t_\tcas
nl\ty\tn\tfem\tplu1\t_\t_\tcasa
ng\tfem\tfem\tsing\tara
ng\tfem\tfem\tsing\tra
";
        let lex = Lexicon::from_str(text).unwrap();
        let segs = segment(&lex, "casara", ShapePattern::NlNg);
        let got: Vec<Vec<&str>> = segs.iter().map(texts).collect();
        assert_eq!(got, vec![vec!["cas", "ara"], vec!["casa", "ra"]]);
    }

    #[test]
    fn verb_pattern_node_steps_within_quadratic_bound() {
        let lex = lex();
        for word in ["sal", "sale", "salgo", "presidentas", "qqqqqqqqqqqq"] {
            let n = word.chars().count();
            let (_, stats) = segment_with_stats(&lex, word, ShapePattern::VlVm);
            assert!(
                stats.node_steps <= n * n + n,
                "{word}: {} steps > {}",
                stats.node_steps,
                n * n + n
            );
        }
    }
}
