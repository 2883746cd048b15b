//! Arabic corpus tokenization, deduplication and diacritic folding.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use unicode_normalization::UnicodeNormalization;

use crate::Lemma;

pub const TATWEEL: char = '\u{0640}';

/// Character classes that make up a token. Anything outside these ranges
/// delimits tokens, including Quranic annotation signs (U+06D6..=U+06ED),
/// U+0653..=U+0655 when they fail to compose, verse ornaments and digits.
pub const LETTER_RANGES: &[(char, char)] = &[('\u{0621}', '\u{064A}'), ('\u{0671}', '\u{06D3}')];
pub const MARK_RANGES: &[(char, char)] = &[('\u{064B}', '\u{0652}'), ('\u{0670}', '\u{0670}')];

fn in_ranges(c: char, ranges: &[(char, char)]) -> bool {
    ranges.iter().any(|&(lo, hi)| lo <= c && c <= hi)
}

pub fn is_letter(c: char) -> bool {
    in_ranges(c, LETTER_RANGES)
}

/// Vowel and gemination marks removed by [`fold_diacritics`].
pub fn is_diacritic(c: char) -> bool {
    in_ranges(c, MARK_RANGES)
}

pub fn is_token_char(c: char) -> bool {
    is_letter(c) || is_diacritic(c)
}

/// Splits text into maximal runs of Arabic letters and marks.
///
/// Input is composed to NFC first so decomposed hamza and madda forms join
/// their base letter. Tatweel is dropped without splitting the token.
pub fn tokenize(text: &str) -> Vec<Lemma> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for c in text.nfc() {
        if c == TATWEEL {
            continue;
        }
        if is_token_char(c) {
            current.push(c);
        } else if !current.is_empty() {
            tokens.push(finish(&mut current));
        }
    }
    if !current.is_empty() {
        tokens.push(finish(&mut current));
    }
    tokens
}

fn finish(current: &mut String) -> Lemma {
    let token: String = current.nfc().collect();
    current.clear();
    Lemma::from_normalized(token)
}

/// Tokens of a corpus with their first-occurrence-ordered frequencies.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenReport {
    pub tokens: Vec<Lemma>,
    pub total_count: usize,
    /// Distinct tokens in order of first occurrence.
    pub unique: Vec<(Lemma, usize)>,
}

impl TokenReport {
    pub fn frequency(&self, lemma: &Lemma) -> usize {
        self.unique.iter().find(|(l, _)| l == lemma).map_or(0, |(_, n)| *n)
    }

    pub fn unique_count(&self) -> usize {
        self.unique.len()
    }
}

/// Deduplicates tokens on their exact form; diacritics are significant.
pub fn extract_unique(tokens: Vec<Lemma>) -> TokenReport {
    let mut position: BTreeMap<&Lemma, usize> = BTreeMap::new();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for (i, token) in tokens.iter().enumerate() {
        match position.get(token) {
            Some(&slot) => counts[slot].1 += 1,
            None => {
                position.insert(token, counts.len());
                counts.push((i, 1));
            }
        }
    }
    let unique = counts
        .into_iter()
        .map(|(first, n)| (tokens[first].clone(), n))
        .collect();
    TokenReport {
        total_count: tokens.len(),
        tokens,
        unique,
    }
}

/// Removes vowel marks, superscript alef and tatweel.
///
/// Whitespace left around a removed mark is collapsed so the result stays a
/// valid lemma. A lemma made only of marks folds to itself.
pub fn fold_diacritics(lemma: &Lemma) -> Lemma {
    let folded = fold_str(lemma.as_str());
    if folded.is_empty() {
        return lemma.clone();
    }
    Lemma::from_normalized(folded)
}

/// [`fold_diacritics`] over arbitrary text; may return an empty string.
pub fn fold_str(text: &str) -> String {
    let stripped: String = text.nfd().filter(|&c| !is_diacritic(c) && c != TATWEEL).nfc().collect();
    let mut out = String::with_capacity(stripped.len());
    for part in stripped.split(' ').filter(|p| !p.is_empty()) {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(part);
    }
    out
}
