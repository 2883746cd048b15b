//! Seeded random lexicons of a requested size and synset count.

use arlex_core::{Lemma, Lexicon, PosId, RelationType};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

const LETTERS: [char; 28] = [
    'ا', 'ب', 'ت', 'ث', 'ج', 'ح', 'خ', 'د', 'ذ', 'ر', 'ز', 'س', 'ش', 'ص', 'ض', 'ط', 'ظ', 'ع', 'غ', 'ف', 'ق', 'ك', 'ل',
    'م', 'ن', 'ه', 'و', 'ي',
];
const FATHA: char = '\u{064E}';

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SyntheticError {
    #[error("need 1 <= synsets <= words, got {words} words and {synsets} synsets")]
    InvalidParameters { words: usize, synsets: usize },
    #[error("relation rate must be finite and non-negative, got {0}")]
    InvalidRate(f64),
}

impl SyntheticError {
    pub fn code(&self) -> &'static str {
        "InvalidParameters"
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticConfig {
    /// Non-synonym edges attempted per word.
    pub relation_rate: f64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        SyntheticConfig { relation_rate: 0.5 }
    }
}

/// The `n`th generated lemma: bijective base-28 over Arabic letters, with a
/// fatha on the first letter.
pub fn synthetic_lemma(n: usize) -> Lemma {
    let mut letters = Vec::new();
    let mut k = n + 1;
    while k > 0 {
        k -= 1;
        letters.push(LETTERS[k % LETTERS.len()]);
        k /= LETTERS.len();
    }
    letters.reverse();
    let mut text = String::with_capacity(letters.len() * 2 + 2);
    text.push(letters[0]);
    text.push(FATHA);
    text.extend(&letters[1..]);
    Lemma::new(&text).expect("generated lemmas are well formed")
}

pub fn generate_synthetic(words: usize, synsets: usize, seed: u64) -> Result<Lexicon, SyntheticError> {
    generate_synthetic_with(words, synsets, seed, &SyntheticConfig::default())
}

/// Builds `words` nouns split into exactly `synsets` synonym components.
///
/// Each component is a random spanning tree of synonym edges. Hypernym and
/// meronym edges always point from a later component to an earlier one, so
/// they never form cycles; antonym and association edges join distinct
/// components, so no pair is both synonym and antonym.
pub fn generate_synthetic_with(
    words: usize,
    synsets: usize,
    seed: u64,
    config: &SyntheticConfig,
) -> Result<Lexicon, SyntheticError> {
    if synsets == 0 || synsets > words {
        return Err(SyntheticError::InvalidParameters { words, synsets });
    }
    if !config.relation_rate.is_finite() || config.relation_rate < 0.0 {
        return Err(SyntheticError::InvalidRate(config.relation_rate));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noun = PosId::new("noun");
    let mut lexicon = Lexicon::default();

    let mut lemmas: Vec<Lemma> = (0..words).map(synthetic_lemma).collect();
    lemmas.shuffle(&mut rng);
    for lemma in &lemmas {
        lexicon
            .add_word(lemma.clone(), &noun)
            .expect("noun is in the default taxonomy");
    }

    // random composition of `words` into `synsets` positive parts
    let mut cuts: Vec<usize> = index::sample(&mut rng, words - 1, synsets - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut bounds = Vec::with_capacity(synsets + 1);
    bounds.push(0);
    bounds.extend(cuts);
    bounds.push(words);
    let groups: Vec<&[Lemma]> = bounds.windows(2).map(|w| &lemmas[w[0]..w[1]]).collect();

    for group in &groups {
        for i in 1..group.len() {
            let j = rng.random_range(0..i);
            lexicon
                .add_relation(&group[i], RelationType::Synonym, &group[j])
                .expect("distinct generated words");
        }
    }

    if synsets >= 2 {
        let extra = (config.relation_rate * words as f64).round() as usize;
        let kinds = [
            RelationType::Hypernym,
            RelationType::Meronym,
            RelationType::Antonym,
            RelationType::Association,
        ];
        for _ in 0..extra {
            let a = rng.random_range(0..synsets);
            let mut b = rng.random_range(0..synsets - 1);
            if b >= a {
                b += 1;
            }
            let (later, earlier) = (a.max(b), a.min(b));
            let source = &groups[later][rng.random_range(0..groups[later].len())];
            let target = &groups[earlier][rng.random_range(0..groups[earlier].len())];
            let rel = kinds[rng.random_range(0..kinds.len())];
            lexicon
                .add_relation(source, rel, target)
                .expect("distinct generated words");
        }
    }
    Ok(lexicon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use arlex_core::{compute_synsets, validate};

    #[test]
    fn lemmas_are_distinct() {
        let all: std::collections::BTreeSet<Lemma> = (0..2000).map(synthetic_lemma).collect();
        assert_eq!(all.len(), 2000);
        assert_eq!(synthetic_lemma(0).as_str(), "اَ");
        assert_eq!(synthetic_lemma(28).as_str(), "اَا");
    }

    #[test]
    fn exact_partition_and_clean() {
        for (w, s) in [(1, 1), (2, 1), (2, 2), (50, 7), (300, 150), (300, 300)] {
            let lex = generate_synthetic(w, s, 9).unwrap();
            assert_eq!(lex.word_count(), w);
            assert_eq!(compute_synsets(&lex).len(), s);
            assert!(validate(&lex).is_empty(), "{w}/{s}");
            if w == s {
                assert_eq!(lex.edges_of(RelationType::Synonym).count(), 0);
            }
        }
    }

    #[test]
    fn seeded() {
        assert_eq!(
            generate_synthetic(200, 80, 3).unwrap(),
            generate_synthetic(200, 80, 3).unwrap()
        );
        assert_ne!(
            generate_synthetic(200, 80, 3).unwrap(),
            generate_synthetic(200, 80, 4).unwrap()
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_synthetic(0, 0, 1).is_err());
        assert!(generate_synthetic(3, 4, 1).is_err());
        assert!(generate_synthetic(3, 0, 1).is_err());
        let bad = SyntheticConfig { relation_rate: -1.0 };
        assert!(generate_synthetic_with(3, 1, 1, &bad).is_err());
    }

    #[test]
    fn rate_zero_leaves_only_synonyms() {
        let lex = generate_synthetic_with(100, 10, 1, &SyntheticConfig { relation_rate: 0.0 }).unwrap();
        assert_eq!(lex.edge_count(), 2 * (100 - 10));
    }
}
