use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::text::fold_str;
use crate::{
    compute_synsets, stats, transitive, Endpoint, Lemma, Lexicon, LexiconError, PosId, RelationType, Stats, Synset,
    SynsetId, Synsets,
};

/// Everything known about one word.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WordProfile {
    pub lemma: Lemma,
    pub pos: PosId,
    pub synset: SynsetId,
    pub synonyms: Vec<Lemma>,
    pub antonyms: Vec<Lemma>,
    /// Hypernym targets (`has_parent`).
    pub hypernyms: Vec<Lemma>,
    /// Hyponym targets (`has_child`).
    pub hyponyms: Vec<Lemma>,
    /// Meronym targets (`part_of`): the wholes this word is part of.
    pub wholes: Vec<Lemma>,
    /// Holonym targets (`has_a`): the parts of this word.
    pub parts: Vec<Lemma>,
    pub associations: Vec<Lemma>,
}

impl WordProfile {
    pub fn related(&self, rel: RelationType) -> &[Lemma] {
        match rel {
            RelationType::Synonym => &self.synonyms,
            RelationType::Antonym => &self.antonyms,
            RelationType::Hypernym => &self.hypernyms,
            RelationType::Hyponym => &self.hyponyms,
            RelationType::Meronym => &self.wholes,
            RelationType::Holonym => &self.parts,
            RelationType::Association => &self.associations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Lookup {
    pub profile: WordProfile,
    /// Every stored form that folds to the query when the match was made by
    /// folding; empty for exact matches.
    pub candidates: Vec<Lemma>,
}

/// A read-only lexicon snapshot with precomputed synsets and a folded-form
/// index.
#[derive(Debug, Clone)]
pub struct LexiconIndex {
    lexicon: Lexicon,
    synsets: Synsets,
    folded: BTreeMap<String, Vec<Lemma>>,
}

impl LexiconIndex {
    pub fn new(lexicon: Lexicon) -> LexiconIndex {
        let synsets = compute_synsets(&lexicon);
        let mut folded: BTreeMap<String, Vec<Lemma>> = BTreeMap::new();
        for (lemma, _) in lexicon.words() {
            folded.entry(fold_str(lemma)).or_default().push(lemma.clone());
        }
        LexiconIndex {
            lexicon,
            synsets,
            folded,
        }
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn into_lexicon(self) -> Lexicon {
        self.lexicon
    }

    pub fn synsets(&self) -> &Synsets {
        &self.synsets
    }

    pub fn synset(&self, id: SynsetId) -> Option<&Synset> {
        self.synsets.get(id)
    }

    pub fn stats(&self) -> Stats {
        Stats {
            synset_count: self.synsets.len(),
            ..stats::links_only(&self.lexicon)
        }
    }

    pub fn profile(&self, lemma: &Lemma) -> Result<WordProfile, LexiconError> {
        let pos = self.lexicon.pos_of(lemma).ok_or_else(|| LexiconError::WordNotFound {
            lemma: lemma.clone(),
            endpoint: Endpoint::Word,
        })?;
        let related = |rel| -> Vec<Lemma> {
            self.lexicon
                .neighbors(lemma, rel)
                .map(|set| set.iter().cloned().collect())
                .unwrap_or_default()
        };
        Ok(WordProfile {
            lemma: lemma.clone(),
            pos: pos.clone(),
            synset: self.synsets.of(lemma).expect("every word has a synset"),
            synonyms: related(RelationType::Synonym),
            antonyms: related(RelationType::Antonym),
            hypernyms: related(RelationType::Hypernym),
            hyponyms: related(RelationType::Hyponym),
            wholes: related(RelationType::Meronym),
            parts: related(RelationType::Holonym),
            associations: related(RelationType::Association),
        })
    }

    /// Exact lookup, falling back to diacritic-insensitive matching when
    /// `fold` is set. Several folded matches resolve to the smallest one.
    pub fn lookup(&self, query: &str, fold: bool) -> Result<Lookup, LexiconError> {
        let lemma = Lemma::new(query)?;
        let not_found = || LexiconError::WordNotFound {
            lemma: lemma.clone(),
            endpoint: Endpoint::Word,
        };
        if self.lexicon.contains_word(&lemma) {
            return Ok(Lookup {
                profile: self.profile(&lemma)?,
                candidates: Vec::new(),
            });
        }
        if !fold {
            return Err(not_found());
        }
        let candidates = self.folded.get(&fold_str(&lemma)).ok_or_else(not_found)?;
        // candidates were pushed in lemma order
        let chosen = &candidates[0];
        Ok(Lookup {
            profile: self.profile(chosen)?,
            candidates: candidates.clone(),
        })
    }

    /// Lemmas starting with `prefix`, in lemma order. With `fold`, both the
    /// prefix and the stored forms are compared without diacritics.
    pub fn search_prefix(&self, prefix: &str, fold: bool) -> Vec<&Lemma> {
        if fold {
            let key = fold_str(prefix);
            let mut out: Vec<&Lemma> = self
                .folded
                .range::<str, _>((core::ops::Bound::Included(key.as_str()), core::ops::Bound::Unbounded))
                .take_while(|(k, _)| k.starts_with(key.as_str()))
                .flat_map(|(_, v)| v.iter())
                .collect();
            out.sort();
            out
        } else {
            self.lexicon
                .words()
                .map(|(l, _)| l)
                .skip_while(|l| l.as_str() < prefix)
                .take_while(|l| l.starts_with(prefix))
                .collect()
        }
    }

    pub fn transitive(
        &self,
        word: &Lemma,
        rel: RelationType,
        max_depth: usize,
    ) -> Result<Vec<(Lemma, usize)>, LexiconError> {
        transitive(&self.lexicon, word, rel, max_depth)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn l(s: &str) -> Lemma {
        Lemma::new(s).unwrap()
    }

    fn index() -> LexiconIndex {
        let mut lex = Lexicon::default();
        for w in ["عِلْم", "عَلَم", "عالم", "يَد", "عَضْو"] {
            lex.add_word(l(w), &PosId::new("noun")).unwrap();
        }
        lex.add_relation(&l("يَد"), RelationType::Hypernym, &l("عَضْو")).unwrap();
        LexiconIndex::new(lex)
    }

    #[test]
    fn exact_lookup() {
        let found = index().lookup("يَد", false).unwrap();
        assert_eq!(found.profile.hypernyms, vec![l("عَضْو")]);
        assert!(found.candidates.is_empty());
        assert!(index().lookup("يد", false).is_err());
    }

    #[test]
    fn folded_lookup_picks_smallest_and_lists_candidates() {
        let found = index().lookup("علم", true).unwrap();
        let mut expected = vec![l("عِلْم"), l("عَلَم")];
        expected.sort();
        assert_eq!(found.profile.lemma, expected[0]);
        assert_eq!(found.candidates, expected);
    }

    #[test]
    fn unknown_word() {
        assert!(matches!(
            index().lookup("قطار", true),
            Err(LexiconError::WordNotFound { .. })
        ));
        assert!(matches!(
            index().lookup("", true),
            Err(LexiconError::InvalidLemma { .. })
        ));
    }

    #[test]
    fn prefix_search() {
        let idx = index();
        assert_eq!(idx.search_prefix("عَ", false), vec![&l("عَضْو"), &l("عَلَم")]);
        assert_eq!(idx.search_prefix("عل", true).len(), 2);
        assert_eq!(idx.search_prefix("ع", true).len(), 4);
        assert!(idx.search_prefix("ق", false).is_empty());
    }
}
