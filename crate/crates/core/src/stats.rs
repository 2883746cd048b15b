use crate::{compute_synsets, Lexicon, RelationType};

/// Number of underlying links per relation family. A symmetric link is one
/// unordered pair; a hypernym/hyponym or meronym/holonym link is counted
/// once under its canonical name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LinkCounts {
    pub synonym: usize,
    pub antonym: usize,
    pub hypernym: usize,
    pub meronym: usize,
    pub association: usize,
}

impl LinkCounts {
    pub fn total(&self) -> usize {
        self.synonym + self.antonym + self.hypernym + self.meronym + self.association
    }

    pub fn get(&self, rel: RelationType) -> usize {
        match rel {
            RelationType::Synonym => self.synonym,
            RelationType::Antonym => self.antonym,
            RelationType::Hypernym | RelationType::Hyponym => self.hypernym,
            RelationType::Meronym | RelationType::Holonym => self.meronym,
            RelationType::Association => self.association,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Stats {
    pub word_count: usize,
    pub synset_count: usize,
    pub links: LinkCounts,
}

pub fn stats(lexicon: &Lexicon) -> Stats {
    Stats {
        synset_count: compute_synsets(lexicon).len(),
        ..links_only(lexicon)
    }
}

/// Word and link counts with `synset_count` left at zero.
pub(crate) fn links_only(lexicon: &Lexicon) -> Stats {
    let count = |rel: RelationType| {
        lexicon
            .edges_of(rel)
            .filter(|(source, target)| !rel.is_symmetric() || source < target)
            .count()
    };
    Stats {
        word_count: lexicon.word_count(),
        synset_count: 0,
        links: LinkCounts {
            synonym: count(RelationType::Synonym),
            antonym: count(RelationType::Antonym),
            hypernym: count(RelationType::Hypernym),
            meronym: count(RelationType::Meronym),
            association: count(RelationType::Association),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Lemma, PosId};

    #[test]
    fn empty_lexicon_is_all_zero() {
        assert_eq!(stats(&Lexicon::default()), Stats::default());
    }

    #[test]
    fn each_link_counted_once() {
        let l = |s| Lemma::new(s).unwrap();
        let mut lex = Lexicon::default();
        for w in ["أ", "ب", "ج"] {
            lex.add_word(l(w), &PosId::new("noun")).unwrap();
        }
        lex.add_relation(&l("أ"), RelationType::Synonym, &l("ب")).unwrap();
        lex.add_relation(&l("ج"), RelationType::Hyponym, &l("أ")).unwrap();
        lex.add_relation(&l("ج"), RelationType::Holonym, &l("ب")).unwrap();
        let s = stats(&lex);
        assert_eq!(s.word_count, 3);
        assert_eq!(s.synset_count, 2);
        assert_eq!(
            s.links,
            LinkCounts {
                synonym: 1,
                hypernym: 1,
                meronym: 1,
                ..LinkCounts::default()
            }
        );
        assert_eq!(s.links.total() * 2, lex.edge_count());
    }
}
