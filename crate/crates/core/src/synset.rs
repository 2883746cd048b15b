use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::{Lemma, Lexicon, RelationType};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct SynsetId(pub u32);

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Synset {
    pub id: SynsetId,
    pub members: BTreeSet<Lemma>,
}

/// A partition of the word set into synonym components.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Synsets {
    sets: Vec<Synset>,
    by_word: BTreeMap<Lemma, SynsetId>,
}

impl Synsets {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn get(&self, id: SynsetId) -> Option<&Synset> {
        self.sets.get(id.0 as usize)
    }

    pub fn of(&self, lemma: &Lemma) -> Option<SynsetId> {
        self.by_word.get(lemma).copied()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Synset> {
        self.sets.iter()
    }
}

/// Connected components of the word set under Synonym edges.
///
/// Ids count up from 0 in order of each component's smallest lemma, so
/// identical lexicons always get identical ids. Association edges do not
/// merge synsets.
pub fn compute_synsets(lexicon: &Lexicon) -> Synsets {
    let mut by_word: BTreeMap<Lemma, SynsetId> = BTreeMap::new();
    let mut sets = Vec::new();
    let mut stack = Vec::new();
    for (start, _) in lexicon.words() {
        if by_word.contains_key(start) {
            continue;
        }
        let id = SynsetId(sets.len() as u32);
        let mut members = BTreeSet::new();
        by_word.insert(start.clone(), id);
        stack.push(start);
        while let Some(word) = stack.pop() {
            members.insert(word.clone());
            let Ok(next) = lexicon.neighbors(word, RelationType::Synonym) else {
                continue;
            };
            for n in next {
                if lexicon.contains_word(n) && !by_word.contains_key(n) {
                    by_word.insert(n.clone(), id);
                    stack.push(n);
                }
            }
        }
        sets.push(Synset { id, members });
    }
    Synsets { sets, by_word }
}
