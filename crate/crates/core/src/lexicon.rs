use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::{Endpoint, Lemma, LexiconError, PartOfSpeech, PosId, PosTaxonomy, RelationType};

/// A directed labeled edge: `target` is a `rel` of `source`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RelationEdge {
    pub source: Lemma,
    #[cfg_attr(feature = "serde", serde(rename = "relation"))]
    pub rel: RelationType,
    pub target: Lemma,
}

impl RelationEdge {
    pub fn new(source: Lemma, rel: RelationType, target: Lemma) -> RelationEdge {
        RelationEdge { source, rel, target }
    }

    pub fn inverse(&self) -> RelationEdge {
        RelationEdge {
            source: self.target.clone(),
            rel: self.rel.inverse(),
            target: self.source.clone(),
        }
    }
}

static EMPTY: BTreeSet<Lemma> = BTreeSet::new();

#[derive(Clone, Debug, Default)]
struct Adjacency([BTreeSet<Lemma>; 7]);

/// The word-relation graph.
///
/// Every mutation through [`add_relation`](Lexicon::add_relation) and
/// [`remove_relation`](Lexicon::remove_relation) keeps the graph closed under
/// inversion. [`insert_directed_edge`](Lexicon::insert_directed_edge) exists
/// for importers that must represent files as they are before repair.
#[derive(Clone, Debug)]
pub struct Lexicon {
    taxonomy: PosTaxonomy,
    words: BTreeMap<Lemma, PosId>,
    out: BTreeMap<Lemma, Adjacency>,
}

impl Lexicon {
    pub fn new(taxonomy: PosTaxonomy) -> Lexicon {
        Lexicon {
            taxonomy,
            words: BTreeMap::new(),
            out: BTreeMap::new(),
        }
    }

    pub fn taxonomy(&self) -> &PosTaxonomy {
        &self.taxonomy
    }

    /// Registers an unknown Arabic POS label as a parentless class.
    pub fn register_pos_label(&mut self, label_ar: &str) -> PosId {
        self.taxonomy.register_leaf(label_ar)
    }

    pub fn pos_class(&self, lemma: &Lemma) -> Option<&PartOfSpeech> {
        self.words.get(lemma).and_then(|id| self.taxonomy.get(id))
    }

    /// Adds a word. Re-adding with the same POS is a no-op.
    pub fn add_word(&mut self, lemma: Lemma, pos: &PosId) -> Result<(), LexiconError> {
        if !self.taxonomy.contains(pos) {
            return Err(LexiconError::UnknownPos(pos.clone()));
        }
        match self.words.get(&lemma) {
            Some(existing) if existing == pos => Ok(()),
            Some(existing) => Err(LexiconError::PosConflict {
                lemma,
                existing: existing.clone(),
                requested: pos.clone(),
            }),
            None => {
                self.words.insert(lemma, pos.clone());
                Ok(())
            }
        }
    }

    /// Adds `(source, rel, target)` and its inverse. Idempotent.
    pub fn add_relation(&mut self, source: &Lemma, rel: RelationType, target: &Lemma) -> Result<(), LexiconError> {
        self.require(source, Endpoint::Source)?;
        self.require(target, Endpoint::Target)?;
        if source == target {
            return Err(LexiconError::SelfRelation(source.clone()));
        }
        self.insert_directed_edge(source.clone(), rel, target.clone());
        self.insert_directed_edge(target.clone(), rel.inverse(), source.clone());
        Ok(())
    }

    /// Removes `(source, rel, target)` together with its inverse.
    pub fn remove_relation(&mut self, source: &Lemma, rel: RelationType, target: &Lemma) -> Result<(), LexiconError> {
        if !self.contains_edge(source, rel, target) {
            return Err(LexiconError::EdgeNotFound(RelationEdge::new(
                source.clone(),
                rel,
                target.clone(),
            )));
        }
        self.remove_directed_edge(source, rel, target);
        self.remove_directed_edge(target, rel.inverse(), source);
        Ok(())
    }

    /// Inserts one directed edge with no checks and without its inverse.
    ///
    /// Only importers should call this; follow up with
    /// [`repair_inverses`](Lexicon::repair_inverses) or [`crate::validate`].
    pub fn insert_directed_edge(&mut self, source: Lemma, rel: RelationType, target: Lemma) -> bool {
        self.out.entry(source).or_default().0[rel.slot()].insert(target)
    }

    fn remove_directed_edge(&mut self, source: &Lemma, rel: RelationType, target: &Lemma) -> bool {
        match self.out.get_mut(source) {
            Some(adj) => {
                let removed = adj.0[rel.slot()].remove(target);
                if adj.0.iter().all(BTreeSet::is_empty) {
                    self.out.remove(source);
                }
                removed
            }
            None => false,
        }
    }

    /// Adds every missing inverse edge and returns the edges it added.
    pub fn repair_inverses(&mut self) -> Vec<RelationEdge> {
        let missing: Vec<RelationEdge> = self
            .edges()
            .filter(|e| !self.contains_edge(&e.target, e.rel.inverse(), &e.source))
            .map(|e| e.inverse())
            .collect();
        for edge in &missing {
            self.insert_directed_edge(edge.source.clone(), edge.rel, edge.target.clone());
        }
        missing
    }

    fn require(&self, lemma: &Lemma, endpoint: Endpoint) -> Result<(), LexiconError> {
        if self.words.contains_key(lemma) {
            Ok(())
        } else {
            Err(LexiconError::WordNotFound {
                lemma: lemma.clone(),
                endpoint,
            })
        }
    }

    pub fn contains_word(&self, lemma: &Lemma) -> bool {
        self.words.contains_key(lemma)
    }

    pub fn contains_edge(&self, source: &Lemma, rel: RelationType, target: &Lemma) -> bool {
        self.out
            .get(source)
            .is_some_and(|adj| adj.0[rel.slot()].contains(target))
    }

    pub fn pos_of(&self, lemma: &Lemma) -> Option<&PosId> {
        self.words.get(lemma)
    }

    /// Targets of the outgoing `rel` edges of `word`, in lemma order.
    pub fn neighbors(&self, word: &Lemma, rel: RelationType) -> Result<&BTreeSet<Lemma>, LexiconError> {
        self.require(word, Endpoint::Word)?;
        Ok(self.out.get(word).map_or(&EMPTY, |adj| &adj.0[rel.slot()]))
    }

    /// Words with their POS, in lemma order.
    pub fn words(&self) -> impl Iterator<Item = (&Lemma, &PosId)> {
        self.words.iter()
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// All directed edges, ordered by source, relation, target.
    pub fn edges(&self) -> impl Iterator<Item = RelationEdge> + '_ {
        self.out.iter().flat_map(|(source, adj)| {
            RelationType::ALL.into_iter().flat_map(move |rel| {
                adj.0[rel.slot()]
                    .iter()
                    .map(move |target| RelationEdge::new(source.clone(), rel, target.clone()))
            })
        })
    }

    /// Directed edges of one relation without cloning lemmas.
    pub fn edges_of(&self, rel: RelationType) -> impl Iterator<Item = (&Lemma, &Lemma)> {
        self.out
            .iter()
            .flat_map(move |(source, adj)| adj.0[rel.slot()].iter().map(move |t| (source, t)))
    }

    pub fn edge_count(&self) -> usize {
        self.out
            .values()
            .map(|adj| adj.0.iter().map(BTreeSet::len).sum::<usize>())
            .sum()
    }
}

impl Default for Lexicon {
    fn default() -> Self {
        Lexicon::new(PosTaxonomy::default())
    }
}

/// Graph equality: same taxonomy, same words with the same POS, same edges.
impl PartialEq for Lexicon {
    fn eq(&self, other: &Self) -> bool {
        self.taxonomy == other.taxonomy
            && self.words == other.words
            && self.edge_count() == other.edge_count()
            && self.edges().eq(other.edges())
    }
}

impl Eq for Lexicon {}
