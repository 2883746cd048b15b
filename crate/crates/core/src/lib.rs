//! Core of an Arabic lexical ontology engine.
//!
//! Words are identified by their exact NFC orthography ([`Lemma`]), typed by a
//! configurable part-of-speech tree ([`PosTaxonomy`]) and linked by seven
//! semantic relations ([`RelationType`]). The [`Lexicon`] keeps every edge
//! together with its inverse; synsets are the connected components under
//! synonymy.
//!
//! This crate is `no_std` and only needs `alloc`. File formats, the HTTP
//! service and the CLI live in the `arlex` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod index;
mod lemma;
mod lexicon;
mod pos;
mod relation;
mod stats;
mod synset;
pub mod text;
mod traverse;
mod validate;

pub use error::{Endpoint, LemmaError, LexiconError};
pub use index::{LexiconIndex, Lookup, WordProfile};
pub use lemma::Lemma;
pub use lexicon::{Lexicon, RelationEdge};
pub use pos::{PartOfSpeech, PosId, PosTaxonomy, TaxonomyError};
pub use relation::{inverse_of, RelationType, UnknownRelation};
pub use stats::{stats, LinkCounts, Stats};
pub use synset::{compute_synsets, Synset, SynsetId, Synsets};
pub use text::{extract_unique, fold_diacritics, tokenize, TokenReport};
pub use traverse::transitive;
pub use validate::{validate, Severity, Violation, ViolationKind, ViolationSubject};
