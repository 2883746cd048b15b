use alloc::string::String;
use core::fmt;

use crate::{Lemma, PosId, RelationEdge, RelationType};

/// Why a string was rejected as a [`Lemma`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum LemmaError {
    #[error("lemma is empty")]
    Empty,
    #[error("lemma has leading or trailing whitespace")]
    OuterWhitespace,
    #[error("lemma contains consecutive spaces")]
    ConsecutiveSpaces,
    #[error("lemma contains a control character")]
    ControlCharacter,
    #[error("lemma contains whitespace other than U+0020")]
    ForeignWhitespace,
}

/// Which side of an edge an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Source,
    Target,
    /// The word was addressed on its own, not as part of an edge.
    Word,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Endpoint::Source => "source",
            Endpoint::Target => "target",
            Endpoint::Word => "word",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexiconError {
    #[error("invalid lemma {text:?}: {reason}")]
    InvalidLemma { text: String, reason: LemmaError },
    #[error("{lemma} already has part of speech {existing}, cannot change it to {requested}")]
    PosConflict {
        lemma: Lemma,
        existing: PosId,
        requested: PosId,
    },
    #[error("unknown part of speech {0}")]
    UnknownPos(PosId),
    #[error("{endpoint} word {lemma} not found")]
    WordNotFound { lemma: Lemma, endpoint: Endpoint },
    #[error("{0} cannot be related to itself")]
    SelfRelation(Lemma),
    #[error("no {} edge from {} to {}", .0.rel, .0.source, .0.target)]
    EdgeNotFound(RelationEdge),
    #[error("{0} is symmetric and has no transitive chain")]
    UnsupportedRelation(RelationType),
}

impl LexiconError {
    /// Machine-readable error name, shared with the HTTP API.
    pub fn code(&self) -> &'static str {
        match self {
            LexiconError::InvalidLemma { .. } => "InvalidLemma",
            LexiconError::PosConflict { .. } => "PosConflict",
            LexiconError::UnknownPos(_) => "UnknownPos",
            LexiconError::WordNotFound { .. } => "WordNotFound",
            LexiconError::SelfRelation(_) => "SelfRelation",
            LexiconError::EdgeNotFound(_) => "EdgeNotFound",
            LexiconError::UnsupportedRelation(_) => "UnsupportedRelation",
        }
    }

    /// The lemma, POS or relation the error is about.
    pub fn subject(&self) -> String {
        use alloc::string::ToString;
        match self {
            LexiconError::InvalidLemma { text, .. } => text.clone(),
            LexiconError::PosConflict { lemma, .. } => lemma.to_string(),
            LexiconError::UnknownPos(pos) => pos.to_string(),
            LexiconError::WordNotFound { lemma, .. } => lemma.to_string(),
            LexiconError::SelfRelation(lemma) => lemma.to_string(),
            LexiconError::EdgeNotFound(edge) => edge.source.to_string(),
            LexiconError::UnsupportedRelation(rel) => rel.to_string(),
        }
    }
}
