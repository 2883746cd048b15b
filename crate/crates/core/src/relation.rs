use core::fmt;
use core::str::FromStr;

/// The seven semantic relations a word can have to another word.
///
/// An edge `(A, r, B)` reads "B is an r of A": `(يَد, Hypernym, عَضْو)` says
/// limb is a hypernym of hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum RelationType {
    Synonym,
    Antonym,
    Hypernym,
    Hyponym,
    Meronym,
    Holonym,
    Association,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown relation name {0:?}")]
pub struct UnknownRelation(pub alloc::string::String);

impl RelationType {
    pub const ALL: [RelationType; 7] = [
        RelationType::Synonym,
        RelationType::Antonym,
        RelationType::Hypernym,
        RelationType::Hyponym,
        RelationType::Meronym,
        RelationType::Holonym,
        RelationType::Association,
    ];

    pub fn inverse(self) -> RelationType {
        match self {
            RelationType::Synonym => RelationType::Synonym,
            RelationType::Antonym => RelationType::Antonym,
            RelationType::Association => RelationType::Association,
            RelationType::Hypernym => RelationType::Hyponym,
            RelationType::Hyponym => RelationType::Hypernym,
            RelationType::Meronym => RelationType::Holonym,
            RelationType::Holonym => RelationType::Meronym,
        }
    }

    pub fn is_symmetric(self) -> bool {
        self.inverse() == self
    }

    /// The direction in which a link is written once: hypernym and meronym
    /// for the two asymmetric pairs, the relation itself when symmetric.
    pub fn is_canonical(self) -> bool {
        !matches!(self, RelationType::Hyponym | RelationType::Holonym)
    }

    /// Lowercase ASCII keyword used in tabular files and the HTTP API.
    pub fn keyword(self) -> &'static str {
        match self {
            RelationType::Synonym => "synonym",
            RelationType::Antonym => "antonym",
            RelationType::Hypernym => "hypernym",
            RelationType::Hyponym => "hyponym",
            RelationType::Meronym => "meronym",
            RelationType::Holonym => "holonym",
            RelationType::Association => "association",
        }
    }

    pub(crate) fn slot(self) -> usize {
        self as usize
    }
}

/// Free-function form of [`RelationType::inverse`].
pub fn inverse_of(rel: RelationType) -> RelationType {
    rel.inverse()
}

impl fmt::Display for RelationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for RelationType {
    type Err = UnknownRelation;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelationType::ALL
            .into_iter()
            .find(|r| r.keyword() == s)
            .ok_or_else(|| UnknownRelation(s.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_pairs() {
        assert_eq!(inverse_of(RelationType::Hypernym), RelationType::Hyponym);
        assert_eq!(inverse_of(RelationType::Meronym), RelationType::Holonym);
        assert_eq!(inverse_of(RelationType::Synonym), RelationType::Synonym);
        assert_eq!(inverse_of(RelationType::Antonym), RelationType::Antonym);
        assert_eq!(inverse_of(RelationType::Association), RelationType::Association);
    }

    #[test]
    fn inverse_is_an_involution() {
        for rel in RelationType::ALL {
            assert_eq!(rel.inverse().inverse(), rel);
            // exactly one of a non-symmetric pair is canonical
            if !rel.is_symmetric() {
                assert_ne!(rel.is_canonical(), rel.inverse().is_canonical());
            }
        }
    }

    #[test]
    fn keywords_round_trip() {
        for rel in RelationType::ALL {
            assert_eq!(rel.keyword().parse::<RelationType>(), Ok(rel));
        }
        assert!("kindof".parse::<RelationType>().is_err());
        assert!("Synonym".parse::<RelationType>().is_err());
    }
}
