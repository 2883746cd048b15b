use alloc::string::{String, ToString};
use core::fmt;
use core::ops::Deref;

use unicode_normalization::UnicodeNormalization;

use crate::{LemmaError, LexiconError};

/// The orthographic identity of a word.
///
/// Always NFC, nonempty, trimmed, free of control characters, and using only
/// single U+0020 spaces between the parts of a multiword expression.
/// Diacritics are significant: `يَد` and `يد` are different lemmas.
/// Ordering is binary code-point order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lemma(String);

impl Lemma {
    pub fn new(text: &str) -> Result<Lemma, LexiconError> {
        let normalized: String = text.nfc().collect();
        check(&normalized).map_err(|reason| LexiconError::InvalidLemma {
            text: text.to_string(),
            reason,
        })?;
        Ok(Lemma(normalized))
    }

    /// Caller guarantees `text` is NFC and passes [`check`].
    pub(crate) fn from_normalized(text: String) -> Lemma {
        debug_assert!(check(&text).is_ok());
        debug_assert!(unicode_normalization::is_nfc(&text));
        Lemma(text)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

pub(crate) fn check(text: &str) -> Result<(), LemmaError> {
    if text.is_empty() {
        return Err(LemmaError::Empty);
    }
    let mut prev_space = false;
    for (i, c) in text.char_indices() {
        if c.is_control() {
            return Err(LemmaError::ControlCharacter);
        }
        if c == ' ' {
            if i == 0 || i + 1 == text.len() {
                return Err(LemmaError::OuterWhitespace);
            }
            if prev_space {
                return Err(LemmaError::ConsecutiveSpaces);
            }
            prev_space = true;
            continue;
        }
        if c.is_whitespace() {
            return Err(LemmaError::ForeignWhitespace);
        }
        prev_space = false;
    }
    Ok(())
}

impl Deref for Lemma {
    type Target = str;

    fn deref(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Lemma {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl core::borrow::Borrow<str> for Lemma {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl TryFrom<&str> for Lemma {
    type Error = LexiconError;

    fn try_from(value: &str) -> Result<Self, Self::Error> {
        Lemma::new(value)
    }
}

impl TryFrom<String> for Lemma {
    type Error = LexiconError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Lemma::new(&value)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Lemma {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Lemma {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Lemma::new(&text).map_err(serde::de::Error::custom)
    }
}
