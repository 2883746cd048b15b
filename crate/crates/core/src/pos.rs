use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Identifier of a part-of-speech class, e.g. `noun`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct PosId(String);

impl PosId {
    pub fn new(id: impl Into<String>) -> PosId {
        PosId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PosId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for PosId {
    fn from(value: &str) -> Self {
        PosId::new(value)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PartOfSpeech {
    pub id: PosId,
    pub label_ar: String,
    pub label_en: String,
    pub parent: Option<PosId>,
}

impl PartOfSpeech {
    pub fn root(id: &str, label_ar: &str, label_en: &str) -> PartOfSpeech {
        PartOfSpeech {
            id: PosId::new(id),
            label_ar: label_ar.into(),
            label_en: label_en.into(),
            parent: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TaxonomyError {
    #[error("part of speech {0} is declared twice")]
    DuplicateId(PosId),
    #[error("part of speech {child} names unknown parent {parent}")]
    UnknownParent { child: PosId, parent: PosId },
    #[error("part of speech {0} is its own ancestor")]
    Cycle(PosId),
    #[error("arabic label {0:?} is used by more than one part of speech")]
    DuplicateLabel(String),
    #[error("taxonomy is empty")]
    Empty,
}

/// A forest of part-of-speech classes.
///
/// Arabic labels are unique because they double as RDF class names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PosTaxonomy {
    classes: BTreeMap<PosId, PartOfSpeech>,
}

impl PosTaxonomy {
    pub fn new(classes: impl IntoIterator<Item = PartOfSpeech>) -> Result<PosTaxonomy, TaxonomyError> {
        let mut map = BTreeMap::new();
        let mut labels = BTreeMap::new();
        for class in classes {
            if labels.insert(class.label_ar.clone(), class.id.clone()).is_some() {
                return Err(TaxonomyError::DuplicateLabel(class.label_ar));
            }
            if let Some(dup) = map.insert(class.id.clone(), class) {
                return Err(TaxonomyError::DuplicateId(dup.id));
            }
        }
        if map.is_empty() {
            return Err(TaxonomyError::Empty);
        }
        for class in map.values() {
            if let Some(parent) = &class.parent {
                if !map.contains_key(parent) {
                    return Err(TaxonomyError::UnknownParent {
                        child: class.id.clone(),
                        parent: parent.clone(),
                    });
                }
            }
        }
        // every chain of parents must end at a root within |classes| steps
        for class in map.values() {
            let mut cursor = class.parent.as_ref();
            let mut steps = 0;
            while let Some(parent) = cursor {
                steps += 1;
                if steps > map.len() {
                    return Err(TaxonomyError::Cycle(class.id.clone()));
                }
                cursor = map[parent].parent.as_ref();
            }
        }
        Ok(PosTaxonomy { classes: map })
    }

    /// noun (الاسم), verb (الفعل), particle (الحرف).
    pub fn tripartite() -> PosTaxonomy {
        PosTaxonomy::new([
            PartOfSpeech::root("noun", "الاسم", "noun"),
            PartOfSpeech::root("verb", "الفعل", "verb"),
            PartOfSpeech::root("particle", "الحرف", "particle"),
        ])
        .expect("default taxonomy is a valid forest")
    }

    pub fn get(&self, id: &PosId) -> Option<&PartOfSpeech> {
        self.classes.get(id)
    }

    pub fn contains(&self, id: &PosId) -> bool {
        self.classes.contains_key(id)
    }

    pub fn by_label_ar(&self, label: &str) -> Option<&PartOfSpeech> {
        self.classes.values().find(|c| c.label_ar == label)
    }

    pub fn iter(&self) -> impl Iterator<Item = &PartOfSpeech> {
        self.classes.values()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Ancestors of `id`, nearest first.
    pub fn ancestors(&self, id: &PosId) -> Vec<&PartOfSpeech> {
        let mut out = Vec::new();
        let mut cursor = self.get(id).and_then(|c| c.parent.as_ref());
        while let Some(parent) = cursor {
            let class = &self.classes[parent];
            out.push(class);
            cursor = class.parent.as_ref();
        }
        out
    }

    /// Adds a parentless class unless one with the same Arabic label exists.
    /// Returns the id of the class carrying `label_ar`.
    pub fn register_leaf(&mut self, label_ar: &str) -> PosId {
        if let Some(existing) = self.by_label_ar(label_ar) {
            return existing.id.clone();
        }
        let mut id = PosId::new(label_ar);
        let mut n = 1;
        while self.classes.contains_key(&id) {
            n += 1;
            id = PosId::new(alloc::format!("{label_ar}-{n}"));
        }
        self.classes.insert(
            id.clone(),
            PartOfSpeech {
                id: id.clone(),
                label_ar: label_ar.into(),
                label_en: label_ar.into(),
                parent: None,
            },
        );
        id
    }
}

impl Default for PosTaxonomy {
    fn default() -> Self {
        PosTaxonomy::tripartite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn child(id: &str, parent: &str) -> PartOfSpeech {
        PartOfSpeech {
            id: PosId::new(id),
            label_ar: id.into(),
            label_en: id.into(),
            parent: Some(PosId::new(parent)),
        }
    }

    #[test]
    fn default_has_three_roots() {
        let t = PosTaxonomy::default();
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|c| c.parent.is_none()));
        assert_eq!(t.by_label_ar("الاسم").unwrap().id.as_str(), "noun");
    }

    #[test]
    fn rejects_cycles_and_unknown_parents() {
        assert_eq!(
            PosTaxonomy::new([child("a", "b"), child("b", "a")]),
            Err(TaxonomyError::Cycle(PosId::new("a")))
        );
        assert!(matches!(
            PosTaxonomy::new([child("a", "zzz")]),
            Err(TaxonomyError::UnknownParent { .. })
        ));
        assert_eq!(PosTaxonomy::new([]), Err(TaxonomyError::Empty));
    }

    #[test]
    fn ancestors_walk_to_root() {
        let t = PosTaxonomy::new([
            PartOfSpeech::root("noun", "الاسم", "noun"),
            child("proper", "noun"),
            child("place", "proper"),
        ])
        .unwrap();
        let ids: Vec<&str> = t
            .ancestors(&PosId::new("place"))
            .iter()
            .map(|c| c.id.as_str())
            .collect();
        assert_eq!(ids, ["proper", "noun"]);
    }

    #[test]
    fn register_leaf_reuses_labels() {
        let mut t = PosTaxonomy::default();
        assert_eq!(t.register_leaf("الاسم").as_str(), "noun");
        let id = t.register_leaf("الصفة");
        assert_eq!(t.len(), 4);
        assert_eq!(t.register_leaf("الصفة"), id);
    }
}
