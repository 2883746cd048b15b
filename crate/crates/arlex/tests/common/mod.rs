#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use arlex::synthetic::synthetic_lemma;
use arlex::tsv::read_tsv_default;
use arlex_core::{Lemma, Lexicon, PartOfSpeech, PosId, PosTaxonomy, RelationType};
use rand::Rng;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn fixture_dir() -> PathBuf {
    data_dir().join("fixture")
}

pub fn fixture_text() -> (String, String) {
    let dir = fixture_dir();
    (
        std::fs::read_to_string(dir.join("words.tsv")).unwrap(),
        std::fs::read_to_string(dir.join("relations.tsv")).unwrap(),
    )
}

pub fn fixture() -> Lexicon {
    let (w, r) = fixture_text();
    read_tsv_default(&w, &r).unwrap()
}

pub fn snippet() -> String {
    std::fs::read_to_string(fixture_dir().join("snippet.rdf")).unwrap()
}

pub fn l(s: &str) -> Lemma {
    Lemma::new(s).unwrap()
}

/// A taxonomy with nesting, used to exercise non-default POS values.
pub fn nested_taxonomy() -> PosTaxonomy {
    let child = |id: &str, ar: &str, en: &str, parent: &str| PartOfSpeech {
        id: PosId::new(id),
        label_ar: ar.into(),
        label_en: en.into(),
        parent: Some(PosId::new(parent)),
    };
    PosTaxonomy::new([
        PartOfSpeech::root("noun", "الاسم", "noun"),
        PartOfSpeech::root("verb", "الفعل", "verb"),
        PartOfSpeech::root("particle", "الحرف", "particle"),
        child("proper", "اسم علم", "proper noun", "noun"),
        child("past", "الفعل الماضي", "past verb", "verb"),
    ])
    .unwrap()
}

const ODD: [&str; 8] = [" ", "%", "#", "&", "<", "\"", "ـ", "\u{0651}"];

/// A word that is sometimes multiword or carries characters needing escape.
pub fn random_lemma<R: Rng>(rng: &mut R, i: usize) -> Lemma {
    let base = synthetic_lemma(i).into_string();
    if rng.random_bool(0.8) {
        return Lemma::new(&base).unwrap();
    }
    let odd = ODD[rng.random_range(0..ODD.len())];
    let other = synthetic_lemma(rng.random_range(0..50)).into_string();
    Lemma::new(&format!("{base}{odd}{other}")).unwrap_or_else(|_| Lemma::new(&base).unwrap())
}

/// Random valid lexicon with up to `max_words` words over the nested taxonomy.
pub fn random_lexicon<R: Rng>(rng: &mut R, max_words: usize) -> Lexicon {
    let tax = nested_taxonomy();
    let pos: Vec<PosId> = tax.iter().map(|c| c.id.clone()).collect();
    let mut lex = Lexicon::new(tax);
    let n = rng.random_range(0..=max_words);
    let mut words = Vec::new();
    for i in 0..n {
        let w = random_lemma(rng, i);
        if lex.contains_word(&w) {
            continue;
        }
        lex.add_word(w.clone(), &pos[rng.random_range(0..pos.len())]).unwrap();
        words.push(w);
    }
    if words.len() >= 2 {
        for _ in 0..rng.random_range(0..3 * words.len()) {
            let a = &words[rng.random_range(0..words.len())];
            let b = &words[rng.random_range(0..words.len())];
            let rel = RelationType::ALL[rng.random_range(0..7)];
            if a != b {
                lex.add_relation(a, rel, b).unwrap();
            }
        }
    }
    lex
}

/// Synonym components by union-find, independent of the library.
pub fn union_find_components(lex: &Lexicon) -> BTreeSet<BTreeSet<Lemma>> {
    let words: Vec<Lemma> = lex.words().map(|(w, _)| w.clone()).collect();
    let at: BTreeMap<&Lemma, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in lex.edges_of(RelationType::Synonym) {
        let (ra, rb) = (find(&mut parent, at[a]), find(&mut parent, at[b]));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<Lemma>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().insert(w.clone());
    }
    groups.into_values().collect()
}
