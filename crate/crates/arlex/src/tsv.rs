//! The two-file tab-separated interchange format.
//!
//! `words.tsv` has the header `lemma<TAB>pos`, `relations.tsv` has
//! `source<TAB>relation<TAB>target`. Files are UTF-8 with LF line endings;
//! lines starting with `#` and empty lines are skipped. The writer emits each
//! link once: symmetric links with the smaller lemma first, hypernymy as
//! `child hypernym parent` and meronymy as `part meronym whole`.

use std::fmt;
use std::fmt::Write as _;

use arlex_core::{
    Lemma, Lexicon, LexiconError, PartOfSpeech, PosId, PosTaxonomy, RelationType, TaxonomyError, TokenReport,
};
use thiserror::Error;

pub const WORDS_HEADER: &str = "lemma\tpos";
pub const RELATIONS_HEADER: &str = "source\trelation\ttarget";
pub const TAXONOMY_HEADER: &str = "id\tlabel_ar\tlabel_en\tparent";
pub const FREQUENCY_HEADER: &str = "lemma\tfrequency";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsvFile {
    Words,
    Relations,
    Taxonomy,
}

impl fmt::Display for TsvFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TsvFile::Words => "words",
            TsvFile::Relations => "relations",
            TsvFile::Taxonomy => "taxonomy",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TsvError {
    #[error("{file} file: missing header, expected {expected:?}")]
    MissingHeader { file: TsvFile, expected: &'static str },
    #[error("{file} file line {line}: {reason}")]
    MalformedRow { file: TsvFile, line: usize, reason: String },
    #[error("relations file line {line}: unknown relation name {name:?}")]
    UnknownRelationName { line: usize, name: String },
    #[error("words file line {line}: unknown part of speech {pos}")]
    UnknownPos { line: usize, pos: PosId },
    #[error("relations file line {line}: {lemma} is not in the words file")]
    DanglingEndpoint { line: usize, lemma: Lemma },
    #[error("words file line {line}: {lemma} is listed as both {existing} and {requested}")]
    PosConflict {
        line: usize,
        lemma: Lemma,
        existing: PosId,
        requested: PosId,
    },
    #[error("taxonomy file: {0}")]
    Taxonomy(#[from] TaxonomyError),
}

impl TsvError {
    pub fn code(&self) -> &'static str {
        match self {
            TsvError::MissingHeader { .. } | TsvError::MalformedRow { .. } => "MalformedRow",
            TsvError::UnknownRelationName { .. } => "UnknownRelationName",
            TsvError::UnknownPos { .. } => "UnknownPos",
            TsvError::DanglingEndpoint { .. } => "DanglingEndpoint",
            TsvError::PosConflict { .. } => "PosConflict",
            TsvError::Taxonomy(_) => "InvalidTaxonomy",
        }
    }
}

/// Data rows of a file as `(line number, fields)`, after checking the header.
fn rows<'a>(
    text: &'a str,
    file: TsvFile,
    header: &'static str,
) -> Result<impl Iterator<Item = (usize, Vec<&'a str>)> + 'a, TsvError> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));
    match lines.next() {
        Some((_, first)) if first == header => {}
        _ => return Err(TsvError::MissingHeader { file, expected: header }),
    }
    Ok(lines.map(|(n, line)| (n, line.split('\t').collect())))
}

fn fields<const N: usize>(file: TsvFile, line: usize, fields: Vec<&str>) -> Result<[&str; N], TsvError> {
    let found = fields.len();
    fields.try_into().map_err(|_| TsvError::MalformedRow {
        file,
        line,
        reason: format!("expected {N} tab-separated fields, found {found}"),
    })
}

fn lemma(file: TsvFile, line: usize, text: &str) -> Result<Lemma, TsvError> {
    Lemma::new(text).map_err(|e| TsvError::MalformedRow {
        file,
        line,
        reason: e.to_string(),
    })
}

/// Builds a lexicon from the words and relations files.
///
/// Every relation row inserts both directions. Rows naming a word absent
/// from the words file are rejected rather than creating the word.
pub fn read_tsv(words: &str, relations: &str, taxonomy: PosTaxonomy) -> Result<Lexicon, TsvError> {
    let mut lexicon = Lexicon::new(taxonomy);
    for (line, row) in rows(words, TsvFile::Words, WORDS_HEADER)? {
        let [text, pos] = fields(TsvFile::Words, line, row)?;
        let word = lemma(TsvFile::Words, line, text)?;
        lexicon.add_word(word, &PosId::new(pos)).map_err(|e| match e {
            LexiconError::UnknownPos(pos) => TsvError::UnknownPos { line, pos },
            LexiconError::PosConflict {
                lemma,
                existing,
                requested,
            } => TsvError::PosConflict {
                line,
                lemma,
                existing,
                requested,
            },
            other => TsvError::MalformedRow {
                file: TsvFile::Words,
                line,
                reason: other.to_string(),
            },
        })?;
    }
    for (line, row) in rows(relations, TsvFile::Relations, RELATIONS_HEADER)? {
        let [source, name, target] = fields(TsvFile::Relations, line, row)?;
        let source = lemma(TsvFile::Relations, line, source)?;
        let target = lemma(TsvFile::Relations, line, target)?;
        let rel: RelationType = name.parse().map_err(|_| TsvError::UnknownRelationName {
            line,
            name: name.to_string(),
        })?;
        lexicon.add_relation(&source, rel, &target).map_err(|e| match e {
            LexiconError::WordNotFound { lemma, .. } => TsvError::DanglingEndpoint { line, lemma },
            other => TsvError::MalformedRow {
                file: TsvFile::Relations,
                line,
                reason: other.to_string(),
            },
        })?;
    }
    Ok(lexicon)
}

/// Reads with the default noun/verb/particle taxonomy.
pub fn read_tsv_default(words: &str, relations: &str) -> Result<Lexicon, TsvError> {
    read_tsv(words, relations, PosTaxonomy::default())
}

/// Serializes a lexicon to `(words, relations)` file contents.
pub fn write_tsv(lexicon: &Lexicon) -> (String, String) {
    let mut words = String::from(WORDS_HEADER);
    words.push('\n');
    for (lemma, pos) in lexicon.words() {
        let _ = writeln!(words, "{lemma}\t{pos}");
    }
    let mut relations = String::from(RELATIONS_HEADER);
    relations.push('\n');
    for edge in lexicon.edges() {
        let keep = if edge.rel.is_symmetric() {
            edge.source < edge.target
        } else {
            edge.rel.is_canonical()
        };
        if keep {
            let _ = writeln!(relations, "{}\t{}\t{}", edge.source, edge.rel, edge.target);
        }
    }
    (words, relations)
}

/// Reads a POS taxonomy: `id<TAB>label_ar<TAB>label_en<TAB>parent`, where an
/// empty parent marks a root.
pub fn read_taxonomy(text: &str) -> Result<PosTaxonomy, TsvError> {
    let mut classes = Vec::new();
    for (line, row) in rows(text, TsvFile::Taxonomy, TAXONOMY_HEADER)? {
        let [id, label_ar, label_en, parent] = fields(TsvFile::Taxonomy, line, row)?;
        if id.is_empty() || label_ar.is_empty() {
            return Err(TsvError::MalformedRow {
                file: TsvFile::Taxonomy,
                line,
                reason: "id and label_ar are required".into(),
            });
        }
        classes.push(PartOfSpeech {
            id: PosId::new(id),
            label_ar: label_ar.into(),
            label_en: label_en.into(),
            parent: (!parent.is_empty()).then(|| PosId::new(parent)),
        });
    }
    Ok(PosTaxonomy::new(classes)?)
}

pub fn write_taxonomy(taxonomy: &PosTaxonomy) -> String {
    let mut out = String::from(TAXONOMY_HEADER);
    out.push('\n');
    for class in taxonomy.iter() {
        let parent = class.parent.as_ref().map_or("", PosId::as_str);
        let _ = writeln!(out, "{}\t{}\t{}\t{}", class.id, class.label_ar, class.label_en, parent);
    }
    out
}

/// Token frequencies in first-occurrence order.
pub fn write_frequencies(report: &TokenReport) -> String {
    let mut out = String::from(FREQUENCY_HEADER);
    out.push('\n');
    for (lemma, n) in &report.unique {
        let _ = writeln!(out, "{lemma}\t{n}");
    }
    out
}

/// A seed words file assigning every distinct token the same POS.
pub fn write_seed_words(report: &TokenReport, pos: &PosId) -> String {
    let mut sorted: Vec<&Lemma> = report.unique.iter().map(|(l, _)| l).collect();
    sorted.sort();
    let mut out = String::from(WORDS_HEADER);
    out.push('\n');
    for lemma in sorted {
        let _ = writeln!(out, "{lemma}\t{pos}");
    }
    out
}
