//! RDF/XML emission and parsing.
//!
//! Each word becomes one `rdf:Description` whose `rdf:about` is the
//! namespace followed by the IRI-encoded lemma. The word's part of speech is
//! an `rdf:type` pointing at the namespace plus the class's Arabic label, and
//! every outgoing edge is an empty property element with `rdf:resource`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use arlex_core::{validate, Lemma, Lexicon, PosId, PosTaxonomy, RelationEdge, RelationType, Violation};
use quick_xml::events::{BytesDecl, BytesEnd, BytesStart, Event};
use quick_xml::name::{Namespace, ResolveResult};
use quick_xml::{NsReader, Writer};
use thiserror::Error;

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const DEFAULT_NAMESPACE: &str = "http://www.azhary.org#";

/// Namespace and relation-to-property table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdfMapping {
    pub namespace: String,
    properties: [(RelationType, String); 7],
    /// POS given to resources that carry no usable `rdf:type`.
    pub untyped_pos: PosId,
}

impl Default for RdfMapping {
    fn default() -> Self {
        RdfMapping::with_namespace(DEFAULT_NAMESPACE)
    }
}

impl RdfMapping {
    pub fn with_namespace(namespace: &str) -> RdfMapping {
        let p = |rel, name: &str| (rel, name.to_string());
        RdfMapping {
            namespace: namespace.into(),
            properties: [
                p(RelationType::Synonym, "means"),
                p(RelationType::Antonym, "anti"),
                p(RelationType::Hypernym, "has_parent"),
                p(RelationType::Hyponym, "has_child"),
                p(RelationType::Meronym, "part_of"),
                p(RelationType::Holonym, "has_a"),
                p(RelationType::Association, "assoc"),
            ],
            untyped_pos: PosId::new("noun"),
        }
    }

    /// Renames the property used for `rel`.
    pub fn set_property(&mut self, rel: RelationType, name: &str) {
        for entry in &mut self.properties {
            if entry.0 == rel {
                entry.1 = name.into();
            }
        }
    }

    pub fn property(&self, rel: RelationType) -> &str {
        &self
            .properties
            .iter()
            .find(|(r, _)| *r == rel)
            .expect("table covers every relation")
            .1
    }

    pub fn relation(&self, property: &str) -> Option<RelationType> {
        self.properties.iter().find(|(_, p)| p == property).map(|(r, _)| *r)
    }

    pub fn iri(&self, local: &str) -> String {
        format!("{}{}", self.namespace, encode_iri_fragment(local))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RdfError {
    #[error("XML syntax error at byte {position}: {message}")]
    XmlSyntax { position: u64, message: String },
    #[error("namespace {0} is not declared")]
    MissingNamespace(String),
    #[error("document root is not rdf:RDF")]
    NotRdf,
    #[error("lexicon has {} validation error(s)", .0.len())]
    InvalidLexicon(Vec<Violation>),
}

impl RdfError {
    pub fn code(&self) -> &'static str {
        match self {
            RdfError::XmlSyntax { .. } | RdfError::NotRdf => "XmlSyntax",
            RdfError::MissingNamespace(_) => "MissingNamespace",
            RdfError::InvalidLexicon(_) => "InvalidLexicon",
        }
    }
}

/// Problems tolerated while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RdfWarning {
    /// The inverse of this edge was absent and has been added.
    MissingInverse(RelationEdge),
    UnknownProperty {
        subject: Lemma,
        property: String,
    },
    MissingType(Lemma),
    ConflictingType {
        subject: Lemma,
        kept: PosId,
        ignored: PosId,
    },
    /// Referenced as a target but never described; typed with the fallback POS.
    UndescribedResource(Lemma),
    /// A resource outside the lexicon namespace; ignored.
    ForeignResource(String),
    SelfLoop(Lemma),
    InvalidLemma(String),
    UnsupportedElement(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedRdf {
    pub lexicon: Lexicon,
    pub warnings: Vec<RdfWarning>,
}

/// Percent-encodes what may not appear raw in an IRI fragment. Arabic text
/// stays as is; spaces become `%20`.
pub fn encode_iri_fragment(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        let raw = if c.is_ascii() {
            c.is_ascii_alphanumeric() || "-._~!$&'()*+,;=:@/?".contains(c)
        } else {
            is_ucschar(c)
        };
        if raw {
            out.push(c);
        } else {
            let mut buf = [0u8; 4];
            for b in c.encode_utf8(&mut buf).bytes() {
                let _ = write!(out, "%{b:02X}");
            }
        }
    }
    out
}

fn is_ucschar(c: char) -> bool {
    let u = c as u32;
    match u {
        0xA0..=0xD7FF | 0xF900..=0xFDCF | 0xFDF0..=0xFFEF => true,
        0x10000..=0xDFFFD | 0xE1000..=0xEFFFD => (u & 0xFFFF) <= 0xFFFD,
        _ => false,
    }
}

/// Serializes a lexicon. Fails if [`validate`] reports errors.
pub fn emit_rdf(lexicon: &Lexicon, mapping: &RdfMapping) -> Result<String, RdfError> {
    let errors: Vec<Violation> = validate(lexicon).into_iter().filter(Violation::is_error).collect();
    if !errors.is_empty() {
        return Err(RdfError::InvalidLexicon(errors));
    }

    let mut writer = Writer::new_with_indent(Vec::new(), b' ', 2);
    let ok = "writing to a Vec cannot fail";
    writer
        .write_event(Event::Decl(BytesDecl::new("1.0", Some("UTF-8"), None)))
        .expect(ok);
    let root =
        BytesStart::new("rdf:RDF").with_attributes([("xmlns:rdf", RDF_NS), ("xmlns:a", mapping.namespace.as_str())]);
    writer.write_event(Event::Start(root)).expect(ok);
    for (lemma, pos) in lexicon.words() {
        let about = mapping.iri(lemma);
        let desc = BytesStart::new("rdf:Description").with_attributes([("rdf:about", about.as_str())]);
        writer.write_event(Event::Start(desc)).expect(ok);
        let class = lexicon
            .taxonomy()
            .get(pos)
            .map_or(pos.as_str(), |c| c.label_ar.as_str());
        let class_iri = mapping.iri(class);
        writer
            .write_event(Event::Empty(
                BytesStart::new("rdf:type").with_attributes([("rdf:resource", class_iri.as_str())]),
            ))
            .expect(ok);
        for rel in RelationType::ALL {
            let name = format!("a:{}", mapping.property(rel));
            for target in lexicon.neighbors(lemma, rel).expect("word exists") {
                let iri = mapping.iri(target);
                writer
                    .write_event(Event::Empty(
                        BytesStart::new(name.as_str()).with_attributes([("rdf:resource", iri.as_str())]),
                    ))
                    .expect(ok);
            }
        }
        writer
            .write_event(Event::End(BytesEnd::new("rdf:Description")))
            .expect(ok);
    }
    writer.write_event(Event::End(BytesEnd::new("rdf:RDF"))).expect(ok);
    let mut text = String::from_utf8(writer.into_inner()).expect("writer only receives UTF-8");
    text.push('\n');
    Ok(text)
}

struct Collector<'m> {
    mapping: &'m RdfMapping,
    lexicon: Lexicon,
    types: BTreeMap<Lemma, PosId>,
    targets: Vec<RelationEdge>,
    warnings: Vec<RdfWarning>,
}

impl Collector<'_> {
    fn lemma_of(&mut self, iri: &str) -> Option<Lemma> {
        let Some(fragment) = iri.strip_prefix(self.mapping.namespace.as_str()) else {
            self.warnings.push(RdfWarning::ForeignResource(iri.to_string()));
            return None;
        };
        let decoded = percent_encoding::percent_decode_str(fragment).decode_utf8_lossy();
        match Lemma::new(&decoded) {
            Ok(lemma) => Some(lemma),
            Err(_) => {
                self.warnings.push(RdfWarning::InvalidLemma(iri.to_string()));
                None
            }
        }
    }

    fn describe(&mut self, subject: &Lemma) {
        self.types.entry(subject.clone()).or_insert_with(|| PosId::new(""));
    }

    fn set_type(&mut self, subject: &Lemma, class_iri: &str) {
        let Some(fragment) = class_iri.strip_prefix(self.mapping.namespace.as_str()) else {
            self.warnings.push(RdfWarning::ForeignResource(class_iri.to_string()));
            return;
        };
        let label = percent_encoding::percent_decode_str(fragment).decode_utf8_lossy();
        let pos = self.lexicon.register_pos_label(&label);
        let slot = self.types.entry(subject.clone()).or_insert_with(|| PosId::new(""));
        if slot.as_str().is_empty() {
            *slot = pos;
        } else if *slot != pos {
            self.warnings.push(RdfWarning::ConflictingType {
                subject: subject.clone(),
                kept: slot.clone(),
                ignored: pos,
            });
        }
    }

    fn property(&mut self, subject: &Lemma, ns: &Ns, local: &str, resource: Option<&str>) {
        let in_rdf = *ns == Ns::Rdf;
        let in_lexicon = *ns == Ns::Lexicon;
        let Some(resource) = resource else {
            self.warnings.push(RdfWarning::UnsupportedElement(local.to_string()));
            return;
        };
        if in_rdf && local == "type" {
            self.set_type(subject, resource);
            return;
        }
        let rel = if in_lexicon { self.mapping.relation(local) } else { None };
        let Some(rel) = rel else {
            self.warnings.push(RdfWarning::UnknownProperty {
                subject: subject.clone(),
                property: local.to_string(),
            });
            return;
        };
        let Some(target) = self.lemma_of(resource) else {
            return;
        };
        if &target == subject {
            self.warnings.push(RdfWarning::SelfLoop(target));
            return;
        }
        self.targets.push(RelationEdge::new(subject.clone(), rel, target));
    }

    fn finish(mut self) -> ParsedRdf {
        let fallback = self.mapping.untyped_pos.clone();
        let fallback = if self.lexicon.taxonomy().contains(&fallback) {
            fallback
        } else {
            self.lexicon
                .taxonomy()
                .iter()
                .next()
                .expect("taxonomy is nonempty")
                .id
                .clone()
        };
        for (lemma, pos) in std::mem::take(&mut self.types) {
            let pos = if pos.as_str().is_empty() {
                self.warnings.push(RdfWarning::MissingType(lemma.clone()));
                fallback.clone()
            } else {
                pos
            };
            self.lexicon
                .add_word(lemma, &pos)
                .expect("each word is added once with a known POS");
        }
        for edge in std::mem::take(&mut self.targets) {
            if !self.lexicon.contains_word(&edge.target) {
                self.warnings.push(RdfWarning::UndescribedResource(edge.target.clone()));
                self.lexicon
                    .add_word(edge.target.clone(), &fallback)
                    .expect("fallback POS is in the taxonomy");
            }
            self.lexicon.insert_directed_edge(edge.source, edge.rel, edge.target);
        }
        for added in self.lexicon.repair_inverses() {
            self.warnings.push(RdfWarning::MissingInverse(added.inverse()));
        }
        ParsedRdf {
            lexicon: self.lexicon,
            warnings: self.warnings,
        }
    }
}

/// Parses an RDF/XML document. Missing inverse edges are added and
/// reported; unknown properties and untyped resources become warnings.
///
/// The lexicon namespace must be declared on the root element.
pub fn parse_rdf(document: &str, mapping: &RdfMapping, taxonomy: PosTaxonomy) -> Result<ParsedRdf, RdfError> {
    let mut reader = NsReader::from_str(document);
    reader.config_mut().trim_text(true);
    let syntax = |reader: &NsReader<&[u8]>, message: String| RdfError::XmlSyntax {
        position: reader.buffer_position(),
        message,
    };

    let mut collector = Collector {
        mapping,
        lexicon: Lexicon::new(taxonomy),
        types: BTreeMap::new(),
        targets: Vec::new(),
        warnings: Vec::new(),
    };

    // depth 0: before root, 1: inside rdf:RDF, 2: inside a description
    let mut depth = 0;
    let mut subject: Option<Lemma> = None;
    let mut closed = false;
    loop {
        let (ns, event) = match reader.read_resolved_event() {
            Ok(pair) => pair,
            Err(e) => {
                let message = e.to_string();
                return Err(syntax(&reader, message));
            }
        };
        let ns = classify(&ns, mapping);
        match event {
            Event::Eof => break,
            Event::Start(ref e) | Event::Empty(ref e) => {
                let is_empty = matches!(event, Event::Empty(_));
                let local = String::from_utf8_lossy(e.local_name().as_ref()).into_owned();
                if closed {
                    return Err(syntax(&reader, "content after the root element".into()));
                }
                let mut about = None;
                let mut resource = None;
                let mut declares_lexicon = false;
                for attr in e.attributes() {
                    let attr = attr.map_err(|err| syntax(&reader, err.to_string()))?;
                    let value = attr.unescape_value().map_err(|err| syntax(&reader, err.to_string()))?;
                    if attr.key.as_namespace_binding().is_some() {
                        declares_lexicon |= value == mapping.namespace;
                        continue;
                    }
                    let (attr_ns, attr_local) = reader.resolve_attribute(attr.key);
                    let attr_ns = classify(&attr_ns, mapping);
                    if let Ns::Unknown(prefix) = attr_ns {
                        return Err(RdfError::MissingNamespace(prefix));
                    }
                    match (attr_ns == Ns::Rdf, attr_local.as_ref()) {
                        (true, b"about") => about = Some(value.into_owned()),
                        (true, b"resource") => resource = Some(value.into_owned()),
                        _ => {}
                    }
                }
                if let Ns::Unknown(prefix) = &ns {
                    return Err(RdfError::MissingNamespace(prefix.clone()));
                }
                let in_rdf = ns == Ns::Rdf;
                match depth {
                    0 => {
                        if !(in_rdf && local == "RDF") {
                            return Err(RdfError::NotRdf);
                        }
                        if !declares_lexicon {
                            return Err(RdfError::MissingNamespace(mapping.namespace.clone()));
                        }
                        if is_empty {
                            closed = true;
                        } else {
                            depth = 1;
                        }
                    }
                    1 => {
                        let described = match (in_rdf && local == "Description", about) {
                            (true, Some(iri)) => collector.lemma_of(&iri),
                            _ => {
                                collector.warnings.push(RdfWarning::UnsupportedElement(local.clone()));
                                None
                            }
                        };
                        if let Some(lemma) = &described {
                            collector.describe(lemma);
                        }
                        if !is_empty {
                            match described {
                                Some(lemma) => {
                                    subject = Some(lemma);
                                    depth = 2;
                                }
                                None => skip(&mut reader, e.name().as_ref().to_vec())?,
                            }
                        }
                    }
                    _ => {
                        let current = subject.clone().expect("depth 2 has a subject");
                        collector.property(&current, &ns, &local, resource.as_deref());
                        if !is_empty {
                            skip(&mut reader, e.name().as_ref().to_vec())?;
                        }
                    }
                }
            }
            Event::End(_) => match depth {
                2 => {
                    subject = None;
                    depth = 1;
                }
                1 => {
                    depth = 0;
                    closed = true;
                }
                _ => return Err(syntax(&reader, "unexpected closing tag".into())),
            },
            Event::Text(ref t) if depth == 2 || depth == 1 => {
                let text = t.unescape().map_err(|err| syntax(&reader, err.to_string()))?;
                if !text.trim().is_empty() {
                    collector.warnings.push(RdfWarning::UnsupportedElement("#text".into()));
                }
            }
            _ => {}
        }
    }
    if !closed {
        return Err(syntax(&reader, "unexpected end of document".into()));
    }
    Ok(collector.finish())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ns {
    Rdf,
    Lexicon,
    Other,
    Unknown(String),
}

fn classify(ns: &ResolveResult, mapping: &RdfMapping) -> Ns {
    match ns {
        ResolveResult::Bound(Namespace(n)) if *n == RDF_NS.as_bytes() => Ns::Rdf,
        ResolveResult::Bound(Namespace(n)) if *n == mapping.namespace.as_bytes() => Ns::Lexicon,
        ResolveResult::Bound(_) | ResolveResult::Unbound => Ns::Other,
        ResolveResult::Unknown(prefix) => Ns::Unknown(String::from_utf8_lossy(prefix).into_owned()),
    }
}

fn skip(reader: &mut NsReader<&[u8]>, name: Vec<u8>) -> Result<(), RdfError> {
    reader
        .read_to_end(quick_xml::name::QName(&name))
        .map(|_| ())
        .map_err(|e| RdfError::XmlSyntax {
            position: reader.buffer_position(),
            message: e.to_string(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Lemma {
        Lemma::new(s).unwrap()
    }

    fn pair_doc(reverse: bool) -> String {
        let back = if reverse {
            r#"<a:means rdf:resource="http://www.azhary.org#أ"/>"#
        } else {
            ""
        };
        format!(
            r#"<rdf:RDF xmlns:rdf="{RDF_NS}" xmlns:a="http://www.azhary.org#">
<rdf:Description rdf:about="http://www.azhary.org#أ"><rdf:type rdf:resource="http://www.azhary.org#الاسم"/><a:means rdf:resource="http://www.azhary.org#ب"/></rdf:Description>
<rdf:Description rdf:about="http://www.azhary.org#ب"><rdf:type rdf:resource="http://www.azhary.org#الاسم"/>{back}</rdf:Description>
</rdf:RDF>"#
        )
    }

    #[test]
    fn encodes_spaces_but_not_arabic() {
        assert_eq!(encode_iri_fragment("يَدٍ يُمْنَى"), "يَدٍ%20يُمْنَى");
        assert_eq!(encode_iri_fragment("a#b%c\"d"), "a%23b%25c%22d");
        assert_eq!(encode_iri_fragment("\u{FFFF}"), "%EF%BF%BF");
    }

    #[test]
    fn empty_lexicon_is_just_the_root() {
        let doc = emit_rdf(&Lexicon::default(), &RdfMapping::default()).unwrap();
        assert_eq!(
            doc,
            format!(
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rdf:RDF xmlns:rdf=\"{RDF_NS}\" xmlns:a=\"http://www.azhary.org#\">\n</rdf:RDF>\n"
            )
        );
        let parsed = parse_rdf(&doc, &RdfMapping::default(), PosTaxonomy::default()).unwrap();
        assert!(parsed.lexicon.is_empty());
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn one_sided_synonym_is_repaired() {
        let parsed = parse_rdf(&pair_doc(false), &RdfMapping::default(), PosTaxonomy::default()).unwrap();
        assert_eq!(
            parsed.warnings,
            [RdfWarning::MissingInverse(RelationEdge::new(
                l("أ"),
                RelationType::Synonym,
                l("ب")
            ))]
        );
        assert!(parsed.lexicon.contains_edge(&l("ب"), RelationType::Synonym, &l("أ")));
        assert_eq!(parsed.lexicon.edge_count(), 2);

        let full = parse_rdf(&pair_doc(true), &RdfMapping::default(), PosTaxonomy::default()).unwrap();
        assert!(full.warnings.is_empty());
        assert_eq!(full.lexicon, parsed.lexicon);
    }

    #[test]
    fn truncated_document() {
        let doc = pair_doc(true);
        let cut = doc.char_indices().nth(doc.chars().count() / 2).unwrap().0;
        assert!(matches!(
            parse_rdf(&doc[..cut], &RdfMapping::default(), PosTaxonomy::default()),
            Err(RdfError::XmlSyntax { .. })
        ));
        assert!(matches!(
            parse_rdf(
                "<rdf:RDF xmlns:rdf=\"x\"",
                &RdfMapping::default(),
                PosTaxonomy::default()
            ),
            Err(RdfError::XmlSyntax { .. })
        ));
    }

    #[test]
    fn namespace_errors() {
        let no_rdf = r#"<rdf:RDF xmlns:a="http://www.azhary.org#"></rdf:RDF>"#;
        assert_eq!(
            parse_rdf(no_rdf, &RdfMapping::default(), PosTaxonomy::default()),
            Err(RdfError::MissingNamespace("rdf".into()))
        );
        let no_lexicon = format!(r#"<rdf:RDF xmlns:rdf="{RDF_NS}"></rdf:RDF>"#);
        assert_eq!(
            parse_rdf(&no_lexicon, &RdfMapping::default(), PosTaxonomy::default()),
            Err(RdfError::MissingNamespace(DEFAULT_NAMESPACE.into()))
        );
        let other_root = r#"<html xmlns:a="http://www.azhary.org#"/>"#;
        assert_eq!(
            parse_rdf(other_root, &RdfMapping::default(), PosTaxonomy::default()),
            Err(RdfError::NotRdf)
        );
    }

    #[test]
    fn lenient_about_unknown_things() {
        let doc = format!(
            r#"<rdf:RDF xmlns:rdf="{RDF_NS}" xmlns:a="http://www.azhary.org#" xmlns:x="http://example.org/">
<rdf:Description rdf:about="http://www.azhary.org#أ">
  <rdf:type rdf:resource="http://www.azhary.org#الصفة"/>
  <a:kind_of rdf:resource="http://www.azhary.org#ب"/>
  <x:seeAlso rdf:resource="http://example.org/ب"/>
  <a:anti rdf:resource="http://www.azhary.org#ب"/>
  <a:means rdf:resource="http://www.azhary.org#أ"/>
</rdf:Description>
</rdf:RDF>"#
        );
        let parsed = parse_rdf(&doc, &RdfMapping::default(), PosTaxonomy::default()).unwrap();
        let lex = &parsed.lexicon;
        assert_eq!(lex.word_count(), 2);
        assert_eq!(lex.pos_class(&l("أ")).unwrap().label_ar, "الصفة");
        assert_eq!(lex.taxonomy().len(), 4);
        assert!(lex.contains_edge(&l("ب"), RelationType::Antonym, &l("أ")));
        let w = &parsed.warnings;
        assert!(w.contains(&RdfWarning::UnknownProperty {
            subject: l("أ"),
            property: "kind_of".into()
        }));
        assert!(w.contains(&RdfWarning::UnknownProperty {
            subject: l("أ"),
            property: "seeAlso".into()
        }));
        assert!(w.contains(&RdfWarning::UndescribedResource(l("ب"))));
        assert!(w.contains(&RdfWarning::SelfLoop(l("أ"))));
        assert!(w.iter().any(|x| matches!(x, RdfWarning::MissingInverse(_))));
    }

    #[test]
    fn every_property_name_round_trips() {
        let mut lex = Lexicon::default();
        let names = ["أ", "ب", "ج", "د", "ه", "و", "ز", "ح"];
        for n in names {
            lex.add_word(l(n), &PosId::new("noun")).unwrap();
        }
        for (i, rel) in RelationType::ALL.into_iter().enumerate() {
            lex.add_relation(&l(names[0]), rel, &l(names[i + 1])).unwrap();
        }
        let mapping = RdfMapping::default();
        let doc = emit_rdf(&lex, &mapping).unwrap();
        for rel in RelationType::ALL {
            assert!(doc.contains(&format!("<a:{} rdf:resource=", mapping.property(rel))));
        }
        let parsed = parse_rdf(&doc, &mapping, PosTaxonomy::default()).unwrap();
        assert!(parsed.warnings.is_empty());
        assert_eq!(parsed.lexicon, lex);
    }

    #[test]
    fn custom_namespace_and_property() {
        let mut mapping = RdfMapping::with_namespace("urn:lex:");
        mapping.set_property(RelationType::Association, "related_to");
        let mut lex = Lexicon::default();
        lex.add_word(l("طبيب"), &PosId::new("noun")).unwrap();
        lex.add_word(l("مريض"), &PosId::new("noun")).unwrap();
        lex.add_relation(&l("طبيب"), RelationType::Association, &l("مريض"))
            .unwrap();
        let doc = emit_rdf(&lex, &mapping).unwrap();
        assert!(doc.contains("xmlns:a=\"urn:lex:\""));
        assert!(doc.contains("<a:related_to rdf:resource=\"urn:lex:مريض\"/>"));
        assert_eq!(parse_rdf(&doc, &mapping, PosTaxonomy::default()).unwrap().lexicon, lex);
    }

    #[test]
    fn refuses_invalid_lexicon() {
        let mut lex = Lexicon::default();
        lex.add_word(l("أ"), &PosId::new("noun")).unwrap();
        lex.insert_directed_edge(l("أ"), RelationType::Hypernym, l("ب"));
        assert!(matches!(
            emit_rdf(&lex, &RdfMapping::default()),
            Err(RdfError::InvalidLexicon(v)) if v.len() == 2
        ));
    }
}
