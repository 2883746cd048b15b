use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Lemma, Lexicon, RelationEdge, RelationType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ViolationKind {
    SelfLoop,
    DanglingTarget,
    MissingInverse,
    SynonymAntonymConflict,
    HypernymCycle,
}

impl ViolationKind {
    pub fn severity(self) -> Severity {
        match self {
            ViolationKind::SelfLoop | ViolationKind::DanglingTarget | ViolationKind::MissingInverse => Severity::Error,
            ViolationKind::SynonymAntonymConflict | ViolationKind::HypernymCycle => Severity::Warning,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum ViolationSubject {
    Edge(RelationEdge),
    Lemma(Lemma),
    /// Members of a hypernym cycle, in lemma order.
    Cycle(Vec<Lemma>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub kind: ViolationKind,
    pub severity: Severity,
    pub subject: ViolationSubject,
}

impl Violation {
    pub fn new(kind: ViolationKind, subject: ViolationSubject) -> Violation {
        Violation {
            kind,
            severity: kind.severity(),
            subject,
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

/// Checks the graph invariants. Sorted by kind, then subject.
///
/// A lexicon built only through [`Lexicon::add_relation`] never produces
/// errors; those come from raw imports.
pub fn validate(lexicon: &Lexicon) -> Vec<Violation> {
    let mut out = Vec::new();
    for edge in lexicon.edges() {
        if edge.source == edge.target {
            out.push(Violation::new(
                ViolationKind::SelfLoop,
                ViolationSubject::Edge(edge.clone()),
            ));
        }
        if !lexicon.contains_word(&edge.source) || !lexicon.contains_word(&edge.target) {
            out.push(Violation::new(
                ViolationKind::DanglingTarget,
                ViolationSubject::Edge(edge.clone()),
            ));
        }
        if !lexicon.contains_edge(&edge.target, edge.rel.inverse(), &edge.source) {
            out.push(Violation::new(
                ViolationKind::MissingInverse,
                ViolationSubject::Edge(edge),
            ));
        }
    }

    let mut conflicts: BTreeSet<(&Lemma, &Lemma)> = BTreeSet::new();
    for (a, b) in lexicon.edges_of(RelationType::Synonym) {
        let pair = if a < b { (a, b) } else { (b, a) };
        if lexicon.contains_edge(a, RelationType::Antonym, b) || lexicon.contains_edge(b, RelationType::Antonym, a) {
            conflicts.insert(pair);
        }
    }
    for (a, b) in conflicts {
        out.push(Violation::new(
            ViolationKind::SynonymAntonymConflict,
            ViolationSubject::Edge(RelationEdge::new(a.clone(), RelationType::Synonym, b.clone())),
        ));
    }

    for cycle in hypernym_cycles(lexicon) {
        out.push(Violation::new(
            ViolationKind::HypernymCycle,
            ViolationSubject::Cycle(cycle),
        ));
    }

    out.sort();
    out
}

/// Strongly connected components with more than one member in the graph of
/// Hypernym edges (Kosaraju, iterative).
fn hypernym_cycles(lexicon: &Lexicon) -> Vec<Vec<Lemma>> {
    let mut ids: BTreeMap<&Lemma, usize> = BTreeMap::new();
    let mut names: Vec<&Lemma> = Vec::new();
    let mut forward: Vec<Vec<usize>> = Vec::new();
    let mut backward: Vec<Vec<usize>> = Vec::new();
    for (a, b) in lexicon.edges_of(RelationType::Hypernym) {
        if a == b {
            continue;
        }
        let ia = *ids.entry(a).or_insert_with(|| {
            names.push(a);
            forward.push(Vec::new());
            backward.push(Vec::new());
            names.len() - 1
        });
        let ib = *ids.entry(b).or_insert_with(|| {
            names.push(b);
            forward.push(Vec::new());
            backward.push(Vec::new());
            names.len() - 1
        });
        forward[ia].push(ib);
        backward[ib].push(ia);
    }

    let n = names.len();
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((node, next)) = stack.last_mut() {
            if let Some(&child) = forward[*node].get(*next) {
                *next += 1;
                if !visited[child] {
                    visited[child] = true;
                    stack.push((child, 0));
                }
            } else {
                order.push(*node);
                stack.pop();
            }
        }
    }

    let mut component = vec![usize::MAX; n];
    let mut cycles = Vec::new();
    for &root in order.iter().rev() {
        if component[root] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        component[root] = root;
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            members.push(names[node].clone());
            for &prev in &backward[node] {
                if component[prev] == usize::MAX {
                    component[prev] = root;
                    stack.push(prev);
                }
            }
        }
        if members.len() > 1 {
            members.sort();
            cycles.push(members);
        }
    }
    cycles
}
