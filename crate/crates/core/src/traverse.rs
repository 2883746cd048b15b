use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::{Lemma, Lexicon, LexiconError, RelationType};

/// Words reachable from `word` along `rel` edges within `max_depth` hops,
/// each at its minimal depth, in breadth-first order. The start word is
/// never reported, even when a cycle leads back to it.
pub fn transitive(
    lexicon: &Lexicon,
    word: &Lemma,
    rel: RelationType,
    max_depth: usize,
) -> Result<Vec<(Lemma, usize)>, LexiconError> {
    if rel.is_symmetric() {
        return Err(LexiconError::UnsupportedRelation(rel));
    }
    lexicon.neighbors(word, rel)?;

    let mut seen: BTreeSet<&Lemma> = BTreeSet::new();
    seen.insert(word);
    let mut queue = VecDeque::new();
    queue.push_back((word, 0usize));
    let mut out = Vec::new();
    while let Some((current, depth)) = queue.pop_front() {
        if depth == max_depth {
            continue;
        }
        // dangling targets from raw imports have no neighbors
        let Ok(next) = lexicon.neighbors(current, rel) else {
            continue;
        };
        for n in next {
            if seen.insert(n) {
                out.push((n.clone(), depth + 1));
                queue.push_back((n, depth + 1));
            }
        }
    }
    Ok(out)
}
