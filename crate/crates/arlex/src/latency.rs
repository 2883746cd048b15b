//! Wall-clock lookup timing over seeded random queries.

use std::hint::black_box;
use std::time::Instant;

use arlex_core::{Lemma, LexiconIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LatencyReport {
    pub query_count: usize,
    pub mean_ms: f64,
    /// Nearest-rank 95th percentile.
    pub p95_ms: f64,
    pub max_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatencyError {
    #[error("lexicon has no words to query")]
    EmptyLexicon,
    #[error("query count must be at least 1")]
    NoQueries,
}

impl LatencyError {
    pub fn code(&self) -> &'static str {
        match self {
            LatencyError::EmptyLexicon => "EmptyLexicon",
            LatencyError::NoQueries => "InvalidParameters",
        }
    }
}

/// `n` lemmas drawn uniformly, with replacement, from the index.
pub fn sample_queries(index: &LexiconIndex, n: usize, seed: u64) -> Result<Vec<Lemma>, LatencyError> {
    if n == 0 {
        return Err(LatencyError::NoQueries);
    }
    let words: Vec<&Lemma> = index.lexicon().words().map(|(l, _)| l).collect();
    if words.is_empty() {
        return Err(LatencyError::EmptyLexicon);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| words[rng.random_range(0..words.len())].clone())
        .collect())
}

/// Times one full profile lookup per sampled query.
pub fn measure_latency(index: &LexiconIndex, n: usize, seed: u64) -> Result<LatencyReport, LatencyError> {
    let queries = sample_queries(index, n, seed)?;
    let mut times: Vec<f64> = Vec::with_capacity(n);
    for q in &queries {
        let start = Instant::now();
        let found = index.lookup(black_box(q.as_str()), false);
        black_box(&found);
        times.push(start.elapsed().as_secs_f64() * 1000.0);
        debug_assert!(found.is_ok());
    }
    Ok(summarize(&times))
}

fn summarize(times: &[f64]) -> LatencyReport {
    let mut sorted = times.to_vec();
    sorted.sort_by(f64::total_cmp);
    let rank = (sorted.len() * 95).div_ceil(100).max(1);
    LatencyReport {
        query_count: sorted.len(),
        mean_ms: sorted.iter().sum::<f64>() / sorted.len() as f64,
        p95_ms: sorted[rank - 1],
        max_ms: sorted[sorted.len() - 1],
    }
}
