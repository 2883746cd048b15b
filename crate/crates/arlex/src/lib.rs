//! File formats, synthetic data, latency measurement and the HTTP service
//! for the `arlex-core` lexicon.

pub mod latency;
pub mod rdf;
pub mod service;
pub mod synthetic;
pub mod tsv;

pub use arlex_core as core;
