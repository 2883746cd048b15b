use std::fs;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use arlex::latency::measure_latency;
use arlex::rdf::{emit_rdf, RdfError, RdfMapping, DEFAULT_NAMESPACE};
use arlex::service::{serve, AppState, ServeConfig, ServiceError, Store};
use arlex::synthetic::generate_synthetic;
use arlex::tsv::{read_taxonomy, read_tsv, write_frequencies, write_seed_words, TsvError};
use arlex_core::{
    extract_unique, tokenize, validate, Lemma, Lexicon, LexiconIndex, PosId, PosTaxonomy, RelationType, Severity,
    Violation,
};
use clap::{Parser, Subcommand};
use serde_json::json;

/// Build, check, query and serve an Arabic lexical ontology.
#[derive(Parser)]
#[command(name = "arlex", version)]
struct Cli {
    /// Directory holding words.tsv and relations.tsv.
    #[arg(long, global = true, default_value = ".")]
    data: PathBuf,
    /// POS taxonomy file; defaults to noun/verb/particle.
    #[arg(long, global = true)]
    taxonomy: Option<PathBuf>,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tokenize a corpus into a seed words file.
    Ingest {
        corpus: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// POS assigned to every extracted word.
        #[arg(long, default_value = "noun")]
        pos: String,
        /// Also write token frequencies here.
        #[arg(long)]
        frequencies: Option<PathBuf>,
    },
    /// Check a words/relations pair.
    Validate { words: PathBuf, relations: PathBuf },
    /// Compile a words/relations pair to RDF/XML.
    Build {
        words: PathBuf,
        relations: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value = DEFAULT_NAMESPACE)]
        namespace: String,
    },
    /// Look up a word in the data directory.
    Query {
        lemma: String,
        /// Only list this relation.
        #[arg(long)]
        relation: Option<String>,
        /// Ignore diacritics when there is no exact match.
        #[arg(long)]
        fold: bool,
        /// Follow a hierarchical relation up to this many steps.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Word, synset and link counts for the data directory.
    Stats,
    /// Time lookups on a generated lexicon.
    Bench {
        #[arg(long, default_value_t = 26_195)]
        words: usize,
        #[arg(long, default_value_t = 13_328)]
        synsets: usize,
        #[arg(long, default_value_t = 1000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Serve the HTTP API over the data directory.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Static files for the web UI.
        #[arg(long = "static")]
        static_dir: Option<PathBuf>,
        /// Save edits every this many seconds.
        #[arg(long)]
        autosave: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let validation = e.downcast_ref::<TsvError>().is_some()
                || matches!(e.downcast_ref::<RdfError>(), Some(RdfError::InvalidLexicon(_)))
                || matches!(
                    e.downcast_ref::<ServiceError>(),
                    Some(ServiceError::InvalidLexicon(_) | ServiceError::Tsv(_))
                );
            if cli.json {
                eprintln!("{}", json!({"error": format!("{e:#}")}));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(if validation { 1 } else { 2 })
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Ingest {
            corpus,
            output,
            pos,
            frequencies,
        } => ingest(cli, corpus, output, pos, frequencies.as_deref()),
        Command::Validate { words, relations } => check(cli, words, relations),
        Command::Build {
            words,
            relations,
            output,
            namespace,
        } => {
            let lexicon = load(cli, words, relations)?;
            let doc = emit_rdf(&lexicon, &RdfMapping::with_namespace(namespace))?;
            fs::write(output, doc).with_context(|| format!("writing {}", output.display()))?;
            if !cli.json {
                println!("wrote {} words to {}", lexicon.word_count(), output.display());
            }
            Ok(0)
        }
        Command::Query {
            lemma,
            relation,
            fold,
            depth,
        } => query(cli, lemma, relation.as_deref(), *fold, *depth),
        Command::Stats => {
            let index = LexiconIndex::new(load_data(cli)?);
            let s = index.stats();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&s)?);
            } else {
                println!("words\t{}", s.word_count);
                println!("synsets\t{}", s.synset_count);
                for rel in [
                    RelationType::Synonym,
                    RelationType::Antonym,
                    RelationType::Hypernym,
                    RelationType::Meronym,
                    RelationType::Association,
                ] {
                    println!("{rel}\t{}", s.links.get(rel));
                }
                println!("links\t{}", s.links.total());
            }
            Ok(0)
        }
        Command::Bench {
            words,
            synsets,
            queries,
            seed,
        } => bench(cli, *words, *synsets, *queries, *seed),
        Command::Serve {
            port,
            host,
            static_dir,
            autosave,
        } => {
            let state = AppState::load(Store::in_dir(&cli.data), taxonomy(cli)?, RdfMapping::default())?;
            let config = ServeConfig {
                addr: SocketAddr::new(*host, *port),
                static_dir: static_dir.clone(),
                autosave: autosave.map(Duration::from_secs),
            };
            tracing_subscriber::fmt().with_writer(std::io::stderr).init();
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(serve(Arc::new(state), config))?;
            Ok(0)
        }
    }
}

fn taxonomy(cli: &Cli) -> Result<PosTaxonomy> {
    match &cli.taxonomy {
        Some(path) => Ok(read_taxonomy(&read(path)?)?),
        None => Ok(PosTaxonomy::default()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(cli: &Cli, words: &Path, relations: &Path) -> Result<Lexicon> {
    Ok(read_tsv(&read(words)?, &read(relations)?, taxonomy(cli)?)?)
}

fn load_data(cli: &Cli) -> Result<Lexicon> {
    let store = Store::in_dir(&cli.data);
    load(cli, &store.words, &store.relations)
}

fn ingest(cli: &Cli, corpus: &Path, output: &Path, pos: &str, frequencies: Option<&Path>) -> Result<u8> {
    let pos = PosId::new(pos);
    if !taxonomy(cli)?.contains(&pos) {
        bail!("unknown part of speech {pos}");
    }
    let report = extract_unique(tokenize(&read(corpus)?));
    fs::write(output, write_seed_words(&report, &pos)).with_context(|| format!("writing {}", output.display()))?;
    if let Some(path) = frequencies {
        fs::write(path, write_frequencies(&report)).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        println!(
            "{}",
            json!({"total": report.total_count, "unique": report.unique_count()})
        );
    } else {
        println!("tokens\t{}", report.total_count);
        println!("unique\t{}", report.unique_count());
    }
    Ok(0)
}

fn check(cli: &Cli, words: &Path, relations: &Path) -> Result<u8> {
    let lexicon = load(cli, words, relations)?;
    let violations = validate(&lexicon);
    let errors = violations.iter().filter(|v| v.is_error()).count();
    if cli.json {
        println!(
            "{}",
            json!({"errors": errors, "warnings": violations.len() - errors, "violations": violations})
        );
    } else {
        for v in &violations {
            println!("{}", describe(v));
        }
        println!(
            "{} words, {} errors, {} warnings",
            lexicon.word_count(),
            errors,
            violations.len() - errors
        );
    }
    Ok(if errors > 0 { 1 } else { 0 })
}

fn describe(v: &Violation) -> String {
    let level = match v.severity {
        Severity::Error => "error",
        Severity::Warning => "warning",
    };
    let subject = match &v.subject {
        arlex_core::ViolationSubject::Edge(e) => format!("{} {} {}", e.source, e.rel, e.target),
        arlex_core::ViolationSubject::Lemma(l) => l.to_string(),
        arlex_core::ViolationSubject::Cycle(c) => c.iter().map(Lemma::as_str).collect::<Vec<_>>().join(" -> "),
    };
    format!("{level}\t{:?}\t{subject}", v.kind)
}

fn query(cli: &Cli, text: &str, relation: Option<&str>, fold: bool, depth: Option<usize>) -> Result<u8> {
    let index = LexiconIndex::new(load_data(cli)?);
    let found = index.lookup(text, fold)?;
    let profile = &found.profile;
    if let Some(depth) = depth {
        let rel: RelationType = relation.unwrap_or("hypernym").parse()?;
        let chain = index.transitive(&profile.lemma, rel, depth)?;
        if cli.json {
            let items: Vec<_> = chain.iter().map(|(l, d)| json!({"lemma": l, "depth": d})).collect();
            println!("{}", serde_json::Value::Array(items));
        } else {
            for (l, d) in chain {
                println!("{d}\t{l}");
            }
        }
        return Ok(0);
    }
    if let Some(name) = relation {
        let rel: RelationType = name.parse()?;
        let related = profile.related(rel);
        if cli.json {
            println!("{}", serde_json::to_string(related)?);
        } else {
            for l in related {
                println!("{l}");
            }
        }
        return Ok(0);
    }
    if cli.json {
        println!("{}", json!({"profile": profile, "candidates": found.candidates}));
        return Ok(0);
    }
    println!("{}\t{}\tsynset {}", profile.lemma, profile.pos, profile.synset.0);
    if found.candidates.len() > 1 {
        let all: Vec<&str> = found.candidates.iter().map(Lemma::as_str).collect();
        println!("candidates\t{}", all.join(" "));
    }
    for (label, rel) in [
        ("synonyms", RelationType::Synonym),
        ("antonyms", RelationType::Antonym),
        ("hypernyms", RelationType::Hypernym),
        ("hyponyms", RelationType::Hyponym),
        ("wholes", RelationType::Meronym),
        ("parts", RelationType::Holonym),
        ("associations", RelationType::Association),
    ] {
        let items: Vec<&str> = profile.related(rel).iter().map(Lemma::as_str).collect();
        println!("{label} ({})\t{}", items.len(), items.join("، "));
    }
    Ok(0)
}

fn bench(cli: &Cli, words: usize, synsets: usize, queries: usize, seed: u64) -> Result<u8> {
    let started = Instant::now();
    let lexicon = generate_synthetic(words, synsets, seed)?;
    let index = LexiconIndex::new(lexicon);
    let build_ms = started.elapsed().as_secs_f64() * 1000.0;
    let stats = index.stats();
    let report = measure_latency(&index, queries, seed)?;
    if cli.json {
        println!("{}", json!({"stats": stats, "latency": report, "build_ms": build_ms}));
    } else {
        println!("words\t{}", stats.word_count);
        println!("synsets\t{}", stats.synset_count);
        println!("links\t{}", stats.links.total());
        println!("build_ms\t{build_ms:.1}");
        println!("queries\t{}", report.query_count);
        println!("mean_ms\t{:.4}", report.mean_ms);
        println!("p95_ms\t{:.4}", report.p95_ms);
        println!("max_ms\t{:.4}", report.max_ms);
    }
    Ok(0)
}
