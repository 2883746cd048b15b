mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::{data_dir, fixture_dir};

fn arlex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arlex")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture_file(name: &str) -> String {
    fixture_dir().join(name).to_str().unwrap().to_string()
}

#[test]
fn build_emits_snippet_vocabulary() {
    let dir = tempfile::tempdir().unwrap();
    let rdf = dir.path().join("lexicon.rdf");
    let out = arlex(&[
        "build",
        &fixture_file("words.tsv"),
        &fixture_file("relations.tsv"),
        "-o",
        rdf.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = std::fs::read_to_string(&rdf).unwrap();
    for needle in [
        "a:means rdf:resource",
        "a:has_parent rdf:resource",
        "a:part_of rdf:resource",
    ] {
        assert!(doc.contains(needle), "{needle}");
    }
}

#[test]
fn build_with_custom_namespace() {
    let dir = tempfile::tempdir().unwrap();
    let rdf = dir.path().join("lexicon.rdf");
    let out = arlex(&[
        "build",
        &fixture_file("words.tsv"),
        &fixture_file("relations.tsv"),
        "-o",
        rdf.to_str().unwrap(),
        "--namespace",
        "urn:x:",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&rdf)
        .unwrap()
        .contains("rdf:about=\"urn:x:يَد\""));
}

#[test]
fn validate_exit_codes() {
    let out = arlex(&["validate", &fixture_file("words.tsv"), &fixture_file("relations.tsv")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("30 words, 0 errors, 0 warnings"));

    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("w.tsv");
    let rels = dir.path().join("r.tsv");
    std::fs::write(&words, "lemma\tpos\nأ\tnoun\n").unwrap();
    std::fs::write(&rels, "source\trelation\ttarget\nأ\tsynonym\tب\n").unwrap();
    let out = arlex(&["validate", words.to_str().unwrap(), rels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = dir.path().join("absent.tsv");
    let out = arlex(&["validate", missing.to_str().unwrap(), rels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(arlex(&["validate"]).status.code(), Some(2));
    assert_eq!(arlex(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn validate_warnings_do_not_fail() {
    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("w.tsv");
    let rels = dir.path().join("r.tsv");
    std::fs::write(&words, "lemma\tpos\nأ\tnoun\nب\tnoun\n").unwrap();
    std::fs::write(&rels, "source\trelation\ttarget\nأ\tsynonym\tب\nأ\tantonym\tب\n").unwrap();
    let out = arlex(&["--json", "validate", words.to_str().unwrap(), rels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["errors"].as_u64(), v["warnings"].as_u64()), (Some(0), Some(1)));
}

#[test]
fn query_and_stats() {
    let data = fixture_dir();
    let data = data.to_str().unwrap();
    let out = arlex(&["--data", data, "query", "يد", "--fold"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("يَد\tnoun"));
    for line in [
        "synonyms (10)",
        "antonyms (4)",
        "hypernyms (3)",
        "hyponyms (2)",
        "wholes (2)",
        "parts (8)",
    ] {
        assert!(text.contains(line), "{line}");
    }

    let out = arlex(&["--data", data, "--json", "query", "يَد", "--relation", "hyponym"]);
    let v: Vec<String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, ["يَدٍ يُسْرَى", "يَدٍ يُمْنَى"]);

    let out = arlex(&[
        "--data",
        data,
        "query",
        "يَدٍ يُمْنَى",
        "--relation",
        "hypernym",
        "--depth",
        "2",
    ]);
    assert_eq!(stdout(&out).lines().count(), 4);

    assert_eq!(arlex(&["--data", data, "query", "قطار"]).status.code(), Some(2));
    assert_eq!(
        arlex(&["--data", data, "query", "يَد", "--relation", "kin"])
            .status
            .code(),
        Some(2)
    );

    let out = arlex(&["--data", data, "stats"]);
    let text = stdout(&out);
    assert!(text.contains("words\t30\n"));
    assert!(text.contains("synsets\t20\n"));
    assert!(text.contains("links\t29\n"));
}

#[test]
fn ingest_counts_the_sample() {
    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("words.tsv");
    let freq = dir.path().join("freq.tsv");
    let corpus = data_dir().join("fatiha.txt");
    let out = arlex(&[
        "--json",
        "ingest",
        corpus.to_str().unwrap(),
        "-o",
        words.to_str().unwrap(),
        "--frequencies",
        freq.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["total"].as_u64(), v["unique"].as_u64()), (Some(29), Some(26)));
    let seed = std::fs::read_to_string(&words).unwrap();
    assert_eq!(seed.lines().count(), 27);
    assert!(std::fs::read_to_string(&freq).unwrap().contains("الرَّحِيمِ\t2\n"));

    // seed words plus an empty relations file form a valid lexicon
    let rels = dir.path().join("relations.tsv");
    std::fs::write(&rels, "source\trelation\ttarget\n").unwrap();
    let out = arlex(&["validate", words.to_str().unwrap(), rels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("26 words"));

    let out = arlex(&[
        "ingest",
        corpus.to_str().unwrap(),
        "-o",
        words.to_str().unwrap(),
        "--pos",
        "adverb",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_small() {
    let out = arlex(&[
        "--json",
        "bench",
        "--words",
        "500",
        "--synsets",
        "200",
        "--queries",
        "50",
        "--seed",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stats"]["word_count"], 500);
    assert_eq!(v["stats"]["synset_count"], 200);
    assert_eq!(v["latency"]["query_count"], 50);
    let out = arlex(&["bench", "--words", "5", "--synsets", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn custom_taxonomy_file() {
    let dir = tempfile::tempdir().unwrap();
    let tax = dir.path().join("pos.tsv");
    std::fs::write(
        &tax,
        "id\tlabel_ar\tlabel_en\tparent\nnoun\tالاسم\tnoun\t\nproper\tاسم علم\tproper noun\tnoun\n",
    )
    .unwrap();
    let words = dir.path().join("words.tsv");
    let rels = dir.path().join("relations.tsv");
    std::fs::write(&words, "lemma\tpos\nمكة\tproper\n").unwrap();
    std::fs::write(&rels, "source\trelation\ttarget\n").unwrap();
    let rdf = dir.path().join("out.rdf");
    let args = |extra: &[&str]| {
        let mut v = vec!["--taxonomy", tax.to_str().unwrap()];
        v.extend_from_slice(extra);
        v.into_iter().map(String::from).collect::<Vec<_>>()
    };
    let run = |a: Vec<String>| Command::new(env!("CARGO_BIN_EXE_arlex")).args(&a).output().unwrap();
    let out = run(args(&[
        "build",
        words.to_str().unwrap(),
        rels.to_str().unwrap(),
        "-o",
        rdf.to_str().unwrap(),
    ]));
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&rdf)
        .unwrap()
        .contains("http://www.azhary.org#اسم%20علم"));
    // without the taxonomy the POS is unknown
    let out = arlex(&["validate", words.to_str().unwrap(), rels.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(Path::new(&rdf).exists());
}
