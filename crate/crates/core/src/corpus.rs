//! Corpus loading, preprocessing, partitioning, and summary statistics.
//!
//! The on-disk format is UTF-8 TSV, one document per line, either
//! `text<TAB>label` or `text<TAB>partition<TAB>label` where partition is one
//! of `train`, `test`, `val`. Stopword files hold one token per line.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seeding::{self, stream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Partition {
    Train,
    Test,
    Val,
}

impl Partition {
    pub fn parse(s: &str) -> Option<Partition> {
        match s {
            "train" => Some(Partition::Train),
            "test" => Some(Partition::Test),
            "val" => Some(Partition::Val),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Partition::Train => "train",
            Partition::Test => "test",
            Partition::Val => "val",
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct RawDoc {
    pub text: String,
    pub label: String,
    pub partition: Option<Partition>,
}

/// Documents as loaded from disk, before vocabulary construction.
#[derive(Debug, Clone)]
pub struct RawCorpus {
    pub docs: Vec<RawDoc>,
}

impl RawCorpus {
    pub fn from_docs(docs: Vec<RawDoc>) -> RawCorpus {
        RawCorpus { docs }
    }

    /// True when every document carries a partition annotation.
    pub fn fully_partitioned(&self) -> bool {
        !self.docs.is_empty() && self.docs.iter().all(|d| d.partition.is_some())
    }

    /// True when at least one but not all documents carry a partition.
    pub fn partially_partitioned(&self) -> bool {
        let n = self.docs.iter().filter(|d| d.partition.is_some()).count();
        n > 0 && n < self.docs.len()
    }
}

/// Bijection between token strings and contiguous 0-based word ids.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    words: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    /// Builds a vocabulary from the unique tokens, ordered lexicographically.
    pub fn from_tokens<'a, I: IntoIterator<Item = &'a str>>(tokens: I) -> Vocabulary {
        let unique: BTreeSet<&str> = tokens.into_iter().collect();
        let words: Vec<String> = unique.into_iter().map(str::to_owned).collect();
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Vocabulary { words, index }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, id: usize) -> &str {
        &self.words[id]
    }

    pub fn id(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }
}

#[derive(Debug, Clone)]
pub struct Doc {
    pub tokens: Vec<usize>,
    pub label: usize,
}

/// Bag-of-words corpus with an id-mapped vocabulary and label set.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub vocabulary: Vocabulary,
    pub labels: Vec<String>,
    pub docs: Vec<Doc>,
}

impl Corpus {
    pub fn n_docs(&self) -> usize {
        self.docs.len()
    }

    pub fn n_words(&self) -> usize {
        self.vocabulary.len()
    }

    pub fn n_labels(&self) -> usize {
        self.labels.len()
    }

    /// Token strings of document `i`, in order.
    pub fn doc_tokens(&self, i: usize) -> Vec<&str> {
        self.docs[i]
            .tokens
            .iter()
            .map(|&t| self.vocabulary.word(t))
            .collect()
    }

    /// Stable fingerprint of the corpus content, used to guard run-store
    /// resumption against a mismatched corpus.
    pub fn fingerprint(&self) -> u64 {
        let mut parts: Vec<u64> = Vec::with_capacity(self.docs.len() + 2);
        parts.push(seeding::hash_str(&self.vocabulary.words().join("\u{1}")));
        parts.push(seeding::hash_str(&self.labels.join("\u{1}")));
        for d in &self.docs {
            let mut acc = seeding::splitmix64(d.label as u64);
            for &t in &d.tokens {
                acc = seeding::combine(&[acc, t as u64]);
            }
            parts.push(acc);
        }
        seeding::combine(&parts)
    }
}

/// A corpus together with a train/test/val assignment for every document.
#[derive(Debug, Clone)]
pub struct PartitionedCorpus {
    pub corpus: Corpus,
    pub partition: Vec<Partition>,
}

impl PartitionedCorpus {
    pub fn doc_ids(&self, part: Partition) -> Vec<usize> {
        self.partition
            .iter()
            .enumerate()
            .filter(|(_, p)| **p == part)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn len(&self, part: Partition) -> usize {
        self.partition.iter().filter(|p| **p == part).count()
    }

    pub fn validate(&self) -> Result<()> {
        if self.partition.len() != self.corpus.n_docs() {
            return Err(Error::invalid("partition length != document count"));
        }
        for part in [Partition::Train, Partition::Test, Partition::Val] {
            if self.len(part) == 0 {
                return Err(Error::invalid(format!("partition '{part}' is empty")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreprocessOptions {
    pub lowercase: bool,
    pub strip_punct_and_numbers: bool,
    pub stopword_file: Option<PathBuf>,
    /// Minimum document frequency, as a fraction of the document count.
    pub min_word_doc_frequency: f64,
    /// Maximum document frequency, as a fraction of the document count.
    pub max_word_doc_frequency: f64,
    pub min_doc_length: usize,
}

impl Default for PreprocessOptions {
    fn default() -> Self {
        PreprocessOptions {
            lowercase: true,
            strip_punct_and_numbers: true,
            stopword_file: None,
            min_word_doc_frequency: 0.0,
            max_word_doc_frequency: 1.0,
            min_doc_length: 1,
        }
    }
}

impl PreprocessOptions {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.min_word_doc_frequency) {
            return Err(Error::invalid("min_word_doc_frequency must be in [0,1]"));
        }
        if !(0.0..=1.0).contains(&self.max_word_doc_frequency) || self.max_word_doc_frequency <= 0.0
        {
            return Err(Error::invalid("max_word_doc_frequency must be in (0,1]"));
        }
        if self.min_word_doc_frequency > self.max_word_doc_frequency {
            return Err(Error::invalid(
                "min_word_doc_frequency must not exceed max_word_doc_frequency",
            ));
        }
        if self.min_doc_length < 1 {
            return Err(Error::invalid("min_doc_length must be >= 1"));
        }
        Ok(())
    }
}

/// Dataset-level statistics (document counts, vocabulary size, length
/// moments) that govern hyperparameter transferability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metafeatures {
    pub n_docs: usize,
    pub n_labels: usize,
    pub n_unique_words: usize,
    pub avg_doc_length: f64,
    pub std_doc_length: f64,
}

impl Metafeatures {
    pub const CSV_HEADER: &'static str = "n_docs,n_labels,n_unique_words,avg_doc_len,std_doc_len";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n_docs, self.n_labels, self.n_unique_words, self.avg_doc_length, self.std_doc_length
        )
    }
}

/// Loads a TSV corpus: `text<TAB>label` or `text<TAB>partition<TAB>label`,
/// one document per line; blank lines are skipped.
pub fn load_corpus(path: &Path) -> Result<RawCorpus> {
    let content = fs::read_to_string(path)?;
    parse_corpus(&content)
}

/// Parses corpus TSV content (see [`load_corpus`]).
pub fn parse_corpus(content: &str) -> Result<RawCorpus> {
    let mut docs = Vec::new();
    for (idx, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split('\t').collect();
        let doc = match fields.len() {
            2 => RawDoc {
                text: fields[0].to_owned(),
                label: fields[1].trim().to_owned(),
                partition: None,
            },
            3 => {
                let part = Partition::parse(fields[1].trim()).ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: format!("unknown partition token '{}'", fields[1].trim()),
                })?;
                RawDoc {
                    text: fields[0].to_owned(),
                    label: fields[2].trim().to_owned(),
                    partition: Some(part),
                }
            }
            n => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected 2 or 3 tab-separated columns, found {n}"),
                })
            }
        };
        if doc.label.is_empty() {
            return Err(Error::Parse {
                line: lineno,
                msg: "empty label".to_owned(),
            });
        }
        docs.push(doc);
    }
    if docs.is_empty() {
        return Err(Error::NoDocuments);
    }
    Ok(RawCorpus { docs })
}

/// Serializes a raw corpus back to the TSV format accepted by
/// [`load_corpus`].
pub fn write_corpus_tsv(raw: &RawCorpus) -> String {
    let mut out = String::new();
    for d in &raw.docs {
        match d.partition {
            Some(p) => {
                out.push_str(&d.text);
                out.push('\t');
                out.push_str(p.as_str());
                out.push('\t');
                out.push_str(&d.label);
            }
            None => {
                out.push_str(&d.text);
                out.push('\t');
                out.push_str(&d.label);
            }
        }
        out.push('\n');
    }
    out
}

/// Loads a stopword file: one token per line, blank lines ignored.
pub fn load_stopwords(path: &Path) -> Result<BTreeSet<String>> {
    let content = fs::read_to_string(path)?;
    Ok(content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_owned)
        .collect())
}

fn clean_text(text: &str, opts: &PreprocessOptions) -> String {
    let mut s = if opts.lowercase {
        text.to_lowercase()
    } else {
        text.to_owned()
    };
    if opts.strip_punct_and_numbers {
        s.retain(|c| c.is_alphabetic() || c.is_whitespace());
    }
    s
}

/// Runs the preprocessing pipeline: optional lowercasing and
/// punctuation/number stripping, stopword removal, document-frequency
/// filtering, and short-document removal.
///
/// The frequency and length filters are iterated to a fixed point (dropping
/// a document changes every frequency ratio), which makes the whole pipeline
/// idempotent.
pub fn preprocess(raw: &RawCorpus, opts: &PreprocessOptions) -> Result<RawCorpus> {
    opts.validate()?;
    let stopwords = match &opts.stopword_file {
        Some(p) => load_stopwords(p)?,
        None => BTreeSet::new(),
    };
    preprocess_with_stopwords(raw, opts, &stopwords)
}

/// Same as [`preprocess`] but with an in-memory stopword set.
pub fn preprocess_with_stopwords(
    raw: &RawCorpus,
    opts: &PreprocessOptions,
    stopwords: &BTreeSet<String>,
) -> Result<RawCorpus> {
    opts.validate()?;
    struct WorkDoc {
        tokens: Vec<String>,
        label: String,
        partition: Option<Partition>,
    }

    let mut docs: Vec<WorkDoc> = raw
        .docs
        .iter()
        .map(|d| WorkDoc {
            tokens: clean_text(&d.text, opts)
                .split_whitespace()
                .filter(|t| !stopwords.contains(*t))
                .map(str::to_owned)
                .collect(),
            label: d.label.clone(),
            partition: d.partition,
        })
        .collect();

    loop {
        if docs.is_empty() {
            return Err(Error::EmptyAfterPreprocess);
        }
        let n_docs = docs.len() as f64;
        let mut df: HashMap<String, usize> = HashMap::new();
        for d in &docs {
            let uniq: BTreeSet<&str> = d.tokens.iter().map(String::as_str).collect();
            for w in uniq {
                *df.entry(w.to_owned()).or_insert(0) += 1;
            }
        }
        let keep_word = |w: &str| {
            let frac = df[w] as f64 / n_docs;
            frac >= opts.min_word_doc_frequency && frac <= opts.max_word_doc_frequency
        };

        let mut changed = false;
        for d in &mut docs {
            let before = d.tokens.len();
            d.tokens.retain(|t| keep_word(t));
            if d.tokens.len() != before {
                changed = true;
            }
        }
        let before = docs.len();
        docs.retain(|d| d.tokens.len() >= opts.min_doc_length);
        if docs.len() != before {
            changed = true;
        }
        if !changed {
            break;
        }
    }

    Ok(RawCorpus {
        docs: docs
            .into_iter()
            .map(|d| RawDoc {
                text: d.tokens.join(" "),
                label: d.label,
                partition: d.partition,
            })
            .collect(),
    })
}

/// Maps tokens and labels to contiguous ids. Vocabulary and label ordering
/// is lexicographic so the result is independent of document order.
pub fn build_corpus(raw: &RawCorpus) -> Result<Corpus> {
    if raw.docs.is_empty() {
        return Err(Error::NoDocuments);
    }
    let vocabulary =
        Vocabulary::from_tokens(raw.docs.iter().flat_map(|d| d.text.split_whitespace()));
    let label_set: BTreeSet<&str> = raw.docs.iter().map(|d| d.label.as_str()).collect();
    let labels: Vec<String> = label_set.into_iter().map(str::to_owned).collect();
    let label_index: HashMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();

    let mut docs = Vec::with_capacity(raw.docs.len());
    for (i, d) in raw.docs.iter().enumerate() {
        let tokens: Vec<usize> = d
            .text
            .split_whitespace()
            .map(|t| vocabulary.id(t).expect("token built into vocabulary"))
            .collect();
        if tokens.is_empty() {
            return Err(Error::invalid(format!("document {} has no tokens", i + 1)));
        }
        docs.push(Doc {
            tokens,
            label: label_index[d.label.as_str()],
        });
    }
    Ok(Corpus {
        vocabulary,
        labels,
        docs,
    })
}

/// Uses the partition annotations already present on the raw corpus.
pub fn partition_from_annotations(corpus: Corpus, raw: &RawCorpus) -> Result<PartitionedCorpus> {
    if !raw.fully_partitioned() {
        return Err(Error::invalid(
            "corpus is not fully partition-annotated; use split()",
        ));
    }
    let partition: Vec<Partition> = raw.docs.iter().map(|d| d.partition.unwrap()).collect();
    let pc = PartitionedCorpus { corpus, partition };
    pc.validate()?;
    Ok(pc)
}

/// Deterministic label-stratified split. Sizes use floor allocation for the
/// test and val shares with the remainder assigned to train; label classes
/// with fewer than 3 documents go entirely to train (with a warning).
pub fn split(corpus: Corpus, ratios: (f64, f64, f64), seed: u64) -> Result<PartitionedCorpus> {
    let (r_train, r_test, r_val) = ratios;
    if r_train <= 0.0 || r_test <= 0.0 || r_val <= 0.0 {
        return Err(Error::invalid("all split ratios must be > 0"));
    }
    if (r_train + r_test + r_val - 1.0).abs() > 1e-9 {
        return Err(Error::invalid("split ratios must sum to 1"));
    }

    let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, d) in corpus.docs.iter().enumerate() {
        by_class.entry(d.label).or_default().push(i);
    }

    let mut partition = vec![Partition::Train; corpus.n_docs()];
    for (class, mut ids) in by_class {
        if ids.len() < 3 {
            log::warn!(
                "label class '{}' has {} documents (< 3); assigning all to train",
                corpus.labels[class],
                ids.len()
            );
            continue; // already Train
        }
        let mut rng = seeding::rng_from(&[seed, stream::SPLIT, class as u64]);
        shuffle(&mut ids, &mut rng);
        let n = ids.len();
        let n_test = (r_test * n as f64).floor() as usize;
        let n_val = (r_val * n as f64).floor() as usize;
        let n_train = n - n_test - n_val;
        for &i in &ids[n_train..n_train + n_test] {
            partition[i] = Partition::Test;
        }
        for &i in &ids[n_train + n_test..] {
            partition[i] = Partition::Val;
        }
    }

    let pc = PartitionedCorpus { corpus, partition };
    pc.validate()?;
    Ok(pc)
}

fn shuffle<R: rand::Rng>(ids: &mut [usize], rng: &mut R) {
    for i in (1..ids.len()).rev() {
        let j = rng.random_range(0..=i);
        ids.swap(i, j);
    }
}

/// Summary statistics over the corpus; the length std is the population
/// standard deviation.
pub fn metafeatures(corpus: &Corpus) -> Metafeatures {
    let lengths: Vec<f64> = corpus.docs.iter().map(|d| d.tokens.len() as f64).collect();
    let (avg, std) = crate::linalg::mean_std(&lengths);
    Metafeatures {
        n_docs: corpus.n_docs(),
        n_labels: corpus.n_labels(),
        n_unique_words: corpus.n_words(),
        avg_doc_length: avg,
        std_doc_length: std,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn raw(docs: &[(&str, &str)]) -> RawCorpus {
        RawCorpus {
            docs: docs
                .iter()
                .map(|(t, l)| RawDoc {
                    text: t.to_string(),
                    label: l.to_string(),
                    partition: None,
                })
                .collect(),
        }
    }

    #[test]
    fn parse_two_and_three_column_lines() {
        let c = parse_corpus("cat dog\ttrain\tanimals\ngcc bug\ttrain\tcode\n").unwrap();
        assert_eq!(c.docs.len(), 2);
        assert_eq!(c.docs[0].partition, Some(Partition::Train));
        assert_eq!(c.docs[0].label, "animals");
        assert_eq!(c.docs[1].text, "gcc bug");

        let c2 = parse_corpus("hello world\tgreetings\n").unwrap();
        assert_eq!(c2.docs[0].partition, None);
        assert_eq!(c2.docs[0].label, "greetings");
    }

    #[test]
    fn parse_empty_file_is_no_documents() {
        match parse_corpus("") {
            Err(Error::NoDocuments) => {}
            other => panic!("expected NoDocuments, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_wrong_column_count() {
        match parse_corpus("a\tb\tc\td\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected Parse, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_unknown_partition() {
        match parse_corpus("text\tdev\tlabel\n") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 1);
                assert!(msg.contains("dev"));
            }
            other => panic!("expected Parse, got {other:?}"),
        }
    }

    #[test]
    fn preprocess_hand_example() {
        let r = raw(&[("The cat! cat", "x"), ("a 42 cat", "x")]);
        let mut opts = PreprocessOptions::default();
        opts.min_doc_length = 1;
        let stop: BTreeSet<String> = ["a", "the"].iter().map(|s| s.to_string()).collect();
        let out = preprocess_with_stopwords(&r, &opts, &stop).unwrap();
        let texts: Vec<&str> = out.docs.iter().map(|d| d.text.as_str()).collect();
        assert_eq!(texts, vec!["cat cat", "cat"]);
    }

    #[test]
    fn preprocess_identity_configuration() {
        let r = raw(&[("Alpha Beta", "x"), ("beta gamma", "y")]);
        let opts = PreprocessOptions {
            lowercase: false,
            strip_punct_and_numbers: false,
            ..Default::default()
        };
        let out = preprocess(&r, &opts).unwrap();
        assert_eq!(out.docs[0].text, "Alpha Beta");
        assert_eq!(out.docs[1].text, "beta gamma");
    }

    #[test]
    fn preprocess_min_doc_length_can_empty_corpus() {
        let r = raw(&[("a b", "x"), ("c d", "y")]);
        let opts = PreprocessOptions {
            min_doc_length: 5,
            ..Default::default()
        };
        match preprocess(&r, &opts) {
            Err(Error::EmptyAfterPreprocess) => {}
            other => panic!("expected EmptyAfterPreprocess, got {other:?}"),
        }
    }

    #[test]
    fn preprocess_is_idempotent() {
        let r = raw(&[
            ("aa bb cc dd", "x"),
            ("aa bb", "x"),
            ("cc dd ee", "y"),
            ("ee", "y"),
            ("aa ff gg hh ii", "z"),
        ]);
        let opts = PreprocessOptions {
            min_word_doc_frequency: 0.3,
            max_word_doc_frequency: 0.9,
            min_doc_length: 2,
            ..Default::default()
        };
        let once = preprocess(&r, &opts).unwrap();
        let twice = preprocess(&once, &opts).unwrap();
        let a: Vec<&str> = once.docs.iter().map(|d| d.text.as_str()).collect();
        let b: Vec<&str> = twice.docs.iter().map(|d| d.text.as_str()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn build_corpus_maps_ids_lexicographically() {
        let r = raw(&[("b a", "y"), ("a", "x")]);
        let c = build_corpus(&r).unwrap();
        assert_eq!(c.vocabulary.words(), &["a".to_string(), "b".to_string()]);
        assert_eq!(c.docs[0].tokens, vec![1, 0]);
        assert_eq!(c.docs[1].tokens, vec![0]);
        assert_eq!(c.labels, vec!["x".to_string(), "y".to_string()]);
        assert_eq!(c.docs[0].label, 1);
        assert_eq!(c.docs[1].label, 0);
    }

    #[test]
    fn build_corpus_single_repeated_word() {
        let r = raw(&[("x x x", "l")]);
        let c = build_corpus(&r).unwrap();
        assert_eq!(c.vocabulary.len(), 1);
        assert_eq!(c.docs[0].tokens, vec![0, 0, 0]);
    }

    #[test]
    fn build_corpus_label_ordering() {
        let r = raw(&[("t", "y"), ("t", "x"), ("t", "x")]);
        let c = build_corpus(&r).unwrap();
        assert_eq!(c.labels, vec!["x".to_string(), "y".to_string()]);
        let ids: Vec<usize> = c.docs.iter().map(|d| d.label).collect();
        assert_eq!(ids, vec![1, 0, 0]);
    }

    #[test]
    fn round_trip_tokens_after_build() {
        let r = raw(&[("cat dog cat", "a"), ("dog mouse", "b")]);
        let c = build_corpus(&r).unwrap();
        assert_eq!(c.doc_tokens(0), vec!["cat", "dog", "cat"]);
        assert_eq!(c.doc_tokens(1), vec!["dog", "mouse"]);
    }

    fn synthetic_corpus(per_class: &[usize]) -> Corpus {
        let mut docs = Vec::new();
        for (ci, &n) in per_class.iter().enumerate() {
            for k in 0..n {
                docs.push((format!("w{k} w{} filler", k % 3), format!("c{ci}")));
            }
        }
        let r = RawCorpus {
            docs: docs
                .into_iter()
                .map(|(t, l)| RawDoc {
                    text: t,
                    label: l,
                    partition: None,
                })
                .collect(),
        };
        build_corpus(&r).unwrap()
    }

    #[test]
    fn split_sizes_match_floor_allocation() {
        let c = synthetic_corpus(&[100]);
        let pc = split(c, (0.7, 0.15, 0.15), 7).unwrap();
        assert_eq!(pc.len(Partition::Train), 70);
        assert_eq!(pc.len(Partition::Test), 15);
        assert_eq!(pc.len(Partition::Val), 15);
    }

    #[test]
    fn split_remainder_goes_to_train() {
        let c = synthetic_corpus(&[10]);
        let pc = split(c, (0.7, 0.15, 0.15), 3).unwrap();
        assert_eq!(pc.len(Partition::Train), 8);
        assert_eq!(pc.len(Partition::Test), 1);
        assert_eq!(pc.len(Partition::Val), 1);
    }

    #[test]
    fn split_is_deterministic() {
        let a = split(synthetic_corpus(&[40, 25]), (0.7, 0.15, 0.15), 7).unwrap();
        let b = split(synthetic_corpus(&[40, 25]), (0.7, 0.15, 0.15), 7).unwrap();
        assert_eq!(a.partition, b.partition);
        let c = split(synthetic_corpus(&[40, 25]), (0.7, 0.15, 0.15), 8).unwrap();
        assert_ne!(a.partition, c.partition);
    }

    #[test]
    fn split_is_stratified_within_one_document() {
        let c = synthetic_corpus(&[40, 25, 35]);
        let pc = split(c, (0.7, 0.15, 0.15), 11).unwrap();
        for (class, &n) in [40usize, 25, 35].iter().enumerate() {
            for (part, ratio) in [
                (Partition::Train, 0.7),
                (Partition::Test, 0.15),
                (Partition::Val, 0.15),
            ] {
                let count = pc
                    .corpus
                    .docs
                    .iter()
                    .zip(&pc.partition)
                    .filter(|(d, p)| d.label == class && **p == part)
                    .count();
                let expected = ratio * n as f64;
                // train absorbs the floor remainders, so allow < 1 doc below
                // and < 2 above for train, < 1 for the others
                let slack = if part == Partition::Train { 2.0 } else { 1.0 };
                assert!(
                    (count as f64 - expected).abs() < slack,
                    "class {class} {part}: {count} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn split_tiny_class_goes_to_train() {
        let c = synthetic_corpus(&[2, 30]);
        let pc = split(c, (0.7, 0.15, 0.15), 1).unwrap();
        for (d, p) in pc.corpus.docs.iter().zip(&pc.partition) {
            if d.label == 0 {
                assert_eq!(*p, Partition::Train);
            }
        }
    }

    #[test]
    fn metafeatures_hand_values() {
        let c = build_corpus(&raw(&[("a b", "x"), ("a b c d", "x")])).unwrap();
        let mf = metafeatures(&c);
        assert_eq!(mf.n_docs, 2);
        assert_eq!(mf.avg_doc_length, 3.0);
        assert_eq!(mf.std_doc_length, 1.0);
    }

    #[test]
    fn metafeatures_single_doc() {
        let c = build_corpus(&raw(&[("a b c d e", "x")])).unwrap();
        let mf = metafeatures(&c);
        assert_eq!(mf.avg_doc_length, 5.0);
        assert_eq!(mf.std_doc_length, 0.0);
    }

    #[test]
    fn metafeatures_total_tokens_consistent() {
        let c = synthetic_corpus(&[17, 9]);
        let mf = metafeatures(&c);
        let total: usize = c.docs.iter().map(|d| d.tokens.len()).sum();
        assert_eq!(mf.n_docs, c.n_docs());
        assert_abs_diff_eq!(
            mf.avg_doc_length * mf.n_docs as f64,
            total as f64,
            epsilon = 1e-9 * total as f64
        );
    }

    #[test]
    fn csv_header_is_stable() {
        assert_eq!(
            Metafeatures::CSV_HEADER,
            "n_docs,n_labels,n_unique_words,avg_doc_len,std_doc_len"
        );
    }
}
