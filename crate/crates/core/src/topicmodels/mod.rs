//! Topic model trainers with a uniform output shape: per-topic ranked word
//! lists plus document-topic representations for the train, validation, and
//! test splits.

pub mod lda;
pub mod nmf;

use std::fmt;

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::corpus::PartitionedCorpus;
use crate::error::{Error, Result};
use crate::hyperspace::{ConfigPoint, SearchSpace};

pub use lda::{gibbs_conditional, train_lda, GibbsState, LdaTrainOptions};
pub use nmf::{nmf_transform, nndsvd_init, train_nmf, NmfTrainOptions, NndsvdVariant};

/// Which trainer a problem targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Lda,
    Nmf,
}

impl ModelKind {
    pub fn space(&self) -> SearchSpace {
        match self {
            ModelKind::Lda => crate::hyperspace::lda_space(),
            ModelKind::Nmf => crate::hyperspace::nmf_space(),
        }
    }

    pub fn parse(s: &str) -> Option<ModelKind> {
        match s {
            "lda" => Some(ModelKind::Lda),
            "nmf" => Some(ModelKind::Nmf),
            _ => None,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Lda => "lda",
            ModelKind::Nmf => "nmf",
        })
    }
}

/// Trained-model view shared by every trainer: `topics[k]` is the full
/// weight-ranked word list of topic k, and the three matrices hold one row
/// per document of the corresponding split (corpus order within the split).
#[derive(Debug, Clone)]
pub struct TopicModelOutput {
    pub topics: Vec<Vec<(usize, f64)>>,
    pub doc_topic_train: Array2<f64>,
    pub doc_topic_val: Array2<f64>,
    pub doc_topic_test: Array2<f64>,
}

impl TopicModelOutput {
    pub fn n_topics(&self) -> usize {
        self.topics.len()
    }

    /// The ids of the `n` heaviest words of topic `k`.
    pub fn top_words(&self, k: usize, n: usize) -> Vec<usize> {
        self.topics[k].iter().take(n).map(|(w, _)| *w).collect()
    }

    /// Diagnostic JSON dump: word strings with weights plus matrix shapes.
    /// Not a stability-guaranteed format.
    pub fn dump_json(&self, vocab: &crate::corpus::Vocabulary, top_n: usize) -> serde_json::Value {
        let topics: Vec<serde_json::Value> = self
            .topics
            .iter()
            .map(|t| {
                t.iter()
                    .take(top_n)
                    .map(|(w, wt)| serde_json::json!([vocab.word(*w), wt]))
                    .collect()
            })
            .collect();
        serde_json::json!({
            "topics": topics,
            "doc_topic_shapes": {
                "train": self.doc_topic_train.dim(),
                "val": self.doc_topic_val.dim(),
                "test": self.doc_topic_test.dim(),
            }
        })
    }
}

/// Ranks the words of one weight row, heaviest first; ties break toward the
/// lower word id so output is deterministic.
pub(crate) fn rank_row(weights: &[f64]) -> Vec<(usize, f64)> {
    let mut ranked: Vec<(usize, f64)> = weights.iter().copied().enumerate().collect();
    ranked.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    ranked
}

/// Trains the given model kind on the corpus with one configuration.
pub fn train(
    kind: ModelKind,
    corpus: &PartitionedCorpus,
    cfg: &ConfigPoint,
    lda_opts: &LdaTrainOptions,
    nmf_opts: &NmfTrainOptions,
    seed: u64,
) -> Result<TopicModelOutput> {
    match kind {
        ModelKind::Lda => train_lda(corpus, cfg, lda_opts, seed),
        ModelKind::Nmf => train_nmf(corpus, cfg, nmf_opts, seed),
    }
}

pub(crate) fn split_docs(corpus: &PartitionedCorpus, part: crate::corpus::Partition) -> Vec<Vec<usize>> {
    corpus
        .doc_ids(part)
        .into_iter()
        .map(|i| corpus.corpus.docs[i].tokens.clone())
        .collect()
}

pub(crate) fn require_nonempty(docs: &[Vec<usize>], name: &str) -> Result<()> {
    if docs.is_empty() {
        return Err(Error::invalid(format!("empty {name} split")));
    }
    Ok(())
}
