//! Latent Dirichlet Allocation trained by collapsed Gibbs sampling.
//!
//! The sampler integrates out the topic mixtures and topic-word
//! distributions and resamples one topic assignment per token from
//!
//! ```text
//! p(k) ∝ (n_dk + α) · (n_kw + β) / (n_k + |W|·β)
//! ```
//!
//! where all counts exclude the token being resampled. Point estimates come
//! from the final state: φ_k(w) = (n_kw + β)/(n_k + |W|β) and
//! θ_d(k) = (n_dk + α)/(n_d + Kα). Held-out documents are folded in with the
//! topic-word counts frozen.

use ndarray::Array2;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{Partition, PartitionedCorpus};
use crate::error::{Error, Result};
use crate::hyperspace::ConfigPoint;
use crate::seeding;

use super::{rank_row, require_nonempty, split_docs, TopicModelOutput};

/// Inference-depth knobs for the Gibbs sampler.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LdaTrainOptions {
    pub gibbs_sweeps: usize,
    pub burn_in: usize,
    pub fold_in_sweeps: usize,
}

impl Default for LdaTrainOptions {
    fn default() -> Self {
        LdaTrainOptions {
            gibbs_sweeps: 200,
            burn_in: 150,
            fold_in_sweeps: 20,
        }
    }
}

impl LdaTrainOptions {
    pub fn validate(&self) -> Result<()> {
        if self.burn_in >= self.gibbs_sweeps {
            return Err(Error::invalid("burn_in must be < gibbs_sweeps"));
        }
        if self.gibbs_sweeps == 0 || self.fold_in_sweeps == 0 {
            return Err(Error::invalid("sweep counts must be >= 1"));
        }
        Ok(())
    }
}

#[inline]
fn fill_unnormalized(
    out: &mut [f64],
    doc_topic: &[f64],
    word_topic: &[f64],
    topic_total: &[f64],
    alpha: f64,
    beta: f64,
    w_beta: f64,
) {
    for k in 0..out.len() {
        out[k] = (doc_topic[k] + alpha) * (word_topic[k] + beta) / (topic_total[k] + w_beta);
    }
}

/// The per-token conditional of the collapsed sampler, normalized to a
/// probability vector. All three count vectors exclude the token being
/// resampled; `n_vocab` is |W|.
pub fn gibbs_conditional(
    doc_topic_minus: &[f64],
    topic_word_minus: &[f64],
    topic_total_minus: &[f64],
    alpha: f64,
    beta: f64,
    n_vocab: usize,
) -> Vec<f64> {
    let k = doc_topic_minus.len();
    assert_eq!(topic_word_minus.len(), k);
    assert_eq!(topic_total_minus.len(), k);
    assert!(alpha > 0.0 && beta > 0.0, "alpha and beta must be positive");
    let mut p = vec![0.0; k];
    fill_unnormalized(
        &mut p,
        doc_topic_minus,
        topic_word_minus,
        topic_total_minus,
        alpha,
        beta,
        n_vocab as f64 * beta,
    );
    let total: f64 = p.iter().sum();
    for v in &mut p {
        *v /= total;
    }
    p
}

/// Mutable sampler state over the training split. Exposed so tests can step
/// sweep by sweep and check count consistency.
pub struct GibbsState {
    k: usize,
    n_vocab: usize,
    alpha: f64,
    beta: f64,
    docs: Vec<Vec<usize>>,
    assignments: Vec<Vec<usize>>,
    doc_topic: Vec<f64>,   // D x K, row-major
    word_topic: Vec<f64>,  // W x K, row-major (contiguous per word)
    topic_total: Vec<f64>, // K
    scratch: Vec<f64>,
}

impl GibbsState {
    pub fn init(
        docs: Vec<Vec<usize>>,
        k: usize,
        n_vocab: usize,
        alpha: f64,
        beta: f64,
        rng: &mut ChaCha8Rng,
    ) -> GibbsState {
        let d = docs.len();
        let mut state = GibbsState {
            k,
            n_vocab,
            alpha,
            beta,
            assignments: docs.iter().map(|doc| vec![0; doc.len()]).collect(),
            docs,
            doc_topic: vec![0.0; d * k],
            word_topic: vec![0.0; n_vocab * k],
            topic_total: vec![0.0; k],
            scratch: vec![0.0; k],
        };
        for d_i in 0..state.docs.len() {
            for t_i in 0..state.docs[d_i].len() {
                let topic = rng.random_range(0..k);
                state.assignments[d_i][t_i] = topic;
                let w = state.docs[d_i][t_i];
                state.doc_topic[d_i * k + topic] += 1.0;
                state.word_topic[w * k + topic] += 1.0;
                state.topic_total[topic] += 1.0;
            }
        }
        state
    }

    /// One full sweep: resamples every token once, in document order.
    pub fn sweep(&mut self, rng: &mut ChaCha8Rng) {
        let k = self.k;
        let w_beta = self.n_vocab as f64 * self.beta;
        for d_i in 0..self.docs.len() {
            for t_i in 0..self.docs[d_i].len() {
                let w = self.docs[d_i][t_i];
                let old = self.assignments[d_i][t_i];
                self.doc_topic[d_i * k + old] -= 1.0;
                self.word_topic[w * k + old] -= 1.0;
                self.topic_total[old] -= 1.0;

                fill_unnormalized(
                    &mut self.scratch,
                    &self.doc_topic[d_i * k..(d_i + 1) * k],
                    &self.word_topic[w * k..(w + 1) * k],
                    &self.topic_total,
                    self.alpha,
                    self.beta,
                    w_beta,
                );
                let new = sample_unnormalized(&self.scratch, rng);

                self.assignments[d_i][t_i] = new;
                self.doc_topic[d_i * k + new] += 1.0;
                self.word_topic[w * k + new] += 1.0;
                self.topic_total[new] += 1.0;
            }
        }
    }

    /// Count-consistency check: per-document topic counts sum to document
    /// length and per-topic word counts sum to the topic totals.
    pub fn counts_consistent(&self) -> bool {
        let k = self.k;
        for (d_i, doc) in self.docs.iter().enumerate() {
            let sum: f64 = self.doc_topic[d_i * k..(d_i + 1) * k].iter().sum();
            if sum != doc.len() as f64 {
                return false;
            }
        }
        for topic in 0..k {
            let sum: f64 = (0..self.n_vocab).map(|w| self.word_topic[w * k + topic]).sum();
            if sum != self.topic_total[topic] {
                return false;
            }
        }
        true
    }

    /// Topic-word distributions φ, shape (K, |W|); rows sum to 1.
    pub fn phi(&self) -> Array2<f64> {
        let mut phi = Array2::<f64>::zeros((self.k, self.n_vocab));
        let w_beta = self.n_vocab as f64 * self.beta;
        for topic in 0..self.k {
            let denom = self.topic_total[topic] + w_beta;
            for w in 0..self.n_vocab {
                phi[[topic, w]] = (self.word_topic[w * self.k + topic] + self.beta) / denom;
            }
        }
        phi
    }

    /// Document-topic distributions θ for the training docs, shape (D, K).
    pub fn theta(&self) -> Array2<f64> {
        let mut theta = Array2::<f64>::zeros((self.docs.len(), self.k));
        let k_alpha = self.k as f64 * self.alpha;
        for (d_i, doc) in self.docs.iter().enumerate() {
            let denom = doc.len() as f64 + k_alpha;
            for topic in 0..self.k {
                theta[[d_i, topic]] = (self.doc_topic[d_i * self.k + topic] + self.alpha) / denom;
            }
        }
        theta
    }

    /// Infers θ rows for held-out documents with the trained topic-word
    /// counts frozen; per-document assignments are resampled `sweeps` times.
    pub fn fold_in(&self, docs: &[Vec<usize>], sweeps: usize, rng: &mut ChaCha8Rng) -> Array2<f64> {
        let k = self.k;
        let w_beta = self.n_vocab as f64 * self.beta;
        let k_alpha = k as f64 * self.alpha;
        let mut theta = Array2::<f64>::zeros((docs.len(), k));
        let mut scratch = vec![0.0; k];
        for (row, doc) in docs.iter().enumerate() {
            let mut local_counts = vec![0.0f64; k];
            let mut local_assign = vec![0usize; doc.len()];
            for (t_i, _) in doc.iter().enumerate() {
                let topic = rng.random_range(0..k);
                local_assign[t_i] = topic;
                local_counts[topic] += 1.0;
            }
            for _ in 0..sweeps {
                for (t_i, &w) in doc.iter().enumerate() {
                    let old = local_assign[t_i];
                    local_counts[old] -= 1.0;
                    fill_unnormalized(
                        &mut scratch,
                        &local_counts,
                        &self.word_topic[w * k..(w + 1) * k],
                        &self.topic_total,
                        self.alpha,
                        self.beta,
                        w_beta,
                    );
                    let new = sample_unnormalized(&scratch, rng);
                    local_assign[t_i] = new;
                    local_counts[new] += 1.0;
                }
            }
            let denom = doc.len() as f64 + k_alpha;
            for topic in 0..k {
                theta[[row, topic]] = (local_counts[topic] + self.alpha) / denom;
            }
        }
        theta
    }
}

fn sample_unnormalized(weights: &[f64], rng: &mut ChaCha8Rng) -> usize {
    let total: f64 = weights.iter().sum();
    let u = rng.random::<f64>() * total;
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if u <= acc {
            return i;
        }
    }
    weights.len() - 1
}

/// Trains LDA on the train split by collapsed Gibbs sampling and folds in
/// the validation and test splits. Deterministic given the seed.
pub fn train_lda(
    corpus: &PartitionedCorpus,
    cfg: &ConfigPoint,
    opts: &LdaTrainOptions,
    seed: u64,
) -> Result<TopicModelOutput> {
    opts.validate()?;
    let k = cfg.int("n_topics")? as usize;
    let alpha = cfg.real("alpha")?;
    let beta = cfg.real("beta")?;
    if k < 2 {
        return Err(Error::invalid("n_topics must be >= 2"));
    }
    if alpha <= 0.0 || beta <= 0.0 {
        return Err(Error::invalid("alpha and beta must be > 0"));
    }

    let n_vocab = corpus.corpus.n_words();
    if k > n_vocab {
        log::warn!("n_topics = {k} exceeds vocabulary size {n_vocab}");
    }

    let train = split_docs(corpus, Partition::Train);
    let val = split_docs(corpus, Partition::Val);
    let test = split_docs(corpus, Partition::Test);
    require_nonempty(&train, "train")?;
    require_nonempty(&val, "val")?;
    require_nonempty(&test, "test")?;

    let mut rng = seeding::rng_from(&[seed, 0x1da]);
    let mut state = GibbsState::init(train, k, n_vocab, alpha, beta, &mut rng);
    for _ in 0..opts.gibbs_sweeps {
        state.sweep(&mut rng);
    }

    let phi = state.phi();
    let doc_topic_train = state.theta();
    let doc_topic_val = state.fold_in(&val, opts.fold_in_sweeps, &mut rng);
    let doc_topic_test = state.fold_in(&test, opts.fold_in_sweeps, &mut rng);

    let topics = (0..k)
        .map(|t| rank_row(phi.row(t).as_slice().expect("contiguous row")))
        .collect();

    Ok(TopicModelOutput {
        topics,
        doc_topic_train,
        doc_topic_val,
        doc_topic_test,
    })
}
