//! Multi-objective Bayesian hyperparameter optimization for topic models.
//!
//! The crate trains LDA (collapsed Gibbs) and NMF (multiplicative updates)
//! topic models, scores them on three objectives — NPMI topic coherence,
//! IRBO topic diversity, and document-classification micro-F1 — and drives a
//! Gaussian-process surrogate with a scalarized UCB acquisition to recover
//! the Pareto frontier of the three objectives over a mixed hyperparameter
//! space. Best configurations per metric can be exported to a config store,
//! evaluated zero-shot on other corpora (transfer matrices), and used to
//! warm-start new optimization runs.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod hyperspace;
pub mod linalg;
pub mod metrics;
pub mod optimizer;
pub mod seeding;
pub mod surrogate;
pub mod topicmodels;
pub mod transfer;

pub use error::{Error, Result};
