//! Mixed hyperparameter search spaces, unit-cube encoding, and Latin
//! Hypercube sampling.
//!
//! Continuous dimensions may be linear- or log-scaled, integers are relaxed
//! to the unit interval and rounded on decode (ties toward the lower value),
//! and categoricals are one-hot encoded for the surrogate while Latin
//! Hypercube stratification operates on the category index.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seeding;
use rand::Rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimensionKind {
    ContinuousLinear { lo: f64, hi: f64 },
    ContinuousLog { lo: f64, hi: f64 },
    Integer { lo: i64, hi: i64 },
    Categorical { values: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dimension {
    pub name: String,
    #[serde(flatten)]
    pub kind: DimensionKind,
}

impl Dimension {
    pub fn linear(name: &str, lo: f64, hi: f64) -> Dimension {
        assert!(lo < hi, "linear dimension requires lo < hi");
        Dimension {
            name: name.to_owned(),
            kind: DimensionKind::ContinuousLinear { lo, hi },
        }
    }

    pub fn log(name: &str, lo: f64, hi: f64) -> Dimension {
        assert!(lo > 0.0 && lo < hi, "log dimension requires 0 < lo < hi");
        Dimension {
            name: name.to_owned(),
            kind: DimensionKind::ContinuousLog { lo, hi },
        }
    }

    pub fn integer(name: &str, lo: i64, hi: i64) -> Dimension {
        assert!(lo < hi, "integer dimension requires lo < hi");
        Dimension {
            name: name.to_owned(),
            kind: DimensionKind::Integer { lo, hi },
        }
    }

    pub fn categorical(name: &str, values: &[&str]) -> Dimension {
        assert!(!values.is_empty(), "categorical dimension needs values");
        let mut seen = std::collections::BTreeSet::new();
        for v in values {
            assert!(seen.insert(*v), "duplicate category '{v}'");
        }
        Dimension {
            name: name.to_owned(),
            kind: DimensionKind::Categorical {
                values: values.iter().map(|s| s.to_string()).collect(),
            },
        }
    }

    /// Width of this dimension in the encoded representation.
    pub fn encoded_width(&self) -> usize {
        match &self.kind {
            DimensionKind::Categorical { values } => values.len(),
            _ => 1,
        }
    }
}

/// An ordered list of dimensions with unique names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    dims: Vec<Dimension>,
}

impl SearchSpace {
    pub fn new(dims: Vec<Dimension>) -> SearchSpace {
        let mut names = std::collections::BTreeSet::new();
        for d in &dims {
            assert!(names.insert(d.name.clone()), "duplicate dimension name");
        }
        SearchSpace { dims }
    }

    pub fn dims(&self) -> &[Dimension] {
        &self.dims
    }

    pub fn n_dims(&self) -> usize {
        self.dims.len()
    }

    pub fn encoded_width(&self) -> usize {
        self.dims.iter().map(Dimension::encoded_width).sum()
    }

    pub fn dim(&self, name: &str) -> Option<&Dimension> {
        self.dims.iter().find(|d| d.name == name)
    }
}

/// A concrete value for one dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConfigValue {
    Int(i64),
    Real(f64),
    Cat(String),
}

impl ConfigValue {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            ConfigValue::Real(v) => Some(*v),
            ConfigValue::Int(v) => Some(*v as f64),
            ConfigValue::Cat(_) => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            ConfigValue::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            ConfigValue::Cat(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for ConfigValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigValue::Int(v) => write!(f, "{v}"),
            ConfigValue::Real(v) => write!(f, "{v}"),
            ConfigValue::Cat(s) => write!(f, "{s}"),
        }
    }
}

/// A full assignment of values to a space's dimensions. Serializes as a flat
/// JSON object `{dimension name: value}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct ConfigPoint {
    assignments: BTreeMap<String, ConfigValue>,
}

impl ConfigPoint {
    pub fn new() -> ConfigPoint {
        ConfigPoint::default()
    }

    pub fn with(mut self, name: &str, value: ConfigValue) -> ConfigPoint {
        self.assignments.insert(name.to_owned(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: ConfigValue) {
        self.assignments.insert(name.to_owned(), value);
    }

    pub fn get(&self, name: &str) -> Option<&ConfigValue> {
        self.assignments.get(name)
    }

    pub fn real(&self, name: &str) -> Result<f64> {
        self.get(name)
            .and_then(ConfigValue::as_f64)
            .ok_or_else(|| Error::invalid(format!("missing real value for '{name}'")))
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        self.get(name)
            .and_then(ConfigValue::as_i64)
            .ok_or_else(|| Error::invalid(format!("missing integer value for '{name}'")))
    }

    pub fn cat(&self, name: &str) -> Result<&str> {
        self.get(name)
            .and_then(ConfigValue::as_str)
            .ok_or_else(|| Error::invalid(format!("missing categorical value for '{name}'")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &ConfigValue)> {
        self.assignments.iter()
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// Canonical JSON string (dimension order is the map's sorted order),
    /// usable as an exact-match key.
    pub fn canonical_string(&self) -> String {
        serde_json::to_string(self).expect("config serialization cannot fail")
    }
}

/// A point in the unit hypercube of the encoded space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodedPoint {
    pub coords: Vec<f64>,
}

/// Validates a configuration against a space, naming the offending
/// dimension on failure.
pub fn validate_config(space: &SearchSpace, cfg: &ConfigPoint) -> Result<()> {
    if cfg.len() != space.n_dims() {
        return Err(Error::invalid(format!(
            "config has {} assignments, space has {} dimensions",
            cfg.len(),
            space.n_dims()
        )));
    }
    for dim in space.dims() {
        let value = cfg
            .get(&dim.name)
            .ok_or_else(|| Error::invalid(format!("dimension '{}' not assigned", dim.name)))?;
        match (&dim.kind, value) {
            (DimensionKind::ContinuousLinear { lo, hi }, v) => {
                let x = v.as_f64().ok_or_else(|| bad(dim, "a real"))?;
                if x < *lo || x > *hi {
                    return Err(out_of_range(dim, &x.to_string()));
                }
            }
            (DimensionKind::ContinuousLog { lo, hi }, v) => {
                let x = v.as_f64().ok_or_else(|| bad(dim, "a real"))?;
                if x < *lo || x > *hi {
                    return Err(out_of_range(dim, &x.to_string()));
                }
            }
            (DimensionKind::Integer { lo, hi }, ConfigValue::Int(x)) => {
                if x < lo || x > hi {
                    return Err(out_of_range(dim, &x.to_string()));
                }
            }
            (DimensionKind::Integer { .. }, _) => return Err(bad(dim, "an integer")),
            (DimensionKind::Categorical { values }, ConfigValue::Cat(s)) => {
                if !values.iter().any(|v| v == s) {
                    return Err(out_of_range(dim, s));
                }
            }
            (DimensionKind::Categorical { .. }, _) => return Err(bad(dim, "a category")),
        }
    }
    Ok(())
}

fn bad(dim: &Dimension, expected: &str) -> Error {
    Error::invalid(format!("dimension '{}' expects {expected} value", dim.name))
}

fn out_of_range(dim: &Dimension, got: &str) -> Error {
    Error::invalid(format!("dimension '{}': value {got} out of range", dim.name))
}

/// Maps a configuration into the unit hypercube. Linear and integer
/// dimensions scale affinely, log dimensions scale in log10 space,
/// categoricals become one-hot blocks.
pub fn encode(space: &SearchSpace, cfg: &ConfigPoint) -> Result<EncodedPoint> {
    validate_config(space, cfg)?;
    let mut coords = Vec::with_capacity(space.encoded_width());
    for dim in space.dims() {
        let value = cfg.get(&dim.name).expect("validated");
        match &dim.kind {
            DimensionKind::ContinuousLinear { lo, hi } => {
                coords.push((value.as_f64().unwrap() - lo) / (hi - lo));
            }
            DimensionKind::ContinuousLog { lo, hi } => {
                let (l, h) = (lo.log10(), hi.log10());
                coords.push((value.as_f64().unwrap().log10() - l) / (h - l));
            }
            DimensionKind::Integer { lo, hi } => {
                coords.push((value.as_i64().unwrap() - lo) as f64 / (hi - lo) as f64);
            }
            DimensionKind::Categorical { values } => {
                let chosen = value.as_str().unwrap();
                for v in values {
                    coords.push(if v == chosen { 1.0 } else { 0.0 });
                }
            }
        }
    }
    Ok(EncodedPoint { coords })
}

/// Rounds half-down: ties between two integers resolve to the lower one.
fn round_tie_low(x: f64) -> i64 {
    let fl = x.floor();
    if x - fl > 0.5 {
        fl as i64 + 1
    } else {
        fl as i64
    }
}

/// Inverse of [`encode`]. Integer coordinates round to the nearest value
/// with ties toward the lower bound; categorical blocks take the argmax,
/// ties toward the first listed category.
pub fn decode(space: &SearchSpace, pt: &EncodedPoint) -> Result<ConfigPoint> {
    if pt.coords.len() != space.encoded_width() {
        return Err(Error::invalid(format!(
            "encoded point has width {}, space expects {}",
            pt.coords.len(),
            space.encoded_width()
        )));
    }
    for (i, c) in pt.coords.iter().enumerate() {
        if !(-1e-9..=1.0 + 1e-9).contains(c) {
            return Err(Error::invalid(format!(
                "encoded coordinate {i} = {c} outside [0,1]"
            )));
        }
    }
    let mut cfg = ConfigPoint::new();
    let mut at = 0usize;
    for dim in space.dims() {
        match &dim.kind {
            DimensionKind::ContinuousLinear { lo, hi } => {
                let u = pt.coords[at].clamp(0.0, 1.0);
                cfg.set(&dim.name, ConfigValue::Real(lo + u * (hi - lo)));
                at += 1;
            }
            DimensionKind::ContinuousLog { lo, hi } => {
                let u = pt.coords[at].clamp(0.0, 1.0);
                let (l, h) = (lo.log10(), hi.log10());
                cfg.set(
                    &dim.name,
                    ConfigValue::Real(10f64.powf(l + u * (h - l)).clamp(*lo, *hi)),
                );
                at += 1;
            }
            DimensionKind::Integer { lo, hi } => {
                let u = pt.coords[at].clamp(0.0, 1.0);
                let v = round_tie_low(*lo as f64 + u * (hi - lo) as f64).clamp(*lo, *hi);
                cfg.set(&dim.name, ConfigValue::Int(v));
                at += 1;
            }
            DimensionKind::Categorical { values } => {
                let block = &pt.coords[at..at + values.len()];
                let mut best = 0usize;
                for (i, v) in block.iter().enumerate() {
                    if *v > block[best] {
                        best = i;
                    }
                }
                cfg.set(&dim.name, ConfigValue::Cat(values[best].clone()));
                at += values.len();
            }
        }
    }
    Ok(cfg)
}

/// The LDA space: number of topics plus the symmetric Dirichlet priors, the
/// priors on a log scale.
pub fn lda_space() -> SearchSpace {
    SearchSpace::new(vec![
        Dimension::integer("n_topics", 5, 150),
        Dimension::log("alpha", 1e-4, 10.0),
        Dimension::log("beta", 1e-4, 10.0),
    ])
}

/// The NMF space: topics, elastic-net regularization strength and mix,
/// factor initialization method and regularization target.
pub fn nmf_space() -> SearchSpace {
    SearchSpace::new(vec![
        Dimension::integer("n_topics", 5, 150),
        Dimension::linear("reg_factor", 0.0, 0.5),
        Dimension::linear("l1_ratio", 0.0, 1.0),
        Dimension::categorical("init", &["random", "nndsvd", "nndsvda", "nndsvdar"]),
        Dimension::categorical("reg_target", &["V", "H", "both"]),
    ])
}

/// The CTM space. Declarable (for config-store parsing and sampling) only;
/// this crate ships no CTM trainer.
pub fn ctm_space() -> SearchSpace {
    SearchSpace::new(vec![
        Dimension::integer("n_topics", 5, 150),
        Dimension::categorical(
            "activation",
            &["softplus", "relu", "sigmoid", "leakyrelu", "rrelu", "elu", "selu"],
        ),
        Dimension::linear("dropout", 0.0, 0.95),
        Dimension::categorical("learn_priors", &["true", "false"]),
        Dimension::log("learning_rate", 1e-4, 1e-1),
        Dimension::linear("momentum", 0.0, 0.9),
        Dimension::categorical("n_layers", &["1", "2", "3", "4", "5"]),
        Dimension::categorical(
            "n_neurons",
            &["100", "200", "300", "400", "500", "600", "700", "800", "900", "1000"],
        ),
        Dimension::categorical("optimizer", &["adagrad", "adam", "sgd", "adadelta", "rmsprop"]),
    ])
}

/// Raw Latin Hypercube unit samples: an `n x n_dims` matrix where each
/// column visits each of the n equal bins of [0,1] exactly once, jittered
/// uniformly within its bin.
pub fn lhs_sample_unit(space: &SearchSpace, n: usize, seed: u64) -> Vec<Vec<f64>> {
    assert!(n >= 1, "lhs_sample requires n >= 1");
    let mut rng = seeding::rng_from(&[seed, 0x1b5]);
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(space.n_dims());
    for _ in 0..space.n_dims() {
        let mut bins: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            bins.swap(i, j);
        }
        let col: Vec<f64> = bins
            .into_iter()
            .map(|b| (b as f64 + rng.random::<f64>()) / n as f64)
            .collect();
        columns.push(col);
    }
    (0..n)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect()
}

/// Maps a vector of per-dimension unit samples to a configuration.
/// Categoricals are stratified over the category index.
pub fn config_from_unit(space: &SearchSpace, unit: &[f64]) -> ConfigPoint {
    assert_eq!(unit.len(), space.n_dims());
    let mut cfg = ConfigPoint::new();
    for (dim, &u) in space.dims().iter().zip(unit) {
        let u = u.clamp(0.0, 1.0);
        match &dim.kind {
            DimensionKind::ContinuousLinear { lo, hi } => {
                cfg.set(&dim.name, ConfigValue::Real(lo + u * (hi - lo)));
            }
            DimensionKind::ContinuousLog { lo, hi } => {
                let (l, h) = (lo.log10(), hi.log10());
                cfg.set(
                    &dim.name,
                    ConfigValue::Real(10f64.powf(l + u * (h - l)).clamp(*lo, *hi)),
                );
            }
            DimensionKind::Integer { lo, hi } => {
                let v = round_tie_low(*lo as f64 + u * (hi - lo) as f64).clamp(*lo, *hi);
                cfg.set(&dim.name, ConfigValue::Int(v));
            }
            DimensionKind::Categorical { values } => {
                let idx = ((u * values.len() as f64).floor() as usize).min(values.len() - 1);
                cfg.set(&dim.name, ConfigValue::Cat(values[idx].clone()));
            }
        }
    }
    cfg
}

/// Latin Hypercube sample of `n` configurations, deterministic in `seed`.
pub fn lhs_sample(space: &SearchSpace, n: usize, seed: u64) -> Vec<ConfigPoint> {
    lhs_sample_unit(space, n, seed)
        .iter()
        .map(|u| config_from_unit(space, u))
        .collect()
}
