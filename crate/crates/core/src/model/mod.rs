//! Feature assembly, the linear classifier and the persisted model.

pub mod features;
pub mod logistic;
mod persist;

use std::collections::HashSet;
use std::path::Path;

use rayon::prelude::*;

pub use features::{featurize, FeatureMatrix};
pub use logistic::{
    argmax, train_classifier, Classifier, LogisticObjective, TrainOptions, TrainStatus,
};

use crate::dataset::TimeSeriesDataset;
use crate::error::{Error, Result};
use crate::mining::{FeatureSet, Strategy};
use crate::pipeline::{Density, TransformChoice};
use crate::symbolic::{transform_dataset, ReprConfig, SymbolicSequence, Transform};

/// Version written to and expected from model files.
pub const MODEL_VERSION: u64 = 1;

/// One fitted representation and the subwords selected for it.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub config: ReprConfig,
    pub features: FeatureSet,
}

/// Everything needed to classify new series.
#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub seed: u64,
    pub transform: TransformChoice,
    pub k: Density,
    pub strategy: Strategy,
    /// Class names; classifier output `c` is `classes[c]`.
    pub classes: Vec<String>,
    pub representations: Vec<Representation>,
    pub classifier: Classifier,
    /// Seconds since the Unix epoch at the end of training.
    pub trained_at: u64,
}

/// Predicted class indices (into [`Model::classes`]) and class probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub labels: Vec<usize>,
    pub probabilities: Vec<Vec<f64>>,
}

impl Prediction {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Fraction of rows whose predicted class name matches the dataset label,
    /// or `None` when the dataset is unlabeled.
    pub fn accuracy(&self, model: &Model, dataset: &TimeSeriesDataset) -> Option<f64> {
        let truth = dataset.label_names()?;
        if truth.is_empty() {
            return None;
        }
        let correct = self
            .labels
            .iter()
            .zip(&truth)
            .filter(|(&p, &t)| model.classes[p] == t)
            .count();
        Some(correct as f64 / truth.len() as f64)
    }
}

impl Model {
    /// Width of the concatenated feature space.
    pub fn num_features(&self) -> usize {
        self.representations.iter().map(|r| r.features.len()).sum()
    }

    /// Largest window over all representations: the shortest series the
    /// model can classify.
    pub fn max_window(&self) -> usize {
        self.representations
            .iter()
            .map(|r| r.config.window)
            .max()
            .unwrap_or(0)
    }

    /// Checks the structural invariants that a saved model must satisfy.
    pub fn validate(&self) -> Result<()> {
        if self.representations.is_empty() {
            return Err(Error::Model("model has no representations".into()));
        }
        if self.classes.len() < 2 {
            return Err(Error::Model("model needs at least two classes".into()));
        }
        let distinct: HashSet<&String> = self.classes.iter().collect();
        if distinct.len() != self.classes.len() {
            return Err(Error::Model("duplicate class names".into()));
        }
        for (i, rep) in self.representations.iter().enumerate() {
            let cfg = &rep.config;
            cfg.validate()
                .map_err(|e| Error::Model(format!("representation {i}: {e}")))?;
            match cfg.transform {
                Transform::Sfa if cfg.bins.is_none() => {
                    return Err(Error::Model(format!(
                        "representation {i}: SFA bins missing"
                    )))
                }
                Transform::Sax if cfg.bins.is_some() => {
                    return Err(Error::Model(format!("representation {i}: SAX has no bins")))
                }
                _ => {}
            }
            let mut seen = HashSet::new();
            for sw in &rep.features.subwords {
                if sw.is_empty() || !sw.bytes().all(|b| b.is_ascii_lowercase()) {
                    return Err(Error::Model(format!(
                        "representation {i}: invalid subword '{sw}'"
                    )));
                }
                if !seen.insert(sw) {
                    return Err(Error::Model(format!(
                        "representation {i}: duplicate subword '{sw}'"
                    )));
                }
            }
        }
        let c = self.classes.len();
        let d = self.num_features();
        if self.classifier.weights.len() != c || self.classifier.intercepts.len() != c {
            return Err(Error::Model(format!(
                "classifier does not have {c} classes"
            )));
        }
        if self.classifier.weights.iter().any(|w| w.len() != d) {
            return Err(Error::Model(format!(
                "weight vectors must have {d} entries"
            )));
        }
        let finite = self
            .classifier
            .weights
            .iter()
            .flatten()
            .chain(&self.classifier.intercepts)
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::Model("non-finite classifier weights".into()));
        }
        Ok(())
    }

    /// Symbolic sequences of every series under every stored representation.
    pub fn transform(&self, dataset: &TimeSeriesDataset) -> Result<Vec<Vec<SymbolicSequence>>> {
        let window = self.max_window();
        if !dataset.is_empty() && dataset.series_length() < window {
            return Err(Error::invalid(format!(
                "series of length {} are shorter than the model's window {window}",
                dataset.series_length()
            )));
        }
        self.representations
            .par_iter()
            .map(|r| transform_dataset(dataset, &r.config))
            .collect()
    }

    pub fn featurize(&self, dataset: &TimeSeriesDataset) -> Result<FeatureMatrix> {
        let sequences = self.transform(dataset)?;
        let sets: Vec<FeatureSet> = self
            .representations
            .iter()
            .map(|r| r.features.clone())
            .collect();
        featurize(&sequences, &sets)
    }

    pub fn predict(&self, dataset: &TimeSeriesDataset) -> Result<Prediction> {
        let x = self.featurize(dataset)?;
        let probabilities = self.classifier.predict_proba(&x)?;
        let labels = probabilities.iter().map(|p| argmax(p)).collect();
        Ok(Prediction {
            labels,
            probabilities,
        })
    }

    /// Serializes the model as a JSON document.
    pub fn to_json(&self) -> Result<String> {
        persist::to_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        persist::from_json(text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let text = self.to_json()?;
        std::fs::write(path, text).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Model::from_json(&text)
    }
}

pub fn predict(model: &Model, dataset: &TimeSeriesDataset) -> Result<Prediction> {
    model.predict(dataset)
}

pub fn save_model(model: &Model, path: impl AsRef<Path>) -> Result<()> {
    model.save(path)
}

pub fn load_model(path: impl AsRef<Path>) -> Result<Model> {
    Model::load(path)
}
