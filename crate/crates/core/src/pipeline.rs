//! End-to-end training: sample representations, transform, select features,
//! train the classifier.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;

use crate::dataset::TimeSeriesDataset;
use crate::error::{Error, Result};
use crate::mining::{select_features, FeatureSet, MiningOptions, Strategy};
use crate::model::{featurize, train_classifier, Model, Representation, TrainOptions, TrainStatus};
use crate::rng::{substream, Purpose};
use crate::symbolic::{
    fit_transform_dataset, sample_configs, ReprConfig, SymbolicSequence, Transform,
};

/// Which symbolic transforms to sample representations from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformChoice {
    Sax,
    Sfa,
    Both,
}

impl TransformChoice {
    pub fn name(self) -> &'static str {
        match self {
            TransformChoice::Sax => "sax",
            TransformChoice::Sfa => "sfa",
            TransformChoice::Both => "both",
        }
    }
}

impl fmt::Display for TransformChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sax" => Ok(TransformChoice::Sax),
            "sfa" => Ok(TransformChoice::Sfa),
            "both" => Ok(TransformChoice::Both),
            other => Err(Error::invalid(format!(
                "unknown transform '{other}' (expected sax, sfa or both)"
            ))),
        }
    }
}

/// Representations per `log2 L` for each transform; 0 disables it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Density {
    pub sax: usize,
    pub sfa: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitConfig {
    pub transform: TransformChoice,
    /// Density used for every selected transform unless overridden.
    pub k: usize,
    pub sax_k: Option<usize>,
    pub sfa_k: Option<usize>,
    pub strategy: Strategy,
    pub features_per_rep: usize,
    pub seed: u64,
    pub numerosity_reduction: bool,
    pub drop_dc: bool,
    pub pool_multiplier: usize,
    pub min_support: usize,
    pub train: TrainOptions,
    /// Process representations on the rayon thread pool.
    pub parallel: bool,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            transform: TransformChoice::Sfa,
            k: 5,
            sax_k: None,
            sfa_k: None,
            strategy: Strategy::RS,
            features_per_rep: 500,
            seed: 42,
            numerosity_reduction: true,
            drop_dc: false,
            pool_multiplier: 4,
            min_support: 2,
            train: TrainOptions::default(),
            parallel: true,
        }
    }
}

impl FitConfig {
    /// Effective density per transform.
    pub fn density(&self) -> Result<Density> {
        let sax = self.sax_k.unwrap_or(self.k);
        let sfa = self.sfa_k.unwrap_or(self.k);
        let d = match self.transform {
            TransformChoice::Sax => Density { sax, sfa: 0 },
            TransformChoice::Sfa => Density { sax: 0, sfa },
            TransformChoice::Both => Density { sax, sfa },
        };
        if d.sax == 0 && self.transform != TransformChoice::Sfa {
            return Err(Error::invalid("SAX density must be at least 1"));
        }
        if d.sfa == 0 && self.transform != TransformChoice::Sax {
            return Err(Error::invalid("SFA density must be at least 1"));
        }
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        self.density()?;
        if self.features_per_rep == 0 {
            return Err(Error::invalid(
                "features per representation must be at least 1",
            ));
        }
        if self.pool_multiplier == 0 {
            return Err(Error::invalid("pool multiplier must be at least 1"));
        }
        self.train.validate()
    }

    /// Single-line summary of every setting that affects the result.
    pub fn echo(&self) -> String {
        let d = self.density().unwrap_or_default();
        format!(
            "transform={} sax_k={} sfa_k={} selection={} features={} seed={} numerosity_reduction={} drop_dc={} \
             pool_multiplier={} min_support={} reg={} tol={} max_iter={}",
            self.transform,
            d.sax,
            d.sfa,
            self.strategy,
            self.features_per_rep,
            self.seed,
            self.numerosity_reduction,
            self.drop_dc,
            self.pool_multiplier,
            self.min_support,
            self.train.reg,
            self.train.tol,
            self.train.max_iter
        )
    }

    /// Unfitted representation configs for series of length `series_length`:
    /// SAX ones first, then SFA.
    pub fn sample_representations(&self, series_length: usize) -> Result<Vec<ReprConfig>> {
        let d = self.density()?;
        let mut configs = Vec::new();
        for (k, transform, purpose) in [
            (d.sax, Transform::Sax, Purpose::SaxSampling),
            (d.sfa, Transform::Sfa, Purpose::SfaSampling),
        ] {
            if k == 0 {
                continue;
            }
            let mut rng = substream(self.seed, purpose, 0);
            configs.extend(
                sample_configs(series_length, k, transform, &mut rng)?
                    .into_iter()
                    .map(|c| {
                        c.with_numerosity_reduction(self.numerosity_reduction)
                            .with_drop_dc(self.drop_dc)
                    }),
            );
        }
        Ok(configs)
    }

    fn mining_options(&self) -> MiningOptions {
        MiningOptions {
            budget: self.features_per_rep,
            pool_multiplier: self.pool_multiplier,
            max_subword_len: None,
            min_support: self.min_support,
        }
    }
}

/// Summary of one training run. Stage times add up the time spent on each
/// representation, so they measure work rather than wall-clock time when
/// representations run in parallel.
#[derive(Debug, Clone)]
pub struct FitReport {
    pub representations: usize,
    pub total_features: usize,
    pub transform_time: Duration,
    pub mining_time: Duration,
    pub training_time: Duration,
    pub train_accuracy: f64,
    pub status: TrainStatus,
}

impl fmt::Display for FitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "representations: {}", self.representations)?;
        writeln!(f, "total features: {}", self.total_features)?;
        writeln!(f, "training accuracy: {:.6}", self.train_accuracy)?;
        writeln!(
            f,
            "transform seconds: {:.3}",
            self.transform_time.as_secs_f64()
        )?;
        writeln!(f, "mining seconds: {:.3}", self.mining_time.as_secs_f64())?;
        writeln!(
            f,
            "training seconds: {:.3}",
            self.training_time.as_secs_f64()
        )?;
        write!(
            f,
            "optimizer: {} after {} iterations (gradient norm {:.3e})",
            if self.status.converged {
                "converged"
            } else {
                "not converged"
            },
            self.status.iterations,
            self.status.gradient_norm
        )
    }
}

struct Fitted {
    config: ReprConfig,
    sequences: Vec<SymbolicSequence>,
    features: FeatureSet,
    transform_time: Duration,
    mining_time: Duration,
}

/// Trains a model on a labeled dataset.
///
/// Classes without training series are dropped from the model. Results do
/// not depend on `config.parallel` or the thread count.
pub fn fit(dataset: &TimeSeriesDataset, config: &FitConfig) -> Result<(Model, FitReport)> {
    config.validate()?;
    dataset.check_trainable()?;
    let raw_labels = dataset.labels().expect("checked trainable");
    let sizes = dataset.class_sizes();
    let mut remap = vec![usize::MAX; sizes.len()];
    let mut classes = Vec::new();
    for (k, &n) in sizes.iter().enumerate() {
        if n > 0 {
            remap[k] = classes.len();
            classes.push(dataset.classes()[k].clone());
        }
    }
    let labels: Vec<usize> = raw_labels.iter().map(|&y| remap[y]).collect();
    let num_classes = classes.len();

    let configs = config.sample_representations(dataset.series_length())?;
    let options = config.mining_options();
    let run = |(r, cfg): (usize, &ReprConfig)| -> Result<Fitted> {
        let start = Instant::now();
        let (fitted, sequences) = fit_transform_dataset(dataset, cfg)?;
        let transform_time = start.elapsed();
        let start = Instant::now();
        let mut rng = substream(config.seed, Purpose::Mining, r as u64);
        let features = select_features(
            config.strategy,
            &sequences,
            &labels,
            num_classes,
            &options,
            &mut rng,
        )?;
        Ok(Fitted {
            config: fitted,
            sequences,
            features,
            transform_time,
            mining_time: start.elapsed(),
        })
    };
    let fitted: Vec<Fitted> = if config.parallel {
        configs
            .par_iter()
            .enumerate()
            .map(run)
            .collect::<Result<_>>()?
    } else {
        configs.iter().enumerate().map(run).collect::<Result<_>>()?
    };

    let transform_time = fitted.iter().map(|f| f.transform_time).sum();
    let mining_time = fitted.iter().map(|f| f.mining_time).sum();
    let mut sequences = Vec::with_capacity(fitted.len());
    let mut representations = Vec::with_capacity(fitted.len());
    for f in fitted {
        sequences.push(f.sequences);
        representations.push(Representation {
            config: f.config,
            features: f.features,
        });
    }

    let start = Instant::now();
    let sets: Vec<FeatureSet> = representations.iter().map(|r| r.features.clone()).collect();
    let x = featurize(&sequences, &sets)?;
    let (classifier, status) = train_classifier(&x, &labels, num_classes, &config.train)?;
    let predicted = classifier.predict(&x)?;
    let training_time = start.elapsed();
    let correct = predicted
        .iter()
        .zip(&labels)
        .filter(|(p, y)| p == y)
        .count();

    let trained_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    let model = Model {
        seed: config.seed,
        transform: config.transform,
        k: config.density()?,
        strategy: config.strategy,
        classes,
        representations,
        classifier,
        trained_at,
    };
    let report = FitReport {
        representations: model.representations.len(),
        total_features: model.num_features(),
        transform_time,
        mining_time,
        training_time,
        train_accuracy: correct as f64 / labels.len() as f64,
        status,
    };
    Ok((model, report))
}
