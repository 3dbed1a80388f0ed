//! Time series classification from multiple randomized symbolic
//! representations.
//!
//! The pipeline has three stages:
//!
//! 1. [`symbolic`]: every series is turned into several symbolic sequences,
//!    one per sampled SAX or SFA configuration `(window, word length, alphabet)`.
//! 2. [`mining`]: for each representation a set of discriminative subwords is
//!    selected, either by random sampling, by an exact Chi-square
//!    branch-and-bound search over a trie of subwords, or by a hybrid of both.
//! 3. [`model`]: the presence of the selected subwords in a series forms a
//!    sparse binary feature vector; a multinomial logistic regression is
//!    trained on the concatenation of all representations.
//!
//! [`pipeline`] wires the stages together and [`cli`] exposes them as
//! command-line subcommands.

pub mod cli;
pub mod dataset;
pub mod error;
pub mod mining;
pub mod model;
pub mod pipeline;
pub mod rng;
pub mod symbolic;

pub use dataset::TimeSeriesDataset;
pub use error::{Error, Result};
pub use mining::{FeatureSet, Strategy};
pub use model::{Classifier, FeatureMatrix, Model, Prediction};
pub use pipeline::{fit, FitConfig, FitReport, TransformChoice};
pub use symbolic::{ReprConfig, SymbolicSequence, Transform};
