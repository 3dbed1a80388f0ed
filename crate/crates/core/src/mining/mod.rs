//! Feature selection over symbolic sequences.
//!
//! A feature is a contiguous substring (subword) of a single symbolic word.
//! Four strategies are available:
//!
//! * `R`: subwords sampled at random from the training sequences.
//! * `S`: the top subwords by Chi-square score, found exactly by
//!   branch and bound on a trie ([`supervised`]).
//! * `RS`: a random pool filtered by Chi-square.
//! * `SR`: a Chi-square pool thinned by random sampling.

pub mod chi2;
pub mod index;
pub mod random;
pub mod supervised;
pub mod trie;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

pub use chi2::{chi2_bound, chi2_score, ClassCounts};
pub use index::SubwordIndex;
pub use random::{select_random, select_rs, select_sr};
pub use supervised::{select_supervised, MiningStats, SupervisedMiner};
pub use trie::SubwordTrie;

use crate::error::{Error, Result};
use crate::symbolic::SymbolicSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    R,
    S,
    RS,
    SR,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::R => "r",
            Strategy::S => "s",
            Strategy::RS => "rs",
            Strategy::SR => "sr",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(Strategy::R),
            "s" => Ok(Strategy::S),
            "rs" => Ok(Strategy::RS),
            "sr" => Ok(Strategy::SR),
            other => Err(Error::invalid(format!(
                "unknown strategy '{other}' (expected r, s, rs or sr)"
            ))),
        }
    }
}

/// Selected subwords of one representation.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureSet {
    pub strategy: Strategy,
    pub subwords: Vec<String>,
    /// Chi-square score per subword; `None` for the purely random strategy.
    pub scores: Option<Vec<f64>>,
}

impl FeatureSet {
    pub fn len(&self) -> usize {
        self.subwords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subwords.is_empty()
    }
}

/// Validates labels against the sequences and returns the class sizes.
/// At least two classes must be represented.
pub(crate) fn check_labels(
    sequences: &[SymbolicSequence],
    labels: &[usize],
    num_classes: usize,
) -> Result<Vec<usize>> {
    if sequences.len() != labels.len() {
        return Err(Error::invalid(format!(
            "{} sequences but {} labels",
            sequences.len(),
            labels.len()
        )));
    }
    let mut sizes = vec![0usize; num_classes];
    for &y in labels {
        if y >= num_classes {
            return Err(Error::invalid(format!(
                "label {y} out of range for {num_classes} classes"
            )));
        }
        sizes[y] += 1;
    }
    if sizes.iter().filter(|&&n| n > 0).count() < 2 {
        return Err(Error::invalid(
            "feature selection needs at least two classes",
        ));
    }
    Ok(sizes)
}

/// Tunables shared by all strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MiningOptions {
    /// Features kept per representation.
    pub budget: usize,
    /// Hybrid strategies draw `pool_multiplier * budget` candidates.
    pub pool_multiplier: usize,
    /// Longest subword the random sampler draws; `None` means the word length.
    pub max_subword_len: Option<usize>,
    /// Smallest document frequency for a supervised feature.
    pub min_support: usize,
}

impl Default for MiningOptions {
    fn default() -> Self {
        MiningOptions {
            budget: 500,
            pool_multiplier: 4,
            max_subword_len: None,
            min_support: 2,
        }
    }
}

/// Runs `strategy` on one representation's training sequences.
pub fn select_features<R: Rng + ?Sized>(
    strategy: Strategy,
    sequences: &[SymbolicSequence],
    labels: &[usize],
    num_classes: usize,
    options: &MiningOptions,
    rng: &mut R,
) -> Result<FeatureSet> {
    let word_len = sequences
        .iter()
        .map(SymbolicSequence::word_len)
        .max()
        .unwrap_or(0);
    let max_len = options.max_subword_len.unwrap_or(word_len).max(1);
    let miner = SupervisedMiner {
        min_support: options.min_support,
        prune: true,
    };
    match strategy {
        Strategy::R => {
            check_labels(sequences, labels, num_classes)?;
            select_random(sequences, options.budget, max_len, rng)
        }
        Strategy::S => miner
            .select(sequences, labels, num_classes, options.budget)
            .map(|(fs, _)| fs),
        Strategy::RS => select_rs(
            sequences,
            labels,
            num_classes,
            options.budget,
            options.pool_multiplier,
            max_len,
            rng,
        ),
        Strategy::SR => select_sr(
            sequences,
            labels,
            num_classes,
            options.budget,
            options.pool_multiplier,
            &miner,
            rng,
        ),
    }
}

/// Tab-separated dump: subword, score (empty when unscored) and the number
/// of training sequences of each class containing the subword.
pub fn dump_features(
    features: &FeatureSet,
    sequences: &[SymbolicSequence],
    labels: &[usize],
    num_classes: usize,
) -> Result<String> {
    check_labels(sequences, labels, num_classes)?;
    let index = SubwordIndex::new(&features.subwords)?;
    let counts = index.document_counts(sequences, labels, num_classes);
    let mut out = String::from("subword\tscore");
    for k in 0..num_classes {
        out.push_str(&format!("\tclass_{k}"));
    }
    out.push('\n');
    for (i, sw) in features.subwords.iter().enumerate() {
        out.push_str(sw);
        out.push('\t');
        if let Some(scores) = &features.scores {
            out.push_str(&scores[i].to_string());
        }
        for c in &counts[i] {
            out.push_str(&format!("\t{c}"));
        }
        out.push('\n');
    }
    Ok(out)
}
