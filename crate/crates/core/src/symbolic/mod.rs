//! Symbolic representations of numeric series.
//!
//! A representation is defined by a [`ReprConfig`]: the transform (SAX or
//! SFA), the sliding window length `l`, the word length `w` and the alphabet
//! size. Transforming a series slides the window with stride 1, turns every
//! window into a word of `w` symbols and, optionally, collapses runs of
//! identical consecutive words.

pub mod sax;
pub mod sfa;

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

pub use sax::{gaussian_breakpoints, paa, sax_word, znormalize};
pub use sfa::{dft_truncated, mcb_fit, sfa_word};

use crate::dataset::TimeSeriesDataset;
use crate::error::{Error, Result};
use sfa::WindowDft;

/// Word lengths sampled for each representation.
pub const WORD_LENGTHS: [usize; 6] = [6, 8, 10, 12, 14, 16];
/// Alphabet sizes sampled for each representation.
pub const ALPHABET_SIZES: [usize; 4] = [3, 4, 5, 6];
/// Smallest sampled window.
pub const MIN_WINDOW: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    Sax,
    Sfa,
}

impl Transform {
    pub fn name(self) -> &'static str {
        match self {
            Transform::Sax => "sax",
            Transform::Sfa => "sfa",
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sax" => Ok(Transform::Sax),
            "sfa" => Ok(Transform::Sfa),
            other => Err(Error::invalid(format!("unknown transform '{other}'"))),
        }
    }
}

/// Parameters of one symbolic representation, plus the fitted SFA bins.
#[derive(Debug, Clone, PartialEq)]
pub struct ReprConfig {
    pub transform: Transform,
    /// Sliding window length `l`.
    pub window: usize,
    /// Symbols per word `w`.
    pub word_len: usize,
    pub alphabet: usize,
    pub numerosity_reduction: bool,
    /// Skip the DC Fourier coefficient (SFA only).
    pub drop_dc: bool,
    /// SFA bin edges, `word_len` lists of `alphabet - 1` non-decreasing values.
    pub bins: Option<Vec<Vec<f64>>>,
}

impl ReprConfig {
    pub fn new(transform: Transform, window: usize, word_len: usize, alphabet: usize) -> Self {
        ReprConfig {
            transform,
            window,
            word_len,
            alphabet,
            numerosity_reduction: true,
            drop_dc: false,
            bins: None,
        }
    }

    pub fn with_numerosity_reduction(mut self, on: bool) -> Self {
        self.numerosity_reduction = on;
        self
    }

    pub fn with_drop_dc(mut self, on: bool) -> Self {
        self.drop_dc = on;
        self
    }

    /// Checks parameter ranges and the shape of fitted bins.
    pub fn validate(&self) -> Result<()> {
        if self.word_len == 0 || self.word_len > self.window {
            return Err(Error::invalid(format!(
                "word length {} must be in 1..={}",
                self.word_len, self.window
            )));
        }
        sax::check_alphabet(self.alphabet)?;
        if let Some(bins) = &self.bins {
            if bins.len() != self.word_len {
                return Err(Error::invalid(format!(
                    "{} bin lists for word length {}",
                    bins.len(),
                    self.word_len
                )));
            }
            for edges in bins {
                if edges.len() != self.alphabet - 1 {
                    return Err(Error::invalid("bin list length must be alphabet - 1"));
                }
                if edges.iter().any(|e| !e.is_finite()) || edges.windows(2).any(|p| p[0] > p[1]) {
                    return Err(Error::invalid(
                        "bin edges must be finite and non-decreasing",
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn is_fitted(&self) -> bool {
        match self.transform {
            Transform::Sax => true,
            Transform::Sfa => self.bins.is_some(),
        }
    }
}

/// The words produced by one representation for one series, stored as a flat
/// buffer of ASCII symbols (`a`, `b`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicSequence {
    word_len: usize,
    symbols: Vec<u8>,
}

impl SymbolicSequence {
    pub fn new(word_len: usize) -> Self {
        SymbolicSequence {
            word_len,
            symbols: Vec::new(),
        }
    }

    /// Builds a sequence from explicit words, which must share one length.
    pub fn from_words<S: AsRef<[u8]>>(words: &[S]) -> Result<Self> {
        let word_len = words.first().map_or(0, |w| w.as_ref().len());
        let mut seq = SymbolicSequence::new(word_len);
        for w in words {
            let w = w.as_ref();
            if w.len() != word_len || word_len == 0 {
                return Err(Error::invalid(
                    "words must be non-empty and of equal length",
                ));
            }
            if !w.iter().all(u8::is_ascii_lowercase) {
                return Err(Error::invalid("symbols must be lowercase letters"));
            }
            seq.symbols.extend_from_slice(w);
        }
        Ok(seq)
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn num_words(&self) -> usize {
        self.symbols.len().checked_div(self.word_len).unwrap_or(0)
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.symbols[i * self.word_len..(i + 1) * self.word_len]
    }

    pub fn words(&self) -> impl Iterator<Item = &[u8]> {
        self.symbols.chunks(self.word_len.max(1))
    }

    fn push(&mut self, word: &[u8], reduce: bool) {
        if reduce
            && self.symbols.len() >= self.word_len
            && self.symbols[self.symbols.len() - self.word_len..] == *word
        {
            return;
        }
        self.symbols.extend_from_slice(word);
    }

    /// Whether `subword` occurs inside any single word.
    pub fn contains(&self, subword: &[u8]) -> bool {
        !subword.is_empty()
            && self
                .words()
                .any(|w| w.windows(subword.len()).any(|s| s == subword))
    }
}

impl fmt::Display for SymbolicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(std::str::from_utf8(w).map_err(|_| fmt::Error)?)?;
        }
        Ok(())
    }
}

/// Samples `ceil(k * log2(L))` representation configurations.
///
/// Window lengths are deterministic: the exponents are evenly spaced on
/// `[3, log2 L]` and `2^e` is rounded and clamped to `[min(8, L), L]`. Word
/// lengths come from [`WORD_LENGTHS`] (clamped to the window) and alphabet
/// sizes from [`ALPHABET_SIZES`], both uniformly at random.
pub fn sample_configs<R: Rng + ?Sized>(
    series_length: usize,
    k: usize,
    transform: Transform,
    rng: &mut R,
) -> Result<Vec<ReprConfig>> {
    if k < 1 {
        return Err(Error::invalid("density parameter k must be at least 1"));
    }
    if series_length == 0 {
        return Err(Error::invalid("series length must be positive"));
    }
    let count = representation_count(series_length, k);
    let windows = window_grid(series_length, count);
    Ok(windows
        .into_iter()
        .map(|window| {
            let word_len = (*WORD_LENGTHS.choose(rng).expect("non-empty")).min(window);
            let alphabet = *ALPHABET_SIZES.choose(rng).expect("non-empty");
            ReprConfig::new(transform, window, word_len, alphabet)
        })
        .collect())
}

/// `ceil(k * log2(L))`, at least 1.
pub fn representation_count(series_length: usize, k: usize) -> usize {
    ((k as f64 * (series_length as f64).log2()).ceil() as usize).max(1)
}

fn window_grid(series_length: usize, count: usize) -> Vec<usize> {
    if series_length <= MIN_WINDOW {
        return vec![series_length; count];
    }
    let lo = (MIN_WINDOW as f64).log2();
    let hi = (series_length as f64).log2();
    (0..count)
        .map(|i| {
            let e = if count == 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (count - 1) as f64
            };
            (e.exp2().round() as usize).clamp(MIN_WINDOW, series_length)
        })
        .collect()
}

/// Transforms one series under a fitted configuration.
pub fn transform_series(series: &[f64], config: &ReprConfig) -> Result<SymbolicSequence> {
    let mut t = SeriesTransformer::new(config)?;
    t.transform(series)
}

/// Reusable per-configuration state (breakpoints, FFT plan).
struct SeriesTransformer<'a> {
    config: &'a ReprConfig,
    breakpoints: Vec<f64>,
    dft: Option<WindowDft>,
}

impl<'a> SeriesTransformer<'a> {
    fn new(config: &'a ReprConfig) -> Result<Self> {
        config.validate()?;
        let (breakpoints, dft) = match config.transform {
            Transform::Sax => (gaussian_breakpoints(config.alphabet), None),
            Transform::Sfa => {
                if config.bins.is_none() {
                    return Err(Error::State("SFA configuration has not been fitted".into()));
                }
                (
                    Vec::new(),
                    Some(WindowDft::new(
                        config.window,
                        config.word_len,
                        config.drop_dc,
                    )),
                )
            }
        };
        Ok(SeriesTransformer {
            config,
            breakpoints,
            dft,
        })
    }

    fn check_length(&self, series: &[f64]) -> Result<()> {
        if series.len() < self.config.window {
            return Err(Error::invalid(format!(
                "series of length {} is shorter than window {}",
                series.len(),
                self.config.window
            )));
        }
        Ok(())
    }

    fn transform(&mut self, series: &[f64]) -> Result<SymbolicSequence> {
        self.check_length(series)?;
        let cfg = self.config;
        let reduce = cfg.numerosity_reduction;
        let mut seq = SymbolicSequence::new(cfg.word_len);
        match cfg.transform {
            Transform::Sax => {
                sax::sliding_sax(series, cfg.window, cfg.word_len, &self.breakpoints, |w| {
                    seq.push(w, reduce)
                });
            }
            Transform::Sfa => {
                let bins = cfg.bins.as_ref().expect("checked in new");
                let mut word = vec![0u8; cfg.word_len];
                self.dft.as_mut().expect("sfa").slide(series, |values| {
                    sfa::discretize(values, bins, &mut word);
                    seq.push(&word, reduce);
                });
            }
        }
        Ok(seq)
    }
}

/// Fits the configuration on a training set (MCB bins for SFA; nothing for
/// SAX) and returns the fitted configuration with the training sequences.
/// Labels are not used.
pub fn fit_transform_dataset(
    dataset: &TimeSeriesDataset,
    config: &ReprConfig,
) -> Result<(ReprConfig, Vec<SymbolicSequence>)> {
    let mut fitted = config.clone();
    fitted.bins = None;
    fitted.validate()?;
    if dataset.series_length() < fitted.window {
        return Err(Error::invalid(format!(
            "series of length {} is shorter than window {}",
            dataset.series_length(),
            fitted.window
        )));
    }
    match fitted.transform {
        Transform::Sax => {
            let seqs = transform_dataset(dataset, &fitted)?;
            Ok((fitted, seqs))
        }
        Transform::Sfa => {
            // One pass computes every window's Fourier values; the same values
            // are fitted and then discretized.
            let w = fitted.word_len;
            let windows_per_series = dataset.series_length() - fitted.window + 1;
            let mut dft = WindowDft::new(fitted.window, w, fitted.drop_dc);
            let mut values: Vec<f64> = Vec::with_capacity(dataset.len() * windows_per_series * w);
            for s in dataset.series() {
                dft.slide(s, |v| values.extend_from_slice(v));
            }
            let bins: Vec<Vec<f64>> = (0..w)
                .map(|pos| {
                    let column: Vec<f64> = values.iter().skip(pos).step_by(w).copied().collect();
                    sfa::quantile_edges(column, fitted.alphabet)
                })
                .collect();
            let mut word = vec![0u8; w];
            let seqs = values
                .chunks(windows_per_series * w)
                .map(|series_values| {
                    let mut seq = SymbolicSequence::new(w);
                    for v in series_values.chunks(w) {
                        sfa::discretize(v, &bins, &mut word);
                        seq.push(&word, fitted.numerosity_reduction);
                    }
                    seq
                })
                .collect();
            fitted.bins = Some(bins);
            Ok((fitted, seqs))
        }
    }
}

/// Applies a fitted configuration to every series of a dataset.
pub fn transform_dataset(
    dataset: &TimeSeriesDataset,
    config: &ReprConfig,
) -> Result<Vec<SymbolicSequence>> {
    let mut t = SeriesTransformer::new(config)?;
    dataset.series().iter().map(|s| t.transform(s)).collect()
}

/// One line per series, words separated by spaces.
pub fn dump_sequences(sequences: &[SymbolicSequence]) -> String {
    let mut out = String::new();
    for s in sequences {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}
