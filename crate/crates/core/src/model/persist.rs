//! JSON model files.
//!
//! Floating-point values are written with 17 significant digits, which is
//! enough to read back the exact same `f64`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

use super::{Classifier, Model, Representation, MODEL_VERSION};
use crate::error::{Error, Result};
use crate::mining::{FeatureSet, Strategy};
use crate::pipeline::Density;
use crate::symbolic::{ReprConfig, Transform};

#[derive(Debug, Clone, Copy)]
struct Exact(f64);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(serde::ser::Error::custom("non-finite value"));
        }
        let raw =
            RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(deserializer).map(Exact)
    }
}

fn exact(values: &[f64]) -> Vec<Exact> {
    values.iter().copied().map(Exact).collect()
}

fn plain(values: Vec<Exact>) -> Vec<f64> {
    values.into_iter().map(|e| e.0).collect()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DensityFile {
    sax: usize,
    sfa: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    transform: String,
    l: usize,
    w: usize,
    alpha: usize,
    numerosity_reduction: bool,
    drop_dc: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bins: Option<Vec<Vec<Exact>>>,
    features: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    version: u64,
    seed: u64,
    transform: String,
    k: DensityFile,
    strategy: String,
    classes: Vec<String>,
    trained_at: u64,
    representations: Vec<RepresentationFile>,
    weights: Vec<Vec<Exact>>,
    intercepts: Vec<Exact>,
}

#[derive(Deserialize)]
struct VersionProbe {
    version: u64,
}

pub(super) fn to_json(model: &Model) -> Result<String> {
    model.validate()?;
    let file = ModelFile {
        version: MODEL_VERSION,
        seed: model.seed,
        transform: model.transform.to_string(),
        k: DensityFile {
            sax: model.k.sax,
            sfa: model.k.sfa,
        },
        strategy: model.strategy.to_string(),
        classes: model.classes.clone(),
        trained_at: model.trained_at,
        representations: model
            .representations
            .iter()
            .map(|r| RepresentationFile {
                transform: r.config.transform.to_string(),
                l: r.config.window,
                w: r.config.word_len,
                alpha: r.config.alphabet,
                numerosity_reduction: r.config.numerosity_reduction,
                drop_dc: r.config.drop_dc,
                bins: r
                    .config
                    .bins
                    .as_ref()
                    .map(|b| b.iter().map(|e| exact(e)).collect()),
                features: r.features.subwords.clone(),
            })
            .collect(),
        weights: model.classifier.weights.iter().map(|w| exact(w)).collect(),
        intercepts: exact(&model.classifier.intercepts),
    };
    let mut text = serde_json::to_string_pretty(&file).map_err(|e| Error::Model(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub(super) fn from_json(text: &str) -> Result<Model> {
    let probe: VersionProbe =
        serde_json::from_str(text).map_err(|e| Error::Model(format!("parse error: {e}")))?;
    if probe.version != MODEL_VERSION {
        return Err(Error::UnsupportedVersion {
            found: probe.version,
            expected: MODEL_VERSION,
        });
    }
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| Error::Model(format!("parse error: {e}")))?;
    let strategy: Strategy = file
        .strategy
        .parse()
        .map_err(|e: Error| Error::Model(e.to_string()))?;
    let representations = file
        .representations
        .into_iter()
        .map(|r| {
            let transform: Transform = r
                .transform
                .parse()
                .map_err(|e: Error| Error::Model(e.to_string()))?;
            let mut config = ReprConfig::new(transform, r.l, r.w, r.alpha)
                .with_numerosity_reduction(r.numerosity_reduction)
                .with_drop_dc(r.drop_dc);
            config.bins = r.bins.map(|b| b.into_iter().map(plain).collect());
            Ok(Representation {
                config,
                features: FeatureSet {
                    strategy,
                    subwords: r.features,
                    scores: None,
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let model = Model {
        seed: file.seed,
        transform: file
            .transform
            .parse()
            .map_err(|e: Error| Error::Model(e.to_string()))?,
        k: Density {
            sax: file.k.sax,
            sfa: file.k.sfa,
        },
        strategy,
        classes: file.classes,
        representations,
        classifier: Classifier {
            weights: file.weights.into_iter().map(plain).collect(),
            intercepts: plain(file.intercepts),
        },
        trained_at: file.trained_at,
    };
    model.validate()?;
    Ok(model)
}
