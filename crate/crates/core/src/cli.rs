//! Command-line interface: `fit`, `predict` and `benchmark`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::dataset::{load_any, load_ts};
use crate::mining::Strategy;
use crate::model::{Model, Prediction, TrainOptions};
use crate::pipeline::{fit, FitConfig, TransformChoice};

#[derive(Debug, Parser)]
#[command(
    name = "symseq",
    version,
    about = "Time series classification with symbolic representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Train a model on a labeled .ts or .csv file.
    Fit {
        #[arg(long)]
        train: PathBuf,
        /// Where to write the model (JSON).
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Classify a dataset with a saved model.
    Predict {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        test: PathBuf,
        /// Where to write the predictions (CSV).
        #[arg(long)]
        out: PathBuf,
    },
    /// Fit and evaluate on several `<name>_TRAIN.ts` / `<name>_TEST.ts` pairs.
    Benchmark {
        /// Directory holding the dataset files.
        #[arg(long)]
        dir: PathBuf,
        /// Text file with one dataset name per line.
        #[arg(long)]
        datasets: PathBuf,
        /// Where to write the results (CSV).
        #[arg(long)]
        out: PathBuf,
        /// Datasets processed concurrently.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        #[command(flatten)]
        config: ConfigArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformArg {
    Sax,
    Sfa,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SelectionArg {
    R,
    S,
    Rs,
    Sr,
}

/// Model settings shared by `fit` and `benchmark`.
#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    #[arg(long, value_enum, default_value_t = TransformArg::Sfa)]
    pub transform: TransformArg,
    /// Representations per log2(series length), for every selected transform.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Overrides --k for SAX.
    #[arg(long)]
    pub sax_k: Option<u32>,
    /// Overrides --k for SFA.
    #[arg(long)]
    pub sfa_k: Option<u32>,
    /// Feature selection strategy.
    #[arg(long, value_enum, default_value_t = SelectionArg::Rs)]
    pub selection: SelectionArg,
    /// Features kept per representation.
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u32).range(1..))]
    pub features: u32,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Keep repeated consecutive words.
    #[arg(long)]
    pub no_numerosity_reduction: bool,
    /// Skip the first Fourier coefficient in SFA words.
    #[arg(long)]
    pub drop_dc: bool,
    /// Inverse L2 penalty of the classifier.
    #[arg(long, default_value_t = 1.0)]
    pub reg: f64,
    /// Gradient tolerance of the optimizer.
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[arg(long, default_value_t = 1000)]
    pub max_iter: usize,
}

impl ConfigArgs {
    pub fn to_config(&self) -> anyhow::Result<FitConfig> {
        let transform = match self.transform {
            TransformArg::Sax => TransformChoice::Sax,
            TransformArg::Sfa => TransformChoice::Sfa,
            TransformArg::Both => TransformChoice::Both,
        };
        let strategy = match self.selection {
            SelectionArg::R => Strategy::R,
            SelectionArg::S => Strategy::S,
            SelectionArg::Rs => Strategy::RS,
            SelectionArg::Sr => Strategy::SR,
        };
        let config = FitConfig {
            transform,
            k: self.k as usize,
            sax_k: self.sax_k.map(|v| v as usize),
            sfa_k: self.sfa_k.map(|v| v as usize),
            strategy,
            features_per_rep: self.features as usize,
            seed: self.seed,
            numerosity_reduction: !self.no_numerosity_reduction,
            drop_dc: self.drop_dc,
            train: TrainOptions {
                reg: self.reg,
                tol: self.tol,
                max_iter: self.max_iter,
            },
            ..FitConfig::default()
        };
        config.validate()?;
        Ok(config)
    }
}

/// Parses `args` and runs the command. Exit code 0 on success, 1 on runtime
/// or data errors, 2 on usage errors.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let config = match &cli.command {
        Command::Fit { config, .. } | Command::Benchmark { config, .. } => match config.to_config()
        {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
        },
        Command::Predict { .. } => None,
    };
    let result = match (cli.command, config) {
        (Command::Fit { train, out, .. }, Some(cfg)) => cmd_fit(&train, &out, &cfg),
        (Command::Predict { model, test, out }, _) => cmd_predict(&model, &test, &out),
        (
            Command::Benchmark {
                dir,
                datasets,
                out,
                jobs,
                ..
            },
            Some(cfg),
        ) => cmd_benchmark(&dir, &datasets, &out, jobs as usize, &cfg),
        _ => unreachable!("config is parsed for fit and benchmark"),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

pub fn cmd_fit(train: &Path, out: &Path, config: &FitConfig) -> anyhow::Result<()> {
    println!("config: {}", config.echo());
    let data = load_any(train)?;
    let (model, report) = fit(&data, config)?;
    model
        .save(out)
        .with_context(|| format!("writing model to {}", out.display()))?;
    println!("{report}");
    if !report.status.converged {
        eprintln!("warning: optimizer stopped before reaching the gradient tolerance");
    }
    println!("model written to {}", out.display());
    Ok(())
}

pub fn cmd_predict(model_path: &Path, test: &Path, out: &Path) -> anyhow::Result<()> {
    let model = Model::load(model_path)?;
    let data = load_any(test)?;
    let pred = model.predict(&data)?;
    let file = fs::File::create(out).with_context(|| format!("creating {}", out.display()))?;
    write_predictions(&model, &pred, file)?;
    if let Some(acc) = pred.accuracy(&model, &data) {
        println!("accuracy: {acc:.6}");
    }
    println!("predictions written to {}", out.display());
    Ok(())
}

/// CSV with `index,predicted_label,prob_class_<name>...`.
pub fn write_predictions<W: Write>(model: &Model, pred: &Prediction, out: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["index".to_string(), "predicted_label".to_string()];
    header.extend(model.classes.iter().map(|c| format!("prob_class_{c}")));
    w.write_record(&header)?;
    for (i, (&label, probs)) in pred.labels.iter().zip(&pred.probabilities).enumerate() {
        let mut row = vec![i.to_string(), model.classes[label].clone()];
        row.extend(probs.iter().map(|p| p.to_string()));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// One line of the benchmark results.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchmarkRow {
    pub name: String,
    pub n_train: Option<usize>,
    pub n_test: Option<usize>,
    pub length: Option<usize>,
    pub classes: Option<usize>,
    pub accuracy: Option<f64>,
    pub fit_seconds: Option<f64>,
    pub predict_seconds: Option<f64>,
    pub error: Option<String>,
}

/// Fits and evaluates one dataset; failures are recorded in the row.
pub fn benchmark_dataset(dir: &Path, name: &str, config: &FitConfig) -> BenchmarkRow {
    let mut row = BenchmarkRow {
        name: name.to_string(),
        ..Default::default()
    };
    if let Err(e) = evaluate(dir, name, config, &mut row) {
        row.error = Some(format!("{e:#}"));
    }
    row
}

fn evaluate(
    dir: &Path,
    name: &str,
    config: &FitConfig,
    row: &mut BenchmarkRow,
) -> anyhow::Result<()> {
    let train = load_ts(dir.join(format!("{name}_TRAIN.ts")))?;
    let test = load_ts(dir.join(format!("{name}_TEST.ts")))?;
    row.n_train = Some(train.len());
    row.n_test = Some(test.len());
    row.length = Some(train.series_length());
    row.classes = Some(train.num_classes());
    let start = Instant::now();
    let (model, _) = fit(&train, config)?;
    row.fit_seconds = Some(start.elapsed().as_secs_f64());
    let start = Instant::now();
    let pred = model.predict(&test)?;
    row.predict_seconds = Some(start.elapsed().as_secs_f64());
    match pred.accuracy(&model, &test) {
        Some(acc) => row.accuracy = Some(acc),
        None => bail!("test split has no labels"),
    }
    Ok(())
}

pub fn cmd_benchmark(
    dir: &Path,
    list: &Path,
    out: &Path,
    jobs: usize,
    config: &FitConfig,
) -> anyhow::Result<()> {
    println!("config: {} jobs={jobs}", config.echo());
    fs::read_dir(dir).with_context(|| format!("reading dataset directory {}", dir.display()))?;
    let text = fs::read_to_string(list)
        .with_context(|| format!("reading dataset list {}", list.display()))?;
    let names: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();

    let rows: Vec<BenchmarkRow> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        pool.install(|| {
            names
                .par_iter()
                .map(|n| benchmark_dataset(dir, n, config))
                .collect()
        })
    } else {
        names
            .iter()
            .map(|n| benchmark_dataset(dir, n, config))
            .collect()
    };

    let file = fs::File::create(out).with_context(|| format!("creating {}", out.display()))?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record([
        "name",
        "n_train",
        "n_test",
        "length",
        "classes",
        "accuracy",
        "fit_seconds",
        "predict_seconds",
        "error",
    ])?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in &rows {
        w.write_record([
            r.name.clone(),
            opt(r.n_train.map(|v| v.to_string())),
            opt(r.n_test.map(|v| v.to_string())),
            opt(r.length.map(|v| v.to_string())),
            opt(r.classes.map(|v| v.to_string())),
            opt(r.accuracy.map(|v| format!("{v:.6}"))),
            opt(r.fit_seconds.map(|v| format!("{v:.3}"))),
            opt(r.predict_seconds.map(|v| format!("{v:.3}"))),
            opt(r.error.clone()),
        ])?;
        match (&r.error, r.accuracy) {
            (Some(e), _) => println!("{}: error: {e}", r.name),
            (None, Some(acc)) => println!("{}: accuracy {acc:.6}", r.name),
            _ => {}
        }
    }
    w.flush()?;
    println!("results written to {}", out.display());
    Ok(())
}
