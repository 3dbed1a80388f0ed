//! Labeled univariate time series datasets and their file formats.
//!
//! Two input formats are supported:
//!
//! * the UCR/UEA `.ts` format: `@` directives, then `@data`, then one series
//!   per line as `v1,v2,...,vL:label` (the `:label` suffix is absent when
//!   `@classLabel false` is declared);
//! * plain CSV with the label in the first or last column.
//!
//! Only equal-length univariate series are accepted.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// A collection of equal-length series, optionally labeled.
///
/// Labels are stored as contiguous class indices into [`classes`](Self::classes).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesDataset {
    series: Vec<Vec<f64>>,
    labels: Option<Vec<usize>>,
    classes: Vec<String>,
    length: usize,
}

/// Which CSV column holds the class label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelColumn {
    #[default]
    First,
    Last,
}

impl std::str::FromStr for LabelColumn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" => Ok(LabelColumn::First),
            "last" => Ok(LabelColumn::Last),
            other => Err(Error::invalid(format!(
                "label column must be 'first' or 'last', got '{other}'"
            ))),
        }
    }
}

impl TimeSeriesDataset {
    /// Builds a dataset from raw series and optional string labels.
    ///
    /// Classes are indexed in order of first appearance.
    pub fn new(series: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> Result<Self> {
        Self::with_declared_classes(series, labels, None)
    }

    /// Like [`new`](Self::new), but class indices follow `declared` when given.
    pub fn with_declared_classes(
        series: Vec<Vec<f64>>,
        labels: Option<Vec<String>>,
        declared: Option<Vec<String>>,
    ) -> Result<Self> {
        let length = validate_series(&series)?;
        let (labels, classes) = match labels {
            None => (None, declared.unwrap_or_default()),
            Some(labels) => {
                if labels.len() != series.len() {
                    return Err(Error::invalid(format!(
                        "{} labels for {} series",
                        labels.len(),
                        series.len()
                    )));
                }
                let (idx, classes) = index_labels(&labels, declared)?;
                (Some(idx), classes)
            }
        };
        Ok(TimeSeriesDataset {
            series,
            labels,
            classes,
            length,
        })
    }

    /// Number of series (N).
    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    /// Common length of every series (L).
    pub fn series_length(&self) -> usize {
        self.length
    }

    /// Number of classes (C) in the class index.
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn series(&self) -> &[Vec<f64>] {
        &self.series
    }

    /// Class indices, or `None` for an unlabeled dataset.
    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Class names; position `i` is the name of class index `i`.
    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    /// The label of every series as its class name.
    pub fn label_names(&self) -> Option<Vec<&str>> {
        self.labels
            .as_ref()
            .map(|l| l.iter().map(|&c| self.classes[c].as_str()).collect())
    }

    /// Number of series per class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.classes.len()];
        if let Some(labels) = &self.labels {
            for &c in labels {
                sizes[c] += 1;
            }
        }
        sizes
    }

    /// Checks the extra requirements for a training set: labels present and
    /// at least two classes represented.
    pub fn check_trainable(&self) -> Result<()> {
        let labels = self
            .labels
            .as_ref()
            .ok_or_else(|| Error::invalid("training data must be labeled"))?;
        let present = self.class_sizes().iter().filter(|&&n| n > 0).count();
        if present < 2 {
            return Err(Error::invalid(format!(
                "training data needs at least 2 classes, found {present} in {} series",
                labels.len()
            )));
        }
        Ok(())
    }

    /// Parses `.ts` content.
    pub fn parse_ts(text: &str) -> Result<Self> {
        parse_ts(text)
    }

    /// Renders the dataset in `.ts` format. Values use the shortest
    /// representation that parses back to the same `f64`.
    pub fn to_ts_string(&self) -> String {
        let mut out = String::new();
        out.push_str("@univariate true\n@equalLength true\n");
        let _ = writeln!(out, "@seriesLength {}", self.length);
        if self.labels.is_some() {
            out.push_str("@classLabel true");
            for c in &self.classes {
                out.push(' ');
                out.push_str(c);
            }
            out.push('\n');
        } else {
            out.push_str("@classLabel false\n");
        }
        out.push_str("@data\n");
        for (i, s) in self.series.iter().enumerate() {
            for (j, v) in s.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v}");
            }
            if let Some(labels) = &self.labels {
                out.push(':');
                out.push_str(&self.classes[labels[i]]);
            }
            out.push('\n');
        }
        out
    }

    pub fn write_ts(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_ts_string()).map_err(|e| Error::io(path, e))
    }
}

fn validate_series(series: &[Vec<f64>]) -> Result<usize> {
    let first = series
        .first()
        .ok_or_else(|| Error::invalid("dataset contains no series"))?;
    let length = first.len();
    if length == 0 {
        return Err(Error::invalid("series must have at least one value"));
    }
    for (i, s) in series.iter().enumerate() {
        if s.len() != length {
            return Err(Error::invalid(format!(
                "series {i} has length {}, expected {length}",
                s.len()
            )));
        }
        if let Some(v) = s.iter().find(|v| !v.is_finite()) {
            return Err(Error::invalid(format!(
                "series {i} contains non-finite value {v}"
            )));
        }
    }
    Ok(length)
}

fn index_labels(
    labels: &[String],
    declared: Option<Vec<String>>,
) -> Result<(Vec<usize>, Vec<String>)> {
    let mut classes: Vec<String> = Vec::new();
    let mut lookup: HashMap<String, usize> = HashMap::new();
    let fixed = declared.is_some();
    if let Some(declared) = declared {
        for name in declared {
            if !lookup.contains_key(&name) {
                lookup.insert(name.clone(), classes.len());
                classes.push(name);
            }
        }
    }
    let mut idx = Vec::with_capacity(labels.len());
    for label in labels {
        match lookup.get(label) {
            Some(&c) => idx.push(c),
            None if fixed => {
                return Err(Error::invalid(format!(
                    "label '{label}' is not among the declared class labels"
                )))
            }
            None => {
                lookup.insert(label.clone(), classes.len());
                idx.push(classes.len());
                classes.push(label.clone());
            }
        }
    }
    Ok((idx, classes))
}

fn parse_value(token: &str, line: usize) -> Result<f64> {
    let token = token.trim();
    let v: f64 = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("'{token}' is not a number"),
    })?;
    if !v.is_finite() {
        return Err(Error::Parse {
            line,
            message: format!("non-finite value '{token}'"),
        });
    }
    Ok(v)
}

fn parse_ts(text: &str) -> Result<TimeSeriesDataset> {
    let mut declared: Option<Vec<String>> = None;
    let mut labeled_directive: Option<bool> = None;
    let mut in_data = false;
    let mut series = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut saw_labeled = false;
    let mut saw_unlabeled = false;
    let mut length: Option<usize> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !in_data {
            if !line.starts_with('@') {
                return Err(Error::Format {
                    line: line_no,
                    message: "data line before @data".into(),
                });
            }
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap_or_default().to_ascii_lowercase();
            match key.as_str() {
                "@data" => in_data = true,
                "@classlabel" => match parts.next().map(|s| s.to_ascii_lowercase()) {
                    Some(flag) if flag == "true" => {
                        labeled_directive = Some(true);
                        let names: Vec<String> = parts.map(str::to_owned).collect();
                        if !names.is_empty() {
                            declared = Some(names);
                        }
                    }
                    Some(flag) if flag == "false" => labeled_directive = Some(false),
                    _ => {
                        return Err(Error::Format {
                            line: line_no,
                            message: "@classLabel must be followed by true or false".into(),
                        })
                    }
                },
                "@univariate"
                    if parts.next().map(|s| s.eq_ignore_ascii_case("false")) == Some(true) =>
                {
                    return Err(Error::Format {
                        line: line_no,
                        message: "multivariate datasets are not supported".into(),
                    });
                }
                // Other directives (@problemName, @seriesLength, ...) are informational.
                _ => {}
            }
            continue;
        }

        let parts: Vec<&str> = line.split(':').collect();
        let (values, label) = match (parts.len(), labeled_directive) {
            (1, Some(true)) => {
                return Err(Error::Format {
                    line: line_no,
                    message: "missing class label".into(),
                })
            }
            (1, _) => (parts[0], None),
            (2, Some(false)) | (_, Some(false)) => {
                return Err(Error::Format {
                    line: line_no,
                    message:
                        "unexpected ':' in unlabeled data (multivariate data is not supported)"
                            .into(),
                })
            }
            (2, _) => (parts[0], Some(parts[1].trim())),
            _ => {
                return Err(Error::Format {
                    line: line_no,
                    message: "multiple dimensions found; only univariate data is supported".into(),
                })
            }
        };
        let values = values
            .split(',')
            .map(|t| parse_value(t, line_no))
            .collect::<Result<Vec<f64>>>()?;
        match length {
            None => length = Some(values.len()),
            Some(l) if l != values.len() => {
                return Err(Error::Format {
                    line: line_no,
                    message: format!("series has {} values, expected {l}", values.len()),
                })
            }
            _ => {}
        }
        match label {
            Some(label) => {
                if label.is_empty() {
                    return Err(Error::Format {
                        line: line_no,
                        message: "empty class label".into(),
                    });
                }
                saw_labeled = true;
                labels.push(label.to_owned());
            }
            None => saw_unlabeled = true,
        }
        if saw_labeled && saw_unlabeled {
            return Err(Error::Format {
                line: line_no,
                message: "mix of labeled and unlabeled series".into(),
            });
        }
        series.push(values);
    }

    if !in_data {
        return Err(Error::Format {
            line: text.lines().count(),
            message: "missing @data section".into(),
        });
    }
    if series.is_empty() {
        return Err(Error::Format {
            line: text.lines().count(),
            message: "no series after @data".into(),
        });
    }
    let labels = saw_labeled.then_some(labels);
    let declared = if labels.is_some() { declared } else { None };
    TimeSeriesDataset::with_declared_classes(series, labels, declared).map_err(|e| match e {
        Error::InvalidArgument(message) => Error::Format { line: 0, message },
        other => other,
    })
}

/// Loads a `.ts` file.
pub fn load_ts(path: impl AsRef<Path>) -> Result<TimeSeriesDataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_ts(&text)
}

/// Parses CSV content where every row is one labeled series.
pub fn parse_csv(text: &str, label_column: LabelColumn, header: bool) -> Result<TimeSeriesDataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut series = Vec::new();
    let mut labels = Vec::new();
    let mut width: Option<usize> = None;
    for record in reader.records() {
        let record = record.map_err(|e| Error::Format {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        match width {
            None => {
                if record.len() < 2 {
                    return Err(Error::Format {
                        line,
                        message: "rows need a label and at least one value".into(),
                    });
                }
                width = Some(record.len());
            }
            Some(w) if w != record.len() => {
                return Err(Error::Format {
                    line,
                    message: format!("row has {} columns, expected {w}", record.len()),
                })
            }
            _ => {}
        }
        let fields: Vec<&str> = record.iter().collect();
        let (label, values) = match label_column {
            LabelColumn::First => (fields[0], &fields[1..]),
            LabelColumn::Last => (fields[fields.len() - 1], &fields[..fields.len() - 1]),
        };
        labels.push(label.to_owned());
        series.push(
            values
                .iter()
                .map(|t| parse_value(t, line))
                .collect::<Result<Vec<f64>>>()?,
        );
    }
    if series.is_empty() {
        return Err(Error::Format {
            line: 0,
            message: "no rows found".into(),
        });
    }
    TimeSeriesDataset::new(series, Some(labels))
}

/// Loads a CSV file; `header` skips the first line.
pub fn load_csv(
    path: impl AsRef<Path>,
    label_column: LabelColumn,
    header: bool,
) -> Result<TimeSeriesDataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_csv(&text, label_column, header)
}

/// Loads `.csv` files as CSV (label first, no header) and anything else as `.ts`.
pub fn load_any(path: impl AsRef<Path>) -> Result<TimeSeriesDataset> {
    let path = path.as_ref();
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("csv") => load_csv(path, LabelColumn::First, false),
        _ => load_ts(path),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_ts() {
        let ds = parse_ts("@problemName toy\n@data\n1,2,3:a\n4,5,6:b\n").unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.series_length(), 3);
        assert_eq!(ds.num_classes(), 2);
        assert_eq!(ds.labels().unwrap(), &[0, 1]);
        assert_eq!(ds.series()[1], vec![4.0, 5.0, 6.0]);
    }

    #[test]
    fn ragged_ts_names_line() {
        let err = parse_ts("@data\n1,2,3:a\n4,5,6,7:b\n").unwrap_err();
        match err {
            Error::Format { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_numeric_is_parse_error() {
        let err = parse_ts("@data\n1,x,3:a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = parse_ts("@data\n1,?,3:a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_ts("@data\n1,NaN,3:a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn missing_data_section() {
        let err = parse_ts("@problemName x\n@classLabel true a b\n").unwrap_err();
        assert!(matches!(err, Error::Format { .. }));
    }

    #[test]
    fn declared_label_order_wins() {
        let ds = parse_ts("@classLabel true z y\n@data\n1,2:y\n3,4:z\n").unwrap();
        assert_eq!(ds.classes(), &["z".to_string(), "y".to_string()]);
        assert_eq!(ds.labels().unwrap(), &[1, 0]);
        let err = parse_ts("@classLabel true z y\n@data\n1,2:x\n").unwrap_err();
        assert!(matches!(err, Error::Format { .. }));
    }

    #[test]
    fn unlabeled_ts() {
        let ds = parse_ts("@classLabel false\n@data\n1,2,3\n4,5,6\n").unwrap();
        assert!(ds.labels().is_none());
        assert_eq!(ds.len(), 2);
        assert!(ds.check_trainable().is_err());
    }

    #[test]
    fn multivariate_rejected() {
        assert!(parse_ts("@data\n1,2:3,4:a\n").is_err());
        assert!(parse_ts("@univariate false\n@data\n1,2:a\n").is_err());
    }

    #[test]
    fn csv_label_first_and_last() {
        let ds = parse_csv("0,1.0,2.0\n1,3.0,4.0\n", LabelColumn::First, false).unwrap();
        assert_eq!((ds.len(), ds.series_length()), (2, 2));
        assert_eq!(ds.label_names().unwrap(), vec!["0", "1"]);
        let ds = parse_csv("t,a,b\n1.0,2.0,x\n3.0,4.0,y\n", LabelColumn::Last, true).unwrap();
        assert_eq!(ds.series()[1], vec![3.0, 4.0]);
        assert_eq!(ds.classes(), &["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn csv_errors() {
        assert!(matches!(
            parse_csv("", LabelColumn::First, false),
            Err(Error::Format { .. })
        ));
        assert!(matches!(
            parse_csv("0,1,2\n1,3\n", LabelColumn::First, false),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            parse_csv("0,1,zz\n", LabelColumn::First, false),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn single_class_loads_but_is_not_trainable() {
        let ds = parse_csv("a,1,2,3\n", LabelColumn::First, false).unwrap();
        assert_eq!(ds.num_classes(), 1);
        assert!(ds.check_trainable().is_err());
    }

    #[test]
    fn ts_round_trip_is_exact() {
        let series = vec![vec![0.1, -2.5e-7, 1.0 / 3.0], vec![1e300, 0.0, -0.0]];
        let ds = TimeSeriesDataset::new(series, Some(vec!["b".into(), "a".into()])).unwrap();
        let back = parse_ts(&ds.to_ts_string()).unwrap();
        assert_eq!(back, ds);
    }

    #[test]
    fn ts_and_csv_agree() {
        let ts = parse_ts("@data\n1.5,2,3:x\n4,5,6.25:y\n").unwrap();
        let csv = parse_csv("x,1.5,2,3\ny,4,5,6.25\n", LabelColumn::First, false).unwrap();
        assert_eq!(ts, csv);
    }
}
