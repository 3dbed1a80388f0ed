//! L2-regularized multinomial logistic regression on binary sparse inputs,
//! trained with a deterministic L-BFGS.

use std::collections::VecDeque;

use super::features::FeatureMatrix;
use crate::error::{Error, Result};

/// Hyperparameters of [`train_classifier`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainOptions {
    /// Inverse penalty strength: the objective adds `|W|^2 / (2 * reg)`.
    pub reg: f64,
    /// Stop once the largest absolute gradient entry falls below this.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for TrainOptions {
    fn default() -> Self {
        TrainOptions {
            reg: 1.0,
            tol: 1e-4,
            max_iter: 1000,
        }
    }
}

impl TrainOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.reg.is_finite() && self.reg > 0.0) {
            return Err(Error::invalid(format!(
                "regularization strength must be positive, got {}",
                self.reg
            )));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::invalid(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// Outcome of the optimizer.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainStatus {
    /// Whether the gradient tolerance was reached.
    pub converged: bool,
    pub iterations: usize,
    /// Infinity norm of the gradient at the returned weights.
    pub gradient_norm: f64,
    /// Objective value after each accepted step, starting at the initial point.
    pub objective_trace: Vec<f64>,
}

impl TrainStatus {
    pub fn objective(&self) -> f64 {
        *self
            .objective_trace
            .last()
            .expect("trace holds the initial value")
    }
}

/// Per-class weights over the feature columns plus per-class intercepts.
#[derive(Debug, Clone, PartialEq)]
pub struct Classifier {
    pub weights: Vec<Vec<f64>>,
    pub intercepts: Vec<f64>,
}

impl Classifier {
    pub fn num_classes(&self) -> usize {
        self.intercepts.len()
    }

    pub fn num_features(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    /// Linear scores of one row given by its active columns.
    pub fn decision(&self, active: &[u32]) -> Vec<f64> {
        self.weights
            .iter()
            .zip(&self.intercepts)
            .map(|(w, &b)| active.iter().fold(b, |acc, &j| acc + w[j as usize]))
            .collect()
    }

    pub fn predict_proba(&self, x: &FeatureMatrix) -> Result<Vec<Vec<f64>>> {
        if x.cols() != self.num_features() {
            return Err(Error::invalid(format!(
                "matrix has {} columns, classifier expects {}",
                x.cols(),
                self.num_features()
            )));
        }
        Ok((0..x.rows())
            .map(|i| {
                let mut z = self.decision(x.row(i));
                softmax_in_place(&mut z);
                z
            })
            .collect())
    }

    pub fn predict(&self, x: &FeatureMatrix) -> Result<Vec<usize>> {
        Ok(self.predict_proba(x)?.iter().map(|p| argmax(p)).collect())
    }
}

/// Index of the largest value; the lowest index wins ties.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

fn softmax_in_place(z: &mut [f64]) {
    let m = z.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for v in z.iter_mut() {
        *v = (*v - m).exp();
        sum += *v;
    }
    for v in z.iter_mut() {
        *v /= sum;
    }
}

/// Training objective
/// `sum_i -log softmax(W x_i + b)[y_i] + |W|^2 / (2 * reg)`.
///
/// Parameters are laid out as `W` row by row (`C * D` values) followed by the
/// `C` intercepts.
pub struct LogisticObjective<'a> {
    x: &'a FeatureMatrix,
    labels: &'a [usize],
    num_classes: usize,
    reg: f64,
}

impl<'a> LogisticObjective<'a> {
    pub fn new(
        x: &'a FeatureMatrix,
        labels: &'a [usize],
        num_classes: usize,
        reg: f64,
    ) -> Result<Self> {
        if x.rows() != labels.len() {
            return Err(Error::invalid(format!(
                "{} rows but {} labels",
                x.rows(),
                labels.len()
            )));
        }
        if num_classes < 2 {
            return Err(Error::invalid("a classifier needs at least two classes"));
        }
        if let Some(&y) = labels.iter().find(|&&y| y >= num_classes) {
            return Err(Error::invalid(format!(
                "label {y} out of range for {num_classes} classes"
            )));
        }
        if !(reg.is_finite() && reg > 0.0) {
            return Err(Error::invalid("regularization strength must be positive"));
        }
        Ok(LogisticObjective {
            x,
            labels,
            num_classes,
            reg,
        })
    }

    pub fn num_params(&self) -> usize {
        self.num_classes * (self.x.cols() + 1)
    }

    /// Returns the objective at `params` and writes its gradient to `grad`.
    pub fn evaluate(&self, params: &[f64], grad: &mut [f64]) -> f64 {
        let (c, d) = (self.num_classes, self.x.cols());
        let (w, b) = params.split_at(c * d);
        let (gw, gb) = grad.split_at_mut(c * d);

        let mut penalty = 0.0;
        for (g, &v) in gw.iter_mut().zip(w) {
            *g = v / self.reg;
            penalty += v * v;
        }
        gb.iter_mut().for_each(|g| *g = 0.0);
        let mut loss = 0.0;
        let mut z = vec![0.0; c];
        for (i, &y) in self.labels.iter().enumerate() {
            let row = self.x.row(i);
            for (k, zk) in z.iter_mut().enumerate() {
                let wk = &w[k * d..(k + 1) * d];
                *zk = row.iter().fold(b[k], |acc, &j| acc + wk[j as usize]);
            }
            let m = z.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let sum: f64 = z.iter().map(|v| (v - m).exp()).sum();
            let lse = m + sum.ln();
            loss += lse - z[y];
            for k in 0..c {
                let delta = (z[k] - lse).exp() - if k == y { 1.0 } else { 0.0 };
                gb[k] += delta;
                let gk = &mut gw[k * d..(k + 1) * d];
                for &j in row {
                    gk[j as usize] += delta;
                }
            }
        }
        loss + penalty / (2.0 * self.reg)
    }

    pub fn value(&self, params: &[f64]) -> f64 {
        let mut g = vec![0.0; params.len()];
        self.evaluate(params, &mut g)
    }

    fn unpack(&self, params: &[f64]) -> Classifier {
        let d = self.x.cols();
        let (w, b) = params.split_at(self.num_classes * d);
        Classifier {
            weights: (0..self.num_classes)
                .map(|k| w[k * d..(k + 1) * d].to_vec())
                .collect(),
            intercepts: b.to_vec(),
        }
    }
}

/// Fits the classifier from zero weights. Every class in `0..num_classes`
/// must have at least one training row. Hitting `max_iter` is not an error:
/// the weights are returned with `converged == false`.
pub fn train_classifier(
    x: &FeatureMatrix,
    labels: &[usize],
    num_classes: usize,
    options: &TrainOptions,
) -> Result<(Classifier, TrainStatus)> {
    options.validate()?;
    let objective = LogisticObjective::new(x, labels, num_classes, options.reg)?;
    let mut sizes = vec![0usize; num_classes];
    for &y in labels {
        sizes[y] += 1;
    }
    if let Some(k) = sizes.iter().position(|&n| n == 0) {
        return Err(Error::invalid(format!("class {k} has no training series")));
    }
    let start = vec![0.0; objective.num_params()];
    let (params, status) = minimize(
        |p, g| objective.evaluate(p, g),
        start,
        options.tol,
        options.max_iter,
    );
    Ok((objective.unpack(&params), status))
}

const HISTORY: usize = 10;
const ARMIJO: f64 = 1e-4;
const MAX_BACKTRACKS: usize = 60;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// L-BFGS with Armijo backtracking. Every accepted step decreases the
/// objective; when no decrease can be found along the quasi-Newton direction
/// the history is dropped and steepest descent is tried once more.
fn minimize(
    mut f: impl FnMut(&[f64], &mut [f64]) -> f64,
    mut x: Vec<f64>,
    tol: f64,
    max_iter: usize,
) -> (Vec<f64>, TrainStatus) {
    let n = x.len();
    let mut g = vec![0.0; n];
    let mut fx = f(&x, &mut g);
    let mut trace = vec![fx];
    let mut history: VecDeque<(Vec<f64>, Vec<f64>, f64)> = VecDeque::with_capacity(HISTORY);
    let mut x_new = vec![0.0; n];
    let mut g_new = vec![0.0; n];
    let mut iterations = 0;

    while inf_norm(&g) >= tol && iterations < max_iter {
        iterations += 1;
        let mut dir = two_loop(&g, &history);
        let mut slope = dot(&dir, &g);
        if slope.is_nan() || slope >= 0.0 {
            history.clear();
            dir = two_loop(&g, &history);
            slope = dot(&dir, &g);
        }
        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_BACKTRACKS {
            for i in 0..n {
                x_new[i] = x[i] + step * dir[i];
            }
            let f_new = f(&x_new, &mut g_new);
            if f_new.is_finite() && f_new <= fx + ARMIJO * step * slope {
                accepted = Some(f_new);
                break;
            }
            step *= 0.5;
        }
        let Some(f_new) = accepted else {
            if history.is_empty() {
                break;
            }
            history.clear();
            continue;
        };
        let s: Vec<f64> = x_new.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 * dot(&y, &y).max(f64::MIN_POSITIVE) {
            if history.len() == HISTORY {
                history.pop_front();
            }
            history.push_back((s, y, 1.0 / sy));
        }
        std::mem::swap(&mut x, &mut x_new);
        std::mem::swap(&mut g, &mut g_new);
        fx = f_new;
        trace.push(fx);
    }
    let gradient_norm = inf_norm(&g);
    (
        x,
        TrainStatus {
            converged: gradient_norm < tol,
            iterations,
            gradient_norm,
            objective_trace: trace,
        },
    )
}

/// Search direction `-H g` from the stored curvature pairs. Without history
/// the direction is the negative gradient scaled to unit length at most.
fn two_loop(g: &[f64], history: &VecDeque<(Vec<f64>, Vec<f64>, f64)>) -> Vec<f64> {
    let mut q = g.to_vec();
    let Some((s_last, y_last, _)) = history.back() else {
        let scale = 1.0 / dot(g, g).sqrt().max(1.0);
        return q.into_iter().map(|v| -v * scale).collect();
    };
    let mut alphas = Vec::with_capacity(history.len());
    for (s, y, rho) in history.iter().rev() {
        let a = rho * dot(s, &q);
        q.iter_mut().zip(y).for_each(|(qi, yi)| *qi -= a * yi);
        alphas.push(a);
    }
    let gamma = dot(s_last, y_last) / dot(y_last, y_last);
    q.iter_mut().for_each(|v| *v *= gamma);
    for ((s, y, rho), a) in history.iter().zip(alphas.into_iter().rev()) {
        let beta = rho * dot(y, &q);
        q.iter_mut()
            .zip(s)
            .for_each(|(qi, si)| *qi += (a - beta) * si);
    }
    q.into_iter().map(|v| -v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn separable() -> (FeatureMatrix, Vec<usize>) {
        let rows = vec![vec![0], vec![0, 2], vec![1], vec![1, 2], vec![0], vec![1]];
        (
            FeatureMatrix::from_rows(3, &rows).unwrap(),
            vec![0, 0, 1, 1, 0, 1],
        )
    }

    #[test]
    fn separable_toy_is_learned() {
        let (x, y) = separable();
        let (clf, status) = train_classifier(&x, &y, 2, &TrainOptions::default()).unwrap();
        assert!(status.converged, "{status:?}");
        assert!(status.gradient_norm < 1e-4);
        assert_eq!(clf.predict(&x).unwrap(), y);
    }

    #[test]
    fn objective_never_increases() {
        let (x, y) = separable();
        let (_, status) = train_classifier(&x, &y, 2, &TrainOptions::default()).unwrap();
        assert!(status.objective_trace.windows(2).all(|p| p[1] <= p[0]));
    }

    #[test]
    fn empty_features_give_class_prior() {
        let x = FeatureMatrix::from_rows(4, &vec![vec![]; 10]).unwrap();
        let y = vec![0, 0, 0, 0, 0, 1, 1, 1, 2, 2];
        let (clf, status) = train_classifier(&x, &y, 3, &TrainOptions::default()).unwrap();
        assert!(status.converged);
        let p = &clf.predict_proba(&x).unwrap()[0];
        for (pk, want) in p.iter().zip([0.5, 0.3, 0.2]) {
            assert!((pk - want).abs() < 1e-3, "{p:?}");
        }
        assert!(clf.weights.iter().flatten().all(|&w| w == 0.0));
    }

    #[test]
    fn probabilities_sum_to_one() {
        let (x, y) = separable();
        let (clf, _) = train_classifier(&x, &y, 2, &TrainOptions::default()).unwrap();
        for p in clf.predict_proba(&x).unwrap() {
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let rows = vec![vec![0, 1], vec![1], vec![2], vec![0, 2], vec![]];
        let x = FeatureMatrix::from_rows(3, &rows).unwrap();
        let y = vec![0, 1, 2, 1, 0];
        let obj = LogisticObjective::new(&x, &y, 3, 0.7).unwrap();
        let p: Vec<f64> = (0..obj.num_params())
            .map(|i| (i as f64 * 0.37).sin())
            .collect();
        let mut g = vec![0.0; p.len()];
        obj.evaluate(&p, &mut g);
        for i in 0..p.len() {
            let (mut a, mut b) = (p.clone(), p.clone());
            a[i] += 1e-5;
            b[i] -= 1e-5;
            let fd = (obj.value(&a) - obj.value(&b)) / 2e-5;
            assert!(
                (fd - g[i]).abs() <= 1e-6 * g[i].abs().max(1.0),
                "{i}: {fd} vs {}",
                g[i]
            );
        }
    }

    #[test]
    fn rejects_bad_input() {
        let (x, y) = separable();
        assert!(train_classifier(&x, &[0; 6], 1, &TrainOptions::default()).is_err());
        assert!(train_classifier(&x, &y[..5], 2, &TrainOptions::default()).is_err());
        let bad = TrainOptions {
            reg: 0.0,
            ..Default::default()
        };
        assert!(train_classifier(&x, &y, 2, &bad).is_err());
        // Class 2 declared but never seen.
        assert!(train_classifier(&x, &y, 3, &TrainOptions::default()).is_err());
    }

    #[test]
    fn iteration_cap_reports_status() {
        let (x, y) = separable();
        let opts = TrainOptions {
            max_iter: 1,
            ..Default::default()
        };
        let (_, status) = train_classifier(&x, &y, 2, &opts).unwrap();
        assert!(!status.converged);
        assert_eq!(status.iterations, 1);
    }

    #[test]
    fn argmax_prefers_lowest_index() {
        assert_eq!(argmax(&[0.5, 0.5]), 0);
        assert_eq!(argmax(&[0.2, 0.4, 0.4]), 1);
    }
}
