//! Chi-square score of a subword's class distribution and its upper bound
//! over all extensions of the subword.

use crate::error::{Error, Result};

/// Document frequencies of one subword per class, alongside the class sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCounts {
    /// `per_class[k]`: training series of class `k` containing the subword.
    pub per_class: Vec<usize>,
    /// `class_sizes[k]`: training series of class `k`.
    pub class_sizes: Vec<usize>,
}

impl ClassCounts {
    pub fn new(per_class: Vec<usize>, class_sizes: Vec<usize>) -> Result<Self> {
        check(&per_class, &class_sizes)?;
        Ok(ClassCounts {
            per_class,
            class_sizes,
        })
    }

    pub fn total(&self) -> usize {
        self.per_class.iter().sum()
    }

    pub fn score(&self) -> f64 {
        score_unchecked(&self.per_class, &self.class_sizes)
    }

    pub fn bound(&self) -> f64 {
        bound_unchecked(&self.per_class, &self.class_sizes)
    }
}

fn check(observed: &[usize], class_sizes: &[usize]) -> Result<()> {
    if observed.len() != class_sizes.len() {
        return Err(Error::invalid(format!(
            "{} observed counts for {} classes",
            observed.len(),
            class_sizes.len()
        )));
    }
    for (k, (&o, &n)) in observed.iter().zip(class_sizes).enumerate() {
        if o > n {
            return Err(Error::invalid(format!(
                "class {k}: observed {o} exceeds class size {n}"
            )));
        }
    }
    if class_sizes.iter().all(|&n| n == 0) {
        return Err(Error::invalid("all class sizes are zero"));
    }
    Ok(())
}

/// `sum_k (O_k - E_k)^2 / E_k` with `E_k = T N_k / N` and `T = sum_k O_k`.
///
/// Zero when the subword occurs nowhere. Classes of size zero contribute
/// nothing (their observed count is necessarily zero).
pub fn chi2_score(observed: &[usize], class_sizes: &[usize]) -> Result<f64> {
    check(observed, class_sizes)?;
    Ok(score_unchecked(observed, class_sizes))
}

/// Upper bound on [`chi2_score`] for any `O'` with `O'_k <= O_k`: the largest
/// score obtained by keeping a single class's count and zeroing the rest.
pub fn chi2_bound(observed: &[usize], class_sizes: &[usize]) -> Result<f64> {
    check(observed, class_sizes)?;
    Ok(bound_unchecked(observed, class_sizes))
}

pub(crate) fn score_unchecked(observed: &[usize], class_sizes: &[usize]) -> f64 {
    let total: usize = observed.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let n: usize = class_sizes.iter().sum();
    let (t, n) = (total as f64, n as f64);
    observed
        .iter()
        .zip(class_sizes)
        .filter(|(_, &nk)| nk > 0)
        .map(|(&o, &nk)| {
            let e = t * nk as f64 / n;
            let d = o as f64 - e;
            d * d / e
        })
        .sum()
}

pub(crate) fn bound_unchecked(observed: &[usize], class_sizes: &[usize]) -> f64 {
    let mut single = vec![0usize; observed.len()];
    let mut best = 0.0f64;
    for (k, &o) in observed.iter().enumerate() {
        if o == 0 {
            continue;
        }
        single[k] = o;
        best = best.max(score_unchecked(&single, class_sizes));
        single[k] = 0;
    }
    best
}
