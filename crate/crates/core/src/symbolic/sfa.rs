//! SFA: truncated Fourier approximation and multiple coefficient binning.

use std::f64::consts::PI;
use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::sax::{bin_index, symbol};
use crate::error::{Error, Result};

/// First `num_coeffs` reals of the interleaved `(re, im)` DFT of `segment`,
/// starting at the DC coefficient. Coefficients are unnormalized:
/// `X_k = sum_t x_t exp(-2 pi i k t / l)`.
pub fn dft_truncated(segment: &[f64], num_coeffs: usize) -> Result<Vec<f64>> {
    if num_coeffs > segment.len() {
        return Err(Error::invalid(format!(
            "{num_coeffs} Fourier values requested from a segment of length {}",
            segment.len()
        )));
    }
    let mut dft = WindowDft::new(segment.len(), num_coeffs, false);
    let mut out = vec![0.0; num_coeffs];
    dft.compute(segment, &mut out);
    Ok(out)
}

/// Fourier approximation of fixed-length windows.
///
/// Holds an FFT plan for the window length; [`slide`](Self::slide) walks a
/// series window by window with the O(w) sliding-DFT recurrence
/// `X_k(s+1) = e^{2 pi i k / l} (X_k(s) - x_s + x_{s+l})`, re-anchoring with a
/// full FFT every [`RESYNC`] windows to bound accumulated rounding error.
pub(crate) struct WindowDft {
    len: usize,
    num_values: usize,
    first_coeff: usize,
    fft: Arc<dyn Fft<f64>>,
    buffer: Vec<Complex64>,
    scratch: Vec<Complex64>,
    rotations: Vec<Complex64>,
}

const RESYNC: usize = 128;

impl WindowDft {
    pub(crate) fn new(len: usize, num_values: usize, drop_dc: bool) -> Self {
        let fft = FftPlanner::new().plan_fft_forward(len.max(1));
        let first_coeff = usize::from(drop_dc);
        let num_coeffs = num_values.div_ceil(2);
        let rotations = (first_coeff..first_coeff + num_coeffs)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / len as f64))
            .collect();
        let scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
        WindowDft {
            len,
            num_values,
            first_coeff,
            fft,
            buffer: vec![Complex64::default(); len.max(1)],
            scratch,
            rotations,
        }
    }

    fn coefficients(&mut self, segment: &[f64]) -> Vec<Complex64> {
        for (b, &v) in self.buffer.iter_mut().zip(segment) {
            *b = Complex64::new(v, 0.0);
        }
        self.fft
            .process_with_scratch(&mut self.buffer, &mut self.scratch);
        // Indices past the window length wrap around (the DFT is periodic).
        (0..self.rotations.len())
            .map(|i| self.buffer[(self.first_coeff + i) % self.len])
            .collect()
    }

    fn flatten(&self, coeffs: &[Complex64], out: &mut [f64]) {
        for (i, slot) in out.iter_mut().enumerate().take(self.num_values) {
            let c = coeffs[i / 2];
            *slot = if i % 2 == 0 { c.re } else { c.im };
        }
    }

    pub(crate) fn compute(&mut self, segment: &[f64], out: &mut [f64]) {
        let coeffs = self.coefficients(segment);
        self.flatten(&coeffs, out);
    }

    /// Calls `emit` with the truncated DFT of every window of `series`.
    pub(crate) fn slide(&mut self, series: &[f64], mut emit: impl FnMut(&[f64])) {
        let l = self.len;
        let mut values = vec![0.0; self.num_values];
        let mut coeffs = Vec::new();
        for start in 0..=(series.len() - l) {
            if start % RESYNC == 0 {
                coeffs = self.coefficients(&series[start..start + l]);
            } else {
                let delta = series[start + l - 1] - series[start - 1];
                for (c, r) in coeffs.iter_mut().zip(&self.rotations) {
                    *c = (*c + delta) * r;
                }
            }
            self.flatten(&coeffs, &mut values);
            emit(&values);
        }
    }
}

/// Fits equi-depth bin edges per coefficient position.
///
/// For each position the `alphabet - 1` edges sit at the `j / alphabet`
/// quantiles of the training values: with the values sorted, edge `j` is the
/// midpoint between order statistics `m - 1` and `m`, `m = round(j n / alphabet)`.
pub fn mcb_fit(windows: &[Vec<f64>], alphabet: usize) -> Result<Vec<Vec<f64>>> {
    let width = windows
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::invalid("MCB fitting needs at least one training window"))?;
    let mut columns = vec![Vec::with_capacity(windows.len()); width];
    for w in windows {
        if w.len() != width {
            return Err(Error::invalid("MCB training windows differ in length"));
        }
        for (col, &v) in columns.iter_mut().zip(w) {
            col.push(v);
        }
    }
    Ok(columns
        .into_iter()
        .map(|col| quantile_edges(col, alphabet))
        .collect())
}

/// Linear-time selection of the needed order statistics; no full sort.
pub(crate) fn quantile_edges(mut values: Vec<f64>, alphabet: usize) -> Vec<f64> {
    let n = values.len();
    if n < 2 {
        return vec![values[0]; alphabet - 1];
    }
    let mut edges = Vec::with_capacity(alphabet - 1);
    // Ranks are non-decreasing in j, so each selection only searches the
    // part of the slice to the right of the previous one.
    let mut lo = 0;
    for j in 1..alphabet {
        let m = ((j * n + alphabet / 2) / alphabet).clamp(1, n - 1);
        let (left, upper, _) = values[lo..].select_nth_unstable_by(m - lo, f64::total_cmp);
        let upper = *upper;
        let lower = if m > lo {
            left.iter()
                .copied()
                .max_by(f64::total_cmp)
                .expect("non-empty")
        } else {
            values[..lo]
                .iter()
                .copied()
                .max_by(f64::total_cmp)
                .expect("rank m-1 lies left of lo")
        };
        edges.push(0.5 * (lower + upper));
        lo = m;
    }
    edges
}

/// Discretizes Fourier values against per-position edges.
pub(crate) fn discretize(values: &[f64], bins: &[Vec<f64>], out: &mut [u8]) {
    for ((slot, &v), edges) in out.iter_mut().zip(values).zip(bins) {
        *slot = symbol(bin_index(v, edges));
    }
}

/// SFA word of a single segment under fitted `bins` (one edge list per
/// Fourier value).
pub fn sfa_word(segment: &[f64], bins: &[Vec<f64>], drop_dc: bool) -> Result<String> {
    let w = bins.len();
    if w > segment.len() {
        return Err(Error::invalid(format!(
            "word length {w} exceeds segment length {}",
            segment.len()
        )));
    }
    let mut dft = WindowDft::new(segment.len(), w, drop_dc);
    let mut values = vec![0.0; w];
    dft.compute(segment, &mut values);
    let mut word = vec![0u8; w];
    discretize(&values, bins, &mut word);
    Ok(String::from_utf8(word).expect("ascii symbols"))
}
