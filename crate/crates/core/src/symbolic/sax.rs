//! SAX: z-normalization, piecewise aggregate approximation and Gaussian
//! equi-probability discretization.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Standard deviation below which a segment is treated as constant.
pub const FLAT_STD: f64 = 1e-8;

/// Returns the segment shifted to zero mean and scaled to unit (population)
/// standard deviation. Near-constant segments map to all zeros.
pub fn znormalize(segment: &[f64]) -> Vec<f64> {
    if segment.is_empty() {
        return Vec::new();
    }
    let n = segment.len() as f64;
    let mean = segment.iter().sum::<f64>() / n;
    let var = segment.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    let std = var.sqrt();
    if std < FLAT_STD {
        return vec![0.0; segment.len()];
    }
    segment.iter().map(|v| (v - mean) / std).collect()
}

/// Piecewise aggregate approximation of `segment` into `word_len` frames.
///
/// Frame `j` is the mean of the piecewise-constant signal (sample `t` covers
/// `[t, t+1)`) over `[j*l/w, (j+1)*l/w)`, so samples straddling a fractional
/// boundary contribute proportionally to both frames.
pub fn paa(segment: &[f64], word_len: usize) -> Result<Vec<f64>> {
    let l = segment.len();
    if word_len == 0 || word_len > l {
        return Err(Error::invalid(format!(
            "PAA word length {word_len} must be in 1..={l}"
        )));
    }
    if l.is_multiple_of(word_len) {
        let frame = l / word_len;
        return Ok(segment
            .chunks(frame)
            .map(|c| c.iter().sum::<f64>() / frame as f64)
            .collect());
    }
    // Integer units of 1/w samples: sample t spans [t*w, (t+1)*w), frame j
    // spans [j*l, (j+1)*l).
    let (w, l_units) = (word_len, l);
    let mut out = Vec::with_capacity(word_len);
    for j in 0..w {
        let (lo, hi) = (j * l_units, (j + 1) * l_units);
        let first = lo / w;
        let last = (hi - 1) / w;
        let mut acc = 0.0;
        for (t, v) in segment.iter().enumerate().take(last + 1).skip(first) {
            let overlap = hi.min((t + 1) * w) - lo.max(t * w);
            acc += v * overlap as f64;
        }
        out.push(acc / l_units as f64);
    }
    Ok(out)
}

/// The `alphabet - 1` quantiles of the standard normal distribution.
///
/// The table is built symmetric around zero so that the median breakpoint of
/// an even alphabet is exactly 0.
pub fn gaussian_breakpoints(alphabet: usize) -> Vec<f64> {
    let normal = Normal::new(0.0, 1.0).expect("standard normal");
    let mut out = vec![0.0; alphabet.saturating_sub(1)];
    for j in 1..alphabet {
        let (lo, hi) = (j, alphabet - j);
        out[j - 1] = match lo.cmp(&hi) {
            std::cmp::Ordering::Less => normal.inverse_cdf(lo as f64 / alphabet as f64),
            std::cmp::Ordering::Equal => 0.0,
            std::cmp::Ordering::Greater => -normal.inverse_cdf(hi as f64 / alphabet as f64),
        };
    }
    out
}

/// Symbol index of `value` given sorted `edges`: the number of edges the
/// value is strictly greater than. Equal values stay in the lower bin.
#[inline]
pub fn bin_index(value: f64, edges: &[f64]) -> usize {
    edges.partition_point(|&e| value > e)
}

#[inline]
pub fn symbol(index: usize) -> u8 {
    b'a' + index as u8
}

/// SAX word of a single segment.
pub fn sax_word(segment: &[f64], word_len: usize, alphabet: usize) -> Result<String> {
    check_alphabet(alphabet)?;
    let approx = paa(&znormalize(segment), word_len)?;
    let edges = gaussian_breakpoints(alphabet);
    Ok(approx
        .iter()
        .map(|&v| symbol(bin_index(v, &edges)) as char)
        .collect())
}

pub(crate) fn check_alphabet(alphabet: usize) -> Result<()> {
    if !(2..=26).contains(&alphabet) {
        return Err(Error::invalid(format!(
            "alphabet size {alphabet} must be in 2..=26"
        )));
    }
    Ok(())
}

/// Computes SAX words for every window of a series in O(L * w) time using
/// prefix sums, appending the symbols of each window to `out`.
pub(crate) fn sliding_sax(
    series: &[f64],
    window: usize,
    word_len: usize,
    breakpoints: &[f64],
    mut emit: impl FnMut(&[u8]),
) {
    let n = series.len();
    let center = series.iter().sum::<f64>() / n as f64;
    let y: Vec<f64> = series.iter().map(|v| v - center).collect();
    let mut sum = vec![0.0; n + 1];
    let mut sq = vec![0.0; n + 1];
    for (t, v) in y.iter().enumerate() {
        sum[t + 1] = sum[t] + v;
        sq[t + 1] = sq[t] + v * v;
    }
    let lf = window as f64;
    let mut word = vec![0u8; word_len];
    let zero_symbol = symbol(bin_index(0.0, breakpoints));
    let divisible = window.is_multiple_of(word_len);

    for start in 0..=(n - window) {
        let mean = (sum[start + window] - sum[start]) / lf;
        let mean_sq = (sq[start + window] - sq[start]) / lf;
        let mut var = mean_sq - mean * mean;
        // Cancellation makes the prefix-sum variance unreliable for nearly
        // flat windows; recompute those directly.
        if var <= 1e-9 * mean_sq.max(f64::MIN_POSITIVE) {
            let seg = &y[start..start + window];
            let m = seg.iter().sum::<f64>() / lf;
            var = seg.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / lf;
        }
        let std = var.max(0.0).sqrt();
        if std < FLAT_STD {
            word.fill(zero_symbol);
            emit(&word);
            continue;
        }
        for (j, slot) in word.iter_mut().enumerate() {
            let frame_mean = if divisible {
                let f = window / word_len;
                (sum[start + (j + 1) * f] - sum[start + j * f]) / f as f64
            } else {
                (integral(&sum, &y, start, (j + 1) * window, word_len)
                    - integral(&sum, &y, start, j * window, word_len))
                    / lf
            };
            *slot = symbol(bin_index((frame_mean - mean) / std, breakpoints));
        }
        emit(&word);
    }
}

/// Integral (times `w`) of the piecewise-constant signal from `start` to
/// `start + units / w`.
#[inline]
fn integral(prefix: &[f64], y: &[f64], start: usize, units: usize, w: usize) -> f64 {
    let whole = units / w;
    let frac = units % w;
    let base = (prefix[start + whole] - prefix[start]) * w as f64;
    if frac == 0 {
        base
    } else {
        base + y[start + whole] * frac as f64
    }
}
