//! Binary presence features over the selected subwords.

use crate::error::{Error, Result};
use crate::mining::{FeatureSet, SubwordIndex};
use crate::symbolic::SymbolicSequence;

/// Sparse 0/1 matrix in compressed row form: row `i` lists the columns that
/// are 1, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureMatrix {
    cols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<u32>,
}

impl FeatureMatrix {
    /// Matrix with `cols` columns and no rows.
    pub fn new(cols: usize) -> Self {
        FeatureMatrix {
            cols,
            row_ptr: vec![0],
            col_idx: Vec::new(),
        }
    }

    /// Builds a matrix from the active columns of each row.
    pub fn from_rows(cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut m = FeatureMatrix::new(cols);
        for r in rows {
            m.push_row(r)?;
        }
        Ok(m)
    }

    /// Appends a row; `active` must be strictly increasing and below `cols`.
    pub fn push_row(&mut self, active: &[u32]) -> Result<()> {
        if active.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::invalid("row columns must be strictly increasing"));
        }
        if let Some(&last) = active.last() {
            if last as usize >= self.cols {
                return Err(Error::invalid(format!(
                    "column {last} out of range for {} columns",
                    self.cols
                )));
            }
        }
        self.col_idx.extend_from_slice(active);
        self.row_ptr.push(self.col_idx.len());
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.row_ptr.len() - 1
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of ones.
    pub fn nnz(&self) -> usize {
        self.col_idx.len()
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.col_idx[self.row_ptr[i]..self.row_ptr[i + 1]]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row(i).binary_search(&(j as u32)).is_ok()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.cols];
        for &j in &self.col_idx {
            sums[j as usize] += 1;
        }
        sums
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.rows())
            .map(|i| {
                let mut row = vec![0.0; self.cols];
                for &j in self.row(i) {
                    row[j as usize] = 1.0;
                }
                row
            })
            .collect()
    }
}

/// Presence matrix of the selected subwords.
///
/// `sequences[r][i]` is series `i` under representation `r` and
/// `features[r]` the subwords selected for representation `r`. Columns are
/// ordered by representation, then by position in the feature set. A subword
/// is present when it is a substring of one of the words.
pub fn featurize(
    sequences: &[Vec<SymbolicSequence>],
    features: &[FeatureSet],
) -> Result<FeatureMatrix> {
    if sequences.len() != features.len() {
        return Err(Error::invalid(format!(
            "{} representations of sequences but {} feature sets",
            sequences.len(),
            features.len()
        )));
    }
    let rows = sequences.first().map_or(0, Vec::len);
    if sequences.iter().any(|s| s.len() != rows) {
        return Err(Error::invalid(
            "representations disagree on the number of series",
        ));
    }
    let indexes = features
        .iter()
        .map(|f| SubwordIndex::new(&f.subwords))
        .collect::<Result<Vec<_>>>()?;
    let mut offsets = Vec::with_capacity(indexes.len());
    let mut cols = 0usize;
    for idx in &indexes {
        offsets.push(cols as u32);
        cols += idx.len();
    }
    if cols > u32::MAX as usize {
        return Err(Error::invalid("too many feature columns"));
    }

    let mut matrix = FeatureMatrix::new(cols);
    let mut active = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for i in 0..rows {
        active.clear();
        for (r, idx) in indexes.iter().enumerate() {
            active.extend(
                idx.present(&sequences[r][i])
                    .into_iter()
                    .map(|j| j + offsets[r]),
            );
        }
        matrix.push_row(&active)?;
    }
    Ok(matrix)
}
