//! Lookup structure for a fixed list of subwords: finds which of them occur
//! in a symbolic sequence by walking a small trie from every word position.

use crate::error::{Error, Result};
use crate::symbolic::SymbolicSequence;

#[derive(Debug, Clone, Default)]
struct Node {
    children: Vec<(u8, u32)>,
    feature: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct SubwordIndex {
    nodes: Vec<Node>,
    len: usize,
    max_len: usize,
}

impl SubwordIndex {
    /// Indexes `subwords`; feature `i` is `subwords[i]`. Subwords must be
    /// non-empty and distinct.
    pub fn new<S: AsRef<[u8]>>(subwords: &[S]) -> Result<Self> {
        let mut nodes = vec![Node::default()];
        let mut max_len = 0;
        for (i, sw) in subwords.iter().enumerate() {
            let sw = sw.as_ref();
            if sw.is_empty() {
                return Err(Error::invalid("empty subword"));
            }
            max_len = max_len.max(sw.len());
            let mut cur = 0usize;
            for &sym in sw {
                cur = match nodes[cur].children.iter().find(|(s, _)| *s == sym) {
                    Some(&(_, next)) => next as usize,
                    None => {
                        let next = nodes.len();
                        nodes.push(Node::default());
                        nodes[cur].children.push((sym, next as u32));
                        next
                    }
                };
            }
            if nodes[cur].feature.is_some() {
                return Err(Error::invalid(format!(
                    "duplicate subword '{}'",
                    String::from_utf8_lossy(sw)
                )));
            }
            nodes[cur].feature = Some(i as u32);
        }
        Ok(SubwordIndex {
            nodes,
            len: subwords.len(),
            max_len,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Sorted ids of the subwords occurring in `seq`.
    pub fn present(&self, seq: &SymbolicSequence) -> Vec<u32> {
        let mut seen = vec![false; self.len];
        let mut out = Vec::new();
        for word in seq.words() {
            for start in 0..word.len() {
                let mut cur = 0usize;
                for &sym in word[start..].iter().take(self.max_len) {
                    match self.nodes[cur].children.iter().find(|(s, _)| *s == sym) {
                        Some(&(_, next)) => cur = next as usize,
                        None => break,
                    }
                    if let Some(f) = self.nodes[cur].feature {
                        if !seen[f as usize] {
                            seen[f as usize] = true;
                            out.push(f);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Per subword, the number of sequences of each class containing it.
    pub fn document_counts(
        &self,
        sequences: &[SymbolicSequence],
        labels: &[usize],
        num_classes: usize,
    ) -> Vec<Vec<usize>> {
        let mut counts = vec![vec![0; num_classes]; self.len];
        for (seq, &label) in sequences.iter().zip(labels) {
            for f in self.present(seq) {
                counts[f as usize][label] += 1;
            }
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_substrings_within_words() {
        let idx = SubwordIndex::new(&["ab", "zz", "b", "abc", "ca"]).unwrap();
        let seq = SymbolicSequence::from_words(&["aab", "cab"]).unwrap();
        assert_eq!(idx.present(&seq), vec![0, 2, 4]);
        let seq = SymbolicSequence::from_words(&["abx", "cxx"]).unwrap();
        assert_eq!(idx.present(&seq), vec![0, 2]);
        // "bc" spans a word boundary and must not match.
        let bc = SubwordIndex::new(&["bc"]).unwrap();
        let seq = SymbolicSequence::from_words(&["ab", "cd"]).unwrap();
        assert!(bc.present(&seq).is_empty());
    }

    #[test]
    fn duplicates_rejected() {
        assert!(SubwordIndex::new(&["ab", "ab"]).is_err());
        assert!(SubwordIndex::new(&[""]).is_err());
    }

    #[test]
    fn document_counts_by_class() {
        let idx = SubwordIndex::new(&["a", "bb"]).unwrap();
        let seqs = vec![
            SymbolicSequence::from_words(&["abb"]).unwrap(),
            SymbolicSequence::from_words(&["aaa"]).unwrap(),
            SymbolicSequence::from_words(&["bbb"]).unwrap(),
        ];
        assert_eq!(
            idx.document_counts(&seqs, &[0, 1, 1], 2),
            vec![vec![1, 1], vec![1, 1]]
        );
    }
}
