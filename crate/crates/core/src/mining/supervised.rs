//! Exact top-k Chi-square subword selection by branch and bound.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::trie::SubwordTrie;
use super::{check_labels, FeatureSet, Strategy};
use crate::error::{Error, Result};
use crate::symbolic::SymbolicSequence;

/// Counters describing one search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MiningStats {
    /// Nodes whose score was evaluated.
    pub visited: usize,
    /// Nodes whose children were generated.
    pub expanded: usize,
    /// Nodes whose subtree was cut off by the bound or the support floor.
    pub pruned: usize,
}

/// Depth-first trie search keeping the `budget` best subwords by Chi-square.
///
/// A node is admitted when its score reaches the current threshold (0 until
/// `budget` features are held, then the score of the worst held feature).
/// Its subtree is skipped when the Chi-square bound of the node falls below
/// the threshold, or when its document frequency is below `min_support`,
/// since no extension can then be admitted. The result is the exact top
/// `budget` under the order (score desc, length asc, bytes asc).
#[derive(Debug, Clone, Copy)]
pub struct SupervisedMiner {
    /// Smallest total document frequency for a subword to be selectable.
    pub min_support: usize,
    /// Disable to expand the whole trie (used to measure pruning).
    pub prune: bool,
}

impl Default for SupervisedMiner {
    fn default() -> Self {
        SupervisedMiner {
            min_support: 2,
            prune: true,
        }
    }
}

#[derive(Debug, Clone)]
struct Ranked {
    score: f64,
    subword: Vec<u8>,
}

impl Ranked {
    /// `Less` means `self` ranks before `other`.
    fn rank_cmp(&self, other: &Self) -> Ordering {
        other
            .score
            .total_cmp(&self.score)
            .then_with(|| self.subword.len().cmp(&other.subword.len()))
            .then_with(|| self.subword.cmp(&other.subword))
    }
}

impl PartialEq for Ranked {
    fn eq(&self, other: &Self) -> bool {
        self.rank_cmp(other) == Ordering::Equal
    }
}
impl Eq for Ranked {}
impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Ranked {
    // The heap's maximum is the worst-ranked feature.
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank_cmp(other)
    }
}

impl SupervisedMiner {
    pub fn select(
        &self,
        sequences: &[SymbolicSequence],
        labels: &[usize],
        num_classes: usize,
        budget: usize,
    ) -> Result<(FeatureSet, MiningStats)> {
        check_labels(sequences, labels, num_classes)?;
        if budget == 0 {
            return Err(Error::invalid("feature budget must be at least 1"));
        }
        let mut trie = SubwordTrie::new(sequences, labels, num_classes);
        let mut stats = MiningStats::default();
        let mut best: BinaryHeap<Ranked> = BinaryHeap::with_capacity(budget + 1);
        let mut threshold = 0.0f64;

        let mut stack: Vec<usize> = trie.expand(0);
        stack.reverse();
        while let Some(idx) = stack.pop() {
            stats.visited += 1;
            let node = trie.node(idx);
            let support = node.total();
            let score = trie.score(idx);
            if support >= self.min_support && score >= threshold {
                best.push(Ranked {
                    score,
                    subword: node.subword.clone(),
                });
                if best.len() > budget {
                    best.pop();
                }
                if best.len() == budget {
                    threshold = best.peek().map_or(0.0, |r| r.score);
                }
            }
            let promising = support >= self.min_support && trie.bound(idx) >= threshold;
            if self.prune && !promising {
                stats.pruned += 1;
                continue;
            }
            let mut children = trie.expand(idx);
            if !children.is_empty() {
                stats.expanded += 1;
            }
            children.reverse();
            stack.extend(children);
        }

        let ranked = best.into_sorted_vec();
        Ok((
            FeatureSet {
                strategy: Strategy::S,
                subwords: ranked
                    .iter()
                    .map(|r| String::from_utf8(r.subword.clone()).expect("ascii"))
                    .collect(),
                scores: Some(ranked.iter().map(|r| r.score).collect()),
            },
            stats,
        ))
    }
}

/// Selects the `budget` subwords with the highest Chi-square scores using the
/// default miner (pruning on, support floor 2).
pub fn select_supervised(
    sequences: &[SymbolicSequence],
    labels: &[usize],
    num_classes: usize,
    budget: usize,
) -> Result<FeatureSet> {
    SupervisedMiner::default()
        .select(sequences, labels, num_classes, budget)
        .map(|(fs, _)| fs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(words: &[&[&str]]) -> Vec<SymbolicSequence> {
        words
            .iter()
            .map(|w| SymbolicSequence::from_words(w).unwrap())
            .collect()
    }

    #[test]
    fn toy_top2_without_floor() {
        // Exhaustive ranking with sizes (1, 1): the six subwords unique to
        // one sequence have O = (1, 0) or (0, 1), E = (0.5, 0.5) and score
        // 0.25/0.5 + 0.25/0.5 = 1.0; "a" and "b" score 0.
        let s = seqs(&[&["aab"], &["bba"]]);
        let miner = SupervisedMiner {
            min_support: 1,
            prune: true,
        };
        let (fs, _) = miner.select(&s, &[0, 1], 2, 2).unwrap();
        assert_eq!(fs.scores.as_deref().unwrap(), &[1.0, 1.0]);
        // Ties resolve shorter-first, then lexicographically.
        assert_eq!(fs.subwords, vec!["aa", "ab"]);
    }

    #[test]
    fn toy_with_default_floor() {
        let s = seqs(&[&["aab"], &["bba"]]);
        let fs = select_supervised(&s, &[0, 1], 2, 2).unwrap();
        assert_eq!(fs.subwords, vec!["a", "b"]);
        assert_eq!(fs.scores.unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn identical_sequences_score_zero() {
        let s = seqs(&[&["abc"], &["abc"], &["abc"], &["abc"]]);
        let fs = select_supervised(&s, &[0, 0, 1, 1], 2, 3).unwrap();
        assert_eq!(fs.subwords.len(), 3);
        assert!(fs.scores.unwrap().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn large_budget_returns_everything() {
        let s = seqs(&[&["aab"], &["bba"]]);
        let miner = SupervisedMiner {
            min_support: 1,
            prune: true,
        };
        let (fs, _) = miner.select(&s, &[0, 1], 2, 100).unwrap();
        assert_eq!(fs.subwords.len(), 8);
    }

    #[test]
    fn single_class_rejected() {
        let s = seqs(&[&["aab"], &["bba"]]);
        assert!(select_supervised(&s, &[0, 0], 2, 2).is_err());
        assert!(select_supervised(&s, &[0, 1], 2, 0).is_err());
    }

    #[test]
    fn pruning_visits_fewer_nodes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let mut s = Vec::new();
        let mut labels = Vec::new();
        for i in 0..20 {
            let mut words: Vec<Vec<u8>> = (0..3)
                .map(|_| (0..8).map(|_| b'a' + rng.gen_range(0..4u8)).collect())
                .collect();
            if i % 2 == 0 {
                words[1][2..6].copy_from_slice(b"dddd");
            }
            s.push(SymbolicSequence::from_words(&words).unwrap());
            labels.push(i % 2);
        }
        let pruned = SupervisedMiner::default()
            .select(&s, &labels, 2, 3)
            .unwrap();
        let full = SupervisedMiner {
            prune: false,
            ..Default::default()
        }
        .select(&s, &labels, 2, 3)
        .unwrap();
        assert_eq!(pruned.0.scores, full.0.scores);
        assert!(pruned.1.pruned > 0);
        assert!(
            pruned.1.visited < full.1.visited,
            "{:?} vs {:?}",
            pruned.1,
            full.1
        );
    }
}
