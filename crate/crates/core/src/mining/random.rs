//! Unsupervised and hybrid feature selection.

use std::collections::HashSet;

use rand::seq::index;
use rand::Rng;

use super::chi2;
use super::index::SubwordIndex;
use super::supervised::SupervisedMiner;
use super::{check_labels, FeatureSet, Strategy};
use crate::error::{Error, Result};
use crate::symbolic::SymbolicSequence;

/// Attempts allowed per requested feature before the sampler gives up.
pub const ATTEMPTS_PER_FEATURE: usize = 50;

/// Samples distinct subwords by drawing a sequence, a word, a start position
/// and a length uniformly at random. May return fewer than `budget`
/// subwords when the vocabulary is small.
pub fn select_random<R: Rng + ?Sized>(
    sequences: &[SymbolicSequence],
    budget: usize,
    max_subword_len: usize,
    rng: &mut R,
) -> Result<FeatureSet> {
    if budget == 0 {
        return Err(Error::invalid("feature budget must be at least 1"));
    }
    if sequences.is_empty() {
        return Err(Error::invalid("no sequences to sample from"));
    }
    if max_subword_len == 0 {
        return Err(Error::invalid("maximum subword length must be at least 1"));
    }
    let mut seen: HashSet<&[u8]> = HashSet::new();
    let mut subwords = Vec::new();
    for _ in 0..budget * ATTEMPTS_PER_FEATURE {
        if subwords.len() == budget {
            break;
        }
        let seq = &sequences[rng.gen_range(0..sequences.len())];
        if seq.num_words() == 0 {
            continue;
        }
        let word = seq.word(rng.gen_range(0..seq.num_words()));
        let start = rng.gen_range(0..word.len());
        let len = rng.gen_range(1..=max_subword_len.min(word.len() - start));
        let sub = &word[start..start + len];
        if seen.insert(sub) {
            subwords.push(String::from_utf8(sub.to_vec()).expect("ascii"));
        }
    }
    Ok(FeatureSet {
        strategy: Strategy::R,
        subwords,
        scores: None,
    })
}

/// Random candidates filtered by Chi-square: draws a pool of
/// `pool_multiplier * budget` random subwords and keeps the `budget` best,
/// ties broken lexicographically.
pub fn select_rs<R: Rng + ?Sized>(
    sequences: &[SymbolicSequence],
    labels: &[usize],
    num_classes: usize,
    budget: usize,
    pool_multiplier: usize,
    max_subword_len: usize,
    rng: &mut R,
) -> Result<FeatureSet> {
    let class_sizes = check_labels(sequences, labels, num_classes)?;
    let pool = select_random(
        sequences,
        budget * pool_multiplier.max(1),
        max_subword_len,
        rng,
    )?;
    let index = SubwordIndex::new(&pool.subwords)?;
    let counts = index.document_counts(sequences, labels, num_classes);
    let mut scored: Vec<(f64, String)> = pool
        .subwords
        .into_iter()
        .zip(&counts)
        .map(|(s, c)| (chi2::score_unchecked(c, &class_sizes), s))
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    scored.truncate(budget);
    Ok(FeatureSet {
        strategy: Strategy::RS,
        scores: Some(scored.iter().map(|(v, _)| *v).collect()),
        subwords: scored.into_iter().map(|(_, s)| s).collect(),
    })
}

/// Chi-square candidates thinned by random sampling: mines the best
/// `pool_multiplier * budget` subwords, then keeps a uniform sample of
/// `budget` of them, in rank order.
pub fn select_sr<R: Rng + ?Sized>(
    sequences: &[SymbolicSequence],
    labels: &[usize],
    num_classes: usize,
    budget: usize,
    pool_multiplier: usize,
    miner: &SupervisedMiner,
    rng: &mut R,
) -> Result<FeatureSet> {
    if budget == 0 {
        return Err(Error::invalid("feature budget must be at least 1"));
    }
    let (pool, _) = miner.select(
        sequences,
        labels,
        num_classes,
        budget * pool_multiplier.max(1),
    )?;
    let scores = pool.scores.unwrap_or_default();
    if pool.subwords.len() <= budget {
        return Ok(FeatureSet {
            strategy: Strategy::SR,
            subwords: pool.subwords,
            scores: Some(scores),
        });
    }
    let mut picked = index::sample(rng, pool.subwords.len(), budget).into_vec();
    picked.sort_unstable();
    Ok(FeatureSet {
        strategy: Strategy::SR,
        subwords: picked.iter().map(|&i| pool.subwords[i].clone()).collect(),
        scores: Some(picked.iter().map(|&i| scores[i]).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample_data() -> (Vec<SymbolicSequence>, Vec<usize>) {
        let words = [
            ["abcab", "bcaab"],
            ["aacab", "bbcaa"],
            ["ccbcc", "cbccb"],
            ["cbcbc", "ccccb"],
        ];
        let seqs = words
            .iter()
            .map(|w| SymbolicSequence::from_words(w).unwrap())
            .collect();
        (seqs, vec![0, 0, 1, 1])
    }

    #[test]
    fn random_is_deterministic_and_grounded() {
        let (seqs, _) = sample_data();
        let a = select_random(&seqs, 12, 5, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = select_random(&seqs, 12, 5, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.subwords.len(), 12);
        let distinct: HashSet<_> = a.subwords.iter().collect();
        assert_eq!(distinct.len(), a.subwords.len());
        for s in &a.subwords {
            assert!(seqs.iter().any(|q| q.contains(s.as_bytes())), "{s}");
        }
    }

    #[test]
    fn random_respects_small_vocabulary() {
        let seqs = vec![SymbolicSequence::from_words(&["aaaa", "aaaa"]).unwrap()];
        let fs = select_random(&seqs, 100, 4, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(fs.subwords.len(), 4);
        let fs = select_random(&seqs, 100, 2, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(fs.subwords.len(), 2);
    }

    #[test]
    fn rs_keeps_the_perfect_separator() {
        let (seqs, labels) = sample_data();
        // Pool covers the whole vocabulary, so the best subword must survive.
        let fs = select_rs(
            &seqs,
            &labels,
            2,
            3,
            40,
            5,
            &mut ChaCha8Rng::seed_from_u64(3),
        )
        .unwrap();
        let scores = fs.scores.unwrap();
        assert_eq!(scores[0], 2.0);
        assert!(scores.windows(2).all(|p| p[0] >= p[1]));
        assert_eq!(fs.subwords[0], "a");
    }

    #[test]
    fn rs_returns_whole_small_pool_sorted() {
        let seqs = vec![
            SymbolicSequence::from_words(&["ab"]).unwrap(),
            SymbolicSequence::from_words(&["ba"]).unwrap(),
        ];
        let fs = select_rs(
            &seqs,
            &[0, 1],
            2,
            10,
            4,
            2,
            &mut ChaCha8Rng::seed_from_u64(5),
        )
        .unwrap();
        // Vocabulary: a, b, ab, ba. Ties (all score 0 or 1) resolve lexicographically.
        assert_eq!(fs.subwords, vec!["ab", "ba", "a", "b"]);
    }

    #[test]
    fn sr_is_subset_of_supervised_pool() {
        let (seqs, labels) = sample_data();
        let miner = SupervisedMiner::default();
        let (pool, _) = miner.select(&seqs, &labels, 2, 8).unwrap();
        let a = select_sr(
            &seqs,
            &labels,
            2,
            2,
            4,
            &miner,
            &mut ChaCha8Rng::seed_from_u64(11),
        )
        .unwrap();
        let b = select_sr(
            &seqs,
            &labels,
            2,
            2,
            4,
            &miner,
            &mut ChaCha8Rng::seed_from_u64(11),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.subwords.len(), 2);
        assert!(a.subwords.iter().all(|s| pool.subwords.contains(s)));
        let all = select_sr(
            &seqs,
            &labels,
            2,
            50,
            4,
            &miner,
            &mut ChaCha8Rng::seed_from_u64(11),
        )
        .unwrap();
        let (full, _) = miner.select(&seqs, &labels, 2, 200).unwrap();
        assert_eq!(all.subwords, full.subwords);
    }
}
