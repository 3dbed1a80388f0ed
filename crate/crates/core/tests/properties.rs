use proptest::collection::vec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symseq::mining::{
    chi2_bound, chi2_score, select_features, MiningOptions, SubwordIndex, SubwordTrie,
};
use symseq::model::{featurize, train_classifier, TrainOptions};
use symseq::symbolic::{
    dft_truncated, fit_transform_dataset, gaussian_breakpoints, mcb_fit, paa, sample_configs,
    sax_word, sfa_word, transform_dataset, transform_series, znormalize, ALPHABET_SIZES,
    MIN_WINDOW, WORD_LENGTHS,
};
use symseq::{
    fit, FitConfig, Model, ReprConfig, Strategy as Selection, SymbolicSequence, TimeSeriesDataset,
    Transform,
};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

/// Observed counts bounded by class sizes, with at least one non-empty class.
fn counts() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    vec(0usize..12, 2..6)
        .prop_filter("some class non-empty", |s| s.iter().any(|&n| n > 0))
        .prop_flat_map(|sizes| {
            let observed: Vec<_> = sizes.iter().map(|&n| 0..=n).collect();
            (observed, Just(sizes))
        })
}

fn word(len: usize, alphabet: u8) -> impl Strategy<Value = Vec<u8>> {
    vec(b'a'..b'a' + alphabet, len)
}

/// Labeled symbolic corpora: 4 to 10 sequences, each of 1 to 4 words.
fn corpus() -> impl Strategy<Value = (Vec<SymbolicSequence>, Vec<usize>)> {
    (2usize..6, 4usize..11).prop_flat_map(|(word_len, n)| {
        let seqs = vec(vec(word(word_len, 3), 1..5), n).prop_map(|s| {
            s.iter()
                .map(|w| SymbolicSequence::from_words(w).unwrap())
                .collect::<Vec<_>>()
        });
        let labels = vec(0usize..2, n).prop_map(|mut l| {
            l[0] = 0;
            l[1] = 1;
            l
        });
        (seqs, labels)
    })
}

fn random_walk(len: usize, seed: u64) -> Vec<f64> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = 0.0;
    (0..len)
        .map(|_| {
            x += rng.gen_range(-1.0..1.0);
            x
        })
        .collect()
}

fn walk_dataset(n: usize, len: usize, seed: u64) -> TimeSeriesDataset {
    let series = (0..n)
        .map(|i| random_walk(len, seed * 1000 + i as u64))
        .collect();
    let labels = (0..n).map(|i| ["x", "y"][i % 2].to_string()).collect();
    TimeSeriesDataset::new(series, Some(labels)).unwrap()
}

/// Interleaved (re, im) DFT reals `skip..skip + count`, straight from the definition.
fn naive_dft(x: &[f64], skip: usize, count: usize) -> Vec<f64> {
    let l = x.len() as f64;
    (skip..skip + count)
        .map(|i| {
            let k = (i / 2) as f64;
            let parts = x.iter().enumerate().map(|(t, &v)| {
                let a = -2.0 * std::f64::consts::PI * k * t as f64 / l;
                if i % 2 == 0 {
                    v * a.cos()
                } else {
                    v * a.sin()
                }
            });
            parts.sum()
        })
        .collect()
}

fn sorted_quantile_edges(mut values: Vec<f64>, alphabet: usize) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    (1..alphabet)
        .map(|j| {
            let m = ((j as f64 * n as f64 / alphabet as f64).round() as usize).clamp(1, n - 1);
            0.5 * (values[m - 1] + values[m])
        })
        .collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn chi2_is_permutation_invariant((observed, sizes) in counts(), rot in 0usize..6) {
        let r = rot % sizes.len();
        let (mut o2, mut s2) = (observed.clone(), sizes.clone());
        o2.rotate_left(r);
        s2.rotate_left(r);
        let a = chi2_score(&observed, &sizes).unwrap();
        let b = chi2_score(&o2, &s2).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a.max(1.0));
        prop_assert!(a >= 0.0);
    }

    #[test]
    fn bound_dominates_every_sub_count((observed, sizes) in counts(), fractions in vec(0.0f64..=1.0, 6)) {
        let sub: Vec<usize> = observed.iter().zip(&fractions).map(|(&o, &f)| (o as f64 * f).floor() as usize).collect();
        let bound = chi2_bound(&observed, &sizes).unwrap();
        let score = chi2_score(&sub, &sizes).unwrap();
        prop_assert!(score <= bound * (1.0 + 1e-12) + 1e-12, "{score} > {bound}");
    }

    #[test]
    fn trie_counts_are_anti_monotone((seqs, labels) in corpus()) {
        let mut trie = SubwordTrie::new(&seqs, &labels, 2);
        let mut stack = vec![0usize];
        while let Some(idx) = stack.pop() {
            for child in trie.expand(idx) {
                let (p, c) = (trie.node(idx), trie.node(child));
                if idx != 0 {
                    prop_assert!(c.observed.iter().zip(&p.observed).all(|(a, b)| a <= b));
                }
                // The node's counts match a direct scan.
                for class in 0..2 {
                    let direct = seqs.iter().zip(&labels).filter(|(s, &l)| l == class && s.contains(&c.subword)).count();
                    prop_assert_eq!(c.observed[class], direct);
                }
                stack.push(child);
            }
        }
    }

    #[test]
    fn feature_column_sums_are_document_frequencies(
        (seqs, labels) in corpus(),
        strategy in prop_oneof![Just(Selection::R), Just(Selection::S), Just(Selection::RS), Just(Selection::SR)],
        seed in any::<u64>(),
    ) {
        let opts = MiningOptions { budget: 6, min_support: 1, ..MiningOptions::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fs = select_features(strategy, &seqs, &labels, 2, &opts, &mut rng).unwrap();
        prop_assert!(fs.len() <= 6);
        let x = featurize(std::slice::from_ref(&seqs), std::slice::from_ref(&fs)).unwrap();
        prop_assert_eq!(x.cols(), fs.len());
        let sums = x.column_sums();
        for (j, sub) in fs.subwords.iter().enumerate() {
            let df = seqs.iter().filter(|s| s.contains(sub.as_bytes())).count();
            prop_assert_eq!(sums[j], df);
        }
        let index = SubwordIndex::new(&fs.subwords).unwrap();
        let per_class = index.document_counts(&seqs, &labels, 2);
        for (j, counts) in per_class.iter().enumerate() {
            prop_assert_eq!(counts.iter().sum::<usize>(), sums[j]);
        }
        if let Some(scores) = &fs.scores {
            let sizes = [labels.iter().filter(|&&l| l == 0).count(), labels.iter().filter(|&&l| l == 1).count()];
            for (counts, &s) in per_class.iter().zip(scores) {
                prop_assert!((chi2_score(counts, &sizes).unwrap() - s).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn more_features_only_add_columns((seqs, labels) in corpus(), seed in any::<u64>()) {
        let opts = MiningOptions { budget: 8, min_support: 1, ..MiningOptions::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = select_features(Selection::S, &seqs, &labels, 2, &opts, &mut rng).unwrap();
        let mut prefix = full.clone();
        prefix.subwords.truncate(full.len() / 2);
        prefix.scores = None;
        let a = featurize(std::slice::from_ref(&seqs), &[prefix.clone()]).unwrap();
        let b = featurize(std::slice::from_ref(&seqs), &[full]).unwrap();
        for i in 0..seqs.len() {
            for j in 0..prefix.len() {
                prop_assert_eq!(a.get(i, j), b.get(i, j));
            }
        }
    }

    #[test]
    fn znormalize_has_zero_mean_unit_std(x in vec(-1e3f64..1e3, 2..64)) {
        let z = znormalize(&x);
        let n = x.len() as f64;
        let mean = x.iter().sum::<f64>() / n;
        let sd = (x.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n).sqrt();
        if sd > 1e-6 {
            let zm = z.iter().sum::<f64>() / n;
            let zs = (z.iter().map(|v| (v - zm).powi(2)).sum::<f64>() / n).sqrt();
            prop_assert!(zm.abs() < 1e-9);
            prop_assert!((zs - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn paa_preserves_the_mean(x in vec(-100f64..100.0, 1..80), w in 1usize..20) {
        prop_assume!(w <= x.len());
        let p = paa(&x, w).unwrap();
        prop_assert_eq!(p.len(), w);
        let a = x.iter().sum::<f64>() / x.len() as f64;
        let b = p.iter().sum::<f64>() / w as f64;
        prop_assert!((a - b).abs() < 1e-9 * a.abs().max(1.0));
    }

    #[test]
    fn breakpoints_are_increasing(alphabet in 2usize..27) {
        let b = gaussian_breakpoints(alphabet);
        prop_assert_eq!(b.len(), alphabet - 1);
        prop_assert!(b.windows(2).all(|p| p[0] < p[1]));
        prop_assert!(b.iter().zip(b.iter().rev()).all(|(l, r)| (l + r).abs() < 1e-9));
    }

    #[test]
    fn sliding_sax_matches_single_windows(
        seed in any::<u64>(), len in 20usize..90, window in 8usize..20, w in 2usize..8, alphabet in 2usize..7,
        reduce in any::<bool>(),
    ) {
        let series = random_walk(len, seed);
        let cfg = ReprConfig::new(Transform::Sax, window, w, alphabet).with_numerosity_reduction(reduce);
        let seq = transform_series(&series, &cfg).unwrap();
        let mut expected: Vec<String> = Vec::new();
        for s in series.windows(window) {
            let word = sax_word(s, w, alphabet).unwrap();
            if !(reduce && expected.last() == Some(&word)) {
                expected.push(word);
            }
        }
        let got: Vec<String> = seq.words().map(|x| String::from_utf8(x.to_vec()).unwrap()).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn sliding_sfa_matches_single_windows(
        seed in any::<u64>(), window in 8usize..24, w in 2usize..8, alphabet in 2usize..7, drop_dc in any::<bool>(),
    ) {
        // Long enough to cross several re-anchoring points of the sliding DFT.
        let series = random_walk(600, seed);
        let windows: Vec<Vec<f64>> = series.windows(window).map(<[f64]>::to_vec).collect();
        let first = usize::from(drop_dc);
        let values: Vec<Vec<f64>> = windows.iter().map(|s| naive_dft(s, 2 * first, w)).collect();
        if !drop_dc && w <= window {
            prop_assert!(values[0].iter().zip(dft_truncated(&windows[0], w).unwrap()).all(|(a, b)| (a - b).abs() < 1e-9));
        }
        let bins = mcb_fit(&values, alphabet).unwrap();
        let mut cfg = ReprConfig::new(Transform::Sfa, window, w, alphabet).with_numerosity_reduction(false).with_drop_dc(drop_dc);
        cfg.bins = Some(bins.clone());
        let seq = transform_series(&series, &cfg).unwrap();
        prop_assert_eq!(seq.num_words(), windows.len());
        let mut mismatches = 0;
        for (i, s) in windows.iter().enumerate() {
            if seq.word(i) != sfa_word(s, &bins, drop_dc).unwrap().as_bytes() {
                mismatches += 1;
            }
        }
        // Rounding may flip a value lying exactly on an edge; nothing more.
        prop_assert!(mismatches <= 1, "{mismatches} mismatching words");
    }

    #[test]
    fn fit_time_sequences_match_reapplication(seed in any::<u64>(), window in 8usize..30, w in 2usize..8, alphabet in 3usize..7) {
        let data = walk_dataset(6, 64, seed % 1000);
        for transform in [Transform::Sax, Transform::Sfa] {
            let cfg = ReprConfig::new(transform, window, w, alphabet);
            let (fitted, seqs) = fit_transform_dataset(&data, &cfg).unwrap();
            prop_assert_eq!(fitted.is_fitted(), true);
            let again = transform_dataset(&data, &fitted).unwrap();
            prop_assert_eq!(seqs, again);
        }
    }

    #[test]
    fn mcb_edges_match_sorting_oracle(values in vec(-50f64..50.0, 2..300), alphabet in 2usize..9) {
        let windows: Vec<Vec<f64>> = values.iter().map(|&v| vec![v, -v]).collect();
        let edges = mcb_fit(&windows, alphabet).unwrap();
        let neg: Vec<f64> = values.iter().map(|v| -v).collect();
        prop_assert_eq!(&edges[0], &sorted_quantile_edges(values, alphabet));
        prop_assert_eq!(&edges[1], &sorted_quantile_edges(neg, alphabet));
        prop_assert!(edges.iter().all(|e| e.windows(2).all(|p| p[0] <= p[1])));
    }

    #[test]
    fn numerosity_reduction_only_drops_repeats(seed in any::<u64>(), alphabet in 2usize..5) {
        let series = random_walk(120, seed);
        let cfg = ReprConfig::new(Transform::Sax, 16, 4, alphabet);
        let reduced = transform_series(&series, &cfg).unwrap();
        let full = transform_series(&series, &cfg.clone().with_numerosity_reduction(false)).unwrap();
        prop_assert_eq!(full.num_words(), 105);
        prop_assert!(reduced.num_words() <= full.num_words());
        prop_assert!(reduced.words().zip(reduced.words().skip(1)).all(|(a, b)| a != b));
        let mut dedup: Vec<&[u8]> = full.words().collect();
        dedup.dedup();
        prop_assert_eq!(reduced.words().collect::<Vec<_>>(), dedup);
    }

    #[test]
    fn sampled_configs_stay_in_range(len in 1usize..3000, k in 1usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let configs = sample_configs(len, k, Transform::Sfa, &mut rng).unwrap();
        prop_assert_eq!(configs.len(), ((k as f64 * (len as f64).log2()).ceil() as usize).max(1));
        for c in &configs {
            prop_assert!(c.window >= MIN_WINDOW.min(len) && c.window <= len);
            prop_assert!(c.word_len <= c.window);
            prop_assert!(WORD_LENGTHS.contains(&c.word_len) || c.word_len == c.window);
            prop_assert!(ALPHABET_SIZES.contains(&c.alphabet));
        }
        prop_assert!(configs.windows(2).all(|p| p[0].window <= p[1].window));
    }

    #[test]
    fn ts_format_round_trips(
        series in vec(vec(-1e6f64..1e6, 5), 1..8),
        labeled in any::<bool>(),
    ) {
        let labels = labeled.then(|| (0..series.len()).map(|i| format!("c{}", i % 3)).collect());
        let data = TimeSeriesDataset::new(series.clone(), labels).unwrap();
        let back = TimeSeriesDataset::parse_ts(&data.to_ts_string()).unwrap();
        prop_assert_eq!(back.series(), &series[..]);
        prop_assert_eq!(back.labels(), data.labels());
        prop_assert_eq!(back.classes(), data.classes());
    }

    #[test]
    fn training_objective_never_increases(rows in vec(vec(any::<bool>(), 6), 6..20), seed in any::<u64>()) {
        let active: Vec<Vec<u32>> = rows.iter().map(|r| (0..6u32).filter(|&j| r[j as usize]).collect()).collect();
        let x = symseq::FeatureMatrix::from_rows(6, &active).unwrap();
        let mut labels: Vec<usize> = (0..rows.len()).map(|i| (seed as usize >> (i % 60)) % 3).collect();
        labels[..3].copy_from_slice(&[0, 1, 2]);
        let (_, status) = train_classifier(&x, &labels, 3, &TrainOptions::default()).unwrap();
        prop_assert!(status.objective_trace.windows(2).all(|p| p[1] <= p[0] + 1e-12 * p[0].abs()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    #[test]
    fn saved_models_predict_identically(seed in any::<u64>(), both in any::<bool>()) {
        let train = walk_dataset(10, 60, seed % 10_000);
        let test = walk_dataset(5, 60, seed % 10_000 + 1);
        let cfg = FitConfig {
            transform: if both { symseq::TransformChoice::Both } else { symseq::TransformChoice::Sfa },
            k: 1,
            features_per_rep: 30,
            seed,
            ..FitConfig::default()
        };
        let (model, _) = fit(&train, &cfg).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        model.save(&path).unwrap();
        let loaded = Model::load(&path).unwrap();
        let a = model.predict(&test).unwrap();
        let b = loaded.predict(&test).unwrap();
        prop_assert_eq!(a.labels, b.labels);
        let bits = |p: &Vec<Vec<f64>>| p.iter().flatten().map(|v| v.to_bits()).collect::<Vec<_>>();
        prop_assert_eq!(bits(&a.probabilities), bits(&b.probabilities));
    }
}
