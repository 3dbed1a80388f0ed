//! Prefix tree over all subwords of a collection of symbolic sequences.
//!
//! Node `v` stands for the subword spelled by the edges from the root. It
//! keeps an inverted index of where that subword ends: `(sequence, word,
//! position)` triples in increasing order. Children are built by extending
//! every location by one symbol inside the same word, so a subword never
//! crosses a word boundary.

use super::chi2;
use crate::symbolic::SymbolicSequence;

/// End of one occurrence of a subword.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub seq: u32,
    pub word: u32,
    /// Position of the last symbol inside the word.
    pub end: u32,
}

#[derive(Debug, Clone)]
pub struct TrieNode {
    pub parent: Option<usize>,
    pub subword: Vec<u8>,
    /// Number of distinct sequences per class containing the subword.
    pub observed: Vec<usize>,
    pub children: Vec<usize>,
    locations: Vec<Location>,
    expanded: bool,
}

impl TrieNode {
    pub fn total(&self) -> usize {
        self.observed.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.subword.len()
    }

    pub fn is_expanded(&self) -> bool {
        self.expanded
    }
}

/// Arena-allocated trie; node 0 is the root (the empty subword).
pub struct SubwordTrie<'a> {
    sequences: &'a [SymbolicSequence],
    labels: &'a [usize],
    class_sizes: Vec<usize>,
    nodes: Vec<TrieNode>,
}

impl<'a> SubwordTrie<'a> {
    /// Creates the trie with only the root. `labels[i]` is the class of
    /// `sequences[i]`, in `0..num_classes`.
    pub fn new(sequences: &'a [SymbolicSequence], labels: &'a [usize], num_classes: usize) -> Self {
        let mut class_sizes = vec![0; num_classes];
        for &c in labels {
            class_sizes[c] += 1;
        }
        let root = TrieNode {
            parent: None,
            subword: Vec::new(),
            observed: class_sizes.clone(),
            children: Vec::new(),
            locations: Vec::new(),
            expanded: false,
        };
        SubwordTrie {
            sequences,
            labels,
            class_sizes,
            nodes: vec![root],
        }
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn node(&self, idx: usize) -> &TrieNode {
        &self.nodes[idx]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn score(&self, idx: usize) -> f64 {
        chi2::score_unchecked(&self.nodes[idx].observed, &self.class_sizes)
    }

    pub fn bound(&self, idx: usize) -> f64 {
        chi2::bound_unchecked(&self.nodes[idx].observed, &self.class_sizes)
    }

    /// Creates the children of `idx` and returns their indices in symbol
    /// order. The node's inverted index is released afterwards.
    pub fn expand(&mut self, idx: usize) -> Vec<usize> {
        if self.nodes[idx].expanded {
            return self.nodes[idx].children.clone();
        }
        let mut buckets: Vec<Vec<Location>> = Vec::new();
        let mut push = |sym: u8, loc: Location| {
            let b = (sym - b'a') as usize;
            if buckets.len() <= b {
                buckets.resize_with(b + 1, Vec::new);
            }
            buckets[b].push(loc);
        };
        if idx == 0 {
            for (s, seq) in self.sequences.iter().enumerate() {
                for (w, word) in seq.words().enumerate() {
                    for (p, &sym) in word.iter().enumerate() {
                        push(
                            sym,
                            Location {
                                seq: s as u32,
                                word: w as u32,
                                end: p as u32,
                            },
                        );
                    }
                }
            }
        } else {
            let locations = std::mem::take(&mut self.nodes[idx].locations);
            for loc in locations {
                let seq = &self.sequences[loc.seq as usize];
                let next = loc.end as usize + 1;
                if next < seq.word_len() {
                    let sym = seq.word(loc.word as usize)[next];
                    push(
                        sym,
                        Location {
                            end: next as u32,
                            ..loc
                        },
                    );
                }
            }
        }

        let mut children = Vec::new();
        for (b, locations) in buckets.into_iter().enumerate() {
            if locations.is_empty() {
                continue;
            }
            let mut observed = vec![0; self.class_sizes.len()];
            let mut last = u32::MAX;
            for loc in &locations {
                if loc.seq != last {
                    observed[self.labels[loc.seq as usize]] += 1;
                    last = loc.seq;
                }
            }
            let mut subword = self.nodes[idx].subword.clone();
            subword.push(b'a' + b as u8);
            children.push(self.nodes.len());
            self.nodes.push(TrieNode {
                parent: Some(idx),
                subword,
                observed,
                children: Vec::new(),
                locations,
                expanded: false,
            });
        }
        let node = &mut self.nodes[idx];
        node.children = children.clone();
        node.expanded = true;
        children
    }

    /// Expands every node; the result enumerates every distinct subword.
    pub fn expand_all(&mut self) {
        let mut stack = vec![0];
        while let Some(idx) = stack.pop() {
            stack.extend(self.expand(idx));
        }
    }

    /// Iterates over the strict ancestors of `idx`, excluding the root.
    pub fn ancestors(&self, idx: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(self.nodes[idx].parent, move |&p| self.nodes[p].parent)
            .filter(|&p| p != 0)
    }
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
    fn root_children_count_documents() {
        let s = seqs(&[&["aab"], &["bba"], &["abb", "bbb"]]);
        let labels = [0, 1, 1];
        let mut trie = SubwordTrie::new(&s, &labels, 2);
        let kids = trie.expand(0);
        let a = trie.node(kids[0]);
        assert_eq!(a.subword, b"a");
        assert_eq!(a.observed, vec![1, 2]);
        let b = trie.node(kids[1]);
        assert_eq!(b.observed, vec![1, 2]);
    }

    #[test]
    fn full_expansion_enumerates_distinct_subwords() {
        let s = seqs(&[&["aab"], &["bba"]]);
        let labels = [0, 1];
        let mut trie = SubwordTrie::new(&s, &labels, 2);
        trie.expand_all();
        let mut words: Vec<String> = (1..trie.len())
            .map(|i| String::from_utf8(trie.node(i).subword.clone()).unwrap())
            .collect();
        words.sort();
        let expected = ["a", "aa", "aab", "ab", "b", "ba", "bb", "bba"];
        assert_eq!(words, expected);
        let aa = (1..trie.len())
            .find(|&i| trie.node(i).subword == b"aa")
            .unwrap();
        assert_eq!(trie.node(aa).observed, vec![1, 0]);
        assert_eq!(trie.score(aa), 1.0);
    }

    #[test]
    fn no_cross_word_subwords() {
        let s = seqs(&[&["ab", "cd"]]);
        let labels = [0];
        let mut trie = SubwordTrie::new(&s, &labels, 1);
        trie.expand_all();
        assert!((1..trie.len()).all(|i| trie.node(i).subword != b"bc"));
        assert_eq!(trie.len() - 1, 6);
    }

    #[test]
    fn children_never_exceed_parent_counts() {
        let s = seqs(&[
            &["abcab", "bcabc"],
            &["aaaab"],
            &["cbacb", "ccccc"],
            &["abcab"],
        ]);
        let labels = [0, 1, 1, 0];
        let mut trie = SubwordTrie::new(&s, &labels, 2);
        trie.expand_all();
        for i in 1..trie.len() {
            let node = trie.node(i);
            let parent = trie.node(node.parent.unwrap());
            assert!(node
                .observed
                .iter()
                .zip(&parent.observed)
                .all(|(c, p)| c <= p));
            assert!(parent.subword == node.subword[..node.subword.len() - 1]);
        }
    }
}
