//! Enumeration of factorization sets in finitely presented monoids.
//!
//! A word's factorization class is its congruence class under the defining
//! relations: every word reachable by repeatedly replacing one side of a
//! relation with the other, at any position, in either direction.  The
//! engine computes a breadth-first closure of that rewriting, capped both by
//! word length and by the number of words admitted, and reports honestly
//! whether the result is the whole class (`complete`) or a truncation.
//!
//! Nothing here knows the closed forms of [`crate::bn`]; agreement between
//! the two is checked, not assumed.

pub mod distance;
pub mod presentation;

use std::collections::BTreeSet;

use thiserror::Error;

pub use distance::{
    distance_axiom_probe, levenshtein, AxiomViolation, Distance, DistanceAxiom, Factorization,
    FnDistance, Levenshtein, ProbeConfig, ProbeReport,
};
pub use presentation::{Presentation, PresentationError, Word, WordError};

use crate::lengthsets::{LengthSet, LengthSetError};

/// Hard limit on class size for the pairwise stage of catenary degrees.
pub const PAIRWISE_LIMIT: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("seed word has length {len}, beyond the length cap {cap}")]
    SeedExceedsCap { len: usize, cap: usize },
    #[error("word uses letters outside this presentation's alphabet")]
    ForeignWord,
    #[error(
        "class holds {size} words, beyond the pairwise limit {limit}; tighten the caps"
    )]
    ClassTooLarge { size: usize, limit: usize },
    #[error("class mixes empty and non-empty factorizations: {source}")]
    UnitAnomaly { source: LengthSetError },
}

/// Enumeration caps: maximal word length kept, and maximal number of words
/// admitted to the closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_len: usize,
    pub max_iter: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_len: 64,
            max_iter: 1_000_000,
        }
    }
}

/// Closure of one word under the defining relations.
#[derive(Debug, Clone)]
pub struct FactorizationSet {
    words: Vec<Word>,
    complete: bool,
    overflow: u64,
    caps: Caps,
}

impl FactorizationSet {
    /// All words found, sorted; pairwise congruent by construction.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether the closure is the entire congruence class.
    pub fn complete(&self) -> bool {
        self.complete
    }

    /// Distinct words that crossed the length cap and were not expanded.
    pub fn overflow(&self) -> u64 {
        self.overflow
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.binary_search(word).is_ok()
    }

    pub fn observed_lengths(&self) -> BTreeSet<u64> {
        self.words.iter().map(|w| w.len() as u64).collect()
    }

    pub fn max_word_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }
}

fn oriented_rules(p: &Presentation) -> Vec<(&Word, &Word)> {
    let mut rules = Vec::new();
    for (lhs, rhs) in p.relations() {
        rules.push((lhs, rhs));
        if lhs != rhs {
            rules.push((rhs, lhs));
        }
    }
    rules
}

/// Breadth-first congruence closure of `seed` under the relations of `p`.
///
/// Levels are processed in lexicographic order, so truncated results are
/// reproducible; words longer than `caps.max_len` are counted as overflow
/// but never expanded, and at most `caps.max_iter` words are admitted.
pub fn factorizations(
    seed: &Word,
    p: &Presentation,
    caps: Caps,
) -> Result<FactorizationSet, EngineError> {
    if !p.owns(seed) {
        return Err(EngineError::ForeignWord);
    }
    if seed.len() > caps.max_len {
        return Err(EngineError::SeedExceedsCap {
            len: seed.len(),
            cap: caps.max_len,
        });
    }
    let rules = oriented_rules(p);
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    visited.insert(seed.clone());
    let mut frontier = vec![seed.clone()];
    let mut admitted = 1usize;
    let mut overflow: BTreeSet<Word> = BTreeSet::new();
    let mut exhausted = caps.max_iter < 1;

    while !frontier.is_empty() && !exhausted {
        let mut next: BTreeSet<Word> = BTreeSet::new();
        'level: for word in &frontier {
            for (pattern, replacement) in &rules {
                for at in word.occurrences(pattern.letters()) {
                    let neighbor = word.splice(at, pattern.len(), replacement.letters());
                    if neighbor.len() > caps.max_len {
                        overflow.insert(neighbor);
                        continue;
                    }
                    if visited.contains(&neighbor) {
                        continue;
                    }
                    if admitted >= caps.max_iter {
                        exhausted = true;
                        break 'level;
                    }
                    admitted += 1;
                    visited.insert(neighbor.clone());
                    next.insert(neighbor);
                }
            }
        }
        frontier = next.into_iter().collect();
    }

    Ok(FactorizationSet {
        complete: !exhausted && overflow.is_empty(),
        overflow: overflow.len() as u64,
        words: visited.into_iter().collect(),
        caps,
    })
}

/// Observed factorization lengths of `seed`'s class, with completeness.
pub fn length_set_of(
    seed: &Word,
    p: &Presentation,
    caps: Caps,
) -> Result<(LengthSet, bool), EngineError> {
    let class = factorizations(seed, p, caps)?;
    let set = LengthSet::new(class.observed_lengths())
        .map_err(|source| EngineError::UnitAnomaly { source })?;
    Ok((set, class.complete()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatenaryOutcome {
    pub value: u64,
    pub complete: bool,
    pub class_size: usize,
}

/// Bottleneck connectivity threshold of `seed`'s class under `dist`: the
/// smallest `N` such that any two factorizations are linked by a chain with
/// consecutive distances at most `N` — equivalently, the largest edge on a
/// minimum spanning tree of the complete distance graph.
pub fn catenary_of<D: Distance<Word>>(
    seed: &Word,
    p: &Presentation,
    dist: &D,
    caps: Caps,
) -> Result<CatenaryOutcome, EngineError> {
    let class = factorizations(seed, p, caps)?;
    let words = class.words();
    if words.len() > PAIRWISE_LIMIT {
        return Err(EngineError::ClassTooLarge {
            size: words.len(),
            limit: PAIRWISE_LIMIT,
        });
    }
    let value = bottleneck_threshold(words, dist);
    Ok(CatenaryOutcome {
        value,
        complete: class.complete(),
        class_size: words.len(),
    })
}

/// Maximum MST edge over the complete graph on `nodes`; 0 for at most one
/// node.  Prim's algorithm with on-the-fly edge evaluation.
pub fn bottleneck_threshold<F, D: Distance<F>>(nodes: &[F], dist: &D) -> u64 {
    if nodes.len() <= 1 {
        return 0;
    }
    let n = nodes.len();
    let mut in_tree = vec![false; n];
    in_tree[0] = true;
    let mut best: Vec<u64> = (0..n)
        .map(|i| if i == 0 { 0 } else { dist.eval(&nodes[0], &nodes[i]) })
        .collect();
    let mut threshold = 0;
    for _ in 1..n {
        let mut pick = usize::MAX;
        for i in 0..n {
            if !in_tree[i] && (pick == usize::MAX || best[i] < best[pick]) {
                pick = i;
            }
        }
        threshold = threshold.max(best[pick]);
        in_tree[pick] = true;
        for i in 0..n {
            if !in_tree[i] {
                best[i] = best[i].min(dist.eval(&nodes[pick], &nodes[i]));
            }
        }
    }
    threshold
}

/// Largest distance across the defining relation pairs; every complete
/// catenary value of `p` stays at or below this.
pub fn relation_bound<D: Distance<Word>>(p: &Presentation, dist: &D) -> u64 {
    p.relations()
        .iter()
        .map(|(lhs, rhs)| dist.eval(lhs, rhs))
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProbe {
    /// Union of the distance sets of all completely enumerated classes.
    pub distances: BTreeSet<u64>,
    /// Number of distinct complete classes inspected.
    pub classes: u64,
    /// Classes skipped because their enumeration hit a cap.
    pub skipped: u64,
}

/// Sweeps every word of length at most `max_word_len`, enumerating each
/// word's class once, and unions the gaps between consecutive observed
/// lengths over all completely enumerated classes.
pub fn delta_probe(
    p: &Presentation,
    max_word_len: usize,
    caps: Caps,
) -> Result<DeltaProbe, EngineError> {
    let alphabet = p.atom_count() as u32;
    let mut clustered: BTreeSet<Word> = BTreeSet::new();
    let mut probe = DeltaProbe {
        distances: BTreeSet::new(),
        classes: 0,
        skipped: 0,
    };
    for len in 0..=max_word_len {
        let mut letters = vec![0u32; len];
        loop {
            let word = Word::from_indices(letters.clone());
            if !clustered.contains(&word) {
                let class = factorizations(&word, p, caps)?;
                // Congruent seeds reproduce the same (possibly truncated)
                // class, so each member can be skipped from now on.
                clustered.extend(class.words().iter().cloned());
                if class.complete() {
                    probe.classes += 1;
                    let lengths: Vec<u64> =
                        class.observed_lengths().into_iter().collect();
                    probe
                        .distances
                        .extend(lengths.windows(2).map(|pair| pair[1] - pair[0]));
                } else {
                    probe.skipped += 1;
                }
            }
            // Odometer step through all words of this length.
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                letters[pos] += 1;
                if letters[pos] < alphabet {
                    break;
                }
                letters[pos] = 0;
            }
            if letters.iter().all(|&l| l == 0) {
                break;
            }
        }
    }
    Ok(probe)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps(max_len: usize, max_iter: usize) -> Caps {
        Caps { max_len, max_iter }
    }

    fn shown(p: &Presentation, set: &FactorizationSet) -> Vec<String> {
        set.words().iter().map(|w| p.display_word(w)).collect()
    }

    #[test]
    fn closure_of_a_pure_b_power() {
        let p = Presentation::bn(3);
        let seed = p.parse_word("bbbb").unwrap();
        let set = factorizations(&seed, &p, Caps::default()).unwrap();
        assert!(set.complete());
        assert_eq!(set.overflow(), 0);
        assert_eq!(shown(&p, &set), ["bab", "bba", "bbbb"]);
    }

    #[test]
    fn closure_in_a_free_monoid_is_a_singleton() {
        let p = Presentation::parse("atoms: a\n").unwrap();
        let seed = p.parse_word("aa").unwrap();
        let set = factorizations(&seed, &p, Caps::default()).unwrap();
        assert!(set.complete());
        assert_eq!(shown(&p, &set), ["aa"]);
    }

    #[test]
    fn length_growth_without_bound_is_reported_truncated() {
        let p = Presentation::parse("atoms: a b\nrel: aa = baab\n").unwrap();
        let seed = p.parse_word("aa").unwrap();
        let set = factorizations(&seed, &p, caps(8, 100_000)).unwrap();
        assert!(!set.complete());
        assert_eq!(set.overflow(), 1);
        assert_eq!(shown(&p, &set), ["aa", "baab", "bbaabb", "bbbaabbb"]);

        let (lengths, complete) = length_set_of(&seed, &p, caps(12, 100_000)).unwrap();
        assert!(!complete);
        assert_eq!(lengths.values(), &[2, 4, 6, 8, 10, 12]);
    }

    #[test]
    fn length_sets_from_the_closure() {
        let p = Presentation::bn(3);
        let seed = p.parse_word("bbbb").unwrap();
        let (lengths, complete) = length_set_of(&seed, &p, Caps::default()).unwrap();
        assert!(complete);
        assert_eq!(lengths.values(), &[3, 4]);

        let seed = p.parse_word("b").unwrap();
        let (lengths, complete) = length_set_of(&seed, &p, Caps::default()).unwrap();
        assert!(complete);
        assert_eq!(lengths.values(), &[1]);
    }

    #[test]
    fn iteration_budget_truncates_deterministically() {
        let p = Presentation::bn(2);
        let seed = p.parse_word("bbbbbb").unwrap();
        let set = factorizations(&seed, &p, caps(64, 3)).unwrap();
        assert!(!set.complete());
        assert_eq!(set.len(), 3);
        let again = factorizations(&seed, &p, caps(64, 3)).unwrap();
        assert_eq!(set.words(), again.words());
    }

    #[test]
    fn oversized_seeds_are_rejected() {
        let p = Presentation::bn(2);
        let seed = p.parse_word("bbbb").unwrap();
        assert_eq!(
            factorizations(&seed, &p, caps(3, 100)).unwrap_err(),
            EngineError::SeedExceedsCap { len: 4, cap: 3 }
        );
    }

    #[test]
    fn unit_classes_of_collapsing_presentations_are_flagged() {
        let p = Presentation::bn(0);
        let seed = Word::empty();
        assert!(matches!(
            length_set_of(&seed, &p, caps(10, 100_000)),
            Err(EngineError::UnitAnomaly { .. })
        ));
    }

    #[test]
    fn catenary_examples() {
        let p = Presentation::bn(3);
        let seed = p.parse_word("bbbb").unwrap();
        let out = catenary_of(&seed, &p, &Levenshtein, Caps::default()).unwrap();
        assert_eq!((out.value, out.complete, out.class_size), (2, true, 3));

        let seed = p.parse_word("b").unwrap();
        let out = catenary_of(&seed, &p, &Levenshtein, Caps::default()).unwrap();
        assert_eq!((out.value, out.class_size), (0, 1));

        // Frozen from the spanning-tree computation on the four-word class
        // {bbbbbb, bbba, bbab, babb}: the short words interlink at 2, the
        // pure power attaches at 3.
        let p = Presentation::bn(4);
        let seed = p.parse_word("bbbbbb").unwrap();
        let out = catenary_of(&seed, &p, &Levenshtein, Caps::default()).unwrap();
        assert_eq!((out.value, out.complete, out.class_size), (3, true, 4));
    }

    #[test]
    fn relation_bound_examples() {
        assert_eq!(relation_bound(&Presentation::bn(3), &Levenshtein), 2);
        let free = Presentation::parse("atoms: x\n").unwrap();
        assert_eq!(relation_bound(&free, &Levenshtein), 0);
        let adyan = Presentation::parse("atoms: a b\nrel: aa = baab\n").unwrap();
        assert_eq!(relation_bound(&adyan, &Levenshtein), 2);
    }

    #[test]
    fn delta_probe_examples() {
        let probe = delta_probe(&Presentation::bn(3), 8, Caps::default()).unwrap();
        assert_eq!(probe.distances, BTreeSet::from([1]));
        assert_eq!(probe.skipped, 0);

        let probe = delta_probe(&Presentation::bn(2), 8, Caps::default()).unwrap();
        assert!(probe.distances.is_empty());
        assert_eq!(probe.skipped, 0);

        let probe = delta_probe(&Presentation::bn(5), 10, Caps::default()).unwrap();
        assert_eq!(probe.distances, BTreeSet::from([3]));
    }

    #[test]
    fn bottleneck_respects_the_relation_bound_on_complete_classes() {
        for n in 2..=5 {
            let p = Presentation::bn(n);
            let bound = relation_bound(&p, &Levenshtein);
            for m in 1..=7 {
                let seed = p.parse_word(&"b".repeat(m)).unwrap();
                let out = catenary_of(&seed, &p, &Levenshtein, Caps::default()).unwrap();
                assert!(out.complete);
                assert!(out.value <= bound, "n = {n}, m = {m}");
            }
        }
    }
}
