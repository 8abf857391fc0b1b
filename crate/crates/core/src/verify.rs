//! Cross-validation suites pitting closed forms against the enumeration
//! engines.
//!
//! Each suite runs a handful of named checks over sweeps bounded by
//! [`SweepLimits`] and reports pass/fail with either summary statistics or
//! the first counterexample.  The defaults reproduce the full desk-scale
//! runs; shrinking the limits shrinks the sweeps (very small limits may not
//! reach the extremal witnesses some checks look for).

use std::collections::BTreeSet;

use num_rational::Ratio;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bn::{self, BnElement, BnLetter, SystemPoint};
use crate::fp::{
    self, distance_axiom_probe, Caps, Levenshtein, Presentation, ProbeConfig, Word,
};
use crate::lengthsets::{union_containing, LengthSet};
use crate::zerosum::{
    self, CommutativeDistance, FiniteAbelianGroup, ZsFactorization, ZsSequence,
};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, failure: Option<String>, ok_detail: String) -> Check {
    Check {
        name: name.to_string(),
        pass: failure.is_none(),
        detail: failure.unwrap_or(ok_detail),
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Sweep bounds shared by the suites: `n_max` caps the modulus range,
/// `size_max` caps element/word sizes, `seed` feeds the randomized probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepLimits {
    pub n_max: u64,
    pub size_max: u64,
    pub seed: u64,
}

impl Default for SweepLimits {
    fn default() -> Self {
        Self {
            n_max: 5,
            size_max: 12,
            seed: 0,
        }
    }
}

fn canonical_seed(k: u64, m: u64) -> Word {
    let mut letters = vec![0u32; k as usize];
    letters.extend(std::iter::repeat(1u32).take(m as usize));
    Word::from_indices(letters)
}

fn bn_normal_form(n: u64, letters: &[u32]) -> (u64, u64) {
    let word: Vec<BnLetter> = letters
        .iter()
        .map(|&l| if l == 0 { BnLetter::A } else { BnLetter::B })
        .collect();
    let e = BnElement::normalize(n, &word).expect("modulus is valid");
    (e.a_exp(), e.b_exp())
}

/// Calls `f` on every word over `alphabet` letters of length at most
/// `max_len`, shortest first, lexicographic within a length.
fn for_each_word(alphabet: u32, max_len: usize, f: &mut impl FnMut(&[u32])) {
    for len in 0..=max_len {
        let mut letters = vec![0u32; len];
        loop {
            f(&letters);
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
}

/// Closed forms against raw enumeration, step-count schemes against each
/// other, system membership round-trips, and the runaway presentations.
pub fn bn_oracle(limits: &SweepLimits) -> SuiteReport {
    let mut checks = Vec::new();
    let caps = Caps::default();

    {
        let mut compared = 0u64;
        let mut failure = None;
        'grid: for n in 2..=limits.n_max {
            let p = Presentation::bn(n);
            for total in 0..=limits.size_max {
                for k in 0..=total {
                    let m = total - k;
                    let expected = BnElement::new(n, k, m)
                        .expect("modulus is valid")
                        .length_set();
                    match fp::length_set_of(&canonical_seed(k, m), &p, caps) {
                        Ok((got, true)) if got == expected => compared += 1,
                        Ok((got, complete)) => {
                            failure = Some(format!(
                                "n = {n}, a^{k} b^{m}: closed form {expected}, \
                                 enumerated {got} (complete: {complete})"
                            ));
                            break 'grid;
                        }
                        Err(e) => {
                            failure = Some(format!("n = {n}, a^{k} b^{m}: {e}"));
                            break 'grid;
                        }
                    }
                }
            }
        }
        checks.push(check(
            "closed-form-matches-enumeration",
            failure,
            format!("{compared} elements agree exactly"),
        ));
    }

    {
        let mut failure = None;
        'q: for n in 2..=12 {
            for m in 0..=10_000 {
                let closed = bn::ap_steps(m, n);
                let divided = bn::ap_steps_by_division(m, n);
                if closed != divided {
                    failure = Some(format!(
                        "m = {m}, n = {n}: closed {closed}, division {divided}"
                    ));
                    break 'q;
                }
            }
        }
        checks.push(check(
            "step-count-schemes-agree",
            failure,
            "110011 (m, n) pairs agree".to_string(),
        ));
    }

    {
        let mut passed = 0u64;
        let mut failure = None;
        'membership: for n in 2..=limits.n_max {
            for total in 0..=limits.size_max {
                for k in 0..=total {
                    let m = total - k;
                    let set = BnElement::new(n, k, m)
                        .expect("modulus is valid")
                        .length_set();
                    match bn::system_membership(&set, n) {
                        Ok(Some(witness)) if witness.length_set() == set => passed += 1,
                        other => {
                            failure = Some(format!(
                                "n = {n}, a^{k} b^{m}: {set} gave {other:?}"
                            ));
                            break 'membership;
                        }
                    }
                }
            }
        }
        checks.push(check(
            "every-length-set-passes-membership",
            failure,
            format!("{passed} sets re-recognized with matching witnesses"),
        ));
    }

    {
        let mut passed = 0u64;
        let mut failure = None;
        'witness: for n in 3..=limits.n_max {
            let d = n - 2;
            for x in 1..=limits.size_max {
                for q in 0..=(x - 1).min(6) {
                    let target = LengthSet::progression(x, d, q);
                    match bn::system_membership(&target, n) {
                        Ok(Some(w)) if w.length_set() == target => passed += 1,
                        other => {
                            failure = Some(format!(
                                "n = {n}, start {x}, {q} steps: {other:?}"
                            ));
                            break 'witness;
                        }
                    }
                }
            }
        }
        checks.push(check(
            "progression-grid-yields-witnesses",
            failure,
            format!("{passed} progressions realized and recomputed exactly"),
        ));
    }

    {
        let runaways = [
            ("ba=e", Presentation::bn(0), "ab"),
            ("ba=b", Presentation::bn(1), "ab"),
            (
                "aa=baab",
                Presentation::parse("atoms: a b\nrel: aa = baab\n").expect("fixed text"),
                "aa",
            ),
        ];
        let mut failure = None;
        let mut detail = String::new();
        for (label, p, seed_text) in &runaways {
            let seed = p.parse_word(seed_text).expect("fixed seed");
            let mut maxima = Vec::new();
            for step in 0..4u32 {
                let caps = Caps {
                    max_len: 8usize << step,
                    max_iter: 100usize * 8usize.pow(step),
                };
                match fp::factorizations(&seed, p, caps) {
                    Ok(set) if !set.complete() => maxima.push(set.max_word_len()),
                    Ok(_) => {
                        failure = Some(format!(
                            "{label}: enumeration claimed completeness at step {step}"
                        ));
                        break;
                    }
                    Err(e) => {
                        failure = Some(format!("{label}: {e}"));
                        break;
                    }
                }
            }
            if failure.is_some() {
                break;
            }
            if !maxima.windows(2).all(|w| w[0] < w[1]) {
                failure = Some(format!(
                    "{label}: observed max lengths {maxima:?} did not grow strictly"
                ));
                break;
            }
            detail.push_str(&format!("{label}: {maxima:?}; "));
        }
        checks.push(check(
            "runaway-classes-stay-incomplete",
            failure,
            detail.trim_end_matches("; ").to_string(),
        ));
    }

    SuiteReport {
        suite: "bn-oracle".to_string(),
        checks,
    }
}

/// Catenary sweeps against the expected constant, the relation bound, the
/// collapse of gaps at n = 2, and the word-distance axioms.
pub fn catenary(limits: &SweepLimits) -> SuiteReport {
    let mut checks = Vec::new();
    let caps = Caps::default();

    {
        // Exact pairwise work is quadratic, so classes past this size are
        // skipped rather than ground through.  Skipping cannot hide a larger
        // maximum: one rewrite step has edit distance at most the relation
        // bound, the rewrite graph connects every class, and the class of
        // b^n (two words) already attains n - 1.
        const SWEEP_PAIRWISE_LIMIT: usize = 2_000;
        let seed_len = limits.size_max.min(10) as usize;
        let mut max_failure = None;
        let mut bound_failure = None;
        let mut detail = String::new();
        'sweep: for n in 2..=limits.n_max {
            let p = Presentation::bn(n);
            let bound = fp::relation_bound(&p, &Levenshtein);
            let mut seen: BTreeSet<(u64, u64)> = BTreeSet::new();
            let mut observed_max = 0u64;
            let mut classes = 0u64;
            let mut skipped = 0u64;
            let mut sweep_error = None;
            for_each_word(2, seed_len, &mut |letters| {
                if sweep_error.is_some() {
                    return;
                }
                let (k, m) = bn_normal_form(n, letters);
                if !seen.insert((k, m)) {
                    return;
                }
                match fp::factorizations(&canonical_seed(k, m), &p, caps) {
                    Ok(class) if class.complete() => {
                        if class.len() > SWEEP_PAIRWISE_LIMIT {
                            skipped += 1;
                            return;
                        }
                        let value = fp::bottleneck_threshold(class.words(), &Levenshtein);
                        classes += 1;
                        observed_max = observed_max.max(value);
                        if value > bound {
                            bound_failure = Some(format!(
                                "n = {n}, a^{k} b^{m}: catenary {value} exceeds \
                                 relation bound {bound}"
                            ));
                        }
                    }
                    Ok(_) => {
                        sweep_error = Some(format!(
                            "n = {n}, a^{k} b^{m}: class enumeration truncated"
                        ));
                    }
                    Err(e) => sweep_error = Some(format!("n = {n}, a^{k} b^{m}: {e}")),
                }
            });
            if let Some(e) = sweep_error {
                max_failure = Some(e);
                break 'sweep;
            }
            if observed_max != n - 1 {
                max_failure = Some(format!(
                    "n = {n}: max catenary over {classes} classes was \
                     {observed_max}, expected {}",
                    n - 1
                ));
                break 'sweep;
            }
            detail.push_str(&format!(
                "n = {n}: max {observed_max} over {classes} classes \
                 ({skipped} oversized skipped); "
            ));
        }
        checks.push(check(
            "seed-sweep-max-catenary",
            max_failure,
            detail.trim_end_matches("; ").to_string(),
        ));
        checks.push(check(
            "catenary-within-relation-bound",
            bound_failure,
            "no complete class exceeded its presentation's relation bound".to_string(),
        ));
    }

    {
        let p = Presentation::bn(2);
        let mut seen: BTreeSet<(u64, u64)> = BTreeSet::new();
        let mut classes = 0u64;
        let mut failure = None;
        for_each_word(2, limits.size_max as usize, &mut |letters| {
            if failure.is_some() {
                return;
            }
            let (k, m) = bn_normal_form(2, letters);
            if !seen.insert((k, m)) {
                return;
            }
            match fp::length_set_of(&canonical_seed(k, m), &p, caps) {
                Ok((set, true)) if set.len() == 1 => classes += 1,
                Ok((set, complete)) => {
                    failure = Some(format!(
                        "a^{k} b^{m}: lengths {set} (complete: {complete})"
                    ));
                }
                Err(e) => failure = Some(format!("a^{k} b^{m}: {e}")),
            }
        });
        checks.push(check(
            "doubling-collapses-to-singletons",
            failure,
            format!("{classes} classes, every length set a singleton"),
        ));
    }

    {
        let result = fp::delta_probe(&Presentation::bn(2), limits.size_max.min(12) as usize, caps);
        let failure = match &result {
            Ok(probe) if probe.distances.is_empty() && probe.skipped == 0 => None,
            Ok(probe) => Some(format!(
                "gaps {:?} with {} skipped classes",
                probe.distances, probe.skipped
            )),
            Err(e) => Some(e.to_string()),
        };
        let detail = match &result {
            Ok(probe) => format!("no gaps across {} complete classes", probe.classes),
            Err(_) => String::new(),
        };
        checks.push(check("gap-probe-comes-back-empty", failure, detail));
    }

    {
        let p = Presentation::bn(3);
        let contexts: Vec<Word> = ["a", "b", "ab", "bba"]
            .iter()
            .map(|t| p.parse_word(t).expect("fixed context"))
            .collect();
        // The largest class in the sweep (b^15, 610 words) needs 610^3
        // triangle checks, just past the default exhaustive limit.
        let config = ProbeConfig {
            seed: limits.seed,
            exhaustive_triple_limit: 400_000_000,
            ..ProbeConfig::default()
        };
        let mut seen: BTreeSet<(u64, u64)> = BTreeSet::new();
        let mut failure = None;
        let mut classes = 0u64;
        let mut pairs = 0u64;
        let mut triples = 0u64;
        for_each_word(2, limits.size_max.min(8) as usize, &mut |letters| {
            if failure.is_some() {
                return;
            }
            let (k, m) = bn_normal_form(3, letters);
            if !seen.insert((k, m)) {
                return;
            }
            match fp::factorizations(&canonical_seed(k, m), &p, caps) {
                Ok(class) if class.complete() => {
                    let report =
                        distance_axiom_probe(&Levenshtein, class.words(), &contexts, &config);
                    if !report.triples_exhaustive {
                        failure = Some(format!(
                            "a^{k} b^{m}: triangle stage fell back to sampling"
                        ));
                        return;
                    }
                    match report.violation {
                        None => {
                            classes += 1;
                            pairs += report.pairs_checked;
                            triples += report.triples_checked;
                        }
                        Some(v) => {
                            failure = Some(format!(
                                "a^{k} b^{m}: {} violated: {}",
                                v.axiom.name(),
                                v.detail
                            ));
                        }
                    }
                }
                Ok(_) => failure = Some(format!("a^{k} b^{m}: class truncated")),
                Err(e) => failure = Some(format!("a^{k} b^{m}: {e}")),
            }
        });
        checks.push(check(
            "edit-distance-axioms-hold",
            failure,
            format!("{classes} classes, {pairs} pairs, {triples} triangles, all exhaustive"),
        ));
    }

    SuiteReport {
        suite: "catenary".to_string(),
        checks,
    }
}

/// Closed-form unions against brute force, their progression shape, and
/// their endpoints.
pub fn unions(limits: &SweepLimits) -> SuiteReport {
    let mut brute_failure = None;
    let mut shape_failure = None;
    let mut max_failure = None;
    let mut count = 0u64;
    for n in 3..=limits.n_max {
        let d = n - 2;
        for ell in 2..=8u64 {
            let closed = match bn::union_lengths(ell, n) {
                Ok(set) => set,
                Err(e) => {
                    brute_failure = Some(format!("n = {n}, index {ell}: {e}"));
                    continue;
                }
            };
            let mut family = Vec::new();
            for k in 0..=ell {
                for m in 0..=((n - 1) * ell + n) {
                    family.push(
                        BnElement::new(n, k, m)
                            .expect("modulus is valid")
                            .length_set(),
                    );
                }
            }
            let brute = union_containing(&family, ell);
            if brute.as_ref() != Some(&closed) {
                brute_failure.get_or_insert_with(|| {
                    format!(
                        "n = {n}, index {ell}: closed {closed}, brute force {brute:?}"
                    )
                });
            }
            match closed.aap_check(d.max(1)) {
                Some(w) if w.bound == 0 => {}
                other => {
                    shape_failure.get_or_insert_with(|| {
                        format!("n = {n}, index {ell}: {closed} not a progression ({other:?})")
                    });
                }
            }
            let expected_max = ell + d * (ell - 1);
            if closed.max() != expected_max {
                max_failure.get_or_insert_with(|| {
                    format!(
                        "n = {n}, index {ell}: max {} instead of {expected_max}",
                        closed.max()
                    )
                });
            }
            count += 1;
        }
    }
    SuiteReport {
        suite: "unions".to_string(),
        checks: vec![
            check(
                "union-matches-brute-force",
                brute_failure,
                format!("{count} unions agree with saturation-bounded search"),
            ),
            check(
                "unions-are-plain-progressions",
                shape_failure,
                "every union is an exact progression with the generic gap".to_string(),
            ),
            check(
                "union-maxima-follow-the-line",
                max_failure,
                "largest union entries grow linearly as expected".to_string(),
            ),
        ],
    }
}

/// Elasticity bounds, the unattained supremum, sumset closure with its
/// additive projection, and the one-parameter atom family.
pub fn elasticity(limits: &SweepLimits) -> SuiteReport {
    let mut checks = Vec::new();

    {
        let mut failure = None;
        let mut count = 0u64;
        'strict: for n in 3..=limits.n_max {
            let sup = Ratio::from_integer(n - 1);
            let mut sets: Vec<(u64, u64)> = Vec::new();
            for total in 0..=limits.size_max {
                for k in 0..=total {
                    sets.push((k, total - k));
                }
            }
            sets.extend((0..=200).map(|m| (0, m)));
            for (k, m) in sets {
                let rho = BnElement::new(n, k, m)
                    .expect("modulus is valid")
                    .length_set()
                    .elasticity();
                if rho >= sup {
                    failure = Some(format!(
                        "n = {n}, a^{k} b^{m}: elasticity {rho} reached the supremum"
                    ));
                    break 'strict;
                }
                count += 1;
            }
        }
        checks.push(check(
            "elasticities-stay-strictly-below-sup",
            failure,
            format!("{count} length sets checked"),
        ));
    }

    {
        let mut failure = None;
        let mut detail = String::new();
        for n in 3..=limits.n_max {
            let best = (0..=200)
                .map(|m| {
                    BnElement::new(n, 0, m)
                        .expect("modulus is valid")
                        .length_set()
                        .elasticity()
                })
                .max()
                .expect("non-empty range");
            let threshold = Ratio::new((n - 1) * 10 - 1, 10);
            if best < threshold {
                failure.get_or_insert_with(|| {
                    format!("n = {n}: best elasticity {best} below {threshold}")
                });
            }
            detail.push_str(&format!("n = {n}: sup approached at {best}; "));
        }
        checks.push(check(
            "sup-approached-within-a-tenth",
            failure,
            detail.trim_end_matches("; ").to_string(),
        ));
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
        let mut failure = None;
        let mut count = 0u64;
        'pairs: for n in 3..=limits.n_max.min(4) {
            let d = n - 2;
            for _ in 0..500 {
                let x1 = rng.gen_range(1..=20u64);
                let q1 = rng.gen_range(0..x1);
                let x2 = rng.gen_range(1..=20u64);
                let q2 = rng.gen_range(0..x2);
                let l1 = LengthSet::progression(x1, d, q1);
                let l2 = LengthSet::progression(x2, d, q2);
                let sum = l1.sumset(&l2);
                match bn::system_membership(&sum, n) {
                    Ok(Some(_)) => {}
                    other => {
                        failure = Some(format!(
                            "n = {n}: {l1} + {l2} = {sum} left the system ({other:?})"
                        ));
                        break 'pairs;
                    }
                }
                let lhs = bn::phi(&sum, n).expect("sum is in the system");
                let rhs = bn::phi(&l1, n)
                    .expect("in the system")
                    .add(&bn::phi(&l2, n).expect("in the system"));
                if lhs != rhs {
                    failure = Some(format!(
                        "n = {n}: projection of {sum} is {lhs:?}, parts add to {rhs:?}"
                    ));
                    break 'pairs;
                }
                count += 1;
            }
        }
        checks.push(check(
            "sumsets-stay-in-system-and-project-additively",
            failure,
            format!("{count} random pairs closed and additive"),
        ));
    }

    {
        let mut failure = None;
        for base in 1..=20u64 {
            for steps in 0..base {
                let point = SystemPoint::new(base, steps).expect("base exceeds steps");
                let decomposable = (1..base).any(|b1| {
                    (0..b1.min(steps + 1)).any(|s1| {
                        let b2 = base - b1;
                        let s2 = steps - s1;
                        s2 < b2
                    })
                });
                let expected_atom = base == steps + 1;
                if point.is_atom() != expected_atom || point.is_atom() == decomposable {
                    failure.get_or_insert_with(|| {
                        format!(
                            "({base}, {steps}): atom flag {}, decomposable {decomposable}",
                            point.is_atom()
                        )
                    });
                }
            }
        }
        checks.push(check(
            "projection-atoms-are-the-unit-steps",
            failure,
            "atoms under 21 are exactly the steps-plus-one points".to_string(),
        ));
    }

    {
        fn decomposition_lengths(
            base: u64,
            steps: u64,
            min_k: u64,
            depth: u64,
            out: &mut BTreeSet<u64>,
        ) {
            if base == 0 && steps == 0 {
                out.insert(depth);
                return;
            }
            for k in min_k..=base {
                if k >= 1 && steps + 1 >= k && base - k >= steps - (k - 1) {
                    let left_base = base - k;
                    let left_steps = steps - (k - 1);
                    if left_base == 0 && left_steps != 0 {
                        continue;
                    }
                    decomposition_lengths(left_base, left_steps, k, depth + 1, out);
                }
            }
        }
        let mut failure = None;
        let mut sums = 0u64;
        let atom_bases = [1u64, 2, 3, 4];
        let mut stack: Vec<(SystemPoint, usize, u64)> = atom_bases
            .iter()
            .enumerate()
            .map(|(i, &k)| (SystemPoint::new(k, k - 1).expect("unit step"), i, 1))
            .collect();
        while let Some((point, from, used)) = stack.pop() {
            let mut lengths = BTreeSet::new();
            decomposition_lengths(point.base(), point.steps(), 1, 0, &mut lengths);
            let expected = point.base() - point.steps();
            if lengths != BTreeSet::from([expected]) {
                failure.get_or_insert_with(|| {
                    format!(
                        "({}, {}): decomposition lengths {lengths:?}, expected {{{expected}}}",
                        point.base(),
                        point.steps()
                    )
                });
            }
            sums += 1;
            if used < 8 {
                for (i, &k) in atom_bases.iter().enumerate().skip(from) {
                    let next = point.add(&SystemPoint::new(k, k - 1).expect("unit step"));
                    stack.push((next, i, used + 1));
                }
            }
        }
        checks.push(check(
            "atom-sums-decompose-at-one-length",
            failure,
            format!("{sums} sums of up to 8 atoms, all single-length"),
        ));
    }

    {
        let mut failure = None;
        for n in 3..=8u64 {
            if bn::rho_k(1, n) != 1 || bn::rho_k(2, n) != n {
                failure.get_or_insert_with(|| format!("n = {n}: wrong first values"));
            }
            for k in 3..=50u64 {
                let diff = bn::rho_k(k, n) - bn::rho_k(k - 1, n);
                if diff != n - 1 {
                    failure.get_or_insert_with(|| {
                        format!("n = {n}, k = {k}: step {diff}, expected {}", n - 1)
                    });
                }
            }
        }
        checks.push(check(
            "union-suprema-grow-by-a-constant",
            failure,
            "all consecutive differences equal the modulus minus one".to_string(),
        ));
    }

    SuiteReport {
        suite: "elasticity".to_string(),
        checks,
    }
}

/// Zero-sum arithmetic: attained extremal elasticities with witnesses, the
/// exact cyclic-3 value, the contrast with the never-attained word-monoid
/// supremum, and the commutative distance axioms.
pub fn zerosum(limits: &SweepLimits) -> SuiteReport {
    let mut checks = Vec::new();

    let groups: Vec<(&str, FiniteAbelianGroup)> = vec![
        ("2", FiniteAbelianGroup::cyclic(2).expect("valid order")),
        ("3", FiniteAbelianGroup::cyclic(3).expect("valid order")),
        ("2x2", FiniteAbelianGroup::new([2, 2]).expect("valid orders")),
        ("4", FiniteAbelianGroup::cyclic(4).expect("valid order")),
    ];

    {
        let mut failure = None;
        let mut detail = String::new();
        for (label, group) in &groups {
            let radius = (3 * group.order()) as usize;
            match zerosum::accepted_elasticity(group, &group.elements(), radius) {
                Ok(out) => match out.witness {
                    Some(witness) => {
                        let recomputed = zerosum::length_set(group, &witness)
                            .expect("witness is zero-sum")
                            .elasticity();
                        if recomputed != out.value {
                            failure.get_or_insert_with(|| {
                                format!(
                                    "{label}: witness {witness} recomputes to {recomputed}, \
                                     reported {}",
                                    out.value
                                )
                            });
                        }
                        detail.push_str(&format!("{label}: {} at {witness}; ", out.value));
                    }
                    None => {
                        failure
                            .get_or_insert_with(|| format!("{label}: no witness in radius"));
                    }
                },
                Err(e) => {
                    failure.get_or_insert_with(|| format!("{label}: {e}"));
                }
            }
        }
        checks.push(check(
            "extremal-elasticities-attained-with-witnesses",
            failure,
            detail.trim_end_matches("; ").to_string(),
        ));
    }

    {
        let group = FiniteAbelianGroup::cyclic(3).expect("valid order");
        let out = zerosum::accepted_elasticity(&group, &group.elements(), 9)
            .expect("support is owned");
        let one = group.element([1]).expect("in range");
        let two = group.element([2]).expect("in range");
        let expected_witness = ZsSequence::new([
            one.clone(),
            one.clone(),
            one,
            two.clone(),
            two.clone(),
            two,
        ]);
        let failure = if out.value != Ratio::new(3, 2) {
            Some(format!("value {} instead of 3/2", out.value))
        } else if out.witness.as_ref() != Some(&expected_witness) {
            Some(format!("witness {:?} instead of {expected_witness}", out.witness))
        } else {
            None
        };
        checks.push(check(
            "cyclic3-extreme-is-three-halves",
            failure,
            format!("3/2 attained by {expected_witness}"),
        ));
    }

    {
        let mut failure = None;
        let mut moduli = 0u64;
        for n in 3..=limits.n_max {
            let sup = bn::elasticity_sup(n);
            if sup.attained || sup.value != Ratio::from_integer(n - 1) {
                failure.get_or_insert_with(|| {
                    format!(
                        "n = {n}: supremum {} attained flag {}",
                        sup.value, sup.attained
                    )
                });
            }
            moduli += 1;
        }
        checks.push(check(
            "word-monoid-sup-never-attained",
            failure,
            format!("{moduli} moduli report an unattained supremum"),
        ));
    }

    {
        let group = FiniteAbelianGroup::cyclic(3).expect("valid order");
        let elems = group.elements();
        let config = ProbeConfig {
            seed: limits.seed,
            ..ProbeConfig::default()
        };
        let contexts: Vec<ZsFactorization> = vec![
            ZsFactorization::new([ZsSequence::new([elems[0].clone()])]),
            ZsFactorization::new([ZsSequence::new([
                elems[1].clone(),
                elems[1].clone(),
                elems[1].clone(),
            ])]),
            ZsFactorization::new([ZsSequence::new([elems[1].clone(), elems[2].clone()])]),
        ];
        let mut failure = None;
        let mut classes = 0u64;
        let mut pairs = 0u64;
        let bound = limits.size_max.min(9) as usize;
        'classes: for a in 0..=bound {
            for b in 0..=(bound - a) {
                for c in 0..=(bound - a - b) {
                    let seq = ZsSequence::new(
                        std::iter::repeat(elems[0].clone())
                            .take(a)
                            .chain(std::iter::repeat(elems[1].clone()).take(b))
                            .chain(std::iter::repeat(elems[2].clone()).take(c)),
                    );
                    if !seq.is_zero_sum(&group) {
                        continue;
                    }
                    let class = match zerosum::factorizations(&group, &seq) {
                        Ok(class) => class,
                        Err(e) => {
                            failure = Some(format!("0^{a} 1^{b} 2^{c}: {e}"));
                            break 'classes;
                        }
                    };
                    let report =
                        distance_axiom_probe(&CommutativeDistance, &class, &contexts, &config);
                    match report.violation {
                        None => {
                            classes += 1;
                            pairs += report.pairs_checked;
                        }
                        Some(v) => {
                            failure = Some(format!(
                                "0^{a} 1^{b} 2^{c}: {} violated: {}",
                                v.axiom.name(),
                                v.detail
                            ));
                            break 'classes;
                        }
                    }
                }
            }
        }
        checks.push(check(
            "commutative-distance-axioms-hold",
            failure,
            format!("{classes} sequence classes, {pairs} pairs"),
        ));
    }

    SuiteReport {
        suite: "zerosum".to_string(),
        checks,
    }
}

/// All five suites in order.
pub fn all(limits: &SweepLimits) -> Vec<SuiteReport> {
    vec![
        bn_oracle(limits),
        catenary(limits),
        unions(limits),
        elasticity(limits),
        zerosum(limits),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scale_run_is_all_green() {
        let limits = SweepLimits {
            n_max: 3,
            size_max: 6,
            seed: 7,
        };
        for report in all(&limits) {
            for c in &report.checks {
                assert!(c.pass, "{} / {}: {}", report.suite, c.name, c.detail);
            }
        }
    }

    #[test]
    fn reports_name_their_suites() {
        let limits = SweepLimits {
            n_max: 2,
            size_max: 4,
            seed: 0,
        };
        let names: Vec<String> = all(&limits).into_iter().map(|r| r.suite).collect();
        assert_eq!(
            names,
            ["bn-oracle", "catenary", "unions", "elasticity", "zerosum"]
        );
    }
}
