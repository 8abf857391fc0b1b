//! Pluggable distances between factorizations, and the axioms any candidate
//! distance must satisfy on a factorization class:
//!
//! 1. identity: `d(z, z) = 0`
//! 2. symmetry: `d(z, z') = d(z', z)`
//! 3. triangle inequality
//! 4. translation invariance: `d(xz, xz') = d(z, z') = d(zy, z'y)`
//! 5. length sandwich: `| |z| - |z'| | <= d(z, z') <= max(|z|, |z'|, 1)`
//!
//! The probe checks 1, 2, 5 pairwise-exhaustively, the triangle either
//! exhaustively or on seeded random triples depending on class size, and
//! translation invariance on seeded pairs against caller-supplied contexts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::presentation::Word;

/// Anything that behaves like a factorization: it has a length and can be
/// extended on either side by another factorization.
pub trait Factorization: Clone {
    fn size(&self) -> u64;
    fn extend(&self, right: &Self) -> Self;
}

impl Factorization for Word {
    fn size(&self) -> u64 {
        self.len() as u64
    }

    fn extend(&self, right: &Self) -> Self {
        self.concat(right)
    }
}

/// Pairwise distance between factorizations.
pub trait Distance<F> {
    fn eval(&self, a: &F, b: &F) -> u64;
}

/// Unit-cost edit distance on words.
#[derive(Debug, Clone, Copy, Default)]
pub struct Levenshtein;

impl Distance<Word> for Levenshtein {
    fn eval(&self, a: &Word, b: &Word) -> u64 {
        levenshtein(a.letters(), b.letters())
    }
}

/// Adapter turning any closure into a [`Distance`].
pub struct FnDistance<G>(pub G);

impl<F, G: Fn(&F, &F) -> u64> Distance<F> for FnDistance<G> {
    fn eval(&self, a: &F, b: &F) -> u64 {
        (self.0)(a, b)
    }
}

/// Unit-cost edit distance between two slices.
pub fn levenshtein<T: Eq>(a: &[T], b: &[T]) -> u64 {
    let common_prefix = a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count();
    let a = &a[common_prefix..];
    let b = &b[common_prefix..];
    let common_suffix = a
        .iter()
        .rev()
        .zip(b.iter().rev())
        .take_while(|(x, y)| x == y)
        .count();
    let a = &a[..a.len() - common_suffix];
    let b = &b[..b.len() - common_suffix];
    if a.is_empty() {
        return b.len() as u64;
    }
    if b.is_empty() {
        return a.len() as u64;
    }
    let mut row: Vec<u64> = (0..=b.len() as u64).collect();
    for (i, x) in a.iter().enumerate() {
        let mut diagonal = row[0];
        row[0] = i as u64 + 1;
        for (j, y) in b.iter().enumerate() {
            let cost = if x == y { diagonal } else { diagonal + 1 };
            diagonal = row[j + 1];
            row[j + 1] = cost.min(row[j] + 1).min(diagonal + 1);
        }
    }
    *row.last().unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceAxiom {
    Identity,
    Symmetry,
    Triangle,
    Translation,
    LengthSandwich,
}

impl DistanceAxiom {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Identity => "identity",
            Self::Symmetry => "symmetry",
            Self::Triangle => "triangle",
            Self::Translation => "translation",
            Self::LengthSandwich => "length-sandwich",
        }
    }
}

/// First failure found by [`distance_axiom_probe`].
#[derive(Debug, Clone)]
pub struct AxiomViolation<F> {
    pub axiom: DistanceAxiom,
    /// The factorizations involved, in the order the axiom quantifies them.
    pub witnesses: Vec<F>,
    /// Context word for translation failures (`None` elsewhere).
    pub context: Option<F>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ProbeConfig {
    pub seed: u64,
    /// Triangle checks run exhaustively while `|class|^3` stays within this.
    pub exhaustive_triple_limit: u64,
    /// Random triangle checks once exhaustion is off the table.
    pub sampled_triples: u64,
    /// Budget of (pair, context, side) translation checks.
    pub context_checks: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            exhaustive_triple_limit: 200_000_000,
            sampled_triples: 200_000,
            context_checks: 400_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ProbeReport<F> {
    pub pairs_checked: u64,
    pub triples_checked: u64,
    pub triples_exhaustive: bool,
    pub translation_checks: u64,
    pub violation: Option<AxiomViolation<F>>,
}

impl<F> ProbeReport<F> {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

// Full distance matrix; fills both triangles so asymmetric candidate
// distances are caught rather than papered over.
fn fill_matrix<F, D: Distance<F>>(dist: &D, class: &[F]) -> Vec<u64> {
    let n = class.len();
    let mut matrix = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                matrix[i * n + j] = dist.eval(&class[i], &class[j]);
            }
        }
    }
    matrix
}

/// Checks the five distance axioms on one factorization class.
///
/// `class` holds pairwise-congruent factorizations; `contexts` supplies the
/// words used for translation invariance (their content is up to the caller
/// — for word monoids, short words over the alphabet work well).
pub fn distance_axiom_probe<F: Factorization, D: Distance<F>>(
    dist: &D,
    class: &[F],
    contexts: &[F],
    config: &ProbeConfig,
) -> ProbeReport<F> {
    let n = class.len();
    let mut report = ProbeReport {
        pairs_checked: 0,
        triples_checked: 0,
        triples_exhaustive: false,
        translation_checks: 0,
        violation: None,
    };
    let matrix = fill_matrix(dist, class);
    let d = |i: usize, j: usize| matrix[i * n + j];

    for (i, z) in class.iter().enumerate() {
        if dist.eval(z, z) != 0 {
            report.violation = Some(AxiomViolation {
                axiom: DistanceAxiom::Identity,
                witnesses: vec![z.clone()],
                context: None,
                detail: format!("d(z, z) = {} for |z| = {}", dist.eval(z, z), z.size()),
            });
            return report;
        }
        for j in (i + 1)..n {
            report.pairs_checked += 1;
            let zj = &class[j];
            if d(i, j) != d(j, i) {
                report.violation = Some(AxiomViolation {
                    axiom: DistanceAxiom::Symmetry,
                    witnesses: vec![z.clone(), zj.clone()],
                    context: None,
                    detail: format!("d(z, z') = {} but d(z', z) = {}", d(i, j), d(j, i)),
                });
                return report;
            }
            let (lo, hi) = (z.size().abs_diff(zj.size()), z.size().max(zj.size()).max(1));
            if d(i, j) < lo || d(i, j) > hi {
                report.violation = Some(AxiomViolation {
                    axiom: DistanceAxiom::LengthSandwich,
                    witnesses: vec![z.clone(), zj.clone()],
                    context: None,
                    detail: format!("d = {} outside [{lo}, {hi}]", d(i, j)),
                });
                return report;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let triple_total = (n as u64).saturating_mul(n as u64).saturating_mul(n as u64);
    report.triples_exhaustive = triple_total <= config.exhaustive_triple_limit;
    let check_triangle = |i: usize, k: usize, j: usize, report: &mut ProbeReport<F>| {
        report.triples_checked += 1;
        if d(i, j) > d(i, k) + d(k, j) {
            report.violation = Some(AxiomViolation {
                axiom: DistanceAxiom::Triangle,
                witnesses: vec![class[i].clone(), class[k].clone(), class[j].clone()],
                context: None,
                detail: format!("d(x, z) = {} > {} + {}", d(i, j), d(i, k), d(k, j)),
            });
            true
        } else {
            false
        }
    };
    if report.triples_exhaustive {
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    if check_triangle(i, k, j, &mut report) {
                        return report;
                    }
                }
            }
        }
    } else {
        for _ in 0..config.sampled_triples {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            let k = rng.gen_range(0..n);
            if check_triangle(i, k, j, &mut report) {
                return report;
            }
        }
    }

    if n >= 2 && !contexts.is_empty() {
        let all_pairs = (n as u64) * (n as u64 - 1) / 2;
        let budget_pairs = config.context_checks / (2 * contexts.len() as u64);
        let exhaustive_pairs = all_pairs <= budget_pairs;
        let pair_rounds = if exhaustive_pairs { all_pairs } else { budget_pairs };
        let mut pair_iter = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j)));
        for _ in 0..pair_rounds {
            let (i, j) = if exhaustive_pairs {
                pair_iter.next().unwrap()
            } else {
                let i = rng.gen_range(0..n - 1);
                (i, rng.gen_range(i + 1..n))
            };
            let base = d(i, j);
            for x in contexts {
                report.translation_checks += 2;
                let left = dist.eval(&x.extend(&class[i]), &x.extend(&class[j]));
                let right = dist.eval(&class[i].extend(x), &class[j].extend(x));
                if left != base || right != base {
                    report.violation = Some(AxiomViolation {
                        axiom: DistanceAxiom::Translation,
                        witnesses: vec![class[i].clone(), class[j].clone()],
                        context: Some(x.clone()),
                        detail: format!(
                            "d = {base} but {left} after left- and {right} after right-extension"
                        ),
                    });
                    return report;
                }
            }
        }
    }

    report
}
