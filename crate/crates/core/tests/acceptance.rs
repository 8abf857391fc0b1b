//! Release gate: twelve checks over the whole stack, one test each, every
//! one printing a single `ACCEPTANCE <n> (<name>): PASS|FAIL` line.  Most
//! delegate to the sweep suites in `verify` at their default limits; the
//! suites run once apiece and are shared between criteria, so a stated time
//! budget is asserted against the suite's own computation time.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use factorlen_core::bn;
use factorlen_core::verify::{self, SuiteReport, SweepLimits};

struct Timed {
    report: SuiteReport,
    elapsed: Duration,
}

fn timed(run: impl FnOnce(&SweepLimits) -> SuiteReport) -> Timed {
    let start = Instant::now();
    let report = run(&SweepLimits::default());
    Timed {
        report,
        elapsed: start.elapsed(),
    }
}

fn bn_oracle() -> &'static Timed {
    static CELL: OnceLock<Timed> = OnceLock::new();
    CELL.get_or_init(|| timed(verify::bn_oracle))
}

fn catenary() -> &'static Timed {
    static CELL: OnceLock<Timed> = OnceLock::new();
    CELL.get_or_init(|| timed(verify::catenary))
}

fn unions() -> &'static Timed {
    static CELL: OnceLock<Timed> = OnceLock::new();
    CELL.get_or_init(|| timed(verify::unions))
}

fn elasticity() -> &'static Timed {
    static CELL: OnceLock<Timed> = OnceLock::new();
    CELL.get_or_init(|| timed(verify::elasticity))
}

fn zerosum() -> &'static Timed {
    static CELL: OnceLock<Timed> = OnceLock::new();
    CELL.get_or_init(|| timed(verify::zerosum))
}

fn require_checks(report: &SuiteReport, names: &[&str]) -> Result<(), String> {
    for wanted in names {
        let check = report
            .checks
            .iter()
            .find(|c| c.name == *wanted)
            .ok_or_else(|| format!("suite {} has no check named {wanted}", report.suite))?;
        if !check.pass {
            return Err(format!("{}: {}", check.name, check.detail));
        }
    }
    Ok(())
}

fn within(budget_secs: u64, actual: Duration) -> Result<(), String> {
    if actual <= Duration::from_secs(budget_secs) {
        Ok(())
    } else {
        Err(format!("took {actual:.2?}, budget {budget_secs} s"))
    }
}

fn conclude(index: usize, name: &str, start: Instant, outcome: Result<(), String>) {
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => println!("ACCEPTANCE {index} ({name}): PASS ({elapsed:.2?})"),
        Err(detail) => {
            println!("ACCEPTANCE {index} ({name}): FAIL ({elapsed:.2?})");
            panic!("acceptance criterion {index} ({name}) failed: {detail}");
        }
    }
}

#[test]
fn criterion_01_oracle_equivalence() {
    let start = Instant::now();
    let outcome = (|| {
        let grid: usize = (2..=5u64)
            .map(|_| (0..=12u64).map(|k| (12 - k + 1) as usize).sum::<usize>())
            .sum();
        if grid < 360 {
            return Err(format!("only {grid} elements in the sweep grid"));
        }
        let suite = bn_oracle();
        require_checks(&suite.report, &["closed-form-matches-enumeration"])?;
        within(30, suite.elapsed)
    })();
    conclude(1, "oracle equivalence", start, outcome);
}

#[test]
fn criterion_02_step_count_schemes() {
    let start = Instant::now();
    let outcome = (|| {
        for n in 2..=12u64 {
            for m in 0..=10_000u64 {
                let (iterated, divided) = (bn::ap_steps(m, n), bn::ap_steps_by_division(m, n));
                if iterated != divided {
                    return Err(format!("schemes split at m={m}, n={n}: {iterated} vs {divided}"));
                }
            }
        }
        within(5, start.elapsed())
    })();
    conclude(2, "step-count schemes agree", start, outcome);
}

#[test]
fn criterion_03_catenary_degree() {
    let start = Instant::now();
    let outcome = (|| {
        let suite = catenary();
        require_checks(
            &suite.report,
            &["seed-sweep-max-catenary", "catenary-within-relation-bound"],
        )?;
        within(60, suite.elapsed)
    })();
    conclude(3, "catenary degree", start, outcome);
}

#[test]
fn criterion_04_half_factorial_base_case() {
    let start = Instant::now();
    let outcome = require_checks(
        &catenary().report,
        &["doubling-collapses-to-singletons", "gap-probe-comes-back-empty"],
    );
    conclude(4, "half-factorial base case", start, outcome);
}

#[test]
fn criterion_05_system_shape() {
    let start = Instant::now();
    let outcome = require_checks(
        &bn_oracle().report,
        &[
            "every-length-set-passes-membership",
            "progression-grid-yields-witnesses",
        ],
    );
    conclude(5, "system shape", start, outcome);
}

#[test]
fn criterion_06_unions() {
    let start = Instant::now();
    let outcome = require_checks(
        &unions().report,
        &[
            "union-matches-brute-force",
            "unions-are-plain-progressions",
            "union-maxima-follow-the-line",
        ],
    );
    conclude(6, "unions of length sets", start, outcome);
}

#[test]
fn criterion_07_unaccepted_elasticity() {
    let start = Instant::now();
    let outcome = require_checks(
        &elasticity().report,
        &[
            "elasticities-stay-strictly-below-sup",
            "sup-approached-within-a-tenth",
        ],
    );
    conclude(7, "unaccepted elasticity", start, outcome);
}

#[test]
fn criterion_08_system_monoid_structure() {
    let start = Instant::now();
    let outcome = require_checks(
        &elasticity().report,
        &[
            "sumsets-stay-in-system-and-project-additively",
            "projection-atoms-are-the-unit-steps",
            "atom-sums-decompose-at-one-length",
        ],
    );
    conclude(8, "system monoid structure", start, outcome);
}

#[test]
fn criterion_09_union_supremum_growth() {
    let start = Instant::now();
    let outcome = require_checks(&elasticity().report, &["union-suprema-grow-by-a-constant"]);
    conclude(9, "union supremum growth", start, outcome);
}

#[test]
fn criterion_10_runaway_class_detection() {
    let start = Instant::now();
    let outcome = require_checks(&bn_oracle().report, &["runaway-classes-stay-incomplete"]);
    conclude(10, "runaway class detection", start, outcome);
}

#[test]
fn criterion_11_zero_sum_discriminator() {
    let start = Instant::now();
    let outcome = (|| {
        let suite = zerosum();
        require_checks(
            &suite.report,
            &[
                "extremal-elasticities-attained-with-witnesses",
                "cyclic3-extreme-is-three-halves",
                "word-monoid-sup-never-attained",
            ],
        )?;
        within(120, suite.elapsed)
    })();
    conclude(11, "zero-sum discriminator", start, outcome);
}

#[test]
fn criterion_12_distance_axioms() {
    let start = Instant::now();
    let outcome = (|| {
        require_checks(&catenary().report, &["edit-distance-axioms-hold"])?;
        require_checks(&zerosum().report, &["commutative-distance-axioms-hold"])
    })();
    conclude(12, "distance axioms", start, outcome);
}
