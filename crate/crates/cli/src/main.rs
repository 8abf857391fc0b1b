//! `factorlen`: factorization invariants of ⟨a,b | ba = bⁿ⟩ in closed form,
//! of arbitrary finite presentations by bounded enumeration, and of zero-sum
//! monoids over finite abelian groups.  Every command prints one JSON
//! document with sorted keys; `--pretty` renders tables instead.
//!
//! Exit codes: 0 computed (negative membership and truncated enumerations
//! included), 1 verification failure, 2 usage or parse error.

mod params;
mod render;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use factorlen_core::bn::{self, BnElement};
use factorlen_core::fp::{self, Levenshtein, Presentation};
use factorlen_core::lengthsets::LengthSet;
use factorlen_core::verify::{self, SuiteReport, SweepLimits};
use factorlen_core::zerosum;

#[derive(Parser)]
#[command(name = "factorlen", version, about, disable_help_subcommand = true)]
struct Cli {
    /// Render human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form invariants of ⟨a,b | ba = bⁿ⟩.
    #[command(subcommand)]
    Bn(BnCommand),
    /// Bounded enumeration over a presentation file.
    #[command(subcommand)]
    Fp(FpCommand),
    /// Zero-sum sequences over a finite abelian group.
    #[command(subcommand)]
    Zs(ZsCommand),
    /// Oracle-vs-closed-form verification sweeps.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum BnCommand {
    /// Set of factorization lengths of a^k b^m.
    LengthSet {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
    },
    /// Union of all length sets containing l.
    Union {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
    },
    /// Does the set arise as a length set?  Witness on success.
    Membership {
        #[arg(long)]
        n: u64,
        /// Set literal: comma-separated values and inclusive lo..hi ranges.
        #[arg(long)]
        set: String,
    },
    /// Projection of a length set to its (base, steps) coordinates.
    Phi {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        set: String,
    },
    /// Largest element of the k-th union.
    RhoK {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Supremum of elasticities over the monoid, with attainment.
    Elasticity {
        #[arg(long)]
        n: u64,
    },
    /// Catenary degree of the monoid.
    Catenary {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum FpCommand {
    /// All words equivalent to the given one, up to the caps.
    Factorize {
        #[command(flatten)]
        target: FpTarget,
    },
    /// Observed word lengths across the congruence class.
    Lengths {
        #[command(flatten)]
        target: FpTarget,
    },
    /// Catenary degree of one congruence class.
    Catenary {
        #[command(flatten)]
        target: FpTarget,
        #[arg(long, default_value = "levenshtein")]
        distance: String,
    },
    /// Largest distance across the defining relations.
    RelationBound {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, default_value = "levenshtein")]
        distance: String,
    },
    /// Union of distance sets over all classes of words up to a length.
    DeltaProbe {
        #[arg(long)]
        presentation: PathBuf,
        /// Sweep every word up to this length.
        #[arg(long)]
        word_len: usize,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        max_iter: Option<usize>,
    },
}

#[derive(clap::Args)]
struct FpTarget {
    #[arg(long)]
    presentation: PathBuf,
    #[arg(long)]
    word: String,
    /// Longest word admitted into the closure; falls back to
    /// FACTORLEN_MAX_LEN, then 64.
    #[arg(long)]
    max_len: Option<usize>,
    /// Closure insertions allowed; falls back to FACTORLEN_MAX_ITER,
    /// then 10^6.
    #[arg(long)]
    max_iter: Option<usize>,
}

#[derive(Subcommand)]
enum ZsCommand {
    /// Minimal zero-sum sequences over the support.
    Atoms {
        #[command(flatten)]
        scope: ZsScope,
    },
    /// Set of factorization lengths of one sequence.
    Lengths {
        #[command(flatten)]
        target: ZsTarget,
    },
    /// Catenary degree of one sequence.
    Catenary {
        #[command(flatten)]
        target: ZsTarget,
    },
    /// Largest elasticity over sequences up to the search radius, with its
    /// witness.
    Elasticity {
        #[command(flatten)]
        scope: ZsScope,
    },
}

#[derive(clap::Args)]
struct ZsScope {
    /// Cyclic orders joined by x: 3 is C3, 2x2 the Klein group.
    #[arg(long)]
    group: String,
    /// Restrict to these elements (comma-separated residue tuples);
    /// defaults to the whole group.
    #[arg(long)]
    g0: Option<String>,
    /// Atom length cap / elasticity search radius; defaults to three times
    /// the group order.
    #[arg(long)]
    max_len: Option<u64>,
}

#[derive(clap::Args)]
struct ZsTarget {
    #[arg(long)]
    group: String,
    /// Sequence literal: comma-separated elements with optional
    /// ^multiplicity, e.g. "1^3,2^3".
    #[arg(long)]
    seq: String,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Closed-form length sets against the enumeration oracle.
    BnOracle(VerifyFlags),
    /// Catenary sweeps, half-factorial collapse, distance axioms.
    Catenary(VerifyFlags),
    /// Unions against brute force and their progression shape.
    Unions(VerifyFlags),
    /// Elasticity bounds and the length-set system's monoid structure.
    Elasticity(VerifyFlags),
    /// Zero-sum elasticities, witnesses, and the commutative distance.
    Zerosum(VerifyFlags),
    /// Every suite in sequence.
    All(VerifyFlags),
}

#[derive(clap::Args)]
struct VerifyFlags {
    /// Largest modulus swept (default 5).
    #[arg(long)]
    n_max: Option<u64>,
    /// Seed-length / exponent budget per sweep (default 12).
    #[arg(long)]
    size_max: Option<u64>,
    /// Seed for the sampled probes (default 0).
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.pretty) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, pretty: bool) -> Result<ExitCode, String> {
    let doc = match command {
        Command::Bn(cmd) => run_bn(cmd)?,
        Command::Fp(cmd) => run_fp(cmd)?,
        Command::Zs(cmd) => run_zs(cmd)?,
        Command::Verify(cmd) => {
            let (doc, all_pass) = run_verify(cmd)?;
            render::emit(&doc, pretty);
            return Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    };
    render::emit(&doc, pretty);
    Ok(ExitCode::SUCCESS)
}

fn lengths_json(set: &LengthSet) -> Value {
    Value::Array(set.iter().map(Value::from).collect())
}

fn run_bn(cmd: BnCommand) -> Result<Value, String> {
    match cmd {
        BnCommand::LengthSet { n, k, m } => {
            let element = BnElement::new(n, k, m).map_err(|e| e.to_string())?;
            let set = element.length_set();
            Ok(render::document(
                "bn length-set",
                json!({"k": k, "m": m, "n": n}),
                json!({"lengths": lengths_json(&set)}),
                None,
            ))
        }
        BnCommand::Union { n, l } => {
            if l == 0 {
                return Err("union index must be at least 1".to_string());
            }
            // The closed form starts at l = 2; the first union is {1}
            // because atoms are exactly the elements with 1 in their set.
            let set = if l == 1 {
                LengthSet::new([1]).expect("unit length set")
            } else {
                bn::union_lengths(l, n).map_err(|e| e.to_string())?
            };
            Ok(render::document(
                "bn union",
                json!({"l": l, "n": n}),
                json!({"lengths": lengths_json(&set)}),
                None,
            ))
        }
        BnCommand::Membership { n, set } => {
            let values = params::set_literal(&set)?;
            let set = LengthSet::new(values.clone()).map_err(|e| e.to_string())?;
            let witness = bn::system_membership(&set, n).map_err(|e| e.to_string())?;
            let result = match witness {
                Some(e) => json!({
                    "member": true,
                    "witness": {"k": e.a_exp(), "m": e.b_exp()},
                }),
                None => json!({"member": false, "witness": Value::Null}),
            };
            Ok(render::document(
                "bn membership",
                json!({"n": n, "set": values}),
                result,
                None,
            ))
        }
        BnCommand::Phi { n, set } => {
            let values = params::set_literal(&set)?;
            let set = LengthSet::new(values.clone()).map_err(|e| e.to_string())?;
            let point = bn::phi(&set, n).map_err(|e| e.to_string())?;
            Ok(render::document(
                "bn phi",
                json!({"n": n, "set": values}),
                json!({
                    "atom": point.is_atom(),
                    "base": point.base(),
                    "steps": point.steps(),
                }),
                None,
            ))
        }
        BnCommand::RhoK { n, k } => {
            if n < 2 {
                return Err("modulus must be at least 2".to_string());
            }
            if k < 1 {
                return Err("k must be at least 1".to_string());
            }
            Ok(render::document(
                "bn rho-k",
                json!({"k": k, "n": n}),
                json!({"value": bn::rho_k(k, n)}),
                None,
            ))
        }
        BnCommand::Elasticity { n } => {
            if n < 2 {
                return Err("modulus must be at least 2".to_string());
            }
            let sup = bn::elasticity_sup(n);
            Ok(render::document(
                "bn elasticity",
                json!({"n": n}),
                json!({
                    "attained": sup.attained,
                    "value": render::ratio(sup.value),
                }),
                None,
            ))
        }
        BnCommand::Catenary { n } => {
            if n < 2 {
                return Err("modulus must be at least 2".to_string());
            }
            Ok(render::document(
                "bn catenary",
                json!({"n": n}),
                json!({"value": bn::catenary_constant(n)}),
                None,
            ))
        }
    }
}

fn load_presentation(path: &PathBuf) -> Result<Presentation, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Presentation::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn require_levenshtein(name: &str) -> Result<Levenshtein, String> {
    match name {
        "levenshtein" => Ok(Levenshtein),
        other => Err(format!("unknown distance {other:?}")),
    }
}

fn fp_inputs(target: &FpTarget, caps: fp::Caps) -> Value {
    json!({
        "max_iter": caps.max_iter,
        "max_len": caps.max_len,
        "presentation": target.presentation.display().to_string(),
        "word": target.word,
    })
}

fn run_fp(cmd: FpCommand) -> Result<Value, String> {
    match cmd {
        FpCommand::Factorize { target } => {
            let p = load_presentation(&target.presentation)?;
            let caps = params::resolve_caps(target.max_len, target.max_iter)?;
            let seed = p.parse_word(&target.word).map_err(|e| e.to_string())?;
            let class = fp::factorizations(&seed, &p, caps).map_err(|e| e.to_string())?;
            let words: Vec<Value> = class
                .words()
                .iter()
                .map(|w| Value::String(p.display_word(w)))
                .collect();
            Ok(render::document(
                "fp factorize",
                fp_inputs(&target, caps),
                json!({
                    "count": class.len(),
                    "overflow": class.overflow(),
                    "words": words,
                }),
                Some(class.complete()),
            ))
        }
        FpCommand::Lengths { target } => {
            let p = load_presentation(&target.presentation)?;
            let caps = params::resolve_caps(target.max_len, target.max_iter)?;
            let seed = p.parse_word(&target.word).map_err(|e| e.to_string())?;
            let class = fp::factorizations(&seed, &p, caps).map_err(|e| e.to_string())?;
            let lengths: Vec<Value> = class
                .observed_lengths()
                .into_iter()
                .map(Value::from)
                .collect();
            Ok(render::document(
                "fp lengths",
                fp_inputs(&target, caps),
                json!({
                    "lengths": lengths,
                    "overflow": class.overflow(),
                }),
                Some(class.complete()),
            ))
        }
        FpCommand::Catenary { target, distance } => {
            let p = load_presentation(&target.presentation)?;
            let caps = params::resolve_caps(target.max_len, target.max_iter)?;
            let dist = require_levenshtein(&distance)?;
            let seed = p.parse_word(&target.word).map_err(|e| e.to_string())?;
            let outcome = fp::catenary_of(&seed, &p, &dist, caps).map_err(|e| e.to_string())?;
            Ok(render::document(
                "fp catenary",
                fp_inputs(&target, caps),
                json!({
                    "class_size": outcome.class_size,
                    "value": outcome.value,
                }),
                Some(outcome.complete),
            ))
        }
        FpCommand::RelationBound {
            presentation,
            distance,
        } => {
            let p = load_presentation(&presentation)?;
            let dist = require_levenshtein(&distance)?;
            Ok(render::document(
                "fp relation-bound",
                json!({"presentation": presentation.display().to_string()}),
                json!({"value": fp::relation_bound(&p, &dist)}),
                None,
            ))
        }
        FpCommand::DeltaProbe {
            presentation,
            word_len,
            max_len,
            max_iter,
        } => {
            let p = load_presentation(&presentation)?;
            let caps = params::resolve_caps(max_len, max_iter)?;
            let probe = fp::delta_probe(&p, word_len, caps).map_err(|e| e.to_string())?;
            let distances: Vec<Value> = probe.distances.iter().copied().map(Value::from).collect();
            Ok(render::document(
                "fp delta-probe",
                json!({
                    "max_iter": caps.max_iter,
                    "max_len": caps.max_len,
                    "presentation": presentation.display().to_string(),
                    "word_len": word_len,
                }),
                json!({
                    "classes": probe.classes,
                    "distances": distances,
                    "skipped": probe.skipped,
                }),
                Some(probe.skipped == 0),
            ))
        }
    }
}

fn zs_scope_inputs(scope: &ZsScope, radius: u64) -> Value {
    json!({
        "g0": scope.g0.as_deref().map(Value::from).unwrap_or(Value::Null),
        "group": scope.group,
        "max_len": radius,
    })
}

fn run_zs(cmd: ZsCommand) -> Result<Value, String> {
    match cmd {
        ZsCommand::Atoms { scope } => {
            let group = params::group(&scope.group)?;
            let support = params::support(&group, scope.g0.as_deref())?;
            let radius = scope.max_len.unwrap_or(3 * group.order());
            let atoms = zerosum::atoms(&group, &support).map_err(|e| e.to_string())?;
            let kept: Vec<Value> = atoms
                .iter()
                .filter(|a| a.len() as u64 <= radius)
                .map(|a| Value::String(a.to_string()))
                .collect();
            Ok(render::document(
                "zs atoms",
                zs_scope_inputs(&scope, radius),
                json!({"atoms": kept, "count": kept.len()}),
                Some(true),
            ))
        }
        ZsCommand::Lengths { target } => {
            let group = params::group(&target.group)?;
            let seq = params::sequence(&group, &target.seq)?;
            let set = zerosum::length_set(&group, &seq).map_err(|e| e.to_string())?;
            Ok(render::document(
                "zs lengths",
                json!({"group": target.group, "seq": target.seq}),
                json!({"lengths": lengths_json(&set)}),
                Some(true),
            ))
        }
        ZsCommand::Catenary { target } => {
            let group = params::group(&target.group)?;
            let seq = params::sequence(&group, &target.seq)?;
            let value = zerosum::catenary(&group, &seq).map_err(|e| e.to_string())?;
            Ok(render::document(
                "zs catenary",
                json!({"group": target.group, "seq": target.seq}),
                json!({"value": value}),
                Some(true),
            ))
        }
        ZsCommand::Elasticity { scope } => {
            let group = params::group(&scope.group)?;
            let support = params::support(&group, scope.g0.as_deref())?;
            let radius = scope.max_len.unwrap_or(3 * group.order());
            let found = zerosum::accepted_elasticity(&group, &support, radius as usize)
                .map_err(|e| e.to_string())?;
            let witness = match &found.witness {
                Some(seq) => Value::String(seq.to_string()),
                None => Value::Null,
            };
            Ok(render::document(
                "zs elasticity",
                zs_scope_inputs(&scope, radius),
                json!({
                    "attained": found.witness.is_some(),
                    "value": render::ratio(found.value),
                    "witness": witness,
                }),
                Some(true),
            ))
        }
    }
}

fn suite_json(report: &SuiteReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "detail": c.detail,
                "name": c.name,
                "pass": c.pass,
            })
        })
        .collect();
    json!({"checks": checks, "suite": report.suite})
}

fn run_verify(cmd: VerifyCommand) -> Result<(Value, bool), String> {
    let (name, flags, runner): (_, _, fn(&SweepLimits) -> Vec<SuiteReport>) = match cmd {
        VerifyCommand::BnOracle(f) => ("bn-oracle", f, |l| vec![verify::bn_oracle(l)]),
        VerifyCommand::Catenary(f) => ("catenary", f, |l| vec![verify::catenary(l)]),
        VerifyCommand::Unions(f) => ("unions", f, |l| vec![verify::unions(l)]),
        VerifyCommand::Elasticity(f) => ("elasticity", f, |l| vec![verify::elasticity(l)]),
        VerifyCommand::Zerosum(f) => ("zerosum", f, |l| vec![verify::zerosum(l)]),
        VerifyCommand::All(f) => ("all", f, verify::all),
    };
    let defaults = SweepLimits::default();
    let limits = SweepLimits {
        n_max: flags.n_max.unwrap_or(defaults.n_max),
        size_max: flags.size_max.unwrap_or(defaults.size_max),
        seed: flags.seed.unwrap_or(defaults.seed),
    };
    if limits.n_max < 2 {
        return Err("--n-max must be at least 2".to_string());
    }
    if limits.size_max < 1 {
        return Err("--size-max must be at least 1".to_string());
    }
    let reports = runner(&limits);
    let all_pass = reports.iter().all(SuiteReport::passed);
    let failed: BTreeSet<String> = reports
        .iter()
        .flat_map(|r| r.checks.iter())
        .filter(|c| !c.pass)
        .map(|c| c.name.clone())
        .collect();
    let suites: Vec<Value> = reports.iter().map(suite_json).collect();
    let doc = render::document(
        &format!("verify {name}"),
        json!({
            "n_max": limits.n_max,
            "seed": limits.seed,
            "size_max": limits.size_max,
        }),
        json!({
            "failed_checks": failed.into_iter().map(Value::from).collect::<Vec<_>>(),
            "passed": all_pass,
            "suites": suites,
        }),
        None,
    );
    Ok((doc, all_pass))
}
