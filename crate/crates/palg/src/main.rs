//! Command-line front end for the P-algebra workbench.
//!
//! Subcommands cover proof checking (`check-proof`), proof search (`prove`),
//! semantic validity (`validate`, `countermodel`), the law suites (`laws`),
//! finite-model enumeration (`enumerate`), and the formula quotient
//! (`quotient`). Exit codes: `0` = success/pass (for `countermodel`, a found
//! witness *is* the success), `1` = refuted / countermodel missing / check
//! failed / proof not found, `2` = usage error.
//!
//! Every randomized command takes `--seed` (default from `PALG_SEED`, then a
//! fixed constant) and echoes the seed it used, so runs are reproducible.
//! `--json` switches the report commands to a single machine-readable
//! document on stdout.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use palgebra::finite::enumerate_palgebras;
use palgebra::formula::{formula_universe, parse_sequent};
use palgebra::kernel::script::{parse_script, print_script};
use palgebra::kernel::{check_proof, ProofScript};
use palgebra::laws::{run_suite, LawStatus, Suite};
use palgebra::model::{model_by_name, ModelOptions, PAlgebra};
use palgebra::search::{equiv_classes, prove, SearchBudget};
use palgebra::semantics::{
    countermodel_search, validity_check, validity_sample, Validity, ValidityBudget, ValidityError,
};
use palgebra::sequent::jump_normalize;

/// Fallback seed when neither `--seed` nor `PALG_SEED` is given.
const DEFAULT_SEED: u64 = 0xD3FA017;

#[derive(Parser)]
#[command(name = "palg", version, about = "P-algebra workbench", max_term_width = 100)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores). Output is
    /// deterministic regardless of this value.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for randomized commands; falls back to $PALG_SEED, then a fixed
    /// default.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a proof script file (or every *.proof file in a directory).
    CheckProof {
        /// A .proof file, or a directory of them.
        path: PathBuf,
    },
    /// Search for a derivation of a sequent; prints the script on success.
    Prove {
        /// The goal, e.g. "a & b, ~b |-" (a right side is jump-normalized).
        sequent: String,
        /// Maximum rule applications along a branch.
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Maximum analytic cut candidates.
        #[arg(long, default_value_t = 12)]
        cuts: usize,
        /// Wall-clock cap in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        time_ms: u64,
    },
    /// Check a sequent's validity in one model (exhaustive where possible,
    /// honestly sampled otherwise).
    Validate {
        /// The sequent, e.g. "a |- a, a".
        sequent: String,
        /// Model spec: mo:<k>, subspace:dim=<n>, bool2, or file:<path>.
        #[arg(long)]
        model: String,
        /// Random assignments when sampling.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Emit one JSON document instead of report rows.
        #[arg(long)]
        json: bool,
    },
    /// Search the model zoo for a countermodel (finding one is exit 0).
    Countermodel {
        /// The sequent to refute.
        sequent: String,
        /// Random assignments per non-enumerable model.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Emit one JSON document instead of report rows.
        #[arg(long)]
        json: bool,
    },
    /// Run the law suites against one model.
    Laws {
        /// Model spec: mo:<k>, subspace:dim=<n>, bool2, or file:<path>.
        #[arg(long)]
        model: String,
        /// Restrict to one suite (default: all).
        #[arg(long)]
        suite: Option<SuiteArg>,
        /// Tuples per law on non-enumerable models.
        #[arg(long, default_value_t = 500)]
        budget: usize,
        /// Emit one JSON document instead of report rows.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every P-algebra table of exactly the given size.
    Enumerate {
        /// Carrier size (2–6).
        #[arg(long)]
        size: usize,
        /// Write each table as a .palg file into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition all formulas up to a syntax height into provable-equivalence
    /// classes.
    Quotient {
        /// Number of atoms (1–3, named a, b, c).
        #[arg(long)]
        atoms: usize,
        /// Maximum syntax height (leaves count 1, so 2 = one connective).
        #[arg(long)]
        depth: usize,
        /// Search depth per implication.
        #[arg(long, default_value_t = 8)]
        search_depth: usize,
        /// Wall-clock cap per implication search, in milliseconds. Pairs that
        /// exhaust it land in the "unknown" bucket rather than stalling the
        /// command.
        #[arg(long, default_value_t = 1_000)]
        time_ms: u64,
        /// Emit one JSON document instead of report rows.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Theorems,
    Appendices,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Axioms => Suite::Axioms,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::Appendices => Suite::Appendices,
        }
    }
}

/// A usage error (exit 2) naming the offending flag.
fn usage(flag: &str, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {flag}: {msg}");
    ExitCode::from(2)
}

fn resolve_seed(cli_seed: Option<u64>) -> u64 {
    cli_seed
        .or_else(|| std::env::var("PALG_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(DEFAULT_SEED)
}

fn load_model(spec: &str) -> Result<Box<dyn PAlgebra + Send + Sync>, ExitCode> {
    model_by_name(spec, ModelOptions::default()).map_err(|e| usage("--model", e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return usage("--jobs", "must be at least 1");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            return usage("--jobs", e);
        }
    }
    let seed = resolve_seed(cli.seed);
    match cli.cmd {
        Cmd::CheckProof { path } => check_proof_cmd(&path),
        Cmd::Prove {
            sequent,
            depth,
            cuts,
            time_ms,
        } => prove_cmd(&sequent, depth, cuts, time_ms),
        Cmd::Validate {
            sequent,
            model,
            trials,
            json,
        } => validate_cmd(&sequent, &model, trials, seed, json),
        Cmd::Countermodel {
            sequent,
            samples,
            json,
        } => countermodel_cmd(&sequent, samples, seed, json),
        Cmd::Laws {
            model,
            suite,
            budget,
            json,
        } => laws_cmd(&model, suite, budget, seed, json),
        Cmd::Enumerate { size, out } => enumerate_cmd(size, out.as_deref()),
        Cmd::Quotient {
            atoms,
            depth,
            search_depth,
            time_ms,
            json,
        } => quotient_cmd(atoms, depth, search_depth, time_ms, seed, json),
    }
}

/// Parse + kernel-check one script file; returns the script on success.
fn check_one(path: &Path) -> Result<ProofScript, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let script = parse_script(&text).map_err(|e| e.to_string())?;
    check_proof(&script).map_err(|e| e.to_string())?;
    Ok(script)
}

fn check_proof_cmd(path: &Path) -> ExitCode {
    let files: Vec<PathBuf> = if path.is_dir() {
        let mut fs: Vec<PathBuf> = match std::fs::read_dir(path) {
            Ok(entries) => entries
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().is_some_and(|x| x == "proof"))
                .collect(),
            Err(e) => return usage("<path>", e),
        };
        fs.sort();
        if fs.is_empty() {
            return usage("<path>", format!("no .proof files in {}", path.display()));
        }
        fs
    } else {
        vec![path.to_path_buf()]
    };

    let mut failures = 0;
    for file in &files {
        match check_one(file) {
            Ok(script) => println!("ok   {} ({})", file.display(), script.goal),
            Err(msg) => {
                println!("FAIL {}: {msg}", file.display());
                failures += 1;
            }
        }
    }
    if files.len() > 1 {
        println!("checked {} scripts, {failures} failed", files.len());
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn prove_cmd(sequent: &str, depth: usize, cuts: usize, time_ms: u64) -> ExitCode {
    let surface = match parse_sequent(sequent) {
        Ok(s) => s,
        Err(e) => return usage("<sequent>", e),
    };
    if depth == 0 {
        return usage("--depth", "must be at least 1");
    }
    if cuts == 0 {
        return usage("--cuts", "must be at least 1");
    }
    if time_ms == 0 {
        return usage("--time-ms", "must be at least 1");
    }
    let goal = jump_normalize(&surface);
    let budget = SearchBudget {
        max_depth: depth,
        max_cut_formulas: cuts,
        time_cap: std::time::Duration::from_millis(time_ms),
    };
    match prove(&goal, &budget) {
        Some(script) => {
            print!("{}", print_script(&script));
            ExitCode::SUCCESS
        }
        None => {
            println!(
                "not found: {goal} (depth {depth}, cuts {cuts}, {time_ms} ms) — not a disproof"
            );
            ExitCode::from(1)
        }
    }
}

fn validate_cmd(sequent: &str, model: &str, trials: usize, seed: u64, json: bool) -> ExitCode {
    let surface = match parse_sequent(sequent) {
        Ok(s) => s,
        Err(e) => return usage("<sequent>", e),
    };
    let m = match load_model(model) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let budget = ValidityBudget {
        samples: trials,
        seed,
    };
    let (verdict, mode) = match validity_check(m.as_ref(), &surface, &budget) {
        Ok(v @ Validity::Valid { .. }) => (v, "exhaustive"),
        Ok(v @ Validity::Countermodel(_)) => (v, "exhaustive-or-sampled"),
        Ok(v @ Validity::Exhausted { .. }) => (v, "sampled"),
        Err(e @ ValidityError::CapExceeded { .. }) => {
            eprintln!("note: {e}; falling back to sampling");
            (validity_sample(m.as_ref(), &surface, &budget), "sampled")
        }
    };
    match verdict {
        Validity::Valid { assignments } => {
            if json {
                println!(
                    "{}",
                    json!({"sequent": surface.to_string(), "model": m.name(),
                           "verdict": "valid", "mode": mode,
                           "assignments": assignments, "seed": seed})
                );
            } else {
                println!(
                    "valid {} in {} — all {assignments} assignments ({mode}), seed {seed}",
                    surface,
                    m.name()
                );
            }
            ExitCode::SUCCESS
        }
        Validity::Countermodel(v) => {
            if json {
                println!(
                    "{}",
                    json!({"sequent": surface.to_string(), "model": m.name(),
                           "verdict": "countermodel", "assignment": v.describe(m.as_ref()),
                           "seed": seed})
                );
            } else {
                println!(
                    "countermodel {} in {}: {}, seed {seed}",
                    surface,
                    m.name(),
                    v.describe(m.as_ref())
                );
            }
            ExitCode::from(1)
        }
        Validity::Exhausted { samples } => {
            if json {
                println!(
                    "{}",
                    json!({"sequent": surface.to_string(), "model": m.name(),
                           "verdict": "no-countermodel-found", "mode": mode,
                           "samples": samples, "seed": seed})
                );
            } else {
                println!(
                    "no countermodel {} in {} — {samples} samples (not a validity certificate), seed {seed}",
                    surface,
                    m.name()
                );
            }
            ExitCode::SUCCESS
        }
    }
}

fn countermodel_cmd(sequent: &str, samples: usize, seed: u64, json: bool) -> ExitCode {
    let surface = match parse_sequent(sequent) {
        Ok(s) => s,
        Err(e) => return usage("<sequent>", e),
    };
    let budget = ValidityBudget { samples, seed };
    match countermodel_search(&surface, &budget) {
        Some(w) => {
            if json {
                println!(
                    "{}",
                    json!({"sequent": surface.to_string(), "found": true,
                           "model": w.model, "assignment": w.text, "seed": seed})
                );
            } else {
                println!("countermodel {}: {}, seed {seed}", surface, w.text);
            }
            ExitCode::SUCCESS
        }
        None => {
            if json {
                println!(
                    "{}",
                    json!({"sequent": surface.to_string(), "found": false, "seed": seed})
                );
            } else {
                println!("no countermodel found for {surface} in the zoo, seed {seed}");
            }
            ExitCode::from(1)
        }
    }
}

fn laws_cmd(model: &str, suite: Option<SuiteArg>, budget: usize, seed: u64, json: bool) -> ExitCode {
    if budget == 0 {
        return usage("--budget", "must be at least 1");
    }
    let m = match load_model(model) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let reports = run_suite(m.as_ref(), suite.map(Suite::from), budget, seed);
    let failed = reports
        .iter()
        .filter(|r| matches!(r.status, LawStatus::Fail { .. }))
        .count();
    if json {
        let rows: Vec<_> = reports
            .iter()
            .map(|r| {
                json!({"id": r.id, "status": match &r.status {
                    LawStatus::Pass => "pass".to_string(),
                    LawStatus::Fail { witness } => format!("fail: {}", witness.join(", ")),
                    LawStatus::Skipped { reason } => format!("skipped: {reason}"),
                }, "trials": r.trials, "seed": r.seed})
            })
            .collect();
        println!(
            "{}",
            json!({"model": m.name(), "reports": rows, "failed": failed})
        );
    } else {
        for r in &reports {
            println!("{}", r.line());
        }
        println!(
            "{}: {} laws, {failed} failed, seed {seed}",
            m.name(),
            reports.len()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn enumerate_cmd(size: usize, out: Option<&Path>) -> ExitCode {
    let tables = match enumerate_palgebras(size) {
        Ok(t) => t,
        Err(e) => return usage("--size", e),
    };
    for t in &tables {
        println!("{} (size {})", t.name(), t.size());
    }
    println!("{} tables of size {size}", tables.len());
    if let Some(dir) = out {
        if let Err(e) = std::fs::create_dir_all(dir) {
            return usage("--out", e);
        }
        for t in &tables {
            let file = dir.join(format!("{}.palg", t.name().replace(['/', ':'], "_")));
            if let Err(e) = std::fs::write(&file, t.save()) {
                return usage("--out", e);
            }
        }
        println!("wrote {} files to {}", tables.len(), dir.display());
    }
    ExitCode::SUCCESS
}

fn quotient_cmd(
    atoms: usize,
    depth: usize,
    search_depth: usize,
    time_ms: u64,
    seed: u64,
    json: bool,
) -> ExitCode {
    if atoms == 0 || atoms > 3 {
        return usage("--atoms", "must be between 1 and 3");
    }
    if depth == 0 {
        return usage("--depth", "must be at least 1");
    }
    if search_depth == 0 {
        return usage("--search-depth", "must be at least 1");
    }
    if time_ms == 0 {
        return usage("--time-ms", "must be at least 1");
    }
    let names: Vec<&str> = ["a", "b", "c"][..atoms].to_vec();
    let universe = formula_universe(&names, depth);
    if universe.len() > 100 {
        return usage(
            "--depth",
            format!(
                "{} formulas is beyond desk scale (max 100); lower --depth or --atoms",
                universe.len()
            ),
        );
    }
    let budget = SearchBudget {
        max_depth: search_depth,
        time_cap: std::time::Duration::from_millis(time_ms),
        ..Default::default()
    };
    let report = equiv_classes(&universe, &budget);
    if json {
        let classes: Vec<Vec<String>> = report
            .classes
            .iter()
            .map(|c| c.iter().map(|f| f.to_string()).collect())
            .collect();
        let unknown: Vec<[String; 2]> = report
            .unknown
            .iter()
            .map(|(f, g)| [f.to_string(), g.to_string()])
            .collect();
        println!(
            "{}",
            json!({"formulas": universe.len(), "classes": classes,
                   "unknown": unknown, "seed": seed})
        );
    } else {
        for (i, class) in report.classes.iter().enumerate() {
            let members: Vec<String> = class.iter().map(|f| f.to_string()).collect();
            println!("class {i}: {}", members.join("  ≡  "));
        }
        for (f, g) in &report.unknown {
            println!("unknown: {f}  ≟  {g}");
        }
        println!(
            "{} formulas, {} classes, {} unknown pairs, seed {seed}",
            universe.len(),
            report.classes.len(),
            report.unknown.len()
        );
    }
    ExitCode::SUCCESS
}
