//! `extspin` — CI harness over the verification library.
//!
//! Exit codes: 0 all checks passed, 1 a verification failed, 2 bad
//! flags/config. Reports are JSON on stdout (or `--out PATH`) and are
//! byte-identical for identical (command, flags, seed), except for the
//! top-level `duration_ms` field.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use extspin::clifford::build_algebra;
use extspin::covariant::{equivalence_suite, ChannelBasis};
use extspin::dirac::{export_solution_space, FourMomentum, PlaneWaveProblem, Side};
use extspin::gauge::{
    current_vertex_suite, embedded_generators, identity_suite, lagrangian_lhs, lagrangian_rhs,
    FieldStrength, GaugeGroup, Mode,
};
use extspin::linalg::kronecker;
use extspin::symmetry::enumerate_scalars;
use extspin::{SVD_RANK_REL, TOL_ALGEBRAIC, TOL_NUMERIC};

#[derive(Parser)]
#[command(name = "extspin", version, about = "Verification suites for extended-spin-space Clifford algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Override a tolerance, e.g. --tolerance numeric=1e-9.
    /// Names: algebraic, numeric, svd_rank.
    #[arg(long, global = true, value_name = "NAME=VAL")]
    tolerance: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Anticommutation / Hermiticity / chirality suite for C_N.
    VerifyClifford(NArgs),
    /// Enumerate the scalar symmetry algebra and its chiral factors.
    Classify(NArgs),
    /// Solve the matrix plane-wave equations at one momentum.
    Solve(SolveArgs),
    /// Randomized vector-channel / free-Maxwell equivalence suite.
    Maxwell(TrialArgs),
    /// Kinetic-Lagrangian trace identity suite.
    Lagrangian(LagrangianArgs),
    /// Current and interaction-vertex dual-route suite.
    Vertex(VertexArgs),
}

#[derive(Args)]
struct NArgs {
    /// Clifford dimension N (even, >= 4).
    #[arg(long, default_value_t = 4)]
    n: usize,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Momentum as four comma-separated reals, e.g. 1,0,0,1.
    #[arg(long, default_value = "1,0,0,1")]
    k: String,
    #[arg(long, default_value_t = 0.0)]
    mass: f64,
}

#[derive(Args)]
struct TrialArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
}

#[derive(Args)]
struct LagrangianArgs {
    #[arg(long, default_value = "su2")]
    group: String,
    /// abstract: (spin)⊗(group); embedded: N=6 u(2) Clifford generators.
    #[arg(long, default_value = "abstract")]
    mode: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Insert the chiral projector as P_D; reports both sides without
    /// asserting equality.
    #[arg(long, default_value_t = false)]
    projected: bool,
}

#[derive(Args)]
struct VertexArgs {
    #[arg(long, default_value = "su2")]
    group: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
}

struct Tolerances {
    algebraic: f64,
    numeric: f64,
    svd_rank: f64,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_tolerances(specs: &[String]) -> Result<Tolerances, String> {
    let mut t = Tolerances {
        algebraic: TOL_ALGEBRAIC,
        numeric: TOL_NUMERIC,
        svd_rank: SVD_RANK_REL,
    };
    for s in specs {
        let (name, val) = s
            .split_once('=')
            .ok_or_else(|| format!("bad --tolerance {s:?}, expected NAME=VAL"))?;
        let val: f64 = val
            .parse()
            .map_err(|_| format!("bad tolerance value in {s:?}"))?;
        if !(val > 0.0) {
            return Err(format!("tolerance in {s:?} must be positive"));
        }
        match name {
            "algebraic" => t.algebraic = val,
            "numeric" => t.numeric = val,
            "svd_rank" => t.svd_rank = val,
            other => return Err(format!("unknown tolerance name {other:?}")),
        }
    }
    Ok(t)
}

fn parse_momentum(s: &str) -> Result<FourMomentum, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("--k expects four comma-separated reals, got {s:?}"));
    }
    let mut k = [0.0; 4];
    for (i, p) in parts.iter().enumerate() {
        k[i] = p
            .trim()
            .parse()
            .map_err(|_| format!("bad momentum component {p:?}"))?;
    }
    Ok(FourMomentum(k))
}

fn check_n(n: usize) -> Result<(), String> {
    if n < 4 || n % 2 != 0 {
        Err(format!("--n must be an even integer >= 4, got {n}"))
    } else {
        Ok(())
    }
}

fn emit(out: &Option<PathBuf>, report: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    match out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| format!("writing report: {e}")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    residual: f64,
    tolerance: f64,
    pass: bool,
}

fn check(name: &str, residual: f64, tolerance: f64) -> CheckLine {
    CheckLine {
        name: name.to_string(),
        residual,
        tolerance,
        pass: residual < tolerance,
    }
}

fn run(cli: &Cli, tol: &Tolerances) -> Result<(serde_json::Value, bool), String> {
    match &cli.command {
        Command::VerifyClifford(args) => {
            check_n(args.n)?;
            let alg = build_algebra(args.n).map_err(|e| e.to_string())?;
            let checks = vec![
                check("anticommutation", alg.anticommutation_residual(), tol.algebraic),
                check("hermiticity", alg.hermiticity_residual(), tol.algebraic),
                check("gamma5", alg.gamma5_residual(), tol.algebraic),
            ];
            let pass = checks.iter().all(|c| c.pass);
            let report = json!({
                "command": "verify-clifford",
                "n": args.n,
                "dim": alg.dim(),
                "checks": checks,
                "pass": pass,
            });
            Ok((report, pass))
        }
        Command::Classify(args) => {
            check_n(args.n)?;
            let alg = build_algebra(args.n).map_err(|e| e.to_string())?;
            let sym = enumerate_scalars(&alg).map_err(|e| e.to_string())?;
            let classification = sym.report();
            let expected = 1usize << (args.n - 4).min(63);
            let pass = classification.dim_right == expected
                && classification.dim_left == expected
                && classification.closure_residual < tol.numeric;
            let report = json!({
                "command": "classify",
                "n": args.n,
                "expected_chiral_dimension": expected,
                "classification": classification,
                "pass": pass,
            });
            Ok((report, pass))
        }
        Command::Solve(args) => {
            check_n(args.n)?;
            let k = parse_momentum(&args.k)?;
            let alg = build_algebra(args.n).map_err(|e| e.to_string())?;
            let problem = PlaneWaveProblem::new(&alg, k, args.mass);
            let left = problem.solution_space(Side::Left);
            let right = problem.solution_space(Side::Right);
            let both = problem.simultaneous_solutions();
            let on_shell = k.on_shell_residual(args.mass);
            // Klein-Gordon gate: nonempty kernels only occur on shell
            let kg_ok = left.is_empty() || on_shell < tol.numeric;
            let gram = problem.gram_residual(&left).max(problem.gram_residual(&right));
            let pass = kg_ok && gram < tol.numeric && left.len() == right.len();
            let report = json!({
                "command": "solve",
                "n": args.n,
                "k": k.0,
                "mass": args.mass,
                "on_shell_residual": on_shell,
                "left": export_solution_space(&problem, &left),
                "right": export_solution_space(&problem, &right),
                "simultaneous_dimension": both.len(),
                "gram_residual": gram,
                "klein_gordon_gate": kg_ok,
                "pass": pass,
            });
            Ok((report, pass))
        }
        Command::Maxwell(args) => {
            if args.trials < 1 {
                return Err("--trials must be >= 1".into());
            }
            let alg = build_algebra(4).map_err(|e| e.to_string())?;
            let basis = ChannelBasis::new(&alg).map_err(|e| e.to_string())?;
            let ortho = basis.polarization_orthonormality_residual();
            let suite = equivalence_suite(&alg, args.seed, args.trials, tol.numeric);
            let pass = suite.counterexamples.is_empty() && ortho < tol.algebraic;
            let report = json!({
                "command": "maxwell",
                "seed": args.seed,
                "polarization_orthonormality_residual": ortho,
                "equivalence": suite,
                "pass": pass,
            });
            Ok((report, pass))
        }
        Command::Lagrangian(args) => {
            if args.trials < 1 {
                return Err("--trials must be >= 1".into());
            }
            let mode = match args.mode.as_str() {
                "abstract" => Mode::Abstract,
                "embedded" => Mode::Embedded,
                other => return Err(format!("unknown mode {other:?}")),
            };
            let (alg, group) = match mode {
                Mode::Abstract => {
                    let alg = build_algebra(4).map_err(|e| e.to_string())?;
                    let group = GaugeGroup::by_name(&args.group).map_err(|e| e.to_string())?;
                    (alg, group)
                }
                Mode::Embedded => {
                    let alg = build_algebra(6).map_err(|e| e.to_string())?;
                    let group = embedded_generators(&alg).map_err(|e| e.to_string())?;
                    (alg, group)
                }
            };
            let suite =
                identity_suite(&group, &alg, mode, args.seed, args.trials).map_err(|e| e.to_string())?;
            let pass = suite.max_rel_error < tol.numeric
                && group.closure_residual() < tol.algebraic;
            let mut projected = serde_json::Value::Null;
            if args.projected {
                // P_D = chiral projector; both values reported, equality
                // deliberately not asserted.
                let mut rng = extspin::seeding::trial_rng(args.seed, u64::MAX);
                let f = FieldStrength::random(group.num_generators(), &mut rng);
                let p_d = match mode {
                    Mode::Abstract => kronecker(
                        alg.chiral_projector(true),
                        &extspin::linalg::ident(group.flavor_dim()),
                    ),
                    Mode::Embedded => alg.chiral_projector(true).clone(),
                };
                let lhs = lagrangian_lhs(&f);
                let rhs = lagrangian_rhs(&f, &group, &alg, mode, Some(&p_d))
                    .map_err(|e| e.to_string())?;
                projected = json!({"lhs": lhs, "rhs_projected": rhs});
            }
            let report = json!({
                "command": "lagrangian",
                "seed": args.seed,
                "group_closure_residual": group.closure_residual(),
                "identity": suite,
                "projected_sample": projected,
                "pass": pass,
            });
            Ok((report, pass))
        }
        Command::Vertex(args) => {
            if args.trials < 1 {
                return Err("--trials must be >= 1".into());
            }
            let alg = build_algebra(4).map_err(|e| e.to_string())?;
            let group = GaugeGroup::by_name(&args.group).map_err(|e| e.to_string())?;
            let suite = current_vertex_suite(&alg, &group, args.seed, args.trials)
                .map_err(|e| e.to_string())?;
            let pass = suite.max_current_residual < tol.algebraic
                && suite.max_current_imag < tol.algebraic
                && suite.max_vertex_residual < tol.numeric;
            let report = json!({
                "command": "vertex",
                "seed": args.seed,
                "suite": suite,
                "pass": pass,
            });
            Ok((report, pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match parse_tolerances(&cli.tolerance) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    let start = Instant::now();
    match run(&cli, &tol) {
        Ok((mut report, pass)) => {
            report["duration_ms"] = json!(start.elapsed().as_millis() as u64);
            if let Err(e) = emit(&cli.out, &report) {
                return usage_error(&e);
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => usage_error(&e),
    }
}
