//! The `conekit` command-line tool: `describe` prints the derived data for
//! a configuration, `sweep` tabulates the cone angle and its companions
//! over a grid of half-widths (bit-exact CSV, optional SVG plot), and
//! `verify` runs every invariant suite and reports pass/fail through the
//! exit code.

// Run errors embed the library's exact error values; they cross the stack
// once per command, so their size is irrelevant.
#![allow(clippy::result_large_err)]

mod config;
mod render;

pub use config::{load_config, ParseError, RunConfig, SweepRange};
pub use render::{format_csv, poly_string, render_svg, SweepRow, CSV_HEADER};

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use conekit_core::{
    analyze_setup, classical_futaki, cone_angle_identity, fit_cone_exponent,
    max_admissible_half_width, rational_to_f64, run_random_suite, solve_csck_conical,
    solve_extremal, CaseReport, Error as CoreError, MomentumData, PositivityCertificate,
};
use num_traits::Signed;

#[derive(Parser)]
#[command(
    name = "conekit",
    version,
    about = "Exact momentum-profile metrics on projective line bundles: sweeps, plots, certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the derived data for a configuration: Q, RQ, moments, bounds
    Describe { config: PathBuf },
    /// Compute the grid sweep and write the CSV (and optionally the plot)
    Sweep {
        config: PathBuf,
        /// Also write the (b, beta) SVG plot
        #[arg(long)]
        svg: bool,
    },
    /// Run the invariant suites; exit 0 iff every check passes
    Verify {
        /// Optional configuration whose grid points are certified too
        config: Option<PathBuf>,
        /// Seed for the randomized suite (overrides the config's seed)
        #[arg(long)]
        seed: Option<u64>,
        /// Number of randomized cases
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

/// Anything that can end a run early, mapped onto exit codes: usage and
/// configuration problems exit 2, failed mathematics exits 1.
#[derive(Debug)]
enum RunError {
    Config(ParseError),
    Core {
        context: Option<String>,
        source: CoreError,
    },
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Check(String),
}

impl RunError {
    fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) | RunError::Io { .. } => 2,
            RunError::Core { .. } | RunError::Check(_) => 1,
        }
    }
}

/// The variant name, so failure reports name the violated contract.
fn error_tag(e: &CoreError) -> &'static str {
    match e {
        CoreError::InvalidInterval => "InvalidInterval",
        CoreError::ZeroPolynomial => "ZeroPolynomial",
        CoreError::Overflow => "Overflow",
        CoreError::InvalidRationalLiteral { .. } => "InvalidRationalLiteral",
        CoreError::DegenerateInterval { .. } => "DegenerateInterval",
        CoreError::PoleAtTau { .. } => "PoleAtTau",
        CoreError::PositivityFailure { .. } => "PositivityFailure",
        CoreError::InternalInconsistency { .. } => "InternalInconsistency",
        CoreError::DegenerateDenominator => "DegenerateDenominator",
        CoreError::NonPositiveProfile { .. } => "NonPositiveProfile",
        CoreError::Precondition(_) => "Precondition",
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Config(e) => write!(f, "{e}"),
            RunError::Core {
                context: Some(c),
                source,
            } => write!(f, "{c}: error[{}]: {}", error_tag(source), source),
            RunError::Core {
                context: None,
                source,
            } => write!(f, "error[{}]: {}", error_tag(source), source),
            RunError::Io { path, source } => {
                write!(f, "cannot write {}: {}", path.display(), source)
            }
            RunError::Check(message) => write!(f, "{message}"),
        }
    }
}

fn core_err(context: Option<String>, source: CoreError) -> RunError {
    RunError::Core { context, source }
}

/// Parses arguments from the process environment, runs the selected
/// command, and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(report) => {
            print!("{report}");
            0
        }
        Err(err) => {
            eprintln!("conekit: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<String, RunError> {
    match cli.command {
        Command::Describe { config } => {
            let cfg = load_config(&config).map_err(RunError::Config)?;
            cmd_describe(&cfg)
        }
        Command::Sweep { config, svg } => {
            let cfg = load_config(&config).map_err(RunError::Config)?;
            cmd_sweep(&cfg, svg)
        }
        Command::Verify {
            config,
            seed,
            cases,
        } => cmd_verify(config.as_deref(), seed, cases),
    }
}

fn cmd_describe(cfg: &RunConfig) -> Result<String, RunError> {
    let rep_b = match &cfg.range {
        SweepRange::Single(b) => b.clone(),
        SweepRange::Grid { b_max, .. } => b_max.clone(),
    };
    let setup = cfg
        .setup_at(&rep_b)
        .map_err(|e| core_err(Some(format!("at b = {rep_b}")), e))?;
    let data = MomentumData::from_setup(&setup);

    let mut out = String::new();
    out += &format!("config: {}\n", cfg.name);
    out += "factors (dim, einstein constant, twisting exponent):\n";
    for f in cfg.factors.iter() {
        out += &format!("  ({}, {}, {})\n", f.dim(), f.einstein(), f.exponent());
    }
    out += &format!("Q  = {}\n", poly_string(data.q()));
    out += &format!("RQ = {}\n", poly_string(data.rq()));
    match max_admissible_half_width(&cfg.factors) {
        Some(bound) => out += &format!("admissible half-width bound: b_max = {bound}\n"),
        None => out += "admissible half-width bound: none (all exponents zero)\n",
    }
    match &cfg.range {
        SweepRange::Single(b) => out += &format!("half-width: b = {b}\n"),
        SweepRange::Grid {
            b_min,
            b_max,
            grid_points,
        } => {
            out += &format!("sweep: b from {b_min} to {b_max} in {grid_points} grid points\n");
        }
    }
    out += &format!(
        "moments at b = {}: A = {}, B = {}, C = {}\n",
        rep_b,
        data.moment_a(),
        data.moment_b(),
        data.moment_c()
    );
    Ok(out)
}

fn certificate_clean(c: &PositivityCertificate) -> bool {
    c.interior_root_count == 0 && c.midpoint_value.is_positive()
}

/// Computes every sweep row, aborting on the first row whose construction
/// fails or whose exact identity does not hold.
fn compute_rows(cfg: &RunConfig) -> Result<Vec<SweepRow>, RunError> {
    let grid = cfg.range.grid();
    let mut rows = Vec::with_capacity(grid.len());
    for b in &grid {
        let ctx = || Some(format!("row b = {b}"));
        let setup = cfg.setup_at(b).map_err(|e| core_err(ctx(), e))?;
        let data = MomentumData::from_setup(&setup);
        let extremal = solve_extremal(&data).map_err(|e| core_err(ctx(), e))?;
        let conical = solve_csck_conical(&data).map_err(|e| core_err(ctx(), e))?;

        let angle = cone_angle_identity(&data, &extremal);
        let identity_ok = angle.ok && conical.beta == angle.beta_construction;
        if !identity_ok {
            return Err(RunError::Check(format!(
                "row b = {b}: exact angle identity failed (construction {}, obstruction {})",
                angle.beta_construction, angle.beta_futaki
            )));
        }
        let positivity_ok =
            certificate_clean(&extremal.positivity) && certificate_clean(&conical.positivity);

        let fut_classical = classical_futaki(&data, &extremal, &cfg.a, cfg.vol_m)
            .map_err(|e| core_err(ctx(), e))?;
        let asympt_rel_err = if cfg.exact_only {
            f64::NAN
        } else {
            fit_cone_exponent(&conical.phi_q, &data, &conical.beta, 1e-6, 10_000)
                .map_err(|e| core_err(ctx(), e))?
                .relative_error
        };

        rows.push(SweepRow {
            b: b.clone(),
            beta: conical.beta,
            sigma0_csck: conical.sigma0_prime,
            lambda_ext: extremal.lambda,
            sigma0_ext: extremal.sigma0,
            positivity_ok,
            identity_ok,
            fut_classical,
            asympt_rel_err,
        });
    }
    Ok(rows)
}

fn cmd_sweep(cfg: &RunConfig, want_svg: bool) -> Result<String, RunError> {
    let rows = compute_rows(cfg)?;
    let csv = format_csv(&rows);
    std::fs::write(&cfg.csv_path, csv).map_err(|source| RunError::Io {
        path: cfg.csv_path.clone(),
        source,
    })?;
    let plural = if rows.len() == 1 { "row" } else { "rows" };
    let mut out = format!(
        "wrote {} ({} {plural})\n",
        cfg.csv_path.display(),
        rows.len()
    );

    if want_svg {
        let points: Vec<(f64, f64)> = rows
            .iter()
            .map(|r| {
                let b = rational_to_f64(&r.b).expect("grid value fits in a double");
                let beta = rational_to_f64(&r.beta).expect("angle fits in a double");
                (b, beta)
            })
            .collect();
        let svg = render_svg(&cfg.name, &points);
        std::fs::write(&cfg.svg_path, svg).map_err(|source| RunError::Io {
            path: cfg.svg_path.clone(),
            source,
        })?;
        out += &format!("wrote {}\n", cfg.svg_path.display());
    }
    Ok(out)
}

fn cmd_verify(config: Option<&Path>, seed: Option<u64>, cases: usize) -> Result<String, RunError> {
    let mut out = String::new();
    let mut failures: Vec<String> = Vec::new();
    let mut effective_seed = seed.unwrap_or(0);

    if let Some(path) = config {
        let cfg = load_config(path).map_err(RunError::Config)?;
        if seed.is_none() {
            effective_seed = cfg.seed;
        }
        let grid = cfg.range.grid();
        let plural = if grid.len() == 1 { "point" } else { "points" };
        out += &format!(
            "config checks: {} ({} grid {plural})\n",
            cfg.name,
            grid.len()
        );
        for b in &grid {
            let setup = cfg
                .setup_at(b)
                .map_err(|e| core_err(Some(format!("b = {b}")), e))?;
            let report =
                analyze_setup(&setup).map_err(|e| core_err(Some(format!("b = {b}")), e))?;
            if !report.ok() {
                failures.push(format!("config case {}: {report:?}", report.label));
            }
        }
        out += &format!(
            "  all invariants on {} grid {plural}: {}\n",
            grid.len(),
            if failures.is_empty() { "ok" } else { "FAIL" }
        );
    }

    let outcome = run_random_suite(effective_seed, cases);
    out += &format!(
        "randomized suite: seed {effective_seed}, {} certified cases, {} raw draws\n",
        outcome.reports.len(),
        outcome.raw_identity_checks
    );
    type Check = (&'static str, fn(&CaseReport) -> bool);
    let checks: [Check; 6] = [
        ("exact angle identity", |r| r.identity_ok),
        ("positivity certificates", |r| r.positivity_ok),
        ("boundary conditions", |r| r.boundary_ok),
        ("structural inequalities", |r| r.structure_ok),
        ("log obstruction vanishing", |r| r.log_futaki_ok),
        ("numeric cross-validation", |r| r.moments_ok),
    ];
    for (name, get) in checks {
        match outcome.reports.iter().find(|r| !get(r)) {
            None => out += &format!("  {name}: ok ({} cases)\n", outcome.reports.len()),
            Some(report) => {
                out += &format!("  {name}: FAIL ({})\n", report.label);
                failures.push(format!("{name} failed on {}", report.label));
            }
        }
    }
    let raw_ok = outcome.raw_identity_failures == 0;
    out += &format!(
        "  raw-draw angle identity: {} ({} draws)\n",
        if raw_ok { "ok" } else { "FAIL" },
        outcome.raw_identity_checks
    );
    if !raw_ok {
        failures.push(format!(
            "raw-draw angle identity failed on {} of {} draws",
            outcome.raw_identity_failures, outcome.raw_identity_checks
        ));
    }

    if failures.is_empty() {
        out += "verify: PASS\n";
        Ok(out)
    } else {
        out += "verify: FAIL\n";
        Err(RunError::Check(format!(
            "{out}first failing invariant: {}",
            failures[0]
        )))
    }
}
