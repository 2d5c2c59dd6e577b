//! Command-line front-end: triangle and tetrahedron solvers, orbit
//! generation, lattice evolution, the continuum-limit measurement and the
//! full verification battery.
//!
//! Exit codes: 0 when every executed check passes its tolerance, 1 when a
//! tolerance fails, 2 on usage errors. Angles are radians unless
//! `--degrees` is given. Every subcommand accepts `--config FILE.json`
//! with keys mirroring the flag names; explicit flags override the file,
//! and unknown keys are rejected.

use crate::darboux::{self, LatticeDocument, Variant};
use crate::euler::{self, LimitMap};
use crate::gram::{self, GramKind, GramMatrix};
use crate::tetra::{self, CosSextuple};
use crate::triangle::{self, CosTriple, TriangleMap};
use crate::verify::{self, VerifyConfig};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "sphertop",
    version,
    about = "Cosine-law maps of spherical triangles and tetrahedra as discrete integrable systems"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Triangle solver and orbits.
    Triangle {
        #[command(subcommand)]
        cmd: TriangleCmd,
    },
    /// Tetrahedron solver and orbits.
    Tetra {
        #[command(subcommand)]
        cmd: TetraCmd,
    },
    /// Lattice evolution of the discrete Darboux systems.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Verification battery.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
    /// Order of consistency of a map against its continuous limit.
    Limit(LimitArgs),
}

#[derive(Subcommand)]
enum TriangleCmd {
    /// Solve a triangle from its angles or its sides.
    Solve(TriangleSolveArgs),
    /// Iterate a triangle map, writing one CSV row per step.
    Orbit(TriangleOrbitArgs),
}

#[derive(Args)]
struct TriangleSolveArgs {
    /// Three angles, comma-separated.
    #[arg(long, value_name = "a,b,c", allow_hyphen_values = true)]
    angles: Option<String>,
    /// Three side lengths, comma-separated.
    #[arg(long, value_name = "a,b,c", allow_hyphen_values = true)]
    sides: Option<String>,
    /// Interpret inputs as degrees.
    #[arg(long)]
    degrees: bool,
    #[arg(long, value_name = "FILE.json")]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct TriangleSolveConfig {
    angles: Option<Vec<f64>>,
    sides: Option<Vec<f64>>,
    degrees: Option<bool>,
}

#[derive(Args)]
struct TriangleOrbitArgs {
    /// Initial cosines, comma-separated.
    #[arg(long, value_name = "a,b,c", allow_hyphen_values = true)]
    x: Option<String>,
    /// Which map to iterate.
    #[arg(long, value_parser = ["phi", "hk", "jonas"])]
    map: Option<String>,
    #[arg(long)]
    steps: Option<usize>,
    /// CSV output file (stdout when absent).
    #[arg(long, value_name = "FILE.csv")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "FILE.json")]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct OrbitConfig {
    x: Option<Vec<f64>>,
    map: Option<String>,
    steps: Option<usize>,
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TetraCmd {
    /// Solve a tetrahedron from its six dihedral angles.
    Solve(TetraSolveArgs),
    /// Iterate the tetrahedral cosine-law map.
    Orbit(TetraOrbitArgs),
}

#[derive(Args)]
struct TetraSolveArgs {
    /// Six dihedral angles in pair order 12,13,23,14,24,34.
    #[arg(long, value_name = "6 values", allow_hyphen_values = true)]
    dihedral: Option<String>,
    #[arg(long)]
    degrees: bool,
    #[arg(long, value_name = "FILE.json")]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct TetraSolveConfig {
    dihedral: Option<Vec<f64>>,
    degrees: Option<bool>,
}

#[derive(Args)]
struct TetraOrbitArgs {
    /// Initial cosines in pair order 12,13,23,14,24,34.
    #[arg(long, value_name = "6 values", allow_hyphen_values = true)]
    x: Option<String>,
    /// Which map to iterate (only psi is defined here).
    #[arg(long, value_parser = ["psi"])]
    map: Option<String>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, value_name = "FILE.csv")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "FILE.json")]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Fill a box from boundary data on the coordinate planes.
    Evolve(LatticeEvolveArgs),
}

#[derive(Args)]
struct LatticeEvolveArgs {
    /// Boundary document (extent + planes).
    #[arg(long, value_name = "FILE.json")]
    init: Option<PathBuf>,
    /// Output document (same schema plus the interior).
    #[arg(long, value_name = "FILE.json")]
    out: Option<PathBuf>,
    #[arg(long, value_parser = ["symmetric", "general", "alt"])]
    variant: Option<String>,
    #[arg(long, value_name = "FILE.json")]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct LatticeEvolveConfig {
    init: Option<PathBuf>,
    out: Option<PathBuf>,
    variant: Option<String>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every suite in the battery.
    All(VerifyAllArgs),
}

#[derive(Args)]
struct VerifyAllArgs {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Write the aggregated report as JSON.
    #[arg(long, value_name = "FILE.json")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "FILE.json")]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct VerifyAllConfig {
    seed: Option<u64>,
    samples: Option<usize>,
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LimitArgs {
    /// Which discretization to measure.
    #[arg(long, value_parser = ["phi_eps", "psi"])]
    map: Option<String>,
    /// Starting point (3 values for phi_eps, 6 for psi).
    #[arg(long, value_name = "values", allow_hyphen_values = true)]
    x0: Option<String>,
    /// Scales to fit the log-log slope over.
    #[arg(long, value_name = "e1,e2,...", allow_hyphen_values = true)]
    eps_list: Option<String>,
    #[arg(long, value_name = "FILE.json")]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct LimitConfig {
    map: Option<String>,
    x0: Option<Vec<f64>>,
    eps_list: Option<Vec<f64>>,
}

/// Errors that terminate a CLI run; `Usage` maps to exit 2, `Check` to 1.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Check(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<crate::error::Error> for CliError {
    fn from(e: crate::error::Error) -> Self {
        CliError::Check(e.to_string())
    }
}

fn parse_list(s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("cannot parse number '{t}'")))
        })
        .collect()
}

fn load_config<T: for<'de> Deserialize<'de> + Default>(path: &Option<PathBuf>) -> CliResult<T> {
    match path {
        None => Ok(T::default()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| usage(format!("cannot read config {}: {e}", p.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| usage(format!("invalid config {}: {e}", p.display())))
        }
    }
}

fn fixed_list<const N: usize>(v: Vec<f64>, what: &str) -> CliResult<[f64; N]> {
    v.try_into()
        .map_err(|v: Vec<f64>| usage(format!("{what} needs {N} values, got {}", v.len())))
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_out(path: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Check(format!("cannot write {}: {e}", p.display()))),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            2
        }
        Err(CliError::Check(m)) => {
            eprintln!("check failed: {m}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.cmd {
        Cmd::Triangle { cmd } => match cmd {
            TriangleCmd::Solve(a) => triangle_solve(a),
            TriangleCmd::Orbit(a) => triangle_orbit(a),
        },
        Cmd::Tetra { cmd } => match cmd {
            TetraCmd::Solve(a) => tetra_solve(a),
            TetraCmd::Orbit(a) => tetra_orbit(a),
        },
        Cmd::Lattice { cmd } => match cmd {
            LatticeCmd::Evolve(a) => lattice_evolve(a),
        },
        Cmd::Verify { cmd } => match cmd {
            VerifyCmd::All(a) => verify_all(a),
        },
        Cmd::Limit(a) => limit(a),
    }
}

fn to_radians(v: &mut [f64], degrees: bool) {
    if degrees {
        for x in v.iter_mut() {
            *x = x.to_radians();
        }
    }
}

fn triangle_solve(a: TriangleSolveArgs) -> CliResult<()> {
    let cfg: TriangleSolveConfig = load_config(&a.config)?;
    let degrees = a.degrees || cfg.degrees.unwrap_or(false);
    let angles = match (&a.angles, &cfg.angles) {
        (Some(s), _) => Some(parse_list(s)?),
        (None, Some(v)) => Some(v.clone()),
        (None, None) => None,
    };
    let sides = match (&a.sides, &cfg.sides) {
        (Some(s), _) => Some(parse_list(s)?),
        (None, Some(v)) => Some(v.clone()),
        (None, None) => None,
    };
    let (mut values, kind) = match (angles, sides) {
        (Some(v), None) => (v, GramKind::Angles),
        (None, Some(v)) => (v, GramKind::Lengths),
        _ => return Err(usage("give exactly one of --angles or --sides")),
    };
    if values.len() != 3 {
        return Err(usage("triangle solve needs three values"));
    }
    to_radians(&mut values, degrees);
    let cos: Vec<f64> = values.iter().map(|v| v.cos()).collect();
    let g = GramMatrix::from_cosines(kind, &cos)?;
    if !g.is_valid() {
        return Err(CliError::Check(
            "input data does not describe a spherical triangle".into(),
        ));
    }
    let dual = gram::cosine_law_dual(&g)?;
    let x = CosTriple([cos[0], cos[1], cos[2]]);
    let (d, dp, ratio) = match kind {
        GramKind::Angles => {
            let inv = triangle::invariants(&x);
            let y = CosTriple([dual[0], dual[1], dual[2]]);
            (
                inv.d,
                triangle::d_dual_value(&y),
                (inv.d / inv.gamma2).sqrt(),
            )
        }
        GramKind::Lengths => {
            let back = CosTriple([dual[0], dual[1], dual[2]]);
            let inv = triangle::invariants(&back);
            (
                inv.d,
                triangle::d_dual_value(&x),
                (inv.d / inv.gamma2).sqrt(),
            )
        }
    };
    let (dual_name, dual_cos_name) = match kind {
        GramKind::Angles => ("sides", "side_cosines"),
        GramKind::Lengths => ("angles", "angle_cosines"),
    };
    let dual_angles: Vec<f64> = dual.iter().map(|c| c.acos()).collect();
    println!(
        "{dual_name}: {} {} {}",
        num(dual_angles[0]),
        num(dual_angles[1]),
        num(dual_angles[2])
    );
    println!(
        "{dual_cos_name}: {} {} {}",
        num(dual[0]),
        num(dual[1]),
        num(dual[2])
    );
    println!("d: {}", num(d));
    println!("d_dual: {}", num(dp));
    println!("sine_law_ratio: {}", num(ratio));
    Ok(())
}

fn orbit_args(a: TriangleOrbitArgs) -> CliResult<(Vec<f64>, String, usize, Option<PathBuf>)> {
    let cfg: OrbitConfig = load_config(&a.config)?;
    let x = match (&a.x, &cfg.x) {
        (Some(s), _) => parse_list(s)?,
        (None, Some(v)) => v.clone(),
        (None, None) => return Err(usage("--x is required")),
    };
    let map = a
        .map
        .or(cfg.map)
        .ok_or_else(|| usage("--map is required"))?;
    let steps = a
        .steps
        .or(cfg.steps)
        .ok_or_else(|| usage("--steps is required"))?;
    Ok((x, map, steps, a.out.or(cfg.out)))
}

fn triangle_orbit(a: TriangleOrbitArgs) -> CliResult<()> {
    let (x, map, steps, out) = orbit_args(a)?;
    let x0 = CosTriple(fixed_list::<3>(x, "--x")?);
    let map = match map.as_str() {
        "phi" => TriangleMap::Phi,
        "hk" => TriangleMap::Hk,
        "jonas" => TriangleMap::Jonas,
        other => return Err(usage(format!("unknown map '{other}'"))),
    };
    let orb = triangle::orbit(map, &x0, steps);
    if let Some(exit) = &orb.exit {
        eprintln!(
            "orbit left the domain at step {}: {}",
            exit.step, exit.reason
        );
    }
    let csv = orb.to_csv(&["x1", "x2", "x3"], &["E12", "E13", "E23"]);
    write_out(&out, &csv)
}

fn tetra_solve(a: TetraSolveArgs) -> CliResult<()> {
    let cfg: TetraSolveConfig = load_config(&a.config)?;
    let degrees = a.degrees || cfg.degrees.unwrap_or(false);
    let mut values = match (&a.dihedral, &cfg.dihedral) {
        (Some(s), _) => parse_list(s)?,
        (None, Some(v)) => v.clone(),
        (None, None) => return Err(usage("--dihedral is required")),
    };
    if values.len() != 6 {
        return Err(usage("tetra solve needs six dihedral angles"));
    }
    to_radians(&mut values, degrees);
    let x = CosSextuple::from_angles([
        values[0], values[1], values[2], values[3], values[4], values[5],
    ]);
    if !tetra::admissible(&x) {
        return Err(CliError::Check(
            "dihedral angles do not describe a spherical tetrahedron".into(),
        ));
    }
    let y = tetra::psi(&x)?;
    let res = tetra::sine_law_residuals(&x, &y)?;
    let inv = tetra::tetra_invariants(&x);
    let sides: Vec<f64> = y.0.iter().map(|c| c.acos()).collect();
    println!(
        "sides: {}",
        sides.iter().map(|v| num(*v)).collect::<Vec<_>>().join(" ")
    );
    println!(
        "side_cosines: {}",
        y.0.iter().map(|v| num(*v)).collect::<Vec<_>>().join(" ")
    );
    println!(
        "integrals: {} {} {} {}",
        num(inv.r1),
        num(inv.r2),
        num(inv.s1),
        num(inv.s2)
    );
    println!("sine_law_residual: {}", num(res.sine));
    println!("cross_cosine_residual: {}", num(res.cross));
    Ok(())
}

fn tetra_orbit(a: TetraOrbitArgs) -> CliResult<()> {
    let cfg: OrbitConfig = load_config(&a.config)?;
    let x = match (&a.x, &cfg.x) {
        (Some(s), _) => parse_list(s)?,
        (None, Some(v)) => v.clone(),
        (None, None) => return Err(usage("--x is required")),
    };
    let map = a
        .map
        .or(cfg.map)
        .ok_or_else(|| usage("--map is required"))?;
    if map != "psi" {
        return Err(usage(format!("unknown map '{map}'")));
    }
    let steps = a
        .steps
        .or(cfg.steps)
        .ok_or_else(|| usage("--steps is required"))?;
    let x0 = CosSextuple(fixed_list::<6>(x, "--x")?);
    let orb = tetra::orbit(&x0, steps);
    if let Some(exit) = &orb.exit {
        eprintln!(
            "orbit left the domain at step {}: {}",
            exit.step, exit.reason
        );
    }
    let csv = orb.to_csv(
        &["x12", "x13", "x23", "x14", "x24", "x34"],
        &["r1", "r2", "s1", "s2"],
    );
    write_out(&a.out.or(cfg.out), &csv)
}

fn lattice_evolve(a: LatticeEvolveArgs) -> CliResult<()> {
    let cfg: LatticeEvolveConfig = load_config(&a.config)?;
    let init = a
        .init
        .or(cfg.init)
        .ok_or_else(|| usage("--init is required"))?;
    let out = a
        .out
        .or(cfg.out)
        .ok_or_else(|| usage("--out is required"))?;
    let variant = Variant::parse(
        &a.variant
            .or(cfg.variant)
            .unwrap_or_else(|| "symmetric".into()),
    )
    .map_err(|e| usage(e.to_string()))?;
    let text = fs::read_to_string(&init)
        .map_err(|e| usage(format!("cannot read {}: {e}", init.display())))?;
    let doc: LatticeDocument =
        serde_json::from_str(&text).map_err(|e| usage(format!("invalid lattice document: {e}")))?;
    let field = darboux::lattice_evolve(variant, &doc)?;
    let residual = field.verify_cubes()?;
    let json = serde_json::to_string_pretty(&field.to_document())
        .map_err(|e| CliError::Check(e.to_string()))?;
    fs::write(&out, json)
        .map_err(|e| CliError::Check(format!("cannot write {}: {e}", out.display())))?;
    println!("cubes: {}", field.extent.iter().product::<usize>());
    println!("max_cube_residual: {}", num(residual));
    if residual > 1e-12 {
        return Err(CliError::Check(format!(
            "per-cube residual {residual} exceeds 1e-12"
        )));
    }
    Ok(())
}

fn verify_all(a: VerifyAllArgs) -> CliResult<()> {
    let file: VerifyAllConfig = load_config(&a.config)?;
    let cfg = VerifyConfig {
        seed: a.seed.or(file.seed).unwrap_or(42),
        samples: a.samples.or(file.samples).unwrap_or(1000),
    };
    let results = verify::run_all(&cfg);
    verify::covers_manifest(&results).map_err(|e| CliError::Check(e.to_string()))?;
    let mut failed = 0usize;
    for r in &results {
        let status = if r.informational {
            "INFO"
        } else if r.passed {
            "PASS"
        } else {
            failed += 1;
            "FAIL"
        };
        println!(
            "{status} {:<28} samples={:<5} max={:.3e} mean={:.3e} tol={:.1e} ({:.2}s)",
            r.report.name,
            r.report.samples,
            r.report.max_residual,
            r.report.mean_residual,
            r.tolerance,
            r.seconds
        );
    }
    println!(
        "suites: {} passed, {failed} failed, {} informational (seed {}, {} samples)",
        results
            .iter()
            .filter(|r| r.passed && !r.informational)
            .count(),
        results.iter().filter(|r| r.informational).count(),
        cfg.seed,
        cfg.samples
    );
    if let Some(path) = a.out.or(file.out) {
        let json = serde_json::to_string_pretty(&verify::results_json(&cfg, &results))
            .map_err(|e| CliError::Check(e.to_string()))?;
        fs::write(&path, json)
            .map_err(|e| CliError::Check(format!("cannot write {}: {e}", path.display())))?;
    }
    if failed > 0 {
        let names: Vec<&str> = results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.report.name.as_str())
            .collect();
        return Err(CliError::Check(format!(
            "failed suites: {}",
            names.join(", ")
        )));
    }
    Ok(())
}

fn limit(a: LimitArgs) -> CliResult<()> {
    let cfg: LimitConfig = load_config(&a.config)?;
    let map = match a
        .map
        .or(cfg.map)
        .ok_or_else(|| usage("--map is required"))?
        .as_str()
    {
        "phi_eps" => LimitMap::PhiEps,
        "psi" => LimitMap::PsiScaled,
        other => return Err(usage(format!("unknown map '{other}'"))),
    };
    let x0 = match (&a.x0, &cfg.x0) {
        (Some(s), _) => parse_list(s)?,
        (None, Some(v)) => v.clone(),
        (None, None) => return Err(usage("--x0 is required")),
    };
    let eps = match (&a.eps_list, &cfg.eps_list) {
        (Some(s), _) => parse_list(s)?,
        (None, Some(v)) => v.clone(),
        (None, None) => crate::tol::EPS_LIST.to_vec(),
    };
    let slope = euler::limit_order(map, &x0, &eps)?;
    println!("slope: {}", num(slope));
    if slope < 1.9 {
        return Err(CliError::Check(format!(
            "consistency order {slope} below the 1.9 floor"
        )));
    }
    Ok(())
}
