//! Command-line surface: identity verification, twistor family evaluation,
//! surface superposition, fundamental-solution solvers, energy-momentum
//! transforms of stored fields, and a JSON job-file mirror of the flags.
//!
//! Exit codes: 0 on success, 1 when verification reports a failing claim
//! under the default convention, 2 on usage or input errors.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::algebra::{
    norm3, Biquaternion, CVec3, Complex, ConventionFlags, Real3, StructuralCoefficient,
    XiConvention,
};
use crate::claims;
use crate::green::{
    helmholtz_solve, kirchhoff_solve, pw_particular_solution, retarded_solve, GreenConfig,
    HarmonicKernelParams, ScalarSource, SphereRule,
};
use crate::grid::GridField;
use crate::io::{read_binary, read_csv, write_binary, write_csv};
use crate::planewave::{PlaneWaveField, Sign};
use crate::twistor::{
    evanescent_twistor, h_twistor, omega_twistor, sample_spectral_surface, static_twistor,
    superpose, xi_twistor, SpectralDensity, SurfaceGrid, SurfaceKind,
};

#[derive(Parser)]
#[command(
    name = "biwave",
    version,
    about = "Biquaternion twistor families, fundamental solutions, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity-claim registry and report a pass/fail matrix.
    Verify(VerifyArgs),
    /// Evaluate one elementary twistor solution and print its diagnostics.
    Twistor(TwistorArgs),
    /// Superpose elementary twistors over a spectral surface onto a grid.
    Superpose(SuperposeArgs),
    /// Evaluate a fundamental-solution representation.
    Solve(SolveArgs),
    /// Transform a stored field dump into its energy-momentum field.
    Energy(EnergyArgs),
    /// Run a subcommand described by a JSON job file mirroring the flags.
    Job(JobArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Write the full report as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for all randomized draws; identical seeds give identical reports.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated energy-momentum conventions to run convention-
    /// dependent claims under (hermitian-left, hermitian-right,
    /// quaternion-only). Default: all three.
    #[arg(long)]
    conventions: Option<String>,
}

#[derive(Args)]
struct TwistorArgs {
    /// Family: xi | evanescent | h | omega | static. When omitted it is
    /// inferred: --omega selects omega, --xi selects xi/evanescent by
    /// regime, --e alone selects static, otherwise h.
    #[arg(long)]
    family: Option<String>,
    /// Spectral parameter ξ as x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    /// Structural coefficient F as three comma-separated complex components
    /// (a+bi each), e.g. 0,0,-1i.
    #[arg(long = "F", allow_hyphen_values = true)]
    f: String,
    /// Time branch: + or -.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    branch: String,
    /// Frequency for the omega family.
    #[arg(long)]
    omega: Option<f64>,
    /// Direction vector x,y,z for the omega and static families
    /// (normalized internally).
    #[arg(long = "e", allow_hyphen_values = true)]
    e_dir: Option<String>,
    /// Grid dimensions nt,nx,ny,nz for the field dump.
    #[arg(long)]
    grid: Option<String>,
    /// Grid spacing (uniform over all four axes).
    #[arg(long = "h", default_value_t = 0.05)]
    spacing: f64,
    /// Grid origin t0,x0,y0,z0; default centers the grid on the origin.
    #[arg(long, allow_hyphen_values = true)]
    origin: Option<String>,
    /// Output dump path (.csv writes CSV, anything else binary).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuperposeArgs {
    /// Surface: cap | omega-circle | omega-sphere | static-circle |
    /// static-point.
    #[arg(long)]
    surface: String,
    /// Structural coefficient F as three complex components.
    #[arg(long = "F", allow_hyphen_values = true)]
    f: String,
    /// Frequency (omega surfaces only).
    #[arg(long, default_value_t = 0.0)]
    omega: f64,
    /// Spectral density: uniform | gaussian.
    #[arg(long, default_value = "uniform")]
    density: String,
    /// Gaussian density center x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    center: Option<String>,
    /// Gaussian density width.
    #[arg(long, default_value_t = 1.0)]
    width: f64,
    /// Density scale as a complex a+bi.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    scale: String,
    /// Radial node count of the surface sampler.
    #[arg(long, default_value_t = 32)]
    n_radial: usize,
    /// Angular node count of the surface sampler.
    #[arg(long, default_value_t = 64)]
    n_angular: usize,
    /// Outer truncation radius of unbounded surfaces; 0 selects a default.
    #[arg(long, default_value_t = 0.0)]
    r_trunc: f64,
    /// Time branch: + or -.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    branch: String,
    /// Grid dimensions nt,nx,ny,nz.
    #[arg(long, default_value = "8,8,8,8")]
    grid: String,
    /// Grid spacing (uniform).
    #[arg(long = "h", default_value_t = 0.1)]
    spacing: f64,
    /// Grid origin t0,x0,y0,z0; default centers the grid on the origin.
    #[arg(long, allow_hyphen_values = true)]
    origin: Option<String>,
    /// Output dump path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    /// Method: kirchhoff | retarded | helmholtz | planewave.
    #[arg(long)]
    method: String,
    /// Structural coefficient F as three complex components.
    #[arg(long = "F", default_value = "0,0,0", allow_hyphen_values = true)]
    f: String,
    /// Evaluation time (kirchhoff, retarded).
    #[arg(long)]
    tau: Option<f64>,
    /// Evaluation point x,y,z.
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    x: String,
    /// Source amplitude as a complex a+bi.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    source_value: String,
    /// Gaussian source width; the source is source-value·exp(-‖y‖²/(2w²)).
    #[arg(long, default_value_t = 0.25)]
    source_width: f64,
    /// Source support radius (retarded, helmholtz); default 5·width.
    #[arg(long)]
    support_radius: Option<f64>,
    /// Frequency (helmholtz).
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Kernel branch weight a (helmholtz): 1 outgoing, 0 incoming.
    #[arg(long = "a", default_value = "0", allow_hyphen_values = true)]
    branch_weight: String,
    /// Radial quadrature nodes.
    #[arg(long, default_value_t = 64)]
    n_radial: usize,
    /// Finite-difference step for the helmholtz gradient.
    #[arg(long, default_value_t = 1e-3)]
    fd_h: f64,
    /// Plane-wave source amplitude scalar part (planewave).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    amp_scalar: String,
    /// Plane-wave source amplitude vector part (planewave).
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    amp_vector: String,
    /// Plane-wave growth rate σ (planewave).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    sigma: String,
    /// Plane-wave wave vector κ as three complex components (planewave).
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    kappa: String,
}

#[derive(Args)]
struct EnergyArgs {
    /// Input field dump (.csv or binary).
    #[arg(long)]
    input: PathBuf,
    /// Output dump path for the energy-momentum field.
    #[arg(long)]
    out: PathBuf,
    /// Energy-momentum convention.
    #[arg(long, default_value = "hermitian-left")]
    convention: String,
}

#[derive(Args)]
struct JobArgs {
    /// JSON file: either an array of argv strings or {"args": [...]}.
    file: PathBuf,
}

/// Entry point: parse the process argv and run.
pub fn run() -> i32 {
    run_argv(std::env::args().collect())
}

/// Run with an explicit argv (argv[0] is the binary name).
pub fn run_argv(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Verify(a) => cmd_verify(a),
        Command::Twistor(a) => cmd_twistor(a),
        Command::Superpose(a) => cmd_superpose(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Energy(a) => cmd_energy(a),
        Command::Job(a) => cmd_job(a),
    }
}

// ---- literal parsing -------------------------------------------------------

/// Parse a complex literal `a+bi`: `2`, `-1i`, `0.5i`, `1-2i`, `3e-2+1e-3i`.
pub fn parse_complex(s: &str) -> Result<Complex, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex literal".to_string());
    }
    let body = match t.strip_suffix(['i', 'I']) {
        Some(b) => b,
        None => {
            let re: f64 = t.parse().map_err(|_| format!("bad real literal `{t}`"))?;
            return Ok(Complex::new(re, 0.0));
        }
    };
    // Split before the sign of the imaginary part, skipping exponent signs.
    let mut split = None;
    for (idx, ch) in body.char_indices().skip(1) {
        if (ch == '+' || ch == '-') && !matches!(&body[idx - 1..idx], "e" | "E") {
            split = Some(idx);
        }
    }
    let (re_str, im_str) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("0", body),
    };
    let re: f64 = re_str
        .parse()
        .map_err(|_| format!("bad complex literal `{t}`"))?;
    let im: f64 = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse()
            .map_err(|_| format!("bad complex literal `{t}`"))?,
    };
    Ok(Complex::new(re, im))
}

fn parse_real3(s: &str) -> Result<Real3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected 3 components, got {} in `{s}`", parts.len()));
    }
    let mut out = [0.0; 3];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.trim().parse().map_err(|_| format!("bad number `{p}`"))?;
    }
    Ok(out)
}

fn parse_cvec3(s: &str) -> Result<CVec3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected 3 components, got {} in `{s}`", parts.len()));
    }
    Ok(CVec3::new(
        parse_complex(parts[0])?,
        parse_complex(parts[1])?,
        parse_complex(parts[2])?,
    ))
}

fn parse_dims4(s: &str) -> Result<[usize; 4], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 dimensions, got {} in `{s}`", parts.len()));
    }
    let mut out = [0usize; 4];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.trim().parse().map_err(|_| format!("bad dimension `{p}`"))?;
    }
    Ok(out)
}

fn parse_vec4(s: &str) -> Result<[f64; 4], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 components, got {} in `{s}`", parts.len()));
    }
    let mut out = [0.0f64; 4];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.trim().parse().map_err(|_| format!("bad number `{p}`"))?;
    }
    Ok(out)
}

fn parse_branch(s: &str) -> Result<Sign, String> {
    s.parse::<Sign>()
        .map_err(|_| format!("bad branch `{s}` (expected + or -)"))
}

fn parse_convention(s: &str) -> Result<XiConvention, String> {
    s.trim()
        .parse::<XiConvention>()
        .map_err(|_| format!("unknown convention `{s}`"))
}

/// Format a complex number in `a+bi` style, dropping zero parts.
pub fn fmt_complex(z: Complex) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn fmt_biquaternion(b: &Biquaternion) -> String {
    format!(
        "scalar {}  vector ({}, {}, {})",
        fmt_complex(b.s),
        fmt_complex(b.v.x),
        fmt_complex(b.v.y),
        fmt_complex(b.v.z)
    )
}

// ---- subcommands -----------------------------------------------------------

fn cmd_verify(a: VerifyArgs) -> Result<i32, String> {
    let convs: Vec<XiConvention> = match &a.conventions {
        None => XiConvention::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .map(parse_convention)
            .collect::<Result<_, _>>()?,
    };
    let report = claims::run_all(&convs, a.seed);
    print!("{}", report.table());
    if let Some(path) = &a.json {
        std::fs::write(path, report.to_json())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("report written to {}", path.display());
    }
    let failures = report.default_convention_failures();
    if failures.is_empty() {
        println!("all default-convention claims pass");
        Ok(0)
    } else {
        let ids: Vec<&str> = failures.iter().map(|e| e.id.as_str()).collect();
        eprintln!("failing claims under the default convention: {}", ids.join(", "));
        Ok(1)
    }
}

fn infer_family(a: &TwistorArgs, f: &StructuralCoefficient) -> Result<String, String> {
    if let Some(fam) = &a.family {
        return Ok(fam.clone());
    }
    if a.omega.is_some() {
        return Ok("omega".to_string());
    }
    if let Some(xi_str) = &a.xi {
        let xi = parse_real3(xi_str)?;
        let l = norm3(crate::algebra::sub3(xi, f.wave_e()));
        let fam = if l > norm3(f.wave_h()) { "xi" } else { "evanescent" };
        return Ok(fam.to_string());
    }
    if a.e_dir.is_some() {
        return Ok("static".to_string());
    }
    Ok("h".to_string())
}

fn unit_dir(s: &str) -> Result<Real3, String> {
    let v = parse_real3(s)?;
    let n = norm3(v);
    if n == 0.0 {
        return Err("direction vector must be nonzero".to_string());
    }
    Ok(crate::algebra::scale3(v, 1.0 / n))
}

fn cmd_twistor(a: TwistorArgs) -> Result<i32, String> {
    let f = StructuralCoefficient::new(parse_cvec3(&a.f)?);
    let branch = parse_branch(&a.branch)?;
    let family = infer_family(&a, &f)?;
    let need_xi = || -> Result<Real3, String> {
        parse_real3(a.xi.as_deref().ok_or("--xi is required for this family")?)
    };
    let pw = match family.as_str() {
        "xi" => xi_twistor(need_xi()?, &f, branch),
        "evanescent" => evanescent_twistor(need_xi()?, &f, branch),
        "h" => h_twistor(&f, branch),
        "omega" => {
            let omega = a.omega.ok_or("--omega is required for the omega family")?;
            let dir = unit_dir(a.e_dir.as_deref().ok_or("--e is required for the omega family")?)?;
            omega_twistor(omega, &f, dir, branch)
        }
        "static" => {
            let dir =
                unit_dir(a.e_dir.as_deref().ok_or("--e is required for the static family")?)?;
            static_twistor(&f, dir)
        }
        other => return Err(format!("unknown family `{other}`")),
    }
    .map_err(|e| e.to_string())?;

    println!("family: {family}");
    println!("sigma: {}", fmt_complex(pw.sigma));
    println!(
        "kappa: ({}, {}, {})",
        fmt_complex(pw.kappa.x),
        fmt_complex(pw.kappa.y),
        fmt_complex(pw.kappa.z)
    );
    println!("amplitude: {}", fmt_biquaternion(&pw.amp));
    // Diagnostics rounded to 12 digits so exact values print exactly.
    let round12 = |x: f64| (x * 1e12).round() / 1e12;
    let p = pw.amp.pseudonorm();
    println!(
        "(norm, pseudonorm) = ({}, {})",
        fmt_complex(Complex::new(round12(pw.amp.norm()), 0.0)),
        fmt_complex(Complex::new(round12(p.re), round12(p.im)))
    );

    if let Some(out) = &a.out {
        let dims = parse_dims4(a.grid.as_deref().ok_or("--grid is required with --out")?)?;
        let (origin, spacing) = grid_geometry(&a.origin, a.spacing, dims)?;
        let g = GridField::sample(origin, spacing, dims, |tau, x| pw.eval(tau, x))
            .map_err(|e| e.to_string())?;
        write_dump(out, &g, &format!("twistor --family {family}"))?;
        println!("field dump written to {}", out.display());
    }
    Ok(0)
}

fn grid_geometry(
    origin: &Option<String>,
    spacing: f64,
    dims: [usize; 4],
) -> Result<([f64; 4], [f64; 4]), String> {
    if !(spacing > 0.0) {
        return Err("--h must be positive".to_string());
    }
    let origin = match origin {
        Some(s) => parse_vec4(s)?,
        None => {
            let mut o = [0.0f64; 4];
            for (slot, d) in o.iter_mut().zip(dims) {
                *slot = -spacing * (d.saturating_sub(1)) as f64 / 2.0;
            }
            o
        }
    };
    Ok((origin, [spacing; 4]))
}

fn write_dump(path: &Path, grid: &GridField, generator: &str) -> Result<(), String> {
    let is_csv = path.extension().map_or(false, |e| e == "csv");
    let res = if is_csv {
        write_csv(path, grid, generator)
    } else {
        write_binary(path, grid, generator)
    };
    res.map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn read_dump(path: &Path) -> Result<GridField, String> {
    let is_csv = path.extension().map_or(false, |e| e == "csv");
    let res = if is_csv { read_csv(path) } else { read_binary(path) };
    res.map(|(_, g)| g)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn cmd_superpose(a: SuperposeArgs) -> Result<i32, String> {
    let f = StructuralCoefficient::new(parse_cvec3(&a.f)?);
    let kind = match a.surface.as_str() {
        "cap" => SurfaceKind::SCap,
        "omega-circle" => SurfaceKind::SOmegaCircle,
        "omega-sphere" => SurfaceKind::SOmegaSphere,
        "static-circle" => SurfaceKind::SStaticCircle,
        "static-point" => SurfaceKind::SStaticPoint,
        other => return Err(format!("unknown surface `{other}`")),
    };
    let grid_spec = SurfaceGrid {
        n_radial: a.n_radial,
        n_angular: a.n_angular,
        r_trunc: a.r_trunc,
    };
    let sample =
        sample_spectral_surface(kind, &f, a.omega, grid_spec).map_err(|e| e.to_string())?;
    let density = match a.density.as_str() {
        "uniform" => SpectralDensity::Uniform(parse_complex(&a.scale)?),
        "gaussian" => SpectralDensity::Gaussian {
            center: parse_real3(
                a.center
                    .as_deref()
                    .ok_or("--center is required for the gaussian density")?,
            )?,
            width: a.width,
            scale: parse_complex(&a.scale)?,
        },
        other => return Err(format!("unknown density `{other}`")),
    };
    let branch = parse_branch(&a.branch)?;
    let field = superpose(&sample, &density, branch).map_err(|e| e.to_string())?;
    println!(
        "surface {}: {} nodes, total weight {}",
        a.surface,
        sample.nodes.len(),
        sample.weights.iter().sum::<f64>()
    );
    let dims = parse_dims4(&a.grid)?;
    let (origin, spacing) = grid_geometry(&a.origin, a.spacing, dims)?;
    let g = GridField::sample(origin, spacing, dims, |tau, x| field.eval(tau, x))
        .map_err(|e| e.to_string())?;
    write_dump(&a.out, &g, &format!("superpose --surface {}", a.surface))?;
    println!("field dump written to {}", a.out.display());
    Ok(0)
}

fn cmd_solve(a: SolveArgs) -> Result<i32, String> {
    let f = StructuralCoefficient::new(parse_cvec3(&a.f)?);
    let x = parse_real3(&a.x)?;
    match a.method.as_str() {
        "kirchhoff" | "retarded" => {
            let tau = a.tau.ok_or("--tau is required for this method")?;
            let value = parse_complex(&a.source_value)?;
            let w = a.source_width;
            let support = a.support_radius.unwrap_or(5.0 * w);
            let src = ScalarSource::spatial(
                move |y: Real3| value * (-crate::algebra::dot3(y, y) / (2.0 * w * w)).exp(),
                support,
            );
            let mut cfg = GreenConfig::retarded(f);
            cfg.n_radial = a.n_radial;
            let u = if a.method == "kirchhoff" {
                kirchhoff_solve(&src, &cfg, tau, x)
            } else {
                retarded_solve(&src, &cfg, tau, x)
            }
            .map_err(|e| e.to_string())?;
            println!("u({tau}, {:?}) = {}", x, fmt_complex(u));
        }
        "helmholtz" => {
            let value = parse_complex(&a.source_value)?;
            let w = a.source_width;
            let support = a.support_radius.unwrap_or(5.0 * w);
            let src = ScalarSource::spatial(
                move |y: Real3| value * (-crate::algebra::dot3(y, y) / (2.0 * w * w)).exp(),
                support,
            );
            let p = HarmonicKernelParams {
                omega: a.omega,
                a: parse_complex(&a.branch_weight)?,
                f,
            };
            let b = helmholtz_solve(&src, &p, &SphereRule::default(), a.n_radial, x, a.fd_h)
                .map_err(|e| e.to_string())?;
            println!("B({:?}) = {}", x, fmt_biquaternion(&b));
        }
        "planewave" => {
            let g = PlaneWaveField::new(
                Biquaternion::new(parse_complex(&a.amp_scalar)?, parse_cvec3(&a.amp_vector)?),
                parse_complex(&a.sigma)?,
                parse_cvec3(&a.kappa)?,
            );
            let b = pw_particular_solution(&g, &f).map_err(|e| e.to_string())?;
            println!("amplitude: {}", fmt_biquaternion(&b.amp));
            println!("sigma: {}", fmt_complex(b.sigma));
            println!(
                "kappa: ({}, {}, {})",
                fmt_complex(b.kappa.x),
                fmt_complex(b.kappa.y),
                fmt_complex(b.kappa.z)
            );
        }
        other => return Err(format!("unknown method `{other}`")),
    }
    Ok(0)
}

fn cmd_energy(a: EnergyArgs) -> Result<i32, String> {
    let conv = parse_convention(&a.convention)?;
    let flags = ConventionFlags::with_xi(conv);
    let mut grid = read_dump(&a.input)?;
    for node in &mut grid.data {
        *node = node.energy_momentum(&flags);
    }
    write_dump(&a.out, &grid, &format!("energy --convention {}", conv.name()))?;
    println!("energy-momentum field written to {}", a.out.display());
    Ok(0)
}

fn cmd_job(a: JobArgs) -> Result<i32, String> {
    let text = std::fs::read_to_string(&a.file)
        .map_err(|e| format!("cannot read {}: {e}", a.file.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("bad job file: {e}"))?;
    let args = match &value {
        serde_json::Value::Array(items) => items.clone(),
        serde_json::Value::Object(map) => match map.get("args") {
            Some(serde_json::Value::Array(items)) => items.clone(),
            _ => return Err("job object must have an `args` array".to_string()),
        },
        _ => return Err("job file must be a JSON array or object".to_string()),
    };
    let mut argv = vec!["biwave".to_string()];
    for item in args {
        match item {
            serde_json::Value::String(s) => argv.push(s),
            other => argv.push(other.to_string()),
        }
    }
    Ok(run_argv(argv))
}
