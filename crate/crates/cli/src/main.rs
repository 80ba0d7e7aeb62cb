//! Command-line interface: construct and evaluate the series solutions,
//! solve characteristic equations, run the Mathieu and scattering
//! specializations, apply transformation rules, and emit verification
//! reports. Output is deterministic JSON (ordered keys, fixed float
//! formatting) or CSV for grids.

mod json;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use heunince::equations::{
    DcheParams, EquationParams, GsweParams, InceDcheParams, InceGsweParams,
};
use heunince::error::Error as CoreError;
use heunince::mathieu::{char_value_a, poole_solution, MathieuFamily, Sigma};
use heunince::recurrence::{
    solve_characteristic, CharacteristicProblem, FamilyParams, RecurrenceFamily, SolveOptions,
    Unknown,
};
use heunince::scattering::{
    boundary_report, map_inverse4, map_inverse6, radial_solve, B1Branch, PotentialParams,
};
use heunince::solutions::{build_pair, NuSpec, SolutionFamily, SqrtSign, Variant};
use heunince::transforms::{
    apply_rule, degenerate_reduce_dche, degenerate_reduce_ince_dche, normal_form,
    DegenerateReduction, NormalFormKind, Rule,
};
use heunince::util::cr;
use heunince::verify::{
    convergence_ratio_check, integrate_ode, ode_residual, ode_residual_analytic, sector_grid,
    wronskian_constancy,
};

use json::{g17, Json};

#[derive(Parser)]
#[command(
    name = "heunince",
    about = "Series solutions for the Ince limits of the generalized spheroidal wave \
             and double-confluent Heun equations",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a series solution over a grid.
    Eval(EvalArgs),
    /// Solve a characteristic equation for nu or a free parameter.
    Char(CharArgs),
    /// Dump the coefficient window of a solution family.
    Coeffs(CoeffsArgs),
    /// Mathieu characteristic values, series samples and periodicity report.
    Mathieu(MathieuArgs),
    /// Inverse-power potential mapping, phase parameter and radial samples.
    Scatter(ScatterArgs),
    /// Parameter transformation rules, normal forms and degenerate reductions.
    Transform(TransformArgs),
    /// Verification report: residuals, Wronskian, tail ratio, integration.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EquationKind {
    Gswe,
    InceGswe,
    Dche,
    InceDche,
}

#[derive(Args)]
struct EqArgs {
    /// Equation kind.
    #[arg(long, value_enum)]
    equation: EquationKind,
    /// Complex parameters as "re", "re+imi" or "re-imi" strings.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b3: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    z0: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    eta: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    omega: String,
}

impl EqArgs {
    fn build(&self) -> Result<EquationParams, CliError> {
        let b1 = parse_complex(&self.b1)?;
        let b2 = parse_complex(&self.b2)?;
        let b3 = parse_complex(&self.b3)?;
        Ok(match self.equation {
            EquationKind::Gswe => EquationParams::Gswe(GsweParams::new(
                b1,
                b2,
                b3,
                parse_complex(&self.z0)?,
                parse_complex(&self.eta)?,
                parse_complex(&self.omega)?,
            )?),
            EquationKind::InceGswe => EquationParams::InceGswe(InceGsweParams::new(
                b1,
                b2,
                b3,
                parse_complex(&self.z0)?,
                parse_complex(&self.q)?,
            )?),
            EquationKind::Dche => EquationParams::Dche(DcheParams::new(
                b1,
                b2,
                b3,
                parse_complex(&self.eta)?,
                parse_complex(&self.omega)?,
            )?),
            EquationKind::InceDche => EquationParams::InceDche(InceDcheParams::new(
                b1,
                b2,
                b3,
                parse_complex(&self.q)?,
            )?),
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    IgNu1,
    IgNu2,
    IgT1,
    IgT2,
    IgT3,
    IgT4,
    IdNu1,
    IdNu2,
    IdT1,
    IdT2,
    DcheNu1,
    DcheNu2,
}

impl FamilyArg {
    fn to_family(self) -> SolutionFamily {
        match self {
            FamilyArg::IgNu1 => SolutionFamily::IgNu1,
            FamilyArg::IgNu2 => SolutionFamily::IgNu2,
            FamilyArg::IgT1 => SolutionFamily::IgT1,
            FamilyArg::IgT2 => SolutionFamily::IgT2,
            FamilyArg::IgT3 => SolutionFamily::IgT3,
            FamilyArg::IgT4 => SolutionFamily::IgT4,
            FamilyArg::IdNu1 => SolutionFamily::IdNu1,
            FamilyArg::IdNu2 => SolutionFamily::IdNu2,
            FamilyArg::IdT1 => SolutionFamily::IdT1,
            FamilyArg::IdT2 => SolutionFamily::IdT2,
            FamilyArg::DcheNu1 => SolutionFamily::DcheNu1,
            FamilyArg::DcheNu2 => SolutionFamily::DcheNu2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Zero,
    Infinity,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridPath {
    RealLine,
    Ray,
    Circle,
}

#[derive(Args)]
struct SolutionArgs {
    #[command(flatten)]
    eq: EqArgs,
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = VariantArg::Zero)]
    variant: VariantArg,
    /// Phase parameter value (two-sided families).
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// Solve the characteristic equation for nu instead.
    #[arg(long, default_value_t = false)]
    solve_nu: bool,
    /// Comma-separated complex seeds for root searches.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    seeds: String,
    /// Branch of the +-2i sqrt(q z) Bessel argument.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sqrt_sign: String,
}

impl SolutionArgs {
    fn nu_spec(&self) -> Result<NuSpec, CliError> {
        if self.solve_nu {
            Ok(NuSpec::Solve { seeds: parse_seeds(&self.seeds)? })
        } else {
            match &self.nu {
                Some(s) => Ok(NuSpec::Value(parse_complex(s)?)),
                // truncated families ignore the value
                None => Ok(NuSpec::Value(cr(0.17))),
            }
        }
    }

    fn sqrt_sign(&self) -> Result<SqrtSign, CliError> {
        match self.sqrt_sign.as_str() {
            "+" | "plus" => Ok(SqrtSign::Plus),
            "-" | "minus" => Ok(SqrtSign::Minus),
            other => Err(CliError::validation(format!(
                "sqrt-sign must be + or -, got {other}"
            ))),
        }
    }

    fn variant(&self) -> Variant {
        match self.variant {
            VariantArg::Zero => Variant::ZeroSide,
            VariantArg::Infinity => Variant::InfinitySide,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    sol: SolutionArgs,
    #[arg(long, default_value = "1.5", allow_hyphen_values = true)]
    grid_start: String,
    #[arg(long, default_value = "3", allow_hyphen_values = true)]
    grid_stop: String,
    #[arg(long, default_value_t = 16)]
    grid_count: usize,
    #[arg(long, value_enum, default_value_t = GridPath::Ray)]
    grid_path: GridPath,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnknownArg {
    Nu,
    B3,
}

#[derive(Args)]
struct CharArgs {
    #[command(flatten)]
    sol: SolutionArgs,
    #[arg(long, value_enum, default_value_t = UnknownArg::Nu)]
    unknown: UnknownArg,
    /// Fixed nu for free-parameter problems.
    #[arg(long, default_value = "0.17", allow_hyphen_values = true)]
    fixed_nu: String,
    /// Absolute residual tolerance at the root.
    #[arg(long, default_value_t = 1e-10)]
    tol_root: f64,
}

#[derive(Args)]
struct CoeffsArgs {
    #[command(flatten)]
    sol: SolutionArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum MathieuFamilyArg {
    W1,
    W2,
    W3,
    W4,
    NuEven,
    NuOdd,
    Poole,
}

#[derive(Args)]
struct MathieuArgs {
    #[arg(long, value_enum)]
    family: MathieuFamilyArg,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: String,
    /// sigma = 1 (Mathieu) or i (modified Mathieu).
    #[arg(long, default_value = "1")]
    sigma: String,
    #[arg(long, default_value = "0.25", allow_hyphen_values = true)]
    nu: String,
    /// Poole integers with 2 nu + 1 = l/m.
    #[arg(long, default_value_t = 1)]
    l: u32,
    #[arg(long, default_value_t = 3)]
    m: u32,
    #[arg(long, default_value = "")]
    seeds: String,
    /// Number of trig-side samples on [0, period].
    #[arg(long, default_value_t = 8)]
    samples: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScatterPath {
    Inverse6,
    Inverse4,
}

#[derive(Args)]
struct ScatterArgs {
    #[arg(long, value_enum)]
    path: ScatterPath,
    #[arg(long, default_value_t = 1.0)]
    alpha1p: f64,
    #[arg(long, default_value_t = 0.5)]
    alpha2p: f64,
    #[arg(long, default_value_t = 0.0)]
    beta1p: f64,
    #[arg(long, default_value_t = 1)]
    z_charge: i32,
    #[arg(long, default_value_t = 1)]
    zprime: i32,
    #[arg(long, default_value_t = 0.5)]
    energy: f64,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long, default_value_t = 1)]
    pair: u8,
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    b1_branch: String,
    #[arg(long, default_value = "")]
    seeds: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    T1,
    T2,
    T3,
    Tau,
    N1,
    N2,
    N3,
    Degenerate,
}

#[derive(Args)]
struct TransformArgs {
    /// Equation kind the coefficients belong to.
    #[arg(long, value_enum)]
    equation: EquationKind,
    #[arg(long, default_value = "0")]
    b1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    b3: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    z0: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    eta: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    omega: String,
    #[arg(long, value_enum)]
    op: TransformOp,
    /// Free scale of the N3 normal form.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    n3_scale: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    sol: SolutionArgs,
    /// Verification annulus radii (scaled by |z0| for the Ince-GSWE).
    #[arg(long, default_value_t = 1.5)]
    r_lo: f64,
    #[arg(long, default_value_t = 3.0)]
    r_hi: f64,
    #[arg(long, default_value_t = 32)]
    grid_count: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol_res: f64,
}

/// CLI error with its exit class.
struct CliError {
    exit: u8,
    kind: &'static str,
    message: String,
}

impl CliError {
    fn validation(message: String) -> Self {
        CliError { exit: 2, kind: "validation", message }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let numerical = matches!(
            e,
            CoreError::NoConvergence(_)
                | CoreError::NoRoot(_)
                | CoreError::NotConverged(_)
                | CoreError::StepFailure { .. }
        );
        CliError {
            exit: if numerical { 3 } else { 2 },
            kind: if numerical { "numerical" } else { "validation" },
            message: e.to_string(),
        }
    }
}

fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    let t = s.trim().replace(' ', "");
    let fail = || CliError::validation(format!("cannot parse complex number from '{s}'"));
    if t.is_empty() {
        return Err(fail());
    }
    if let Ok(re) = t.parse::<f64>() {
        return Ok(cr(re));
    }
    if let Some(im_str) = t.strip_suffix('i') {
        let bytes = im_str.as_bytes();
        // split at the last sign that is not an exponent sign
        for pos in (1..bytes.len()).rev() {
            let c = bytes[pos] as char;
            if (c == '+' || c == '-') && !matches!(bytes[pos - 1] as char, 'e' | 'E') {
                let re: f64 = im_str[..pos].parse().map_err(|_| fail())?;
                let imtxt = &im_str[pos..];
                let im: f64 = if imtxt == "+" {
                    1.0
                } else if imtxt == "-" {
                    -1.0
                } else {
                    imtxt.parse().map_err(|_| fail())?
                };
                return Ok(Complex64::new(re, im));
            }
        }
        let im: f64 = if im_str.is_empty() {
            1.0
        } else if im_str == "-" {
            -1.0
        } else if im_str == "+" {
            1.0
        } else {
            im_str.parse().map_err(|_| fail())?
        };
        return Ok(Complex64::new(0.0, im));
    }
    Err(fail())
}

fn parse_seeds(s: &str) -> Result<Vec<Complex64>, CliError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(parse_complex).collect()
}

fn grid_points(
    start: Complex64,
    stop: Complex64,
    count: usize,
    path: GridPath,
) -> Result<Vec<Complex64>, CliError> {
    if count == 0 {
        return Err(CliError::validation("grid-count must be positive".into()));
    }
    let n = count;
    let mut pts = Vec::with_capacity(n);
    match path {
        GridPath::RealLine | GridPath::Ray => {
            for k in 0..n {
                let t = if n == 1 { 0.0 } else { k as f64 / (n - 1) as f64 };
                pts.push(start + (stop - start) * cr(t));
            }
        }
        GridPath::Circle => {
            let r = start.norm();
            let (a0, a1) = (start.arg(), stop.arg());
            for k in 0..n {
                let t = if n == 1 { 0.0 } else { k as f64 / (n - 1) as f64 };
                pts.push(Complex64::from_polar(r, a0 + (a1 - a0) * t));
            }
        }
    }
    Ok(pts)
}

fn family_params(
    family: SolutionFamily,
    params: &EquationParams,
) -> Result<RecurrenceFamily, CliError> {
    let fp = match params {
        EquationParams::InceGswe(p) => FamilyParams::InceGswe(*p),
        EquationParams::InceDche(p) => FamilyParams::InceDche(*p),
        EquationParams::Dche(p) => FamilyParams::Dche(*p),
        EquationParams::Gswe(_) => {
            return Err(CliError::validation(
                "series families are defined for ince-gswe, ince-dche and dche (B2 = 2)".into(),
            ))
        }
    };
    Ok(RecurrenceFamily::new(family.recurrence_id(), fp)?)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.cmd {
        Cmd::Eval(a) => cmd_eval(a, cli.format),
        Cmd::Char(a) => cmd_char(a),
        Cmd::Coeffs(a) => cmd_coeffs(a),
        Cmd::Mathieu(a) => cmd_mathieu(a),
        Cmd::Scatter(a) => cmd_scatter(a),
        Cmd::Transform(a) => cmd_transform(a),
        Cmd::Verify(a) => cmd_verify(a),
    }
}

fn cmd_eval(a: &EvalArgs, format: Format) -> Result<String, CliError> {
    let params = a.sol.eq.build()?;
    let (zero, inf) = build_pair(
        a.sol.family.to_family(),
        &params,
        &a.sol.nu_spec()?,
        a.sol.sqrt_sign()?,
    )?;
    let sol = match a.sol.variant() {
        Variant::ZeroSide => zero,
        Variant::InfinitySide => inf,
    };
    let grid = grid_points(
        parse_complex(&a.grid_start)?,
        parse_complex(&a.grid_stop)?,
        a.grid_count,
        a.grid_path,
    )?;
    match format {
        Format::Csv => {
            let mut out = String::from("index,re_z,im_z,re_u,im_u,tail_estimate\n");
            for (i, &z) in grid.iter().enumerate() {
                let o = sol.eval(z)?;
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    i,
                    g17(z.re),
                    g17(z.im),
                    g17(o.value.re),
                    g17(o.value.im),
                    g17(o.tail_estimate)
                ));
            }
            Ok(out)
        }
        Format::Json => {
            let mut points = Vec::with_capacity(grid.len());
            for (i, &z) in grid.iter().enumerate() {
                let o = sol.eval(z)?;
                points.push(Json::Obj(vec![
                    ("index", Json::Int(i as i64)),
                    ("z", Json::complex(z)),
                    ("value", Json::complex(o.value)),
                    ("tail_estimate", Json::Num(o.tail_estimate)),
                ]));
            }
            Ok(Json::Obj(vec![
                ("family", Json::Str(sol.family.name().into())),
                ("variant", Json::Str(format!("{:?}", sol.variant))),
                ("nu", Json::complex(sol.nu)),
                ("points", Json::Arr(points)),
            ])
            .to_string())
        }
    }
}

fn cmd_char(a: &CharArgs) -> Result<String, CliError> {
    let params = a.sol.eq.build()?;
    let family = a.sol.family.to_family();
    let rec = family_params(family, &params)?;
    let unknown = match a.unknown {
        UnknownArg::Nu => Unknown::Nu,
        UnknownArg::B3 => Unknown::B3 { fixed_nu: parse_complex(&a.fixed_nu)? },
    };
    let problem = CharacteristicProblem::new(rec, unknown)?;
    let seeds = parse_seeds(&a.sol.seeds)?;
    let opts = SolveOptions { tau_root: a.tol_root, ..SolveOptions::default() };
    let mut roots: Vec<Json> = Vec::new();
    let mut found: Vec<Complex64> = Vec::new();
    let seed_list = if seeds.is_empty() { vec![cr(0.17)] } else { seeds };
    for &seed in &seed_list {
        if let Ok(root) = solve_characteristic(&problem, &[seed], &opts) {
            if !found
                .iter()
                .any(|r| (r - root.value).norm() < 1e-8 * (1.0 + r.norm()))
            {
                found.push(root.value);
                roots.push(Json::Obj(vec![
                    ("value", Json::complex(root.value)),
                    ("residual", Json::Num(root.residual)),
                    ("iterations", Json::Int(root.iterations as i64)),
                ]));
            }
        }
    }
    if roots.is_empty() {
        return Err(CliError::from(CoreError::NoRoot(
            "no characteristic root from the supplied seeds".into(),
        )));
    }
    Ok(Json::Obj(vec![
        ("family", Json::Str(family.name().into())),
        (
            "unknown",
            Json::Str(match a.unknown {
                UnknownArg::Nu => "nu".into(),
                UnknownArg::B3 => "b3".into(),
            }),
        ),
        ("roots", Json::Arr(roots)),
    ])
    .to_string())
}

fn cmd_coeffs(a: &CoeffsArgs) -> Result<String, CliError> {
    let params = a.sol.eq.build()?;
    let (zero, _) = build_pair(
        a.sol.family.to_family(),
        &params,
        &a.sol.nu_spec()?,
        a.sol.sqrt_sign()?,
    )?;
    let w = &zero.window;
    let values: Vec<Json> = w.iter().map(|(_, b)| Json::complex(b)).collect();
    Ok(Json::Obj(vec![
        ("family", Json::Str(zero.family.name().into())),
        ("nu", Json::complex(zero.nu)),
        ("n_min", Json::Int(w.n_min())),
        ("n_max", Json::Int(w.n_max())),
        ("terminated", Json::Bool(w.is_terminated())),
        ("b", Json::Arr(values)),
    ])
    .to_string())
}

fn cmd_mathieu(a: &MathieuArgs) -> Result<String, CliError> {
    let q = parse_complex(&a.q)?;
    let sigma = match a.sigma.trim() {
        "1" => Sigma::One,
        "i" => Sigma::ImaginaryUnit,
        other => {
            return Err(CliError::validation(format!(
                "sigma must be 1 or i, got {other}"
            )))
        }
    };
    let seeds = parse_seeds(&a.seeds)?;
    let (problem, period_pi, label) = match a.family {
        MathieuFamilyArg::Poole => {
            let p = poole_solution(a.l, a.m, q, &seeds)?;
            (
                p.exponential,
                Some(2.0 * a.m as f64),
                format!("poole-{}-{}", a.l, a.m),
            )
        }
        other => {
            let fam = match other {
                MathieuFamilyArg::W1 => MathieuFamily::W1,
                MathieuFamilyArg::W2 => MathieuFamily::W2,
                MathieuFamilyArg::W3 => MathieuFamily::W3,
                MathieuFamilyArg::W4 => MathieuFamily::W4,
                MathieuFamilyArg::NuEven => MathieuFamily::NuEven,
                MathieuFamilyArg::NuOdd => MathieuFamily::NuOdd,
                MathieuFamilyArg::Poole => unreachable!(),
            };
            let nu = parse_complex(&a.nu)?;
            let p = char_value_a(fam, q, nu, &seeds, sigma)?;
            let period = p.family.period_in_pi();
            (p, period, format!("{fam:?}").to_lowercase())
        }
    };
    let mut samples = Vec::with_capacity(a.samples);
    let span = period_pi.unwrap_or(2.0) * std::f64::consts::PI;
    for k in 0..a.samples.max(1) {
        let u = cr(span * k as f64 / a.samples.max(1) as f64);
        let w = problem.eval_trig(u)?;
        samples.push(Json::Obj(vec![
            ("u", Json::Num(u.re)),
            ("w", Json::complex(w)),
        ]));
    }
    let periodicity = match (period_pi, sigma) {
        (Some(p), Sigma::One) => {
            let u = cr(0.37);
            let w0 = problem.eval_trig(u)?;
            let w1 = problem.eval_trig(u + cr(p * std::f64::consts::PI))?;
            Json::Num((w0 - w1).norm())
        }
        _ => Json::Null,
    };
    Ok(Json::Obj(vec![
        ("family", Json::Str(label)),
        ("q", Json::complex(problem.q)),
        ("a", Json::complex(problem.a)),
        ("nu", Json::complex(problem.nu)),
        (
            "period_in_pi",
            match period_pi {
                Some(p) => Json::Num(p),
                None => Json::Null,
            },
        ),
        ("periodicity_deviation", periodicity),
        ("samples", Json::Arr(samples)),
    ])
    .to_string())
}

fn cmd_scatter(a: &ScatterArgs) -> Result<String, CliError> {
    let pot = PotentialParams {
        alpha1p: a.alpha1p,
        alpha2p: a.alpha2p,
        beta1p: a.beta1p,
        z_charge: a.z_charge,
        zprime: a.zprime,
        energy: a.energy,
        l: a.l,
    };
    let branch = match a.b1_branch.as_str() {
        "+" | "plus" => B1Branch::Plus,
        "-" | "minus" => B1Branch::Minus,
        other => {
            return Err(CliError::validation(format!(
                "b1-branch must be + or -, got {other}"
            )))
        }
    };
    let seeds = parse_seeds(&a.seeds)?;
    let (params, k, mapped) = match a.path {
        ScatterPath::Inverse6 => {
            let m = map_inverse6(&pot, branch)?;
            let mapped = Json::Obj(vec![
                ("b1", Json::complex(m.params.b1)),
                ("b2", Json::complex(m.params.b2)),
                ("b3", Json::complex(m.params.b3)),
                ("q", Json::complex(m.params.q)),
                ("variable", Json::Str("z = r^2".into())),
            ]);
            (EquationParams::InceDche(m.params), m.k, mapped)
        }
        ScatterPath::Inverse4 => {
            let m = map_inverse4(&pot)?;
            let mapped = Json::Obj(vec![
                ("b1", Json::complex(m.params.b1)),
                ("b2", Json::complex(m.params.b2)),
                ("b3", Json::complex(m.params.b3)),
                ("eta", Json::complex(m.params.eta)),
                ("omega", Json::complex(m.params.omega)),
                ("variable", Json::Str("z = r".into())),
            ]);
            (EquationParams::Dche(m.params), m.k, mapped)
        }
    };
    let (zero, inf, nu) = radial_solve(&params, a.pair, k, &seeds)?;
    let r_small = [0.1, 0.05, 0.025, 0.0125];
    let r_large = [40.0, 80.0, 160.0, 320.0];
    let report = boundary_report(&zero, &inf, &r_small, &r_large)?;
    let origin: Vec<Json> = report
        .origin_ratios
        .iter()
        .map(|&(r, v)| Json::Obj(vec![("r", Json::Num(r)), ("ratio", Json::Num(v))]))
        .collect();
    let infinity: Vec<Json> = report
        .infinity_ratios
        .iter()
        .map(|&(r, v)| {
            Json::Obj(vec![
                ("r", Json::Num(r)),
                ("stripped", Json::complex(v)),
                ("norm", Json::Num(v.norm())),
            ])
        })
        .collect();
    let mut radial = Vec::new();
    for &r in &[0.5, 1.0, 2.0, 4.0, 8.0] {
        let v = zero.eval(r)?;
        radial.push(Json::Obj(vec![
            ("r", Json::Num(r)),
            ("value", Json::complex(v)),
        ]));
    }
    Ok(Json::Obj(vec![
        (
            "path",
            Json::Str(match a.path {
                ScatterPath::Inverse6 => "inverse6".into(),
                ScatterPath::Inverse4 => "inverse4".into(),
            }),
        ),
        ("k", Json::Num(k)),
        ("mapped", mapped),
        ("pair", Json::Int(a.pair as i64)),
        ("nu", Json::complex(nu)),
        ("radial_samples", Json::Arr(radial)),
        ("origin_report", Json::Arr(origin)),
        ("infinity_report", Json::Arr(infinity)),
    ])
    .to_string())
}

fn cmd_transform(a: &TransformArgs) -> Result<String, CliError> {
    match a.op {
        TransformOp::T1 | TransformOp::T2 | TransformOp::T3 | TransformOp::Tau => {
            let params = build_eq(a)?;
            let rule = match a.op {
                TransformOp::T1 => Rule::T1,
                TransformOp::T2 => Rule::T2,
                TransformOp::T3 => Rule::T3,
                _ => Rule::Tau,
            };
            let r = apply_rule(rule, &params)?;
            let (b1, b2, b3, q) = match &r.new_params {
                EquationParams::InceGswe(p) => (p.b1, p.b2, p.b3, p.q),
                EquationParams::InceDche(p) => (p.b1, p.b2, p.b3, p.q),
                _ => unreachable!("rules map within the Ince family"),
            };
            Ok(Json::Obj(vec![
                ("rule", Json::Str(format!("{rule:?}").to_lowercase())),
                ("b1", Json::complex(b1)),
                ("b2", Json::complex(b2)),
                ("b3", Json::complex(b3)),
                ("q", Json::complex(q)),
                ("arg_map", Json::Str(format!("{:?}", r.arg_map))),
                ("pow_z", Json::complex(r.pow_z)),
                ("pow_z_minus_z0", Json::complex(r.pow_z_minus_z0)),
                ("exp_inv_z", Json::complex(r.exp_inv_z)),
            ])
            .to_string())
        }
        TransformOp::N1 | TransformOp::N2 | TransformOp::N3 => {
            let params = build_eq(a)?;
            let kind = match a.op {
                TransformOp::N1 => NormalFormKind::N1,
                TransformOp::N2 => NormalFormKind::N2,
                _ => NormalFormKind::N3,
            };
            let nf = normal_form(kind, &params, Some(parse_complex(&a.n3_scale)?))?;
            let terms: Vec<Json> = nf
                .terms
                .iter()
                .map(|&(p, c)| {
                    Json::Obj(vec![
                        ("power", Json::Int(p as i64)),
                        ("coeff", Json::complex(c)),
                    ])
                })
                .collect();
            Ok(Json::Obj(vec![
                ("normal_form", Json::Str(format!("{kind:?}").to_lowercase())),
                ("scale", Json::complex(nf.scale)),
                ("terms", Json::Arr(terms)),
            ])
            .to_string())
        }
        TransformOp::Degenerate => {
            // degenerate reductions take raw coefficients (B1/q/omega may be 0)
            let b1 = parse_complex(&a.b1)?;
            let b2 = parse_complex(&a.b2)?;
            let b3 = parse_complex(&a.b3)?;
            let red = match a.equation {
                EquationKind::Dche => degenerate_reduce_dche(
                    b1,
                    b2,
                    b3,
                    parse_complex(&a.eta)?,
                    parse_complex(&a.omega)?,
                )?,
                EquationKind::InceDche => {
                    degenerate_reduce_ince_dche(b1, b2, b3, parse_complex(&a.q)?)?
                }
                _ => {
                    return Err(CliError::validation(
                        "degenerate reductions apply to the DCHE family".into(),
                    ))
                }
            };
            let fields = match &red {
                DegenerateReduction::ConfluentAtInfinity { alpha, a, b, omega } => vec![
                    ("reduction", Json::Str("confluent-at-infinity".into())),
                    ("alpha", Json::complex(*alpha)),
                    ("a", Json::complex(*a)),
                    ("b", Json::complex(*b)),
                    ("omega", Json::complex(*omega)),
                ],
                DegenerateReduction::ConfluentAtOrigin { beta, a, b, b1 } => vec![
                    ("reduction", Json::Str("confluent-at-origin".into())),
                    ("beta", Json::complex(*beta)),
                    ("a", Json::complex(*a)),
                    ("b", Json::complex(*b)),
                    ("b1", Json::complex(*b1)),
                ],
                DegenerateReduction::ModifiedBessel { order_squared, b2, q } => vec![
                    ("reduction", Json::Str("modified-bessel".into())),
                    ("order_squared", Json::complex(*order_squared)),
                    ("b2", Json::complex(*b2)),
                    ("q", Json::complex(*q)),
                ],
                DegenerateReduction::ConstantCoefficients { mu1, mu2 } => vec![
                    ("reduction", Json::Str("constant-coefficients".into())),
                    ("mu1", Json::complex(*mu1)),
                    ("mu2", Json::complex(*mu2)),
                ],
            };
            Ok(Json::Obj(fields).to_string())
        }
    }
}

fn build_eq(a: &TransformArgs) -> Result<EquationParams, CliError> {
    let eq = EqArgs {
        equation: a.equation,
        b1: a.b1.clone(),
        b2: a.b2.clone(),
        b3: a.b3.clone(),
        z0: a.z0.clone(),
        q: a.q.clone(),
        eta: a.eta.clone(),
        omega: a.omega.clone(),
    };
    eq.build()
}

fn cmd_verify(a: &VerifyArgs) -> Result<String, CliError> {
    let params = a.sol.eq.build()?;
    let family = a.sol.family.to_family();
    let (zero, inf) = build_pair(family, &params, &a.sol.nu_spec()?, a.sol.sqrt_sign()?)?;
    let sol = match a.sol.variant() {
        Variant::ZeroSide => zero.clone(),
        Variant::InfinitySide => inf.clone(),
    };
    let scale = match &params {
        EquationParams::InceGswe(p) => p.z0.norm(),
        _ => 1.0,
    };
    let grid = sector_grid(
        &params,
        a.r_lo * scale,
        a.r_hi * scale,
        -2.4,
        2.4,
        a.grid_count,
        1e-2 * scale,
    );
    let analytic = ode_residual_analytic(&params, &sol, &grid)?;
    let fd = ode_residual(
        &params,
        &|s, c| sol.eval_full(s, Some(c)).map(|o| o.value),
        &grid,
    )?;
    let wronskian = wronskian_constancy(
        &params,
        &|s, c| zero.eval_full(s, Some(c)).map(|o| o.value),
        &|s, c| inf.eval_full(s, Some(c)).map(|o| o.value),
        &grid,
    )?;
    let tail = convergence_ratio_check(&sol.window, &family_params(family, &params)?).ok();
    let integration = if grid.len() >= 2 {
        let z_a = grid[0];
        let z_b = grid[grid.len() - 1];
        let ea = sol.eval_full(z_a, Some(z_a))?;
        let (u_b, _) = integrate_ode(&params, z_a, (ea.value, ea.d1), z_b, 1e-12)?;
        let direct = sol.eval(z_b)?.value;
        Some((u_b - direct).norm() / direct.norm().max(f64::MIN_POSITIVE))
    } else {
        None
    };
    let passed = analytic.max_residual < a.tol_res;
    Ok(Json::Obj(vec![
        ("family", Json::Str(sol.family.name().into())),
        ("variant", Json::Str(format!("{:?}", sol.variant))),
        ("nu", Json::complex(sol.nu)),
        ("grid_points", Json::Int(analytic.grid_points as i64)),
        ("max_residual", Json::Num(analytic.max_residual)),
        ("mean_residual", Json::Num(analytic.mean_residual)),
        ("fd_max_residual", Json::Num(fd.max_residual)),
        (
            "wronskian_deviation",
            match wronskian.wronskian_deviation {
                Some(w) => Json::Num(w),
                None => Json::Null,
            },
        ),
        ("proportional_pair", Json::Bool(wronskian.proportional_pair)),
        (
            "tail_ratio_deviation",
            match tail {
                Some(t) => Json::Num(t),
                None => Json::Null,
            },
        ),
        (
            "integration_deviation",
            match integration {
                Some(d) => Json::Num(d),
                None => Json::Null,
            },
        ),
        ("tolerance", Json::Num(a.tol_res)),
        ("passed", Json::Bool(passed)),
    ])
    .to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let obj = Json::Obj(vec![(
                "error",
                Json::Obj(vec![
                    ("kind", Json::Str(e.kind.into())),
                    ("message", Json::Str(e.message.clone())),
                ]),
            )]);
            print!("{}", obj.to_string());
            ExitCode::from(e.exit)
        }
    }
}
