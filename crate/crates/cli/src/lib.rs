//! Command line surface: coefficient tables, the identity suite and
//! numeric grids.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use cjft_core::loop_engine::compute_table;
use cjft_core::suite::{Suite, CHECKS, MAX_ORDER};
use cjft_core::{CoreError, Report};
use cjft_exact::{parse_rational, rational_to_string, BigInt, BigRational, GaussianRational, KappaMap, ParamScalar};
use cjft_numeric::{
    DensityProfile, DensitySpec, Dump, FourierOracle, NumericError, PrecisionContext, Real,
};
use cjft_numeric::output::Meta;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "cjft", version, about = "Small-tau coefficients, identity checks and numeric densities near a spectrum singularity")]
pub struct Cli {
    /// Working precision in decimal digits for numeric output.
    #[arg(long, global = true, env = "CJFT_DIGITS", default_value_t = 40)]
    pub digits: u32,
    /// Output format; coefficient tables are JSON only.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// alpha_j, h_j and h~_j for j = 0..order.
    Coeffs(CoeffsArgs),
    /// Run the identity suite; exit code 1 on any failure.
    Verify(VerifyArgs),
    /// Density samples on a uniform grid.
    Density(DensityArgs),
    /// Fourier transform of rho - 1 on a tau grid.
    Ft(FtArgs),
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    /// Keep beta, p and q symbolic (the default when none is given).
    #[arg(long, conflicts_with_all = ["beta", "p", "q"])]
    pub symbolic: bool,
    /// beta as "a/b" or "sym"; kappa = beta/2 is substituted.
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    pub order: usize,
    /// Run only these checks (repeat or comma separate).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// List the check ids and exit.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long, default_value = "2")]
    pub beta: String,
    #[arg(long, default_value = "1")]
    pub p: String,
    #[arg(long, default_value = "0")]
    pub q: String,
    #[arg(long, default_value = "5")]
    pub xmax: String,
    /// Number of intervals; the grid has n + 1 points.
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Sample [0, xmax] instead of [-xmax, xmax].
    #[arg(long)]
    pub half: bool,
}

#[derive(Debug, Args)]
pub struct FtArgs {
    #[arg(long, default_value = "2")]
    pub beta: String,
    #[arg(long, default_value = "1")]
    pub p: String,
    #[arg(long, default_value = "0")]
    pub q: String,
    /// A single value or start:stop:step, inclusive.
    #[arg(long, allow_hyphen_values = true)]
    pub tau: String,
}

/// Result of a command: the text to emit and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

/// A parameter as given on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Symbolic,
    Value(BigRational),
}

impl Param {
    pub fn parse(s: &str) -> Result<Param, CliError> {
        if s.trim() == "sym" {
            return Ok(Param::Symbolic);
        }
        parse_number(s).map(Param::Value)
    }

    fn value(&self, name: &str) -> Result<BigRational, CliError> {
        match self {
            Param::Value(v) => Ok(v.clone()),
            Param::Symbolic => Err(CliError::Usage(format!("{name} must be numeric here, not \"sym\""))),
        }
    }
}

/// "a/b", an integer, or a plain decimal such as -0.125 or 1.5e-3, read exactly.
pub fn parse_number(s: &str) -> Result<BigRational, CliError> {
    let s = s.trim();
    let bad = || CliError::Usage(format!("not a number: {s:?}"));
    if s.contains('/') || !s.contains(['.', 'e', 'E']) {
        return parse_rational(s).map_err(|_| bad());
    }
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if frac.starts_with(['-', '+']) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigRational::from_integer(10.into());
    let pow = (0..scale.unsigned_abs()).fold(BigRational::from_integer(1.into()), |a, _| a * &ten);
    let d = BigRational::from_integer(digits);
    Ok(if scale >= 0 { d * pow } else { d / pow })
}

/// start:stop:step or a single value.
pub fn parse_grid(s: &str) -> Result<Vec<BigRational>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![parse_number(v)?]),
        [a, b, st] => {
            let (a, b, st) = (parse_number(a)?, parse_number(b)?, parse_number(st)?);
            if st <= BigRational::from_integer(0.into()) || b < a {
                return Err(CliError::Usage(format!("bad range {s:?}: need start <= stop and step > 0")));
            }
            let mut out = Vec::new();
            let mut x = a;
            while x <= b {
                out.push(x.clone());
                x += &st;
                if out.len() > 100_000 {
                    return Err(CliError::Usage("range has more than 100000 points".into()));
                }
            }
            Ok(out)
        }
        _ => Err(CliError::Usage(format!("bad grid {s:?}: use a value or start:stop:step"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexDecimal {
    pub re: String,
    pub im: String,
}

/// Values with (2 pi)^pi_power folded in, present when nothing is symbolic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericEntry {
    pub alpha: ComplexDecimal,
    pub h: ComplexDecimal,
    pub h_tilde: ComplexDecimal,
}

/// One order of the coefficient table; each exact value is multiplied by
/// (2 pi)^pi_power.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub order: usize,
    pub alpha: ParamScalar,
    pub h: ParamScalar,
    pub h_tilde: ParamScalar,
    pub pi_power: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffFile {
    /// "sym" or the substituted value.
    pub beta: String,
    pub p: String,
    pub q: String,
    pub entries: Vec<CoeffEntry>,
}

fn param_label(p: &Param) -> String {
    match p {
        Param::Symbolic => "sym".into(),
        Param::Value(v) => rational_to_string(v),
    }
}

pub fn coeffs(args: &CoeffsArgs, ctx: &PrecisionContext) -> Result<CoeffFile, CliError> {
    if args.order > MAX_ORDER {
        return Err(CliError::Usage(format!("--order {} above the cap {MAX_ORDER}", args.order)));
    }
    let get = |o: &Option<String>| o.as_deref().map(Param::parse).transpose().map(|v| v.unwrap_or(Param::Symbolic));
    let (beta, p, q) = (get(&args.beta)?, get(&args.p)?, get(&args.q)?);
    let kmap = match &beta {
        Param::Symbolic => KappaMap::identity(),
        Param::Value(b) if *b > BigRational::from_integer(0.into()) => {
            KappaMap::value(b / BigRational::from_integer(2.into()))
        }
        Param::Value(_) => return Err(CliError::Usage("beta must be positive".into())),
    };
    let img = |x: &Param, sym: ParamScalar| match x {
        Param::Symbolic => sym,
        Param::Value(v) => ParamScalar::rational(v.clone()),
    };
    let (p_img, q_img) = (img(&p, ParamScalar::p()), img(&q, ParamScalar::q()));
    let table = compute_table(args.order)?;
    let sub = |x: &ParamScalar| x.substitute(&kmap, &p_img, &q_img);
    let numeric_ok = [&beta, &p, &q].iter().all(|x| matches!(x, Param::Value(_)));
    let _g = ctx.enter();
    let mut entries = Vec::new();
    for j in 0..=args.order {
        let pi_power = table.h[j].pi_power;
        let (alpha, h, ht) = (sub(&table.alphas[j]), sub(&table.h[j].value), sub(&table.h_tilde[j].value));
        let numeric = if numeric_ok {
            let dec = |x: &ParamScalar| -> Result<ComplexDecimal, CliError> {
                let c = x.as_constant().ok_or_else(|| CliError::Usage("substitution left a symbol".into()))?;
                Ok(scaled_decimal(&c, pi_power, ctx.digits as usize))
            };
            Some(NumericEntry { alpha: dec(&alpha)?, h: dec(&h)?, h_tilde: dec(&ht)? })
        } else {
            None
        };
        entries.push(CoeffEntry { order: j, alpha, h, h_tilde: ht, pi_power, numeric });
    }
    Ok(CoeffFile { beta: param_label(&beta), p: param_label(&p), q: param_label(&q), entries })
}

fn scaled_decimal(c: &GaussianRational, pi_power: i32, digits: usize) -> ComplexDecimal {
    let two_pi = Real::pi() * Real::from_i64(2);
    let s = if pi_power >= 0 { two_pi.powi(pi_power as usize) } else { two_pi.powi((-pi_power) as usize).recip() };
    ComplexDecimal {
        re: (Real::from_rational(&c.re) * &s).to_decimal(digits),
        im: (Real::from_rational(&c.im) * &s).to_decimal(digits),
    }
}

pub fn verify(args: &VerifyArgs, ctx: &PrecisionContext) -> Result<Vec<Report>, CliError> {
    for id in &args.only {
        if !CHECKS.contains(&id.as_str()) {
            return Err(CliError::Usage(format!("unknown check {id:?}; known: {}", CHECKS.join(", "))));
        }
    }
    let suite = Suite::new(args.order, ctx.clone())?;
    let ids: Vec<&str> = if args.only.is_empty() { CHECKS.to_vec() } else { args.only.iter().map(String::as_str).collect() };
    let mut out = Vec::new();
    for id in ids {
        out.push(suite.run(id).unwrap_or_else(|e| {
            let mut r = Report::new(id);
            r.push("ran", false, e.to_string());
            r
        }));
    }
    Ok(out)
}

fn density_spec(beta: &str, p: &str, q: &str) -> Result<DensitySpec, CliError> {
    let b = Param::parse(beta)?.value("beta")?;
    let beta = match b.to_integer().try_into() {
        Ok(v @ (2u32 | 4)) if b.is_integer() => v,
        _ => return Err(CliError::Usage(format!("numeric beta must be 2 or 4, got {b}"))),
    };
    Ok(DensitySpec { beta, p: Param::parse(p)?.value("p")?, q: Param::parse(q)?.value("q")? })
}

pub fn density(args: &DensityArgs, ctx: &PrecisionContext) -> Result<Dump, CliError> {
    let spec = density_spec(&args.beta, &args.p, &args.q)?;
    let x_max = parse_number(&args.xmax)?;
    if x_max <= BigRational::from_integer(0.into()) {
        return Err(CliError::Usage("--xmax must be positive".into()));
    }
    let _g = ctx.enter();
    let grid = DensityProfile::uniform_grid(&x_max, args.n, args.half);
    Ok(Dump::density(&DensityProfile::sample(&spec, grid, ctx)?))
}

pub fn ft(args: &FtArgs, ctx: &PrecisionContext) -> Result<Dump, CliError> {
    let spec = density_spec(&args.beta, &args.p, &args.q)?;
    let taus = parse_grid(&args.tau)?;
    let oracle = FourierOracle::new(&spec, ctx)?;
    let _g = ctx.enter();
    let results = taus.iter().map(|t| oracle.transform(&Real::from_rational(t))).collect::<Result<Vec<_>, _>>()?;
    let meta = Meta {
        beta: spec.beta,
        p: spec.p.to_string(),
        q: spec.q.to_string(),
        formula: spec.formula()?,
        digits: ctx.digits,
        tail_model: None,
    };
    Ok(Dump::transform(meta, &results))
}

fn reports_text(reports: &[Report]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&r.to_string());
    }
    let total: usize = reports.iter().map(|r| r.items.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    s.push_str(&format!("{} checks, {} failed\n", total, failed));
    s
}

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = PrecisionContext::with_digits(cli.digits)?;
    match &cli.command {
        Command::Coeffs(a) => {
            if cli.format == Some(Format::Csv) {
                return Err(CliError::Usage("coefficient tables are written as JSON only".into()));
            }
            let f = coeffs(a, &ctx)?;
            Ok(Outcome { text: serde_json::to_string_pretty(&f).expect("serializes") + "\n", ok: true })
        }
        Command::Verify(a) => {
            if a.list {
                return Ok(Outcome { text: CHECKS.join("\n") + "\n", ok: true });
            }
            let reps = verify(a, &ctx)?;
            let ok = reps.iter().all(Report::passed);
            let text = match cli.format {
                None => reports_text(&reps),
                Some(Format::Json) => {
                    serde_json::to_string_pretty(&serde_json::json!({ "passed": ok, "reports": reps })).expect("serializes")
                        + "\n"
                }
                Some(Format::Csv) => return Err(CliError::Usage("verify writes text or JSON".into())),
            };
            Ok(Outcome { text, ok })
        }
        Command::Density(a) => Ok(Outcome { text: emit(&density(a, &ctx)?, cli.format), ok: true }),
        Command::Ft(a) => Ok(Outcome { text: emit(&ft(a, &ctx)?, cli.format), ok: true }),
    }
}

fn emit(d: &Dump, f: Option<Format>) -> String {
    match f {
        Some(Format::Json) => d.to_json() + "\n",
        _ => d.to_csv(),
    }
}
