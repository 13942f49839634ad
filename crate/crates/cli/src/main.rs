use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::{Complex, Float};
use serde_json::{json, Map, Value};

use zetainv_core::constants::{
    eta_constants, stieltjes_determinant, stieltjes_jet, EtaMethod,
};
use zetainv_core::invzeta::{
    attractor, error_grid, identity_suite, in_singular_strip, izeta_limit, izeta_product, AttractorTable, Sign,
};
use zetainv_core::logderiv::keiper_li;
use zetainv_core::mp::{format_complex, format_sig, parse_complex, parse_decimal};
use zetainv_core::rootrec::{
    bessel_zero, golomb_primes, invert_function, nontrivial_zero, real_part_check, reference_zeros, sinc_zero,
    trivial_zero, InverseTarget, NontrivialMethod, RootEstimate,
};
use zetainv_core::{Error, PrecisionContext};

#[derive(Parser, Debug)]
#[command(name = "zetainv", version, about = "Zeros and inverses from log-derivative jets")]
struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, env = "ZETAINV_DIGITS", default_value_t = 200)]
    digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for grid commands.
    #[arg(long, global = true, default_value_t = 1)]
    width: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zeros of sinc, Bessel J, and the zeta function.
    #[command(subcommand)]
    Zeros(ZerosCmd),
    /// Consistency checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Solve zeta(s) = w.
    Inverse(InverseArgs),
    /// Branch singularity attractor tables.
    #[command(subcommand)]
    Attractor(AttractorCmd),
    /// Residual grids for plotting.
    #[command(subcommand)]
    Grid(GridCmd),
    /// Stieltjes, eta and Keiper-Li constants.
    Constants(ConstantsArgs),
    /// Invert elementary and special functions.
    Invert(InvertArgs),
    /// Primes from zeta values.
    Primes {
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value = "200")]
        s: String,
    },
}

#[derive(Subcommand, Debug)]
enum ZerosCmd {
    Sinc {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        m: usize,
    },
    Bessel {
        #[arg(long, default_value = "0")]
        nu: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        m: usize,
    },
    Trivial {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        m: usize,
        /// File of ordinates t_k, one per line, deflated as 1/2 +/- i t_k.
        #[arg(long)]
        corrections: Option<PathBuf>,
    },
    Nontrivial {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        m: usize,
        #[arg(long, value_enum, default_value_t = NtMethod::Modsq)]
        method: NtMethod,
        /// File of lower ordinates, one per line; computed when absent.
        #[arg(long)]
        known: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NtMethod {
    Modsq,
    Xi,
    Hurwitz,
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// Real part of the first nontrivial zero.
    RealPart {
        #[arg(long, default_value_t = 50)]
        m: usize,
    },
}

#[derive(Args, Debug)]
struct InverseArgs {
    /// `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long)]
    m: Option<usize>,
    /// Attractor table file (text or .json).
    #[arg(long)]
    table: Option<PathBuf>,
    /// Use the limit formula instead of the product over the attractor.
    #[arg(long)]
    limit_formula: bool,
    #[arg(long, default_value_t = 1e-6)]
    threshold: f64,
}

#[derive(Subcommand, Debug)]
enum AttractorCmd {
    Generate {
        #[arg(long, default_value_t = 50)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Verify {
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GridCmd {
    /// `log10 E(w)` over a rectangle.
    Error {
        #[arg(long, allow_hyphen_values = true, default_value = "-3:3")]
        re: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-3:3")]
        im: String,
        #[arg(long, default_value_t = 11)]
        points: usize,
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-6)]
        threshold: f64,
    },
}

#[derive(Args, Debug)]
struct ConstantsArgs {
    #[arg(value_enum)]
    kind: ConstKind,
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, value_enum, default_value_t = ConstMethod::Jet)]
    method: ConstMethod,
    /// Matrix size for the determinant method.
    #[arg(long, default_value_t = 32)]
    k: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstKind {
    Stieltjes,
    Eta,
    KeiperLi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstMethod {
    Jet,
    Coffey,
    Determinant,
}

#[derive(Args, Debug)]
struct InvertArgs {
    #[arg(value_enum)]
    function: InvertKind,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, default_value_t = 50)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    nu: u32,
    /// Ascending polynomial coefficients, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InvertKind {
    Gamma,
    Besselj,
    Cos,
    Lambertw,
    Poly,
}

/// Result of one command before formatting.
struct Output {
    value: Value,
    m: Option<usize>,
    digits: u32,
    warnings: Vec<String>,
    rows: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Output {
    fn new(value: Value, m: Option<usize>, digits: u32) -> Self {
        Output { value, m, digits, warnings: Vec::new(), rows: None }
    }
}

enum Failure {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            other => Failure::Numeric(other),
        }
    }
}

type CmdResult = std::result::Result<Output, Failure>;

fn sig(digits: u32) -> usize {
    digits as usize
}

fn complex_str(z: &Complex, digits: u32) -> String {
    if z.imag().is_zero() {
        format_sig(z.real(), sig(digits))
    } else {
        format_complex(z, sig(digits))
    }
}

fn estimate_json(e: &RootEstimate, digits: u32) -> Value {
    json!({
        "root": complex_str(&e.value, digits),
        "order": e.order,
        "error_log10": e.error_log10,
        "rounded": e.rounded,
    })
}

fn parse_w(text: &str, ctx: &PrecisionContext) -> Result<Complex, Failure> {
    Ok(parse_complex(text, ctx)?)
}

fn read_floats(path: &Path, ctx: &PrecisionContext) -> Result<Vec<Float>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_decimal(l, ctx).map_err(Failure::from))
        .collect()
}

fn load_table(path: Option<&Path>) -> Result<AttractorTable, Failure> {
    match path {
        Some(p) => Ok(AttractorTable::load(p)?),
        None => Ok(AttractorTable::bundled_m50()),
    }
}

fn parse_range(text: &str) -> Result<(f64, f64), Failure> {
    let bad = || Failure::Usage(format!("range must be lo:hi, got {text}"));
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    let lo = a.trim().parse::<f64>().map_err(|_| bad())?;
    let hi = b.trim().parse::<f64>().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn run(cli: &Cli) -> CmdResult {
    let ctx = PrecisionContext::new(cli.digits)?;
    let d = cli.digits;
    match &cli.command {
        Command::Zeros(z) => run_zeros(z, &ctx),
        Command::Check(CheckCmd::RealPart { m }) => {
            let sigma = real_part_check(*m, &ctx)?;
            let dev = Float::with_val(ctx.bits(), &sigma - 0.5f64);
            Ok(Output::new(
                json!({ "sigma": format_sig(&sigma, sig(d)), "deviation": format_sig(&dev, 10) }),
                Some(*m),
                d,
            ))
        }
        Command::Inverse(a) => run_inverse(a, &ctx),
        Command::Attractor(a) => run_attractor(a, &ctx),
        Command::Grid(GridCmd::Error { re, im, points, table, out, threshold }) => {
            let table = load_table(table.as_deref())?;
            let grid = error_grid(parse_range(re)?, parse_range(im)?, *points, &table, *threshold, cli.width)?;
            let header = ["re", "im", "lambda", "log10_error", "in_strip", "failure"].map(String::from).to_vec();
            let rows: Vec<Vec<String>> = grid
                .iter()
                .map(|p| {
                    vec![
                        p.re.to_string(),
                        p.im.to_string(),
                        p.lambda.map_or(String::new(), |l| l.to_string()),
                        p.log10_error.map_or(String::new(), |e| format!("{e:.3}")),
                        p.in_strip.to_string(),
                        p.failure.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            if let Some(path) = out {
                std::fs::write(path, csv_text(&header, &rows)).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let mut o = Output::new(serde_json::to_value(&grid).unwrap_or(Value::Null), Some(table.m), table.digits);
            o.rows = Some((header, rows));
            Ok(o)
        }
        Command::Constants(a) => run_constants(a, &ctx),
        Command::Invert(a) => run_invert(a, &ctx),
        Command::Primes { count, s } => {
            let s = parse_decimal(s, &ctx)?;
            let p = golomb_primes(*count, &s, &ctx)?;
            Ok(Output::new(json!(p), None, d))
        }
    }
}

fn run_zeros(cmd: &ZerosCmd, ctx: &PrecisionContext) -> CmdResult {
    let d = ctx.digits;
    match cmd {
        ZerosCmd::Sinc { n, m } => {
            let e = sinc_zero(*n, *m, ctx)?;
            Ok(Output::new(estimate_json(&e, d), Some(*m), d))
        }
        ZerosCmd::Bessel { nu, n, m } => {
            let nu = parse_decimal(nu, ctx)?;
            let mut known: Vec<Complex> = Vec::new();
            let mut roots = Vec::new();
            for _ in 0..(*n).max(1) {
                let e = bessel_zero(&nu, &known, *m, ctx)?;
                known.push(e.value.clone());
                roots.push(estimate_json(&e, d));
            }
            Ok(Output::new(Value::Array(roots), Some(*m), d))
        }
        ZerosCmd::Trivial { n, m, corrections } => {
            let corr = match corrections {
                Some(p) => read_floats(p, ctx)?,
                None => Vec::new(),
            };
            let e = trivial_zero(*n, *m, &corr, ctx)?;
            Ok(Output::new(estimate_json(&e, d), Some(*m), d))
        }
        ZerosCmd::Nontrivial { n, m, method, known } => {
            let known = match known {
                Some(p) => read_floats(p, ctx)?,
                None if *n > 1 => reference_zeros(n - 1, ctx)?,
                None => Vec::new(),
            };
            let method = match method {
                NtMethod::Modsq => NontrivialMethod::ModsqAsymptotic,
                NtMethod::Xi => NontrivialMethod::Z1Xi,
                NtMethod::Hurwitz => NontrivialMethod::Z1Hurwitz,
            };
            let e = nontrivial_zero(*n, *m, method, &known, ctx)?;
            let mut o = Output::new(
                json!({ "t": format_sig(&e.t, sig(d)), "stable_digits": e.stable_digits }),
                Some(*m),
                d,
            );
            if e.stable_digits < 1.0 {
                o.warnings.push(format!("estimate stable to only {:.1} digits", e.stable_digits));
            }
            Ok(o)
        }
    }
}

fn run_inverse(a: &InverseArgs, ctx: &PrecisionContext) -> CmdResult {
    let w = parse_w(&a.w, ctx)?;
    if a.limit_formula {
        let m = a.m.unwrap_or(50);
        let v = izeta_limit(&w, m, Sign::Auto, ctx)?;
        let mut o = Output::new(json!({ "s": complex_str(&v.s, ctx.digits) }), Some(m), ctx.digits);
        o.warnings = v.warnings;
        return Ok(o);
    }
    let table = match (&a.table, a.m) {
        (Some(p), _) => load_table(Some(p))?,
        (None, Some(m)) if m != 50 => attractor(m, ctx)?,
        (None, _) => load_table(None)?,
    };
    let tctx = table.ctx();
    let w = parse_w(&a.w, &tctx)?;
    let b = izeta_product(&w, &table, a.threshold)?;
    let mut o = Output::new(
        json!({
            "s": complex_str(&b.s, tctx.digits),
            "lambda": b.lambda,
            "residual_log10": b.residual_log10(),
        }),
        Some(table.m),
        table.digits,
    );
    if in_singular_strip(&w, &tctx) {
        o.warnings.push("w lies in the singular strip [j1, 1]; the result may be unreliable".into());
    }
    Ok(o)
}

fn identity_rows(report: &zetainv_core::invzeta::IdentityReport) -> (Vec<String>, Vec<Vec<String>>) {
    let header = ["name", "value", "expected", "digits", "required", "pass"].map(String::from).to_vec();
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.value.clone(),
                c.expected.clone(),
                format!("{:.1}", c.digits),
                format!("{:.0}", c.required),
                c.pass.to_string(),
            ]
        })
        .collect();
    (header, rows)
}

fn run_attractor(a: &AttractorCmd, ctx: &PrecisionContext) -> CmdResult {
    match a {
        AttractorCmd::Generate { m, out } => {
            let t = attractor(*m, ctx)?;
            if let Some(p) = out {
                t.save(p)?;
            }
            let roots: Vec<String> = t.roots.iter().map(|r| format_complex(r, 30)).collect();
            Ok(Output::new(
                json!({ "roots": roots, "real_count": t.real_count(), "saved": out.as_ref().map(|p| p.display().to_string()) }),
                Some(*m),
                t.digits,
            ))
        }
        AttractorCmd::Verify { file } => {
            let t = load_table(file.as_deref())?;
            let report = identity_suite(&t)?;
            let mut o = Output::new(serde_json::to_value(&report).unwrap_or(Value::Null), Some(t.m), t.digits);
            for c in report.checks.iter().filter(|c| !c.pass) {
                o.warnings.push(format!("{}: {:.1} digits, below {:.0}", c.name, c.digits, c.required));
            }
            o.rows = Some(identity_rows(&report));
            Ok(o)
        }
    }
}

fn run_constants(a: &ConstantsArgs, ctx: &PrecisionContext) -> CmdResult {
    let d = ctx.digits;
    let k = a.k.max(a.n + 1).div_ceil(4) * 4;
    let (label, first, values): (&str, usize, Vec<Float>) = match a.kind {
        ConstKind::Stieltjes => {
            let v = match a.method {
                ConstMethod::Determinant => {
                    (0..=a.n).map(|n| stieltjes_determinant(n, k, ctx)).collect::<zetainv_core::Result<_>>()?
                }
                _ => stieltjes_jet(a.n, ctx)?,
            };
            ("gamma", 0, v)
        }
        ConstKind::Eta => {
            let method = match a.method {
                ConstMethod::Jet => EtaMethod::Jet,
                ConstMethod::Coffey => EtaMethod::Coffey,
                ConstMethod::Determinant => EtaMethod::Determinant { k },
            };
            ("eta", 0, eta_constants(a.n, method, ctx)?)
        }
        ConstKind::KeiperLi => ("lambda", 1, keiper_li(a.n.max(1), ctx)?),
    };
    let header = vec!["index".to_string(), label.to_string()];
    let rows: Vec<Vec<String>> =
        values.iter().enumerate().map(|(i, v)| vec![(i + first).to_string(), format_sig(v, sig(d))]).collect();
    let mut map = Map::new();
    for r in &rows {
        map.insert(format!("{label}_{}", r[0]), Value::String(r[1].clone()));
    }
    let mut o = Output::new(Value::Object(map), None, d);
    o.rows = Some((header, rows));
    Ok(o)
}

fn run_invert(a: &InvertArgs, ctx: &PrecisionContext) -> CmdResult {
    let w = parse_w(&a.w, ctx)?;
    let target = match a.function {
        InvertKind::Gamma => InverseTarget::Gamma,
        InvertKind::Besselj => InverseTarget::BesselJ(a.nu),
        InvertKind::Cos => InverseTarget::Cos,
        InvertKind::Lambertw => InverseTarget::LambertW,
        InvertKind::Poly => {
            let text = a.coeffs.as_deref().ok_or_else(|| Failure::Usage("poly needs --coeffs".into()))?;
            let c = text.split(',').map(|t| parse_complex(t.trim(), ctx)).collect::<zetainv_core::Result<Vec<_>>>()?;
            InverseTarget::Poly(c)
        }
    };
    let s = invert_function(&target, &w, a.m, ctx)?;
    let mut value = json!({ "s": complex_str(&s, ctx.digits) });
    if let Ok(f) = target.forward(&s, ctx) {
        let r = Complex::with_val(ctx.bits(), f - &w);
        value["residual_log10"] = json!(zetainv_core::mp::log10_abs(&r));
    }
    Ok(Output::new(value, Some(a.m), ctx.digits))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for line in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let fields: Vec<String> = line.iter().map(|f| csv_field(f)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                let key = if prefix.is_empty() { i.to_string() } else { format!("{prefix}.{i}") };
                flatten(&key, x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn render(o: &Output, format: Format, elapsed_ms: u128) -> String {
    match format {
        Format::Json => {
            let doc = json!({
                "value": o.value,
                "digits": o.digits,
                "m": o.m,
                "elapsed_ms": elapsed_ms,
                "warnings": o.warnings,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap_or_default())
        }
        Format::Csv => match &o.rows {
            Some((h, r)) => csv_text(h, r),
            None => {
                let mut pairs = Vec::new();
                flatten("", &o.value, &mut pairs);
                let rows: Vec<Vec<String>> = pairs.into_iter().map(|(k, v)| vec![k, v]).collect();
                csv_text(&["key".into(), "value".into()], &rows)
            }
        },
        Format::Text => {
            let mut out = String::new();
            if let Some((h, r)) = &o.rows {
                out.push_str(&h.join("\t"));
                out.push('\n');
                for row in r {
                    out.push_str(&row.join("\t"));
                    out.push('\n');
                }
            } else {
                let mut pairs = Vec::new();
                flatten("", &o.value, &mut pairs);
                for (k, v) in pairs {
                    if k.is_empty() {
                        out.push_str(&format!("{v}\n"));
                    } else {
                        out.push_str(&format!("{k}: {v}\n"));
                    }
                }
            }
            for w in &o.warnings {
                out.push_str(&format!("warning: {w}\n"));
            }
            out
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DominanceViolated { .. } => "dominance_violated",
        Error::BranchNotFound { .. } => "branch_not_found",
        Error::NoConvergence(_) => "no_convergence",
        Error::Singularity => "singularity",
        Error::NoRoot => "no_root",
        Error::Ambiguous(_) => "ambiguous",
        Error::ZeroConstantTerm => "zero_constant_term",
        Error::Pole => "pole",
        Error::Format(_) => "format",
        _ => "numeric",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(o) => {
            print!("{}", render(&o, cli.format, start.elapsed().as_millis()));
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numeric(e)) => {
            if cli.format == Format::Json {
                let doc = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() }, "digits": cli.digits });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap_or_default());
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(3)
        }
    }
}
