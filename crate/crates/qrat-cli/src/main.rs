//! `qrat` — command-line front end for the q-deformed rationals library.
//!
//! Subcommands: `deform`, `cf`, `braid`, `orbit`, `jones`, `farey`,
//! `classify`, `stab`. Exit codes: 0 on success, 2 on domain errors
//! (message on standard error), 64 on usage errors.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qrat_core::num_complex::Complex64;
use qrat_core::braidcore::{continued_normal_form, BraidWord};
use qrat_core::contfrac::{to_even_cf, Rational};
use qrat_core::hnauto::{apply_braid, c2_automaton, hom, occ, p1, Base, SphericalObject};
use qrat_core::num_bigint::BigInt;
use qrat_core::num_rational::BigRational;
use qrat_core::num_traits::One;
use qrat_core::qboundary::{
    classify_boundary_point_exact, BoundaryClass, BoundaryKind,
};
use qrat_core::qfarey::{generate, render_svg, Half};
use qrat_core::qknots::{build_quiver, count_closures_dp, jones_abs, Family};
use qrat_core::qpoly::LaurentPoly;
use qrat_core::qrationals::{deform, qrat_pair, Side};
use qrat_core::stabmass::{basic_masses, boundary_limit, default_probes, gromov, StdStabCond};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "qrat", version, about = "q-deformed rationals toolkit")]
struct Cli {
    /// Configuration file with key=value lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Right/left q-deformations of a rational number.
    Deform {
        /// The rational, e.g. "5/2" or "-3".
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "exact")]
        format: DeformFormat,
        /// Evaluation point for --format float.
        #[arg(long)]
        q: Option<String>,
    },
    /// Canonical even-length continued fraction expansion.
    Cf {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Continued normal form of a braid word.
    Braid { word: String },
    /// Harder–Narasimhan data of the orbit object (braid applied to P1).
    Orbit {
        #[arg(long)]
        braid: String,
        #[arg(long)]
        q: Option<String>,
        /// Comma-separated subset of occ,hom,label,vector.
        #[arg(long, default_value = "occ,hom,label,vector")]
        emit: String,
    },
    /// Jones polynomial (up to units) of the rational knot r/s.
    Jones {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "both")]
        route: JonesRoute,
    },
    /// q-Farey tessellation of a half plane, optionally rendered as SVG.
    Farey {
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, value_enum, default_value = "positive")]
        half: HalfArg,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        scale: Option<f64>,
    },
    /// Classify a boundary point: interval point or deformed irrational.
    Classify {
        #[arg(long)]
        q: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Stability-condition numerics.
    Stab {
        #[command(subcommand)]
        command: StabCommand,
    },
}

#[derive(Subcommand)]
enum StabCommand {
    /// Basic masses and Gromov coordinates of a standard condition.
    Gromov(GromovArgs),
    /// Boundary-limit convergence report for a braid translate.
    Limit {
        #[arg(long)]
        braid: String,
        #[arg(long)]
        q: Option<String>,
        #[arg(long, default_value_t = 60)]
        m_max: usize,
    },
}

#[derive(Args)]
struct GromovArgs {
    /// Central charge of P1, e.g. "1+2i" or "i".
    #[arg(long, allow_hyphen_values = true)]
    z1: String,
    /// Central charge of P2.
    #[arg(long, allow_hyphen_values = true)]
    z2: String,
    #[arg(long)]
    q: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Sharp,
    Flat,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeformFormat {
    Exact,
    Float,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum JonesRoute {
    Closures,
    Flat,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum HalfArg {
    Positive,
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

struct Config {
    default_q: String,
    default_depth: u32,
    output_format: OutputFormat,
    svg_scale: f64,
    #[allow(dead_code)]
    rng_seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            default_q: "0.5".to_string(),
            default_depth: 4,
            output_format: OutputFormat::Json,
            svg_scale: 5.0,
            rng_seed: 0,
        }
    }
}

fn load_config(path: Option<&PathBuf>) -> Result<Config, String> {
    let mut config = Config::default();
    if let Some(path) = path {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("bad config line {line:?}"))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "default_q" => config.default_q = value.to_string(),
                "default_depth" => {
                    config.default_depth = value
                        .parse()
                        .map_err(|_| format!("bad default_depth {value:?}"))?
                }
                "output_format" => {
                    config.output_format = match value {
                        "text" => OutputFormat::Text,
                        "json" => OutputFormat::Json,
                        "csv" => OutputFormat::Csv,
                        other => return Err(format!("bad output_format {other:?}")),
                    }
                }
                "svg_scale" => {
                    config.svg_scale = value
                        .parse()
                        .map_err(|_| format!("bad svg_scale {value:?}"))?
                }
                "rng_seed" => {
                    config.rng_seed = value
                        .parse()
                        .map_err(|_| format!("bad rng_seed {value:?}"))?
                }
                other => return Err(format!("unknown config key {other:?}")),
            }
        }
    }
    if let Ok(seed) = std::env::var("QRAT_SEED") {
        config.rng_seed = seed
            .parse()
            .map_err(|_| format!("bad QRAT_SEED {seed:?}"))?;
    }
    let q = parse_q_f64(&config.default_q)?;
    if !(q > 0.0 && q < 1.0) {
        return Err(format!("default_q must lie in (0,1), got {q}"));
    }
    if config.default_depth > 12 {
        return Err("default_depth must be at most 12".to_string());
    }
    Ok(config)
}

/// Parses `--q` values: decimals like "0.3" or exact fractions "3/10".
fn parse_q_exact(text: &str) -> Result<BigRational, String> {
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| format!("bad q {text:?}"))?;
        let den: BigInt = den.trim().parse().map_err(|_| format!("bad q {text:?}"))?;
        if den == BigInt::from(0) {
            return Err(format!("bad q {text:?}"));
        }
        return Ok(BigRational::new(num, den));
    }
    parse_decimal(text)
}

/// Parses a decimal string into an exact rational.
fn parse_decimal(text: &str) -> Result<BigRational, String> {
    let trimmed = text.trim();
    let (sign, digits) = match trimmed.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("bad number {text:?}"));
    }
    let mut numer = BigInt::from(0);
    for c in int_part.chars().chain(frac_part.chars()) {
        let d = c.to_digit(10).ok_or_else(|| format!("bad number {text:?}"))?;
        numer = numer * 10 + d;
    }
    let denom = BigInt::from(10).pow(frac_part.len() as u32);
    Ok(BigRational::new(BigInt::from(sign) * numer, denom))
}

fn parse_q_f64(text: &str) -> Result<f64, String> {
    use qrat_core::num_traits::ToPrimitive;
    parse_q_exact(text)?
        .to_f64()
        .ok_or_else(|| format!("bad q {text:?}"))
}

fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || format!("bad complex number {text:?}");
    let parse_coeff = |c: &str, default: f64| -> Result<f64, String> {
        match c {
            "" | "+" => Ok(default),
            "-" => Ok(-default),
            other => other.parse().map_err(|_| err()),
        }
    };
    if let Some(body) = s.strip_suffix('i') {
        // Find the split between real and imaginary parts: the last sign
        // that is not a leading sign or part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx].parse().map_err(|_| err())?;
                let im = parse_coeff(&body[idx..], 1.0)?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, parse_coeff(body, 1.0)?)),
        }
    } else {
        Ok(Complex64::new(s.parse().map_err(|_| err())?, 0.0))
    }
}

/// Rounds to 12 significant digits so repeated runs print identically.
fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - magnitude);
    (x * factor).round() / factor
}

fn float_value(x: f64) -> Value {
    if x.is_finite() {
        json!(sig12(x))
    } else {
        json!(x.to_string())
    }
}

fn float_text(x: f64) -> String {
    if x.is_finite() {
        format!("{}", sig12(x))
    } else {
        x.to_string()
    }
}

fn poly_entry(p: &LaurentPoly, q: Option<f64>) -> Result<Value, String> {
    let mut entry = json!({ "exact": p.to_string() });
    if let Some(q) = q {
        let v = p.eval_f64(q).map_err(|e| e.to_string())?;
        entry["value"] = float_value(v);
    }
    Ok(entry)
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    Rational::from_str(text).map_err(|e| e.to_string())
}

fn parse_braid(text: &str) -> Result<BraidWord, String> {
    BraidWord::from_str(text).map_err(|e| e.to_string())
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<(), String> {
    let config = load_config(cli.config.as_ref())?;
    match cli.command {
        Command::Deform { x, side, format, q } => cmd_deform(&config, &x, side, format, q),
        Command::Cf { x } => {
            let x = parse_rational(&x)?;
            println!("{}", to_even_cf(&x).to_text());
            Ok(())
        }
        Command::Braid { word } => cmd_braid(&word),
        Command::Orbit { braid, q, emit } => cmd_orbit(&braid, q, &emit),
        Command::Jones { x, route } => cmd_jones(&x, route),
        Command::Farey {
            q,
            depth,
            half,
            svg,
            scale,
        } => cmd_farey(&config, q, depth, half, svg, scale),
        Command::Classify { q, x, depth } => cmd_classify(&config, q, &x, depth),
        Command::Stab { command } => match command {
            StabCommand::Gromov(args) => cmd_stab_gromov(&config, args),
            StabCommand::Limit { braid, q, m_max } => {
                cmd_stab_limit(&config, &braid, q, m_max)
            }
        },
    }
}

fn cmd_deform(
    config: &Config,
    x: &str,
    side: SideArg,
    format: DeformFormat,
    q: Option<String>,
) -> Result<(), String> {
    let x = parse_rational(x)?;
    let q_text = q.unwrap_or_else(|| config.default_q.clone());
    let sides: &[(Side, &str)] = match side {
        SideArg::Sharp => &[(Side::Sharp, "sharp")],
        SideArg::Flat => &[(Side::Flat, "flat")],
        SideArg::Both => &[(Side::Sharp, "sharp"), (Side::Flat, "flat")],
    };
    match format {
        DeformFormat::Exact => {
            for (s, name) in sides {
                let (r, sd) = deform(&x, *s).map_err(|e| e.to_string())?;
                println!("{name}: ({r}) / ({sd})");
            }
        }
        DeformFormat::Float => {
            let qv = parse_q_f64(&q_text)?;
            for (s, name) in sides {
                let (r, sd) = deform(&x, *s).map_err(|e| e.to_string())?;
                let num = r.eval_f64(qv).map_err(|e| e.to_string())?;
                let den = sd.eval_f64(qv).map_err(|e| e.to_string())?;
                let value = if den == 0.0 { f64::INFINITY } else { num / den };
                println!("{name}: {}", float_text(value));
            }
        }
        DeformFormat::Json => {
            let pair = qrat_pair(&x).map_err(|e| e.to_string())?;
            let mut out = json!({ "x": x.to_string() });
            for (s, name) in sides {
                let (r, sd) = match s {
                    Side::Sharp => (&pair.rsharp, &pair.ssharp),
                    Side::Flat => (&pair.rflat, &pair.sflat),
                };
                out[name] = json!({
                    "R": { "exact": r.to_string(), "poly": r.to_json() },
                    "S": { "exact": sd.to_string(), "poly": sd.to_json() },
                });
            }
            print_json(&out);
        }
    }
    Ok(())
}

fn cmd_braid(word: &str) -> Result<(), String> {
    let w = parse_braid(word)?;
    let nf = continued_normal_form(&w).map_err(|e| e.to_string())?;
    print_json(&json!({
        "word": w.to_string(),
        "form": nf.form,
        "digits": nf.digits.to_text(),
        "m": nf.m,
        "n": nf.n,
        "label": nf.label().to_string(),
        "strict": nf.is_strict(),
    }));
    Ok(())
}

fn cmd_orbit(braid: &str, q: Option<String>, emit: &str) -> Result<(), String> {
    let w = parse_braid(braid)?;
    let qv = q.map(|t| parse_q_f64(&t)).transpose()?;
    let aut = c2_automaton();
    let x: SphericalObject = apply_braid(&aut, &p1(), &w).map_err(|e| e.to_string())?;
    let mut out = json!({ "braid": w.to_string() });
    for field in emit.split(',') {
        match field.trim() {
            "occ" => {
                out["occ"] = json!({
                    "P1": poly_entry(&occ(Base::P1, &x), qv)?,
                    "P2": poly_entry(&occ(Base::P2, &x), qv)?,
                });
            }
            "hom" => {
                out["hom"] = json!({
                    "P1": poly_entry(&hom(Base::P1, &x), qv)?,
                    "P2": poly_entry(&hom(Base::P2, &x), qv)?,
                });
            }
            "label" => {
                out["label"] = json!(x.label.to_string());
            }
            "vector" => {
                let v = &x.vector;
                out["vector"] = json!({
                    "pi1": poly_entry(&v.pi1, qv)?,
                    "pi2": poly_entry(&v.pi2, qv)?,
                    "pi12": poly_entry(&v.pi12, qv)?,
                    "pi21": poly_entry(&v.pi21, qv)?,
                    "states": x.states.iter().map(|s| format!("{s:?}")).collect::<Vec<_>>(),
                });
            }
            "" => {}
            other => return Err(format!("unknown emit field {other:?}")),
        }
    }
    print_json(&out);
    Ok(())
}

fn cmd_jones(x: &str, route: JonesRoute) -> Result<(), String> {
    let x = parse_rational(x)?;
    let poly = match route {
        JonesRoute::Both => jones_abs(&x).map_err(|e| e.to_string())?,
        JonesRoute::Closures => {
            let h = build_quiver(&x, Family::H).map_err(|e| e.to_string())?;
            count_closures_dp(&h).map_err(|e| e.to_string())?.polynomial()
        }
        JonesRoute::Flat => deform(&x, Side::Flat).map_err(|e| e.to_string())?.0,
    };
    use qrat_core::num_traits::ToPrimitive;
    let lo = poly
        .min_degree()
        .and_then(|d| d.to_i64())
        .unwrap_or(0)
        .min(0);
    let hi = poly.max_degree().and_then(|d| d.to_i64()).unwrap_or(0);
    let coefficients: Vec<i64> = (lo..=hi)
        .map(|e| poly.coeff_i64(e).to_i64().expect("small coefficient"))
        .collect();
    print_json(&json!({
        "knot_fraction": x.to_string(),
        "coefficients": coefficients,
        "polynomial": poly.to_string(),
    }));
    Ok(())
}

fn cmd_farey(
    config: &Config,
    q: Option<String>,
    depth: Option<u32>,
    half: HalfArg,
    svg: Option<PathBuf>,
    scale: Option<f64>,
) -> Result<(), String> {
    let q = parse_q_f64(&q.unwrap_or_else(|| config.default_q.clone()))?;
    let depth = depth.unwrap_or(config.default_depth);
    if depth > 12 {
        return Err(format!("depth {depth} exceeds the output-size guard of 12"));
    }
    let half = match half {
        HalfArg::Positive => Half::Positive,
        HalfArg::Negative => Half::Negative,
    };
    let tess = generate(half, depth).map_err(|e| e.to_string())?;
    let half_name = match half {
        Half::Positive => "positive",
        Half::Negative => "negative",
    };
    let mut out = json!({
        "half": half_name,
        "depth": depth,
        "q": float_value(q),
        "triangle_count": tess.triangles.len(),
        "edge_count": tess.edges().len(),
    });
    if let Some(path) = svg {
        let scale = scale.unwrap_or(config.svg_scale);
        render_svg(&tess, q, &path, scale).map_err(|e| e.to_string())?;
        out["svg"] = json!(path.display().to_string());
    }
    print_json(&out);
    Ok(())
}

fn cmd_classify(
    config: &Config,
    q: Option<String>,
    x: &str,
    depth: usize,
) -> Result<(), String> {
    let q = parse_q_exact(&q.unwrap_or_else(|| config.default_q.clone()))?;
    let p = if x == "inf" || x == "1/0" {
        // The unbounded interval of ∞ is handled by its reciprocal form.
        return Err("classify expects a finite point".to_string());
    } else if x.contains('/') {
        let r = parse_rational(x)?;
        BigRational::new(r.numer().clone(), r.denom().clone())
    } else {
        parse_decimal(x)?
    };
    let tol = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
    let class: BoundaryClass =
        classify_boundary_point_exact(&p, &q, depth, &tol).map_err(|e| e.to_string())?;
    let mut out = json!({
        "kind": match class.kind {
            BoundaryKind::IntervalPoint => "interval_point",
            BoundaryKind::Irrational => "irrational",
        },
    });
    if let Some(r) = &class.rational {
        out["rational"] = json!(r.to_string());
    }
    if let Some(t) = class.t {
        out["t"] = float_value(t);
    }
    if let Some(prefix) = &class.cf_prefix {
        out["cf_prefix"] = json!(prefix);
    }
    print_json(&out);
    Ok(())
}

fn cmd_stab_gromov(config: &Config, args: GromovArgs) -> Result<(), String> {
    let z1 = parse_complex(&args.z1)?;
    let z2 = parse_complex(&args.z2)?;
    let q = parse_q_f64(&args.q.unwrap_or_else(|| config.default_q.clone()))?;
    let tau = StdStabCond::new(z1, z2).map_err(|e| e.to_string())?;
    let bm = basic_masses(&tau, q).map_err(|e| e.to_string())?;
    // Gromov coordinates in the type-matched system: (m1, m2, m21) at q
    // for type A, indices swapped with the P12 mass at 1/q for type B.
    let coords = if tau.type_a {
        gromov(bm.p1, bm.p2, bm.p21, q)
    } else {
        gromov(bm.p1, bm.p2, bm.p12, 1.0 / q)
    }
    .map_err(|e| e.to_string())?;
    print_json(&json!({
        "q": float_value(q),
        "phi1": float_value(tau.phi1()),
        "phi2": float_value(tau.phi2()),
        "type": if tau.is_degenerate() {
            "degenerate"
        } else if tau.type_a {
            "A"
        } else {
            "B"
        },
        "masses": {
            "P1": float_value(bm.p1),
            "P2": float_value(bm.p2),
            "P12": float_value(bm.p12),
            "P21": float_value(bm.p21),
        },
        "gromov": {
            "a": float_value(coords.a),
            "b": float_value(coords.b),
            "c": float_value(coords.c),
        },
    }));
    Ok(())
}

fn cmd_stab_limit(
    config: &Config,
    braid: &str,
    q: Option<String>,
    m_max: usize,
) -> Result<(), String> {
    let w = parse_braid(braid)?;
    let q = parse_q_f64(&q.unwrap_or_else(|| config.default_q.clone()))?;
    let probes = default_probes();
    let report = boundary_limit(&w, q, &probes, m_max).map_err(|e| e.to_string())?;
    if config.output_format == OutputFormat::Csv {
        println!("m,distance");
        for (m, d) in report.distances.iter().enumerate() {
            println!("{},{}", m + 1, sig12(*d));
        }
        return Ok(());
    }
    print_json(&json!({
        "braid": w.to_string(),
        "q": float_value(q),
        "m_max": m_max,
        "probes": report.probes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "target": report.target.iter().map(|v| float_value(*v)).collect::<Vec<_>>(),
        "last": report.last.iter().map(|v| float_value(*v)).collect::<Vec<_>>(),
        "final_distance": float_value(*report.distances.last().unwrap_or(&f64::NAN)),
    }));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(64)
                }
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
