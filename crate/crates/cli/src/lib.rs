//! Flag parsing and dispatch for the `gz-floer` binary.
//!
//! Every subcommand renders either a plain-text table or canonical JSON
//! (sorted keys, `p/q` fraction strings), so identical invocations give
//! byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use gz_floer::ladder::{self, build_gamma, enumerate_subgraphs, face_of, h1_rank};
use gz_floer::par::{map_slice, Strategy};
use gz_floer::polytope::{
    active_face, condition_j, contains, degeneration_residual, enumerate_faces, fiber_type, interlacing_pairs,
    moment_map_eval, plucker_residual, segment_point, vertices, GZPoint, PluckerVector, PolytopeError, Weight,
};
use gz_floer::potential::{
    build_potential, default_truncation, extend_to_critical_point, verify_certificate, BulkParams,
    CertifyReport, CriticalCertificate, PotentialError,
};
use gz_floer::scalar::{complex_string, fraction_string, int, parse_complex, parse_rational, short_string};
use gz_floer::strata::{boundary_report, StrataError};
use gz_floer::{ComplexRational, Rational};

pub const ENV_TRUNC: &str = "GZ_FLOER_TRUNC";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Ladder(#[from] ladder::LadderError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: malformed certificate: {source}")]
    Certificate { path: String, source: serde_json::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "gz-floer", version, about = "Gelfand-Zeitlin combinatorics and Novikov critical points for Fl(1,n;n+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Rank parameter, n >= 2 (n >= 3 for potentials)
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Segment parameter t in (0,1], as p/q
    #[arg(long, global = true, value_parser = parse_rational_arg)]
    pub t: Option<Rational>,
    /// Weight "l1,l2,l3"; defaults to (n(n-1), 0, -n(n-1))
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    /// Truncation order, as p/q
    #[arg(long, global = true, env = ENV_TRUNC, value_parser = parse_rational_arg)]
    pub trunc: Option<Rational>,
    /// GZ coordinates u_{1,1},...,u_{1,n},u_{2,1},...,u_{n,1}
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub point: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Interlacing inequalities and vertices, or the face of --point
    Polytope,
    /// Ladder subgraphs against the exhaustive face oracle
    Faces,
    /// Fiber topology over --point
    Fiber,
    /// Dimension ledger for the boundary strata
    Strata,
    /// The bulk-deformed potential at (n, t) with c = c_under = 1
    Potential,
    /// Extend the split solution to a certified critical point
    Solve,
    /// Re-verify a certificate (from --input, or freshly solved)
    Certify {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Moment map image of a central-fiber Plucker vector
    MomentMap {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long = "p-under", allow_hyphen_values = true)]
        p_under: String,
    },
    /// Certificates along the segment for several t
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        ts: String,
    },
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Polytope,
    Faces,
    Fiber,
    Strata,
    Potential,
    Solve,
    Certify { input: Option<PathBuf> },
    MomentMap { p: Vec<ComplexRational>, p_under: Vec<ComplexRational> },
    Sweep { ts: Vec<Rational> },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub n: Option<usize>,
    pub t: Option<Rational>,
    pub lambda: Option<Weight>,
    pub trunc: Option<Rational>,
    pub point: Option<String>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

fn parse_csv<T, E: std::fmt::Display>(flag: &str, s: &str, f: impl Fn(&str) -> Result<T, E>) -> Result<Vec<T>, CliError> {
    let items: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
    if items.is_empty() {
        return Err(usage(format!("{flag} is empty")));
    }
    items.into_iter().map(|x| f(x).map_err(|e| usage(format!("{flag}: {e}")))).collect()
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let c = cli.common;
        let lambda = c.lambda.as_deref().map(Weight::parse).transpose()?;
        let command = match cli.command {
            CommandArgs::Polytope => Command::Polytope,
            CommandArgs::Faces => Command::Faces,
            CommandArgs::Fiber => Command::Fiber,
            CommandArgs::Strata => Command::Strata,
            CommandArgs::Potential => Command::Potential,
            CommandArgs::Solve => Command::Solve,
            CommandArgs::Certify { input } => Command::Certify { input },
            CommandArgs::MomentMap { p, p_under } => Command::MomentMap {
                p: parse_csv("--p", &p, parse_complex)?,
                p_under: parse_csv("--p-under", &p_under, parse_complex)?,
            },
            CommandArgs::Sweep { ts } => Command::Sweep { ts: parse_csv("--ts", &ts, parse_rational)? },
        };
        Ok(RunConfig {
            command,
            n: c.n,
            t: c.t,
            lambda,
            trunc: c.trunc,
            point: c.point,
            output: c.out,
            format: c.format,
        })
    }

    fn require_n(&self) -> Result<usize, CliError> {
        self.n.ok_or_else(|| usage("--n is required"))
    }

    fn require_t(&self) -> Result<Rational, CliError> {
        let t = self.t.clone().ok_or_else(|| usage("--t is required"))?;
        check_t(&t)?;
        Ok(t)
    }

    fn weight(&self, n: usize) -> Weight {
        self.lambda.clone().unwrap_or_else(|| Weight::monotone(n))
    }

    fn require_point(&self, n: usize) -> Result<GZPoint, CliError> {
        let csv = self.point.as_deref().ok_or_else(|| usage("--point is required"))?;
        Ok(GZPoint::parse(n, csv)?)
    }

    fn truncation(&self, n: usize, t: &Rational) -> Rational {
        self.trunc.clone().unwrap_or_else(|| default_truncation(n, t))
    }
}

fn check_t(t: &Rational) -> Result<(), CliError> {
    if *t <= int(0) || *t > int(1) {
        return Err(usage(format!("--t {} outside (0, 1]", short_string(t))));
    }
    Ok(())
}

/// A rendered report and the exit code it carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub body: String,
}

struct Report {
    ok: bool,
    json: Value,
    text: String,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { ok: true, json, text }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn weight_json(w: &Weight) -> Value {
    json!([fraction_string(&w.lambda1), fraction_string(&w.lambda2), fraction_string(&w.lambda3)])
}

/// Dispatches `config`, then writes the rendered report to `--out` or returns it.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let report = match &config.command {
        Command::Polytope => polytope(config)?,
        Command::Faces => faces(config)?,
        Command::Fiber => fiber(config)?,
        Command::Strata => strata(config)?,
        Command::Potential => potential(config)?,
        Command::Solve => solve(config)?,
        Command::Certify { input } => certify(config, input.as_ref())?,
        Command::MomentMap { p, p_under } => moment_map(config, p, p_under)?,
        Command::Sweep { ts } => sweep(config, ts)?,
    };
    let mut body = match config.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("json values serialize"),
        Format::Text => report.text.trim_end().to_string(),
    };
    body.push('\n');
    let code = if report.ok { 0 } else { 1 };
    if let Some(path) = &config.output {
        std::fs::write(path, &body).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        return Ok(Outcome { code, body: String::new() });
    }
    Ok(Outcome { code, body })
}

fn polytope(config: &RunConfig) -> Result<Report, CliError> {
    let n = config.require_n()?;
    let w = config.weight(n);
    if config.point.is_some() {
        let u = config.require_point(n)?;
        let inside = contains(&w, &u)?;
        let face = if inside { Some(active_face(&w, &u)?) } else { None };
        let mut text = format!("point {u}\n{}\n", if inside { "inside" } else { "outside" });
        if let Some(f) = &face {
            let _ = writeln!(text, "face {f}");
        }
        let json = json!({ "n": n, "lambda": weight_json(&w), "point": to_value(&u), "contains": inside, "face": to_value(&face) });
        return Ok(Report::ok(json, text));
    }
    let pairs = interlacing_pairs(n);
    let verts = vertices(&w, n)?;
    let mut text = format!("n = {n}, lambda = {w}\n{} inequalities\n", pairs.len());
    for (a, b) in &pairs {
        let _ = writeln!(text, "  {a} >= {b}");
    }
    let _ = writeln!(text, "{} vertices", verts.len());
    for v in &verts {
        let _ = writeln!(text, "  {v}");
    }
    let json = json!({
        "n": n,
        "lambda": weight_json(&w),
        "inequalities": pairs.iter().map(|(a, b)| json!([a.name(), b.name()])).collect::<Vec<_>>(),
        "vertices": verts.iter().map(to_value).collect::<Vec<_>>(),
    });
    Ok(Report::ok(json, text))
}

fn faces(config: &RunConfig) -> Result<Report, CliError> {
    let n = config.require_n()?;
    let w = config.weight(n);
    let g = build_gamma(n)?;
    let subgraphs = enumerate_subgraphs(&g)?;
    let mut from_ladder: Vec<_> = subgraphs.iter().map(|s| (face_of(s), h1_rank(s), s)).collect();
    from_ladder.sort_by(|a, b| a.0.cmp(&b.0));
    let mut from_oracle: Vec<_> = enumerate_faces(&w, n)?.into_iter().map(|r| r.face).collect();
    from_oracle.sort();
    let ladder_faces: Vec<_> = from_ladder.iter().map(|x| x.0.clone()).collect();
    let dims_agree = from_ladder.iter().all(|(f, h1, _)| f.dimension == *h1);
    let matched = ladder_faces == from_oracle && dims_agree;

    let mut by_dim: BTreeMap<usize, usize> = BTreeMap::new();
    for f in &from_oracle {
        *by_dim.entry(f.dimension).or_default() += 1;
    }
    let mut text = format!("n = {n}: {} ladder subgraphs, {} polytope faces\n", subgraphs.len(), from_oracle.len());
    let _ = writeln!(text, "dim  count");
    for (d, k) in &by_dim {
        let _ = writeln!(text, "{d:>3}  {k}");
    }
    let _ = writeln!(text, "correspondence {}", if matched { "OK" } else { "MISMATCH" });
    let json = json!({
        "n": n,
        "ladder_subgraphs": subgraphs.len(),
        "polytope_faces": from_oracle.len(),
        "by_dimension": by_dim.iter().map(|(d, k)| (d.to_string(), json!(k))).collect::<serde_json::Map<_, _>>(),
        "correspondence": matched,
        "faces": from_ladder.iter().map(|(f, h1, s)| json!({ "face": to_value(f), "h1": h1, "subgraph": to_value(*s) })).collect::<Vec<_>>(),
    });
    Ok(Report { ok: matched, json, text })
}

fn fiber(config: &RunConfig) -> Result<Report, CliError> {
    let n = config.require_n()?;
    let w = config.weight(n);
    let u = config.require_point(n)?;
    let ft = fiber_type(&w, &u)?;
    let face = active_face(&w, &u)?;
    let cond = condition_j(&w, &u)?;
    let text = format!("{ft}\n");
    let json = json!({
        "n": n,
        "point": to_value(&u),
        "face": to_value(&face),
        "condition_j": cond,
        "fiber": to_value(&ft),
        "description": ft.to_string(),
    });
    Ok(Report::ok(json, text))
}

fn strata(config: &RunConfig) -> Result<Report, CliError> {
    let n = config.require_n()?;
    let r = boundary_report(n)?;
    let mut text = format!(
        "n = {n}: dim M = {}, dim F = {}, dim g = {}, dim preimage(g) = {}, codimension {}\n",
        r.dim_m, r.dim_f, r.dim_g, r.dim_preimage_g, r.codimension
    );
    for s in &r.strata {
        let _ = writeln!(text, "  {}: S^{} x T^{} (dim {})", s.label(), s.sphere_dim, s.torus_rank, s.total_fiber_dim);
    }
    for c in &r.checks {
        let _ = writeln!(text, "{c}");
    }
    let _ = writeln!(text, "{}", if r.passed { "PASSED" } else { "FAILED" });
    Ok(Report { ok: r.passed, json: to_value(&r), text })
}

fn potential(config: &RunConfig) -> Result<Report, CliError> {
    let n = config.require_n()?;
    let t = config.require_t()?;
    let trunc = config.truncation(n, &t);
    let w = build_potential(n, &t, &BulkParams::trivial(trunc.clone()), &trunc)?;
    let mut text = format!("W (n = {n}, t = {}, mod T^{})\n", short_string(&t), short_string(&trunc));
    for m in &w.monomials {
        let _ = writeln!(text, "  {m}");
    }
    let monomials: Vec<Value> = w
        .monomials
        .iter()
        .map(|m| {
            let exps: serde_json::Map<String, Value> =
                m.exponents.iter().map(|(v, e)| (v.to_string(), json!(e))).collect();
            json!({ "coeff": to_value(&m.coeff), "exponents": exps })
        })
        .collect();
    let json = json!({
        "n": n,
        "t": fraction_string(&t),
        "trunc": fraction_string(&trunc),
        "exponent_levels": w.exponent_levels().iter().map(fraction_string).collect::<Vec<_>>(),
        "monomials": monomials,
    });
    Ok(Report::ok(json, text))
}

fn certificate_text(cert: &CriticalCertificate, report: &CertifyReport) -> String {
    let mut text = format!(
        "n = {}, t = {}, trunc = {}\n",
        cert.n,
        short_string(&cert.t),
        short_string(&cert.trunc)
    );
    for (v, x) in &cert.assignment {
        let _ = writeln!(text, "  {v} = {x}");
    }
    let _ = writeln!(text, "  c = {}", cert.c);
    let _ = writeln!(text, "  c_under = {}", cert.c_under);
    for (v, r) in &report.residual_valuations {
        let pass = report.passed.get(v).copied().unwrap_or(false);
        let _ = writeln!(text, "  val(d{v} W) = {r} {}", if pass { "ok" } else { "LOW" });
    }
    let _ = writeln!(text, "{}", if report.valid { "VALID" } else { "INVALID" });
    text
}

fn solved(config: &RunConfig) -> Result<CriticalCertificate, CliError> {
    let t = config.require_t()?;
    let n = config.require_n()?;
    let trunc = config.truncation(n, &t);
    Ok(extend_to_critical_point(n, &t, &trunc)?)
}

fn solve(config: &RunConfig) -> Result<Report, CliError> {
    let cert = solved(config)?;
    let report = verify_certificate(&cert)?;
    let valid = cert.valid && report.valid;
    let text = certificate_text(&cert, &report);
    Ok(Report { ok: valid, json: to_value(&cert), text })
}

fn certify(config: &RunConfig, input: Option<&PathBuf>) -> Result<Report, CliError> {
    let cert = match input {
        Some(path) => {
            let shown = path.display().to_string();
            let raw = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
            let cert: CriticalCertificate =
                serde_json::from_str(&raw).map_err(|source| CliError::Certificate { path: shown, source })?;
            check_t(&cert.t)?;
            cert
        }
        None => solved(config)?,
    };
    let report = verify_certificate(&cert)?;
    let text = certificate_text(&cert, &report);
    Ok(Report { ok: report.valid, json: to_value(&report), text })
}

fn moment_map(config: &RunConfig, p: &[ComplexRational], p_under: &[ComplexRational]) -> Result<Report, CliError> {
    let pv = PluckerVector::new(p.to_vec(), p_under.to_vec())?;
    let n = pv.n();
    if let Some(given) = config.n {
        if given != n {
            return Err(usage(format!("--n {given} but --p has {} entries (n = {n})", n + 1)));
        }
    }
    let w = config.weight(n);
    let u = moment_map_eval(&pv, &w)?;
    let inside = contains(&w, &u)?;
    let residual = plucker_residual(&pv);
    let degenerate = degeneration_residual(&pv, &int(0));
    let central = residual == ComplexRational::new(int(0), int(0));
    let text = format!(
        "u = {u}\ninside {inside}\nplucker residual {}\ndegeneration residual (s = 0) {}\n",
        complex_string(&residual),
        complex_string(&degenerate)
    );
    let json = json!({
        "n": n,
        "lambda": weight_json(&w),
        "point": to_value(&u),
        "contains": inside,
        "plucker_residual": complex_string(&residual),
        "on_quadric": central,
        "degeneration_residual_s0": complex_string(&degenerate),
    });
    Ok(Report::ok(json, text))
}

fn sweep(config: &RunConfig, ts: &[Rational]) -> Result<Report, CliError> {
    let n = config.require_n()?;
    for t in ts {
        check_t(t)?;
    }
    if n < 3 {
        return Err(PotentialError::TooSmall(n).into());
    }
    let runs = map_slice(Strategy::default(), ts, |t| -> Result<_, CliError> {
        let trunc = config.truncation(n, t);
        let cert = extend_to_critical_point(n, t, &trunc)?;
        let report = verify_certificate(&cert)?;
        let point = segment_point(n, t)?;
        let ft = fiber_type(&Weight::monotone(n), &point)?;
        Ok((t.clone(), cert, report, point, ft))
    });
    let mut entries = Vec::new();
    let mut text = format!("n = {n}\n   t  trunc  fiber                        certificate\n");
    let mut all_valid = true;
    let mut failure = None;
    for run in runs {
        match run {
            Ok((t, cert, report, point, ft)) => {
                let valid = cert.valid && report.valid;
                all_valid &= valid;
                let _ = writeln!(
                    text,
                    "{:>4}  {:>5}  {:<27}  {}",
                    short_string(&t),
                    short_string(&cert.trunc),
                    ft.to_string(),
                    if valid { "VALID" } else { "INVALID" }
                );
                entries.push(json!({
                    "t": fraction_string(&t),
                    "segment_point": to_value(&point),
                    "fiber": ft.to_string(),
                    "certificate": to_value(&cert),
                    "valid": valid,
                }));
            }
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    if let Some(e) = failure {
        // partial report goes to stderr, the error decides the exit code
        eprint!("{text}");
        return Err(e);
    }
    let _ = writeln!(text, "{}", if all_valid { "ALL VALID" } else { "NOT ALL VALID" });
    let json = json!({ "n": n, "runs": entries, "valid": all_valid });
    Ok(Report { ok: all_valid, json, text })
}
