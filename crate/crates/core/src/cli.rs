//! The `kgosc` command line: `spectrum`, `wavefn`, `verify`, `sweep`.
//!
//! Exit codes: 0 success, 1 verification failure (or flagged rows under
//! `--strict`), 2 usage or configuration error.
//!
//! Output is deterministic: floats use the shortest round-trip form, CSV
//! has a fixed header, `,` separators and `\n` line endings.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::model::{self, Mode, ModelParams, QuantumNumbers, Variant};
use crate::oracle::verify::{verify_spectrum, VerifyReport, DEFAULT_TOLERANCE};
use crate::spectrum::{self, enumerate_states, SpectrumTable};
use crate::wavefn::{self, StateSpec, Wavefunction};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const SPECTRUM_HEADER: &str = "n,j,N,E_plus,E_minus,source,error_flag";
pub const WAVEFN_HEADER: &str = "p,radial_value,z";
pub const SWEEP_HEADER: &str = "theta,n,j,N,E_plus";

const DEFAULT_SAMPLES: usize = 200;

#[derive(Debug, Parser)]
#[command(name = "kgosc", version, about = "2D Klein-Gordon oscillator spectra with a minimal length")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate closed-form energies.
    Spectrum(Settings),
    /// Sample a normalized radial wavefunction.
    Wavefn(Settings),
    /// Compare the closed forms with the finite-difference oracle.
    Verify(Settings),
    /// Energies across a list of deformations, in long format.
    Sweep(Settings),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Nogup,
    Gup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Eq60,
    Eq69,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

macro_rules! value_enum_from_str {
    ($($t:ty),*) => {$(
        impl FromStr for $t {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                <$t as ValueEnum>::from_str(s, true)
            }
        }
    )*};
}
value_enum_from_str!(ModeArg, VariantArg, Format);

/// Every flag, all optional so that a config file can fill the gaps.
#[derive(Debug, Clone, Default, Args)]
pub struct Settings {
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub m0: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    #[arg(long)]
    pub hbar: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long = "n-max")]
    pub n_max: Option<u32>,
    #[arg(long = "j-max")]
    pub j_max: Option<u32>,
    /// Radial index for `wavefn`.
    #[arg(long)]
    pub n: Option<i64>,
    /// Angular index for `wavefn`.
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<i64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub strict: bool,
    #[arg(long = "allow-j0")]
    pub allow_j0: bool,
    /// Oracle-vs-chain relative tolerance for `verify`.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Comma-separated theta values for `sweep`.
    #[arg(long, value_delimiter = ',')]
    pub thetas: Option<Vec<f64>>,
    /// Comma-separated beta values for `sweep`.
    #[arg(long, value_delimiter = ',')]
    pub betas: Option<Vec<f64>>,
    /// Flat `key=value` file mirroring the flags; flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output path, or `stdout`.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, UsageError>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| UsageError(format!("config key `{key}`: {e}")))
}

fn parse_list(key: &str, value: &str) -> Result<Vec<f64>, UsageError> {
    value
        .split(',')
        .map(|s| parse_value::<f64>(key, s.trim()))
        .collect()
}

fn parse_bool(key: &str, value: &str) -> Result<bool, UsageError> {
    match value {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        other => Err(UsageError(format!("config key `{key}`: expected a boolean, got `{other}`"))),
    }
}

impl Settings {
    /// Parses a flat `key=value` file. Blank lines and `#` comments are
    /// skipped; keys are the long flag names without dashes.
    pub fn from_config_str(text: &str) -> Result<Settings, UsageError> {
        let mut s = Settings::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| UsageError(format!("config line {}: expected key=value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "mode" => s.mode = Some(parse_value(key, value)?),
                "variant" => s.variant = Some(parse_value(key, value)?),
                "r" => s.r = Some(parse_value(key, value)?),
                "theta" => s.theta = Some(parse_value(key, value)?),
                "m0" => s.m0 = Some(parse_value(key, value)?),
                "omega" => s.omega = Some(parse_value(key, value)?),
                "hbar" => s.hbar = Some(parse_value(key, value)?),
                "c" => s.c = Some(parse_value(key, value)?),
                "beta" => s.beta = Some(parse_value(key, value)?),
                "n-max" => s.n_max = Some(parse_value(key, value)?),
                "j-max" => s.j_max = Some(parse_value(key, value)?),
                "n" => s.n = Some(parse_value(key, value)?),
                "j" => s.j = Some(parse_value(key, value)?),
                "format" => s.format = Some(parse_value(key, value)?),
                "samples" => s.samples = Some(parse_value(key, value)?),
                "strict" => s.strict = parse_bool(key, value)?,
                "allow-j0" => s.allow_j0 = parse_bool(key, value)?,
                "tolerance" => s.tolerance = Some(parse_value(key, value)?),
                "thetas" => s.thetas = Some(parse_list(key, value)?),
                "betas" => s.betas = Some(parse_list(key, value)?),
                "out" => s.out = Some(value.to_string()),
                other => return Err(UsageError(format!("unknown config key `{other}`"))),
            }
        }
        Ok(s)
    }

    /// Field-wise `self.or(fallback)`; switches are on if either is.
    pub fn merged_over(self, fallback: Settings) -> Settings {
        Settings {
            mode: self.mode.or(fallback.mode),
            variant: self.variant.or(fallback.variant),
            r: self.r.or(fallback.r),
            theta: self.theta.or(fallback.theta),
            m0: self.m0.or(fallback.m0),
            omega: self.omega.or(fallback.omega),
            hbar: self.hbar.or(fallback.hbar),
            c: self.c.or(fallback.c),
            beta: self.beta.or(fallback.beta),
            n_max: self.n_max.or(fallback.n_max),
            j_max: self.j_max.or(fallback.j_max),
            n: self.n.or(fallback.n),
            j: self.j.or(fallback.j),
            format: self.format.or(fallback.format),
            samples: self.samples.or(fallback.samples),
            strict: self.strict || fallback.strict,
            allow_j0: self.allow_j0 || fallback.allow_j0,
            tolerance: self.tolerance.or(fallback.tolerance),
            thetas: self.thetas.or(fallback.thetas),
            betas: self.betas.or(fallback.betas),
            config: self.config,
            out: self.out.or(fallback.out),
        }
    }

    fn resolve_file(self) -> Result<Settings, UsageError> {
        match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
                Ok(self.merged_over(Settings::from_config_str(&text)?))
            }
            None => Ok(self),
        }
    }
}

/// Validated settings for one command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub variant: Variant,
    pub params: ModelParams,
    pub n_max: u32,
    pub j_max: u32,
    pub format: Format,
    pub samples: usize,
    pub strict: bool,
    pub allow_j0: bool,
    pub tolerance: f64,
    pub n: i64,
    pub j: i64,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Physical flags and the dimensionless pair are mutually exclusive.
    /// The mode defaults to `gup` exactly when a deformation is given.
    pub fn from_settings(s: &Settings) -> Result<RunConfig, UsageError> {
        let physical = [s.m0, s.omega, s.hbar, s.c, s.beta].iter().any(Option::is_some);
        let dimensionless = s.r.is_some() || s.theta.is_some();
        let params = match (physical, dimensionless) {
            (true, true) => {
                return Err(UsageError(
                    "give either --m0/--omega/--hbar/--c/--beta or --r/--theta, not both".into(),
                ))
            }
            (true, false) => {
                let need = |name: &str, v: Option<f64>| {
                    v.ok_or_else(|| UsageError(format!("--{name} is required with physical parameters")))
                };
                model::make_params(
                    need("m0", s.m0)?,
                    need("omega", s.omega)?,
                    need("hbar", s.hbar)?,
                    need("c", s.c)?,
                    s.beta.unwrap_or(0.0),
                )?
            }
            (false, _) => {
                let r = s.r.ok_or_else(|| UsageError("--r is required".into()))?;
                ModelParams::from_dimensionless(r, s.theta.unwrap_or(0.0))?
            }
        };
        let mode = match s.mode {
            Some(ModeArg::Gup) => Mode::Gup,
            Some(ModeArg::Nogup) => Mode::NoGup,
            None if params.theta > 0.0 => Mode::Gup,
            None => Mode::NoGup,
        };
        let variant = match s.variant {
            Some(VariantArg::Eq69) => Variant::Eq69,
            _ => Variant::Eq60,
        };
        let tolerance = s.tolerance.unwrap_or(DEFAULT_TOLERANCE);
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(UsageError(format!("--tolerance {tolerance} must be positive")));
        }
        let out = match s.out.as_deref() {
            None | Some("stdout") | Some("-") => None,
            Some(path) => Some(PathBuf::from(path)),
        };
        Ok(RunConfig {
            mode,
            variant,
            params,
            n_max: s.n_max.unwrap_or(3),
            j_max: s.j_max.unwrap_or(3),
            format: s.format.unwrap_or(Format::Csv),
            samples: s.samples.unwrap_or(DEFAULT_SAMPLES),
            strict: s.strict,
            allow_j0: s.allow_j0,
            tolerance,
            n: s.n.unwrap_or(0),
            j: s.j.unwrap_or(if mode == Mode::Gup { 1 } else { 0 }),
            out,
        })
    }

    fn require_gup_theta(&self) -> Result<(), UsageError> {
        if self.mode == Mode::Gup && !(self.params.theta > 0.0) {
            return Err(Error::ThetaOutOfRange(self.params.theta).into());
        }
        Ok(())
    }
}

/// Shortest round-trip decimal form; `NaN`/`inf` for non-finite values.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        ryu::Buffer::new().format_finite(x).to_string()
    } else {
        ryu::Buffer::new().format(x).to_string()
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

/// Result of running one command: bytes to emit and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub body: String,
    pub exit_code: i32,
    pub diagnostics: String,
}

impl CommandOutput {
    fn ok(body: String) -> Self {
        CommandOutput {
            body,
            exit_code: EXIT_OK,
            diagnostics: String::new(),
        }
    }
}

#[derive(Serialize)]
struct SpectrumJsonRow {
    n: u32,
    j: i32,
    #[serde(rename = "N")]
    principal: u32,
    #[serde(rename = "E_plus")]
    e_plus: Option<f64>,
    #[serde(rename = "E_minus")]
    e_minus: Option<f64>,
    source: &'static str,
    error_flag: Option<&'static str>,
}

pub fn render_spectrum(table: &SpectrumTable, format: Format) -> String {
    let rows = table.rows.iter().map(|row| {
        let (e_plus, e_minus, flag) = match &row.energies {
            Ok(e) => (Some(e.plus), Some(e.minus), None),
            Err(err) => (None, None, Some(err.code())),
        };
        SpectrumJsonRow {
            n: row.qn.n,
            j: row.qn.j,
            principal: row.principal,
            e_plus,
            e_minus,
            source: row.source.as_str(),
            error_flag: flag,
        }
    });
    match format {
        Format::Csv => {
            let mut out = String::from(SPECTRUM_HEADER);
            out.push('\n');
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n,
                    r.j,
                    r.principal,
                    fmt_opt(r.e_plus),
                    fmt_opt(r.e_minus),
                    r.source,
                    r.error_flag.unwrap_or("")
                );
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = rows.collect();
            let mut out = serde_json::to_string(&rows).expect("serializable rows");
            out.push('\n');
            out
        }
    }
}

/// Rows that cannot be evaluated (e.g. `--mode gup` without a deformation)
/// are flagged rather than fatal; `--strict` turns them into exit code 1.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<CommandOutput, UsageError> {
    let table = spectrum::spectrum_table(
        &cfg.params,
        cfg.n_max,
        cfg.j_max,
        cfg.mode,
        cfg.variant,
        cfg.allow_j0,
    );
    let flagged = table.rows.iter().filter(|r| r.energies.is_err()).count();
    let mut out = CommandOutput::ok(render_spectrum(&table, cfg.format));
    if flagged > 0 {
        out.diagnostics = format!("{flagged} flagged row(s)\n");
        if cfg.strict {
            out.exit_code = EXIT_FAILURE;
        }
    }
    Ok(out)
}

/// Sample grid: in GUP mode half the samples are geometric over six decades
/// below `1/sqrt(beta)`, the rest linear up to `z = 0.999`. Without
/// deformation the grid is linear on `[0, sqrt(40 lambda)]`.
pub fn wavefn_grid(cfg: &RunConfig, samples: usize) -> Vec<f64> {
    match cfg.mode {
        Mode::Gup => {
            let scale = 1.0 / cfg.params.beta.sqrt();
            let p_hi = scale * (0.999f64 / 0.001).sqrt();
            let geometric = samples / 2;
            let linear = samples - geometric;
            let mut grid: Vec<f64> = (0..geometric)
                .map(|i| scale * 10f64.powf(-6.0 + 6.0 * i as f64 / geometric as f64))
                .collect();
            let denom = (linear.max(2) - 1) as f64;
            grid.extend((0..linear).map(|i| scale + (p_hi - scale) * i as f64 / denom));
            grid
        }
        Mode::NoGup => {
            let p_hi = (40.0 * cfg.params.lambda).sqrt();
            let denom = (samples.max(2) - 1) as f64;
            (0..samples).map(|i| p_hi * i as f64 / denom).collect()
        }
    }
}

#[derive(Serialize)]
struct WaveJsonRow {
    p: f64,
    radial_value: f64,
    z: Option<f64>,
}

#[derive(Serialize)]
struct WaveJson {
    normalized: bool,
    mode: Mode,
    n: i64,
    j: i64,
    norm_constant: f64,
    samples: Vec<WaveJsonRow>,
}

pub fn cmd_wavefn(cfg: &RunConfig) -> Result<CommandOutput, UsageError> {
    if cfg.samples == 0 {
        return Err(UsageError("--samples must be at least 1".into()));
    }
    cfg.require_gup_theta()?;
    let qn = model::make_quantum_numbers(cfg.n, cfg.j, cfg.mode == Mode::Gup, cfg.allow_j0)?;
    let state = StateSpec {
        qn,
        params: cfg.params,
        mode: cfg.mode,
        variant: cfg.variant,
        measure: wavefn::Measure::Deformed,
        allow_j0: cfg.allow_j0,
    };
    let wf = Wavefunction::new(state)?;
    let mut rows = Vec::with_capacity(cfg.samples);
    for p in wavefn_grid(cfg, cfg.samples) {
        let z = match cfg.mode {
            Mode::Gup => Some(wavefn::map_z_of_p(p, &cfg.params)?),
            Mode::NoGup => None,
        };
        rows.push(WaveJsonRow {
            p,
            radial_value: wf.radial(p)?,
            z,
        });
    }
    let mode_name = match cfg.mode {
        Mode::Gup => "gup",
        Mode::NoGup => "nogup",
    };
    let body = match cfg.format {
        Format::Csv => {
            let mut out = format!(
                "# normalized=true mode={mode_name} n={} j={} norm_constant={}\n{WAVEFN_HEADER}\n",
                cfg.n,
                cfg.j,
                fmt_f64(wf.norm_constant())
            );
            for r in &rows {
                let _ = writeln!(out, "{},{},{}", fmt_f64(r.p), fmt_f64(r.radial_value), fmt_opt(r.z));
            }
            out
        }
        Format::Json => {
            let doc = WaveJson {
                normalized: true,
                mode: cfg.mode,
                n: cfg.n,
                j: cfg.j,
                norm_constant: wf.norm_constant(),
                samples: rows,
            };
            let mut out = serde_json::to_string(&doc).expect("serializable profile");
            out.push('\n');
            out
        }
    };
    Ok(CommandOutput::ok(body))
}

#[derive(Serialize)]
struct VerifySummary<'a> {
    mode: Mode,
    variant: Variant,
    r: f64,
    theta: f64,
    tolerance: f64,
    rows: usize,
    failures: usize,
    max_rel_diff_chain: f64,
    max_rel_diff_eq70: f64,
    limit_check: &'a Option<crate::oracle::LimitCheck>,
    all_pass: bool,
}

/// One JSON object per row, then `{"summary": ...}`.
pub fn render_verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    for row in &report.rows {
        out.push_str(&serde_json::to_string(row).expect("serializable row"));
        out.push('\n');
    }
    let summary = VerifySummary {
        mode: report.mode,
        variant: report.variant,
        r: report.r,
        theta: report.theta,
        tolerance: report.tolerance,
        rows: report.rows.len(),
        failures: report.rows.iter().filter(|r| !r.pass).count(),
        max_rel_diff_chain: report.max_rel_diff_chain,
        max_rel_diff_eq70: report.max_rel_diff_eq70,
        limit_check: &report.limit_check,
        all_pass: report.all_pass,
    };
    out.push_str(&serde_json::to_string(&serde_json::json!({ "summary": summary })).expect("summary"));
    out.push('\n');
    out
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<CommandOutput, UsageError> {
    cfg.require_gup_theta()?;
    let report = verify_spectrum(
        &cfg.params,
        cfg.n_max,
        cfg.j_max,
        cfg.mode,
        cfg.variant,
        cfg.allow_j0,
        cfg.tolerance,
    );
    let mut out = CommandOutput::ok(render_verify(&report));
    if !report.all_pass {
        out.exit_code = EXIT_FAILURE;
        if let Some(limit) = report.limit_check.as_ref().filter(|l| !l.pass) {
            out.diagnostics = format!("{}\n", limit.note);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct SweepJsonRow {
    theta: f64,
    n: u32,
    j: i32,
    #[serde(rename = "N")]
    principal: u32,
    #[serde(rename = "E_plus")]
    e_plus: Option<f64>,
}

/// Deformations for `sweep`: `--thetas`, or `--betas` scaled by `lambda`.
pub fn sweep_thetas(s: &Settings, cfg: &RunConfig) -> Result<Vec<f64>, UsageError> {
    let thetas = match (&s.thetas, &s.betas) {
        (Some(_), Some(_)) => return Err(UsageError("give --thetas or --betas, not both".into())),
        (Some(t), None) => t.clone(),
        (None, Some(b)) => b.iter().map(|beta| beta * cfg.params.lambda).collect(),
        (None, None) => return Err(UsageError("sweep needs --thetas or --betas".into())),
    };
    if thetas.is_empty() {
        return Err(UsageError("empty deformation list".into()));
    }
    for &t in &thetas {
        if !(t.is_finite() && (0.0..1.0).contains(&t)) {
            return Err(Error::ThetaOutOfRange(t).into());
        }
    }
    Ok(thetas)
}

pub fn cmd_sweep(cfg: &RunConfig, thetas: &[f64]) -> Result<CommandOutput, UsageError> {
    let states = enumerate_states(cfg.n_max, cfg.j_max, Mode::Gup, cfg.allow_j0);
    let mut rows = Vec::with_capacity(thetas.len() * states.len());
    let mut flagged = 0;
    for &theta in thetas {
        for qn in &states {
            let e = sweep_energy(cfg, theta, *qn);
            if e.is_none() {
                flagged += 1;
            }
            rows.push(SweepJsonRow {
                theta,
                n: qn.n,
                j: qn.j,
                principal: qn.principal(),
                e_plus: e,
            });
        }
    }
    let body = match cfg.format {
        Format::Csv => {
            let mut out = format!("{SWEEP_HEADER}\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    fmt_f64(r.theta),
                    r.n,
                    r.j,
                    r.principal,
                    fmt_opt(r.e_plus)
                );
            }
            out
        }
        Format::Json => {
            let mut out = serde_json::to_string(&rows).expect("serializable sweep");
            out.push('\n');
            out
        }
    };
    let mut out = CommandOutput::ok(body);
    if flagged > 0 && cfg.strict {
        out.exit_code = EXIT_FAILURE;
    }
    Ok(out)
}

/// `theta = 0` uses the undeformed spectrum.
fn sweep_energy(cfg: &RunConfig, theta: f64, qn: QuantumNumbers) -> Option<f64> {
    if theta == 0.0 {
        return Some(spectrum::no_gup_energy(cfg.params.r, qn).plus);
    }
    spectrum::gup_energy_chain(cfg.params.r, theta, qn, cfg.variant, cfg.allow_j0)
        .ok()
        .map(|e| e.plus)
}

fn execute(command: Command) -> Result<(CommandOutput, Option<PathBuf>), UsageError> {
    let (settings, kind) = match command {
        Command::Spectrum(s) => (s, 0),
        Command::Wavefn(s) => (s, 1),
        Command::Verify(s) => (s, 2),
        Command::Sweep(s) => (s, 3),
    };
    let settings = settings.resolve_file()?;
    let cfg = RunConfig::from_settings(&settings)?;
    let out = match kind {
        0 => cmd_spectrum(&cfg)?,
        1 => cmd_wavefn(&cfg)?,
        2 => cmd_verify(&cfg)?,
        _ => cmd_sweep(&cfg, &sweep_thetas(&settings, &cfg)?)?,
    };
    Ok((out, cfg.out))
}

fn write_body(body: &str, path: Option<&Path>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => stdout.write_all(body.as_bytes()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok((out, path)) => {
            if let Err(e) = write_body(&out.body, path.as_deref(), stdout) {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            let _ = stderr.write_all(out.diagnostics.as_bytes());
            out.exit_code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}
