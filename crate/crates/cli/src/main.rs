mod expr;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use toroidal_core::report::{render_text, AlgebraInfo, ElemJson, VerifyJson};
use toroidal_core::{
    AlgebraSpec, Exec, Family, FamilyId, Presentation, SpanReport, ToroidalAlgebra,
};

#[derive(Parser, Debug)]
#[command(
    name = "toroidal",
    version,
    about = "Verify the current-type presentation of twisted toroidal Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Root system family of g.
    #[arg(long, global = true, value_enum, default_value = "a")]
    family: FamilyArg,

    /// Rank parameter: g = A_{2n-1} or D_{n+1}.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,

    /// Order of the diagram automorphism (1 = untwisted).
    #[arg(long, global = true, default_value_t = 2)]
    r: u8,

    /// Degree window |k| <= window for relation cases.
    #[arg(long, global = true, default_value_t = 4)]
    window: i64,

    /// Per-slot degree cap for iterated-adjoint families.
    #[arg(long, global = true, default_value_t = 2)]
    serre_cap: i64,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Evaluate cases on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every relation family (or just one with --only).
    Verify {
        /// Family id: 1..17, U1..U6, proof-AD or proof-D4.
        #[arg(long)]
        only: Option<String>,
    },
    /// Cartan data, highest root and graded dimensions.
    Info,
    /// Toroidal bracket of the images of two generators.
    Bracket { lhs: String, rhs: String },
    /// Slice dimensions reached by iterated brackets of generator images.
    Span {
        #[arg(long, default_value_t = 2)]
        j_window: i64,
        #[arg(long, default_value_t = 1)]
        m_window: i64,
        #[arg(long, default_value_t = 4)]
        word_length: usize,
    },
    /// Structure constants of g as CSV.
    DumpStructure,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    #[value(alias = "A")]
    A,
    #[value(alias = "D")]
    D,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

/// Configuration problems map to exit code 2, relation failures to 1.
enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug)]
struct ConfigError(String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn config_err(msg: impl Into<String>) -> anyhow::Error {
    ConfigError(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<ConfigError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let family = match cli.family {
        FamilyArg::A => Family::A,
        FamilyArg::D => Family::D,
    };
    let spec = AlgebraSpec::new(family, cli.n, cli.r).map_err(|e| config_err(e.to_string()))?;
    if cli.window < 1 {
        return Err(config_err("window must be at least 1"));
    }
    if cli.serre_cap < 1 {
        return Err(config_err("serre-cap must be at least 1"));
    }
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let mut out = std::io::stdout().lock();
    match &cli.command {
        Command::Verify { only } => cmd_verify(cli, spec, exec, only.as_deref(), &mut out),
        Command::Info => cmd_info(cli, spec, &mut out),
        Command::Bracket { lhs, rhs } => cmd_bracket(cli, spec, lhs, rhs, &mut out),
        Command::Span {
            j_window,
            m_window,
            word_length,
        } => cmd_span(
            cli,
            spec,
            exec,
            *j_window,
            *m_window,
            *word_length,
            &mut out,
        ),
        Command::DumpStructure => cmd_dump(spec, &mut out),
    }
}

fn cmd_verify(
    cli: &Cli,
    spec: AlgebraSpec,
    exec: Exec,
    only: Option<&str>,
    out: &mut impl Write,
) -> anyhow::Result<Outcome> {
    let p = Presentation::new(spec);
    let summary = match only {
        None => p.verify_all(cli.window, cli.serre_cap, exec),
        Some(id) => {
            let fid = FamilyId::parse(id)
                .ok_or_else(|| config_err(format!("unknown family id '{id}'")))?;
            if !p.families().contains(&fid) {
                return Err(config_err(format!("family {fid} does not apply to {spec}")));
            }
            let mut s = p.verify_all(cli.window, cli.serre_cap, exec);
            s.families.retain(|f| f.id == fid);
            s
        }
    };
    match cli.format {
        Format::Text => write!(out, "{}", render_text(p.algebra(), &summary))?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &VerifyJson::new(p.algebra(), &summary))?;
            writeln!(out)?;
        }
    }
    Ok(if summary.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

#[derive(Serialize)]
struct InfoJson {
    algebra: AlgebraInfo,
    finite_cartan: Vec<Vec<i64>>,
    folded_cartan: Vec<Vec<i64>>,
    extended_cartan: Vec<Vec<i64>>,
    d: Vec<String>,
    sigma: Vec<usize>,
    theta: Vec<i64>,
    dim: usize,
    graded_dims: Vec<usize>,
    sigma_theta_sign: i64,
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            format!("  [{}]", cells.join(""))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_info(cli: &Cli, spec: AlgebraSpec, out: &mut impl Write) -> anyhow::Result<Outcome> {
    let alg = ToroidalAlgebra::new(spec);
    let lie = alg.lie();
    let c = lie.cartan();
    let info = InfoJson {
        algebra: AlgebraInfo::from(&spec),
        finite_cartan: c.finite.clone(),
        folded_cartan: c.folded.clone(),
        extended_cartan: c.extended.clone(),
        d: c.d.iter().map(|q| q.to_string()).collect(),
        sigma: c.sigma_perm.iter().map(|i| i + 1).collect(),
        theta: lie.theta().0.clone(),
        dim: lie.dim(),
        graded_dims: (0..spec.r() as i64).map(|j| lie.graded_dim(j)).collect(),
        sigma_theta_sign: lie.sigma_theta_sign(),
    };
    match cli.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &info)?;
            writeln!(out)?;
        }
        Format::Text => {
            writeln!(
                out,
                "g = {}, r = {}, folded type {}",
                spec.name(),
                spec.r(),
                info.algebra.folded_type
            )?;
            writeln!(out, "A' (finite):\n{}", matrix_text(&info.finite_cartan))?;
            writeln!(out, "A (folded):\n{}", matrix_text(&info.folded_cartan))?;
            writeln!(out, "extended:\n{}", matrix_text(&info.extended_cartan))?;
            writeln!(out, "d = ({})", info.d.join(", "))?;
            writeln!(out, "sigma = {:?}", info.sigma)?;
            writeln!(out, "theta = {}", lie.theta())?;
            writeln!(out, "dim g = {}", info.dim)?;
            for (j, d) in info.graded_dims.iter().enumerate() {
                writeln!(out, "dim g_{j} = {d}")?;
            }
            writeln!(out, "sigma(e_theta) = {}*e_theta", info.sigma_theta_sign)?;
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_bracket(
    cli: &Cli,
    spec: AlgebraSpec,
    lhs: &str,
    rhs: &str,
    out: &mut impl Write,
) -> anyhow::Result<Outcome> {
    let parse = |s: &str, which: &str| {
        expr::parse_gen(s).map_err(|e| config_err(format!("parse error in {which} '{s}' {e}")))
    };
    let (g, h) = (parse(lhs, "lhs")?, parse(rhs, "rhs")?);
    let p = Presentation::new(spec);
    let img = |g| p.psi_image(&g).map_err(|e| config_err(e.to_string()));
    let x = p.algebra().bracket(&img(g)?, &img(h)?);
    match cli.format {
        Format::Text => writeln!(out, "{}", p.algebra().render(&x))?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &ElemJson::new(p.algebra(), &x))?;
            writeln!(out)?;
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_span(
    cli: &Cli,
    spec: AlgebraSpec,
    exec: Exec,
    j_window: i64,
    m_window: i64,
    word_length: usize,
    out: &mut impl Write,
) -> anyhow::Result<Outcome> {
    if j_window < 0 || m_window < 0 || word_length == 0 {
        return Err(config_err(
            "span windows must be non-negative and word length positive",
        ));
    }
    let p = Presentation::new(spec);
    let rep: SpanReport = p.span_check(j_window, m_window, word_length, exec);
    match cli.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rep)?;
            writeln!(out)?;
        }
        Format::Text => {
            writeln!(
                out,
                "{} r={}, word length {}",
                spec.name(),
                spec.r(),
                word_length
            )?;
            for s in &rep.slices {
                let mark = if s.full() { "full" } else { "PARTIAL" };
                writeln!(
                    out,
                    "slice (j={:>2}, m={:>2}): {:>3}/{:<3} {mark}",
                    s.j, s.m, s.achieved, s.target
                )?;
            }
        }
    }
    Ok(if rep.all_full() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn cmd_dump(spec: AlgebraSpec, out: &mut impl Write) -> anyhow::Result<Outcome> {
    let alg = ToroidalAlgebra::new(spec);
    let lie = alg.lie();
    writeln!(out, "basis_a,basis_b,basis_result,coeff")?;
    for a in 0..lie.dim() {
        for b in 0..lie.dim() {
            for &(c, k) in lie.basis_bracket(a, b) {
                writeln!(
                    out,
                    "{},{},{},{k}",
                    csv_field(&lie.basis_label(a).to_string()),
                    csv_field(&lie.basis_label(b).to_string()),
                    csv_field(&lie.basis_label(c).to_string()),
                )
                .context("writing CSV")?;
            }
        }
    }
    Ok(Outcome::Pass)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
