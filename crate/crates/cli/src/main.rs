use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use interlace::certify::{certify, CertifyOptions, Check, RunReport, Status};
use interlace::coloring::validate_circular;
use interlace::export::{render, ColoringDocument, GraphFormat};
use interlace::oracles::DEFAULT_VERTEX_CAP;
use interlace::{color, InterlacingGraph, Parameters};

#[derive(Parser)]
#[command(
    name = "interlace",
    version,
    about = "Stable interlacing graphs: export, coloring and certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph in DIMACS, DOT or JSON form.
    Build {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Color every vertex with the rotation coloring and validate it.
    Color {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Compare the exact oracles with the closed formulas.
    Certify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        flags: CertifyFlags,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// Directory for witness files (independent set, colorings, homomorphism).
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(short = 'n')]
    n: u32,
    #[arg(short = 'k')]
    k: u32,
    #[arg(short = 'r', default_value_t = 2)]
    r: u32,
}

impl ParamArgs {
    fn resolve(&self) -> Result<Parameters> {
        Ok(Parameters::new(self.n, self.k, self.r)?)
    }
}

#[derive(Args)]
struct CertifyFlags {
    /// Every check below.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    alpha_exact: bool,
    #[arg(long)]
    chi_exact: bool,
    #[arg(long)]
    circular_exact: bool,
    /// Largest numerator tried for the circular chromatic number (default |V|).
    #[arg(long)]
    max_order: Option<u32>,
    #[arg(long)]
    clique: bool,
    #[arg(long)]
    coloring: bool,
    #[arg(long)]
    claims: bool,
    /// Seed for the random independent sets used by --claims.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    random_sets: usize,
    /// Oracles refuse graphs with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
}

impl CertifyFlags {
    fn options(&self) -> CertifyOptions {
        let mut o = if self.all {
            CertifyOptions::all()
        } else {
            CertifyOptions::default()
        };
        o.alpha |= self.alpha_exact;
        o.chi |= self.chi_exact;
        if self.circular_exact || self.max_order.is_some() || self.all {
            o.circular = Some(self.max_order.unwrap_or(0));
        }
        o.clique |= self.clique;
        o.coloring |= self.coloring;
        o.claims |= self.claims;
        o.seed = self.seed;
        o.random_sets = self.random_sets;
        o.vertex_cap = self.cap;
        o
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
    Dot,
    Json,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Dimacs => GraphFormat::Dimacs,
            Format::Dot => GraphFormat::Dot,
            Format::Json => GraphFormat::Json,
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Returns whether every mathematical check passed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build {
            params,
            format,
            output,
        } => {
            let graph = InterlacingGraph::build(&params.resolve()?);
            emit(&render(&graph, format.into()), output.as_deref())?;
            Ok(true)
        }
        Command::Color { params, output } => {
            let graph = InterlacingGraph::build(&params.resolve()?);
            let coloring = color(&graph)?;
            let report = validate_circular(&graph, &coloring)?;
            let doc = ColoringDocument::new(&graph, &coloring, &report);
            let mut text = serde_json::to_string_pretty(&doc)?;
            text.push('\n');
            emit(&text, output.as_deref())?;
            Ok(report.valid)
        }
        Command::Certify {
            params,
            flags,
            output,
            witness_dir,
        } => {
            let start = Instant::now();
            let params = params.resolve()?;
            let (mut report, witnesses) = certify(&params, &flags.options())?;
            if let Some(dir) = witness_dir {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                for w in witnesses {
                    let path = dir.join(format!("{}.json", w.name));
                    let mut text = serde_json::to_string_pretty(&w.document)?;
                    text.push('\n');
                    fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    report.witness_paths.push(path.display().to_string());
                }
            }
            report.wall_time_ms = start.elapsed().as_millis() as u64;
            summarize(&report);
            emit(&report.to_json(), output.as_deref())?;
            Ok(report.passed())
        }
    }
}

fn summarize(report: &RunReport) {
    for Check {
        name,
        status,
        expected,
        observed,
        ..
    } in &report.checks
    {
        let status = match status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        };
        eprintln!(
            "{status:<7} {name}: expected {}, observed {}",
            expected.as_deref().unwrap_or("-"),
            observed.as_deref().unwrap_or("-")
        );
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
