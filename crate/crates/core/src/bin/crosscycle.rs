use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crosscycle::cli::output::{render_reproduce, render_solve, render_verify, reproduce_table};
use crosscycle::cli::svg::render_svg;
use crosscycle::cli::{
    cmd_check_appendix, cmd_render, cmd_reproduce, cmd_solve, cmd_verify, load_config, CliError, ConfigError, Format, RunConfig,
    EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, EXIT_VERIFICATION,
};
use crosscycle::families::SaddleFamily;

#[derive(Parser)]
#[command(name = "crosscycle", version, about = "Crossing limit cycles of piecewise linear-center / nilpotent-saddle systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the crossing system and print the admissible solutions.
    Solve(Common),
    /// Solve, then integrate each candidate cycle and report closure.
    Verify(Common),
    /// Compare generated crossing polynomials with the closed forms.
    CheckAppendix {
        /// Saddle family (N1, N2, N31, ...); defaults to all with --all.
        family: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Re-solve the registry examples and compare with the published pairs.
    Reproduce(Common),
    /// Draw the verified cycles as SVG.
    Render(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args, Clone)]
struct Common {
    /// JSON run configuration.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Registry example id, e.g. N32.
    #[arg(long, value_name = "ID")]
    example: Vec<String>,
    /// Every registry example or family.
    #[arg(long)]
    all: bool,
    /// Solver residual tolerance.
    #[arg(long, value_name = "T")]
    tol: Option<f64>,
    #[arg(long, value_name = "S", default_value_t = 0x5eed)]
    seed: u64,
    #[arg(long, value_name = "N", default_value_t = 100)]
    draws: usize,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// SVG output (a directory for `reproduce`).
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Add a panel zoomed onto the small cycles near the origin.
    #[arg(long)]
    zoom: bool,
}

impl Common {
    fn config(&self) -> Result<RunConfig, CliError> {
        let mut cfg = match (&self.config, self.example.as_slice()) {
            (Some(path), []) => load_config(path)?,
            (None, [id]) => RunConfig::for_example(id)?,
            (Some(_), _) => return Err(usage("give either --config or --example, not both")),
            (None, []) => return Err(usage("a system is required: pass --config PATH or --example ID")),
            (None, _) => return Err(usage("this command takes a single --example")),
        };
        if let Some(t) = self.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(usage("--tol must be positive"));
            }
            cfg.solve.tol = t;
        }
        if let Some(p) = &self.out {
            cfg.output.path = Some(p.clone());
        }
        if let Some(f) = self.format {
            cfg.output.format = f.into();
        }
        if let Some(p) = &self.svg {
            cfg.output.svg = Some(p.clone());
        }
        cfg.output.zoom |= self.zoom;
        Ok(cfg)
    }

    fn format(&self) -> Format {
        self.format.map(Into::into).unwrap_or_default()
    }
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn usage(msg: &str) -> CliError {
    CliError::Config(ConfigError::Field { field: "command line".into(), message: msg.into() })
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Output { path: p.to_path_buf(), source })?,
        None => std::io::stdout().write_all(text.as_bytes()).context("writing to standard output")?,
    }
    Ok(())
}

fn write_svg(path: &Path, svg: &str) -> Result<()> {
    fs::write(path, svg).map_err(|source| CliError::Output { path: path.to_path_buf(), source })?;
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Solve(c) => {
            let cfg = c.config()?;
            let out = cmd_solve(&cfg)?;
            write_out(cfg.output.path.as_deref(), &render_solve(&out, cfg.output.format))?;
            Ok(EXIT_OK)
        }
        Command::Verify(c) => {
            let cfg = c.config()?;
            let out = cmd_verify(&cfg)?;
            write_out(cfg.output.path.as_deref(), &render_verify(&out, cfg.output.format))?;
            if let Some(path) = &cfg.output.svg {
                if let Some(svg) = render_svg(&cfg.label, &out.polylines(), cfg.output.zoom) {
                    write_svg(path, &svg)?;
                }
            }
            for v in out.verifications.iter().filter(|v| !v.verified) {
                eprintln!("({}, {}) not verified: {}", v.x, v.y, v.diagnostic.as_deref().unwrap_or("unknown"));
            }
            Ok(if out.all_verified() { EXIT_OK } else { EXIT_VERIFICATION })
        }
        Command::Render(c) => {
            let cfg = c.config()?;
            let path = cfg.output.svg.clone().ok_or_else(|| usage("render needs --svg PATH"))?;
            let (out, svg) = cmd_render(&cfg, cfg.output.zoom)?;
            match svg {
                Some(svg) => write_svg(&path, &svg)?,
                None => eprintln!("no verified cycles to draw"),
            }
            Ok(if out.all_verified() { EXIT_OK } else { EXIT_VERIFICATION })
        }
        Command::CheckAppendix { family, common } => {
            let families: Vec<SaddleFamily> = match (&family, common.example.as_slice(), common.all) {
                (Some(f), [], false) => vec![f.parse().map_err(|e: String| usage(&e))?],
                (None, [], true) => SaddleFamily::ALL.to_vec(),
                (None, ids, false) if !ids.is_empty() => ids
                    .iter()
                    .map(|id| Ok(RunConfig::for_example(id)?.family.expect("registry entries have a family")))
                    .collect::<Result<_, CliError>>()?,
                _ => return Err(usage("give one of FAMILY, --example ID or --all").into()),
            };
            let reports: Vec<_> = families.iter().map(|&f| cmd_check_appendix(f, common.seed, common.draws)).collect();
            for r in &reports {
                eprintln!(
                    "{:<4} {} draws x {} points  max rel dev {:.3e}  {}{}",
                    r.family.to_string(),
                    r.draws,
                    r.points,
                    r.max_relative_deviation,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.note.as_deref().map(|n| format!("  ({n})")).unwrap_or_default()
                );
            }
            if matches!(common.format(), Format::Json) || common.out.is_some() {
                let text = serde_json::to_string_pretty(&reports)? + "\n";
                write_out(common.out.as_deref(), &text)?;
            }
            Ok(if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Reproduce(c) => {
            if c.config.is_some() {
                return Err(usage("reproduce runs registry examples; use --all or --example").into());
            }
            if c.all == !c.example.is_empty() {
                return Err(usage("give --all or one or more --example ID").into());
            }
            let mut solve = crosscycle::crossing::SolveOptions::default();
            if let Some(t) = c.tol {
                solve.tol = t;
            }
            let report = cmd_reproduce(&c.example, &solve)?;
            match (&c.out, c.format) {
                (Some(path), _) => write_out(Some(path), &render_reproduce(&report, c.format()))?,
                (None, Some(f)) => write_out(None, &render_reproduce(&report, f.into()))?,
                (None, None) => {}
            }
            let table = reproduce_table(&report);
            if c.out.is_none() && c.format.is_some() {
                eprint!("{table}");
            } else {
                print!("{table}");
            }
            if let Some(dir) = &c.svg {
                fs::create_dir_all(dir).map_err(|source| CliError::Output { path: dir.clone(), source })?;
                for id in report.examples.iter().map(|e| e.id.clone()) {
                    let (out, svg) = cmd_render(&RunConfig::for_example(&id)?, c.zoom)?;
                    if let (Some(svg), true) = (svg, out.all_verified()) {
                        write_svg(&dir.join(format!("{id}.svg")), &svg)?;
                    }
                }
            }
            report.status()?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<CliError>().map_or(EXIT_CONFIG, CliError::exit_code);
            ExitCode::from(code as u8)
        }
    }
}
