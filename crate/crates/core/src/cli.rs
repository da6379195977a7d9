//! `cbsg` command line.
//!
//! Exit codes: 0 success (and IN / finitely generated), 1 OUT or not
//! finitely generated, 2 malformed input, 3 precondition failures.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::body::{ConvexBody2, FgVerdict};
use crate::bodyfile::load_body;
use crate::circle::circle_pipeline;
use crate::error::{Error, Result};
use crate::lattice::{GenSet, IntVec2};
use crate::oracle::{dilation_member, naive_min_gens};
use crate::semigroup::{fg_decision, member, min_gens};
use crate::svg::{plot, PlotOptions};

#[derive(Parser, Debug)]
#[command(name = "cbsg", version, about = "Convex body semigroups in the plane")]
pub struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal generators, one `(x,y)` per line.
    Gens {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide finite generation.
    CheckFg { file: PathBuf },
    /// Exact membership of `(x, y)`.
    Member { file: PathBuf, x: i64, y: i64 },
    /// Inputs and value of the generator-norm bound (circles).
    Bound { file: PathBuf },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Draw dilations, cone rays, semigroup points and generators as SVG.
    Plot {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 6)]
        dilations: u32,
        #[arg(long, default_value_t = 40)]
        norm_bound: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Generators among members of ℓ₁ norm at most `--norm-bound`.
    Gens {
        file: PathBuf,
        #[arg(long)]
        norm_bound: i64,
    },
    /// Membership by scanning dilations.
    Member { file: PathBuf, x: i64, y: i64 },
}

fn write_gens(out: &mut dyn Write, g: &GenSet, json: bool) -> std::io::Result<()> {
    if json {
        let pts: Vec<[i64; 2]> = g.iter().map(|p| [p.x, p.y]).collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string(&pts).expect("serializable")
        )
    } else {
        for p in g.iter() {
            writeln!(out, "{p}")?;
        }
        Ok(())
    }
}

fn verdict_line(v: &FgVerdict) -> (String, i32) {
    match v {
        FgVerdict::FinitelyGenerated => ("FINITELY_GENERATED".into(), 0),
        FgVerdict::NotFinitelyGenerated(w) => (format!("NOT_FINITELY_GENERATED {w}"), 1),
        FgVerdict::TrivialZero => ("ZERO".into(), 0),
        FgVerdict::FullCone => ("FULL_CONE".into(), 0),
    }
}

fn point(x: i64, y: i64) -> Result<IntVec2> {
    if x < 0 || y < 0 {
        return Err(Error::Precondition(
            "coordinates must be non-negative".into(),
        ));
    }
    Ok(IntVec2::new(x, y))
}

fn in_out(out: &mut dyn Write, inside: bool) -> Result<i32> {
    writeln!(out, "{}", if inside { "IN" } else { "OUT" })?;
    Ok(if inside { 0 } else { 1 })
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gens { file, json } => {
            let g = min_gens(&load_body(&file)?)?;
            write_gens(out, &g, json)?;
            Ok(0)
        }
        Command::CheckFg { file } => {
            let (line, code) = verdict_line(&fg_decision(&load_body(&file)?));
            writeln!(out, "{line}")?;
            Ok(code)
        }
        Command::Member { file, x, y } => {
            let body = load_body(&file)?;
            in_out(out, member(&body, point(x, y)?))
        }
        Command::Bound { file } => {
            let ConvexBody2::Circle(c) = load_body(&file)? else {
                return Err(Error::Precondition(
                    "the bound is implemented for circles".into(),
                ));
            };
            let p = circle_pipeline(&c)?;
            let b = p.bound_inputs();
            writeln!(
                out,
                "M = {}\nk = {}\nl = {}\nbound = {}",
                b.m,
                b.k,
                b.l,
                p.bound()
            )?;
            Ok(0)
        }
        Command::Oracle {
            command: OracleCommand::Gens { file, norm_bound },
        } => {
            if norm_bound < 0 {
                return Err(Error::Precondition(
                    "norm bound must be non-negative".into(),
                ));
            }
            write_gens(out, &naive_min_gens(&load_body(&file)?, norm_bound), false)?;
            Ok(0)
        }
        Command::Oracle {
            command: OracleCommand::Member { file, x, y },
        } => {
            let body = load_body(&file)?;
            let p = point(x, y)?;
            in_out(out, dilation_member(p.x, p.y, &body))
        }
        Command::Plot {
            file,
            output,
            dilations,
            norm_bound,
        } => {
            let body = load_body(&file)?;
            std::fs::write(
                &output,
                plot(
                    &body,
                    &PlotOptions {
                        dilations,
                        norm_bound,
                    },
                ),
            )?;
            Ok(0)
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_parse() {
                2
            } else {
                3
            }
        }
    }
}
