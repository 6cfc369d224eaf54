use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use supergrid::{Coord, Shape};

use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "supergrid",
    version,
    about = "Hamiltonian and longest paths in rectangular, L- and C-shaped supergrid graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a Hamiltonian cycle or report the condition ruling it out.
    Hc(SolveArgs),
    /// Find a Hamiltonian (s,t)-path or report the conditions ruling it out.
    Hp(SolveArgs),
    /// Find a longest (s,t)-path with its bound case and value.
    Longest(SolveArgs),
    /// Validate a path or cycle read from a file or stdin.
    Check(CheckArgs),
    /// Compare the solvers with exhaustive search on every small instance.
    Fuzz(FuzzArgs),
    /// Draw a shape, optionally with a path, as ASCII or SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Query {
    Hc,
    Hp,
    Longest,
}

#[derive(Debug, Default, Args)]
pub struct ShapeArgs {
    /// Shape kind.
    #[arg(long, value_enum)]
    pub shape: Option<Kind>,
    /// Columns.
    #[arg(long)]
    pub m: Option<i32>,
    /// Rows.
    #[arg(long)]
    pub n: Option<i32>,
    /// Columns removed (L and C).
    #[arg(long)]
    pub k: Option<i32>,
    /// Rows removed (L and C).
    #[arg(long)]
    pub l: Option<i32>,
    /// Top margin of a C-shape.
    #[arg(long)]
    pub c: Option<i32>,
    /// Bottom margin of a C-shape; must equal n - l - c when both are given.
    #[arg(long)]
    pub d: Option<i32>,
}

fn need(v: Option<i32>, flag: &str, kind: &str) -> Result<i32> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --shape {kind}")))
}

impl ShapeArgs {
    /// The shape described by the flags, or `None` when `--shape` is absent.
    pub fn build(&self) -> Result<Option<Shape>> {
        let Some(kind) = self.shape else {
            return Ok(None);
        };
        let name = format!("{kind:?}");
        let m = need(self.m, "m", &name)?;
        let n = need(self.n, "n", &name)?;
        let shape = match kind {
            Kind::R => Shape::rect(m, n)?,
            Kind::L => Shape::l_shape(m, n, need(self.k, "k", &name)?, need(self.l, "l", &name)?)?,
            Kind::C => {
                let (k, l) = (need(self.k, "k", &name)?, need(self.l, "l", &name)?);
                match (self.c, self.d) {
                    (Some(c), Some(d)) => Shape::c_shape(m, n, k, l, c, d)?,
                    (Some(c), None) => Shape::c_shape_nlc(m, n, k, l, c)?,
                    (None, Some(d)) => Shape::c_shape_nlc(m, n, k, l, n - l - d)?,
                    (None, None) => {
                        return Err(CliError::Usage(
                            "--c or --d is required for --shape C".into(),
                        ))
                    }
                }
            }
        };
        Ok(Some(shape))
    }

    pub fn require(&self) -> Result<Shape> {
        self.build()?
            .ok_or_else(|| CliError::Usage("--shape is required".into()))
    }
}

pub fn parse_coord(text: &str) -> std::result::Result<Coord, String> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, got {text:?}"))?;
    let parse = |v: &str| v.trim().parse::<i32>().map_err(|e| format!("{v:?}: {e}"));
    Ok(Coord::new(parse(x)?, parse(y)?))
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Start vertex, as x,y.
    #[arg(long, value_parser = parse_coord)]
    pub s: Option<Coord>,
    /// End vertex, as x,y.
    #[arg(long, value_parser = parse_coord)]
    pub t: Option<Coord>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exit with status 3 when a forbidden condition holds.
    #[arg(long)]
    pub strict: bool,
    /// Solve every instance in a file of JSON lines instead of the flags.
    #[arg(long, conflicts_with_all = ["shape", "s", "t"])]
    pub seed_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Shape to check against; defaults to the shape in a JSON report.
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// JSON report or `x,y` lines; `-` reads stdin.
    #[arg(long, default_value = "-")]
    pub input: String,
    /// Treat text input as a cycle.
    #[arg(long)]
    pub closed: bool,
    /// Required start vertex.
    #[arg(long, value_parser = parse_coord)]
    pub s: Option<Coord>,
    /// Required end vertex.
    #[arg(long, value_parser = parse_coord)]
    pub t: Option<Coord>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    /// Largest vertex count enumerated; defaults to 18 or the oracle cap if lower.
    #[arg(long)]
    pub max_vertices: Option<usize>,
    /// Check the instances in a file of JSON lines instead of enumerating.
    #[arg(long, conflicts_with = "max_vertices")]
    pub seed_file: Option<PathBuf>,
    /// Oracle caps as `vertices` or `vertices,nodes`.
    #[arg(long, env = "SUPERGRID_FUZZ_BUDGET")]
    pub budget: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Path to draw: a JSON report or `x,y` lines; `-` reads stdin.
    #[arg(long, conflicts_with = "solve")]
    pub input: Option<String>,
    /// Solve this query and draw the result.
    #[arg(long, value_enum)]
    pub solve: Option<Query>,
    #[arg(long, value_parser = parse_coord)]
    pub s: Option<Coord>,
    #[arg(long, value_parser = parse_coord)]
    pub t: Option<Coord>,
    /// `text` draws ASCII art.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// One line of a seed file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub shape: Shape,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Coord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Coord>,
    /// Overrides the subcommand's query for this line.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Query>,
}

/// Reads a file of JSON lines; blank lines and `#` comments are skipped.
pub fn read_seed_file(path: &PathBuf) -> Result<Vec<InstanceSpec>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|source| CliError::Instance {
                line: i + 1,
                source,
            })
        })
        .collect()
}

/// Reads a whole input, `-` meaning stdin.
pub fn read_input(path: &str) -> Result<String> {
    let read = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|source| CliError::Read {
        path: path.to_string(),
        source,
    })
}
