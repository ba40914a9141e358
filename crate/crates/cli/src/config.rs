use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use projclose::density::DEFAULT_SAMPLE_SIZE;
use projclose::scalar::parse_triples;
use projclose::subplane::DEFAULT_SAMPLE_BUDGET;
use projclose::{canonicalize, BasisSpec, ClosureCaps, ExactScalar, HPoint};

use crate::CliError;

/// Default number of Möbius-net rounds when `--levels` is not given.
pub const DEFAULT_MOEBIUS_ROUNDS: u32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "projclose",
    version,
    about = "Cross-product closures in the real projective plane"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Basis as "u1,u2,u3;v1,v2,v3;w1,w2,w3" (integers or p/q)
    #[arg(long, global = true)]
    pub basis: Option<String>,

    /// Four points as "a1,a2,a3;b1,b2,b3;c1,c2,c3;d1,d2,d3" (moebius)
    #[arg(long, global = true)]
    pub quadrangle: Option<String>,

    /// Level cap for closures, number of rounds for moebius
    #[arg(long, global = true)]
    pub levels: Option<u32>,

    #[arg(long, global = true, default_value_t = ClosureCaps::DEFAULT_MAX_POINTS)]
    pub max_points: usize,

    /// Sample directions for the covering radius
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLE_SIZE)]
    pub samples: usize,

    /// Seed for sampled axiom checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "PROJCLOSE_THREADS")]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Accept float entries, replacing them by nearby rationals
    #[arg(long, global = true)]
    pub approx_floats: bool,

    /// Include per-level wall time in the trace (makes reports run-dependent)
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Generate the closure of a basis level by level
    Closure,
    /// Decide whether a basis generates a finite or a dense set
    Classify,
    /// Covering radius and separation per closure level
    Density,
    /// Check incidence axioms and ortho-closure on a generated set
    Verify,
    /// Build a Möbius net from a quadrangle
    Moebius,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

/// Inputs after validation. Thread count and output path only affect how
/// and where the run happens, so they are kept out of the serialized form.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<[String; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadrangle: Option<Vec<[String; 3]>>,
    pub approximated_floats: bool,
    pub levels: u32,
    pub max_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_budget: Option<usize>,
    pub format: Format,
    pub timing: bool,

    #[serde(skip)]
    pub basis_spec: Option<BasisSpec>,
    #[serde(skip)]
    pub quadrangle_points: Option<[HPoint; 4]>,
    #[serde(skip)]
    pub threads: Option<usize>,
    #[serde(skip)]
    pub output: Option<std::path::PathBuf>,
}

impl RunConfig {
    pub fn caps(&self) -> ClosureCaps {
        ClosureCaps {
            max_level: self.levels,
            max_points: self.max_points,
        }
    }

    pub fn basis(&self) -> &BasisSpec {
        self.basis_spec.as_ref().expect("validated basis")
    }
}

fn render(triples: &[[ExactScalar; 3]]) -> Vec<[String; 3]> {
    triples
        .iter()
        .map(|t| t.clone().map(|q| q.to_string()))
        .collect()
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

impl TryFrom<&Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: &Cli) -> Result<Self, CliError> {
        let command = cli.command;
        let needs_basis = command != Command::Moebius;
        let mut approximated = false;

        let (basis, basis_spec) = match (&cli.basis, needs_basis) {
            (Some(text), true) => {
                let (spec, approx) = BasisSpec::parse(text, cli.approx_floats)
                    .map_err(|e| invalid(e.to_string()))?;
                spec.canonical_points()
                    .map_err(|e| invalid(e.to_string()))?;
                approximated |= approx;
                let vectors: Vec<[ExactScalar; 3]> = spec.vectors().map(|v| v.clone()).to_vec();
                (Some(render(&vectors)), Some(spec))
            }
            (None, true) => return Err(invalid("--basis is required")),
            (Some(_), false) => return Err(invalid("moebius takes --quadrangle, not --basis")),
            (None, false) => (None, None),
        };

        let (quadrangle, quadrangle_points) = match (&cli.quadrangle, command) {
            (Some(text), Command::Moebius) => {
                let (triples, approx) =
                    parse_triples(text, cli.approx_floats).map_err(|e| invalid(e.to_string()))?;
                if triples.len() != 4 {
                    return Err(invalid(format!("expected 4 points, got {}", triples.len())));
                }
                approximated |= approx;
                let points = triples
                    .iter()
                    .map(canonicalize)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| invalid(e.to_string()))?;
                let points: [HPoint; 4] = points.try_into().expect("four points");
                (Some(render(&triples)), Some(points))
            }
            (None, Command::Moebius) => return Err(invalid("--quadrangle is required")),
            (Some(_), _) => return Err(invalid("--quadrangle is only used by moebius")),
            (None, _) => (None, None),
        };

        let levels = cli.levels.unwrap_or(if command == Command::Moebius {
            DEFAULT_MOEBIUS_ROUNDS
        } else {
            ClosureCaps::DEFAULT_MAX_LEVEL
        });
        if command != Command::Moebius {
            ClosureCaps::new(levels, cli.max_points).map_err(|e| invalid(e.to_string()))?;
        } else if cli.max_points == 0 {
            return Err(invalid("--max-points must be at least 1"));
        }
        if command == Command::Density && cli.samples == 0 {
            return Err(invalid("--samples must be at least 1"));
        }
        if cli.format == Format::Csv && matches!(command, Command::Classify | Command::Verify) {
            return Err(invalid(
                "csv output is only available for closure, density and moebius",
            ));
        }
        if cli.threads == Some(0) {
            return Err(invalid("--threads must be at least 1"));
        }

        Ok(RunConfig {
            command,
            basis,
            quadrangle,
            approximated_floats: approximated,
            levels,
            max_points: cli.max_points,
            samples: (command == Command::Density).then_some(cli.samples),
            seed: (command == Command::Verify).then_some(cli.seed),
            sample_budget: (command == Command::Verify).then_some(DEFAULT_SAMPLE_BUDGET),
            format: cli.format,
            timing: cli.timing,
            basis_spec,
            quadrangle_points,
            threads: cli.threads,
            output: cli.output.clone(),
        })
    }
}
