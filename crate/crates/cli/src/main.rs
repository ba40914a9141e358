//! `projclose`: command-line runner for projective cross-product closures.

mod config;
mod output;
mod report;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use projclose::subplane::moebius_net;
use projclose::{
    classify_basis, density_of_closure, detect_degenerate_shape, run_closure, sample_directions,
    verify_axioms, ExecMode, PointStore,
};

use config::{Cli, Command, Format, RunConfig};
use report::{density_rows, trace_rows, AxiomsJson, Report, TraceRow};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or inputs; exit code 2.
    Invalid(String),
    /// A cap made the requested result impossible; exit code 3.
    Cap(String),
    Other(anyhow::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Other(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Cap(m) => write!(f, "cap reached: {m}"),
            CliError::Other(e) => write!(f, "{e:#}"),
        }
    }
}

impl From<projclose::Error> for CliError {
    fn from(e: projclose::Error) -> Self {
        use projclose::Error as E;
        match e {
            E::PointCapExceeded { .. } => CliError::Cap(e.to_string()),
            E::ZeroVector
            | E::InvalidBasis(_)
            | E::InvalidCaps(_)
            | E::NotAQuadrangle
            | E::Parse { .. } => CliError::Invalid(e.to_string()),
            other => CliError::Other(other.into()),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Other(e)
    }
}

struct Artifacts {
    report: Vec<u8>,
    points: Option<Vec<u8>>,
}

fn moebius_trace(store: &PointStore) -> Vec<TraceRow> {
    let mut previous = 0;
    (1..=store.completed_levels())
        .map(|level| {
            let points = store.count_up_to(level);
            let row = TraceRow {
                level,
                points,
                new_points: points - previous,
                ms: None,
            };
            previous = points;
            row
        })
        .collect()
}

fn execute(config: &RunConfig) -> Result<Artifacts, CliError> {
    let mut report = Report::new(config);
    let mut store = None;

    match config.command {
        Command::Classify => {
            report.classification = Some((&classify_basis(config.basis())?).into());
        }
        Command::Closure | Command::Density | Command::Verify => {
            let basis = config.basis();
            report.classification = Some((&classify_basis(basis)?).into());
            let closure = run_closure(basis, &config.caps())?;
            report.trace = Some(trace_rows(&closure.trace, config.timing));
            report.stabilized = Some(closure.trace.stabilized);
            report.cap_hit = Some(closure.trace.cap_hit.as_str());
            if let Some(samples) = config.samples {
                let sample = sample_directions(samples);
                let density = density_of_closure(&closure, &sample, ExecMode::default());
                report.density = Some(density_rows(&density));
            }
            if let (Some(budget), Some(seed)) = (config.sample_budget, config.seed) {
                let axioms = verify_axioms(&closure.store, budget, seed);
                let shape = detect_degenerate_shape(&closure.store).ok();
                report.axioms = Some(AxiomsJson::new(&axioms, shape.as_ref()));
            }
            if config.command != Command::Verify {
                store = Some(closure.store);
            }
        }
        Command::Moebius => {
            let quad = config
                .quadrangle_points
                .as_ref()
                .expect("validated quadrangle");
            let net = moebius_net(quad, config.levels, &config.caps())?;
            report.trace = Some(moebius_trace(&net));
            report.stabilized = Some(net.is_closed());
            report.cap_hit = Some("none");
            store = Some(net);
        }
    }

    let mut json = serde_json::to_vec_pretty(&report).map_err(anyhow::Error::from)?;
    json.push(b'\n');
    let points = store.as_ref().map(output::points_csv).transpose()?;
    Ok(Artifacts {
        report: json,
        points,
    })
}

fn emit(config: &RunConfig, artifacts: Artifacts) -> Result<(), CliError> {
    let main = match config.format {
        Format::Json => &artifacts.report,
        Format::Csv => artifacts
            .points
            .as_ref()
            .expect("csv only for point commands"),
    };
    match &config.output {
        Some(path) => {
            output::write_atomic(path, main)?;
            if config.format == Format::Json {
                if let Some(points) = &artifacts.points {
                    output::write_atomic(&output::sibling_csv_path(path), points)?;
                }
            }
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(main)
                .and_then(|_| out.flush())
                .map_err(anyhow::Error::from)?;
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let config = RunConfig::try_from(cli)?;
    if config.approximated_floats {
        eprintln!(
            "warning: float entries were replaced by rationals within {:e}; exact orthogonality is judged on those rationals",
            projclose::scalar::FLOAT_APPROX_TOLERANCE
        );
    }
    let artifacts = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(anyhow::Error::from)?
            .install(|| execute(&config))?,
        None => execute(&config)?,
    };
    emit(&config, artifacts)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
