//! Batch front end: reads a JSON problem, runs one command, and renders a
//! report as text or as JSON with sorted keys.

pub mod commands;
pub mod report;
pub mod spec;

use std::fmt;

use report::Report;
use serde_json::Value;
use spec::{parse_spec, Overrides, ProblemSpec, SpecError};

pub const CONTRO: &str = include_str!("../demos/contro.json");
pub const CYCLIC: &str = include_str!("../demos/cyclic.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Command {
    Resolve,
    Betti,
    Reg,
    Gr,
    StdBasis,
    FilteredRes,
    Homtype,
    Bounds,
    Lin,
    Ld,
    Koszul,
    ProbeQ1,
    Verify,
    Demo,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Resolve => "resolve",
            Command::Betti => "betti",
            Command::Reg => "reg",
            Command::Gr => "gr",
            Command::StdBasis => "std-basis",
            Command::FilteredRes => "filtered-res",
            Command::Homtype => "homtype",
            Command::Bounds => "bounds",
            Command::Lin => "lin",
            Command::Ld => "ld",
            Command::Koszul => "koszul",
            Command::ProbeQ1 => "probe-q1",
            Command::Verify => "verify",
            Command::Demo => "demo",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Core(#[from] gradres_core::Error),
    #[error("unknown demo {0:?}; available: contro, cyclic")]
    UnknownDemo(String),
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn demo_source(name: &str) -> Result<&'static str, CliError> {
    match name {
        "contro" => Ok(CONTRO),
        "cyclic" => Ok(CYCLIC),
        other => Err(CliError::UnknownDemo(other.to_string())),
    }
}

/// Runs `command` on the JSON document `input`. For `demo`, `demo` names
/// the scenario and `input` is its embedded spec.
pub fn run(command: Command, input: &str, demo: Option<&str>, overrides: &Overrides) -> Result<Report, CliError> {
    let spec: ProblemSpec = parse_spec(input)?;
    let problem = spec.validate(overrides)?;
    let mut rep = match command {
        Command::Resolve => commands::resolve(&problem)?,
        Command::Betti => commands::betti_table(&problem)?,
        Command::Reg => commands::reg(&problem)?,
        Command::Gr => commands::gr(&problem)?,
        Command::StdBasis => commands::std_basis(&problem)?,
        Command::FilteredRes => commands::filtered_res(&problem)?,
        Command::Homtype => commands::homtype(&problem)?,
        Command::Bounds => commands::bounds(&problem)?,
        Command::Lin => commands::lin(&problem)?,
        Command::Ld => commands::ld(&problem)?,
        Command::Koszul => commands::koszul(&problem)?,
        Command::ProbeQ1 => commands::probe_q1(&problem)?,
        Command::Verify => commands::verify(&problem)?,
        Command::Demo => match demo {
            Some("contro") => commands::demo_contro(&problem)?,
            Some("cyclic") => commands::demo_cyclic(&problem)?,
            other => return Err(CliError::UnknownDemo(other.unwrap_or("").to_string())),
        },
    };
    rep.set("command", Value::String(command.name().into()));
    if let Some(d) = demo {
        rep.set("demo", Value::String(d.into()));
    }
    rep.set("input", serde_json::to_value(&spec).expect("specs serialize"));
    rep.set("n_max", Value::from(problem.n_max));
    rep.set("degree_cap", Value::from(problem.degree_cap));
    if let Some(ok) = rep.passed {
        rep.set("passed", Value::Bool(ok));
    }
    Ok(rep)
}
