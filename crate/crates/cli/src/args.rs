use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dimcheck_core::dim::rational::{parse_rational, to_f64};
use dimcheck_core::GrowthParams;

#[derive(Parser, Debug)]
#[command(name = "dimcheck", version, about = "Dimensional homogeneity checks and growth-model numerics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every equation of a model file for dimensional homogeneity.
    Check(CheckArgs),
    /// Steady state and its local stability.
    Steady(SteadyArgs),
    /// Integrate the growth system and write the trajectory as CSV.
    Simulate(SimulateArgs),
    /// Sample the phase plane and its nullclines.
    Phase(PhaseArgs),
    /// Discounted lifetime utility of a consumption path.
    Welfare(WelfareArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Accepts `0.05`, `1.5e-2`, `3` or `1/3`.
pub fn number(text: &str) -> Result<f64, String> {
    if let Some(r) = parse_rational(text) {
        return Ok(to_f64(r));
    }
    match text.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(format!("`{text}` is not a number")),
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub path: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Capital share.
    #[arg(long, default_value = "1/3", value_parser = number)]
    pub alpha: f64,
    /// Productivity level.
    #[arg(long, default_value = "1", value_parser = number)]
    pub a0: f64,
    /// Rate of time preference.
    #[arg(long, default_value = "0.05", value_parser = number)]
    pub rho: f64,
    /// Population growth rate.
    #[arg(long, default_value = "0.01", value_parser = number)]
    pub n: f64,
    /// Depreciation rate.
    #[arg(long, default_value = "0.05", value_parser = number)]
    pub delta: f64,
    /// Inverse elasticity of intertemporal substitution.
    #[arg(long, default_value = "2", value_parser = number)]
    pub theta: f64,
}

impl ParamArgs {
    pub fn params(&self) -> GrowthParams {
        GrowthParams {
            alpha: self.alpha,
            a0: self.a0,
            rho: self.rho,
            n: self.n,
            delta: self.delta,
            theta: self.theta,
        }
    }
}

#[derive(Args, Debug)]
pub struct SteadyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Initial capital per capita.
    #[arg(long, value_parser = number)]
    pub k0: f64,
    /// Initial consumption per capita.
    #[arg(long, value_parser = number, required_unless_present = "saddle", conflicts_with = "saddle")]
    pub c0: Option<f64>,
    /// Choose c0 on the saddle path.
    #[arg(long)]
    pub saddle: bool,
    #[arg(long, default_value = "0.01", value_parser = number)]
    pub h: f64,
    #[arg(long, default_value = "200", value_parser = number)]
    pub t_max: f64,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PhaseArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Defaults to k*/10.
    #[arg(long, value_parser = number)]
    pub k_min: Option<f64>,
    /// Defaults to 3k*.
    #[arg(long, value_parser = number)]
    pub k_max: Option<f64>,
    /// Defaults to c*/10.
    #[arg(long, value_parser = number)]
    pub c_min: Option<f64>,
    /// Defaults to 2c*.
    #[arg(long, value_parser = number)]
    pub c_max: Option<f64>,
    /// Points per axis.
    #[arg(long, default_value_t = 40)]
    pub grid: usize,
    /// Directory for field.csv, nullcline_kdot.csv and nullcline_cdot.csv.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct WelfareArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// CSV with `t` and `c` columns on a uniform grid.
    #[arg(long, required_unless_present = "saddle", conflicts_with = "saddle")]
    pub traj: Option<PathBuf>,
    /// Evaluate the saddle path from `--k0`, and the path that freezes its
    /// initial consumption.
    #[arg(long, requires = "k0")]
    pub saddle: bool,
    #[arg(long, value_parser = number)]
    pub k0: Option<f64>,
    #[arg(long, default_value = "0.01", value_parser = number)]
    pub h: f64,
    #[arg(long, default_value = "200", value_parser = number)]
    pub t_max: f64,
}
