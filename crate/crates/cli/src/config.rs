use std::path::{Path, PathBuf};

use cechpers::geometry;
use cechpers::{ComplexKind, Field, SqRadius};
use clap::{Parser, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("invalid field {0:?}: expected `rational` or `fp:P` with P prime")]
    BadField(String),
    #[error("invalid field {spec:?}: {reason}")]
    BadModulus { spec: String, reason: String },
    #[error("invalid radius {0:?}: expected a nonnegative decimal")]
    BadRadius(String),
    #[error("explicit grid is empty")]
    EmptyGrid,
    #[error("grid radius {0:?} must be positive")]
    NonPositiveGrid(String),
    #[error("grid radii must be strictly increasing ({previous} then {next})")]
    GridNotIncreasing { previous: String, next: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    Csv,
    Fixture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexArg {
    Cech,
    Rips,
}

impl From<ComplexArg> for ComplexKind {
    fn from(c: ComplexArg) -> Self {
        match c {
            ComplexArg::Cech => ComplexKind::Cech,
            ComplexArg::Rips => ComplexKind::Rips,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridChoice {
    Auto,
    /// Squared radii, strictly increasing.
    Explicit(Vec<SqRadius>),
}

/// `rational`, or `fp:P` for a prime `P`.
pub fn parse_field(spec: &str) -> Result<Field, ConfigError> {
    let spec = spec.trim();
    if spec == "rational" {
        return Ok(Field::Rational);
    }
    let Some(p) = spec.strip_prefix("fp:") else {
        return Err(ConfigError::BadField(spec.to_string()));
    };
    let p: u64 = p.parse().map_err(|_| ConfigError::BadField(spec.to_string()))?;
    Field::prime(p).map_err(|e| ConfigError::BadModulus {
        spec: spec.to_string(),
        reason: e.to_string(),
    })
}

/// A radius written as a decimal, returned squared.
pub fn parse_radius(text: &str) -> Result<SqRadius, ConfigError> {
    geometry::parse_radius(text).ok_or_else(|| ConfigError::BadRadius(text.to_string()))
}

/// `auto`, or comma-separated positive radii in increasing order.
pub fn parse_grid(spec: &str) -> Result<GridChoice, ConfigError> {
    let spec = spec.trim();
    if spec == "auto" {
        return Ok(GridChoice::Auto);
    }
    let mut values: Vec<SqRadius> = Vec::new();
    let mut texts: Vec<&str> = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let sq = parse_radius(part)?;
        if sq == SqRadius::zero() {
            return Err(ConfigError::NonPositiveGrid(part.to_string()));
        }
        if let Some(prev) = values.last() {
            if prev >= &sq {
                return Err(ConfigError::GridNotIncreasing {
                    previous: texts.last().unwrap().to_string(),
                    next: part.to_string(),
                });
            }
        }
        values.push(sq);
        texts.push(part);
    }
    if values.is_empty() {
        return Err(ConfigError::EmptyGrid);
    }
    Ok(GridChoice::Explicit(values))
}

#[derive(Debug, Clone, Parser)]
#[command(name = "cechpers", version, about = "Persistent Čech cohomology of small point clouds over exact fields")]
pub struct Args {
    /// CSV point cloud or JSON complex fixture.
    #[arg(long)]
    pub input: PathBuf,
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    pub input_kind: Option<InputKind>,
    #[arg(long, value_enum, default_value = "cech")]
    pub complex: ComplexArg,
    /// Largest simplex dimension; bars are reported below it.
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    /// `rational` or `fp:P`.
    #[arg(long, default_value = "rational")]
    pub field: String,
    /// `auto` (every critical radius) or comma-separated radii.
    #[arg(long, default_value = "auto")]
    pub grid: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Report Betti numbers at this radius.
    #[arg(long)]
    pub betti_at: Option<String>,
    /// Skip simplices entering above this radius.
    #[arg(long)]
    pub max_radius: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub input_kind: InputKind,
    pub complex: ComplexKind,
    pub max_dim: usize,
    pub field: Field,
    pub grid: GridChoice,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
    pub betti_at: Option<SqRadius>,
    pub max_radius: Option<SqRadius>,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        let input = input.into();
        RunConfig {
            input_kind: infer_kind(&input),
            input,
            complex: ComplexKind::Cech,
            max_dim: 2,
            field: Field::Rational,
            grid: GridChoice::Auto,
            format: OutputFormat::Text,
            output: None,
            betti_at: None,
            max_radius: None,
        }
    }
}

fn infer_kind(path: &Path) -> InputKind {
    match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("json") => InputKind::Fixture,
        _ => InputKind::Csv,
    }
}

impl TryFrom<Args> for RunConfig {
    type Error = ConfigError;

    fn try_from(a: Args) -> Result<Self, ConfigError> {
        Ok(RunConfig {
            input_kind: a.input_kind.unwrap_or_else(|| infer_kind(&a.input)),
            input: a.input,
            complex: a.complex.into(),
            max_dim: a.max_dim,
            field: parse_field(&a.field)?,
            grid: parse_grid(&a.grid)?,
            format: a.format,
            output: a.output,
            betti_at: a.betti_at.as_deref().map(parse_radius).transpose()?,
            max_radius: a.max_radius.as_deref().map(parse_radius).transpose()?,
        })
    }
}
