//! Front end for the `cechpers` binary: configuration, the pipeline driver
//! and the text, JSON and SVG renderings.

pub mod config;
pub mod output;

use std::fmt::Write as _;

use cechpers::cohomology::betti_numbers;
use cechpers::complex::{build_filtration, nerve_at, ComplexError, Filtration};
use cechpers::geometry::parse_point_cloud;
use cechpers::persistence::{barcode_from_chain, classify, replay_chain, Barcode, EventKind, PersistenceError, PersistenceEvent, ResolutionChain};
use cechpers::{Field, SqRadius};
use thiserror::Error;

pub use config::{Args, ConfigError, GridChoice, InputKind, OutputFormat, RunConfig};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Config(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 1,
            RunError::Config(_) => 2,
        }
    }
}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        RunError::Config(e.to_string())
    }
}

fn complex_error(e: ComplexError) -> RunError {
    match e {
        ComplexError::CapExceeded { .. } | ComplexError::BadOrder { .. } => RunError::Config(e.to_string()),
        other => RunError::Input(other.to_string()),
    }
}

fn persistence_error(e: PersistenceError) -> RunError {
    match e {
        PersistenceError::Complex(c) => complex_error(c),
        other => RunError::Config(other.to_string()),
    }
}

/// Everything a run computes, before rendering.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub field: Field,
    pub max_dim: usize,
    pub filtration: Filtration,
    pub chain: ResolutionChain,
    pub barcode: Barcode,
    /// Births, deaths and merges, ordered by radius then dimension.
    pub events: Vec<PersistenceEvent>,
    pub betti: Vec<(SqRadius, Vec<usize>)>,
}

pub fn load_filtration(config: &RunConfig) -> Result<Filtration, RunError> {
    let text = std::fs::read_to_string(&config.input)
        .map_err(|e| RunError::Input(format!("{}: {e}", config.input.display())))?;
    let context = |e: String| RunError::Input(format!("{}: {e}", config.input.display()));
    match config.input_kind {
        InputKind::Csv => {
            let cloud = parse_point_cloud(&text).map_err(|e| context(e.to_string()))?;
            build_filtration(&cloud, config.complex, config.max_dim, config.max_radius.as_ref()).map_err(complex_error)
        }
        InputKind::Fixture => {
            let f = Filtration::from_fixture_json(&text).map_err(|e| context(e.to_string()))?;
            Ok(f.truncated(config.max_dim))
        }
    }
}

pub fn analyze(config: &RunConfig) -> Result<Analysis, RunError> {
    let filtration = load_filtration(config)?;
    let max_dim = filtration.max_dim();
    let max_p = max_dim.saturating_sub(1);
    let grid = match &config.grid {
        GridChoice::Auto => cechpers::persistence::GridSpec::AllCritical,
        GridChoice::Explicit(v) => cechpers::persistence::GridSpec::Explicit(v.clone()),
    }
    .resolve(&filtration)
    .map_err(persistence_error)?;
    let chain = replay_chain(&filtration, &grid, config.field, max_p).map_err(persistence_error)?;
    let barcode = barcode_from_chain(&chain);
    let mut events: Vec<PersistenceEvent> = (0..=max_p)
        .flat_map(|p| classify(&chain, p))
        .filter(|e| e.kind != EventKind::Persist)
        .collect();
    events.sort_by(|a, b| (&a.sq_radius, a.p).cmp(&(&b.sq_radius, b.p)));
    let radii: Vec<SqRadius> = match &config.betti_at {
        Some(r) => vec![r.clone()],
        None => grid.clone(),
    };
    let betti = radii
        .into_iter()
        .map(|r| {
            let nerve = nerve_at(&filtration, &r).map_err(complex_error)?;
            let values = betti_numbers(&nerve, max_dim, config.field);
            Ok((r, values))
        })
        .collect::<Result<Vec<_>, RunError>>()?;
    Ok(Analysis {
        field: config.field,
        max_dim,
        filtration,
        chain,
        barcode,
        events,
        betti,
    })
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn radius_text(sq: &SqRadius) -> String {
    format!("{} (sq {})", output::display_radius(sq), sq.exact_string())
}

/// `β⁰=2 β¹=1 β²=0`
pub fn betti_line(values: &[usize]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(p, b)| format!("β{}={b}", superscript(p)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_text(a: &Analysis) -> String {
    let mut s = String::new();
    let grid = a.chain.grid();
    let _ = writeln!(s, "field: {}", a.field);
    let _ = writeln!(s, "simplices: {} (max dimension {})", a.filtration.len(), a.max_dim);
    let _ = writeln!(
        s,
        "grid: {} radii from {} to {}",
        grid.len(),
        radius_text(&grid[0]),
        radius_text(grid.last().unwrap())
    );

    let _ = writeln!(s, "\nBetti numbers");
    for (r, v) in &a.betti {
        let _ = writeln!(s, "  radius {}: {}", radius_text(r), betti_line(v));
    }

    let _ = writeln!(s, "\nBarcode");
    for b in &a.barcode.bars {
        let death = b.death.as_ref().map_or("inf".to_string(), |d| output::display_radius(d).to_string());
        let death_sq = b.death.as_ref().map_or("inf".to_string(), SqRadius::exact_string);
        let _ = writeln!(
            s,
            "  H{} [{}, {})  sq [{}, {})",
            b.p,
            output::display_radius(&b.birth),
            death,
            b.birth.exact_string(),
            death_sq
        );
    }
    let zero: Vec<String> = a.barcode.zero_length.iter().enumerate().map(|(p, z)| format!("H{p}={z}")).collect();
    let _ = writeln!(s, "  zero-length intervals: {}", zero.join(" "));

    let top = grid.len() - 1;
    let _ = writeln!(s, "\nClasses at radius {}", radius_text(&grid[top]));
    for p in 0..=a.chain.max_p() {
        let basis = a.chain.basis(top, p);
        let reps: Vec<String> = basis.quotient_reps().iter().map(|v| format!("[{}]", basis.describe(&v.coords))).collect();
        let shown = if reps.is_empty() { "none".to_string() } else { reps.join(", ") };
        let _ = writeln!(s, "  H^{p}: {shown}");
    }

    let _ = writeln!(s, "\nEvents");
    if a.events.is_empty() {
        let _ = writeln!(s, "  none");
    }
    for e in &a.events {
        let rep: Vec<String> = e.rep.iter().map(|(l, c)| format!("{c}·{l}")).collect();
        let _ = writeln!(
            s,
            "  radius {}: H{} {} of [{}]",
            radius_text(&e.sq_radius),
            e.p,
            e.kind.as_str(),
            rep.join(" + ")
        );
    }
    s
}

pub fn render(a: &Analysis, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(a),
        OutputFormat::Json => output::emit_json(a.max_dim + 1, &a.barcode.bars, &a.events, &a.betti),
        OutputFormat::Svg => output::emit_svg(&a.barcode.bars),
    }
}

/// Runs the pipeline and returns the rendered artifact.
pub fn run(config: &RunConfig) -> Result<String, RunError> {
    let analysis = analyze(config)?;
    Ok(render(&analysis, config.format))
}
