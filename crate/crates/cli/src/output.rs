//! Text, JSON and SVG renderings of a run.

use std::fmt::Write as _;

use cechpers::persistence::{Bar, PersistenceEvent};
use cechpers::SqRadius;
use serde::{Deserialize, Serialize};

/// `√(sq)` rounded to six decimals; exact values travel as strings.
pub fn display_radius(sq: &SqRadius) -> f64 {
    (sq.radius_f64() * 1e6).round() / 1e6
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonBar {
    pub p: usize,
    pub birth: f64,
    pub death: Option<f64>,
    pub birth_sq: String,
    pub death_sq: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonBetti {
    pub sq_radius: String,
    pub values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub simplex: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonEvent {
    pub kind: String,
    pub p: usize,
    pub sq_radius: String,
    pub rep: Vec<JsonTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub dims: usize,
    pub bars: Vec<JsonBar>,
    pub betti: Vec<JsonBetti>,
    pub events: Vec<JsonEvent>,
}

impl JsonReport {
    pub fn new(dims: usize, bars: &[Bar], events: &[PersistenceEvent], betti: &[(SqRadius, Vec<usize>)]) -> Self {
        JsonReport {
            dims,
            bars: bars
                .iter()
                .map(|b| JsonBar {
                    p: b.p,
                    birth: display_radius(&b.birth),
                    death: b.death.as_ref().map(display_radius),
                    birth_sq: b.birth.exact_string(),
                    death_sq: b.death.as_ref().map(SqRadius::exact_string),
                })
                .collect(),
            betti: betti
                .iter()
                .map(|(r, v)| JsonBetti {
                    sq_radius: r.exact_string(),
                    values: v.clone(),
                })
                .collect(),
            events: events
                .iter()
                .map(|e| JsonEvent {
                    kind: e.kind.as_str().to_string(),
                    p: e.p,
                    sq_radius: e.sq_radius.exact_string(),
                    rep: e
                        .rep
                        .iter()
                        .map(|(s, c)| JsonTerm {
                            simplex: s.clone(),
                            coeff: c.exact_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Recomputes the display floats from the exact strings.
    pub fn refresh_floats(&mut self) -> Result<(), String> {
        for b in &mut self.bars {
            b.birth = display_radius(&b.birth_sq.parse()?);
            b.death = match &b.death_sq {
                Some(d) => Some(display_radius(&d.parse()?)),
                None => None,
            };
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn emit_json(dims: usize, bars: &[Bar], events: &[PersistenceEvent], betti: &[(SqRadius, Vec<usize>)]) -> String {
    JsonReport::new(dims, bars, events, betti).to_text()
}

const WIDTH: f64 = 800.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 40.0;
const TOP: f64 = 30.0;
const LANE: f64 = 14.0;
const GAP: f64 = 18.0;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

fn nice_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let step = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    step * mag
}

/// A standalone SVG barcode: one lane per bar, grouped by dimension.
pub fn emit_svg(bars: &[Bar]) -> String {
    let max_radius = bars
        .iter()
        .flat_map(|b| std::iter::once(&b.birth).chain(b.death.as_ref()))
        .map(SqRadius::radius_f64)
        .fold(0.0, f64::max);
    let extent = if max_radius > 0.0 { max_radius * 1.1 } else { 1.0 };
    let plot = WIDTH - LEFT - RIGHT;
    let x = |r: f64| LEFT + plot * r / extent;

    let mut dims: Vec<usize> = bars.iter().map(|b| b.p).collect();
    dims.sort_unstable();
    dims.dedup();
    let body_height = bars.len() as f64 * LANE + dims.len() as f64 * GAP;
    let axis_y = TOP + body_height + 10.0;
    let height = axis_y + 40.0;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}">"#
    );
    let _ = writeln!(
        s,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="context-stroke"/></marker></defs>"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let mut y = TOP;
    for &p in &dims {
        let color = COLORS[p % COLORS.len()];
        y += GAP;
        let _ = writeln!(s, r#"<g class="dimension" id="H{p}" fill="{color}" stroke="{color}">"#);
        let _ = writeln!(
            s,
            r#"<text x="8" y="{:.1}" font-family="sans-serif" font-size="12" stroke="none">H{p}</text>"#,
            y - 4.0
        );
        for b in bars.iter().filter(|b| b.p == p) {
            let x0 = x(b.birth.radius_f64());
            let h = LANE - 4.0;
            match &b.death {
                Some(d) => {
                    let w = (x(d.radius_f64()) - x0).max(1.0);
                    let _ = writeln!(
                        s,
                        r#"<rect class="bar" x="{x0:.2}" y="{y:.2}" width="{w:.2}" height="{h:.1}" stroke="none"/>"#
                    );
                }
                None => {
                    let end = WIDTH - RIGHT;
                    let w = (end - x0 - 8.0).max(1.0);
                    let _ = writeln!(
                        s,
                        r#"<rect class="bar infinite" x="{x0:.2}" y="{y:.2}" width="{w:.2}" height="{h:.1}" stroke="none"/>"#
                    );
                    let mid = y + h / 2.0;
                    let _ = writeln!(
                        s,
                        r#"<line class="arrow" x1="{:.2}" y1="{mid:.2}" x2="{end:.2}" y2="{mid:.2}" stroke-width="2" marker-end="url(#arrow)"/>"#,
                        x0 + w
                    );
                }
            }
            y += LANE;
        }
        let _ = writeln!(s, "</g>");
    }

    let _ = writeln!(s, r##"<g class="axis" stroke="#333" fill="#333" font-family="sans-serif" font-size="11">"##);
    let _ = writeln!(
        s,
        r#"<line x1="{LEFT}" y1="{axis_y:.2}" x2="{:.2}" y2="{axis_y:.2}"/>"#,
        WIDTH - RIGHT
    );
    let step = nice_step(extent);
    let mut k = 0u32;
    loop {
        let r = step * k as f64;
        if r > extent + 1e-12 {
            break;
        }
        let tx = x(r);
        let _ = writeln!(
            s,
            r#"<line x1="{tx:.2}" y1="{axis_y:.2}" x2="{tx:.2}" y2="{:.2}"/>"#,
            axis_y + 5.0
        );
        let label = format!("{:.3}", r).trim_end_matches('0').trim_end_matches('.').to_string();
        let _ = writeln!(
            s,
            r#"<text x="{tx:.2}" y="{:.2}" text-anchor="middle" stroke="none">{label}</text>"#,
            axis_y + 18.0
        );
        k += 1;
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" stroke="none">radius</text>"#,
        LEFT + plot / 2.0,
        axis_y + 34.0
    );
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}
