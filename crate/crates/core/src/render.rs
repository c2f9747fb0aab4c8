//! Barcode pictures of persistence diagrams, as plain text or SVG.
//!
//! Bars are stacked top to bottom in the order given: the degree-0 band
//! first, then degree 1. Essential bars end in an arrowhead at the right
//! margin. Output depends only on the input and the [`RenderSpec`].

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::persistence::PersistenceDiagram;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bar {
    pub degree: u8,
    pub birth: Rational,
    /// `None` for an essential class.
    pub death: Option<Rational>,
}

/// Bars to draw. Unlike a [`PersistenceDiagram`], endpoints may be any
/// non-negative rationals, so ill-formed barcodes can be drawn too.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Barcode {
    pub bars: Vec<Bar>,
}

impl Barcode {
    /// Degree-0 bars from `(birth, death)` pairs, in the given order.
    pub fn from_bars(bars: impl IntoIterator<Item = (Rational, Option<Rational>)>) -> Self {
        Barcode { bars: bars.into_iter().map(|(birth, death)| Bar { degree: 0, birth, death }).collect() }
    }

    /// Largest finite endpoint.
    fn last_time(&self) -> Rational {
        self.bars
            .iter()
            .flat_map(|b| std::iter::once(&b.birth).chain(b.death.as_ref()))
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Number of time units on the axis: one past the last endpoint, so
    /// essential bars stick out.
    fn span(&self) -> u64 {
        self.last_time().floor().try_into().unwrap_or(0u64) + 1
    }
}

impl From<&PersistenceDiagram> for Barcode {
    fn from(d: &PersistenceDiagram) -> Self {
        let t = |x: u64| Rational::from(x);
        let mut bars: Vec<Bar> = d.essential_h0().iter().map(|&b| Bar { degree: 0, birth: t(b), death: None }).collect();
        bars.extend(d.finite_pairs().iter().map(|&(b, e)| Bar { degree: 0, birth: t(b), death: Some(t(e)) }));
        bars.extend(d.essential_h1().iter().map(|&b| Bar { degree: 1, birth: t(b), death: None }));
        Barcode { bars }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            _ => Err(format!("unknown format {s:?} (expected ascii or svg)")),
        }
    }
}

/// `width` counts characters for text output and pixels for SVG.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: Format,
    pub width: usize,
    pub show_grid: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { format: Format::Ascii, width: 80, show_grid: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("width {width} is too small; at least {needed} is needed")]
    WidthTooSmall { width: usize, needed: usize },
}

pub fn render_barcode(d: &PersistenceDiagram, spec: &RenderSpec) -> Result<String, RenderError> {
    render_bars(&Barcode::from(d), spec)
}

pub fn render_bars(b: &Barcode, spec: &RenderSpec) -> Result<String, RenderError> {
    match spec.format {
        Format::Ascii => ascii(b, spec),
        Format::Svg => svg(b, spec),
    }
}

const LABEL: usize = 4;

/// Tick spacing: the smallest of 1, 2, 5, 10, 20, 50, ... that leaves room
/// for a label of `digits` characters.
fn tick_step(units_wide: u64, digits: u64) -> u64 {
    let mut decade = 1;
    loop {
        for m in [1, 2, 5] {
            if decade * m * units_wide > digits {
                return decade * m;
            }
        }
        decade *= 10;
    }
}

fn column(t: &Rational, per_unit: u64) -> usize {
    (t * &Rational::from(per_unit)).floor().try_into().unwrap_or(0usize)
}

fn ascii(b: &Barcode, spec: &RenderSpec) -> Result<String, RenderError> {
    let span = b.span();
    let needed = LABEL + span as usize + 1;
    if spec.width < needed {
        return Err(RenderError::WidthTooSmall { width: spec.width, needed });
    }
    let per_unit = ((spec.width - LABEL - 1) as u64 / span).max(1);
    let plot = (span * per_unit) as usize + 1;

    let mut out = String::new();
    let digits = span.to_string().len() as u64;
    let step = tick_step(per_unit, digits);
    let mut axis = vec![b' '; plot];
    let mut ruler = vec![b'-'; plot];
    let mut t = 0;
    while t <= span {
        let c = (t * per_unit) as usize;
        ruler[c] = b'+';
        let label = t.to_string();
        if c + label.len() <= plot {
            axis[c..c + label.len()].copy_from_slice(label.as_bytes());
        }
        t += step;
    }
    let line = |prefix: &str, body: &[u8]| format!("{prefix}{}", String::from_utf8_lossy(body)).trim_end().to_string();
    writeln!(out, "{}", line("    ", &axis)).unwrap();
    writeln!(out, "{}", line("    ", &ruler)).unwrap();

    let mut previous_degree = None;
    for bar in &b.bars {
        let mut row = vec![b' '; plot];
        if spec.show_grid {
            for t in 0..=span {
                row[(t * per_unit) as usize] = b':';
            }
        }
        let start = column(&bar.birth, per_unit);
        match &bar.death {
            Some(d) => {
                let end = column(d, per_unit).max(start + 1);
                row[start..end].fill(b'=');
                row[start] = b'[';
                row[end] = b']';
            }
            None => {
                row[start..plot - 1].fill(b'=');
                row[start] = b'[';
                row[plot - 1] = b'>';
            }
        }
        let prefix = if previous_degree != Some(bar.degree) { format!("H{} |", bar.degree) } else { "   |".to_string() };
        previous_degree = Some(bar.degree);
        writeln!(out, "{}", line(&prefix, &row)).unwrap();
    }
    Ok(out)
}

const MARGIN: f64 = 40.0;
const ROW: f64 = 16.0;

fn svg(b: &Barcode, spec: &RenderSpec) -> Result<String, RenderError> {
    let span = b.span();
    let needed = 2 * MARGIN as usize + span as usize;
    if spec.width < needed {
        return Err(RenderError::WidthTooSmall { width: spec.width, needed });
    }
    let unit = (spec.width as f64 - 2.0 * MARGIN) / span as f64;
    let x = |t: f64| MARGIN + t * unit;
    let height = 2.0 * MARGIN + ROW * b.bars.len() as f64;
    let bottom = height - MARGIN;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{height:.0}" viewBox="0 0 {} {height:.0}">"#,
        spec.width, spec.width
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let step = tick_step(unit.floor() as u64, span.to_string().len() as u64 * 6);
    for t in 0..=span {
        let xt = x(t as f64);
        if spec.show_grid {
            writeln!(
                out,
                r#"<line x1="{xt:.2}" y1="{:.2}" x2="{xt:.2}" y2="{bottom:.2}" stroke="silver" stroke-dasharray="3 3"/>"#,
                MARGIN - 4.0
            )
            .unwrap();
        }
        if t % step == 0 {
            writeln!(
                out,
                r#"<text x="{xt:.2}" y="{:.2}" font-size="10" text-anchor="middle">{t}</text>"#,
                bottom + 14.0
            )
            .unwrap();
        }
    }
    writeln!(out, r#"<line x1="{:.2}" y1="{bottom:.2}" x2="{:.2}" y2="{bottom:.2}" stroke="black"/>"#, x(0.0), x(span as f64))
        .unwrap();

    let mut previous_degree = None;
    for (i, bar) in b.bars.iter().enumerate() {
        let y = MARGIN + ROW * (i as f64 + 0.5);
        if previous_degree != Some(bar.degree) {
            writeln!(out, r#"<text x="4" y="{:.2}" font-size="11">H{}</text>"#, y + 4.0, bar.degree).unwrap();
        }
        previous_degree = Some(bar.degree);
        let x1 = x(bar.birth.to_f64());
        match &bar.death {
            Some(d) => {
                writeln!(
                    out,
                    r#"<line x1="{x1:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="black" stroke-width="3"/>"#,
                    x(d.to_f64())
                )
                .unwrap();
            }
            None => {
                let tip = x(span as f64);
                writeln!(
                    out,
                    r#"<line x1="{x1:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="black" stroke-width="3"/>"#,
                    tip - 6.0
                )
                .unwrap();
                writeln!(
                    out,
                    r#"<polygon points="{tip:.2},{y:.2} {:.2},{:.2} {:.2},{:.2}" fill="black"/>"#,
                    tip - 8.0,
                    y - 5.0,
                    tip - 8.0,
                    y + 5.0
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
