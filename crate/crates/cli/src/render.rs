//! ASCII and SVG pictures of fronts.
//!
//! Strand depth `d` sits on text row `2(d - 1)`; cusps and crossings between
//! depths `d` and `d + 1` sit on the odd row in between. Every event takes one
//! glyph column followed by two rail columns. When strands below a cusp change
//! depth they do so along diagonals in an extra three-column block.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lutz_core::front::{EventKind, TransverseEventKind};
use lutz_core::{FrontDiagram, FrontError, TransverseFront};

const RAIL: usize = 2;
const SHIFT: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Create,
    Annihilate,
    Swap(Crossing),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Crossing {
    /// Legendrian: no over/under marking needed.
    Front,
    /// Descending strand in front.
    Over,
    /// Descending strand behind.
    Under,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Prim {
    Rail { row: usize, from: usize, to: usize, comp: usize },
    /// Four rows up or down over `SHIFT` columns starting at `col`.
    Diagonal { row: usize, col: usize, down: bool, comp: usize },
    LeftCusp { row: usize, col: usize, comp: usize },
    RightCusp { row: usize, col: usize, comp: usize },
    Cross { row: usize, col: usize, kind: Crossing, descending: usize, ascending: usize },
}

struct Layout {
    prims: Vec<Prim>,
    width: usize,
    height: usize,
}

struct Strand {
    comp: usize,
    rail_from: usize,
}

fn end_rail(prims: &mut Vec<Prim>, s: &Strand, depth: usize, col: usize) {
    if col > s.rail_from {
        prims.push(Prim::Rail { row: 2 * depth, from: s.rail_from, to: col - 1, comp: s.comp });
    }
}

fn layout(steps: &[(Step, usize)], comps: &[usize]) -> Layout {
    let mut prims = Vec::new();
    let mut strands: Vec<Strand> = Vec::new();
    let mut col = 0;
    let mut height = 1;

    for (e, &(step, pos)) in steps.iter().enumerate() {
        let p = pos - 1;
        match step {
            Step::Create => {
                if p < strands.len() {
                    for (d, s) in strands.iter_mut().enumerate().skip(p) {
                        end_rail(&mut prims, s, d, col);
                        prims.push(Prim::Diagonal { row: 2 * d, col, down: true, comp: s.comp });
                        s.rail_from = col + SHIFT;
                    }
                    col += SHIFT;
                }
                prims.push(Prim::LeftCusp { row: 2 * p + 1, col, comp: comps[e] });
                for _ in 0..2 {
                    strands.insert(p, Strand { comp: comps[e], rail_from: col + 1 });
                }
                col += 1;
            }
            Step::Annihilate => {
                for d in [p, p + 1] {
                    end_rail(&mut prims, &strands[d], d, col);
                }
                prims.push(Prim::RightCusp { row: 2 * p + 1, col, comp: strands[p].comp });
                strands.drain(p..p + 2);
                col += 1;
                if p < strands.len() {
                    for (d, s) in strands.iter_mut().enumerate().skip(p) {
                        end_rail(&mut prims, s, d + 2, col);
                        prims.push(Prim::Diagonal { row: 2 * (d + 2), col, down: false, comp: s.comp });
                        s.rail_from = col + SHIFT;
                    }
                    col += SHIFT;
                }
            }
            Step::Swap(kind) => {
                for d in [p, p + 1] {
                    end_rail(&mut prims, &strands[d], d, col);
                }
                prims.push(Prim::Cross {
                    row: 2 * p + 1,
                    col,
                    kind,
                    descending: strands[p].comp,
                    ascending: strands[p + 1].comp,
                });
                strands.swap(p, p + 1);
                strands[p].rail_from = col + 1;
                strands[p + 1].rail_from = col + 1;
                col += 1;
            }
        }
        height = height.max(2 * strands.len().max(1) - 1);
        col += RAIL;
    }
    Layout { prims, width: col.saturating_sub(RAIL), height }
}

fn legendrian_steps(d: &FrontDiagram) -> Result<(Vec<(Step, usize)>, Vec<usize>), FrontError> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(FrontError::InvalidDiagram(report.issues));
    }
    let steps = d
        .events()
        .iter()
        .map(|e| {
            let s = match e.kind {
                EventKind::LeftCusp => Step::Create,
                EventKind::RightCusp => Step::Annihilate,
                EventKind::Crossing => Step::Swap(Crossing::Front),
            };
            (s, e.position)
        })
        .collect();
    Ok((steps, report.event_components))
}

fn transverse_steps(t: &TransverseFront) -> Result<(Vec<(Step, usize)>, Vec<usize>), FrontError> {
    let report = t.validate_transverse();
    if !report.is_valid() {
        return Err(FrontError::InvalidTransverseFront(report.issues));
    }
    let steps = t
        .events()
        .iter()
        .map(|e| {
            let s = match e.kind {
                TransverseEventKind::Cup => Step::Create,
                TransverseEventKind::Cap => Step::Annihilate,
                TransverseEventKind::CrossingOver => Step::Swap(Crossing::Over),
                TransverseEventKind::CrossingUnder => Step::Swap(Crossing::Under),
            };
            (s, e.position)
        })
        .collect();
    Ok((steps, report.event_components))
}

fn ascii(l: &Layout) -> String {
    let mut grid: BTreeMap<(usize, usize), char> = BTreeMap::new();
    for prim in &l.prims {
        match *prim {
            Prim::Rail { row, from, to, .. } => {
                for c in from..=to {
                    grid.insert((row, c), '-');
                }
            }
            Prim::Diagonal { row, col, down, .. } => {
                for k in 0..SHIFT {
                    let r = if down { row + 1 + k } else { row - 1 - k };
                    grid.insert((r, col + k), if down { '\\' } else { '/' });
                }
            }
            Prim::LeftCusp { row, col, .. } => {
                grid.insert((row, col), '(');
            }
            Prim::RightCusp { row, col, .. } => {
                grid.insert((row, col), ')');
            }
            Prim::Cross { row, col, kind, .. } => {
                grid.insert((row, col), if kind == Crossing::Under { 'x' } else { 'X' });
            }
        }
    }
    let mut out = String::new();
    for r in 0..l.height {
        let mut line: String = (0..l.width).map(|c| grid.get(&(r, c)).copied().unwrap_or(' ')).collect();
        line.truncate(line.trim_end().len());
        out.push_str(&line);
        out.push('\n');
    }
    out
}

const PALETTE: [&str; 6] = ["#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#117a65"];
const CELL: f64 = 12.0;
const MARGIN: f64 = 12.0;

fn x(col: f64) -> f64 {
    MARGIN + CELL * col
}

fn y(row: f64) -> f64 {
    MARGIN + CELL * row / 2.0
}

fn color(comp: usize) -> &'static str {
    PALETTE[comp % PALETTE.len()]
}

fn line(out: &mut String, (x1, y1): (f64, f64), (x2, y2): (f64, f64), comp: usize) {
    writeln!(out, r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{}"/>"#, color(comp)).unwrap();
}

fn svg(l: &Layout, title: &str) -> String {
    let (w, h) = (2.0 * MARGIN + CELL * l.width as f64, 2.0 * MARGIN + CELL * (l.height as f64 - 1.0) / 2.0);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, "  <title>{title}</title>").unwrap();
    writeln!(out, r#"  <g fill="none" stroke-width="1.5" stroke-linecap="round">"#).unwrap();
    let mut body = String::new();
    for prim in &l.prims {
        match *prim {
            Prim::Rail { row, from, to, comp } => {
                line(&mut body, (x(from as f64 - 0.5), y(row as f64)), (x(to as f64 + 0.5), y(row as f64)), comp)
            }
            Prim::Diagonal { row, col, down, comp } => {
                let end = if down { row + 4 } else { row - 4 };
                line(
                    &mut body,
                    (x(col as f64 - 0.5), y(row as f64)),
                    (x((col + SHIFT) as f64 - 0.5), y(end as f64)),
                    comp,
                )
            }
            Prim::LeftCusp { row, col, comp } | Prim::RightCusp { row, col, comp } => {
                let left = matches!(prim, Prim::LeftCusp { .. });
                let (tip, ends, ctrl) = if left {
                    (col as f64 - 0.5, col as f64 + 0.5, col as f64 + 0.1)
                } else {
                    (col as f64 + 0.5, col as f64 - 0.5, col as f64 - 0.1)
                };
                let (r, mid) = (row as f64, y(row as f64));
                writeln!(
                    body,
                    r#"  <path d="M {} {} Q {} {mid} {} {mid} Q {} {mid} {} {}" stroke="{}"/>"#,
                    x(ends),
                    y(r - 1.0),
                    x(ctrl),
                    x(tip),
                    x(ctrl),
                    x(ends),
                    y(r + 1.0),
                    color(comp)
                )
                .unwrap();
            }
            Prim::Cross { row, col, kind, descending, ascending } => {
                let (c0, c1, r) = (col as f64 - 0.5, col as f64 + 0.5, row as f64);
                let down = ((x(c0), y(r - 1.0)), (x(c1), y(r + 1.0)));
                let up = ((x(c0), y(r + 1.0)), (x(c1), y(r - 1.0)));
                let gapped = |out: &mut String, (a, b): ((f64, f64), (f64, f64)), comp| {
                    let lerp = |t: f64| (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1));
                    line(out, a, lerp(0.35), comp);
                    line(out, lerp(0.65), b, comp);
                };
                match kind {
                    Crossing::Front => {
                        line(&mut body, down.0, down.1, descending);
                        line(&mut body, up.0, up.1, ascending);
                    }
                    Crossing::Over => {
                        line(&mut body, down.0, down.1, descending);
                        gapped(&mut body, up, ascending);
                    }
                    Crossing::Under => {
                        gapped(&mut body, down, descending);
                        line(&mut body, up.0, up.1, ascending);
                    }
                }
            }
        }
    }
    out.push_str(&body);
    writeln!(out, "  </g>\n</svg>").unwrap();
    out
}

pub fn ascii_front(d: &FrontDiagram) -> Result<String, FrontError> {
    let (steps, comps) = legendrian_steps(d)?;
    Ok(ascii(&layout(&steps, &comps)))
}

pub fn ascii_transverse(t: &TransverseFront) -> Result<String, FrontError> {
    let (steps, comps) = transverse_steps(t)?;
    Ok(ascii(&layout(&steps, &comps)))
}

pub fn svg_front(d: &FrontDiagram, title: &str) -> Result<String, FrontError> {
    let (steps, comps) = legendrian_steps(d)?;
    Ok(svg(&layout(&steps, &comps), title))
}

pub fn svg_transverse(t: &TransverseFront, title: &str) -> Result<String, FrontError> {
    let (steps, comps) = transverse_steps(t)?;
    Ok(svg(&layout(&steps, &comps), title))
}
