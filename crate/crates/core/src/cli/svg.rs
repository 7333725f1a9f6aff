//! SVG plot: marching-squares contour of h and the sample points.

use super::parse::PlotBox;
use super::pipeline::{approx, PointReport};
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 20.0;
const LEGEND: f64 = 160.0;
const PALETTE: [&str; 8] = ["#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#17becf", "#1f77b4", "#9467bd", "#8c564b"];

/// Grid edge: horizontal (i, j)-(i+1, j) or vertical (i, j)-(i, j+1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Edge {
    H(usize, usize),
    V(usize, usize),
}

struct Grid {
    n: usize,
    x: Vec<f64>,
    y: Vec<f64>,
    val: Vec<Vec<f64>>,
}

impl Grid {
    fn new(h: &MPoly, b: &PlotBox, n: usize) -> Self {
        let x: Vec<f64> = (0..=n).map(|i| b.xmin + (b.xmax - b.xmin) * i as f64 / n as f64).collect();
        let y: Vec<f64> = (0..=n).map(|j| b.ymin + (b.ymax - b.ymin) * j as f64 / n as f64).collect();
        let val = x.iter().map(|&xi| y.iter().map(|&yj| h.eval_f64(&[xi, yj])).collect()).collect();
        Grid { n, x, y, val }
    }

    fn positive(&self, i: usize, j: usize) -> bool {
        self.val[i][j] >= 0.0
    }

    /// Linear interpolation of the zero on an edge.
    fn point(&self, e: Edge) -> (f64, f64) {
        let ((i0, j0), (i1, j1)) = match e {
            Edge::H(i, j) => ((i, j), (i + 1, j)),
            Edge::V(i, j) => ((i, j), (i, j + 1)),
        };
        let (a, b) = (self.val[i0][j0], self.val[i1][j1]);
        let t = if a == b { 0.5 } else { (a / (a - b)).clamp(0.0, 1.0) };
        (self.x[i0] + t * (self.x[i1] - self.x[i0]), self.y[j0] + t * (self.y[j1] - self.y[j0]))
    }

    /// Contour segments as pairs of edges.
    fn segments(&self) -> Vec<(Edge, Edge)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                // corners counter-clockwise from (i, j); edges between them
                let s = [self.positive(i, j), self.positive(i + 1, j), self.positive(i + 1, j + 1), self.positive(i, j + 1)];
                let e = [Edge::H(i, j), Edge::V(i + 1, j), Edge::H(i, j + 1), Edge::V(i, j)];
                let cut: Vec<usize> = (0..4).filter(|&k| s[k] != s[(k + 1) % 4]).collect();
                match cut.len() {
                    2 => out.push((e[cut[0]], e[cut[1]])),
                    4 => {
                        let centre = (self.val[i][j] + self.val[i + 1][j] + self.val[i + 1][j + 1] + self.val[i][j + 1]) >= 0.0;
                        if centre == s[0] {
                            out.push((e[0], e[1]));
                            out.push((e[2], e[3]));
                        } else {
                            out.push((e[3], e[0]));
                            out.push((e[1], e[2]));
                        }
                    }
                    _ => {}
                }
            }
        }
        out
    }
}

/// Joins segments sharing an edge into polylines; the flag marks closed loops.
fn chains(segs: &[(Edge, Edge)]) -> Vec<(Vec<Edge>, bool)> {
    let mut at: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (k, (a, b)) in segs.iter().enumerate() {
        at.entry(*a).or_default().push(k);
        at.entry(*b).or_default().push(k);
    }
    let mut used = vec![false; segs.len()];
    let next = |edge: Edge, used: &[bool]| at[&edge].iter().copied().find(|&k| !used[k]);
    let mut out = Vec::new();
    // Open chains start at edges touched once; loops are what remains.
    let starts: Vec<Edge> = at.iter().filter(|(_, v)| v.len() == 1).map(|(e, _)| *e).collect();
    let loops: Vec<Edge> = segs.iter().map(|s| s.0).collect();
    for (start, closed) in starts.into_iter().map(|e| (e, false)).chain(loops.into_iter().map(|e| (e, true))) {
        let Some(first) = next(start, &used) else { continue };
        let mut line = vec![start];
        let mut cur = start;
        let mut k = first;
        loop {
            used[k] = true;
            let (a, b) = segs[k];
            cur = if a == cur { b } else { a };
            line.push(cur);
            match next(cur, &used) {
                Some(k2) => k = k2,
                None => break,
            }
        }
        let is_loop = closed && line.first() == line.last();
        out.push((line, is_loop));
    }
    out
}

fn colour(stable: usize) -> &'static str {
    PALETTE[stable % PALETTE.len()]
}

/// Deterministic SVG 1.1 document.
pub fn emit_svg(h: &MPoly, points: &[PointReport], b: &PlotBox, grid_n: usize) -> Result<String> {
    b.check()?;
    if grid_n < 16 {
        return Err(Error::Argument(format!("grid resolution {grid_n} is below 16")));
    }
    let sx = |x: f64| MARGIN + (x - b.xmin) / (b.xmax - b.xmin) * SIZE;
    let sy = |y: f64| MARGIN + (b.ymax - y) / (b.ymax - b.ymin) * SIZE;
    let width = SIZE + 2.0 * MARGIN + LEGEND;
    let height = SIZE + 2.0 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<clipPath id="plot"><rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}"/></clipPath>"#);
    let _ = writeln!(out, r##"<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="white" stroke="#444"/>"##);
    let _ = writeln!(
        out,
        r##"<text x="{MARGIN}" y="{:.1}" font-size="11" fill="#444">[{}, {}] x [{}, {}]</text>"##,
        MARGIN - 6.0,
        b.xmin,
        b.xmax,
        b.ymin,
        b.ymax
    );

    let _ = writeln!(out, r#"<g clip-path="url(#plot)" fill="none" stroke="black" stroke-width="1.5">"#);
    if !h.is_constant() {
        let grid = Grid::new(h, b, grid_n);
        for (line, closed) in chains(&grid.segments()) {
            let mut pts: Vec<String> = line
                .iter()
                .map(|&e| {
                    let (x, y) = grid.point(e);
                    format!("{:.2},{:.2}", sx(x), sy(y))
                })
                .collect();
            if closed {
                pts.pop();
                let _ = writeln!(out, r#"<polygon points="{}"/>"#, pts.join(" "));
            } else {
                let _ = writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" "));
            }
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g clip-path="url(#plot)" stroke="black" stroke-width="0.5">"#);
    for pt in points {
        let (x, y) = approx(pt);
        let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{}"/>"#, sx(x), sy(y), colour(pt.stable));
    }
    let _ = writeln!(out, "</g>");

    let counts: BTreeSet<usize> = points.iter().map(|pt| pt.stable).collect();
    let lx = SIZE + 2.0 * MARGIN;
    let _ = writeln!(out, r#"<g font-size="13" font-family="sans-serif">"#);
    let _ = writeln!(out, r#"<text x="{lx}" y="{}">stable roots</text>"#, MARGIN + 12.0);
    for (k, c) in counts.iter().enumerate() {
        let y = MARGIN + 32.0 + 20.0 * k as f64;
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="5" fill="{}" stroke="black" stroke-width="0.5"/>"#, lx + 6.0, y - 4.0, colour(*c));
        let _ = writeln!(out, r#"<text x="{}" y="{y}">{c}</text>"#, lx + 18.0);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::parse_input;
    use crate::cli::pipeline::run_pipeline;

    fn square(a: f64) -> PlotBox {
        PlotBox { xmin: -a, xmax: a, ymin: -a, ymax: a }
    }

    #[test]
    fn circle_contour() {
        // Roots of s^2 + ... cross the axis on a circle; use the border directly.
        let rep = run_pipeline(&parse_input("poly: s^2 + s + r^2 + p^2 - 1").unwrap()).unwrap();
        let svg = emit_svg(&rep.border.h, &rep.points, &square(2.0), 64).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<polyline").count(), 0);
        assert_eq!(svg.matches("<circle").count(), rep.points.len() + 2);
        assert_eq!(rep.points.len(), 5);
    }

    #[test]
    fn constant_border() {
        let rep = run_pipeline(&parse_input("poly: s + 1 + 0*r").unwrap()).unwrap();
        let svg = emit_svg(&rep.border.h, &rep.points, &square(1.0), 16).unwrap();
        assert!(!svg.contains("<polygon") && !svg.contains("<polyline"));
        assert_eq!(svg.matches("<circle").count(), 2);
    }

    #[test]
    fn deterministic_and_checked() {
        let rep = run_pipeline(&parse_input("poly: s^2 + r*s + p").unwrap()).unwrap();
        let a = emit_svg(&rep.border.h, &rep.points, &square(3.0), 48).unwrap();
        let b = emit_svg(&rep.border.h, &rep.points, &square(3.0), 48).unwrap();
        assert_eq!(a, b);
        assert!(emit_svg(&rep.border.h, &rep.points, &PlotBox { xmin: 1.0, xmax: 1.0, ymin: 0.0, ymax: 1.0 }, 48).is_err());
        assert!(emit_svg(&rep.border.h, &rep.points, &square(3.0), 8).is_err());
    }
}
