//! From a parsed problem to a region report.

use super::parse::{Payload, PlotBox, Problem};
use crate::arith::{rat_to_f64, Rational};
use crate::border::{border_curve, BorderCurve, Source};
use crate::bounds::{curve_complement_bound, matrix_planar_bound, matrix_warren_bound, planar_bound, warren_bound};
use crate::cad2d::{count_regions, critical_abscissae, locate, sample_cloud};
use crate::error::{Error, Result};
use crate::family::{charpoly, closed_loop, PolyFamily};
use crate::mpoly::MPoly;
use crate::stability::{classify_point, RootCount};
use crate::upoly::Interval;
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub r: Rational,
    pub p: Rational,
    pub stable: usize,
    pub unstable: usize,
    pub region: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub source: Source,
    pub poly: MPoly,
    pub isolated: bool,
    /// Whether some region of the curve without this component holds points
    /// with different root counts.
    pub separating: bool,
}

/// Named bounds in emission order; `lemma1` and `theorem2` always come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lemma1: u128,
    pub theorem2: u128,
    pub theorem1: u128,
    pub corollary1: Option<u128>,
    pub corollary2: Option<u128>,
}

#[derive(Clone, Debug)]
pub struct RegionReport {
    pub family: PolyFamily,
    pub border: BorderCurve,
    pub bounds: Bounds,
    /// Sorted by (r, p).
    pub points: Vec<PointReport>,
    pub region_count: usize,
    pub has_stable_region: bool,
    pub components: Vec<ComponentReport>,
    pub warnings: Vec<String>,
    /// Critical abscissae and ordinates padded by 1.
    pub default_box: PlotBox,
}

impl RegionReport {
    /// Degree of the curve part of the border, as reported.
    pub fn degree(&self) -> u32 {
        self.border.curve_degree
    }
}

/// The polynomial family the problem describes, plus the matrix size and
/// entry degree for matrix problems.
pub fn problem_family(pr: &Problem) -> Result<(PolyFamily, Option<(u32, u32)>)> {
    match &pr.payload {
        Payload::Polynomial(f) => Ok((PolyFamily::new(f, pr.time, pr.params())?, None)),
        Payload::Matrix { a, b, c, k } => {
            let m = closed_loop(a, b, c, k, pr.time, pr.params())?;
            let shape = (m.size() as u32, m.param_degree());
            Ok((charpoly(&m)?, Some(shape)))
        }
    }
}

fn bounds_for(family: &PolyFamily, border: &BorderCurve, matrix: Option<(u32, u32)>) -> Result<Bounds> {
    let (t, d) = (family.degree_s(), family.param_degree());
    let (corollary1, corollary2) = match matrix {
        Some((n, dk)) => (Some(matrix_planar_bound(n, dk, family.time)?), Some(matrix_warren_bound(n, dk, 2, family.time)?)),
        None => (None, None),
    };
    Ok(Bounds {
        lemma1: curve_complement_bound(border.curve_degree)?,
        theorem2: planar_bound(t, d)?,
        theorem1: warren_bound(t, d, 2)?,
        corollary1,
        corollary2,
    })
}

fn span(crit: &[Interval]) -> (f64, f64) {
    match (crit.first(), crit.last()) {
        (Some(a), Some(b)) => (a.approx(), b.approx()),
        _ => (0.0, 0.0),
    }
}

/// Smallest box holding the critical abscissae and ordinates of h, padded by 1.
pub fn default_box(h: &MPoly) -> Result<PlotBox> {
    box_around(h, &critical_abscissae(h)?)
}

/// As `default_box`, with the critical abscissae already known.
fn box_around(h: &MPoly, crit_x: &[Interval]) -> Result<PlotBox> {
    if h.is_constant() {
        return Ok(PlotBox { xmin: -1.0, xmax: 1.0, ymin: -1.0, ymax: 1.0 });
    }
    let vars = h.vars();
    let swapped = h.with_vars(&[vars[1].as_str(), vars[0].as_str()])?;
    let (x0, x1) = span(crit_x);
    let (y0, y1) = span(&critical_abscissae(&swapped)?);
    Ok(PlotBox { xmin: x0 - 1.0, xmax: x1 + 1.0, ymin: y0 - 1.0, ymax: y1 + 1.0 })
}

/// Region ids of `points` in the complement of `h`, or `None` when some point
/// cannot be located off the critical lines.
fn regions_without(h: &MPoly, points: &[PointReport]) -> Result<Option<Vec<usize>>> {
    let cloud = sample_cloud(h)?;
    let part = count_regions(h, &cloud)?;
    let mut out = Vec::with_capacity(points.len());
    for pt in points {
        match locate(h, &cloud, &part, &pt.r, &pt.p)? {
            Some(id) => out.push(id),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn mixes_counts(ids: &[usize], points: &[PointReport]) -> bool {
    let mut seen: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    ids.iter().zip(points).any(|(id, pt)| *seen.entry(*id).or_insert((pt.stable, pt.unstable)) != (pt.stable, pt.unstable))
}

fn component_reports(border: &BorderCurve, points: &[PointReport]) -> Result<Vec<ComponentReport>> {
    let mut out = Vec::new();
    for (i, c) in border.components.iter().enumerate() {
        let separating = if c.isolated {
            false
        } else {
            let rest = border
                .components
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(border.h.lift(crate::arith::Gauss::one()), |acc, (_, o)| &acc * &o.poly);
            match regions_without(&rest, points)? {
                Some(ids) => mixes_counts(&ids, points),
                None => true,
            }
        };
        out.push(ComponentReport { source: c.source, poly: c.poly.clone(), isolated: c.isolated, separating });
    }
    Ok(out)
}

/// Fails unless `count` regions fit in the complement of a degree `degree` curve.
pub fn check_bound(count: usize, degree: u32) -> Result<()> {
    let bound = curve_complement_bound(degree)?;
    if count as u128 > bound {
        return Err(Error::BoundViolation { count, bound, degree });
    }
    Ok(())
}

/// Runs the whole analysis. Fails if the region count exceeds the
/// curve-complement bound for the border degree.
pub fn run_pipeline(pr: &Problem) -> Result<RegionReport> {
    let (family, matrix) = problem_family(pr)?;
    let border = border_curve(&family)?;
    let h = &border.h;
    let cloud = sample_cloud(h)?;
    let part = count_regions(h, &cloud)?;
    let counts: Vec<RootCount> =
        cloud.points.par_iter().map(|pt| classify_point(&family, &pt.r, &pt.p)).collect::<Result<_>>()?;

    let bounds = bounds_for(&family, &border, matrix)?;
    check_bound(part.region_count, border.curve_degree)?;

    let points: Vec<PointReport> = cloud
        .points
        .iter()
        .zip(&counts)
        .zip(&part.region_of)
        .map(|((pt, c), &region)| PointReport { r: pt.r.clone(), p: pt.p.clone(), stable: c.stable, unstable: c.unstable, region })
        .collect();

    let mut warnings = Vec::new();
    if mixes_counts(&part.region_of, &points) {
        warnings.push("points in one region have different root counts; regions were merged".to_string());
    }
    let (t, d) = (family.degree_s(), family.param_degree());
    if border.curve_degree > 2 * t * d + 2 * d {
        warnings.push(format!("border degree {} exceeds 2td + 2d = {}", border.curve_degree, 2 * t * d + 2 * d));
    }
    let components = component_reports(&border, &points)?;
    for c in &components {
        if !c.separating {
            let what = if c.isolated { "finitely many points" } else { "a curve" };
            warnings.push(format!("{} component {} is {what} that separates no root counts", c.source.as_str(), c.poly));
        }
    }

    let has_stable_region = points.iter().any(|pt| pt.stable == family.degree_s() as usize);
    let default_box = box_around(h, &cloud.critical)?;
    Ok(RegionReport {
        family,
        border,
        bounds,
        points,
        region_count: part.region_count,
        has_stable_region,
        components,
        warnings,
        default_box,
    })
}

/// Approximate coordinates for display.
pub fn approx(pt: &PointReport) -> (f64, f64) {
    (rat_to_f64(&pt.r), rat_to_f64(&pt.p))
}
