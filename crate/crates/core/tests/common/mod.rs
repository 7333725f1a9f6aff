#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use ddecomp::arith::{rat_to_f64, Gauss, Rational};
use ddecomp::cad2d::{count_regions, locate, sample_cloud, Bivariate};
use ddecomp::cli::{parse_input, run_pipeline, Payload, PlotBox, RegionReport};
use ddecomp::mpoly::MPoly;
use ddecomp::upoly::{isolate_real_roots, UPoly};
use num_traits::{FromPrimitive, ToPrimitive};
use rayon::prelude::*;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn analyze(text: &str) -> RegionReport {
    let report = run_pipeline(&parse_input(text).unwrap()).unwrap();
    assert!(report.region_count as u128 <= report.bounds.lemma1);
    report
}

/// A polynomial in r and p written in the input grammar.
pub fn rp(expr: &str) -> MPoly {
    let pr = parse_input(&format!("kind: polynomial\npoly: s + {expr}")).unwrap();
    let Payload::Polynomial(f) = pr.payload else { unreachable!("polynomial payload") };
    f.evaluate(&[("s", Gauss::zero())]).unwrap().with_vars(&["r", "p"]).unwrap()
}

/// Whether a and b agree up to a nonzero rational factor.
pub fn proportional(a: &MPoly, b: &MPoly) -> bool {
    !a.is_zero() && !b.is_zero() && a.normalize() == b.normalize()
}

/// Connected components of an n × n grid of cell centres, where two
/// neighbours are joined only if the segment between them provably misses h.
/// Crossings come from exact root isolation on every grid line, so thin
/// slivers between grid nodes still separate.
pub struct Flood {
    pub n: usize,
    pub bbox: PlotBox,
    /// Component of each node, row-major in (i, j) with x = i.
    pub label: Vec<usize>,
    pub sizes: Vec<usize>,
}

/// Which of the n - 1 gaps between consecutive `nodes` hold a root of g.
fn blocked_gaps(g: &UPoly, nodes: &[Rational]) -> Vec<bool> {
    let gaps = nodes.len() - 1;
    if g.is_zero() {
        return vec![true; gaps];
    }
    let step = &nodes[1] - &nodes[0];
    let width = &step / Rational::from_integer(4.into());
    let mut out = vec![false; gaps];
    for mut iv in isolate_real_roots(g).unwrap() {
        if iv.hi < nodes[0] || iv.lo > nodes[gaps] {
            continue;
        }
        iv.refine_to(g, &width);
        // Gap k spans [x_k, x_k+1]; mark every gap meeting [lo, hi].
        let first = ((&iv.lo - &nodes[0]) / &step).ceil().to_integer().to_i64().unwrap() - 1;
        let last = ((&iv.hi - &nodes[0]) / &step).floor().to_integer().to_i64().unwrap();
        for k in first.max(0)..=last.min(gaps as i64 - 1) {
            out[k as usize] = true;
        }
    }
    out
}

impl Flood {
    pub fn new(h: &MPoly, bbox: &PlotBox, n: usize) -> Flood {
        let biv = Bivariate::new(h).unwrap();
            let coord = |lo: f64, hi: f64, i: usize| lo + (i as f64 + 0.5) * (hi - lo) / n as f64;
        let xs: Vec<Rational> = (0..n).map(|i| Rational::from_f64(coord(bbox.xmin, bbox.xmax, i)).unwrap()).collect();
        let ys: Vec<Rational> = (0..n).map(|j| Rational::from_f64(coord(bbox.ymin, bbox.ymax, j)).unwrap()).collect();
        // along_x[j][i]: edge (i, j)-(i + 1, j); along_y[i][j]: edge (i, j)-(i, j + 1).
        let along_x: Vec<Vec<bool>> = ys.par_iter().map(|y| blocked_gaps(&biv.fiber_r(y), &xs)).collect();
        let along_y: Vec<Vec<bool>> = xs.par_iter().map(|x| blocked_gaps(&biv.fiber_p(x), &ys)).collect();
        let mut label = vec![usize::MAX; n * n];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n * n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut size = 0;
            label[start] = id;
            stack.push(start);
            while let Some(k) = stack.pop() {
                size += 1;
                let (i, j) = (k / n, k % n);
                let mut near = Vec::with_capacity(4);
                if i > 0 && !along_x[j][i - 1] {
                    near.push(k - n);
                }
                if i + 1 < n && !along_x[j][i] {
                    near.push(k + n);
                }
                if j > 0 && !along_y[i][j - 1] {
                    near.push(k - 1);
                }
                if j + 1 < n && !along_y[i][j] {
                    near.push(k + 1);
                }
                for m in near {
                    if label[m] == usize::MAX {
                        label[m] = id;
                        stack.push(m);
                    }
                }
            }
            sizes.push(size);
        }
        Flood { n, bbox: *bbox, label, sizes }
    }

    pub fn node(&self, k: usize) -> (f64, f64) {
        let (i, j) = (k / self.n, k % self.n);
        let dx = (self.bbox.xmax - self.bbox.xmin) / self.n as f64;
        let dy = (self.bbox.ymax - self.bbox.ymin) / self.n as f64;
        (self.bbox.xmin + (i as f64 + 0.5) * dx, self.bbox.ymin + (j as f64 + 0.5) * dy)
    }

    /// Component holding (x, y), if it lies in the box.
    pub fn component_at(&self, x: f64, y: f64) -> Option<usize> {
        let fx = (x - self.bbox.xmin) / (self.bbox.xmax - self.bbox.xmin) * self.n as f64;
        let fy = (y - self.bbox.ymin) / (self.bbox.ymax - self.bbox.ymin) * self.n as f64;
        if !(0.0..self.n as f64).contains(&fx) || !(0.0..self.n as f64).contains(&fy) {
            return None;
        }
        Some(self.label[fx as usize * self.n + fy as usize])
    }

    /// Components of at least `min` nodes; smaller ones are slivers or nodes
    /// isolated by conservative blocking.
    pub fn large(&self, min: usize) -> Vec<usize> {
        (0..self.sizes.len()).filter(|&c| self.sizes[c] >= min).collect()
    }
}

/// Outcome of comparing a cloud partition with a flood fill.
pub struct CrossCheck {
    pub flood_regions: usize,
    /// Cloud region of each large flood component.
    pub region_of_component: Vec<usize>,
    pub region_count: usize,
    /// Regions holding a cloud sample inside the box.
    pub sampled: BTreeSet<usize>,
}

impl CrossCheck {
    pub fn reached(&self) -> BTreeSet<usize> {
        self.region_of_component.iter().copied().collect()
    }
}

/// Locates a few nodes of every large flood component exactly. Nodes of one
/// component are joined by paths off the curve, so they must land in a single
/// cloud region.
pub fn cross_check(h: &MPoly, bbox: &PlotBox, n: usize, min: usize) -> CrossCheck {
    let flood = Flood::new(h, bbox, n);
    let cloud = sample_cloud(h).unwrap();
    let part = count_regions(h, &cloud).unwrap();
    let comps = flood.large(min);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); flood.sizes.len()];
    for (k, &c) in flood.label.iter().enumerate() {
        members[c].push(k);
    }
    let mut region_of_component = Vec::new();
    for &c in &comps {
        let nodes = &members[c];
        let picks = [nodes[0], nodes[nodes.len() / 2], nodes[nodes.len() - 1]];
        let mut ids = BTreeSet::new();
        for k in picks {
            let (x, y) = flood.node(k);
            let (r, p) = (Rational::from_f64(x).unwrap(), Rational::from_f64(y).unwrap());
            if let Some(id) = locate(h, &cloud, &part, &r, &p).unwrap() {
                ids.insert(id);
            }
        }
        assert_eq!(ids.len(), 1, "flood component {c} meets cloud regions {ids:?}");
        region_of_component.push(*ids.first().unwrap());
    }
    let sampled = cloud
        .points
        .iter()
        .zip(&part.region_of)
        .filter(|(pt, _)| flood.component_at(rat_to_f64(&pt.r), rat_to_f64(&pt.p)).is_some())
        .map(|(_, &id)| id)
        .collect();
    CrossCheck { flood_regions: comps.len(), region_of_component, region_count: part.region_count, sampled }
}
