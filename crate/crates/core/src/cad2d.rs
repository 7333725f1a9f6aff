//! Sample points in every connected component of the plane minus {h = 0},
//! and a certified partition of those samples into regions.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{rat_to_f64, Rational};
use crate::error::{Error, Result};
use crate::mpoly::{self, MPoly};
use crate::upoly::{has_root_in_unit, isolate_real_roots, isolate_squarefree, simplest_rational_in, sturm_count, Interval, UPoly};

/// Dense real bivariate polynomial, `c[i][j]` multiplying r^i p^j.
#[derive(Clone, Debug)]
pub struct Bivariate {
    c: Vec<Vec<Rational>>,
}

impl Bivariate {
    /// `h` must be real and use at most the variables (r, p), in that order.
    pub fn new(h: &MPoly) -> Result<Self> {
        if !h.is_real() || h.vars().len() != 2 {
            return Err(Error::Domain(format!("expected a real polynomial in two variables, got {h}")));
        }
        let dr = h.degree(0) as usize;
        let dp = h.degree(1) as usize;
        let mut c = vec![vec![Rational::zero(); dp + 1]; dr + 1];
        for (e, k) in h.terms() {
            c[e[0] as usize][e[1] as usize] = k.re.clone();
        }
        Ok(Bivariate { c })
    }

    pub fn eval(&self, r: &Rational, p: &Rational) -> Rational {
        self.fiber_p(r).eval(p)
    }

    /// h(r0, ·) as a polynomial in p.
    pub fn fiber_p(&self, r0: &Rational) -> UPoly {
        let dp = self.c[0].len();
        let mut out = vec![Rational::zero(); dp];
        let mut pw = Rational::one();
        for row in &self.c {
            for (j, a) in row.iter().enumerate() {
                if !a.is_zero() {
                    out[j] += a * &pw;
                }
            }
            pw *= r0;
        }
        UPoly::new(out)
    }

    /// h(·, p0) as a polynomial in r.
    pub fn fiber_r(&self, p0: &Rational) -> UPoly {
        UPoly::new(self.c.iter().map(|row| UPoly::new(row.clone()).eval(p0)).collect())
    }

    /// τ ↦ h((1-τ)a + τb).
    pub fn on_segment(&self, a: (&Rational, &Rational), b: (&Rational, &Rational)) -> UPoly {
        let x = UPoly::new(vec![a.0.clone(), b.0 - a.0]);
        let y = UPoly::new(vec![a.1.clone(), b.1 - a.1]);
        let mut acc = UPoly::zero();
        for row in self.c.iter().rev() {
            let mut inner = UPoly::zero();
            for k in row.iter().rev() {
                inner = inner.mul(&y).add(&UPoly::constant(k.clone()));
            }
            acc = acc.mul(&x).add(&inner);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub r: Rational,
    pub p: Rational,
    pub stack: usize,
    pub cell: usize,
}

/// Sample cloud together with the projection data it was built from.
#[derive(Clone, Debug)]
pub struct Cloud {
    /// Product of the projection factors; its real roots are the critical abscissae.
    pub defining: UPoly,
    pub critical: Vec<Interval>,
    /// One abscissa per open sector between critical abscissae.
    pub abscissae: Vec<Rational>,
    /// Sorted by (r, p); stack k holds the points over `abscissae[k]`.
    pub points: Vec<SamplePoint>,
    stack_start: Vec<usize>,
}

impl Cloud {
    pub fn point_index(&self, stack: usize, cell: usize) -> usize {
        self.stack_start[stack] + cell
    }

    pub fn stack_len(&self, stack: usize) -> usize {
        self.stack_start[stack + 1] - self.stack_start[stack]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionPartition {
    pub points: Vec<SamplePoint>,
    pub region_of: Vec<usize>,
    pub region_count: usize,
}

fn real_in(h: &MPoly, var: usize) -> Result<UPoly> {
    h.to_upoly(var).ok_or_else(|| Error::Domain(format!("{h} is not univariate")))
}

/// Product of the p-content of h, the discriminant of its primitive part in p,
/// and the leading coefficient in p: a polynomial in r whose real roots are
/// the only abscissae where the fibre structure of {h = 0} can change.
pub fn projection(h: &MPoly) -> Result<UPoly> {
    if h.is_constant() {
        return Ok(UPoly::constant(Rational::one()));
    }
    let p_name = h.vars()[1].clone();
    let content = mpoly::content(h, &p_name)?;
    let prim = h.div_exact(&content).expect("content divides");
    let mut acc = real_in(&content, 0)?;
    if prim.depends_on(1) {
        let disc = mpoly::resultant(&prim, &prim.derivative(1), &p_name)?;
        let lead = prim.lc_in(1);
        acc = acc.mul(&real_in(&disc, 0)?.squarefree()).mul(&real_in(&lead, 0)?);
    }
    Ok(acc.squarefree())
}

/// Disjoint isolating intervals of the critical abscissae, ascending.
pub fn critical_abscissae(h: &MPoly) -> Result<Vec<Interval>> {
    let m = projection(h)?;
    if m.degree() == 0 {
        return Ok(Vec::new());
    }
    isolate_real_roots(&m)
}

fn gap_bounds<'a>(roots: &'a [Interval], k: usize) -> (Option<&'a Rational>, Option<&'a Rational>) {
    let lo = if k == 0 { None } else { Some(&roots[k - 1].hi) };
    let hi = roots.get(k).map(|iv| &iv.lo);
    (lo, hi)
}

/// Simplest rational in each gap between consecutive isolated roots, outer gaps included.
fn gap_samples(roots: &[Interval]) -> Vec<Rational> {
    (0..=roots.len())
        .map(|k| {
            let (lo, hi) = gap_bounds(roots, k);
            simplest_rational_in(lo, hi)
        })
        .collect()
}

/// Samples every connected component of the complement of {h = 0}.
pub fn sample_cloud(h: &MPoly) -> Result<Cloud> {
    let defining = projection(h)?;
    let critical = if defining.degree() == 0 { Vec::new() } else { isolate_real_roots(&defining)? };
    let abscissae = gap_samples(&critical);
    let biv = if h.is_constant() { None } else { Some(Bivariate::new(h)?) };
    let stacks: Vec<Vec<Rational>> = abscissae
        .par_iter()
        .map(|r0| -> Result<Vec<Rational>> {
            match &biv {
                None => Ok(vec![Rational::zero()]),
                Some(b) => {
                    let fiber = b.fiber_p(r0);
                    if fiber.degree() == 0 {
                        return Ok(vec![Rational::zero()]);
                    }
                    Ok(gap_samples(&isolate_real_roots(&fiber)?))
                }
            }
        })
        .collect::<Result<_>>()?;
    let mut points = Vec::new();
    let mut stack_start = vec![0];
    for (k, (r0, ps)) in abscissae.iter().zip(stacks).enumerate() {
        for (j, p) in ps.into_iter().enumerate() {
            points.push(SamplePoint { r: r0.clone(), p, stack: k, cell: j });
        }
        stack_start.push(points.len());
    }
    Ok(Cloud { defining, critical, abscissae, points, stack_start })
}

/// Distinct crossings of {h = 0} by the open segment from a to b.
pub fn segment_crossings(h: &MPoly, a: &SamplePoint, b: &SamplePoint) -> Result<usize> {
    if h.is_constant() {
        return Ok(0);
    }
    segment_crossings_biv(&Bivariate::new(h)?, a, b)
}

fn segment_crossings_biv(h: &Bivariate, a: &SamplePoint, b: &SamplePoint) -> Result<usize> {
    if a.r == b.r && a.p == b.p {
        return Ok(0);
    }
    let g = h.on_segment((&a.r, &a.p), (&b.r, &b.p));
    if g.is_zero() {
        return Err(Error::DegenerateSegment);
    }
    if g.degree() == 0 {
        return Ok(0);
    }
    sturm_count(&g.squarefree(), Some(&Rational::zero()), Some(&Rational::one()))
}

/// Descartes subdivision depth before falling back to a Sturm count.
const SEGMENT_DEPTH: u32 = 40;

/// Whether the open segment a-b certainly misses the curve.
fn segment_is_clear(h: &Bivariate, a: &SamplePoint, b: &SamplePoint) -> bool {
    let g = h.on_segment((&a.r, &a.p), (&b.r, &b.p));
    if g.is_zero() {
        return false;
    }
    match has_root_in_unit(&g, SEGMENT_DEPTH) {
        Some(hit) => !hit,
        None => matches!(segment_crossings_biv(h, a, b), Ok(0)),
    }
}

fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

const PROBES: i64 = 8;

/// Whether h changes sign from `s0` at some interior probe k/8 of the segment
/// a-b, coarse probes first.
fn probes_change_sign(h: &Bivariate, a: &SamplePoint, b: &SamplePoint, s0: i8) -> bool {
    let dr = &b.r - &a.r;
    let dp = &b.p - &a.p;
    [4, 2, 6, 1, 3, 5, 7].into_iter().any(|k: i64| {
        let t = Rational::new(k.into(), PROBES.into());
        sign(&h.eval(&(&a.r + &(&dr * &t)), &(&a.p + &(&dp * &t)))) != s0
    })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Location of the critical abscissa: exact rational or algebraic with a
/// shrinking isolating interval of the defining polynomial.
#[derive(Clone)]
enum Critical {
    Exact { c: Rational, lo: Rational, hi: Rational },
    Algebraic { iv: Interval },
}

impl Critical {
    fn new(iv: &Interval, prev: Option<&Interval>, next: Option<&Interval>) -> Self {
        if !iv.is_point() {
            return Critical::Algebraic { iv: iv.clone() };
        }
        let c = iv.lo.clone();
        let two = Rational::from_integer(2.into());
        let lo = prev.map_or_else(|| &c - Rational::one(), |pv| (&pv.hi + &c) / &two);
        let hi = next.map_or_else(|| &c + Rational::one(), |nx| (&nx.lo + &c) / &two);
        Critical::Exact { c, lo, hi }
    }

    fn bounds(&self) -> (&Rational, &Rational) {
        match self {
            Critical::Exact { lo, hi, .. } => (lo, hi),
            Critical::Algebraic { iv } => (&iv.lo, &iv.hi),
        }
    }

    fn shrink(&mut self, m: &UPoly) {
        match self {
            Critical::Exact { c, lo, hi } => {
                let two = Rational::from_integer(2.into());
                *lo = (&*lo + &*c) / &two;
                *hi = (&*hi + &*c) / &two;
            }
            Critical::Algebraic { iv } => {
                let before = iv.clone();
                iv.bisect(m);
                if iv.is_point() {
                    // The bisection hit c exactly; re-open a window around it.
                    let c = iv.lo.clone();
                    *self = Critical::Exact { c, lo: before.lo, hi: before.hi };
                }
            }
        }
    }

    /// Whether c is a root of the square-free g with isolated `roots`.
    /// Refines `self`, which callers may keep for later queries about c.
    fn is_root_of(&mut self, g: &UPoly, roots: &[Interval], m: &UPoly) -> Result<bool> {
        let mut near: Vec<Interval> = roots.to_vec();
        for _ in 0..ROOT_TEST_STEPS {
            let (lo, hi) = match self {
                Critical::Exact { c, .. } => return Ok(g.eval(c).is_zero()),
                Critical::Algebraic { iv } => (&iv.lo, &iv.hi),
            };
            // A rational root of g inside the window is c exactly when it is
            // also a root of m, since the window isolates c among those.
            if near.iter().any(|rt| rt.is_point() && rt.lo > *lo && rt.lo < *hi && m.eval(&rt.lo).is_zero()) {
                return Ok(true);
            }
            near.retain(|rt| !rt.is_point() && rt.hi > *lo && rt.lo < *hi);
            if near.is_empty() {
                return Ok(false);
            }
            // Refine whichever side is wider.
            let w = hi - lo;
            let mut refined = false;
            for rt in near.iter_mut().filter(|rt| rt.width() >= w) {
                rt.bisect(g);
                refined = true;
            }
            if !refined {
                self.shrink(m);
            }
        }
        let Critical::Algebraic { iv } = self else { unreachable!("exact case returns above") };
        let common = UPoly::gcd(g, m);
        if common.degree() == 0 {
            return Ok(false);
        }
        Ok(sturm_count(&common, Some(&iv.lo), Some(&iv.hi))? > 0)
    }

    /// Decides on which side of c an isolated root of g (g(c) != 0) lies,
    /// refining either interval as needed; true means below c.
    fn separate(&mut self, root: &mut Interval, g: &UPoly, m: &UPoly) -> bool {
        loop {
            match self {
                Critical::Exact { c, .. } => {
                    // Strict, so the crossing window can always close in on c.
                    if root.hi < *c {
                        return true;
                    }
                    if root.lo > *c {
                        return false;
                    }
                    root.bisect(g);
                }
                Critical::Algebraic { iv } => {
                    if root.hi <= iv.lo {
                        return true;
                    }
                    if root.lo >= iv.hi {
                        return false;
                    }
                    if !root.is_point() && root.width() >= iv.width() {
                        root.bisect(g);
                    } else {
                        self.shrink(m);
                    }
                }
            }
        }
    }
}

/// Heights worth trying for a horizontal crossing near c: simplest rationals in
/// the gaps of the merged fibres at both window ends, plus one rational on each
/// side of each of those.
fn candidate_heights(h: &Bivariate, lo: &Rational, hi: &Rational) -> Result<Vec<Rational>> {
    let mut blocked: Vec<(Rational, Rational)> = Vec::new();
    for r0 in [lo, hi] {
        let fiber = h.fiber_p(r0);
        if fiber.degree() == 0 {
            continue;
        }
        for iv in isolate_real_roots(&fiber)? {
            blocked.push((iv.lo, iv.hi));
        }
    }
    blocked.sort();
    let mut merged: Vec<(Rational, Rational)> = Vec::new();
    for (a, b) in blocked {
        match merged.last_mut() {
            Some(last) if a <= last.1 => {
                if b > last.1 {
                    last.1 = b;
                }
            }
            _ => merged.push((a, b)),
        }
    }
    let mut out = BTreeSet::new();
    for k in 0..=merged.len() {
        let glo = if k == 0 { None } else { Some(&merged[k - 1].1) };
        let ghi = merged.get(k).map(|x| &x.0);
        let s0 = simplest_rational_in(glo, ghi);
        if glo.is_none_or(|g| *g < s0) {
            out.insert(simplest_rational_in(glo, Some(&s0)));
        }
        if ghi.is_none_or(|g| s0 < *g) {
            out.insert(simplest_rational_in(Some(&s0), ghi));
        }
        out.insert(s0);
    }
    Ok(out.into_iter().collect())
}

/// Square-free fibre at height y with its isolated roots, shared by all
/// critical abscissae.
type FiberCache = Mutex<HashMap<Rational, Option<(UPoly, Vec<Interval>)>>>;

fn fiber_roots(h: &Bivariate, cache: &FiberCache, y: &Rational) -> Result<Option<(UPoly, Vec<Interval>)>> {
    if let Some(hit) = cache.lock().expect("cache lock").get(y) {
        return Ok(hit.clone());
    }
    let g = h.fiber_r(y);
    let entry = if g.is_zero() {
        None
    } else {
        let g = g.squarefree();
        let roots = if g.degree() > 0 { isolate_squarefree(&g)? } else { Vec::new() };
        Some((g, roots))
    };
    cache.lock().expect("cache lock").insert(y.clone(), entry.clone());
    Ok(entry)
}

/// Tries to cross c horizontally at height `y`. On success returns abscissae
/// (left, right) in the two neighbouring sectors joined by a curve-free
/// horizontal segment at height y. `window` bounds the search; `fine` is a
/// refinement of it kept across heights.
fn horizontal_crossing(
    h: &Bivariate,
    cache: &FiberCache,
    m: &UPoly,
    window: &Critical,
    fine: &mut Critical,
    y: &Rational,
) -> Result<Option<(Rational, Rational)>> {
    let Some((g, roots)) = fiber_roots(h, cache, y)? else { return Ok(None) };
    let (wlo, whi) = window.bounds();
    let (mut below, mut above) = (wlo.clone(), whi.clone());
    let mut near: Vec<Interval> = roots.into_iter().filter(|rt| rt.hi > below && rt.lo < above).collect();
    if !near.is_empty() && fine.is_root_of(&g, &near, m)? {
        return Ok(None);
    }
    for root in &mut near {
        if fine.separate(root, &g, m) {
            if root.hi > below {
                below = root.hi.clone();
            }
        } else if root.lo < above {
            above = root.lo.clone();
        }
    }
    // c lies strictly inside (below, above) and g has no root there; shrink
    // the window until both of its ends clear those bounds.
    loop {
        let (clo, chi) = fine.bounds();
        if below < *clo && *chi < above {
            let left = simplest_rational_in(Some(&below), Some(clo));
            let right = simplest_rational_in(Some(chi), Some(&above));
            return Ok(Some((left, right)));
        }
        fine.shrink(m);
    }
}

/// Number of roots of the fibre at r0 below y.
fn cell_index(h: &Bivariate, r0: &Rational, y: &Rational) -> Result<usize> {
    let fiber = h.fiber_p(r0);
    if fiber.degree() == 0 {
        return Ok(0);
    }
    sturm_count(&fiber, None, Some(y))
}

/// Refinement depths, in halvings of the initial window, at which fibres near
/// a critical abscissa are sampled for candidate heights.
const CANDIDATE_DEPTHS: [u32; 3] = [0, 12, 32];

/// Bisections of an algebraic critical interval spent on excluding it as a
/// root of a fibre before falling back to a gcd with the defining polynomial.
const ROOT_TEST_STEPS: usize = 64;

fn crossings_at(h: &Bivariate, cache: &FiberCache, cloud: &Cloud, i: usize) -> Result<Vec<(usize, usize)>> {
    let m = &cloud.defining;
    let base = Critical::new(&cloud.critical[i], i.checked_sub(1).map(|k| &cloud.critical[k]), cloud.critical.get(i + 1));
    let mut heights = BTreeSet::new();
    let mut window = base.clone();
    let mut depth = 0;
    for target in CANDIDATE_DEPTHS {
        while depth < target {
            window.shrink(m);
            depth += 1;
        }
        let (lo, hi) = window.bounds();
        heights.extend(candidate_heights(h, lo, hi)?);
    }
    let mut links = BTreeSet::new();
    let mut fine = base.clone();
    for y in &heights {
        if let Some((left, right)) = horizontal_crossing(h, cache, m, &base, &mut fine, y)? {
            let a = cloud.point_index(i, cell_index(h, &left, y)?);
            let b = cloud.point_index(i + 1, cell_index(h, &right, y)?);
            links.insert((a, b));
        }
    }
    Ok(links.into_iter().collect())
}

/// Partitions the cloud into regions. Two samples share a region only when a
/// curve-free path between them has been certified exactly.
pub fn count_regions(h: &MPoly, cloud: &Cloud) -> Result<RegionPartition> {
    let n = cloud.points.len();
    let mut uf = UnionFind::new(n);
    if !h.is_constant() {
        let biv = Bivariate::new(h)?;
        // Neighbouring sectors: horizontal segments through each critical abscissa.
        let cache = FiberCache::default();
        let links: Vec<Vec<(usize, usize)>> = (0..cloud.critical.len())
            .into_par_iter()
            .map(|i| crossings_at(&biv, &cache, cloud, i))
            .collect::<Result<_>>()?;
        for (a, b) in links.into_iter().flatten() {
            uf.union(a, b);
        }
        // Straight segments between samples still in different groups, nearest
        // pairs first. Exact sign probes rule out most pairs before the Sturm test.
        let pts = &cloud.points;
        let signs: Vec<i8> = pts.iter().map(|pt| sign(&biv.eval(&pt.r, &pt.p))).collect();
        let mut pairs: Vec<(f64, usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| signs[i] == signs[j])
            .map(|(i, j)| {
                let dr = rat_to_f64(&(&pts[j].r - &pts[i].r));
                let dp = rat_to_f64(&(&pts[j].p - &pts[i].p));
                (dr * dr + dp * dp, i, j)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        for (_, i, j) in pairs {
            if uf.find(i) == uf.find(j) || probes_change_sign(&biv, &pts[i], &pts[j], signs[i]) {
                continue;
            }
            if segment_is_clear(&biv, &pts[i], &pts[j]) {
                uf.union(i, j);
            }
        }
    }
    let mut region_of = vec![usize::MAX; n];
    let mut ids = std::collections::HashMap::new();
    for i in 0..n {
        let root = uf.find(i);
        let next = ids.len();
        region_of[i] = *ids.entry(root).or_insert(next);
    }
    Ok(RegionPartition { points: cloud.points.clone(), region_of, region_count: ids.len() })
}

/// Region of an arbitrary rational point off the curve, by locating its
/// sector and cell exactly. `None` if the point sits on a critical abscissa
/// or on the curve.
pub fn locate(h: &MPoly, cloud: &Cloud, part: &RegionPartition, r: &Rational, p: &Rational) -> Result<Option<usize>> {
    if h.is_constant() {
        return Ok(Some(part.region_of[0]));
    }
    let biv = Bivariate::new(h)?;
    if biv.eval(r, p).is_zero() {
        return Ok(None);
    }
    let mut stack = 0;
    for iv in &cloud.critical {
        if iv.is_point() && iv.lo == *r {
            return Ok(None);
        }
        if iv.lo >= *r {
            break;
        }
        if iv.hi > *r {
            // r sits inside an isolating interval but is not c: refine.
            let mut iv = iv.clone();
            while !iv.is_point() && iv.lo < *r && *r < iv.hi {
                iv.bisect(&cloud.defining);
            }
            if iv.contains(r) {
                return Ok(None);
            }
            if iv.lo >= *r {
                break;
            }
        }
        stack += 1;
    }
    let cell = cell_index(&biv, r, p)?;
    Ok(Some(part.region_of[cloud.point_index(stack, cell)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int, Gauss};

    const V: [&str; 2] = ["r", "p"];

    fn var(n: &str) -> MPoly {
        MPoly::var(&V, n).unwrap()
    }

    fn k(x: i64) -> MPoly {
        MPoly::constant(&V, Gauss::from_int(x))
    }

    fn circle() -> MPoly {
        let (r, p) = (var("r"), var("p"));
        &(&(&r * &r) + &(&p * &p)) - &k(1)
    }

    fn pt(r: i64, p: i64) -> SamplePoint {
        SamplePoint { r: rat_int(r), p: rat_int(p), stack: 0, cell: 0 }
    }

    fn roots(ivs: &[Interval]) -> Vec<Rational> {
        ivs.iter().map(|iv| {
            assert!(iv.is_point());
            iv.lo.clone()
        })
        .collect()
    }

    #[test]
    fn critical_examples() {
        assert_eq!(roots(&critical_abscissae(&circle()).unwrap()), vec![rat_int(-1), rat_int(1)]);
        let (r, p) = (var("r"), var("p"));
        assert_eq!(roots(&critical_abscissae(&(&r * &p)).unwrap()), vec![rat_int(0)]);
        assert_eq!(roots(&critical_abscissae(&(&(&p * &p) - &r)).unwrap()), vec![rat_int(0)]);
        assert!(critical_abscissae(&k(3)).unwrap().is_empty());
    }

    #[test]
    fn sample_examples() {
        let c = sample_cloud(&circle()).unwrap();
        assert_eq!(c.abscissae, vec![rat_int(-2), rat_int(0), rat_int(2)]);
        assert_eq!((0..3).map(|s| c.stack_len(s)).collect::<Vec<_>>(), vec![1, 3, 1]);
        let one = sample_cloud(&k(1)).unwrap();
        assert_eq!(one.points, vec![pt(0, 0)]);
        let (r, p) = (var("r"), var("p"));
        let quad = sample_cloud(&(&r * &p)).unwrap();
        assert_eq!(quad.points.len(), 4);
        let h = circle();
        let biv = Bivariate::new(&h).unwrap();
        assert!(c.points.iter().all(|q| !biv.eval(&q.r, &q.p).is_zero()));
    }

    #[test]
    fn segment_examples() {
        let h = circle();
        assert_eq!(segment_crossings(&h, &pt(-2, 0), &pt(2, 0)).unwrap(), 2);
        assert_eq!(segment_crossings(&h, &pt(-2, 0), &pt(0, 2)).unwrap(), 0);
        assert_eq!(segment_crossings(&h, &pt(5, 7), &pt(5, 7)).unwrap(), 0);
        let (r, p) = (var("r"), var("p"));
        let line = &r - &p;
        assert_eq!(segment_crossings(&line, &pt(0, 0), &pt(1, 1)), Err(Error::DegenerateSegment));
    }

    fn regions(h: &MPoly) -> usize {
        let cloud = sample_cloud(h).unwrap();
        count_regions(h, &cloud).unwrap().region_count
    }

    #[test]
    fn region_examples() {
        let (r, p) = (var("r"), var("p"));
        assert_eq!(regions(&circle()), 2);
        assert_eq!(regions(&(&r * &p)), 4);
        assert_eq!(regions(&k(1)), 1);
        // parabola p^2 = r: inside and outside
        assert_eq!(regions(&(&(&p * &p) - &r)), 2);
        // isolated point r^2 + p^2 = 0 separates nothing
        assert_eq!(regions(&(&(&r * &r) + &(&p * &p))), 1);
        // cusp p^2 = r^3
        assert_eq!(regions(&(&(&p * &p) - &r.pow(3))), 2);
        // three lines through a point: six sectors
        let three = &(&r * &p) * &(&r - &p);
        assert_eq!(regions(&three), 6);
    }

    #[test]
    fn nested_ellipses() {
        let (r, p) = (var("r"), var("p"));
        let inner = circle();
        let outer = &(&(&r * &r).scale_rational(&rat(1, 4)) + &(&p * &p).scale_rational(&rat(1, 9))) - &k(1);
        assert_eq!(regions(&(&inner * &outer).normalize()), 3);
    }

    #[test]
    fn locate_matches_cloud() {
        let h = circle();
        let cloud = sample_cloud(&h).unwrap();
        let part = count_regions(&h, &cloud).unwrap();
        let inside = locate(&h, &cloud, &part, &rat(1, 3), &rat(1, 5)).unwrap().unwrap();
        let outside = locate(&h, &cloud, &part, &rat(7, 3), &rat(-5, 2)).unwrap().unwrap();
        assert_ne!(inside, outside);
        assert_eq!(locate(&h, &cloud, &part, &rat(1, 1), &rat(0, 1)).unwrap(), None);
        assert_eq!(locate(&h, &cloud, &part, &rat(-1, 1), &rat(3, 1)).unwrap(), None);
    }

    #[test]
    fn locate_near_irrational_abscissa() {
        // r^2 + p^2 = 2 has critical abscissae ±√2 held in open intervals.
        let h = &circle() - &k(1);
        let cloud = sample_cloud(&h).unwrap();
        let part = count_regions(&h, &cloud).unwrap();
        let inside = locate(&h, &cloud, &part, &rat(1414, 1000), &rat(0, 1)).unwrap();
        let outside = locate(&h, &cloud, &part, &rat(1415, 1000), &rat(0, 1)).unwrap();
        assert!(inside.is_some() && outside.is_some());
        assert_ne!(inside, outside);
    }

    #[test]
    fn deterministic() {
        let h = &circle() * &(&var("r") - &var("p"));
        let a = count_regions(&h, &sample_cloud(&h).unwrap()).unwrap();
        let b = count_regions(&h, &sample_cloud(&h).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.region_count, 4);
    }
}
