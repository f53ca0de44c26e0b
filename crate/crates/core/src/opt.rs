//! Minimisation of `l ↦ χ(shift + l)` over integer cycles.
//!
//! Two exact engines are provided. [`min_chi_box`] enumerates a box point by
//! point and serves as the oracle. [`minimize`] runs a pruned (Fincke–Pohst)
//! enumeration over the sublevel ellipsoid of the quadratic, which also
//! handles unbounded directions: the ellipsoid through any known point is a
//! certified bounding region for every minimiser. Floating point is used only
//! to prune; every candidate is re-evaluated in exact integer arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::cycle::{q, IntCycle, RatCycle, Q};
use crate::error::{Error, Result};
use crate::lattice::ResolutionGraph;

pub const DEFAULT_MAX_BOX: u128 = 10_000_000;
pub const DEFAULT_MAX_ARGMIN: usize = 10_000;

/// Resource guards shared by every search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximal number of box points (exhaustive search) or search-tree nodes
    /// (pruned search) visited before giving up with `SearchTooLarge`.
    pub max_box: u128,
    /// Argmin sets larger than this keep only count, join and meet.
    pub max_argmin: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_box: DEFAULT_MAX_BOX, max_argmin: DEFAULT_MAX_ARGMIN }
    }
}

impl Limits {
    /// Defaults overridden by `SING_MAX_BOX` / `SING_MAX_ARGMIN`.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = std::env::var("SING_MAX_BOX").ok().and_then(|s| s.trim().parse().ok()) {
            l.max_box = v;
        }
        if let Some(v) = std::env::var("SING_MAX_ARGMIN").ok().and_then(|s| s.trim().parse().ok())
        {
            l.max_argmin = v;
        }
        l
    }
}

/// The box that was actually searched. `None` bounds never occur in results:
/// unbounded searches report their certified box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub lower: IntCycle,
    pub upper: IntCycle,
}

#[derive(Clone, Debug)]
pub struct MinChiResult {
    pub minimum: Q,
    /// Sorted; complete unless `truncated`.
    pub argmin: Vec<IntCycle>,
    pub count: u64,
    pub truncated: bool,
    pub join: IntCycle,
    pub meet: IntCycle,
    /// Whether `join` itself attains the minimum.
    pub join_attains: bool,
    pub search_box: SearchBox,
}

/// `χ(shift + l)` scaled to integers:
/// `χ(shift + l) = χ(shift) + raw(l) / (2D)` with
/// `raw(l) = D·lᵀQl + lin·l`, `Q = -I`.
#[derive(Clone, Debug)]
pub struct ChiKernel {
    n: usize,
    scale: i128,
    lin: Vec<i128>,
    quad: Vec<Vec<i128>>,
    base: Q,
}

impl ChiKernel {
    pub fn new(g: &ResolutionGraph, shift: &RatCycle) -> Result<Self> {
        g.check_rat(shift)?;
        let n = g.len();
        let p = g.pairings_with_basis(shift);
        let mut d = BigInt::one();
        for x in &p {
            d = d.lcm(x.denom());
        }
        let scale = d.to_i128().ok_or(Error::Overflow("χ scaling"))?;
        let dq = Q::from_integer(d);
        let lin = (0..n)
            .map(|v| {
                let x = &dq * q(g.euler(v) + 2) - &dq * &p[v] * q(2);
                x.to_integer().to_i128().ok_or(Error::Overflow("χ linear term"))
            })
            .collect::<Result<Vec<_>>>()?;
        let quad = (0..n)
            .map(|v| (0..n).map(|w| -(g.form().matrix[v][w] as i128)).collect())
            .collect();
        Ok(ChiKernel { n, scale, lin, quad, base: g.chi(shift) })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn raw(&self, l: &[i64]) -> i128 {
        let mut s = 0i128;
        for v in 0..self.n {
            if l[v] == 0 {
                continue;
            }
            let lv = l[v] as i128;
            let mut row = 0i128;
            for w in 0..self.n {
                row += self.quad[v][w] * l[w] as i128;
            }
            s += self.scale * lv * row + self.lin[v] * lv;
        }
        s
    }

    pub fn value_of_raw(&self, raw: i128) -> Q {
        &self.base + Q::new(BigInt::from(raw), BigInt::from(2 * self.scale))
    }

    pub fn value(&self, l: &[i64]) -> Q {
        self.value_of_raw(self.raw(l))
    }

    /// `raw(l + k·E_v) - raw(l)` given `ql = Q·l`.
    fn delta(&self, ql: &[i128], v: usize, k: i64) -> i128 {
        let k = k as i128;
        self.scale * (2 * k * ql[v] + k * k * self.quad[v][v]) + k * self.lin[v]
    }

    fn apply(&self, ql: &mut [i128], v: usize, k: i64) {
        for (w, x) in ql.iter_mut().enumerate() {
            *x += self.quad[w][v] * k as i128;
        }
    }

    fn qtimes(&self, l: &[i64]) -> Vec<i128> {
        (0..self.n).map(|v| (0..self.n).map(|w| self.quad[v][w] * l[w] as i128).sum()).collect()
    }
}

struct Collector {
    best: Option<i128>,
    kept: Vec<IntCycle>,
    count: u64,
    truncated: bool,
    join: Vec<i64>,
    meet: Vec<i64>,
    cap: usize,
}

impl Collector {
    fn new(cap: usize) -> Self {
        Collector {
            best: None,
            kept: Vec::new(),
            count: 0,
            truncated: false,
            join: Vec::new(),
            meet: Vec::new(),
            cap,
        }
    }

    fn bound(&self) -> Option<i128> {
        self.best
    }

    fn offer(&mut self, raw: i128, l: &[i64]) {
        match self.best {
            Some(b) if raw > b => return,
            Some(b) if raw == b => {
                self.count += 1;
                for v in 0..l.len() {
                    self.join[v] = self.join[v].max(l[v]);
                    self.meet[v] = self.meet[v].min(l[v]);
                }
            }
            _ => {
                self.best = Some(raw);
                self.kept.clear();
                self.count = 1;
                self.truncated = false;
                self.join = l.to_vec();
                self.meet = l.to_vec();
            }
        }
        if self.kept.len() < self.cap {
            self.kept.push(IntCycle(l.to_vec()));
        } else {
            self.truncated = true;
        }
    }

    fn finish(mut self, k: &ChiKernel, search_box: SearchBox) -> Option<MinChiResult> {
        let best = self.best?;
        self.kept.sort();
        let join_attains = k.raw(&self.join) == best;
        Some(MinChiResult {
            minimum: k.value_of_raw(best),
            argmin: self.kept,
            count: self.count,
            truncated: self.truncated,
            join: IntCycle(self.join),
            meet: IntCycle(self.meet),
            join_attains,
            search_box,
        })
    }
}

fn check_box(g: &ResolutionGraph, lower: &IntCycle, upper: &IntCycle) -> Result<()> {
    g.check_int(lower)?;
    g.check_int(upper)?;
    for v in 0..g.len() {
        if lower[v] > upper[v] {
            return Err(Error::InvalidBox(g.id(v).to_string()));
        }
    }
    Ok(())
}

pub fn box_volume(lower: &IntCycle, upper: &IntCycle) -> u128 {
    lower.0.iter().zip(&upper.0).fold(1u128, |acc, (a, b)| {
        acc.saturating_mul((b - a) as u128 + 1)
    })
}

fn empty_box_error() -> Error {
    Error::FormulaNotApplicable("the search region contains no admissible cycle".into())
}

/// Exhaustive minimum of `χ(shift + l)` over `lower ≤ l ≤ upper`.
pub fn min_chi_box(
    g: &ResolutionGraph,
    shift: &RatCycle,
    lower: &IntCycle,
    upper: &IntCycle,
    limits: &Limits,
) -> Result<MinChiResult> {
    exhaustive(g, shift, lower, upper, false, limits)
}

/// As [`min_chi_box`] but with `l = 0` excluded.
pub fn min_chi_box_nonzero(
    g: &ResolutionGraph,
    shift: &RatCycle,
    lower: &IntCycle,
    upper: &IntCycle,
    limits: &Limits,
) -> Result<MinChiResult> {
    exhaustive(g, shift, lower, upper, true, limits)
}

fn exhaustive(
    g: &ResolutionGraph,
    shift: &RatCycle,
    lower: &IntCycle,
    upper: &IntCycle,
    exclude_zero: bool,
    limits: &Limits,
) -> Result<MinChiResult> {
    check_box(g, lower, upper)?;
    let volume = box_volume(lower, upper);
    if volume > limits.max_box {
        return Err(Error::SearchTooLarge { points: volume, limit: limits.max_box });
    }
    let k = ChiKernel::new(g, shift)?;
    let n = k.len();
    let (lo, hi) = (&lower.0, &upper.0);
    let mut l = lo.clone();
    let mut ql = k.qtimes(&l);
    let mut raw = k.raw(&l);
    let mut col = Collector::new(limits.max_argmin);
    'outer: loop {
        if col.bound().is_none_or(|b| raw <= b) && !(exclude_zero && l.iter().all(|&x| x == 0)) {
            col.offer(raw, &l);
        }
        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            let step = if l[i] < hi[i] { 1 } else { lo[i] - l[i] };
            if step != 0 {
                raw += k.delta(&ql, i, step);
                k.apply(&mut ql, i, step);
                l[i] += step;
            }
            if step == 1 {
                break;
            }
        }
    }
    col.finish(&k, SearchBox { lower: lower.clone(), upper: upper.clone() })
        .ok_or_else(empty_box_error)
}

/// Move set of [`laufer_descent_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Moves {
    /// `l → l ± E_v`.
    Coordinate,
    /// `l → l ± E_X` for every nonempty vertex set `X` (at most 16 vertices).
    Subset,
}

/// Steepest single-coordinate descent: repeatedly applies the move
/// `l → l ± E_v` with the largest strict decrease of `χ(shift + l)`, staying
/// inside the (optional) bounds. Ties go to the lowest vertex index, and a
/// decrease of a coordinate is preferred over an increase.
pub fn laufer_descent(
    g: &ResolutionGraph,
    shift: &RatCycle,
    start: &IntCycle,
    lower: Option<&IntCycle>,
    upper: Option<&IntCycle>,
) -> Result<IntCycle> {
    laufer_descent_with(g, shift, start, lower, upper, Moves::Coordinate)
}

pub fn laufer_descent_with(
    g: &ResolutionGraph,
    shift: &RatCycle,
    start: &IntCycle,
    lower: Option<&IntCycle>,
    upper: Option<&IntCycle>,
    moves: Moves,
) -> Result<IntCycle> {
    g.check_int(start)?;
    let k = ChiKernel::new(g, shift)?;
    let (lo, hi) = (lower.map(|c| &c.0[..]), upper.map(|c| &c.0[..]));
    Ok(IntCycle(match moves {
        Moves::Coordinate => descend(&k, start.0.clone(), lo, hi, false),
        Moves::Subset => {
            if g.len() > 16 {
                return Err(Error::InvalidInput("subset descent supports at most 16 vertices".into()));
            }
            descend_subsets(&k, start.0.clone(), lo, hi)
        }
    }))
}

/// Steepest descent over the moves `±E_X`. Ties go to the set whose sorted
/// vertex list is lexicographically first, decreases before increases.
fn descend_subsets(k: &ChiKernel, mut l: Vec<i64>, lo: Option<&[i64]>, hi: Option<&[i64]>) -> Vec<i64> {
    let n = k.len();
    let mut sets: Vec<Vec<usize>> =
        (1u32..1 << n).map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect()).collect();
    sets.sort();
    let mut ql = k.qtimes(&l);
    loop {
        let mut best: Option<(i128, usize, i64)> = None;
        for (i, x) in sets.iter().enumerate() {
            for step in [-1i64, 1] {
                let admissible = x.iter().all(|&v| {
                    let t = l[v] + step;
                    !(lo.is_some_and(|b| t < b[v]) || hi.is_some_and(|b| t > b[v]))
                });
                if !admissible {
                    continue;
                }
                let s = step as i128;
                let mut d = 0i128;
                for &v in x {
                    d += k.scale * 2 * s * ql[v] + s * k.lin[v];
                    for &w in x {
                        d += k.scale * k.quad[v][w];
                    }
                }
                if d < 0 && best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, step));
                }
            }
        }
        let Some((_, i, step)) = best else { return l };
        for &v in &sets[i] {
            k.apply(&mut ql, v, step);
            l[v] += step;
        }
    }
}

fn descend(
    k: &ChiKernel,
    mut l: Vec<i64>,
    lo: Option<&[i64]>,
    hi: Option<&[i64]>,
    avoid_zero: bool,
) -> Vec<i64> {
    let n = k.len();
    let mut ql = k.qtimes(&l);
    loop {
        let mut best: Option<(i128, usize, i64)> = None;
        for v in 0..n {
            for step in [-1i64, 1] {
                let t = l[v] + step;
                if lo.is_some_and(|b| t < b[v]) || hi.is_some_and(|b| t > b[v]) {
                    continue;
                }
                if avoid_zero && t == 0 && l.iter().enumerate().all(|(w, &x)| w == v || x == 0) {
                    continue;
                }
                let d = k.delta(&ql, v, step);
                if d < 0 && best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, v, step));
                }
            }
        }
        let Some((_, v, step)) = best else { return l };
        k.apply(&mut ql, v, step);
        l[v] += step;
    }
}

/// Exact minimum of `χ(shift + l)` over integer `l` with the given optional
/// bounds, by pruned enumeration of the sublevel ellipsoid.
pub fn minimize(
    g: &ResolutionGraph,
    shift: &RatCycle,
    lower: Option<&IntCycle>,
    upper: Option<&IntCycle>,
    exclude_zero: bool,
    limits: &Limits,
) -> Result<MinChiResult> {
    if let (Some(a), Some(b)) = (lower, upper) {
        check_box(g, a, b)?;
    } else {
        for c in lower.iter().chain(upper.iter()) {
            g.check_int(c)?;
        }
    }
    let k = ChiKernel::new(g, shift)?;
    let n = k.len();
    let lo = lower.map(|c| &c.0[..]);
    let hi = upper.map(|c| &c.0[..]);

    // Seed an upper bound on the minimum from a few admissible points.
    let clamp = |mut p: Vec<i64>| -> Vec<i64> {
        for v in 0..n {
            if let Some(a) = lo {
                p[v] = p[v].max(a[v]);
            }
            if let Some(b) = hi {
                p[v] = p[v].min(b[v]);
            }
        }
        p
    };
    let mut seeds = vec![clamp(vec![0; n])];
    for v in 0..n {
        let mut p = seeds[0].clone();
        if hi.is_none_or(|b| p[v] < b[v]) {
            p[v] += 1;
            seeds.push(p);
        }
    }
    if let Some(b) = hi {
        seeds.push(b.to_vec());
    }
    let mut seed: Option<(i128, Vec<i64>)> = None;
    for s in seeds {
        if exclude_zero && s.iter().all(|&x| x == 0) {
            continue;
        }
        let d = descend(&k, s, lo, hi, exclude_zero);
        let r = k.raw(&d);
        if seed.as_ref().is_none_or(|(br, _)| r < *br) {
            seed = Some((r, d));
        }
    }
    let Some((level, _)) = seed else { return Err(empty_box_error()) };

    let geo = Ellipsoid::new(g, &k);
    let (cert_lo, cert_hi) = geo.certified_box(g, &k, level);
    let blo: Vec<i64> = (0..n).map(|v| lo.map_or(cert_lo[v], |a| a[v].max(cert_lo[v]))).collect();
    let bhi: Vec<i64> = (0..n).map(|v| hi.map_or(cert_hi[v], |b| b[v].min(cert_hi[v]))).collect();
    let search_box = SearchBox {
        lower: IntCycle(lo.map_or_else(|| blo.clone(), |a| a.to_vec())),
        upper: IntCycle(hi.map_or_else(|| bhi.clone(), |b| b.to_vec())),
    };

    let mut col = Collector::new(limits.max_argmin);
    if (0..n).all(|v| blo[v] <= bhi[v]) {
        let mut search = Pruned {
            k: &k,
            geo: &geo,
            lo: &blo,
            hi: &bhi,
            exclude_zero,
            level,
            l: vec![0; n],
            nodes: 0,
            limit: limits.max_box,
            col: &mut col,
        };
        search.run(n, 0.0)?;
    }
    col.finish(&k, search_box).ok_or_else(empty_box_error)
}

/// Geometry of `raw(l) = D·(l-c)ᵀQ(l-c) - D·cᵀQc` in floating point, with
/// `Q = UᵀΔU` (`U` unit upper triangular) for the pruned enumeration.
struct Ellipsoid {
    center: Vec<f64>,
    cqc: f64,
    diag: Vec<f64>,
    upper: Vec<Vec<f64>>,
    scale: f64,
}

impl Ellipsoid {
    fn new(g: &ResolutionGraph, k: &ChiKernel) -> Self {
        let n = k.len();
        let inv = &g.form().inverse;
        let d2 = 2.0 * k.scale as f64;
        // Q⁻¹ = -I⁻¹.
        let center: Vec<f64> = (0..n)
            .map(|v| {
                (0..n).map(|w| inv[v][w].to_f64().unwrap_or(0.0) * k.lin[w] as f64 / d2).sum()
            })
            .collect();
        let cqc: f64 = (0..n)
            .map(|v| center[v] * (0..n).map(|w| k.quad[v][w] as f64 * center[w]).sum::<f64>())
            .sum();
        let mut a: Vec<Vec<f64>> =
            k.quad.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        for i in 0..n {
            for j in i + 1..n {
                a[j][i] = a[i][j];
                a[i][j] /= a[i][i];
            }
            for r in i + 1..n {
                for c in r..n {
                    a[r][c] -= a[r][i] * a[i][c];
                }
            }
        }
        let diag = (0..n).map(|i| a[i][i]).collect();
        let upper = (0..n).map(|i| (0..n).map(|j| if j > i { a[i][j] } else { 0.0 }).collect()).collect();
        Ellipsoid { center, cqc, diag, upper, scale: k.scale as f64 }
    }

    /// Squared radius of `{raw ≤ level}` in the `Q`-norm, padded for rounding.
    fn radius(&self, level: i128) -> f64 {
        let r = level as f64 / self.scale + self.cqc;
        r + 1e-7 * (1.0 + r.abs())
    }

    /// Exact integer bounding box of `{raw ≤ level}`:
    /// `|l_v - c_v| ≤ sqrt(R·(Q⁻¹)_vv)`.
    fn certified_box(&self, g: &ResolutionGraph, k: &ChiKernel, level: i128) -> (Vec<i64>, Vec<i64>) {
        let n = k.len();
        let inv = &g.form().inverse;
        let d = Q::from_integer(BigInt::from(k.scale));
        let c: Vec<Q> = (0..n)
            .map(|v| {
                (0..n).map(|w| -&inv[v][w] * q_i128(k.lin[w])).sum::<Q>() / (&d * q(-2))
            })
            .collect();
        let cqc: Q = (0..n)
            .map(|v| &c[v] * (0..n).map(|w| q_i128(k.quad[v][w]) * &c[w]).sum::<Q>())
            .sum();
        let r = q_i128(level) / &d + cqc;
        let mut lo = vec![0; n];
        let mut hi = vec![0; n];
        for v in 0..n {
            let s = &r * -&inv[v][v];
            let cf = c[v].to_f64().unwrap_or(0.0);
            let sf = s.to_f64().unwrap_or(0.0).max(0.0).sqrt();
            let fits = |t: i64| {
                let x = q(t) - &c[v];
                &x * &x <= s
            };
            let mut h = (cf + sf).floor() as i64;
            while fits(h + 1) || q(h) <= c[v] {
                h += 1;
            }
            while !fits(h) && q(h) > c[v] {
                h -= 1;
            }
            let mut l = (cf - sf).ceil() as i64;
            while fits(l - 1) || q(l) >= c[v] {
                l -= 1;
            }
            while !fits(l) && q(l) < c[v] {
                l += 1;
            }
            lo[v] = l;
            hi[v] = h;
        }
        (lo, hi)
    }
}

fn q_i128(x: i128) -> Q {
    Q::from_integer(BigInt::from(x))
}

struct Pruned<'a> {
    k: &'a ChiKernel,
    geo: &'a Ellipsoid,
    lo: &'a [i64],
    hi: &'a [i64],
    exclude_zero: bool,
    level: i128,
    l: Vec<i64>,
    nodes: u128,
    limit: u128,
    col: &'a mut Collector,
}

impl Pruned<'_> {
    /// Fixes coordinates `i-1, i-2, …, 0`; coordinates `≥ i` are set and
    /// contribute `partial` to the quadratic form.
    fn run(&mut self, i: usize, partial: f64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::SearchTooLarge { points: self.nodes, limit: self.limit });
        }
        if i == 0 {
            if self.exclude_zero && self.l.iter().all(|&x| x == 0) {
                return Ok(());
            }
            let raw = self.k.raw(&self.l);
            if raw <= self.level {
                self.col.offer(raw, &self.l);
                self.level = raw;
            }
            return Ok(());
        }
        let v = i - 1;
        let g = self.geo;
        let room = g.radius(self.level) - partial;
        if room < 0.0 {
            return Ok(());
        }
        let shift: f64 = (v + 1..self.k.len())
            .map(|w| g.upper[v][w] * (self.l[w] as f64 - g.center[w]))
            .sum();
        let mid = g.center[v] - shift;
        let half = (room / g.diag[v]).sqrt() + 1e-9;
        let a = ((mid - half).ceil() as i64).max(self.lo[v]);
        let b = ((mid + half).floor() as i64).min(self.hi[v]);
        let mut t = a;
        while t <= b {
            let y = t as f64 - mid;
            let p = partial + g.diag[v] * y * y;
            if p <= g.radius(self.level) {
                self.l[v] = t;
                self.run(v, p)?;
            }
            t += 1;
        }
        self.l[v] = 0;
        Ok(())
    }
}

/// `min_{l ≥ 0} χ(shift + l)`.
pub fn min_chi_effective(g: &ResolutionGraph, shift: &RatCycle, limits: &Limits) -> Result<MinChiResult> {
    minimize(g, shift, Some(&IntCycle::zero(g.len())), None, false, limits)
}

/// `min_{l > 0} χ(l)`.
pub fn min_chi_positive(g: &ResolutionGraph, limits: &Limits) -> Result<MinChiResult> {
    minimize(g, &RatCycle::zero(g.len()), Some(&IntCycle::zero(g.len())), None, true, limits)
}

/// `min_{l ∈ L} χ(shift + l)`.
pub fn min_chi_lattice(g: &ResolutionGraph, shift: &RatCycle, limits: &Limits) -> Result<MinChiResult> {
    minimize(g, shift, None, None, false, limits)
}

/// The componentwise maximal element of the argmin set.
pub fn argmin_max_element(result: &MinChiResult) -> Result<IntCycle> {
    if result.join_attains {
        return Ok(result.join.clone());
    }
    max_element(&result.argmin)
}

/// The maximum of a finite set of cycles under `≤`, or two incomparable
/// maximal witnesses.
pub fn max_element(set: &[IntCycle]) -> Result<IntCycle> {
    let Some(first) = set.first() else {
        return Err(Error::InvalidInput("empty set of cycles".into()));
    };
    let join = set.iter().skip(1).fold(first.clone(), |acc, c| acc.join(c));
    if set.contains(&join) {
        return Ok(join);
    }
    let maximal: Vec<&IntCycle> =
        set.iter().filter(|&c| !set.iter().any(|d| d != c && c.le(d))).collect();
    let a = maximal[0];
    let b = maximal.iter().find(|d| **d != a).copied().unwrap_or(a);
    Err(Error::NoMaximum { first: a.0.clone(), second: b.0.clone() })
}

impl MinChiResult {
    pub fn minimum_int(&self) -> Result<i64> {
        crate::cycle::q_to_i64(&self.minimum).ok_or(Error::Overflow("non-integral χ minimum"))
    }

    pub fn is_attained_by(&self, l: &IntCycle) -> bool {
        self.argmin.binary_search(l).is_ok()
    }
}
