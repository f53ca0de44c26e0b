//! Cohomology of natural line bundles for the generic analytic structure
//! supported on a resolution graph. Every value is a χ-minimisation.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Signed;

use crate::cycle::{q, q_to_i64, IntCycle, RatCycle, Q};
use crate::error::{Error, Result};
use crate::lattice::ResolutionGraph;
use crate::opt::{self, Limits, MinChiResult};

/// Which minimisation engine answers the χ queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Pruned ellipsoid enumeration.
    Pruned,
    /// Point-by-point enumeration of the box (unbounded searches use the
    /// certified box of the pruned engine).
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    H1Generic,
    H1Natural,
    H1Resolution,
    MinPositive,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CacheKey {
    fingerprint: String,
    kind: Kind,
    cycle: Vec<i64>,
    chern: Vec<Q>,
}

/// Memo table for integer invariants, keyed by graph fingerprint, cycle and
/// Chern class. Reads are concurrent; writes are serialised.
#[derive(Debug, Default)]
pub struct InvariantCache {
    map: RwLock<HashMap<CacheKey, i64>>,
}

impl InvariantCache {
    fn get(&self, key: &CacheKey) -> Option<i64> {
        self.map.read().expect("cache lock").get(key).copied()
    }

    fn put(&self, key: CacheKey, value: i64) {
        self.map.write().expect("cache lock").insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `h⁰ - h¹ = χ(Z) + (c₁, Z)` bookkeeping for a line bundle on a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub h0: i64,
    pub h1: i64,
    /// `χ(O_Z) = χ(Z)`.
    pub chi_o: Q,
    /// `(c₁, Z)`.
    pub degree: Q,
    pub formula_trace: String,
}

/// A resolution graph together with its generic analytic structure.
#[derive(Debug)]
pub struct GenericStructure {
    graph: ResolutionGraph,
    limits: Limits,
    engine: Engine,
    cache: InvariantCache,
}

impl GenericStructure {
    pub fn new(graph: ResolutionGraph) -> Self {
        Self::with_options(graph, Limits::default(), Engine::Pruned)
    }

    pub fn with_options(graph: ResolutionGraph, limits: Limits, engine: Engine) -> Self {
        GenericStructure { graph, limits, engine, cache: InvariantCache::default() }
    }

    pub fn graph(&self) -> &ResolutionGraph {
        &self.graph
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn cache(&self) -> &InvariantCache {
        &self.cache
    }

    fn n(&self) -> usize {
        self.graph.len()
    }

    fn key(&self, kind: Kind, cycle: &IntCycle, chern: &RatCycle) -> CacheKey {
        CacheKey {
            fingerprint: self.graph.fingerprint().to_string(),
            kind,
            cycle: cycle.0.clone(),
            chern: chern.0.clone(),
        }
    }

    fn cached(
        &self,
        kind: Kind,
        cycle: &IntCycle,
        chern: &RatCycle,
        f: impl FnOnce() -> Result<i64>,
    ) -> Result<i64> {
        let key = self.key(kind, cycle, chern);
        if let Some(v) = self.cache.get(&key) {
            return Ok(v);
        }
        let v = f()?;
        self.cache.put(key, v);
        Ok(v)
    }

    /// Minimum of `χ(shift + l)` over `lower ≤ l ≤ upper` (unbounded where
    /// `None`), with the configured engine.
    pub fn min_chi(
        &self,
        shift: &RatCycle,
        lower: Option<&IntCycle>,
        upper: Option<&IntCycle>,
        exclude_zero: bool,
    ) -> Result<MinChiResult> {
        let g = &self.graph;
        let pruned = opt::minimize(g, shift, lower, upper, exclude_zero, &self.limits);
        match self.engine {
            Engine::Pruned => pruned,
            Engine::Exhaustive => {
                let (lo, hi) = match (lower, upper) {
                    (Some(a), Some(b)) => (a.clone(), b.clone()),
                    _ => {
                        let b = pruned?.search_box;
                        (b.lower, b.upper)
                    }
                };
                if exclude_zero {
                    opt::min_chi_box_nonzero(g, shift, &lo, &hi, &self.limits)
                } else {
                    opt::min_chi_box(g, shift, &lo, &hi, &self.limits)
                }
            }
        }
    }

    fn min_int(&self, r: &MinChiResult) -> Result<i64> {
        r.minimum_int()
    }

    fn check_effective(&self, z: &IntCycle) -> Result<()> {
        self.graph.check_int(z)?;
        if !z.is_effective() {
            return Err(Error::NegativeCoefficient);
        }
        Ok(())
    }

    fn check_dual(&self, l: &RatCycle) -> Result<()> {
        self.graph.check_rat(l)?;
        if !self.graph.in_dual_lattice(l) {
            return Err(Error::NotInDualLattice);
        }
        Ok(())
    }

    /// `min_{l > 0} χ(l)`.
    pub fn min_chi_positive(&self) -> Result<i64> {
        let n = self.n();
        self.cached(Kind::MinPositive, &IntCycle::zero(0), &RatCycle::zero(0), || {
            let r = self.min_chi(&RatCycle::zero(n), Some(&IntCycle::zero(n)), None, true)?;
            self.min_int(&r)
        })
    }

    /// `h¹(O_Z)`: `1 - min_{0<l≤Z} χ(l)`, summed over the connected
    /// components of `|Z|`.
    pub fn h1_generic(&self, z: &IntCycle) -> Result<i64> {
        self.check_effective(z)?;
        if z.is_zero() {
            return Err(Error::EmptyCycle);
        }
        self.cached(Kind::H1Generic, z, &RatCycle::zero(0), || {
            let n = self.n();
            let keep: Vec<bool> = z.0.iter().map(|&c| c > 0).collect();
            let mut total = 0;
            for comp in self.graph.components(&keep) {
                let mut mask = vec![false; n];
                for v in comp {
                    mask[v] = true;
                }
                let top = z.restricted(&mask);
                let r = self.min_chi(&RatCycle::zero(n), Some(&IntCycle::zero(n)), Some(&top), true)?;
                total += 1 - self.min_int(&r)?;
            }
            Ok(total)
        })
    }

    /// `h¹(O_Z)` with `h¹(O_0) = 0`.
    pub fn h1_generic_or_zero(&self, z: &IntCycle) -> Result<i64> {
        if z.is_zero() {
            self.graph.check_int(z)?;
            return Ok(0);
        }
        self.h1_generic(z)
    }

    /// `h¹(O_Z(-l')) = χ(l') - min_{0≤l≤Z} χ(l'+l)`, valid when `l'_v > 0`
    /// on `|Z|`.
    pub fn h1_natural(&self, z: &IntCycle, l: &RatCycle) -> Result<i64> {
        self.check_effective(z)?;
        self.check_dual(l)?;
        if let Some(v) = (0..self.n()).find(|&v| z[v] > 0 && !l[v].is_positive()) {
            return Err(Error::FormulaNotApplicable(format!(
                "the Chern class has coefficient {} at `{}` in the support of the cycle; a positive coefficient is required",
                crate::cycle::q_to_string(&l[v]),
                self.graph.id(v)
            )));
        }
        self.cached(Kind::H1Natural, z, l, || {
            let r = self.min_chi(l, Some(&IntCycle::zero(self.n())), Some(z), false)?;
            diff_int(&self.graph.chi(l), &r.minimum)
        })
    }

    pub fn geometric_genus(&self) -> Result<i64> {
        Ok(1 - self.min_chi_positive()?)
    }

    pub fn is_rational(&self) -> Result<bool> {
        Ok(self.min_chi_positive()? >= 1)
    }

    /// `h¹(X̃, O(-l')) = χ(l') - min_{l≥0} χ(l'+l)`, plus one when `l' ≤ 0`
    /// and the graph is not rational.
    pub fn h1_resolution_natural(&self, l: &RatCycle) -> Result<i64> {
        self.check_dual(l)?;
        self.cached(Kind::H1Resolution, &IntCycle::zero(0), l, || {
            let r = self.min_chi(l, Some(&IntCycle::zero(self.n())), None, false)?;
            let mut h = diff_int(&self.graph.chi(l), &r.minimum)?;
            if l.is_nonpositive() && !self.is_rational()? {
                h += 1;
            }
            Ok(h)
        })
    }

    /// `𝔥(l₀) = min_{l≥0} χ(l₀+l) - min_{l≥0} χ(l)` (+1 if non-rational),
    /// `𝔥(0) = 0`.
    pub fn hfrak(&self, l0: &IntCycle) -> Result<i64> {
        self.check_effective(l0)?;
        if l0.is_zero() {
            return Ok(0);
        }
        let n = self.n();
        let zero = IntCycle::zero(n);
        let a = self.min_chi(&l0.to_rat(), Some(&zero), None, false)?;
        let b = self.min_chi(&RatCycle::zero(n), Some(&zero), None, false)?;
        let mut h = diff_int(&a.minimum, &b.minimum)?;
        if !self.is_rational()? {
            h += 1;
        }
        Ok(h)
    }

    /// Membership in the analytic semigroup: `l' = 0`, or
    /// `χ(l') < χ(l'+l)` for every `l > 0`.
    pub fn semigroup_member(&self, l: &RatCycle) -> Result<bool> {
        self.check_dual(l)?;
        if l.is_zero() {
            return Ok(true);
        }
        let r = self.min_chi(l, Some(&IntCycle::zero(self.n())), None, true)?;
        Ok(self.graph.chi(l) < r.minimum)
    }

    /// The unique maximal element of `{Z > 0 : χ(Z) = min_L χ}`.
    pub fn maximal_ideal_cycle(&self) -> Result<IntCycle> {
        if self.is_rational()? {
            return Err(Error::RationalGraph);
        }
        let n = self.n();
        let zero = RatCycle::zero(n);
        let lattice_min = self.min_chi(&zero, None, None, false)?.minimum;
        let r = self.min_chi(&zero, Some(&IntCycle::zero(n)), None, true)?;
        if r.minimum != lattice_min {
            return Err(Error::FormulaNotApplicable(
                "the minimum of χ over L is not attained by a positive cycle".into(),
            ));
        }
        let m = opt::argmin_max_element(&r)?;
        debug_assert!(r.argmin.iter().all(|c| c.le(&m)));
        Ok(m)
    }

    /// `e_Z(J) = h¹(O_Z) - h¹(O_{Z|V∖J})`.
    pub fn e_z(&self, z: &IntCycle, j: &[usize]) -> Result<i64> {
        self.check_effective(z)?;
        for &v in j {
            if v >= self.n() {
                return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
            }
            if z[v] == 0 {
                return Err(Error::InvalidInput(format!(
                    "vertex `{}` is not in the support of the cycle",
                    self.graph.id(v)
                )));
            }
        }
        if j.is_empty() {
            return Ok(0);
        }
        let mut rest = z.clone();
        for &v in j {
            rest.0[v] = 0;
        }
        Ok(self.h1_generic(z)? - self.h1_generic_or_zero(&rest)?)
    }

    /// `(Z - Z_K, E_v) ≥ 0` on `|Z|`: equivalent to `χ(Z - E_v) > χ(Z)` for
    /// every `v ∈ |Z|`, a necessary condition for a regular section.
    pub fn passes_local_section_test(&self, z: &IntCycle) -> bool {
        let g = &self.graph;
        (0..self.n()).all(|v| z[v] == 0 || g.pairing_unit_int(z, v) - g.euler(v) - 2 >= 0)
    }

    /// Whether `H⁰(O_Z(K+Z))` has a section without base points on `Z`:
    /// `|Z|` connected and `χ(Z') > χ(Z)` for every `0 ≤ Z' < Z`.
    pub fn has_regular_canonical_section(&self, z: &IntCycle) -> Result<bool> {
        self.check_effective(z)?;
        if z.is_zero() || !self.graph.is_connected_support(z) {
            return Ok(false);
        }
        if !self.passes_local_section_test(z) {
            return Ok(false);
        }
        let r = self.min_chi(&RatCycle::zero(self.n()), Some(&IntCycle::zero(self.n())), Some(z), false)?;
        Ok(r.count == 1 && r.argmin[0] == *z)
    }

    /// The least `0 ≤ Z' ≤ Z` with `h¹(O_{Z'}) = h¹(O_Z)`.
    ///
    /// Since `h¹` is monotone the cycles with full `h¹` form an up-set of
    /// `[0, Z]`; a greedy descent reaches a minimal element `m`, and `m` is the
    /// least element iff lowering any single coordinate of `Z` to `m_v - 1`
    /// loses cohomology.
    pub fn cohomological_cycle(&self, z: &IntCycle) -> Result<IntCycle> {
        self.check_effective(z)?;
        let target = self.h1_generic_or_zero(z)?;
        let m = self.greedy_minimal(z, target)?;
        for v in 0..self.n() {
            if m[v] == 0 {
                continue;
            }
            let probe = z.with(v, m[v] - 1);
            if self.h1_generic_or_zero(&probe)? == target {
                let other = self.greedy_minimal(&probe, target)?;
                return Err(Error::NonUniqueCohomologicalCycle { first: m.0, second: other.0 });
            }
        }
        Ok(m)
    }

    fn greedy_minimal(&self, z: &IntCycle, target: i64) -> Result<IntCycle> {
        let mut m = z.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..self.n() {
                while m[v] > 0 {
                    let c = m.plus_unit(v, -1);
                    if self.h1_generic_or_zero(&c)? != target {
                        break;
                    }
                    m = c;
                    changed = true;
                }
            }
        }
        Ok(m)
    }

    /// [`Self::cohomological_cycle`] by enumerating every subcycle.
    pub fn cohomological_cycle_exhaustive(&self, z: &IntCycle) -> Result<IntCycle> {
        self.check_effective(z)?;
        let volume = opt::box_volume(&IntCycle::zero(self.n()), z);
        if volume > self.limits.max_box {
            return Err(Error::SearchTooLarge { points: volume, limit: self.limits.max_box });
        }
        let target = self.h1_generic_or_zero(z)?;
        let mut full = Vec::new();
        for c in subcycles(z) {
            if self.h1_generic_or_zero(&c)? == target {
                full.push(c);
            }
        }
        let minimal: Vec<&IntCycle> =
            full.iter().filter(|&c| !full.iter().any(|d| d != c && d.le(c))).collect();
        let meet = minimal.iter().skip(1).fold(minimal[0].clone(), |a, c| a.meet(c));
        if minimal.len() == 1 || self.h1_generic_or_zero(&meet)? == target {
            return Ok(meet);
        }
        Err(Error::NonUniqueCohomologicalCycle { first: minimal[0].0.clone(), second: minimal[1].0.clone() })
    }

    /// Riemann–Roch on `Z` for a bundle with Chern class `c₁` and known `h¹`.
    pub fn h0_via_rr(&self, z: &IntCycle, c1: &RatCycle, h1: i64, trace: &str) -> Result<CohomologyReport> {
        self.check_effective(z)?;
        self.graph.check_rat(c1)?;
        let zr = z.to_rat();
        let chi_o = self.graph.chi(&zr);
        let degree = self.graph.pairing(c1, &zr);
        let h0 = q_to_i64(&(&chi_o + &degree + q(h1)))
            .ok_or_else(|| Error::InvalidInput("Chern class is not in L'".into()))?;
        Ok(CohomologyReport { h0, h1, chi_o, degree, formula_trace: trace.to_string() })
    }

    /// `h⁰(O_Z(-l'))` from `h¹` of the natural bundle by Riemann–Roch; the
    /// Chern class of `O_Z(-l')` is `-l'`.
    pub fn h0_natural_via_rr(&self, z: &IntCycle, l: &RatCycle) -> Result<CohomologyReport> {
        let h1 = self.h1_natural(z, l)?;
        self.h0_via_rr(z, &-l, h1, "h1 = χ(l') - min_{0≤l≤Z} χ(l'+l); h0 = χ(Z) + (c1, Z) + h1")
    }

    /// `h⁰(O_Z(K+Z))` when `Z` carries a regular canonical section; there
    /// `h¹(O_Z(K+Z)) = h⁰(O_Z) = 1`.
    pub fn h0_canonical_via_rr(&self, z: &IntCycle) -> Result<CohomologyReport> {
        if !self.has_regular_canonical_section(z)? {
            return Err(Error::FormulaNotApplicable(
                "the cycle has no regular section of O_Z(K+Z); h0(O_Z) is not determined".into(),
            ));
        }
        let c1 = &z.to_rat() - self.graph.canonical_cycle();
        self.h0_via_rr(z, &c1, 1, "h1(O_Z(K+Z)) = h0(O_Z) = 1; h0 = χ(Z) + (Z - Z_K, Z) + 1")
    }
}

fn diff_int(a: &Q, b: &Q) -> Result<i64> {
    q_to_i64(&(a - b)).ok_or(Error::NotInDualLattice)
}

/// All `0 ≤ c ≤ z` in lexicographic order.
pub fn subcycles(z: &IntCycle) -> impl Iterator<Item = IntCycle> + '_ {
    let n = z.len();
    let mut cur = Some(vec![0i64; n]);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = n;
        cur = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if next[i] < z[i] {
                next[i] += 1;
                break Some(next);
            }
            next[i] = 0;
        };
        Some(IntCycle(out))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn gs(g: ResolutionGraph) -> GenericStructure {
        GenericStructure::new(g)
    }

    fn oracle(g: ResolutionGraph) -> GenericStructure {
        GenericStructure::with_options(g, Limits::default(), Engine::Exhaustive)
    }

    fn c(v: &[i64]) -> IntCycle {
        IntCycle(v.to_vec())
    }

    /// `1 - min χ` over nonzero subcycles of a connected cycle, by listing them.
    fn h1_brute(g: &ResolutionGraph, z: &IntCycle) -> i64 {
        1 - subcycles(z).filter(|l| !l.is_zero()).map(|l| g.chi_int(&l)).min().unwrap()
    }

    #[test]
    fn h1_generic_examples() {
        let s = gs(families::chain(&[-2]));
        assert_eq!(s.h1_generic(&c(&[1])).unwrap(), 0);
        assert!(matches!(s.h1_generic(&c(&[0])), Err(Error::EmptyCycle)));
        let e8 = gs(families::e8());
        assert_eq!(e8.h1_generic(&c(&[2, 3, 4, 3, 2, 1, 0, 2])).unwrap(), 0);
        let st = gs(families::star_1_444());
        assert_eq!(st.h1_generic(&c(&[3, 2, 2, 2])).unwrap(), 1);
        assert_eq!(h1_brute(st.graph(), &c(&[3, 2, 2, 2])), 1);
    }

    #[test]
    fn h1_generic_sums_components() {
        let st = gs(families::star_1_444());
        // legs only: three disjoint -4 curves, each rational
        assert_eq!(st.h1_generic(&c(&[0, 2, 2, 2])).unwrap(), 0);
        let g = families::chain(&[-1, -4, -4, -4]);
        let _ = g;
    }

    #[test]
    fn h1_natural_examples() {
        let s = gs(families::chain(&[-2]));
        assert_eq!(s.h1_natural(&c(&[2]), &c(&[1]).to_rat()).unwrap(), 0);
        let st = gs(families::star_1_444());
        let g = st.graph().clone();
        let zk_ceil = c(&[2, 1, 1, 1]);
        let e0 = g.unit(0).to_rat();
        assert!(matches!(st.h1_natural(&zk_ceil, &e0), Err(Error::FormulaNotApplicable(_))));
        let l = g.reduced().to_rat();
        let expect = g.chi(&l) - subcycles(&zk_ceil).map(|m| g.chi(&l.add_int(&m))).min().unwrap();
        assert_eq!(q(st.h1_natural(&zk_ceil, &l).unwrap()), expect);
    }

    #[test]
    fn genus_and_rationality() {
        for (g, pg) in [
            (families::e8(), 0),
            (families::chain(&[-2]), 0),
            (families::star_1_444(), 1),
            (families::d_n(6), 0),
        ] {
            let s = gs(g);
            assert_eq!(s.geometric_genus().unwrap(), pg);
            assert_eq!(s.is_rational().unwrap(), pg == 0);
        }
    }

    #[test]
    fn resolution_h1_at_zero_is_genus() {
        for g in [families::e6(), families::star_1_444()] {
            let s = gs(g);
            let z = RatCycle::zero(s.graph().len());
            assert_eq!(s.h1_resolution_natural(&z).unwrap(), s.geometric_genus().unwrap());
        }
    }

    #[test]
    fn hfrak_examples() {
        let s = gs(families::chain(&[-2]));
        assert_eq!(s.hfrak(&c(&[0])).unwrap(), 0);
        assert_eq!(s.hfrak(&c(&[1])).unwrap(), 1);
        let st = gs(families::star_1_444());
        let o = oracle(families::star_1_444());
        let e0 = c(&[1, 0, 0, 0]);
        assert_eq!(st.hfrak(&e0).unwrap(), o.hfrak(&e0).unwrap());
    }

    #[test]
    fn semigroup_examples() {
        let g = families::a_n(2);
        let s = gs(g.clone());
        assert!(s.semigroup_member(&RatCycle::zero(2)).unwrap());
        assert!(s.semigroup_member(&g.dual(0)).unwrap());
        // E_0 pairs positively with E_1 and χ(E_0 + E_1) = χ(E_0).
        assert!(!s.semigroup_member(&g.unit(0).to_rat()).unwrap());
    }

    #[test]
    fn maximal_ideal_cycle_examples() {
        assert!(matches!(gs(families::e8()).maximal_ideal_cycle(), Err(Error::RationalGraph)));
        let st = gs(families::star_1_444());
        let m = st.maximal_ideal_cycle().unwrap();
        assert!(c(&[2, 1, 1, 1]).le(&m));
        assert_eq!(st.graph().chi_int(&m), 0);
    }

    #[test]
    fn e_z_examples() {
        let st = gs(families::star_1_444());
        let z = c(&[3, 2, 2, 2]);
        assert_eq!(st.e_z(&z, &[]).unwrap(), 0);
        assert_eq!(st.e_z(&z, &[0]).unwrap(), 1);
        let e8 = gs(families::e8());
        assert_eq!(e8.e_z(&c(&[1; 8]), &[0, 3]).unwrap(), 0);
        assert!(st.e_z(&c(&[1, 0, 1, 1]), &[1]).is_err());
    }

    #[test]
    fn regular_section_examples() {
        let s = gs(families::chain(&[-2]));
        assert!(!s.has_regular_canonical_section(&c(&[1])).unwrap());
        let st = gs(families::star_1_444());
        let g = st.graph().clone();
        let z = c(&[2, 1, 1, 1]);
        let brute = subcycles(&z).filter(|x| *x != z).all(|x| g.chi_int(&x) > g.chi_int(&z));
        assert_eq!(st.has_regular_canonical_section(&z).unwrap(), brute);
        assert_eq!(subcycles(&z).count(), 24);
        assert!(!st.has_regular_canonical_section(&c(&[0, 1, 1, 0])).unwrap());
    }

    #[test]
    fn cohomological_cycle_examples() {
        let e8 = gs(families::e8());
        assert_eq!(e8.cohomological_cycle(&c(&[1; 8])).unwrap(), IntCycle::zero(8));
        let st = gs(families::star_1_444());
        let o = oracle(families::star_1_444());
        let z = c(&[3, 2, 2, 2]);
        let a = st.cohomological_cycle(&z).unwrap();
        assert_eq!(a, o.cohomological_cycle_exhaustive(&z).unwrap());
        assert_eq!(st.h1_generic(&a).unwrap(), 1);
    }

    #[test]
    fn rr_examples() {
        let s = gs(families::chain(&[-2]));
        let z = c(&[1]);
        let r = s.h0_via_rr(&z, &RatCycle::zero(1), 0, "").unwrap();
        assert_eq!(r.h0, 1);
        let st = gs(families::star_1_444());
        let z = c(&[2, 1, 1, 1]);
        if st.has_regular_canonical_section(&z).unwrap() {
            let r = st.h0_canonical_via_rr(&z).unwrap();
            assert_eq!(r.h0, st.h1_generic(&z).unwrap());
        }
    }

    #[test]
    fn engines_agree() {
        let g = families::chain(&[-3, -1, -3, -2]);
        let a = gs(g.clone());
        let b = oracle(g.clone());
        for z in subcycles(&c(&[2, 3, 2, 1])).filter(|z| !z.is_zero()) {
            assert_eq!(a.h1_generic(&z).unwrap(), b.h1_generic(&z).unwrap());
        }
        let l = -&g.dual(1);
        assert_eq!(a.h1_resolution_natural(&l).unwrap(), b.h1_resolution_natural(&l).unwrap());
        assert_eq!(a.semigroup_member(&l).unwrap(), b.semigroup_member(&l).unwrap());
    }
}
