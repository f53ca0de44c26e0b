//! Restriction to a vertex subset `V₁` and the relative Abel map criteria,
//! with inner `h¹` terms evaluated for restricted natural line bundles.
//!
//! Throughout, `𝔏` is the natural bundle of Chern class `R₁(l')` on `Z₁`, so
//! `𝔏(-l)` has class `R₁(l' - l)`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::Signed;

use crate::cohomology::{subcycles, GenericStructure};
use crate::cycle::{q_to_i64, IntCycle, RatCycle, Q};
use crate::error::{Error, Result};
use crate::lattice::ResolutionGraph;
use crate::opt;

/// A partition `V = V₁ ⊔ V₂` together with `Z = Z₁ + Z₂`.
#[derive(Clone, Debug)]
pub struct SplitConfig {
    pub v1: Vec<bool>,
    pub z: IntCycle,
    pub z1: IntCycle,
    pub z2: IntCycle,
    sub_inverse: Vec<Vec<Q>>,
}

impl SplitConfig {
    pub fn new(g: &ResolutionGraph, v1: &[usize], z: IntCycle) -> Result<Self> {
        g.check_int(&z)?;
        if !z.is_effective() {
            return Err(Error::NegativeCoefficient);
        }
        let mut mask = vec![false; g.len()];
        for &v in v1 {
            if v >= g.len() {
                return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
            }
            mask[v] = true;
        }
        let z1 = z.restricted(&mask);
        let z2 = &z - &z1;
        Ok(SplitConfig { sub_inverse: g.sub_inverse(&mask), v1: mask, z, z1, z2 })
    }

    pub fn v1_vertices(&self) -> Vec<usize> {
        (0..self.v1.len()).filter(|&v| self.v1[v]).collect()
    }
}

/// `R₁(l')`: the class on `T₁` with `(R₁ l', E_v)_{T₁} = (l', E_v)_T` for
/// `v ∈ V₁`, written in the coordinates of `T` (zero off `V₁`).
pub fn restrict_chern(g: &ResolutionGraph, cfg: &SplitConfig, l: &RatCycle) -> Result<RatCycle> {
    g.check_rat(l)?;
    if !g.in_dual_lattice(l) {
        return Err(Error::NotInDualLattice);
    }
    let p = g.pairings_with_basis(l);
    let n = g.len();
    Ok(RatCycle(
        (0..n)
            .map(|v| {
                if !cfg.v1[v] {
                    return Q::from_integer(0.into());
                }
                (0..n).filter(|&w| cfg.v1[w]).map(|w| &cfg.sub_inverse[v][w] * &p[w]).sum()
            })
            .collect(),
    ))
}

/// `(Z - l)₁ = min(Z - l, Z₁)`.
pub fn truncate_cycle(cfg: &SplitConfig, z_minus_l: &IntCycle) -> IntCycle {
    z_minus_l.meet(&cfg.z1)
}

/// `h¹(C, O_C(-x))` for the restricted natural bundle on a cycle `C`
/// supported in `V₁`: `-min_{0≤m≤C} (χ(m) - (x, m))`, valid when `R₁(x)` is
/// positive on `|C|`.
pub fn natural_inner_h1(s: &GenericStructure, cfg: &SplitConfig, c: &IntCycle, x: &RatCycle) -> Result<i64> {
    let g = s.graph();
    if c.is_zero() {
        return Ok(0);
    }
    if (0..g.len()).any(|v| c[v] != 0 && !cfg.v1[v]) {
        return Err(Error::InvalidInput("inner cycle is not supported in V1".into()));
    }
    let r = restrict_chern(g, cfg, x)?;
    if let Some(v) = (0..g.len()).find(|&v| c[v] > 0 && !r[v].is_positive()) {
        return Err(Error::FormulaNotApplicable(format!(
            "restricted Chern class is not positive at `{}`",
            g.id(v)
        )));
    }
    // χ(m) - (x, m) = χ(x + m) - χ(x); for m supported on V₁ this is the
    // same quantity on T₁ with x replaced by R₁(x).
    let res = s.min_chi(x, Some(&IntCycle::zero(g.len())), Some(c), false)?;
    q_to_i64(&(g.chi(x) - &res.minimum)).ok_or(Error::NotInDualLattice)
}

fn check_lipman(g: &ResolutionGraph, l: &RatCycle) -> Result<()> {
    if !g.in_lipman_cone(&-l) {
        return Err(Error::FormulaNotApplicable("-l' is not in the Lipman cone".into()));
    }
    Ok(())
}

fn check_guard(s: &GenericStructure, cfg: &SplitConfig) -> Result<()> {
    let volume = opt::box_volume(&IntCycle::zero(cfg.z.len()), &cfg.z);
    let limit = s.limits().max_box;
    if volume > limit {
        return Err(Error::SearchTooLarge { points: volume, limit });
    }
    Ok(())
}

/// Memoised inner oracle keyed by (truncated cycle, class).
struct Inner<'a, F> {
    f: F,
    memo: RefCell<HashMap<(IntCycle, RatCycle), i64>>,
    _p: std::marker::PhantomData<&'a ()>,
}

impl<F: Fn(&IntCycle, &RatCycle) -> Result<i64>> Inner<'_, F> {
    fn new(f: F) -> Self {
        Inner { f, memo: RefCell::new(HashMap::new()), _p: std::marker::PhantomData }
    }

    fn get(&self, c: &IntCycle, x: &RatCycle) -> Result<i64> {
        let key = (c.clone(), x.clone());
        if let Some(&v) = self.memo.borrow().get(&key) {
            return Ok(v);
        }
        let v = (self.f)(c, x)?;
        self.memo.borrow_mut().insert(key, v);
        Ok(v)
    }
}

/// `h¹(Z₁, 𝔏)` with the natural inner oracle.
pub fn h1_z1(s: &GenericStructure, cfg: &SplitConfig, l: &RatCycle) -> Result<i64> {
    natural_inner_h1(s, cfg, &cfg.z1, &-l)
}

/// Outcome of the relative dominance test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dominance {
    pub holds: bool,
    /// Lexicographically first `0 < l ≤ Z` violating the inequality.
    pub violation: Option<IntCycle>,
}

/// `χ(-l') - h¹(Z₁, 𝔏) < χ(-l'+l) - h¹((Z-l)₁, 𝔏(-l))` for every `0 < l ≤ Z`.
/// `inner(C, x)` must return `h¹(C, O_C(-x))`.
pub fn relative_dominant_with(
    s: &GenericStructure,
    cfg: &SplitConfig,
    l: &RatCycle,
    inner: impl Fn(&IntCycle, &RatCycle) -> Result<i64>,
) -> Result<Dominance> {
    let g = s.graph();
    g.check_rat(l)?;
    check_lipman(g, l)?;
    check_guard(s, cfg)?;
    let inner = Inner::new(inner);
    let minus = -l;
    let lhs = g.chi(&minus) - Q::from_integer(inner.get(&cfg.z1, &minus)?.into());
    for m in subcycles(&cfg.z).skip(1) {
        let trunc = truncate_cycle(cfg, &(&cfg.z - &m));
        let x = minus.add_int(&m);
        let rhs = g.chi(&x) - Q::from_integer(inner.get(&trunc, &x)?.into());
        if lhs >= rhs {
            return Ok(Dominance { holds: false, violation: Some(m) });
        }
    }
    Ok(Dominance { holds: true, violation: None })
}

pub fn relative_dominant(s: &GenericStructure, cfg: &SplitConfig, l: &RatCycle) -> Result<Dominance> {
    relative_dominant_with(s, cfg, l, |c, x| natural_inner_h1(s, cfg, c, x))
}

/// `h¹(Z, 𝓛)` for generic `𝓛 ∈ r⁻¹(𝔏)`:
/// `χ(-l') - min_{0≤l≤Z} (χ(-l'+l) - h¹((Z-l)₁, 𝔏(-l)))`.
pub fn relative_h1_with(
    s: &GenericStructure,
    cfg: &SplitConfig,
    l: &RatCycle,
    inner: impl Fn(&IntCycle, &RatCycle) -> Result<i64>,
) -> Result<i64> {
    let g = s.graph();
    g.check_rat(l)?;
    check_lipman(g, l)?;
    check_guard(s, cfg)?;
    let inner = Inner::new(inner);
    let minus = -l;
    let mut best: Option<Q> = None;
    for m in subcycles(&cfg.z) {
        let trunc = truncate_cycle(cfg, &(&cfg.z - &m));
        let x = minus.add_int(&m);
        let v = g.chi(&x) - Q::from_integer(inner.get(&trunc, &x)?.into());
        if best.as_ref().is_none_or(|b| &v < b) {
            best = Some(v);
        }
    }
    let best = best.expect("the box contains l = 0");
    q_to_i64(&(g.chi(&minus) - best)).ok_or(Error::NotInDualLattice)
}

pub fn relative_h1(s: &GenericStructure, cfg: &SplitConfig, l: &RatCycle) -> Result<i64> {
    relative_h1_with(s, cfg, l, |c, x| natural_inner_h1(s, cfg, c, x))
}

/// Dimension of `ECa^{l',𝔏}(Z)` when nonempty:
/// `h¹(Z₁, 𝔏) - h¹(O_{Z₁}) + (l', Z)`.
pub fn relative_eca_dim(s: &GenericStructure, cfg: &SplitConfig, l: &RatCycle, h1_z1_l: i64) -> Result<i64> {
    let g = s.graph();
    g.check_rat(l)?;
    let h1o = s.h1_generic_or_zero(&cfg.z1)?;
    let d = q_to_i64(&g.pairing(l, &cfg.z.to_rat())).ok_or(Error::NotInDualLattice)?;
    Ok(h1_z1_l - h1o + d)
}
