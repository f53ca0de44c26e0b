//! Existence and non-existence of a `g¹₂` on a cycle `Z`: hypothesis checks
//! and verdicts, the necessary conditions any counterexample must satisfy,
//! and the recursive cycle towers.

pub mod census;

use crate::cohomology::GenericStructure;
use crate::cycle::IntCycle;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    /// No line bundle in the image of the Abel map has `h⁰ = 2`.
    Forbidden,
    /// Some line bundle in the image has `h⁰ = 2`.
    Guaranteed,
    Undetermined,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Forbidden => "forbidden",
            Status::Guaranteed => "guaranteed",
            Status::Undetermined => "undetermined",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s.to_ascii_lowercase().as_str() {
            "forbidden" => Some(Status::Forbidden),
            "guaranteed" => Some(Status::Guaranteed),
            "undetermined" => Some(Status::Undetermined),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Chern class `-E*_{u'} - E*_{u''}`.
    Pair(usize, usize),
    /// Chern class `-2E*_u`.
    Single(usize),
}

/// One hypothesis check with the numbers it was decided on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    pub values: Vec<(&'static str, i64)>,
}

/// A condition derived under the non-existence hypotheses; `applicable` is
/// set only when those hypotheses hold for the instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
    pub applicable: bool,
    pub values: Vec<(&'static str, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EValues {
    pub h1: i64,
    /// `e_Z(u')` (or `e_Z(u)`).
    pub first: i64,
    /// `e_Z(u'')`; pair mode only.
    pub second: Option<i64>,
    /// `e_Z({u', u''})`; pair mode only.
    pub both: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G12Report {
    pub mode: Mode,
    pub z: IntCycle,
    pub status: Status,
    pub checks: Vec<Check>,
    pub necessary: Vec<Condition>,
    pub e: EValues,
    pub towers: Vec<CycleTower>,
}

impl G12Report {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name).collect()
    }
}

pub const CHECK_FULL_SUPPORT: &str = "full support (Z >= E)";
pub const CHECK_REGULAR: &str = "regular section of O_Z(K+Z)";
pub const CHECK_COEFFS: &str = "unit coefficients at the marked vertices";
pub const CHECK_E_AT_LEAST_3: &str = "e >= 3";
pub const CHECK_E_EQUAL_SMALL: &str = "0 < e(u') = e(u'') = e(u',u'') <= 2";
pub const CHECK_E_POSITIVE: &str = "e > 0";

fn vertex_ok(s: &GenericStructure, v: usize) -> Result<()> {
    if v >= s.graph().len() {
        return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
    }
    Ok(())
}

/// `e_Z(J)` evaluated on any effective `Z`, with vertices outside `|Z|`
/// ignored.
fn e_of(s: &GenericStructure, z: &IntCycle, j: &[usize]) -> Result<i64> {
    let inside: Vec<usize> = j.iter().copied().filter(|&v| z[v] > 0).collect();
    s.e_z(z, &inside)
}

fn common_checks(s: &GenericStructure, z: &IntCycle, marked: &[usize]) -> Result<(Vec<Check>, bool)> {
    let g = s.graph();
    let full = z.0.iter().all(|&c| c >= 1);
    let regular = s.has_regular_canonical_section(z)?;
    let coeffs = marked.iter().all(|&v| z[v] == 1);
    let mut checks = vec![
        Check {
            name: CHECK_FULL_SUPPORT,
            holds: full,
            values: vec![("min coefficient", z.0.iter().copied().min().unwrap_or(0))],
        },
        Check {
            name: CHECK_REGULAR,
            holds: regular,
            values: vec![("chi(Z)", g.chi_int(z))],
        },
    ];
    checks.push(Check {
        name: CHECK_COEFFS,
        holds: coeffs,
        values: marked.iter().map(|&v| ("Z_u", z[v])).collect(),
    });
    Ok((checks, full && regular && coeffs))
}

/// Verdict for the class `-E*_{u'} - E*_{u''}` on `Z`.
///
/// Forbidden when `Z ≥ E` carries a regular canonical section,
/// `Z_{u'} = Z_{u''} = 1` and `e_Z(u') ≥ 3` (the statement is symmetric, so
/// `e_Z(u'') ≥ 3` suffices as well). Guaranteed under the same first
/// hypotheses when `0 < e_Z(u') = e_Z(u'') = e_Z(u', u'') ≤ 2`.
pub fn classify_pair(s: &GenericStructure, z: &IntCycle, u1: usize, u2: usize) -> Result<G12Report> {
    s.graph().check_int(z)?;
    vertex_ok(s, u1)?;
    vertex_ok(s, u2)?;
    if u1 == u2 {
        return Err(Error::InvalidInput("the two vertices must differ".into()));
    }
    if z[u1] <= 0 || z[u2] <= 0 {
        return Err(Error::InvalidInput("both vertices must lie in the support of Z".into()));
    }
    let (mut checks, base) = common_checks(s, z, &[u1, u2])?;
    let e1 = e_of(s, z, &[u1])?;
    let e2 = e_of(s, z, &[u2])?;
    let e12 = e_of(s, z, &[u1, u2])?;
    let big = e1 >= 3 || e2 >= 3;
    let equal_small = 0 < e1 && e1 == e2 && e2 == e12 && e12 <= 2;
    checks.push(Check { name: CHECK_E_POSITIVE, holds: e1 > 0 && e2 > 0, values: vec![("e(u')", e1), ("e(u'')", e2)] });
    checks.push(Check { name: CHECK_E_AT_LEAST_3, holds: big, values: vec![("e(u')", e1), ("e(u'')", e2)] });
    checks.push(Check {
        name: CHECK_E_EQUAL_SMALL,
        holds: equal_small,
        values: vec![("e(u')", e1), ("e(u'')", e2), ("e(u',u'')", e12)],
    });
    let status = if base && big {
        Status::Forbidden
    } else if base && equal_small {
        Status::Guaranteed
    } else {
        Status::Undetermined
    };
    let e = EValues { h1: s.h1_generic(z)?, first: e1, second: Some(e2), both: Some(e12) };
    let mut report = G12Report { mode: Mode::Pair(u1, u2), z: z.clone(), status, checks, necessary: vec![], e, towers: vec![] };
    report.necessary = necessary_conditions_pair(s, &report)?;
    Ok(report)
}

/// Verdict for the class `-2E*_u` on `Z`: Forbidden when `Z ≥ E` carries a
/// regular canonical section, `Z_u = 1` and `e_Z(u) ≥ 3`; never Guaranteed.
pub fn classify_single(s: &GenericStructure, z: &IntCycle, u: usize) -> Result<G12Report> {
    s.graph().check_int(z)?;
    vertex_ok(s, u)?;
    if z[u] <= 0 {
        return Err(Error::InvalidInput("the vertex must lie in the support of Z".into()));
    }
    let (mut checks, base) = common_checks(s, z, &[u])?;
    let e1 = e_of(s, z, &[u])?;
    checks.push(Check { name: CHECK_E_POSITIVE, holds: e1 > 0, values: vec![("e(u)", e1)] });
    checks.push(Check { name: CHECK_E_AT_LEAST_3, holds: e1 >= 3, values: vec![("e(u)", e1)] });
    let status = if base && e1 >= 3 { Status::Forbidden } else { Status::Undetermined };
    let e = EValues { h1: s.h1_generic(z)?, first: e1, second: None, both: None };
    let mut report = G12Report { mode: Mode::Single(u), z: z.clone(), status, checks, necessary: vec![], e, towers: vec![] };
    report.necessary = necessary_conditions_single(s, &report)?;
    Ok(report)
}

/// The unique neighbour of an end vertex.
fn leaf_neighbor(s: &GenericStructure, u: usize) -> Option<usize> {
    let nb = s.graph().neighbors(u);
    (nb.len() == 1).then(|| nb[0])
}

/// Conditions a pair counterexample would satisfy: both vertices are end
/// vertices, their neighbours carry equal coefficients, `e_Z(u') = Z_{w'} - 1`
/// and `e_Z(u') = e_Z(u'')`.
pub fn necessary_conditions_pair(s: &GenericStructure, r: &G12Report) -> Result<Vec<Condition>> {
    let Mode::Pair(u1, u2) = r.mode else {
        return Err(Error::InvalidInput("pair report expected".into()));
    };
    let g = s.graph();
    let z = &r.z;
    let applicable = r.status == Status::Forbidden;
    let (w1, w2) = (leaf_neighbor(s, u1), leaf_neighbor(s, u2));
    let e1 = r.e.first;
    let e2 = r.e.second.unwrap_or(0);
    let mut out = vec![Condition {
        name: "u' and u'' are end vertices",
        holds: w1.is_some() && w2.is_some(),
        applicable,
        values: vec![("valency(u')", g.valency(u1) as i64), ("valency(u'')", g.valency(u2) as i64)],
    }];
    match (w1, w2) {
        (Some(a), Some(b)) => {
            out.push(Condition {
                name: "Z_{w'} = Z_{w''}",
                holds: z[a] == z[b],
                applicable,
                values: vec![("Z_{w'}", z[a]), ("Z_{w''}", z[b])],
            });
            out.push(Condition {
                name: "e(u') = Z_{w'} - 1",
                holds: e1 == z[a] - 1,
                applicable,
                values: vec![("e(u')", e1), ("Z_{w'}", z[a])],
            });
        }
        _ => {
            for name in ["Z_{w'} = Z_{w''}", "e(u') = Z_{w'} - 1"] {
                out.push(Condition { name, holds: false, applicable: false, values: vec![] });
            }
        }
    }
    out.push(Condition {
        name: "e(u') = e(u'')",
        holds: e1 == e2,
        applicable,
        values: vec![("e(u')", e1), ("e(u'')", e2)],
    });
    Ok(out)
}

/// `(Z - E_u, E_u)`.
pub fn self_pairing_gap(s: &GenericStructure, z: &IntCycle, u: usize) -> i64 {
    let g = s.graph();
    g.pairing_unit_int(z, u) - g.euler(u)
}

/// Conditions a single-vertex counterexample would satisfy:
/// `2 | (Z - Z_K, E_u)`, `e_Z(u) = (Z - E_u, E_u)/2` and `2 | Z_w` for every
/// neighbour `w` of `u` in `|Z|`.
pub fn necessary_conditions_single(s: &GenericStructure, r: &G12Report) -> Result<Vec<Condition>> {
    let Mode::Single(u) = r.mode else {
        return Err(Error::InvalidInput("single-vertex report expected".into()));
    };
    let g = s.graph();
    let z = &r.z;
    let applicable = r.status == Status::Forbidden;
    let zr = z.to_rat();
    let pk = g.pairing(&(&zr - g.canonical_cycle()), &g.unit(u).to_rat());
    let pk_int = crate::cycle::q_to_i64(&pk);
    let gap = self_pairing_gap(s, z, u);
    let neighbours: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| z[w] > 0).collect();
    let mut values: Vec<(&'static str, i64)> = neighbours.iter().map(|&w| ("Z_w", z[w])).collect();
    values.sort();
    Ok(vec![
        Condition {
            name: "2 | (Z - Z_K, E_u)",
            holds: pk_int.is_some_and(|x| x % 2 == 0),
            applicable,
            values: pk_int.map(|x| vec![("(Z - Z_K, E_u)", x)]).unwrap_or_default(),
        },
        Condition {
            name: "e(u) = (Z - E_u, E_u)/2",
            holds: gap % 2 == 0 && r.e.first == gap / 2,
            applicable,
            values: vec![("e(u)", r.e.first), ("(Z - E_u, E_u)", gap)],
        },
        Condition {
            name: "2 | Z_w for neighbours w in |Z|",
            holds: neighbours.iter().all(|&w| z[w] % 2 == 0),
            applicable,
            values,
        },
    ])
}

/// One level `Z^t` of a cycle tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub t: usize,
    pub cycle: IntCycle,
    pub h1: i64,
    /// `h¹` predicted by a drop of one per level.
    pub predicted_h1: i64,
    /// Coefficients at the tracked vertices (`w', w''` or `u_nj`).
    pub key: Vec<(String, i64)>,
    /// `e` at the marked vertices (`None` once a vertex leaves the support).
    pub e: Vec<(String, Option<i64>)>,
    pub regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTower {
    pub kind: String,
    pub levels: Vec<TowerLevel>,
    pub stop: String,
}

fn e_opt(s: &GenericStructure, z: &IntCycle, j: &[usize]) -> Result<Option<i64>> {
    if j.iter().any(|&v| z[v] == 0) {
        return Ok(None);
    }
    s.e_z(z, j).map(Some)
}

/// `Z¹ = Z`, `Z^t` = cohomological cycle of `Z^{t-1} - E_{w'}` for
/// `t ≤ Z_{w'} - 1`, where `w'` is the neighbour of the end vertex `u'`.
pub fn cycle_tower_pair(s: &GenericStructure, z: &IntCycle, u1: usize, u2: usize) -> Result<CycleTower> {
    let g = s.graph();
    let (Some(w1), w2) = (leaf_neighbor(s, u1), leaf_neighbor(s, u2)) else {
        return Err(Error::FormulaNotApplicable(format!("`{}` is not an end vertex", g.id(u1))));
    };
    let h1_top = s.h1_generic_or_zero(z)?;
    let level = |t: usize, c: &IntCycle| -> Result<TowerLevel> {
        let mut key = vec![(g.id(w1).to_string(), c[w1])];
        if let Some(w) = w2 {
            key.push((g.id(w).to_string(), c[w]));
        }
        Ok(TowerLevel {
            t,
            cycle: c.clone(),
            h1: s.h1_generic_or_zero(c)?,
            predicted_h1: h1_top - (t as i64 - 1),
            key,
            e: vec![
                ("u'".to_string(), e_opt(s, c, &[u1])?),
                ("u''".to_string(), e_opt(s, c, &[u2])?),
                ("u',u''".to_string(), e_opt(s, c, &[u1, u2])?),
            ],
            regular: s.has_regular_canonical_section(c)?,
        })
    };
    let mut levels = vec![level(1, z)?];
    let last = z[w1] - 1;
    let mut stop = format!("reached t = Z_w' - 1 = {last}");
    let mut t = 2;
    while (t as i64) <= last {
        let prev = &levels.last().expect("nonempty").cycle;
        if prev[w1] == 0 {
            stop = "w' left the support".into();
            break;
        }
        let next = match s.cohomological_cycle(&prev.plus_unit(w1, -1)) {
            Ok(c) => c,
            Err(e @ Error::NonUniqueCohomologicalCycle { .. }) => {
                stop = e.to_string();
                break;
            }
            Err(e) => return Err(e),
        };
        if next.is_zero() || !g.is_connected_support(&next) {
            levels.push(level(t, &next)?);
            stop = "support became empty or disconnected".into();
            break;
        }
        levels.push(level(t, &next)?);
        t += 1;
    }
    Ok(CycleTower { kind: "pair".into(), levels, stop })
}

/// `Z' = Z`, then repeatedly the cohomological cycle of `Z' - E_{u_nj}`,
/// while `Z'_u = 1` and `u_nj` stays in the support.
pub fn cycle_tower_single(s: &GenericStructure, z: &IntCycle, u: usize, nj: usize) -> Result<CycleTower> {
    let g = s.graph();
    if !g.is_edge(u, nj) {
        return Err(Error::NotAnEdge(g.id(u).to_string(), g.id(nj).to_string()));
    }
    let h1_top = s.h1_generic_or_zero(z)?;
    let level = |t: usize, c: &IntCycle| -> Result<TowerLevel> {
        Ok(TowerLevel {
            t,
            cycle: c.clone(),
            h1: s.h1_generic_or_zero(c)?,
            predicted_h1: h1_top - (t as i64 - 1),
            key: vec![(g.id(nj).to_string(), c[nj])],
            e: vec![("u".to_string(), e_opt(s, c, &[u])?)],
            regular: s.has_regular_canonical_section(c)?,
        })
    };
    let mut levels = vec![level(1, z)?];
    let mut stop = String::from("u_nj left the support");
    for t in 2..=(z[nj].max(0) as usize + 1) {
        let prev = levels.last().expect("nonempty").cycle.clone();
        if prev[nj] == 0 {
            break;
        }
        if prev[u] != 1 {
            stop = "Z'_u is no longer 1".into();
            break;
        }
        let next = match s.cohomological_cycle(&prev.plus_unit(nj, -1)) {
            Ok(c) => c,
            Err(e @ Error::NonUniqueCohomologicalCycle { .. }) => {
                stop = e.to_string();
                break;
            }
            Err(e) => return Err(e),
        };
        let done = next.is_zero() || !g.is_connected_support(&next);
        levels.push(level(t, &next)?);
        if done {
            stop = "support became empty or disconnected".into();
            break;
        }
    }
    Ok(CycleTower { kind: "single".into(), levels, stop })
}

/// Attaches every applicable tower to a report.
pub fn with_towers(s: &GenericStructure, mut r: G12Report) -> Result<G12Report> {
    let g = s.graph();
    match r.mode {
        Mode::Pair(u1, u2) => {
            for (a, b) in [(u1, u2), (u2, u1)] {
                if leaf_neighbor(s, a).is_some() {
                    r.towers.push(cycle_tower_pair(s, &r.z, a, b)?);
                    break;
                }
            }
        }
        Mode::Single(u) => {
            for &w in g.neighbors(u) {
                if r.z[w] > 0 {
                    r.towers.push(cycle_tower_single(s, &r.z, u, w)?);
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rational_graph_is_undetermined() {
        let s = GenericStructure::new(families::e8());
        let z = IntCycle(vec![1; 8]);
        let r = classify_pair(&s, &z, 0, 5).unwrap();
        assert_eq!(r.status, Status::Undetermined);
        assert!(!r.check(CHECK_E_POSITIVE).unwrap().holds);
        let r = classify_single(&s, &z, 0).unwrap();
        assert_eq!(r.status, Status::Undetermined);
    }

    #[test]
    fn coefficient_gate() {
        let s = GenericStructure::new(families::star_1_444());
        let r = classify_single(&s, &IntCycle(vec![2, 1, 1, 1]), 0).unwrap();
        assert!(!r.check(CHECK_COEFFS).unwrap().holds);
        assert_eq!(r.status, Status::Undetermined);
    }

    #[test]
    fn pair_conditions_on_interior_vertex() {
        let s = GenericStructure::new(families::chain(&[-2, -2, -2]));
        let r = classify_pair(&s, &IntCycle(vec![1, 1, 1]), 1, 2).unwrap();
        let c = &r.necessary[0];
        assert!(!c.holds);
    }

    #[test]
    fn towers_on_rational_graph_collapse() {
        let s = GenericStructure::new(families::chain(&[-2, -2, -2]));
        let z = IntCycle(vec![1, 3, 1]);
        let t = cycle_tower_pair(&s, &z, 0, 2).unwrap();
        assert_eq!(t.levels[0].cycle, z);
        assert!(t.levels.len() >= 2);
        assert!(t.levels[1].cycle.is_zero());
        let t = cycle_tower_single(&s, &z, 0, 1).unwrap();
        assert_eq!(t.levels[0].cycle, z);
        assert!(t.levels[1].cycle.is_zero());
    }
}
