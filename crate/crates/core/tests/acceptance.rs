//! Acceptance suite: one PASS/FAIL line per criterion with its pinned
//! tolerance and time budget. Run with `cargo test --test acceptance`.
//! Evidence for failures is written under the cargo target tmp directory.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::Rng;
use serde_json::{json, Value};

use common::{all_below, random_cycle, random_graph, rng};
use sing_core::blowup::{blowup_edge, blowup_vertex};
use sing_core::cli::run_command;
use sing_core::cohomology::{Engine, GenericStructure};
use sing_core::cycle::q;
use sing_core::families;
use sing_core::hyperelliptic::census::{enumerate_instances, CensusParams};
use sing_core::hyperelliptic::{with_towers, Mode, Status, CHECK_E_AT_LEAST_3, CHECK_E_EQUAL_SMALL};
use sing_core::io;
use sing_core::opt::{laufer_descent, min_chi_box, Limits};
use sing_core::relative::{h1_z1, relative_dominant, relative_h1, SplitConfig};
use sing_core::{Error, IntCycle, RatCycle, ResolutionGraph};

type Verdict = Result<String, String>;

/// Distinct (graph, cycle) pairs with a regular canonical section, taken from
/// a small census; random cycles rarely have one.
fn regular_pool() -> &'static [(ResolutionGraph, IntCycle)] {
    static POOL: OnceLock<Vec<(ResolutionGraph, IntCycle)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let c = enumerate_instances(
            &CensusParams { max_vertices: 6, verify: false, ..Default::default() },
            &Limits::default(),
        )
        .expect("small census");
        let mut seen = BTreeSet::new();
        c.instances
            .into_iter()
            .filter(|i| seen.insert((i.key.clone(), i.report.z.0.clone())))
            .map(|i| (i.graph, i.report.z))
            .collect()
    })
}

fn archive_dir() -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    fs::create_dir_all(&d).expect("archive directory");
    d
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T>(r: sing_core::Result<T>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn exhaustive(g: &ResolutionGraph) -> GenericStructure {
    GenericStructure::with_options(g.clone(), Limits::default(), Engine::Exhaustive)
}

/// Criterion 1: Dual basis, positivity of `E*`, adjunction, `χ(E_v) = 1` and the
/// polarisation identity of `χ`, exactly, on 200 random trees.
fn lattice_exactness() -> Verdict {
    let mut r = rng(1);
    let mut checked = 0;
    for _ in 0..200 {
        let g = random_graph(&mut r, 8, -6, -1);
        let n = g.len();
        for v in 0..n {
            let d = g.dual(v);
            for w in 0..n {
                let p = g.pairing(&d, &g.unit(w).to_rat());
                ensure(p == q(-((v == w) as i64)), || format!("(E*_{v}, E_{w}) = {p}"))?;
                ensure(d[w] > q(0), || format!("E*_{v} has coordinate {} at {w}", d[w]))?;
            }
            let adj = g.pairing(&(&g.unit(v).to_rat() - g.canonical_cycle()), &g.unit(v).to_rat()) + q(2);
            ensure(adj == q(0), || format!("adjunction residual {adj} at {v}"))?;
            ensure(g.chi_int(&g.unit(v)) == 1, || format!("χ(E_{v}) != 1"))?;
        }
        for _ in 0..5 {
            let a: Vec<_> = (0..n).map(|_| q(r.random_range(-3..=3))).collect();
            let a = &g.from_dual_coords(&a) + &random_cycle(&mut r, n, -3, 3).to_rat();
            let b = random_cycle(&mut r, n, -3, 3).to_rat();
            let lhs = g.chi(&(&a + &b));
            let rhs = g.chi(&a) + g.chi(&b) - g.pairing(&a, &b);
            ensure(lhs == rhs, || "χ(a+b) != χ(a) + χ(b) - (a,b)".into())?;
            checked += 1;
        }
    }
    Ok(format!("200 graphs, {checked} polarisation samples"))
}

/// Criterion 2: Rational ADE graphs and the non-rational star, with the exhaustive
/// engine over the certified box.
fn rationality_oracle() -> Verdict {
    let mut graphs: Vec<(String, ResolutionGraph, i64)> = Vec::new();
    for n in 1..=8 {
        graphs.push((format!("A{n}"), families::a_n(n), 0));
    }
    for n in 4..=8 {
        graphs.push((format!("D{n}"), families::d_n(n), 0));
    }
    graphs.push(("E6".into(), families::e6(), 0));
    graphs.push(("E7".into(), families::e7(), 0));
    graphs.push(("E8".into(), families::e8(), 0));
    graphs.push(("star(-1;-4,-4,-4)".into(), families::star_1_444(), 1));
    for (name, g, pg) in &graphs {
        let s = exhaustive(g);
        let got = e(s.geometric_genus())?;
        ensure(got == *pg, || format!("{name}: p_g = {got}, expected {pg}"))?;
        ensure(e(s.is_rational())? == (*pg == 0), || format!("{name}: rationality"))?;
        let fast = GenericStructure::new(g.clone());
        ensure(e(fast.geometric_genus())? == got, || format!("{name}: engines disagree"))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

/// Criterion 3: Greedy single-coordinate descent from `0` against the box minimum.
fn descent_vs_oracle() -> Verdict {
    let mut r = rng(3);
    let limits = Limits::default();
    let mut mismatches = Vec::new();
    for i in 0..200 {
        let g = random_graph(&mut r, 6, -6, -1);
        let n = g.len();
        let a: Vec<_> = (0..n).map(|_| q(r.random_range(-2..=2))).collect();
        let shift = g.from_dual_coords(&a);
        let lo = IntCycle::zero(n);
        let hi = random_cycle(&mut r, n, 0, 3);
        let oracle = e(min_chi_box(&g, &shift, &lo, &hi, &limits))?;
        let d = e(laufer_descent(&g, &shift, &lo, Some(&lo), Some(&hi)))?;
        let got = g.chi(&shift.add_int(&d));
        ensure(got >= oracle.minimum, || format!("instance {i}: descent below the minimum"))?;
        if got != oracle.minimum {
            mismatches.push(json!({
                "instance": i,
                "graph": io::report::graph(&g),
                "shift_dual_coords": a.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "upper": hi.0,
                "descent_end": d.0,
                "descent_value": io::report::rational(&got),
                "minimum": io::report::rational(&oracle.minimum),
                "argmin_first": oracle.argmin[0].0,
            }));
        }
    }
    let path = archive_dir().join("descent_mismatches.json");
    fs::write(&path, serde_json::to_string_pretty(&mismatches).unwrap()).map_err(|x| x.to_string())?;
    if mismatches.is_empty() {
        Ok("200/200 exact".into())
    } else {
        Err(format!(
            "{} of 200 instances end in a non-global local minimum; descent stays advisory, archived to {}",
            mismatches.len(),
            path.display()
        ))
    }
}

/// Criterion 4: Blow-up invariance on 100 random triples.
fn blowup_invariance() -> Verdict {
    let mut r = rng(4);
    let mut h1_cases = 0;
    let pool = regular_pool();
    for i in 0..100 {
        let (g, regular) = if i % 2 == 0 {
            (random_graph(&mut r, 6, -5, -1), None)
        } else {
            let (g, z) = &pool[r.random_range(0..pool.len())];
            (g.clone(), Some(z.clone()))
        };
        let n = g.len();
        let edges = g.edges();
        let b = if !edges.is_empty() && r.random_bool(0.5) {
            let (u, v) = edges[r.random_range(0..edges.len())];
            e(blowup_edge(&g, u, v))?
        } else {
            e(blowup_vertex(&g, r.random_range(0..n)))?
        };
        let h = &b.graph;
        ensure(h.discriminant_order() == g.discriminant_order(), || format!("{i}: |det| changed"))?;
        let again = e(ResolutionGraph::validate(&h.to_raw()))?;
        ensure(again.fingerprint() == h.fingerprint(), || format!("{i}: revalidation"))?;
        let zk = &b.pullback_rat(g.canonical_cycle()) - &b.new_unit().to_rat();
        ensure(&zk == h.canonical_cycle(), || format!("{i}: Z_K' != π*Z_K - E_new"))?;
        for _ in 0..4 {
            let a = random_cycle(&mut r, n, -3, 3);
            let c = random_cycle(&mut r, n, -3, 3);
            ensure(h.pairing_int(&b.pullback(&a), &b.pullback(&c)) == g.pairing_int(&a, &c), || format!("{i}: pairing"))?;
            ensure(h.chi_int(&b.pullback(&a)) == g.chi_int(&a), || format!("{i}: χ(π*l) != χ(l)"))?;
            let d: Vec<_> = (0..n).map(|_| q(r.random_range(-2..=2))).collect();
            let d = g.from_dual_coords(&d);
            ensure(h.chi(&b.pullback_rat(&d)) == g.chi(&d), || format!("{i}: χ(π*l') != χ(l')"))?;
        }
        let s = GenericStructure::new(g.clone());
        let t = GenericStructure::new(h.clone());
        let mut candidates = vec![g.reduced(), random_cycle(&mut r, n, 1, 3)];
        let top: Vec<i64> = g.canonical_cycle().0.iter().map(|x| x.floor().to_integer().try_into().unwrap_or(1).clamp(1, 4)).collect();
        candidates.push(IntCycle(top));
        candidates.extend(regular);
        for z in candidates {
            if !e(s.has_regular_canonical_section(&z))? {
                continue;
            }
            h1_cases += 1;
            let pz = &b.pullback(&z) - &b.new_unit();
            let (a, c) = (e(t.h1_generic(&pz))?, e(s.h1_generic(&z))?);
            ensure(a == c, || format!("{i}: h1(π*Z - E_new) = {a} != {c} = h1(Z)"))?;
        }
    }
    Ok(format!("100 triples, h1 invariance on {h1_cases} regular cycles"))
}

/// Criterion 5: Internal consistency of the generic formulas.
fn generic_formula_consistency() -> Verdict {
    let mut r = rng(5);
    let (mut mono, mut pairs, mut mic, mut too_large) = (0, 0, 0, 0);
    let mut graphs = vec![families::star_1_444(), families::e8()];
    while graphs.len() < 30 {
        graphs.push(random_graph(&mut r, 5, -5, -1));
    }
    let pool = regular_pool();
    let mut keys = BTreeSet::new();
    for (g, _) in pool {
        if keys.len() == 20 {
            break;
        }
        if keys.insert(g.fingerprint()) {
            graphs.push(g.clone());
        }
    }
    for (i, g) in graphs.iter().enumerate() {
        let n = g.len();
        let s = GenericStructure::new(g.clone());
        let pg = e(s.geometric_genus())?;
        let d0 = e(s.h1_resolution_natural(&RatCycle::zero(n)))?;
        ensure(d0 == pg, || format!("{i}: h1 at l' = 0 is {d0}, p_g = {pg}"))?;
        ensure(e(s.hfrak(&IntCycle::zero(n)))? == 0, || format!("{i}: hfrak(0) != 0"))?;
        for _ in 0..3 {
            let l0 = random_cycle(&mut r, n, 0, 2);
            let v = r.random_range(0..n);
            let (a, b) = (e(s.hfrak(&l0))?, e(s.hfrak(&l0.plus_unit(v, 1)))?);
            ensure(a <= b, || format!("{i}: hfrak decreases along +E_{v} at {:?}", l0.0))?;
            mono += 1;
        }
        let members: Vec<IntCycle> = all_below(&IntCycle(vec![2; n]))
            .into_iter()
            .chain((0..4).map(|_| random_cycle(&mut r, n, 0, 5)))
            .filter(|c| s.semigroup_member(&c.to_rat()).unwrap_or(false))
            .collect();
        for a in members.iter().take(12) {
            for b in members.iter().take(12) {
                let m = a.meet(b);
                ensure(e(s.semigroup_member(&m.to_rat()))?, || format!("{i}: min({:?}, {:?}) not in the semigroup", a.0, b.0))?;
                pairs += 1;
            }
        }
        if !e(s.is_rational())? {
            let m = e(s.maximal_ideal_cycle())?;
            let x = exhaustive(g);
            let res = match x.min_chi(&RatCycle::zero(n), Some(&IntCycle::zero(n)), None, true) {
                Err(Error::SearchTooLarge { .. }) => {
                    too_large += 1;
                    continue;
                }
                r => e(r)?,
            };
            ensure(!res.truncated, || format!("{i}: argmin set truncated"))?;
            ensure(res.argmin.iter().all(|c| c.le(&m)), || format!("{i}: MIC does not dominate"))?;
            ensure(res.argmin.contains(&m), || format!("{i}: MIC not in the argmin set"))?;
            mic += 1;
        }
    }
    Ok(format!("{} graphs, {mono} monotonicity steps, {pairs} min pairs, {mic} MIC checks ({too_large} argmin boxes over the search guard)", graphs.len()))
}

/// Criterion 6: The relative formula with `Z₁ = 0`, and dominance against `h¹(Z₁)`.
fn relative_degeneration() -> Verdict {
    let mut r = rng(6);
    let mut dominant = 0;
    let mut split_tested = 0;
    let mut skipped = 0;
    for i in 0..50 {
        let g = random_graph(&mut r, 5, -5, -1);
        let n = g.len();
        let s = GenericStructure::new(g.clone());
        let z = random_cycle(&mut r, n, 0, 2);
        let mut a: Vec<_> = (0..n).map(|_| q(r.random_range(0..=2))).collect();
        a[r.random_range(0..n)] = q(1);
        let l = -&g.from_dual_coords(&a);
        let cfg = e(SplitConfig::new(&g, &[], z.clone()))?;
        let rel = e(relative_h1(&s, &cfg, &l))?;
        let direct = if z.is_zero() { 0 } else { e(s.h1_natural(&z, &-&l))? };
        ensure(rel == direct, || format!("{i}: relative {rel} != generic {direct}"))?;
        let v1: Vec<usize> = (0..n).filter(|_| r.random_bool(0.5)).collect();
        let cfg = e(SplitConfig::new(&g, &v1, z))?;
        let (d, rel, inner) = match (relative_dominant(&s, &cfg, &l), relative_h1(&s, &cfg, &l), h1_z1(&s, &cfg, &l)) {
            (Ok(d), Ok(x), Ok(y)) => (d, x, y),
            (Err(Error::FormulaNotApplicable(_)), _, _) | (_, Err(Error::FormulaNotApplicable(_)), _) | (_, _, Err(Error::FormulaNotApplicable(_))) => {
                skipped += 1;
                continue;
            }
            (d, x, y) => {
                e(d)?;
                e(x)?;
                e(y)?;
                unreachable!()
            }
        };
        split_tested += 1;
        if d.holds {
            dominant += 1;
            ensure(rel == inner, || format!("{i}: dominant but relative h1 {rel} != h1(Z1) {inner}"))?;
        }
    }
    Ok(format!("50 degenerate splits; {split_tested} random splits ({dominant} dominant, {skipped} outside formula range)"))
}

/// Criterion 7: e-value coherence.
fn e_coherence() -> Verdict {
    let mut r = rng(7);
    let mut regular = 0;
    let mut i = 0;
    while i < 100 {
        let g = random_graph(&mut r, 6, -5, -1);
        let n = g.len();
        let s = GenericStructure::new(g.clone());
        let z = random_cycle(&mut r, n, 0, 3);
        let supp = z.support();
        if supp.is_empty() {
            continue;
        }
        i += 1;
        ensure(e(s.e_z(&z, &[]))? == 0, || "e_Z(∅) != 0".into())?;
        let j2: Vec<usize> = supp.iter().copied().filter(|_| r.random_bool(0.6)).collect();
        let j1: Vec<usize> = j2.iter().copied().filter(|_| r.random_bool(0.5)).collect();
        let (a, b) = (e(s.e_z(&z, &j1))?, e(s.e_z(&z, &j2))?);
        ensure(0 <= a && a <= b, || format!("e not monotone: {a} > {b}"))?;
        if e(s.is_rational())? {
            ensure(b == 0, || "e != 0 on a rational graph".into())?;
        }
    }
    // The bound compares against h¹(O_{Z-E_u}), which is the restriction to
    // V \ {u} only when Z_u = 1.
    let mut skipped = 0;
    for (g, z) in regular_pool() {
        let s = GenericStructure::new(g.clone());
        for u in z.support() {
            if z[u] != 1 {
                skipped += 1;
                continue;
            }
            let ez = e(s.e_z(z, &[u]))?;
            let bound = g.pairing_unit_int(&z.plus_unit(u, -1), u) - 1;
            ensure(ez <= bound, || format!("{:?}: e_Z({u}) = {ez} > {bound}", z.0))?;
            regular += 1;
        }
    }
    Ok(format!("100 random instances; bound checked at {regular} (regular cycle, vertex) pairs with Z_u = 1, {skipped} with Z_u > 1 outside its hypothesis"))
}

/// Criteria 8 and 9: the census with re-verification, and the cycle towers of every
/// classified instance.
fn census_and_towers(towers_out: &mut Option<(Verdict, Duration)>) -> Verdict {
    let start = Instant::now();
    let params = CensusParams::default();
    let c = e(enumerate_instances(&params, &Limits::default()))?;
    let census_time = start.elapsed();
    let forbidden = c.counts.get(&Status::Forbidden).copied().unwrap_or(0);
    let guaranteed = c.counts.get(&Status::Guaranteed).copied().unwrap_or(0);
    let summary = json!({
        "params": format!("{params:?}"),
        "shapes": c.shapes,
        "decorated": c.decorated,
        "negative_definite": c.negative_definite,
        "canonical_at_least_reduced": c.canonical_ge_reduced,
        "cycles_tested": c.cycles_tested,
        "regular_cycles": c.regular_cycles,
        "counts": c.counts.iter().map(|(k, v)| (k.as_str().to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        "discrepancies": c.discrepancies,
        "seconds": census_time.as_secs_f64(),
    });
    fs::write(archive_dir().join("census_summary.json"), serde_json::to_string_pretty(&summary).unwrap()).map_err(|x| x.to_string())?;
    let tower_start = Instant::now();
    let v = check_towers(&c.instances);
    *towers_out = Some((v, tower_start.elapsed()));
    ensure(c.discrepancies == 0, || format!("{} re-verification discrepancies", c.discrepancies))?;
    ensure(c.instances.iter().all(|i| i.verified == Some(true)), || "unverified instance".into())?;
    for i in &c.instances {
        let r = &i.report;
        let base = r.checks.iter().filter(|x| x.name != CHECK_E_AT_LEAST_3 && x.name != CHECK_E_EQUAL_SMALL && !x.name.starts_with("e >")).all(|x| x.holds);
        match r.status {
            Status::Forbidden => {
                ensure(base && r.check(CHECK_E_AT_LEAST_3).is_some_and(|x| x.holds), || format!("{}: Forbidden without its hypotheses", i.key))?;
                let e2 = r.e.second.unwrap_or(0);
                ensure(r.e.first >= 3 || e2 >= 3, || format!("{}: Forbidden with small e", i.key))?;
            }
            Status::Guaranteed => {
                let (a, b, c) = (r.e.first, r.e.second.unwrap_or(-1), r.e.both.unwrap_or(-2));
                ensure(base && a == b && b == c && (1..=2).contains(&a), || format!("{}: Guaranteed with e = {a},{b},{c}", i.key))?;
            }
            Status::Undetermined => {}
        }
        if let (Some(b), Some(x)) = (r.e.both, r.e.second) {
            ensure(r.e.first <= b && x <= b, || format!("{}: e not monotone", i.key))?;
        }
    }
    ensure(forbidden > 0, || "no Forbidden instance in the search space".into())?;
    Ok(format!(
        "{} decorated trees, {} regular cycles, {forbidden} forbidden / {guaranteed} guaranteed, all re-verified, census {:.1} s",
        c.decorated,
        c.regular_cycles,
        census_time.as_secs_f64()
    ))
}

fn check_towers(instances: &[sing_core::hyperelliptic::census::Instance]) -> Verdict {
    let mut towers = 0;
    let mut levels = 0;
    for inst in instances.iter().filter(|i| i.report.status != Status::Undetermined) {
        let g = &inst.graph;
        let s = GenericStructure::new(g.clone());
        let x = exhaustive(g);
        let r = e(with_towers(&s, inst.report.clone()))?;
        for t in &r.towers {
            towers += 1;
            ensure(t.levels.first().is_some_and(|l| l.cycle == r.z), || format!("{}: first level is not Z", inst.key))?;
            let tracked: Vec<usize> = match (r.mode, t.kind.as_str()) {
                (Mode::Pair(..), _) | (Mode::Single(_), _) => t.levels[0].key.iter().map(|(id, _)| g.vertex(id).unwrap()).collect(),
            };
            let w = tracked[0];
            for pair in t.levels.windows(2) {
                let (prev, next) = (&pair[0], &pair[1]);
                levels += 1;
                ensure(next.cycle.le(&prev.cycle), || format!("{}: Z^t not below Z^(t-1)", inst.key))?;
                ensure(next.h1 <= prev.h1, || format!("{}: h1 increases along the tower", inst.key))?;
                // Least element of {C ≤ Z^(t-1) - E_w : h1(C) = h1(Z^(t-1) - E_w)},
                // with every h1 recomputed by subcycle enumeration.
                let parent = prev.cycle.plus_unit(w, -1);
                let target = e(x.h1_generic_or_zero(&parent))?;
                ensure(e(x.h1_generic_or_zero(&next.cycle))? == target, || format!("{}: level h1 differs from its parent", inst.key))?;
                for v in next.cycle.support() {
                    let probe = parent.with(v, next.cycle[v] - 1);
                    ensure(e(x.h1_generic_or_zero(&probe))? < target, || format!("{}: level {} is not minimal at {v}", inst.key, next.t))?;
                }
            }
        }
    }
    Ok(format!("{towers} towers, {levels} level transitions certified"))
}

/// Criterion 10: Byte-stable round trip of the shipped samples, and `--oracle` reruns.
fn cli_round_trip() -> Verdict {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/samples");
    let mut files = 0;
    for entry in fs::read_dir(&dir).map_err(|x| x.to_string())? {
        let p = entry.map_err(|x| x.to_string())?.path();
        if p.extension().is_none_or(|x| x != "graph") {
            continue;
        }
        let doc = fs::read_to_string(&p).map_err(|x| x.to_string())?;
        let f = e(io::parse_graph_file(&doc))?;
        let text = io::emit_graph_file(&f);
        ensure(text == doc, || format!("{} is not byte-stable", p.display()))?;
        ensure(io::emit_graph_file(&e(io::parse_graph_file(&text))?) == text, || "second round trip".into())?;
        files += 1;
    }
    let tmp = archive_dir().join("oracle_graphs");
    fs::create_dir_all(&tmp).map_err(|x| x.to_string())?;
    let write = |name: &str, g: &ResolutionGraph, cycles: &[(&str, &IntCycle)]| -> Result<String, String> {
        let f = io::GraphFile {
            graph: g.clone(),
            cycles: cycles.iter().map(|(k, c)| (k.to_string(), (*c).clone())).collect(),
        };
        let p = tmp.join(format!("{name}.graph"));
        fs::write(&p, io::emit_graph_file(&f)).map_err(|x| x.to_string())?;
        Ok(p.display().to_string())
    };
    let mut runs = 0;
    let mut run = |args: Vec<String>| -> Result<(), String> {
        let mut argv = vec!["sing".to_string(), "--json".into(), "--oracle".into()];
        argv.extend(args);
        let out = run_command(&argv);
        let doc: Value = serde_json::from_str(&out.stdout).map_err(|x| format!("{argv:?}: {x}: {}", out.stderr))?;
        ensure(out.code == 0 && doc["oracle"]["agrees"] == json!(true), || format!("{argv:?}: exit {} {}", out.code, doc["oracle"]))?;
        runs += 1;
        Ok(())
    };
    // Criterion 2 graphs.
    let mut named: Vec<(String, ResolutionGraph)> = (1..=8).map(|n| (format!("a{n}"), families::a_n(n))).collect();
    named.extend((4..=8).map(|n| (format!("d{n}"), families::d_n(n))));
    named.extend([("e6".to_string(), families::e6()), ("e7".into(), families::e7()), ("e8".into(), families::e8()), ("star".into(), families::star_1_444())]);
    for (name, g) in &named {
        run(vec!["invariants".into(), write(name, g, &[])?])?;
    }
    // Criteria 5 and 7 on random graphs: invariants, semigroup membership,
    // h1 of natural bundles and e-values.
    let mut r = rng(10);
    for i in 0..20 {
        let g = random_graph(&mut r, 5, -5, -1);
        let n = g.len();
        let z = random_cycle(&mut r, n, 1, 2);
        let path = write(&format!("random{i}"), &g, &[("Z", &z)])?;
        run(vec!["invariants".into(), path.clone()])?;
        let id = g.id(r.random_range(0..n)).to_string();
        run(vec!["semigroup".into(), path.clone(), "--chern".into(), format!("{id}=1")])?;
        let all: Vec<String> = g.ids().iter().map(|v| format!("{v}=-1")).collect();
        run(vec!["h1".into(), path.clone(), "--cycle".into(), "Z".into(), "--chern".into(), all.join(",")])?;
        run(vec!["ez".into(), path.clone(), "--cycle".into(), "Z".into(), "--vertices".into(), id])?;
    }
    Ok(format!("{files} sample files byte-stable, {runs} oracle reruns without discrepancy"))
}

fn main() {
    let mut towers: Option<(Verdict, Duration)> = None;
    let mut results: Vec<(u8, &str, &str, u64, Verdict, Duration)> = Vec::new();
    let timed = |results: &mut Vec<_>, id: u8, name: &'static str, tol: &'static str, budget: u64, f: &mut dyn FnMut() -> Verdict| {
        let t = Instant::now();
        let v = f();
        results.push((id, name, tol, budget, v, t.elapsed()));
    };
    timed(&mut results, 1, "lattice exactness", "exact", 30, &mut lattice_exactness);
    timed(&mut results, 2, "rationality oracle", "exact", 10, &mut rationality_oracle);
    timed(&mut results, 3, "descent vs oracle", "exact equality, 0 mismatches", 60, &mut descent_vs_oracle);
    timed(&mut results, 4, "blow-up invariance", "exact", 30, &mut blowup_invariance);
    timed(&mut results, 5, "generic formula consistency", "exact", 60, &mut generic_formula_consistency);
    timed(&mut results, 6, "relative degeneration", "exact", 60, &mut relative_degeneration);
    timed(&mut results, 7, "e-value coherence", "exact", 60, &mut e_coherence);
    timed(&mut results, 8, "census and verdict soundness", "0 discrepancies, >= 1 forbidden", 900, &mut || census_and_towers(&mut towers));
    if let (Some(last), Some((_, t))) = (results.last_mut(), towers.as_ref()) {
        last.5 = last.5.saturating_sub(*t);
    }
    let (v, t) = towers.take().unwrap_or((Err("census did not run".into()), Duration::ZERO));
    results.push((9, "cycle towers", "monotone, brute-force minimal", 300, v, t));
    timed(&mut results, 10, "CLI round trip and oracle reruns", "byte-stable, 0 discrepancies", 60, &mut cli_round_trip);

    let mut failed = 0;
    println!();
    for (id, name, tol, budget, verdict, elapsed) in results {
        let over = elapsed > Duration::from_secs(budget);
        let (tag, msg) = match (&verdict, over) {
            (Ok(m), false) => ("PASS", m.clone()),
            (Ok(m), true) => ("FAIL", format!("{m}; over the time budget")),
            (Err(m), _) => ("FAIL", m.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {tag} | {name} | tolerance: {tol} | {:.1} s of {budget} s | {msg}",
            elapsed.as_secs_f64()
        );
    }
    println!("\nacceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
