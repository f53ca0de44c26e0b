//! Command line front end: argument parsing, dispatch and exit codes.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blowup::{blowup_edge, blowup_vertex};
use crate::cohomology::{Engine, GenericStructure};
use crate::cycle::{q, IntCycle, RatCycle, Q};
use crate::error::{Error, Result};
use crate::hyperelliptic::census::{enumerate_instances, CensusParams, ModeFilter};
use crate::hyperelliptic::{classify_pair, classify_single, with_towers, Status};
use crate::io::{self, report, GraphFile, RawGraphFile};
use crate::lattice::ResolutionGraph;
use crate::opt::Limits;
use crate::relative::{h1_z1, relative_dominant, relative_eca_dim, relative_h1, SplitConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "sing", version, about = "Exact invariants of resolution graphs with generic analytic structure")]
pub struct Cli {
    /// Print a JSON report document.
    #[arg(long, global = true)]
    pub json: bool,
    /// Recompute with brute-force oracles and fail (exit 4) on any discrepancy.
    #[arg(long, global = true)]
    pub oracle: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate a graph file.
    Validate { graph: PathBuf },
    /// Z_K, determinant, dual basis, rationality, p_g, maximal ideal cycle.
    Invariants { graph: PathBuf },
    /// χ of a cycle.
    Chi {
        graph: PathBuf,
        #[arg(long)]
        cycle: String,
    },
    /// h¹(O_Z), or with `--chern c` h¹ of the natural bundle of Chern class c.
    H1 {
        graph: PathBuf,
        #[arg(long)]
        cycle: String,
        #[arg(long, allow_hyphen_values = true)]
        chern: Option<String>,
    },
    /// e_Z(J) for a vertex set J.
    Ez {
        graph: PathBuf,
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        vertices: String,
    },
    /// Membership of the class l' (`--chern`) in the analytic semigroup.
    Semigroup {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        chern: String,
    },
    /// The cohomological cycle of Z.
    Cohcycle {
        graph: PathBuf,
        #[arg(long)]
        cycle: String,
    },
    /// Blow up an edge (`a,b`) or a generic point of a vertex.
    Blowup {
        graph: PathBuf,
        #[arg(long, conflicts_with = "vertex", required_unless_present = "vertex")]
        edge: Option<String>,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Relative h¹ and dominance for a split V = V₁ ⊔ V₂ and Chern class l'.
    Relative {
        graph: PathBuf,
        /// Vertices of V₁, comma separated.
        #[arg(long)]
        split: String,
        #[arg(long, allow_hyphen_values = true)]
        chern: String,
        #[arg(long)]
        cycle: String,
    },
    /// g¹₂ verdict for the class -E*_u'-E*_u'' (`--pair`) or -2E*_u (`--single`).
    Classify {
        graph: PathBuf,
        #[arg(long)]
        cycle: String,
        #[arg(long, conflicts_with = "single", required_unless_present = "single")]
        pair: Option<String>,
        #[arg(long)]
        single: Option<String>,
        /// Attach cycle towers.
        #[arg(long)]
        towers: bool,
    },
    /// Search small trees for classified instances.
    Enumerate {
        #[arg(long, default_value_t = 1)]
        min_vertices: usize,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        status: Option<StatusArg>,
        #[arg(long, default_value_t = -5, allow_negative_numbers = true)]
        euler_min: i64,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        euler_max: i64,
        #[arg(long, default_value_t = 4)]
        coeff_cap: i64,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        /// Report at most this many instances (counts are always complete).
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        towers: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StatusArg {
    Forbidden,
    Guaranteed,
    Undetermined,
}

impl From<StatusArg> for Status {
    fn from(s: StatusArg) -> Status {
        match s {
            StatusArg::Forbidden => Status::Forbidden,
            StatusArg::Guaranteed => Status::Guaranteed,
            StatusArg::Undetermined => Status::Undetermined,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Pair,
    Single,
    Both,
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchTooLarge { .. } | Error::StepCapReached(_) | Error::Overflow(_) => EXIT_GUARD,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    run(&cli, &Limits::from_env())
}

pub fn run(cli: &Cli, limits: &Limits) -> Outcome {
    match execute(cli, limits) {
        Ok(r) => {
            let agrees = r.oracle.as_ref().is_none_or(|o| o["agrees"] == json!(true));
            let stdout = if cli.json {
                let doc = report::document(r.operation, r.graph.as_ref(), r.inputs, r.values, &r.trace, r.oracle);
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serialisable"))
            } else {
                let mut s = report::render_text(&r.values);
                if let Some(o) = &r.oracle {
                    s.push_str(&report::render_text(&json!({ "oracle": o })));
                }
                s
            };
            let (code, stderr) = if agrees {
                (EXIT_OK, String::new())
            } else {
                (EXIT_ORACLE, "error: oracle discrepancy\n".to_string())
            };
            Outcome { code, stdout, stderr }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Run {
    operation: &'static str,
    graph: Option<ResolutionGraph>,
    inputs: Value,
    values: Value,
    trace: Vec<String>,
    oracle: Option<Value>,
}

fn load(path: &Path) -> Result<GraphFile> {
    let doc = std::fs::read_to_string(path)?;
    io::parse_graph_file(&doc)
}

/// A named cycle of the file, `0`, or inline `id=int,...`.
pub fn cycle_arg(f: &GraphFile, s: &str) -> Result<IntCycle> {
    let g = &f.graph;
    if s.trim() == "0" {
        return Ok(IntCycle::zero(g.len()));
    }
    if s.contains('=') {
        let mut m = std::collections::BTreeMap::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("expected `id=int`, found `{part}`")))?;
            let v: i64 =
                v.trim().parse().map_err(|_| Error::InvalidInput(format!("`{v}` is not an integer")))?;
            m.insert(k.trim().to_string(), v);
        }
        return g.int_cycle(&m);
    }
    f.cycles.get(s).cloned().ok_or_else(|| Error::InvalidInput(format!("no cycle named `{s}` in the file")))
}

/// `l'` given as `0`, as `E*`-coordinates `id=a,...` (`a` integer or
/// `p/q`, meaning `Σ a_v E*_v`), or as a named integer cycle.
pub fn class_arg(f: &GraphFile, s: &str) -> Result<RatCycle> {
    let g = &f.graph;
    if s.trim() == "0" {
        return Ok(RatCycle::zero(g.len()));
    }
    if s.contains('=') {
        let mut a = vec![q(0); g.len()];
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("expected `id=value`, found `{part}`")))?;
            let v: Q =
                v.trim().parse().map_err(|_| Error::InvalidInput(format!("`{v}` is not a rational number")))?;
            a[g.vertex(k.trim())?] = v;
        }
        return Ok(g.from_dual_coords(&a));
    }
    Ok(cycle_arg(f, s)?.to_rat())
}

fn vertices_arg(g: &ResolutionGraph, s: &str) -> Result<Vec<usize>> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(|p| g.vertex(p.trim())).collect()
}

fn two_vertices(g: &ResolutionGraph, s: &str) -> Result<(usize, usize)> {
    match vertices_arg(g, s)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => Err(Error::InvalidInput(format!("expected two comma-separated vertices, found `{s}`"))),
    }
}

type Computed = (Value, Vec<String>);

/// Runs `f` with the pruned engine and, under `--oracle`, again with the
/// exhaustive engine, comparing the value trees.
fn with_engines(
    g: &ResolutionGraph,
    limits: &Limits,
    oracle: bool,
    f: impl Fn(&GenericStructure) -> Result<Computed>,
) -> Result<(Value, Vec<String>, Option<Value>)> {
    let s = GenericStructure::with_options(g.clone(), *limits, Engine::Pruned);
    let (values, trace) = f(&s)?;
    if !oracle {
        return Ok((values, trace, None));
    }
    let o = GenericStructure::with_options(g.clone(), *limits, Engine::Exhaustive);
    let (again, _) = f(&o)?;
    let diffs = report::differences(&values, &again);
    let o = json!({"engine": "exhaustive", "agrees": diffs.is_empty(), "discrepancies": diffs});
    Ok((values, trace, Some(o)))
}

fn execute(cli: &Cli, limits: &Limits) -> Result<Run> {
    let oracle = cli.oracle;
    match &cli.command {
        Command::Validate { graph } => {
            let f = load(graph)?;
            let g = &f.graph;
            let form = g.form();
            let values = json!({
                "valid": true,
                "vertices": g.len(),
                "edges": g.edges().len(),
                "determinant": form.det.to_string(),
                "discriminant_order": g.discriminant_order().to_string(),
                "cycles": f.cycles.iter().map(|(k, c)| (k.clone(), report::int_cycle(g, c))).collect::<serde_json::Map<_, _>>(),
            });
            let oracle = oracle.then(|| {
                let n = g.len();
                let ok = (0..n).all(|i| {
                    (0..n).all(|j| {
                        let s: Q = (0..n).map(|k| q(form.matrix[i][k]) * &form.inverse[k][j]).sum();
                        s == q((i == j) as i64)
                    })
                });
                json!({"engine": "exact inverse check", "agrees": ok, "discrepancies": if ok { vec![] } else { vec!["/inverse"] }})
            });
            Ok(Run {
                operation: "validate",
                inputs: json!({"file": graph.display().to_string()}),
                graph: Some(f.graph),
                values,
                trace: vec!["leading principal minors alternate in sign".into()],
                oracle,
            })
        }
        Command::Invariants { graph } => {
            let f = load(graph)?;
            let g = &f.graph;
            let (values, trace, o) = with_engines(g, limits, oracle, |s| {
                let rational = s.is_rational()?;
                let mic = if rational { Value::Null } else { report::int_cycle(g, &s.maximal_ideal_cycle()?) };
                let duals: serde_json::Map<String, Value> =
                    (0..g.len()).map(|v| (g.id(v).to_string(), report::rat_cycle(g, &g.dual(v)))).collect();
                Ok((
                    json!({
                        "vertices": g.len(),
                        "determinant": g.form().det.to_string(),
                        "discriminant_order": g.discriminant_order().to_string(),
                        "canonical_cycle": report::rat_cycle(g, g.canonical_cycle()),
                        "chi_canonical": report::rational(&g.chi(g.canonical_cycle())),
                        "duals": duals,
                        "min_chi_positive": s.min_chi_positive()?,
                        "geometric_genus": s.geometric_genus()?,
                        "rational": rational,
                        "maximal_ideal_cycle": mic,
                    }),
                    vec![
                        "p_g = 1 - min_{l>0} χ(l)".to_string(),
                        "rational iff min_{l>0} χ(l) >= 1".to_string(),
                    ],
                ))
            })?;
            Ok(Run { operation: "invariants", inputs: json!({"file": graph.display().to_string()}), graph: Some(f.graph), values, trace, oracle: o })
        }
        Command::Chi { graph, cycle } => {
            let f = load(graph)?;
            let z = cycle_arg(&f, cycle)?;
            let g = &f.graph;
            let chi = g.chi_int(&z);
            let oracle = oracle.then(|| {
                let direct = g.chi(&z.to_rat());
                let ok = direct == q(chi);
                json!({"engine": "rational formula", "agrees": ok, "discrepancies": if ok { vec![] } else { vec!["/chi"] }})
            });
            Ok(Run {
                operation: "chi",
                inputs: json!({"cycle": report::int_cycle(g, &z)}),
                values: json!({"chi": chi}),
                trace: vec!["χ(l) = -(l, l - Z_K)/2".into()],
                graph: Some(f.graph),
                oracle,
            })
        }
        Command::H1 { graph, cycle, chern } => {
            let f = load(graph)?;
            let z = cycle_arg(&f, cycle)?;
            let l = chern.as_deref().map(|c| class_arg(&f, c)).transpose()?;
            let g = &f.graph;
            let (values, trace, o) = with_engines(g, limits, oracle, |s| {
                let r = match &l {
                    Some(c) => s.h0_natural_via_rr(&z, &-c)?,
                    None => {
                        let h1 = s.h1_generic_or_zero(&z)?;
                        s.h0_via_rr(&z, &RatCycle::zero(g.len()), h1, "h1 = 1 - min_{0<l<=Z} χ(l) per component of |Z|; h0 = χ(Z) + h1")?
                    }
                };
                Ok((
                    json!({"h1": r.h1, "h0": r.h0, "chi": report::rational(&r.chi_o), "degree": report::rational(&r.degree)}),
                    vec![r.formula_trace],
                ))
            })?;
            let mut inputs = json!({"cycle": report::int_cycle(g, &z)});
            if let Some(l) = &l {
                inputs["chern"] = report::rat_cycle(g, l);
            }
            Ok(Run { operation: "h1", inputs, graph: Some(f.graph), values, trace, oracle: o })
        }
        Command::Ez { graph, cycle, vertices } => {
            let f = load(graph)?;
            let z = cycle_arg(&f, cycle)?;
            let g = &f.graph;
            let j = vertices_arg(g, vertices)?;
            let (values, trace, o) = with_engines(g, limits, oracle, |s| {
                let e = s.e_z(&z, &j)?;
                let h1 = s.h1_generic_or_zero(&z)?;
                Ok((json!({"e": e, "h1": h1, "h1_complement": h1 - e}), vec!["e_Z(J) = h1(O_Z) - h1(O_{Z|V-J})".into()]))
            })?;
            let ids: Vec<&str> = j.iter().map(|&v| g.id(v)).collect();
            Ok(Run {
                operation: "ez",
                inputs: json!({"cycle": report::int_cycle(g, &z), "vertices": ids}),
                graph: Some(f.graph),
                values,
                trace,
                oracle: o,
            })
        }
        Command::Semigroup { graph, chern } => {
            let f = load(graph)?;
            let l = class_arg(&f, chern)?;
            let g = &f.graph;
            let (values, trace, o) = with_engines(g, limits, oracle, |s| {
                Ok((
                    json!({"member": s.semigroup_member(&l)?, "lipman_cone": g.in_lipman_cone(&l)}),
                    vec!["member iff l' = 0 or χ(l') < χ(l'+l) for all l > 0".into()],
                ))
            })?;
            Ok(Run { operation: "semigroup", inputs: json!({"chern": report::rat_cycle(g, &l)}), graph: Some(f.graph), values, trace, oracle: o })
        }
        Command::Cohcycle { graph, cycle } => {
            let f = load(graph)?;
            let z = cycle_arg(&f, cycle)?;
            let g = &f.graph;
            let (values, trace, o) = with_engines(g, limits, oracle, |s| {
                let c = match s.engine() {
                    Engine::Pruned => s.cohomological_cycle(&z)?,
                    Engine::Exhaustive => s.cohomological_cycle_exhaustive(&z)?,
                };
                Ok((
                    json!({"cohomological_cycle": report::int_cycle(g, &c), "h1": s.h1_generic_or_zero(&z)?}),
                    vec!["least 0 <= C <= Z with h1(O_C) = h1(O_Z)".into()],
                ))
            })?;
            Ok(Run { operation: "cohcycle", inputs: json!({"cycle": report::int_cycle(g, &z)}), graph: Some(f.graph), values, trace, oracle: o })
        }
        Command::Blowup { graph, edge, vertex } => {
            let f = load(graph)?;
            let g = &f.graph;
            let (b, inputs) = match (edge, vertex) {
                (Some(e), _) => {
                    let (a, c) = two_vertices(g, e)?;
                    (blowup_edge(g, a, c)?, json!({"edge": [g.id(a), g.id(c)]}))
                }
                (None, Some(v)) => {
                    let v = g.vertex(v)?;
                    (blowup_vertex(g, v)?, json!({"vertex": g.id(v)}))
                }
                (None, None) => return Err(Error::InvalidInput("give --edge or --vertex".into())),
            };
            let h = &b.graph;
            let pulled: std::collections::BTreeMap<String, IntCycle> =
                f.cycles.iter().map(|(k, c)| (k.clone(), b.pullback(c))).collect();
            let text = io::emit_raw(&RawGraphFile {
                graph: h.to_raw(),
                cycles: pulled.iter().map(|(k, c)| (k.clone(), h.cycle_map(c))).collect(),
            });
            let values = json!({
                "new_vertex": h.id(b.new_vertex),
                "graph_file": text,
                "pullbacks": pulled.iter().map(|(k, c)| (k.clone(), report::int_cycle(h, c))).collect::<serde_json::Map<_, _>>(),
            });
            let oracle = oracle.then(|| {
                let mut bad = Vec::new();
                let zk = &b.pullback_rat(g.canonical_cycle()) - &b.new_unit().to_rat();
                if &zk != h.canonical_cycle() {
                    bad.push("/canonical_cycle".to_string());
                }
                for (k, c) in &f.cycles {
                    let p = &pulled[k];
                    if h.chi_int(p) != g.chi_int(c) || h.pairing_int(p, p) != g.pairing_int(c, c) {
                        bad.push(format!("/pullbacks/{k}"));
                    }
                }
                json!({"engine": "pullback identities", "agrees": bad.is_empty(), "discrepancies": bad})
            });
            Ok(Run { operation: "blowup", inputs, graph: Some(f.graph), values, trace: vec!["π*E_v = E_v + Σ E_new over centres on E_v".into()], oracle })
        }
        Command::Relative { graph, split, chern, cycle } => {
            let f = load(graph)?;
            let g = &f.graph;
            let z = cycle_arg(&f, cycle)?;
            let l = class_arg(&f, chern)?;
            let v1 = vertices_arg(g, split)?;
            let cfg = SplitConfig::new(g, &v1, z.clone())?;
            let (values, trace, o) = with_engines(g, limits, oracle, |s| {
                let inner = h1_z1(s, &cfg, &l)?;
                let d = relative_dominant(s, &cfg, &l)?;
                Ok((
                    json!({
                        "h1_z1": inner,
                        "relative_h1": relative_h1(s, &cfg, &l)?,
                        "dominant": d.holds,
                        "violation": d.violation.as_ref().map(|m| report::int_cycle(g, m)),
                        "eca_dimension": relative_eca_dim(s, &cfg, &l, inner)?,
                    }),
                    vec!["h1(Z, L) = χ(-l') - min_{0<=l<=Z} (χ(-l'+l) - h1((Z-l)_1, L(-l)))".into()],
                ))
            })?;
            let ids: Vec<&str> = v1.iter().map(|&v| g.id(v)).collect();
            Ok(Run {
                operation: "relative",
                inputs: json!({"split": ids, "chern": report::rat_cycle(g, &l), "cycle": report::int_cycle(g, &z)}),
                graph: Some(f.graph),
                values,
                trace,
                oracle: o,
            })
        }
        Command::Classify { graph, cycle, pair, single, towers } => {
            let f = load(graph)?;
            let g = &f.graph;
            let z = cycle_arg(&f, cycle)?;
            let mode = match (pair, single) {
                (Some(p), _) => Ok(two_vertices(g, p)?),
                (None, Some(u)) => Err(g.vertex(u)?),
                (None, None) => return Err(Error::InvalidInput("give --pair or --single".into())),
            };
            let (values, trace, o) = with_engines(g, limits, oracle, |s| {
                let r = match mode {
                    Ok((a, b)) => classify_pair(s, &z, a, b)?,
                    Err(u) => classify_single(s, &z, u)?,
                };
                let r = if *towers { with_towers(s, r)? } else { r };
                Ok((report::g12(g, &r), vec!["e_Z(J) = h1(O_Z) - h1(O_{Z|V-J})".into()]))
            })?;
            Ok(Run { operation: "classify", inputs: json!({"cycle": report::int_cycle(g, &z)}), graph: Some(f.graph), values, trace, oracle: o })
        }
        Command::Enumerate { min_vertices, max_vertices, status, euler_min, euler_max, coeff_cap, mode, limit, towers } => {
            let params = CensusParams {
                min_vertices: *min_vertices,
                max_vertices: *max_vertices,
                euler_min: *euler_min,
                euler_max: *euler_max,
                coeff_cap: *coeff_cap,
                target: status.map(Status::from),
                modes: match mode {
                    ModeArg::Pair => ModeFilter::Pair,
                    ModeArg::Single => ModeFilter::Single,
                    ModeArg::Both => ModeFilter::Both,
                },
                verify: true,
                towers: *towers,
            };
            let c = enumerate_instances(&params, limits)?;
            let shown = limit.unwrap_or(usize::MAX);
            let instances: Vec<Value> = c
                .instances
                .iter()
                .take(shown)
                .map(|i| json!({"key": i.key, "graph": report::graph(&i.graph), "report": report::g12(&i.graph, &i.report), "verified": i.verified}))
                .collect();
            let counts: serde_json::Map<String, Value> =
                c.counts.iter().map(|(s, n)| (s.as_str().to_string(), json!(n))).collect();
            let values = json!({
                "shapes": c.shapes,
                "decorated_trees": c.decorated,
                "negative_definite": c.negative_definite,
                "canonical_at_least_reduced": c.canonical_ge_reduced,
                "cycles_tested": c.cycles_tested,
                "regular_cycles": c.regular_cycles,
                "counts": counts,
                "instances_total": c.instances.len(),
                "instances": instances,
            });
            let ok = c.discrepancies == 0;
            let oracle_v = json!({"engine": "exhaustive", "agrees": ok, "discrepancies": c.discrepancies});
            Ok(Run {
                operation: "enumerate",
                graph: None,
                inputs: json!({
                    "min_vertices": min_vertices, "max_vertices": max_vertices,
                    "euler_min": euler_min, "euler_max": euler_max, "coeff_cap": coeff_cap,
                    "status": params.target.map(|s| s.as_str()), "mode": format!("{mode:?}").to_lowercase(),
                }),
                values,
                trace: vec!["every emitted report recomputed with the exhaustive engine".into()],
                oracle: (oracle || !ok).then_some(oracle_v),
            })
        }
    }
}
