//! Exhaustive desk-scale verification sweeps: structural graph classifiers
//! against the homological verdicts, the weighted-pentagon balancing
//! criterion, the bridged-pentagon conditions, unmixed-equals-CM sampling on
//! Woodroofe graphs, and the weighted-suspension family where the sequential
//! property breaks.

use crate::bits::VertexSet;
use crate::cm::{is_cm_via_polarization, is_scm_via_polarization, CmEngine};
use crate::error::{Error, Result};
use crate::graph::{cycle_graph, two_pentagons_bridged, Graph, WeightFunction};
use crate::homology::FieldSpec;
use crate::iso::enumerate_graphs;
use crate::lattice::is_unmixed;
use crate::monomial::{edge_ideal, weighted_edge_ideal, Monomial, MonomialIdeal};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// Knobs shared by all verification sweeps.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub field: FieldSpec,
    /// Also evaluate every visited instance over F2 and count disagreements.
    pub cross_field: bool,
    pub seed: u64,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            field: FieldSpec::Rationals,
            cross_field: false,
            seed: 0,
            jobs: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: String,
    pub weights: String,
    pub detail: String,
}

/// Result of one verification run. `elapsed_ms` is the only field allowed to
/// differ between runs with identical inputs and seed.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationOutcome {
    pub name: String,
    pub passed: bool,
    pub instances_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub field_sensitive_cases: u64,
    pub seed: u64,
    pub notes: Vec<String>,
}

impl VerificationOutcome {
    fn finish(
        name: &str,
        instances: u64,
        counterexamples: Vec<Counterexample>,
        field_sensitive: u64,
        seed: u64,
        notes: Vec<String>,
        started: Instant,
    ) -> VerificationOutcome {
        VerificationOutcome {
            name: name.to_string(),
            passed: counterexamples.is_empty(),
            instances_checked: instances,
            counterexamples,
            elapsed_ms: started.elapsed().as_millis() as u64,
            field_sensitive_cases: field_sensitive,
            seed,
            notes,
        }
    }
}

fn graph_str(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("{u}-{v}"))
        .collect();
    format!("n={}; edges={}", g.n(), edges.join(","))
}

fn weights_str(g: &Graph, w: &WeightFunction) -> String {
    let parts: Vec<String> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| format!("{u}-{v}:{}", w.get(i)))
        .collect();
    parts.join(",")
}

fn with_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
            .install(f)
    }
}

/// All weight vectors over `edge_count` edges with entries `1..=wmax`, in
/// lexicographic order starting from all ones (last edge fastest).
fn all_weightings(edge_count: usize, wmax: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![1u32; edge_count];
    loop {
        out.push(current.clone());
        let mut k = edge_count;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if current[k] < wmax {
                current[k] += 1;
                break;
            }
            current[k] = 1;
        }
    }
}

/// The weighting that doubles inside an induced subgraph: 2 on edges with
/// both ends in `inside`, 1 elsewhere.
pub fn lemma25_witness_weight(g: &Graph, inside: VertexSet) -> WeightFunction {
    let weights: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if inside.contains(u) && inside.contains(v) {
                2
            } else {
                1
            }
        })
        .collect();
    WeightFunction::new(g, weights).expect("weights 1 and 2 are valid")
}

// ---------------------------------------------------------------------------
// closed-form checkers
// ---------------------------------------------------------------------------

/// Cycle positions `v` of a weighted 5-cycle (weights listed in cycle order,
/// `weights[i]` on the edge from position i to i+1) from which the weight
/// sequence reads `a,b,c,d,a` with `a <= b >= c <= d >= a`, in either
/// traversal direction. The constraint chain is invariant under reversal, so
/// one direction suffices; both are checked anyway.
fn pentagon_balancing_positions(weights: &[u32; 5]) -> Vec<usize> {
    let mut out = Vec::new();
    for v in 0..5 {
        let fwd: Vec<u32> = (0..5).map(|k| weights[(v + k) % 5]).collect();
        let bwd: Vec<u32> = (0..5).map(|k| weights[(v + 4 - k) % 5]).collect();
        if balances(&fwd) || balances(&bwd) {
            out.push(v);
        }
    }
    out
}

fn balances(s: &[u32]) -> bool {
    s[0] == s[4] && s[0] <= s[1] && s[1] >= s[2] && s[2] <= s[3] && s[3] >= s[0]
}

fn clockwise_only_balances(weights: &[u32; 5]) -> bool {
    (0..5).any(|v| {
        let fwd: Vec<u32> = (0..5).map(|k| weights[(v + k) % 5]).collect();
        balances(&fwd)
    })
}

/// Extracts the cycle order of a graph that must be a plain 5-cycle and the
/// weights along it.
fn pentagon_weights(g: &Graph, w: &WeightFunction) -> Result<(Vec<usize>, [u32; 5])> {
    if g.n() != 5 || g.edge_count() != 5 || (0..5).any(|v| g.degree(v) != 2) {
        return Err(Error::WrongShape(
            "expected a 5-cycle (5 vertices, all of degree 2)".into(),
        ));
    }
    let cycles = g.chordless_cycles(4)?;
    if cycles.len() != 1 || cycles[0].len() != 5 {
        return Err(Error::WrongShape("expected a single 5-cycle".into()));
    }
    let order = cycles[0].clone();
    let mut weights = [0u32; 5];
    for i in 0..5 {
        weights[i] = w
            .of_edge(g, order[i], order[(i + 1) % 5])
            .expect("consecutive cycle vertices are adjacent");
    }
    Ok((order, weights))
}

/// Balancing-vertex criterion for a weighted 5-cycle: Cohen-Macaulay iff some
/// vertex reads `a,b,c,d,a` with `a <= b >= c <= d >= a`.
pub fn c5_balancing_cm(g: &Graph, w: &WeightFunction) -> Result<bool> {
    let (_, weights) = pentagon_weights(g, w)?;
    Ok(!pentagon_balancing_positions(&weights).is_empty())
}

/// Conditions characterizing Cohen-Macaulayness of the weighted bridged
/// pentagons (the fixed labeling of [`two_pentagons_bridged`]):
/// 1. the bridge weight is at most each of the four pentagon weights adjacent
///    to it,
/// 2. both weighted pentagons satisfy the balancing criterion,
/// 3. each pentagon has a balancing vertex among the bridge vertex and the
///    two vertices opposite it.
pub fn prop_h_conditions(g: &Graph, w: &WeightFunction) -> Result<bool> {
    let h = two_pentagons_bridged();
    if g.n() != h.n() || g.edges() != h.edges() {
        return Err(Error::WrongShape(
            "expected the bridged-pentagon graph in its fixed labeling".into(),
        ));
    }
    let bridge = w.of_edge(g, 0, 5).unwrap();
    let adjacent = [
        w.of_edge(g, 0, 1).unwrap(),
        w.of_edge(g, 0, 4).unwrap(),
        w.of_edge(g, 5, 6).unwrap(),
        w.of_edge(g, 5, 9).unwrap(),
    ];
    if bridge > *adjacent.iter().min().unwrap() {
        return Ok(false);
    }
    // pentagon cycle orders fixed by the construction
    let x_cycle = [0usize, 1, 2, 3, 4];
    let y_cycle = [5usize, 6, 7, 8, 9];
    for cycle in [x_cycle, y_cycle] {
        let mut weights = [0u32; 5];
        for i in 0..5 {
            weights[i] = w.of_edge(g, cycle[i], cycle[(i + 1) % 5]).unwrap();
        }
        let positions = pentagon_balancing_positions(&weights);
        if positions.is_empty() {
            return Ok(false); // condition (2)
        }
        // condition (3): a balancing vertex among the bridge vertex and the
        // two opposite ones, i.e. cycle positions 0, 2, 3
        if !positions.iter().any(|p| [0, 2, 3].contains(p)) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// per-graph all-weights verdicts
// ---------------------------------------------------------------------------

/// Outcome of deciding "(sequentially) Cohen-Macaulay for every weighting".
#[derive(Clone, Debug)]
pub struct AllWeightsVerdict {
    /// The structural classifier's answer.
    pub holds_for_all: bool,
    /// A weighting falsifying the property, when one exists.
    pub certificate: Option<WeightFunction>,
    /// Weightings actually evaluated.
    pub checked: u64,
    /// Engine disagreements with the structural claim (empty in a correct
    /// build; the sweeps surface them as counterexamples).
    pub contradictions: Vec<(WeightFunction, String)>,
}

const CERTIFY_BUDGET: u64 = 1 << 20;

fn certify_scan(
    g: &Graph,
    wmax: u32,
    engine: &CmEngine,
    field: FieldSpec,
    structural: bool,
    scm: bool,
) -> Result<AllWeightsVerdict> {
    let total = (wmax as u64).saturating_pow(g.edge_count() as u32);
    if total > CERTIFY_BUDGET {
        return Err(Error::Budget(format!(
            "{total} weightings exceed the certification budget of {CERTIFY_BUDGET}"
        )));
    }
    let mut checked = 0u64;
    let mut certificate = None;
    let mut contradictions = Vec::new();
    for wvec in all_weightings(g.edge_count(), wmax) {
        let w = WeightFunction::new(g, wvec).expect("scan weights valid");
        let ideal = weighted_edge_ideal(g, &w);
        let ok = if scm {
            engine.is_scm_ideal(&ideal, field)?.0
        } else {
            engine.is_cm_ideal(&ideal, field)?.0
        };
        checked += 1;
        if !ok {
            certificate = Some(w.clone());
            if structural {
                contradictions.push((
                    w,
                    format!(
                        "classifier promises every weighting, but this one is not {}",
                        if scm { "sequentially CM" } else { "CM" }
                    ),
                ));
            }
            break;
        }
    }
    if !structural && certificate.is_none() {
        contradictions.push((
            WeightFunction::all_ones(g),
            "classifier rejects the graph, yet every weighting passed".into(),
        ));
    }
    Ok(AllWeightsVerdict {
        holds_for_all: structural,
        certificate,
        checked,
        contradictions,
    })
}

/// Is `I(G_w)` Cohen-Macaulay for every weight function? Structurally: iff
/// every component is a clique. With `certify`, sweeps all weightings with
/// entries `1..=wmax` and records any disagreement; without it, a negative
/// answer is certified by doubling an induced 3-vertex path.
pub fn cm_for_all_weights(
    g: &Graph,
    wmax: u32,
    certify: bool,
    engine: &CmEngine,
    field: FieldSpec,
) -> Result<AllWeightsVerdict> {
    if wmax < 2 {
        return Err(Error::Budget("wmax must be at least 2".into()));
    }
    let structural = g.is_disjoint_union_of_cliques();
    if certify {
        return certify_scan(g, wmax, engine, field, structural, false);
    }
    if structural {
        return Ok(AllWeightsVerdict {
            holds_for_all: true,
            certificate: None,
            checked: 0,
            contradictions: Vec::new(),
        });
    }
    let (a, m, b) = g.find_induced_p3().expect("non-clique-union has an induced path");
    let w = lemma25_witness_weight(g, VertexSet::from_iter([a, m, b]));
    let ideal = weighted_edge_ideal(g, &w);
    let ok = engine.is_cm_ideal(&ideal, field)?.0;
    let mut contradictions = Vec::new();
    if ok {
        contradictions.push((
            w.clone(),
            "doubling an induced 3-path should break Cohen-Macaulayness".into(),
        ));
    }
    Ok(AllWeightsVerdict {
        holds_for_all: false,
        certificate: Some(w),
        checked: 1,
        contradictions,
    })
}

/// Is `I(G_w)` sequentially Cohen-Macaulay for every weight function?
/// Structurally: iff every chordless cycle has length 3 or 5. Without
/// `certify`, a negative answer is certified by doubling a chordless cycle of
/// disallowed length.
pub fn scm_for_all_weights(
    g: &Graph,
    wmax: u32,
    certify: bool,
    engine: &CmEngine,
    field: FieldSpec,
) -> Result<AllWeightsVerdict> {
    if wmax < 2 {
        return Err(Error::Budget("wmax must be at least 2".into()));
    }
    let structural = g.is_woodroofe();
    if certify {
        return certify_scan(g, wmax, engine, field, structural, true);
    }
    if structural {
        return Ok(AllWeightsVerdict {
            holds_for_all: true,
            certificate: None,
            checked: 0,
            contradictions: Vec::new(),
        });
    }
    let bad = g
        .chordless_cycles(4)?
        .into_iter()
        .find(|c| c.len() != 5)
        .expect("non-Woodroofe graph has a chordless cycle of disallowed length");
    let w = lemma25_witness_weight(g, VertexSet::from_iter(bad.iter().copied()));
    let ideal = weighted_edge_ideal(g, &w);
    let ok = engine.is_scm_ideal(&ideal, field)?.0;
    let mut contradictions = Vec::new();
    if ok {
        contradictions.push((
            w.clone(),
            format!(
                "doubling the chordless {}-cycle {:?} should break the sequential property",
                bad.len(),
                bad
            ),
        ));
    }
    Ok(AllWeightsVerdict {
        holds_for_all: false,
        certificate: Some(w),
        checked: 1,
        contradictions,
    })
}

// ---------------------------------------------------------------------------
// verification sweeps
// ---------------------------------------------------------------------------

struct ClassOutcome {
    counterexamples: Vec<Counterexample>,
    weightings: u64,
    sensitive: u64,
}

/// How a single class gets verified inside a theorem sweep.
enum Mode {
    Exhaustive,
    Witness,
    Sampled(u64),
}

fn sweep_class(
    g: &Graph,
    structural: bool,
    scm: bool,
    wmax: u32,
    mode: Mode,
    engine: &CmEngine,
    opts: &VerifyOptions,
) -> Result<ClassOutcome> {
    let mut out = ClassOutcome {
        counterexamples: Vec::new(),
        weightings: 0,
        sensitive: 0,
    };
    let push = |w: &WeightFunction, detail: String, out: &mut ClassOutcome| {
        out.counterexamples.push(Counterexample {
            graph: graph_str(g),
            weights: weights_str(g, w),
            detail,
        });
    };
    let run = |w: &WeightFunction, out: &mut ClassOutcome| -> Result<bool> {
        let ideal = weighted_edge_ideal(g, w);
        let ok = if scm {
            engine.is_scm_ideal(&ideal, opts.field)?.0
        } else {
            engine.is_cm_ideal(&ideal, opts.field)?.0
        };
        out.weightings += 1;
        if opts.cross_field {
            let other = match opts.field {
                FieldSpec::Rationals => FieldSpec::Prime(2),
                FieldSpec::Prime(_) => FieldSpec::Rationals,
            };
            let ok2 = if scm {
                engine.is_scm_ideal(&ideal, other)?.0
            } else {
                engine.is_cm_ideal(&ideal, other)?.0
            };
            if ok2 != ok {
                out.sensitive += 1;
            }
        }
        Ok(ok)
    };
    let property = if scm { "sequentially CM" } else { "CM" };
    match mode {
        Mode::Exhaustive => {
            let total = (wmax as u64).saturating_pow(g.edge_count() as u32);
            if total > CERTIFY_BUDGET {
                return Err(Error::Budget(format!(
                    "exhaustive scan of {total} weightings is over budget"
                )));
            }
            let mut found_failure = false;
            for wvec in all_weightings(g.edge_count(), wmax) {
                let w = WeightFunction::new(g, wvec).expect("scan weights valid");
                let ok = run(&w, &mut out)?;
                if !ok {
                    found_failure = true;
                    if structural {
                        push(
                            &w,
                            format!("classifier says every weighting is {property}, this one is not"),
                            &mut out,
                        );
                    }
                    break;
                }
            }
            if !structural && !found_failure {
                push(
                    &WeightFunction::all_ones(g),
                    format!("classifier rejects the graph, yet all weightings are {property}"),
                    &mut out,
                );
            }
        }
        Mode::Witness => {
            let verdict = if scm {
                scm_for_all_weights(g, wmax, false, engine, opts.field)?
            } else {
                cm_for_all_weights(g, wmax, false, engine, opts.field)?
            };
            out.weightings += verdict.checked;
            for (w, detail) in verdict.contradictions {
                push(&w, detail, &mut out);
            }
        }
        Mode::Sampled(count) => {
            let mut samples: Vec<Vec<u32>> = vec![
                vec![1; g.edge_count()],
                vec![2; g.edge_count()],
            ];
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed_5a3e);
            while (samples.len() as u64) < count {
                let wvec: Vec<u32> = (0..g.edge_count())
                    .map(|_| rng.random_range(1..=wmax))
                    .collect();
                samples.push(wvec);
            }
            samples.sort_unstable();
            samples.dedup();
            for wvec in samples {
                let w = WeightFunction::new(g, wvec).expect("sample weights valid");
                let ok = run(&w, &mut out)?;
                if !ok {
                    push(
                        &w,
                        format!("classifier says every weighting is {property}, this sample is not"),
                        &mut out,
                    );
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn verify_thm(name: &str, n: usize, wmax: u32, scm: bool, opts: &VerifyOptions) -> Result<VerificationOutcome> {
    if n == 0 || n > 6 {
        return Err(Error::Budget(format!(
            "theorem sweeps cover 1..=6 vertices, got {n}"
        )));
    }
    if wmax < 2 {
        return Err(Error::Budget("wmax must be at least 2".into()));
    }
    let started = Instant::now();
    let graphs = enumerate_graphs(n)?;
    let engine = CmEngine::new();
    let results: Result<Vec<ClassOutcome>> = with_pool(opts.jobs, || {
        graphs
            .par_iter()
            .map(|g| {
                let structural = if scm {
                    g.is_woodroofe()
                } else {
                    g.is_disjoint_union_of_cliques()
                };
                let mode = if n <= 5 {
                    Mode::Exhaustive
                } else if !structural {
                    Mode::Witness
                } else if g.edge_count() <= 9 {
                    Mode::Exhaustive
                } else {
                    Mode::Sampled(64)
                };
                sweep_class(g, structural, scm, wmax, mode, &engine, opts)
            })
            .collect()
    });
    let results = results?;
    let mut counterexamples = Vec::new();
    let mut weightings = 0u64;
    let mut sensitive = 0u64;
    for r in results {
        counterexamples.extend(r.counterexamples);
        weightings += r.weightings;
        sensitive += r.sensitive;
    }
    let notes = vec![
        format!("n={n}"),
        format!("wmax={wmax}"),
        format!("classes={}", graphs.len()),
        format!("weightings_evaluated={weightings}"),
    ];
    Ok(VerificationOutcome::finish(
        name,
        graphs.len() as u64,
        counterexamples,
        sensitive,
        opts.seed,
        notes,
        started,
    ))
}

/// Every isomorphism class on exactly `n` vertices: the clique-union
/// classifier against the weight-exhaustive CM verdict (witness mode for
/// negatives at n = 6).
pub fn verify_thm_cm(n: usize, wmax: u32, opts: &VerifyOptions) -> Result<VerificationOutcome> {
    verify_thm("thm-cm", n, wmax, false, opts)
}

/// Every isomorphism class on exactly `n` vertices: the Woodroofe classifier
/// against the weight-exhaustive sequential verdict.
pub fn verify_thm_scm(n: usize, wmax: u32, opts: &VerifyOptions) -> Result<VerificationOutcome> {
    verify_thm("thm-scm", n, wmax, true, opts)
}

/// All `wmax^5` weightings of the 5-cycle: balancing-vertex formula against
/// the homology verdict. Also reports whether reading the cycle in one
/// direction only would have given the same answers.
pub fn verify_c5(wmax: u32, opts: &VerifyOptions) -> Result<VerificationOutcome> {
    if !(1..=3).contains(&wmax) {
        return Err(Error::Budget(format!("c5 sweep allows wmax 1..=3, got {wmax}")));
    }
    let started = Instant::now();
    let g = cycle_graph(5)?;
    let engine = CmEngine::new();
    let weightings = all_weightings(5, wmax);
    let results: Result<Vec<(Option<Counterexample>, bool, u64)>> = with_pool(opts.jobs, || {
        weightings
            .par_iter()
            .map(|wvec| {
                let w = WeightFunction::new(&g, wvec.clone()).expect("valid weights");
                let formula = c5_balancing_cm(&g, &w)?;
                let ideal = weighted_edge_ideal(&g, &w);
                let oracle = engine.is_cm_ideal(&ideal, opts.field)?.0;
                let mut sensitive = 0u64;
                if opts.cross_field {
                    let other = match opts.field {
                        FieldSpec::Rationals => FieldSpec::Prime(2),
                        FieldSpec::Prime(_) => FieldSpec::Rationals,
                    };
                    if engine.is_cm_ideal(&ideal, other)?.0 != oracle {
                        sensitive = 1;
                    }
                }
                let (_, cw) = {
                    let (_, weights) = pentagon_weights(&g, &w)?;
                    (weights, clockwise_only_balances(&weights))
                };
                let ce = (formula != oracle).then(|| Counterexample {
                    graph: graph_str(&g),
                    weights: weights_str(&g, &w),
                    detail: format!("balancing formula says {formula}, homology says {oracle}"),
                });
                Ok((ce, cw == oracle, sensitive))
            })
            .collect()
    });
    let results = results?;
    let counterexamples: Vec<Counterexample> =
        results.iter().filter_map(|(ce, _, _)| ce.clone()).collect();
    let cw_disagreements = results.iter().filter(|(_, cw_ok, _)| !cw_ok).count();
    let sensitive: u64 = results.iter().map(|(_, _, s)| s).sum();
    let notes = vec![
        format!("wmax={wmax}"),
        if cw_disagreements == 0 {
            format!(
                "clockwise-only reading agrees with the homology verdict on all {} weightings",
                results.len()
            )
        } else {
            format!("clockwise-only reading disagrees on {cw_disagreements} weightings")
        },
    ];
    Ok(VerificationOutcome::finish(
        "c5",
        results.len() as u64,
        counterexamples,
        sensitive,
        opts.seed,
        notes,
        started,
    ))
}

/// All 2048 {1,2}-weightings of the bridged pentagons: the three conditions
/// against the homology verdict.
pub fn verify_prop_h(opts: &VerifyOptions) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let g = two_pentagons_bridged();
    let engine = CmEngine::new();
    let weightings = all_weightings(g.edge_count(), 2);
    let results: Result<Vec<(Option<Counterexample>, u64)>> = with_pool(opts.jobs, || {
        weightings
            .par_iter()
            .map(|wvec| {
                let w = WeightFunction::new(&g, wvec.clone()).expect("valid weights");
                let formula = prop_h_conditions(&g, &w)?;
                let ideal = weighted_edge_ideal(&g, &w);
                let oracle = engine.is_cm_ideal(&ideal, opts.field)?.0;
                let mut sensitive = 0u64;
                if opts.cross_field {
                    let other = match opts.field {
                        FieldSpec::Rationals => FieldSpec::Prime(2),
                        FieldSpec::Prime(_) => FieldSpec::Rationals,
                    };
                    if engine.is_cm_ideal(&ideal, other)?.0 != oracle {
                        sensitive = 1;
                    }
                }
                let ce = (formula != oracle).then(|| Counterexample {
                    graph: graph_str(&g),
                    weights: weights_str(&g, &w),
                    detail: format!("conditions say {formula}, homology says {oracle}"),
                });
                Ok((ce, sensitive))
            })
            .collect()
    });
    let results = results?;
    let counterexamples: Vec<Counterexample> =
        results.iter().filter_map(|(ce, _)| ce.clone()).collect();
    let sensitive: u64 = results.iter().map(|(_, s)| s).sum();
    Ok(VerificationOutcome::finish(
        "prop-h",
        results.len() as u64,
        counterexamples,
        sensitive,
        opts.seed,
        vec!["wmax=2".into()],
        started,
    ))
}

/// Random Woodroofe graphs (n <= 7) with random weights <= 3: unmixed iff
/// Cohen-Macaulay.
pub fn verify_cor31(sample: usize, opts: &VerifyOptions) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut instances: Vec<(Graph, WeightFunction)> = Vec::with_capacity(sample);
    while instances.len() < sample {
        let n = rng.random_range(1..=7);
        let p: f64 = rng.random_range(0.15..0.85);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("random edges are valid");
        if !g.is_woodroofe() {
            continue;
        }
        let weights: Vec<u32> = (0..g.edge_count()).map(|_| rng.random_range(1..=3)).collect();
        let w = WeightFunction::new(&g, weights).expect("valid weights");
        instances.push((g, w));
    }
    let engine = CmEngine::new();
    let results: Result<Vec<(Option<Counterexample>, u64)>> = with_pool(opts.jobs, || {
        instances
            .par_iter()
            .map(|(g, w)| {
                let ideal = weighted_edge_ideal(g, w);
                let unmixed = is_unmixed(&ideal);
                let cm = engine.is_cm_ideal(&ideal, opts.field)?.0;
                let mut sensitive = 0u64;
                if opts.cross_field {
                    let other = match opts.field {
                        FieldSpec::Rationals => FieldSpec::Prime(2),
                        FieldSpec::Prime(_) => FieldSpec::Rationals,
                    };
                    if engine.is_cm_ideal(&ideal, other)?.0 != cm {
                        sensitive = 1;
                    }
                }
                let ce = (unmixed != cm).then(|| Counterexample {
                    graph: graph_str(g),
                    weights: weights_str(g, w),
                    detail: format!("unmixed = {unmixed} but Cohen-Macaulay = {cm}"),
                });
                Ok((ce, sensitive))
            })
            .collect()
    });
    let results = results?;
    let counterexamples: Vec<Counterexample> =
        results.iter().filter_map(|(ce, _)| ce.clone()).collect();
    let sensitive: u64 = results.iter().map(|(_, s)| s).sum();
    Ok(VerificationOutcome::finish(
        "cor31",
        results.len() as u64,
        counterexamples,
        sensitive,
        opts.seed,
        vec![format!("sample={sample}"), "wmax=3".into(), "nmax=7".into()],
        started,
    ))
}

/// The weighted suspension of a cycle of length 4, 6, or 7: the unweighted
/// graph is Cohen-Macaulay and very well-covered, yet putting weight
/// `omega >= 2` on the cycle edges breaks the sequential property, with the
/// explicit radical `I(C_t) + (pendant variables)` as witness.
pub fn verify_terai(t: usize, omega: u32, opts: &VerifyOptions) -> Result<VerificationOutcome> {
    if t == 3 || t == 5 {
        return Err(Error::WrongShape(format!(
            "suspensions of {t}-cycles stay sequentially CM for every weighting; nothing to refute"
        )));
    }
    if !(4..=7).contains(&t) {
        return Err(Error::Budget(format!("t must be one of 4, 6, 7; got {t}")));
    }
    if omega < 2 {
        return Err(Error::Budget("omega must be at least 2".into()));
    }
    let started = Instant::now();
    let g = crate::graph::suspension_of_cycle(t)?;
    let engine = CmEngine::new();
    let mut counterexamples = Vec::new();
    let mut push = |w: Option<&WeightFunction>, detail: String| {
        counterexamples.push(Counterexample {
            graph: graph_str(&g),
            weights: w.map(|w| weights_str(&g, w)).unwrap_or_default(),
            detail,
        });
    };

    // (a) the unweighted suspension is Cohen-Macaulay
    let plain = edge_ideal(&g);
    if !engine.is_cm_ideal(&plain, opts.field)?.0 {
        push(None, "unweighted suspension must be Cohen-Macaulay".into());
    }

    // (b) it is very well-covered
    if !g.is_very_well_covered() {
        push(None, "suspension must be very well-covered".into());
    }

    // (c) cycle weight omega, pendant weight 1 breaks the sequential property
    let weights: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| if u < t && v < t { omega } else { 1 })
        .collect();
    let w = WeightFunction::new(&g, weights).expect("valid weights");
    let ideal = weighted_edge_ideal(&g, &w);
    if engine.is_scm_ideal(&ideal, opts.field)?.0 {
        push(Some(&w), "weighted suspension must not be sequentially CM".into());
    }

    // (d) the radical of the colon by prod x_i^(omega-1) is exactly the plain
    // cycle ideal plus all pendant variables
    let mut exps = vec![0u32; 2 * t];
    for e in exps.iter_mut().take(t) {
        *e = omega - 1;
    }
    let u = Monomial::new(exps);
    let witness_radical = ideal.radical_colon(&u);
    let mut expected_gens: Vec<Monomial> = Vec::new();
    for i in 0..t {
        let mut e = vec![0u32; 2 * t];
        e[i] = 1;
        e[(i + 1) % t] = 1;
        expected_gens.push(Monomial::new(e));
    }
    for y in t..2 * t {
        expected_gens.push(Monomial::var(2 * t, y));
    }
    let expected = MonomialIdeal::new(2 * t, expected_gens);
    if witness_radical != expected {
        push(
            Some(&w),
            format!("radical colon gives {witness_radical}, expected {expected}"),
        );
    }

    let mut sensitive = 0u64;
    if opts.cross_field {
        let other = match opts.field {
            FieldSpec::Rationals => FieldSpec::Prime(2),
            FieldSpec::Prime(_) => FieldSpec::Rationals,
        };
        if engine.is_cm_ideal(&plain, other)?.0 != engine.is_cm_ideal(&plain, opts.field)?.0 {
            sensitive += 1;
        }
        if engine.is_scm_ideal(&ideal, other)?.0 != engine.is_scm_ideal(&ideal, opts.field)?.0 {
            sensitive += 1;
        }
    }
    Ok(VerificationOutcome::finish(
        "terai",
        4,
        counterexamples,
        sensitive,
        opts.seed,
        vec![format!("t={t}"), format!("omega={omega}")],
        started,
    ))
}

/// Random proper monomial ideals with small polarizations: the radical
/// pipeline and the polarization pipeline must agree on both verdicts.
pub fn verify_oracle_agreement(sample: usize, opts: &VerifyOptions) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut instances: Vec<MonomialIdeal> = Vec::with_capacity(sample);
    while instances.len() < sample {
        let n = rng.random_range(2..=4usize);
        let gens = rng.random_range(1..=4usize);
        let mut monomials = Vec::with_capacity(gens);
        for _ in 0..gens {
            let exps: Vec<u32> = (0..n).map(|_| rng.random_range(0..=3u32)).collect();
            if exps.iter().all(|&e| e == 0) {
                continue;
            }
            monomials.push(Monomial::new(exps));
        }
        if monomials.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(n, monomials);
        let (pol, _) = ideal.polarize();
        if pol.n() > 10 {
            continue;
        }
        instances.push(ideal);
    }
    let engine = CmEngine::new();
    let results: Result<Vec<Option<Counterexample>>> = with_pool(opts.jobs, || {
        instances
            .par_iter()
            .map(|ideal| {
                let cm_radicals = engine.is_cm_ideal(ideal, opts.field)?.0;
                let cm_pol = is_cm_via_polarization(ideal, opts.field)?;
                let scm_radicals = engine.is_scm_ideal(ideal, opts.field)?.0;
                let scm_pol = is_scm_via_polarization(ideal, opts.field)?;
                let ce = (cm_radicals != cm_pol || scm_radicals != scm_pol).then(|| {
                    Counterexample {
                        graph: format!("{ideal}"),
                        weights: String::new(),
                        detail: format!(
                            "radical route: cm={cm_radicals} scm={scm_radicals}; polarization route: cm={cm_pol} scm={scm_pol}"
                        ),
                    }
                });
                Ok(ce)
            })
            .collect()
    });
    let results = results?;
    let counterexamples: Vec<Counterexample> = results.into_iter().flatten().collect();
    Ok(VerificationOutcome::finish(
        "oracle-agreement",
        sample as u64,
        counterexamples,
        0,
        opts.seed,
        vec![format!("sample={sample}"), "polarized ambient <= 10".into()],
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path_graph, suspension_of_cycle};

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn witness_weight_shapes() {
        let g = cycle_graph(5).unwrap();
        let all = lemma25_witness_weight(&g, VertexSet::EMPTY);
        assert!(all.as_slice().iter().all(|&w| w == 1));
        let full = lemma25_witness_weight(&g, g.vertex_set());
        assert!(full.as_slice().iter().all(|&w| w == 2));

        // pentagon with a pendant: 2 on cycle edges only
        let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
        edges.push((0, 5));
        let gp = Graph::new(6, &edges).unwrap();
        let w = lemma25_witness_weight(&gp, VertexSet::from_iter(0..5));
        for (i, &(u, v)) in gp.edges().iter().enumerate() {
            let expect = if u < 5 && v < 5 { 2 } else { 1 };
            assert_eq!(w.get(i), expect);
        }
    }

    #[test]
    fn balancing_examples() {
        let g = cycle_graph(5).unwrap();
        let ones = WeightFunction::all_ones(&g);
        assert!(c5_balancing_cm(&g, &ones).unwrap());

        // (1,2,1,2,1) in cycle order balances at the starting vertex
        let w = weights_in_cycle_order(&g, &[1, 2, 1, 2, 1]);
        assert!(c5_balancing_cm(&g, &w).unwrap());

        // (2,2,1,1,1) does not balance anywhere
        let w = weights_in_cycle_order(&g, &[2, 2, 1, 1, 1]);
        assert!(!c5_balancing_cm(&g, &w).unwrap());
    }

    fn weights_in_cycle_order(g: &Graph, cyc: &[u32; 5]) -> WeightFunction {
        // cycle order of cycle_graph(5) is 0-1-2-3-4-0
        let triples: Vec<(usize, usize, u32)> = (0..5)
            .map(|i| (i, (i + 1) % 5, cyc[i]))
            .collect();
        WeightFunction::from_triples(g, &triples).unwrap()
    }

    #[test]
    fn balancing_is_rotation_and_reflection_invariant() {
        let g = cycle_graph(5).unwrap();
        let base = [1u32, 2, 2, 1, 2];
        let expected = c5_balancing_cm(&g, &weights_in_cycle_order(&g, &base)).unwrap();
        for r in 0..5 {
            let mut rot = [0u32; 5];
            for i in 0..5 {
                rot[i] = base[(i + r) % 5];
            }
            assert_eq!(
                c5_balancing_cm(&g, &weights_in_cycle_order(&g, &rot)).unwrap(),
                expected
            );
            let mut refl = rot;
            refl.reverse();
            assert_eq!(
                c5_balancing_cm(&g, &weights_in_cycle_order(&g, &refl)).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn balancing_rejects_wrong_shapes() {
        let g = path_graph(5);
        let w = WeightFunction::all_ones(&g);
        assert!(c5_balancing_cm(&g, &w).is_err());
    }

    #[test]
    fn prop_h_fixed_cases() {
        let h = two_pentagons_bridged();
        let ones = WeightFunction::all_ones(&h);
        assert!(prop_h_conditions(&h, &ones).unwrap());

        // bridge weight 2, everything else 1: condition (1) fails
        let mut weights = vec![1u32; h.edge_count()];
        weights[h.edge_index(0, 5).unwrap()] = 2;
        let w = WeightFunction::new(&h, weights).unwrap();
        assert!(!prop_h_conditions(&h, &w).unwrap());

        let g = cycle_graph(5).unwrap();
        assert!(prop_h_conditions(&g, &WeightFunction::all_ones(&g)).is_err());
    }

    #[test]
    fn prop_h_balancing_only_off_axis_fails() {
        // x-pentagon weights putting the only balancing vertex at cycle
        // position 1 (vertex x2): conditions (1) and (2) hold, (3) fails
        let h = two_pentagons_bridged();
        let mut weights = vec![1u32; h.edge_count()];
        // cycle order 0-1-2-3-4: edges (0,1)=1,(1,2)=1,(2,3)=2,(3,4)=1,(0,4)=2
        weights[h.edge_index(2, 3).unwrap()] = 2;
        weights[h.edge_index(0, 4).unwrap()] = 2;
        let w = WeightFunction::new(&h, weights).unwrap();
        // sanity: the x-pentagon still balances somewhere
        let x_weights = [
            w.of_edge(&h, 0, 1).unwrap(),
            w.of_edge(&h, 1, 2).unwrap(),
            w.of_edge(&h, 2, 3).unwrap(),
            w.of_edge(&h, 3, 4).unwrap(),
            w.of_edge(&h, 0, 4).unwrap(),
        ];
        assert_eq!(pentagon_balancing_positions(&x_weights), vec![1]);
        assert!(!prop_h_conditions(&h, &w).unwrap());
        // and the homology oracle agrees that it is not Cohen-Macaulay
        let engine = CmEngine::new();
        let ideal = weighted_edge_ideal(&h, &w);
        assert!(!engine.is_cm_ideal(&ideal, FieldSpec::Rationals).unwrap().0);
    }

    /// Weighted edge ideal of the subgraph induced on `keep`, embedded in the
    /// full ambient ring of `g`.
    fn induced_weighted_ideal(
        g: &Graph,
        w: &WeightFunction,
        keep: VertexSet,
    ) -> MonomialIdeal {
        let gens: Vec<Monomial> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(_, &(u, v))| keep.contains(u) && keep.contains(v))
            .map(|(i, &(u, v))| {
                let mut e = vec![0u32; g.n()];
                e[u] = w.get(i);
                e[v] = w.get(i);
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::new(g.n(), gens)
    }

    fn vars_ideal(n: usize, vars: &[usize]) -> MonomialIdeal {
        MonomialIdeal::new(n, vars.iter().map(|&v| Monomial::var(n, v)).collect())
    }

    /// With the bridge exponent at least the bridge weight (and zero on the
    /// other bridge endpoint), the radical colon splits: the bridge leaves
    /// its other endpoint as a variable and the two pentagons decouple.
    #[test]
    fn bridged_pentagon_colon_splits_when_bridge_exponent_is_high() {
        let h = two_pentagons_bridged();
        let x_pent = VertexSet::from_iter(0..5);
        let y_pent = VertexSet::from_iter(5..10);
        let cases: [(Vec<u32>, Vec<u32>); 2] = [
            // all ones; colon by x0
            (vec![1; 11], {
                let mut u = vec![0u32; 10];
                u[0] = 1;
                u
            }),
            // weight 2 on the x-pentagon, 1 elsewhere; colon by x0^2 x1
            (
                h.edges()
                    .iter()
                    .map(|&(u, v)| if v < 5 && u < 5 { 2 } else { 1 })
                    .collect(),
                {
                    let mut u = vec![0u32; 10];
                    u[0] = 2;
                    u[1] = 1;
                    u
                },
            ),
        ];
        for (weights, exps) in cases {
            let w = WeightFunction::new(&h, weights).unwrap();
            let ideal = weighted_edge_ideal(&h, &w);
            let u = Monomial::new(exps.clone());
            assert!(!ideal.contains(&u));
            let lhs = ideal.radical_colon(&u);
            let x_part = induced_weighted_ideal(&h, &w, x_pent).radical_colon(&u);
            let y_part = induced_weighted_ideal(&h, &w, y_pent).radical_colon(&u);
            let rhs = vars_ideal(10, &[5]).plus(&x_part).plus(&y_part);
            assert_eq!(lhs, rhs, "weights {:?}, u = {u}", w.as_slice());
        }
    }

    /// With exponent zero on both bridge endpoints, the bridge edge survives
    /// whole and the pentagons again decouple.
    #[test]
    fn bridged_pentagon_colon_splits_when_bridge_exponents_are_zero() {
        let h = two_pentagons_bridged();
        let x_pent = VertexSet::from_iter(0..5);
        let y_pent = VertexSet::from_iter(5..10);
        let w = WeightFunction::all_ones(&h);
        let ideal = weighted_edge_ideal(&h, &w);
        // colon by x3 y3 (indices 2 and 7)
        let mut exps = vec![0u32; 10];
        exps[2] = 1;
        exps[7] = 1;
        let u = Monomial::new(exps);
        let lhs = ideal.radical_colon(&u);
        let bridge = MonomialIdeal::new(10, vec![Monomial::new({
            let mut e = vec![0u32; 10];
            e[0] = 1;
            e[5] = 1;
            e
        })]);
        let rhs = induced_weighted_ideal(&h, &w, x_pent)
            .radical_colon(&u)
            .plus(&induced_weighted_ideal(&h, &w, y_pent).radical_colon(&u))
            .plus(&bridge);
        assert_eq!(lhs, rhs);
    }

    /// A bridge weight exceeding an adjacent pentagon weight produces a
    /// radical that pins one pentagon plus the bridge endpoint and kills the
    /// other pentagon down to three variables.
    #[test]
    fn bridged_pentagon_overweight_bridge_radical() {
        let h = two_pentagons_bridged();
        let mut weights = vec![1u32; h.edge_count()];
        weights[h.edge_index(0, 5).unwrap()] = 2;
        let w = WeightFunction::new(&h, weights).unwrap();
        let ideal = weighted_edge_ideal(&h, &w);
        // colon by y1^(bridge-1) * y4^(max adjacent y weight) = y1 y4
        let mut exps = vec![0u32; 10];
        exps[5] = 1;
        exps[8] = 1;
        let u = Monomial::new(exps);
        let radical = ideal.radical_colon(&u);
        // expected: the subgraph induced on the x-pentagon plus y1, and the
        // remaining y-vertices as variables
        let keep = VertexSet::from_iter([0, 1, 2, 3, 4, 5]);
        let expected = induced_weighted_ideal(&h, &WeightFunction::all_ones(&h), keep)
            .plus(&vars_ideal(10, &[6, 7, 9]));
        assert_eq!(radical, expected);
        // and that radical is not Cohen-Macaulay, so neither is the ideal
        let engine = CmEngine::new();
        assert!(!engine.is_cm_ideal(&ideal, FieldSpec::Rationals).unwrap().0);
    }

    #[test]
    fn terai_with_higher_cycle_weight() {
        let o = verify_terai(4, 3, &opts()).unwrap();
        assert!(o.passed, "{:?}", o.counterexamples);
    }

    #[test]
    fn all_weights_verdicts() {
        let engine = CmEngine::new();
        let q = FieldSpec::Rationals;

        let k3 = complete_graph(3);
        let v = cm_for_all_weights(&k3, 2, true, &engine, q).unwrap();
        assert!(v.holds_for_all);
        assert!(v.contradictions.is_empty());
        assert_eq!(v.checked, 8);

        let p3 = path_graph(3);
        let v = cm_for_all_weights(&p3, 2, true, &engine, q).unwrap();
        assert!(!v.holds_for_all);
        assert!(v.contradictions.is_empty());
        // all-ones is already a certificate
        assert_eq!(v.certificate.unwrap().as_slice(), &[1, 1]);

        let c5 = cycle_graph(5).unwrap();
        let v = cm_for_all_weights(&c5, 2, true, &engine, q).unwrap();
        assert!(!v.holds_for_all);
        assert!(v.contradictions.is_empty());
        assert!(v.certificate.is_some());

        let v = scm_for_all_weights(&c5, 2, true, &engine, q).unwrap();
        assert!(v.holds_for_all);
        assert!(v.contradictions.is_empty());
        assert_eq!(v.checked, 32);

        let c4 = cycle_graph(4).unwrap();
        let v = scm_for_all_weights(&c4, 2, false, &engine, q).unwrap();
        assert!(!v.holds_for_all);
        assert!(v.contradictions.is_empty());
        // fast certificate doubles the whole cycle
        assert_eq!(v.certificate.unwrap().as_slice(), &[2, 2, 2, 2]);

        // trees are Woodroofe
        let tree = path_graph(4);
        let v = scm_for_all_weights(&tree, 2, true, &engine, q).unwrap();
        assert!(v.holds_for_all);
        assert!(v.contradictions.is_empty());
    }

    #[test]
    fn thm_sweeps_small() {
        let o = verify_thm_cm(3, 2, &opts()).unwrap();
        assert!(o.passed, "{:?}", o.counterexamples);
        assert_eq!(o.instances_checked, 4);

        let o = verify_thm_scm(4, 2, &opts()).unwrap();
        assert!(o.passed, "{:?}", o.counterexamples);
        assert_eq!(o.instances_checked, 11);
    }

    #[test]
    fn c5_sweep_wmax2() {
        let o = verify_c5(2, &opts()).unwrap();
        assert!(o.passed, "{:?}", o.counterexamples);
        assert_eq!(o.instances_checked, 32);
        assert!(o.notes.iter().any(|n| n.contains("clockwise-only")));
    }

    #[test]
    fn terai_seed_case() {
        let o = verify_terai(4, 2, &opts()).unwrap();
        assert!(o.passed, "{:?}", o.counterexamples);
        assert!(verify_terai(5, 2, &opts()).is_err());
        assert!(verify_terai(3, 2, &opts()).is_err());
        assert!(verify_terai(4, 1, &opts()).is_err());
    }

    #[test]
    fn cor31_small_sample() {
        let o = verify_cor31(20, &opts()).unwrap();
        assert!(o.passed, "{:?}", o.counterexamples);
        assert_eq!(o.instances_checked, 20);
    }

    #[test]
    fn sweeps_are_deterministic() {
        let mut a = verify_cor31(10, &opts()).unwrap();
        let mut b = verify_cor31(10, &opts()).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn suspension_of_c6_is_cm_and_very_well_covered() {
        // the unweighted part of the counterexample family at t = 6
        let g = suspension_of_cycle(6).unwrap();
        assert!(g.is_very_well_covered());
        let engine = CmEngine::new();
        assert!(engine
            .is_cm_ideal(&edge_ideal(&g), FieldSpec::Rationals)
            .unwrap()
            .0);
    }
}
