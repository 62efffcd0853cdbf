use clap::{Parser, Subcommand, ValueEnum};
use cmideal::cm::CmEngine;
use cmideal::homology::FieldSpec;
use cmideal::io::{parse_graph, parse_weights};
use cmideal::lattice::{associated_primes, enumerate_associated_radicals, is_unmixed, krull_dim};
use cmideal::monomial::weighted_edge_ideal;
use cmideal::verify::{
    verify_c5, verify_cor31, verify_prop_h, verify_terai, verify_thm_cm, verify_thm_scm,
    VerificationOutcome, VerifyOptions,
};
use cmideal::{Graph, WeightFunction};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cmideal",
    version,
    about = "Cohen-Macaulay and sequentially Cohen-Macaulay checks for edge ideals of edge-weighted graphs",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Cm,
    Scm,
    Unmixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expectation {
    Woodroofe,
    CompleteUnion,
    VeryWellCovered,
}

#[derive(Parser)]
struct FieldArgs {
    /// Work over the prime field F_p instead of the rationals
    #[arg(long, value_name = "P")]
    char: Option<u32>,
    /// Also run the other field and report disagreements
    #[arg(long)]
    cross_field: bool,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldSpec, cmideal::Error> {
        match self.char {
            None => Ok(FieldSpec::Rationals),
            Some(p) => FieldSpec::prime(p),
        }
    }

    fn cross(&self, primary: FieldSpec) -> Option<FieldSpec> {
        self.cross_field.then_some(match primary {
            FieldSpec::Rationals => FieldSpec::Prime(2),
            FieldSpec::Prime(_) => FieldSpec::Rationals,
        })
    }
}

#[derive(Parser)]
struct SweepArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Seed for randomized sweeps (recorded in the report)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores); results never depend on this
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Emit a single JSON object instead of text
    #[arg(long)]
    json: bool,
}

impl SweepArgs {
    fn options(&self) -> Result<VerifyOptions, cmideal::Error> {
        Ok(VerifyOptions {
            field: self.field.field()?,
            cross_field: self.field.cross_field,
            seed: self.seed,
            jobs: self.jobs,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph: Woodroofe, disjoint union of cliques, chordless cycles
    Classify {
        /// Graph file (`n <count>` header, then `u v` lines)
        #[arg(long)]
        graph: PathBuf,
        /// Exit 1 unless the graph has this property
        #[arg(long)]
        expect: Option<Expectation>,
        #[arg(long)]
        json: bool,
    },
    /// Decide Cohen-Macaulay / sequentially CM / unmixed for a weighted edge ideal
    Check {
        property: Property,
        #[arg(long)]
        graph: PathBuf,
        /// Weight file ("u v w" lines); all weights 1 when omitted
        #[arg(long)]
        weights: Option<PathBuf>,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        json: bool,
    },
    /// List the distinct radicals sqrt(I : u) of the weighted edge ideal
    Radicals {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List the associated primes of the weighted edge ideal
    AssPrimes {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification sweep
    Verify {
        #[command(subcommand)]
        sweep: Sweep,
    },
}

#[derive(Subcommand)]
enum Sweep {
    /// Clique-union classifier vs exhaustive weighted CM verdicts on all
    /// isomorphism classes with nmax vertices
    ThmCm {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 2)]
        wmax: u32,
        #[command(flatten)]
        args: SweepArgs,
    },
    /// Woodroofe classifier vs weighted sequential-CM verdicts on all
    /// isomorphism classes with nmax vertices
    ThmScm {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 2)]
        wmax: u32,
        #[command(flatten)]
        args: SweepArgs,
    },
    /// Balancing-vertex formula vs homology on every weighting of the 5-cycle
    C5 {
        #[arg(long, default_value_t = 2)]
        wmax: u32,
        #[command(flatten)]
        args: SweepArgs,
    },
    /// Bridged-pentagon conditions vs homology on all 2048 {1,2}-weightings
    PropH {
        #[command(flatten)]
        args: SweepArgs,
    },
    /// Unmixed iff CM on sampled Woodroofe graphs with weights up to 3
    Cor31 {
        #[arg(long, default_value_t = 200)]
        sample: usize,
        #[command(flatten)]
        args: SweepArgs,
    },
    /// Weighted suspensions of cycles: CM very well-covered graphs that are
    /// not sequentially CM once cycle edges carry weight omega
    Terai {
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        omega: u32,
        #[command(flatten)]
        args: SweepArgs,
    },
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_weights(path: Option<&PathBuf>, g: &Graph) -> Result<WeightFunction, String> {
    match path {
        None => Ok(WeightFunction::all_ones(g)),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            parse_weights(&text, g).map_err(|e| format!("{}: {e}", p.display()))
        }
    }
}

#[derive(Serialize)]
struct ClassifyOut {
    woodroofe: bool,
    complete_union: bool,
    induced_cycles: Vec<usize>,
    very_well_covered: bool,
}

#[derive(Serialize)]
struct CheckOut {
    property: String,
    verdict: bool,
    is_cm: bool,
    is_scm: bool,
    unmixed: bool,
    dim: usize,
    field: String,
    field_sensitive: bool,
    witness: Option<String>,
}

fn run_classify(graph: &Path, expect: Option<Expectation>, json: bool) -> Result<u8, String> {
    let g = read_graph(graph)?;
    let mut cycles: Vec<usize> = g
        .chordless_cycles(4)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|c| c.len())
        .collect();
    cycles.sort_unstable();
    let out = ClassifyOut {
        woodroofe: g.is_woodroofe(),
        complete_union: g.is_disjoint_union_of_cliques(),
        induced_cycles: cycles,
        very_well_covered: g.is_very_well_covered(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        let cycles: Vec<String> = out.induced_cycles.iter().map(|l| l.to_string()).collect();
        println!(
            "woodroofe: {}; complete-union: {}; induced-cycles: [{}]",
            out.woodroofe,
            out.complete_union,
            cycles.join(", ")
        );
    }
    let code = match expect {
        None => 0,
        Some(Expectation::Woodroofe) => u8::from(!out.woodroofe),
        Some(Expectation::CompleteUnion) => u8::from(!out.complete_union),
        Some(Expectation::VeryWellCovered) => u8::from(!out.very_well_covered),
    };
    Ok(code)
}

fn run_check(
    property: Property,
    graph: &Path,
    weights: Option<&PathBuf>,
    field_args: &FieldArgs,
    json: bool,
) -> Result<u8, String> {
    let g = read_graph(graph)?;
    let w = read_weights(weights, &g)?;
    let ideal = weighted_edge_ideal(&g, &w);
    let field = field_args.field().map_err(|e| e.to_string())?;
    let cross = field_args.cross(field);
    let engine = CmEngine::new();
    let report = engine
        .report(&ideal, field, cross)
        .map_err(|e| e.to_string())?;
    let (name, verdict, witness) = match property {
        Property::Cm => (
            "cm",
            report.is_cm,
            report.cm_witness.as_ref().map(|w| w.to_string()),
        ),
        Property::Scm => (
            "scm",
            report.is_scm,
            report.scm_witness.as_ref().map(|w| w.to_string()),
        ),
        Property::Unmixed => {
            let witness = if report.unmixed {
                None
            } else {
                let primes = associated_primes(&ideal);
                let small = primes.iter().min_by_key(|p| p.len()).unwrap();
                let large = primes.iter().max_by_key(|p| p.len()).unwrap();
                Some(format!(
                    "associated primes of different heights: {small} and {large}"
                ))
            };
            ("unmixed", report.unmixed, witness)
        }
    };
    let out = CheckOut {
        property: name.into(),
        verdict,
        is_cm: report.is_cm,
        is_scm: report.is_scm,
        unmixed: report.unmixed,
        dim: report.dim,
        field: report.field.to_string(),
        field_sensitive: report.field_sensitive,
        witness: witness.clone(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "{name}: {verdict} (cm: {}, scm: {}, unmixed: {}, dim: {}, field: {})",
            report.is_cm, report.is_scm, report.unmixed, report.dim, report.field
        );
        if let Some(w) = &witness {
            println!("witness: {w}");
        }
        if report.field_sensitive {
            println!("note: verdict depends on the field");
        }
    }
    Ok(u8::from(!verdict))
}

fn run_radicals(graph: &Path, weights: Option<&PathBuf>, json: bool) -> Result<u8, String> {
    let g = read_graph(graph)?;
    let w = read_weights(weights, &g)?;
    let ideal = weighted_edge_ideal(&g, &w);
    let radicals = enumerate_associated_radicals(&ideal);
    if json {
        #[derive(Serialize)]
        struct Entry {
            u: String,
            radical: String,
        }
        let entries: Vec<Entry> = radicals
            .iter()
            .map(|(u, r)| Entry {
                u: u.to_string(),
                radical: r.to_string(),
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&entries).unwrap());
    } else {
        println!("{} distinct radicals", radicals.len());
        for (u, r) in &radicals {
            println!("{u} -> {r}");
        }
    }
    Ok(0)
}

fn run_ass_primes(graph: &Path, weights: Option<&PathBuf>, json: bool) -> Result<u8, String> {
    let g = read_graph(graph)?;
    let w = read_weights(weights, &g)?;
    let ideal = weighted_edge_ideal(&g, &w);
    let primes = associated_primes(&ideal);
    if json {
        let entries: Vec<Vec<usize>> = primes.iter().map(|p| p.to_vec()).collect();
        println!("{}", serde_json::to_string_pretty(&entries).unwrap());
    } else {
        println!("{} associated primes", primes.len());
        for p in &primes {
            println!("{p}");
        }
        println!(
            "unmixed: {}; dim: {}",
            is_unmixed(&ideal),
            krull_dim(&ideal).map_err(|e| e.to_string())?
        );
    }
    Ok(0)
}

fn report_outcome(outcome: &VerificationOutcome, json: bool) -> u8 {
    if json {
        println!("{}", serde_json::to_string_pretty(outcome).unwrap());
    } else {
        println!(
            "verify {}: {} ({} instances, {} counterexamples, {} ms)",
            outcome.name,
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.instances_checked,
            outcome.counterexamples.len(),
            outcome.elapsed_ms
        );
        for note in &outcome.notes {
            println!("note: {note}");
        }
        if outcome.field_sensitive_cases > 0 {
            println!("field-sensitive cases: {}", outcome.field_sensitive_cases);
        }
        for ce in &outcome.counterexamples {
            println!("counterexample: {} | {} | {}", ce.graph, ce.weights, ce.detail);
        }
    }
    u8::from(!outcome.passed)
}

fn run_verify(sweep: &Sweep) -> Result<u8, String> {
    let (outcome, json) = match sweep {
        Sweep::ThmCm { nmax, wmax, args } => {
            let opts = args.options().map_err(|e| e.to_string())?;
            (
                verify_thm_cm(*nmax, *wmax, &opts).map_err(|e| e.to_string())?,
                args.json,
            )
        }
        Sweep::ThmScm { nmax, wmax, args } => {
            let opts = args.options().map_err(|e| e.to_string())?;
            (
                verify_thm_scm(*nmax, *wmax, &opts).map_err(|e| e.to_string())?,
                args.json,
            )
        }
        Sweep::C5 { wmax, args } => {
            let opts = args.options().map_err(|e| e.to_string())?;
            (
                verify_c5(*wmax, &opts).map_err(|e| e.to_string())?,
                args.json,
            )
        }
        Sweep::PropH { args } => {
            let opts = args.options().map_err(|e| e.to_string())?;
            (verify_prop_h(&opts).map_err(|e| e.to_string())?, args.json)
        }
        Sweep::Cor31 { sample, args } => {
            let opts = args.options().map_err(|e| e.to_string())?;
            (
                verify_cor31(*sample, &opts).map_err(|e| e.to_string())?,
                args.json,
            )
        }
        Sweep::Terai { t, omega, args } => {
            let opts = args.options().map_err(|e| e.to_string())?;
            (
                verify_terai(*t, *omega, &opts).map_err(|e| e.to_string())?,
                args.json,
            )
        }
    };
    Ok(report_outcome(&outcome, json))
}

fn main() -> ExitCode {
    // die quietly on closed pipes (e.g. `cmideal radicals ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify {
            graph,
            expect,
            json,
        } => run_classify(graph, *expect, *json),
        Command::Check {
            property,
            graph,
            weights,
            field,
            json,
        } => run_check(*property, graph, weights.as_ref(), field, *json),
        Command::Radicals {
            graph,
            weights,
            json,
        } => run_radicals(graph, weights.as_ref(), *json),
        Command::AssPrimes {
            graph,
            weights,
            json,
        } => run_ass_primes(graph, weights.as_ref(), *json),
        Command::Verify { sweep } => run_verify(sweep),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
