//! Command-line front end: parse or generate instances, run the exact
//! counting and search operations, emit JSON or CSV, and cache expensive
//! reports on disk.
//!
//! Exit codes: 0 ok, 2 verification failure, 3 budget refusal, 4 input or
//! configuration error.

mod cache;
mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dpcolor::budget::DEFAULT_BUDGET;
use dpcolor::generate::{generate, Family, GenSpec};
use dpcolor::verify;
use dpcolor::{
    boundary_profile, chromatic_polynomial, classify, count_proper, dp_chromatic_number, dp_closed,
    dp_exact, dp_upper_bound, gap_profile, monte_carlo_mean, strict_less_test, Budget, Error,
    Hypergraph,
};

use cache::{cache_key, Cache};
use report::{csv_fields, csv_table, rational_string, render_json};

#[derive(Parser)]
#[command(
    name = "dpcolor",
    version,
    about = "Exact chromatic polynomials and DP color functions of hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    /// Elementary-operation budget for exhaustive scans
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cache directory for expensive reports (DPCOLOR_CACHE_DIR also works)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for parallel counting; results are identical for any
    /// worker count
    #[arg(long)]
    workers: Option<usize>,
    /// Seed for seeded operations (generators, Monte Carlo)
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance file, structured JSON or terse text (auto-detected)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generator family: edgeless, loose_path, star_hypertree,
    /// random_hypertree, loose_cycle, unicyclic, graph_cycle
    #[arg(long)]
    family: Option<String>,
    /// Edge size r (generator)
    #[arg(long)]
    r: Option<usize>,
    /// Edge count m, or pendant count for unicyclic (generator)
    #[arg(long)]
    m: Option<usize>,
    /// Cycle length p (generator)
    #[arg(long)]
    p: Option<usize>,
    /// Vertex count n (generator)
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report: connectivity, uniformity, linearity, incidence
    /// rank, classification, cycle data
    Classify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact chromatic polynomial, coefficients ascending by degree
    Chrompoly {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Count proper k-colorings
    Count {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Expectation upper bound on the DP color function (uniform instances)
    Dpbound {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact DP color function with a witness cover
    Dpexact {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Closed-form DP color function where one is known
    Dpclosed {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Boundary coloring profile of one edge
    Profile {
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Deletion-ratio test for a strict DP gap
    Strictless {
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Monte Carlo mean of cover coloring counts over seeded random covers
    Mc {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact table of P, P_DP, gap and normalized gap over a k range
    Gap {
        #[arg(long)]
        kmin: usize,
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Smallest k at which every k-fold cover admits a coloring
    Chidp {
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit an instance (generated or normalized from a file)
    Gen {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the full claim suite and report pass/fail per claim
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
}

impl Command {
    fn common(&self) -> &CommonArgs {
        match self {
            Command::Classify { common, .. }
            | Command::Chrompoly { common, .. }
            | Command::Count { common, .. }
            | Command::Dpbound { common, .. }
            | Command::Dpexact { common, .. }
            | Command::Dpclosed { common, .. }
            | Command::Profile { common, .. }
            | Command::Strictless { common, .. }
            | Command::Mc { common, .. }
            | Command::Gap { common, .. }
            | Command::Chidp { common, .. }
            | Command::Gen { common, .. }
            | Command::Verify { common } => common,
        }
    }
}

const EXIT_OK: i32 = 0;
const EXIT_VERIFY: i32 = 2;
const EXIT_BUDGET: i32 = 3;
const EXIT_INPUT: i32 = 4;

struct Failure {
    code: String,
    message: String,
    exit: i32,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: "InvalidConfig".into(),
            message: message.into(),
            exit: EXIT_INPUT,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let exit = match e {
            Error::ResourceLimit { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure {
            code: e.code().to_string(),
            message: e.to_string(),
            exit,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn run(command: Command) -> i32 {
    let common = command.common();
    if common.budget == 0 {
        return fail(Failure::input("budget must be positive"));
    }
    if let Some(workers) = common.workers {
        if workers == 0 {
            return fail(Failure::input("worker count must be positive"));
        }
        // results never depend on the pool size; this only affects throughput
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let format = common.format;
    match dispatch(&command) {
        Ok(Report::Done(text, exit)) => {
            print!("{text}");
            exit
        }
        Ok(Report::Value { json, csv }) => {
            match format {
                Format::Json => print!("{}", render_json(&json)),
                Format::Csv => print!("{csv}"),
            }
            EXIT_OK
        }
        Err(failure) => fail(failure),
    }
}

fn fail(failure: Failure) -> i32 {
    let value = serde_json::json!({
        "error": { "code": failure.code, "message": failure.message }
    });
    eprint!("{}", render_json(&value));
    failure.exit
}

enum Report {
    /// Preformatted output with an explicit exit code (gen, verify).
    Done(String, i32),
    /// A JSON report plus its CSV rendering.
    Value {
        json: serde_json::Value,
        csv: String,
    },
}

fn load_instance(args: &InstanceArgs, seed: u64) -> Result<Hypergraph, Failure> {
    match (&args.input, &args.family) {
        (Some(_), Some(_)) => Err(Failure::input(
            "give exactly one instance source: --input or --family",
        )),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            Ok(Hypergraph::parse(&text)?)
        }
        (None, Some(family)) => {
            let family: Family = family.parse()?;
            let spec = GenSpec {
                family,
                r: args.r,
                m: args.m,
                p: args.p,
                n: args.n,
                seed: Some(seed),
            };
            Ok(generate(&spec)?)
        }
        (None, None) => Err(Failure::input(
            "give exactly one instance source: --input or --family",
        )),
    }
}

fn open_cache(common: &CommonArgs) -> Option<Cache> {
    let dir = common
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("DPCOLOR_CACHE_DIR").map(PathBuf::from))?;
    Cache::open(&dir).ok()
}

/// Runs `compute` unless the cache already holds the report for `key`.
fn cached(
    common: &CommonArgs,
    key: String,
    compute: impl FnOnce() -> Result<serde_json::Value, Failure>,
) -> Result<serde_json::Value, Failure> {
    let cache = open_cache(common);
    if let Some(cache) = &cache {
        if let Some(hit) = cache.load(&key) {
            return Ok(hit);
        }
    }
    let report = compute()?;
    if let Some(cache) = &cache {
        cache.store(&key, &report);
    }
    Ok(report)
}

fn dispatch(command: &Command) -> Result<Report, Failure> {
    let common = command.common();
    let budget = Budget::new(common.budget);
    match command {
        Command::Classify { instance, common } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key("classify", h.stable_hash(), &[]);
            let json = cached(common, key, || {
                let report = classify(&h);
                let mut value = serde_json::to_value(&report).expect("report serializes");
                let obj = value.as_object_mut().expect("report is an object");
                obj.insert("n".into(), h.vertex_count().into());
                obj.insert("m".into(), h.edge_count().into());
                Ok(value)
            })?;
            let csv = csv_fields(&[
                ("n", &json["n"]),
                ("m", &json["m"]),
                ("connected", &json["connected"]),
                ("component_count", &json["component_count"]),
                ("uniform_r", &json["uniform_r"]),
                ("linear", &json["linear"]),
                ("incidence_rank", &json["incidence_rank"]),
                ("classification", &json["classification"]),
                ("cycle_length", &json["cycle_length"]),
                ("cycle_edges", &json["cycle_edges"]),
            ]);
            Ok(Report::Value { json, csv })
        }
        Command::Chrompoly { instance, common } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key("chrompoly", h.stable_hash(), &[]);
            let json = cached(common, key, || {
                let poly = chromatic_polynomial(&h, budget)?;
                Ok(serde_json::json!({
                    "degree": poly.degree(),
                    "coefficients": poly.to_json(),
                }))
            })?;
            let rows: Vec<Vec<String>> = json["coefficients"]
                .as_array()
                .unwrap_or(&Vec::new())
                .iter()
                .enumerate()
                .map(|(degree, c)| vec![degree.to_string(), c.to_string()])
                .collect();
            let csv = csv_table(&["degree", "coefficient"], &rows);
            Ok(Report::Value { json, csv })
        }
        Command::Count {
            k,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key("count", h.stable_hash(), &[("k", k.to_string())]);
            let json = cached(common, key, || {
                let count = count_proper(&h, *k, budget)?;
                Ok(serde_json::json!({ "k": k, "count": count.to_string() }))
            })?;
            let csv = csv_table(
                &["k", "count"],
                &[vec![
                    k.to_string(),
                    json["count"].as_str().unwrap_or("").to_string(),
                ]],
            );
            Ok(Report::Value { json, csv })
        }
        Command::Dpbound {
            k,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key("dpbound", h.stable_hash(), &[("k", k.to_string())]);
            let json = cached(common, key, || {
                let bound = dp_upper_bound(&h, *k)?;
                Ok(serde_json::json!({ "k": k, "bound": rational_string(&bound) }))
            })?;
            let csv = csv_table(
                &["k", "bound"],
                &[vec![
                    k.to_string(),
                    json["bound"].as_str().unwrap_or("").to_string(),
                ]],
            );
            Ok(Report::Value { json, csv })
        }
        Command::Dpexact {
            k,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key("dpexact", h.stable_hash(), &[("k", k.to_string())]);
            let json = cached(common, key, || Ok(dp_exact(&h, *k, budget)?.to_json()))?;
            let csv = csv_fields(&[
                ("value", &json["value"]),
                ("covers_examined", &json["covers_examined"]),
                ("free_slots", &json["free_slots"]),
            ]);
            Ok(Report::Value { json, csv })
        }
        Command::Dpclosed {
            k,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key("dpclosed", h.stable_hash(), &[("k", k.to_string())]);
            let json = cached(common, key, || {
                Ok(match dp_closed(&h, *k) {
                    Some((value, form)) => serde_json::json!({
                        "k": k,
                        "value": value.to_string(),
                        "form": form.as_str(),
                    }),
                    None => serde_json::json!({ "k": k, "value": null, "form": null }),
                })
            })?;
            let csv = csv_fields(&[
                ("k", &json["k"]),
                ("value", &json["value"]),
                ("form", &json["form"]),
            ]);
            Ok(Report::Value { json, csv })
        }
        Command::Profile {
            edge,
            k,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key(
                "profile",
                h.stable_hash(),
                &[("e", edge.to_string()), ("k", k.to_string())],
            );
            let json = cached(common, key, || {
                Ok(boundary_profile(&h, *edge, *k, budget)?.to_json())
            })?;
            let empty = serde_json::Map::new();
            let rows: Vec<Vec<String>> = json["counts"]
                .as_object()
                .unwrap_or(&empty)
                .iter()
                .map(|(tuple, count)| vec![tuple.clone(), count.as_str().unwrap_or("").to_string()])
                .collect();
            let csv = csv_table(&["tuple", "count"], &rows);
            Ok(Report::Value { json, csv })
        }
        Command::Strictless {
            edge,
            k,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key(
                "strictless",
                h.stable_hash(),
                &[("e", edge.to_string()), ("k", k.to_string())],
            );
            let json = cached(common, key, || {
                let report = strict_less_test(&h, *edge, *k, budget)?;
                Ok(serde_json::json!({
                    "k": k,
                    "edge": edge,
                    "holds": report.holds,
                    "lhs": rational_string(&report.lhs),
                    "rhs": rational_string(&report.rhs),
                }))
            })?;
            let csv = csv_fields(&[
                ("holds", &json["holds"]),
                ("lhs", &json["lhs"]),
                ("rhs", &json["rhs"]),
            ]);
            Ok(Report::Value { json, csv })
        }
        Command::Mc {
            k,
            trials,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key(
                "mc",
                h.stable_hash(),
                &[
                    ("k", k.to_string()),
                    ("t", trials.to_string()),
                    ("s", common.seed.to_string()),
                ],
            );
            let json = cached(common, key, || {
                let (mean, min) = monte_carlo_mean(&h, *k, *trials, common.seed, budget)?;
                Ok(serde_json::json!({
                    "k": k,
                    "trials": trials,
                    "seed": common.seed,
                    "mean": rational_string(&mean),
                    "min": min.to_string(),
                }))
            })?;
            let csv = csv_fields(&[
                ("k", &json["k"]),
                ("trials", &json["trials"]),
                ("seed", &json["seed"]),
                ("mean", &json["mean"]),
                ("min", &json["min"]),
            ]);
            Ok(Report::Value { json, csv })
        }
        Command::Gap {
            kmin,
            kmax,
            instance,
            common,
        } => {
            if kmin > kmax {
                return Err(Failure::input("kmin must not exceed kmax"));
            }
            let h = load_instance(instance, common.seed)?;
            let key = cache_key(
                "gap",
                h.stable_hash(),
                &[("kmin", kmin.to_string()), ("kmax", kmax.to_string())],
            );
            let json = cached(common, key, || {
                let rows = gap_profile(&h, *kmin, *kmax, budget)?;
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|row| {
                        serde_json::json!({
                            "k": row.k,
                            "p": row.proper.to_string(),
                            "p_dp": row.dp.to_string(),
                            "gap": row.gap.to_string(),
                            "normalized_gap": row.normalized_gap.as_ref().map(rational_string),
                        })
                    })
                    .collect();
                Ok(serde_json::json!({ "rows": rows }))
            })?;
            let rows: Vec<Vec<String>> = json["rows"]
                .as_array()
                .unwrap_or(&Vec::new())
                .iter()
                .map(|row| {
                    vec![
                        row["k"].to_string(),
                        row["p"].as_str().unwrap_or("").to_string(),
                        row["p_dp"].as_str().unwrap_or("").to_string(),
                        row["gap"].as_str().unwrap_or("").to_string(),
                        row["normalized_gap"].as_str().unwrap_or("").to_string(),
                    ]
                })
                .collect();
            let csv = csv_table(&["k", "P", "P_DP", "gap", "normalized_gap"], &rows);
            Ok(Report::Value { json, csv })
        }
        Command::Chidp {
            kmax,
            instance,
            common,
        } => {
            let h = load_instance(instance, common.seed)?;
            let key = cache_key("chidp", h.stable_hash(), &[("kmax", kmax.to_string())]);
            let json = cached(common, key, || {
                let chi = dp_chromatic_number(&h, *kmax, budget)?;
                Ok(serde_json::json!({ "k_max": kmax, "chi_dp": chi }))
            })?;
            let csv = csv_fields(&[("k_max", &json["k_max"]), ("chi_dp", &json["chi_dp"])]);
            Ok(Report::Value { json, csv })
        }
        Command::Gen { instance, common } => {
            let h = load_instance(instance, common.seed)?;
            let text = match common.format {
                Format::Json => render_json(&h.to_json()),
                Format::Csv => h.to_terse(),
            };
            Ok(Report::Done(text, EXIT_OK))
        }
        Command::Verify { common } => {
            let claims = verify::run_all(budget);
            let all_passed = claims.iter().all(|c| c.passed);
            let text = match common.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = claims
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "name": c.name,
                                "passed": c.passed,
                                "detail": c.detail,
                            })
                        })
                        .collect();
                    render_json(&serde_json::json!({ "passed": all_passed, "claims": rows }))
                }
                Format::Csv => {
                    let rows: Vec<Vec<String>> = claims
                        .iter()
                        .map(|c| {
                            vec![
                                c.name.to_string(),
                                if c.passed { "PASS" } else { "FAIL" }.to_string(),
                                c.detail.clone(),
                            ]
                        })
                        .collect();
                    csv_table(&["claim", "status", "detail"], &rows)
                }
            };
            Ok(Report::Done(
                text,
                if all_passed { EXIT_OK } else { EXIT_VERIFY },
            ))
        }
    }
}
