use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperwhitney::charflow::{
    characteristic_polynomial, flow_count, flow_polynomial, nowhere_zero_flow_count, proper_coloring_count,
};
use hyperwhitney::format::HypermapDocument;
use hyperwhitney::medial::{
    circuit_partition_by_refinements, circuit_partition_polynomial, eulerian_coloring_sum, from_eulerian_digraph,
    medial_map, EulerianDigraph,
};
use hyperwhitney::nc::refinement_count;
use hyperwhitney::verify::{selftest, SelftestConfig};
use hyperwhitney::whitney::{dual, wet_dry_polynomial, whitney, whitney_bruteforce_par, Method, WhitneyResult};
use hyperwhitney::Hypermap;

/// Whitney polynomials of hypermaps.
///
/// Hypermap files hold `sigma:` and `alpha:` lines in cycle notation, e.g.
/// `sigma: (1 4)(2 5)(3)` and `alpha: (1 2 3)(4 5)`, or a JSON object with
/// `n`, `sigma` and `alpha` as arrays of cycles. Use `-` to read stdin.
#[derive(Parser)]
#[command(name = "hyperwhitney", version)]
struct Cli {
    /// Emit {input_echo, result, method, stats} as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Phi,
    Psi,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Whitney polynomial R(u, v).
    Whitney {
        file: String,
        #[arg(long, value_enum, default_value = "phi")]
        method: MethodArg,
        /// Cross-check the result against brute force; a mismatch is an error.
        #[arg(long)]
        check: bool,
        /// Reduce the brute-force sum on all cores.
        #[arg(long)]
        parallel: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_REFINEMENTS)]
        max_refinements: u64,
    },
    /// Genus of the collection (sum over components).
    Genus { file: String },
    /// The dual collection (α⁻¹σ, α⁻¹).
    Dual { file: String },
    /// The medial map on signed points i-, i+.
    Medial { file: String },
    /// Circuit partition polynomial j(M; x) of the medial map.
    CircuitPartition {
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_REFINEMENTS)]
        max_refinements: u64,
    },
    /// Wet/dry polynomial of a genus-zero collection.
    WetDry {
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_REFINEMENTS)]
        max_refinements: u64,
    },
    /// Characteristic polynomial χ(t).
    Charpoly {
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_REFINEMENTS)]
        max_refinements: u64,
    },
    /// Flow polynomial C(t).
    Flowpoly {
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_REFINEMENTS)]
        max_refinements: u64,
    },
    /// Number of flows over GF(q).
    Flows {
        file: String,
        #[arg(long)]
        q: u64,
        /// Count only flows vanishing nowhere except at buds.
        #[arg(long)]
        nowhere_zero: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATION)]
        max_flows: u64,
    },
    /// Proper m-colorings of the vertices, or with --eulerian the weighted
    /// count of Eulerian m-colorings of the medial map.
    Colorings {
        file: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        eulerian: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATION)]
        max_colorings: u64,
    },
    /// A collection whose directed medial graph is the given Eulerian digraph
    /// (one `tail head` pair per line).
    FromDigraph { file: String },
    /// Run the golden examples and every identity on a seeded random corpus.
    Selftest {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 120)]
        instances: usize,
        #[arg(long)]
        parallel: bool,
    },
}

const DEFAULT_MAX_REFINEMENTS: u64 = 1_000_000;
const DEFAULT_MAX_ENUMERATION: u64 = 1_000_000;

struct Output {
    echo: Value,
    result: Value,
    text: String,
    method: Option<String>,
    stats: Value,
}

impl Output {
    fn plain(echo: Value, text: String) -> Self {
        Output { echo, result: Value::String(text.clone()), text, method: None, stats: Value::Null }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load(path: &str) -> Result<(Hypermap, Value)> {
    let text = read_input(path)?;
    let doc = HypermapDocument::parse(&text).with_context(|| format!("parsing {path}"))?;
    let h = doc.to_hypermap().with_context(|| format!("building hypermap from {path}"))?;
    Ok((h, Value::String(doc.to_string())))
}

fn guard_refinements(h: &Hypermap, cap: u64) -> Result<()> {
    let count = refinement_count(h.alpha());
    if count > cap.into() {
        bail!("{count} refinements exceed the cap of {cap}; raise it with --max-refinements");
    }
    Ok(())
}

fn method_of(arg: MethodArg) -> Vec<Method> {
    match arg {
        MethodArg::Brute => vec![Method::BruteForce],
        MethodArg::Phi => vec![Method::PhiRecurrence],
        MethodArg::Psi => vec![Method::PsiRecurrence],
        MethodArg::All => vec![Method::BruteForce, Method::PhiRecurrence, Method::PsiRecurrence],
    }
}

fn run_whitney(h: &Hypermap, echo: Value, arg: MethodArg, check: bool, parallel: bool) -> Result<Output> {
    let results: Vec<WhitneyResult> = method_of(arg)
        .into_iter()
        .map(|m| {
            if m == Method::BruteForce && parallel {
                let mut r = whitney(h, Method::PhiRecurrence);
                r.polynomial = whitney_bruteforce_par(h);
                r.method = Method::BruteForce;
                r.stats = Default::default();
                r
            } else {
                whitney(h, m)
            }
        })
        .collect();
    if check || results.len() > 1 {
        let reference = if parallel { whitney_bruteforce_par(h) } else { whitney(h, Method::BruteForce).polynomial };
        for r in &results {
            if r.polynomial != reference {
                bail!("check failed: {} gives {} but brute force gives {}", r.method.name(), r.polynomial, reference);
            }
        }
    }
    let text = results.iter().map(|r| r.polynomial.to_string()).collect::<Vec<_>>().join("\n");
    let names: Vec<&str> = results.iter().map(|r| r.method.name()).collect();
    let result = if results.len() == 1 {
        Value::String(results[0].polynomial.to_string())
    } else {
        Value::Object(results.iter().map(|r| (r.method.name().to_string(), json!(r.polynomial.to_string()))).collect())
    };
    let stats = Value::Object(
        results
            .iter()
            .map(|r| (r.method.name().to_string(), serde_json::to_value(&r.stats).expect("stats serialize")))
            .collect(),
    );
    Ok(Output { echo, result, text, method: Some(names.join(",")), stats })
}

fn run(cli: &Cli) -> Result<(Output, bool)> {
    let out = match &cli.command {
        Command::Whitney { file, method, check, parallel, max_refinements } => {
            let (h, echo) = load(file)?;
            guard_refinements(&h, *max_refinements)?;
            run_whitney(&h, echo, *method, *check, *parallel)?
        }
        Command::Genus { file } => {
            let (h, echo) = load(file)?;
            let mut o = Output::plain(echo, h.genus().to_string());
            o.result = json!(h.genus());
            o
        }
        Command::Dual { file } => {
            let (h, echo) = load(file)?;
            Output::plain(echo, HypermapDocument::from_hypermap(&dual(&h), None).to_string())
        }
        Command::Medial { file } => {
            let (h, echo) = load(file)?;
            Output::plain(echo, medial_map(&h).to_string())
        }
        Command::CircuitPartition { file, max_refinements } => {
            let (h, echo) = load(file)?;
            guard_refinements(&h, *max_refinements)?;
            let j = circuit_partition_polynomial(&medial_map(&h));
            let by_refinements = circuit_partition_by_refinements(&h);
            if j != by_refinements {
                bail!("check failed: states give {j} but refinements give {by_refinements}");
            }
            Output::plain(echo, j.to_string())
        }
        Command::WetDry { file, max_refinements } => {
            let (h, echo) = load(file)?;
            guard_refinements(&h, *max_refinements)?;
            Output::plain(echo, wet_dry_polynomial(&h)?.to_string())
        }
        Command::Charpoly { file, max_refinements } => {
            let (h, echo) = load(file)?;
            guard_refinements(&h, *max_refinements)?;
            Output::plain(echo, characteristic_polynomial(&h).display("t").to_string())
        }
        Command::Flowpoly { file, max_refinements } => {
            let (h, echo) = load(file)?;
            guard_refinements(&h, *max_refinements)?;
            Output::plain(echo, flow_polynomial(&h).display("t").to_string())
        }
        Command::Flows { file, q, nowhere_zero, max_flows } => {
            let (h, echo) = load(file)?;
            let count =
                if *nowhere_zero { nowhere_zero_flow_count(&h, *q, *max_flows)? } else { flow_count(&h, *q, *max_flows)? };
            let mut o = Output::plain(echo, count.to_string());
            o.result = json!(count.to_string());
            o
        }
        Command::Colorings { file, m, eulerian, max_colorings } => {
            let (h, echo) = load(file)?;
            let count = if *eulerian { eulerian_coloring_sum(&h, *m)? } else { proper_coloring_count(&h, *m, *max_colorings)? };
            let mut o = Output::plain(echo, count.to_string());
            o.result = json!(count.to_string());
            o
        }
        Command::FromDigraph { file } => {
            let text = read_input(file)?;
            let d = EulerianDigraph::parse(&text).with_context(|| format!("parsing {file}"))?;
            let h = from_eulerian_digraph(&d);
            Output::plain(Value::String(d.to_string()), HypermapDocument::from_hypermap(&h, None).to_string())
        }
        Command::Selftest { n_max, seed, instances, parallel } => {
            let config = SelftestConfig { seed: *seed, n_max: *n_max, instances: *instances, parallel: *parallel };
            let report = selftest(config);
            let echo = json!({ "seed": seed, "n_max": n_max, "instances": instances });
            let passed = report.passed();
            let out = Output {
                echo,
                result: serde_json::to_value(&report).expect("report serializes"),
                text: report.to_string(),
                method: None,
                stats: Value::Null,
            };
            return Ok((out, passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            if cli.json {
                let doc = json!({
                    "input_echo": out.echo,
                    "result": out.result,
                    "method": out.method,
                    "stats": out.stats,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("json output"));
            } else {
                println!("{}", out.text);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
