//! Thin command-line front end over the library; every subcommand is a
//! direct wrapper around one public operation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use levelone::affine::{alcove, conformal_anomaly, trace_anomaly, LevelWeight};
use levelone::cache::Cache;
use levelone::config::{OutputFormat, Precision, RunConfig};
use levelone::embed::{branch_affine, resolve_embedding, EmbeddingFile};
use levelone::error::Error;
use levelone::heisenberg::{run_scenario, Scenario};
use levelone::suite::{run_suite, SuiteOptions};
use levelone::verlinde::{factorization_check, fusion_dim, strange_duality_dims};
use levelone::{RootSystem, Weight};

#[derive(Parser)]
#[command(
    name = "levelone",
    about = "Level-one affine characters, conformal branchings, Verlinde \
             dimensions and finite Heisenberg invariants",
    version
)]
struct Cli {
    /// Precision mode: "double" or "high:<digits>" (digits >= 15)
    #[arg(long, global = true, default_value = "double")]
    precision: String,
    /// Cache directory (also settable via LEVELONE_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, default_value = "json")]
    output: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conformal anomaly and per-weight trace anomalies of an alcove
    Anomaly {
        /// Semisimple type, e.g. "E8" or "A2+E6"
        lie_type: String,
        /// Level, one integer or a comma list per component
        level: String,
    },
    /// Branch an integrable module across a conformal embedding
    Branch {
        /// Embedding spec "ambient:sub", e.g. "E8:D8"
        spec: String,
        /// Ambient highest weight as comma-separated Dynkin labels, or "0"
        lambda: String,
        #[arg(long, default_value_t = 3)]
        cutoff: usize,
        /// Load the embedding from a file instead of the built-in table
        #[arg(long)]
        embedding_file: Option<PathBuf>,
    },
    /// Verlinde dimension of a space of conformal blocks
    Verlinde {
        lie_type: String,
        level: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
        /// Marked-point labels, each a comma list of Dynkin labels
        labels: Vec<String>,
    },
    /// Check the genus recursion for fusion dimensions
    Factorize {
        lie_type: String,
        level: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
        labels: Vec<String>,
    },
    /// Compare Verlinde dimensions across a strange-duality pair
    Duality {
        /// Pair name, e.g. "G2:F4", "SL5:SL5" or "A2:E6"
        pair: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
    },
    /// Run a finite Heisenberg scenario file
    Heisenberg {
        /// JSON file {"center":[...],"genus":g,"samples":n,"seed":s}
        scenario_file: PathBuf,
    },
    /// Run the verification suite
    Verify {
        /// Only run criteria whose id contains this substring
        #[arg(long)]
        only: Option<String>,
        /// Replacement data for the E8:G2+F4 embedding
        #[arg(long)]
        embedding_file: Option<PathBuf>,
    },
}

fn parse_levels(rs: &RootSystem, text: &str) -> Result<Vec<i64>, Error> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::InvalidData(format!("bad level list: {text}")))?;
    if parts.len() == 1 {
        Ok(vec![parts[0]; rs.num_components()])
    } else if parts.len() == rs.num_components() {
        Ok(parts)
    } else {
        Err(Error::RankMismatch { got: parts.len(), want: rs.num_components() })
    }
}

fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight, Error> {
    if text.trim() == "0" {
        return Ok(Weight::zero(rs.rank));
    }
    let labels: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::InvalidData(format!("bad weight labels: {text}")))?;
    if labels.len() != rs.rank {
        return Err(Error::RankMismatch { got: labels.len(), want: rs.rank });
    }
    Ok(Weight(labels))
}

/// Round every float in a JSON tree to 12 significant digits so output
/// bytes are reproducible.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.as_i64().is_none() && n.as_u64().is_none() {
                    let rounded: f64 = format!("{f:.11e}").parse().unwrap();
                    *v = json!(rounded);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn emit(config: &RunConfig, mut v: Value, table: impl FnOnce(&Value) -> String) {
    round_floats(&mut v);
    match config.output {
        OutputFormat::Json => println!("{v}"),
        OutputFormat::Table => println!("{}", table(&v)),
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let precision = {
        let p = cli.precision.trim();
        if p.eq_ignore_ascii_case("double") {
            Precision::Double
        } else if let Some(d) = p.strip_prefix("high:") {
            let digits: u32 = d
                .parse()
                .map_err(|_| Error::InvalidData(format!("bad precision: {p}")))?;
            if digits < 15 {
                return Err(Error::InvalidData("high precision needs >= 15 digits".into()));
            }
            Precision::High(digits)
        } else {
            return Err(Error::InvalidData(format!("bad precision: {p}")));
        }
    };
    let output = match cli.output.trim() {
        "json" => OutputFormat::Json,
        "table" => OutputFormat::Table,
        other => return Err(Error::InvalidData(format!("bad output format: {other}"))),
    };
    let config = RunConfig {
        cache_dir: cli.cache_dir.clone().or_else(|| RunConfig::default().cache_dir),
        precision,
        output,
        ..RunConfig::default()
    };
    let cache = Cache::from_config(&config);

    match cli.command {
        Command::Anomaly { lie_type, level } => {
            let rs = cache.root_system(&lie_type)?;
            let k = parse_levels(&rs, &level)?;
            let c = conformal_anomaly(&rs, &k)?;
            let weights = alcove(&rs, &k)?;
            let deltas: Vec<Value> = weights
                .iter()
                .map(|lw| {
                    let d = trace_anomaly(&rs, lw)?;
                    Ok(json!({"labels": lw.weight.0, "delta": d.to_string()}))
                })
                .collect::<Result<_, Error>>()?;
            let v = json!({
                "schema": "anomaly/1",
                "system": lie_type,
                "level": k,
                "conformal_anomaly": c.to_string(),
                "trace_anomalies": deltas,
            });
            emit(&config, v, |v| {
                let mut out = format!(
                    "system {}  level {}  c = {}\n",
                    v["system"].as_str().unwrap(),
                    v["level"].to_string(),
                    v["conformal_anomaly"].as_str().unwrap()
                );
                out.push_str("labels            delta\n");
                for d in v["trace_anomalies"].as_array().unwrap() {
                    out.push_str(&format!(
                        "{:<16}  {}\n",
                        d["labels"].to_string(),
                        d["delta"].as_str().unwrap()
                    ));
                }
                out.trim_end().to_string()
            });
            Ok(true)
        }
        Command::Branch { spec, lambda, cutoff, embedding_file } => {
            let e = match embedding_file {
                Some(path) => EmbeddingFile::load(&path)?,
                None => resolve_embedding(&spec)?,
            };
            let w = parse_weight(&e.ambient, &lambda)?;
            let lw = LevelWeight::new(&e.ambient, w, vec![1; e.ambient.num_components()])?;
            let result = branch_affine(&e, &lw, cutoff, config.max_character_entries)?;
            let mut v = result.to_json();
            v["schema"] = json!("branch/1");
            v["embedding"] = json!(spec);
            emit(&config, v, |v| {
                let mut out = format!("embedding {}\n", v["embedding"].as_str().unwrap());
                out.push_str("sub weight        shift  mult\n");
                for en in v["entries"].as_array().unwrap() {
                    out.push_str(&format!(
                        "{:<16}  {:>5}  {:>4}\n",
                        en["weight"].to_string(),
                        en["shift"],
                        en["mult"]
                    ));
                }
                out.trim_end().to_string()
            });
            Ok(true)
        }
        Command::Verlinde { lie_type, level, genus, labels } => {
            let rs = cache.root_system(&lie_type)?;
            let k = parse_levels(&rs, &level)?;
            let s = cache.s_matrix(&rs, &k, &config)?;
            let lws: Vec<LevelWeight> = labels
                .iter()
                .map(|t| LevelWeight::new(&rs, parse_weight(&rs, t)?, k.clone()))
                .collect::<Result<_, Error>>()?;
            let dim = fusion_dim(&s, genus, &lws)?;
            let v = json!({
                "schema": "verlinde/1",
                "system": lie_type,
                "level": k,
                "genus": genus,
                "labels": labels,
                "dimension": dim,
            });
            emit(&config, v, |v| {
                format!(
                    "system {}  level {}  genus {}  dimension {}",
                    v["system"].as_str().unwrap(),
                    v["level"].to_string(),
                    v["genus"],
                    v["dimension"]
                )
            });
            Ok(true)
        }
        Command::Factorize { lie_type, level, genus, labels } => {
            let rs = cache.root_system(&lie_type)?;
            let k = parse_levels(&rs, &level)?;
            let s = cache.s_matrix(&rs, &k, &config)?;
            let lws: Vec<LevelWeight> = labels
                .iter()
                .map(|t| LevelWeight::new(&rs, parse_weight(&rs, t)?, k.clone()))
                .collect::<Result<_, Error>>()?;
            let rep = factorization_check(&rs, &s, genus, &lws)?;
            let v = json!({
                "schema": "factorize/1",
                "system": lie_type,
                "level": k,
                "genus": genus,
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "holds": rep.holds,
            });
            let holds = rep.holds;
            emit(&config, v, |v| {
                format!(
                    "system {}  genus {}  lhs {} rhs {}  {}",
                    v["system"].as_str().unwrap(),
                    v["genus"],
                    v["lhs"],
                    v["rhs"],
                    if v["holds"].as_bool().unwrap() { "HOLDS" } else { "FAILS" }
                )
            });
            Ok(holds)
        }
        Command::Duality { pair, genus } => {
            let rep = strange_duality_dims(&pair, genus, &config)?;
            let v = json!({
                "schema": "duality/1",
                "pair": rep.pair,
                "genus": rep.genus,
                "dim_a": rep.dim_a,
                "dim_b": rep.dim_b,
                "equal": rep.equal,
                "closed_form": rep.closed_form,
            });
            let equal = rep.equal;
            emit(&config, v, |v| {
                format!(
                    "pair {}  genus {}  dims {} / {}  {}",
                    v["pair"].as_str().unwrap(),
                    v["genus"],
                    v["dim_a"],
                    v["dim_b"],
                    if v["equal"].as_bool().unwrap() { "EQUAL" } else { "DIFFER" }
                )
            });
            Ok(equal)
        }
        Command::Heisenberg { scenario_file } => {
            let text = std::fs::read_to_string(&scenario_file)?;
            let sc: Scenario = serde_json::from_str(&text)?;
            let rep = run_scenario(&sc)?;
            let all_one = rep.all_one;
            let mut v = serde_json::to_value(&rep)?;
            v["schema"] = json!("heisenberg/1");
            emit(&config, v, |v| {
                format!(
                    "center {}  genus {}  dims {}  {}",
                    v["center"].to_string(),
                    v["genus"],
                    v["invariant_dims"],
                    if v["all_one"].as_bool().unwrap() { "ALL ONE" } else { "UNEXPECTED" }
                )
            });
            Ok(all_one)
        }
        Command::Verify { only, embedding_file } => {
            let opts = SuiteOptions { filter: only, embedding_file };
            let results = run_suite(&opts, &config);
            for r in &results {
                println!("{}", r.line());
            }
            Ok(!results.is_empty() && results.iter().all(|r| r.passed))
        }
    }
}

/// Exit codes: 0 on success, 1 for domain errors (bad input, unknown
/// types), 2 for verification failures (checks computed but refuted).
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::SMatrixNumeric { .. }
        | Error::NonIntegerDimension { .. }
        | Error::ShiftMismatch { .. }
        | Error::NegativeResidue { .. }
        | Error::ResidueNotDominant { .. }
        | Error::SigmaNotInvariant
        | Error::NonIntegerTrace(_)
        | Error::LiftNotHomomorphism => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
