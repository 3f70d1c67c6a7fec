use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use saacbr::io::{
    export_graph, load_casebase, to_csv, CasebaseDocument, Format, LoadOptions, Loaded,
    PredictionReport, Stage,
};
use saacbr::{evaluate_loo, evaluate_split, predict, FeatureSet, Mode, ModelConfig, Outcome};

/// Exit code for bad invocations.
const EXIT_USAGE: u8 = 1;
/// Exit code for unreadable or invalid data.
const EXIT_DATA: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "saacbr",
    version,
    about = "Case-based classification with bipolar argumentation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a new case.
    Predict {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// Features of the new case, comma separated.
        #[arg(long = "new", value_name = "FEATURES")]
        new_case: String,
        /// Print the prediction, labelling and edges as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List past cases with no path to the default argument.
    Spikes {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// Features of the new case, comma separated.
        #[arg(long = "new", value_name = "FEATURES")]
        new_case: String,
        /// Print the spikes as JSON, with the mode and whether the default is least.
        #[arg(long)]
        json: bool,
    },
    /// Leave-one-out or seeded train/test evaluation.
    Evaluate {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// Leave-one-out (the default protocol).
        #[arg(long, conflicts_with = "split")]
        loo: bool,
        /// Fraction of cases used for training in a random split.
        #[arg(long, value_name = "RATIO")]
        split: Option<f64>,
        /// Seed for the random split.
        #[arg(long, default_value_t = 0, requires = "split")]
        seed: u64,
        /// Print the per-case records and summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Write the framework as a Graphviz graph.
    Export {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// Features of the new case, comma separated.
        #[arg(long = "new", value_name = "FEATURES")]
        new_case: String,
        /// `bipolar` for mined attacks and supports, `translated` for the attack-only graph.
        #[arg(long, default_value = "translated")]
        stage: Stage,
        /// Output file; stdout when omitted.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Re-encode a casebase as JSON or CSV.
    Convert {
        #[command(flatten)]
        data: DataArgs,
        /// Target format, `json` or `csv`.
        #[arg(long, value_name = "FORMAT")]
        to: Format,
        /// Output file; stdout when omitted.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct DataArgs {
    /// Casebase file, `.json` or `.csv`.
    #[arg(long, value_name = "FILE")]
    casebase: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long)]
    format: Option<Format>,
    /// Default outcome token (CSV default: "−"; JSON: taken from the file).
    #[arg(long, value_name = "TOKEN")]
    default_outcome: Option<String>,
    /// The other outcome token, when it cannot be inferred from the data.
    #[arg(long, value_name = "TOKEN")]
    complement_outcome: Option<String>,
    /// Features of the default argument (default: none, the least element).
    #[arg(long, value_name = "FEATURES")]
    default_features: Option<String>,
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// `aacbr` for attacks only, `saacbr` to also mine supports.
    #[arg(long, default_value = "saacbr")]
    mode: Mode,
    /// Also generate secondary attacks (saacbr only).
    #[arg(long)]
    secondary_attacks: bool,
}

impl ModelArgs {
    fn config(&self) -> Result<ModelConfig, Failure> {
        let config = ModelConfig {
            mode: self.mode,
            secondary_attacks: self.secondary_attacks,
        };
        config
            .validate()
            .map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(config)
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    fn data(e: impl std::fmt::Display) -> Self {
        Failure::Data(e.to_string())
    }
}

fn load(data: &DataArgs) -> Result<Loaded, Failure> {
    let format = data.format.or_else(|| Format::from_path(&data.casebase));
    let default_outcome = match (&data.default_outcome, format) {
        (Some(tok), _) => Some(Outcome::new(tok.clone())),
        (None, Some(Format::Csv)) => Some(Outcome::new("−")),
        (None, _) => None,
    };
    let options = LoadOptions {
        default_id: None,
        default_outcome,
        default_features: data.default_features.as_deref().map(FeatureSet::parse_list),
        complement: data.complement_outcome.clone().map(Outcome::new),
    };
    let loaded = load_casebase(&data.casebase, format, &options).map_err(Failure::data)?;
    let report = &loaded.report;
    if !report.duplicates.is_empty() {
        eprintln!(
            "warning: dropped {} duplicate case(s): {}",
            report.duplicates.len(),
            report.duplicates.join(", ")
        );
    }
    if !report.merged_into_default.is_empty() {
        eprintln!(
            "warning: merged {} case(s) identical to the default argument: {}",
            report.merged_into_default.len(),
            report.merged_into_default.join(", ")
        );
    }
    Ok(loaded)
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Data(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Data(e.to_string())),
    }
}

fn join_or_none<'a>(items: impl IntoIterator<Item = &'a str>) -> String {
    let joined = items.into_iter().collect::<Vec<_>>().join(", ");
    if joined.is_empty() {
        "(none)".to_owned()
    } else {
        joined
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Predict {
            data,
            model,
            new_case,
            json,
        } => {
            let config = model.config()?;
            let loaded = load(&data)?;
            let x_new = FeatureSet::parse_list(&new_case);
            let p = predict(&loaded.casebase, &config, &x_new).map_err(Failure::data)?;
            if json {
                write_output(None, &PredictionReport::new(&p, &config).to_json())
            } else {
                let report = PredictionReport::new(&p, &config);
                let mut text = format!("outcome: {}\n", report.outcome);
                text += &format!(
                    "default {}: {}\n",
                    loaded.casebase.default_case().id,
                    if p.default_accepted {
                        "accepted"
                    } else {
                        "rejected"
                    }
                );
                text += &format!(
                    "grounded extension: {}\n",
                    join_or_none(report.extension.iter().map(String::as_str))
                );
                text += &format!(
                    "spikes: {}\n",
                    join_or_none(report.spikes.iter().map(String::as_str))
                );
                write_output(None, &text)
            }
        }
        Command::Spikes {
            data,
            model,
            new_case,
            json,
        } => {
            let config = model.config()?;
            let loaded = load(&data)?;
            let least = loaded.casebase.default_is_least();
            if !least {
                eprintln!("warning: the default argument is not the least element; spike-freeness is not guaranteed");
            }
            let p = predict(
                &loaded.casebase,
                &config,
                &FeatureSet::parse_list(&new_case),
            )
            .map_err(Failure::data)?;
            if json {
                let value = serde_json::json!({
                    "mode": config.mode,
                    "default_is_least": least,
                    "spikes": p.spikes,
                });
                write_output(
                    None,
                    &format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
                )
            } else {
                let text: String = p.spikes.iter().map(|s| format!("{s}\n")).collect();
                write_output(None, &text)
            }
        }
        Command::Evaluate {
            data,
            model,
            loo: _,
            split,
            seed,
            json,
        } => {
            let config = model.config()?;
            let loaded = load(&data)?;
            let report = match split {
                Some(ratio) => evaluate_split(&loaded.casebase, &config, ratio, seed),
                None => evaluate_loo(&loaded.casebase, &config),
            }
            .map_err(Failure::data)?;
            if json {
                write_output(
                    None,
                    &format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
                )
            } else {
                let mut text = String::new();
                for r in &report.records {
                    text += &format!(
                        "{}\tactual {}\tpredicted {}\tspikes {}\n",
                        r.id, r.actual, r.predicted, r.spikes
                    );
                }
                let c = report.confusion;
                let outcomes = loaded.casebase.outcomes();
                let (d, n) = (outcomes.default_outcome(), outcomes.complement_outcome());
                text += &format!(
                    "accuracy: {:.4} ({}/{})\n",
                    report.accuracy, report.correct, report.total
                );
                text += &format!(
                    "confusion (actual/predicted): {d}/{d} {}, {d}/{n} {}, {n}/{d} {}, {n}/{n} {}\n",
                    c.default_as_default, c.default_as_complement, c.complement_as_default, c.complement_as_complement
                );
                text += &format!("spikes: {}\n", report.total_spikes);
                write_output(None, &text)
            }
        }
        Command::Export {
            data,
            model,
            new_case,
            stage,
            output,
        } => {
            let config = model.config()?;
            let loaded = load(&data)?;
            let p = predict(
                &loaded.casebase,
                &config,
                &FeatureSet::parse_list(&new_case),
            )
            .map_err(Failure::data)?;
            write_output(output.as_ref(), &export_graph(&p, stage))
        }
        Command::Convert { data, to, output } => {
            let loaded = load(&data)?;
            let text = match to {
                Format::Json => {
                    CasebaseDocument::from_casebase(&loaded.casebase, &loaded.features).to_json()
                }
                Format::Csv => to_csv(&loaded.casebase, &loaded.features).map_err(Failure::data)?,
            };
            write_output(output.as_ref(), &text)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
