use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use conceptmap::index::QueryOptions;
use conceptmap::{Error, Pipeline, PipelineConfig, Result, Stage};

/// Map programming concepts to the code that expresses them, then annotate
/// and search source files with those concepts.
#[derive(Debug, Parser)]
#[command(name = "conceptmap", version)]
struct Cli {
    /// Pipeline config file (TOML); defaults to ./conceptmap.toml when present.
    /// Relative paths inside it resolve against its directory.
    #[arg(long, short, global = true)]
    config: Option<PathBuf>,

    /// Override a config key, e.g. `--set top_k=20`. Repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE", value_parser = parse_override, global = true)]
    overrides: Vec<(String, String)>,

    /// Output directory, overriding the config's `output`.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Use upstream artifacts even when they were built with a different config.
    #[arg(long, global = true)]
    force: bool,

    /// Print what each stage would read and write, then stop.
    #[arg(long, global = true)]
    dry_run: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse the corpus dump and keep posts for the configured language.
    Ingest,
    /// Train the question-type classifier.
    ClassifyTrain,
    /// Keep only threads whose question is classified how-to.
    ClassifyFilter,
    /// Discover entities from question titles, starting from the seeds.
    Discover,
    /// Build TF-IDF syntax profiles for every entity.
    Profile,
    /// Write copies of the source files with concept markers.
    Annotate,
    /// Build the inverted index over the annotated files.
    Index,
    /// Run every stage in order.
    Run,
    /// Search the index; every word must match.
    Search {
        #[arg(required = true)]
        words: Vec<String>,
        /// Keep line order instead of listing concept matches first.
        #[arg(long)]
        no_concepts_first: bool,
    },
    /// Report precision@k of the profiles against the gold judgments.
    Eval {
        #[arg(short)]
        k: Option<usize>,
    },
    /// Show each stage's expected and on-disk config fingerprint.
    Status,
}

const DEFAULT_CONFIG: &str = "conceptmap.toml";

fn parse_override(s: &str) -> std::result::Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    let k = k.trim();
    if k.is_empty() {
        return Err(format!("empty key in `{s}`"));
    }
    Ok((k.to_string(), v.trim().to_string()))
}

fn load(cli: &Cli) -> Result<Pipeline> {
    let mut overrides = cli.overrides.clone();
    if let Some(out) = &cli.output {
        let out = std::path::absolute(out).map_err(|e| Error::io(out, e))?;
        let quoted = toml_string(&out.to_string_lossy());
        overrides.push(("output".into(), quoted));
    }
    let default = Path::new(DEFAULT_CONFIG);
    let path = match &cli.config {
        Some(p) => Some(p.as_path()),
        None => default.exists().then_some(default),
    };
    let config = PipelineConfig::load(path, &overrides)?;
    Pipeline::new(config, cli.force)
}

fn toml_string(s: &str) -> String {
    let mut out = String::from('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn run_stages(pipeline: &Pipeline, stages: &[Stage], dry_run: bool, out: &mut impl Write) -> Result<()> {
    for &stage in stages {
        if dry_run {
            write!(out, "{}", pipeline.plan(stage))?;
        } else {
            let report = pipeline.run(stage)?;
            writeln!(out, "{}: {}", report.stage, report.summary)?;
        }
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<()> {
    let pipeline = load(cli)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let stage = match &cli.command {
        Command::Ingest => Some(Stage::Ingest),
        Command::ClassifyTrain => Some(Stage::ClassifyTrain),
        Command::ClassifyFilter => Some(Stage::ClassifyFilter),
        Command::Discover => Some(Stage::Discover),
        Command::Profile => Some(Stage::Profile),
        Command::Annotate => Some(Stage::Annotate),
        Command::Index => Some(Stage::Index),
        _ => None,
    };
    if let Some(stage) = stage {
        return run_stages(&pipeline, &[stage], cli.dry_run, &mut out);
    }
    match &cli.command {
        Command::Run => run_stages(&pipeline, &pipeline.stages(), cli.dry_run, &mut out)?,
        Command::Search {
            words,
            no_concepts_first,
        } => {
            if cli.dry_run {
                writeln!(
                    out,
                    "search:\n  read  {}",
                    pipeline.artifact_path(Stage::Index).display()
                )?;
                return Ok(());
            }
            let words: Vec<&str> = words.iter().map(String::as_str).collect();
            let options = QueryOptions {
                concepts_first: !no_concepts_first,
            };
            for hit in pipeline.search(&words, options)? {
                writeln!(out, "{}:{}: {}", hit.path.display(), hit.line, hit.text)?;
            }
        }
        Command::Eval { k } => {
            let k = k.unwrap_or(pipeline.config().k);
            if k == 0 {
                return Err(Error::InvalidArgument("k must be at least 1".into()));
            }
            if cli.dry_run {
                writeln!(
                    out,
                    "eval:\n  read  {}",
                    pipeline.artifact_path(Stage::Profile).display()
                )?;
                return Ok(());
            }
            write!(out, "{}", pipeline.eval(k)?)?;
        }
        Command::Status => {
            for (stage, expected, found) in pipeline.status() {
                let state = match &found {
                    None => "missing",
                    Some(f) if *f == expected => "current",
                    Some(_) => "stale",
                };
                writeln!(out, "{:<16} {expected}  {state}", stage.name())?;
            }
        }
        _ => unreachable!("stage commands handled above"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Read(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_user_error() { 1 } else { 2 })
        }
    }
}
