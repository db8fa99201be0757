use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use taulab::cli::{
    algebra_info, class_table, exit, exit_code, outcome_json, outcome_text, parse_steps, run_steps, verify_text,
};
use taulab::corpus::{builtin_files, corpus_files};
use taulab::homfun::{classify, indecomposables, Settings, DEFAULT_BOUND};
use taulab::modrep::expr::parse_module;
use taulab::modrep::Labeled;
use taulab::schema::{AlgebraFile, BuildOptions};
use taulab::verify::{run_suite_on_all, Suite};
use taulab::{Algebra, Error, Result};

#[derive(Parser)]
#[command(name = "taulab", version, about = "Auslander-Reiten computations over finite-dimensional algebras")]
struct Cli {
    /// Override the prime of the ground field.
    #[arg(long, global = true)]
    field: Option<u64>,
    #[arg(long, global = true, env = "TAULAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Longest resolution or coresolution explored before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND as u64, value_parser = clap::value_parser!(u64).range(1..))]
    max_resolution: u64,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_path_length: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationFilter {
    Linear,
    Cyclic,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, selfinjectivity, Gorenstein degree, dominant dimension, f.
    Info { file: PathBuf },
    /// Apply a chain of operations, e.g. "omega 2 then nu", to a module.
    Compute { op: String, module: String, file: PathBuf },
    /// Tabulate the invariants of every indecomposable, or of the given modules.
    Classify {
        file: PathBuf,
        #[arg(long = "module")]
        modules: Vec<String>,
    },
    /// Run a verification suite ("all" for every suite) on a file or a corpus.
    Verify {
        suite: String,
        file: Option<PathBuf>,
        /// Corpus bounds "n,c": at most n vertices, Kupisch entries at most c.
        #[arg(long, conflicts_with = "file")]
        corpus: Option<String>,
    },
    /// List or write the corpus of algebra files.
    Corpus {
        max_vertices: usize,
        max_length: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OrientationFilter::Both)]
        orientation: OrientationFilter,
    },
}

impl Cli {
    fn settings(&self) -> Settings {
        Settings { seed: self.seed, bound: self.max_resolution as usize }
    }

    fn options(&self) -> BuildOptions {
        BuildOptions { field: self.field, max_path_length: self.max_path_length.map(|l| l as usize) }
    }

    fn load(&self, path: &Path) -> Result<Algebra> {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        AlgebraFile::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?.build(self.options())
    }

    fn emit(&self, text: String, value: serde_json::Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json output")),
        }
    }

    fn run(&self) -> Result<u8> {
        let settings = self.settings();
        match &self.command {
            Command::Info { file } => {
                let info = algebra_info(&self.load(file)?, settings)?;
                self.emit(info.text(), json!(info));
            }
            Command::Compute { op, module, file } => {
                let steps = parse_steps(op)?;
                let a = self.load(file)?;
                let out = run_steps(parse_module(&a, module)?, &steps, settings)?;
                self.emit(outcome_text(&out, settings.seed)?, outcome_json(&out, settings.seed)?);
            }
            Command::Classify { file, modules } => {
                let a = self.load(file)?;
                let list = if modules.is_empty() {
                    indecomposables(&a, settings.seed)?
                } else {
                    modules
                        .iter()
                        .map(|e| Ok(Labeled { label: e.clone(), module: parse_module(&a, e)? }))
                        .collect::<Result<_>>()?
                };
                let reports = classify(&list, settings)?;
                self.emit(class_table(&reports).trim_end().to_string(), json!(reports));
            }
            Command::Verify { suite, file, corpus } => {
                let suites = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
                let algebras = match (file, corpus) {
                    (Some(f), None) => vec![self.load(f)?],
                    (None, Some(spec)) => {
                        let (n, c) = parse_bounds(spec)?;
                        corpus_files(n, c).iter().map(|(_, f)| f.build(self.options())).collect::<Result<_>>()?
                    }
                    _ => return Err(Error::Parse("verify needs a file or --corpus n,c".into())),
                };
                let mut results = Vec::new();
                for s in suites {
                    results.extend(run_suite_on_all(s, &algebras, settings)?);
                }
                self.emit(verify_text(&results), json!(results));
                if results.iter().any(|r| !r.passed()) {
                    return Ok(exit::VERIFICATION_FAILED);
                }
            }
            Command::Corpus { max_vertices, max_length, out, orientation } => {
                if *max_vertices == 0 || *max_length == 0 {
                    return Err(Error::Parse("corpus bounds must be at least 1".into()));
                }
                let builtin: Vec<String> = builtin_files().into_iter().map(|(n, _)| n).collect();
                let files: Vec<_> = corpus_files(*max_vertices, *max_length)
                    .into_iter()
                    .filter(|(name, f)| {
                        let cyclic = matches!(f.kupisch(), Ok(Some(k)) if k.is_cyclic());
                        builtin.contains(name)
                            || match orientation {
                                OrientationFilter::Both => true,
                                OrientationFilter::Linear => !cyclic,
                                OrientationFilter::Cyclic => cyclic,
                            }
                    })
                    .collect();
                if let Some(dir) = out {
                    fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
                    for (name, f) in &files {
                        let path = dir.join(format!("{name}.json"));
                        fs::write(&path, f.to_json() + "\n")
                            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    }
                }
                let names: Vec<&str> = files.iter().map(|(n, _)| n.as_str()).collect();
                let all: Vec<&AlgebraFile> = files.iter().map(|(_, f)| f).collect();
                self.emit(names.join("\n"), json!(all));
            }
        }
        Ok(exit::OK)
    }
}

fn parse_bounds(spec: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("corpus bounds {spec:?} should look like 4,5"));
    let (n, c) = spec.split_once(',').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let c: usize = c.trim().parse().map_err(|_| bad())?;
    if n == 0 || c == 0 {
        return Err(bad());
    }
    Ok((n, c))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
