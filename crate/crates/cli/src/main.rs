//! `graded-ideals`: classify graded ideals, list graded ideal lattices, run
//! the theorem harness and build quotients, localizations and
//! idealizations from ring-spec files.
//!
//! Exit codes: 0 success, 1 verification found violations, 2 malformed
//! input (ring-spec or corpus syntax, bad flags), 3 semantic error (invalid
//! structure, unknown ideal, failed construction), 4 I/O failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use graded_ideals::classify::{Classifier, Mutation};
use graded_ideals::constructions::{idealization, localize, multiplicative_closure, quotient, GradedModule};
use graded_ideals::harness::{build_corpus, CorpusSpec, Harness, HarnessError, TheoremId};
use graded_ideals::ringspec::{self, RingSpec, SpecError};
use graded_ideals::{enumerate_graded_ideals, GradedIdeal, GradedRing, PhiMap};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "graded-ideals", version, about = "Graded phi-r-ideals of finite graded rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every predicate verdict for one graded ideal.
    Classify {
        file: PathBuf,
        /// A named ideal from the file, or generators such as `[2]` or `2,3`.
        #[arg(long)]
        ideal: String,
        /// empty, zero, identity, power:N or omega.
        #[arg(long, default_value = "zero")]
        phi: String,
    },
    /// List all graded ideals with their homogeneous components.
    Enumerate { file: PathBuf },
    /// Run the theorem harness over a corpus.
    Verify(VerifyArgs),
    /// Build a quotient, localization or idealization and print it as a ring-spec.
    Construct(ConstructArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// `default` or a TOML corpus spec.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// A theorem id such as Thm2, or `all`.
    #[arg(long, default_value = "all")]
    theorem: String,
    /// Write the machine-readable JSON summary here.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Run with a deliberately broken classifier (for checking the harness).
    #[arg(long)]
    mutation: Option<String>,
    /// Violations listed per theorem in the text report.
    #[arg(long, default_value_t = 5)]
    max_violations: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Construction {
    /// R/P for a named ideal or generators.
    #[arg(long)]
    quotient: Option<String>,
    /// S^-1 R for the multiplicative set generated by a named set or elements.
    #[arg(long)]
    localize: Option<String>,
    /// R(+)M for M = zero, self, cyclic:N or spec (the file's module block).
    #[arg(long)]
    idealize: Option<String>,
}

#[derive(Args)]
struct ConstructArgs {
    file: PathBuf,
    #[command(flatten)]
    construction: Construction,
    /// Write the spec here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Spec { path: PathBuf, source: SpecError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Semantic(String),
    #[error("verification found {0} violations")]
    Violations(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Violations(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Spec { source, .. } if source.is_syntax() => 2,
            CliError::Spec { .. } | CliError::Semantic(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

fn semantic(e: impl std::fmt::Display) -> CliError {
    CliError::Semantic(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<RingSpec, CliError> {
    ringspec::parse(&read(path)?).map_err(|source| CliError::Spec {
        path: path.to_path_buf(),
        source,
    })
}

/// `[1, 2]`, `{1,2}`, `1 2` or `1,2`.
fn parse_list(text: &str) -> Option<Vec<usize>> {
    let inner = text.trim().trim_start_matches(['[', '{']).trim_end_matches([']', '}']);
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().ok())
        .collect()
}

fn resolve<'a>(spec: &'a RingSpec, named: impl Fn(&'a RingSpec, &str) -> Option<&'a [usize]>, arg: &str) -> Result<Vec<usize>, CliError> {
    if let Some(set) = named(spec, arg.trim()) {
        return Ok(set.to_vec());
    }
    parse_list(arg).ok_or_else(|| CliError::Semantic(format!("unknown name or malformed element list {arg:?}")))
}

fn resolve_ideal(spec: &RingSpec, arg: &str) -> Result<GradedIdeal, CliError> {
    let gens = resolve(spec, RingSpec::ideal, arg)?;
    if let Some(&x) = gens.iter().find(|&&x| x >= spec.ring.order()) {
        return Err(CliError::Semantic(format!("element {x} is outside a ring of order {}", spec.ring.order())));
    }
    GradedIdeal::generate(&spec.ring, &gens).map_err(semantic)
}

fn cmd_classify(file: &Path, ideal: &str, phi: &str) -> Result<(), CliError> {
    let spec = load(file)?;
    let phi: PhiMap = phi.parse().map_err(|e| CliError::Usage(format!("--phi: {e}")))?;
    let p = resolve_ideal(&spec, ideal)?;
    let inventory = enumerate_graded_ideals(&spec.ring).map_err(semantic)?;
    let c = Classifier::new().classify(&p, &phi, &inventory).map_err(semantic)?;
    println!("ideal {}", c.ideal);
    println!("phi   {}", c.phi);
    for (name, v) in c.verdicts() {
        match &v.witness {
            Some(w) if !v.holds => println!("{name:<15} false  witness {w}"),
            _ => println!("{name:<15} {}", v.holds),
        }
    }
    Ok(())
}

fn cmd_enumerate(file: &Path) -> Result<(), CliError> {
    let spec = load(file)?;
    let ring = &spec.ring;
    let inventory = enumerate_graded_ideals(ring).map_err(semantic)?;
    println!("{} graded ideals", inventory.len());
    for (i, p) in inventory.ideals().iter().enumerate() {
        println!("{i}: {}", p.elements());
        for g in ring.group().elements() {
            println!("    degree {g}: {}", p.component(g));
        }
    }
    Ok(())
}

fn corpus_spec(arg: &str) -> Result<CorpusSpec, CliError> {
    if arg == "default" {
        return Ok(CorpusSpec::default());
    }
    let path = Path::new(arg);
    let mut spec: CorpusSpec =
        toml::from_str(&read(path)?).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    for seed in spec.seeds.iter_mut() {
        if seed.is_relative() {
            *seed = dir.join(&*seed);
        }
    }
    Ok(spec)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let ids = if args.theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![args.theorem.parse().map_err(|e: HarnessError| CliError::Usage(e.to_string()))?]
    };
    let classifier = match &args.mutation {
        None => Classifier::new(),
        Some(name) => {
            let m = Mutation::ALL
                .into_iter()
                .find(|m| m.name() == name)
                .ok_or_else(|| CliError::Usage(format!("unknown mutation {name:?}")))?;
            Classifier::with_mutation(m)
        }
    };
    let corpus = build_corpus(&corpus_spec(&args.corpus)?).map_err(semantic)?;
    let harness = Harness::with_classifier(corpus, classifier).map_err(semantic)?;
    let suite = harness.run_selected(&ids).map_err(semantic)?;
    print!("{}", suite.render_text(args.max_violations));
    if let Some(path) = &args.summary {
        write(path, &suite.to_json())?;
    }
    if suite.passed() {
        Ok(())
    } else {
        Err(CliError::Violations(suite.violation_count()))
    }
}

fn module_for(spec: &RingSpec, arg: &str) -> Result<GradedModule, CliError> {
    let base = &spec.ring;
    match arg.trim() {
        "zero" | "0" | "M=0" => Ok(GradedModule::zero_module(base)),
        "self" => Ok(GradedModule::regular(base)),
        "spec" => spec
            .module
            .clone()
            .ok_or_else(|| CliError::Semantic("the file has no module block".to_string())),
        other => {
            let n = other
                .strip_prefix("cyclic:")
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| CliError::Usage(format!("--idealize: unknown module {other:?}")))?;
            GradedModule::cyclic(base, n).map_err(semantic)
        }
    }
}

fn constructed(spec: &RingSpec, c: &Construction) -> Result<Arc<GradedRing>, CliError> {
    if let Some(arg) = &c.quotient {
        let p = resolve_ideal(spec, arg)?;
        return Ok(Arc::clone(quotient(&p).map_err(semantic)?.target()));
    }
    if let Some(arg) = &c.localize {
        let gens = resolve(spec, RingSpec::mulset, arg)?;
        if let Some(&x) = gens.iter().find(|&&x| x >= spec.ring.order()) {
            return Err(CliError::Semantic(format!("element {x} is outside the ring")));
        }
        let s = multiplicative_closure(&spec.ring, &gens);
        return Ok(Arc::clone(localize(&spec.ring, &s).map_err(semantic)?.target()));
    }
    let arg = c.idealize.as_deref().expect("clap requires one construction");
    let module = module_for(spec, arg)?;
    Ok(Arc::clone(idealization(&module).map_err(semantic)?.ring()))
}

fn cmd_construct(args: &ConstructArgs) -> Result<(), CliError> {
    let spec = load(&args.file)?;
    let ring = constructed(&spec, &args.construction)?;
    let text = ringspec::emit(&ring);
    match &args.output {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { file, ideal, phi } => cmd_classify(&file, &ideal, &phi),
        Command::Enumerate { file } => cmd_enumerate(&file),
        Command::Verify(args) => cmd_verify(&args),
        Command::Construct(args) => cmd_construct(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
