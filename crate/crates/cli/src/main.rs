//! `brickforge`: analysis, reduction and generation of near-bipartite
//! bricks from the command line.
//!
//! Exit status: 0 success, 1 usage or input error, 2 order cap exceeded,
//! 3 a checked theorem failed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use brickforge::engine;
use brickforge::families::{self, Family, FamilyTag};
use brickforge::mcg::{self, Document};
use brickforge::named;
use brickforge::report::{self, VerifySummary};
use brickforge::{Doubleton, Error, Graph};

#[derive(Parser)]
#[command(name = "brickforge", version, about = "Near-bipartite bricks and their thin edges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report predicates, doubletons and a classification of every edge
    Analyze { file: PathBuf },
    /// Delete strictly R-thin edges and retract until a family member remains
    Reduce {
        file: PathBuf,
        /// Doubleton declared in the file to use; defaults to the first one
        /// declared, then to the first removable doubleton
        #[arg(long)]
        doubleton: Option<String>,
        /// Directory for mcg/1 snapshots of every graph in the sequence
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every simple R-brick up to the given order
    Generate {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit orders up to 14
        #[arg(long)]
        allow_large: bool,
    },
    /// Check the classification theorems on every R-brick up to the given order
    Verify {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Tight cut decomposition into bricks and braces
    Decompose { file: PathBuf },
    /// Test two graphs for isomorphism
    Iso { first: PathBuf, second: PathBuf },
    /// Print a family member or named graph in mcg/1 form
    Make {
        name: String,
        params: Vec<usize>,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Counterexamples(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn read_document(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> Outcome {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    Ok(s)
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::Usage("--jobs must be positive".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn choose_doubleton(doc: &Document, name: Option<&str>) -> Result<Doubleton, Failure> {
    let g = doc.graph();
    let declared = doc.doubletons()?;
    if let Some(name) = name {
        let (_, a, b) = declared
            .iter()
            .find(|(n, _, _)| n == name)
            .ok_or_else(|| Failure::Usage(format!("no doubleton named `{name}` in the file")))?;
        return Ok(Doubleton::new(g, *a, *b)?);
    }
    if let Some((_, a, b)) = declared.first() {
        return Ok(Doubleton::new(g, *a, *b)?);
    }
    brickforge::removability::removable_doubletons(g)
        .into_iter()
        .next()
        .ok_or_else(|| Failure::Lib(Error::Precondition("graph has no removable doubleton".into())))
}

fn reduce(file: &Path, name: Option<&str>, out: Option<&Path>) -> Outcome {
    let doc = read_document(file)?;
    let r = choose_doubleton(&doc, name)?;
    let trace = engine::reduce(doc.graph(), &r)?;
    let rep = report::ReductionReport::from(&trace);
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        let snapshots = rep.steps.iter().map(|s| &s.graph).chain([&rep.terminal]);
        for (i, text) in snapshots.enumerate() {
            let path = dir.join(format!("step-{i:02}.mcg"));
            fs::write(&path, text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        }
    }
    json(&rep)
}

fn generate(max_order: usize, out: &Path, jobs: Option<usize>, allow_large: bool) -> Outcome {
    let corpus = with_jobs(jobs, || engine::generate_corpus(max_order, allow_large))??;
    let (texts, index) = report::corpus_files(&corpus);
    let io = |p: &Path, e: std::io::Error| Failure::Usage(format!("{}: {e}", p.display()));
    for (rel, text) in &texts {
        let path = out.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|e| io(parent, e))?;
        }
        fs::write(&path, text).map_err(|e| io(&path, e))?;
    }
    let index_text = json(&index)?;
    let path = out.join("index.json");
    fs::write(&path, &index_text).map_err(|e| io(&path, e))?;
    let counts = corpus.counts_by_order();
    json(&serde_json::json!({
        "schema": report::SCHEMA,
        "kind": "generation",
        "max_order": max_order,
        "count": corpus.len(),
        "by_order": counts,
    }))
}

fn verify(max_order: usize, jobs: Option<usize>, allow_large: bool) -> Outcome {
    let rep = with_jobs(jobs, || engine::verify(max_order, allow_large))??;
    let summary = VerifySummary::from(rep);
    let text = json(&summary)?;
    if summary.passed {
        Ok(text)
    } else {
        Err(Failure::Counterexamples(text))
    }
}

fn make(name: &str, params: &[usize]) -> Outcome {
    if let Ok(family) = name.parse::<Family>() {
        let m = families::make_family(&FamilyTag::new(family, params.to_vec()))?;
        let mut comments = vec![format!("{}", m.tag)];
        for (i, r) in m.doubletons.iter().enumerate() {
            let label = format!("R{}", "'".repeat(i));
            comments.push(mcg::doubleton_comment(&m.graph, &label, r.alpha, r.beta));
        }
        return Ok(Document::new(&m.graph, &comments).render());
    }
    // named graphs accept orders 3..=32 per parameter
    let arity = |k: usize| -> Result<(), Failure> {
        if params.len() != k {
            Err(Failure::Usage(format!("`{name}` takes {k} parameter(s)")))
        } else if params.iter().any(|&p| !(3..=32).contains(&p)) || params.iter().sum::<usize>() > 32 {
            Err(Failure::Usage(format!("`{name}` parameters must lie in 3..=32 with sum at most 32")))
        } else {
            Ok(())
        }
    };
    let mut comments = vec![name.to_string()];
    let g: Graph = match name {
        "k4" => arity(0).map(|_| named::k4())?,
        "c6_bar" => arity(0).map(|_| named::c6_bar())?,
        "petersen" => arity(0).map(|_| named::petersen())?,
        "tricorn" => arity(0).map(|_| named::tricorn())?,
        "t8_expansion" => {
            arity(0)?;
            let g = named::t8_expansion();
            let (a, b) = named::T8_EXPANSION_DOUBLETON;
            comments.push(mcg::doubleton_comment(&g, "R", a, b));
            g
        }
        "wheel" => arity(1).map(|_| named::wheel(params[0]))?,
        "cycle" => arity(1).map(|_| named::cycle(params[0]))?,
        "complete" => arity(1).map(|_| named::complete(params[0]))?,
        "complete_bipartite" => arity(2).map(|_| named::complete_bipartite(params[0], params[1]))?,
        _ => return Err(Failure::Usage(format!("unknown family or graph `{name}`"))),
    };
    Ok(Document::new(&g, &comments).render())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze { file } => json(&report::analyze(read_document(&file)?.graph())?),
        Command::Reduce {
            file,
            doubleton,
            out,
        } => reduce(&file, doubleton.as_deref(), out.as_deref()),
        Command::Generate {
            max_order,
            out,
            jobs,
            allow_large,
        } => generate(max_order, &out, jobs, allow_large),
        Command::Verify {
            max_order,
            jobs,
            allow_large,
        } => verify(max_order, jobs, allow_large),
        Command::Decompose { file } => json(&report::decompose(read_document(&file)?.graph())?),
        Command::Iso { first, second } => {
            let g = read_document(&first)?;
            let h = read_document(&second)?;
            json(&report::iso(g.graph(), h.graph()))
        }
        Command::Make { name, params } => make(&name, &params),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Counterexamples(text)) => {
            print!("{text}");
            eprintln!("error: counterexamples found");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 2,
                Error::TheoremViolation(_) => 3,
                _ => 1,
            })
        }
    }
}
