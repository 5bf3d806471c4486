//! `fortdyn` command-line interface.
//!
//! Exit codes: 0 success, 1 semantic failure (not isomorphic, check failed),
//! 2 input or usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fortdyn::constructors::{
    enumerate_step_sequences, realize_finite_height_perm, realize_group_sequence,
    realize_selfmap_sequence, reduce_to_finite, StepSequence, ENUMERATE_MAX_N,
};
use fortdyn::indicator::{parse_entries, poset_isomorphic};
use fortdyn::report::{to_dot, AnalysisReport};
use fortdyn::verify::{coverage_matrix, run_suites, Suite, SuiteOptions};
use fortdyn::{ClosurePoset, LoadedSystem, SystemFile};

const SEED_ENV: &str = "FORTDYN_SEED";

#[derive(Parser)]
#[command(
    name = "fortdyn",
    version,
    about = "Indicator sequences and topologies of finite and Fort transformation semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit closures, heights, indicator sequence and topology of a system file
    Analyze {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the Hasse diagram of the closure poset as Graphviz DOT
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build a witness system and write it as a system file
    Realize(RealizeArgs),
    /// List the step sequences of length n+1
    Enumerate {
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Decide whether two systems have homeomorphic indicator topologies
    Iso { a: PathBuf, b: PathBuf },
    /// Turn any system into a finite monoid system with the same indicator topology
    Reduce {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        max_size: Option<usize>,
        /// Seed for sampled generator pairs; FORTDYN_SEED takes precedence
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads, 0 for one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct RealizeArgs {
    #[command(flatten)]
    witness: Witness,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Witness {
    /// Infinite Fort group witness with P fixed points and Q shifted lines
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    group: Option<Vec<usize>>,
    /// Single self-map realizing a step sequence, e.g. "0,1,2"
    #[arg(long, value_name = "SEQ")]
    selfmap: Option<String>,
    /// Permutation of M points with height I
    #[arg(long, num_args = 2, value_names = ["M", "I"])]
    perm: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Heights,
    Group,
    Selfmap,
    Classify,
    Reduce,
    Ce44,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::All => Suite::ALL.to_vec(),
            SuiteArg::Heights => vec![Suite::Heights],
            SuiteArg::Group => vec![Suite::Group],
            SuiteArg::Selfmap => vec![Suite::Selfmap],
            SuiteArg::Classify => vec![Suite::Classify],
            SuiteArg::Reduce => vec![Suite::Reduce],
            SuiteArg::Ce44 => vec![Suite::Ce44],
        }
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn semantic(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn load(path: &Path) -> Result<LoadedSystem, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    SystemFile::load(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn analyze(path: &Path, format: Format, dot: Option<&Path>) -> Result<(), Failure> {
    let system = load(path)?;
    let report = AnalysisReport::new(&system);
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if let Some(dot_path) = dot {
        write_out(dot_path, &to_dot(&system.poset()))?;
    }
    Ok(())
}

fn realize(args: &RealizeArgs) -> Result<(), Failure> {
    let w = &args.witness;
    let (doc, poset) = if let Some(pq) = &w.group {
        let sym = realize_group_sequence(pq[0], pq[1]).map_err(|e| usage(e.to_string()))?;
        (SystemFile::from(&sym), ClosurePoset::of_symbolic(&sym))
    } else if let Some(text) = &w.selfmap {
        let entries = parse_entries(text).map_err(|e| usage(e.to_string()))?;
        let seq = StepSequence::new(entries).map_err(|e| usage(e.to_string()))?;
        let sys = realize_selfmap_sequence(&seq);
        let poset = ClosurePoset::of_finite(&sys);
        if poset.indicator_sequence().entries() != seq.entries() {
            return Err(semantic(format!(
                "witness realizes {} instead of {seq}",
                poset.indicator_sequence()
            )));
        }
        (SystemFile::from(&sys), poset)
    } else if let Some(mi) = &w.perm {
        let sys = realize_finite_height_perm(mi[0], mi[1]).map_err(|e| usage(e.to_string()))?;
        (SystemFile::from(&sys), ClosurePoset::of_finite(&sys))
    } else {
        return Err(usage("one of --group, --selfmap, --perm is required"));
    };
    let seq = poset.indicator_sequence();
    match &args.out {
        Some(path) => {
            write_out(path, &doc.to_json())?;
            println!("indicator sequence: {seq}");
        }
        None => {
            print!("{}", doc.to_json());
            eprintln!("indicator sequence: {seq}");
        }
    }
    Ok(())
}

fn enumerate(n: usize, count_only: bool) -> Result<(), Failure> {
    if n > ENUMERATE_MAX_N {
        return Err(usage(format!(
            "n = {n} exceeds the limit {ENUMERATE_MAX_N}"
        )));
    }
    if count_only {
        println!("{}", 1u64 << n);
        return Ok(());
    }
    let all = enumerate_step_sequences(n).map_err(|e| usage(e.to_string()))?;
    let mut out = String::new();
    for s in all {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}

fn iso(a: &Path, b: &Path) -> Result<(), Failure> {
    let pa = load(a)?.poset();
    let pb = load(b)?.poset();
    match poset_isomorphic(&pa, &pb) {
        Some(witness) => {
            println!("isomorphic");
            for (v, w) in witness.iter().enumerate() {
                println!("  {} -> {}", pa.labels()[v], pb.labels()[*w]);
            }
            Ok(())
        }
        None => Err(semantic(format!(
            "not isomorphic (sequences {} and {})",
            pa.indicator_sequence(),
            pb.indicator_sequence()
        ))),
    }
}

fn reduce(path: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let poset = load(path)?.poset();
    let reduced = reduce_to_finite(&poset).map_err(|e| usage(e.to_string()))?;
    let doc = SystemFile::from(&reduced);
    // re-read the written form so the check covers serialization too
    let again = SystemFile::load(&doc.to_json())
        .map_err(|e| semantic(format!("reduced system does not reload: {e}")))?;
    if poset_isomorphic(&again.poset(), &poset).is_none() {
        return Err(semantic(
            "reduced system has a different indicator topology",
        ));
    }
    match out {
        Some(p) => {
            write_out(p, &doc.to_json())?;
            println!(
                "reduced to {} points, indicator sequence {}",
                reduced.size(),
                poset.indicator_sequence()
            );
        }
        None => print!("{}", doc.to_json()),
    }
    Ok(())
}

fn verify(
    suite: SuiteArg,
    max_size: Option<usize>,
    seed: u64,
    jobs: usize,
    format: Format,
) -> Result<(), Failure> {
    let seed = match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{SEED_ENV}={v:?} is not an unsigned integer")))?,
        Err(_) => seed,
    };
    let opts = SuiteOptions {
        max_size,
        seed,
        jobs,
        ..SuiteOptions::default()
    };
    let reports = run_suites(&suite.suites(), &opts).map_err(|e| usage(e.to_string()))?;
    let coverage = coverage_matrix(&reports);
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "reports": reports, "coverage": coverage });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("reports serialize")
            );
        }
        Format::Text => {
            for r in &reports {
                println!(
                    "[{}] {} ({:.2}s)",
                    r.verdict,
                    r.name,
                    r.elapsed.as_secs_f64()
                );
                for f in &r.findings {
                    println!("    {f}");
                }
                for h in &r.heights {
                    let values: Vec<String> = h
                        .heights
                        .iter()
                        .map(|v| match v {
                            fortdyn::verify::HeightValue::Finite(n) => n.to_string(),
                            fortdyn::verify::HeightValue::InfiniteByConstruction { .. } => {
                                "∞".into()
                            }
                        })
                        .collect();
                    println!("    {}: {{{}}}", h.model, values.join(","));
                }
                if let Some(c) = &r.counterexample {
                    println!("    expected: {}", c.expected);
                    println!("    actual:   {}", c.actual);
                }
            }
            println!("coverage:");
            for row in &coverage {
                let v = row.verdict.map_or("not run".to_string(), |v| v.to_string());
                println!("  {:<7} {}", v, row.result);
            }
        }
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    for r in &failed {
        let path = PathBuf::from(format!("counterexample-{}.json", r.name));
        write_out(&path, &r.to_json())?;
        eprintln!("{}: counterexample written to {}", r.name, path.display());
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(semantic(format!("{} check(s) failed", failed.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { path, format, dot } => analyze(path, *format, dot.as_deref()),
        Command::Realize(args) => realize(args),
        Command::Enumerate { n, count_only } => enumerate(*n, *count_only),
        Command::Iso { a, b } => iso(a, b),
        Command::Reduce { path, out } => reduce(path, out.as_deref()),
        Command::Verify {
            suite,
            max_size,
            seed,
            jobs,
            format,
        } => verify(*suite, *max_size, *seed, *jobs, *format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("fortdyn: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
