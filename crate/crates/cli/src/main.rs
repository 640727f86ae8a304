//! `petrial`: partial-Petrial polynomials of bouquets from signed
//! rotations, with boundary tracing, interlacement graphs, rewrite logs,
//! closed forms, exhaustive catalogs, and verification suites.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 verification failure,
//! 4 enumeration cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use petrial_core::closed::{Family, FamilySpec};
use petrial_core::interlace::{canonical_bytes, signed_interlacement_graph};
use petrial_core::poly::{petrial_polynomial_capped, PolyError, DEFAULT_EDGE_CAP};
use petrial_core::rewrite::reduce_path_petrial;
use petrial_core::rotation::{EdgeSubset, SignedRotation};
use petrial_core::trace::{boundary_count, GenusReport};

use petrial_cli::catalog::{for_each_bouquet, CatalogSpec};
use petrial_cli::explore::explore_binomial;
use petrial_cli::input::{read_rotations, Source};
use petrial_cli::output::{self, Format};
use petrial_cli::parallel::parallel_petrial_polynomial;
use petrial_cli::random::DEFAULT_SEED;
use petrial_cli::verify::{run_all, run_suite, Config};

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_CAP: u8 = 4;

#[derive(Parser)]
#[command(
    name = "petrial",
    version,
    about = "Partial-Petrial polynomials of bouquets given as signed rotations"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct InputOpts {
    /// One rotation as whitespace-separated signed tokens, e.g. "1 2 -1 2"
    #[arg(long)]
    rotation: Option<String>,
    /// Batch file with one rotation per line; '#' starts a comment line
    #[arg(long, conflicts_with = "rotation")]
    file: Option<PathBuf>,
}

impl InputOpts {
    fn source(&self) -> Source {
        match (&self.rotation, &self.file) {
            (Some(text), _) => Source::Rotation(text.clone()),
            (None, Some(path)) => Source::File(path.clone()),
            (None, None) => Source::Stdin,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Format {
        match arg {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    /// Complete graph K_n
    Kn,
    /// Path P_n
    Pn,
}

#[derive(Subcommand)]
enum Cmd {
    /// Partial-Petrial polynomial of each input rotation
    Poly {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Worker threads for the subset enumeration
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Edge-count cap for enumeration (at most 30)
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Boundary components, Euler characteristic and Euler genus
    Trace {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Signed interlacement graph; optionally its canonical form
    Igraph {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Append the canonical graph string in hexadecimal (needs <= 8 chords)
        #[arg(long)]
        canonical: bool,
    },
    /// Apply a partial Petrial to each input rotation
    Petrial {
        /// Edge labels receiving a half-twist, e.g. "1 3"
        #[arg(long)]
        set: String,
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Reduce path-bouquet partial Petrials to terminal form, logging steps
    Reduce {
        #[command(flatten)]
        input: InputOpts,
    },
    /// Closed-form polynomial for a graph family
    Formula {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Exhaustive catalog of bouquets on n chords, one class per line
    Catalog {
        #[arg(long)]
        n: usize,
        /// Enumerate all 2^n sign patterns instead of all-positive words
        #[arg(long)]
        signed: bool,
        /// Keep only prime bouquets (connected interlacement graph)
        #[arg(long)]
        prime_only: bool,
    },
    /// Run a verification suite (or all of them)
    Verify {
        /// Suite name, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        threads: usize,
    },
    /// List prime chord diagrams with two-term polynomials
    ExploreBinomial {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

struct CliFailure {
    code: u8,
    message: String,
}

impl CliFailure {
    fn usage(message: impl Into<String>) -> CliFailure {
        CliFailure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn cap(message: impl Into<String>) -> CliFailure {
        CliFailure {
            code: EXIT_CAP,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a pipe consumer such as `head` closes stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliFailure> {
    match cli.command {
        Cmd::Poly {
            input,
            format,
            threads,
            max_n,
        } => cmd_poly(&input, format.into(), threads, max_n),
        Cmd::Trace { input, format } => cmd_trace(&input, format.into()),
        Cmd::Igraph {
            input,
            format,
            canonical,
        } => cmd_igraph(&input, format.into(), canonical),
        Cmd::Petrial { set, input, format } => cmd_petrial(&set, &input, format.into()),
        Cmd::Reduce { input } => cmd_reduce(&input),
        Cmd::Formula { family, n, format } => cmd_formula(family, n, format.into()),
        Cmd::Catalog {
            n,
            signed,
            prime_only,
        } => cmd_catalog(n, signed, prime_only),
        Cmd::Verify {
            suite,
            seed,
            threads,
        } => cmd_verify(&suite, seed, threads),
        Cmd::ExploreBinomial { max_n } => cmd_explore(max_n),
    }
}

fn batch(input: &InputOpts) -> Result<Vec<SignedRotation>, CliFailure> {
    read_rotations(&input.source()).map_err(|e| CliFailure::usage(e.to_string()))
}

fn cmd_poly(
    input: &InputOpts,
    format: Format,
    threads: usize,
    max_n: Option<usize>,
) -> Result<(), CliFailure> {
    let cap = match max_n {
        Some(cap) if cap > DEFAULT_EDGE_CAP => {
            return Err(CliFailure::usage(format!(
                "--max-n {cap} above the 64-bit-safe cap of {DEFAULT_EDGE_CAP}"
            )));
        }
        Some(cap) => cap,
        None => DEFAULT_EDGE_CAP,
    };
    for r in batch(input)? {
        if r.edge_count() > cap {
            return Err(CliFailure::cap(
                PolyError::EdgeCapExceeded {
                    edges: r.edge_count(),
                    cap,
                }
                .to_string(),
            ));
        }
        let poly = if threads > 1 {
            parallel_petrial_polynomial(&r, threads)
        } else {
            petrial_polynomial_capped(&r, cap)
        }
        .map_err(|e| CliFailure::cap(e.to_string()))?;
        println!("{}", output::polynomial_line(&poly, format));
    }
    Ok(())
}

fn cmd_trace(input: &InputOpts, format: Format) -> Result<(), CliFailure> {
    for r in batch(input)? {
        println!("{}", output::trace_line(&GenusReport::of(&r), format));
    }
    Ok(())
}

fn cmd_igraph(input: &InputOpts, format: Format, canonical: bool) -> Result<(), CliFailure> {
    for r in batch(input)? {
        let graph = signed_interlacement_graph(&r);
        let canon = if canonical {
            Some(canonical_bytes(&graph).map_err(|e| CliFailure::cap(e.to_string()))?)
        } else {
            None
        };
        println!("{}", output::igraph_line(&graph, canon.as_deref(), format));
    }
    Ok(())
}

fn cmd_petrial(set: &str, input: &InputOpts, format: Format) -> Result<(), CliFailure> {
    let subset: EdgeSubset = set
        .parse()
        .map_err(|e: petrial_core::rotation::RotationError| CliFailure::usage(e.to_string()))?;
    for r in batch(input)? {
        let petrialed = r
            .partial_petrial(&subset)
            .map_err(|e| CliFailure::usage(e.to_string()))?;
        println!("{}", output::rotation_line(&petrialed, format));
    }
    Ok(())
}

fn cmd_reduce(input: &InputOpts) -> Result<(), CliFailure> {
    for r in batch(input)? {
        let (terminal, steps) =
            reduce_path_petrial(&r).map_err(|e| CliFailure::usage(e.to_string()))?;
        println!("rotation \"{r}\" f={}", boundary_count(&r));
        for step in &steps {
            println!(
                "  {} [{}] \"{}\" -> \"{}\" f={}",
                step.op,
                step.site,
                step.before,
                step.after,
                boundary_count(&step.after)
            );
        }
        println!("terminal {terminal} steps={}", steps.len());
    }
    Ok(())
}

fn cmd_formula(family: FamilyArg, n: usize, format: Format) -> Result<(), CliFailure> {
    let spec = FamilySpec {
        family: match family {
            FamilyArg::Kn => Family::CompleteGraph,
            FamilyArg::Pn => Family::Path,
        },
        n,
    };
    let poly = spec
        .polynomial()
        .map_err(|e| CliFailure::usage(e.to_string()))?;
    println!("{}", output::polynomial_line(&poly, format));
    Ok(())
}

fn cmd_catalog(n: usize, signed: bool, prime_only: bool) -> Result<(), CliFailure> {
    let spec = CatalogSpec {
        n,
        signed,
        prime_only,
    };
    for_each_bouquet(&spec, |r| println!("{r}"))
        .map_err(|e| CliFailure::cap(e.to_string()))?;
    Ok(())
}

fn cmd_verify(suite: &str, seed: u64, threads: usize) -> Result<(), CliFailure> {
    let config = Config { seed, threads };
    let reports = if suite == "all" {
        run_all(&config)
    } else {
        vec![run_suite(suite, &config).map_err(|e| CliFailure::usage(e.to_string()))?]
    };
    let mut all_passed = true;
    for report in &reports {
        print!("{report}");
        all_passed &= report.passed();
    }
    if all_passed {
        Ok(())
    } else {
        Err(CliFailure {
            code: EXIT_VERIFY,
            message: "verification failed".to_string(),
        })
    }
}

fn cmd_explore(max_n: usize) -> Result<(), CliFailure> {
    let hits = explore_binomial(max_n).map_err(|e| CliFailure::cap(e.to_string()))?;
    for hit in &hits {
        let marker = if hit.is_path { "" } else { " CANDIDATE" };
        println!(
            "n={} rotation=\"{}\" poly=\"{}\" path={}{marker}",
            hit.n, hit.rotation, hit.polynomial, hit.is_path
        );
    }
    Ok(())
}
