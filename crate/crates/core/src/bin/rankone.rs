//! Command-line front end: catalog, spherical, dims, classify, norm, verify.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rankone::catalog::{SpaceFamily, SymmetricSpace};
use rankone::input::{parse_radial, RadialArg};
use rankone::jacobi::{spherical_function, spherical_function_hypergeometric, RadialPoint};
use rankone::orbit::{verdict_for_pair, verdict_for_triple, DEFAULT_EPS};
use rankone::output::{
    catalog_json, catalog_text, checkpoints_csv, dims_csv, ClassifyReport, NormReport,
    SphericalOracleReport, SphericalReport,
};
use rankone::plancherel::{crosscheck, SumSchedule};
use rankone::verify::{render_report, run_all, Tier};

#[derive(Parser)]
#[command(
    name = "rankone",
    about = "Spherical functions, representation dimensions and orbital-measure smoothness \
             verdicts on rank-one compact symmetric spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format where the command supports more than one.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the primary output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for the parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Classification tolerance for float radial coordinates.
    #[arg(long, global = true)]
    eps: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the catalog of rank-one spaces.
    Catalog {
        /// Largest family parameter q to enumerate.
        #[arg(long, default_value_t = 6)]
        max_q: u32,
    },
    /// Evaluate a spherical function at one radial point.
    Spherical {
        #[arg(long)]
        space: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        n: u32,
        /// Radial coordinate: decimal radians or p/qpi.
        #[arg(long)]
        t: String,
        /// Also evaluate the hypergeometric form and print the difference.
        #[arg(long)]
        oracle: bool,
    },
    /// CSV table of spherical-representation dimensions.
    Dims {
        #[arg(long)]
        space: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        n_max: u32,
        /// Add the quadrature-oracle column (n <= 50).
        #[arg(long)]
        check_quadrature: bool,
    },
    /// Classify radial points and report the closed-form verdicts.
    Classify {
        #[arg(long)]
        space: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        #[arg(long)]
        t3: Option<String>,
    },
    /// Plancherel partial sums with convergence diagnosis.
    Norm {
        #[arg(long)]
        space: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        #[arg(long)]
        t3: Option<String>,
        #[arg(long)]
        n_max: u64,
        /// Checkpoint spacing ratio.
        #[arg(long, default_value_t = 1.3)]
        ratio: f64,
    },
    /// Run the verification suite and print one PASS/FAIL line per criterion.
    Verify {
        /// Desk scale: series cross-checks at 10^5 terms.
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        /// Full scale: series cross-checks at 10^6 terms (default).
        #[arg(long)]
        full: bool,
    },
}

enum AppError {
    Usage(String),
    Computation(rankone::Error),
}

impl From<rankone::Error> for AppError {
    fn from(e: rankone::Error) -> Self {
        AppError::Computation(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // build_global fails only if a pool already exists; a stale value
        // cannot occur in a fresh process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Computation(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_space(tag: &str, q: Option<u32>) -> Result<SymmetricSpace, AppError> {
    let family = match (tag, q) {
        ("AI", None) => SpaceFamily::AI,
        ("AII", None) => SpaceFamily::AII,
        ("FII", None) => SpaceFamily::FII,
        ("AIII", Some(q)) => SpaceFamily::AIII(q),
        ("BII", Some(q)) => SpaceFamily::BII(q),
        ("CII", Some(q)) => SpaceFamily::CII(q),
        ("AIII" | "BII" | "CII", None) => {
            return Err(AppError::Usage(format!("family {tag} requires --q")))
        }
        ("AI" | "AII" | "FII", Some(_)) => {
            return Err(AppError::Usage(format!("family {tag} takes no --q")))
        }
        _ => {
            return Err(AppError::Usage(format!(
                "unknown family {tag:?}: expected AI, AII, AIII, BII, CII or FII"
            )))
        }
    };
    SymmetricSpace::new(family).map_err(|e| AppError::Usage(e.to_string()))
}

fn parse_t(text: &str) -> Result<RadialArg, AppError> {
    parse_radial(text).map_err(|e| AppError::Usage(e.to_string()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), AppError> {
    match out {
        Some(path) => std::fs::File::create(path)
            .and_then(|mut f| f.write_all(content.as_bytes()))
            .map_err(|e| AppError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    let eps = cli.eps.unwrap_or(DEFAULT_EPS);
    match cli.command {
        Command::Catalog { max_q } => {
            // enumeration bounds are flag validation, not computation
            let text = match cli.format {
                Some(Format::Json) => catalog_json(max_q),
                _ => catalog_text(max_q),
            }
            .map_err(|e| AppError::Usage(e.to_string()))?;
            emit(&cli.out, &ensure_newline(text))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spherical {
            space,
            q,
            n,
            t,
            oracle,
        } => {
            let s = parse_space(&space, q)?;
            let arg = parse_t(&t)?;
            let point = RadialPoint::new(arg.radians());
            let value = spherical_function(&s, n, point);
            let oracle_report = if oracle {
                let hyp = spherical_function_hypergeometric(&s, n, point)?;
                Some(SphericalOracleReport {
                    hypergeometric: hyp,
                    abs_diff: (hyp - value.value).abs(),
                })
            } else {
                None
            };
            let rep = SphericalReport {
                space: s.family.tag().to_string(),
                q: s.family.q(),
                n,
                t: point.t,
                value: value.value,
                prefactor_log: value.prefactor_log,
                oracle: oracle_report,
            };
            let text = match cli.format {
                Some(Format::Json) => serde_json::to_string_pretty(&rep).expect("serializes"),
                _ => {
                    let mut lines = format!(
                        "space: {}\nn: {n}\nt: {}\nvalue: {:e}\nprefactor_log: {:e}",
                        s, rep.t, rep.value, rep.prefactor_log
                    );
                    if let Some(o) = &rep.oracle {
                        lines.push_str(&format!(
                            "\nhypergeometric: {:e}\nabs_diff: {:e}",
                            o.hypergeometric, o.abs_diff
                        ));
                    }
                    lines
                }
            };
            emit(&cli.out, &ensure_newline(text))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims {
            space,
            q,
            n_max,
            check_quadrature,
        } => {
            let s = parse_space(&space, q)?;
            let csv = dims_csv(&s, n_max, check_quadrature).map_err(AppError::Computation)?;
            emit(&cli.out, &csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            space,
            q,
            t1,
            t2,
            t3,
        } => {
            let s = parse_space(&space, q)?;
            let args: Vec<RadialArg> = [Some(t1), Some(t2), t3]
                .into_iter()
                .flatten()
                .map(|t| parse_t(&t))
                .collect::<Result<_, _>>()?;
            let classes: Vec<_> = args
                .iter()
                .map(|a| a.classify(&s, eps))
                .collect::<rankone::Result<_>>()?;
            let verdict = match classes.as_slice() {
                [c1, c2] => verdict_for_pair(&s, *c1, *c2)?,
                [c1, c2, c3] => verdict_for_triple(&s, [*c1, *c2, *c3]),
                _ => unreachable!("two or three points by construction"),
            };
            let rep = ClassifyReport::from_verdict(&s, &verdict);
            let text = serde_json::to_string_pretty(&rep).expect("serializes");
            emit(&cli.out, &ensure_newline(text))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Norm {
            space,
            q,
            t1,
            t2,
            t3,
            n_max,
            ratio,
        } => {
            let s = parse_space(&space, q)?;
            let args: Vec<RadialArg> = [Some(t1), Some(t2), t3]
                .into_iter()
                .flatten()
                .map(|t| parse_t(&t))
                .collect::<Result<_, _>>()?;
            let points: Vec<RadialPoint> =
                args.iter().map(|a| RadialPoint::new(a.radians())).collect();
            let schedule =
                SumSchedule::new(n_max, ratio).map_err(|e| AppError::Usage(e.to_string()))?;
            let rep = crosscheck(&s, &points, schedule)?;
            let diagnosis_json = serde_json::to_string_pretty(&NormReport::new(
                &rep.diagnosis,
                rep.closed_form_l2,
                rep.agree,
            ))
            .expect("serializes");
            match cli.format {
                Some(Format::Json) => {
                    emit(&cli.out, &ensure_newline(diagnosis_json))?;
                }
                _ => {
                    let csv = checkpoints_csv(&rep.trace);
                    match &cli.out {
                        Some(_) => {
                            // CSV to the file, diagnosis to stdout
                            emit(&cli.out, &csv)?;
                            println!("{diagnosis_json}");
                        }
                        None => {
                            print!("{csv}");
                            println!();
                            println!("{diagnosis_json}");
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { quick, full: _ } => {
            let tier = if quick { Tier::Quick } else { Tier::Full };
            let reports = run_all(tier);
            let text = render_report(&reports);
            emit(&cli.out, &text)?;
            if reports.iter().all(|r| r.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}
