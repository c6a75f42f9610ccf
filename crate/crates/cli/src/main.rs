use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lsakit::Status;
use lsakit_cli::output::{timestamp, to_json, Bundle};
use lsakit_cli::suites::{self, CohomologyQuery, DeformQuery, Derivation, Options};
use lsakit_cli::{parse_instance, CliError, Envelope, Format};

/// Verify left-symmetric algebroid instances and run their constructions.
///
/// Exit status: 0 when every check passes (uncertified checks do not fail),
/// 1 when a check fails, 2 on unreadable or malformed input.
#[derive(Debug, Parser)]
#[command(name = "lsakit", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for randomized samples.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Highest degree for point cohomology.
    #[arg(long, default_value_t = 3, global = true)]
    max_degree: usize,
    /// Random samples per degree for the d∘d = 0 checks.
    #[arg(long, default_value_t = 4, global = true)]
    samples: usize,
    /// Leave the timestamp out of reports.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The left-symmetric axioms and Lie-admissibility.
    Check { file: PathBuf },
    /// Build a derived structure and check it.
    Derive {
        #[command(flatten)]
        which: DeriveWhich,
        file: PathBuf,
    },
    /// Representation cohomology.
    Cohomology {
        #[command(flatten)]
        query: CohomologyArgs,
        /// Potential η for --coboundary: checks ω = dη.
        #[arg(long, requires = "coboundary")]
        primitive: Option<String>,
        file: PathBuf,
    },
    /// Nijenhuis operators and deformations.
    Deform {
        #[command(flatten)]
        query: DeformArgs,
        /// Also report the Nijenhuis condition exactly as printed in the source.
        #[arg(long)]
        paper_literal: bool,
        file: PathBuf,
    },
    /// Every check an instance supports. Directories contribute their *.json files.
    VerifyAll {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also report the printed Nijenhuis condition.
        #[arg(long)]
        paper_literal: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DeriveWhich {
    /// The sub-adjacent Lie algebroid and the left-multiplication representation.
    #[arg(long)]
    sub_adjacent: bool,
    /// The phase space, its paracomplex structure and, with a bilinear form, J.
    #[arg(long)]
    phase_space: bool,
    /// A ⋉ E for the instance's representation.
    #[arg(long)]
    semidirect: bool,
    /// The action algebroid of the instance's `action` block.
    #[arg(long)]
    action: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CohomologyArgs {
    /// Dimensions of H^k in the point case, k ≤ --max-degree.
    #[arg(long)]
    point: bool,
    /// Whether the named cochain is closed.
    #[arg(long, value_name = "NAME")]
    cocycle: Option<String>,
    /// Whether the named cochain equals d of --primitive.
    #[arg(long, value_name = "NAME")]
    coboundary: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DeformArgs {
    /// Nijenhuis check and trivial deformation for an endomorphism.
    #[arg(long, value_name = "N")]
    nijenhuis: Option<String>,
    /// Validity of a named deformation (or `zero`, `trivial(N)`).
    #[arg(long, value_name = "NAME")]
    deformation: Option<String>,
    /// Equivalence of two deformations through N.
    #[arg(long, num_args = 3, value_names = ["OMEGA", "OMEGA_PRIME", "N"])]
    equivalence: Option<Vec<String>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, status)) => {
            print!("{text}");
            ExitCode::from(if status == Status::Fail { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, Status), CliError> {
    let mut opts = Options {
        seed: cli.seed,
        max_degree: cli.max_degree,
        samples: cli.samples,
        paper_literal: false,
    };
    let stamp = || (!cli.no_timestamp).then(timestamp);
    let single =
        |command: &str,
         file: &Path,
         f: &dyn Fn(&lsakit_cli::Instance) -> Result<suites::Outcome, CliError>| {
            let inst = parse_instance(file)?;
            let env = Envelope::new(command, &inst, f(&inst)?, stamp());
            let text = match cli.format {
                Format::Json => to_json(&env),
                Format::Text => env.to_text(),
            };
            Ok::<_, CliError>((text, env.status))
        };

    match &cli.command {
        Command::Check { file } => single("check", file, &|i| Ok(suites::check(i))),
        Command::Derive { which, file } => {
            let (d, name) = if which.sub_adjacent {
                (Derivation::SubAdjacent, "derive --sub-adjacent")
            } else if which.phase_space {
                (Derivation::PhaseSpace, "derive --phase-space")
            } else if which.semidirect {
                (Derivation::Semidirect, "derive --semidirect")
            } else {
                (Derivation::Action, "derive --action")
            };
            single(name, file, &|i| suites::derive(i, d))
        }
        Command::Cohomology {
            query,
            primitive,
            file,
        } => {
            let (q, name) = if query.point {
                (CohomologyQuery::Point, "cohomology --point".to_string())
            } else if let Some(c) = &query.cocycle {
                (
                    CohomologyQuery::Cocycle(c.clone()),
                    format!("cohomology --cocycle {c}"),
                )
            } else {
                let c = query.coboundary.clone().expect("clap group");
                let p = primitive
                    .clone()
                    .ok_or_else(|| CliError::Usage("--coboundary needs --primitive".into()))?;
                let name = format!("cohomology --coboundary {c} --primitive {p}");
                (
                    CohomologyQuery::Coboundary {
                        cochain: c,
                        primitive: p,
                    },
                    name,
                )
            };
            single(&name, file, &|i| suites::cohomology(i, &q, &opts))
        }
        Command::Deform {
            query,
            paper_literal,
            file,
        } => {
            opts.paper_literal = *paper_literal;
            let (q, name) = if let Some(n) = &query.nijenhuis {
                (
                    DeformQuery::Nijenhuis(n.clone()),
                    format!("deform --nijenhuis {n}"),
                )
            } else if let Some(d) = &query.deformation {
                (
                    DeformQuery::Deformation(d.clone()),
                    format!("deform --deformation {d}"),
                )
            } else {
                let v = query.equivalence.clone().expect("clap group");
                let name = format!("deform --equivalence {} {} {}", v[0], v[1], v[2]);
                (
                    DeformQuery::Equivalence {
                        omega: v[0].clone(),
                        omega_prime: v[1].clone(),
                        n: v[2].clone(),
                    },
                    name,
                )
            };
            single(&name, file, &|i| suites::deform(i, &q, &opts))
        }
        Command::VerifyAll {
            files,
            paper_literal,
        } => {
            opts.paper_literal = *paper_literal;
            let paths = expand(files)?;
            let mut reports = Vec::with_capacity(paths.len());
            for p in &paths {
                let inst = parse_instance(p)?;
                reports.push(Envelope::new(
                    "verify-all",
                    &inst,
                    suites::verify_all(&inst, &opts),
                    None,
                ));
            }
            if reports.len() == 1 {
                let mut env = reports.pop().expect("one report");
                env.timestamp = stamp();
                let text = match cli.format {
                    Format::Json => to_json(&env),
                    Format::Text => env.to_text(),
                };
                return Ok((text, env.status));
            }
            let bundle = Bundle::new("verify-all", reports, stamp());
            let text = match cli.format {
                Format::Json => to_json(&bundle),
                Format::Text => bundle.to_text(),
            };
            Ok((text, bundle.status))
        }
    }
}

/// Files as given; directories replaced by their `*.json` entries in name order.
fn expand(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let entries = std::fs::read_dir(p).map_err(|e| CliError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.is_file() && f.extension().is_some_and(|x| x == "json"))
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}
