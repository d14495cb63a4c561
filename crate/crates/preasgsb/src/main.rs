//! Command-line front end: normal forms, closure checks, completion, bases
//! and dimension counts for presentations in the `preasgsb-format`.
//!
//! Results go to stdout; the completion progress report goes to stderr so
//! the completed presentation can be piped.  Exit code 0 means success, 1
//! means a semantic "no" (a failed check, a dimension mismatch, completion
//! running out of rounds, a non-associative table), 2 means bad input.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use preasgsb::compositions::CompositionSite;
use preasgsb::gsb::{check_system, complete};
use preasgsb::instances::{envelope, zinbiel, MulTable};
use preasgsb::oracle::quotient_dims;
use preasgsb::parse::parse_poly;
use preasgsb::presentation::Presentation;
use preasgsb::words::{enumerate_star_words, Alphabet, MatchSite, Step};
use preasgsb::{Error, Result};

#[derive(Parser)]
#[command(
    name = "preasgsb",
    version,
    about = "Gröbner–Shirshov tools for free pre-associative algebras"
)]
struct Cli {
    /// Seed for the oracle's order shuffle; 0 keeps the canonical order.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a polynomial to its normal form under a presentation.
    NormalForm {
        pres: PathBuf,
        /// Polynomial over the presentation's alphabet.
        poly: String,
    },
    /// Reduce every composition within the bound; report any that survive.
    Check {
        pres: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Close a presentation under composition within the bound.
    Complete {
        pres: PathBuf,
        #[arg(long)]
        max_deg: usize,
        /// Give up after this many enlargement rounds.
        #[arg(long, default_value_t = 32)]
        max_rounds: usize,
        /// Write the resulting presentation here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the reduced words up to the bound, one per line, ascending.
    Basis {
        pres: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Count reduced words per degree.
    Dims {
        pres: PathBuf,
        #[arg(long)]
        max_deg: usize,
        /// Cross-check against an exact linear-algebra computation of the
        /// quotient dimensions.
        #[arg(long)]
        oracle: bool,
    },
    /// Generate a built-in presentation.
    Instances {
        #[command(subcommand)]
        which: InstanceCmd,
    },
}

#[derive(Subcommand)]
enum InstanceCmd {
    /// Zinbiel-quotient relations over a free generating set.
    Zinbiel {
        /// Number of generators.
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        max_deg: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Universal-envelope relations of an associative multiplication table.
    Envelope {
        /// Table file: a `basis:` line, then `a*b = ...` product lines.
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        max_deg: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {}", path.display(), e)))
}

fn load_presentation(path: &Path) -> Result<Presentation> {
    Presentation::parse(&read_file(path)?)
}

fn emit(pres: &Presentation, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, pres.to_string())
            .map_err(|e| Error::Invalid(format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", pres);
            Ok(())
        }
    }
}

fn join(counts: &[usize]) -> String {
    counts
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe_site(site: &CompositionSite, alphabet: &Alphabet) -> String {
    match site {
        CompositionSite::Inclusion {
            site: MatchSite::Subtree { factor, path },
        } => {
            if path.is_empty() {
                format!("whole factor {}", factor + 1)
            } else {
                let steps: String = path
                    .iter()
                    .map(|s| match s {
                        Step::Left => 'L',
                        Step::Right => 'R',
                    })
                    .collect();
                format!("factor {} at {}", factor + 1, steps)
            }
        }
        CompositionSite::Inclusion {
            site: MatchSite::Run { start, len },
        } => {
            if *len == 1 {
                format!("factor {}", start + 1)
            } else {
                format!("factors {}..{}", start + 1, start + len)
            }
        }
        CompositionSite::Overlap { overlap } => {
            format!("{} shared factor(s)", overlap)
        }
        CompositionSite::RightFactor { multiplier } => {
            format!("by tree {}", multiplier.display(alphabet))
        }
        CompositionSite::LeftFactor { multiplier } => {
            format!("by word {}", multiplier.display(alphabet))
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let seed = cli.seed;
    match cli.command {
        Cmd::NormalForm { pres, poly } => {
            let p = load_presentation(&pres)?;
            let q = parse_poly(&poly, &p.alphabet)?;
            let nf = p.to_system().normal_form(&q);
            println!("{}", nf.display(&p.alphabet));
            Ok(0)
        }
        Cmd::Check { pres, max_deg } => {
            let p = load_presentation(&pres)?;
            let report = check_system(&p.to_system(), &p.alphabet, max_deg);
            if report.passed() {
                println!(
                    "checked {} compositions up to degree {}: all reduce to zero",
                    report.total, max_deg
                );
                Ok(0)
            } else {
                for f in &report.failures {
                    let c = &f.composition;
                    let who = match c.g {
                        Some(g) if g != c.f => {
                            format!("relations {} and {}", c.f + 1, g + 1)
                        }
                        Some(_) => format!("relation {} with itself", c.f + 1),
                        None => format!("relation {}", c.f + 1),
                    };
                    println!(
                        "FAIL {} of {} ({}); ambient {}; remainder {}",
                        c.kind,
                        who,
                        describe_site(&c.site, &p.alphabet),
                        c.ambient.display(&p.alphabet),
                        f.remainder.display(&p.alphabet),
                    );
                }
                println!(
                    "FAIL: {} of {} compositions do not reduce to zero",
                    report.failures.len(),
                    report.total
                );
                Ok(1)
            }
        }
        Cmd::Complete {
            pres,
            max_deg,
            max_rounds,
            output,
        } => {
            let p = load_presentation(&pres)?;
            let (done, report) = complete(&p.to_system(), &p.alphabet, max_deg, max_rounds);
            let out = Presentation::new(
                p.alphabet.clone(),
                p.table_path.clone(),
                done.relations().to_vec(),
            );
            emit(&out, output.as_ref())?;
            for (i, r) in report.detail.iter().enumerate() {
                eprintln!(
                    "round {}: {} compositions, {} nonzero residues, {} relations added",
                    i + 1,
                    r.compositions,
                    r.nonzero,
                    r.added
                );
            }
            if report.converged {
                eprintln!(
                    "converged after {} round(s); {} relations",
                    report.rounds,
                    done.len()
                );
                Ok(0)
            } else {
                eprintln!(
                    "no convergence within {} round(s); {} relations",
                    max_rounds,
                    done.len()
                );
                Ok(1)
            }
        }
        Cmd::Basis { pres, max_deg } => {
            let p = load_presentation(&pres)?;
            let sys = p.to_system();
            for d in 1..=max_deg {
                for w in enumerate_star_words(&p.alphabet, d) {
                    if sys.is_normal(&w) {
                        println!("{}", w.display(&p.alphabet));
                    }
                }
            }
            Ok(0)
        }
        Cmd::Dims {
            pres,
            max_deg,
            oracle,
        } => {
            let p = load_presentation(&pres)?;
            let reduced = p.to_system().reduced_counts(&p.alphabet, max_deg);
            if !oracle {
                println!("{}", join(&reduced));
                return Ok(0);
            }
            let exact = quotient_dims(&p.alphabet, p.relations(), max_deg, seed)?;
            println!("reduced: {}", join(&reduced));
            println!("oracle: {}", join(&exact));
            if reduced == exact {
                println!("MATCH");
                Ok(0)
            } else {
                println!("MISMATCH");
                Ok(1)
            }
        }
        Cmd::Instances { which } => match which {
            InstanceCmd::Zinbiel {
                gens,
                max_deg,
                output,
            } => {
                let (alphabet, rels) = zinbiel(gens, max_deg)?;
                emit(&Presentation::new(alphabet, None, rels), output.as_ref())?;
                Ok(0)
            }
            InstanceCmd::Envelope {
                table,
                max_deg,
                output,
            } => {
                let t = MulTable::parse(&read_file(&table)?)?;
                let (alphabet, rels) = envelope(&t, max_deg)?;
                let src = Some(table.display().to_string());
                emit(&Presentation::new(alphabet, src, rels), output.as_ref())?;
                Ok(0)
            }
        },
    }
}

/// Restore the default `SIGPIPE` disposition so that piping into a pager
/// that exits early (`preasgsb basis ... | head`) terminates this process
/// quietly instead of panicking on a failed write.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(e.exit_code());
        }
    }
}
