//! Command-line front end. [`run`] parses arguments, executes one command,
//! and returns the process exit status:
//!
//! * 0: success (verified, in image, checks passed)
//! * 1: violation found, target not in image, or a failed check
//! * 2: usage, parse, or input error
//! * 3: resource limit

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hyperlift::ramsey::{
    blowup_5color, certify_bound, parse_certificate, verify_avoidance, AvoidanceSpec, Certificate,
};
use hyperlift::structure::{
    classify_r_behavior, find_clique_minus_edge, find_mono_clique, generate_family,
    mono_components, Family, MatchMode,
};
use hyperlift::suite::{format_report, run_suite, CheckConfig};
use hyperlift::{
    apply_lift, lift_3coloring, preimage_count, rank_kernel, solve_preimage, HyperedgeColoring,
    LiftSpec, VertexSet,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hyperlift",
    version,
    about = "Hypergraph lifting maps and 3-uniform Ramsey certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PatternArg {
    Clique,
    Cliqueminus,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named coloring family.
    Gen {
        #[arg(long)]
        family: String,
        /// Family parameters as k=v,... (e.g. s=2,t=3).
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply the lift to an s-uniform coloring.
    Lift {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank, kernel dimension, and preimage count of a lift.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u32,
    },
    /// Decide whether a coloring is in the image of the lift from s-uniform colorings.
    Solve {
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a graph as r-complete, r-void, or r-neutral.
    Classify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Count monochromatic components.
    Components {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        color: u8,
        /// Comma-separated vertices (default: all).
        #[arg(long)]
        subset: Option<String>,
    },
    /// Search for a monochromatic clique or clique minus one hyperedge.
    Search {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        color: u8,
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        m: usize,
        /// Require exactly one missing hyperedge (cliqueminus only).
        #[arg(long)]
        induced: bool,
    },
    /// Rainbow-lift a 3-colored graph and blow it up into a 5-coloring.
    Construct {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        copies: usize,
        /// Color given to rainbow triangles.
        #[arg(long, default_value_t = 0)]
        distinguished: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring against forbidden patterns.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Spec string; defaults to the targets recorded in the file's certificate line.
        #[arg(long)]
        avoid: Option<String>,
    },
    /// Build and verify a blow-up certificate from a base 3-coloring.
    Certify {
        #[arg(long, conflicts_with = "base", required_unless_present = "base")]
        family: Option<String>,
        #[arg(long, default_value = "")]
        params: String,
        /// Base 3-colored graph file instead of a named family.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        copies: usize,
        /// Clique sizes s_0,s_1,s_2 the base avoids in colors 0,1,2.
        #[arg(long, default_value = "3,3,3")]
        sizes: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suites and print a pass/fail table.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n_max: Option<usize>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Resource(String),
}

impl From<hyperlift::Error> for Failure {
    fn from(e: hyperlift::Error) -> Self {
        match e {
            hyperlift::Error::Resource(_) => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
    }
}

fn read_coloring(path: &Path) -> Result<HyperedgeColoring, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    HyperedgeColoring::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|v| v.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            Failure::Usage(format!(
                "{what} `{text}` is not a comma-separated list of integers"
            ))
        })
}

fn show(set: Option<&VertexSet>) -> String {
    set.map_or_else(|| "-".to_string(), ToString::to_string)
}

fn report_certificate(cert: &Certificate, out: &mut dyn Write) -> Outcome {
    writeln!(out, "statement={}", cert.statement)?;
    writeln!(out, "targets={}", cert.spec)?;
    writeln!(out, "verified={}", cert.verified)?;
    for hit in &cert.violations {
        writeln!(out, "VIOLATION {hit}")?;
    }
    Ok(if cert.verified {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen {
            family,
            params,
            out: path,
        } => {
            let family = Family::from_parts(&family, &params)?;
            emit(&generate_family(&family)?.to_text(), path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Lift {
            input,
            s,
            r,
            q,
            out: path,
        } => {
            let f = read_coloring(&input)?;
            if f.r() != s {
                return Err(Failure::Usage(format!(
                    "input is {}-uniform, not s = {s}",
                    f.r()
                )));
            }
            if let Some(q) = q.filter(|&q| q != f.q() as u32) {
                return Err(Failure::Usage(format!(
                    "input is over F_{}, not q = {q}",
                    f.q()
                )));
            }
            let spec = LiftSpec::new(f.q() as u32, f.n(), s, r)?;
            emit(&apply_lift(&spec, &f)?.to_text(), path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Rank { n, s, r, q } => {
            let summary = rank_kernel(&LiftSpec::new(q, n, s, r)?)?;
            writeln!(
                out,
                "rank={} kernel={} preimages={}",
                summary.rank, summary.kernel_dim, summary.preimage_count
            )?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            target,
            s,
            out: path,
        } => {
            let g = read_coloring(&target)?;
            let spec = LiftSpec::new(g.q() as u32, g.n(), s, g.r())?;
            match solve_preimage(&spec, &g)? {
                Some(f) => {
                    writeln!(out, "member=true preimages={}", preimage_count(&spec, &g)?)?;
                    if let Some(p) = path {
                        emit(&f.to_text(), Some(&p), out)?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "member=false reason=inconsistent-system")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Classify { graph, r } => {
            let g = read_coloring(&graph)?;
            let b = classify_r_behavior(&g, r)?;
            writeln!(
                out,
                "{} odd={} even={}",
                b.tag,
                show(b.witness_odd.as_ref()),
                show(b.witness_even.as_ref())
            )?;
            Ok(EXIT_OK)
        }
        Command::Components {
            input,
            color,
            subset,
        } => {
            let f = read_coloring(&input)?;
            let set = match subset {
                Some(list) => VertexSet::from_unsorted(parse_list(&list, "subset")?)?,
                None => VertexSet::range(f.n()),
            };
            writeln!(out, "{}", mono_components(&f, &set, color)?)?;
            Ok(EXIT_OK)
        }
        Command::Search {
            input,
            color,
            pattern,
            m,
            induced,
        } => {
            let f = read_coloring(&input)?;
            let hit = match pattern {
                PatternArg::Clique => find_mono_clique(&f, color, m)?,
                PatternArg::Cliqueminus => {
                    let mode = if induced {
                        MatchMode::Induced
                    } else {
                        MatchMode::Contains
                    };
                    find_clique_minus_edge(&f, color, m, mode)?
                }
            };
            match hit {
                Some(hit) => writeln!(
                    out,
                    "FOUND {}{}",
                    hit.vertices,
                    hit.missing
                        .map(|e| format!(" missing={e}"))
                        .unwrap_or_default()
                )?,
                None => writeln!(out, "NONE")?,
            }
            Ok(EXIT_OK)
        }
        Command::Construct {
            base,
            copies,
            distinguished,
            out: path,
        } => {
            let base = read_coloring(&base)?;
            let blown = blowup_5color(&lift_3coloring(&base, distinguished)?, copies)?;
            emit(&blown.to_text(), path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { input, avoid } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let (coloring, header) = parse_certificate(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let spec: AvoidanceSpec = match (avoid, header) {
                (Some(s), _) => s.parse()?,
                (None, Some(h)) => h.spec,
                (None, None) => {
                    return Err(Failure::Usage(
                        "no --avoid given and the file has no certificate line".into(),
                    ));
                }
            };
            report_certificate(&verify_avoidance(&coloring, &spec)?, out)
        }
        Command::Certify {
            family,
            params,
            base,
            copies,
            sizes,
            out: path,
        } => {
            let sizes: [usize; 3] = parse_list(&sizes, "sizes")?
                .try_into()
                .map_err(|_| Failure::Usage("--sizes needs exactly three values".into()))?;
            let base = match (family, base) {
                (Some(name), _) => generate_family(&Family::from_parts(&name, &params)?)?,
                (None, Some(p)) => read_coloring(&p)?,
                (None, None) => return Err(Failure::Usage("give --family or --base".into())),
            };
            let cert = certify_bound(&base, sizes, copies)?;
            if let Some(p) = path {
                emit(&cert.to_text(), Some(&p), out)?;
            }
            report_certificate(&cert, out)
        }
        Command::Check { suite, seed, n_max } => {
            let rows = run_suite(&suite, &CheckConfig { seed, n_max })?;
            write!(out, "{}", format_report(&rows))?;
            Ok(if rows.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}
