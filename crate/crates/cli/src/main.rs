use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symclass::brauer::{cyclic_support, find_character, irreducible_brauer_characters, ordinary_table};
use symclass::group::{build_group, split_prime_power, FiniteGroup, GroupFamily};
use symclass::report::{write_csv, Report};
use symclass::theorems::{
    predicate, run_sweep, verify_with, CaseParams, FamilyRange, SweepConfig, VerificationReport, VerifyOptions,
};
use symclass::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_CONSTRUCTION: u8 = 3;

#[derive(Parser)]
#[command(name = "symclass", version, about = "Brauer symmetry classes of tensors for dihedral, dicyclic and semidihedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, conjugacy classes and p-regular classes.
    GroupInfo {
        #[command(flatten)]
        group: GroupArgs,
        /// Primes for which to list p-regular classes.
        #[arg(long = "p", value_delimiter = ',')]
        primes: Vec<u32>,
    },
    /// Irreducible Brauer characters for a prime, or the ordinary table without one.
    Characters {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        p: Option<u32>,
    },
    /// Orbital dimensions for every realizable t_gamma.
    Dim {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Orthogonal-basis verdict for one character.
    Obasis {
        #[command(flatten)]
        case: CaseArgs,
    },
    /// Sweep every case in the given ranges and report.
    Verify {
        /// Family range as name:lo:hi, repeatable.
        #[arg(long = "family")]
        families: Vec<String>,
        #[arg(long = "p", value_delimiter = ',', default_values_t = [2, 3, 5])]
        primes: Vec<u32>,
        /// Range of dim V as lo:hi.
        #[arg(long = "dim-v", default_value = "1:3")]
        dim_v: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Orbit representatives sampled per linear case.
        #[arg(long, default_value_t = 16)]
        cap: usize,
        #[arg(long, hide = true)]
        negative_control: bool,
    },
}

#[derive(clap::Args)]
struct GroupArgs {
    /// dihedral, dicyclic or semidihedral.
    family: String,
    /// m for the dihedral family, n otherwise.
    param: u32,
}

#[derive(clap::Args)]
struct CaseArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long)]
    p: u32,
    /// Character label such as psi_hat[b=1], or its position in the list.
    #[arg(long = "char")]
    character: String,
    #[arg(long = "dim-v", default_value_t = 2)]
    dim_v: u32,
    #[arg(long, default_value_t = 16)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn parse_family(name: &str, param: u32) -> Result<GroupFamily, CliError> {
    GroupFamily::from_name(name, param).ok_or_else(|| CliError::Usage(format!("unknown family '{name}'")))
}

fn group(args: &GroupArgs) -> Result<FiniteGroup, CliError> {
    Ok(build_group(parse_family(&args.family, args.param)?)?)
}

fn parse_range(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("expected lo:hi, got '{s}'"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok((lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?))
}

fn parse_family_range(s: &str) -> Result<FamilyRange, CliError> {
    let (name, range) = s
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("expected name:lo:hi, got '{s}'")))?;
    parse_family(name, 0)?;
    let (lo, hi) = parse_range(range)?;
    let family = GroupFamily::from_name(name, 0).expect("checked").name().to_string();
    Ok(FamilyRange { family, lo, hi })
}

fn group_info(args: &GroupArgs, primes: &[u32]) -> Result<u8, CliError> {
    let g = group(args)?;
    let mut out = io::stdout().lock();
    writeln!(out, "group: {}", g.family())?;
    writeln!(out, "order: {}", g.order())?;
    writeln!(out, "degree: {}", g.degree())?;
    let classes = g.conjugacy_classes();
    writeln!(out, "conjugacy classes: {}", classes.len())?;
    for c in &classes {
        writeln!(out, "  {} (size {}, order {})", g.describe(c[0]), c.len(), g.element_order(c[0]))?;
    }
    for &p in primes {
        let regular = g.p_regular_classes(p)?;
        let (l, t) = split_prime_power(g.rotation_order(), p);
        writeln!(out, "{p}-regular classes: {} (l = {l}, t = {t})", regular.len())?;
        for c in &regular {
            writeln!(out, "  {} (size {})", g.describe(c[0]), c.len())?;
        }
    }
    Ok(0)
}

fn characters(args: &GroupArgs, p: Option<u32>) -> Result<u8, CliError> {
    let g = group(args)?;
    let chars = match p {
        Some(p) => irreducible_brauer_characters(&g, p)?,
        None => ordinary_table(&g),
    };
    let mut out = io::stdout().lock();
    writeln!(out, "{:<4} {:<20} {:>6} {:>14} {:>18}", "#", "label", "degree", "cyclic_support", "nonzero_on_support")?;
    for (i, phi) in chars.iter().enumerate() {
        let info = cyclic_support(&g, phi);
        writeln!(
            out,
            "{:<4} {:<20} {:>6} {:>14} {:>18}",
            i,
            phi.label(),
            phi.degree().to_string(),
            info.support_is_cyclic,
            info.nonzero_on_support
        )?;
    }
    Ok(0)
}

fn run_case(args: &CaseArgs) -> Result<VerificationReport, CliError> {
    let g = group(&args.group)?;
    let chars = irreducible_brauer_characters(&g, args.p)?;
    let phi = find_character(&chars, &args.character)?;
    let case = CaseParams::new(g.family(), args.p, args.dim_v, *phi.spec());
    let options = VerifyOptions {
        cap: args.cap,
        invert_predicates: false,
    };
    Ok(verify_with(&g, phi, case, &options)?)
}

fn dim(args: &CaseArgs) -> Result<u8, CliError> {
    let report = run_case(args)?;
    let c = &report.case;
    let mut out = io::stdout().lock();
    writeln!(out, "{} p={} l={} t={} {} dimV={}", c.family, c.p, c.l, c.t, c.character.label(), c.dim_v)?;
    if c.character.is_linear() {
        for o in &report.orbits {
            writeln!(out, "alpha={} dim={}", o.alpha, o.dim)?;
        }
        return Ok(0);
    }
    writeln!(out, "{:>7} {:>9} {:>10} {:>6} {:>5} {:>8}  gamma", "t_gamma", "predicted", "circulant", "M_rank", "gram", "nonzero")?;
    for g in &report.gammas {
        writeln!(
            out,
            "{:>7} {:>9} {:>10} {:>6} {:>5} {:>8}  {}",
            g.t_gamma, g.predicted_dim, g.circulant_dim, g.rank_m, g.rank_gram, g.observed_nonvanishing, g.gamma
        )?;
    }
    Ok(if report.gammas.iter().all(|g| g.predicted_dim == g.rank_gram && g.internally_consistent()) {
        0
    } else {
        EXIT_DISAGREE
    })
}

fn obasis(args: &CaseArgs) -> Result<u8, CliError> {
    let report = run_case(args)?;
    let c = &report.case;
    let mut out = io::stdout().lock();
    writeln!(out, "{} p={} {} dimV={}", c.family, c.p, c.character.label(), c.dim_v)?;
    writeln!(out, "predicted: {}", predicate(c)?)?;
    writeln!(out, "observed: {}{}", report.observed_obasis(), if report.sampled { " (sampled orbits)" } else { "" })?;
    for g in &report.gammas {
        let witness = match &g.witness {
            Some(w) => format!("{w:?}"),
            None => "none".into(),
        };
        writeln!(out, "  t_gamma={} dim={} witness={witness}", g.t_gamma, g.rank_gram)?;
    }
    for o in &report.orbits {
        writeln!(out, "  alpha={} dim={} o-basis={}", o.alpha, o.dim, o.has_obasis)?;
    }
    for d in report.disagreements() {
        writeln!(out, "disagreement: {d}")?;
    }
    Ok(if report.agree() { 0 } else { EXIT_DISAGREE })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    families: &[String],
    primes: Vec<u32>,
    dim_v: &str,
    format: Format,
    out: Option<&PathBuf>,
    cap: usize,
    negative_control: bool,
) -> Result<u8, CliError> {
    let mut config = SweepConfig::default();
    if !families.is_empty() {
        config.families = families.iter().map(|s| parse_family_range(s)).collect::<Result<_, _>>()?;
    }
    config.primes = primes;
    config.dim_v = parse_range(dim_v)?;
    config.options = VerifyOptions {
        cap,
        invert_predicates: negative_control,
    };
    let outcome = run_sweep(&config)?;
    if outcome.reports.is_empty() && outcome.failures.is_empty() {
        eprintln!("warning: the sweep range is empty");
    }
    for v in &outcome.vacuous {
        eprintln!("vacuous: {v}");
    }
    for r in &outcome.reports {
        for d in r.disagreements() {
            eprintln!("disagreement: {d}");
        }
    }
    let report = Report::from_outcome(&config, &outcome);
    for f in &report.meta.failures {
        eprintln!("failure: {f}");
    }
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Json => sink.write_all(report.to_json().map_err(io::Error::other)?.as_bytes())?,
        Format::Csv => write_csv(&report.cases, &mut sink).map_err(io::Error::other)?,
    }
    sink.flush()?;
    Ok(if !outcome.all_agree() {
        EXIT_DISAGREE
    } else if !outcome.failures.is_empty() {
        EXIT_CONSTRUCTION
    } else {
        0
    })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::GroupInfo { group, primes } => group_info(&group, &primes),
        Command::Characters { group, p } => characters(&group, p),
        Command::Dim { case } => dim(&case),
        Command::Obasis { case } => obasis(&case),
        Command::Verify {
            families,
            primes,
            dim_v,
            format,
            out,
            cap,
            negative_control,
        } => verify(&families, primes, &dim_v, format, out.as_ref(), cap, negative_control),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Core(e @ Error::ConstructionFailure { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONSTRUCTION)
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
