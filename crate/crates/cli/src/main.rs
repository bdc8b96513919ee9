//! `cohomreg`: group, resolution and ring reports from the command line.
//!
//! Exit status is 0 on success, 1 when the computation reports a domain
//! error (or a table check finds disagreements) and 2 on usage errors.

mod report;
mod table;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use cohomreg_core::algebra::{parse_presentation, Presentation};
use cohomreg_core::group::{gtd_feasible, load_group, FiniteGroup};
use cohomreg_core::regularity::{
    a_invariants, defect_report, vsqr_check, ParameterSystem, DEFAULT_POWER_CAP,
};
use cohomreg_core::resolution::{ResolutionState, DEFAULT_MAX_DEGREE};

use report::Render;

#[derive(Parser, Debug)]
#[command(name = "cohomreg", version, about = "Regularity and depth checks for group cohomology rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// p-group invariants
    #[command(subcommand)]
    Group(GroupCmd),
    /// Order screen for p-groups of large defect
    Screen {
        #[arg(long)]
        prime: u32,
        /// n in |G| = p^n
        #[arg(long = "order-exp")]
        order_exp: u32,
        /// Target lower bound on the defect (3 or 4)
        #[arg(long)]
        gtd: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Betti numbers of the minimal resolution of the trivial module
    Resolve {
        file: PathBuf,
        #[arg(long)]
        prime: u32,
        #[arg(long = "max-degree", default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Presented graded-commutative rings
    #[command(subcommand)]
    Ring(RingCmd),
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// p-rank, center rank and defect
    Rank(GroupArgs),
    /// Elementary abelian subgroups containing the central Omega_1
    Abelians(GroupArgs),
}

#[derive(Args, Debug)]
struct GroupArgs {
    file: PathBuf,
    #[arg(long)]
    prime: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    /// Dimensions of the graded pieces
    Hilbert {
        file: PathBuf,
        #[arg(long = "max-degree", default_value_t = 10)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// a-invariants, depth, defect and regularity
    Regularity(RingArgs),
    /// Very strong quasi-regularity of the parameter system
    Vsqr(RingArgs),
    /// Regularity, depth and defect from tabulated a-invariants
    TableCheck(TableArgs),
}

#[derive(Args, Debug)]
struct RingArgs {
    file: PathBuf,
    /// Comma-separated parameters, replacing those in the file
    #[arg(long)]
    params: Option<String>,
    /// Degree cap (default: sum of parameter degrees + largest + 2)
    #[arg(long = "max-degree")]
    max_degree: Option<u32>,
    #[arg(long = "power-cap", default_value_t = DEFAULT_POWER_CAP)]
    power_cap: u32,
    /// Must match the ring's prime when given
    #[arg(long)]
    prime: Option<u32>,
    /// Group file for the defect and excess cross-check
    #[arg(long)]
    group: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Rows `gp K a^(K-3) a^(K-2) a^(K-1) a^K`
    data: Option<PathBuf>,
    /// Rows `gp K depth center_rank delta` to compare against
    #[arg(long)]
    expected: Option<PathBuf>,
    /// A single a-invariant list, e.g. `-inf,-inf,-5,-5`
    #[arg(long = "a-list", allow_hyphen_values = true, conflicts_with = "data")]
    a_list: Option<String>,
    /// Krull dimension for --a-list when it omits leading -inf entries
    #[arg(long)]
    krull: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

enum Failure {
    Usage(String),
    Domain(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.into())
    }
}

/// Output text and whether the run counts as a success.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn load_group_file(path: &Path) -> anyhow::Result<FiniteGroup> {
    load_group(&read(path)?).with_context(|| format!("group file {}", path.display()))
}

fn load_ring(path: &Path, prime: Option<u32>) -> Result<Presentation, Failure> {
    let ring = parse_presentation(&read(path)?).with_context(|| format!("ring file {}", path.display()))?;
    if let Some(p) = prime {
        if p != ring.prime() {
            return Err(Failure::Usage(format!(
                "--prime {p} does not match the ring's prime {}",
                ring.prime()
            )));
        }
    }
    Ok(ring)
}

fn parameter_system(ring: &Presentation, params: Option<&str>) -> Result<ParameterSystem, Failure> {
    let elements = match params {
        Some(list) => {
            let items: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if items.is_empty() {
                return Err(Failure::Usage("--params is empty".into()));
            }
            items
                .iter()
                .map(|s| ring.parse_polynomial(s))
                .collect::<Result<Vec<_>, _>>()
                .context("--params")?
        }
        None => ring.params().to_vec(),
    };
    if elements.is_empty() {
        return Err(Failure::Usage("the ring declares no parameters; pass --params".into()));
    }
    Ok(ParameterSystem::new(ring, elements)?)
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Group(GroupCmd::Rank(args)) => {
            let g = load_group_file(&args.file)?;
            let profile = g.gtd(args.prime)?;
            let r = report::GroupRankReport {
                name: g.name().map(str::to_string).unwrap_or_else(|| stem(&args.file)),
                order: g.order(),
                prime: profile.prime,
                exponent: profile.exponent,
                p_rank: profile.p_rank,
                center_rank: profile.center_rank,
                gtd: profile.gtd,
            };
            Ok(Outcome::ok(r.render(args.format)?))
        }
        Command::Group(GroupCmd::Abelians(args)) => {
            let g = load_group_file(&args.file)?;
            let subgroups = g.enumerate_elem_abelians(args.prime)?;
            let r = report::AbeliansReport {
                name: g.name().map(str::to_string).unwrap_or_else(|| stem(&args.file)),
                prime: args.prime,
                p_rank: g.p_rank(args.prime)?,
                subgroups: subgroups
                    .into_iter()
                    .map(|s| report::SubgroupEntry {
                        rank: s.rank.unwrap_or(0),
                        order: s.order(),
                        elements: s.elements,
                    })
                    .collect(),
            };
            Ok(Outcome::ok(r.render(args.format)?))
        }
        Command::Screen {
            prime,
            order_exp,
            gtd,
            format,
        } => {
            let r = report::ScreenReport {
                prime,
                order_exponent: order_exp,
                gtd,
                feasible: gtd_feasible(prime, order_exp, gtd)?,
            };
            Ok(Outcome::ok(r.render(format)?))
        }
        Command::Resolve {
            file,
            prime,
            max_degree,
            format,
        } => {
            let g = load_group_file(&file)?;
            let name = g.name().map(str::to_string).unwrap_or_else(|| stem(&file));
            let mut st = ResolutionState::new(Arc::new(g), prime)?;
            st.extend_through(max_degree);
            let r = report::ResolutionReport {
                name,
                prime,
                max_degree,
                betti: st.betti().to_vec(),
                minimal: st.is_minimal(),
            };
            Ok(Outcome::ok(r.render(format)?))
        }
        Command::Ring(RingCmd::Hilbert {
            file,
            max_degree,
            format,
        }) => {
            let ring = load_ring(&file, None)?;
            let r = report::HilbertReport {
                name: ring.name().map(str::to_string).unwrap_or_else(|| stem(&file)),
                prime: ring.prime(),
                hilbert: ring.hilbert_function(max_degree),
            };
            Ok(Outcome::ok(r.render(format)?))
        }
        Command::Ring(RingCmd::Regularity(args)) => {
            let ring = load_ring(&args.file, args.prime)?;
            let ps = parameter_system(&ring, args.params.as_deref())?;
            let mut rep = a_invariants(&ring, &ps, args.max_degree, args.power_cap)?;
            let defect = match &args.group {
                Some(path) => {
                    let profile = load_group_file(path)?.gtd(ring.prime())?;
                    let d = defect_report(&profile, &rep)?;
                    rep.excess = Some(d.excess);
                    Some(d)
                }
                None => None,
            };
            let name = ring.name().map(str::to_string).unwrap_or_else(|| stem(&args.file));
            let r = report::RingReport::new(name, &ring, &rep, defect);
            Ok(Outcome::ok(r.render(args.format)?))
        }
        Command::Ring(RingCmd::Vsqr(args)) => {
            let ring = load_ring(&args.file, args.prime)?;
            let ps = parameter_system(&ring, args.params.as_deref())?;
            let cap = args.max_degree.unwrap_or_else(|| ps.default_cap());
            let status = vsqr_check(&ring, &ps, cap)?;
            let r = report::VsqrReport {
                name: ring.name().map(str::to_string).unwrap_or_else(|| stem(&args.file)),
                prime: ring.prime(),
                parameters: ps.format(&ring),
                degrees: ps.degrees.clone(),
                vsqr: status,
            };
            Ok(Outcome::ok(r.render(args.format)?))
        }
        Command::Ring(RingCmd::TableCheck(args)) => table_check(args),
    }
}

fn table_check(args: TableArgs) -> Result<Outcome, Failure> {
    let expected = match &args.expected {
        Some(p) => Some(table::parse_expected(&read(p)?)?),
        None => None,
    };
    let rows = match (&args.data, &args.a_list) {
        (Some(path), None) => table::parse_a_rows(&read(path)?)?,
        (None, Some(list)) => {
            let tail = table::parse_degree_list(list).map_err(|e| Failure::Usage(format!("--a-list: {e}")))?;
            if tail.is_empty() {
                return Err(Failure::Usage("--a-list is empty".into()));
            }
            let k = args.krull.unwrap_or(tail.len() - 1);
            if tail.len() > k + 1 {
                return Err(Failure::Usage(format!("{} a-invariants for K = {k}", tail.len())));
            }
            vec![table::ARow {
                gp: "input".into(),
                k,
                tail,
            }]
        }
        _ => return Err(Failure::Usage("give a data file or --a-list".into())),
    };
    let check = table::check_table(&rows, expected.as_ref())?;
    let ok = check.passed();
    Ok(Outcome {
        text: check.render(args.format)?,
        ok,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
