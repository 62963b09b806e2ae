//! `posetkit` command-line front end.
//!
//! Exit codes: 0 success, 1 input error (usage, I/O, parse failure, cycle),
//! 2 domain violation (non-forest input, non-regular partition), 3 size guard
//! exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use posetkit::casestudy::{bell, bell_numbers, m_family_formula_table, m_poset};
use posetkit::partition::{
    count_monotone_partitions, count_regular_partitions, monotone_partitions_within,
    regular_partitions_within, Limits,
};
use posetkit::{
    are_isomorphic, forest_product_all, forest_sum, hasse_dot, linear_extensions, poset_product,
    poset_sum, regular_to_poset, Error, PartitionLattice, Poset,
};

#[derive(Parser)]
#[command(
    name = "posetkit",
    version,
    about = "Finite posets, their partitions and partition lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a standard poset in the text format.
    Gen {
        family: Family,
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print elements, relation or covering relation of a poset.
    #[command(group(ArgGroup::new("what").required(true).args(["elements", "relation", "covering"])))]
    Show {
        file: PathBuf,
        #[arg(long)]
        elements: bool,
        #[arg(long)]
        relation: bool,
        #[arg(long)]
        covering: bool,
    },
    /// Hasse diagrams as DOT.
    Dot {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        columns: usize,
    },
    /// Enumerate monotone or regular partitions.
    Partitions {
        #[arg(long)]
        kind: Kind,
        file: PathBuf,
        /// Only print the trace line.
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// List every partition (the default).
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        guard: Guard,
    },
    /// Statistics of the lattice of monotone or regular partitions.
    Lattice {
        #[arg(long)]
        kind: Kind,
        file: PathBuf,
        #[arg(long)]
        moebius: bool,
        #[arg(long)]
        whitney: bool,
        #[arg(long)]
        levels: bool,
        #[arg(long)]
        atoms: bool,
        #[arg(long)]
        coatoms: bool,
        #[arg(long)]
        ranked: bool,
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        guard: Guard,
    },
    /// Linear extensions of a poset.
    Linext { file: PathBuf },
    /// Coproduct of posets or forests.
    Sum(Combine),
    /// Product of posets or forests.
    Prod(Combine),
    /// Bell numbers.
    Bell {
        n: Option<usize>,
        /// Print B_0 .. B_N.
        #[arg(long, value_name = "N")]
        table: Option<usize>,
    },
    /// Reproduce the chain and M-family case studies.
    Casestudy {
        study: Study,
        #[arg(long)]
        max: Option<usize>,
        #[command(flatten)]
        guard: Guard,
    },
}

#[derive(Args)]
struct Guard {
    /// Skip the enumeration size guard.
    #[arg(long)]
    force: bool,
}

impl Guard {
    fn limits(&self) -> Limits {
        if self.force {
            Limits::unlimited()
        } else {
            Limits::default()
        }
    }
}

#[derive(Args)]
struct Combine {
    #[arg(long)]
    category: CategoryArg,
    #[arg(required = true, num_args = 2..)]
    files: Vec<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Emit DOT instead of the poset text format.
    #[arg(long)]
    dot: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Chain,
    Antichain,
    Boolean,
    #[value(name = "m-family")]
    Mfamily,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Monotone,
    Regular,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CategoryArg {
    Poset,
    Forest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Study {
    Chains,
    Mfamily,
}

fn read_poset(path: &Path) -> Result<Poset> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Poset::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn build_lattice(p: &Poset, kind: Kind, limits: &Limits) -> Result<PartitionLattice> {
    Ok(match kind {
        Kind::Monotone => {
            let (parts, _) = monotone_partitions_within(p, limits)?;
            PartitionLattice::monotone(&parts)?
        }
        Kind::Regular => {
            let (parts, _) = regular_partitions_within(p, limits)?;
            PartitionLattice::regular(&parts, p)?
        }
    })
}

fn run(cli: Cli) -> Result<()> {
    let mut out = String::new();
    match cli.command {
        Command::Gen { family, n, output } => {
            let p = match family {
                Family::Chain => Poset::chain(n),
                Family::Antichain => Poset::antichain(n),
                Family::Boolean => {
                    anyhow::ensure!(n <= 20, "boolean algebra is limited to n <= 20");
                    Poset::boolean_algebra(n)
                }
                Family::Mfamily => {
                    anyhow::ensure!(n >= 1, "the M-family starts at 1");
                    m_poset(n)
                }
            };
            return emit(output.as_deref(), &p.to_text());
        }
        Command::Show {
            file,
            elements,
            relation,
            covering,
        } => {
            let p = read_poset(&file)?;
            if elements {
                for l in p.labels() {
                    out.push_str(&format!("v {l}\n"));
                }
            } else if relation {
                for l in p.labels() {
                    out.push_str(&format!("v {l}\n"));
                }
                for (a, b) in p.relation() {
                    out.push_str(&format!("r {a} {b}\n"));
                }
            } else if covering {
                for c in p.covering() {
                    out.push_str(&format!("r {} {}\n", c.lower, c.upper));
                }
            }
        }
        Command::Dot { files, columns } => {
            let posets = files
                .iter()
                .map(|f| read_poset(f))
                .collect::<Result<Vec<_>>>()?;
            out = hasse_dot(&posets, columns);
        }
        Command::Partitions {
            kind,
            file,
            count,
            list: _,
            guard,
        } => {
            let p = read_poset(&file)?;
            let limits = guard.limits();
            if count {
                let report = match kind {
                    Kind::Monotone => count_monotone_partitions(&p, &limits)?,
                    Kind::Regular => count_regular_partitions(&p, &limits)?,
                };
                out.push_str(&format!("{report}\n"));
            } else {
                let (report, lines) = match kind {
                    Kind::Monotone => {
                        let (parts, report) = monotone_partitions_within(&p, &limits)?;
                        (
                            report,
                            parts
                                .iter()
                                .map(|m| m.to_poset().describe())
                                .collect::<Vec<_>>(),
                        )
                    }
                    Kind::Regular => {
                        let (parts, report) = regular_partitions_within(&p, &limits)?;
                        let lines = parts
                            .iter()
                            .map(|sp| Ok(regular_to_poset(sp, &p)?.describe()))
                            .collect::<Result<Vec<_>, Error>>()?;
                        (report, lines)
                    }
                };
                out.push_str(&format!("{report}\n"));
                for (k, line) in lines.iter().enumerate() {
                    out.push_str(&format!("{}: {line}\n", k + 1));
                }
            }
        }
        Command::Lattice {
            kind,
            file,
            moebius,
            whitney,
            levels,
            atoms,
            coatoms,
            ranked,
            dot,
            guard,
        } => {
            let p = read_poset(&file)?;
            let l = build_lattice(&p, kind, &guard.limits())?;
            let any = moebius || whitney || levels || atoms || coatoms || ranked || dot;
            let stats: [(bool, &str, String); 6] = [
                (moebius, "moebius", join(&l.moebius())),
                (whitney, "whitney", join(&l.whitney_numbers())),
                (levels, "levels", join(&l.whitney_levels())),
                (atoms, "atoms", join(&l.atoms_positions())),
                (coatoms, "coatoms", join(&l.coatoms_positions())),
                (ranked, "ranked", l.is_ranked().to_string()),
            ];
            if any {
                for (wanted, _, value) in &stats {
                    if *wanted {
                        out.push_str(&format!("{value}\n"));
                    }
                }
                if dot {
                    out.push_str(&l.to_dot());
                }
            } else {
                out.push_str(&format!("elements: {}\n", l.len()));
                for (_, name, value) in &stats {
                    out.push_str(format!("{name}: {value}").trim_end());
                    out.push('\n');
                }
            }
        }
        Command::Linext { file } => {
            let p = read_poset(&file)?;
            let exts = linear_extensions(&p);
            out.push_str(&format!("Linear extensions: {}\n", exts.len()));
            for (k, q) in exts.iter().enumerate() {
                out.push_str(&format!("{}: {}\n", k + 1, q.describe()));
            }
        }
        Command::Sum(args) => {
            let posets = args
                .files
                .iter()
                .map(|f| read_poset(f))
                .collect::<Result<Vec<_>>>()?;
            let result = match args.category {
                CategoryArg::Poset => poset_sum(&posets),
                CategoryArg::Forest => forest_sum(&posets)?,
            };
            return emit_combined(&args, &result);
        }
        Command::Prod(args) => {
            let posets = args
                .files
                .iter()
                .map(|f| read_poset(f))
                .collect::<Result<Vec<_>>>()?;
            let result = match args.category {
                CategoryArg::Poset => poset_product(&posets),
                CategoryArg::Forest => forest_product_all(&posets)?,
            };
            return emit_combined(&args, &result);
        }
        Command::Bell { n, table } => {
            if let Some(n) = n {
                out.push_str(&format!("{}\n", bell(n)));
            }
            if let Some(t) = table {
                out.push_str(&format!("{}\n", join(&bell_numbers(t))));
            }
            anyhow::ensure!(n.is_some() || table.is_some(), "give N or --table N");
        }
        Command::Casestudy { study, max, guard } => {
            let limits = guard.limits();
            match study {
                Study::Chains => chains_study(max.unwrap_or(4), &limits, &mut out)?,
                Study::Mfamily => mfamily_study(max.unwrap_or(5), &limits, &mut out)?,
            }
        }
    }
    emit(None, &out)
}

fn emit_combined(args: &Combine, result: &Poset) -> Result<()> {
    let text = if args.dot {
        hasse_dot(std::slice::from_ref(result), 1)
    } else {
        result.to_text()
    };
    emit(args.output.as_deref(), &text)
}

fn chains_study(max: usize, limits: &Limits, out: &mut String) -> Result<()> {
    anyhow::ensure!(max >= 2, "--max must be at least 2");
    let mut all = true;
    for n in 2..=max {
        let chain = Poset::chain(n);
        let boolean = Poset::boolean_algebra(n - 1);
        for kind in [Kind::Monotone, Kind::Regular] {
            let (report, lattice) = match kind {
                Kind::Monotone => {
                    let (parts, report) = monotone_partitions_within(&chain, limits)?;
                    (report, PartitionLattice::monotone(&parts)?)
                }
                Kind::Regular => {
                    let (parts, report) = regular_partitions_within(&chain, limits)?;
                    (report, PartitionLattice::regular(&parts, &chain)?)
                }
            };
            let iso = are_isomorphic(lattice.order(), &boolean);
            all &= iso;
            let name = if kind == Kind::Monotone {
                "monotone"
            } else {
                "regular"
            };
            out.push_str(&format!(
                "chain {n} {name}: {report} - isomorphic to B{}: {iso}\n",
                n - 1
            ));
        }
    }
    out.push_str(&format!("all isomorphic: {all}\n"));
    Ok(())
}

fn mfamily_study(max: usize, limits: &Limits, out: &mut String) -> Result<()> {
    anyhow::ensure!(max >= 1, "--max must be at least 1");
    let formula = m_family_formula_table(max.max(15));
    let mut all = true;
    for i in 1..=max {
        let report = count_regular_partitions(&m_poset(i), limits)?;
        let matches = formula[i - 1] == report.found.into();
        all &= matches;
        out.push_str(&format!(
            "M{i}: {report} - formula: {} - match: {matches}\n",
            formula[i - 1]
        ));
    }
    out.push_str(&format!("formula: {}\n", join(&formula)));
    out.push_str(&format!("all match: {all}\n"));
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::GuardExceeded { .. }) => 3,
        Some(
            Error::NotAForest(_)
            | Error::NotRegular(..)
            | Error::NotALattice(..)
            | Error::EmptyLattice,
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
