use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use posetalg::cones::meets_exist;
use posetalg::distributive::distributivity_witness;
use posetalg::dual::{boolean_roundtrip, dual_roundtrip};
use posetalg::enumerate::{
    count, count_unlabeled, enumerate_posets, exhaustive_check, find_counterexample, Cursor, Filter, PosetStream,
    Property, Theorem,
};
use posetalg::operator::{check_axioms, roundtrip_poset, roundtrip_structure};
use posetalg::sheffer::sheffer_roundtrip;
use posetalg::symdiff::sym_diff_table;
use posetalg::{
    check_dual_axioms, check_sheffer_axioms, dual_from_boolean, find_complementations, fixtures, sheffer_from_poset,
    structure_from_poset, AxiomReport, BoundedPoset, ComplementedPoset, Error, Order, PosetFile, StructureFile,
    SubsetPolicy, Table,
};

#[derive(Parser)]
#[command(name = "posetalg", version, about = "Cone operators, complemented and Boolean posets, and their algebraic duals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a poset belongs to a class; exit 0 iff it does.
    Check {
        file: PathBuf,
        #[arg(long)]
        class: Class,
    },
    /// Print an operation table.
    Table {
        file: PathBuf,
        #[arg(long)]
        op: Op,
        #[arg(long, value_enum, default_value_t = Format::Golden)]
        format: Format,
    },
    /// Check the axioms of a structure file, or of the structure built from a poset file.
    Axioms {
        file: PathBuf,
        #[arg(long)]
        structure: Kind,
        /// Largest carrier on which subset conditions are checked exhaustively.
        #[arg(long, default_value_t = SubsetPolicy::default().cap)]
        cap: usize,
    },
    /// Rebuild a poset through a structure and compare; exit 0 iff equal.
    Roundtrip {
        file: PathBuf,
        #[arg(long)]
        via: Kind,
    },
    /// Count labeled posets, or sweep a theorem over them.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value = "all")]
        filter: Filter,
        #[arg(long)]
        theorem: Option<Theorem>,
        /// Also count isomorphism classes.
        #[arg(long)]
        unlabeled: bool,
        /// List the posets of size `max-size`, continuing after this cursor.
        #[arg(long)]
        resume: Option<Cursor>,
        /// With --resume, stop after this many posets.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Search for the smallest poset violating a property.
    Counterexample {
        #[arg(long)]
        property: Property,
        #[arg(long)]
        max_size: usize,
        /// Write the witness poset here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Poset,
    Bounded,
    Complemented,
    Distributive,
    Boolean,
    Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Sd,
    Maxl,
    Minu,
    Sheffer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Golden,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Operator,
    Sheffer,
    Dual,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Operator => "operator",
            Kind::Sheffer => "sheffer",
            Kind::Dual => "dual",
        }
    }
}

/// Process outcome: success, a property that does not hold, or bad input.
enum Outcome {
    Holds,
    Fails,
}

fn holds(ok: bool) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

/// Input problems map to exit status 2.
fn is_input_error(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>().is_some()
            || matches!(
                c.downcast_ref::<Error>(),
                Some(
                    Error::Parse { .. }
                        | Error::KindMismatch { .. }
                        | Error::MissingComplement
                        | Error::SizeTooLarge { .. }
                        | Error::DuplicateName(_)
                        | Error::UnknownName(_)
                        | Error::CycleDetected(..)
                        | Error::TooManyElements(_)
                )
            )
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_input_error(&e) { 2 } else { 1 })
        }
    }
}

/// Reads `path`, then `path.poset`, then a bundled fixture of that name.
fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.exists() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    let with_ext = path.with_extension("poset");
    if with_ext.exists() {
        return std::fs::read_to_string(&with_ext).with_context(|| format!("reading {}", with_ext.display()));
    }
    if let Some(text) = path.to_str().and_then(fixtures::by_name) {
        return Ok(text.to_string());
    }
    Err(std::io::Error::new(std::io::ErrorKind::NotFound, format!("{}: no such file", path.display())).into())
}

fn load_poset(path: &Path) -> anyhow::Result<PosetFile> {
    let text = read_input(path)?;
    PosetFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Check { file, class } => check(&load_poset(&file)?, class),
        Command::Table { file, op, format } => {
            let f = load_poset(&file)?;
            let (symbol, tag, table) = build_table(&f, op)?;
            let names = f.poset.names();
            match format {
                Format::Golden => print!("{}", table.render(symbol, names)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&table.to_json(tag, names))?),
            }
            Ok(Outcome::Holds)
        }
        Command::Axioms { file, structure, cap } => {
            let text = read_input(&file)?;
            let policy = SubsetPolicy { cap, ..SubsetPolicy::default() };
            let report = axioms(&text, structure, &policy)?;
            println!("{report}");
            Ok(holds(report.all_pass()))
        }
        Command::Roundtrip { file, via } => roundtrip(&load_poset(&file)?, via),
        Command::Enumerate { max_size, filter, theorem, unlabeled, resume, limit } => {
            if let Some(t) = theorem {
                let report = exhaustive_check(t, max_size)?;
                println!("{report}");
                return Ok(holds(report.passed()));
            }
            if let Some(cursor) = resume {
                let stream = PosetStream::resume(max_size, filter, &cursor)?;
                list_stream(stream, limit);
                return Ok(Outcome::Holds);
            }
            enumerate_posets(max_size, filter)?;
            println!("size  {filter:>12}  all-labels{}", if unlabeled { "  unlabeled" } else { "" });
            for n in 1..=max_size {
                let c = count(n, filter)?;
                print!("{n:>4}  {:>12}  {:>10}", c.stream, c.all_labels);
                if unlabeled {
                    print!("  {:>9}", count_unlabeled(n, filter)?);
                }
                println!();
            }
            Ok(Outcome::Holds)
        }
        Command::Counterexample { property, max_size, output } => {
            match find_counterexample(property, max_size)? {
                Some(c) => {
                    println!("{c}");
                    if let Some(path) = output {
                        std::fs::write(&path, c.poset.to_text())
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                }
                None => println!("{property}: no counterexample with at most {max_size} elements"),
            }
            Ok(Outcome::Holds)
        }
    }
}

fn list_stream(mut stream: PosetStream, limit: usize) {
    for _ in 0..limit {
        let Some(inst) = stream.next() else {
            println!("# end of stream");
            return;
        };
        let cursor = stream.cursor().map(|c| c.to_string()).unwrap_or_default();
        println!("# cursor {cursor}");
        print!("{}", inst.to_file().to_text());
    }
}

fn check(f: &PosetFile, class: Class) -> anyhow::Result<Outcome> {
    let p = &f.poset;
    let names = p.names();
    let complemented = || -> Option<ComplementedPoset> {
        if f.complement.is_some() {
            return f.complemented().ok();
        }
        let b = f.bounded().ok()?;
        let comp = find_complementations(&b).into_iter().next()?;
        ComplementedPoset::new(b, comp).ok()
    };
    let ok = match class {
        Class::Poset => {
            println!("poset: {} elements, {} covers", p.len(), p.hasse().len());
            true
        }
        Class::Bounded => match p.bounds() {
            Some((b, t)) => {
                println!("bounded: bottom {}, top {}", names[b], names[t]);
                true
            }
            None => {
                let bottoms = p.minimal(p.carrier());
                let tops = p.maximal(p.carrier());
                println!("not bounded: minimal {}, maximal {}", p.render(bottoms), p.render(tops));
                false
            }
        },
        Class::Complemented => match complemented() {
            Some(c) => {
                let pairs: Vec<String> =
                    (0..c.len()).filter(|&x| x <= c.comp(x)).map(|x| format!("{}~{}", names[x], names[c.comp(x)])).collect();
                println!("complemented: {}", pairs.join(" "));
                true
            }
            None => {
                println!("not complemented: no antitone involution onto complements");
                false
            }
        },
        Class::Distributive => distributive(p),
        Class::Boolean => match complemented() {
            None => {
                println!("not boolean: not complemented");
                false
            }
            Some(_) => distributive(p),
        },
        Class::Lattice => {
            let lattice = meets_exist(p);
            println!("{}", if lattice { "lattice" } else { "not a lattice" });
            lattice
        }
    };
    Ok(holds(ok))
}

fn distributive(p: &posetalg::FinitePoset) -> bool {
    match distributivity_witness(p) {
        None => {
            println!("distributive");
            true
        }
        Some(w) => {
            println!("not distributive: L(U(x,y),z) ≠ LU(L(x,z),L(y,z)) {}", w.render(p.names()));
            false
        }
    }
}

fn build_table(f: &PosetFile, op: Op) -> anyhow::Result<(&'static str, &'static str, Table)> {
    let p = &f.poset;
    let s = posetalg::ElemSet::singleton;
    Ok(match op {
        Op::Sd => ("+", "sd", sym_diff_table(&f.complemented()?)),
        Op::Sheffer => ("|", "sheffer", sheffer_from_poset(&f.complemented()?).stroke),
        Op::Maxl => ("ML", "maxl", Table::from_fn(p.len(), |x, y| p.max_l(s(x), s(y)))),
        Op::Minu => ("MU", "minu", Table::from_fn(p.len(), |x, y| p.min_u(s(x), s(y)))),
    })
}

fn axioms(text: &str, kind: Kind, policy: &SubsetPolicy) -> anyhow::Result<AxiomReport> {
    if StructureFile::sniff(text) {
        let st = StructureFile::parse(text)?;
        return Ok(match (kind, st) {
            (Kind::Operator, StructureFile::Operator(s)) => check_axioms(&s),
            (Kind::Sheffer, StructureFile::Sheffer(s)) => check_sheffer_axioms(&s),
            (Kind::Dual, StructureFile::Dual(s)) => check_dual_axioms(&s, policy),
            (k, st) => {
                return Err(Error::KindMismatch { expected: k.as_str().into(), found: st.kind().into() }.into())
            }
        });
    }
    let f = PosetFile::parse(text)?;
    Ok(match kind {
        Kind::Operator => check_axioms(&structure_from_poset(&f.poset)?),
        Kind::Sheffer => check_sheffer_axioms(&sheffer_from_poset(&f.complemented()?)),
        Kind::Dual => check_dual_axioms(&dual_from_boolean(&f.complemented()?)?, policy),
    })
}

fn roundtrip(f: &PosetFile, via: Kind) -> anyhow::Result<Outcome> {
    let policy = SubsetPolicy::default();
    let ok = match via {
        Kind::Operator => {
            let _: BoundedPoset = f.bounded()?;
            let st = structure_from_poset(&f.poset)?;
            let back = roundtrip_poset(&f.poset)?;
            let forth = roundtrip_structure(&st)?;
            println!("P(A(P)) = P: {back}\nA(P(A)) = A: {forth}");
            back && forth
        }
        Kind::Sheffer => {
            let ok = sheffer_roundtrip(&f.complemented()?);
            println!("Sheffer round-trip: {ok}");
            ok
        }
        Kind::Dual => {
            let c = f.complemented()?;
            let d = dual_from_boolean(&c)?;
            let back = boolean_roundtrip(&c, &policy)?;
            let rt = dual_roundtrip(&d, &policy)?;
            println!("B(D(P)) = P: {back}");
            println!("D(B(D)) multiplicative reduct equal: {}", rt.times_equal);
            println!("D(B(D)) additive table equal: {}", rt.plus_equal);
            back && rt.times_equal
        }
    };
    Ok(holds(ok))
}
