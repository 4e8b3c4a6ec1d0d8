//! Command-line surface: build semigroups, print congruence/ideal lattices
//! as DOT or ASCII, run the correspondence checks, and execute the full
//! verification suite.
//!
//! Exit codes: 0 all pass, 1 check failure, 2 bad input, 3 guard exceeded.

use congkit_cli::{output, verify};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use congkit::correspondence::build_phi_context;
use congkit::gf::PrimeField;
use congkit::relations::{enumerate_congruences, is_permutable};
use congkit::semigroup::{build_bounded, CayleyTable, FamilySpec, DEFAULT_SIZE_BOUND};
use congkit::{algebra::SemigroupAlgebra, Error, Guards};

#[derive(Parser)]
#[command(name = "congkit", version, about = "Congruence lattices of finite semigroups and ideal lattices of their algebras over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cayley table, the congruence list, and the permutability
    /// verdict of a semigroup.
    Semigroup(SemigroupArgs),
    /// Enumerate the ideals of F_p[S], print the lattice, the kernel
    /// classes of phi, and the three correspondence checks.
    Algebra(AlgebraArgs),
    /// Run every claim-verification row and exit 0 iff all pass.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Built-in family: cyclic:N, chain-semilattice:N, rect-band:L,R,
    /// left-zero:N, right-zero:N, two-semilattice.
    #[arg(long, conflicts_with = "table")]
    family: Option<String>,
    /// Cayley table file in the plain-text format.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Override the default semigroup size bound.
    #[arg(long, default_value_t = DEFAULT_SIZE_BOUND)]
    max_n: usize,
}

impl SourceArgs {
    fn load(&self) -> congkit::Result<CayleyTable> {
        match (&self.family, &self.table) {
            (Some(spec), None) => build_bounded(FamilySpec::parse(spec)?, self.max_n),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                CayleyTable::from_text_bounded(&text, self.max_n)
            }
            _ => Err(Error::Parse(
                "exactly one of --family or --table is required".into(),
            )),
        }
    }
}

#[derive(Args, Clone)]
struct GuardArgs {
    /// Max carrier size for congruence enumeration (Bell-number guard).
    #[arg(long)]
    guard_partitions: Option<usize>,
    /// Max subspace count per enumeration (also: CONGKIT_GUARD_SUBSPACES).
    #[arg(long)]
    guard_subspaces: Option<u128>,
    /// Max p^n for subspace enumeration.
    #[arg(long)]
    guard_points: Option<u128>,
    /// Max p^dim carrier for algebra-congruence materialization.
    #[arg(long)]
    guard_carrier: Option<u128>,
}

impl GuardArgs {
    fn guards(&self) -> Guards {
        let mut g = Guards::default();
        if let Ok(value) = std::env::var("CONGKIT_GUARD_SUBSPACES") {
            if let Ok(value) = value.parse() {
                g.max_subspace_count = value;
            }
        }
        if let Some(v) = self.guard_partitions {
            g.max_partition_carrier = v;
        }
        if let Some(v) = self.guard_subspaces {
            g.max_subspace_count = v;
        }
        if let Some(v) = self.guard_points {
            g.max_subspace_points = v;
        }
        if let Some(v) = self.guard_carrier {
            g.max_algebra_carrier = v;
        }
        g
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Dot,
    Json,
}

#[derive(Args)]
struct SemigroupArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    guards: GuardArgs,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AlgebraArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    guards: GuardArgs,
    /// Field characteristic (a prime in [2, 97]).
    #[arg(long)]
    prime: u64,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    guards: GuardArgs,
    /// Primes to run the field-parameterized rows over.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5])]
    primes: Vec<u64>,
    /// Additionally validate a Cayley table file before running.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::GuardExceeded { .. } => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn emit(out: &Option<PathBuf>, text: &str) -> congkit::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> congkit::Result<i32> {
    match cli.command {
        Command::Semigroup(args) => cmd_semigroup(args),
        Command::Algebra(args) => cmd_algebra(args),
        Command::VerifyPaper(args) => cmd_verify_paper(args),
    }
}

fn cmd_semigroup(args: SemigroupArgs) -> congkit::Result<i32> {
    let s = args.source.load()?;
    let guards = args.guards.guards();
    let congruences = enumerate_congruences(&s, &guards)?;
    let permutability = is_permutable(&s, s.name(), &guards)?;
    let report = output::SemigroupReport {
        semigroup: s.name().to_string(),
        n: s.n(),
        names: s.names().to_vec(),
        table: s.table().to_vec(),
        congruences: congruences
            .iter()
            .map(|c| c.display_with_names(s.names()))
            .collect(),
        congruence_hasse: congkit::relations::congruence_lattice(&congruences)?,
        permutability,
    };
    let text = match args.format {
        Format::Ascii => output::semigroup_text(&s, &report),
        Format::Dot => output::congruence_dot(&s, &congruences)?,
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    };
    emit(&args.out, &text)?;
    Ok(if report.permutability.verdict { 0 } else { 1 })
}

fn cmd_algebra(args: AlgebraArgs) -> congkit::Result<i32> {
    let s = args.source.load()?;
    let guards = args.guards.guards();
    let field = PrimeField::new(args.prime)?;
    let ctx = build_phi_context(SemigroupAlgebra::new(s, field), &guards)?;
    let checks = vec![
        ctx.check_meet_homomorphism()?,
        ctx.check_join_compatible_kernel()?,
        ctx.check_circ_homomorphism()?,
    ];
    let all_pass = checks.iter().all(|c| c.verdict);
    let report = output::algebra_report(&ctx, checks)?;
    let text = match args.format {
        Format::Ascii => output::algebra_text(&ctx, &report),
        Format::Dot => {
            let labels = output::ideal_labels(&ctx)?;
            let levels: Vec<usize> = ctx.ideals().iter().map(|i| i.dim()).collect();
            output::dot_diagram("ideal_lattice", &labels, &levels, &report.hasse_edges)
        }
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    };
    emit(&args.out, &text)?;
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_verify_paper(args: VerifyArgs) -> congkit::Result<i32> {
    if let Some(path) = &args.table {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        CayleyTable::from_text(&text)?;
    }
    for &p in &args.primes {
        PrimeField::new(p)?;
    }
    let guards = args.guards.guards();
    let rows = verify::run_all(&args.primes, &guards);
    let failed = rows.iter().filter(|r| !r.pass).count();
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        _ => {
            let mut t = format!(
                "paper verification (primes: {})\n",
                args.primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            for row in &rows {
                t.push_str(&format!(
                    "row {}: {}  {} — {} [{} ms]\n",
                    row.index,
                    if row.pass { "PASS" } else { "FAIL" },
                    row.name,
                    row.detail,
                    row.timing_ms
                ));
            }
            t.push_str(&format!(
                "{} rows: {} passed, {} failed\n",
                rows.len(),
                rows.len() - failed,
                failed
            ));
            t
        }
    };
    emit(&args.out, &text)?;
    Ok(if failed == 0 { 0 } else { 1 })
}
