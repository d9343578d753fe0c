use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hall_verdict::{Natural, PrimeSet};

#[derive(Debug, Parser)]
#[command(
    name = "hall-verdict",
    version,
    about = "Decide whether all X-maximal subgroups of a finite group are conjugate"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verdict for a group given by composition factors or generators.
    Classify(ClassifyArgs),
    /// Tabulated Hall subgroups of symmetric and sporadic groups.
    Hall(HallArgs),
    /// Number-theoretic primitives.
    #[command(subcommand)]
    Arith(ArithCommand),
    /// Brute-force computations on a permutation group.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassKind {
    /// All π-groups.
    Gpi,
    /// Solvable π-groups.
    Spi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Dpi,
    Hall,
    Maximal,
    Factors,
}

fn parse_pi(s: &str) -> Result<PrimeSet, String> {
    s.parse().map_err(|e: hall_verdict::Error| e.to_string())
}

fn parse_cofinite(s: &str) -> Result<PrimeSet, String> {
    let body = s.trim();
    let body = body.strip_prefix("excluded:").unwrap_or(body);
    parse_pi(&format!("excluded:{body}"))
}

fn parse_nat(s: &str) -> Result<Natural, String> {
    s.trim().parse().map_err(|_| format!("not a nonnegative integer: {s:?}"))
}

#[derive(Debug, Args)]
pub struct PiArgs {
    /// Finite prime set such as `2,3`, or `excluded:7,11`.
    #[arg(long, value_parser = parse_pi, conflicts_with = "cofinite_pi")]
    pub pi: Option<PrimeSet>,
    /// Every prime except the listed ones, e.g. `excluded:7,11`.
    #[arg(long, value_parser = parse_cofinite)]
    pub cofinite_pi: Option<PrimeSet>,
}

impl PiArgs {
    pub fn get(&self) -> Option<&PrimeSet> {
        self.pi.as_ref().or(self.cofinite_pi.as_ref())
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Comma-separated composition factors, e.g. `Alt(5),Cyc(2)`.
    #[arg(long, conflicts_with = "gens", required_unless_present = "gens")]
    pub factors: Option<String>,
    /// Generator file, one permutation per line in cycle notation.
    #[arg(long)]
    pub gens: Option<PathBuf>,
    #[command(flatten)]
    pub pi: PiArgs,
    #[arg(long = "class", value_enum, default_value_t = ClassKind::Gpi)]
    pub class: ClassKind,
    /// Compare only the primes of π other than the characteristic with the Weyl group order.
    #[arg(long)]
    pub weyl_excludes_p: bool,
}

#[derive(Debug, Args)]
pub struct HallArgs {
    /// Degree of the symmetric group.
    #[arg(long, conflicts_with_all = ["sporadic", "table"])]
    pub symmetric: Option<u64>,
    /// Sporadic group name such as `M11`, or `Tits`.
    #[arg(long, conflicts_with = "table")]
    pub sporadic: Option<String>,
    /// Print every sporadic row.
    #[arg(long)]
    pub table: bool,
    #[command(flatten)]
    pub pi: PiArgs,
}

#[derive(Debug, Subcommand)]
pub enum ArithCommand {
    /// Prime factorization.
    Factor {
        #[arg(value_parser = parse_nat)]
        n: Natural,
    },
    /// Largest power of `r` dividing `n`.
    #[command(name = "rpart")]
    RPart {
        #[arg(value_parser = parse_nat)]
        n: Natural,
        #[arg(value_parser = parse_nat)]
        r: Natural,
    },
    /// Multiplicative order e(q, r).
    Order {
        #[arg(value_parser = parse_nat)]
        q: Natural,
        #[arg(value_parser = parse_nat)]
        r: Natural,
    },
    /// e* of a multiplicative order.
    #[command(name = "estar")]
    EStar {
        #[arg(value_parser = parse_nat)]
        e: Natural,
    },
    /// ε(q), the sign with q ≡ ε (mod 4).
    Epsilon {
        #[arg(value_parser = parse_nat)]
        q: Natural,
    },
    /// r-part of n!.
    #[command(name = "factorial-rpart")]
    FactorialRPart {
        #[arg(value_parser = parse_nat)]
        n: Natural,
        #[arg(value_parser = parse_nat)]
        r: Natural,
    },
    /// r-part of the product of q^i - 1 (or q^i - (-1)^i with --signed), i = 1..n.
    #[command(name = "prod-rpart")]
    ProdRPart {
        #[arg(value_parser = parse_nat)]
        q: Natural,
        n: u64,
        #[arg(value_parser = parse_nat)]
        r: Natural,
        #[arg(long)]
        signed: bool,
    },
    /// Three-conjunct criterion for the product r-part to equal (n!)_r.
    EqualityCriterion {
        #[arg(value_parser = parse_nat)]
        q: Natural,
        n: u64,
        #[arg(value_parser = parse_nat)]
        r: Natural,
        #[arg(long)]
        signed: bool,
    },
    /// Whether t is a Fermat prime.
    Fermat {
        #[arg(value_parser = parse_nat)]
        t: Natural,
    },
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub gens: PathBuf,
    #[command(flatten)]
    pub pi: PiArgs,
    #[arg(long, value_enum)]
    pub check: Check,
}
