use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wilson4::arith::{is_prime, primes_in};
use wilson4::verifier::{find, Selection};

pub const CACHE_ENV: &str = "WILSON4_CACHE_DIR";

/// Verify congruences for (p-1)! and its Bernoulli-number machinery.
#[derive(Debug, Parser)]
#[command(name = "wilson4", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run registered checks over a set of primes.
    Verify(VerifyArgs),
    /// Print a single quantity.
    Compute(ComputeArgs),
    /// Time the direct factorial, the table build and the closed form.
    Bench(BenchArgs),
    /// List or clear cached Bernoulli tables.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[command(flatten)]
        dir: CacheDir,
    },
    /// List the registered checks.
    Checks,
}

#[derive(Debug, Args)]
pub struct CacheDir {
    /// Directory for Bernoulli tables.
    #[arg(long = "cache-dir", env = CACHE_ENV, global = true)]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    List,
    Clear,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Primes: `19`, `7,11,13`, `7..101` (inclusive), or a mix.
    #[arg(long, default_value = "7..101", value_parser = parse_primes)]
    pub primes: PrimeList,
    /// Check ids separated by commas, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_checks)]
    pub checks: Selection,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads; defaults to every core.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[command(flatten)]
    pub cache: CacheDir,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    FactorialMod,
    Stirling,
    Mhs,
    Harmonic,
    BernoulliTable,
    WilsonQuotient,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_parser = parse_prime)]
    pub prime: u64,
    #[arg(long, value_enum)]
    pub quantity: Quantity,
    /// Index of the quantity (the entry to print for bernoulli-table).
    #[arg(long)]
    pub k: Option<usize>,
    /// Modulus exponent.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=5))]
    pub power: u32,
    /// Table length for bernoulli-table; defaults to 4(p-1).
    #[arg(long)]
    pub nmax: Option<usize>,
    #[command(flatten)]
    pub cache: CacheDir,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_parser = parse_prime)]
    pub prime: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(2..=4))]
    pub power: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub repeat: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeList(pub Vec<u64>);

fn parse_number(s: &str) -> Result<u64, String> {
    s.trim().parse().map_err(|_| format!("`{s}` is not a non-negative integer"))
}

pub fn parse_prime(s: &str) -> Result<u64, String> {
    let p = parse_number(s)?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not prime"))
    }
}

pub fn parse_primes(s: &str) -> Result<PrimeList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (parse_number(lo)?, parse_number(hi)?);
                if lo > hi {
                    return Err(format!("empty range {part}"));
                }
                out.extend(primes_in(lo, hi));
            }
            None => out.push(parse_prime(part)?),
        }
    }
    if out.is_empty() {
        return Err(format!("no primes in `{s}`"));
    }
    out.sort_unstable();
    out.dedup();
    Ok(PrimeList(out))
}

pub fn parse_checks(s: &str) -> Result<Selection, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(Selection::All);
    }
    let ids: Vec<String> = s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect();
    if ids.is_empty() {
        return Err("no checks given".into());
    }
    if let Some(bad) = ids.iter().find(|id| find(id).is_none()) {
        return Err(format!("unknown check `{bad}` (see `wilson4 checks`)"));
    }
    Ok(Selection::Ids(ids))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_lists() {
        assert_eq!(parse_primes("19").unwrap().0, vec![19]);
        assert_eq!(parse_primes("7..13,5, 13").unwrap().0, vec![5, 7, 11, 13]);
        assert!(parse_primes("4").is_err());
        assert!(parse_primes("8..10").is_err());
        assert!(parse_primes("x").is_err());
    }

    #[test]
    fn check_lists() {
        assert_eq!(parse_checks("ALL").unwrap(), Selection::All);
        assert_eq!(parse_checks("MT3, R5").unwrap(), Selection::Ids(vec!["MT3".into(), "R5".into()]));
        assert!(parse_checks("MT9").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
