mod args;
mod output;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use clap::Parser;
use wilson4::bernoulli::{load_or_build, write_table, BernoulliTable};
use wilson4::formulas::wilson_formula;
use wilson4::padic::wilson_quotient_residues;
use wilson4::sequences::{factorial_mod, harmonic, mhs, stirling_mod_all, PrimeContext};
use wilson4::verifier::{Verifier, REGISTRY};

use args::{BenchArgs, CacheAction, Cli, Command, ComputeArgs, Format, Quantity, VerifyArgs};

const DEFAULT_CACHE_DIR: &str = "wilson4-cache";

/// Exit status: 0 all good, 1 a check or comparison failed, 2 bad usage.
enum Failure {
    Mismatch(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Compute(a) => compute(a),
        Command::Bench(a) => bench(a),
        Command::Cache { action, dir } => cache(action, dir.path),
        Command::Checks => checks(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn io_failure(err: io::Error) -> Failure {
    Failure::Mismatch(format!("output error: {err}"))
}

fn verify(a: VerifyArgs) -> Outcome {
    let mut v = Verifier::new();
    if let Some(dir) = a.cache.path {
        v = v.with_cache_dir(dir);
    }
    if let Some(j) = a.jobs {
        v = v.with_jobs(j as usize);
    }
    let summary = v.run_suite(&a.primes.0, &a.checks).map_err(|e| usage(e.to_string()))?;
    let stamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    output::write_reports(&mut out, &summary, a.format, stamp).map_err(io_failure)?;
    out.flush().map_err(io_failure)?;
    if a.format != Format::Table {
        eprintln!("{}", output::summary_line(&summary));
    }
    if summary.is_success() {
        Ok(())
    } else {
        Err(Failure::Mismatch(String::new()))
    }
}

fn cache_dir(path: Option<PathBuf>) -> PathBuf {
    path.unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

fn need_k(a: &ComputeArgs, lo: usize) -> Result<usize, Failure> {
    let p = a.prime as usize;
    match a.k {
        Some(k) if (lo..p).contains(&k) => Ok(k),
        Some(k) => Err(usage(format!("--k {k} outside {lo}..{}", p - 1))),
        None => Err(usage(format!("{:?} needs --k", a.quantity))),
    }
}

fn compute(a: ComputeArgs) -> Outcome {
    let p = a.prime;
    let e = a.power;
    let value = match a.quantity {
        Quantity::FactorialMod => factorial_mod(p, e).to_string(),
        Quantity::Stirling => {
            let k = need_k(&a, 1)?;
            stirling_mod_all(p, e)[k].to_string()
        }
        Quantity::Mhs => {
            let k = need_k(&a, 1)?;
            mhs(p, k as u64, e).map_err(|err| usage(err.to_string()))?.value().to_string()
        }
        Quantity::Harmonic => {
            let k = need_k(&a, 1)?;
            harmonic(p, k as u64, e).value().to_string()
        }
        Quantity::WilsonQuotient => {
            if p < 5 {
                return Err(usage("wilson-quotient needs p >= 5"));
            }
            let (w0, w1) = wilson_quotient_residues(p).map_err(|err| Failure::Mismatch(err.to_string()))?;
            format!("{w0} {w1}")
        }
        Quantity::BernoulliTable => {
            let nmax = a.nmax.unwrap_or(4 * (p as usize - 1));
            let dir = cache_dir(a.cache.path.clone());
            let table = load_or_build(&dir, p, nmax, e).map_err(|err| usage(err.to_string()))?;
            let path = write_table(&table, &dir).map_err(|err| Failure::Mismatch(err.to_string()))?;
            eprintln!("wrote {}", path.display());
            match a.k {
                Some(k) if k <= nmax => table.raw(k).to_string(),
                Some(k) => return Err(usage(format!("--k {k} beyond nmax {nmax}"))),
                None => path.display().to_string(),
            }
        }
    };
    println!("{value}");
    Ok(())
}

fn best_of<T>(repeat: u64, mut f: impl FnMut() -> T) -> (Duration, T) {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..repeat {
        let start = Instant::now();
        let v = f();
        best = best.min(start.elapsed());
        last = Some(v);
    }
    (best, last.expect("repeat >= 1"))
}

fn bench(a: BenchArgs) -> Outcome {
    let p = a.prime;
    let e = a.power;
    if p < 7 {
        return Err(usage("bench needs p >= 7"));
    }
    if e == 4 && p < 13 {
        return Err(usage("the closed form mod p^4 holds for p >= 13"));
    }
    let nmax = 3 * (p as usize - 1);
    let (t_direct, direct) = best_of(a.repeat, || factorial_mod(p, e));
    let (t_table, table) = best_of(a.repeat, || BernoulliTable::build(p, nmax, e));
    let table = table.map_err(|err| usage(err.to_string()))?;
    let ctx = PrimeContext::from_table(table).map_err(|err| usage(err.to_string()))?;
    let (t_formula, formula) = best_of(a.repeat, || wilson_formula(&ctx, e));
    let formula = formula.map_err(|err| Failure::Mismatch(err.to_string()))?;
    let ms = |d: Duration| d.as_secs_f64() * 1e3;
    println!("p = {p}, modulus p^{e}, best of {}", a.repeat);
    println!("{:<18}{:>12.3} ms", "direct factorial", ms(t_direct));
    println!("{:<18}{:>12.3} ms", "bernoulli table", ms(t_table));
    println!("{:<18}{:>12.3} ms", "closed form", ms(t_formula));
    println!("direct  {direct}");
    println!("formula {formula}");
    if direct == formula {
        println!("match");
        Ok(())
    } else {
        Err(Failure::Mismatch("closed form differs from the direct product".into()))
    }
}

fn cached_tables(dir: &Path) -> Vec<PathBuf> {
    let Ok(rd) = fs::read_dir(dir) else { return Vec::new() };
    let mut files: Vec<PathBuf> = rd
        .flatten()
        .map(|e| e.path())
        .filter(|p| {
            p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with("bernoulli_p") && n.ends_with(".txt"))
        })
        .collect();
    files.sort();
    files
}

fn cache(action: CacheAction, path: Option<PathBuf>) -> Outcome {
    let dir = cache_dir(path);
    let files = cached_tables(&dir);
    match action {
        CacheAction::List => {
            for f in &files {
                let size = fs::metadata(f).map(|m| m.len()).unwrap_or(0);
                println!("{}\t{size}", f.display());
            }
        }
        CacheAction::Clear => {
            for f in &files {
                fs::remove_file(f).map_err(|err| Failure::Mismatch(format!("{}: {err}", f.display())))?;
            }
            println!("removed {} table(s) from {}", files.len(), dir.display());
        }
    }
    Ok(())
}

fn checks() -> Outcome {
    let mut out = io::stdout().lock();
    for c in REGISTRY {
        let e = c.modulus_exponent.map_or("exact".to_string(), |e| format!("p^{e}"));
        let min = if c.is_prime_free() { "-".to_string() } else { c.min_prime.to_string() };
        match writeln!(out, "{:<18}{:>5}  {:<7}{}", c.id, min, e, c.summary) {
            Err(err) if err.kind() == io::ErrorKind::BrokenPipe => return Ok(()),
            other => other.map_err(io_failure)?,
        }
    }
    Ok(())
}
