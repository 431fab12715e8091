//! The check registry and the runner that evaluates checks over primes.
//!
//! Each check compares a closed form against an independent computation
//! (direct sums, exact rationals, or a second closed form) and folds every
//! compared case at one prime into a single [`CongruenceReport`].

mod cases;
mod registry;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::arith::{is_prime, prime_power, Rational};
use crate::bernoulli::{load_or_build, BernoulliTable};
use crate::error::{Error, Result};
use crate::formulas::{kummer_rhs, miki_sides, KummerFamily};
use crate::sequences::{newton_sums, PrimeContext};
use cases::Cases;
use registry::Eval;

pub use registry::{find, CongruenceCheck, Needs, REGISTRY};

/// One side of a comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Residue(BigUint),
    Exact(Rational),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Residue(v) => write!(f, "{v}"),
            Value::Exact(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        })
    }
}

/// Outcome of one check at one prime.
///
/// A check usually compares many cases (say every `k` in a range); `lhs` and
/// `rhs` are the first failing case, or the last case when all pass, and
/// `witness` names that case.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CongruenceReport {
    pub id: String,
    pub p: Option<u64>,
    pub e: Option<u32>,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub status: Status,
    pub cases: usize,
    pub witness: Option<String>,
    pub note: Option<String>,
    pub ms: f64,
}

impl CongruenceReport {
    pub fn pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// `p^e`, or `None` for exact identities.
    pub fn modulus(&self) -> Option<BigUint> {
        self.p.zip(self.e).map(|(p, e)| prime_power(p, e))
    }

    /// The report with its timing zeroed, for comparing runs.
    pub fn untimed(&self) -> Self {
        CongruenceReport {
            ms: 0.0,
            ..self.clone()
        }
    }

    fn skipped(check: &CongruenceCheck, p: u64, note: String) -> Self {
        CongruenceReport {
            id: check.id.to_string(),
            p: Some(p),
            e: check.modulus_exponent,
            lhs: None,
            rhs: None,
            status: Status::Skip,
            cases: 0,
            witness: None,
            note: Some(note),
            ms: 0.0,
        }
    }
}

/// Which checks a suite runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    fn resolve(&self) -> Result<Vec<&'static CongruenceCheck>> {
        match self {
            Selection::All => Ok(REGISTRY.iter().collect()),
            Selection::Ids(ids) => {
                for id in ids {
                    find(id).ok_or_else(|| Error::UnknownCheck(id.clone()))?;
                }
                Ok(REGISTRY.iter().filter(|c| ids.iter().any(|i| i == c.id)).collect())
            }
        }
    }
}

/// Reports of a suite run in registry order, then by prime.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub reports: Vec<CongruenceReport>,
}

impl Summary {
    fn count(&self, s: Status) -> usize {
        self.reports.iter().filter(|r| r.status == s).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skip)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CongruenceReport> {
        self.reports.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }
}

/// Runs checks, sharing one [`PrimeContext`] per prime across them.
#[derive(Default)]
pub struct Verifier {
    cache_dir: Option<PathBuf>,
    jobs: Option<usize>,
    contexts: Mutex<HashMap<u64, Arc<PrimeContext>>>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Load and store Bernoulli tables under `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    /// Worker count for suites; the default uses every core.
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs.max(1));
        self
    }

    /// A context for `p` at least as large as `needs`, built on first use.
    pub fn context(&self, p: u64, needs: Needs) -> Result<Arc<PrimeContext>> {
        let nmax = needs.nmax(p);
        let fits = |c: &PrimeContext| c.precision() >= needs.precision && c.nmax() >= nmax;
        if let Some(c) = self.contexts.lock().expect("context cache").get(&p) {
            if fits(c) {
                return Ok(Arc::clone(c));
            }
        }
        let table = match &self.cache_dir {
            Some(dir) => load_or_build(dir, p, nmax, needs.precision)?,
            None => BernoulliTable::build(p, nmax, needs.precision)?,
        };
        let built = Arc::new(PrimeContext::from_table(table)?);
        let mut map = self.contexts.lock().expect("context cache");
        let keep = match map.get(&p) {
            Some(c) if fits(c) => Arc::clone(c),
            _ => {
                map.insert(p, Arc::clone(&built));
                built
            }
        };
        Ok(keep)
    }

    fn evaluate(&self, check: &CongruenceCheck, p: Option<u64>) -> CongruenceReport {
        let start = Instant::now();
        let mut cases = Cases::new(p, check.modulus_exponent);
        let outcome = match (check.eval, p) {
            (Eval::Plain(f), Some(p)) => f(p, &mut cases),
            (Eval::Context(needs, f), Some(p)) => self.context(p, needs).and_then(|c| f(&c, &mut cases)),
            (Eval::Free(f), _) => f(&mut cases),
            (_, None) => Err(Error::InvalidArgument(format!("check `{}` needs a prime", check.id))),
        };
        cases.into_report(check.id, outcome, start.elapsed().as_secs_f64() * 1e3)
    }

    /// Runs one check at `p`; prime-free checks ignore `p`.
    pub fn run_check(&self, id: &str, p: u64) -> Result<CongruenceReport> {
        let check = find(id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
        if check.is_prime_free() {
            return Ok(self.evaluate(check, None));
        }
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if p < check.min_prime {
            return Err(Error::PrimeTooSmall {
                id: id.to_string(),
                p,
                min_prime: check.min_prime,
            });
        }
        Ok(self.evaluate(check, Some(p)))
    }

    /// Runs `check` against an already built context.
    pub fn run_on(&self, ctx: &PrimeContext, id: &str) -> Result<CongruenceReport> {
        let check = find(id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
        let Eval::Context(_, f) = check.eval else {
            return self.run_check(id, ctx.p());
        };
        if ctx.p() < check.min_prime {
            return Err(Error::PrimeTooSmall {
                id: id.to_string(),
                p: ctx.p(),
                min_prime: check.min_prime,
            });
        }
        let start = Instant::now();
        let mut cases = Cases::new(Some(ctx.p()), check.modulus_exponent);
        let outcome = f(ctx, &mut cases);
        Ok(cases.into_report(check.id, outcome, start.elapsed().as_secs_f64() * 1e3))
    }

    /// Runs the cross product of `primes` and the selected checks.
    ///
    /// Pairs below a check's minimum prime are reported as skipped, prime-free
    /// checks run once, and failures never stop the run. The result is in
    /// registry order, then ascending prime, whatever order the work ran in.
    pub fn run_suite(&self, primes: &[u64], selection: &Selection) -> Result<Summary> {
        let checks = selection.resolve()?;
        let mut primes = primes.to_vec();
        primes.sort_unstable();
        primes.dedup();
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidArgument(format!("{bad} is not prime")));
        }
        if primes.is_empty() {
            return Ok(Summary::default());
        }

        let mut wanted: BTreeMap<u64, Needs> = BTreeMap::new();
        for c in &checks {
            if let Some(n) = c.needs() {
                for &p in primes.iter().filter(|&&p| p >= c.min_prime) {
                    wanted.entry(p).and_modify(|m| *m = m.max(n)).or_insert(n);
                }
            }
        }

        enum Task {
            Run(&'static CongruenceCheck, Option<u64>),
            Done(CongruenceReport),
        }
        let mut tasks = Vec::new();
        for &c in &checks {
            if c.is_prime_free() {
                tasks.push(Task::Run(c, None));
                continue;
            }
            for &p in &primes {
                if p < c.min_prime {
                    let note = format!("needs p >= {}", c.min_prime);
                    tasks.push(Task::Done(CongruenceReport::skipped(c, p, note)));
                } else {
                    tasks.push(Task::Run(c, Some(p)));
                }
            }
        }

        let wanted: Vec<(u64, Needs)> = wanted.into_iter().collect();
        let run = || {
            // A failed build surfaces in every report that needs the context.
            for_each(&wanted, |&(p, n)| {
                let _ = self.context(p, n);
            });
            map(&tasks, |t| match t {
                Task::Run(c, p) => self.evaluate(c, *p),
                Task::Done(r) => r.clone(),
            })
        };
        let reports = self.install(run);
        Ok(Summary { reports })
    }

    #[cfg(feature = "parallel")]
    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.jobs {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }

    #[cfg(not(feature = "parallel"))]
    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        f()
    }
}

#[cfg(feature = "parallel")]
fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
fn for_each<T: Sync>(items: &[T], f: impl Fn(&T) + Sync + Send) {
    use rayon::prelude::*;
    items.par_iter().for_each(f)
}

#[cfg(not(feature = "parallel"))]
fn for_each<T: Sync>(items: &[T], f: impl Fn(&T) + Sync + Send) {
    items.iter().for_each(f)
}

/// [`Verifier::run_check`] on a fresh verifier.
pub fn run_check(id: &str, p: u64) -> Result<CongruenceReport> {
    Verifier::new().run_check(id, p)
}

/// [`Verifier::run_suite`] on a fresh verifier.
pub fn run_suite(primes: &[u64], selection: &Selection) -> Result<Summary> {
    Verifier::new().run_suite(primes, selection)
}

/// Known values of `(p-1)! mod p^4`.
pub fn golden_table() -> BTreeMap<u64, BigUint> {
    [
        (19, "93175"),
        (47, "2266715"),
        (61, "6504002"),
        (173, "438178897"),
        (521, "589386980"),
        (877, "557572214137"),
        (1009, "709347287962"),
        (10037, "3241073122386671"),
        (120011, "143693568124824551692"),
    ]
    .into_iter()
    .map(|(p, v)| (p, v.parse().expect("decimal literal")))
    .collect()
}

/// Newton's identity at index `k`, exactly over `1..p-1` and mod `p^e` over
/// the reciprocals.
pub fn newton_check(p: u64, k: usize, e: u32) -> Result<CongruenceReport> {
    let start = Instant::now();
    let mut cases = Cases::new(Some(p), Some(e));
    let outcome = newton_sums(p, k, e).and_then(|(exact, modular)| {
        cases.exact("exact", Rational::from(exact), Rational::from_integer(0.into()));
        cases.uint("reciprocal", modular, BigUint::default())
    });
    Ok(cases.into_report("NEWTON", outcome, start.elapsed().as_secs_f64() * 1e3))
}

/// One Kummer-family congruence for `b_{k(p-1)+b}` against the exact value.
pub fn kummer_family_check(
    ctx: &PrimeContext,
    family: KummerFamily,
    b: usize,
    k: i64,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let x = ctx.exact_terms()?;
    let n = k as usize * (ctx.p() as usize - 1) + b;
    let mut cases = Cases::new(Some(ctx.p()), Some(family.modulus_exponent()));
    let outcome = cases.qp(format!("b={b} k={k}"), &x.b(n), &kummer_rhs(ctx.terms(), family, b, k));
    let id = format!("{family:?}");
    Ok(cases.into_report(&id, outcome, start.elapsed().as_secs_f64() * 1e3))
}

/// Miki's identity at even `n` in `6..=40`, as an exact equation.
pub fn miki_check(n: usize) -> Result<CongruenceReport> {
    if n % 2 == 1 || !(6..=40).contains(&n) {
        return Err(Error::InvalidArgument(format!("Miki's identity is checked for even 6 <= n <= 40, got {n}")));
    }
    let start = Instant::now();
    let mut cases = Cases::new(None, None);
    let (l, r) = miki_sides(n);
    cases.exact(format!("n={n}"), l, r);
    Ok(cases.into_report("MIKI", Ok(()), start.elapsed().as_secs_f64() * 1e3))
}

#[cfg(test)]
mod tests;
