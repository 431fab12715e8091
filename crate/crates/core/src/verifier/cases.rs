use num_bigint::{BigInt, BigUint};

use super::{CongruenceReport, Status, Value};
use crate::arith::{prime_power, rat_reduce, reduce_int, Rational};
use crate::error::{Error, Result};
use crate::padic::Qp;

/// One compared pair inside a check.
#[derive(Clone, Debug)]
pub(crate) struct Row {
    pub label: String,
    pub lhs: Value,
    pub rhs: Value,
}

/// Collects the compared pairs of one check at one prime.
pub(crate) struct Cases {
    p: Option<u64>,
    e: Option<u32>,
    modulus: Option<BigUint>,
    rows: Vec<Row>,
    skipped: Option<String>,
}

impl Cases {
    pub fn new(p: Option<u64>, e: Option<u32>) -> Self {
        let modulus = p.zip(e).map(|(p, e)| prime_power(p, e));
        Cases {
            p,
            e,
            modulus,
            rows: Vec::new(),
            skipped: None,
        }
    }

    fn modulus(&self) -> Result<&BigUint> {
        self.modulus
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("residue comparison in an exact check".into()))
    }

    fn push(&mut self, label: impl ToString, lhs: Value, rhs: Value) {
        self.rows.push(Row {
            label: label.to_string(),
            lhs,
            rhs,
        });
    }

    /// Both sides as p-adic numbers, reduced mod `p^e`.
    pub fn qp(&mut self, label: impl ToString, lhs: &Qp, rhs: &Qp) -> Result<()> {
        let e = self.e.ok_or_else(|| Error::InvalidArgument("missing exponent".into()))?;
        let l = lhs.residue(e)?;
        let r = rhs.residue(e)?;
        self.push(label, Value::Residue(l), Value::Residue(r));
        Ok(())
    }

    /// A directly computed residue against a p-adic formula value.
    pub fn res(&mut self, label: impl ToString, lhs: &BigUint, rhs: &Qp) -> Result<()> {
        let e = self.e.ok_or_else(|| Error::InvalidArgument("missing exponent".into()))?;
        let l = lhs % self.modulus()?;
        let r = rhs.residue(e)?;
        self.push(label, Value::Residue(l), Value::Residue(r));
        Ok(())
    }

    pub fn uint(&mut self, label: impl ToString, lhs: BigUint, rhs: BigUint) -> Result<()> {
        let m = self.modulus()?.clone();
        self.push(label, Value::Residue(lhs % &m), Value::Residue(rhs % &m));
        Ok(())
    }

    pub fn ints(&mut self, label: impl ToString, lhs: &BigInt, rhs: &BigInt) -> Result<()> {
        let m = self.modulus()?.clone();
        self.push(
            label,
            Value::Residue(reduce_int(lhs, &m)),
            Value::Residue(reduce_int(rhs, &m)),
        );
        Ok(())
    }

    pub fn rationals(&mut self, label: impl ToString, lhs: &Rational, rhs: &Rational) -> Result<()> {
        let p = self.p.ok_or_else(|| Error::InvalidArgument("missing prime".into()))?;
        let e = self.e.ok_or_else(|| Error::InvalidArgument("missing exponent".into()))?;
        let l = rat_reduce(lhs, p, e)?.value().clone();
        let r = rat_reduce(rhs, p, e)?.value().clone();
        self.push(label, Value::Residue(l), Value::Residue(r));
        Ok(())
    }

    /// An exact equation between rationals.
    pub fn exact(&mut self, label: impl ToString, lhs: Rational, rhs: Rational) {
        self.push(label, Value::Exact(lhs), Value::Exact(rhs));
    }

    pub fn skip(&mut self, reason: impl ToString) {
        self.skipped = Some(reason.to_string());
    }

    /// Folds the rows into one report: the first failing row if any,
    /// otherwise the last row.
    pub fn into_report(self, id: &str, outcome: Result<()>, ms: f64) -> CongruenceReport {
        let mut report = CongruenceReport {
            id: id.to_string(),
            p: self.p,
            e: self.e,
            lhs: None,
            rhs: None,
            status: Status::Pass,
            cases: self.rows.len(),
            witness: None,
            note: None,
            ms,
        };
        if let Err(err) = outcome {
            report.status = Status::Fail;
            report.note = Some(err.to_string());
            return report;
        }
        if let Some(reason) = self.skipped {
            report.status = Status::Skip;
            report.note = Some(reason);
            return report;
        }
        let Some(last) = self.rows.last() else {
            report.status = Status::Skip;
            report.note = Some("no cases at this prime".into());
            return report;
        };
        let shown = match self.rows.iter().find(|r| r.lhs != r.rhs) {
            Some(bad) => {
                report.status = Status::Fail;
                bad
            }
            None => last,
        };
        report.lhs = Some(shown.lhs.clone());
        report.rhs = Some(shown.rhs.clone());
        if !shown.label.is_empty() {
            report.witness = Some(shown.label.clone());
        }
        report
    }
}
