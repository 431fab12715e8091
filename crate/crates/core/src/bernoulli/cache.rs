//! On-disk Bernoulli tables: a header line `p e nmax` followed by one
//! decimal residue of `p * B_k` per line for `k = 0..=nmax`.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use super::BernoulliTable;
use crate::arith::prime_power;
use crate::error::{Error, Result};

pub fn cache_file_name(p: u64, e: u32, nmax: usize) -> String {
    format!("bernoulli_p{p}_e{e}_n{nmax}.txt")
}

pub fn write_table(table: &BernoulliTable, dir: &Path) -> Result<PathBuf> {
    let io = |err: std::io::Error| Error::Cache(err.to_string());
    fs::create_dir_all(dir).map_err(io)?;
    let path = dir.join(cache_file_name(table.p(), table.precision(), table.nmax()));
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(fs::File::create(&tmp).map_err(io)?);
        writeln!(w, "{} {} {}", table.p(), table.precision(), table.nmax()).map_err(io)?;
        for v in table.entries() {
            writeln!(w, "{v}").map_err(io)?;
        }
        w.flush().map_err(io)?;
    }
    fs::rename(&tmp, &path).map_err(io)?;
    Ok(path)
}

pub fn read_table(path: &Path) -> Result<BernoulliTable> {
    let bad = |msg: String| Error::Cache(format!("{}: {msg}", path.display()));
    let file = fs::File::open(path).map_err(|e| bad(e.to_string()))?;
    let mut lines = BufReader::new(file).lines();
    let header = lines
        .next()
        .ok_or_else(|| bad("empty file".into()))?
        .map_err(|e| bad(e.to_string()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [p, e, nmax] = fields[..] else {
        return Err(bad(format!("malformed header `{header}`")));
    };
    let p: u64 = p.parse().map_err(|_| bad(format!("bad p `{p}`")))?;
    let e: u32 = e.parse().map_err(|_| bad(format!("bad e `{e}`")))?;
    let nmax: usize = nmax.parse().map_err(|_| bad(format!("bad nmax `{nmax}`")))?;
    let m = prime_power(p, e);
    let mut entries = Vec::with_capacity(nmax + 1);
    for line in lines {
        let line = line.map_err(|e| bad(e.to_string()))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: BigUint = line.parse().map_err(|_| bad(format!("bad residue `{line}`")))?;
        if v >= m {
            return Err(bad(format!("residue {v} is not reduced mod {m}")));
        }
        entries.push(v);
    }
    if entries.len() != nmax + 1 {
        return Err(bad(format!(
            "expected {} entries, found {}",
            nmax + 1,
            entries.len()
        )));
    }
    Ok(BernoulliTable::from_parts(p, e, entries))
}

/// Reuse any cached table for `p` that is at least as long and as precise,
/// otherwise build one and store it.
pub fn load_or_build(dir: &Path, p: u64, nmax: usize, e: u32) -> Result<BernoulliTable> {
    if let Ok(rd) = fs::read_dir(dir) {
        let prefix = format!("bernoulli_p{p}_");
        for entry in rd.flatten() {
            let name = entry.file_name().to_string_lossy().into_owned();
            if !name.starts_with(&prefix) || !name.ends_with(".txt") {
                continue;
            }
            if let Ok(t) = read_table(&entry.path()) {
                if t.p() == p && t.precision() >= e && t.nmax() >= nmax {
                    return t.restrict(nmax, e);
                }
            }
        }
    }
    let t = BernoulliTable::build(p, nmax, e)?;
    write_table(&t, dir)?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let t = BernoulliTable::build(19, 60, 4).unwrap();
        let path = write_table(&t, dir.path()).unwrap();
        assert_eq!(read_table(&path).unwrap(), t);
        let head = fs::read_to_string(&path).unwrap();
        assert!(head.starts_with("19 4 60\n19\n"));
    }

    #[test]
    fn load_reuses_larger_table() {
        let dir = tempfile::tempdir().unwrap();
        load_or_build(dir.path(), 23, 80, 5).unwrap();
        let t = load_or_build(dir.path(), 23, 40, 3).unwrap();
        assert_eq!(t, BernoulliTable::build(23, 40, 3).unwrap());
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn rejects_corrupt_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.txt");
        fs::write(&path, "7 1 2\n7\n3\n").unwrap();
        assert!(matches!(read_table(&path), Err(Error::Cache(_))));
        fs::write(&path, "7 1 1\n0\n").unwrap();
        assert!(read_table(&path).is_err());
        fs::write(&path, "7 1\n").unwrap();
        assert!(read_table(&path).is_err());
    }
}
