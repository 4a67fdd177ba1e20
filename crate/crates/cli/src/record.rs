use std::collections::BTreeMap;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use vstring::invariants::{primitive_based_matrix, u_polynomial, UPolynomial};
use vstring::ops::covering;
use vstring::Nanoword;

/// One line of a tabulation file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TabulationRecord {
    pub canonical: String,
    pub rank: usize,
    pub u: UPolynomial,
    pub rho: usize,
    pub pbm_signature: String,
    pub covers: BTreeMap<u32, String>,
}

impl TabulationRecord {
    pub fn of(word: &Nanoword) -> Self {
        let canonical = word.orbit_canonical();
        let p = primitive_based_matrix(&canonical);
        let radii = std::iter::once(0).chain(2..=canonical.rank() as u32);
        TabulationRecord {
            canonical: canonical.to_string(),
            rank: canonical.rank(),
            u: u_polynomial(&canonical),
            rho: p.size() - 1,
            pbm_signature: p.signature(),
            covers: radii
                .map(|r| (r, covering(&canonical, r).orbit_canonical().to_string()))
                .collect(),
        }
    }

    /// Parses one JSON line. Only the shape is checked; see [`Self::recheck`].
    pub fn from_line(line: &str) -> anyhow::Result<Self> {
        let record: TabulationRecord = serde_json::from_str(line).context("malformed record")?;
        let word: Nanoword = record.canonical.parse().context("bad canonical word")?;
        if word.rank() != record.rank {
            bail!("rank {} does not match `{}`", record.rank, record.canonical);
        }
        Ok(record)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    /// Recomputes the record from its canonical word; `Some` holds the
    /// recomputed record when it differs.
    pub fn recheck(&self) -> anyhow::Result<Option<TabulationRecord>> {
        let word: Nanoword = self.canonical.parse()?;
        let fresh = TabulationRecord::of(&word);
        Ok((fresh != *self).then_some(fresh))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_of_gamma_word() {
        let rec = TabulationRecord::of(&"ABCACB|aaa".parse().unwrap());
        assert_eq!(rec.rank, 3);
        assert_eq!(rec.u.to_string(), "t^2 - 2t");
        assert_eq!(rec.covers[&2], "AA|a");
        assert_eq!(rec.covers.keys().copied().collect::<Vec<_>>(), vec![0, 2, 3]);
        let line = rec.to_line();
        let back = TabulationRecord::from_line(&line).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.to_line(), line);
        assert_eq!(back.recheck().unwrap(), None);
    }

    #[test]
    fn tampered_records_are_caught() {
        let mut rec = TabulationRecord::of(&"ABAB|aa".parse().unwrap());
        rec.rho += 1;
        assert!(rec.recheck().unwrap().is_some());
        assert!(TabulationRecord::from_line("{}").is_err());
        assert!(TabulationRecord::from_line(r#"{"canonical":"AA|a","rank":2,"u":[],"rho":0,"pbm_signature":"","covers":{}}"#).is_err());
    }
}
