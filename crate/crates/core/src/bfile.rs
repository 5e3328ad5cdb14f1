//! OEIS b-file parsing and sequence comparison.
//!
//! A b-file is a text file with one `n a(n)` pair per line; `#` starts a
//! comment. Offsets differ between sources, so comparison takes an offset
//! mapping artifact index `i` to file index `i + offset`.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};

/// Parsed b-file contents.
#[derive(Clone, Debug, Default)]
pub struct BFile {
    entries: BTreeMap<i64, BigInt>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<BFile> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(n), Some(value), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(Error::Parse(format!(
                    "b-file line {}: expected `n a(n)`, got `{raw}`",
                    lineno + 1
                )));
            };
            let n: i64 = n
                .parse()
                .map_err(|_| Error::Parse(format!("b-file line {}: bad index `{n}`", lineno + 1)))?;
            let value: BigInt = value.parse().map_err(|_| {
                Error::Parse(format!("b-file line {}: bad value `{value}`", lineno + 1))
            })?;
            entries.insert(n, value);
        }
        Ok(BFile { entries })
    }

    pub fn load(path: &std::path::Path) -> Result<BFile> {
        BFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: i64) -> Option<&BigInt> {
        self.entries.get(&n)
    }

    /// Compare artifact terms (starting at artifact index `start`) against
    /// the file, mapping artifact index `i` to file index `i + offset`.
    /// Indices absent from the file are skipped.
    pub fn compare(&self, terms: &[BigInt], start: i64, offset: i64) -> Comparison {
        let mut checked = 0;
        let mut mismatches = Vec::new();
        for (k, term) in terms.iter().enumerate() {
            let artifact_index = start + k as i64;
            let file_index = artifact_index + offset;
            if let Some(value) = self.entries.get(&file_index) {
                checked += 1;
                if value != term {
                    mismatches.push(Mismatch {
                        artifact_index,
                        file_index,
                        ours: term.clone(),
                        theirs: value.clone(),
                    });
                }
            }
        }
        Comparison { checked, mismatches }
    }
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub artifact_index: i64,
    pub file_index: i64,
    pub ours: BigInt,
    pub theirs: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "term {} (file index {}): computed {}, file has {}",
            self.artifact_index, self.file_index, self.ours, self.theirs
        )
    }
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Comparison {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}
