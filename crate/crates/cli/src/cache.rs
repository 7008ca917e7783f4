//! On-disk store for transition matrices.
//!
//! Each `(from, to, degree)` matrix lives in its own JSON file whose name is
//! the SHA-256 of the key and the cache format version. The key is repeated
//! inside the file and checked on load, so a file written by another version
//! is ignored and recomputed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use polysym::algebra::{format_rational, parse_rational, seed_transition_matrix};
use polysym::{transition_matrix, BasisTag, Result, TransitionMatrix};

/// Bumped whenever matrix contents could change for a fixed key.
pub const CACHE_VERSION: &str = concat!("polysym-matrix-", env!("CARGO_PKG_VERSION"), "-1");

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    from: BasisTag,
    to: BasisTag,
    degree: u32,
    rows: Vec<Vec<String>>,
}

pub struct MatrixCache {
    dir: Option<PathBuf>,
}

impl MatrixCache {
    pub fn disabled() -> Self {
        MatrixCache { dir: None }
    }

    pub fn at(dir: PathBuf) -> Self {
        MatrixCache { dir: Some(dir) }
    }

    fn path(dir: &Path, from: BasisTag, to: BasisTag, degree: u32) -> PathBuf {
        let key = format!("{CACHE_VERSION}:{from}:{to}:{degree}");
        let digest = Sha256::digest(key.as_bytes());
        let name: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        dir.join(format!("{name}.json"))
    }

    /// The matrix from disk when a valid entry exists, otherwise computed and
    /// written back. Disk failures only cost the speed-up.
    pub fn matrix(
        &self,
        from: BasisTag,
        to: BasisTag,
        degree: u32,
    ) -> Result<Arc<TransitionMatrix>> {
        let Some(dir) = &self.dir else {
            return transition_matrix(from, to, degree);
        };
        let path = Self::path(dir, from, to, degree);
        if let Some(m) = load(&path, from, to, degree) {
            seed_transition_matrix(m);
            return transition_matrix(from, to, degree);
        }
        let m = transition_matrix(from, to, degree)?;
        let _ = store(dir, &path, &m);
        Ok(m)
    }

    /// Makes sure every matrix `convert` will use for `degrees` is loaded.
    pub fn prepare(
        &self,
        from: BasisTag,
        to: BasisTag,
        degrees: impl IntoIterator<Item = u32>,
    ) -> Result<()> {
        if from == to || to == BasisTag::M {
            return Ok(());
        }
        for n in degrees {
            self.matrix(from, to, n)?;
        }
        Ok(())
    }
}

fn load(path: &Path, from: BasisTag, to: BasisTag, degree: u32) -> Option<TransitionMatrix> {
    let text = fs::read_to_string(path).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    if entry.version != CACHE_VERSION
        || entry.from != from
        || entry.to != to
        || entry.degree != degree
    {
        return None;
    }
    let rows = entry
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<BigRational>>>()
        })
        .collect::<Result<Vec<_>>>()
        .ok()?;
    TransitionMatrix::from_rows(from, to, degree, rows).ok()
}

fn store(dir: &Path, path: &Path, m: &TransitionMatrix) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let entry = Entry {
        version: CACHE_VERSION.to_string(),
        from: m.from(),
        to: m.to(),
        degree: m.degree(),
        rows: m
            .rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect(),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &entry)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
