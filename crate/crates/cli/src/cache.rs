//! On-disk lattice cache.
//!
//! One JSON file per group, named by a SHA-256 over the degree and the
//! generator image tables. Element indices in the file refer to the
//! deterministic table order, so they are only meaningful for exactly these
//! generators. Writes go to a temporary file that is renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use mindeg_core::subgroups::SubgroupLattice;
use mindeg_core::{GroupTable, PermGroup};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::record::CertificateRecord;

pub const CACHE_FORMAT_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "MINDEG_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".mindeg-cache";

#[derive(Serialize, Deserialize)]
struct Entry {
    format_version: u32,
    key: String,
    degree: usize,
    order: usize,
    subgroups: Vec<Vec<usize>>,
    classes: Vec<Vec<usize>>,
    certificate: Option<CertificateRecord>,
}

pub fn group_key(g: &PermGroup) -> String {
    let mut h = Sha256::new();
    h.update(b"mindeg-lattice");
    h.update(CACHE_FORMAT_VERSION.to_le_bytes());
    h.update((g.degree() as u64).to_le_bytes());
    for p in g.generators() {
        h.update(b"|");
        for &x in p.images() {
            h.update(x.to_le_bytes());
        }
    }
    h.finalize().iter().map(|b| format!("{:02x}", b)).collect()
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

/// What a cache hit yields.
pub struct Cached {
    pub lattice: SubgroupLattice,
    pub certificate: Option<CertificateRecord>,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `--cache-dir`, else `$MINDEG_CACHE`, else `./.mindeg-cache`.
    pub fn resolve(flag: Option<&Path>) -> Self {
        match flag {
            Some(p) => Cache::new(p),
            None => match std::env::var_os(CACHE_ENV) {
                Some(p) if !p.is_empty() => Cache::new(p),
                _ => Cache::new(DEFAULT_CACHE_DIR),
            },
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", key))
    }

    /// Loads and revalidates an entry. Anything stale, corrupt, or failing
    /// certificate verification is treated as a miss.
    pub fn load(&self, g: &PermGroup, t: &GroupTable) -> Option<Cached> {
        let key = group_key(g);
        let text = fs::read_to_string(self.path(&key)).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        if e.format_version != CACHE_FORMAT_VERSION || e.key != key || e.degree != g.degree() || e.order != t.len() {
            return None;
        }
        let lattice = SubgroupLattice::from_generators(t, &e.subgroups, &e.classes).ok()?;
        if let Some(c) = &e.certificate {
            c.verify(t).ok()?;
        }
        Some(Cached { lattice, certificate: e.certificate })
    }

    pub fn store(&self, g: &PermGroup, t: &GroupTable, lattice: &SubgroupLattice, certificate: Option<&CertificateRecord>) -> std::io::Result<()> {
        let key = group_key(g);
        let e = Entry {
            format_version: CACHE_FORMAT_VERSION,
            key: key.clone(),
            degree: g.degree(),
            order: t.len(),
            subgroups: lattice.all.iter().map(|s| s.generator_hints().to_vec()).collect(),
            classes: lattice.classes.iter().map(|c| c.members.clone()).collect(),
            certificate: certificate.cloned(),
        };
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&e)?.as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path(&key)).map_err(|e| e.error)?;
        Ok(())
    }
}
