//! On-disk lattice cache: one JSON document per group, named by the SHA-256
//! of the canonical group literal.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::literal::group_literal;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Element, Limits};
use crate::lattice::{all_subgroups, Backend, SubgroupLattice};
use crate::subgroup::Subgroup;

const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct StoredSubgroup {
    generators: Vec<Vec<u64>>,
    elements: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct StoredLattice {
    schema_version: u32,
    group: String,
    backend: Backend,
    subgroups: Vec<StoredSubgroup>,
}

/// Canonical JSON bytes of a lattice, as written to the cache.
pub fn encode_lattice(lattice: &SubgroupLattice) -> String {
    let doc = StoredLattice {
        schema_version: CACHE_VERSION,
        group: group_literal(&lattice.parent),
        backend: lattice.backend,
        subgroups: lattice
            .subgroups
            .iter()
            .map(|h| StoredSubgroup {
                generators: h
                    .generators()
                    .iter()
                    .map(|e| e.residues().to_vec())
                    .collect(),
                elements: h.elements().map(|e| e.residues().to_vec()).collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("lattice serializes");
    s.push('\n');
    s
}

pub fn decode_lattice(g: &AbelianGroup, text: &str) -> Result<SubgroupLattice> {
    let doc: StoredLattice = serde_json::from_str(text).map_err(|e| Error::Cache(e.to_string()))?;
    if doc.schema_version != CACHE_VERSION {
        return Err(Error::Cache(format!(
            "unsupported schema version {}",
            doc.schema_version
        )));
    }
    if doc.group != group_literal(g) {
        return Err(Error::Cache(format!("entry is for group `{}`", doc.group)));
    }
    let to_elements = |rows: &[Vec<u64>]| {
        rows.iter()
            .map(|r| g.element(r))
            .collect::<Result<Vec<Element>>>()
    };
    let mut subgroups = Vec::with_capacity(doc.subgroups.len());
    for s in &doc.subgroups {
        let h = Subgroup::from_parts(g, &to_elements(&s.elements)?, &to_elements(&s.generators)?)
            .map_err(|e| Error::Cache(e.to_string()))?;
        subgroups.push(h);
    }
    if subgroups.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Cache("subgroups are not in canonical order".into()));
    }
    let ends_ok = subgroups.first().is_some_and(Subgroup::is_trivial)
        && subgroups.last().is_some_and(Subgroup::is_whole);
    if !ends_ok {
        return Err(Error::Cache(
            "lattice is missing the trivial subgroup or the group".into(),
        ));
    }
    Ok(SubgroupLattice {
        parent: g.clone(),
        subgroups,
        backend: doc.backend,
    })
}

#[derive(Debug, Clone)]
pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(LatticeCache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, g: &AbelianGroup) -> PathBuf {
        let digest = Sha256::digest(group_literal(g).as_bytes());
        let name: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{name}.json"))
    }

    /// Writes the entry. Rewriting identical bytes is a no-op; different
    /// bytes under an existing key are an error.
    pub fn store(&self, lattice: &SubgroupLattice) -> Result<()> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        let path = self.path_for(&lattice.parent);
        let bytes = encode_lattice(lattice);
        if let Ok(existing) = fs::read_to_string(&path) {
            if existing == bytes {
                return Ok(());
            }
            if decode_lattice(&lattice.parent, &existing).is_ok() {
                return Err(Error::Cache(format!(
                    "refusing to overwrite {} with different content",
                    path.display()
                )));
            }
        }
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        fs::write(&tmp, &bytes)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Reads the entry; a missing entry is `Ok(None)`, an unreadable or
    /// invalid one is an error.
    pub fn try_load(&self, g: &AbelianGroup) -> Result<Option<SubgroupLattice>> {
        let path = self.path_for(g);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        decode_lattice(g, &text)
            .map(Some)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    /// Like [`try_load`](Self::try_load), but a corrupt entry is logged and
    /// treated as absent.
    pub fn load(&self, g: &AbelianGroup) -> Option<SubgroupLattice> {
        match self.try_load(g) {
            Ok(hit) => hit,
            Err(e) => {
                log::warn!("ignoring corrupt lattice cache entry: {e}");
                None
            }
        }
    }

    /// Cached lattice, recomputed (and rewritten) on a miss or corrupt entry.
    /// With `verify`, a hit is recomputed and must match byte for byte.
    pub fn lattice(
        &self,
        g: &AbelianGroup,
        limits: &Limits,
        verify: bool,
    ) -> Result<SubgroupLattice> {
        if let Some(hit) = self.load(g) {
            if verify {
                let fresh = all_subgroups(g, limits)?;
                if encode_lattice(&fresh) != encode_lattice(&hit) {
                    return Err(Error::Cache(format!(
                        "cached lattice for `{}` differs from recomputation",
                        group_literal(g)
                    )));
                }
            }
            return Ok(hit);
        }
        let fresh = all_subgroups(g, limits)?;
        let path = self.path_for(g);
        if path.exists() {
            // Corrupt entry: replace it.
            fs::remove_file(&path)?;
        }
        self.store(&fresh)?;
        Ok(fresh)
    }
}

pub fn cache_lattice(cache: &LatticeCache, lattice: &SubgroupLattice) -> Result<()> {
    cache.store(lattice)
}

pub fn load_lattice(cache: &LatticeCache, g: &AbelianGroup) -> Option<SubgroupLattice> {
    cache.load(g)
}
