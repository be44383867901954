//! On-disk cache of character tables.
//!
//! Each table is stored as JSON under a key (group, `q`, format version)
//! together with a SHA-256 digest of the key and payload. A file whose
//! version, key, digest or class representatives do not match is ignored
//! and rewritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use sl2swc_core::algebra::cyclo_make;
use sl2swc_core::characters::{char_table, CharacterError, CharacterTable, ClassFunction};
use sl2swc_core::groups::{build_gl2, build_sl2, conjugacy, ConjugacyData, GroupElem, GroupError, DEFAULT_Q_CAP};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SL2SWC_CACHE_DIR";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache serialization: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Character(#[from] CharacterError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum GroupChoice {
    Sl2,
    Gl2,
}

impl GroupChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupChoice::Sl2 => "sl2",
            GroupChoice::Gl2 => "gl2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub group: String,
    pub q: u64,
    pub version: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Payload {
    /// Order of the root of unity the values are written in.
    m: u32,
    representatives: Vec<[u32; 4]>,
    /// Per character, per class: power-basis coefficients.
    characters: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    key: CacheKey,
    digest: String,
    payload: Payload,
}

/// How a table was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Missing,
    /// A cache file existed but was rejected.
    Rejected(&'static str),
}

/// Cache directory: the explicit flag, then [`CACHE_ENV`], then the
/// platform cache location.
pub fn resolve_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    flag.or_else(|| env(CACHE_ENV))
        .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("sl2swc")))
        .or_else(|| env("HOME").map(|d| d.join(".cache").join("sl2swc")))
}

fn digest(key: &CacheKey, payload: &Payload) -> Result<String, serde_json::Error> {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(key)?);
    h.update(serde_json::to_vec(payload)?);
    Ok(hex::encode(h.finalize()))
}

fn representatives(cd: &ConjugacyData) -> Vec<[u32; 4]> {
    (0..cd.num_classes())
        .map(|c| match cd.group().elem(cd.representative(c)) {
            GroupElem::Matrix(m) => *m,
            GroupElem::Quaternion { k, l } => [*k, *l as u32, 0, 0],
        })
        .collect()
}

fn payload(table: &CharacterTable) -> Payload {
    let cd = table.classes();
    Payload {
        m: cd.ring().m(),
        representatives: representatives(cd),
        characters: table
            .characters()
            .iter()
            .map(|c| c.values().iter().map(|v| v.coeffs().to_vec()).collect())
            .collect(),
    }
}

pub struct TableCache {
    dir: Option<PathBuf>,
}

impl TableCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        TableCache { dir }
    }

    pub fn disabled() -> Self {
        TableCache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(group: GroupChoice, q: u64) -> CacheKey {
        CacheKey { group: group.as_str().to_string(), q, version: FORMAT_VERSION }
    }

    pub fn path(&self, group: GroupChoice, q: u64) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}-{q}-v{FORMAT_VERSION}.json", group.as_str())))
    }

    /// The character table of `SL(2,q)` or `GL(2,q)`, from the cache when a
    /// valid entry exists, otherwise computed and stored.
    pub fn table(&self, group: GroupChoice, q: u64) -> Result<(Arc<CharacterTable>, CacheStatus), CacheError> {
        let g = match group {
            GroupChoice::Sl2 => build_sl2(q, DEFAULT_Q_CAP)?,
            GroupChoice::Gl2 => build_gl2(q, DEFAULT_Q_CAP)?,
        };
        let cd = conjugacy(&g)?;
        let Some(path) = self.path(group, q) else {
            return Ok((Arc::new(char_table(&cd)?), CacheStatus::Disabled));
        };
        let key = Self::key(group, q);
        let status = match fs::read(&path) {
            Ok(bytes) => match load(&bytes, &key, &cd) {
                Ok(t) => return Ok((Arc::new(t), CacheStatus::Hit)),
                Err(reason) => CacheStatus::Rejected(reason),
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => CacheStatus::Missing,
            Err(e) => return Err(e.into()),
        };
        let table = char_table(&cd)?;
        store(&path, &key, &table)?;
        Ok((Arc::new(table), status))
    }
}

fn load(bytes: &[u8], key: &CacheKey, cd: &Arc<ConjugacyData>) -> Result<CharacterTable, &'static str> {
    let file: CacheFile = serde_json::from_slice(bytes).map_err(|_| "unreadable")?;
    if file.key.version != FORMAT_VERSION {
        return Err("format version");
    }
    if &file.key != key {
        return Err("key mismatch");
    }
    if digest(&file.key, &file.payload).map_err(|_| "unreadable")? != file.digest {
        return Err("digest mismatch");
    }
    let p = file.payload;
    if p.m != cd.ring().m() || p.representatives != representatives(cd) {
        return Err("class data mismatch");
    }
    let ring = cd.ring();
    let chars = p
        .characters
        .iter()
        .map(|vals| {
            if vals.len() != cd.num_classes() {
                return Err("class data mismatch");
            }
            Ok(ClassFunction::new(cd, vals.iter().map(|c| cyclo_make(ring, c)).collect()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    CharacterTable::from_characters(cd, chars).map_err(|_| "invalid table")
}

/// Writes through a temporary file in the same directory and renames it into
/// place.
fn store(path: &Path, key: &CacheKey, table: &CharacterTable) -> Result<(), CacheError> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let payload = payload(table);
    let file = CacheFile { key: key.clone(), digest: digest(key, &payload)?, payload };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(&serde_json::to_vec(&file)?)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| CacheError::Io(e.error))?;
    Ok(())
}
