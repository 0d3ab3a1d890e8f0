//! On-disk cache of character tables: JSON with a SHA-256 checksum, keyed
//! by family, rank and code version. Any mismatch triggers a rebuild.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::classes::CycleType;
use super::table::{CharTable, IrrLabel};
use super::Family;

pub const CACHE_ENV: &str = "KOSTKA_CACHE_DIR";
pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Payload {
    version: u32,
    family: Family,
    n: usize,
    labels: Vec<String>,
    classes: Vec<String>,
    values: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    payload: Payload,
    checksum: String,
}

fn digest(p: &Payload) -> String {
    hex::encode(Sha256::digest(serde_json::to_vec(p).expect("payload serializes")))
}

/// `$KOSTKA_CACHE_DIR`, or `~/.cache/kostka`; `off` (or empty) disables.
pub fn cache_dir() -> Option<PathBuf> {
    if cfg!(target_arch = "wasm32") {
        return None;
    }
    match std::env::var_os(CACHE_ENV) {
        Some(v) if v.is_empty() || v == "off" => None,
        Some(v) => Some(PathBuf::from(v)),
        None => std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("kostka")),
    }
}

fn path_for(family: Family, n: usize) -> Option<PathBuf> {
    cache_dir().map(|d| d.join(format!("chartable-{family}-{n}-v{CACHE_VERSION}.json")))
}

pub(crate) fn load<L: IrrLabel>(n: usize) -> Option<CharTable<L>> {
    let path = path_for(L::FAMILY, n)?;
    let text = std::fs::read(path).ok()?;
    let file: CacheFile = serde_json::from_slice(&text).ok()?;
    let p = file.payload;
    if digest(&p) != file.checksum || p.version != CACHE_VERSION || p.family != L::FAMILY || p.n != n {
        return None;
    }
    let labels = L::all(n);
    let classes = super::classes::conjugacy_classes(L::FAMILY, n);
    let same_labels = p.labels.len() == labels.len() && labels.iter().zip(&p.labels).all(|(l, s)| l.to_string() == *s);
    let same_classes = p.classes.len() == classes.len() && classes.iter().zip(&p.classes).all(|(c, s)| c.to_string() == *s);
    if !same_labels || !same_classes || p.values.len() != labels.len() || p.values.iter().any(|r| r.len() != classes.len()) {
        return None;
    }
    Some(CharTable::assemble(n, labels, classes, p.values))
}

pub(crate) fn store<L: IrrLabel>(t: &CharTable<L>) {
    let Some(path) = path_for(L::FAMILY, t.n) else { return };
    let payload = Payload {
        version: CACHE_VERSION,
        family: L::FAMILY,
        n: t.n,
        labels: t.labels.iter().map(|l| l.to_string()).collect(),
        classes: t.classes.iter().map(CycleType::to_string).collect(),
        values: t.values.clone(),
    };
    let checksum = digest(&payload);
    let Ok(bytes) = serde_json::to_vec(&CacheFile { payload, checksum }) else { return };
    let _ = write_atomic(&path, &bytes);
}

static COUNTER: AtomicUsize = AtomicUsize::new(0);

/// Write to a sibling temp file and rename over the target.
pub fn write_atomic(path: &std::path::Path, bytes: &[u8]) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!(
        "tmp.{}.{}",
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })
}
