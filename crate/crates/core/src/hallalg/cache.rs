//! Memo table and optional disk cache for fitted counting polynomials.
//!
//! Disk entries are JSON files named by the SHA-256 of their key and carry
//! a format version; unreadable or stale files are ignored and rewritten.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;
use std::path::PathBuf;
use std::sync::RwLock;

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "FOCKBASIS_CACHE_DIR";

pub const DEFAULT_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

/// Labelled integer coefficient lists (ascending powers of `Q`).
pub type Entry = BTreeMap<String, Vec<BigInt>>;

struct Config {
    dir: Option<PathBuf>,
    primes: Vec<u64>,
}

static CONFIG: Lazy<RwLock<Config>> =
    Lazy::new(|| RwLock::new(Config { dir: None, primes: DEFAULT_PRIMES.to_vec() }));
static MEMO: Lazy<RwLock<HashMap<String, Entry>>> = Lazy::new(|| RwLock::new(HashMap::new()));

#[derive(Serialize, Deserialize)]
struct DiskEntry {
    format_version: u32,
    key: String,
    values: BTreeMap<String, Vec<String>>,
}

pub fn set_cache_dir(dir: Option<PathBuf>) {
    CONFIG.write().unwrap().dir = dir;
}

/// The configured directory, else the environment override.
pub fn cache_dir() -> Option<PathBuf> {
    CONFIG.read().unwrap().dir.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

/// Base primes for counting; more are appended on demand.
pub fn set_primes(primes: Vec<u64>) {
    CONFIG.write().unwrap().primes = primes;
}

pub fn base_primes() -> Vec<u64> {
    CONFIG.read().unwrap().primes.clone()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// At least `count` distinct primes: the base list, then the next primes
/// above its maximum.
pub fn primes_for(count: usize) -> Vec<u64> {
    let mut ps = base_primes();
    let mut next = ps.iter().copied().max().unwrap_or(1) + 1;
    while ps.len() < count {
        if is_prime(next) {
            ps.push(next);
        }
        next += 1;
    }
    ps
}

fn file_for(dir: &std::path::Path, key: &str) -> PathBuf {
    let digest = Sha256::digest(key.as_bytes());
    dir.join(format!("{}.json", hex::encode(digest)))
}

fn read_disk(key: &str) -> Option<Entry> {
    let dir = cache_dir()?;
    let text = std::fs::read_to_string(file_for(&dir, key)).ok()?;
    let e: DiskEntry = serde_json::from_str(&text).ok()?;
    if e.format_version != FORMAT_VERSION || e.key != key {
        return None;
    }
    let mut out = Entry::new();
    for (k, v) in e.values {
        let coeffs: Option<Vec<BigInt>> = v.iter().map(|s| s.parse().ok()).collect();
        out.insert(k, coeffs?);
    }
    Some(out)
}

fn write_disk(key: &str, entry: &Entry) {
    let Some(dir) = cache_dir() else { return };
    if std::fs::create_dir_all(&dir).is_err() {
        return;
    }
    let disk = DiskEntry {
        format_version: FORMAT_VERSION,
        key: key.to_string(),
        values: entry.iter().map(|(k, v)| (k.clone(), v.iter().map(|c| c.to_string()).collect())).collect(),
    };
    let Ok(text) = serde_json::to_string(&disk) else { return };
    let Ok(mut tmp) = tempfile::NamedTempFile::new_in(&dir) else { return };
    if tmp.write_all(text.as_bytes()).is_ok() {
        let _ = tmp.persist(file_for(&dir, key));
    }
}

pub fn lookup(key: &str) -> Option<Entry> {
    if let Some(e) = MEMO.read().unwrap().get(key) {
        return Some(e.clone());
    }
    let e = read_disk(key)?;
    MEMO.write().unwrap().entry(key.to_string()).or_insert_with(|| e.clone());
    Some(e)
}

pub fn store(key: &str, entry: &Entry) {
    MEMO.write().unwrap().entry(key.to_string()).or_insert_with(|| entry.clone());
    write_disk(key, entry);
}

/// Drops the in-memory table (disk entries are kept).
pub fn clear_memory() {
    MEMO.write().unwrap().clear();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_extension() {
        assert_eq!(primes_for(3), DEFAULT_PRIMES.to_vec());
        assert_eq!(primes_for(7), vec![2, 3, 5, 7, 11, 13, 17]);
    }
}
