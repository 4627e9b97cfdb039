//! On-disk cache for enumerated groups, lifts and tables.
//!
//! Entries are keyed by kind, group, a short hash of the convention
//! fingerprint, and the artifact version; payloads embed the fingerprint and
//! a stale or corrupt entry is silently recomputed. Serialization is
//! deterministic, so a cache hit is byte-identical to recomputation.

use std::path::{Path, PathBuf};

pub struct CacheConfig {
    pub dir: Option<PathBuf>,
}

impl CacheConfig {
    pub fn resolve(flag: Option<PathBuf>, disabled: bool) -> CacheConfig {
        if disabled {
            return CacheConfig { dir: None };
        }
        let dir = flag
            .or_else(|| std::env::var_os("KSCHUBERT_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(".kschubert-cache"));
        CacheConfig { dir: Some(dir) }
    }
}

fn fingerprint_hash(fp: &str) -> String {
    // FNV-1a, enough to key cache files on the convention string
    let mut h: u64 = 0xcbf29ce484222325;
    for b in fp.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

pub fn entry_path(dir: &Path, kind: &str, group: &str) -> PathBuf {
    let fp = kschubert::demazure::CONVENTION.fingerprint();
    dir.join(format!(
        "{kind}-{group}-{}-{}.json",
        &fingerprint_hash(&fp)[..8],
        env!("CARGO_PKG_VERSION")
    ))
}

/// Fetch a cached JSON payload or compute, validate and persist it. Returns
/// the rendered bytes and whether the call was a hit.
pub fn get_or_compute(
    cfg: &CacheConfig,
    kind: &str,
    group: &str,
    compute: impl FnOnce() -> kschubert::Result<serde_json::Value>,
) -> kschubert::Result<(String, bool)> {
    let fp = kschubert::demazure::CONVENTION.fingerprint();
    if let Some(dir) = &cfg.dir {
        let path = entry_path(dir, kind, group);
        if let Ok(bytes) = std::fs::read_to_string(&path) {
            if let Ok(value) = serde_json::from_str::<serde_json::Value>(&bytes) {
                if value.get("convention").and_then(|v| v.as_str()) == Some(fp.as_str()) {
                    return Ok((bytes, true));
                }
            }
            // corrupt or stale: fall through and recompute
        }
        let value = compute()?;
        let bytes = render(&value);
        std::fs::create_dir_all(dir).map_err(|e| {
            kschubert::Error::Usage(format!("cannot create cache dir {}: {e}", dir.display()))
        })?;
        std::fs::write(&path, &bytes).map_err(|e| {
            kschubert::Error::Usage(format!("cannot write cache file {}: {e}", path.display()))
        })?;
        Ok((bytes, false))
    } else {
        let value = compute()?;
        Ok((render(&value), false))
    }
}

pub fn render(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON rendering cannot fail");
    s.push('\n');
    s
}
