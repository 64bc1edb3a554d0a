//! Result cache: reports stored on disk keyed by a stable hash of the
//! semantically meaningful configuration plus the tool version, so any
//! algorithm change invalidates old entries.

use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

use crate::report::TOOL_VERSION;

/// Cache directory: `TURAN_CACHE_DIR` if set, else `.turan-cache` under
/// the current directory.
pub fn cache_dir() -> PathBuf {
    match std::env::var_os("TURAN_CACHE_DIR") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(".turan-cache"),
    }
}

/// Hex digest over the canonical JSON encoding of the config and the
/// tool version.
pub fn config_hash(config_json: &str) -> String {
    let mut h = Sha256::new();
    h.update(TOOL_VERSION.as_bytes());
    h.update(b"\n");
    h.update(config_json.as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{:02x}", b)).collect()
}

fn entry_path(dir: &Path, hash: &str) -> PathBuf {
    dir.join(format!("{}.json", hash))
}

/// Stored report for this hash, if any. Unreadable or corrupt entries
/// count as misses.
pub fn load(hash: &str) -> Option<serde_json::Value> {
    let text = std::fs::read_to_string(entry_path(&cache_dir(), hash)).ok()?;
    serde_json::from_str(&text).ok()
}

pub fn store(hash: &str, report_json: &str) -> std::io::Result<()> {
    let dir = cache_dir();
    std::fs::create_dir_all(&dir)?;
    std::fs::write(entry_path(&dir, hash), report_json)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable_and_config_sensitive() {
        let a = config_hash("{\"n\":6}");
        let b = config_hash("{\"n\":6}");
        let c = config_hash("{\"n\":7}");
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 64);
    }
}
