//! Report serialization: JSON with keys in fixed sorted order, plus a
//! small CSV emitter for tabular summaries.

use serde::Serialize;
use serde_json::Value;
use std::io::Write;
use std::path::Path;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Serializes with object keys sorted (the serde_json map is ordered),
/// so re-running a command reproduces byte-identical output apart from
/// any timestamp/timing fields the caller embeds.
pub fn to_sorted_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let v: Value = serde_json::to_value(value)?;
    serde_json::to_string_pretty(&v)
}

pub fn timestamp_now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Writes a CSV table: header row then records, all fields unquoted
/// (callers only pass numerals, booleans, and plain identifiers).
pub fn write_csv(
    path: &Path,
    header: &[&str],
    rows: &[Vec<String>],
) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    writeln!(f, "{}", header.join(","))?;
    for row in rows {
        writeln!(f, "{}", row.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::Serialize;

    #[derive(Serialize)]
    struct Demo {
        zeta: u32,
        alpha: u32,
        middle: Vec<u32>,
    }

    #[test]
    fn keys_come_out_sorted() {
        let s = to_sorted_json(&Demo {
            zeta: 1,
            alpha: 2,
            middle: vec![3],
        })
        .unwrap();
        let a = s.find("\"alpha\"").unwrap();
        let m = s.find("\"middle\"").unwrap();
        let z = s.find("\"zeta\"").unwrap();
        assert!(a < m && m < z);
    }

    #[test]
    fn csv_layout() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("t.csv");
        write_csv(
            &p,
            &["n", "formula", "computed", "match"],
            &[vec!["6".into(), "6".into(), "6".into(), "true".into()]],
        )
        .unwrap();
        assert_eq!(
            std::fs::read_to_string(&p).unwrap(),
            "n,formula,computed,match\n6,6,6,true\n"
        );
    }
}
