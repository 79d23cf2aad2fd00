//! On-disk polynomial tables.
//!
//! A cache file starts with `grothcache v1 n=<n> flavor=<S|G>` and then holds
//! one `<one-line word>|<polynomial>` line per permutation, sorted by word.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use groth_core::{Flavor, Permutation, PolynomialTable};

use crate::format::{one_line, polynomial_from_text, polynomial_to_text};

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache io on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}:{line}: corrupt cache line: {reason}")]
    Corrupt { path: PathBuf, line: usize, reason: String },
}

pub fn header(n: usize, flavor: Flavor) -> String {
    format!("grothcache v1 n={n} flavor={}", flavor.tag())
}

pub fn cache_path(dir: &Path, n: usize, flavor: Flavor) -> PathBuf {
    dir.join(format!("groth-n{n}-{}.cache", flavor.tag()))
}

/// Canonical text of a table: header plus entries in word order.
pub fn table_to_text(table: &PolynomialTable) -> String {
    let mut out = header(table.n(), table.flavor());
    out.push('\n');
    for (w, f) in table.iter() {
        out.push_str(&one_line(w));
        out.push('|');
        out.push_str(&polynomial_to_text(f));
        out.push('\n');
    }
    out
}

/// Parses cache text. `Ok(None)` means the header names another version, size or flavor.
pub fn table_from_text(
    text: &str,
    n: usize,
    flavor: Flavor,
    path: &Path,
) -> Result<Option<PolynomialTable>, CacheError> {
    let mut lines = text.lines();
    if lines.next() != Some(header(n, flavor).as_str()) {
        return Ok(None);
    }
    let corrupt = |line: usize, reason: String| CacheError::Corrupt {
        path: path.to_path_buf(),
        line,
        reason,
    };
    let mut entries = Vec::new();
    for (i, line) in lines.enumerate() {
        let number = i + 2;
        let (word, poly) = line
            .split_once('|')
            .ok_or_else(|| corrupt(number, "missing `|` separator".into()))?;
        let w: Permutation = word.parse().map_err(|e| corrupt(number, format!("{e}")))?;
        if w.n() != n {
            return Err(corrupt(number, format!("permutation {word} is not in S_{n}")));
        }
        let f = polynomial_from_text(poly, n).map_err(|e| corrupt(number, e.to_string()))?;
        entries.push((w, f));
    }
    let table = PolynomialTable::from_entries(n, flavor, entries).map_err(|e| corrupt(0, e.to_string()))?;
    Ok(Some(table))
}

/// Reads the cache for `(n, flavor)` from `dir`. A missing file or a stale header gives `Ok(None)`.
pub fn load(dir: &Path, n: usize, flavor: Flavor) -> Result<Option<PolynomialTable>, CacheError> {
    let path = cache_path(dir, n, flavor);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(source) => return Err(CacheError::Io { path, source }),
    };
    table_from_text(&text, n, flavor, &path)
}

/// Writes the table to `dir`, creating the directory if needed. Returns the file path.
pub fn store(dir: &Path, table: &PolynomialTable) -> Result<PathBuf, CacheError> {
    let path = cache_path(dir, table.n(), table.flavor());
    let io_err = |source| CacheError::Io {
        path: path.clone(),
        source,
    };
    fs::create_dir_all(dir).map_err(io_err)?;
    // write then rename so a crash never leaves a half-written cache behind
    let tmp = path.with_extension("cache.tmp");
    fs::write(&tmp, table_to_text(table)).map_err(io_err)?;
    fs::rename(&tmp, &path).map_err(io_err)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_table_is_header_only() {
        let t = PolynomialTable::new(4, Flavor::Grothendieck);
        assert_eq!(table_to_text(&t), "grothcache v1 n=4 flavor=G\n");
    }

    #[test]
    fn roundtrip_s3() {
        let dir = tempfile::tempdir().unwrap();
        let t = PolynomialTable::build(3, Flavor::Grothendieck).unwrap();
        let path = store(dir.path(), &t).unwrap();
        let first = fs::read(&path).unwrap();
        assert_eq!(String::from_utf8_lossy(&first).lines().count(), 7);
        let back = load(dir.path(), 3, Flavor::Grothendieck).unwrap().unwrap();
        assert_eq!(back.len(), 6);
        for (w, f) in t.iter() {
            assert_eq!(back.get(w), Some(f));
        }
        assert_eq!(back.steps(), 0);
        store(dir.path(), &back).unwrap();
        assert_eq!(fs::read(&path).unwrap(), first);
    }

    #[test]
    fn stale_header_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let t = PolynomialTable::build(4, Flavor::Grothendieck).unwrap();
        let path = store(dir.path(), &t).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert!(table_from_text(&text, 5, Flavor::Grothendieck, &path).unwrap().is_none());
        assert!(table_from_text(&text, 4, Flavor::Schubert, &path).unwrap().is_none());
        let older = text.replacen("v1", "v0", 1);
        assert!(table_from_text(&older, 4, Flavor::Grothendieck, &path).unwrap().is_none());
        assert!(load(dir.path(), 5, Flavor::Grothendieck).unwrap().is_none());
    }

    #[test]
    fn corrupt_line_is_named() {
        let path = Path::new("x.cache");
        let text = "grothcache v1 n=3 flavor=G\n123|1:0,0,0\n132 1:1,0,0\n";
        let err = table_from_text(text, 3, Flavor::Grothendieck, path).unwrap_err();
        assert!(matches!(err, CacheError::Corrupt { line: 3, .. }), "{err}");
        assert!(err.to_string().contains("x.cache:3"));
        let text = "grothcache v1 n=3 flavor=G\n1234|1:0,0,0\n";
        assert!(matches!(
            table_from_text(text, 3, Flavor::Grothendieck, path),
            Err(CacheError::Corrupt { line: 2, .. })
        ));
    }
}
