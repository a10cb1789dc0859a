//! Plain-text set and word files.
//!
//! Set files hold one decimal integer per line in ascending order. Word files
//! start with a `k=<alphabet>` header line followed by the symbols, written as
//! digits when `k ≤ 10` and comma-separated otherwise.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::words::{render, SymbolWord};
use crate::{Error, Result};

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Parse(format!("{}: {e}", path.display()))
}

pub fn format_set(elements: &[u64]) -> String {
    let mut s = String::with_capacity(elements.len() * 8);
    for e in elements {
        s.push_str(&e.to_string());
        s.push('\n');
    }
    s
}

pub fn parse_set(text: &str) -> Result<Vec<u64>> {
    let mut out: Vec<u64> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: u64 = line.parse().map_err(|_| Error::Parse(format!("line {}: not an integer: {line:?}", i + 1)))?;
        if v == 0 || out.last().is_some_and(|&p| p >= v) {
            return Err(Error::Parse(format!("line {}: values must be positive and strictly ascending", i + 1)));
        }
        out.push(v);
    }
    Ok(out)
}

pub fn read_set_file(path: &Path) -> Result<Vec<u64>> {
    parse_set(&fs::read_to_string(path).map_err(|e| io_err(path, e))?)
}

pub fn write_set_file(path: &Path, elements: &[u64]) -> Result<()> {
    write_atomic(path, format_set(elements).as_bytes())
}

pub fn format_word(w: &SymbolWord) -> String {
    format!("k={}\n{}\n", w.alphabet(), render(w.symbols(), w.alphabet()))
}

pub fn parse_word(text: &str) -> Result<SymbolWord> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty word file".into()))?;
    let k: usize = header
        .trim()
        .strip_prefix("k=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {header:?}, expected k=<alphabet>")))?;
    let body: String = lines.map(str::trim).collect::<Vec<_>>().join(if k <= 10 { "" } else { "," });
    let symbols = if k <= 10 {
        body.bytes()
            .map(|b| if b.is_ascii_digit() { Ok(b - b'0') } else { Err(Error::Parse(format!("bad symbol {:?}", b as char))) })
            .collect::<Result<Vec<u8>>>()?
    } else {
        body.split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad symbol {s:?}"))))
            .collect::<Result<Vec<u8>>>()?
    };
    SymbolWord::new(k, symbols)
}

pub fn read_word_file(path: &Path) -> Result<SymbolWord> {
    parse_word(&fs::read_to_string(path).map_err(|e| io_err(path, e))?)
}

pub fn write_word_file(path: &Path, w: &SymbolWord) -> Result<()> {
    write_atomic(path, format_word(w).as_bytes())
}

/// Writes to a temporary file in the target directory, then renames it.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_err(path, e))?;
    tmp.write_all(bytes).map_err(|e| io_err(path, e))?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file().set_permissions(fs::Permissions::from_mode(0o644)).map_err(|e| io_err(path, e))?;
    }
    tmp.persist(path).map_err(|e| io_err(path, e.error))?;
    Ok(())
}
