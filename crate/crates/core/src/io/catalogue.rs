//! Reading classification files of association schemes.
//!
//! A catalogue file holds many scheme matrices. The parser accepts blocks
//! with or without the `n rank` header, labels separated by spaces or packed
//! one character per label, and `#` metadata. Lines it does not understand
//! after a matrix are kept in `SchemeFile::comments` and otherwise ignored.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use sha2::{Digest, Sha256};
use thiserror::Error;

use super::format::{canonical_labels, name_tag, FormatError, SchemeFile};

/// Environment variable naming the download cache directory.
pub const CACHE_ENV: &str = "HALLSCHEME_CACHE";

const RETRIES: usize = 3;

#[derive(Debug, Error)]
pub enum CatalogueError {
    #[error("catalogue for order {order} is not cached and the network is unavailable: {reason}")]
    NetworkUnavailable { order: usize, reason: String },
    #[error("unrecognized catalogue format at line {line}: {reason}")]
    UnrecognizedCatalogueFormat { line: usize, reason: String },
    #[error("checksum mismatch for {path}: expected {expected}, found {found}")]
    ChecksumMismatch {
        path: PathBuf,
        expected: String,
        found: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// Where a catalogue comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogueSource {
    /// Base URL; the file for order `n` is `{base}/as{n}.txt`.
    Url(String),
    /// Local directory laid out like the remote one.
    Mirror(PathBuf),
}

pub fn catalogue_file_name(order: usize) -> String {
    format!("as{order}.txt")
}

/// The catalogue bundled with this crate (orders 1–12 and 28).
pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalogue")
}

/// Reads one order from the bundled catalogue.
pub fn load_bundled(order: usize) -> Result<Vec<SchemeFile>, CatalogueError> {
    fetch_catalogue(&CatalogueSource::Mirror(bundled_dir()), order, None, true)
}

pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        return dir.into();
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("hallscheme")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read(path: &Path) -> Result<Vec<u8>, CatalogueError> {
    fs::read(path).map_err(|source| CatalogueError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), CatalogueError> {
    let io = |source| CatalogueError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    fs::write(path, bytes).map_err(io)
}

fn check(path: &Path, bytes: &[u8], expected: &str) -> Result<(), CatalogueError> {
    let found = sha256_hex(bytes);
    if found == expected {
        Ok(())
    } else {
        Err(CatalogueError::ChecksumMismatch {
            path: path.to_path_buf(),
            expected: expected.to_string(),
            found,
        })
    }
}

/// Looks `file` up in a `SHA256SUMS` listing (`<hex>  <name>` lines).
fn listed_sum(dir: &Path, file: &str) -> Option<String> {
    let sums = fs::read_to_string(dir.join("SHA256SUMS")).ok()?;
    sums.lines().find_map(|l| {
        let (hash, name) = l.split_once(char::is_whitespace)?;
        (name.trim().trim_start_matches('*') == file).then(|| hash.to_string())
    })
}

fn sidecar(path: &Path) -> PathBuf {
    let mut p = path.as_os_str().to_owned();
    p.push(".sha256");
    p.into()
}

fn download(url: &str) -> Result<Vec<u8>, String> {
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(Duration::from_secs(30)))
        .build()
        .into();
    let mut last = String::new();
    for attempt in 1..=RETRIES {
        match agent.get(url).call() {
            Ok(mut resp) => match resp.body_mut().read_to_vec() {
                Ok(b) => return Ok(b),
                Err(e) => last = e.to_string(),
            },
            Err(e) => last = e.to_string(),
        }
        log::warn!("download of {url} failed (attempt {attempt}/{RETRIES}): {last}");
        if attempt < RETRIES {
            std::thread::sleep(Duration::from_millis(500 * attempt as u64));
        }
    }
    Err(last)
}

/// Loads the catalogue for `order`.
///
/// Mirror files are checked against the mirror's `SHA256SUMS` when present.
/// Downloads are cached in `cache` (default [`default_cache_dir`]) with a
/// `.sha256` sidecar; with `offline` set only the cache is consulted.
pub fn fetch_catalogue(
    source: &CatalogueSource,
    order: usize,
    cache: Option<&Path>,
    offline: bool,
) -> Result<Vec<SchemeFile>, CatalogueError> {
    let file = catalogue_file_name(order);
    let bytes = match source {
        CatalogueSource::Mirror(dir) => {
            let path = dir.join(&file);
            let bytes = read(&path)?;
            if let Some(sum) = listed_sum(dir, &file) {
                check(&path, &bytes, &sum)?;
            }
            bytes
        }
        CatalogueSource::Url(base) => {
            let cache = cache.map_or_else(default_cache_dir, Path::to_path_buf);
            let path = cache.join(&file);
            if path.exists() {
                let bytes = read(&path)?;
                if let Ok(sum) = fs::read_to_string(sidecar(&path)) {
                    check(&path, &bytes, sum.trim())?;
                }
                bytes
            } else if offline {
                return Err(CatalogueError::NetworkUnavailable {
                    order,
                    reason: "offline mode".into(),
                });
            } else {
                let url = format!("{}/{file}", base.trim_end_matches('/'));
                let bytes = download(&url)
                    .map_err(|reason| CatalogueError::NetworkUnavailable { order, reason })?;
                write(&path, &bytes)?;
                write(&sidecar(&path), sha256_hex(&bytes).as_bytes())?;
                bytes
            }
        }
    };
    let text = String::from_utf8_lossy(&bytes);
    parse_catalogue(&text)
}

fn unrecognized(line: usize, reason: impl Into<String>) -> CatalogueError {
    CatalogueError::UnrecognizedCatalogueFormat {
        line,
        reason: reason.into(),
    }
}

/// One matrix row, either space-separated or packed one label per character
/// (`0-9`, then `a-z`, then `A-Z`).
fn row(line: &str) -> Option<Vec<usize>> {
    if line.contains(char::is_whitespace) {
        return line.split_whitespace().map(|t| t.parse().ok()).collect();
    }
    line.chars()
        .map(|c| match c {
            '0'..='9' => Some(c as usize - '0' as usize),
            'a'..='z' => Some(c as usize - 'a' as usize + 10),
            'A'..='Z' => Some(c as usize - 'A' as usize + 36),
            _ => None,
        })
        .collect()
}

/// Splits a catalogue into its matrices.
pub fn parse_catalogue(text: &str) -> Result<Vec<SchemeFile>, CatalogueError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut name = None;
    let mut comments = Vec::new();
    while i < lines.len() {
        let (lineno, line) = lines[i];
        if line.is_empty() {
            i += 1;
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            let c = c.trim();
            match name_tag(c) {
                Some(n) => name = Some(n.to_string()),
                None => comments.push(c.to_string()),
            }
            i += 1;
            continue;
        }
        let first = row(line).ok_or_else(|| unrecognized(lineno, "expected a matrix row"))?;
        let matrix_rows = |from: usize, n: usize| -> Option<Vec<Vec<usize>>> {
            let rows: Vec<Vec<usize>> = lines
                .get(from..from + n)?
                .iter()
                .map(|&(_, l)| row(l).filter(|r| r.len() == n))
                .collect::<Option<_>>()?;
            Some(rows)
        };
        // "n rank" header followed by exactly n rows of length n
        let with_header = match first[..] {
            [n, rank] if n > 0 && line.contains(' ') => {
                matrix_rows(i + 1, n).map(|r| (r, i + 1 + n, Some(rank)))
            }
            _ => None,
        };
        let (rows, next, header_rank) = match with_header {
            Some(found) => found,
            None => {
                let n = first.len();
                let rows = matrix_rows(i, n).ok_or_else(|| {
                    unrecognized(lineno, format!("expected {n} rows of {n} labels"))
                })?;
                (rows, i + n, None)
            }
        };
        let (labels, rank) = canonical_labels(rows).map_err(|e: FormatError| unrecognized(lineno, e.to_string()))?;
        if header_rank.is_some_and(|r| r != rank) {
            return Err(unrecognized(lineno, "header rank disagrees with the matrix"));
        }
        i = next;
        // trailing metadata up to the next blank line
        while i < lines.len() && !lines[i].1.is_empty() && !lines[i].1.starts_with('#') {
            let (l, s) = lines[i];
            if row(s).is_some() && looks_like_next_block(&lines, i) {
                break;
            }
            log::debug!("ignoring catalogue metadata on line {l}: {s}");
            comments.push(s.to_string());
            i += 1;
        }
        out.push(SchemeFile {
            name: name.take(),
            comments: std::mem::take(&mut comments),
            n_points: labels.len(),
            rank,
            labels,
        });
    }
    Ok(out)
}

/// True when line `i` starts another matrix (with or without header).
fn looks_like_next_block(lines: &[(usize, &str)], i: usize) -> bool {
    let Some(first) = row(lines[i].1) else {
        return false;
    };
    let fits = |from: usize, n: usize| {
        lines.get(from..from + n).is_some_and(|ls| {
            ls.iter()
                .all(|&(_, l)| row(l).is_some_and(|r| r.len() == n))
        })
    };
    match first[..] {
        [n, _] if n > 0 && lines[i].1.contains(' ') && fits(i + 1, n) => true,
        _ => fits(i, first.len()),
    }
}
