use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{decode_graph6, Graph};

/// A starting graph and the name it is reported under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub name: String,
    pub graph: Graph,
}

impl Seed {
    pub fn new(name: impl Into<String>, graph: Graph) -> Seed {
        Seed {
            name: name.into(),
            graph,
        }
    }
}

/// A known non-existence result: no (k,g)-graph of order n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Citation {
    pub k: usize,
    pub g: usize,
    pub n: usize,
    pub reason: String,
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

/// Graphs of a graph6 file, one per non-empty line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode_graph6)
        .collect()
}

/// Every graph in `dir/k{K}g{G}/*.g6`, files in name order, named
/// `file.g6:line`. A missing subdirectory yields no seeds.
pub fn load_seeds(dir: &Path, k: usize, g: usize) -> Result<Vec<Seed>> {
    let sub = dir.join(format!("k{k}g{g}"));
    if !sub.is_dir() {
        return Ok(Vec::new());
    }
    let mut files: Vec<_> = fs::read_dir(&sub)
        .map_err(|e| io_error(&sub, e))?
        .map(|entry| entry.map(|e| e.path()).map_err(|e| io_error(&sub, e)))
        .collect::<Result<Vec<_>>>()?;
    files.retain(|p| p.extension().is_some_and(|x| x == "g6"));
    files.sort();
    let mut seeds = Vec::new();
    for path in files {
        let name = path
            .file_name()
            .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
        for (i, graph) in read_graph6_file(&path)?.into_iter().enumerate() {
            seeds.push(Seed::new(format!("{name}:{}", i + 1), graph));
        }
    }
    Ok(seeds)
}

/// Parses lines `k g n reason...`; blank lines and `#` comments are skipped.
pub fn parse_citations(text: &str) -> Result<Vec<Citation>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::ParameterOutOfRange(format!("citation line {}: {line:?}", i + 1));
        let mut parts = line.splitn(4, char::is_whitespace);
        let mut num =
            || -> Result<usize> { parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad) };
        let (k, g, n) = (num()?, num()?, num()?);
        let reason = parts.next().unwrap_or("").trim().to_string();
        if reason.is_empty() {
            return Err(bad());
        }
        out.push(Citation { k, g, n, reason });
    }
    Ok(out)
}

pub fn read_citations(path: &Path) -> Result<Vec<Citation>> {
    parse_citations(&fs::read_to_string(path).map_err(|e| io_error(path, e))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn citations() {
        let text = "# known holes\n3 8 32 no (3,8)-graph of order 32\n\n4 4 9 exhaustive search\n";
        let c = parse_citations(text).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!((c[0].k, c[0].g, c[0].n), (3, 8, 32));
        assert_eq!(c[1].reason, "exhaustive search");
        assert!(parse_citations("3 8 x why").is_err());
        assert!(parse_citations("3 8 32").is_err());
    }

    #[test]
    fn missing_seed_dir_is_empty() {
        let seeds = load_seeds(Path::new("/nonexistent/seeds"), 3, 5).unwrap();
        assert!(seeds.is_empty());
    }
}
