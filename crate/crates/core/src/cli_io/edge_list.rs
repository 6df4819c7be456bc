use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::models::EdgeList;

/// Parses whitespace-separated `u v` pairs. Lines starting with `#` and blank
/// lines are skipped. The vertex count is one more than the largest id, or
/// the `# vertices: n` header value written by this tool if that is larger.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<EdgeList> {
    let mut edges = Vec::new();
    let mut max_id = 0u64;
    let mut declared = 0u64;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if edges.is_empty() {
                if let Some(n) = comment.trim().strip_prefix("vertices: ") {
                    declared = n.trim().parse().unwrap_or(0);
                }
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: idx + 1,
            content: line.clone(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let u: u64 = a.parse().map_err(|_| malformed())?;
        let v: u64 = b.parse().map_err(|_| malformed())?;
        max_id = max_id.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::EmptyInput);
    }
    EdgeList::new(declared.max(max_id + 1), edges)
}

pub fn read_edge_list_file(path: &Path) -> Result<EdgeList> {
    parse_edge_list(BufReader::new(File::open(path)?))
}

/// Writes the provenance header followed by one `u<TAB>v` line per edge.
pub fn write_edge_list<W: Write>(mut w: W, header: &Provenance, edges: &EdgeList) -> Result<()> {
    header.write(&mut w)?;
    let mut line = String::with_capacity(48);
    for &(u, v) in edges.edges() {
        use std::fmt::Write as _;
        line.clear();
        let _ = writeln!(line, "{u}\t{v}");
        w.write_all(line.as_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Ordered `key: value` records written as `#` comment lines ahead of the
/// edges, enough to regenerate the file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    fields: Vec<(String, String)>,
}

impl Provenance {
    pub const TOOL: &'static str = concat!("krongraph ", env!("CARGO_PKG_VERSION"));

    pub fn new() -> Self {
        let mut p = Provenance::default();
        p.push("tool", Provenance::TOOL);
        p
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn as_map(&self) -> BTreeMap<&str, &str> {
        self.fields
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_str()))
            .collect()
    }

    pub fn write<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        for (k, v) in &self.fields {
            writeln!(w, "# {k}: {v}")?;
        }
        Ok(())
    }

    /// Reads the leading `# key: value` lines of an edge-list file.
    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut p = Provenance::default();
        for line in reader.lines() {
            let line = line?;
            let Some(rest) = line.strip_prefix('#') else {
                break;
            };
            if let Some((k, v)) = rest.trim().split_once(": ") {
                p.fields.push((k.to_string(), v.to_string()));
            }
        }
        Ok(p)
    }
}
