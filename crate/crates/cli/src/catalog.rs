//! Algorithm catalog files: plain CSV with a `name,time,space` header,
//! UTF-8, `#` comment lines and blank lines allowed.

use a1score::{parse, AlgorithmProfile};

use crate::CliError;

/// One catalog row: a unique name plus time and space complexity text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub time: String,
    pub space: String,
}

impl CatalogEntry {
    /// Builds the parsed profile; catalog loading has already verified
    /// that both expressions parse.
    pub fn profile(&self) -> AlgorithmProfile {
        AlgorithmProfile::new(
            self.name.clone(),
            parse(&self.time).expect("validated at catalog load"),
            parse(&self.space).expect("validated at catalog load"),
        )
    }
}

/// Parses catalog text, reporting problems by line number.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CliError> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut saw_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields != ["name", "time", "space"] {
                return Err(CliError::input(format!(
                    "line {line_no}: expected header 'name,time,space', found '{line}'"
                )));
            }
            saw_header = true;
            continue;
        }
        let mut parts = line.splitn(3, ',');
        let name = parts.next().unwrap_or("").trim();
        let time = parts.next().unwrap_or("").trim();
        let space = parts.next().unwrap_or("").trim();
        if name.is_empty() || time.is_empty() || space.is_empty() {
            return Err(CliError::input(format!(
                "line {line_no}: expected 'name,time,space', found '{line}'"
            )));
        }
        if entries.iter().any(|e| e.name == name) {
            return Err(CliError::input(format!(
                "line {line_no}: duplicate name '{name}'"
            )));
        }
        if let Err(err) = parse(time) {
            return Err(CliError::input(format!(
                "line {line_no}: time complexity '{time}': {err}"
            )));
        }
        if let Err(err) = parse(space) {
            return Err(CliError::input(format!(
                "line {line_no}: space complexity '{space}': {err}"
            )));
        }
        entries.push(CatalogEntry {
            name: name.to_string(),
            time: time.to_string(),
            space: space.to_string(),
        });
    }
    if !saw_header {
        return Err(CliError::input(
            "catalog is empty: expected header 'name,time,space'",
        ));
    }
    if entries.len() < 2 {
        return Err(CliError::input(format!(
            "need at least 2 catalog entries, found {}",
            entries.len()
        )));
    }
    Ok(entries)
}
