use std::fs;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;

pub const MIN_SIZE_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (plain|json|csv)")),
        }
    }
}

/// Settings shared by every subcommand. Read-only once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub size_cap: usize,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { size_cap: schurweyl::oracle::DEFAULT_SIZE_CAP, format: Format::Plain, seed: 0 }
    }
}

impl RunConfig {
    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        self.apply_str(&text)
    }

    pub fn apply_str(&mut self, text: &str) -> Result<(), String> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", lineno + 1))?;
            let value = value.trim();
            let bad = |what: &str| format!("config line {}: bad {what} {value:?}", lineno + 1);
            match key.trim() {
                "size_cap" => self.size_cap = value.parse().map_err(|_| bad("size_cap"))?,
                "output_format" | "format" => self.format = value.parse().map_err(|_| bad("format"))?,
                "seed" => self.seed = value.parse().map_err(|_| bad("seed"))?,
                other => return Err(format!("config line {}: unknown key {other:?}", lineno + 1)),
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.size_cap < MIN_SIZE_CAP {
            return Err(format!("size cap must be at least {MIN_SIZE_CAP}, got {}", self.size_cap));
        }
        Ok(())
    }
}
