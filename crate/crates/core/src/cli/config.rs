//! Plain-text `key = value` files whose keys mirror the long flag names.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

use super::CliError;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: HashMap<String, String>,
}

fn normalize_key(key: &str) -> String {
    key.trim()
        .trim_start_matches("--")
        .replace('_', "-")
        .to_ascii_lowercase()
}

impl ConfigFile {
    /// Parses `text`; blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config line {}: expected `key = value`, got `{line}`",
                    idx + 1
                )));
            };
            let key = normalize_key(key);
            if key.is_empty() {
                return Err(CliError::Usage(format!("config line {}: empty key", idx + 1)));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(ConfigFile { values })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(&normalize_key(key)).map(String::as_str)
    }

    /// The flag value when given, otherwise the parsed config entry.
    pub fn pick<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T: FromStr,
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(text) => text
                .parse()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config key `{key}`: cannot parse `{text}`: {e}"))),
        }
    }
}
