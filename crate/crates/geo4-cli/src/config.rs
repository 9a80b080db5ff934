//! Optional `key=value` configuration file.
//!
//! Recognized keys: `coset_cap` (positive integer, default 100000) and
//! `fixtures_dir` (path; the `GEO4_FIXTURES` environment variable takes
//! precedence). Lines starting with `#` are comments; unknown keys are
//! rejected so typos surface early.

use std::path::PathBuf;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub coset_cap: usize,
    pub fixtures_dir: Option<PathBuf>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig { coset_cap: geo4::grouppres::DEFAULT_COSET_CAP, fixtures_dir: None }
    }
}

impl CliConfig {
    pub fn parse(text: &str) -> Result<CliConfig, String> {
        let mut config = CliConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("line {}: expected key=value", lineno + 1));
            };
            match key.trim() {
                "coset_cap" => {
                    config.coset_cap = value
                        .trim()
                        .parse()
                        .map_err(|_| format!("line {}: coset_cap must be an integer", lineno + 1))?;
                }
                "fixtures_dir" => config.fixtures_dir = Some(PathBuf::from(value.trim())),
                other => return Err(format!("line {}: unknown key `{other}`", lineno + 1)),
            }
        }
        Ok(config)
    }

    /// Effective fixtures directory: environment override, then the config
    /// file, then none (embedded defaults are used).
    pub fn fixtures_dir(&self) -> Option<PathBuf> {
        std::env::var_os("GEO4_FIXTURES").map(PathBuf::from).or_else(|| self.fixtures_dir.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let c = CliConfig::parse("# comment\ncoset_cap = 5000\nfixtures_dir = /tmp/fx\n").unwrap();
        assert_eq!(c.coset_cap, 5000);
        assert_eq!(c.fixtures_dir, Some(PathBuf::from("/tmp/fx")));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(CliConfig::parse("cosetcap = 5").is_err());
        assert!(CliConfig::parse("just a line").is_err());
    }
}
