use std::path::Path;

use clap::ValueEnum;
use twoabs::Caps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// Settings from a flat `key = value` file; command-line flags override them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub caps: Caps,
    pub format: Format,
    pub corpus: Option<String>,
    pub workers: usize,
    /// Reserved: every current operation is exhaustive.
    pub seed: Option<u64>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            caps: Caps::default(),
            format: Format::Table,
            corpus: None,
            workers: 1,
            seed: None,
        }
    }
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<CliConfig, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        CliConfig::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<CliConfig, String> {
        let mut config = CliConfig::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| format!("line {}: {what} `{value}` for `{key}`", n + 1);
            match key {
                "ring" | "cubic" | "lattice" => {
                    config.caps = config
                        .caps
                        .with_overrides(&format!("{key}={value}"))
                        .map_err(|_| bad("invalid cap"))?;
                }
                "caps" => {
                    config.caps = config.caps.with_overrides(value).map_err(|e| e.to_string())?;
                }
                "format" => {
                    config.format = Format::from_str(value, true).map_err(|_| bad("invalid format"))?;
                }
                "corpus" => config.corpus = Some(value.to_string()),
                "workers" => {
                    config.workers = value.parse().ok().filter(|&w| w > 0).ok_or_else(|| bad("invalid count"))?;
                }
                "seed" => config.seed = Some(value.parse().map_err(|_| bad("invalid seed"))?),
                _ => return Err(format!("line {}: unknown key `{key}`", n + 1)),
            }
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_key() {
        let c = CliConfig::parse(
            "# defaults\ncubic = 512\nlattice=32\nformat = json\ncorpus = zn:2..10\nworkers = 4\nseed = 7\n",
        )
        .unwrap();
        assert_eq!(c.caps.cubic, 512);
        assert_eq!(c.caps.lattice, 32);
        assert_eq!(c.format, Format::Json);
        assert_eq!(c.corpus.as_deref(), Some("zn:2..10"));
        assert_eq!(c.workers, 4);
        assert_eq!(c.seed, Some(7));
    }

    #[test]
    fn rejects_bad_values() {
        assert!(CliConfig::parse("cubic = 0").is_err());
        assert!(CliConfig::parse("format = yaml").is_err());
        assert!(CliConfig::parse("workers = 0").is_err());
        assert!(CliConfig::parse("colour = red").is_err());
        assert!(CliConfig::parse("no equals sign").is_err());
    }
}
