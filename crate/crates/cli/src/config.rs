//! Runtime configuration: defaults, overridden by a JSON config file,
//! overridden by command-line flags.

use std::path::Path;

use clap::ValueEnum;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub truncation_order: usize,
    pub tableau_cap: usize,
    pub output_format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            truncation_order: 8,
            tableau_cap: 1_000_000,
            output_format: Format::Json,
        }
    }
}

impl Config {
    /// Resolve the configuration: start from defaults, apply the config file
    /// (explicit flag first, then $SUPERYANG_CONFIG), then flag overrides.
    pub fn load(flag_path: Option<&Path>, format: Option<Format>) -> Result<Self, String> {
        let mut config = Config::default();
        let env_path = std::env::var_os("SUPERYANG_CONFIG").map(std::path::PathBuf::from);
        let path = flag_path.map(Path::to_path_buf).or(env_path);
        if let Some(path) = path {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read config {}: {}", path.display(), e))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| format!("invalid config {}: {}", path.display(), e))?;
            let obj = value
                .as_object()
                .ok_or_else(|| format!("config {} must be a JSON object", path.display()))?;
            for (key, v) in obj {
                match key.as_str() {
                    "truncation_order" => {
                        config.truncation_order = v
                            .as_u64()
                            .ok_or("truncation_order must be a nonnegative integer")?
                            as usize;
                    }
                    "tableau_cap" => {
                        let cap = v.as_u64().ok_or("tableau_cap must be a positive integer")?;
                        if cap == 0 {
                            return Err("tableau_cap must be at least 1".to_string());
                        }
                        config.tableau_cap = cap as usize;
                    }
                    "output_format" => {
                        config.output_format = match v.as_str() {
                            Some("json") => Format::Json,
                            Some("table") => Format::Table,
                            _ => return Err("output_format must be \"json\" or \"table\"".into()),
                        };
                    }
                    other => return Err(format!("unknown config key {:?}", other)),
                }
            }
        }
        if let Some(f) = format {
            config.output_format = f;
        }
        Ok(config)
    }
}
