//! `key=value` configuration files. Every sweep flag can be supplied here;
//! command-line flags win on conflict.

use std::collections::HashMap;

use crate::error::CliError;

pub fn parse_config(text: &str) -> Result<HashMap<String, String>, CliError> {
    let mut map = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Parse {
                line: idx + 1,
                message: format!("expected `key=value`, got `{line}`"),
            });
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}
