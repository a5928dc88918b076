//! Flat `key = value` configuration files.
//!
//! Keys are the long flag names (`tail-tol` or `tail_tol`).  The entries are
//! spliced into the argument list right after the subcommand, ahead of the
//! user's own flags, and every argument overrides earlier occurrences of
//! itself, so flags win over the file.  Keys belonging to other subcommands
//! are ignored, which lets one file serve several commands.

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use clap::{ArgAction, Command};

use crate::error::CliError;

pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Domain(format!("config line {}: expected key = value", lineno + 1)))?;
        let key = key.trim().replace('_', "-");
        if key.is_empty() {
            return Err(CliError::Domain(format!("config line {}: empty key", lineno + 1)));
        }
        entries.push((key, value.trim().trim_matches('"').to_string()));
    }
    Ok(entries)
}

fn config_path(args: &[OsString]) -> Option<OsString> {
    let mut iter = args.iter();
    while let Some(a) = iter.next() {
        if a == "--config" {
            return iter.next().cloned();
        }
        if let Some(rest) = a.to_str().and_then(|s| s.strip_prefix("--config=")) {
            return Some(rest.into());
        }
    }
    None
}

/// The argument list with the configuration file's entries inserted.
pub fn expand_config(cmd: &Command, args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = config_path(&args) else { return Ok(args) };
    let text = fs::read_to_string(Path::new(&path))
        .map_err(|source| CliError::Io { context: format!("reading config {}", path.to_string_lossy()), source })?;
    let entries = parse_config(&text)?;

    let Some((pos, sub)) = args
        .iter()
        .enumerate()
        .skip(1)
        .find_map(|(i, a)| cmd.get_subcommands().find(|s| a == s.get_name()).map(|s| (i, s)))
    else {
        return Ok(args);
    };
    let is_flag = |c: &Command, key: &str| {
        c.get_arguments().find(|a| a.get_long() == Some(key)).map(|a| matches!(a.get_action(), ArgAction::SetTrue))
    };
    let mut injected = Vec::new();
    for (key, value) in entries {
        if key == "config" {
            return Err(CliError::Domain("config files cannot include other config files".into()));
        }
        let flag = is_flag(sub, &key).or_else(|| is_flag(cmd, &key));
        match flag {
            Some(true) => match value.as_str() {
                "true" => injected.push(OsString::from(format!("--{key}"))),
                "false" => {}
                _ => return Err(CliError::Domain(format!("config key '{key}' expects true or false, got '{value}'"))),
            },
            Some(false) => injected.push(OsString::from(format!("--{key}={value}"))),
            None if cmd.get_subcommands().any(|s| is_flag(s, &key).is_some()) => {}
            None => return Err(CliError::Domain(format!("unknown config key '{key}'"))),
        }
    }
    let mut out = args[..=pos].to_vec();
    out.extend(injected);
    out.extend_from_slice(&args[pos + 1..]);
    Ok(out)
}
