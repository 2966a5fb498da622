//! `key = value` configuration files.
//!
//! One assignment per line; `#` starts a comment. Unknown and repeated keys
//! are rejected with their line number.

use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::params::{AlgorithmType, ParamOverrides};

pub const KEYS: [&str; 14] = [
    "t",
    "x",
    "epsilon",
    "alpha",
    "v",
    "u1",
    "u2",
    "d0",
    "d1",
    "gamma",
    "tau",
    "window_override",
    "algorithm_type",
    "seed",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    pub t: Option<usize>,
    pub x: Option<u32>,
    pub overrides: ParamOverrides,
    pub algorithm_type: Option<AlgorithmType>,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        let mut seen: Vec<&str> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let loc = format!("{source}:{}", n + 1);
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(&loc, format!("expected 'key = value', found '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            let Some(&known) = KEYS.iter().find(|k| **k == key) else {
                return Err(Error::parse(&loc, format!("unknown key '{key}'")));
            };
            if seen.contains(&known) {
                return Err(Error::parse(&loc, format!("key '{key}' given twice")));
            }
            seen.push(known);
            cfg.set(known, value).map_err(|m| Error::parse(&loc, m))?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        fn num<T: FromStr>(key: &str, value: &str) -> std::result::Result<T, String>
        where
            T::Err: std::fmt::Display,
        {
            value.parse().map_err(|e| format!("bad value '{value}' for {key}: {e}"))
        }
        let o = &mut self.overrides;
        match key {
            "t" => self.t = Some(num(key, value)?),
            "x" => self.x = Some(num(key, value)?),
            "epsilon" => o.epsilon = Some(num(key, value)?),
            "alpha" => o.alpha = Some(num(key, value)?),
            "v" => o.v = Some(num(key, value)?),
            "u1" => o.u1 = Some(num(key, value)?),
            "u2" => o.u2 = Some(num(key, value)?),
            "d0" => o.d0 = Some(num(key, value)?),
            "d1" => o.d1 = Some(num(key, value)?),
            "gamma" => o.gamma = Some(num(key, value)?),
            "tau" => o.tau = Some(num(key, value)?),
            "window_override" => o.window_override = Some(num(key, value)?),
            "algorithm_type" => {
                self.algorithm_type = Some(value.parse().map_err(|e: Error| e.to_string())?)
            }
            "seed" => self.seed = Some(num(key, value)?),
            _ => unreachable!("key list and setter agree"),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_key() {
        let text = "t = 4\nx=10\nepsilon = 0.01 # small\nalpha = 0\nv = 8\nu1 = 2\nu2 = 3\n\
                    d0 = 2.5\nd1 = 2\ngamma = 0.1\ntau = 1.5\nwindow_override = 12\n\
                    algorithm_type = deterministic\nseed = 99\n";
        let c = RunConfig::parse(text, "c").unwrap();
        assert_eq!(c.t, Some(4));
        assert_eq!(c.overrides.window_override, Some(12));
        assert_eq!(c.overrides.epsilon, Some(0.01));
        assert_eq!(c.algorithm_type, Some(AlgorithmType::DeterministicSuperquadratic));
        assert_eq!(c.seed, Some(99));
    }

    #[test]
    fn unknown_key_reports_line() {
        let err = RunConfig::parse("t = 4\n\n# c\nrho0 = 0.2\n", "cfg").unwrap_err();
        assert!(err.to_string().contains("cfg:4"), "{err}");
        assert!(err.to_string().contains("rho0"), "{err}");
    }

    #[test]
    fn bad_lines() {
        assert!(RunConfig::parse("t 4\n", "c").is_err());
        assert!(RunConfig::parse("t = four\n", "c").is_err());
        assert!(RunConfig::parse("t = 4\nt = 5\n", "c").is_err());
        assert!(RunConfig::parse("algorithm_type = fast\n", "c").is_err());
    }
}
