//! Flat key-value run configuration.
//!
//! Values are ordinary frequencies (Hz) at this boundary and are converted to
//! angular frequencies (rad/s) internally. Recognized unit suffixes:
//! Hz, kHz, MHz, GHz for frequency-like keys; mK, K for the temperature.
//! tau and beta are dimensionless (beta in radians).

use crate::constants::TWO_PI;
use crate::error::{Error, Result};
use crate::model::SystemParams;

/// Parsed run configuration: the full parameter set in internal units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub params: SystemParams,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { params: SystemParams::defaults() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KeyKind {
    Frequency,
    Temperature,
    Plain,
}

const KEYS: [(&str, KeyKind); 14] = [
    ("omega_a", KeyKind::Frequency),
    ("omega_b", KeyKind::Frequency),
    ("omega_m", KeyKind::Frequency),
    ("gamma_a", KeyKind::Frequency),
    ("gamma_b", KeyKind::Frequency),
    ("gamma_m", KeyKind::Frequency),
    ("g_ga", KeyKind::Frequency),
    ("g_gb_eff", KeyKind::Frequency),
    ("xi", KeyKind::Frequency),
    ("delta_a", KeyKind::Frequency),
    ("delta_b_tilde", KeyKind::Frequency),
    ("T", KeyKind::Temperature),
    ("tau", KeyKind::Plain),
    ("beta", KeyKind::Plain),
];

fn parse_value(raw: &str, kind: KeyKind, line: usize, key: &str) -> Result<f64> {
    let raw = raw.trim();
    let (number, multiplier) = match kind {
        KeyKind::Frequency => {
            let suffixes = [("GHz", 1e9), ("MHz", 1e6), ("kHz", 1e3), ("Hz", 1.0)];
            let mut found = (raw, 1.0);
            for (suffix, mult) in suffixes {
                if let Some(stripped) = raw.strip_suffix(suffix) {
                    found = (stripped, mult);
                    break;
                }
            }
            found
        }
        KeyKind::Temperature => {
            if let Some(stripped) = raw.strip_suffix("mK") {
                (stripped, 1e-3)
            } else if let Some(stripped) = raw.strip_suffix('K') {
                (stripped, 1.0)
            } else {
                (raw, 1.0)
            }
        }
        KeyKind::Plain => (raw, 1.0),
    };
    let number = number.trim();
    if kind == KeyKind::Plain && number != raw {
        return Err(Error::config(line, format!("key '{key}' takes a bare number, got '{raw}'")));
    }
    let value: f64 = number.parse().map_err(|_| {
        Error::config(line, format!("malformed numeral '{raw}' for key '{key}'"))
    })?;
    if !value.is_finite() {
        return Err(Error::config(line, format!("non-finite value for key '{key}'")));
    }
    Ok(value * multiplier)
}

/// Parse a configuration document. Missing keys fall back to the reference
/// defaults; unknown keys are rejected with their line number.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut config = RunConfig::default();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::config(line_no, format!("expected 'key = value', got '{line}'"))
        })?;
        let key = key.trim();
        let kind = KEYS
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, kind)| *kind)
            .ok_or_else(|| Error::config(line_no, format!("unknown key '{key}'")))?;
        let parsed = parse_value(value, kind, line_no, key)?;
        let p = &mut config.params;
        match key {
            "omega_a" => p.omega_a = TWO_PI * parsed,
            "omega_b" => p.omega_b = TWO_PI * parsed,
            "omega_m" => p.omega_m = TWO_PI * parsed,
            "gamma_a" => p.gamma_a = TWO_PI * parsed,
            "gamma_b" => p.gamma_b = TWO_PI * parsed,
            "gamma_m" => p.gamma_m = TWO_PI * parsed,
            "g_ga" => p.g_ga = TWO_PI * parsed,
            "g_gb_eff" => p.g_gb_eff = TWO_PI * parsed,
            "xi" => p.xi = TWO_PI * parsed,
            "delta_a" => p.delta_a = TWO_PI * parsed,
            "delta_b_tilde" => p.delta_b_tilde = TWO_PI * parsed,
            "T" => p.temperature = parsed,
            "tau" => p.tau = parsed,
            "beta" => p.beta = parsed,
            _ => unreachable!(),
        }
        if key == "tau" && !(0.0..=1.0).contains(&parsed) {
            return Err(Error::config(line_no, format!("tau must be in [0, 1], got {parsed}")));
        }
    }
    config.params.validate().map_err(|e| match e {
        Error::Domain(msg) => Error::config(0, msg),
        other => other,
    })?;
    Ok(config)
}
