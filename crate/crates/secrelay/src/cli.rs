//! Batch front-end: line-oriented configuration, sweep orchestration, CSV
//! and summary output.
//!
//! The configuration format is `key = value` lines grouped under
//! `[scenario]`, `[powers]`, `[simulation]` and `[output]` section headers,
//! with `#` comments. Every key has a built-in default taken from the
//! reference setup (K = 8, beta = 3, L = 10, 10^4 trials, 0:2:50 dB grid),
//! so an empty document is a valid configuration. See the crate README for
//! the full key list.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{ConfigError, Result, SimError};
use crate::montecarlo::{
    fit_high_power_slope, find_crossover, mean_over_window, run_sweep, PowerGrid, SweepOptions,
    SweepResult,
};
use crate::selection::SchemeId;
use crate::topology::{CustomNodes, NodePosition, Scenario};

/// Width of the high-power window (below the top grid point) used for the
/// summary's slope fit.
const SLOPE_WINDOW_DB: f64 = 20.0;
/// Width of the window used for the summary's plateau estimate.
const PLATEAU_WINDOW_DB: f64 = 10.0;

/// A fully validated simulation run description.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub scenario: Scenario,
    pub k: usize,
    pub beta: f64,
    /// Relay-to-jammer power ratio `L`.
    pub power_ratio: f64,
    pub schemes: Vec<SchemeId>,
    pub power_grid: PowerGrid,
    pub trials: u64,
    pub master_seed: u64,
    pub placement_seed: u64,
    /// Target secrecy rate for outage accounting; `None` disables the outage
    /// column.
    pub target_rate: Option<f64>,
    pub curves_path: PathBuf,
    pub summary_path: PathBuf,
    pub allow_equal_jammers: bool,
    pub reciprocal_channels: bool,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        Self {
            scenario: Scenario::SparseRandom,
            k: 8,
            beta: 3.0,
            power_ratio: 10.0,
            schemes: SchemeId::ALL.to_vec(),
            power_grid: PowerGrid::default_sweep(),
            trials: 10_000,
            master_seed: 1,
            placement_seed: 1,
            target_rate: None,
            curves_path: PathBuf::from("curves.csv"),
            summary_path: PathBuf::from("summary.txt"),
            allow_equal_jammers: true,
            reciprocal_channels: true,
        }
    }
}

impl SimulationConfig {
    /// Re-bases relative output paths onto `out_dir`.
    pub fn apply_out_dir(&mut self, out_dir: &Path) {
        if self.curves_path.is_relative() {
            self.curves_path = out_dir.join(&self.curves_path);
        }
        if self.summary_path.is_relative() {
            self.summary_path = out_dir.join(&self.summary_path);
        }
    }

    /// Serializes the configuration back into the document format;
    /// re-parsing the result yields an equal configuration.
    pub fn to_document(&self) -> String {
        let mut doc = String::new();
        let _ = writeln!(doc, "[scenario]");
        let _ = writeln!(doc, "scenario = {}", self.scenario.name());
        if let Scenario::Custom(nodes) = &self.scenario {
            let _ = writeln!(doc, "s1 = {}, {}", nodes.s1.x, nodes.s1.y);
            let _ = writeln!(doc, "s2 = {}, {}", nodes.s2.x, nodes.s2.y);
            let _ = writeln!(doc, "eve = {}, {}", nodes.eve.x, nodes.eve.y);
            for p in &nodes.intermediates {
                let _ = writeln!(doc, "intermediate = {}, {}", p.x, p.y);
            }
        } else {
            let _ = writeln!(doc, "k = {}", self.k);
        }
        let _ = writeln!(doc, "beta = {}", self.beta);
        let _ = writeln!(doc, "placement_seed = {}", self.placement_seed);
        let _ = writeln!(doc);
        let _ = writeln!(doc, "[powers]");
        let _ = writeln!(doc, "l = {}", self.power_ratio);
        let grid = self
            .power_grid
            .points()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(doc, "power_db = {grid}");
        let _ = writeln!(doc);
        let _ = writeln!(doc, "[simulation]");
        let schemes = self
            .schemes
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(doc, "schemes = {schemes}");
        let _ = writeln!(doc, "trials = {}", self.trials);
        let _ = writeln!(doc, "master_seed = {}", self.master_seed);
        if let Some(target) = self.target_rate {
            let _ = writeln!(doc, "target_rate = {target}");
        }
        let _ = writeln!(doc, "allow_equal_jammers = {}", self.allow_equal_jammers);
        let _ = writeln!(doc, "reciprocal_channels = {}", self.reciprocal_channels);
        let _ = writeln!(doc);
        let _ = writeln!(doc, "[output]");
        let _ = writeln!(doc, "curves = {}", self.curves_path.display());
        let _ = writeln!(doc, "summary = {}", self.summary_path.display());
        doc
    }
}

const SECTIONS: [&str; 4] = ["scenario", "powers", "simulation", "output"];

fn parse_coordinate(line: usize, key: &str, value: &str) -> std::result::Result<NodePosition, ConfigError> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(ConfigError::new(
            line,
            format!("{key} expects `x, y` coordinates, got `{value}`"),
        ));
    }
    let x: f64 = parts[0]
        .parse()
        .map_err(|_| ConfigError::new(line, format!("{key}: `{}` is not a number", parts[0])))?;
    let y: f64 = parts[1]
        .parse()
        .map_err(|_| ConfigError::new(line, format!("{key}: `{}` is not a number", parts[1])))?;
    if !x.is_finite() || !y.is_finite() {
        return Err(ConfigError::new(line, format!("{key}: coordinates must be finite")));
    }
    Ok(NodePosition::new(x, y))
}

fn parse_number<T: std::str::FromStr>(
    line: usize,
    key: &str,
    value: &str,
) -> std::result::Result<T, ConfigError> {
    value
        .parse()
        .map_err(|_| ConfigError::new(line, format!("{key}: cannot parse `{value}`")))
}

fn parse_bool(line: usize, key: &str, value: &str) -> std::result::Result<bool, ConfigError> {
    match value.to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" => Ok(true),
        "false" | "no" | "off" => Ok(false),
        _ => Err(ConfigError::new(
            line,
            format!("{key}: expected true or false, got `{value}`"),
        )),
    }
}

fn parse_grid(line: usize, value: &str) -> std::result::Result<PowerGrid, ConfigError> {
    let build = |points: std::result::Result<PowerGrid, SimError>| {
        points.map_err(|e| ConfigError::new(line, format!("power_db: {e}")))
    };
    if value.contains(':') {
        let parts: Vec<&str> = value.split(':').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(ConfigError::new(
                line,
                format!("power_db range expects `start:step:stop`, got `{value}`"),
            ));
        }
        let start: f64 = parse_number(line, "power_db", parts[0])?;
        let step: f64 = parse_number(line, "power_db", parts[1])?;
        let stop: f64 = parse_number(line, "power_db", parts[2])?;
        build(PowerGrid::range_db(start, step, stop))
    } else {
        let points = value
            .split(',')
            .map(|p| parse_number(line, "power_db", p.trim()))
            .collect::<std::result::Result<Vec<f64>, _>>()?;
        build(PowerGrid::new(points))
    }
}

/// Parses a configuration document, applying defaults for omitted keys.
///
/// Diagnostics carry the 1-based line number of the offending entry.
pub fn parse_config(text: &str) -> std::result::Result<SimulationConfig, ConfigError> {
    let mut config = SimulationConfig::default();
    let mut seen: Vec<&str> = Vec::new();
    let mut scenario_name: Option<(usize, String)> = None;
    let mut k: Option<(usize, usize)> = None;
    let mut s1: Option<NodePosition> = None;
    let mut s2: Option<NodePosition> = None;
    let mut eve: Option<NodePosition> = None;
    let mut intermediates: Vec<NodePosition> = Vec::new();
    let mut first_coord_line: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        if let Some(section) = content.strip_prefix('[') {
            let section = section
                .strip_suffix(']')
                .ok_or_else(|| ConfigError::new(line, "unterminated section header"))?
                .trim()
                .to_ascii_lowercase();
            if !SECTIONS.contains(&section.as_str()) {
                return Err(ConfigError::new(
                    line,
                    format!("unknown section [{section}]"),
                ));
            }
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError::new(line, format!("expected `key = value`, got `{content}`")))?;
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim();
        if value.is_empty() {
            return Err(ConfigError::new(line, format!("{key}: empty value")));
        }
        let duplicate = |name: &'static str, seen: &mut Vec<&str>| {
            if seen.contains(&name) {
                Err(ConfigError::new(line, format!("duplicate key `{name}`")))
            } else {
                seen.push(name);
                Ok(())
            }
        };
        match key.as_str() {
            "scenario" => {
                duplicate("scenario", &mut seen)?;
                scenario_name = Some((line, value.to_ascii_lowercase()));
            }
            "k" => {
                duplicate("k", &mut seen)?;
                let v: usize = parse_number(line, "k", value)?;
                if v == 0 {
                    return Err(ConfigError::new(line, "k must be at least 1"));
                }
                k = Some((line, v));
            }
            "beta" => {
                duplicate("beta", &mut seen)?;
                let v: f64 = parse_number(line, "beta", value)?;
                if !(v > 0.0) || !v.is_finite() {
                    return Err(ConfigError::new(
                        line,
                        format!("beta must be a positive finite number, got {value}"),
                    ));
                }
                config.beta = v;
            }
            "placement_seed" => {
                duplicate("placement_seed", &mut seen)?;
                config.placement_seed = parse_number(line, "placement_seed", value)?;
            }
            "s1" | "s2" | "eve" => {
                duplicate(
                    match key.as_str() {
                        "s1" => "s1",
                        "s2" => "s2",
                        _ => "eve",
                    },
                    &mut seen,
                )?;
                let pos = parse_coordinate(line, &key, value)?;
                first_coord_line.get_or_insert(line);
                match key.as_str() {
                    "s1" => s1 = Some(pos),
                    "s2" => s2 = Some(pos),
                    _ => eve = Some(pos),
                }
            }
            "intermediate" => {
                first_coord_line.get_or_insert(line);
                intermediates.push(parse_coordinate(line, "intermediate", value)?);
            }
            "l" => {
                duplicate("l", &mut seen)?;
                let v: f64 = parse_number(line, "l", value)?;
                if !(v >= 1.0) {
                    return Err(ConfigError::new(
                        line,
                        format!("l must satisfy L >= 1, got {value}"),
                    ));
                }
                config.power_ratio = v;
            }
            "power_db" => {
                duplicate("power_db", &mut seen)?;
                config.power_grid = parse_grid(line, value)?;
            }
            "schemes" => {
                duplicate("schemes", &mut seen)?;
                let schemes = value
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<SchemeId>()
                            .map_err(|e| ConfigError::new(line, e))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                if schemes.is_empty() {
                    return Err(ConfigError::new(line, "schemes list is empty"));
                }
                config.schemes = schemes;
            }
            "trials" => {
                duplicate("trials", &mut seen)?;
                let v: u64 = parse_number(line, "trials", value)?;
                if v == 0 {
                    return Err(ConfigError::new(line, "trials must be at least 1"));
                }
                config.trials = v;
            }
            "master_seed" => {
                duplicate("master_seed", &mut seen)?;
                config.master_seed = parse_number(line, "master_seed", value)?;
            }
            "target_rate" => {
                duplicate("target_rate", &mut seen)?;
                if value.eq_ignore_ascii_case("none") {
                    config.target_rate = None;
                } else {
                    let v: f64 = parse_number(line, "target_rate", value)?;
                    if !(v >= 0.0) {
                        return Err(ConfigError::new(
                            line,
                            format!("target_rate must be nonnegative, got {value}"),
                        ));
                    }
                    config.target_rate = Some(v);
                }
            }
            "allow_equal_jammers" => {
                duplicate("allow_equal_jammers", &mut seen)?;
                config.allow_equal_jammers = parse_bool(line, "allow_equal_jammers", value)?;
            }
            "reciprocal_channels" => {
                duplicate("reciprocal_channels", &mut seen)?;
                config.reciprocal_channels = parse_bool(line, "reciprocal_channels", value)?;
            }
            "curves" => {
                duplicate("curves", &mut seen)?;
                config.curves_path = PathBuf::from(value);
            }
            "summary" => {
                duplicate("summary", &mut seen)?;
                config.summary_path = PathBuf::from(value);
            }
            other => {
                return Err(ConfigError::new(line, format!("unknown key `{other}`")));
            }
        }
    }

    // resolve the scenario and cross-validate the coordinate keys
    let is_custom = match &scenario_name {
        Some((line, name)) if name == "custom" => {
            let _ = line;
            true
        }
        Some((line, name)) => {
            config.scenario = name
                .parse::<Scenario>()
                .map_err(|e| ConfigError::new(*line, e))?;
            false
        }
        None => false,
    };
    if is_custom {
        let missing: Vec<&str> = [("s1", s1.is_none()), ("s2", s2.is_none()), ("eve", eve.is_none())]
            .iter()
            .filter(|(_, m)| *m)
            .map(|(n, _)| *n)
            .collect();
        if !missing.is_empty() {
            return Err(ConfigError::general(format!(
                "custom scenario is missing coordinates for: {}",
                missing.join(", ")
            )));
        }
        if intermediates.is_empty() {
            return Err(ConfigError::general(
                "custom scenario needs at least one `intermediate = x, y` line",
            ));
        }
        if let Some((line, v)) = k {
            if v != intermediates.len() {
                return Err(ConfigError::new(
                    line,
                    format!(
                        "k = {v} does not match the {} intermediate coordinate lines",
                        intermediates.len()
                    ),
                ));
            }
        }
        config.k = intermediates.len();
        config.scenario = Scenario::Custom(CustomNodes {
            s1: s1.expect("checked above"),
            s2: s2.expect("checked above"),
            eve: eve.expect("checked above"),
            intermediates,
        });
    } else {
        if let Some(line) = first_coord_line {
            return Err(ConfigError::new(
                line,
                "coordinate keys (s1, s2, eve, intermediate) require `scenario = custom`",
            ));
        }
        if let Some((_, v)) = k {
            config.k = v;
        }
    }
    Ok(config)
}

/// What [`run`] produced.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub curves_path: PathBuf,
    pub summary_path: PathBuf,
    /// Schemes that could not run on this topology, with the reason.
    pub scheme_errors: Vec<(SchemeId, String)>,
}

fn format_csv(sweeps: &[SweepResult]) -> String {
    let mut out = String::from("scheme,ps_db,ergodic_rate_bpcu,rate_stderr,outage_prob,trials\n");
    for sweep in sweeps {
        for point in &sweep.points {
            let outage = match point.outage_prob {
                Some(p) => p.to_string(),
                None => String::new(),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                sweep.scheme, point.ps_db, point.ergodic_rate, point.rate_stderr, outage,
                sweep.trials
            );
        }
    }
    out
}

fn format_summary(
    config: &SimulationConfig,
    sweeps: &[SweepResult],
    errors: &[(SchemeId, String)],
) -> String {
    let grid = config.power_grid.points();
    let top = *grid.last().expect("grid is nonempty");
    let bottom = grid[0];
    let slope_window = ((top - SLOPE_WINDOW_DB).max(bottom), top);
    let plateau_window = ((top - PLATEAU_WINDOW_DB).max(bottom), top);

    let mut out = String::new();
    let _ = writeln!(out, "secrelay run summary");
    let _ = writeln!(out, "====================");
    let _ = writeln!(out);
    let _ = writeln!(out, "configuration:");
    for line in config.to_document().lines() {
        let _ = writeln!(out, "    {line}");
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "per-scheme metrics (slope over {:.0}-{:.0} dB, plateau mean over {:.0}-{:.0} dB):",
        slope_window.0, slope_window.1, plateau_window.0, plateau_window.1
    );
    for sweep in sweeps {
        let slope = match fit_high_power_slope(sweep, slope_window) {
            Ok(s) => format!("{s:.4} BPCU/dB"),
            Err(_) => "n/a".to_string(),
        };
        let plateau = match mean_over_window(sweep, plateau_window) {
            Ok(p) => format!("{p:.4} BPCU"),
            Err(_) => "n/a".to_string(),
        };
        let _ = writeln!(out, "    {:<9} slope {slope:<16} plateau {plateau}", sweep.scheme);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "crossover points (first sign change of the rate difference):");
    if sweeps.len() < 2 {
        let _ = writeln!(out, "    n/a (fewer than two schemes)");
    }
    for (i, a) in sweeps.iter().enumerate() {
        for b in &sweeps[i + 1..] {
            let text = match find_crossover(a, b) {
                Ok(Some(db)) => format!("{db:.2} dB"),
                Ok(None) => "none".to_string(),
                Err(_) => "n/a".to_string(),
            };
            let _ = writeln!(out, "    {} vs {}: {text}", a.scheme, b.scheme);
        }
    }
    if !errors.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "schemes skipped:");
        for (scheme, message) in errors {
            let _ = writeln!(out, "    {scheme}: {message}");
        }
    }
    out
}

/// Runs every configured scheme and writes the CSV and summary artifacts.
///
/// A scheme that cannot run on the configured topology (too few intermediate
/// nodes) is reported in the returned [`RunReport`] and skipped; the
/// remaining schemes still run and their rows are still written.
pub fn run(config: &SimulationConfig) -> Result<RunReport> {
    let topology = config
        .scenario
        .instantiate(config.k, config.placement_seed)?
        .with_path_loss_exponent(config.beta);
    let violations = topology.validate();
    if !violations.is_empty() {
        let text = violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(SimError::InvalidTopology(text));
    }
    let options = SweepOptions {
        trials: config.trials,
        master_seed: config.master_seed,
        power_ratio: config.power_ratio,
        target_rate: config.target_rate,
        allow_equal_jammers: config.allow_equal_jammers,
        reciprocal_channels: config.reciprocal_channels,
    };
    let mut sweeps = Vec::new();
    let mut scheme_errors = Vec::new();
    for &scheme in &config.schemes {
        match run_sweep(scheme, &topology, &config.power_grid, &options) {
            Ok(sweep) => sweeps.push(sweep),
            Err(err @ SimError::InsufficientIntermediates { .. }) => {
                scheme_errors.push((scheme, err.to_string()));
            }
            Err(other) => return Err(other),
        }
    }
    if let Some(parent) = config.curves_path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    if let Some(parent) = config.summary_path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(&config.curves_path, format_csv(&sweeps))?;
    fs::write(
        &config.summary_path,
        format_summary(config, &sweeps, &scheme_errors),
    )?;
    Ok(RunReport {
        curves_path: config.curves_path.clone(),
        summary_path: config.summary_path.clone(),
        scheme_errors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_yields_the_reference_defaults() {
        let config = parse_config("").unwrap();
        assert_eq!(config, SimulationConfig::default());
        assert_eq!(config.k, 8);
        assert_eq!(config.beta, 3.0);
        assert_eq!(config.power_ratio, 10.0);
        assert_eq!(config.trials, 10_000);
        assert_eq!(config.power_grid.len(), 26);
        assert_eq!(config.schemes.len(), 10);
    }

    #[test]
    fn out_of_range_ratio_is_rejected_with_line_number() {
        let err = parse_config("[powers]\nl = 0.5\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("L >= 1"), "{}", err.message);
    }

    #[test]
    fn scheme_list_parses() {
        let config = parse_config("schemes = OSW, OS, OS-MSISR\n").unwrap();
        assert_eq!(
            config.schemes,
            vec![SchemeId::Osw, SchemeId::Os, SchemeId::OsMsisr]
        );
    }

    #[test]
    fn unknown_key_and_section_are_rejected() {
        assert_eq!(parse_config("bogus = 1\n").unwrap_err().line, 1);
        assert_eq!(parse_config("\n[bogus]\n").unwrap_err().line, 2);
    }

    #[test]
    fn comments_and_sections_are_accepted() {
        let doc = "# full doc\n[scenario]\nscenario = eve-near-s1 # inline comment\nk = 4\n\n[simulation]\ntrials = 50\n";
        let config = parse_config(doc).unwrap();
        assert_eq!(config.scenario, Scenario::EveNearS1);
        assert_eq!(config.k, 4);
        assert_eq!(config.trials, 50);
    }

    #[test]
    fn custom_scenario_requires_all_coordinates() {
        let err = parse_config("scenario = custom\ns1 = 0,1\ns2 = 1,1\n").unwrap_err();
        assert!(err.message.contains("eve"), "{}", err.message);

        let doc = "scenario = custom\ns1 = 0,1\ns2 = 1,1\neve = 0.5,0\nintermediate = 0.5,0.5\n";
        let config = parse_config(doc).unwrap();
        assert_eq!(config.k, 1);
        assert!(matches!(config.scenario, Scenario::Custom(_)));
    }

    #[test]
    fn coordinates_without_custom_scenario_are_rejected() {
        let err = parse_config("s1 = 0,1\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("custom"));
    }

    #[test]
    fn custom_k_mismatch_is_rejected() {
        let doc = "scenario = custom\nk = 3\ns1 = 0,1\ns2 = 1,1\neve = 0.5,0\nintermediate = 0.5,0.5\n";
        let err = parse_config(doc).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn duplicate_keys_are_rejected() {
        let err = parse_config("k = 3\nk = 4\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("duplicate"));
    }

    #[test]
    fn grid_forms_parse() {
        let range = parse_config("power_db = 10:5:30\n").unwrap();
        assert_eq!(range.power_grid.points(), &[10.0, 15.0, 20.0, 25.0, 30.0]);
        let list = parse_config("power_db = 0, 16, 40\n").unwrap();
        assert_eq!(list.power_grid.points(), &[0.0, 16.0, 40.0]);
        assert!(parse_config("power_db = 10:0:30\n").is_err());
        assert!(parse_config("power_db = 30, 10\n").is_err());
    }

    #[test]
    fn target_rate_parses_and_validates() {
        assert_eq!(parse_config("target_rate = 0.2\n").unwrap().target_rate, Some(0.2));
        assert_eq!(parse_config("target_rate = none\n").unwrap().target_rate, None);
        assert!(parse_config("target_rate = -1\n").is_err());
    }

    #[test]
    fn config_round_trips_through_the_document_form() {
        let mut config = SimulationConfig::default();
        config.schemes = vec![SchemeId::Osw, SchemeId::Ss];
        config.trials = 123;
        config.target_rate = Some(0.2);
        config.beta = 3.5;
        let reparsed = parse_config(&config.to_document()).unwrap();
        assert_eq!(reparsed, config);

        let custom = SimulationConfig {
            scenario: Scenario::Custom(CustomNodes {
                s1: NodePosition::new(0.0, 1.0),
                s2: NodePosition::new(1.0, 1.0),
                eve: NodePosition::new(0.5, 0.0),
                intermediates: vec![NodePosition::new(0.25, 0.5), NodePosition::new(0.75, 0.5)],
            }),
            k: 2,
            ..SimulationConfig::default()
        };
        let reparsed = parse_config(&custom.to_document()).unwrap();
        assert_eq!(reparsed, custom);
    }
}
