//! Ergodic secrecy rate and secrecy outage sweeps over transmit power, plus
//! slope fitting and crossover detection on the resulting curves.
//!
//! Trial `t` always draws its channels from the sub-stream derived from
//! `(master_seed, t)`, so different schemes and power points see identical
//! fading (common random numbers). This makes scheme comparisons sharp:
//! per-realization dominance relations carry over to the curves exactly.
//! Trials run in parallel; aggregation is a fixed-order reduction, so the
//! results are bit-identical for any worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::channel::{average_gain_view, draw_realization_opts};
use crate::error::{Result, SimError};
use crate::selection::{run_scheme, SchemeId};
use crate::sinr::PowerConfig;
use crate::topology::NetworkTopology;

/// Strictly increasing source-power grid in dB over unit noise.
///
/// The relay always transmits at the source power; jammers at `P_R / L`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerGrid(Vec<f64>);

impl PowerGrid {
    pub fn new(points_db: Vec<f64>) -> Result<Self> {
        if points_db.is_empty() {
            return Err(SimError::InvalidGrid("grid is empty".into()));
        }
        if points_db.iter().any(|p| !p.is_finite()) {
            return Err(SimError::InvalidGrid("grid contains non-finite points".into()));
        }
        if points_db.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SimError::InvalidGrid(
                "grid points must be strictly increasing".into(),
            ));
        }
        Ok(Self(points_db))
    }

    /// Inclusive range `start:step:stop` in dB.
    pub fn range_db(start: f64, step: f64, stop: f64) -> Result<Self> {
        if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
            return Err(SimError::InvalidGrid(format!(
                "invalid range {start}:{step}:{stop}"
            )));
        }
        let count = ((stop - start) / step).floor() as usize + 1;
        Self::new((0..count).map(|i| start + step * i as f64).collect())
    }

    /// The default sweep: 0 to 50 dB in 2 dB steps.
    pub fn default_sweep() -> Self {
        Self::range_db(0.0, 2.0, 50.0).expect("static range is valid")
    }

    pub fn points(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One power point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub ps_db: f64,
    /// Mean sum secrecy rate over the trials, bits per channel use.
    pub ergodic_rate: f64,
    /// Standard error of the mean.
    pub rate_stderr: f64,
    /// Fraction of trials whose sum rate fell below the target, if one was
    /// requested.
    pub outage_prob: Option<f64>,
}

/// A full rate (and optionally outage) curve for one scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub scheme: SchemeId,
    pub points: Vec<SweepPoint>,
    pub trials: u64,
}

/// Knobs for [`run_sweep`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub trials: u64,
    pub master_seed: u64,
    /// Relay-to-jammer power ratio `L`.
    pub power_ratio: f64,
    /// Target secrecy rate for outage accounting, BPCU.
    pub target_rate: Option<f64>,
    pub allow_equal_jammers: bool,
    pub reciprocal_channels: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            trials: 10_000,
            master_seed: 1,
            power_ratio: 10.0,
            target_rate: None,
            allow_equal_jammers: true,
            reciprocal_channels: true,
        }
    }
}

/// The sub-stream for one trial: every consumer of `(master_seed, trial)`
/// sees the same fading, independent of scheme, power point or worker count.
pub fn trial_rng(master_seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(trial);
    rng
}

/// Sweeps one scheme across the power grid.
pub fn run_sweep(
    scheme: SchemeId,
    topology: &NetworkTopology,
    grid: &PowerGrid,
    options: &SweepOptions,
) -> Result<SweepResult> {
    if options.trials == 0 {
        return Err(SimError::ZeroTrials);
    }
    let violations = topology.validate();
    if !violations.is_empty() {
        let text = violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(SimError::InvalidTopology(text));
    }
    let required = if scheme.min_intermediates() > 1 && !options.allow_equal_jammers {
        3
    } else {
        scheme.min_intermediates()
    };
    let k = topology.intermediate_count();
    if k < required {
        return Err(SimError::InsufficientIntermediates {
            required,
            available: k,
        });
    }
    let avg = average_gain_view(topology)?;
    let powers: Vec<PowerConfig> = grid
        .points()
        .iter()
        .map(|&db| PowerConfig::symmetric_db(db, options.power_ratio))
        .collect::<Result<_>>()?;

    // one vector of sum rates (grid-ordered) per trial, collected in trial
    // order so the reduction below never depends on scheduling
    let per_trial: Vec<Vec<f64>> = (0..options.trials)
        .into_par_iter()
        .map(|trial| -> Result<Vec<f64>> {
            let mut rng = trial_rng(options.master_seed, trial);
            let realization =
                draw_realization_opts(topology, &mut rng, options.reciprocal_channels)?;
            powers
                .iter()
                .map(|power| {
                    run_scheme(
                        scheme,
                        &realization,
                        &avg,
                        power,
                        options.allow_equal_jammers,
                    )
                    .map(|outcome| outcome.rates.sum)
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let n = options.trials as f64;
    let points = grid
        .points()
        .iter()
        .enumerate()
        .map(|(i, &ps_db)| {
            let mut sum = 0.0;
            for rates in &per_trial {
                sum += rates[i];
            }
            let mean = sum / n;
            let mut sq_dev = 0.0;
            for rates in &per_trial {
                let d = rates[i] - mean;
                sq_dev += d * d;
            }
            let rate_stderr = if options.trials > 1 {
                (sq_dev / (n - 1.0)).sqrt() / n.sqrt()
            } else {
                0.0
            };
            let outage_prob = options.target_rate.map(|target| {
                per_trial.iter().filter(|rates| rates[i] < target).count() as f64 / n
            });
            SweepPoint {
                ps_db,
                ergodic_rate: mean,
                rate_stderr,
                outage_prob,
            }
        })
        .collect();

    Ok(SweepResult {
        scheme,
        points,
        trials: options.trials,
    })
}

/// Ergodic secrecy rate curve with default options (L = 10, reciprocal
/// channels, equal jammers allowed).
pub fn ergodic_curve(
    scheme: SchemeId,
    topology: &NetworkTopology,
    grid: &PowerGrid,
    trials: u64,
    master_seed: u64,
) -> Result<SweepResult> {
    run_sweep(
        scheme,
        topology,
        grid,
        &SweepOptions {
            trials,
            master_seed,
            ..SweepOptions::default()
        },
    )
}

/// Secrecy outage probability curve: fraction of realizations whose sum rate
/// falls below `target_rate`.
pub fn outage_curve(
    scheme: SchemeId,
    topology: &NetworkTopology,
    grid: &PowerGrid,
    trials: u64,
    master_seed: u64,
    target_rate: f64,
) -> Result<SweepResult> {
    if !(target_rate >= 0.0) {
        return Err(SimError::InvalidGrid(format!(
            "target rate must be nonnegative, got {target_rate}"
        )));
    }
    run_sweep(
        scheme,
        topology,
        grid,
        &SweepOptions {
            trials,
            master_seed,
            target_rate: Some(target_rate),
            ..SweepOptions::default()
        },
    )
}

/// Least-squares slope of the ergodic rate against power in dB over the
/// inclusive window `[window.0, window.1]`, in BPCU per dB.
pub fn fit_high_power_slope(result: &SweepResult, window_db: (f64, f64)) -> Result<f64> {
    let pts: Vec<(f64, f64)> = result
        .points
        .iter()
        .filter(|p| p.ps_db >= window_db.0 && p.ps_db <= window_db.1)
        .map(|p| (p.ps_db, p.ergodic_rate))
        .collect();
    if pts.len() < 2 {
        return Err(SimError::InsufficientWindow(pts.len()));
    }
    let n = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in &pts {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    Ok(num / den)
}

/// Mean ergodic rate over the inclusive window, the curve's plateau level
/// when the window sits in the saturated region.
pub fn mean_over_window(result: &SweepResult, window_db: (f64, f64)) -> Result<f64> {
    let pts: Vec<f64> = result
        .points
        .iter()
        .filter(|p| p.ps_db >= window_db.0 && p.ps_db <= window_db.1)
        .map(|p| p.ergodic_rate)
        .collect();
    if pts.is_empty() {
        return Err(SimError::InsufficientWindow(0));
    }
    Ok(pts.iter().sum::<f64>() / pts.len() as f64)
}

/// First power at which the ergodic-rate difference `a - b` changes sign.
///
/// Interpolates linearly between grid points; a difference that touches zero
/// and returns to the same sign is not a crossover. Returns `None` when the
/// sign never changes.
pub fn find_crossover(a: &SweepResult, b: &SweepResult) -> Result<Option<f64>> {
    let grid_a: Vec<f64> = a.points.iter().map(|p| p.ps_db).collect();
    let grid_b: Vec<f64> = b.points.iter().map(|p| p.ps_db).collect();
    if grid_a != grid_b {
        return Err(SimError::GridMismatch);
    }
    let diffs: Vec<f64> = a
        .points
        .iter()
        .zip(&b.points)
        .map(|(pa, pb)| pa.ergodic_rate - pb.ergodic_rate)
        .collect();

    let mut prev: Option<(usize, f64)> = None; // last strictly nonzero diff
    let mut first_zero_after_prev: Option<f64> = None;
    for (i, &d) in diffs.iter().enumerate() {
        if d == 0.0 {
            if prev.is_some() && first_zero_after_prev.is_none() {
                first_zero_after_prev = Some(grid_a[i]);
            }
            continue;
        }
        if let Some((pi, pd)) = prev {
            if (d > 0.0) != (pd > 0.0) {
                // sign change; if the curve touched zero on the way, the
                // crossover sits exactly on that grid point
                if let Some(zero_at) = first_zero_after_prev {
                    return Ok(Some(zero_at));
                }
                let x0 = grid_a[pi];
                let x1 = grid_a[i];
                return Ok(Some(x0 + (x1 - x0) * pd / (pd - d)));
            }
        }
        prev = Some((i, d));
        first_zero_after_prev = None;
    }
    Ok(None)
}
