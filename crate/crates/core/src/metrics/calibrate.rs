//! Temperature calibration against a target CMI.

use serde::Serialize;

use super::corpus_cmi;
use crate::corpus::Corpus;
use crate::error::{ForgeError, Result};
use crate::lexicon::Translator;
use crate::rng::derive_seed;
use crate::synthesis::{generate_corpus, StrategyConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridPoint {
    pub tau: f64,
    pub mean_cmi: f64,
    pub distance: f64,
}

/// Which side of the CMI peak a calibrated temperature may come from.
///
/// Replacement CMI rises with tau up to a peak and falls after it, so most
/// targets are hit twice. `BelowPeak` keeps the embedded material in the
/// minority; `AbovePeak` suits targets where it should dominate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    #[default]
    Any,
    BelowPeak,
    AbovePeak,
}

impl std::str::FromStr for Branch {
    type Err = ForgeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Branch::Any),
            "below-peak" => Ok(Branch::BelowPeak),
            "above-peak" => Ok(Branch::AbovePeak),
            other => Err(ForgeError::Invalid(format!("unknown branch `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalibrationResult {
    pub tau_star: f64,
    pub branch: Branch,
    /// Grid temperature with the highest mean CMI.
    pub tau_peak: f64,
    pub grid: Vec<GridPoint>,
    pub target_cmi: f64,
    pub samples_per_point: usize,
    pub seed: u64,
}

/// Parse `start:end:step` (inclusive) or a comma-separated list.
pub fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let bad = || ForgeError::Invalid(format!("bad tau grid `{text}`"));
    let grid: Vec<f64> = if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [start, end, step] = parts[..] else { return Err(bad()) };
        if !(step > 0.0) || end < start {
            return Err(bad());
        }
        let steps = ((end - start) / step + 1e-9).floor() as usize;
        (0..=steps)
            .map(|k| ((start + k as f64 * step) * 1e10).round() / 1e10)
            .collect()
    } else {
        text.split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    if grid.is_empty() {
        return Err(bad());
    }
    Ok(grid)
}

/// Pick the grid temperature whose synthetic mean CMI is closest to `target_cmi`.
///
/// Each grid point generates `samples_per_point` sentences with seed
/// `derive_seed(seed, tau)`; ties go to the smallest tau. The full grid is
/// returned so callers can apply their own side-of-peak policy.
pub fn calibrate_temperature(
    source: &Corpus,
    target_cmi: f64,
    config: &StrategyConfig,
    translator: &Translator,
    tau_grid: &[f64],
    samples_per_point: usize,
    seed: u64,
) -> Result<CalibrationResult> {
    calibrate_temperature_on(source, target_cmi, config, translator, tau_grid, samples_per_point, seed, Branch::Any)
}

/// [`calibrate_temperature`] with the argmin restricted to one side of the
/// peak (the peak itself belongs to both sides).
#[allow(clippy::too_many_arguments)]
pub fn calibrate_temperature_on(
    source: &Corpus,
    target_cmi: f64,
    config: &StrategyConfig,
    translator: &Translator,
    tau_grid: &[f64],
    samples_per_point: usize,
    seed: u64,
    branch: Branch,
) -> Result<CalibrationResult> {
    if !(0.0..=100.0).contains(&target_cmi) {
        return Err(ForgeError::Invalid(format!("target CMI {target_cmi} outside [0, 100]")));
    }
    if tau_grid.is_empty() {
        return Err(ForgeError::Invalid("empty tau grid".into()));
    }
    if let Some(t) = tau_grid.iter().find(|t| !(0.0..=1.0).contains(*t)) {
        return Err(ForgeError::Invalid(format!("grid value {t} outside [0, 1]")));
    }
    if matches!(config, StrategyConfig::Pos { .. }) {
        return Err(ForgeError::Invalid("the POS strategy has no temperature to calibrate".into()));
    }
    if samples_per_point == 0 {
        return Err(ForgeError::Invalid("samples per point must be positive".into()));
    }

    let mut grid = Vec::with_capacity(tau_grid.len());
    for &tau in tau_grid {
        let point_seed = derive_seed(&[seed.into(), tau.into()]);
        let generated = generate_corpus(source, &config.with_tau(tau), translator, samples_per_point, point_seed)?;
        let mean_cmi = corpus_cmi(&generated)?.mean;
        log::debug!("tau {tau}: mean CMI {mean_cmi:.3}");
        grid.push(GridPoint {
            tau,
            mean_cmi,
            distance: (mean_cmi - target_cmi).abs(),
        });
    }
    let tau_peak = grid
        .iter()
        .max_by(|a, b| a.mean_cmi.total_cmp(&b.mean_cmi).then(b.tau.total_cmp(&a.tau)))
        .expect("non-empty grid")
        .tau;
    let best = grid
        .iter()
        .filter(|p| match branch {
            Branch::Any => true,
            Branch::BelowPeak => p.tau <= tau_peak,
            Branch::AbovePeak => p.tau >= tau_peak,
        })
        .min_by(|a, b| a.distance.total_cmp(&b.distance).then(a.tau.total_cmp(&b.tau)))
        .expect("non-empty grid");
    Ok(CalibrationResult {
        tau_star: best.tau,
        branch,
        tau_peak,
        target_cmi,
        samples_per_point,
        seed,
        grid,
    })
}
