//! Least-squares slope fitting on log-log scaling data.

use serde::{Deserialize, Serialize};

/// One averaged sweep point: the swept value and the mean total queries
/// observed there.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub value: f64,
    pub mean_queries: f64,
}

/// Fitted power law `queries ≈ e^intercept · value^slope`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScalingFit {
    pub vary: String,
    pub points: Vec<SweepPoint>,
    pub slope: f64,
    pub intercept: f64,
    /// Sum of squared residuals in log space.
    pub residual: f64,
}

/// Ordinary least squares on `(ln value, ln mean_queries)`.
pub fn fit_log_log(vary: &str, points: &[SweepPoint]) -> Result<ScalingFit, &'static str> {
    if points.len() < 2 {
        return Err("slope fit needs at least two points");
    }
    let positive = |x: f64| x.is_finite() && x > 0.0;
    if points
        .iter()
        .any(|p| !positive(p.value) || !positive(p.mean_queries))
    {
        return Err("slope fit needs positive values and query counts");
    }
    let logs: Vec<(f64, f64)> = points
        .iter()
        .map(|p| (p.value.ln(), p.mean_queries.ln()))
        .collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = logs.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mean_x) * (x - mean_x)).sum();
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    if sxx == 0.0 {
        return Err("slope fit needs at least two distinct sweep values");
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let residual = logs
        .iter()
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    Ok(ScalingFit {
        vary: vary.to_owned(),
        points: points.to_vec(),
        slope,
        intercept,
        residual,
    })
}
