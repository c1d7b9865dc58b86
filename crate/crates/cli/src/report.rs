use quadsat::{SpectralMode, Tolerances};
use serde::Serialize;
use serde_json::Value;

/// Settings that determine the numbers in a report. The worker count is left
/// out on purpose: results do not depend on it.
#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub epsilon: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub mode: SpectralMode,
    pub seed: u64,
    pub jacobi_tol: f64,
    pub jacobi_max_sweeps: usize,
    pub dense_max_n: usize,
}

impl RunConfig {
    pub fn new(tol: &Tolerances, mode: SpectralMode, seed: u64) -> Self {
        RunConfig {
            epsilon: tol.epsilon,
            tol: tol.perron_tol,
            max_iter: tol.max_iter,
            mode,
            seed,
            jacobi_tol: tol.jacobi_tol,
            jacobi_max_sweeps: tol.jacobi_max_sweeps,
            dense_max_n: tol.dense_max_n,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    /// SHA-256 of the raw input bytes.
    pub input_digest: Option<String>,
    pub config: RunConfig,
    pub payload: Value,
    pub elapsed_ms: u64,
}
