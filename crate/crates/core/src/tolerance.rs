use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Numerical knobs shared by every module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Slack allowed in every spectral comparison.
    pub epsilon: f64,
    /// Power-iteration residual target `‖Ax − λx‖∞`.
    pub perron_tol: f64,
    pub max_iter: usize,
    /// Largest order handed to the dense eigensolver.
    pub dense_max_n: usize,
    /// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
    pub jacobi_tol: f64,
    pub jacobi_max_sweeps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            epsilon: 1e-9,
            perron_tol: 1e-12,
            max_iter: 100_000,
            dense_max_n: 512,
            jacobi_tol: 1e-12,
            jacobi_max_sweeps: 100,
        }
    }
}

/// How `λ(G)` is compared against `√m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "snake_case")]
pub enum SpectralMode {
    /// `λ ≥ √m − ε`.
    #[default]
    Nonstrict,
    /// `λ > √m + ε`.
    Strict,
}

impl SpectralMode {
    pub fn admits(self, lambda: f64, m: usize, epsilon: f64) -> bool {
        let root = (m as f64).sqrt();
        match self {
            SpectralMode::Nonstrict => lambda >= root - epsilon,
            SpectralMode::Strict => lambda > root + epsilon,
        }
    }
}

impl fmt::Display for SpectralMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectralMode::Nonstrict => "nonstrict",
            SpectralMode::Strict => "strict",
        })
    }
}

impl FromStr for SpectralMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "nonstrict" => Ok(SpectralMode::Nonstrict),
            "strict" => Ok(SpectralMode::Strict),
            other => Err(format!("unknown spectral mode {other:?} (expected strict or nonstrict)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_at_boundary() {
        assert!(SpectralMode::Nonstrict.admits(2.0, 4, 1e-9));
        assert!(!SpectralMode::Strict.admits(2.0, 4, 1e-9));
        assert!(SpectralMode::Strict.admits(2.1, 4, 1e-9));
        assert!(!SpectralMode::Nonstrict.admits(1.99, 4, 1e-9));
        assert_eq!("strict".parse::<SpectralMode>().unwrap(), SpectralMode::Strict);
        assert!("loose".parse::<SpectralMode>().is_err());
    }
}
