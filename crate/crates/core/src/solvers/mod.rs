//! Scalar numerical kernels and the model solvers built on them.

mod equilibrium;
mod fixed_point;
mod root;

pub use equilibrium::{
    bisect_interest_rate, solve_effective_demand, solve_general_equilibrium, solve_interest_rate,
    EquilibriumReport,
};
pub use fixed_point::fixed_point;
pub use root::{bisect_root, bisection_steps_needed};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub tol_abs: f64,
    pub max_iter: usize,
    /// Weight on the new iterate in `x ← (1−α)·x + α·g(x)`.
    pub damping: f64,
    /// Doublings allowed when searching for a bracket.
    pub bracket_expansion_limit: u32,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol_abs: 1e-10,
            max_iter: 200,
            damping: 1.0,
            bracket_expansion_limit: 60,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.tol_abs.is_finite() || self.tol_abs <= 0.0 {
            return Err(Error::invalid("solver.tol_abs", self.tol_abs, "tolerance must be positive"));
        }
        if self.max_iter == 0 {
            return Err(Error::invalid("solver.max_iter", self.max_iter, "at least one iteration is required"));
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return Err(Error::invalid("solver.damping", self.damping, "damping must lie in (0, 1]"));
        }
        Ok(())
    }

    pub fn with_tol(mut self, tol_abs: f64) -> Self {
        self.tol_abs = tol_abs;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_damping(mut self, damping: f64) -> Self {
        self.damping = damping;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Converged,
    MaxIter,
    BracketFailure,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Converged => "converged",
            Status::MaxIter => "max-iter",
            Status::BracketFailure => "bracket-failure",
        }
    }
}

/// One evaluated iterate and the residual computed there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceStep {
    pub iterate: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub steps: Vec<TraceStep>,
    pub status: Status,
}

impl IterationTrace {
    pub fn converged(&self) -> bool {
        self.status == Status::Converged
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// A scalar result together with the path that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub value: f64,
    pub trace: IterationTrace,
}
