//! The investment multiplier.
//!
//! Three views of the same quantity:
//!
//! * [`local_multiplier`]: `k = 1/(1 − c(Y))` at a given income, valid for
//!   small increments of investment;
//! * [`finite_multiplier`]: `ΔY/ΔI` between two solved equilibria, which is
//!   the exact answer when the marginal propensity varies along the way;
//! * [`expansion_path`]: the round-by-round climb from the old equilibrium
//!   to the new one with investment held at its new level.
//!
//! One round is one application of `g(Y) = C(Y) + I2`.

use crate::error::{Error, Result};
use crate::model::{ConsumptionFunction, Economy};
use crate::solvers::{fixed_point, solve_effective_demand, EquilibriumReport, SolverConfig, Status};

pub fn local_multiplier(cf: &ConsumptionFunction, income: f64) -> Result<f64> {
    let mpc = cf.marginal_propensity(income)?;
    multiplier_for_mpc(mpc)
}

/// `1/(1 − c)`, rejecting `c ≥ 1`.
pub fn multiplier_for_mpc(mpc: f64) -> Result<f64> {
    if !(mpc < 1.0) {
        return Err(Error::Degenerate { mpc });
    }
    Ok(1.0 / (1.0 - mpc))
}

fn uncapped_equilibrium(eco: &Economy, investment: f64, cfg: &SolverConfig) -> Result<EquilibriumReport> {
    let report = solve_effective_demand(eco, investment, cfg)?;
    if report.at_full_employment {
        return Err(Error::FullEmployment { investment });
    }
    Ok(report)
}

fn check_investment_pair(i1: f64, i2: f64) -> Result<()> {
    for (field, value) in [("investment i1", i1), ("investment i2", i2)] {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::invalid(field, value, "investment must be finite and non-negative"));
        }
    }
    if i1 == i2 {
        return Err(Error::invalid("investment i2", i2, "the two investment levels must differ"));
    }
    Ok(())
}

/// `(Y*(I2) − Y*(I1)) / (I2 − I1)` from two independent effective-demand solves.
pub fn finite_multiplier(eco: &Economy, i1: f64, i2: f64, cfg: &SolverConfig) -> Result<f64> {
    check_investment_pair(i1, i2)?;
    let first = uncapped_equilibrium(eco, i1, cfg)?;
    let second = uncapped_equilibrium(eco, i2, cfg)?;
    Ok((second.income - first.income) / (i2 - i1))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Round {
    pub income: f64,
    /// `C(income) + I2`, the income of the next round.
    pub demand: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionPath {
    pub initial_income: f64,
    pub investment_step: f64,
    /// Starts at `initial_income`; the last round is the terminal income.
    pub rounds: Vec<Round>,
    pub terminal_income: f64,
    pub realized_multiplier: f64,
    pub status: Status,
}

impl ExpansionPath {
    /// Income gained in each round, `D_n − Y_n`.
    pub fn increments(&self) -> impl Iterator<Item = f64> + '_ {
        self.rounds.iter().map(|r| r.demand - r.income)
    }

    /// `Y_n − Y_1` for every round.
    pub fn cumulative_increments(&self) -> impl Iterator<Item = f64> + '_ {
        self.rounds.iter().map(move |r| r.income - self.initial_income)
    }
}

/// Round-by-round income expansion after investment steps from `i1` to `i2`.
pub fn expansion_path(eco: &Economy, i1: f64, i2: f64, cfg: &SolverConfig) -> Result<ExpansionPath> {
    check_investment_pair(i1, i2)?;
    if i2 < i1 {
        return Err(Error::invalid("investment i2", i2, "the expansion path needs i2 > i1"));
    }
    let start = uncapped_equilibrium(eco, i1, cfg)?;
    // the destination must also lie below the ceiling
    uncapped_equilibrium(eco, i2, cfg)?;

    let sol = fixed_point(|y| Ok(eco.consumption.eval(y)? + i2), start.income, cfg)?;
    let rounds = sol
        .trace
        .steps
        .iter()
        .map(|s| Round {
            income: s.iterate,
            demand: s.iterate + s.residual,
        })
        .collect();
    Ok(ExpansionPath {
        initial_income: start.income,
        investment_step: i2 - i1,
        rounds,
        terminal_income: sol.value,
        realized_multiplier: (sol.value - start.income) / (i2 - i1),
        status: sol.trace.status,
    })
}
