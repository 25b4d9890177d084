use crate::error::{Error, Result};
use crate::model::{Economy, LiquidityFunction};

use super::{bisect_root, fixed_point, IterationTrace, Solution, SolverConfig, Status, TraceStep};

/// Solved employment, income, interest rate and investment, with the
/// diagnostics of the solve that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    pub employment: f64,
    /// Income in wage units.
    pub income: f64,
    /// `None` when investment was given rather than derived from the money market.
    pub interest_rate: Option<f64>,
    /// Total investment (schedule plus autonomous), in wage units.
    pub investment: f64,
    /// Excess demand `D(N*) − Z(N*)` at the reported point.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
    pub at_full_employment: bool,
    pub at_rate_floor: bool,
    pub trace: IterationTrace,
}

impl EquilibriumReport {
    /// Employment shortfall `N_full − N*`.
    pub fn unemployment_gap(&self, eco: &Economy) -> f64 {
        eco.full_employment - self.employment
    }
}

/// The point of effective demand for a given level of investment: the
/// employment at which aggregate demand meets aggregate supply, or full
/// employment when demand still exceeds supply there.
pub fn solve_effective_demand(eco: &Economy, investment: f64, cfg: &SolverConfig) -> Result<EquilibriumReport> {
    cfg.validate()?;
    eco.validate()?;
    if investment.is_nan() || investment < 0.0 {
        return Err(Error::domain("investment", investment, "[0, ∞)"));
    }
    let excess = |n: f64| -> Result<f64> { Ok(eco.aggregate_demand(n, investment)? - eco.aggregate_supply(n)?) };

    let at_zero = excess(0.0)?;
    if at_zero < 0.0 {
        return Err(Error::SignStructure { excess: at_zero });
    }
    let at_full = excess(eco.full_employment)?;
    if at_full >= 0.0 {
        let trace = IterationTrace {
            steps: vec![TraceStep {
                iterate: eco.full_employment,
                residual: at_full,
            }],
            status: Status::Converged,
        };
        return Ok(EquilibriumReport {
            employment: eco.full_employment,
            income: eco.full_employment_income(),
            interest_rate: None,
            investment,
            residual: at_full,
            iterations: trace.len(),
            converged: true,
            at_full_employment: true,
            at_rate_floor: false,
            trace,
        });
    }

    // tolerance is in wage units; convert to employment units for the bracket
    let root_cfg = cfg.with_tol(cfg.tol_abs / eco.productivity);
    let sol = bisect_root(excess, 0.0, eco.full_employment, &root_cfg)?;
    let employment = sol.value;
    let residual = sol.trace.steps.last().map_or(at_zero, |s| s.residual);
    Ok(EquilibriumReport {
        employment,
        income: eco.aggregate_supply(employment)?,
        interest_rate: None,
        investment,
        residual,
        iterations: sol.trace.len(),
        converged: sol.trace.converged() && residual.abs() <= cfg.tol_abs,
        at_full_employment: false,
        at_rate_floor: false,
        trace: sol.trace,
    })
}

/// The rate that clears the money market, `L1(Y) + L2(r) = M`.
///
/// Uses the closed-form inverse of speculative demand when the family has
/// one, and bracketed bisection otherwise.
pub fn solve_interest_rate(
    lp: &LiquidityFunction,
    money_supply: f64,
    income: f64,
    wage_unit: f64,
    cfg: &SolverConfig,
) -> Result<f64> {
    let transactions = lp.transactions_demand(income, wage_unit)?;
    if !(money_supply > transactions) {
        return Err(Error::InsufficientMoney {
            money_supply,
            transactions_demand: transactions,
        });
    }
    match lp.speculative_inverse(money_supply - transactions) {
        Some(rate) if rate > lp.rate_floor => Ok(rate),
        _ => Ok(bisect_interest_rate(lp, money_supply, income, wage_unit, cfg)?.value),
    }
}

/// Money-market clearing by bisection on the forward demand function.
///
/// Works on the offset `r − r_floor`, expanding the bracket by doubling (or
/// halving towards the floor) up to `bracket_expansion_limit` times. Trace
/// iterates are reported as rates.
pub fn bisect_interest_rate(
    lp: &LiquidityFunction,
    money_supply: f64,
    income: f64,
    wage_unit: f64,
    cfg: &SolverConfig,
) -> Result<Solution> {
    cfg.validate()?;
    let transactions = lp.transactions_demand(income, wage_unit)?;
    if !(money_supply > transactions) {
        return Err(Error::InsufficientMoney {
            money_supply,
            transactions_demand: transactions,
        });
    }
    let floor = lp.rate_floor;
    let excess = |offset: f64| -> Result<f64> { Ok(lp.demand(income, floor + offset, wage_unit)? - money_supply) };
    let limit = cfg.bracket_expansion_limit;

    let at_unit = excess(1.0)?;
    let (lo, hi) = if at_unit > 0.0 {
        let (mut lo, mut hi) = (1.0, 2.0);
        let mut doublings = 1;
        while excess(hi)? > 0.0 {
            if doublings >= limit {
                return Err(Error::BracketFailure { limit });
            }
            lo = hi;
            hi *= 2.0;
            doublings += 1;
        }
        (lo, hi)
    } else if at_unit < 0.0 {
        let (mut lo, mut hi) = (0.5, 1.0);
        let mut halvings = 1;
        loop {
            if floor + lo <= floor {
                return Err(Error::BracketFailure { limit });
            }
            if excess(lo)? >= 0.0 {
                break;
            }
            if halvings >= limit {
                return Err(Error::BracketFailure { limit });
            }
            hi = lo;
            lo *= 0.5;
            halvings += 1;
        }
        (lo, hi)
    } else {
        return Ok(Solution {
            value: floor + 1.0,
            trace: IterationTrace {
                steps: vec![TraceStep {
                    iterate: floor + 1.0,
                    residual: 0.0,
                }],
                status: Status::Converged,
            },
        });
    };

    let mut sol = bisect_root(excess, lo, hi, cfg)?;
    sol.value += floor;
    for step in &mut sol.trace.steps {
        step.iterate += floor;
    }
    Ok(sol)
}

/// Simultaneous solution of the money market, the investment schedule and
/// the multiplier: a damped fixed point on income of
/// `g(Y) = C(Y) + I(r(Y)) + I_aut`, where `r(Y)` clears the money market at
/// income `Y`. Income is capped at full employment.
pub fn solve_general_equilibrium(eco: &Economy, cfg: &SolverConfig) -> Result<EquilibriumReport> {
    cfg.validate()?;
    eco.validate()?;
    let full_income = eco.full_employment_income();
    let coupled = |income: f64| -> Result<(f64, f64, f64)> {
        let rate = solve_interest_rate(&eco.liquidity, eco.money_supply, income, eco.wage_unit, cfg)?;
        let investment = eco.mec.eval(rate)? + eco.autonomous_investment;
        let demand = eco.consumption.eval(income)? + investment;
        Ok((rate, investment, demand))
    };

    let sol = fixed_point(|y| Ok(coupled(y)?.2.min(full_income)), 0.0, cfg)?;
    let mut income = sol.value;
    let (mut rate, mut investment, mut demand) = coupled(income)?;
    let at_full_employment = demand >= full_income;
    if at_full_employment {
        income = full_income;
        (rate, investment, demand) = coupled(income)?;
    }
    let residual = demand - income;
    let employment = if at_full_employment {
        eco.full_employment
    } else {
        eco.employment_for(income).min(eco.full_employment)
    };
    Ok(EquilibriumReport {
        employment,
        income,
        interest_rate: Some(rate),
        investment,
        residual,
        iterations: sol.trace.len(),
        converged: sol.trace.converged() && (at_full_employment || residual.abs() <= cfg.tol_abs),
        at_full_employment,
        at_rate_floor: rate - eco.liquidity.rate_floor <= cfg.tol_abs,
        trace: sol.trace,
    })
}
