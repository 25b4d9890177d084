//! Comparative statics: policy experiments, parameter sweeps and the
//! curve data behind the standard diagrams.

mod curves;
mod table;

pub use curves::{sample_curves, Figure, FigureData, FigureTag};
pub use table::{Column, CurveTable};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{ConsumptionFunction, Economy};
use crate::solvers::{solve_general_equilibrium, EquilibriumReport, SolverConfig, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShockKind {
    /// Exogenous investment added on top of the MEC schedule (wage units).
    Fiscal,
    /// Change in the money supply (money units).
    Monetary,
    /// Shift of the MEC schedule's optimism parameter (dimensionless).
    Optimism,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolicyShock {
    pub kind: ShockKind,
    pub magnitude: f64,
}

impl PolicyShock {
    pub fn fiscal(magnitude: f64) -> Self {
        PolicyShock {
            kind: ShockKind::Fiscal,
            magnitude,
        }
    }

    pub fn monetary(magnitude: f64) -> Self {
        PolicyShock {
            kind: ShockKind::Monetary,
            magnitude,
        }
    }

    pub fn optimism(magnitude: f64) -> Self {
        PolicyShock {
            kind: ShockKind::Optimism,
            magnitude,
        }
    }

    /// The economy after the shock, validated.
    pub fn apply(&self, eco: &Economy) -> Result<Economy> {
        if !self.magnitude.is_finite() {
            return Err(Error::invalid("shock.magnitude", self.magnitude, "shock magnitude must be finite"));
        }
        let mut shocked = eco.clone();
        match self.kind {
            ShockKind::Fiscal => shocked.autonomous_investment += self.magnitude,
            ShockKind::Monetary => shocked.money_supply += self.magnitude,
            ShockKind::Optimism => shocked.mec.optimism += self.magnitude,
        }
        shocked.validated()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparativeReport {
    pub baseline: EquilibriumReport,
    pub shocked: EquilibriumReport,
    pub delta_income: f64,
    pub delta_employment: f64,
    pub delta_rate: Option<f64>,
    pub delta_investment: f64,
    /// `ΔY/ΔI` for fiscal shocks when neither equilibrium sits at the ceiling.
    pub multiplier: Option<f64>,
}

/// Solves the general equilibrium before and after a shock and reports the
/// differences.
pub fn policy_experiment(eco: &Economy, shock: PolicyShock, cfg: &SolverConfig) -> Result<ComparativeReport> {
    let shocked_economy = shock.apply(eco)?;
    let baseline = solve_general_equilibrium(eco, cfg)?;
    let shocked = solve_general_equilibrium(&shocked_economy, cfg)?;
    let delta_income = shocked.income - baseline.income;
    let multiplier = (shock.kind == ShockKind::Fiscal
        && shock.magnitude != 0.0
        && !baseline.at_full_employment
        && !shocked.at_full_employment)
        .then(|| delta_income / shock.magnitude);
    Ok(ComparativeReport {
        delta_income,
        delta_employment: shocked.employment - baseline.employment,
        delta_rate: baseline.interest_rate.zip(shocked.interest_rate).map(|(b, s)| s - b),
        delta_investment: shocked.investment - baseline.investment,
        multiplier,
        baseline,
        shocked,
    })
}

/// Economy fields addressable by a sweep, as `(path, units)`.
pub const SWEEPABLE: &[(&str, &str)] = &[
    ("consumption.autonomous", "wage units"),
    ("consumption.mpc", "-"),
    ("consumption.initial_mpc", "-"),
    ("consumption.decay", "per wage unit"),
    ("mec.base_investment", "wage units"),
    ("mec.rate_sensitivity", "per unit rate"),
    ("mec.optimism", "-"),
    ("mec.investment_floor", "wage units"),
    ("liquidity.transactions_coefficient", "money per wage unit"),
    ("liquidity.speculative_scale", "money units"),
    ("liquidity.speculative_elasticity", "-"),
    ("liquidity.rate_floor", "rate"),
    ("economy.money_supply", "money units"),
    ("economy.productivity", "wage units per employment unit"),
    ("economy.full_employment", "employment units"),
    ("economy.wage_unit", "money per employment unit"),
    ("economy.autonomous_investment", "wage units"),
];

fn unknown_path(path: &str, eco: &Economy) -> Error {
    Error::invalid(
        "sweep.param",
        path,
        format!("not a numeric field of this economy ({} consumption)", eco.consumption.family()),
    )
}

/// Sets one numeric field addressed by `section.field`, without validating.
pub fn set_parameter(eco: &mut Economy, path: &str, value: f64) -> Result<()> {
    let slot: &mut f64 = match (path, &mut eco.consumption) {
        ("consumption.autonomous", ConsumptionFunction::Linear { autonomous, .. })
        | ("consumption.autonomous", ConsumptionFunction::SaturatingMpc { autonomous, .. }) => autonomous,
        ("consumption.mpc", ConsumptionFunction::Linear { mpc, .. }) => mpc,
        ("consumption.initial_mpc", ConsumptionFunction::SaturatingMpc { initial_mpc, .. }) => initial_mpc,
        ("consumption.decay", ConsumptionFunction::SaturatingMpc { decay, .. }) => decay,
        ("mec.base_investment", _) => &mut eco.mec.base_investment,
        ("mec.rate_sensitivity", _) => &mut eco.mec.rate_sensitivity,
        ("mec.optimism", _) => &mut eco.mec.optimism,
        ("mec.investment_floor", _) => &mut eco.mec.investment_floor,
        ("liquidity.transactions_coefficient", _) => &mut eco.liquidity.transactions_coefficient,
        ("liquidity.speculative_scale", _) => &mut eco.liquidity.speculative_scale,
        ("liquidity.speculative_elasticity", _) => &mut eco.liquidity.speculative_elasticity,
        ("liquidity.rate_floor", _) => &mut eco.liquidity.rate_floor,
        ("economy.money_supply", _) => &mut eco.money_supply,
        ("economy.productivity", _) => &mut eco.productivity,
        ("economy.full_employment", _) => &mut eco.full_employment,
        ("economy.wage_unit", _) => &mut eco.wage_unit,
        ("economy.autonomous_investment", _) => &mut eco.autonomous_investment,
        _ => return Err(unknown_path(path, eco)),
    };
    *slot = value;
    Ok(())
}

/// Outcome of one sweep point, stored numerically in the `status` column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointStatus {
    Converged = 0,
    MaxIter = 1,
    InvalidEconomy = 2,
    InsufficientMoney = 3,
    SolverError = 4,
}

impl PointStatus {
    pub fn code(self) -> f64 {
        self as u8 as f64
    }

    pub fn from_code(code: f64) -> Option<Self> {
        Some(match code as i64 {
            0 => PointStatus::Converged,
            1 => PointStatus::MaxIter,
            2 => PointStatus::InvalidEconomy,
            3 => PointStatus::InsufficientMoney,
            4 => PointStatus::SolverError,
            _ => return None,
        })
    }
}

pub fn report_columns() -> Vec<Column> {
    vec![
        Column::new("Y*", "wage units"),
        Column::new("N*", "employment units"),
        Column::new("r*", "rate"),
        Column::new("I*", "wage units"),
        Column::new("converged", "flag"),
    ]
}

pub fn report_cells(report: &EquilibriumReport) -> Vec<Option<f64>> {
    vec![
        Some(report.income),
        Some(report.employment),
        report.interest_rate,
        Some(report.investment),
        Some(if report.converged { 1.0 } else { 0.0 }),
    ]
}

fn sweep_point(eco: &Economy, path: &str, value: f64, cfg: &SolverConfig) -> Vec<Option<f64>> {
    let mut point = eco.clone();
    let outcome = set_parameter(&mut point, path, value)
        .and_then(|_| point.validate())
        .map_err(|_| PointStatus::InvalidEconomy)
        .and_then(|_| {
            solve_general_equilibrium(&point, cfg).map_err(|e| match e {
                Error::InsufficientMoney { .. } => PointStatus::InsufficientMoney,
                Error::InvalidParameter { .. } => PointStatus::InvalidEconomy,
                _ => PointStatus::SolverError,
            })
        });
    let mut row = vec![Some(value)];
    match outcome {
        Ok(report) => {
            let status = if report.converged {
                PointStatus::Converged
            } else if report.trace.status == Status::MaxIter {
                PointStatus::MaxIter
            } else {
                PointStatus::SolverError
            };
            row.extend(report_cells(&report));
            row.push(Some(status.code()));
        }
        Err(status) => {
            row.extend([None, None, None, None, Some(0.0)]);
            row.push(Some(status.code()));
        }
    }
    row
}

/// One general-equilibrium solve per grid value of the named parameter.
///
/// Grid points that produce an invalid economy or fail to solve keep their
/// row, with absent result cells and a non-zero `status` code. Points are
/// solved in parallel; row order always follows the grid.
pub fn sweep_parameter(eco: &Economy, path: &str, grid: &[f64], cfg: &SolverConfig) -> Result<CurveTable> {
    cfg.validate()?;
    let units = SWEEPABLE
        .iter()
        .find(|(p, _)| *p == path)
        .map(|(_, u)| *u)
        .ok_or_else(|| unknown_path(path, eco))?;
    // reject paths that do not exist for this consumption family
    set_parameter(&mut eco.clone(), path, 0.0)?;

    let mut columns = vec![Column::new(path, units)];
    columns.extend(report_columns());
    columns.push(Column::new("status", "code"));
    let mut table = CurveTable::new(columns)?;
    let rows: Vec<_> = grid.par_iter().map(|&v| sweep_point(eco, path, v, cfg)).collect();
    for row in rows {
        table.push_row(row)?;
    }
    Ok(table)
}

/// Evenly spaced grid from `from` to `to` inclusive.
pub fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![from],
        n => (0..n)
            .map(|i| {
                if i == n - 1 {
                    to
                } else {
                    from + (to - from) * (i as f64) / ((n - 1) as f64)
                }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{LiquidityFunction, MecSchedule};

    fn decoupled() -> Economy {
        Economy::new(
            ConsumptionFunction::linear(10.0, 0.8).unwrap(),
            MecSchedule::new(50.0, 10.0, 0.0).unwrap(),
            LiquidityFunction::new(0.0, 1.0, 1.0, 0.0).unwrap(),
            50.0,
            1e6,
        )
        .unwrap()
    }

    fn coupled() -> Economy {
        Economy::new(
            ConsumptionFunction::saturating_mpc(20.0, 0.9, 0.002).unwrap(),
            MecSchedule::new(60.0, 8.0, 0.0).unwrap(),
            LiquidityFunction::new(0.25, 2.0, 1.0, 0.01).unwrap(),
            150.0,
            1000.0,
        )
        .unwrap()
    }

    #[test]
    fn fiscal_multiplier_matches_closed_form() {
        let eco = decoupled();
        let report = policy_experiment(&eco, PolicyShock::fiscal(10.0), &SolverConfig::default()).unwrap();
        assert!((report.delta_income - 50.0).abs() <= 1e-8);
        assert!((report.multiplier.unwrap() - 5.0).abs() <= 1e-9);
        assert_eq!(report.delta_rate, Some(0.0));
    }

    #[test]
    fn optimism_scales_investment_at_fixed_rate() {
        let eco = decoupled();
        let report = policy_experiment(&eco, PolicyShock::optimism(0.1), &SolverConfig::default()).unwrap();
        let base_private = 50.0 * (-10.0f64 / 50.0).exp();
        assert!((report.delta_investment - 0.1 * base_private).abs() <= 1e-12);
        assert!((report.delta_income - 5.0 * 0.1 * base_private).abs() <= 1e-8);
        assert_eq!(report.multiplier, None);
    }

    #[test]
    fn zero_shock_changes_nothing() {
        let eco = coupled();
        let cfg = SolverConfig::default();
        for shock in [PolicyShock::fiscal(0.0), PolicyShock::monetary(0.0), PolicyShock::optimism(0.0)] {
            let r = policy_experiment(&eco, shock, &cfg).unwrap();
            assert!(r.delta_income.abs() <= 10.0 * cfg.tol_abs);
            assert!(r.delta_employment.abs() <= 10.0 * cfg.tol_abs);
            assert!(r.delta_rate.unwrap().abs() <= 10.0 * cfg.tol_abs);
            assert!(r.delta_investment.abs() <= 10.0 * cfg.tol_abs);
            assert_eq!(r.multiplier, None);
        }
    }

    #[test]
    fn invalid_post_shock_economy_is_rejected() {
        let eco = coupled();
        assert!(policy_experiment(&eco, PolicyShock::monetary(-200.0), &SolverConfig::default()).is_err());
        assert!(policy_experiment(&eco, PolicyShock::optimism(-5.0), &SolverConfig::default()).is_err());
        assert!(PolicyShock::fiscal(f64::INFINITY).apply(&eco).is_err());
    }

    #[test]
    fn money_sweep_lowers_rate() {
        let eco = coupled();
        let grid = linspace(140.0, 200.0, 5);
        let table = sweep_parameter(&eco, "economy.money_supply", &grid, &SolverConfig::default()).unwrap();
        let rates = table.values("r*").unwrap();
        assert_eq!(rates.len(), 5);
        assert!(rates.windows(2).all(|w| w[1] < w[0]));
        assert!(table.values("status").unwrap().iter().all(|&s| s == 0.0));
    }

    #[test]
    fn optimism_sweep_raises_investment() {
        let eco = decoupled();
        let grid = linspace(-0.5, 0.5, 6);
        let table = sweep_parameter(&eco, "mec.optimism", &grid, &SolverConfig::default()).unwrap();
        let inv = table.values("I*").unwrap();
        assert!(inv.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn single_point_sweep_matches_direct_solve() {
        let eco = coupled();
        let cfg = SolverConfig::default();
        let table = sweep_parameter(&eco, "economy.money_supply", &[150.0], &cfg).unwrap();
        let direct = solve_general_equilibrium(&eco, &cfg).unwrap();
        assert_eq!(table.len(), 1);
        let mut expected = vec![Some(150.0)];
        expected.extend(report_cells(&direct));
        expected.push(Some(0.0));
        assert_eq!(table.rows()[0], expected);
    }

    #[test]
    fn failed_points_are_recorded_not_fatal() {
        let eco = coupled();
        let table = sweep_parameter(&eco, "consumption.initial_mpc", &[0.5, 0.9, 1.1], &SolverConfig::default()).unwrap();
        assert_eq!(table.len(), 3);
        let last = &table.rows()[2];
        assert_eq!(last[1], None);
        assert_eq!(PointStatus::from_code(last[6].unwrap()), Some(PointStatus::InvalidEconomy));
    }

    #[test]
    fn unknown_or_mismatched_paths_fail() {
        let eco = coupled();
        let cfg = SolverConfig::default();
        assert!(sweep_parameter(&eco, "economy.nonsense", &[1.0], &cfg).is_err());
        // saturating family has no constant mpc
        assert!(sweep_parameter(&eco, "consumption.mpc", &[0.5], &cfg).is_err());
    }

    #[test]
    fn linspace_hits_endpoints() {
        assert_eq!(linspace(40.0, 60.0, 5), vec![40.0, 45.0, 50.0, 55.0, 60.0]);
        assert_eq!(linspace(1.0, 2.0, 1), vec![1.0]);
        assert!(linspace(1.0, 2.0, 0).is_empty());
    }
}
