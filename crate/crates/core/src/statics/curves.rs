use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::Economy;
use crate::multiplier::expansion_path;
use crate::solvers::{solve_general_equilibrium, SolverConfig};

use super::{Column, CurveTable};

/// Which diagram to sample, with the values it is drawn at.
///
/// Figures 1 to 3 are sampled on an employment grid, the two figure-4
/// variants on an interest-rate grid.
#[derive(Debug, Clone, PartialEq)]
pub enum Figure {
    /// Aggregate supply and aggregate demand against employment.
    Fig1 { investment: f64 },
    /// Supply, consumption and consumption plus investment against income.
    Fig2 { investment: f64 },
    /// The 45° line with demand at two investment levels, plus the
    /// expansion path between their equilibria.
    Fig3 { low_investment: f64, high_investment: f64 },
    /// The MEC schedule at several optimism levels.
    Fig4Mec { optimism: Vec<f64> },
    /// Money demand at several incomes against the money supply.
    Fig4Liquidity { incomes: Vec<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureTag {
    Fig1,
    Fig2,
    Fig3,
    Fig4Mec,
    Fig4Liquidity,
}

impl FromStr for FigureTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "fig1" => FigureTag::Fig1,
            "fig2" => FigureTag::Fig2,
            "fig3" => FigureTag::Fig3,
            "fig4-mec" => FigureTag::Fig4Mec,
            "fig4-liquidity" => FigureTag::Fig4Liquidity,
            other => {
                return Err(Error::invalid(
                    "figure",
                    other,
                    "expected one of fig1, fig2, fig3, fig4-mec, fig4-liquidity",
                ))
            }
        })
    }
}

impl fmt::Display for FigureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigureTag::Fig1 => "fig1",
            FigureTag::Fig2 => "fig2",
            FigureTag::Fig3 => "fig3",
            FigureTag::Fig4Mec => "fig4-mec",
            FigureTag::Fig4Liquidity => "fig4-liquidity",
        })
    }
}

impl Figure {
    /// Default drawing values for a tag. Figures 1 to 3 use the investment
    /// of the economy's general equilibrium; figure 3 adds a 20% step.
    pub fn default_for(tag: FigureTag, eco: &Economy, cfg: &SolverConfig) -> Result<Figure> {
        let equilibrium_investment = || -> Result<f64> { Ok(solve_general_equilibrium(eco, cfg)?.investment) };
        Ok(match tag {
            FigureTag::Fig1 => Figure::Fig1 {
                investment: equilibrium_investment()?,
            },
            FigureTag::Fig2 => Figure::Fig2 {
                investment: equilibrium_investment()?,
            },
            FigureTag::Fig3 => {
                let low = equilibrium_investment()?;
                Figure::Fig3 {
                    low_investment: low,
                    high_investment: low + (0.2 * low).max(1.0),
                }
            }
            FigureTag::Fig4Mec => Figure::Fig4Mec {
                optimism: vec![-0.2, 0.0, 0.2],
            },
            FigureTag::Fig4Liquidity => {
                let full = eco.full_employment_income();
                Figure::Fig4Liquidity {
                    incomes: vec![0.25 * full, 0.5 * full, 0.75 * full],
                }
            }
        })
    }

    pub fn tag(&self) -> FigureTag {
        match self {
            Figure::Fig1 { .. } => FigureTag::Fig1,
            Figure::Fig2 { .. } => FigureTag::Fig2,
            Figure::Fig3 { .. } => FigureTag::Fig3,
            Figure::Fig4Mec { .. } => FigureTag::Fig4Mec,
            Figure::Fig4Liquidity { .. } => FigureTag::Fig4Liquidity,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub curves: CurveTable,
    /// Round-by-round expansion path (figure 3 only).
    pub path: Option<CurveTable>,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::invalid("grid", 0, "grid must not be empty"));
    }
    if grid.iter().any(|x| !x.is_finite()) || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::invalid("grid", "…", "grid must be finite and strictly increasing"));
    }
    Ok(())
}

/// Samples the curves of a figure on the given grid (employment for
/// figures 1–3, interest rate for the figure-4 variants).
pub fn sample_curves(eco: &Economy, figure: &Figure, grid: &[f64], cfg: &SolverConfig) -> Result<FigureData> {
    eco.validate()?;
    check_grid(grid)?;
    match figure {
        Figure::Fig1 { investment } => {
            let mut table = CurveTable::new(vec![
                Column::new("N", "employment units"),
                Column::new("Z", "wage units"),
                Column::new("D", "wage units"),
            ])?;
            for &n in grid {
                let z = eco.aggregate_supply(n)?;
                let d = eco.aggregate_demand(n, *investment)?;
                table.push_row(vec![Some(n), Some(z), Some(d)])?;
            }
            Ok(FigureData { curves: table, path: None })
        }
        Figure::Fig2 { investment } => {
            let mut table = CurveTable::new(vec![
                Column::new("Y", "wage units"),
                Column::new("Z", "wage units"),
                Column::new("C", "wage units"),
                Column::new("C+I", "wage units"),
            ])?;
            for &n in grid {
                let y = eco.aggregate_supply(n)?;
                let c = eco.consumption.eval(y)?;
                table.push_row(vec![Some(y), Some(y), Some(c), Some(eco.aggregate_demand(n, *investment)?)])?;
            }
            Ok(FigureData { curves: table, path: None })
        }
        Figure::Fig3 {
            low_investment,
            high_investment,
        } => {
            let mut table = CurveTable::new(vec![
                Column::new("Y", "wage units"),
                Column::new("45-degree", "wage units"),
                Column::new(format!("C+I1 (I1={low_investment})"), "wage units"),
                Column::new(format!("C+I2 (I2={high_investment})"), "wage units"),
            ])?;
            for &n in grid {
                let y = eco.aggregate_supply(n)?;
                table.push_row(vec![
                    Some(y),
                    Some(y),
                    Some(eco.aggregate_demand(n, *low_investment)?),
                    Some(eco.aggregate_demand(n, *high_investment)?),
                ])?;
            }
            let expansion = expansion_path(eco, *low_investment, *high_investment, cfg)?;
            let mut path = CurveTable::new(vec![
                Column::new("round", "count"),
                Column::new("Y_n", "wage units"),
                Column::new("D_n", "wage units"),
            ])?;
            for (i, round) in expansion.rounds.iter().enumerate() {
                path.push_row(vec![Some(i as f64), Some(round.income), Some(round.demand)])?;
            }
            Ok(FigureData {
                curves: table,
                path: Some(path),
            })
        }
        Figure::Fig4Mec { optimism } => {
            let mut columns = vec![Column::new("r", "rate")];
            let mut schedules = Vec::with_capacity(optimism.len());
            for &eps in optimism {
                let mut mec = eco.mec;
                mec.optimism = eps;
                mec.validate()?;
                schedules.push(mec);
                columns.push(Column::new(format!("I(eps={eps})"), "wage units"));
            }
            let mut table = CurveTable::new(columns)?;
            for &r in grid {
                let mut row = vec![Some(r)];
                for mec in &schedules {
                    row.push(Some(mec.eval(r)?));
                }
                table.push_row(row)?;
            }
            Ok(FigureData { curves: table, path: None })
        }
        Figure::Fig4Liquidity { incomes } => {
            let mut columns = vec![Column::new("r", "rate")];
            for y in incomes {
                columns.push(Column::new(format!("L(Y={y})"), "money units"));
            }
            columns.push(Column::new("M", "money units"));
            let mut table = CurveTable::new(columns)?;
            for &r in grid {
                let mut row = vec![Some(r)];
                for &y in incomes {
                    row.push(Some(eco.liquidity.demand(y, r, eco.wage_unit)?));
                }
                row.push(Some(eco.money_supply));
                table.push_row(row)?;
            }
            Ok(FigureData { curves: table, path: None })
        }
    }
}
