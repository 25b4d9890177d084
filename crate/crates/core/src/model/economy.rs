use crate::error::{Error, Result};

use super::{ConsumptionFunction, LiquidityFunction, MecSchedule};

/// A complete scenario: the three behavioural functions plus the money
/// supply and the employment/income mapping.
///
/// Real aggregates (income, consumption, investment, supply) are in wage
/// units. Only the money supply and money demand are in money units; the
/// wage unit converts between the two.
#[derive(Debug, Clone, PartialEq)]
pub struct Economy {
    pub consumption: ConsumptionFunction,
    pub mec: MecSchedule,
    pub liquidity: LiquidityFunction,
    pub money_supply: f64,
    /// Output per unit of employment, in wage units.
    pub productivity: f64,
    pub full_employment: f64,
    pub wage_unit: f64,
    /// Exogenous (public) investment added on top of the MEC schedule.
    pub autonomous_investment: f64,
}

impl Economy {
    /// Builds an economy with unit productivity, unit wage and no
    /// autonomous investment.
    pub fn new(
        consumption: ConsumptionFunction,
        mec: MecSchedule,
        liquidity: LiquidityFunction,
        money_supply: f64,
        full_employment: f64,
    ) -> Result<Self> {
        Economy {
            consumption,
            mec,
            liquidity,
            money_supply,
            productivity: 1.0,
            full_employment,
            wage_unit: 1.0,
            autonomous_investment: 0.0,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        self.consumption.validate()?;
        self.mec.validate()?;
        self.liquidity.validate()?;
        positive("economy.money_supply", self.money_supply)?;
        positive("economy.productivity", self.productivity)?;
        positive("economy.full_employment", self.full_employment)?;
        positive("economy.wage_unit", self.wage_unit)?;
        if !self.autonomous_investment.is_finite() || self.autonomous_investment < 0.0 {
            return Err(Error::invalid(
                "economy.autonomous_investment",
                self.autonomous_investment,
                "autonomous investment must be finite and non-negative",
            ));
        }
        Ok(())
    }

    /// Income at full employment, `μ·N_full`.
    pub fn full_employment_income(&self) -> f64 {
        self.productivity * self.full_employment
    }

    fn check_employment(&self, employment: f64) -> Result<()> {
        if employment.is_nan() || employment < 0.0 || employment > self.full_employment {
            return Err(Error::domain(
                "employment",
                employment,
                format!("[0, {}]", self.full_employment),
            ));
        }
        Ok(())
    }

    /// Aggregate supply price `Z(N) = μ·N` for `0 ≤ N ≤ N_full`.
    pub fn aggregate_supply(&self, employment: f64) -> Result<f64> {
        self.check_employment(employment)?;
        Ok(self.productivity * employment)
    }

    /// Aggregate demand `D(N) = C(Z(N)) + I` at a given level of investment.
    pub fn aggregate_demand(&self, employment: f64, investment: f64) -> Result<f64> {
        if investment.is_nan() || investment < 0.0 {
            return Err(Error::domain("investment", investment, "[0, ∞)"));
        }
        let income = self.aggregate_supply(employment)?;
        Ok(self.consumption.eval(income)? + investment)
    }

    /// Employment that produces `income` wage units of output.
    pub fn employment_for(&self, income: f64) -> f64 {
        income / self.productivity
    }
}

fn positive(field: &str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::invalid(field, value, "must be finite and positive"));
    }
    Ok(())
}
