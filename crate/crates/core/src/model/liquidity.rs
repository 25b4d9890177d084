use crate::error::{Error, Result};

/// Liquidity preference `L(Y, r) = L1(Y) + L2(r)` in money units.
///
/// Transactions demand `L1(Y) = κ·Y·W` converts wage-unit income to money
/// with the wage unit `W`. Speculative demand `L2(r) = A·(r − r_floor)^(−γ)`
/// diverges as the rate approaches `r_floor`, which is where the liquidity
/// trap lives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiquidityFunction {
    pub transactions_coefficient: f64,
    pub speculative_scale: f64,
    pub speculative_elasticity: f64,
    pub rate_floor: f64,
}

impl LiquidityFunction {
    pub fn new(
        transactions_coefficient: f64,
        speculative_scale: f64,
        speculative_elasticity: f64,
        rate_floor: f64,
    ) -> Result<Self> {
        let lp = LiquidityFunction {
            transactions_coefficient,
            speculative_scale,
            speculative_elasticity,
            rate_floor,
        };
        lp.validate()?;
        Ok(lp)
    }

    pub fn validate(&self) -> Result<()> {
        // κ = 0 is allowed: it decouples the money market from income.
        if !self.transactions_coefficient.is_finite() || self.transactions_coefficient < 0.0 {
            return Err(Error::invalid(
                "liquidity.transactions_coefficient",
                self.transactions_coefficient,
                "transactions coefficient must be finite and non-negative",
            ));
        }
        if !self.speculative_scale.is_finite() || self.speculative_scale <= 0.0 {
            return Err(Error::invalid(
                "liquidity.speculative_scale",
                self.speculative_scale,
                "speculative scale must be finite and positive",
            ));
        }
        if !self.speculative_elasticity.is_finite() || self.speculative_elasticity <= 0.0 {
            return Err(Error::invalid(
                "liquidity.speculative_elasticity",
                self.speculative_elasticity,
                "speculative curvature must be finite and positive",
            ));
        }
        if !self.rate_floor.is_finite() || self.rate_floor < 0.0 {
            return Err(Error::invalid(
                "liquidity.rate_floor",
                self.rate_floor,
                "rate floor must be finite and non-negative",
            ));
        }
        Ok(())
    }

    /// `L1(Y)` in money units.
    pub fn transactions_demand(&self, income: f64, wage_unit: f64) -> Result<f64> {
        if income.is_nan() || income < 0.0 {
            return Err(Error::domain("income", income, "[0, ∞)"));
        }
        Ok(self.transactions_coefficient * income * wage_unit)
    }

    /// `L2(r)` in money units.
    pub fn speculative_demand(&self, rate: f64) -> Result<f64> {
        if rate.is_nan() || rate <= self.rate_floor {
            return Err(Error::RateFloor {
                rate,
                floor: self.rate_floor,
            });
        }
        Ok(self.speculative_scale * (rate - self.rate_floor).powf(-self.speculative_elasticity))
    }

    pub fn demand(&self, income: f64, rate: f64, wage_unit: f64) -> Result<f64> {
        Ok(self.transactions_demand(income, wage_unit)? + self.speculative_demand(rate)?)
    }

    /// Closed-form inverse of `L2`: the rate at which speculative demand
    /// equals `balance`. `None` if the family has no closed form.
    pub fn speculative_inverse(&self, balance: f64) -> Option<f64> {
        if !(balance > 0.0) {
            return None;
        }
        Some(self.rate_floor + (self.speculative_scale / balance).powf(1.0 / self.speculative_elasticity))
    }
}
