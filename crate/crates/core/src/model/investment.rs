use crate::error::{Error, Result};

/// Schedule of the marginal efficiency of capital:
/// `I(r; ε) = max(I_min, (1 + ε)·I0·e^(−η·r))`.
///
/// `optimism` (ε) shifts the whole schedule up or down without touching the
/// interest rate; `ε = 0` is the neutral state of expectations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MecSchedule {
    pub base_investment: f64,
    pub rate_sensitivity: f64,
    pub optimism: f64,
    pub investment_floor: f64,
}

impl MecSchedule {
    pub fn new(base_investment: f64, rate_sensitivity: f64, optimism: f64) -> Result<Self> {
        let mec = MecSchedule {
            base_investment,
            rate_sensitivity,
            optimism,
            investment_floor: 0.0,
        };
        mec.validate()?;
        Ok(mec)
    }

    pub fn with_floor(mut self, investment_floor: f64) -> Result<Self> {
        self.investment_floor = investment_floor;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.base_investment.is_finite() || self.base_investment < 0.0 {
            return Err(Error::invalid(
                "mec.base_investment",
                self.base_investment,
                "base investment must be finite and non-negative",
            ));
        }
        if !self.rate_sensitivity.is_finite() || self.rate_sensitivity <= 0.0 {
            return Err(Error::invalid(
                "mec.rate_sensitivity",
                self.rate_sensitivity,
                "interest sensitivity must be positive so investment falls as the rate rises",
            ));
        }
        if !self.optimism.is_finite() || self.optimism <= -1.0 {
            return Err(Error::invalid(
                "mec.optimism",
                self.optimism,
                "optimism shift must exceed -1",
            ));
        }
        if !self.investment_floor.is_finite() || self.investment_floor < 0.0 {
            return Err(Error::invalid(
                "mec.investment_floor",
                self.investment_floor,
                "investment floor must be finite and non-negative",
            ));
        }
        Ok(())
    }

    /// Investment demanded at rate `r ≥ 0`, in wage units.
    pub fn eval(&self, rate: f64) -> Result<f64> {
        if rate.is_nan() || rate < 0.0 {
            return Err(Error::domain("interest rate", rate, "[0, ∞)"));
        }
        let schedule = (1.0 + self.optimism) * self.base_investment * (-self.rate_sensitivity * rate).exp();
        Ok(schedule.max(self.investment_floor))
    }

    /// `∂I/∂r`, zero where the floor binds.
    pub fn slope(&self, rate: f64) -> Result<f64> {
        let schedule = (1.0 + self.optimism) * self.base_investment * (-self.rate_sensitivity * rate).exp();
        if self.eval(rate)? > schedule {
            return Ok(0.0);
        }
        Ok(-self.rate_sensitivity * schedule)
    }
}
