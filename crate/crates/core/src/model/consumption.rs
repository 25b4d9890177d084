//! The propensity to consume.
//!
//! Income and consumption are both measured in wage units. Every family
//! satisfies `0 < C'(Y) < 1` with `C'` non-increasing, so the saving share
//! of income rises as income rises.

use crate::error::{Error, Result};

/// A `(income, consumption)` breakpoint of a piecewise-linear consumption function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Knot {
    pub income: f64,
    pub consumption: f64,
}

impl Knot {
    pub fn new(income: f64, consumption: f64) -> Self {
        Knot { income, consumption }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConsumptionFunction {
    /// `C(Y) = C0 + c·Y`.
    Linear { autonomous: f64, mpc: f64 },
    /// `C(Y) = C0 + (c_hi/λ)(1 − e^(−λY))`, with `C'(Y) = c_hi·e^(−λY)`.
    SaturatingMpc {
        autonomous: f64,
        initial_mpc: f64,
        decay: f64,
    },
    /// Linear interpolation through the knots, extended past the last knot
    /// with the final segment's slope. The first knot sits at zero income.
    PiecewiseLinear { knots: Vec<Knot> },
}

fn check_autonomous(field: &str, value: f64) -> Result<()> {
    if !value.is_finite() || value < 0.0 {
        return Err(Error::invalid(
            field,
            value,
            "autonomous consumption must be finite and non-negative",
        ));
    }
    Ok(())
}

fn check_mpc(field: &str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::invalid(field, value, "marginal propensity must be finite"));
    }
    if value >= 1.0 {
        return Err(Error::invalid(
            field,
            value,
            "marginal propensity ≥ 1 violates the fundamental psychological law (0 < c < 1)",
        ));
    }
    if value <= 0.0 {
        return Err(Error::invalid(
            field,
            value,
            "marginal propensity ≤ 0 violates the fundamental psychological law (0 < c < 1)",
        ));
    }
    Ok(())
}

impl ConsumptionFunction {
    pub fn linear(autonomous: f64, mpc: f64) -> Result<Self> {
        let cf = ConsumptionFunction::Linear { autonomous, mpc };
        cf.validate()?;
        Ok(cf)
    }

    pub fn saturating_mpc(autonomous: f64, initial_mpc: f64, decay: f64) -> Result<Self> {
        let cf = ConsumptionFunction::SaturatingMpc {
            autonomous,
            initial_mpc,
            decay,
        };
        cf.validate()?;
        Ok(cf)
    }

    pub fn piecewise_linear(knots: Vec<Knot>) -> Result<Self> {
        let cf = ConsumptionFunction::PiecewiseLinear { knots };
        cf.validate()?;
        Ok(cf)
    }

    pub fn family(&self) -> &'static str {
        match self {
            ConsumptionFunction::Linear { .. } => "linear",
            ConsumptionFunction::SaturatingMpc { .. } => "saturating-mpc",
            ConsumptionFunction::PiecewiseLinear { .. } => "piecewise-linear",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ConsumptionFunction::Linear { autonomous, mpc } => {
                check_autonomous("consumption.autonomous", *autonomous)?;
                check_mpc("consumption.mpc", *mpc)
            }
            ConsumptionFunction::SaturatingMpc {
                autonomous,
                initial_mpc,
                decay,
            } => {
                check_autonomous("consumption.autonomous", *autonomous)?;
                check_mpc("consumption.initial_mpc", *initial_mpc)?;
                if !decay.is_finite() || *decay <= 0.0 {
                    return Err(Error::invalid(
                        "consumption.decay",
                        decay,
                        "decay rate must be finite and positive so the propensity falls with income",
                    ));
                }
                Ok(())
            }
            ConsumptionFunction::PiecewiseLinear { knots } => validate_knots(knots),
        }
    }

    /// Consumption demand `C(Y)` at income `Y ≥ 0`.
    pub fn eval(&self, income: f64) -> Result<f64> {
        check_income(income)?;
        Ok(match self {
            ConsumptionFunction::Linear { autonomous, mpc } => autonomous + mpc * income,
            ConsumptionFunction::SaturatingMpc {
                autonomous,
                initial_mpc,
                decay,
            } => autonomous - (initial_mpc / decay) * (-decay * income).exp_m1(),
            ConsumptionFunction::PiecewiseLinear { knots } => {
                let i = segment_index(knots, income);
                let (a, b) = (knots[i], knots[i + 1]);
                a.consumption + slope(a, b) * (income - a.income)
            }
        })
    }

    /// Marginal propensity to consume `c(Y) = C'(Y)`. Piecewise-linear
    /// functions report the slope of the segment to the right of a knot.
    pub fn marginal_propensity(&self, income: f64) -> Result<f64> {
        check_income(income)?;
        Ok(match self {
            ConsumptionFunction::Linear { mpc, .. } => *mpc,
            ConsumptionFunction::SaturatingMpc {
                initial_mpc, decay, ..
            } => initial_mpc * (-decay * income).exp(),
            ConsumptionFunction::PiecewiseLinear { knots } => {
                let i = segment_index(knots, income);
                slope(knots[i], knots[i + 1])
            }
        })
    }

    /// `C(Y)/Y`; undefined at zero income.
    pub fn average_propensity(&self, income: f64) -> Result<f64> {
        if income <= 0.0 || income.is_nan() {
            return Err(Error::domain("income", income, "(0, ∞)"));
        }
        Ok(self.eval(income)? / income)
    }

    pub fn autonomous(&self) -> f64 {
        match self {
            ConsumptionFunction::Linear { autonomous, .. }
            | ConsumptionFunction::SaturatingMpc { autonomous, .. } => *autonomous,
            ConsumptionFunction::PiecewiseLinear { knots } => knots[0].consumption,
        }
    }
}

fn check_income(income: f64) -> Result<()> {
    if income.is_nan() || income < 0.0 {
        return Err(Error::domain("income", income, "[0, ∞)"));
    }
    Ok(())
}

fn slope(a: Knot, b: Knot) -> f64 {
    (b.consumption - a.consumption) / (b.income - a.income)
}

/// Index of the segment `[knots[i], knots[i+1]]` that owns `income`
/// (right-continuous at knots, last segment extended to infinity).
fn segment_index(knots: &[Knot], income: f64) -> usize {
    let last_segment = knots.len() - 2;
    let owning_knot = knots.partition_point(|k| k.income <= income).saturating_sub(1);
    owning_knot.min(last_segment)
}

fn validate_knots(knots: &[Knot]) -> Result<()> {
    if knots.len() < 2 {
        return Err(Error::invalid(
            "consumption.knots",
            knots.len(),
            "at least two knots are required",
        ));
    }
    if knots.iter().any(|k| !k.income.is_finite() || !k.consumption.is_finite()) {
        return Err(Error::invalid("consumption.knots", "non-finite", "knots must be finite"));
    }
    if knots[0].income != 0.0 {
        return Err(Error::invalid(
            "consumption.knots[0].income",
            knots[0].income,
            "the first knot must sit at zero income",
        ));
    }
    check_autonomous("consumption.knots[0].consumption", knots[0].consumption)?;
    let mut previous_slope = f64::INFINITY;
    for (i, pair) in knots.windows(2).enumerate() {
        if pair[1].income <= pair[0].income {
            return Err(Error::invalid(
                format!("consumption.knots[{}].income", i + 1),
                pair[1].income,
                "knot incomes must be strictly increasing",
            ));
        }
        let s = slope(pair[0], pair[1]);
        check_mpc(&format!("consumption.knots[{i}..{}] slope", i + 1), s)?;
        if s > previous_slope {
            return Err(Error::invalid(
                format!("consumption.knots[{i}..{}] slope", i + 1),
                s,
                "marginal propensity must not rise with income (concavity)",
            ));
        }
        previous_slope = s;
    }
    Ok(())
}
