//! Scenario documents.
//!
//! A scenario is a TOML document with a required `format_version = 1`,
//! sections `[consumption]`, `[mec]`, `[liquidity]`, `[economy]` and an
//! optional `[solver]`. Unknown keys are rejected. Every model invariant is
//! checked at load time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ConsumptionFunction, Economy, Knot, LiquidityFunction, MecSchedule};
use crate::solvers::SolverConfig;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub economy: Economy,
    pub solver: SolverConfig,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    format_version: u32,
    consumption: ConsumptionSection,
    mec: MecSection,
    liquidity: LiquiditySection,
    economy: EconomySection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    solver: Option<SolverSection>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
enum ConsumptionSection {
    Linear {
        autonomous: f64,
        mpc: f64,
    },
    SaturatingMpc {
        autonomous: f64,
        initial_mpc: f64,
        decay: f64,
    },
    PiecewiseLinear {
        /// `[income, consumption]` pairs.
        knots: Vec<[f64; 2]>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MecSection {
    base_investment: f64,
    rate_sensitivity: f64,
    #[serde(default)]
    optimism: f64,
    #[serde(default)]
    investment_floor: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LiquiditySection {
    transactions_coefficient: f64,
    speculative_scale: f64,
    speculative_elasticity: f64,
    #[serde(default)]
    rate_floor: f64,
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EconomySection {
    money_supply: f64,
    #[serde(default = "one")]
    productivity: f64,
    full_employment: f64,
    #[serde(default = "one")]
    wage_unit: f64,
    #[serde(default)]
    autonomous_investment: f64,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolverSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    tol_abs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_iter: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    damping: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bracket_expansion_limit: Option<u32>,
}

impl From<&ConsumptionFunction> for ConsumptionSection {
    fn from(cf: &ConsumptionFunction) -> Self {
        match cf {
            ConsumptionFunction::Linear { autonomous, mpc } => ConsumptionSection::Linear {
                autonomous: *autonomous,
                mpc: *mpc,
            },
            ConsumptionFunction::SaturatingMpc {
                autonomous,
                initial_mpc,
                decay,
            } => ConsumptionSection::SaturatingMpc {
                autonomous: *autonomous,
                initial_mpc: *initial_mpc,
                decay: *decay,
            },
            ConsumptionFunction::PiecewiseLinear { knots } => ConsumptionSection::PiecewiseLinear {
                knots: knots.iter().map(|k| [k.income, k.consumption]).collect(),
            },
        }
    }
}

impl From<ConsumptionSection> for ConsumptionFunction {
    fn from(section: ConsumptionSection) -> Self {
        match section {
            ConsumptionSection::Linear { autonomous, mpc } => ConsumptionFunction::Linear { autonomous, mpc },
            ConsumptionSection::SaturatingMpc {
                autonomous,
                initial_mpc,
                decay,
            } => ConsumptionFunction::SaturatingMpc {
                autonomous,
                initial_mpc,
                decay,
            },
            ConsumptionSection::PiecewiseLinear { knots } => ConsumptionFunction::PiecewiseLinear {
                knots: knots.into_iter().map(|[y, c]| Knot::new(y, c)).collect(),
            },
        }
    }
}

#[derive(Deserialize)]
struct VersionProbe {
    format_version: Option<u32>,
}

/// One-line rendering of a TOML error: `line L, column C: message`.
fn toml_error(text: &str, err: &toml::de::Error) -> Error {
    let message = err.message().trim_end().replace('\n', " ");
    match err.span() {
        Some(span) => {
            let before = &text[..span.start.min(text.len())];
            let line = before.matches('\n').count() + 1;
            let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
            Error::Parse(format!("line {line}, column {column}: {message}"))
        }
        None => Error::Parse(message),
    }
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    // Check the version first so a newer document is not reported as malformed.
    let version: VersionProbe = toml::from_str(text).map_err(|e| toml_error(text, &e))?;
    match version.format_version {
        Some(FORMAT_VERSION) => {}
        Some(other) => {
            return Err(Error::Parse(format!(
                "unsupported format_version {other} (expected {FORMAT_VERSION})"
            )))
        }
        None => return Err(Error::Parse(format!("missing format_version (expected {FORMAT_VERSION})"))),
    }
    let doc: Document = toml::from_str(text).map_err(|e| toml_error(text, &e))?;
    let economy = Economy {
        consumption: doc.consumption.into(),
        mec: MecSchedule {
            base_investment: doc.mec.base_investment,
            rate_sensitivity: doc.mec.rate_sensitivity,
            optimism: doc.mec.optimism,
            investment_floor: doc.mec.investment_floor,
        },
        liquidity: LiquidityFunction {
            transactions_coefficient: doc.liquidity.transactions_coefficient,
            speculative_scale: doc.liquidity.speculative_scale,
            speculative_elasticity: doc.liquidity.speculative_elasticity,
            rate_floor: doc.liquidity.rate_floor,
        },
        money_supply: doc.economy.money_supply,
        productivity: doc.economy.productivity,
        full_employment: doc.economy.full_employment,
        wage_unit: doc.economy.wage_unit,
        autonomous_investment: doc.economy.autonomous_investment,
    }
    .validated()?;

    let defaults = SolverConfig::default();
    let overrides = doc.solver.unwrap_or_default();
    let solver = SolverConfig {
        tol_abs: overrides.tol_abs.unwrap_or(defaults.tol_abs),
        max_iter: overrides.max_iter.unwrap_or(defaults.max_iter),
        damping: overrides.damping.unwrap_or(defaults.damping),
        bracket_expansion_limit: overrides
            .bracket_expansion_limit
            .unwrap_or(defaults.bracket_expansion_limit),
    };
    solver.validate()?;
    Ok(Scenario { economy, solver })
}

/// Serialises a scenario with every field written out explicitly.
pub fn to_scenario_text(scenario: &Scenario) -> String {
    let eco = &scenario.economy;
    let doc = Document {
        format_version: FORMAT_VERSION,
        consumption: (&eco.consumption).into(),
        mec: MecSection {
            base_investment: eco.mec.base_investment,
            rate_sensitivity: eco.mec.rate_sensitivity,
            optimism: eco.mec.optimism,
            investment_floor: eco.mec.investment_floor,
        },
        liquidity: LiquiditySection {
            transactions_coefficient: eco.liquidity.transactions_coefficient,
            speculative_scale: eco.liquidity.speculative_scale,
            speculative_elasticity: eco.liquidity.speculative_elasticity,
            rate_floor: eco.liquidity.rate_floor,
        },
        economy: EconomySection {
            money_supply: eco.money_supply,
            productivity: eco.productivity,
            full_employment: eco.full_employment,
            wage_unit: eco.wage_unit,
            autonomous_investment: eco.autonomous_investment,
        },
        solver: Some(SolverSection {
            tol_abs: Some(scenario.solver.tol_abs),
            max_iter: Some(scenario.solver.max_iter),
            damping: Some(scenario.solver.damping),
            bracket_expansion_limit: Some(scenario.solver.bracket_expansion_limit),
        }),
    };
    toml::to_string(&doc).expect("scenario documents always serialise")
}
