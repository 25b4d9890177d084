use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter violates one of the model's structural assumptions.
    #[error("invalid parameter {field} = {value}: {reason}")]
    InvalidParameter {
        field: String,
        value: String,
        reason: String,
    },

    #[error("{quantity} = {value} is outside the domain {domain}")]
    Domain {
        quantity: &'static str,
        value: f64,
        domain: String,
    },

    #[error("interest rate {rate} is at or below the liquidity-trap floor {floor}")]
    RateFloor { rate: f64, floor: f64 },

    /// Transactions demand alone absorbs the whole money supply.
    #[error(
        "money supply {money_supply} does not exceed transactions demand {transactions_demand}; \
         no interest rate clears the money market"
    )]
    InsufficientMoney {
        money_supply: f64,
        transactions_demand: f64,
    },

    #[error("equilibrium at investment {investment} is capped at full employment; the multiplier is undefined there")]
    FullEmployment { investment: f64 },

    #[error("degenerate multiplier: marginal propensity {mpc} is not below 1")]
    Degenerate { mpc: f64 },

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("could not bracket a root after {limit} expansions")]
    BracketFailure { limit: u32 },

    #[error("excess demand at zero employment is {excess}; expected a non-negative value")]
    SignStructure { excess: f64 },

    #[error("non-finite value {value} encountered at iterate {iterate}")]
    NonFinite { iterate: f64, value: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("csv error at line {line}: {message}")]
    Csv { line: u64, message: String },
}

impl Error {
    pub fn invalid(field: impl Into<String>, value: impl ToString, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field: field.into(),
            value: value.to_string(),
            reason: reason.into(),
        }
    }

    pub fn domain(quantity: &'static str, value: f64, domain: impl Into<String>) -> Self {
        Error::Domain {
            quantity,
            value,
            domain: domain.into(),
        }
    }

    /// Stable machine-greppable code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParameter { .. } => "E_VALIDATION",
            Error::Domain { .. } => "E_DOMAIN",
            Error::RateFloor { .. } => "E_RATE_FLOOR",
            Error::InsufficientMoney { .. } => "E_INSUFFICIENT_MONEY",
            Error::FullEmployment { .. } => "E_FULL_EMPLOYMENT",
            Error::Degenerate { .. } => "E_DEGENERATE",
            Error::NoSignChange { .. } => "E_NO_SIGN_CHANGE",
            Error::BracketFailure { .. } => "E_BRACKET",
            Error::SignStructure { .. } => "E_SIGN_STRUCTURE",
            Error::NonFinite { .. } => "E_NON_FINITE",
            Error::Parse(_) => "E_PARSE",
            Error::Csv { .. } => "E_CSV",
        }
    }

    /// True for errors caused by the inputs rather than by the solve.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter { .. } | Error::Domain { .. } | Error::Parse(_) | Error::Csv { .. }
        )
    }
}
