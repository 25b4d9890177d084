//! The model's building blocks: consumption, the marginal efficiency of
//! capital, liquidity preference, and the economy that ties them together.

mod consumption;
mod economy;
mod investment;
mod liquidity;

pub use consumption::{ConsumptionFunction, Knot};
pub use economy::Economy;
pub use investment::MecSchedule;
pub use liquidity::LiquidityFunction;
