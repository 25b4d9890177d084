//! Numerical engine for the Keynesian model of effective demand.
//!
//! The crate is organised bottom-up:
//!
//! * [`model`] holds the behavioural functions (consumption, marginal
//!   efficiency of capital, liquidity preference) and the [`Economy`] that
//!   bundles them.
//! * [`solvers`] provides bisection and damped fixed-point kernels and the
//!   effective-demand, interest-rate and general-equilibrium solvers.
//! * [`multiplier`] computes the investment multiplier locally, between two
//!   equilibria, and as a round-by-round expansion path.
//! * [`statics`] runs policy experiments, parameter sweeps and samples the
//!   curves behind the textbook diagrams.
//! * [`io`] reads scenario files and reads/writes CSV tables.

pub mod error;
pub mod io;
pub mod model;
pub mod multiplier;
pub mod solvers;
pub mod statics;

pub use error::{Error, Result};
pub use model::{ConsumptionFunction, Economy, Knot, LiquidityFunction, MecSchedule};
pub use solvers::{EquilibriumReport, SolverConfig};
