//! Scenario documents and CSV tables.

mod csv;
mod scenario;

pub use self::csv::{emit_csv, format_value, parse_csv};
pub use scenario::{parse_scenario, to_scenario_text, Scenario, FORMAT_VERSION};
