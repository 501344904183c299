//! Batch front end: load a JSON scenario, run the requested checks and
//! render the result as text or canonical JSON.

mod emit;
mod error;
mod run;
mod scenario;

pub use emit::{emit, machine, text, Format};
pub use error::CliError;
pub use run::{run, Report, ENGINE_VERSION};
pub use scenario::{load_scenario, parse_scenario, CheckRequest, Scenario, MAX_DIMENSION};
