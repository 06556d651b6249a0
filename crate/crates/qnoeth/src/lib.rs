//! Text formats, serialisable reports and the command line for
//! [`qnoeth_core`].

pub mod cli;
pub mod error;
pub mod format;
pub mod report;

pub use cli::run;
pub use error::{FormatError, InputError};
pub use report::CommandReport;
