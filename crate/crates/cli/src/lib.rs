//! Command-line and HTTP front ends for `luminous-core`.

pub mod commands;
pub mod server;
pub mod wire;

pub use commands::{AppError, Limits};
