//! File formats and command implementations behind the `gabidulin` binary.

pub mod commands;
pub mod format;
