//! Library surface of the workbench CLI, exposed so the integration tests
//! can call the command implementations directly alongside the binary.

pub mod commands;
pub mod report;
