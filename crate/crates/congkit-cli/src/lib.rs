//! Library surface of the CLI: report rendering and the verification rows.
//! The `congkit` binary is a thin argument-parsing layer over these.

pub mod output;
pub mod verify;
