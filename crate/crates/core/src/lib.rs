//! Placement delivery arrays for coded caching.

pub mod bounds;
pub mod canonical;
pub mod census;
pub mod cli;
pub mod combos;
pub mod constructions;
mod error;
pub mod format;
pub mod grid;
pub mod known;
pub mod sim;
pub mod solver;
pub mod verify;

pub use error::{PdaError, Result};
pub use grid::{Cell, PdaGrid, PdaParams};
pub use verify::{verify, VerificationReport};
