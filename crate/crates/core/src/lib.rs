//! Symbolic engines: loop equations for general beta, ODE recurrences for
//! beta = 2 and 4, and the polynomial structure checks built on them.

pub mod error;
pub mod loop_engine;
pub mod ode_engine;
pub mod polyprops;
pub mod report;
pub mod suite;

pub use error::CoreError;
pub use report::{CheckItem, Report};
