//! Exact invariants of resolution graphs of normal surface singularities
//! carrying a generic analytic structure.

pub mod cycle;
pub mod error;
pub mod blowup;
pub mod cli;
pub mod cohomology;
pub mod families;
pub mod hyperelliptic;
pub mod io;
pub mod lattice;
pub mod opt;
pub mod relative;

pub use cycle::{IntCycle, RatCycle, Q};
pub use error::{Diagnostic, Error, Result};
pub use lattice::{RawGraph, RawVertex, ResolutionGraph};
