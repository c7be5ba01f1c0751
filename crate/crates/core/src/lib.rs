//! Exact state sums, Khovanov homology and Potts partition functions.

pub mod bracket;
pub mod cli;
pub mod complex;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod khovanov;
pub mod linalg;
pub mod poly;
pub mod potts;
pub mod quantum;
pub mod stosic;
pub mod verify;

pub use diagram::{parse_pd, EnhancedState, Label, LinkDiagram, Smoothing, SmoothingState};
pub use error::{Error, Result};
pub use poly::{ComplexValue, LaurentPoly};
