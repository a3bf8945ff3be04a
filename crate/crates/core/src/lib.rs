//! Order-by-order boundary-layer expansion of the steady 2D incompressible
//! MHD system on a rectangle, with desk-scale residual and remainder audits.
//!
//! The crate builds the expansion ladder (zeroth-order nonlinear layer,
//! ideal interior correctors, higher-order linear layers), composes the
//! approximate solution, applies the rescaled MHD operator to measure
//! residuals, and runs a direct reference solve plus a Picard remainder
//! iteration for end-to-end error metrics.

pub mod budget;
pub mod calculus;
pub mod catalogue;
pub mod checks;
pub mod compose;
pub mod config;
pub mod cutoff;
pub mod error;
pub mod field;
pub mod grid;
pub mod ideal;
pub mod layer0;
pub mod layers;
pub mod linalg;
pub mod march;
pub mod norms;
pub mod pressure;
pub mod profiles;
pub mod ratefit;
pub mod reference;
pub mod remainder;
pub mod residual;
pub mod snapshot;
pub mod spline;
pub mod symmetry;

pub use error::CoreError;
pub use field::ScalarField;
pub use grid::{Frame, Grid, Spacing};
