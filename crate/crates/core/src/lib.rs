//! Deciding algebraicity of the solutions of `y' = u y` for rational `u`,
//! by rational residues, effective Kronecker bounds and p-curvatures.

pub mod arith;
pub mod bounds;
pub mod deciders;
pub mod error;
pub mod hermite_pade;
pub mod normal_form;
pub mod pcurvature;
pub mod resultants;
pub mod sample;

pub use error::{Error, Result};
