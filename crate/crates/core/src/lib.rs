//! Exact-arithmetic kernel for the Tate coefficient ring Z[c^{±1}], its
//! divided-power target Γ[b_*], the boundary operator between them, the
//! Bernoulli generating-function identities relating b and c, and a numeric
//! layer for polylogarithms and blackbody radiance.

pub mod checks;
pub mod divided;
pub mod error;
pub mod fgl;
pub mod formal;
pub mod laurent;
pub mod localized;
pub mod parse;
pub mod polylog;
pub mod quad;
pub mod radiation;
pub mod rational;
pub mod series;
pub mod tate;

pub use error::KernelError;
