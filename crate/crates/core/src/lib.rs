//! zetaquad evaluates the family of singular double integrals
//!
//! ```text
//!   ∫₀¹∫₀¹ lnⁿ(xy)/(1 − xy) · xʳ yˢ dx dy          (monomial weight)
//!   ∫₀¹∫₀¹ [−ln(xy)]ᶻ/(1 − xy) · (1 − x) dx dy      (ℜ(z) > −2)
//! ```
//!
//! by three independent routes — exact closed forms, term-by-term series
//! summation with rigorous tail bounds, and direct tanh-sinh quadrature —
//! and cross-checks them against the right-hand side
//! Γ(z+2)[ζ(z+2) − 1/(z+1)] at arbitrary precision. The z → −1 limit of the
//! identity produces Euler's constant γ, which gets its own limit study.
//!
//! Entry points:
//! - [`exact`]: exact rationals and ζ-linear forms for the monomial family;
//! - [`prec`]: arbitrary-precision complex kernels (Γ, ζ, ζ − 1/(s−1), γ);
//! - [`eval`]: the three numerical evaluators with reported error bounds;
//! - [`verify`]: grid/box sweeps producing verification records;
//! - [`report`]: deterministic JSON/CSV/text reports.

pub mod error;
pub mod eval;
pub mod exact;
pub mod prec;
pub mod verify;

pub use error::{Error, Result};
