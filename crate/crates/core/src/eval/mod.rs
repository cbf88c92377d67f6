//! Three independent numerical evaluators for the double integrals:
//! closed-form term series with rigorous tail bounds, reduction to a
//! one-dimensional integral, and direct two-dimensional tanh-sinh quadrature.

mod quad2d;
mod reduce1d;
mod series;
mod tanhsinh;

pub use quad2d::quad_2d_eval;
pub use reduce1d::reduce_1d_eval;
pub use series::{series_eval, series_eval_conjecture};
pub use tanhsinh::tanh_sinh_nodes;

use astro_float::BigFloat;

use crate::exact::MonomialSpec;
use crate::prec::{decimal_string, Complex};

/// Which integral is meant.
#[derive(Clone, Debug)]
pub enum IntegralSpec {
    /// ∫∫ lnⁿ(xy)/(1−xy) · xʳyˢ over the open unit square.
    Monomial(MonomialSpec),
    /// ∫∫ [−ln(xy)]ᶻ/(1−xy) · (1−x) over the open unit square, ℜ(z) > −2.
    Conjecture(Complex),
}

impl IntegralSpec {
    /// Deterministic sort/report key, lexicographically ordered.
    pub fn key(&self) -> String {
        match self {
            IntegralSpec::Monomial(m) => {
                format!("monomial r={:03} s={:03} n={:03}", m.r, m.s, m.n)
            }
            IntegralSpec::Conjecture(z) => format!(
                "conjecture z={}{}i",
                decimal_string(&z.re, 20),
                decimal_string(&z.im, 20)
            ),
        }
    }
}

/// Evaluation method tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Series,
    Reduce1d,
    Quad2d,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Reduce1d => "reduce1d",
            Method::Quad2d => "quad2d",
        }
    }
}

/// Whether the reported error bound is proved or a refinement heuristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// Proved tail estimate; the truth lies within `error_bound` of `value`.
    Rigorous,
    /// Successive-refinement delta; trustworthy in practice, not proved.
    Heuristic,
}

/// One method's output: value, error bound, and how hard it worked.
#[derive(Clone, Debug)]
pub struct EvaluationResult {
    pub value: Complex,
    pub error_bound: BigFloat,
    pub method: Method,
    pub bound_kind: BoundKind,
    /// Terms summed or integrand evaluations performed.
    pub effort: u64,
    pub precision_bits: usize,
}

/// Series summation never exceeds this many terms.
pub const SERIES_EFFORT_CAP: u64 = 10_000_000;

/// Quadrature refinement never exceeds this many levels.
pub const QUAD_MAX_LEVELS: u32 = 12;
