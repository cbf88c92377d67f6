//! Reduction of the (1−x)-weight double integral to one dimension.
//!
//! Substituting u = xy and integrating out the remaining variable collapses
//! the double integral to
//!
//! ```text
//!   ∫₀¹ (−ln u)^z · (u − 1 − ln u)/(1 − u) du ,
//! ```
//!
//! evaluated here by tanh-sinh quadrature with level refinement. Near u = 1
//! the factor (u − 1 − ln u)/(1 − u) is a 0/0 form; with v = 1 − u it equals
//! v/2 + v²/3 + v³/4 + … and is summed as that series, which also yields
//! −ln u = v(1 + series) for free. The reported error bound is the last
//! refinement delta — a heuristic, flagged as such.

use astro_float::{BigFloat, RoundingMode};

use super::tanhsinh::{tanh_sinh_nodes, Node};
use super::{BoundKind, EvaluationResult, Method, QUAD_MAX_LEVELS};
use crate::error::{Error, Result};
use crate::prec::{
    bf_cmp, bf_le, bf_log2_approx, bf_to_f64_approx, bf_u64, pow2, with_consts, Complex,
    PrecisionContext,
};

/// (−ln u, h(u)) with h = (u − 1 − ln u)/(1 − u), for a node at distance
/// `v` = 1 − u from 1. Stable on both ends.
fn log_and_ratio(u: &BigFloat, v: &BigFloat, ctx: &PrecisionContext) -> (BigFloat, BigFloat) {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    if bf_log2_approx(v) <= -1.0 {
        // h = v/2 + v²/3 + v³/4 + …, then −ln u = v (1 + h).
        let mut h = v.mul(&pow2(-1), p, rm);
        let mut pw = v.clone();
        for m in 3..(p as u64 + 24) {
            pw = pw.mul(v, p, rm);
            let term = pw.div(&bf_u64(m, p), p, rm);
            h = h.add(&term, p, rm);
            if bf_log2_approx(&term) < bf_log2_approx(&h) - p as f64 - 8.0 {
                break;
            }
        }
        let minus_ln = v.mul(&h.add(&bf_u64(1, p), p, rm), p, rm);
        (minus_ln, h)
    } else {
        let minus_ln = with_consts(|cc| u.ln(p, rm, cc)).neg();
        let h = minus_ln.sub(v, p, rm).div(v, p, rm);
        (minus_ln, h)
    }
}

/// Integrand (−ln u)^z · h(u) at one node.
fn integrand(z: &Complex, u: &BigFloat, v: &BigFloat, ctx: &PrecisionContext) -> Complex {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let (t, h) = log_and_ratio(u, v, ctx);
    let ln_t = with_consts(|cc| t.ln(p, rm, cc));
    z.scale(&ln_t, ctx).exp(ctx).scale(&h, ctx)
}

/// Quadrature value at one refinement level (full recomputation).
fn level_value(z: &Complex, level: u32, nodes: &[Node], ctx: &PrecisionContext) -> (Complex, u64) {
    let mut sum =
        integrand(z, &nodes[0].x, &nodes[0].one_minus_x, ctx).scale(&nodes[0].weight, ctx);
    let mut evals = 1u64;
    for n in nodes.iter().skip(1) {
        let a = integrand(z, &n.x, &n.one_minus_x, ctx);
        let b = integrand(z, &n.one_minus_x, &n.x, ctx);
        sum = sum.add(&a.add(&b, ctx).scale(&n.weight, ctx), ctx);
        evals += 2;
    }
    (sum.scale(&pow2(-(i64::from(level))), ctx), evals)
}

/// One-dimensional evaluation of the (1−x)-weight integral for ℜ(z) > −2.
pub fn reduce_1d_eval(
    z: &Complex,
    ctx: &PrecisionContext,
    tol: &BigFloat,
) -> Result<EvaluationResult> {
    if tol.is_nan() || tol.is_inf() || !tol.is_positive() || tol.is_zero() {
        return Err(Error::Usage("tolerance must be a positive number".into()));
    }
    if !z.is_finite() {
        return Err(Error::Domain("exponent must be finite".into()));
    }
    let minus_two = crate::prec::bf_i64(-2, 64);
    if !matches!(bf_cmp(&z.re, &minus_two), std::cmp::Ordering::Greater) {
        return Err(Error::Domain(format!(
            "reduction requires Re(z) > -2, got {}",
            bf_to_f64_approx(&z.re)
        )));
    }

    let p = ctx.total_bits();
    let half_tol = tol.mul(&pow2(-1), p, ctx.rm());
    let mut effort = 0u64;
    let mut prev: Option<Complex> = None;
    let mut last_delta: Option<BigFloat> = None;
    for level in 1..=QUAD_MAX_LEVELS {
        let nodes = tanh_sinh_nodes(level, ctx);
        let (value, evals) = level_value(z, level, &nodes, ctx);
        effort += evals;
        if let Some(prev_value) = prev.replace(value.clone()) {
            let delta = value.sub(&prev_value, ctx).abs(ctx);
            last_delta = Some(delta.clone());
            if level >= 3 && bf_le(&delta, &half_tol) {
                let bound = delta
                    .add(
                        &value.abs(ctx).mul(&ctx.eps_working(), p, ctx.rm()),
                        p,
                        RoundingMode::Up,
                    )
                    .add(&half_tol, p, RoundingMode::Up);
                let mut bound_out = bound;
                let _ = bound_out.set_precision(ctx.working_bits(), RoundingMode::Up);
                return Ok(EvaluationResult {
                    value: value.rounded_to_working(ctx).ensure_finite("reduce1d")?,
                    error_bound: bound_out,
                    method: Method::Reduce1d,
                    bound_kind: BoundKind::Heuristic,
                    effort,
                    precision_bits: ctx.working_bits(),
                });
            }
        }
    }
    Err(Error::NonConvergence(format!(
        "refinement levels exhausted; last delta 2^{:.0}",
        last_delta.map(|d| bf_log2_approx(&d)).unwrap_or(f64::INFINITY)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prec::decimal_string;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128)
    }

    #[test]
    fn matches_known_values() {
        let c = ctx();
        let tol = c.parse_decimal("1e-25").unwrap();
        // z = 0 → ζ(2) − 1
        let r = reduce_1d_eval(&Complex::zero(), &c, &tol).unwrap();
        assert_eq!(&decimal_string(&r.value.re, 15), "6.44934066848226e-1");
        // z = 2 → 6ζ(4) − 2
        let r = reduce_1d_eval(&Complex::from_u64(2, &c), &c, &tol).unwrap();
        assert_eq!(&decimal_string(&r.value.re, 15), "4.49393940226683e+0");
        // z = −1 → γ
        let r = reduce_1d_eval(&Complex::from_i64(-1, &c), &c, &tol).unwrap();
        assert_eq!(&decimal_string(&r.value.re, 15), "5.77215664901533e-1");
    }

    #[test]
    fn negative_half_line_value_is_finite_and_real() {
        let c = ctx();
        let tol = c.parse_decimal("1e-20").unwrap();
        let z = Complex::parse("-1.5", "0", &c).unwrap();
        let r = reduce_1d_eval(&z, &c, &tol).unwrap();
        assert!(r.value.is_finite());
        assert!(r.value.re.is_positive());
        assert!(r.value.im.is_zero() || bf_log2_approx(&r.value.im) < -100.0);
        assert!(matches!(r.bound_kind, BoundKind::Heuristic));
    }

    #[test]
    fn complex_exponent_runs() {
        let c = ctx();
        let tol = c.parse_decimal("1e-18").unwrap();
        let z = Complex::parse("0.5", "1.5", &c).unwrap();
        let r = reduce_1d_eval(&z, &c, &tol).unwrap();
        assert!(r.value.is_finite());
        assert!(!r.value.im.is_zero());
    }

    #[test]
    fn domain_and_tolerance_errors() {
        let c = ctx();
        let tol = c.parse_decimal("1e-18").unwrap();
        let z = Complex::parse("-2.0", "0", &c).unwrap();
        assert!(matches!(reduce_1d_eval(&z, &c, &tol), Err(Error::Domain(_))));
        assert!(matches!(
            reduce_1d_eval(&Complex::zero(), &c, &bf_u64(0, 64)),
            Err(Error::Usage(_))
        ));
    }
}
