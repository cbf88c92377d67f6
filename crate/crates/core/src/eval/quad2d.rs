//! Direct two-dimensional tanh-sinh quadrature over the open unit square —
//! the slow, independent oracle. Tensor-product nodes, level refinement until
//! successive levels agree below the tolerance.
//!
//! Stability notes: 1 − xy is computed as v_x + x·v_y from the stored
//! endpoint distances (no cancellation), and ln(xy) = ln x + ln y with each
//! factor obtained from ln(1 − v). The map is open-interval by construction,
//! so the singular lines xy = 1 and xy = 0 are never sampled.

use astro_float::{BigFloat, RoundingMode};

use super::tanhsinh::tanh_sinh_nodes;
use super::{BoundKind, EvaluationResult, IntegralSpec, Method, QUAD_MAX_LEVELS};
use crate::error::{Error, Result};
use crate::exact::MonomialSpec;
use crate::prec::{
    bf_cmp, bf_le, bf_log2_approx, bf_to_f64_approx, bf_u64, ln_one_minus, pow2, with_consts,
    Complex, PrecisionContext,
};

/// The weakest tolerance this method accepts.
pub const QUAD_2D_MIN_TOL: &str = "1e-12";

/// One axis entry: position, distance to 1, weight, ln of position, and the
/// position raised to the integer exponent the integrand needs.
struct AxisEntry {
    x: BigFloat,
    v: BigFloat,
    w: BigFloat,
    ln_x: BigFloat,
    x_pow_r: BigFloat,
    x_pow_s: BigFloat,
}

fn build_axis(level: u32, r: u32, s: u32, ctx: &PrecisionContext) -> Vec<AxisEntry> {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let nodes = tanh_sinh_nodes(level, ctx);
    let mut axis = Vec::with_capacity(nodes.len() * 2 - 1);
    for (k, n) in nodes.iter().enumerate() {
        let mut push = |x: &BigFloat, v: &BigFloat, w: &BigFloat| {
            // ln x from whichever of x, 1−x is small; far from 1 the distance
            // v may round to exactly 1 and must not be used.
            let ln_x = if bf_log2_approx(v) <= -1.0 {
                ln_one_minus(v, ctx)
            } else {
                with_consts(|cc| x.ln(p, rm, cc))
            };
            axis.push(AxisEntry {
                x: x.clone(),
                v: v.clone(),
                w: w.clone(),
                ln_x,
                x_pow_r: if r == 0 {
                    bf_u64(1, p)
                } else {
                    x.powi(r as usize, p, rm)
                },
                x_pow_s: if s == 0 {
                    bf_u64(1, p)
                } else {
                    x.powi(s as usize, p, rm)
                },
            });
        };
        push(&n.x, &n.one_minus_x, &n.weight);
        if k > 0 {
            push(&n.one_minus_x, &n.x, &n.weight);
        }
    }
    axis
}

/// Full tensor sum at one level for the monomial integrand
/// xʳ yˢ lnⁿ(xy)/(1−xy).
fn level_value_monomial(
    spec: &MonomialSpec,
    level: u32,
    ctx: &PrecisionContext,
) -> (BigFloat, u64) {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let axis = build_axis(level, spec.r, spec.s, ctx);
    let skip_log2 = -2.0 * (p as f64) - 96.0;
    let mut sum = bf_u64(0, p);
    let mut evals = 0u64;
    for xi in &axis {
        let wx_log2 = bf_log2_approx(&xi.w);
        for yj in &axis {
            if wx_log2 + bf_log2_approx(&yj.w) < skip_log2 {
                continue;
            }
            // 1 − xy = v_x + x v_y
            let one_minus_xy = xi.v.add(&xi.x.mul(&yj.v, p, rm), p, rm);
            let ln_xy = xi.ln_x.add(&yj.ln_x, p, rm);
            let mut f = xi.x_pow_r.mul(&yj.x_pow_s, p, rm);
            if spec.n > 0 {
                f = f.mul(&ln_xy.powi(spec.n as usize, p, rm), p, rm);
            }
            f = f.div(&one_minus_xy, p, rm);
            sum = sum.add(&f.mul(&xi.w.mul(&yj.w, p, rm), p, rm), p, rm);
            evals += 1;
        }
    }
    let h2 = pow2(-2 * i64::from(level));
    (sum.mul(&h2, p, rm), evals)
}

/// Full tensor sum at one level for the conjecture integrand
/// [−ln(xy)]ᶻ (1−x)/(1−xy).
fn level_value_conjecture(
    z: &Complex,
    level: u32,
    ctx: &PrecisionContext,
) -> (Complex, u64) {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let axis = build_axis(level, 0, 0, ctx);
    let skip_log2 = -2.0 * (p as f64) - 96.0;
    let mut sum = Complex::zero();
    let mut evals = 0u64;
    for xi in &axis {
        let wx_log2 = bf_log2_approx(&xi.w);
        for yj in &axis {
            if wx_log2 + bf_log2_approx(&yj.w) < skip_log2 {
                continue;
            }
            let one_minus_xy = xi.v.add(&xi.x.mul(&yj.v, p, rm), p, rm);
            // t = −ln(xy) > 0 on the open square
            let t = xi.ln_x.add(&yj.ln_x, p, rm).neg();
            let ln_t = with_consts(|cc| t.ln(p, rm, cc));
            let t_pow_z = z.scale(&ln_t, ctx).exp(ctx);
            let scale = xi
                .v
                .div(&one_minus_xy, p, rm)
                .mul(&xi.w.mul(&yj.w, p, rm), p, rm);
            sum = sum.add(&t_pow_z.scale(&scale, ctx), ctx);
            evals += 1;
        }
    }
    let h2 = pow2(-2 * i64::from(level));
    (sum.scale(&h2, ctx), evals)
}

/// Direct 2-D tanh-sinh evaluation of either integral family.
///
/// `tol` must be at least 1e−12: this is the independent cross-check, not the
/// precision workhorse. The bound is the final refinement delta (heuristic).
pub fn quad_2d_eval(
    spec: &IntegralSpec,
    ctx: &PrecisionContext,
    tol: &BigFloat,
) -> Result<EvaluationResult> {
    if tol.is_nan() || tol.is_inf() || !tol.is_positive() || tol.is_zero() {
        return Err(Error::Usage("tolerance must be a positive number".into()));
    }
    let min_tol = ctx.parse_decimal(QUAD_2D_MIN_TOL)?;
    if bf_cmp(tol, &min_tol) == std::cmp::Ordering::Less {
        return Err(Error::Usage(format!(
            "2-D quadrature accepts tolerances down to {QUAD_2D_MIN_TOL}; got 2^{:.0}",
            bf_log2_approx(tol)
        )));
    }
    if let IntegralSpec::Conjecture(z) = spec {
        if !z.is_finite() {
            return Err(Error::Domain("exponent must be finite".into()));
        }
        let minus_two = crate::prec::bf_i64(-2, 64);
        if !matches!(bf_cmp(&z.re, &minus_two), std::cmp::Ordering::Greater) {
            return Err(Error::Domain(format!(
                "conjecture integrand requires Re(z) > -2, got {}",
                bf_to_f64_approx(&z.re)
            )));
        }
    }

    let p = ctx.total_bits();
    let half_tol = tol.mul(&pow2(-1), p, ctx.rm());
    let mut effort = 0u64;
    let mut prev: Option<Complex> = None;
    let mut last_delta: Option<BigFloat> = None;
    for level in 1..=QUAD_MAX_LEVELS {
        let (value, evals) = match spec {
            IntegralSpec::Monomial(m) => {
                let (v, e) = level_value_monomial(m, level, ctx);
                (Complex::real(v), e)
            }
            IntegralSpec::Conjecture(z) => level_value_conjecture(z, level, ctx),
        };
        effort += evals;
        if let Some(prev_value) = prev.replace(value.clone()) {
            let delta = value.sub(&prev_value, ctx).abs(ctx);
            last_delta = Some(delta.clone());
            if level >= 3 && bf_le(&delta, &half_tol) {
                if let IntegralSpec::Monomial(m) = spec {
                    let sign_ok = if m.n % 2 == 0 {
                        value.re.is_positive()
                    } else {
                        value.re.is_negative()
                    };
                    if !sign_ok {
                        return Err(Error::NonFinite(format!(
                            "monomial quadrature lost the (−1)ⁿ sign pattern at {m}"
                        )));
                    }
                }
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
                    value: value.rounded_to_working(ctx).ensure_finite("quad2d")?,
                    error_bound: bound_out,
                    method: Method::Quad2d,
                    bound_kind: BoundKind::Heuristic,
                    effort,
                    precision_bits: ctx.working_bits(),
                });
            }
        }
    }
    Err(Error::NonConvergence(format!(
        "2-D refinement cap reached; last delta 2^{:.0}",
        last_delta.map(|d| bf_log2_approx(&d)).unwrap_or(f64::INFINITY)
    )))
}
