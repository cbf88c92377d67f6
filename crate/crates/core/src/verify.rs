//! Desk-scale verification sweeps: the monomial family over (r, s, n) boxes,
//! the conjectured identity over real/complex z grids, and the z → −1 limit
//! study for Euler's constant. Each case yields a [`VerificationRecord`]
//! holding every computed value, every pairwise delta, and the effective
//! tolerance — failures keep their evidence, and evaluator errors become
//! failed records instead of aborting the sweep.
//!
//! Comparison tolerances are the sum of the compared methods' reported error
//! bounds plus the caller's tolerance: honest, reported numerical error never
//! fails a record.
//!
//! Grid points are independent tasks; with `jobs > 1` they run on scoped
//! threads and are reassembled in input order, so reports are byte-identical
//! for any job count.

use astro_float::{BigFloat, RoundingMode};

use crate::error::{Error, Result};
use crate::eval::{
    quad_2d_eval, reduce_1d_eval, series_eval, series_eval_conjecture, EvaluationResult,
    IntegralSpec,
};
use crate::exact::{
    diagonal_form, divisibility_check, off_diagonal_value, one_minus_x_form, MonomialSpec,
};
use crate::prec::{
    bf_le, bf_max, bf_to_f64_approx, bf_u64, eval_form, euler_gamma, gamma, pow2, zeta_minus_pole,
    Complex, PrecisionContext,
};

/// Right side of the conjectured identity: Γ(z+2)[ζ(z+2) − 1/(z+1)],
/// computed as Γ(z+2) · (pole-subtracted ζ)(z+2).
///
/// Algebraically identical to the bracketed form and valid *including* z = −1,
/// where it returns Γ(1)·γ = γ with no limit machinery.
pub fn rhs_value(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let two = Complex::from_u64(2, ctx);
    let z2 = z.add(&two, ctx);
    if !z2.is_finite() || !z2.re.is_positive() {
        return Err(Error::Domain(format!(
            "right side requires Re(z) > -2, got Re(z) = {}",
            bf_to_f64_approx(&z.re)
        )));
    }
    let wide = ctx.widened(8);
    let g = gamma(&z2, &wide)?;
    let zmp = zeta_minus_pole(&z2, &wide)?;
    Ok(g.mul(&zmp, &wide).rounded_to_working(ctx))
}

/// Inclusive sweep box 0 ≤ r ≤ r_max, 0 ≤ s ≤ s_max, 0 ≤ n ≤ n_max.
#[derive(Clone, Copy, Debug)]
pub struct MonomialBox {
    pub r_max: u32,
    pub s_max: u32,
    pub n_max: u32,
}

/// Verification grid for the conjectured identity.
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub real_points: Vec<BigFloat>,
    pub complex_points: Vec<Complex>,
}

impl GridSpec {
    /// The shipped default grid. The set of z values is an artifact choice:
    /// it covers the slow-decay strip end (−1.9), the γ point (−1), plain
    /// integers, a generic irrational, and four complex points with
    /// |Im z| ≤ 4.
    pub fn default_grid(ctx: &PrecisionContext) -> Self {
        let real = ["-1.9", "-1.5", "-1", "-0.5", "0", "0.5", "1", "2", "3.7", "5"];
        let complex = [("-0.5", "1"), ("1", "2"), ("0.25", "-3"), ("2", "4")];
        GridSpec {
            real_points: real
                .iter()
                .map(|s| ctx.parse_decimal(s).expect("builtin grid"))
                .collect(),
            complex_points: complex
                .iter()
                .map(|(re, im)| Complex::parse(re, im, ctx).expect("builtin grid"))
                .collect(),
        }
    }

    pub fn points(&self) -> Vec<Complex> {
        let mut pts: Vec<Complex> = self
            .real_points
            .iter()
            .map(|re| Complex::real(re.clone()))
            .collect();
        pts.extend(self.complex_points.iter().cloned());
        pts
    }

    pub fn is_valid(&self) -> bool {
        let minus_two = crate::prec::bf_i64(-2, 64);
        self.points()
            .iter()
            .all(|z| z.is_finite() && matches!(crate::prec::bf_cmp(&z.re, &minus_two), std::cmp::Ordering::Greater))
    }
}

/// One method value attached to a record.
#[derive(Clone, Debug)]
pub struct MethodValue {
    pub method: String,
    pub value: Complex,
    pub error_bound: BigFloat,
    pub effort: u64,
    pub precision_bits: usize,
}

impl MethodValue {
    fn from_result(r: &EvaluationResult) -> Self {
        MethodValue {
            method: r.method.as_str().into(),
            value: r.value.clone(),
            error_bound: r.error_bound.clone(),
            effort: r.effort,
            precision_bits: r.precision_bits,
        }
    }
}

/// One pairwise comparison inside a record.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub method_a: String,
    pub method_b: String,
    pub value_a: Complex,
    pub value_b: Complex,
    pub delta: BigFloat,
    pub tolerance: BigFloat,
    pub passed: bool,
}

/// Divisibility witness for off-diagonal monomial cases.
#[derive(Clone, Debug)]
pub struct DivisibilityRecord {
    pub holds: bool,
    pub denominator: String,
    pub bound: String,
}

/// Everything observed while verifying one case.
#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub key: String,
    pub closed_form: Option<String>,
    pub divisibility: Option<DivisibilityRecord>,
    pub method_values: Vec<MethodValue>,
    pub comparisons: Vec<Comparison>,
    pub max_delta: BigFloat,
    pub tolerance: BigFloat,
    pub passed: bool,
    pub notes: String,
}

impl VerificationRecord {
    fn failed(key: String, tolerance: &BigFloat, notes: String) -> Self {
        VerificationRecord {
            key,
            closed_form: None,
            divisibility: None,
            method_values: Vec::new(),
            comparisons: Vec::new(),
            max_delta: bf_u64(0, 64),
            tolerance: tolerance.clone(),
            passed: false,
            notes,
        }
    }
}

fn compare(
    method_a: &str,
    a: &Complex,
    bound_a: &BigFloat,
    method_b: &str,
    b: &Complex,
    bound_b: &BigFloat,
    extra_tol: &BigFloat,
    ctx: &PrecisionContext,
) -> Comparison {
    let p = ctx.total_bits();
    let delta = a.sub(b, ctx).abs(ctx);
    let tolerance = bound_a
        .add(bound_b, p, RoundingMode::Up)
        .add(extra_tol, p, RoundingMode::Up);
    let passed = bf_le(&delta, &tolerance);
    Comparison {
        method_a: method_a.into(),
        method_b: method_b.into(),
        value_a: a.clone(),
        value_b: b.clone(),
        delta,
        tolerance,
        passed,
    }
}

/// Rounding allowance for an exact reference converted to working precision.
fn reference_eps(value: &Complex, ctx: &PrecisionContext) -> BigFloat {
    let mag = bf_max(&value.abs(ctx), &bf_u64(1, ctx.total_bits()));
    mag.mul(&pow2(-(ctx.working_bits() as i64) + 2), ctx.total_bits(), RoundingMode::Up)
}

/// Runs `f` over `items` with `jobs` workers, preserving input order.
fn run_ordered<T, R, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let n = items.len();
    let mut out: Vec<Option<R>> = Vec::with_capacity(n);
    out.resize_with(n, || None);
    let chunk = n.div_ceil(jobs);
    std::thread::scope(|scope| {
        let f = &f;
        let mut handles = Vec::new();
        for (ci, chunk_items) in items.chunks(chunk).enumerate() {
            handles.push(scope.spawn(move || {
                chunk_items
                    .iter()
                    .enumerate()
                    .map(|(i, item)| (ci * chunk + i, f(item)))
                    .collect::<Vec<_>>()
            }));
        }
        for h in handles {
            for (idx, r) in h.join().expect("verification worker") {
                out[idx] = Some(r);
            }
        }
    });
    out.into_iter().map(|r| r.expect("all indices filled")).collect()
}

/// Verifies the closed forms of the monomial family over a box.
///
/// Off-diagonal cases compare the exact rational against the series method
/// and record the denominator-divisibility witness; diagonal cases compare
/// the exact ζ-linear form. A deterministic 1-in-4 subsample (by index
/// stride) is additionally checked against 2-D quadrature at 1e−9.
pub fn verify_theorem1(
    bx: MonomialBox,
    ctx: &PrecisionContext,
    tol: &BigFloat,
    jobs: usize,
) -> Vec<VerificationRecord> {
    let mut specs = Vec::new();
    for r in 0..=bx.r_max {
        for s in 0..=bx.s_max {
            for n in 0..=bx.n_max {
                specs.push(MonomialSpec::new(r, s, n));
            }
        }
    }
    let quad_ctx = PrecisionContext::with_guard(ctx.working_bits().min(128), 32);
    let quad_tol = ctx.parse_decimal("1e-9").expect("builtin tolerance");

    let tasks: Vec<(usize, MonomialSpec)> = specs.into_iter().enumerate().collect();
    let mut records = run_ordered(tasks, jobs, |(idx, spec)| {
        verify_one_monomial(*spec, ctx, tol, idx % 4 == 0, &quad_ctx, &quad_tol)
    });
    records.sort_by(|a, b| a.key.cmp(&b.key));
    records
}

fn verify_one_monomial(
    spec: MonomialSpec,
    ctx: &PrecisionContext,
    tol: &BigFloat,
    sample_quad: bool,
    quad_ctx: &PrecisionContext,
    quad_tol: &BigFloat,
) -> VerificationRecord {
    let key = IntegralSpec::Monomial(spec).key();
    let mut notes = String::new();
    let mut divisibility = None;

    // Exact side.
    let (closed_form, reference) = if spec.is_diagonal() {
        let form = diagonal_form(spec.r, spec.n);
        match eval_form(&form, ctx) {
            Ok(v) => (form.to_string(), v),
            Err(e) => {
                return VerificationRecord::failed(key, tol, format!("form evaluation failed: {e}"))
            }
        }
    } else {
        let off = match off_diagonal_value(spec) {
            Ok(o) => o,
            Err(e) => return VerificationRecord::failed(key, tol, format!("exact value failed: {e}")),
        };
        if off.swapped {
            notes.push_str("canonicalized by (r, s) swap; ");
        }
        match divisibility_check(spec) {
            Ok(w) => {
                divisibility = Some(DivisibilityRecord {
                    holds: w.holds,
                    denominator: w.denominator.to_string(),
                    bound: w.bound.to_string(),
                });
            }
            Err(e) => {
                return VerificationRecord::failed(key, tol, format!("divisibility check failed: {e}"))
            }
        }
        (
            off.value.to_string(),
            Complex::from_rational(&off.value, ctx).rounded_to_working(ctx),
        )
    };

    let mut method_values = Vec::new();
    let mut comparisons = Vec::new();
    let ref_eps = reference_eps(&reference, ctx);

    match series_eval(spec, ctx, tol) {
        Ok(series) => {
            method_values.push(MethodValue::from_result(&series));
            let extra = ref_eps.add(tol, ctx.total_bits(), RoundingMode::Up);
            comparisons.push(compare(
                "exact",
                &reference,
                &bf_u64(0, 64),
                "series",
                &series.value,
                &series.error_bound,
                &extra,
                ctx,
            ));
        }
        Err(e) => notes.push_str(&format!("series failed: {e}; ")),
    }

    if sample_quad {
        match quad_2d_eval(&IntegralSpec::Monomial(spec), quad_ctx, quad_tol) {
            Ok(quad) => {
                method_values.push(MethodValue::from_result(&quad));
                comparisons.push(compare(
                    "exact",
                    &reference,
                    &bf_u64(0, 64),
                    "quad2d",
                    &quad.value,
                    &quad.error_bound,
                    quad_tol,
                    ctx,
                ));
            }
            Err(e) => notes.push_str(&format!("quad2d failed: {e}; ")),
        }
    }

    let mut max_delta = bf_u64(0, 64);
    for c in &comparisons {
        max_delta = bf_max(&max_delta, &c.delta);
    }
    let div_ok = divisibility.as_ref().map(|d| d.holds).unwrap_or(true);
    let passed = !comparisons.is_empty()
        && comparisons.iter().all(|c| c.passed)
        && div_ok
        && notes.is_empty();

    VerificationRecord {
        key,
        closed_form: Some(closed_form),
        divisibility,
        method_values,
        comparisons,
        max_delta,
        tolerance: tol.clone(),
        passed,
        notes,
    }
}

/// Verifies the conjectured identity over a grid of z values.
///
/// Each point compares the series evaluation and the 1-D reduction against
/// the right side; non-negative integer points are additionally checked
/// against the exact (n+1)!·ζ(n+2) − n! form.
pub fn verify_conjecture(
    grid: &GridSpec,
    ctx: &PrecisionContext,
    tol: &BigFloat,
    jobs: usize,
) -> Vec<VerificationRecord> {
    let reduce_tol = ctx.parse_decimal("1e-12").expect("builtin tolerance");
    let tasks = grid.points();
    let mut records = run_ordered(tasks, jobs, |z| {
        verify_one_conjecture(z, ctx, tol, &reduce_tol)
    });
    records.sort_by(|a, b| a.key.cmp(&b.key));
    records
}

fn verify_one_conjecture(
    z: &Complex,
    ctx: &PrecisionContext,
    tol: &BigFloat,
    reduce_tol: &BigFloat,
) -> VerificationRecord {
    let key = IntegralSpec::Conjecture(z.clone()).key();
    let mut notes = String::new();

    let rhs = match rhs_value(z, ctx) {
        Ok(v) => v,
        Err(e) => return VerificationRecord::failed(key, tol, format!("right side failed: {e}")),
    };
    let rhs_eps = reference_eps(&rhs, ctx);

    let mut method_values = Vec::new();
    let mut comparisons = Vec::new();

    let series = match series_eval_conjecture(z, ctx, tol) {
        Ok(s) => {
            method_values.push(MethodValue::from_result(&s));
            Some(s)
        }
        Err(e) => {
            notes.push_str(&format!("series failed: {e}; "));
            None
        }
    };
    if let Some(s) = &series {
        let extra = rhs_eps.add(tol, ctx.total_bits(), RoundingMode::Up);
        comparisons.push(compare(
            "series",
            &s.value,
            &s.error_bound,
            "rhs",
            &rhs,
            &bf_u64(0, 64),
            &extra,
            ctx,
        ));
    }

    let reduce = match reduce_1d_eval(z, ctx, reduce_tol) {
        Ok(r) => {
            method_values.push(MethodValue::from_result(&r));
            Some(r)
        }
        Err(e) => {
            notes.push_str(&format!("reduce1d failed: {e}; "));
            None
        }
    };
    if let Some(r) = &reduce {
        let extra = rhs_eps.add(reduce_tol, ctx.total_bits(), RoundingMode::Up);
        comparisons.push(compare(
            "reduce1d",
            &r.value,
            &r.error_bound,
            "rhs",
            &rhs,
            &bf_u64(0, 64),
            &extra,
            ctx,
        ));
        if let Some(s) = &series {
            comparisons.push(compare(
                "series",
                &s.value,
                &s.error_bound,
                "reduce1d",
                &r.value,
                &r.error_bound,
                reduce_tol,
                ctx,
            ));
        }
    }

    // Non-negative integer z: bridge to the exact form.
    let mut closed_form = None;
    if z.is_real() && z.re.is_int() && !z.re.is_negative() {
        let n = bf_to_f64_approx(&z.re) as u32;
        let form = one_minus_x_form(n);
        closed_form = Some(form.to_string());
        match eval_form(&form, ctx) {
            Ok(fv) => {
                if let Some(s) = &series {
                    let extra = reference_eps(&fv, ctx).add(tol, ctx.total_bits(), RoundingMode::Up);
                    comparisons.push(compare(
                        "form",
                        &fv,
                        &bf_u64(0, 64),
                        "series",
                        &s.value,
                        &s.error_bound,
                        &extra,
                        ctx,
                    ));
                }
            }
            Err(e) => notes.push_str(&format!("form evaluation failed: {e}; ")),
        }
    }

    let mut max_delta = bf_u64(0, 64);
    for c in &comparisons {
        max_delta = bf_max(&max_delta, &c.delta);
    }
    let passed = !comparisons.is_empty() && comparisons.iter().all(|c| c.passed) && notes.is_empty();

    VerificationRecord {
        key,
        closed_form,
        divisibility: None,
        method_values,
        comparisons,
        max_delta,
        tolerance: tol.clone(),
        passed,
        notes,
    }
}

/// Result of the z → −1 limit study.
#[derive(Clone, Debug)]
pub struct GammaLimitStudy {
    /// (offset ε, series value at z = −1 + ε)
    pub estimates: Vec<(BigFloat, BigFloat)>,
    /// Richardson (Neville-at-zero) extrapolation of the estimates.
    pub extrapolated: BigFloat,
    /// |extrapolated − γ| against the pole-subtracted ζ kernel.
    pub reference_delta: BigFloat,
}

/// Evaluates the integral's series form at z = −1 + ε for each offset,
/// Richardson-extrapolates to ε = 0, and reports the distance to γ.
///
/// The identity's two sides are continuous through z = −1, so this study is
/// *not* needed to compute γ; it reproduces the limit argument that turns the
/// identity into the classical double-integral formula for Euler's constant.
pub fn gamma_limit_study(
    offsets: &[BigFloat],
    ctx: &PrecisionContext,
) -> Result<GammaLimitStudy> {
    if offsets.is_empty() {
        return Err(Error::Usage("at least one offset is required".into()));
    }
    let one = bf_u64(1, 64);
    for pair in offsets.windows(2) {
        if !bf_le(&pair[1], &pair[0]) {
            return Err(Error::Usage("offsets must be non-increasing".into()));
        }
    }
    for eps in offsets {
        if !eps.is_positive() || eps.is_zero() || !bf_le(eps, &one) {
            return Err(Error::Usage("offsets must lie in (0, 1]".into()));
        }
    }

    let p = ctx.total_bits();
    let rm = ctx.rm();
    let tol = pow2(-(ctx.working_bits() as i64) + 16);
    let mut estimates = Vec::with_capacity(offsets.len());
    for eps in offsets {
        let z = Complex::real(eps.sub(&bf_u64(1, p), p, rm));
        let value = series_eval_conjecture(&z, ctx, &tol)?;
        estimates.push((eps.clone(), value.value.re.clone()));
    }

    // Neville tableau evaluated at 0 over the offset abscissae.
    let xs: Vec<BigFloat> = estimates.iter().map(|(e, _)| e.clone()).collect();
    let mut t: Vec<BigFloat> = estimates.iter().map(|(_, v)| v.clone()).collect();
    let n = t.len();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = xs[i]
                .mul(&t[i - 1], p, rm)
                .sub(&xs[i - j].mul(&t[i], p, rm), p, rm);
            let den = xs[i].sub(&xs[i - j], p, rm);
            t[i] = num.div(&den, p, rm);
        }
    }
    let extrapolated = t[n - 1].clone();
    let gamma_ref = euler_gamma(ctx);
    let reference_delta = extrapolated.sub(&gamma_ref.re, p, rm).abs();
    Ok(GammaLimitStudy {
        estimates,
        extrapolated,
        reference_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prec::{bf_log2_approx, decimal_string};

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(192)
    }

    #[test]
    fn rhs_examples() {
        let c = ctx();
        let v = rhs_value(&Complex::zero(), &c).unwrap();
        assert_eq!(&decimal_string(&v.re, 11), "6.4493406685e-1");
        let v = rhs_value(&Complex::from_i64(-1, &c), &c).unwrap();
        assert_eq!(&decimal_string(&v.re, 11), "5.7721566490e-1");
        let v = rhs_value(&Complex::from_u64(2, &c), &c).unwrap();
        assert_eq!(&decimal_string(&v.re, 11), "4.4939394023e+0");
    }

    #[test]
    fn rhs_domain_error() {
        let c = ctx();
        let z = Complex::parse("-2", "0", &c).unwrap();
        assert!(rhs_value(&z, &c).is_err());
    }

    #[test]
    fn rhs_matches_integer_forms() {
        // Exact/numeric bridge: Γ(n+2)[ζ(n+2) − 1/(n+1)] = (n+1)!ζ(n+2) − n!.
        let c = ctx();
        for n in 0..=8u32 {
            let z = Complex::from_u64(u64::from(n), &c);
            let a = rhs_value(&z, &c).unwrap();
            let b = eval_form(&one_minus_x_form(n), &c).unwrap();
            let d = a.sub(&b, &c).abs(&c);
            let scale = bf_max(&a.abs(&c), &bf_u64(1, c.total_bits()));
            let rel = d.div(&scale, c.total_bits(), c.rm());
            assert!(
                bf_log2_approx(&rel) < -(c.working_bits() as f64) + 6.0,
                "n={n}: relative delta 2^{}",
                bf_log2_approx(&rel)
            );
        }
    }

    #[test]
    fn theorem1_small_box_passes() {
        let c = ctx();
        let tol = c.parse_decimal("1e-25").unwrap();
        let records = verify_theorem1(
            MonomialBox {
                r_max: 2,
                s_max: 2,
                n_max: 1,
            },
            &c,
            &tol,
            1,
        );
        assert_eq!(records.len(), 18);
        for r in &records {
            assert!(r.passed, "failed: {} — {}", r.key, r.notes);
        }
        // Off-diagonal records carry divisibility witnesses.
        let with_div = records.iter().filter(|r| r.divisibility.is_some()).count();
        assert_eq!(with_div, 12);
    }

    #[test]
    fn theorem1_records_are_sorted_and_detailed() {
        let c = ctx();
        let tol = c.parse_decimal("1e-25").unwrap();
        let records = verify_theorem1(
            MonomialBox {
                r_max: 1,
                s_max: 0,
                n_max: 0,
            },
            &c,
            &tol,
            1,
        );
        assert_eq!(records.len(), 2);
        let mut keys: Vec<String> = records.iter().map(|r| r.key.clone()).collect();
        let sorted = keys.clone();
        keys.sort();
        assert_eq!(keys, sorted);
        assert!(records.iter().all(|r| !r.comparisons.is_empty()));
    }

    #[test]
    fn conjecture_small_grid_passes() {
        let c = PrecisionContext::new(256);
        let tol = c.parse_decimal("1e-18").unwrap();
        let grid = GridSpec {
            real_points: vec![
                c.parse_decimal("-1").unwrap(),
                c.parse_decimal("0").unwrap(),
                c.parse_decimal("2").unwrap(),
            ],
            complex_points: vec![Complex::parse("1", "2", &c).unwrap()],
        };
        let records = verify_conjecture(&grid, &c, &tol, 1);
        assert_eq!(records.len(), 4);
        for r in &records {
            assert!(r.passed, "failed: {} — {}", r.key, r.notes);
            assert!(r.comparisons.len() >= 3);
        }
    }

    #[test]
    fn jobs_do_not_change_results() {
        let c = ctx();
        let tol = c.parse_decimal("1e-25").unwrap();
        let bx = MonomialBox {
            r_max: 3,
            s_max: 1,
            n_max: 1,
        };
        let a = verify_theorem1(bx, &c, &tol, 1);
        let b = verify_theorem1(bx, &c, &tol, 4);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.key, y.key);
            assert_eq!(x.passed, y.passed);
            assert_eq!(
                decimal_string(&x.max_delta, 30),
                decimal_string(&y.max_delta, 30)
            );
        }
    }

    #[test]
    fn gamma_limit_coarse_and_extrapolated() {
        let c = ctx();
        let offsets: Vec<BigFloat> = ["1e-1", "1e-2", "1e-3", "1e-4"]
            .iter()
            .map(|s| c.parse_decimal(s).unwrap())
            .collect();
        let study = gamma_limit_study(&offsets, &c).unwrap();
        assert_eq!(study.estimates.len(), 4);
        // Single coarse offset lands within 0.05 of γ.
        let coarse_delta = study.estimates[0]
            .1
            .sub(&euler_gamma(&c).re, c.total_bits(), c.rm())
            .abs();
        assert!(bf_to_f64_approx(&coarse_delta) < 0.05);
        // Extrapolation sharpens far beyond the raw estimates.
        assert!(
            bf_to_f64_approx(&study.reference_delta) < 1e-10,
            "extrapolated delta {}",
            bf_to_f64_approx(&study.reference_delta)
        );
    }

    #[test]
    fn gamma_limit_usage_errors() {
        let c = ctx();
        assert!(matches!(
            gamma_limit_study(&[], &c),
            Err(Error::Usage(_))
        ));
        let bad = vec![c.parse_decimal("0.5").unwrap(), c.parse_decimal("0.9").unwrap()];
        assert!(matches!(
            gamma_limit_study(&bad, &c),
            Err(Error::Usage(_))
        ));
    }
}
