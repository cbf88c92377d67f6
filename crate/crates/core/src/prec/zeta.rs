//! ζ(s), the pole-subtracted ζ(s) − 1/(s−1), Euler's constant, and the
//! numeric evaluation of exact ζ-linear forms.
//!
//! The workhorse is Euler–Maclaurin summation on the Dirichlet series
//!
//! ```text
//!   ζ(s) = Σ_{k<N} k^{−s} + N^{1−s}/(s−1) + N^{−s}/2
//!        + Σ_{j=1}^{M} B_{2j}/(2j)! (s)_{2j−1} N^{1−s−2j} + R_M(N)
//! ```
//!
//! with N and M chosen per call from Backlund's remainder bound
//! |R| ≤ |(s+2M+1)/(σ+2M+1)| · |B_{2M+2}/(2M+2)!| · |(s)_{2M+1}| · N^{−σ−2M−1}.
//!
//! The pole of ζ lives entirely in the N^{1−s}/(s−1) term, so the subtracted
//! function replaces it by (N^{1−s} − 1)/(s−1) = −ln N · E((1−s) ln N) with
//! E(x) = (eˣ−1)/x — analytic through s = 1, no large-term cancellation. γ is
//! then simply the subtracted function at s = 1.
//!
//! A second, genuinely different route (Borwein's alternating-series
//! acceleration for the eta function) is exposed as [`eta_zeta`]; it exists to
//! cross-check the Euler–Maclaurin kernel and is not used by it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bernoulli::bernoulli_over_factorial;
use super::{
    bf_log2_approx, bf_to_f64_approx, bf_u64, bigint_to_float, e_fn, pow2, rational_to_float,
    with_consts, Complex, PrecisionContext,
};
use crate::error::{Error, Result};
use crate::exact::ZetaLinearForm;

/// ζ refuses evaluation when |s − 1| ≤ 2^(−8); callers this close to the pole
/// must use [`zeta_minus_pole`].
pub const ZETA_POLE_GUARD_LOG2: i64 = -8;

/// Euler–Maclaurin cutoffs (N, M) for target absolute error 2^`target_log2`.
fn em_parameters(sigma: f64, s_abs: f64, t_abs: f64, target_log2: f64) -> (usize, usize) {
    let bits = -target_log2;
    let mut n = ((0.13 * bits).ceil() as usize + 8).max((0.7 * t_abs).ceil() as usize + 8);
    loop {
        let log2_n = (n as f64).log2();
        // Incremental pieces of the Backlund bound as M grows.
        let mut log2_poch = (s_abs + 0.0).max(1e-300).log2(); // Σ log2(|s|+i), i = 0
        let mut prev = f64::INFINITY;
        let mut m = 0usize;
        loop {
            m += 1;
            log2_poch += (s_abs + (2 * m - 1) as f64).log2() + (s_abs + (2 * m) as f64).log2();
            let log2_b = 1.0 - (2.0 * m as f64 + 2.0) * (2.0 * std::f64::consts::PI).log2();
            let ratio = ((s_abs + 2.0 * m as f64 + 1.0) / (sigma + 2.0 * m as f64 + 1.0)).log2();
            let bound =
                ratio + log2_b + log2_poch - (sigma + 2.0 * m as f64 + 1.0) * log2_n;
            if bound < target_log2 {
                return (n, m);
            }
            if bound > prev || m > 4 * n + 64 {
                break; // asymptotic series bottomed out; enlarge N
            }
            prev = bound;
        }
        n = n + n / 2 + 8;
    }
}

fn zeta_core(s: &Complex, ctx: &PrecisionContext, include_pole: bool) -> Result<Complex> {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let sigma = bf_to_f64_approx(&s.re);
    let t_abs = bf_to_f64_approx(&s.im).abs();
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!(
            "zeta evaluation requires Re(s) > 0, got {sigma}"
        )));
    }
    let s_abs = (sigma * sigma + t_abs * t_abs).sqrt();
    let (n_cut, m_cut) = em_parameters(sigma, s_abs, t_abs, -(p as f64) - 4.0);

    // Direct part Σ_{k=1}^{N−1} k^{−s}.
    let mut sum = Complex::one();
    for k in 2..n_cut as u64 {
        let lk = with_consts(|cc| bf_u64(k, p).ln(p, rm, cc));
        let term = s.scale(&lk.neg(), ctx).exp(ctx);
        sum = sum.add(&term, ctx);
    }

    let ln_n = with_consts(|cc| bf_u64(n_cut as u64, p).ln(p, rm, cc));
    let n_pow_minus_s = s.scale(&ln_n.neg(), ctx).exp(ctx);

    // N^{−s}/2
    sum = sum.add(&n_pow_minus_s.scale(&pow2(-1), ctx), ctx);

    // Pole term, either as stated or with 1/(s−1) cancelled analytically.
    let one = Complex::one();
    let one_minus_s = one.sub(s, ctx);
    if include_pole {
        let n_pow = one_minus_s.scale(&ln_n, ctx).exp(ctx);
        sum = sum.add(&n_pow.div(&s.sub(&one, ctx), ctx), ctx);
    } else {
        let e = e_fn(&one_minus_s.scale(&ln_n, ctx), ctx);
        sum = sum.sub(&e.scale(&ln_n, ctx), ctx);
    }

    // Euler–Maclaurin corrections.
    let n_inv = bf_u64(n_cut as u64, p).reciprocal(p, rm);
    let n_inv2 = n_inv.mul(&n_inv, p, rm);
    let mut poch = s.clone(); // (s)_{2j−1}, starting at j = 1
    let mut q = n_pow_minus_s.scale(&n_inv, ctx); // N^{1−s−2j}, starting at j = 1
    for j in 1..=m_cut {
        let c = rational_to_float(&bernoulli_over_factorial(2 * j)?, p);
        sum = sum.add(&poch.mul(&q, ctx).scale(&c, ctx), ctx);
        if j < m_cut {
            let a = s.add(&Complex::from_u64(2 * j as u64 - 1, ctx), ctx);
            let b = s.add(&Complex::from_u64(2 * j as u64, ctx), ctx);
            poch = poch.mul(&a, ctx).mul(&b, ctx);
            q = q.scale(&n_inv2, ctx);
        }
    }

    sum.rounded_to_working(ctx).ensure_finite("zeta")
}

/// ζ(s) for ℜ(s) > 0, away from the pole at s = 1 (guard 2^(−8)).
pub fn zeta(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let dist = s.sub(&Complex::one(), ctx).abs(ctx);
    if !dist.is_zero() && bf_log2_approx(&dist) <= ZETA_POLE_GUARD_LOG2 as f64 {
        return Err(Error::Pole(
            "s within 2^(-8) of the pole at 1; use zeta_minus_pole".into(),
        ));
    }
    if dist.is_zero() {
        return Err(Error::Pole("zeta has a pole at s = 1".into()));
    }
    zeta_core(s, ctx, true)
}

/// ζ(s) − 1/(s−1), analytic on ℜ(s) > 0; equals γ at s = 1.
pub fn zeta_minus_pole(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    zeta_core(s, ctx, false)
}

/// Euler's constant γ = [ζ(s) − 1/(s−1)] at s = 1, at context precision.
pub fn euler_gamma(ctx: &PrecisionContext) -> Complex {
    zeta_minus_pole(&Complex::one(), ctx).expect("gamma evaluation at s = 1 cannot fail")
}

/// Numeric value of an exact form a + b·ζ(m).
pub fn eval_form(form: &ZetaLinearForm, ctx: &PrecisionContext) -> Result<Complex> {
    let p = ctx.total_bits();
    let a = rational_to_float(&form.constant, p);
    if form.zeta_coeff.is_zero() {
        return Ok(Complex::real(a).rounded_to_working(ctx));
    }
    let b = rational_to_float(&form.zeta_coeff, p);
    let wide = ctx.widened(0);
    let z = zeta(&Complex::from_u64(u64::from(form.zeta_arg), &wide), &wide)?;
    Ok(Complex::real(a)
        .add(&z.scale(&b, ctx), ctx)
        .rounded_to_working(ctx))
}

/// ζ(s) through Borwein's accelerated alternating (eta) series:
///
/// ```text
///   η(s) ≈ −(1/d_n) Σ_{k=0}^{n−1} (−1)^k (d_k − d_n) (k+1)^{−s},
///   ζ(s) = η(s) / (1 − 2^{1−s}),
/// ```
///
/// where the d_k are Chebyshev-derived integers. Independent of the
/// Euler–Maclaurin kernel and of the Bernoulli numbers; used as a test oracle.
pub fn eta_zeta(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let sigma = bf_to_f64_approx(&s.re);
    let t_abs = bf_to_f64_approx(&s.im).abs();
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!(
            "eta acceleration requires Re(s) > 0, got {sigma}"
        )));
    }
    // 2.543 bits per term, minus exp(|t|π/2) inflation for complex s.
    let n = (((p as f64) + 8.0 + 2.266 * t_abs) / 2.543).ceil() as usize + 8;

    // d_k = n Σ_{i=0}^{k} (n+i−1)! 4^i / ((n−i)! (2i)!), exact integers.
    let mut d = Vec::with_capacity(n + 1);
    let mut term = BigRational::new(BigInt::one(), BigInt::from(n as u64)); // i = 0
    let mut acc = term.clone();
    d.push(acc.clone());
    for i in 1..=n {
        // ratio t_i / t_{i−1} = 4 (n+i−1)(n−i+1) / ((2i−1)(2i))
        let num = BigInt::from(4u64) * BigInt::from((n + i - 1) as u64)
            * BigInt::from((n - i + 1) as u64);
        let den = BigInt::from((2 * i - 1) as u64) * BigInt::from((2 * i) as u64);
        term *= BigRational::new(num, den);
        acc += term.clone();
        d.push(acc.clone());
    }
    let n_big = BigRational::from_integer(BigInt::from(n as u64));
    let d: Vec<BigInt> = d
        .into_iter()
        .map(|x| {
            let v = x * n_big.clone();
            debug_assert!(v.denom().is_one(), "Chebyshev coefficients are integers");
            v.to_integer()
        })
        .collect();

    let d_n = bigint_to_float(&d[n], p);
    let mut sum = Complex::zero();
    for k in 0..n {
        let coeff = bigint_to_float(&(&d[k] - &d[n]), p);
        let lk = with_consts(|cc| bf_u64(k as u64 + 1, p).ln(p, rm, cc));
        let pw = s.scale(&lk.neg(), ctx).exp(ctx);
        let term = pw.scale(&coeff, ctx);
        sum = if k % 2 == 0 {
            sum.add(&term, ctx)
        } else {
            sum.sub(&term, ctx)
        };
    }
    let eta = sum.scale(&d_n.reciprocal(p, rm).neg(), ctx);

    // 1 − 2^{1−s} = −expm1((1−s) ln 2), stable for s near 1.
    let one_minus_s = Complex::one().sub(s, ctx);
    let x = one_minus_s.scale(&ctx.ln2(), ctx);
    let denom = e_fn(&x, ctx).mul(&x, ctx).neg();
    if denom.is_zero() {
        return Err(Error::Pole("eta-to-zeta conversion factor vanishes".into()));
    }
    eta.div(&denom, ctx)
        .rounded_to_working(ctx)
        .ensure_finite("eta_zeta")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prec::decimal_string;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(192)
    }

    fn delta_log2(a: &Complex, b: &Complex, c: &PrecisionContext) -> f64 {
        bf_log2_approx(&a.sub(b, c).abs(c))
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let c = ctx();
        let z = zeta(&Complex::from_u64(2, &c), &c).unwrap();
        let p = c.total_bits();
        let pi2_6 = c.pi().powi(2, p, c.rm()).div(&bf_u64(6, p), p, c.rm());
        let d = z.re.sub(&pi2_6, p, c.rm()).abs();
        assert!(bf_log2_approx(&d) < -(c.working_bits() as f64) + 4.0);
        assert_eq!(&decimal_string(&z.re, 17), "1.6449340668482264e+0");
    }

    #[test]
    fn zeta_four_is_pi_fourth_over_ninety() {
        let c = ctx();
        let z = zeta(&Complex::from_u64(4, &c), &c).unwrap();
        let p = c.total_bits();
        let pi4_90 = c.pi().powi(4, p, c.rm()).div(&bf_u64(90, p), p, c.rm());
        let d = z.re.sub(&pi4_90, p, c.rm()).abs();
        assert!(bf_log2_approx(&d) < -(c.working_bits() as f64) + 4.0);
    }

    #[test]
    fn zeta_three_digits() {
        let c = ctx();
        let z = zeta(&Complex::from_u64(3, &c), &c).unwrap();
        // Apéry's constant.
        let expect = c
            .parse_decimal("1.20205690315959428539973816151144999076498629234049888179227")
            .unwrap();
        let d = z.re.sub(&expect, c.total_bits(), c.rm()).abs();
        assert!(bf_log2_approx(&d) < -185.0);
    }

    #[test]
    fn zeta_half_digits() {
        let c = ctx();
        let z = zeta(&Complex::real(pow2(-1)), &c).unwrap();
        let expect = c
            .parse_decimal("-1.46035450880958681288949915251529801246722933101258149054289")
            .unwrap();
        let d = z.re.sub(&expect, c.total_bits(), c.rm()).abs();
        assert!(bf_log2_approx(&d) < -185.0, "ζ(1/2) off by 2^{}", bf_log2_approx(&d));
    }

    #[test]
    fn zeta_dirichlet_tail_bound() {
        // For ℜ(s) ≥ 2 the direct partial sum plus its integral tail bound
        // must bracket the kernel value.
        let c = ctx();
        let p = c.total_bits();
        for sigma in [2u64, 3, 5] {
            let s = Complex::from_u64(sigma, &c);
            let z = zeta(&s, &c).unwrap();
            let cut = 200u64;
            let mut partial = Complex::zero();
            for k in 1..=cut {
                let lk = with_consts(|cc| bf_u64(k, p).ln(p, c.rm(), cc));
                partial = partial.add(&s.scale(&lk.neg(), &c).exp(&c), &c);
            }
            // tail ≤ ∫_cut^∞ x^(−σ) dx = cut^(1−σ)/(σ−1)
            let tail = bf_u64(cut, p)
                .powi(sigma as usize - 1, p, c.rm())
                .reciprocal(p, c.rm())
                .mul(&bf_u64(cut, p), p, c.rm())
                .div(&bf_u64(sigma - 1, p), p, c.rm());
            let d = z.sub(&partial, &c).abs(&c);
            assert!(
                crate::prec::bf_le(&d, &tail),
                "sigma={sigma}: |zeta - partial| = 2^{} > bound 2^{}",
                bf_log2_approx(&d),
                bf_log2_approx(&tail)
            );
        }
    }

    #[test]
    fn pole_guard_enforced() {
        let c = ctx();
        let near = Complex::real(bf_u64(1, 64).add(&pow2(-9), 192, c.rm()));
        assert!(matches!(zeta(&near, &c), Err(Error::Pole(_))));
        assert!(zeta_minus_pole(&near, &c).is_ok());
        let far = Complex::real(bf_u64(1, 64).add(&pow2(-7), 192, c.rm()));
        assert!(zeta(&far, &c).is_ok());
    }

    #[test]
    fn domain_restriction() {
        let c = ctx();
        let s = Complex::parse("-0.5", "0", &c).unwrap();
        assert!(matches!(zeta(&s, &c), Err(Error::Domain(_))));
        assert!(matches!(zeta_minus_pole(&s, &c), Err(Error::Domain(_))));
    }

    #[test]
    fn pole_subtraction_consistency() {
        let c = ctx();
        for (re, im) in [("2", "0"), ("0.5", "0"), ("1.3", "-2.2"), ("4.1", "6.0")] {
            let s = Complex::parse(re, im, &c).unwrap();
            let a = zeta(&s, &c).unwrap();
            let b = zeta_minus_pole(&s, &c).unwrap();
            let recon = b.add(&Complex::one().div(&s.sub(&Complex::one(), &c), &c), &c);
            let d = delta_log2(&a, &recon, &c);
            assert!(
                d < -(c.working_bits() as f64) + 8.0,
                "s={re}+{im}i: 2^{d}"
            );
        }
    }

    #[test]
    fn gamma_constant_digits() {
        let c = ctx();
        let g = euler_gamma(&c);
        assert!(g.im.is_zero());
        // First 18 digits 0.577215664901532860.
        assert_eq!(&decimal_string(&g.re, 18), "5.77215664901532861e-1");
        let expect = c
            .parse_decimal("0.577215664901532860606512090082402431042159335939923598805767")
            .unwrap();
        let d = g.re.sub(&expect, c.total_bits(), c.rm()).abs();
        assert!(bf_log2_approx(&d) < -185.0);
    }

    #[test]
    fn gamma_precision_monotonicity() {
        let coarse = PrecisionContext::new(96);
        let fine = PrecisionContext::new(256);
        let a = euler_gamma(&coarse);
        let b = euler_gamma(&fine);
        let d = a.re.sub(&b.re, 256, coarse.rm()).abs();
        assert!(bf_log2_approx(&d) < -92.0);
    }

    #[test]
    fn known_subtracted_values() {
        let c = ctx();
        let z2 = zeta_minus_pole(&Complex::from_u64(2, &c), &c).unwrap();
        assert_eq!(&decimal_string(&z2.re, 17), "6.4493406684822644e-1");
        let z3 = zeta_minus_pole(&Complex::from_u64(3, &c), &c).unwrap();
        assert_eq!(&decimal_string(&z3.re, 17), "7.0205690315959429e-1");
    }

    #[test]
    fn eval_form_examples() {
        let c = ctx();
        let f = ZetaLinearForm::new(
            BigRational::zero(),
            BigRational::one(),
            2,
        );
        let v = eval_form(&f, &c).unwrap();
        assert_eq!(&decimal_string(&v.re, 11), "1.6449340668e+0");

        let f = ZetaLinearForm::new(
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::one(),
            2,
        );
        let v = eval_form(&f, &c).unwrap();
        assert_eq!(&decimal_string(&v.re, 11), "6.4493406685e-1");

        let f = ZetaLinearForm::new(
            BigRational::new(BigInt::from(9), BigInt::from(4)),
            BigRational::from_integer(BigInt::from(-2)),
            3,
        );
        let v = eval_form(&f, &c).unwrap();
        assert_eq!(&decimal_string(&v.re, 11), "-1.5411380632e-1");
    }

    #[test]
    fn eta_acceleration_agrees_with_euler_maclaurin() {
        let c = PrecisionContext::new(160);
        for (re, im) in [("2", "0"), ("0.5", "0"), ("3.25", "1.5"), ("0.2", "-4.0")] {
            let s = Complex::parse(re, im, &c).unwrap();
            let a = zeta(&s, &c).unwrap();
            let b = eta_zeta(&s, &c).unwrap();
            let d = delta_log2(&a, &b, &c);
            assert!(
                d < -(c.working_bits() as f64) + 6.0,
                "s={re}+{im}i: methods differ by 2^{d}"
            );
        }
    }
}
