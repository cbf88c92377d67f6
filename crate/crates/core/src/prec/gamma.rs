//! Γ(z) for complex arguments at arbitrary precision.
//!
//! Stirling's asymptotic series for ln Γ evaluated after raising the argument
//! into a region where the series converges below the target precision:
//!
//! ```text
//!   ln Γ(w) = (w − 1/2) ln w − w + ln(2π)/2 + Σ_j B_{2j} / (2j(2j−1) w^{2j−1})
//!   Γ(z)    = Γ(z + m) / [z (z+1) ⋯ (z+m−1)]
//! ```
//!
//! The remainder after J terms is bounded by
//! |B_{2J+2}| / ((2J+1)(2J+2) |w|^{2J+1}) · sec(arg(w)/2)^{2J+2}; the shift m
//! and the truncation J are chosen per call so this falls below 2^(−total).

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bernoulli::bernoulli;
use super::{bf_to_f64_approx, pow2, rational_to_float, with_consts, Complex, PrecisionContext};
use crate::error::{Error, Result};

/// Cached Stirling coefficients B_{2j} / (2j(2j−1)), j ≥ 1.
static COEFFS: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

fn stirling_coeff(j: usize) -> BigRational {
    let mut cache = COEFFS.lock().expect("stirling coefficient lock");
    while cache.len() < j {
        let jj = cache.len() + 1;
        let denom = BigInt::from(2 * jj as u64) * BigInt::from(2 * jj as u64 - 1);
        let c = bernoulli(2 * jj).expect("even index") / BigRational::from_integer(denom);
        cache.push(c);
    }
    cache[j - 1].clone()
}

/// Picks the truncation depth J for |w| = `mag` at angle `theta`, targeting an
/// absolute ln Γ error of 2^`target_log2`. Returns None if the asymptotic
/// series bottoms out too early (the caller must shift further).
fn choose_depth(mag: f64, theta: f64, target_log2: f64) -> Option<usize> {
    let sec_half = 1.0 / (theta / 2.0).cos();
    let log2_mag = mag.log2();
    let log2_sec = sec_half.log2();
    // log2 |B_{2J+2}| ≈ 1 + log2((2J+2)!) − (2J+2) log2(2π), Stirling for the factorial.
    let mut best = f64::INFINITY;
    let mut log2_fact = 0.0f64; // log2((2J+2)!) built incrementally
    let mut k = 1u64;
    for j in 1..=400usize {
        let upto = 2 * j as u64 + 2;
        while k < upto {
            k += 1;
            log2_fact += (k as f64).log2();
        }
        let log2_b = 1.0 + log2_fact - (2.0 * j as f64 + 2.0) * (2.0 * std::f64::consts::PI).log2();
        let bound = log2_b
            - ((2 * j + 1) as f64 * (2 * j + 2) as f64).log2()
            - (2.0 * j as f64 + 1.0) * log2_mag
            + (2.0 * j as f64 + 2.0) * log2_sec;
        if bound < target_log2 {
            return Some(j);
        }
        if bound > best + 2.0 {
            return None; // diverging: |w| too small for the target
        }
        best = best.min(bound);
    }
    None
}

/// Γ(z) with relative error below 2^(−working_bits); poles at 0, −1, −2, … are
/// rejected.
pub fn gamma(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if !z.is_finite() {
        return Err(Error::Domain("gamma of a non-finite argument".into()));
    }
    if z.im.is_zero() && (z.re.is_zero() || (z.re.is_int() && z.re.is_negative())) {
        return Err(Error::Pole(format!(
            "gamma pole at z = {}",
            bf_to_f64_approx(&z.re)
        )));
    }

    let p = ctx.total_bits();
    let rm = ctx.rm();
    let re = bf_to_f64_approx(&z.re);
    let im = bf_to_f64_approx(&z.im);

    // Shift until the Stirling series can reach the target.
    let mut target_re = (0.12 * p as f64).ceil() + 10.0;
    if im.abs() > target_re {
        target_re = im.abs().ceil() + 10.0;
    }
    let (m, depth) = loop {
        let m = if re >= target_re {
            0u32
        } else {
            (target_re - re).ceil() as u32
        };
        let ws_re = re + m as f64;
        let mag = (ws_re * ws_re + im * im).sqrt();
        let theta = (im / ws_re).atan().abs();
        match choose_depth(mag, theta, -(p as f64) - 6.0) {
            Some(j) => break (m, j),
            None => target_re *= 1.5,
        }
    };

    let ws = z.add(&Complex::from_u64(u64::from(m), ctx), ctx);

    // (w − 1/2) ln w − w + ln(2π)/2
    let ln_w = ws.ln(ctx);
    let half = pow2(-1);
    let w_minus_half = ws.sub(&Complex::real(half.clone()), ctx);
    let two_pi = ctx.pi().mul(&pow2(1), p, rm);
    let ln_two_pi = with_consts(|cc| two_pi.ln(p, rm, cc));
    let mut ln_gamma = w_minus_half
        .mul(&ln_w, ctx)
        .sub(&ws, ctx)
        .add(&Complex::real(ln_two_pi.mul(&half, p, rm)), ctx);

    // Σ_j B_{2j}/(2j(2j−1)) w^{−(2j−1)}
    let w_inv = ws.recip(ctx);
    let w_inv2 = w_inv.mul(&w_inv, ctx);
    let mut pw = w_inv;
    for j in 1..=depth {
        let c = Complex::real(rational_to_float(&stirling_coeff(j), p));
        ln_gamma = ln_gamma.add(&c.mul(&pw, ctx), ctx);
        if j < depth {
            pw = pw.mul(&w_inv2, ctx);
        }
    }

    let mut value = ln_gamma.exp(ctx);

    // Divide the raising factors back out: Γ(z) = Γ(z+m) / Π (z+i).
    if m > 0 {
        let mut prod = z.clone();
        let mut zi = z.clone();
        for _ in 1..m {
            zi = zi.add(&Complex::one(), ctx);
            prod = prod.mul(&zi, ctx);
        }
        value = value.div(&prod, ctx);
    }

    value
        .rounded_to_working(ctx)
        .ensure_finite("gamma")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prec::{bf_log2_approx, decimal_string};

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(192)
    }

    fn delta_log2(a: &Complex, b: &Complex, c: &PrecisionContext) -> f64 {
        bf_log2_approx(&a.sub(b, c).abs(c))
    }

    #[test]
    fn integer_values() {
        let c = ctx();
        let g1 = gamma(&Complex::from_u64(1, &c), &c).unwrap();
        assert!(delta_log2(&g1, &Complex::one(), &c) < -185.0);
        let g5 = gamma(&Complex::from_u64(5, &c), &c).unwrap();
        assert!(delta_log2(&g5, &Complex::from_u64(24, &c), &c) < -180.0);
        let g8 = gamma(&Complex::from_u64(8, &c), &c).unwrap();
        assert!(delta_log2(&g8, &Complex::from_u64(5040, &c), &c) < -175.0);
    }

    #[test]
    fn half_integer_squares_to_pi() {
        let c = ctx();
        let g = gamma(&Complex::real(pow2(-1)), &c).unwrap();
        let sq = g.mul(&g, &c);
        let d = sq.re.sub(&c.pi(), c.total_bits(), c.rm()).abs();
        assert!(bf_log2_approx(&d) < -185.0, "Γ(1/2)² off by 2^{}", bf_log2_approx(&d));
        assert_eq!(&decimal_string(&g.re, 17), "1.7724538509055160e+0");
    }

    #[test]
    fn recurrence_at_complex_points() {
        let c = ctx();
        for (re, im) in [("0.3", "0.0"), ("2.7", "1.3"), ("0.1", "-9.5"), ("7.9", "8.0")] {
            let z = Complex::parse(re, im, &c).unwrap();
            let g = gamma(&z, &c).unwrap();
            let g1 = gamma(&z.add(&Complex::one(), &c), &c).unwrap();
            let rel = g1
                .sub(&z.mul(&g, &c), &c)
                .abs(&c)
                .div(&g1.abs(&c), c.total_bits(), c.rm());
            assert!(
                bf_log2_approx(&rel) < -(c.working_bits() as f64) + 4.0,
                "recurrence at {re}+{im}i: 2^{}",
                bf_log2_approx(&rel)
            );
        }
    }

    #[test]
    fn negative_non_integer() {
        let c = ctx();
        // Γ(−3/2) = 4√π/3.
        let z = Complex::parse("-1.5", "0", &c).unwrap();
        let g = gamma(&z, &c).unwrap();
        let p = c.total_bits();
        let expect = c
            .pi()
            .sqrt(p, c.rm())
            .mul(&crate::prec::bf_u64(4, p), p, c.rm())
            .div(&crate::prec::bf_u64(3, p), p, c.rm());
        let d = g.re.sub(&expect, p, c.rm()).abs();
        assert!(bf_log2_approx(&d) < -185.0);
    }

    #[test]
    fn poles_rejected() {
        let c = ctx();
        assert!(matches!(
            gamma(&Complex::zero(), &c),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            gamma(&Complex::from_i64(-3, &c), &c),
            Err(Error::Pole(_))
        ));
    }
}
