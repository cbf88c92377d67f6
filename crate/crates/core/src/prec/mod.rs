//! Arbitrary-precision real/complex arithmetic contract and the
//! special-function kernels (Γ, ζ, pole-subtracted ζ, Bernoulli numbers, γ).
//!
//! Real scalars are [`astro_float::BigFloat`]; [`Complex`] pairs two of them.
//! Every operation takes an immutable [`PrecisionContext`]: kernels compute at
//! `working_bits + guard_bits` internally and round once at the end, so error
//! budgets stay auditable. There is no ambient global precision state; the
//! per-thread constants cache (π, ln 2) is the only shared machinery and it is
//! value-deterministic.

mod bernoulli;
mod gamma;
mod zeta;

pub use bernoulli::{bernoulli, bernoulli_over_factorial};
pub use gamma::gamma;
pub use zeta::{eta_zeta, euler_gamma, eval_form, zeta, zeta_minus_pole, ZETA_POLE_GUARD_LOG2};

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed as _, Zero as _};

use crate::error::{Error, Result};

/// Precision configuration: `working_bits` of binary precision visible to the
/// caller plus `guard_bits` carried internally by every kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    working_bits: usize,
    guard_bits: usize,
}

pub const MIN_WORKING_BITS: usize = 64;
pub const MIN_GUARD_BITS: usize = 32;
pub const DEFAULT_GUARD_BITS: usize = 64;

impl PrecisionContext {
    /// Context with the default guard of 64 bits.
    pub fn new(working_bits: usize) -> Self {
        Self::with_guard(working_bits, DEFAULT_GUARD_BITS)
    }

    pub fn with_guard(working_bits: usize, guard_bits: usize) -> Self {
        Self {
            working_bits: working_bits.max(MIN_WORKING_BITS),
            guard_bits: guard_bits.max(MIN_GUARD_BITS),
        }
    }

    pub fn working_bits(&self) -> usize {
        self.working_bits
    }

    pub fn guard_bits(&self) -> usize {
        self.guard_bits
    }

    /// Internal computing precision.
    pub fn total_bits(&self) -> usize {
        self.working_bits + self.guard_bits
    }

    /// A context whose *working* precision is this context's total precision.
    /// Used when one kernel calls another and must not lose its guard digits.
    pub fn widened(&self, extra: usize) -> Self {
        Self {
            working_bits: self.total_bits() + extra,
            guard_bits: self.guard_bits,
        }
    }

    pub(crate) fn rm(&self) -> RoundingMode {
        RoundingMode::ToEven
    }

    /// π at total precision.
    pub fn pi(&self) -> BigFloat {
        let p = self.total_bits();
        with_consts(|cc| cc.pi(p, RoundingMode::ToEven))
    }

    /// ln 2 at total precision.
    pub fn ln2(&self) -> BigFloat {
        let p = self.total_bits();
        with_consts(|cc| cc.ln_2(p, RoundingMode::ToEven))
    }

    /// 2^(−working_bits), the unit for working-precision relative error.
    pub fn eps_working(&self) -> BigFloat {
        pow2(-(self.working_bits as i64))
    }

    /// Parses a decimal string at full working precision (one rounding).
    pub fn parse_decimal(&self, s: &str) -> Result<BigFloat> {
        let p = self.total_bits();
        let v = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, p, RoundingMode::ToEven, cc));
        if v.is_nan() {
            return Err(Error::Usage(format!("cannot parse '{s}' as a decimal number")));
        }
        Ok(v)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::new(256)
    }
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Runs `f` with the thread's constants cache (π, e, ln 2 …).
pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

// ---------------------------------------------------------------------------
// BigFloat helpers
// ---------------------------------------------------------------------------

/// 2^e as a BigFloat (exact).
pub fn pow2(e: i64) -> BigFloat {
    let mut x = BigFloat::from_u64(1, 64);
    x.set_exponent((e + 1) as astro_float::Exponent);
    x
}

pub fn bf_u64(v: u64, p: usize) -> BigFloat {
    BigFloat::from_u64(v, p)
}

pub fn bf_i64(v: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(v, p)
}

/// Exact conversion of a big integer (value fits the precision given to the
/// final rounding step only if `p` is large enough; conversion itself is exact).
pub fn bigint_to_float(x: &BigInt, p: usize) -> BigFloat {
    let bits = x.bits() as usize + 64;
    let work = bits.max(p);
    let mut acc = BigFloat::from_u64(0, work);
    let shift = pow2(64);
    let mag = x.magnitude();
    for d in mag.iter_u64_digits().rev() {
        acc = acc.mul(&shift, work, RoundingMode::None);
        acc = acc.add(&BigFloat::from_u64(d, work), work, RoundingMode::None);
    }
    if x.is_negative() {
        acc = acc.neg();
    }
    if acc.precision().map(|q| q > p).unwrap_or(false) {
        acc.set_precision(p, RoundingMode::ToEven).expect("set precision");
    }
    acc
}

/// Rational to float with a single rounding at `p` bits.
pub fn rational_to_float(q: &BigRational, p: usize) -> BigFloat {
    let num = bigint_to_float(q.numer(), p + 64);
    let den = bigint_to_float(q.denom(), p + 64);
    num.div(&den, p, RoundingMode::ToEven)
}

/// Rough base-2 logarithm of |x| for parameter estimation (never for results).
pub fn bf_log2_approx(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    if x.is_inf() || x.is_nan() {
        return f64::INFINITY;
    }
    let e = x.exponent().unwrap_or(0) as f64;
    if let Some((words, _n, _s, _e, _inexact)) = x.as_raw_parts() {
        if let Some(top) = words.last() {
            let frac = (*top as f64) / (u64::MAX as f64 + 1.0);
            if frac > 0.0 {
                return e + frac.log2();
            }
        }
    }
    e
}

/// Rough f64 value for diagnostics and parameter estimation.
pub fn bf_to_f64_approx(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    if x.is_inf() {
        return sign * f64::INFINITY;
    }
    let l2 = bf_log2_approx(x);
    if l2 > 1023.0 {
        return sign * f64::INFINITY;
    }
    if l2 < -1022.0 {
        return 0.0;
    }
    sign * l2.exp2()
}

/// Total-order comparison treating NaN as an error.
pub fn bf_cmp(a: &BigFloat, b: &BigFloat) -> Ordering {
    match a.cmp(b) {
        Some(c) if c < 0 => Ordering::Less,
        Some(c) if c > 0 => Ordering::Greater,
        Some(_) => Ordering::Equal,
        None => panic!("comparison with NaN"),
    }
}

pub fn bf_lt(a: &BigFloat, b: &BigFloat) -> bool {
    bf_cmp(a, b) == Ordering::Less
}

pub fn bf_le(a: &BigFloat, b: &BigFloat) -> bool {
    bf_cmp(a, b) != Ordering::Greater
}

pub fn bf_max(a: &BigFloat, b: &BigFloat) -> BigFloat {
    if bf_lt(a, b) {
        b.clone()
    } else {
        a.clone()
    }
}

/// |x| rounded *up* one ulp so the result is safe to use in error bounds.
pub fn bf_abs_upper(x: &BigFloat, p: usize) -> BigFloat {
    let a = x.abs();
    let bump = pow2(bf_log2_approx(&a).ceil() as i64 - p as i64 + 2);
    a.add(&bump, p, RoundingMode::Up)
}

/// Formats |x| with exactly `digits` significant decimal digits as
/// `-d.dddd…e±E`. Deterministic: pure integer arithmetic, round-half-up.
pub fn decimal_string(x: &BigFloat, digits: usize) -> String {
    use num_bigint::BigUint;
    use num_traits::One;

    let digits = digits.max(1);
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_inf() {
        return if x.is_inf_neg() { "-Inf".into() } else { "Inf".into() };
    }
    if x.is_zero() {
        let frac = if digits > 1 {
            format!(".{}", "0".repeat(digits - 1))
        } else {
            String::new()
        };
        return format!("0{frac}e+0");
    }

    let (words, nbits, sign, exp, _inexact) = x.as_raw_parts().expect("finite value");
    let mut mantissa = BigUint::zero();
    for w in words.iter().rev() {
        mantissa = (mantissa << 64) | BigUint::from(*w);
    }
    // value = mantissa · 2^(exp − nbits)
    let e2 = exp as i64 - nbits as i64;

    // First estimate of the decimal exponent E with |x| = d.ddd… · 10^E.
    let log10 = bf_log2_approx(x) * std::f64::consts::LOG10_2;
    let mut e10 = log10.floor() as i64;

    loop {
        // N = round(mantissa · 2^e2 · 10^(digits − 1 − e10))
        let k = digits as i64 - 1 - e10;
        let mut num = BigUint::from(mantissa.clone());
        let mut den = BigUint::one();
        if e2 >= 0 {
            num <<= e2 as u64;
        } else {
            den <<= (-e2) as u64;
        }
        if k >= 0 {
            num *= BigUint::from(10u32).pow(k as u32);
        } else {
            den *= BigUint::from(10u32).pow((-k) as u32);
        }
        // round half up: floor((2·num + den) / (2·den))
        let n = (num.clone() * 2u32 + den.clone()) / (den * 2u32);
        let s = n.to_string();
        if s.len() == digits {
            let sign_str = if sign == Sign::Neg { "-" } else { "" };
            let (head, tail) = s.split_at(1);
            let frac = if tail.is_empty() {
                String::new()
            } else {
                format!(".{tail}")
            };
            let esign = if e10 < 0 { "-" } else { "+" };
            return format!("{sign_str}{head}{frac}e{esign}{}", e10.abs());
        }
        // Rounding crossed a power of ten (or the log estimate was off by one).
        if s.len() > digits {
            e10 += 1;
        } else {
            e10 -= 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Complex numbers
// ---------------------------------------------------------------------------

/// Arbitrary-precision complex value. Finite in all successful results.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigFloat) -> Self {
        Self {
            im: BigFloat::from_u64(0, 64),
            re,
        }
    }

    pub fn zero() -> Self {
        Self::real(BigFloat::from_u64(0, 64))
    }

    pub fn one() -> Self {
        Self::real(BigFloat::from_u64(1, 64))
    }

    pub fn from_u64(v: u64, ctx: &PrecisionContext) -> Self {
        Self::real(bf_u64(v, ctx.total_bits()))
    }

    pub fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        Self::real(bf_i64(v, ctx.total_bits()))
    }

    pub fn from_f64(re: f64, ctx: &PrecisionContext) -> Self {
        Self::real(BigFloat::from_f64(re, ctx.total_bits()))
    }

    pub fn from_rational(q: &BigRational, ctx: &PrecisionContext) -> Self {
        Self::real(rational_to_float(q, ctx.total_bits()))
    }

    /// Parses "re" and "im" decimal strings at full precision.
    pub fn parse(re: &str, im: &str, ctx: &PrecisionContext) -> Result<Self> {
        Ok(Self {
            re: ctx.parse_decimal(re)?,
            im: ctx.parse_decimal(im)?,
        })
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.re.is_inf() || self.im.is_nan() || self.im.is_inf())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, rhs: &Self, ctx: &PrecisionContext) -> Self {
        let p = ctx.total_bits();
        Self {
            re: self.re.add(&rhs.re, p, ctx.rm()),
            im: self.im.add(&rhs.im, p, ctx.rm()),
        }
    }

    pub fn sub(&self, rhs: &Self, ctx: &PrecisionContext) -> Self {
        let p = ctx.total_bits();
        Self {
            re: self.re.sub(&rhs.re, p, ctx.rm()),
            im: self.im.sub(&rhs.im, p, ctx.rm()),
        }
    }

    pub fn mul(&self, rhs: &Self, ctx: &PrecisionContext) -> Self {
        let p = ctx.total_bits();
        let rm = ctx.rm();
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(self.re.mul(&rhs.re, p, rm));
        }
        let ac = self.re.mul(&rhs.re, p, rm);
        let bd = self.im.mul(&rhs.im, p, rm);
        let ad = self.re.mul(&rhs.im, p, rm);
        let bc = self.im.mul(&rhs.re, p, rm);
        Self {
            re: ac.sub(&bd, p, rm),
            im: ad.add(&bc, p, rm),
        }
    }

    /// Multiplication by a real scalar.
    pub fn scale(&self, k: &BigFloat, ctx: &PrecisionContext) -> Self {
        let p = ctx.total_bits();
        Self {
            re: self.re.mul(k, p, ctx.rm()),
            im: self.im.mul(k, p, ctx.rm()),
        }
    }

    pub fn div(&self, rhs: &Self, ctx: &PrecisionContext) -> Self {
        let p = ctx.total_bits();
        let rm = ctx.rm();
        if rhs.im.is_zero() {
            return Self {
                re: self.re.div(&rhs.re, p, rm),
                im: self.im.div(&rhs.re, p, rm),
            };
        }
        let d = rhs
            .re
            .mul(&rhs.re, p, rm)
            .add(&rhs.im.mul(&rhs.im, p, rm), p, rm);
        let num = self.mul(&rhs.conj(), ctx);
        Self {
            re: num.re.div(&d, p, rm),
            im: num.im.div(&d, p, rm),
        }
    }

    pub fn recip(&self, ctx: &PrecisionContext) -> Self {
        Complex::one().div(self, ctx)
    }

    /// |z| as a real.
    pub fn abs(&self, ctx: &PrecisionContext) -> BigFloat {
        let p = ctx.total_bits();
        let rm = ctx.rm();
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.re
            .mul(&self.re, p, rm)
            .add(&self.im.mul(&self.im, p, rm), p, rm)
            .sqrt(p, rm)
    }

    /// Principal natural logarithm: ln|z| + i·atan2(im, re).
    pub fn ln(&self, ctx: &PrecisionContext) -> Self {
        let p = ctx.total_bits();
        let rm = ctx.rm();
        if self.im.is_zero() && self.re.is_positive() {
            return Self::real(with_consts(|cc| self.re.ln(p, rm, cc)));
        }
        let mag2 = self
            .re
            .mul(&self.re, p, rm)
            .add(&self.im.mul(&self.im, p, rm), p, rm);
        let half = pow2(-1);
        let re = with_consts(|cc| mag2.ln(p, rm, cc)).mul(&half, p, rm);
        let im = atan2(&self.im, &self.re, ctx);
        Self { re, im }
    }

    /// exp(z) = e^re (cos im + i sin im).
    pub fn exp(&self, ctx: &PrecisionContext) -> Self {
        let p = ctx.total_bits();
        let rm = ctx.rm();
        let mag = with_consts(|cc| self.re.exp(p, rm, cc));
        if self.im.is_zero() {
            return Self::real(mag);
        }
        let (c, s) = with_consts(|cc| (self.im.cos(p, rm, cc), self.im.sin(p, rm, cc)));
        Self {
            re: mag.mul(&c, p, rm),
            im: mag.mul(&s, p, rm),
        }
    }

    /// z^w = exp(w · ln z), principal branch.
    pub fn powz(&self, w: &Self, ctx: &PrecisionContext) -> Self {
        self.ln(ctx).mul(w, ctx).exp(ctx)
    }

    /// z^k for small non-negative integer k, by repeated squaring.
    pub fn powu(&self, k: u32, ctx: &PrecisionContext) -> Self {
        let mut result = Complex::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base, ctx);
            }
            base = base.mul(&base, ctx);
            k >>= 1;
        }
        result
    }

    /// Rounds both parts to the context's working precision.
    pub fn rounded_to_working(&self, ctx: &PrecisionContext) -> Self {
        let mut out = self.clone();
        let p = ctx.working_bits();
        let _ = out.re.set_precision(p, ctx.rm());
        let _ = out.im.set_precision(p, ctx.rm());
        out
    }

    /// Errors out on NaN/Inf parts; successful kernel results are always finite.
    pub fn ensure_finite(self, what: &str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite(format!("{what} produced a non-finite value")))
        }
    }

    pub fn to_f64_approx(&self) -> (f64, f64) {
        (bf_to_f64_approx(&self.re), bf_to_f64_approx(&self.im))
    }
}

/// Four-quadrant arctangent.
pub fn atan2(y: &BigFloat, x: &BigFloat, ctx: &PrecisionContext) -> BigFloat {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let pi = ctx.pi();
    if x.is_zero() {
        let half_pi = pi.mul(&pow2(-1), p, rm);
        if y.is_zero() {
            return bf_u64(0, p);
        }
        return if y.is_positive() { half_pi } else { half_pi.neg() };
    }
    let base = with_consts(|cc| y.div(x, p, rm).atan(p, rm, cc));
    if x.is_positive() {
        base
    } else if y.is_negative() {
        base.sub(&pi, p, rm)
    } else {
        base.add(&pi, p, rm)
    }
}

/// E(x) = (eˣ − 1)/x, the exponential-minus-one primitive; E(0) = 1.
///
/// For |x| ≲ 1/2 the Taylor series Σ xᵐ/(m+1)! is summed (no cancellation);
/// otherwise the direct form is safe.
pub fn e_fn(x: &Complex, ctx: &PrecisionContext) -> Complex {
    let p = ctx.total_bits();
    if x.is_zero() {
        return Complex::one();
    }
    let mag = bf_log2_approx(&x.re).max(bf_log2_approx(&x.im));
    if mag <= -1.0 {
        let mut sum = Complex::one();
        let mut term = Complex::one();
        for m in 1..(p as u64 + 16) {
            term = term.mul(x, ctx);
            term = term.scale(&bf_u64(m + 1, p).reciprocal(p, ctx.rm()), ctx);
            sum = sum.add(&term, ctx);
            let t_mag = bf_log2_approx(&term.re).max(bf_log2_approx(&term.im));
            if t_mag < -(p as f64) - 8.0 {
                break;
            }
        }
        sum
    } else {
        x.exp(ctx).sub(&Complex::one(), ctx).div(x, ctx)
    }
}

/// expm1(x) = eˣ − 1 computed without cancellation near 0.
pub fn expm1(x: &Complex, ctx: &PrecisionContext) -> Complex {
    e_fn(x, ctx).mul(x, ctx)
}

/// ln(1 − v) for real 0 < v < 1, stable for small v.
///
/// Series −Σ vᵐ/m when v < 1/4, direct logarithm otherwise.
pub fn ln_one_minus(v: &BigFloat, ctx: &PrecisionContext) -> BigFloat {
    let p = ctx.total_bits();
    let rm = ctx.rm();
    let l2 = bf_log2_approx(v);
    if l2 < -2.0 {
        let mut sum = v.clone();
        let mut pw = v.clone();
        for m in 2..(p as u64 + 16) {
            pw = pw.mul(v, p, rm);
            let term = pw.div(&bf_u64(m, p), p, rm);
            sum = sum.add(&term, p, rm);
            if bf_log2_approx(&term) < bf_log2_approx(&sum) - p as f64 - 8.0 {
                break;
            }
        }
        sum.neg()
    } else {
        let one = bf_u64(1, p);
        with_consts(|cc| one.sub(v, p, rm).ln(p, rm, cc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128)
    }

    fn assert_close_f64(x: &BigFloat, expect: f64, tol: f64) {
        let got = bf_to_f64_approx(x);
        assert!(
            (got - expect).abs() <= tol * expect.abs().max(1.0),
            "got {got}, expected {expect}"
        );
    }

    #[test]
    fn context_clamps_minimums() {
        let c = PrecisionContext::with_guard(10, 1);
        assert_eq!(c.working_bits(), MIN_WORKING_BITS);
        assert_eq!(c.guard_bits(), MIN_GUARD_BITS);
        assert_eq!(c.total_bits(), 96);
    }

    #[test]
    fn pow2_values() {
        assert_close_f64(&pow2(0), 1.0, 0.0);
        assert_close_f64(&pow2(3), 8.0, 0.0);
        assert_close_f64(&pow2(-4), 0.0625, 0.0);
    }

    #[test]
    fn bigint_round_trip() {
        let c = ctx();
        let x = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let f = bigint_to_float(&x, c.total_bits());
        assert_eq!(decimal_string(&f, 30), "1.23456789012345678901234567890e+29");
        let neg = bigint_to_float(&BigInt::from(-120), c.total_bits());
        assert_eq!(decimal_string(&neg, 4), "-1.200e+2");
    }

    #[test]
    fn rational_conversion() {
        let c = ctx();
        let q = BigRational::new(BigInt::from(-5), BigInt::from(8));
        let f = rational_to_float(&q, c.total_bits());
        assert_close_f64(&f, -0.625, 0.0);
    }

    #[test]
    fn decimal_string_basics() {
        let c = ctx();
        let pi = c.pi();
        assert_eq!(decimal_string(&pi, 20), "3.1415926535897932385e+0");
        let half = pow2(-1);
        assert_eq!(decimal_string(&half, 3), "5.00e-1");
        let z = BigFloat::from_u64(0, 64);
        assert_eq!(decimal_string(&z, 3), "0.00e+0");
        // Rounding that carries across a power of ten.
        let x = c.parse_decimal("9.999999").unwrap();
        assert_eq!(decimal_string(&x, 3), "1.00e+1");
    }

    #[test]
    fn complex_field_ops() {
        let c = ctx();
        let a = Complex::new(bf_i64(3, 128), bf_i64(4, 128));
        let b = Complex::new(bf_i64(1, 128), bf_i64(-2, 128));
        let sum = a.add(&b, &c);
        assert_close_f64(&sum.re, 4.0, 0.0);
        assert_close_f64(&sum.im, 2.0, 0.0);
        let prod = a.mul(&b, &c);
        assert_close_f64(&prod.re, 11.0, 0.0);
        assert_close_f64(&prod.im, -2.0, 0.0);
        let quot = prod.div(&b, &c);
        assert_close_f64(&quot.re, 3.0, 1e-12);
        assert_close_f64(&quot.im, 4.0, 1e-12);
        assert_close_f64(&a.abs(&c), 5.0, 1e-12);
    }

    #[test]
    fn complex_exp_ln_round_trip() {
        let c = ctx();
        let z = Complex::new(
            c.parse_decimal("0.7").unwrap(),
            c.parse_decimal("-1.3").unwrap(),
        );
        let w = z.exp(&c).ln(&c);
        let d = w.sub(&z, &c).abs(&c);
        assert!(bf_log2_approx(&d) < -120.0, "delta 2^{}", bf_log2_approx(&d));
    }

    #[test]
    fn ln_of_negative_real() {
        let c = ctx();
        let z = Complex::from_i64(-1, &c).ln(&c);
        assert!(z.re.is_zero() || bf_log2_approx(&z.re) < -150.0);
        let pi = c.pi();
        let d = z.im.sub(&pi, c.total_bits(), c.rm()).abs();
        assert!(bf_log2_approx(&d) < -150.0);
    }

    #[test]
    fn atan2_quadrants() {
        let c = ctx();
        let one = bf_i64(1, 128);
        let pi = bf_to_f64_approx(&c.pi());
        assert_close_f64(&atan2(&one, &one, &c), pi / 4.0, 1e-15);
        assert_close_f64(&atan2(&one, &one.neg(), &c), 3.0 * pi / 4.0, 1e-15);
        assert_close_f64(&atan2(&one.neg(), &one.neg(), &c), -3.0 * pi / 4.0, 1e-15);
        assert_close_f64(&atan2(&one.neg(), &one, &c), -pi / 4.0, 1e-15);
        assert_close_f64(&atan2(&one, &BigFloat::from_u64(0, 64), &c), pi / 2.0, 1e-15);
    }

    #[test]
    fn e_fn_series_matches_direct() {
        let c = ctx();
        // Just below and just above the series/direct switch.
        for v in ["0.4", "-0.4", "0.7", "-2.5"] {
            let x = Complex::real(c.parse_decimal(v).unwrap());
            let series_like = e_fn(&x, &c);
            let direct = x.exp(&c).sub(&Complex::one(), &c).div(&x, &c);
            let d = series_like.sub(&direct, &c).abs(&c);
            assert!(bf_log2_approx(&d) < -110.0, "v={v}: delta 2^{}", bf_log2_approx(&d));
        }
        // E(0) = 1 exactly.
        let one = e_fn(&Complex::zero(), &c);
        assert_close_f64(&one.re, 1.0, 0.0);
    }

    #[test]
    fn e_fn_tiny_argument() {
        let c = ctx();
        // E(x) ≈ 1 + x/2 for tiny x; direct evaluation would cancel badly.
        let x = Complex::real(c.parse_decimal("1e-30").unwrap());
        let v = e_fn(&x, &c);
        let expect = c.parse_decimal("1.0000000000000000000000000000005").unwrap();
        let d = v.re.sub(&expect, c.total_bits(), c.rm()).abs();
        assert!(bf_log2_approx(&d) < -150.0);
    }

    #[test]
    fn ln_one_minus_small_and_large() {
        let c = ctx();
        let p = c.total_bits();
        // Series path cross-checked against the direct logarithm.
        for v_str in ["0.001", "0.2", "1e-12"] {
            let v = c.parse_decimal(v_str).unwrap();
            let got = ln_one_minus(&v, &c);
            let direct = with_consts(|cc| bf_u64(1, p).sub(&v, p, c.rm()).ln(p, c.rm(), cc));
            // The direct path carries absolute error ~2^(−p); compare absolutely.
            let d = got.sub(&direct, p, c.rm()).abs();
            assert!(
                bf_log2_approx(&d) < -(p as f64) + 16.0,
                "v={v_str}: delta 2^{}",
                bf_log2_approx(&d)
            );
        }
        let v = c.parse_decimal("0.75").unwrap();
        let got = ln_one_minus(&v, &c);
        assert_close_f64(&got, 0.25f64.ln(), 1e-12);
    }
}
