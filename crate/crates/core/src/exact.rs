//! Exact arbitrary-size integer and rational arithmetic for the closed-form
//! side of the monomial-weight integrals
//!
//! ```text
//!   I(r, s, n) = ∫₀¹∫₀¹ lnⁿ(xy)/(1 − xy) · xʳ yˢ dx dy .
//! ```
//!
//! For r ≠ s the value is the rational number n!(−1)ⁿ/(r−s) · Σ_{k=s+1}^{r} k^{−(n+1)};
//! for r = s it is the linear form (n+1)!(−1)ⁿ(ζ(n+2) − Σ_{k=1}^{r} k^{−(n+2)}).
//! Everything in this module is computed with no rounding whatsoever.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent triple (r, s, n) selecting one monomial-weight integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialSpec {
    pub r: u32,
    pub s: u32,
    pub n: u32,
}

impl MonomialSpec {
    pub fn new(r: u32, s: u32, n: u32) -> Self {
        Self { r, s, n }
    }

    /// True on the diagonal r = s, where the value involves ζ(n+2).
    pub fn is_diagonal(&self) -> bool {
        self.r == self.s
    }
}

impl fmt::Display for MonomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "monomial r={} s={} n={}", self.r, self.s, self.n)
    }
}

/// Exact value `constant + zeta_coeff · ζ(zeta_arg)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaLinearForm {
    pub constant: BigRational,
    pub zeta_coeff: BigRational,
    pub zeta_arg: u32,
}

impl ZetaLinearForm {
    pub fn new(constant: BigRational, zeta_coeff: BigRational, zeta_arg: u32) -> Self {
        assert!(zeta_arg >= 2, "zeta argument must be at least 2");
        Self {
            constant,
            zeta_coeff,
            zeta_arg,
        }
    }

    /// The form degenerates to a plain rational when the ζ coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.zeta_coeff.is_zero()
    }
}

impl fmt::Display for ZetaLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zeta_coeff.is_zero() {
            return write!(f, "{}", self.constant);
        }
        if self.zeta_coeff.is_one() {
            write!(f, "ζ({})", self.zeta_arg)?;
        } else if self.zeta_coeff == -BigRational::one() {
            write!(f, "-ζ({})", self.zeta_arg)?;
        } else {
            write!(f, "{}·ζ({})", self.zeta_coeff, self.zeta_arg)?;
        }
        if self.constant.is_positive() {
            write!(f, " + {}", self.constant)?;
        } else if self.constant.is_negative() {
            write!(f, " - {}", -self.constant.clone())?;
        }
        Ok(())
    }
}

/// Exact factorial n!.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=u64::from(n) {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k), exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// d_n = lcm(1, 2, …, n).
///
/// Satisfies d_n = lcm(d_{n−1}, n); n = 0 is rejected because d_0 is undefined.
pub fn lcm_upto(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("lcm_upto requires n >= 1".into()));
    }
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc = acc.lcm(&BigUint::from(k));
    }
    Ok(acc)
}

/// Rational value of the off-diagonal integral I(r, s, n), r ≠ s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffDiagonalValue {
    /// n!(−1)ⁿ/(r−s) · Σ_{k=s+1}^{r} k^{−(n+1)}, in lowest terms.
    pub value: BigRational,
    /// True when the input had r < s and the exponents were exchanged.
    pub swapped: bool,
}

/// Closed form of I(r, s, n) for r ≠ s.
///
/// Inputs with r < s are canonicalized by swapping the exponents; the integral
/// is symmetric in (r, s) and the swap is reported in the result.
pub fn off_diagonal_value(spec: MonomialSpec) -> Result<OffDiagonalValue> {
    if spec.r == spec.s {
        return Err(Error::Domain(format!(
            "off-diagonal value undefined for r = s = {}; use diagonal_form",
            spec.r
        )));
    }
    let swapped = spec.r < spec.s;
    let (r, s) = if swapped {
        (spec.s, spec.r)
    } else {
        (spec.r, spec.s)
    };
    let n = spec.n;

    let mut sum = BigRational::zero();
    for k in (s + 1)..=r {
        let kp = BigInt::from(k).pow(n + 1);
        sum += BigRational::new(BigInt::one(), kp);
    }
    let mut value = sum * BigRational::from_integer(factorial(n))
        / BigRational::from_integer(BigInt::from(r - s));
    if n % 2 == 1 {
        value = -value;
    }
    Ok(OffDiagonalValue { value, swapped })
}

/// Witness for the claim that the reduced denominator of the off-diagonal
/// value divides d_r^{n+2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityWitness {
    pub holds: bool,
    /// The exact reduced denominator of the value.
    pub denominator: BigUint,
    /// The divisor bound d_r^{n+2}.
    pub bound: BigUint,
}

/// Checks denominator(I(r, s, n)) | d_r^{n+2} and returns both numbers.
pub fn divisibility_check(spec: MonomialSpec) -> Result<DivisibilityWitness> {
    let off = off_diagonal_value(spec)?;
    let r = spec.r.max(spec.s);
    let denominator = off
        .value
        .denom()
        .to_biguint()
        .expect("reduced denominator is positive");
    let bound = lcm_upto(u64::from(r))?.pow(spec.n + 2);
    let holds = (&bound % &denominator).is_zero();
    Ok(DivisibilityWitness {
        holds,
        denominator,
        bound,
    })
}

/// Closed form of the diagonal integral I(r, r, n):
/// (n+1)!(−1)ⁿ · ζ(n+2) − (n+1)!(−1)ⁿ · Σ_{k=1}^{r} k^{−(n+2)}.
///
/// The sum over an empty index range (r = 0) is zero.
pub fn diagonal_form(r: u32, n: u32) -> ZetaLinearForm {
    let mut coeff = BigRational::from_integer(factorial(n + 1));
    if n % 2 == 1 {
        coeff = -coeff;
    }
    let mut partial = BigRational::zero();
    for k in 1..=r {
        let kp = BigInt::from(k).pow(n + 2);
        partial += BigRational::new(BigInt::one(), kp);
    }
    let constant = -coeff.clone() * partial;
    ZetaLinearForm::new(constant, coeff, n + 2)
}

/// Closed form of the (1−x)-weight integral at integer exponent n:
///
/// ```text
///   ∫₀¹∫₀¹ [−ln(xy)]ⁿ/(1 − xy) · (1 − x) dx dy = (n+1)!·ζ(n+2) − n! .
/// ```
///
/// Equals Γ(n+2)[ζ(n+2) − 1/(n+1)] and, term by term, the combination
/// (−1)ⁿ·[I(0,0,n) − I(1,0,n)] of the monomial values.
pub fn one_minus_x_form(n: u32) -> ZetaLinearForm {
    let constant = BigRational::from_integer(-factorial(n));
    let zeta_coeff = BigRational::from_integer(factorial(n + 1));
    ZetaLinearForm::new(constant, zeta_coeff, n + 2)
}
