//! Exact leading coefficients and the diagonal growth exponent.
//!
//! For fixed set size `k` and reflection count `p`, the growth value grows
//! like `C(k,p) * n^(k-1)` where the coefficient factors as a probability
//! (that a uniformly random subset of a `2p-2` element set has size `p-1`)
//! times the abelian-style coefficient `2^(k-1)/(k-1)!`. All coefficients
//! are exact rationals.
//!
//! On the diagonal `k = n` the growth is exponential with base
//! `3 + 2*sqrt(2)`; this module provides an exact integer lower bound, an
//! exact rational upper bound valid for any series parameter in `(0, 1)`,
//! and high-precision decimal estimates of `growth_max(n,n)^(1/n)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::counting::{binomial, growth, growth_max, GrowthQuery};
use crate::{Count, Error, Result};

/// Digits kept after the decimal point in exponent estimates.
pub const EXPONENT_DIGITS: usize = 40;

/// Largest diagonal index accepted by [`growth_exponent_estimates`]; the
/// evaluation cost grows cubically with it.
pub const MAX_EXPONENT_SAMPLE: usize = 512;

fn factorial(m: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=m {
        acc *= BigUint::from(i);
    }
    acc
}

fn ratio(numer: BigUint, denom: BigUint) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Leading coefficient `2^x / (x-1)!` of `y -> count_vectors(x, y)`.
pub fn vector_count_leading(dim: usize) -> Result<BigRational> {
    if dim < 1 {
        return Err(Error::InvalidInput("leading coefficient requires dim >= 1".into()));
    }
    Ok(ratio(BigUint::one() << dim, factorial(dim - 1)))
}

/// Leading coefficient `2^(2-x) / (x-2)! * C(2x-2, x-1)` of
/// `y -> count_balanced(x, y)`.
pub fn balanced_count_leading(dim: usize) -> Result<BigRational> {
    if dim < 2 {
        return Err(Error::InvalidInput("balanced leading coefficient requires dim >= 2".into()));
    }
    Ok(ratio(
        BigUint::from(4u32) * binomial(2 * dim - 2, dim - 1),
        (BigUint::one() << dim) * factorial(dim - 2),
    ))
}

/// Probability that a uniformly random subset of `{1, ..., 2p-2}` has size
/// `p-1`: `C(2p-2, p-1) / 2^(2p-2)`. Equals 1 at `p = 1` and is strictly
/// below 1 for `p >= 2`.
pub fn reflection_probability(p: usize) -> Result<BigRational> {
    if p < 1 {
        return Err(Error::InvalidInput("reflection probability requires p >= 1".into()));
    }
    Ok(ratio(
        binomial(2 * p - 2, p - 1),
        BigUint::one() << (2 * p - 2),
    ))
}

/// Exact coefficient of `n^(k-1)` in the growth value for fixed `(k, p)`:
/// `reflection_probability(p) * 2^(k-1) / (k-1)!`.
pub fn growth_leading(k: usize, p: usize) -> Result<BigRational> {
    if p < 1 || p > k {
        return Err(Error::InvalidInput(format!(
            "leading coefficient requires 1 <= p <= k, got p={p}, k={k}"
        )));
    }
    Ok(reflection_probability(p)? * ratio(BigUint::one() << (k - 1), factorial(k - 1)))
}

/// `|growth(k,p,n) / (growth_leading(k,p) * n^(k-1)) - 1|` as an exact
/// rational.
pub fn relative_leading_error(k: usize, p: usize, n: usize) -> Result<BigRational> {
    let coefficient = growth_leading(k, p)?;
    let value = growth(&GrowthQuery::new(k, p, n)?);
    let scale = coefficient * BigRational::from(BigInt::from(n).pow(k as u32 - 1));
    let ratio = BigRational::from(BigInt::from(value)) / scale;
    Ok((ratio - BigRational::one()).abs())
}

/// Binary entropy `-a*log2(a) - (1-a)*log2(1-a)` for `a` in `(0, 1)`.
pub fn binary_entropy(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::InvalidInput(format!(
            "binary entropy is defined on (0, 1), got {a}"
        )));
    }
    Ok(-a * a.log2() - (1.0 - a) * (1.0 - a).log2())
}

/// The diagonal growth exponent `3 + 2*sqrt(2)`.
pub fn growth_exponent_limit() -> f64 {
    3.0 + 2.0 * std::f64::consts::SQRT_2
}

/// Exact integer lower bound `2^t * C(n-1, t)^2` with `t = floor((2-sqrt(2))n)`
/// for the diagonal growth value `growth(n, 1, n)`. Falls back to the trivial
/// bound 1 when `t` leaves `[1, n-1]`.
pub fn diagonal_lower_bound(n: usize) -> Count {
    if n < 1 {
        return BigUint::one();
    }
    let target = 2 * (n as u128) * (n as u128);
    let mut s = target.sqrt();
    // One-step corrections; 2n^2 is never a perfect square for n >= 1,
    // so floor(sqrt(2)*n) = s gives ceil = s + 1.
    while (s + 1) * (s + 1) <= target {
        s += 1;
    }
    while s * s > target {
        s -= 1;
    }
    debug_assert!(s * s < target);
    let t_signed = 2 * (n as i128) - (s as i128) - 1;
    if t_signed < 1 || t_signed > (n as i128) - 1 {
        return BigUint::one();
    }
    let t = t_signed as usize;
    let choose = binomial(n - 1, t);
    (BigUint::one() << t) * &choose * &choose
}

fn rational_pow(base: &BigRational, exp: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Exact rational upper bound `((1+T) / (T(1-T)))^n` for the diagonal growth
/// value `growth_max(n, n)`, valid for every `T` in `(0, 1)`. The base is
/// minimised at `T = sqrt(2) - 1`, where it equals `3 + 2*sqrt(2)`.
pub fn diagonal_upper_bound(n: usize, t: &BigRational) -> Result<BigRational> {
    if !(t > &BigRational::zero() && t < &BigRational::one()) {
        return Err(Error::InvalidInput(format!(
            "series parameter must lie in (0, 1), got {t}"
        )));
    }
    let one = BigRational::one();
    let base = (&one + t) / (t * (&one - t));
    Ok(rational_pow(&base, n))
}

/// Continued-fraction convergent `408/985` of `sqrt(2) - 1`, the parameter
/// that brings the upper-bound base within `4e-12` of its minimum.
pub fn convergent_parameter() -> BigRational {
    BigRational::new(BigInt::from(408), BigInt::from(985))
}

/// `floor(x^(1/n) * 10^digits)`.
fn nth_root_decimal(x: &BigUint, n: u32, digits: usize) -> BigUint {
    let scaled = x * BigUint::from(10u32).pow(n * digits as u32);
    scaled.nth_root(n)
}

/// A high-precision evaluation of `growth_max(n, n)^(1/n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentEstimate {
    n: usize,
    scaled: BigUint,
}

impl ExponentEstimate {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `floor(growth_max(n,n)^(1/n) * 10^EXPONENT_DIGITS)`.
    pub fn scaled(&self) -> &BigUint {
        &self.scaled
    }

    pub fn digits(&self) -> usize {
        EXPONENT_DIGITS
    }

    /// Decimal rendering with [`EXPONENT_DIGITS`] fractional digits.
    pub fn decimal_string(&self) -> String {
        let shift = BigUint::from(10u32).pow(EXPONENT_DIGITS as u32);
        let int_part = &self.scaled / &shift;
        let frac_part = &self.scaled % &shift;
        format!("{}.{:0>width$}", int_part, frac_part.to_string(), width = EXPONENT_DIGITS)
    }

    pub fn to_f64(&self) -> f64 {
        self.scaled.to_f64().unwrap_or(f64::INFINITY) / 10f64.powi(EXPONENT_DIGITS as i32)
    }
}

/// Evaluates `growth_max(n, n)^(1/n)` at each sample. Samples must lie in
/// `[1, n_max]` and `n_max` must not exceed [`MAX_EXPONENT_SAMPLE`].
pub fn growth_exponent_estimates(n_max: usize, samples: &[usize]) -> Result<Vec<ExponentEstimate>> {
    if n_max > MAX_EXPONENT_SAMPLE {
        return Err(Error::CapacityExceeded(format!(
            "diagonal evaluation budget is n <= {MAX_EXPONENT_SAMPLE}, requested {n_max}"
        )));
    }
    for &n in samples {
        if n < 1 || n > n_max {
            return Err(Error::InvalidInput(format!(
                "sample {n} outside the requested range [1, {n_max}]"
            )));
        }
    }
    samples
        .par_iter()
        .map(|&n| {
            let (value, _) = growth_max(n, n)?;
            Ok(ExponentEstimate {
                n,
                scaled: nth_root_decimal(&value, n as u32, EXPONENT_DIGITS),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_vectors;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn vector_count_leading_values() {
        assert_eq!(vector_count_leading(1).unwrap(), rat(2, 1));
        assert_eq!(vector_count_leading(3).unwrap(), rat(4, 1));
        assert!(vector_count_leading(0).is_err());
    }

    #[test]
    fn balanced_count_leading_values() {
        assert_eq!(balanced_count_leading(2).unwrap(), rat(2, 1));
        assert_eq!(balanced_count_leading(3).unwrap(), rat(3, 1));
        assert!(balanced_count_leading(1).is_err());
    }

    #[test]
    fn vector_count_ratio_approaches_leading_coefficient() {
        // count_vectors(3, y) = 4y^2 + 2, so the ratio error is 2/y^2.
        let alpha = vector_count_leading(3).unwrap();
        let mut last = BigRational::from(BigInt::from(1));
        for y in [1000usize, 10000] {
            let value = BigRational::from(BigInt::from(count_vectors(3, y)));
            let scale = BigRational::from(BigInt::from(y).pow(2));
            let err = (value / scale - &alpha).abs();
            assert!(err < rat(1, 100_000), "ratio error too large at y={y}");
            assert!(err < last);
            last = err;
        }
    }

    #[test]
    fn balanced_count_ratio_approaches_leading_coefficient() {
        // count_balanced(3, y) = 3y for y >= 2, so the ratio is exact.
        let beta = balanced_count_leading(3).unwrap();
        for y in [1000usize, 10000] {
            let value = BigRational::from(BigInt::from(
                crate::counting::count_balanced(3, y).unwrap(),
            ));
            let err = (value / BigRational::from(BigInt::from(y)) - &beta).abs();
            assert!(err.is_zero(), "count_balanced(3, y) should be exactly 3y");
        }
    }

    #[test]
    fn reflection_probability_values() {
        assert_eq!(reflection_probability(1).unwrap(), rat(1, 1));
        assert_eq!(reflection_probability(2).unwrap(), rat(1, 2));
        assert_eq!(reflection_probability(3).unwrap(), rat(3, 8));
    }

    #[test]
    fn growth_leading_values() {
        assert_eq!(growth_leading(3, 2).unwrap(), rat(1, 1));
        assert_eq!(growth_leading(4, 1).unwrap(), rat(8, 6));
        assert!(growth_leading(2, 3).is_err());
        assert!(growth_leading(2, 0).is_err());
    }

    #[test]
    fn growth_ratio_approaches_leading_coefficient() {
        let mut last = BigRational::from(BigInt::from(10));
        for n in [1000usize, 2000] {
            let err = relative_leading_error(3, 2, n).unwrap();
            assert!(err < rat(1, 50), "error too large at n={n}");
            assert!(err < last);
            last = err;
        }
    }

    #[test]
    fn binary_entropy_basics() {
        assert!((binary_entropy(0.5).unwrap() - 1.0).abs() < 1e-15);
        for a in [0.1, 0.25, 0.4] {
            let h = binary_entropy(a).unwrap();
            let h_sym = binary_entropy(1.0 - a).unwrap();
            assert!((h - h_sym).abs() < 1e-14);
        }
        assert!(binary_entropy(0.0).is_err());
        assert!(binary_entropy(1.0).is_err());
        assert!(binary_entropy(-0.5).is_err());
    }

    #[test]
    fn entropy_identity_at_the_optimal_density() {
        let alpha = 2.0 - std::f64::consts::SQRT_2;
        let exponent = alpha + 2.0 * binary_entropy(alpha).unwrap();
        let value = exponent.exp2();
        assert!((value - growth_exponent_limit()).abs() < 1e-9);
    }

    #[test]
    fn lower_bound_small_values() {
        // n=3: t=1, bound 2*C(2,1)^2 = 8
        assert_eq!(diagonal_lower_bound(3), BigUint::from(8u32));
        // n=2: t=1, bound 2*C(1,1)^2 = 2
        assert_eq!(diagonal_lower_bound(2), BigUint::from(2u32));
        // n=1: t falls outside [1, 0], vacuous bound
        assert_eq!(diagonal_lower_bound(1), BigUint::one());
    }

    #[test]
    fn upper_bound_direct_evaluation() {
        // T = 1/2, n = 1: (3/2) / (1/4) = 6
        let bound = diagonal_upper_bound(1, &rat(1, 2)).unwrap();
        assert_eq!(bound, rat(6, 1));
        assert!(diagonal_upper_bound(3, &rat(0, 1)).is_err());
        assert!(diagonal_upper_bound(3, &rat(3, 2)).is_err());
    }

    #[test]
    fn convergent_base_is_near_the_limit() {
        let base = diagonal_upper_bound(1, &convergent_parameter()).unwrap();
        let diff = (base.to_f64().unwrap() - growth_exponent_limit()).abs();
        assert!(diff < 1e-6, "base off by {diff}");
    }

    #[test]
    fn exponent_estimates_small_diagonals() {
        let estimates = growth_exponent_estimates(3, &[2, 3]).unwrap();
        // growth_max(2,2) = 4, so the root is exactly 2.
        assert_eq!(estimates[0].to_f64(), 2.0);
        assert!(estimates[0].decimal_string().starts_with("2.0000"));
        // growth_max(3,3) = 17, root 17^(1/3) = 2.5712...
        assert!((estimates[1].to_f64() - 17f64.powf(1.0 / 3.0)).abs() < 1e-12);
        assert!(estimates[1].decimal_string().starts_with("2.571"));
    }

    #[test]
    fn exponent_estimates_validate_inputs() {
        assert!(growth_exponent_estimates(10, &[11]).is_err());
        assert!(growth_exponent_estimates(10, &[0]).is_err());
        assert!(matches!(
            growth_exponent_estimates(MAX_EXPONENT_SAMPLE + 1, &[2]),
            Err(Error::CapacityExceeded(_))
        ));
    }

    #[test]
    fn estimate_strings_carry_full_precision() {
        let estimates = growth_exponent_estimates(2, &[2]).unwrap();
        let s = estimates[0].decimal_string();
        let frac = s.split('.').nth(1).unwrap();
        assert_eq!(frac.len(), EXPONENT_DIGITS);
    }
}
