//! Exact and real-valued binomial arithmetic, plus executable forms of the
//! binomial convexity inequalities used by the extremal bounds.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Absolute tolerance for floating-point inequality checks.
pub const ABS_TOL: f64 = 1e-9;
/// Relative tolerance for floating-point inequality checks.
pub const REL_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BinomError {
    #[error("lower degree {r} must be positive and below the upper degree {delta}")]
    DegreeRange { r: u64, delta: u64 },
    #[error("degree sum {d} outside [{lo}, {hi}]")]
    DegreeSum { d: u64, lo: u64, hi: u64 },
    #[error("sequence length must be positive")]
    EmptyLength,
}

/// Arbitrary-precision non-negative count.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn zero() -> Self {
        ExactCount(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    /// Lossy conversion for real-valued comparisons.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<u128> for ExactCount {
    fn from(v: u128) -> Self {
        ExactCount(BigUint::from(v))
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactCount> for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: &'a ExactCount) -> ExactCount {
        ExactCount(self.0 + &rhs.0)
    }
}

impl AddAssign<&ExactCount> for ExactCount {
    fn add_assign(&mut self, rhs: &ExactCount) {
        self.0 += &rhs.0;
    }
}

impl Mul<u64> for ExactCount {
    type Output = ExactCount;
    fn mul(self, rhs: u64) -> ExactCount {
        ExactCount(self.0 * rhs)
    }
}

impl Sum for ExactCount {
    fn sum<I: Iterator<Item = ExactCount>>(iter: I) -> Self {
        iter.fold(ExactCount::zero(), |acc, x| acc + x)
    }
}

impl Serialize for ExactCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

/// `C(n, k)` in exact arithmetic; zero when `k > n`.
pub fn binom_exact(n: u64, k: u64) -> ExactCount {
    if k > n {
        return ExactCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc *= n - i;
        acc /= i + 1;
    }
    ExactCount(acc)
}

/// `C(n, k)` for small arguments where the result fits in a `u128`.
pub(crate) fn binom_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc
}

/// Generalized binomial `x(x-1)...(x-k+1) / k!`, defined for every real `x`.
pub fn binom_real(x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (x - f64::from(i)) / f64::from(i + 1);
    }
    acc
}

/// Outcome of [`easy_convex_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvexCheck {
    HoldsWeak,
    HoldsStrict,
    /// Hypotheses held but the inequality (or its strict form) did not.
    Violated,
    PreconditionFailed,
}

/// Checks `C(x,t) + C(w,t) >= C(y,t) + C(z,t)` under
/// `t >= 2`, `x + w = y + z`, `x >= y`, `x >= z`, `x >= t`, exactly.
/// The strict form is required whenever `x > y` and `x > z`.
pub fn easy_convex_check(t: u64, w: u64, x: u64, y: u64, z: u64) -> ConvexCheck {
    if t < 2 || x + w != y + z || x < y || x < z || x < t {
        return ConvexCheck::PreconditionFailed;
    }
    let lhs = binom_exact(x, t) + binom_exact(w, t);
    let rhs = binom_exact(y, t) + binom_exact(z, t);
    let strict_required = x > y && x > z;
    match (lhs.cmp(&rhs), strict_required) {
        (std::cmp::Ordering::Less, _) => ConvexCheck::Violated,
        (std::cmp::Ordering::Equal, true) => ConvexCheck::Violated,
        (std::cmp::Ordering::Greater, true) => ConvexCheck::HoldsStrict,
        _ => ConvexCheck::HoldsWeak,
    }
}

fn check_degree_constraints(n: u64, d: u64, r: u64, delta: u64) -> Result<(), BinomError> {
    if n == 0 {
        return Err(BinomError::EmptyLength);
    }
    if r == 0 || r >= delta {
        return Err(BinomError::DegreeRange { r, delta });
    }
    let (lo, hi) = (n * r, n * delta);
    if d < lo || d > hi {
        return Err(BinomError::DegreeSum { d, lo, hi });
    }
    Ok(())
}

/// Upper bound `a C(delta,k) + (n-a) C(r,k)` on `sum C(x_i, k)` over integer
/// sequences of length at least `n` with entries in `[r, delta]` summing to
/// `d`, where `a` solves `a delta + (n-a) r = d`.
pub fn degree_sum_bound(n: u64, d: u64, r: u64, delta: u64, k: u64) -> Result<f64, BinomError> {
    check_degree_constraints(n, d, r, delta)?;
    let a = (d - n * r) as f64 / (delta - r) as f64;
    let high = binom_exact(delta, k).to_f64();
    let low = binom_exact(r, k).to_f64();
    Ok(a * high + (n as f64 - a) * low)
}

/// Exact maximum of `sum C(x_i, k)` over every integer sequence with length
/// at least `n`, entries in `[r, delta]` and sum `d`.
///
/// Dynamic programming over (partial sum, length capped at `n`) visits every
/// such sequence's prefix class, so the result is the true maximum.
pub fn max_convex_sum_oracle(
    n: u64,
    d: u64,
    r: u64,
    delta: u64,
    k: u64,
) -> Result<ExactCount, BinomError> {
    check_degree_constraints(n, d, r, delta)?;
    let n = n as usize;
    let total = d as usize;
    // best[s][c]: max objective for sequences summing to s with length
    // min(len, n) == c.
    let mut best: Vec<Vec<Option<ExactCount>>> = vec![vec![None; n + 1]; total + 1];
    best[0][0] = Some(ExactCount::zero());
    let values: Vec<(usize, ExactCount)> = (r..=delta)
        .map(|v| (v as usize, binom_exact(v, k)))
        .collect();
    for s in 0..total {
        for c in 0..=n {
            let Some(cur) = best[s][c].clone() else {
                continue;
            };
            for (v, fv) in &values {
                let ns = s + v;
                if ns > total {
                    break;
                }
                let nc = (c + 1).min(n);
                let cand = cur.clone() + fv;
                let slot = &mut best[ns][nc];
                if slot.as_ref().is_none_or(|old| cand > *old) {
                    *slot = Some(cand);
                }
            }
        }
    }
    // Feasible whenever n r <= d <= n delta, since the length-n sequences
    // interpolate between all-r and all-delta.
    Ok(best[total][n].clone().unwrap_or_default())
}

/// Positive root of `C(u, 2) = x`.
pub fn pair_root(x: f64) -> f64 {
    (1.0 + (1.0 + 8.0 * x).sqrt()) / 2.0
}

/// `C(u(x), t-1)` for `x >= C(t-2, 2)` and zero below, with `u` the
/// positive root of `C(u, 2) = x`. Convex in `x`.
pub fn g_value(x: f64, t: u32) -> f64 {
    let threshold = binom_real(f64::from(t) - 2.0, 2);
    if x >= threshold {
        binom_real(pair_root(x), t - 1)
    } else {
        0.0
    }
}

/// Outcome of [`slope_inequality_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeCheck {
    Holds,
    Violated,
    PreconditionFailed,
}

fn within_tolerance(lhs: f64, rhs: f64) -> bool {
    lhs >= rhs - (ABS_TOL + REL_TOL * rhs.abs())
}

/// Evaluates
/// `[C(x,t-1) - C(r-1,t-1)] / [C(x,2) - C(r-1,2)] >= C(r-1,t-2) / (r-1)`
/// for `r > t-1 >= 2` and real `x >= r`. Integral `x` is also checked in
/// exact arithmetic by cross-multiplication.
pub fn slope_inequality_check(x: f64, r: u64, t: u64) -> SlopeCheck {
    if t < 3 || r < t || !x.is_finite() || x < r as f64 {
        return SlopeCheck::PreconditionFailed;
    }
    let tm1 = (t - 1) as u32;
    let rm1 = (r - 1) as f64;
    let num = binom_real(x, tm1) - binom_real(rm1, tm1);
    let den = binom_real(x, 2) - binom_real(rm1, 2);
    let rhs = binom_exact(r - 1, t - 2).to_f64() / rm1;
    if !within_tolerance(num / den, rhs) {
        return SlopeCheck::Violated;
    }
    if x.fract() == 0.0 {
        let xi = x as u64;
        let big = |c: ExactCount| BigInt::from(c.0);
        let num = big(binom_exact(xi, t - 1)) - big(binom_exact(r - 1, t - 1));
        let den = big(binom_exact(xi, 2)) - big(binom_exact(r - 1, 2));
        let lhs = num * BigInt::from(r - 1);
        let rhs = big(binom_exact(r - 1, t - 2)) * den;
        if lhs < rhs {
            return SlopeCheck::Violated;
        }
    }
    SlopeCheck::Holds
}
