//! Closed-form values for the extremal caterpillar structures.
//!
//! Each branch on `n mod 4` is evaluated exactly; exponents that go negative
//! for small `n` are handled as exact rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Signed};

use super::{ExactRatio, ExtremalError};
use crate::invariants::BigCount;

fn check_even_order(n: usize, min: usize) -> Result<(), ExtremalError> {
    if n % 2 == 1 {
        Err(ExtremalError::BadOrder { order: n, reason: "order must be even" })
    } else if n < min {
        Err(ExtremalError::BadOrder { order: n, reason: "order too small for this formula" })
    } else {
        Ok(())
    }
}

/// `2^e` for a possibly negative exponent given as a numerator over 4
/// (`quarter_exp / 4` must be an integer).
fn pow2(quarter_exp: i64) -> Ratio<BigInt> {
    debug_assert_eq!(quarter_exp % 4, 0);
    let e = quarter_exp / 4;
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Ratio::from_integer(p)
    } else {
        Ratio::new(BigInt::one(), p)
    }
}

/// `2^((n - s) / 2)` written with the quarter-exponent convention.
fn pow2_half(n: usize, s: i64) -> Ratio<BigInt> {
    pow2(2 * (n as i64 - s))
}

/// `2^((n - s) / 4)`.
fn pow2_quarter(n: usize, s: i64) -> Ratio<BigInt> {
    pow2(n as i64 - s)
}

fn int(x: i64) -> Ratio<BigInt> {
    Ratio::from_integer(BigInt::from(x))
}

fn to_count(value: Ratio<BigInt>) -> BigCount {
    assert!(value.is_integer() && !value.is_negative(), "closed form must be a nonnegative integer");
    value.to_integer().to_biguint().expect("nonnegative")
}

/// Minimum distance ratio as stated for the binary caterpillar:
/// `(n²+12n-16)/(n²+4n-8)` for `n ≡ 0 (mod 4)` and `(n²+12n-12)/(n²+4n-4)`
/// for `n ≡ 2 (mod 4)`.
///
/// This is `1 + (n-1)/σ(v)` at the caterpillar's centroid. The ratio the
/// caterpillar actually attains is [`caterpillar_distance_ratio`].
pub fn theorem_distance_value(n: usize) -> Result<ExactRatio, ExtremalError> {
    check_even_order(n, 4)?;
    let n2 = (n * n) as u64;
    let n = n as u64;
    let (num, den) = if n.is_multiple_of(4) {
        (n2 + 12 * n - 16, n2 + 4 * n - 8)
    } else {
        (n2 + 12 * n - 12, n2 + 4 * n - 4)
    };
    Ok(ExactRatio::from_u64(num, den).expect("positive denominator"))
}

/// `σ_T(w)/σ_T(v)` for the binary caterpillar of order `n` with `v` a
/// centroid vertex and `w` its leaf: `1 + (n-2)/σ(v)`, since moving from `v`
/// to `w` adds one to the distance of the `n - 1` other vertices and removes
/// one from `w` itself.
pub fn caterpillar_distance_ratio(n: usize) -> Result<ExactRatio, ExtremalError> {
    let sigma = closed_form_sigma_t2(n)?;
    Ok(ExactRatio::from_u64(sigma + n as u64 - 2, sigma).expect("positive"))
}

/// `σ` at the centroid of the binary caterpillar:
/// `(n²+4n-8)/8` for `n ≡ 0 (mod 4)`, `(n²+4n-4)/8` for `n ≡ 2 (mod 4)`.
pub fn closed_form_sigma_t2(n: usize) -> Result<u64, ExtremalError> {
    check_even_order(n, 4)?;
    let n = n as u64;
    let top = if n.is_multiple_of(4) { n * n + 4 * n - 8 } else { n * n + 4 * n - 4 };
    debug_assert_eq!(top % 8, 0);
    Ok(top / 8)
}

/// `σ` at the center of the 3-way caterpillar with branch orders `a, b, c`:
/// `Σ ((s + 2)² - 5) / 4` over the three branches.
pub fn closed_form_sigma_t1(a: usize, b: usize, c: usize) -> Result<u64, ExtremalError> {
    if [a, b, c].iter().any(|&s| s == 0 || s % 2 == 0) {
        return Err(ExtremalError::BadBranchSizes(a, b, c));
    }
    Ok([a, b, c]
        .iter()
        .map(|&s| {
            let s = s as u64;
            ((s + 2) * (s + 2) - 5) / 4
        })
        .sum())
}

/// Subtrees containing the root of a rooted binary caterpillar with `k`
/// internal vertices: `3·2^k - 2`.
pub fn f_k(k: usize) -> Result<BigCount, ExtremalError> {
    if k == 0 {
        return Err(ExtremalError::BadOrder { order: 1, reason: "k must be at least 1" });
    }
    Ok(BigUint::from(3u32) * (BigUint::one() << k) - 2u32)
}

fn leaf_adjacent_core_exact(n: usize) -> Ratio<BigInt> {
    if n.is_multiple_of(4) {
        int(9) * pow2_half(n, 4) - int(3) * pow2_quarter(n, 0) + int(1)
    } else {
        int(9) * pow2_half(n, 4) - int(3) * pow2_quarter(n, 2) - int(3) * pow2_quarter(n, 6) + int(1)
    }
}

/// Lower bound on `F_{T_v}(v)` for a core vertex `v` with a leaf neighbor:
/// `9·2^((n-4)/2) - 3·2^(n/4) + 1` for `n ≡ 0`,
/// `9·2^((n-4)/2) - 3·2^((n-2)/4) - 3·2^((n-6)/4) + 1` for `n ≡ 2 (mod 4)`.
pub fn leaf_adjacent_core_bound(n: usize) -> Result<BigCount, ExtremalError> {
    check_even_order(n, 4)?;
    Ok(to_count(leaf_adjacent_core_exact(n)))
}

/// Lower bound on `F_T(w)` in the distance-two configuration:
/// `9·2^((n-2)/2) - 3·2^(n/4) + 1` for `n ≡ 0`,
/// `9·2^((n-4)/2) - 3·2^((n-2)/4) + 1` for `n ≡ 2 (mod 4)`.
pub fn distance_two_core_bound(n: usize) -> Result<BigCount, ExtremalError> {
    check_even_order(n, 8)?;
    let value = if n.is_multiple_of(4) {
        int(9) * pow2_half(n, 2) - int(3) * pow2_quarter(n, 0) + int(1)
    } else {
        int(9) * pow2_half(n, 4) - int(3) * pow2_quarter(n, 2) + int(1)
    };
    Ok(to_count(value))
}

/// Minimum subtree ratio, evaluated from the stated numerator and
/// denominator for each residue of `n mod 4`.
pub fn theorem_subtree_value(n: usize) -> Result<ExactRatio, ExtremalError> {
    check_even_order(n, 4)?;
    let numerator = leaf_adjacent_core_exact(n);
    let denominator = if n.is_multiple_of(4) {
        int(9) * pow2_half(n, 6) - int(3) * pow2_quarter(n, 4) + int(1)
    } else {
        int(9) * pow2_half(n, 6) - int(3) * pow2_quarter(n, 6) - int(3) * pow2_quarter(n, 10) + int(1)
    };
    Ok(ExactRatio::from_signed(&(numerator / denominator)).expect("positive ratio"))
}
