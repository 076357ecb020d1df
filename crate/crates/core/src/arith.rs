//! Shared integer helpers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient with the vanishing convention: `binomial(a, b)` is 0
/// whenever `b < 0` or `a < b` (negative `a` included). Sums over shifted
/// indices can therefore run without boundary guards.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < b {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 1..=b {
        // Exact at every step: the product of i consecutive integers is
        // divisible by i!.
        acc = acc * BigUint::from((a - b + i) as u64) / BigUint::from(i as u64);
    }
    acc
}

/// Exact ceiling of `a / b` for positive `b`, correct for negative `a`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(a: i64, b: i64) -> u64 {
        use num_traits::ToPrimitive;
        binomial(a, b).to_u64().unwrap()
    }

    #[test]
    fn test_binomial_small() {
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(5, 0), 1);
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(6, 3), 20);
        assert_eq!(binom(52, 5), 2_598_960);
    }

    #[test]
    fn test_binomial_vanishes_out_of_range() {
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(-1, -1), 0);
        assert_eq!(binom(-4, 2), 0);
    }

    #[test]
    fn test_ceil_div_negative_points() {
        assert_eq!(ceil_div(5, 2), 3);
        assert_eq!(ceil_div(4, 2), 2);
        assert_eq!(ceil_div(0, 2), 0);
        assert_eq!(ceil_div(-3, 2), -1);
        assert_eq!(ceil_div(-4, 2), -2);
        assert_eq!(ceil_div(-1, 1), -1);
        assert_eq!(ceil_div(-7, 3), -2);
    }
}
