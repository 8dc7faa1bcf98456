//! Exact combinatorial primitives.
//!
//! Binomials with an index outside `0..=n` are zero rather than an error;
//! the counting sums rely on that at their boundaries.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Multiset coefficient: ways to put `k` indistinct items into `n` bins.
pub fn multichoose(n: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n == 0 {
        return BigUint::zero();
    }
    binomial(n + k - 1, k as i64)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(Σ parts)! / Π parts!`, built as a product of binomials so no
/// intermediate exceeds the result.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut running = 0u64;
    let mut acc = BigUint::one();
    for &p in parts {
        running += p;
        acc *= binomial(running, p as i64);
    }
    acc
}

/// `C(n, k)` extended to `n = -1` via `C(-1, k) = (-1)^k` for `k >= 0`,
/// which keeps Pascal's rule valid one row above the triangle.
fn signed_binomial(n: i64, k: i64) -> BigInt {
    if n >= 0 {
        return BigInt::from(binomial(n as u64, k));
    }
    debug_assert_eq!(n, -1);
    if k < 0 {
        BigInt::zero()
    } else if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn sign(exp: i64) -> BigInt {
    if exp.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Closed form of `Σ_{i=j}^{m} (-1)^i C(n, k - i)`:
/// `(-1)^j C(n-1, k-j) + (-1)^m C(n-1, k-m-1)`.
pub fn lemma4_rhs(j: i64, m: i64, n: u64, k: i64) -> BigInt {
    debug_assert!(j <= m);
    let below = n as i64 - 1;
    sign(j) * signed_binomial(below, k - j) + sign(m) * signed_binomial(below, k - m - 1)
}

/// Direct evaluation of the alternating sum that [`lemma4_rhs`] simplifies.
pub fn alternating_sum(j: i64, m: i64, n: u64, k: i64) -> BigInt {
    (j..=m)
        .map(|i| sign(i) * BigInt::from(binomial(n, k - i)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(7, -1), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(9, 0), big(1));
        assert_eq!(binomial(9, 9), big(1));
        // C(100, 50)
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn multichoose_values() {
        assert_eq!(multichoose(2, 1), big(2));
        assert_eq!(multichoose(3, 0), big(1));
        assert_eq!(multichoose(2, 2), big(3));
        assert_eq!(multichoose(0, 0), big(1));
        assert_eq!(multichoose(0, 4), big(0));
    }

    #[test]
    fn multichoose_matches_enumerated_compositions() {
        // count nonnegative integer vectors of length n summing to k
        fn compositions(n: u64, k: u64) -> u64 {
            match n {
                0 => u64::from(k == 0),
                1 => 1,
                _ => (0..=k).map(|first| compositions(n - 1, k - first)).sum(),
            }
        }
        for n in 0..6 {
            for k in 0..7 {
                assert_eq!(multichoose(n, k), big(compositions(n, k)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(5), big(120));
        assert_eq!(factorial(20), big(2432902008176640000));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[1, 1]), big(2));
        assert_eq!(multinomial(&[2, 0]), big(1));
        assert_eq!(multinomial(&[2, 3]), big(10));
        assert_eq!(
            multinomial(&[2, 3, 4]),
            factorial(9) / (factorial(2) * factorial(3) * factorial(4))
        );
    }

    #[test]
    fn lemma4_examples() {
        assert_eq!(lemma4_rhs(1, 3, 5, 4), BigInt::from(-5));
        assert_eq!(lemma4_rhs(2, 2, 6, 3), BigInt::from(6));
        assert_eq!(lemma4_rhs(0, 0, 4, 0), BigInt::from(1));
    }

    #[test]
    fn lemma4_holds_on_row_zero() {
        for j in -3..4 {
            for m in j..5 {
                for k in -2..6 {
                    assert_eq!(alternating_sum(j, m, 0, k), lemma4_rhs(j, m, 0, k));
                }
            }
        }
    }

    #[test]
    fn row_sums_are_powers_of_two() {
        for n in 0..=64u64 {
            let sum: BigUint = (0..=n as i64).map(|k| binomial(n, k)).sum();
            assert_eq!(sum, BigUint::one() << n);
        }
    }

    proptest! {
        #[test]
        fn pascal_rule(n in 1u64..80, k in -3i64..85) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
        }

        #[test]
        fn lemma4_identity(j in 0i64..=20, span in 0i64..=20, n in 1u64..=20, k_frac in 0.0f64..=1.0) {
            let m = (j + span).min(20);
            let k = (k_frac * n as f64).round() as i64;
            prop_assert_eq!(alternating_sum(j, m, n, k), lemma4_rhs(j, m, n, k));
        }

        #[test]
        fn multichoose_is_shifted_binomial(n in 1u64..40, k in 0u64..40) {
            prop_assert_eq!(multichoose(n, k), binomial(n + k - 1, k as i64));
        }

        #[test]
        fn two_part_multinomial(a in 0u64..60, b in 0u64..60) {
            prop_assert_eq!(multinomial(&[a, b]), binomial(a + b, a as i64));
        }
    }
}
