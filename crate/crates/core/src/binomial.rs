//! Binomial coefficients in the integer, big-integer and log domains.
//! Out-of-range arguments (`k < 0`, `k > n`, `n < 0`) give zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` in 128-bit arithmetic, zero outside `0 <= k <= n`.
///
/// # Panics
/// On overflow, which first happens just past `n = 130`.
pub fn binom(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiply
        let g = gcd(acc, i + 1);
        let (a, d) = (acc / g, (i + 1) / g);
        acc = a.checked_mul((n - i) / d).expect("binomial overflows u128");
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn binom_big(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Table of `ln(i!)` for `i = 0..=n`.
pub fn ln_factorials(n: usize) -> Vec<f64> {
    let mut t = Vec::with_capacity(n + 1);
    let mut acc = 0.0f64;
    t.push(0.0);
    for i in 1..=n {
        acc += (i as f64).ln();
        t.push(acc);
    }
    t
}

/// `ln C(n, k)` from a factorial table; `-inf` outside the valid range.
pub fn ln_binom(table: &[f64], n: i64, k: i64) -> f64 {
    if n < 0 || k < 0 || k > n {
        return f64::NEG_INFINITY;
    }
    table[n as usize] - table[k as usize] - table[(n - k) as usize]
}
