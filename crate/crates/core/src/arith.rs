//! Exact combinatorial arithmetic shared by the counting modules.

use num_traits::{One, Zero};

use crate::graph::BigCount;

pub fn factorial(n: u64) -> BigCount {
    (2..=n).fold(BigCount::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `s (s-1) ... (s-k+1)`; zero when `k > s`.
pub fn falling_factorial(s: &BigCount, k: u64) -> BigCount {
    let mut acc = BigCount::one();
    let mut term = s.clone();
    for _ in 0..k {
        if term.is_zero() {
            return BigCount::zero();
        }
        acc *= &term;
        term -= 1u32;
    }
    acc
}

/// `(sum parts)! / prod(part!)`.
pub fn multinomial(parts: &[u64]) -> BigCount {
    let mut acc = BigCount::one();
    let mut total = 0i64;
    for &p in parts {
        total += p as i64;
        acc *= binomial(total, p as i64);
    }
    acc
}
