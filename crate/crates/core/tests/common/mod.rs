//! Recurrence oracles shared by the integration tests. None of these go
//! through the series engine.
#![allow(dead_code)]

use degen_core::poly::BiPoly;
use degen_core::rational::{binom, int, rat, Rational};

pub fn b(n: usize, j: usize) -> Rational {
    binom(n as u32, j as i64)
}

/// Bernoulli numbers from `Σ_{j<n+1} C(n+1,j) B_j = 0`.
pub fn bernoulli_numbers(max_n: usize) -> Vec<Rational> {
    let mut out = vec![int(1)];
    for n in 1..=max_n {
        let s: Rational = (0..n).map(|j| b(n + 1, j) * &out[j]).sum();
        out.push(-s / b(n + 1, n));
    }
    out
}

/// `B_n(x) = Σ C(n,j) B_j x^{n-j}`.
pub fn bernoulli_polynomials(max_n: usize) -> Vec<BiPoly> {
    let nums = bernoulli_numbers(max_n);
    (0..=max_n)
        .map(|n| {
            (0..=n).fold(BiPoly::zero(), |acc, j| {
                &acc + &BiPoly::x().pow((n - j) as u32).scale(&(b(n, j) * &nums[j]))
            })
        })
        .collect()
}

/// From `(e^t + 1) Σ E_n(x) t^n/n! = 2 e^{xt}`.
pub fn euler_polynomials(max_n: usize) -> Vec<BiPoly> {
    let mut e: Vec<BiPoly> = Vec::new();
    for n in 0..=max_n {
        let s = (0..n).fold(BiPoly::zero(), |acc, j| &acc + &e[j].scale(&b(n, j)));
        e.push(&BiPoly::x().pow(n as u32) - &s.scale(&rat(1, 2)));
    }
    e
}

/// Set partitions of an `n`-set into exactly `k` blocks, enumerated by
/// restricted growth strings.
pub fn count_partitions(n: usize, k: usize) -> u64 {
    fn go(i: usize, n: usize, k: usize, blocks: usize) -> u64 {
        if i == n {
            return u64::from(blocks == k);
        }
        (0..=blocks.min(k.saturating_sub(1)))
            .map(|b| go(i + 1, n, k, blocks.max(b + 1)))
            .sum()
    }
    if n == 0 {
        return u64::from(k == 0);
    }
    go(0, n, k, 0)
}
