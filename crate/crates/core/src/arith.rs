//! Small exact-integer helpers shared by the combinatorics and sequence code.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(Σ c)! / Π c!`.
pub fn multinomial<I>(counts: I) -> BigUint
where
    I: IntoIterator<Item = u64>,
{
    let counts: Vec<u64> = counts.into_iter().collect();
    let total: u64 = counts.iter().sum();
    let denom = counts
        .iter()
        .fold(BigUint::one(), |acc, &c| acc * factorial(c));
    factorial(total) / denom
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|&k| n.is_multiple_of(k)).collect()
}

pub fn is_power_of_two(n: u32) -> bool {
    n != 0 && n & (n - 1) == 0
}
