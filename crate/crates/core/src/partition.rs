//! Ordinary integer partitions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{factorial, multinomial};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero entries are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part value -> number of occurrences, written m_i(λ).
    pub fn multiplicities(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// `ℓ(λ)! / Π m_i(λ)!`, the number of distinct rearrangements.
    pub fn rearrangements(&self) -> BigUint {
        multinomial(self.multiplicities().into_values())
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z_value(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (part, count)| {
                acc * BigUint::from(part).pow(count as u32) * factorial(count)
            })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let joined: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", joined.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g. 4, 31, 22, 211, 1111.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: u32,
    max_part: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumerates_small_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        let four: Vec<String> = enumerate_partitions(4)
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }

    #[test]
    fn counts_match_known_partition_numbers() {
        let counts: Vec<usize> = (0..=12).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[4, 4, 2, 1, 1, 1]).z_value(), BigUint::from(384u32));
        assert_eq!(Partition::empty().z_value(), BigUint::one());
        assert_eq!(p(&[1, 1]).z_value(), BigUint::from(2u32));
    }

    #[test]
    fn z_divides_length_factorial_times_part_powers() {
        for n in 0..=10 {
            for lambda in enumerate_partitions(n) {
                let bound = factorial(lambda.len() as u64)
                    * lambda
                        .parts()
                        .iter()
                        .fold(BigUint::one(), |acc, &x| acc * x);
                assert_eq!(&bound % lambda.z_value(), BigUint::from(0u32), "{lambda}");
            }
        }
    }

    #[test]
    fn new_sorts_and_drops_zeros() {
        assert_eq!(p(&[1, 0, 3, 2]).parts(), &[3, 2, 1]);
    }
}
