//! Integer sequences built from partitions and stack partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;
use crate::stack::stack_partitions;

/// Published values of [`stacked_tabular_sum`] for `n = 1..=20`.
pub const STACKED_TABULAR_VALUES: [u64; 20] = [
    1, 5, 13, 37, 86, 227, 540, 1357, 3316, 8200, 20131, 49675, 122162, 300942, 740798, 1824205,
    4491095, 11058338, 27226621, 67037152,
];

fn integral(total: BigRational, what: &str, n: u32) -> Result<BigUint> {
    if !total.is_integer() {
        return Err(Error::Internal(format!(
            "{what}({n}) = {total} is not an integer"
        )));
    }
    total
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Internal(format!("{what}({n}) is negative")))
}

/// `Σ_{λ ⊢ n} (n/ℓ(λ)) (ℓ(λ); m_1(λ), m_2(λ), …)`, which equals `2^n − 1`.
pub fn classical_tabular_sum(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the tabular sum starts at n = 1".into(),
        ));
    }
    let total: BigRational = enumerate_partitions(n)
        .iter()
        .map(|l| {
            BigRational::new(
                BigInt::from(n) * BigInt::from(l.rearrangements()),
                l.len().into(),
            )
        })
        .sum();
    integral(total, "classical_tabular_sum", n)
}

/// `Σ_{τ ⊩ n} (n/ℓ(τ)) (ℓ(τ); stack counts)`.
pub fn stacked_tabular_sum(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the tabular sum starts at n = 1".into(),
        ));
    }
    let total: BigRational = stack_partitions(n)
        .iter()
        .map(|t| {
            BigRational::new(
                BigInt::from(n) * BigInt::from(t.rearrangements()),
                t.len().into(),
            )
        })
        .sum();
    integral(total, "stacked_tabular_sum", n)
}

/// Number of stack partitions of `n`, by enumeration.
pub fn stack_partition_count(n: u32) -> BigUint {
    BigUint::from(stack_partitions(n).len())
}

/// Number of stack partitions of `n` from `Π_{k ≥ 1} (1 − x^k)^{−σ_0(k)}`, since
/// the stacks of weight `k` are indexed by the divisors of `k`.
pub fn stack_partition_count_euler(n: u32) -> BigUint {
    let kinds: Vec<BigUint> = (0..=n)
        .map(|k| {
            if k == 0 {
                BigUint::zero()
            } else {
                BigUint::from(crate::arith::divisors(k).len())
            }
        })
        .collect();
    multiset_counts(&kinds, n)[n as usize].clone()
}

/// Coefficients up to `x^n` of `Π_k (1 − x^k)^{−kinds[k]}`: the number of
/// multisets of items when `kinds[k]` distinct items have size `k`.
fn multiset_counts(kinds: &[BigUint], n: u32) -> Vec<BigUint> {
    let n = n as usize;
    let mut series = vec![BigUint::zero(); n + 1];
    series[0] = BigUint::one();
    for (k, c) in kinds.iter().enumerate().skip(1) {
        if c.is_zero() || k > n {
            continue;
        }
        // (1 − x^k)^{−c} = Σ_j C(c + j − 1, j) x^{kj}
        let weights: Vec<BigUint> = (0..=n / k)
            .map(|j| {
                if j == 0 {
                    BigUint::one()
                } else {
                    binomial(c + BigUint::from(j) - 1u32, BigUint::from(j))
                }
            })
            .collect();
        let mut next = vec![BigUint::zero(); n + 1];
        for (i, a) in series.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, w) in weights.iter().enumerate() {
                let at = i + k * j;
                if at > n {
                    break;
                }
                next[at] += a * w;
            }
        }
        series = next;
    }
    series
}

/// Number of ordered `d`-tuples of positive integers with product `k`, for `k ≤ n`.
fn ordered_factorizations(d: u32, n: u32) -> Vec<BigUint> {
    let n = n as usize;
    // The 0-tuple has product 1.
    let mut counts = vec![BigUint::zero(); n + 1];
    if n >= 1 {
        counts[1] = BigUint::one();
    }
    for _ in 0..d {
        let mut next = vec![BigUint::zero(); n + 1];
        for (a, c) in counts.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let mut b = 1;
            while a * b <= n {
                next[a * b] += c;
                b += 1;
            }
        }
        counts = next;
    }
    counts
}

/// Multisets of ordered `d`-tuples of positive integers whose tuple products
/// sum to `n`.
pub fn psp_count(d: u32, n: u32) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "product-sum order must be positive".into(),
        ));
    }
    Ok(multiset_counts(&ordered_factorizations(d, n), n)[n as usize].clone())
}

/// The sequences exposed as tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceName {
    StackedTabular,
    ClassicalTabular,
    StackCount,
    /// Product-sum partitions of the given order.
    Psp(u32),
}

impl SequenceName {
    pub fn label(&self) -> String {
        match self {
            SequenceName::StackedTabular => "stacked-tabular".into(),
            SequenceName::ClassicalTabular => "classical-tabular".into(),
            SequenceName::StackCount => "stack-count".into(),
            SequenceName::Psp(d) => format!("psp-{d}"),
        }
    }

    /// First index of the table.
    pub fn start(&self) -> u32 {
        match self {
            SequenceName::StackedTabular | SequenceName::ClassicalTabular => 1,
            SequenceName::StackCount | SequenceName::Psp(_) => 0,
        }
    }

    pub fn value(&self, n: u32) -> Result<BigUint> {
        match *self {
            SequenceName::StackedTabular => stacked_tabular_sum(n),
            SequenceName::ClassicalTabular => classical_tabular_sum(n),
            SequenceName::StackCount => Ok(stack_partition_count(n)),
            SequenceName::Psp(d) => psp_count(d, n),
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    /// `psp` alone means order 2; `psp-3` picks order 3.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        match key.as_str() {
            "stacked-tabular" => Ok(SequenceName::StackedTabular),
            "classical-tabular" => Ok(SequenceName::ClassicalTabular),
            "stack-count" => Ok(SequenceName::StackCount),
            "psp" => Ok(SequenceName::Psp(2)),
            _ => key
                .strip_prefix("psp-")
                .and_then(|d| d.parse().ok())
                .filter(|&d: &u32| d > 0)
                .map(SequenceName::Psp)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence `{s}`"))),
        }
    }
}

/// Values of one sequence on a contiguous range of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceResult {
    pub name: SequenceName,
    pub values: Vec<(u32, BigUint)>,
}

/// The table of `name` from its first index up to `n_max`.
pub fn sequence_table(name: SequenceName, n_max: u32) -> Result<SequenceResult> {
    let values = (name.start()..=n_max)
        .map(|n| name.value(n).map(|v| (n, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceResult { name, values })
}

/// Positions where `values` disagree with [`STACKED_TABULAR_VALUES`], as
/// `(n, computed, published)`. Indices beyond the published range are not
/// compared.
pub fn stacked_tabular_mismatches(values: &[(u32, BigUint)]) -> Vec<(u32, BigUint, u64)> {
    values
        .iter()
        .filter_map(|(n, v)| {
            let published = *STACKED_TABULAR_VALUES.get((*n as usize).checked_sub(1)?)?;
            (*v != BigUint::from(published)).then(|| (*n, v.clone(), published))
        })
        .collect()
}
