//! Exhaustive matrix enumeration, kept independent of the counting DP in
//! [`crate::coeff`] so the two can be checked against each other.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::{expansion_sources, BasisTag};
use crate::coeff::CoefficientQuery;
use crate::stack::{stack_partitions, StackPartition};

/// `s^τ_ᾱ(u)` by listing every row rearrangement and every combination of rows.
pub fn brute_force_s(query: &CoefficientQuery, u: u32) -> BigUint {
    let cols: Vec<u32> = query.target.restrict(u).parts().to_vec();
    let width = cols.len();
    let mut row_options: Vec<Vec<Vec<u32>>> = Vec::new();
    for source in &query.sources {
        let mut row = source.restrict(u).parts().to_vec();
        if row.len() > width {
            return BigUint::zero();
        }
        row.resize(width, 0);
        let distinct: BTreeSet<Vec<u32>> = row.iter().copied().permutations(width).collect();
        row_options.push(distinct.into_iter().collect());
    }
    if row_options.is_empty() {
        return if cols.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let mut count = 0u64;
    for matrix in row_options.iter().multi_cartesian_product() {
        let sums_match = (0..width).all(|j| matrix.iter().map(|r| r[j]).sum::<u32>() == cols[j]);
        if sums_match {
            count += 1;
        }
    }
    BigUint::from(count)
}

/// `𝒮^τ_ᾱ` as the product of [`brute_force_s`] over every degree in play.
pub fn brute_force_structure(query: &CoefficientQuery) -> BigUint {
    let mut degrees: BTreeSet<u32> = query.target.degrees().into_iter().collect();
    for s in &query.sources {
        degrees.extend(s.degrees());
    }
    degrees
        .into_iter()
        .map(|u| brute_force_s(query, u))
        .product()
}

/// Number of matrix cells the brute-force enumeration ranges over.
pub fn matrix_cells(query: &CoefficientQuery) -> usize {
    let mut degrees: BTreeSet<u32> = query.target.degrees().into_iter().collect();
    for s in &query.sources {
        degrees.extend(s.degrees());
    }
    degrees
        .into_iter()
        .map(|u| query.sources.len() * query.target.restrict(u).len())
        .sum()
}

/// Every distinct source sequence that the M-expansions of basis elements of
/// weight `n` feed into the counting engine, paired with every target of
/// weight `n`.
pub fn expansion_queries(n: u32) -> Vec<CoefficientQuery> {
    let mut sources: BTreeSet<Vec<StackPartition>> = BTreeSet::new();
    for tag in BasisTag::ALL {
        for tau in stack_partitions(n).iter() {
            for (seq, _) in expansion_sources(tag, tau) {
                sources.insert(seq);
            }
        }
    }
    let targets = stack_partitions(n);
    sources
        .into_iter()
        .flat_map(|seq| {
            targets
                .iter()
                .map(move |t| CoefficientQuery::new(seq.clone(), t.clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{s_coeff, structure_coeff};

    fn sp(s: &str) -> StackPartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let q = CoefficientQuery::new(
            vec![sp("2 2 1^2 1"), sp("2 1"), sp("3^3 1")],
            sp("3^3 2 2 2 1^2 1^2 1"),
        );
        assert_eq!(brute_force_s(&q, 1), BigUint::from(6u32));
        assert_eq!(brute_force_structure(&q), BigUint::from(18u32));
        assert_eq!(matrix_cells(&q), 3 * 3 + 3 * 3 + 3);
    }

    #[test]
    fn agrees_with_counting_in_low_weight() {
        for n in 0..=4 {
            for q in expansion_queries(n) {
                assert_eq!(structure_coeff(&q), brute_force_structure(&q), "{:?}", q);
                for u in 1..=n {
                    assert_eq!(s_coeff(&q, u), brute_force_s(&q, u));
                }
            }
        }
    }
}
