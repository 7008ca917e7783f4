//! Matrix-counting coefficients.
//!
//! For a sequence of sources `ᾱ = (α_1, …, α_r)` and a target τ, `s^τ_ᾱ(u)` counts
//! non-negative integer matrices with `r` rows and `ℓ(τ|_u)` columns whose row
//! `i` is a rearrangement of `α_i|_u` padded with zeros and whose column sums
//! are `τ|_u`. `𝒮^τ_ᾱ` is the product over all degrees `u`, and it is the
//! coefficient of `M_τ` in `Π M_{α_i}`. The basis coefficients **E**, **H**,
//! **ES**, **HS** and 𝒟 are sums of `𝒮` over families of source sequences.
//!
//! Counting runs a row-by-row dynamic program whose state is the vector of
//! residual column sums; each row contributes its distinct rearrangements only.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partition::enumerate_partitions;
use crate::stack::{stack_partitions, Stack, StackPartition};

/// A source sequence `ᾱ` together with a target τ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientQuery {
    pub sources: Vec<StackPartition>,
    pub target: StackPartition,
}

impl CoefficientQuery {
    pub fn new(sources: Vec<StackPartition>, target: StackPartition) -> Self {
        CoefficientQuery { sources, target }
    }

    /// Every degree that occurs in the target or in some source, descending.
    pub fn degrees(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self
            .sources
            .iter()
            .chain(std::iter::once(&self.target))
            .flat_map(|t| t.degrees())
            .collect();
        set.into_iter().rev().collect()
    }

    pub fn weights_match(&self) -> bool {
        self.sources.iter().map(StackPartition::weight).sum::<u32>() == self.target.weight()
    }
}

/// `s^τ_ᾱ(u)`.
pub fn s_coeff(query: &CoefficientQuery, u: u32) -> BigUint {
    let rows: Vec<Vec<u32>> = query
        .sources
        .iter()
        .map(|a| a.restrict(u).parts().to_vec())
        .collect();
    count_matrices(&rows, query.target.restrict(u).parts())
}

/// `𝒮^τ_ᾱ = Π_u s^τ_ᾱ(u)`.
pub fn structure_coeff(query: &CoefficientQuery) -> BigUint {
    if !query.weights_match() {
        return BigUint::zero();
    }
    let mut total = BigUint::one();
    for u in query.degrees() {
        let factor = s_coeff(query, u);
        if factor.is_zero() {
            return factor;
        }
        total *= factor;
    }
    total
}

/// Number of matrices whose rows rearrange `rows` (zero padded) and whose
/// column sums are exactly `cols`, in that order.
pub(crate) fn count_matrices(rows: &[Vec<u32>], cols: &[u32]) -> BigUint {
    let width = cols.len();
    if rows.iter().any(|r| r.len() > width) {
        return BigUint::zero();
    }
    let row_total: u64 = rows.iter().flatten().map(|&x| x as u64).sum();
    let col_total: u64 = cols.iter().map(|&x| x as u64).sum();
    if row_total != col_total {
        return BigUint::zero();
    }
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
    states.insert(cols.to_vec(), BigUint::one());
    // Long rows constrain the most, so place them first.
    let mut order: Vec<&Vec<u32>> = rows.iter().filter(|r| !r.is_empty()).collect();
    order.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.cmp(a)));
    for row in order {
        let mut values: BTreeMap<u32, usize> = BTreeMap::new();
        for &v in row {
            *values.entry(v).or_insert(0) += 1;
        }
        *values.entry(0).or_insert(0) += width - row.len();
        let mut values: Vec<(u32, usize)> = values.into_iter().filter(|&(_, c)| c > 0).collect();
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (mut residual, count) in states {
            place_row(&mut values, &mut residual, 0, &mut |res| {
                *next.entry(res.to_vec()).or_insert_with(BigUint::zero) += &count;
            });
        }
        if next.is_empty() {
            return BigUint::zero();
        }
        states = next;
    }
    states
        .get(&vec![0; width])
        .cloned()
        .unwrap_or_else(BigUint::zero)
}

fn place_row(
    values: &mut [(u32, usize)],
    residual: &mut [u32],
    col: usize,
    emit: &mut dyn FnMut(&[u32]),
) {
    if col == residual.len() {
        emit(residual);
        return;
    }
    for i in 0..values.len() {
        let (v, c) = values[i];
        if c == 0 || v > residual[col] {
            continue;
        }
        values[i].1 -= 1;
        residual[col] -= v;
        place_row(values, residual, col + 1, emit);
        residual[col] += v;
        values[i].1 += 1;
    }
}

/// All stack partitions `τ` with `𝒮^τ_ᾱ > 0`, paired with `𝒮^τ_ᾱ`, in global
/// order. The support is generated degree by degree by merging rows into
/// columns; every coefficient then comes from [`count_matrices`].
pub fn structure_constants(sources: &[StackPartition]) -> Vec<(StackPartition, BigUint)> {
    let degrees: BTreeSet<u32> = sources.iter().flat_map(|s| s.degrees()).collect();
    let mut combined: Vec<(Vec<Stack>, BigUint)> = vec![(Vec::new(), BigUint::one())];
    for u in degrees {
        let rows: Vec<Vec<u32>> = sources
            .iter()
            .map(|a| a.restrict(u).parts().to_vec())
            .filter(|r| !r.is_empty())
            .collect();
        let mut per_degree = Vec::new();
        for columns in column_candidates(&rows) {
            let count = count_matrices(&rows, &columns);
            if !count.is_zero() {
                per_degree.push((columns, count));
            }
        }
        let mut next = Vec::with_capacity(combined.len() * per_degree.len());
        for (stacks, count) in &combined {
            for (columns, c) in &per_degree {
                let mut s = stacks.clone();
                s.extend(columns.iter().map(|&m| Stack::raw(u, m)));
                next.push((s, count * c));
            }
        }
        combined = next;
    }
    let mut out: Vec<(StackPartition, BigUint)> = combined
        .into_iter()
        .map(|(s, c)| (StackPartition::new(s), c))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Column-sum partitions reachable by distributing each row's parts over
/// distinct columns.
fn column_candidates(rows: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut current: BTreeSet<Vec<u32>> = BTreeSet::new();
    current.insert(Vec::new());
    for row in rows {
        let mut next = BTreeSet::new();
        for cols in &current {
            let mut used = vec![false; cols.len()];
            let mut work = cols.clone();
            merge_parts(row, 0, &mut work, &mut used, &mut next);
        }
        current = next;
    }
    current
}

fn merge_parts(
    parts: &[u32],
    i: usize,
    cols: &mut Vec<u32>,
    used: &mut Vec<bool>,
    out: &mut BTreeSet<Vec<u32>>,
) {
    if i == parts.len() {
        let mut sorted = cols.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(sorted);
        return;
    }
    let existing = used.len();
    for c in 0..existing {
        if used[c] {
            continue;
        }
        used[c] = true;
        cols[c] += parts[i];
        merge_parts(parts, i + 1, cols, used, out);
        cols[c] -= parts[i];
        used[c] = false;
    }
    cols.push(parts[i]);
    used.push(true);
    merge_parts(parts, i + 1, cols, used, out);
    used.pop();
    cols.pop();
}

/// Which family each `ν_i` is drawn from when summing over source sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    /// `ν_i ⊢ d_i`, an ordinary partition.
    Ordinary,
    /// `ν_i ⊩ d_i`, a stack partition.
    Stack,
}

/// One `ν = (ν_1^{m_1}, …, ν_s^{m_s})`: `parts` are already scaled by the
/// stack multiplicities, `sign` is `Π sgn(ν_i)` taken before scaling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionSequence {
    pub parts: Vec<StackPartition>,
    pub sign: i32,
}

fn family_members(family: SequenceFamily, d: u32) -> Vec<StackPartition> {
    match family {
        SequenceFamily::Ordinary => enumerate_partitions(d)
            .iter()
            .map(StackPartition::from_partition)
            .collect(),
        SequenceFamily::Stack => stack_partitions(d).to_vec(),
    }
}

/// A scaled partition for one stack: its sign and its weight per degree.
type Choice = (StackPartition, i32, BTreeMap<u32, u32>);

/// All sequences of partitions of τ. With `target`, sequences that cannot
/// reach the target's per-degree weights are pruned.
pub fn partition_sequences(
    tau: &StackPartition,
    family: SequenceFamily,
    target: Option<&StackPartition>,
) -> Vec<PartitionSequence> {
    let budget: Option<BTreeMap<u32, u32>> = target.map(degree_weights);
    let choices: Vec<Vec<Choice>> = tau
        .stacks()
        .iter()
        .map(|stack| {
            family_members(family, stack.degree())
                .into_iter()
                .map(|nu| {
                    let sign = nu.sign();
                    let scaled = nu.scaled(stack.multiplicity());
                    let weights = degree_weights(&scaled);
                    (scaled, sign, weights)
                })
                .filter(|(_, _, w)| match &budget {
                    Some(b) => w.iter().all(|(u, x)| b.get(u).is_some_and(|cap| x <= cap)),
                    None => true,
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(choices.len());
    let mut used = BTreeMap::new();
    extend_sequences(
        &choices,
        0,
        &mut parts,
        1,
        &mut used,
        budget.as_ref(),
        &mut out,
    );
    out
}

fn extend_sequences(
    choices: &[Vec<Choice>],
    i: usize,
    parts: &mut Vec<StackPartition>,
    sign: i32,
    used: &mut BTreeMap<u32, u32>,
    budget: Option<&BTreeMap<u32, u32>>,
    out: &mut Vec<PartitionSequence>,
) {
    if i == choices.len() {
        if budget.is_none_or(|b| b == used) {
            out.push(PartitionSequence {
                parts: parts.clone(),
                sign,
            });
        }
        return;
    }
    for (nu, s, weights) in &choices[i] {
        if let Some(b) = budget {
            if weights
                .iter()
                .any(|(u, x)| used.get(u).copied().unwrap_or(0) + x > b[u])
            {
                continue;
            }
        }
        for (&u, &x) in weights {
            *used.entry(u).or_insert(0) += x;
        }
        parts.push(nu.clone());
        extend_sequences(choices, i + 1, parts, sign * s, used, budget, out);
        parts.pop();
        for (&u, &x) in weights {
            let entry = used.get_mut(&u).unwrap();
            *entry -= x;
            if *entry == 0 {
                used.remove(&u);
            }
        }
    }
}

fn degree_weights(tau: &StackPartition) -> BTreeMap<u32, u32> {
    let mut out = BTreeMap::new();
    for s in tau.stacks() {
        *out.entry(s.degree()).or_insert(0) += s.weight();
    }
    out
}

/// `𝒟_{τ,α} = Σ_{k|τ} (Π k_i) 𝒮^α_{D(τ,k)}`, the coefficient of `M_α` in `P_τ`.
pub fn divisor_coeff(tau: &StackPartition, alpha: &StackPartition) -> BigUint {
    if tau.weight() != alpha.weight() {
        return BigUint::zero();
    }
    tau.stack_divisors()
        .iter()
        .map(|k| {
            let q = CoefficientQuery::new(k.apply(tau), alpha.clone());
            k.product() * structure_coeff(&q)
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EhKind {
    /// **E**: ordinary-partition sequences, coefficient of `M_α` in `E⁺_τ`.
    EPlus,
    /// **H**: stack-partition sequences, coefficient of `M_α` in `H_τ`.
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignedKind {
    /// **ES**: signed ordinary-partition sequences, coefficient in `E_τ`.
    Es,
    /// **HS**: signed stack-partition sequences, coefficient in `H⁺_τ`.
    Hs,
}

/// **E**^τ_α or **H**^τ_α.
pub fn eh_coeff(tau: &StackPartition, alpha: &StackPartition, kind: EhKind) -> BigUint {
    if tau.weight() != alpha.weight() {
        return BigUint::zero();
    }
    let family = match kind {
        EhKind::EPlus => SequenceFamily::Ordinary,
        EhKind::H => SequenceFamily::Stack,
    };
    partition_sequences(tau, family, Some(alpha))
        .into_iter()
        .map(|nu| structure_coeff(&CoefficientQuery::new(nu.parts, alpha.clone())))
        .sum()
}

/// **ES**^τ_α or **HS**^τ_α = `Σ_ν sgn_τ(ν) 𝒮^α_ν`.
pub fn signed_coeff(tau: &StackPartition, alpha: &StackPartition, kind: SignedKind) -> BigInt {
    if tau.weight() != alpha.weight() {
        return BigInt::zero();
    }
    let family = match kind {
        SignedKind::Es => SequenceFamily::Ordinary,
        SignedKind::Hs => SequenceFamily::Stack,
    };
    partition_sequences(tau, family, Some(alpha))
        .into_iter()
        .map(|nu| {
            let s = BigInt::from(structure_coeff(&CoefficientQuery::new(
                nu.parts,
                alpha.clone(),
            )));
            if nu.sign < 0 {
                -s
            } else {
                s
            }
        })
        .sum()
}
