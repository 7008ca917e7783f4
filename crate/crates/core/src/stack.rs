//! Stacks, stack partitions and the combinatorial statistics attached to them.
//!
//! A stack `d^m` has degree `d`, multiplicity `m` and weight `d·m`. A stack
//! partition of `n` is a multiset of stacks of total weight `n`, stored in
//! canonical order: degree descending, then multiplicity descending.
//!
//! Text grammar: whitespace separated items, each `d` (multiplicity one) or
//! `d^m`, for example `3^3 2 2 1^2 1`. Parsing accepts any item order. The
//! empty stack partition renders as `()`; the empty string also parses to it.
//! JSON form: an array of `[d, m]` pairs.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{divisors, is_power_of_two, multinomial};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Stack {
    degree: u32,
    multiplicity: u32,
}

impl Stack {
    pub fn new(degree: u32, multiplicity: u32) -> Result<Self> {
        if degree == 0 || multiplicity == 0 {
            return Err(Error::InvalidArgument(format!(
                "stack {degree}^{multiplicity} needs positive degree and multiplicity"
            )));
        }
        Ok(Stack {
            degree,
            multiplicity,
        })
    }

    pub(crate) fn raw(degree: u32, multiplicity: u32) -> Self {
        debug_assert!(degree > 0 && multiplicity > 0);
        Stack {
            degree,
            multiplicity,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn weight(&self) -> u32 {
        self.degree * self.multiplicity
    }
}

impl fmt::Display for Stack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity == 1 {
            write!(f, "{}", self.degree)
        } else {
            write!(f, "{}^{}", self.degree, self.multiplicity)
        }
    }
}

/// A stack partition in canonical order, with cached weight and area.
///
/// `Ord` is the global enumeration order used for every listing, matrix index
/// and serialized term order:
///
/// 1. weight ascending;
/// 2. largest multiplicity ascending (ordinary partitions come first);
/// 3. the unstacked partition (each `d^m` replaced by `m` copies of `d`),
///    reverse-lexicographically;
/// 4. more stacks first;
/// 5. the flattened `(d, m)` sequence, reverse-lexicographically.
///
/// For `n = 4` this gives `4, 3 1, 2 2, 2 1 1, 1 1 1 1, 2^2, 2 1^2, 1^2 1 1,
/// 1^2 1^2, 1^3 1, 1^4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct StackPartition {
    stacks: Vec<Stack>,
    weight: u32,
    area: u32,
}

/// `(ℓ(τ), area(τ), sgn(τ))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub length: usize,
    pub area: u32,
    pub sign: i32,
}

impl StackPartition {
    pub fn new(mut stacks: Vec<Stack>) -> Self {
        stacks.sort_unstable_by(|a, b| b.cmp(a));
        let weight = stacks.iter().map(Stack::weight).sum();
        let area = stacks.iter().map(Stack::multiplicity).sum();
        StackPartition {
            stacks,
            weight,
            area,
        }
    }

    pub fn empty() -> Self {
        StackPartition::default()
    }

    /// Builds from `(degree, multiplicity)` pairs in any order.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        let stacks = pairs
            .iter()
            .map(|&(d, m)| Stack::new(d, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(StackPartition::new(stacks))
    }

    /// The multiplicity-one stack partition with the same parts as `lambda`.
    pub fn from_partition(lambda: &Partition) -> Self {
        StackPartition::new(lambda.parts().iter().map(|&d| Stack::raw(d, 1)).collect())
    }

    /// A single stack `d^m` as a stack partition.
    pub fn single(degree: u32, multiplicity: u32) -> Result<Self> {
        Ok(StackPartition::new(vec![Stack::new(degree, multiplicity)?]))
    }

    pub fn stacks(&self) -> &[Stack] {
        &self.stacks
    }

    pub fn len(&self) -> usize {
        self.stacks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stacks.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn area(&self) -> u32 {
        self.area
    }

    /// `(-1)^area`.
    pub fn sign(&self) -> i32 {
        if self.area.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn stats(&self) -> Stats {
        Stats {
            length: self.len(),
            area: self.area,
            sign: self.sign(),
        }
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.stacks
            .iter()
            .map(Stack::multiplicity)
            .max()
            .unwrap_or(0)
    }

    pub fn is_ordinary(&self) -> bool {
        self.stacks.iter().all(|s| s.multiplicity == 1)
    }

    /// The distinct degrees occurring, descending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.stacks.iter().map(Stack::degree).collect();
        out.dedup();
        out
    }

    /// `τ|_d`: multiplicities of the degree-`d` stacks, as a partition.
    pub fn restrict(&self, degree: u32) -> Partition {
        // Canonical order already sorts these descending.
        Partition::new(
            self.stacks
                .iter()
                .filter(|s| s.degree == degree)
                .map(Stack::multiplicity)
                .collect(),
        )
    }

    /// Multiplies every multiplicity by `r`; this realizes `x ↦ x^r`.
    pub fn scale_multiplicities(&self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument(
                "scale factor must be positive".into(),
            ));
        }
        Ok(self.scaled(r))
    }

    pub(crate) fn scaled(&self, r: u32) -> Self {
        StackPartition::new(
            self.stacks
                .iter()
                .map(|s| Stack::raw(s.degree, s.multiplicity * r))
                .collect(),
        )
    }

    /// Multiset union of the stacks.
    pub fn union(&self, other: &StackPartition) -> Self {
        let mut stacks = self.stacks.clone();
        stacks.extend_from_slice(&other.stacks);
        StackPartition::new(stacks)
    }

    /// `m_{i,j}(τ)`: how often each stack occurs.
    pub fn stack_counts(&self) -> BTreeMap<Stack, u64> {
        let mut out = BTreeMap::new();
        for &s in &self.stacks {
            *out.entry(s).or_insert(0) += 1;
        }
        out
    }

    /// `N_j(τ)`: the number of stacks of multiplicity `j`.
    pub fn multiplicity_count(&self, j: u32) -> usize {
        self.stacks.iter().filter(|s| s.multiplicity == j).count()
    }

    /// `κ_τ = Π_j (N_j(τ); m_{1,j}(τ), m_{2,j}(τ), …)`.
    pub fn kappa(&self) -> BigUint {
        let mut by_mult: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        for (stack, count) in self.stack_counts() {
            by_mult.entry(stack.multiplicity).or_default().push(count);
        }
        by_mult
            .into_values()
            .fold(BigUint::one(), |acc, counts| acc * multinomial(counts))
    }

    /// `(ℓ(τ); m_{i,j}(τ) over all stacks)`: distinct orderings of the stacks.
    pub fn rearrangements(&self) -> BigUint {
        multinomial(self.stack_counts().into_values())
    }

    /// Every stack divisor `k | τ`, in lexicographic order of the tuples.
    pub fn stack_divisors(&self) -> Vec<StackDivisor> {
        let mut out = vec![Vec::with_capacity(self.len())];
        for stack in &self.stacks {
            let ds = divisors(stack.degree);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    ds.iter().map(move |&k| {
                        let mut next = prefix.clone();
                        next.push(k);
                        next
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|entries| StackDivisor { entries })
            .collect()
    }

    /// Iterates the unstacked partition: each `d^m` contributes `m` copies of `d`.
    fn unstacked(&self) -> impl Iterator<Item = u32> + '_ {
        self.stacks
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.degree, s.multiplicity as usize))
    }

    pub fn to_pairs(&self) -> Vec<(u32, u32)> {
        self.stacks
            .iter()
            .map(|s| (s.degree, s.multiplicity))
            .collect()
    }
}

impl Ord for StackPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.max_multiplicity().cmp(&other.max_multiplicity()))
            .then_with(|| other.unstacked().cmp(self.unstacked()))
            .then_with(|| other.len().cmp(&self.len()))
            .then_with(|| other.stacks.cmp(&self.stacks))
    }
}

impl PartialOrd for StackPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StackPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.stacks.is_empty() {
            return f.write_str("()");
        }
        for (i, s) in self.stacks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for StackPartition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "()" {
            return Ok(StackPartition::empty());
        }
        let mut stacks = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            stacks.push(parse_item(
                &text[start..end],
                text[..start].chars().count() + 1,
            )?);
        }
        Ok(StackPartition::new(stacks))
    }
}

fn parse_item(item: &str, column: usize) -> Result<Stack> {
    let err = |offset: usize, message: String| Error::Parse {
        column: column + offset,
        message,
    };
    let (deg_text, mult_text, caret_at) = match item.find('^') {
        Some(pos) => (&item[..pos], Some(&item[pos + 1..]), pos),
        None => (item, None, item.len()),
    };
    let parse_positive = |s: &str, offset: usize, what: &str| -> Result<u32> {
        if s.is_empty() {
            return Err(err(offset, format!("missing {what} in `{item}`")));
        }
        if let Some(bad) = s.chars().position(|c| !c.is_ascii_digit()) {
            return Err(err(
                offset + bad,
                format!(
                    "unexpected character `{}` in `{item}`",
                    s.chars().nth(bad).unwrap()
                ),
            ));
        }
        match s.parse::<u32>() {
            Ok(0) => Err(err(offset, format!("{what} must be positive in `{item}`"))),
            Ok(v) => Ok(v),
            Err(_) => Err(err(offset, format!("{what} too large in `{item}`"))),
        }
    };
    let degree = parse_positive(deg_text, 0, "degree")?;
    let multiplicity = match mult_text {
        Some(m) => parse_positive(m, caret_at + 1, "multiplicity")?,
        None => 1,
    };
    Ok(Stack::raw(degree, multiplicity))
}

impl Serialize for StackPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StackPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(u32, u32)>::deserialize(deserializer)?;
        StackPartition::from_pairs(&pairs).map_err(serde::de::Error::custom)
    }
}

/// A tuple `k` with `k_i | d_i` for every stack `d_i^{m_i}` of a fixed τ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StackDivisor {
    entries: Vec<u32>,
}

impl StackDivisor {
    pub fn new(tau: &StackPartition, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != tau.len()
            || tau
                .stacks()
                .iter()
                .zip(&entries)
                .any(|(s, &k)| k == 0 || s.degree % k != 0)
        {
            return Err(Error::InvalidArgument(format!(
                "{entries:?} is not a stack divisor of {tau}"
            )));
        }
        Ok(StackDivisor { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `Π k_i`.
    pub fn product(&self) -> BigUint {
        self.entries.iter().fold(BigUint::one(), |acc, &k| acc * k)
    }

    /// `D(τ,k)`: the single-stack partitions `(k_i^{d_i m_i / k_i})`.
    pub fn apply(&self, tau: &StackPartition) -> Vec<StackPartition> {
        tau.stacks()
            .iter()
            .zip(&self.entries)
            .map(|(s, &k)| StackPartition::new(vec![Stack::raw(k, s.weight() / k)]))
            .collect()
    }
}

fn stack_partition_cache() -> &'static RwLock<HashMap<u32, Arc<[StackPartition]>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<[StackPartition]>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared, cached listing of the stack partitions of `n` in global order.
pub fn stack_partitions(n: u32) -> Arc<[StackPartition]> {
    if let Some(hit) = stack_partition_cache().read().unwrap().get(&n) {
        return hit.clone();
    }
    let mut all = Vec::new();
    let mut current = Vec::new();
    fill_stack_partitions(n, None, &mut current, &mut all);
    let mut all: Vec<StackPartition> = all.into_iter().map(StackPartition::new).collect();
    all.sort();
    let all: Arc<[StackPartition]> = all.into();
    stack_partition_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert(all)
        .clone()
}

/// Every τ ⊩ n exactly once, in the global enumeration order.
pub fn enumerate_stack_partitions(n: u32) -> Vec<StackPartition> {
    stack_partitions(n).to_vec()
}

fn fill_stack_partitions(
    remaining: u32,
    max: Option<Stack>,
    current: &mut Vec<Stack>,
    out: &mut Vec<Vec<Stack>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for degree in (1..=remaining).rev() {
        for multiplicity in (1..=remaining / degree).rev() {
            let stack = Stack::raw(degree, multiplicity);
            if max.is_some_and(|m| stack > m) {
                continue;
            }
            current.push(stack);
            fill_stack_partitions(remaining - stack.weight(), Some(stack), current, out);
            current.pop();
        }
    }
}

/// Sum domains for the multiplicity-restricted expansions between bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultiplicityPattern {
    /// Multiplicities in {1, 2}, at most one stack of multiplicity 2.
    AtMostOneMult2,
    /// Multiplicities in {1, 2}, at most one stack of multiplicity 1.
    AtMostOneMult1Rest2,
    /// Every multiplicity a power of two, no two stacks sharing one.
    DistinctPowersOf2,
    /// Every multiplicity a power of two.
    AllPowersOf2,
    /// All stacks share one multiplicity, and it is a power of two.
    UniformPowerOf2,
}

impl MultiplicityPattern {
    pub const ALL: [MultiplicityPattern; 5] = [
        MultiplicityPattern::AtMostOneMult2,
        MultiplicityPattern::AtMostOneMult1Rest2,
        MultiplicityPattern::DistinctPowersOf2,
        MultiplicityPattern::AllPowersOf2,
        MultiplicityPattern::UniformPowerOf2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MultiplicityPattern::AtMostOneMult2 => "AT_MOST_ONE_MULT2",
            MultiplicityPattern::AtMostOneMult1Rest2 => "AT_MOST_ONE_MULT1_REST2",
            MultiplicityPattern::DistinctPowersOf2 => "DISTINCT_POWERS_OF_2",
            MultiplicityPattern::AllPowersOf2 => "ALL_POWERS_OF_2",
            MultiplicityPattern::UniformPowerOf2 => "UNIFORM_POWER_OF_2",
        }
    }

    pub fn matches(&self, tau: &StackPartition) -> bool {
        let mults: Vec<u32> = tau.stacks().iter().map(Stack::multiplicity).collect();
        let one_or_two = mults.iter().all(|&m| m == 1 || m == 2);
        match self {
            MultiplicityPattern::AtMostOneMult2 => {
                one_or_two && mults.iter().filter(|&&m| m == 2).count() <= 1
            }
            MultiplicityPattern::AtMostOneMult1Rest2 => {
                one_or_two && mults.iter().filter(|&&m| m == 1).count() <= 1
            }
            MultiplicityPattern::DistinctPowersOf2 => {
                let mut sorted = mults.clone();
                sorted.sort_unstable();
                sorted.dedup();
                sorted.len() == mults.len() && mults.iter().all(|&m| is_power_of_two(m))
            }
            MultiplicityPattern::AllPowersOf2 => mults.iter().all(|&m| is_power_of_two(m)),
            MultiplicityPattern::UniformPowerOf2 => match mults.first() {
                None => true,
                Some(&first) => is_power_of_two(first) && mults.iter().all(|&m| m == first),
            },
        }
    }
}

impl fmt::Display for MultiplicityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MultiplicityPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        MultiplicityPattern::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| Error::UnknownPattern(s.to_string()))
    }
}

/// The stack partitions of `n` whose multiplicities fit `pattern`, in global order.
pub fn multiplicity_pattern(n: u32, pattern: MultiplicityPattern) -> Vec<StackPartition> {
    stack_partitions(n)
        .iter()
        .filter(|tau| pattern.matches(tau))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn sp(text: &str) -> StackPartition {
        text.parse().unwrap()
    }

    fn rendered(list: &[StackPartition]) -> Vec<String> {
        list.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn stack_partitions_of_four_in_listed_order() {
        assert_eq!(
            rendered(&enumerate_stack_partitions(4)),
            [
                "4", "3 1", "2 2", "2 1 1", "1 1 1 1", "2^2", "2 1^2", "1^2 1 1", "1^2 1^2",
                "1^3 1", "1^4"
            ]
        );
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_stack_partitions(0), vec![StackPartition::empty()]);
        assert_eq!(
            rendered(&enumerate_stack_partitions(3)),
            ["3", "2 1", "1 1 1", "1^2 1", "1^3"]
        );
        assert_eq!(
            rendered(&enumerate_stack_partitions(2)),
            ["2", "1 1", "1^2"]
        );
    }

    #[test]
    fn scaling_four_by_three() {
        let scaled: Vec<String> = enumerate_stack_partitions(4)
            .iter()
            .map(|t| t.scale_multiplicities(3).unwrap().to_string())
            .collect();
        assert_eq!(
            scaled,
            [
                "4^3",
                "3^3 1^3",
                "2^3 2^3",
                "2^3 1^3 1^3",
                "1^3 1^3 1^3 1^3",
                "2^6",
                "2^3 1^6",
                "1^6 1^3 1^3",
                "1^6 1^6",
                "1^9 1^3",
                "1^12"
            ]
        );
    }

    #[test]
    fn restriction_and_stats_of_worked_example() {
        let tau = sp("3^3 3^2 3^2 2^7 2^2 2^1 1^5 1^1");
        assert_eq!(tau.restrict(3).parts(), &[3, 2, 2]);
        assert_eq!(tau.restrict(2).parts(), &[7, 2, 1]);
        assert_eq!(tau.restrict(1).parts(), &[5, 1]);
        assert!(tau.restrict(5).is_empty());
        assert_eq!(
            tau.stats(),
            Stats {
                length: 8,
                area: 23,
                sign: -1
            }
        );
        assert_eq!(
            StackPartition::empty().stats(),
            Stats {
                length: 0,
                area: 0,
                sign: 1
            }
        );
        assert_eq!(
            sp("3 1").stats(),
            Stats {
                length: 2,
                area: 2,
                sign: 1
            }
        );
    }

    #[test]
    fn scale_examples() {
        assert_eq!(sp("3 1").scale_multiplicities(3).unwrap(), sp("3^3 1^3"));
        assert_eq!(
            sp("2 1^2 1").scale_multiplicities(2).unwrap(),
            sp("2^2 1^4 1^2")
        );
        assert_eq!(
            sp("2 1^2 1").scale_multiplicities(1).unwrap(),
            sp("2 1^2 1")
        );
        assert!(sp("1").scale_multiplicities(0).is_err());
    }

    #[test]
    fn kappa_values() {
        assert_eq!(sp("2 1").kappa(), BigUint::from(2u32));
        assert_eq!(sp("2 1 1").kappa(), BigUint::from(3u32));
        assert_eq!(sp("5^3").kappa(), BigUint::one());
        // N_1 = 2 over {2,1}; N_2 = 3 over {1,1,1} gives 2 * 1.
        assert_eq!(sp("2 1 1^2 1^2 1^2").kappa(), BigUint::from(2u32));
    }

    #[test]
    fn divisors_of_worked_example() {
        let tau = sp("8 6^2 2^3 2 2");
        let k = StackDivisor::new(&tau, vec![1, 6, 2, 1, 2]).unwrap();
        let d: Vec<String> = k.apply(&tau).iter().map(|t| t.to_string()).collect();
        assert_eq!(d, ["1^8", "6^2", "2^3", "1^2", "2"]);
        assert_eq!(k.product(), BigUint::from(24u32));
        assert!(StackDivisor::new(&tau, vec![3, 6, 2, 1, 2]).is_err());
    }

    #[test]
    fn divisor_counts() {
        let one = sp("1").stack_divisors();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].apply(&sp("1")), vec![sp("1")]);
        assert_eq!(sp("4 2").stack_divisors().len(), 6);
        for n in 1..=8 {
            for tau in stack_partitions(n).iter() {
                let expected: usize = tau
                    .stacks()
                    .iter()
                    .map(|s| divisors(s.degree()).len())
                    .product();
                assert_eq!(tau.stack_divisors().len(), expected);
            }
        }
    }

    #[test]
    fn pattern_filters() {
        use MultiplicityPattern::*;
        assert_eq!(
            rendered(&multiplicity_pattern(2, DistinctPowersOf2)),
            ["2", "1^2"]
        );
        assert_eq!(
            rendered(&multiplicity_pattern(2, UniformPowerOf2)),
            ["2", "1 1", "1^2"]
        );
        for p in MultiplicityPattern::ALL {
            assert_eq!(rendered(&multiplicity_pattern(1, p)), ["1"]);
        }
        assert_eq!(
            rendered(&multiplicity_pattern(3, AtMostOneMult2)),
            ["3", "2 1", "1 1 1", "1^2 1"]
        );
        assert_eq!(
            rendered(&multiplicity_pattern(3, AtMostOneMult1Rest2)),
            ["3", "1^2 1"]
        );
        assert_eq!(
            rendered(&multiplicity_pattern(4, AllPowersOf2)),
            ["4", "3 1", "2 2", "2 1 1", "1 1 1 1", "2^2", "2 1^2", "1^2 1 1", "1^2 1^2", "1^4"]
        );
        assert!("NOT_A_PATTERN".parse::<MultiplicityPattern>().is_err());
        assert_eq!(
            "uniform-power-of-2".parse::<MultiplicityPattern>().unwrap(),
            UniformPowerOf2
        );
    }

    #[test]
    fn parse_errors_point_at_columns() {
        match "3 2^x".parse::<StackPartition>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        match "3 0".parse::<StackPartition>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!("2^".parse::<StackPartition>().is_err());
        assert!("^2".parse::<StackPartition>().is_err());
    }

    #[test]
    fn parse_recanonicalizes() {
        assert_eq!(sp("1 1^2 3 2^5").to_string(), "3 2^5 1^2 1");
        assert_eq!(sp("  "), StackPartition::empty());
        assert_eq!(sp("()").to_string(), "()");
    }

    #[test]
    fn json_form() {
        let tau = sp("3^3 2 1");
        let json = serde_json::to_string(&tau).unwrap();
        assert_eq!(json, "[[3,3],[2,1],[1,1]]");
        let back: StackPartition = serde_json::from_str("[[1,1],[3,3],[2,1]]").unwrap();
        assert_eq!(back, tau);
        assert!(serde_json::from_str::<StackPartition>("[[0,1]]").is_err());
    }

    #[test]
    fn sign_is_product_over_degrees() {
        for n in 0..=10 {
            for tau in stack_partitions(n).iter() {
                let by_degree: i32 = tau
                    .degrees()
                    .iter()
                    .map(|&d| {
                        if tau.restrict(d).weight() % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .product();
                assert_eq!(by_degree, tau.sign());
            }
        }
    }

    #[test]
    fn ordinary_partitions_embed_first() {
        for n in 0..=8 {
            let ordinary: Vec<StackPartition> = enumerate_partitions(n)
                .iter()
                .map(StackPartition::from_partition)
                .collect();
            assert_eq!(&stack_partitions(n)[..ordinary.len()], &ordinary[..]);
        }
    }
}
